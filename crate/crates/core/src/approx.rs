//! The factor-2 algorithm for bounded integer weights and the factor-(2+ε)
//! algorithm for arbitrary non-negative weights, both built on a hitting
//! set `S` of the r-nearest sets: vertices of `S` run threshold searches on
//! the whole graph, other vertices only look inside their open ball.

use rayon::prelude::*;

use crate::cycle::Cycle;
use crate::error::{GirthError, Result};
use crate::estimate::{better, Branch, GirthEstimate, Stats};
use crate::exact::exact_girth;
use crate::graph::WeightedGraph;
use crate::grid::SearchGrid;
use crate::hbd::{min_detecting_threshold_exact, min_detecting_threshold_grid_with, min_detecting_threshold_int_with, HbdWorkspace};
use crate::hitting::{build_hitting_structure, default_r, HittingStructure};
use crate::poly::poly_girth_with;
use crate::reductions::{girth_with_reduction, has_zero_weight};

type Candidate = Option<(Cycle, Branch)>;

/// Girth routine used on small graphs (open balls and the quotient graph).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SmallGirthMethod {
    /// Exact oracle, factor 1.
    Exact,
    /// Minimal detecting threshold from every vertex, factor 2.
    HbdSweep,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SmallGirth {
    pub method: SmallGirthMethod,
    /// Largest vertex count accepted.
    pub threshold: usize,
}

impl Default for SmallGirth {
    fn default() -> Self {
        SmallGirth { method: SmallGirthMethod::Exact, threshold: 4096 }
    }
}

impl SmallGirth {
    pub fn factor(&self) -> f64 {
        match self.method {
            SmallGirthMethod::Exact => 1.0,
            SmallGirthMethod::HbdSweep => 2.0,
        }
    }
}

/// Knobs shared by the approximation algorithms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Config {
    /// Nearest-set size; `None` means `floor(n^(1/3))`.
    pub r: Option<usize>,
    pub small_girth: SmallGirth,
    /// ε used on graphs already below the density threshold.
    pub sparse_eps: f64,
}

impl Default for Config {
    fn default() -> Self {
        Config { r: None, small_girth: SmallGirth::default(), sparse_eps: 2.0 }
    }
}

impl Config {
    pub fn r_for(&self, n: usize) -> usize {
        self.r.unwrap_or_else(|| default_r(n))
    }
}

/// Smallest-threshold cycle through HBD from `s`, searching `t` in
/// `[3, M n]`.
pub fn approx_short_close_cycle(g: &WeightedGraph, s: usize, max_weight: u64) -> Option<Cycle> {
    short_close_cycle(&mut HbdWorkspace::new(g.n()), g, s, max_weight, &mut Stats::default())
}

fn short_close_cycle(ws: &mut HbdWorkspace, g: &WeightedGraph, s: usize, max_weight: u64, stats: &mut Stats) -> Option<Cycle> {
    let hi = max_weight.saturating_mul(g.n() as u64);
    min_detecting_threshold_int_with(ws, g, s, 3, hi, stats).map(|(_, c)| c)
}

fn integer_max(g: &WeightedGraph) -> Result<u64> {
    g.mode().max_weight().ok_or(GirthError::ModeMismatch { expected: "integer" })
}

/// Deterministic 2-approximation for weights in `{1, ..., M}`.
pub fn subquadratic_approx(g: &WeightedGraph) -> Result<GirthEstimate> {
    subquadratic_approx_with(g, &Config::default())
}

pub fn subquadratic_approx_with(g: &WeightedGraph, cfg: &Config) -> Result<GirthEstimate> {
    let m = integer_max(g)?;
    let hs = build_hitting_structure(g, cfg.r_for(g.n()))?;
    let (best, stats) = (0..g.n())
        .into_par_iter()
        .map_init(
            || HbdWorkspace::new(g.n()),
            |ws, v| {
                let mut stats = Stats::default();
                let found = if hs.in_s[v] {
                    short_close_cycle(ws, g, v, m, &mut stats).map(|c| (c, Branch::HittingSet))
                } else {
                    ball_graph(g, &hs, v, &mut stats).and_then(|(h, map, local)| {
                        let mut local_ws = HbdWorkspace::new(h.n());
                        short_close_cycle(&mut local_ws, &h, local, m, &mut stats).map(|c| (c.relabel(g, &map), Branch::Ball))
                    })
                };
                (found, stats)
            },
        )
        .reduce(|| (None, Stats::default()), |a, b| (better(a.0, b.0), a.1 + b.1));
    Ok(GirthEstimate::from_candidate(best, 2.0, stats + hs.stats + Stats { edge_scans: g.m() as u64, ..Stats::default() }))
}

/// Subgraph induced by the open ball of `v`, its id map, and `v`'s local id.
/// `None` when the ball is too small to hold a cycle.
pub(crate) fn ball_graph(
    g: &WeightedGraph,
    hs: &HittingStructure,
    v: usize,
    stats: &mut Stats,
) -> Option<(WeightedGraph, Vec<usize>, usize)> {
    let ball = hs.ball_vertices(v);
    if ball.len() < 3 {
        return None;
    }
    let b = ball.len() as u64;
    stats.pair_probes += b * (b - 1) / 2;
    let (h, map) = g.induced_subgraph(&ball).expect("ball vertices are in range");
    if h.m() < 3 {
        return None;
    }
    let local = map.binary_search(&v).expect("v lies in its own ball");
    Some((h, map, local))
}

/// Girth of a small graph with the configured method.
pub fn small_girth(g: &WeightedGraph, sub: &SmallGirth) -> Result<GirthEstimate> {
    if g.n() > sub.threshold {
        return Err(GirthError::ThresholdExceeded { n: g.n(), threshold: sub.threshold });
    }
    Ok(small_girth_unchecked(g, sub.method))
}

pub(crate) fn small_girth_unchecked(g: &WeightedGraph, method: SmallGirthMethod) -> GirthEstimate {
    let mut est = match method {
        SmallGirthMethod::Exact => exact_girth(g),
        SmallGirthMethod::HbdSweep => {
            let mut stats = Stats::default();
            let mut ws = HbdWorkspace::new(g.n());
            let mut best: Candidate = None;
            for s in 0..g.n() {
                let found = match g.mode().max_weight() {
                    Some(m) => short_close_cycle(&mut ws, g, s, m, &mut stats),
                    None => min_detecting_threshold_exact(g, s).map(|(_, c)| c),
                };
                best = better(best, found.map(|c| (c, Branch::Sweep)));
            }
            GirthEstimate::from_candidate(best, 2.0, stats)
        }
    };
    est.stats.subroutine_calls += 1;
    est
}

/// Deterministic (2+ε)-approximation for non-negative weights. Zero-weight
/// edges are removed by contraction first.
pub fn approx_general(g: &WeightedGraph, eps: f64) -> Result<GirthEstimate> {
    approx_general_with(g, eps, &Config::default())
}

pub fn approx_general_with(g: &WeightedGraph, eps: f64, cfg: &Config) -> Result<GirthEstimate> {
    if !(eps > 0.0 && eps.is_finite()) {
        return Err(GirthError::InvalidParameter(format!("epsilon must be positive, got {eps}")));
    }
    if has_zero_weight(g) {
        girth_with_reduction(g, 2.0 + eps, |h| approx_general_positive(h, eps, cfg))
    } else {
        approx_general_positive(g, eps, cfg)
    }
}

fn approx_general_positive(g: &WeightedGraph, eps: f64, cfg: &Config) -> Result<GirthEstimate> {
    let factor = 2.0 + eps;
    let hs = build_hitting_structure(g, cfg.r_for(g.n()))?;
    let poly = poly_girth_with(g, &hs, cfg)?;
    let mut stats = poly.estimate.stats;
    let Some(bootstrap) = poly.estimate.cycle() else {
        return Ok(GirthEstimate::from_candidate(None, factor, stats));
    };
    let g_star = bootstrap.weight();
    let grid = SearchGrid::spanning(1.0 + eps / 2.0, g_star / poly.certified_factor, g_star)?;

    // The ball searches were already run while computing the bootstrap.
    let mut best: Candidate = Some((bootstrap.clone(), Branch::Bootstrap));
    for c in &poly.ball_cycles {
        best = better(best, Some((c.1.clone(), Branch::Ball)));
    }
    let (from_s, s_stats) =
        hs.s.par_iter()
            .map_init(
                || HbdWorkspace::new(g.n()),
                |ws, &s| {
                    let mut st = Stats::default();
                    let found = min_detecting_threshold_grid_with(ws, g, s, &grid, None, &mut st);
                    (found.map(|(_, c)| (c, Branch::HittingSet)), st)
                },
            )
            .reduce(|| (None, Stats::default()), |a, b| (better(a.0, b.0), a.1 + b.1));
    stats += s_stats;
    Ok(GirthEstimate::from_candidate(better(best, from_s), factor, stats))
}
