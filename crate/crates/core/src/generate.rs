//! Seeded instance generators. The same spec and seed always give the same
//! graph.

use std::collections::HashSet;

use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dense::density_threshold;
use crate::error::{GirthError, Result};
use crate::graph::{WeightMode, WeightedGraph};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Weights {
    Unit,
    /// Uniform integers in `1..=max`.
    Int {
        max: u64,
    },
    /// Uniform reals in `(0, max]`.
    Real {
        max: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GenKind {
    /// Every pair independently with probability `p`; `connected` adds a
    /// random spanning tree first.
    ErdosRenyi { p: f64, connected: bool },
    /// `rows x cols` grid; `n` is ignored.
    Grid { rows: usize, cols: usize },
    /// A unit-weight cycle of length `planted` on random vertices, a random
    /// spanning tree, and `chords` extra edges. Every non-planted edge
    /// weighs at least `planted`, so the planted cycle is the unique
    /// minimum.
    CyclePlusChords { planted: usize, chords: usize },
    /// Two halves with internal edge probability `p_in`, joined by
    /// `bridges` random edges.
    TwoCluster { p_in: f64, bridges: usize },
    /// A random connected graph with `min(n(n-1)/2, K + n)` edges, where
    /// `K` is the density threshold.
    DenseThreshold,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenSpec {
    pub kind: GenKind,
    pub n: usize,
    pub weights: Weights,
    /// Probability that an edge gets weight 0 (forces real mode).
    pub zero_fraction: f64,
}

impl GenSpec {
    pub fn new(kind: GenKind, n: usize, weights: Weights) -> Self {
        GenSpec { kind, n, weights, zero_fraction: 0.0 }
    }
}

struct Builder {
    n: usize,
    edges: Vec<(usize, usize, f64)>,
    seen: HashSet<(usize, usize)>,
}

impl Builder {
    fn new(n: usize) -> Self {
        Builder { n, edges: Vec::new(), seen: HashSet::new() }
    }

    fn has(&self, u: usize, v: usize) -> bool {
        self.seen.contains(&(u.min(v), u.max(v)))
    }

    fn add(&mut self, u: usize, v: usize, w: f64) -> bool {
        if u == v || !self.seen.insert((u.min(v), u.max(v))) {
            return false;
        }
        self.edges.push((u, v, w));
        true
    }

    fn random_tree(&mut self, rng: &mut ChaCha8Rng, weight: &mut impl FnMut(&mut ChaCha8Rng) -> f64) {
        let mut order: Vec<usize> = (0..self.n).collect();
        order.shuffle(rng);
        for i in 1..self.n {
            let j = rng.gen_range(0..i);
            let w = weight(rng);
            self.add(order[i], order[j], w);
        }
    }
}

fn check_probability(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(GirthError::InvalidParameter(format!("probability {p} outside [0, 1]")))
    }
}

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Decodes index `k` of the pairs `(u, v)`, `u < v`, in row-major order.
fn decode_pair(n: usize, mut k: usize) -> (usize, usize) {
    let mut u = 0;
    while k >= n - 1 - u {
        k -= n - 1 - u;
        u += 1;
    }
    (u, u + 1 + k)
}

pub fn generate(spec: &GenSpec, seed: u64) -> Result<WeightedGraph> {
    check_probability(spec.zero_fraction)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let zero = spec.zero_fraction;
    let base = spec.weights;
    let mut weight = move |rng: &mut ChaCha8Rng| -> f64 {
        if zero > 0.0 && rng.gen_bool(zero) {
            return 0.0;
        }
        match base {
            Weights::Unit => 1.0,
            Weights::Int { max } => rng.gen_range(1..=max) as f64,
            Weights::Real { max } => max * (1.0 - rng.gen::<f64>()),
        }
    };
    if let Weights::Int { max: 0 } = base {
        return Err(GirthError::InvalidParameter("integer weight bound must be positive".into()));
    }
    if let Weights::Real { max } = base {
        if !(max > 0.0 && max.is_finite()) {
            return Err(GirthError::InvalidParameter(format!("real weight bound {max} must be positive")));
        }
    }
    let mut mode = match base {
        Weights::Unit => WeightMode::Integer { max: 1 },
        Weights::Int { max } => WeightMode::Integer { max },
        Weights::Real { .. } => WeightMode::Real,
    };
    if zero > 0.0 {
        mode = WeightMode::Real;
    }

    let n = spec.n;
    let mut b = Builder::new(n);
    match spec.kind {
        GenKind::ErdosRenyi { p, connected } => {
            check_probability(p)?;
            if connected {
                b.random_tree(&mut rng, &mut weight);
            }
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(p) && !b.has(u, v) {
                        let w = weight(&mut rng);
                        b.add(u, v, w);
                    }
                }
            }
        }
        GenKind::Grid { rows, cols } => {
            b = Builder::new(rows * cols);
            for r in 0..rows {
                for c in 0..cols {
                    let v = r * cols + c;
                    if c + 1 < cols {
                        let w = weight(&mut rng);
                        b.add(v, v + 1, w);
                    }
                    if r + 1 < rows {
                        let w = weight(&mut rng);
                        b.add(v, v + cols, w);
                    }
                }
            }
        }
        GenKind::CyclePlusChords { planted, chords } => {
            if planted < 3 || planted > n {
                return Err(GirthError::InvalidParameter(format!("planted cycle length {planted} needs 3 <= k <= n = {n}")));
            }
            let k = planted as f64;
            // Heavy edges weigh at least k; keep the mode's bound honest.
            let extra = match base {
                Weights::Unit => 0.0,
                Weights::Int { max } => (max - 1) as f64,
                Weights::Real { max } => max,
            };
            let mut heavy = |rng: &mut ChaCha8Rng| -> f64 {
                match base {
                    Weights::Real { .. } => k + rng.gen::<f64>() * extra,
                    _ => k + rng.gen_range(0..=extra as u64) as f64,
                }
            };
            if mode.is_integer() {
                mode = WeightMode::Integer { max: planted as u64 + extra as u64 };
            }
            let mut cyc: Vec<usize> = index::sample(&mut rng, n, planted).into_vec();
            cyc.shuffle(&mut rng);
            for i in 0..planted {
                b.add(cyc[i], cyc[(i + 1) % planted], 1.0);
            }
            b.random_tree(&mut rng, &mut heavy);
            let free = pair_count(n) - b.edges.len();
            if chords > free {
                return Err(GirthError::InvalidParameter(format!("{chords} chords requested, only {free} pairs free")));
            }
            let mut added = 0;
            while added < chords {
                let (u, v) = decode_pair(n, rng.gen_range(0..pair_count(n)));
                if !b.has(u, v) {
                    let w = heavy(&mut rng);
                    b.add(u, v, w);
                    added += 1;
                }
            }
        }
        GenKind::TwoCluster { p_in, bridges } => {
            check_probability(p_in)?;
            let half = n / 2;
            if bridges > half * (n - half) {
                return Err(GirthError::InvalidParameter(format!("{bridges} bridges exceed the {} cross pairs", half * (n - half))));
            }
            for (lo, hi) in [(0, half), (half, n)] {
                for u in lo..hi {
                    for v in (u + 1)..hi {
                        if rng.gen_bool(p_in) {
                            let w = weight(&mut rng);
                            b.add(u, v, w);
                        }
                    }
                }
            }
            let mut added = 0;
            while added < bridges {
                let (u, v) = (rng.gen_range(0..half), rng.gen_range(half..n));
                if !b.has(u, v) {
                    let w = weight(&mut rng);
                    b.add(u, v, w);
                    added += 1;
                }
            }
        }
        GenKind::DenseThreshold => {
            let target = (density_threshold(n) + n).min(pair_count(n));
            b.random_tree(&mut rng, &mut weight);
            let picks = index::sample(&mut rng, pair_count(n), pair_count(n).min(2 * target));
            for k in picks.iter() {
                if b.edges.len() >= target {
                    break;
                }
                let (u, v) = decode_pair(n, k);
                if !b.has(u, v) {
                    let w = weight(&mut rng);
                    b.add(u, v, w);
                }
            }
        }
    }
    let n = b.n;
    WeightedGraph::new(n, &b.edges, mode)
}
