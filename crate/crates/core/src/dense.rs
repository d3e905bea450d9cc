//! Algorithms whose cost does not depend on `m`.
//!
//! Any graph with more than `n^{3/2}/2 + n` edges contains a 4-cycle, so
//! the lightest `K = ceil(n^{3/2}/2 + n)` edges either contain a girth cycle
//! or a 4-cycle of weight at most `4 w_max <= 4 girth`. The prefix of
//! lightest edges is read lazily from the sorted lists.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap, HashSet};

use rayon::prelude::*;

use crate::approx::{approx_general_with, Config};
use crate::cycle::Cycle;
use crate::error::{GirthError, Result};
use crate::estimate::{better, Branch, GirthEstimate, Stats};
use crate::exact::Key;
use crate::graph::{Edge, WeightedGraph};
use crate::grid::SearchGrid;
use crate::hbd::{min_detecting_threshold_grid_with, HbdWorkspace};
use crate::hitting::build_hitting_structure;

/// Factor certified by the bootstrap estimate (`8 + ε0` with `ε0 = 1`).
pub const BOOTSTRAP_FACTOR: f64 = 9.0;

/// `ceil(n^{3/2}/2 + n)`.
pub fn density_threshold(n: usize) -> usize {
    let n = n as f64;
    (n * n.sqrt() / 2.0 + n).ceil() as usize
}

/// The `K` lightest edges of `G` under the order (weight, u, v).
#[derive(Debug, Clone)]
pub struct PrefixSubgraph {
    /// Same vertex set as `G`.
    pub graph: WeightedGraph,
    /// Original edge id of every edge of `graph`.
    pub edge_ids: Vec<usize>,
    pub w_max: f64,
    /// Sorted-list entries read while building.
    pub adjacency_reads: u64,
}

pub fn build_prefix_subgraph(g: &WeightedGraph) -> PrefixSubgraph {
    build_prefix_subgraph_k(g, density_threshold(g.n()).min(g.m()))
}

/// Seeds a queue with every vertex's lightest edge; each extracted edge
/// pulls the next entry of both endpoints' lists. Every vertex's lightest
/// edge outside the prefix stays queued, so extraction follows the global
/// order. An edge queued from both ends is skipped the second time.
pub fn build_prefix_subgraph_k(g: &WeightedGraph, k: usize) -> PrefixSubgraph {
    let n = g.n();
    let mut cursor = vec![0usize; n];
    let mut reads = 0u64;
    let mut heap = BinaryHeap::new();
    let mut next = |x: usize, cursor: &mut Vec<usize>, heap: &mut BinaryHeap<Reverse<(Key, usize, usize, usize)>>| {
        if let Some(a) = g.sorted_adj(x).get(cursor[x]) {
            cursor[x] += 1;
            reads += 1;
            heap.push(Reverse((Key(a.weight), x.min(a.to), x.max(a.to), a.edge)));
        }
    };
    for x in 0..n {
        next(x, &mut cursor, &mut heap);
    }
    let mut taken = HashSet::with_capacity(k);
    let mut edge_ids = Vec::with_capacity(k);
    let mut w_max = 0.0;
    while edge_ids.len() < k {
        let Some(Reverse((Key(w), u, v, id))) = heap.pop() else {
            break;
        };
        if !taken.insert(id) {
            continue;
        }
        edge_ids.push(id);
        w_max = w;
        next(u, &mut cursor, &mut heap);
        next(v, &mut cursor, &mut heap);
    }
    let triples: Vec<_> = edge_ids
        .iter()
        .map(|&id| {
            let Edge { u, v, weight } = g.edge(id);
            (u, v, weight)
        })
        .collect();
    let graph = WeightedGraph::new(n, &triples, g.mode()).expect("subgraph of a valid graph");
    PrefixSubgraph { graph, edge_ids, w_max, adjacency_reads: reads }
}

/// A 4-cycle found by hashing neighbour pairs: the first pair `{a, b}`
/// seen from two different centres closes `a x b y`. Costs `O(sum deg^2)`
/// at worst, and stops at the first repeated pair.
pub fn find_c4(g: &WeightedGraph) -> Option<Cycle> {
    let mut seen: HashMap<(usize, usize), usize> = HashMap::new();
    for x in 0..g.n() {
        let adj = g.ordered_adj(x);
        for (i, a) in adj.iter().enumerate() {
            for b in &adj[i + 1..] {
                if let Some(&y) = seen.get(&(a.to, b.to)) {
                    return Some(Cycle::from_vertices(g, &[a.to, x, b.to, y]).expect("two centres over one pair form a 4-cycle"));
                }
                seen.insert((a.to, b.to), x);
            }
        }
    }
    None
}

/// Deterministic (8+ε)-approximation. Graphs at or below the density
/// threshold go straight to the (2+ε')-algorithm with `ε' = cfg.sparse_eps`.
pub fn controlled_density_approx(g: &WeightedGraph, eps: f64) -> Result<GirthEstimate> {
    controlled_density_approx_with(g, eps, &Config::default())
}

pub fn controlled_density_approx_with(g: &WeightedGraph, eps: f64, cfg: &Config) -> Result<GirthEstimate> {
    if !(eps > 0.0 && eps.is_finite()) {
        return Err(GirthError::InvalidParameter(format!("epsilon must be positive, got {eps}")));
    }
    let factor = 8.0 + eps;
    if g.m() <= density_threshold(g.n()) {
        let est = approx_general_with(g, cfg.sparse_eps, cfg)?;
        return Ok(GirthEstimate { declared_factor: factor, ..est });
    }
    let prefix = build_prefix_subgraph(g);
    let h = &prefix.graph;
    let approx = approx_general_with(h, eps / 4.0, cfg)?;
    let c4 = find_c4(h);
    let mut stats = approx.stats;
    stats.adjacency_reads += prefix.adjacency_reads;
    let best = better(approx.cycle().map(|c| (c.clone(), Branch::PrefixApprox)), c4.map(|c| (c, Branch::FourCycle)));
    Ok(GirthEstimate::from_candidate(best, factor, stats))
}

/// Deterministic (4+ε)-approximation without an `m` term.
///
/// A bootstrap `g*` within factor 9 fixes the grid `[g*/9, 5 g*]` with ratio
/// `1 + ε/6`. Vertices of `S` search the grid on `G`; any other `v` only
/// tries values below `dist(v, S)`, which keeps HBD inside `B_S(v)`.
pub fn derandomized_4eps(g: &WeightedGraph, eps: f64) -> Result<GirthEstimate> {
    derandomized_4eps_with(g, eps, &Config::default())
}

pub fn derandomized_4eps_with(g: &WeightedGraph, eps: f64, cfg: &Config) -> Result<GirthEstimate> {
    if !(eps > 0.0 && eps.is_finite()) {
        return Err(GirthError::InvalidParameter(format!("epsilon must be positive, got {eps}")));
    }
    let factor = 4.0 + eps;
    let boot = controlled_density_approx_with(g, 1.0, cfg)?;
    let mut stats = boot.stats;
    let Some(bootstrap) = boot.cycle() else {
        return Ok(GirthEstimate::from_candidate(None, factor, stats));
    };
    let g_star = bootstrap.weight();
    if g_star == 0.0 {
        return Ok(GirthEstimate::from_candidate(Some((bootstrap.clone(), Branch::Bootstrap)), factor, stats));
    }
    let grid = SearchGrid::spanning(1.0 + eps / 6.0, g_star / BOOTSTRAP_FACTOR, 5.0 * g_star)?;
    let hs = build_hitting_structure(g, cfg.r_for(g.n()))?;
    stats += hs.stats;
    let (found, run_stats) = (0..g.n())
        .into_par_iter()
        .map_init(
            || HbdWorkspace::new(g.n()),
            |ws, v| {
                let mut st = Stats::default();
                let (cap, branch) = if hs.in_s[v] { (None, Branch::HittingSet) } else { (Some(hs.dist_to_s[v]), Branch::Ball) };
                let found = min_detecting_threshold_grid_with(ws, g, v, &grid, cap, &mut st);
                (found.map(|(_, c)| (c, branch)), st)
            },
        )
        .reduce(|| (None, Stats::default()), |a, b| (better(a.0, b.0), a.1 + b.1));
    stats += run_stats;
    let best = better(Some((bootstrap.clone(), Branch::Bootstrap)), found);
    Ok(GirthEstimate::from_candidate(best, factor, stats))
}

/// Factor-4 variant for weights in `{1, ..., M}`: with `ε = 1/(M(n+1))`
/// the (4+ε) bound rounds down to 4 on integer cycle weights.
pub fn derandomized_4(g: &WeightedGraph) -> Result<GirthEstimate> {
    derandomized_4_with(g, &Config::default())
}

pub fn derandomized_4_with(g: &WeightedGraph, cfg: &Config) -> Result<GirthEstimate> {
    let m = g.mode().max_weight().ok_or(GirthError::ModeMismatch { expected: "integer" })?;
    let eps = integer_eps(m, g.n());
    let est = derandomized_4eps_with(g, eps, cfg)?;
    Ok(GirthEstimate { declared_factor: 4.0, ..est })
}

/// `1 / (M (n + 1))`.
pub fn integer_eps(max_weight: u64, n: usize) -> f64 {
    1.0 / (max_weight as f64 * (n as f64 + 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::WeightMode;

    #[test]
    fn threshold_values() {
        assert_eq!(density_threshold(5), 11);
        assert_eq!(density_threshold(100), 600);
    }

    #[test]
    fn small_graph_prefix_is_whole_graph() {
        let edges: Vec<_> = (0..5).flat_map(|u| ((u + 1)..5).map(move |v| (u, v, 1.0))).collect();
        let g = WeightedGraph::new(5, &edges, WeightMode::Integer { max: 1 }).unwrap();
        let p = build_prefix_subgraph(&g);
        assert_eq!(p.graph.m(), 10);
        assert_eq!(p.w_max, 1.0);
    }

    #[test]
    fn star_prefix() {
        let edges: Vec<_> = (1..8).map(|i| (0, i, i as f64)).collect();
        let g = WeightedGraph::new(8, &edges, WeightMode::Integer { max: 7 }).unwrap();
        let p = build_prefix_subgraph_k(&g, 3);
        assert_eq!(p.graph.edge_triples(), vec![(0, 1, 1.0), (0, 2, 2.0), (0, 3, 3.0)]);
        assert_eq!(p.w_max, 3.0);
        assert!(p.adjacency_reads <= 2 * 3 + 8);
    }

    #[test]
    fn four_cycles() {
        let k22 = WeightedGraph::new(4, &[(0, 2, 1.0), (0, 3, 1.0), (1, 2, 1.0), (1, 3, 1.0)], WeightMode::Real).unwrap();
        assert_eq!(find_c4(&k22).unwrap().len(), 4);
        let tri = WeightedGraph::new(3, &[(0, 1, 1.0), (1, 2, 1.0), (2, 0, 1.0)], WeightMode::Real).unwrap();
        assert!(find_c4(&tri).is_none());
        let cube: Vec<_> =
            (0..8usize).flat_map(|v| (0..3).map(move |b| (v, v ^ (1 << b)))).filter(|(u, v)| u < v).map(|(u, v)| (u, v, 1.0)).collect();
        let q3 = WeightedGraph::new(8, &cube, WeightMode::Real).unwrap();
        assert_eq!(find_c4(&q3).unwrap().len(), 4);
    }

    #[test]
    fn unit_triangle() {
        let g = WeightedGraph::new(3, &[(0, 1, 1.0), (1, 2, 1.0), (2, 0, 1.0)], WeightMode::Integer { max: 1 }).unwrap();
        assert_eq!(derandomized_4eps(&g, 0.5).unwrap().weight(), Some(3.0));
        assert_eq!(controlled_density_approx(&g, 1.0).unwrap().weight(), Some(3.0));
        assert_eq!(derandomized_4(&g).unwrap().declared_factor, 4.0);
    }
}
