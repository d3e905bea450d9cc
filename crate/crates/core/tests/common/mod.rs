//! Independent reference implementations used only by the tests.

#![allow(dead_code)]

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use girth_core::{generate, GenKind, GenSpec, WeightedGraph, Weights};

#[derive(PartialEq)]
struct Ord64(f64);
impl Eq for Ord64 {}
impl PartialOrd for Ord64 {
    fn partial_cmp(&self, o: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for Ord64 {
    fn cmp(&self, o: &Self) -> std::cmp::Ordering {
        self.0.total_cmp(&o.0)
    }
}

/// Plain Dijkstra, optionally ignoring one edge id.
pub fn dijkstra(g: &WeightedGraph, s: usize, skip_edge: Option<usize>) -> Vec<f64> {
    let mut dist = vec![f64::INFINITY; g.n()];
    dist[s] = 0.0;
    let mut heap = BinaryHeap::from([Reverse((Ord64(0.0), s))]);
    while let Some(Reverse((Ord64(d), u))) = heap.pop() {
        if d > dist[u] {
            continue;
        }
        for a in g.ordered_adj(u) {
            if Some(a.edge) == skip_edge {
                continue;
            }
            if d + a.weight < dist[a.to] {
                dist[a.to] = d + a.weight;
                heap.push(Reverse((Ord64(dist[a.to]), a.to)));
            }
        }
    }
    dist
}

/// Girth by deleting each edge in turn and joining its ends by a shortest
/// path.
pub fn edge_deletion_girth(g: &WeightedGraph) -> Option<f64> {
    let mut best: Option<f64> = None;
    for (id, e) in g.edges().iter().enumerate() {
        let d = dijkstra(g, e.u, Some(id))[e.v];
        if d.is_finite() {
            let w = d + e.weight;
            best = Some(best.map_or(w, |b: f64| b.min(w)));
        }
    }
    best
}

/// Minimum over every simple cycle, by depth-first enumeration from each
/// cycle's smallest vertex.
pub fn enumerated_girth(g: &WeightedGraph) -> Option<f64> {
    fn dfs(g: &WeightedGraph, start: usize, u: usize, len: usize, w: f64, on: &mut Vec<bool>, best: &mut Option<f64>) {
        for a in g.ordered_adj(u) {
            if a.to == start && len >= 3 {
                let t = w + a.weight;
                *best = Some(best.map_or(t, |b: f64| b.min(t)));
            } else if a.to > start && !on[a.to] {
                on[a.to] = true;
                dfs(g, start, a.to, len + 1, w + a.weight, on, best);
                on[a.to] = false;
            }
        }
    }
    let mut best = None;
    let mut on = vec![false; g.n()];
    for s in 0..g.n() {
        on[s] = true;
        dfs(g, s, s, 1, 0.0, &mut on, &mut best);
        on[s] = false;
    }
    best
}

pub fn petersen() -> WeightedGraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5, 1.0));
        edges.push((i, i + 5, 1.0));
        edges.push((5 + i, 5 + (i + 2) % 5, 1.0));
    }
    WeightedGraph::new(10, &edges, girth_core::WeightMode::Integer { max: 1 }).unwrap()
}

pub fn random_graph(n: usize, p: f64, weights: Weights, seed: u64) -> WeightedGraph {
    generate(&GenSpec::new(GenKind::ErdosRenyi { p, connected: true }, n, weights), seed).unwrap()
}

pub fn random_with_zeros(n: usize, p: f64, zero_fraction: f64, seed: u64) -> WeightedGraph {
    let spec = GenSpec { kind: GenKind::ErdosRenyi { p, connected: true }, n, weights: Weights::Real { max: 10.0 }, zero_fraction };
    generate(&spec, seed).unwrap()
}

/// Relative slack for comparing floating-point girths computed along
/// different summation orders.
pub fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-9 * a.abs().max(b.abs()).max(1.0)
}
