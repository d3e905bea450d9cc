//! Girth estimate within a factor depending only on `|S|`.
//!
//! Every vertex is attached to its nearest hitting-set vertex through a
//! shortest-path forest `{T_s}`. Short cycles are then looked for inside
//! open balls (step 1), inside one tree (step 3), through two trees
//! (step 4), and through the quotient graph `H_S` on the tree roots
//! (step 5), whose cycles lift back to `G` without gaining weight.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use rayon::prelude::*;

use crate::approx::{ball_graph, small_girth_unchecked, Config, SmallGirth, SmallGirthMethod};
use crate::cycle::{tree_path, Cycle};
use crate::error::Result;
use crate::estimate::{better, Branch, GirthEstimate, Stats};
use crate::exact::Key;
use crate::graph::{WeightMode, WeightedGraph};
use crate::hitting::{build_hitting_structure, HittingStructure};
use crate::reductions::{girth_with_reduction, has_zero_weight};

const NONE: usize = usize::MAX;

/// Shortest-path forest rooted at the hitting set.
#[derive(Debug, Clone, PartialEq)]
pub struct TreePartition {
    pub root_of: Vec<usize>,
    /// Tree parent, `usize::MAX` at the roots.
    pub parent: Vec<usize>,
    pub dist_to_root: Vec<f64>,
    pub depth: Vec<usize>,
    /// Tree roots in increasing order.
    pub roots: Vec<usize>,
}

impl TreePartition {
    fn path(&self, a: usize, b: usize) -> Vec<usize> {
        tree_path(|x| (self.parent[x] != NONE).then_some(self.parent[x]), |x| self.depth[x], a, b)
            .expect("both vertices lie in the same tree")
    }

    fn is_tree_edge(&self, u: usize, v: usize) -> bool {
        self.parent[u] == v || self.parent[v] == u
    }

    /// `dist(root(u), u) + w + dist(v, root(v))`.
    fn ell(&self, u: usize, v: usize, w: f64) -> f64 {
        self.dist_to_root[u] + w + self.dist_to_root[v]
    }
}

/// Dijkstra from a virtual root joined to every `s` in `S` by a weight-0
/// edge. Ties go to the smaller root, then the smaller parent.
pub fn build_tree_partition(g: &WeightedGraph, roots: &[usize]) -> TreePartition {
    let n = g.n();
    let mut dist = vec![f64::INFINITY; n];
    let mut root_of = vec![NONE; n];
    let mut parent = vec![NONE; n];
    let mut depth = vec![0; n];
    let mut done = vec![false; n];
    let mut heap = BinaryHeap::new();
    let mut sorted_roots = roots.to_vec();
    sorted_roots.sort_unstable();
    sorted_roots.dedup();
    for &s in &sorted_roots {
        dist[s] = 0.0;
        root_of[s] = s;
        heap.push(Reverse((Key(0.0), s, NONE, s)));
    }
    while let Some(Reverse((Key(d), root, par, u))) = heap.pop() {
        if done[u] || (d, root, par) != (dist[u], root_of[u], parent[u]) {
            continue;
        }
        done[u] = true;
        depth[u] = if par == NONE { 0 } else { depth[par] + 1 };
        for a in g.sorted_adj(u) {
            if done[a.to] {
                continue;
            }
            let label = (Key(d + a.weight), root, u);
            if label < (Key(dist[a.to]), root_of[a.to], parent[a.to]) {
                dist[a.to] = d + a.weight;
                root_of[a.to] = root;
                parent[a.to] = u;
                heap.push(Reverse((Key(d + a.weight), root, u, a.to)));
            }
        }
    }
    TreePartition { root_of, parent, dist_to_root: dist, depth, roots: sorted_roots }
}

/// Runs the small-graph routine on the open ball of every `v` outside `S`.
pub fn step1_ball_girths(g: &WeightedGraph, hs: &HittingStructure, sub: &SmallGirth) -> Vec<(usize, Cycle)> {
    step1(g, hs, sub).0
}

fn step1(g: &WeightedGraph, hs: &HittingStructure, sub: &SmallGirth) -> (Vec<(usize, Cycle)>, Stats) {
    let results: Vec<(Option<(usize, Cycle)>, Stats)> = (0..g.n())
        .into_par_iter()
        .filter(|&v| !hs.in_s[v])
        .map(|v| {
            let mut stats = Stats::default();
            let found = ball_graph(g, hs, v, &mut stats).and_then(|(h, map, _)| {
                let est = small_girth_unchecked(&h, sub.method);
                stats += est.stats;
                est.cycle().map(|c| (v, c.relabel(g, &map)))
            });
            (found, stats)
        })
        .collect();
    let stats = results.iter().map(|r| r.1).sum();
    (results.into_iter().filter_map(|r| r.0).collect(), stats)
}

/// Cycles closed by non-tree edges with both ends in one tree, with their
/// estimates `ℓ`.
pub fn step3_intra_tree(g: &WeightedGraph, tp: &TreePartition) -> Vec<(f64, Cycle)> {
    intra_tree_edges(g, tp).into_iter().map(|(ell, id)| (ell, intra_tree_cycle(g, tp, id))).collect()
}

fn intra_tree_edges(g: &WeightedGraph, tp: &TreePartition) -> Vec<(f64, usize)> {
    g.edges()
        .iter()
        .enumerate()
        .filter(|(_, e)| tp.root_of[e.u] != NONE && tp.root_of[e.u] == tp.root_of[e.v] && !tp.is_tree_edge(e.u, e.v))
        .map(|(id, e)| (tp.ell(e.u, e.v, e.weight), id))
        .collect()
}

fn intra_tree_cycle(g: &WeightedGraph, tp: &TreePartition, id: usize) -> Cycle {
    let e = g.edge(id);
    Cycle::from_vertices(g, &tp.path(e.u, e.v)).expect("tree path plus a non-tree edge is a simple cycle")
}

/// Root pair with its lightest joining edges as `(ℓ, edge id)`.
type PairEdges = ((usize, usize), Vec<(f64, usize)>);

/// Per root pair, the two inter-tree edges with the smallest `ℓ`, each
/// oriented from the smaller root's tree.
fn two_lightest_per_pair(g: &WeightedGraph, tp: &TreePartition) -> Vec<PairEdges> {
    let mut buckets: HashMap<(usize, usize), Vec<(f64, usize)>> = HashMap::new();
    for (id, e) in g.edges().iter().enumerate() {
        let (ru, rv) = (tp.root_of[e.u], tp.root_of[e.v]);
        if ru == NONE || rv == NONE || ru == rv {
            continue;
        }
        let ell = tp.ell(e.u, e.v, e.weight);
        let slot = buckets.entry((ru.min(rv), ru.max(rv))).or_default();
        slot.push((ell, id));
        if slot.len() > 2 {
            slot.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
            slot.truncate(2);
        }
    }
    let mut out: Vec<_> = buckets
        .into_iter()
        .map(|(k, mut v)| {
            v.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
            (k, v)
        })
        .collect();
    out.sort_unstable_by_key(|(k, _)| *k);
    out
}

/// Endpoints of edge `id` as (end in the tree of `root`, other end).
fn oriented(g: &WeightedGraph, tp: &TreePartition, id: usize, root: usize) -> (usize, usize) {
    let e = g.edge(id);
    if tp.root_of[e.u] == root {
        (e.u, e.v)
    } else {
        (e.v, e.u)
    }
}

fn two_tree_cycle(g: &WeightedGraph, tp: &TreePartition, root: usize, e: usize, f: usize) -> Option<Cycle> {
    let (u, v2) = oriented(g, tp, e, root);
    let (v, u2) = oriented(g, tp, f, root);
    // u ~> v in the first tree, v -> u2 across, u2 ~> v2 in the second,
    // v2 -> u across
    let mut walk = tp.path(u, v);
    walk.extend(tp.path(u2, v2));
    Cycle::from_closed_walk(g, &walk)
}

/// Cycles through two trees joined by at least two edges, with estimates
/// `ℓ(e) + ℓ(e')` for the two lightest joining edges.
pub fn step4_two_tree(g: &WeightedGraph, tp: &TreePartition) -> Vec<(f64, Cycle)> {
    two_lightest_per_pair(g, tp)
        .into_iter()
        .filter(|(_, v)| v.len() == 2)
        .filter_map(|((s, _), v)| two_tree_cycle(g, tp, s, v[0].1, v[1].1).map(|c| (v[0].0 + v[1].0, c)))
        .collect()
}

/// The graph `H_S` on the tree roots, with one witness edge of `G` per
/// quotient edge.
#[derive(Debug, Clone)]
pub struct QuotientGraph {
    /// Vertex `i` stands for root `roots[i]`; weights are the minimum `ℓ`.
    pub graph: WeightedGraph,
    pub roots: Vec<usize>,
    /// Witness edge id of `G` for every quotient edge id.
    pub witness: Vec<usize>,
}

pub fn build_quotient(g: &WeightedGraph, tp: &TreePartition) -> QuotientGraph {
    let index: HashMap<usize, usize> = tp.roots.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let mut edges = Vec::new();
    let mut witness = Vec::new();
    for ((s, t), v) in two_lightest_per_pair(g, tp) {
        edges.push((index[&s], index[&t], v[0].0));
        witness.push(v[0].1);
    }
    let graph = WeightedGraph::new(tp.roots.len(), &edges, WeightMode::Real).expect("quotient graph is simple");
    QuotientGraph { graph, roots: tp.roots.clone(), witness }
}

/// Replaces every quotient vertex by the tree path between the witness
/// edges entering and leaving it. The result weighs at most `w(c)`.
pub fn lift_quotient_cycle(g: &WeightedGraph, tp: &TreePartition, q: &QuotientGraph, c: &Cycle) -> Option<Cycle> {
    let cs = c.vertices();
    let k = cs.len();
    let hops: Vec<(usize, usize)> = (0..k)
        .map(|i| {
            let qe = q.graph.find_edge(cs[i], cs[(i + 1) % k]).expect("cycle edge exists in the quotient").edge;
            oriented(g, tp, q.witness[qe], q.roots[cs[i]])
        })
        .collect();
    let mut walk = Vec::new();
    for i in 0..k {
        walk.extend(tp.path(hops[(i + k - 1) % k].1, hops[i].0));
    }
    Cycle::from_closed_walk(g, &walk)
}

/// Candidate counts per step, for diagnostics.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct StepCounts {
    pub ball: usize,
    pub intra_tree: usize,
    pub two_tree: usize,
    pub quotient: usize,
}

#[derive(Debug, Clone)]
pub struct PolyOutcome {
    /// Best cycle; `declared_factor` equals `certified_factor`.
    pub estimate: GirthEstimate,
    /// Proven bound on `w(C) / girth`: `max(9, 2|S|, α(|S|+1))` with `α`
    /// the factor of the routine run on `H_S`.
    pub certified_factor: f64,
    pub s_size: usize,
    pub ball_cycles: Vec<(usize, Cycle)>,
    pub counts: StepCounts,
}

/// `(estimate, certified factor)` for positive weights; zero-weight edges
/// are contracted first.
pub fn poly_girth(g: &WeightedGraph, sub: &SmallGirth) -> Result<(GirthEstimate, f64)> {
    poly_girth_cfg(g, &Config { small_girth: *sub, ..Config::default() })
}

pub fn poly_girth_cfg(g: &WeightedGraph, cfg: &Config) -> Result<(GirthEstimate, f64)> {
    let run = |h: &WeightedGraph| -> Result<PolyOutcome> {
        let hs = build_hitting_structure(h, cfg.r_for(h.n()))?;
        poly_girth_with(h, &hs, cfg)
    };
    if !has_zero_weight(g) {
        let out = run(g)?;
        return Ok((out.estimate, out.certified_factor));
    }
    let mut factor = 9.0;
    let est = girth_with_reduction(g, f64::NAN, |h| {
        let out = run(h)?;
        factor = out.certified_factor;
        Ok(out.estimate)
    })?;
    Ok((GirthEstimate { declared_factor: factor, ..est }, factor))
}

/// All five steps on a prebuilt hitting structure.
pub fn poly_girth_with(g: &WeightedGraph, hs: &HittingStructure, cfg: &Config) -> Result<PolyOutcome> {
    let mut counts = StepCounts::default();
    let (ball_cycles, mut stats) = step1(g, hs, &cfg.small_girth);
    stats += hs.stats;
    counts.ball = ball_cycles.len();
    let mut best = None;
    for (_, c) in &ball_cycles {
        best = better(best, Some((c.clone(), Branch::PolyBall)));
    }

    let tp = build_tree_partition(g, &hs.s);
    stats.edge_scans += 3 * g.m() as u64;

    // Only the smallest estimate of each step needs a witness cycle.
    let intra = intra_tree_edges(g, &tp);
    counts.intra_tree = intra.len();
    if let Some(&(_, id)) = intra.iter().min_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1))) {
        best = better(best, Some((intra_tree_cycle(g, &tp, id), Branch::PolyIntraTree)));
    }

    let pairs = two_lightest_per_pair(g, &tp);
    let two: Vec<_> = pairs.iter().filter(|(_, v)| v.len() == 2).collect();
    counts.two_tree = two.len();
    if let Some(((s, _), v)) = two.iter().min_by(|a, b| (a.1[0].0 + a.1[1].0).total_cmp(&(b.1[0].0 + b.1[1].0)).then(a.0.cmp(&b.0))) {
        best = better(best, two_tree_cycle(g, &tp, *s, v[0].1, v[1].1).map(|c| (c, Branch::PolyTwoTree)));
    }

    let q = build_quotient(g, &tp);
    let method = if q.graph.n() > cfg.small_girth.threshold { SmallGirthMethod::HbdSweep } else { cfg.small_girth.method };
    let alpha = SmallGirth { method, threshold: usize::MAX }.factor();
    let h_est = small_girth_unchecked(&q.graph, method);
    stats += h_est.stats;
    if let Some(c) = h_est.cycle() {
        counts.quotient = 1;
        best = better(best, lift_quotient_cycle(g, &tp, &q, c).map(|c| (c, Branch::PolyQuotient)));
    }

    let s = hs.s.len() as f64;
    let certified_factor = 9f64.max(2.0 * s).max(alpha * (s + 1.0));
    Ok(PolyOutcome {
        estimate: GirthEstimate::from_candidate(best, certified_factor, stats),
        certified_factor,
        s_size: hs.s.len(),
        ball_cycles,
        counts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit(n: usize, edges: &[(usize, usize)]) -> WeightedGraph {
        let e: Vec<_> = edges.iter().map(|&(u, v)| (u, v, 1.0)).collect();
        WeightedGraph::new(n, &e, WeightMode::Integer { max: 1 }).unwrap()
    }

    #[test]
    fn partition_singletons_and_path() {
        let g = unit(3, &[(0, 1), (1, 2)]);
        let all = build_tree_partition(&g, &[0, 1, 2]);
        assert_eq!(all.root_of, vec![0, 1, 2]);
        let one = build_tree_partition(&g, &[0]);
        assert_eq!(one.root_of, vec![0, 0, 0]);
        assert_eq!(one.dist_to_root, vec![0.0, 1.0, 2.0]);
    }

    #[test]
    fn intra_tree_examples() {
        let tri = unit(3, &[(0, 1), (1, 2), (2, 0)]);
        let c = step3_intra_tree(&tri, &build_tree_partition(&tri, &[0]));
        assert_eq!(c.len(), 1);
        assert_eq!((c[0].0, c[0].1.weight()), (3.0, 3.0));
        let path = unit(3, &[(0, 1), (1, 2)]);
        assert!(step3_intra_tree(&path, &build_tree_partition(&path, &[0])).is_empty());
        let c4 = unit(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let c = step3_intra_tree(&c4, &build_tree_partition(&c4, &[0]));
        assert_eq!((c[0].0, c[0].1.weight()), (4.0, 4.0));
    }

    #[test]
    fn quotient_keeps_minimum_witness() {
        // trees {0,1} and {2,3,4}; joining edges with ℓ = 5, 7, 9
        let edges = [(0, 1, 1.0), (2, 3, 1.0), (2, 4, 1.0), (0, 2, 5.0), (1, 3, 5.0), (1, 4, 7.0)];
        let g = WeightedGraph::new(5, &edges, WeightMode::Integer { max: 7 }).unwrap();
        let tp = build_tree_partition(&g, &[0, 2]);
        let q = build_quotient(&g, &tp);
        assert_eq!(q.graph.edge_triples(), vec![(0, 1, 5.0)]);
        assert_eq!(q.witness, vec![3]);
        let one = build_quotient(&g, &build_tree_partition(&g, &[0]));
        assert_eq!(one.graph.m(), 0);
    }

    #[test]
    fn unit_triangle_is_exact() {
        let g = unit(3, &[(0, 1), (1, 2), (2, 0)]);
        let (est, f) = poly_girth(&g, &SmallGirth::default()).unwrap();
        assert_eq!(est.weight(), Some(3.0));
        assert_eq!(f, 9.0);
        let forest = unit(3, &[(0, 1), (1, 2)]);
        assert!(poly_girth(&forest, &SmallGirth::default()).unwrap().0.is_acyclic());
    }
}
