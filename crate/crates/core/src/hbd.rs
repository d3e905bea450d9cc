//! Bounded-radius cycle detection (HBD) and the threshold searches built on
//! its monotonicity.
//!
//! `hbd(g, s, t)` is Dijkstra without decrease-key: a vertex scans its
//! weight-sorted list while `d(u) + w <= t`, the first reach of a vertex
//! fixes `d`, and a second reach through a non-tree edge stops the run with
//! the cycle formed by the two tree paths. A detected cycle weighs at most
//! `2t`. A run that does not detect has relaxed a spanning tree of
//! `B(s, t)` with `d` equal to the true distances.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::cycle::{tree_path, Cycle};
use crate::estimate::Stats;
use crate::exact::{lex_shortest_paths, Key};
use crate::graph::WeightedGraph;
use crate::grid::SearchGrid;

const NONE: usize = usize::MAX;

#[derive(Debug, Clone, PartialEq)]
pub enum HbdOutcome {
    /// Cycle closed by the non-tree edge `trigger`.
    Found {
        cycle: Cycle,
        trigger: (usize, usize),
    },
    Exhausted,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Detection {
    pub outcome: HbdOutcome,
    /// Vertices extracted from the queue.
    pub visited: usize,
    /// Tree edges created.
    pub relaxed: usize,
    /// Adjacency entries compared against the threshold.
    pub scanned: usize,
}

impl Detection {
    pub fn cycle(&self) -> Option<&Cycle> {
        match &self.outcome {
            HbdOutcome::Found { cycle, .. } => Some(cycle),
            HbdOutcome::Exhausted => None,
        }
    }

    pub fn into_cycle(self) -> Option<Cycle> {
        match self.outcome {
            HbdOutcome::Found { cycle, .. } => Some(cycle),
            HbdOutcome::Exhausted => None,
        }
    }

    pub fn detected(&self) -> bool {
        matches!(self.outcome, HbdOutcome::Found { .. })
    }

    fn stats(&self) -> Stats {
        Stats {
            hbd_calls: 1,
            hbd_visited: self.visited as u64,
            hbd_relaxed: self.relaxed as u64,
            hbd_scanned: self.scanned as u64,
            ..Stats::default()
        }
    }
}

/// Reusable per-run state. Arrays are invalidated by bumping a stamp, so a
/// run costs time proportional to what it touches, not to `n`.
#[derive(Debug, Default)]
pub struct HbdWorkspace {
    stamp: Vec<u32>,
    current: u32,
    d: Vec<f64>,
    parent: Vec<usize>,
    parent_edge: Vec<usize>,
    depth: Vec<usize>,
    heap: BinaryHeap<Reverse<(Key, usize)>>,
}

impl HbdWorkspace {
    pub fn new(n: usize) -> Self {
        let mut ws = HbdWorkspace::default();
        ws.reserve(n);
        ws
    }

    fn reserve(&mut self, n: usize) {
        if self.stamp.len() < n {
            self.stamp.resize(n, 0);
            self.d.resize(n, f64::INFINITY);
            self.parent.resize(n, NONE);
            self.parent_edge.resize(n, NONE);
            self.depth.resize(n, 0);
        }
    }

    fn begin(&mut self, n: usize) {
        self.reserve(n);
        self.heap.clear();
        if self.current == u32::MAX {
            self.stamp.iter_mut().for_each(|s| *s = 0);
            self.current = 0;
        }
        self.current += 1;
    }

    fn reached(&self, v: usize) -> bool {
        self.stamp[v] == self.current
    }

    fn reach(&mut self, v: usize, d: f64, parent: usize, edge: usize) {
        self.stamp[v] = self.current;
        self.d[v] = d;
        self.parent[v] = parent;
        self.parent_edge[v] = edge;
        self.depth[v] = if parent == NONE { 0 } else { self.depth[parent] + 1 };
    }
}

pub fn hbd(g: &WeightedGraph, s: usize, t: f64) -> Detection {
    hbd_with(&mut HbdWorkspace::new(g.n()), g, s, t)
}

pub fn hbd_with(ws: &mut HbdWorkspace, g: &WeightedGraph, s: usize, t: f64) -> Detection {
    ws.begin(g.n());
    let (mut visited, mut relaxed, mut scanned) = (0, 0, 0);
    ws.reach(s, 0.0, NONE, NONE);
    ws.heap.push(Reverse((Key(0.0), s)));
    while let Some(Reverse((Key(du), u))) = ws.heap.pop() {
        visited += 1;
        for a in g.sorted_adj(u) {
            scanned += 1;
            if du + a.weight > t {
                break;
            }
            if a.edge == ws.parent_edge[u] {
                continue;
            }
            if ws.reached(a.to) {
                let path = tree_path(|x| (ws.parent[x] != NONE).then_some(ws.parent[x]), |x| ws.depth[x], u, a.to)
                    .expect("reached vertices share the root s");
                let cycle = Cycle::from_vertices(g, &path).expect("tree paths and a non-tree edge form a simple cycle");
                return Detection { outcome: HbdOutcome::Found { cycle, trigger: (u, a.to) }, visited, relaxed, scanned };
            }
            ws.reach(a.to, du + a.weight, u, a.edge);
            relaxed += 1;
            ws.heap.push(Reverse((Key(du + a.weight), a.to)));
        }
    }
    Detection { outcome: HbdOutcome::Exhausted, visited, relaxed, scanned }
}

/// Smallest detecting threshold among `count` candidates, given a monotone
/// `probe` over candidate indices. Bisects `[0, count]` with `count` as an
/// always-detecting sentinel, so at most `ceil(log2(count + 1))` probes run.
fn first_detecting(count: usize, mut probe: impl FnMut(usize) -> Option<Cycle>) -> Option<(usize, Cycle)> {
    let (mut lo, mut hi) = (0, count);
    let mut found = None;
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        match probe(mid) {
            Some(c) => {
                hi = mid;
                found = Some(c);
            }
            None => lo = mid + 1,
        }
    }
    found.map(|c| (lo, c))
}

/// Smallest integer `t` in `[lo, hi]` at which `hbd(g, s, t)` detects,
/// with its cycle. Uses at most `ceil(log2(hi - lo + 2))` HBD runs.
pub fn min_detecting_threshold_int(g: &WeightedGraph, s: usize, lo: u64, hi: u64) -> Option<(u64, Cycle)> {
    min_detecting_threshold_int_with(&mut HbdWorkspace::new(g.n()), g, s, lo, hi, &mut Stats::default())
}

pub(crate) fn min_detecting_threshold_int_with(
    ws: &mut HbdWorkspace,
    g: &WeightedGraph,
    s: usize,
    lo: u64,
    hi: u64,
    stats: &mut Stats,
) -> Option<(u64, Cycle)> {
    if lo > hi {
        return None;
    }
    let count = (hi - lo + 1) as usize;
    first_detecting(count, |i| {
        let det = hbd_with(ws, g, s, (lo + i as u64) as f64);
        *stats += det.stats();
        det.into_cycle()
    })
    .map(|(i, c)| (lo + i as u64, c))
}

/// Smallest grid value strictly below `cap` (when given) at which
/// `hbd(g, s, t)` detects, with its cycle.
pub fn min_detecting_threshold_grid(g: &WeightedGraph, s: usize, grid: &SearchGrid, cap: Option<f64>) -> Option<(f64, Cycle)> {
    min_detecting_threshold_grid_with(&mut HbdWorkspace::new(g.n()), g, s, grid, cap, &mut Stats::default())
}

pub(crate) fn min_detecting_threshold_grid_with(
    ws: &mut HbdWorkspace,
    g: &WeightedGraph,
    s: usize,
    grid: &SearchGrid,
    cap: Option<f64>,
    stats: &mut Stats,
) -> Option<(f64, Cycle)> {
    let count = match cap {
        None => grid.len(),
        // number of leading grid values below the cap
        Some(cap) => {
            let (mut lo, mut hi) = (0usize, grid.len());
            while lo < hi {
                let mid = lo + (hi - lo) / 2;
                if grid.value(grid.i_min() + mid as i32) < cap {
                    lo = mid + 1;
                } else {
                    hi = mid;
                }
            }
            lo
        }
    };
    first_detecting(count, |i| {
        let det = hbd_with(ws, g, s, grid.value(grid.i_min() + i as i32));
        *stats += det.stats();
        det.into_cycle()
    })
    .map(|(i, c)| (grid.value(grid.i_min() + i as i32), c))
}

/// Exact minimal detecting threshold for arbitrary weights.
///
/// Below the minimum every run is non-detecting, so HBD's `d` values are
/// the true distances and the run only changes when `t` crosses some
/// `dist(s,u) + w_uv`. The minimum is therefore one of those values and is
/// found by bisection over them.
pub fn min_detecting_threshold_exact(g: &WeightedGraph, s: usize) -> Option<(f64, Cycle)> {
    let (dist, _, _) = lex_shortest_paths(g, s);
    let mut candidates: Vec<f64> = Vec::new();
    for e in g.edges() {
        for a in [e.u, e.v] {
            if dist[a].is_finite() {
                candidates.push(dist[a] + e.weight);
            }
        }
    }
    candidates.sort_by(f64::total_cmp);
    candidates.dedup();
    let mut ws = HbdWorkspace::new(g.n());
    first_detecting(candidates.len(), |i| hbd_with(&mut ws, g, s, candidates[i]).into_cycle()).map(|(i, c)| (candidates[i], c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::WeightMode;

    fn triangle(w: f64) -> WeightedGraph {
        WeightedGraph::new(3, &[(0, 1, w), (1, 2, w), (2, 0, w)], WeightMode::Integer { max: w as u64 }).unwrap()
    }

    #[test]
    fn triangle_thresholds() {
        let g = triangle(1.0);
        let at1 = hbd(&g, 0, 1.0);
        assert!(!at1.detected());
        assert_eq!((at1.visited, at1.relaxed), (3, 2));
        let at2 = hbd(&g, 0, 2.0);
        assert_eq!(at2.cycle().unwrap().weight(), 3.0);
    }

    #[test]
    fn tree_never_detects() {
        let g = WeightedGraph::new(4, &[(0, 1, 1.0), (1, 2, 2.0), (1, 3, 3.0)], WeightMode::Integer { max: 3 }).unwrap();
        for s in 0..4 {
            assert!(!hbd(&g, s, g.total_weight()).detected());
        }
        assert_eq!(min_detecting_threshold_int(&g, 0, 3, 12), None);
    }

    #[test]
    fn int_search() {
        let (t, c) = min_detecting_threshold_int(&triangle(1.0), 0, 3, 9).unwrap();
        assert_eq!((t, c.weight()), (3, 3.0));
        let (t, c) = min_detecting_threshold_int(&triangle(2.0), 0, 3, 18).unwrap();
        assert_eq!((t, c.weight()), (4, 6.0));
    }

    #[test]
    fn grid_search() {
        let g = triangle(1.0);
        let grid = SearchGrid::new(2.0, 0, 3).unwrap();
        let (t, c) = min_detecting_threshold_grid(&g, 0, &grid, None).unwrap();
        assert_eq!((t, c.weight()), (2.0, 3.0));
        assert_eq!(min_detecting_threshold_grid(&g, 0, &grid, Some(2.0)), None);
        let low = SearchGrid::new(2.0, -4, -1).unwrap();
        assert_eq!(min_detecting_threshold_grid(&g, 0, &low, None), None);
    }

    #[test]
    fn exact_threshold() {
        let (t, c) = min_detecting_threshold_exact(&triangle(1.0), 0).unwrap();
        assert_eq!((t, c.weight()), (2.0, 3.0));
    }

    #[test]
    fn zero_threshold_explores_zero_edges() {
        let g = WeightedGraph::new(3, &[(0, 1, 0.0), (1, 2, 0.0), (2, 0, 0.0)], WeightMode::Real).unwrap();
        assert_eq!(hbd(&g, 0, 0.0).cycle().unwrap().weight(), 0.0);
    }
}
