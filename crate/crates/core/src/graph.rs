//! Weighted undirected graphs with two adjacency views.
//!
//! Every vertex keeps two copies of its adjacency list: one sorted by
//! non-decreasing edge weight (ties by neighbour id), used by the truncated
//! searches, and one sorted by neighbour id, used for `O(log n)` edge lookup.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{GirthError, Result};

/// Largest integer such that every sum of at most `n` weights stays exact
/// in binary64 arithmetic.
pub const EXACT_INTEGER_LIMIT: u64 = 1 << 53;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightMode {
    /// Integer weights in `1..=max`.
    Integer { max: u64 },
    /// Finite non-negative reals.
    Real,
}

impl WeightMode {
    pub fn is_integer(self) -> bool {
        matches!(self, WeightMode::Integer { .. })
    }

    pub fn max_weight(self) -> Option<u64> {
        match self {
            WeightMode::Integer { max } => Some(max),
            WeightMode::Real => None,
        }
    }
}

impl fmt::Display for WeightMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightMode::Integer { max } => write!(f, "int(M={max})"),
            WeightMode::Real => f.write_str("real"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub weight: f64,
}

/// One adjacency entry: the neighbour, the edge weight and the edge index.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Adj {
    pub to: usize,
    pub weight: f64,
    pub edge: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct WeightedGraph {
    n: usize,
    edges: Vec<Edge>,
    offsets: Vec<usize>,
    sorted: Vec<Adj>,
    ordered: Vec<Adj>,
    mode: WeightMode,
}

impl WeightedGraph {
    /// Builds a simple graph on vertices `0..n`.
    ///
    /// Edges are stored with `u < v` in input order. Fails on self-loops,
    /// parallel edges, out-of-range ids and weights invalid for `mode`.
    pub fn new(n: usize, edges: &[(usize, usize, f64)], mode: WeightMode) -> Result<Self> {
        if let WeightMode::Integer { max } = mode {
            if max == 0 || max.checked_mul(n.max(1) as u64).is_none_or(|t| t > EXACT_INTEGER_LIMIT) {
                return Err(GirthError::Overflow { max, n });
            }
        }
        let mut seen = HashSet::with_capacity(edges.len());
        let mut stored = Vec::with_capacity(edges.len());
        for &(u, v, w) in edges {
            if u >= n || v >= n {
                return Err(GirthError::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GirthError::SelfLoop { u, v });
            }
            if !w.is_finite() || w < 0.0 {
                return Err(GirthError::InvalidWeight { u, v, w });
            }
            if let WeightMode::Integer { max } = mode {
                if w.fract() != 0.0 || w < 1.0 || w > max as f64 {
                    return Err(GirthError::WeightOutOfRange { u, v, w, max });
                }
            }
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            if !seen.insert((a, b)) {
                return Err(GirthError::DuplicateEdge { u, v });
            }
            stored.push(Edge { u: a, v: b, weight: w });
        }
        Ok(Self::from_checked(n, stored, mode))
    }

    fn from_checked(n: usize, edges: Vec<Edge>, mode: WeightMode) -> Self {
        let mut degree = vec![0usize; n];
        for e in &edges {
            degree[e.u] += 1;
            degree[e.v] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut fill = offsets[..n].to_vec();
        let mut ordered = vec![Adj { to: 0, weight: 0.0, edge: 0 }; 2 * edges.len()];
        for (id, e) in edges.iter().enumerate() {
            ordered[fill[e.u]] = Adj { to: e.v, weight: e.weight, edge: id };
            fill[e.u] += 1;
            ordered[fill[e.v]] = Adj { to: e.u, weight: e.weight, edge: id };
            fill[e.v] += 1;
        }
        let mut sorted = ordered.clone();
        for v in 0..n {
            let range = offsets[v]..offsets[v + 1];
            ordered[range.clone()].sort_unstable_by_key(|a| a.to);
            sorted[range].sort_unstable_by(|a, b| a.weight.total_cmp(&b.weight).then(a.to.cmp(&b.to)));
        }
        WeightedGraph { n, edges, offsets, sorted, ordered, mode }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn mode(&self) -> WeightMode {
        self.mode
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> Edge {
        self.edges[id]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    /// Adjacency of `v` by non-decreasing weight, ties by neighbour id.
    pub fn sorted_adj(&self, v: usize) -> &[Adj] {
        &self.sorted[self.offsets[v]..self.offsets[v + 1]]
    }

    /// Adjacency of `v` by increasing neighbour id.
    pub fn ordered_adj(&self, v: usize) -> &[Adj] {
        &self.ordered[self.offsets[v]..self.offsets[v + 1]]
    }

    /// Binary search for the edge `uv` in the ordered list of `u`.
    pub fn find_edge(&self, u: usize, v: usize) -> Option<&Adj> {
        if u >= self.n {
            return None;
        }
        let adj = self.ordered_adj(u);
        adj.binary_search_by_key(&v, |a| a.to).ok().map(|i| &adj[i])
    }

    pub fn weight(&self, u: usize, v: usize) -> Option<f64> {
        self.find_edge(u, v).map(|a| a.weight)
    }

    pub fn total_weight(&self) -> f64 {
        self.edges.iter().map(|e| e.weight).sum()
    }

    pub fn min_weight(&self) -> Option<f64> {
        self.edges.iter().map(|e| e.weight).min_by(f64::total_cmp)
    }

    pub fn edge_triples(&self) -> Vec<(usize, usize, f64)> {
        self.edges.iter().map(|e| (e.u, e.v, e.weight)).collect()
    }

    /// Same structure, different weights (`weights[i]` for edge `i`).
    pub(crate) fn reweighted(&self, weights: impl Fn(f64) -> f64, mode: WeightMode) -> Result<Self> {
        let triples: Vec<_> = self.edges.iter().map(|e| (e.u, e.v, weights(e.weight))).collect();
        WeightedGraph::new(self.n, &triples, mode)
    }

    /// Subgraph induced by `vertices`, relabelled in increasing id order.
    ///
    /// Returns the subgraph and the map from new ids to original ids. Each
    /// pair is resolved with one binary search in the ordered adjacency list,
    /// so the cost is `O(|U|^2 log n)` regardless of the degrees.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<(WeightedGraph, Vec<usize>)> {
        let mut map: Vec<usize> = vertices.to_vec();
        map.sort_unstable();
        map.dedup();
        if let Some(&bad) = map.iter().find(|&&v| v >= self.n) {
            return Err(GirthError::VertexOutOfRange { u: bad, v: bad, n: self.n });
        }
        let mut edges = Vec::new();
        for (i, &x) in map.iter().enumerate() {
            for (j, &y) in map.iter().enumerate().skip(i + 1) {
                if let Some(a) = self.find_edge(x, y) {
                    edges.push(Edge { u: i, v: j, weight: a.weight });
                }
            }
        }
        Ok((WeightedGraph::from_checked(map.len(), edges, self.mode), map))
    }

    /// Connected-component label of every vertex (labels by first vertex).
    pub fn components(&self) -> Vec<usize> {
        let mut uf = UnionFind::new(self.n);
        for e in &self.edges {
            uf.union(e.u, e.v);
        }
        (0..self.n).map(|v| uf.find(v)).collect()
    }

    pub fn is_forest(&self) -> bool {
        let mut uf = UnionFind::new(self.n);
        self.edges.iter().all(|e| uf.union(e.u, e.v))
    }

    /// Parses the edge-list text format: a header `n m mode` followed by `m`
    /// lines `u v w`; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines =
            text.lines().enumerate().map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim())).filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines.next().ok_or(GirthError::Parse { line: 0, message: "missing header".into() })?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(GirthError::Parse { line: hline, message: "header must be `n m mode`".into() });
        }
        let n: usize = parse_field(fields[0], hline)?;
        let m: usize = parse_field(fields[1], hline)?;
        let integer = match fields[2] {
            "int" => true,
            "real" => false,
            other => return Err(GirthError::Parse { line: hline, message: format!("unknown mode `{other}`") }),
        };
        let mut edges = Vec::with_capacity(m);
        for (line, l) in lines {
            let f: Vec<&str> = l.split_whitespace().collect();
            if f.len() != 3 {
                return Err(GirthError::Parse { line, message: "edge line must be `u v w`".into() });
            }
            edges.push((parse_field::<usize>(f[0], line)?, parse_field::<usize>(f[1], line)?, parse_field::<f64>(f[2], line)?));
        }
        if edges.len() != m {
            return Err(GirthError::Parse { line: hline, message: format!("header declares {m} edges, found {}", edges.len()) });
        }
        let mode = if integer {
            let max = edges.iter().map(|e| e.2).fold(1.0, f64::max);
            WeightMode::Integer { max: max as u64 }
        } else {
            WeightMode::Real
        };
        WeightedGraph::new(n, &edges, mode)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mode = if self.mode.is_integer() { "int" } else { "real" };
        out.push_str(&format!("{} {} {}\n", self.n, self.m(), mode));
        for e in &self.edges {
            if self.mode.is_integer() {
                out.push_str(&format!("{} {} {}\n", e.u, e.v, e.weight as u64));
            } else {
                out.push_str(&format!("{} {} {}\n", e.u, e.v, e.weight));
            }
        }
        out
    }
}

fn parse_field<T: FromStr>(s: &str, line: usize) -> Result<T> {
    s.parse().map_err(|_| GirthError::Parse { line, message: format!("cannot parse `{s}`") })
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already connected. The smaller
    /// root wins, so labels are the minimum vertex of each component.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}
