//! Simple cycles, their validation, and extraction from closed walks.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::graph::WeightedGraph;

/// Relative tolerance for the total-weight check on real-weighted graphs.
pub const REAL_TOTAL_TOLERANCE: f64 = 1e-12;

/// A simple cycle `v_0, ..., v_{k-1}` closed by the edge `v_{k-1} v_0`.
///
/// Cycles built by this crate are canonical: `v_0` is the minimum vertex id
/// and `v_1 < v_{k-1}`. `edge_weights[i]` is the weight of `v_i v_{i+1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct Cycle {
    vertices: Vec<usize>,
    edge_weights: Vec<f64>,
    total_weight: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub enum CycleViolation {
    TooShort { k: usize },
    LengthMismatch { vertices: usize, weights: usize },
    VertexOutOfRange { v: usize },
    RepeatedVertex { v: usize },
    MissingEdge { u: usize, v: usize },
    WeightMismatch { u: usize, v: usize, stated: f64, actual: f64 },
    TotalMismatch { stated: f64, sum: f64 },
}

impl fmt::Display for CycleViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CycleViolation::TooShort { k } => write!(f, "k < 3 (k = {k})"),
            CycleViolation::LengthMismatch { vertices, weights } => {
                write!(f, "{vertices} vertices but {weights} edge weights")
            }
            CycleViolation::VertexOutOfRange { v } => write!(f, "vertex {v} out of range"),
            CycleViolation::RepeatedVertex { v } => write!(f, "repeated vertex {v}"),
            CycleViolation::MissingEdge { u, v } => write!(f, "missing edge ({u},{v})"),
            CycleViolation::WeightMismatch { u, v, stated, actual } => {
                write!(f, "edge ({u},{v}) has weight {actual}, stated {stated}")
            }
            CycleViolation::TotalMismatch { stated, sum } => write!(f, "total {stated} but edges sum to {sum}"),
        }
    }
}

impl Cycle {
    /// Builds a canonical cycle from a vertex sequence, reading the weights
    /// from `g`.
    pub fn from_vertices(g: &WeightedGraph, vertices: &[usize]) -> Result<Cycle, Vec<CycleViolation>> {
        let vertices = canonical_order(vertices);
        let k = vertices.len();
        let mut weights = Vec::with_capacity(k);
        let mut violations = structural_violations(g, &vertices);
        if violations.is_empty() {
            for i in 0..k {
                let (u, v) = (vertices[i], vertices[(i + 1) % k]);
                match g.weight(u, v) {
                    Some(w) => weights.push(w),
                    None => violations.push(CycleViolation::MissingEdge { u, v }),
                }
            }
        }
        if !violations.is_empty() {
            return Err(violations);
        }
        let total_weight = weights.iter().sum();
        Ok(Cycle { vertices, edge_weights: weights, total_weight })
    }

    /// Unchecked constructor; pair with [`validate_cycle`].
    pub fn from_parts(vertices: Vec<usize>, edge_weights: Vec<f64>, total_weight: f64) -> Cycle {
        Cycle { vertices, edge_weights, total_weight }
    }

    /// Extracts a simple cycle from a closed walk `w_0, ..., w_{l-1}` (the
    /// closing step `w_{l-1} w_0` is implied).
    ///
    /// Vertices are pushed on a stack; an immediate back-and-forth step pops,
    /// any other revisit closes a simple cycle made of walk edges, so its
    /// weight never exceeds the walk's. Returns `None` when the walk is
    /// tree-like.
    pub fn from_closed_walk(g: &WeightedGraph, walk: &[usize]) -> Option<Cycle> {
        let mut stack: Vec<usize> = Vec::with_capacity(walk.len());
        let mut pos: HashMap<usize, usize> = HashMap::with_capacity(walk.len());
        let steps = walk.iter().copied().chain(walk.first().copied());
        for v in steps {
            if stack.last() == Some(&v) {
                continue;
            }
            if let Some(&p) = pos.get(&v) {
                if p + 2 == stack.len() {
                    let top = stack.pop().unwrap();
                    pos.remove(&top);
                    continue;
                }
                return Cycle::from_vertices(g, &stack[p..]).ok();
            }
            pos.insert(v, stack.len());
            stack.push(v);
        }
        None
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn edge_weights(&self) -> &[f64] {
        &self.edge_weights
    }

    pub fn weight(&self) -> f64 {
        self.total_weight
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Maps vertex ids through `map` (e.g. from an induced subgraph back to
    /// its host) and re-reads the weights from `host`.
    pub fn relabel(&self, host: &WeightedGraph, map: &[usize]) -> Cycle {
        let mapped: Vec<usize> = self.vertices.iter().map(|&v| map[v]).collect();
        Cycle::from_vertices(host, &mapped).expect("relabelled cycle must exist in the host graph")
    }

    /// Total order used for deterministic minimum selection: weight, then
    /// the canonical vertex sequence.
    pub fn cmp_key(&self, other: &Cycle) -> Ordering {
        self.total_weight.total_cmp(&other.total_weight).then_with(|| self.vertices.cmp(&other.vertices))
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", vs.join(" "))
    }
}

pub(crate) fn canonical_order(vertices: &[usize]) -> Vec<usize> {
    let k = vertices.len();
    let Some((start, _)) = vertices.iter().enumerate().min_by_key(|&(_, v)| v) else {
        return Vec::new();
    };
    let mut out: Vec<usize> = (0..k).map(|i| vertices[(start + i) % k]).collect();
    if k > 2 && out[k - 1] < out[1] {
        out[1..].reverse();
    }
    out
}

fn structural_violations(g: &WeightedGraph, vertices: &[usize]) -> Vec<CycleViolation> {
    let mut out = Vec::new();
    if vertices.len() < 3 {
        out.push(CycleViolation::TooShort { k: vertices.len() });
    }
    let mut seen = std::collections::HashSet::new();
    for &v in vertices {
        if v >= g.n() {
            out.push(CycleViolation::VertexOutOfRange { v });
        } else if !seen.insert(v) {
            out.push(CycleViolation::RepeatedVertex { v });
        }
    }
    out
}

/// Checks every cycle invariant against `g`.
pub fn validate_cycle(g: &WeightedGraph, c: &Cycle) -> Result<(), Vec<CycleViolation>> {
    let k = c.vertices.len();
    let mut out = structural_violations(g, &c.vertices);
    if c.edge_weights.len() != k {
        out.push(CycleViolation::LengthMismatch { vertices: k, weights: c.edge_weights.len() });
    }
    if out.iter().any(|v| matches!(v, CycleViolation::VertexOutOfRange { .. })) {
        return Err(out);
    }
    if k >= 2 {
        for i in 0..k {
            let (u, v) = (c.vertices[i], c.vertices[(i + 1) % k]);
            match g.weight(u, v) {
                None => out.push(CycleViolation::MissingEdge { u, v }),
                Some(actual) => {
                    if let Some(&stated) = c.edge_weights.get(i) {
                        if stated != actual {
                            out.push(CycleViolation::WeightMismatch { u, v, stated, actual });
                        }
                    }
                }
            }
        }
    }
    let sum: f64 = c.edge_weights.iter().sum();
    let ok = if g.mode().is_integer() {
        sum == c.total_weight
    } else {
        (sum - c.total_weight).abs() <= REAL_TOTAL_TOLERANCE * sum.abs().max(c.total_weight.abs())
    };
    if !ok {
        out.push(CycleViolation::TotalMismatch { stated: c.total_weight, sum });
    }
    if out.is_empty() {
        Ok(())
    } else {
        Err(out)
    }
}

/// Picks the lighter cycle under [`Cycle::cmp_key`].
pub(crate) fn lighter(a: Option<Cycle>, b: Option<Cycle>) -> Option<Cycle> {
    match (a, b) {
        (Some(a), Some(b)) => Some(if b.cmp_key(&a) == Ordering::Less { b } else { a }),
        (a, b) => a.or(b),
    }
}

/// Vertex path `a -> lca -> b` in a rooted forest given by parent pointers
/// and depths. Returns `None` when `a` and `b` lie in different trees.
pub(crate) fn tree_path(parent: impl Fn(usize) -> Option<usize>, depth: impl Fn(usize) -> usize, a: usize, b: usize) -> Option<Vec<usize>> {
    let (mut x, mut y) = (a, b);
    let mut left = vec![x];
    let mut right = vec![y];
    while depth(x) > depth(y) {
        x = parent(x)?;
        left.push(x);
    }
    while depth(y) > depth(x) {
        y = parent(y)?;
        right.push(y);
    }
    while x != y {
        x = parent(x)?;
        y = parent(y)?;
        left.push(x);
        right.push(y);
    }
    right.pop();
    left.extend(right.into_iter().rev());
    Some(left)
}
