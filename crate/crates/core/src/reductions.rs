//! Weight-domain reductions: scaling, rounding up to integers, and removal
//! of zero-weight edges by contracting the zero-weight forest.

use std::collections::{HashMap, VecDeque};

use crate::cycle::{tree_path, Cycle};
use crate::error::{GirthError, Result};
use crate::estimate::{better, Branch, GirthEstimate, Stats};
use crate::graph::{UnionFind, WeightMode, WeightedGraph, EXACT_INTEGER_LIMIT};

/// Multiplies every weight by `factor`. Integer graphs stay integral when
/// `factor` is a positive integer; otherwise the result is real-weighted.
pub fn scale_weights(g: &WeightedGraph, factor: f64) -> Result<WeightedGraph> {
    if !(factor > 0.0 && factor.is_finite()) {
        return Err(GirthError::InvalidFactor(factor));
    }
    let mode = match g.mode() {
        WeightMode::Integer { max } if factor.fract() == 0.0 => {
            let scaled = max as f64 * factor;
            if scaled * (g.n().max(1) as f64) > EXACT_INTEGER_LIMIT as f64 {
                return Err(GirthError::Overflow { max: scaled as u64, n: g.n() });
            }
            WeightMode::Integer { max: scaled as u64 }
        }
        _ => WeightMode::Real,
    };
    g.reweighted(|w| w * factor, mode)
}

/// Rounds every weight up, giving an integer graph whose girth exceeds the
/// original by at most `n`.
pub fn ceil_weights(g: &WeightedGraph) -> Result<WeightedGraph> {
    if let Some(e) = g.edges().iter().find(|e| e.weight == 0.0) {
        return Err(GirthError::ZeroWeight { u: e.u, v: e.v });
    }
    if g.mode().is_integer() {
        return Ok(g.clone());
    }
    let max = g.edges().iter().map(|e| e.weight.ceil()).fold(1.0, f64::max);
    g.reweighted(f64::ceil, WeightMode::Integer { max: max as u64 })
}

/// Result of splitting a non-negative graph along its zero-weight edges.
#[derive(Debug, Clone)]
pub struct ZeroReduction {
    /// A weight-0 cycle, present when the zero-weight edges are not a forest.
    /// All other fields are empty in that case.
    pub zero_forest_cycle: Option<Cycle>,
    /// Vertices of each zero-weight component, ordered by minimum vertex.
    pub components: Vec<Vec<usize>>,
    /// Component index of every vertex; doubles as the contracted vertex id.
    pub component_of: Vec<usize>,
    /// Lightest cycle made of one positive edge and a zero-weight path.
    pub best_intra: Option<Cycle>,
    /// Lightest cycle through exactly two components.
    pub best_two_component: Option<Cycle>,
    /// Graph with one vertex per component and the lightest edge between
    /// each pair of components.
    pub contracted: WeightedGraph,
    /// Original edge id behind each contracted edge.
    pub witness: Vec<usize>,
    parent: Vec<usize>,
    depth: Vec<usize>,
}

const NONE: usize = usize::MAX;

impl ZeroReduction {
    /// Vertex path `a -> b` inside one zero-weight component.
    fn zero_path(&self, a: usize, b: usize) -> Vec<usize> {
        tree_path(|x| (self.parent[x] != NONE).then_some(self.parent[x]), |x| self.depth[x], a, b)
            .expect("endpoints lie in the same zero-weight component")
    }
}

pub fn zero_weight_reduce(g: &WeightedGraph) -> ZeroReduction {
    let n = g.n();
    let mut uf = UnionFind::new(n);
    let mut zero_adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for e in g.edges().iter().filter(|e| e.weight == 0.0) {
        if !uf.union(e.u, e.v) {
            let path = bfs_path(&zero_adj, e.u, e.v);
            let cycle = Cycle::from_vertices(g, &path).expect("forest path plus a closing edge is a simple cycle");
            return ZeroReduction {
                zero_forest_cycle: Some(cycle),
                components: Vec::new(),
                component_of: Vec::new(),
                best_intra: None,
                best_two_component: None,
                contracted: WeightedGraph::new(0, &[], g.mode()).expect("empty graph"),
                witness: Vec::new(),
                parent: Vec::new(),
                depth: Vec::new(),
            };
        }
        zero_adj[e.u].push(e.v);
        zero_adj[e.v].push(e.u);
    }

    // Root every zero-weight tree at its minimum vertex.
    let mut component_of = vec![NONE; n];
    let mut components = Vec::new();
    let mut parent = vec![NONE; n];
    let mut depth = vec![0; n];
    for root in 0..n {
        if component_of[root] != NONE {
            continue;
        }
        let id = components.len();
        let mut members = vec![root];
        component_of[root] = id;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for &y in &zero_adj[x] {
                if component_of[y] == NONE {
                    component_of[y] = id;
                    parent[y] = x;
                    depth[y] = depth[x] + 1;
                    members.push(y);
                    queue.push_back(y);
                }
            }
        }
        members.sort_unstable();
        components.push(members);
    }

    let mut zr = ZeroReduction {
        zero_forest_cycle: None,
        components,
        component_of,
        best_intra: None,
        best_two_component: None,
        contracted: WeightedGraph::new(0, &[], g.mode()).expect("empty graph"),
        witness: Vec::new(),
        parent,
        depth,
    };

    // Two lightest edges per component pair, in edge-id order on ties.
    let mut pairs: HashMap<(usize, usize), [Option<usize>; 2]> = HashMap::new();
    let mut best_intra: Option<usize> = None;
    for (id, e) in g.edges().iter().enumerate().filter(|(_, e)| e.weight > 0.0) {
        let (cu, cv) = (zr.component_of[e.u], zr.component_of[e.v]);
        if cu == cv {
            if best_intra.is_none_or(|b| e.weight < g.edge(b).weight) {
                best_intra = Some(id);
            }
            continue;
        }
        let slot = pairs.entry((cu.min(cv), cu.max(cv))).or_insert([None, None]);
        let lighter = |a: Option<usize>| a.is_none_or(|a| e.weight < g.edge(a).weight);
        if lighter(slot[0]) {
            slot[1] = slot[0];
            slot[0] = Some(id);
        } else if lighter(slot[1]) {
            slot[1] = Some(id);
        }
    }

    if let Some(id) = best_intra {
        let e = g.edge(id);
        zr.best_intra = Cycle::from_vertices(g, &zr.zero_path(e.v, e.u)).ok();
    }

    let mut keys: Vec<(usize, usize)> = pairs.keys().copied().collect();
    keys.sort_unstable();
    let mut contracted_edges = Vec::with_capacity(keys.len());
    let mut best_two: Option<Cycle> = None;
    for key in keys {
        let [first, second] = pairs[&key];
        let first = first.expect("every bucket holds an edge");
        contracted_edges.push((key.0, key.1, g.edge(first).weight));
        zr.witness.push(first);
        if let Some(second) = second {
            let (a, b) = oriented(g, first, &zr.component_of, key.0);
            let (c, d) = oriented(g, second, &zr.component_of, key.0);
            // a..c inside the first component, then d..b inside the second
            let mut walk = zr.zero_path(c, a);
            walk.extend(zr.zero_path(b, d));
            let cycle = Cycle::from_vertices(g, &walk).expect("two edges and disjoint zero paths form a simple cycle");
            best_two = crate::cycle::lighter(best_two, Some(cycle));
        }
    }
    zr.best_two_component = best_two;
    zr.contracted =
        WeightedGraph::new(zr.components.len(), &contracted_edges, g.mode()).expect("contracted edges are simple with positive weights");
    zr
}

/// Endpoints of edge `id` ordered as (end in component `first`, other end).
fn oriented(g: &WeightedGraph, id: usize, component_of: &[usize], first: usize) -> (usize, usize) {
    let e = g.edge(id);
    if component_of[e.u] == first {
        (e.u, e.v)
    } else {
        (e.v, e.u)
    }
}

fn bfs_path(adj: &[Vec<usize>], from: usize, to: usize) -> Vec<usize> {
    let mut prev: HashMap<usize, usize> = HashMap::from([(from, from)]);
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        if x == to {
            break;
        }
        for &y in &adj[x] {
            if let std::collections::hash_map::Entry::Vacant(slot) = prev.entry(y) {
                slot.insert(x);
                queue.push_back(y);
            }
        }
    }
    let mut path = vec![to];
    while *path.last().unwrap() != from {
        path.push(prev[path.last().unwrap()]);
    }
    path
}

/// Maps a cycle of the contracted graph back to `g`, entering and leaving
/// each component through the witness edges and crossing it along its
/// zero-weight tree. The lifted cycle has exactly the same weight.
pub fn lift_reduced_cycle(g: &WeightedGraph, zr: &ZeroReduction, c: &Cycle) -> Cycle {
    let cs = c.vertices();
    let k = cs.len();
    let hops: Vec<(usize, usize)> = (0..k)
        .map(|i| {
            let (x, y) = (cs[i], cs[(i + 1) % k]);
            let edge = zr.contracted.find_edge(x, y).expect("cycle edge exists in the contracted graph").edge;
            oriented(g, zr.witness[edge], &zr.component_of, x)
        })
        .collect();
    let mut walk = Vec::new();
    for i in 0..k {
        // enter component cs[i] at the far end of the previous hop, leave
        // it at the near end of this hop
        let entry = hops[(i + k - 1) % k].1;
        walk.extend(zr.zero_path(entry, hops[i].0));
    }
    Cycle::from_vertices(g, &walk).expect("lifted cycle visits disjoint components")
}

/// Runs `subroutine` (an `alpha`-approximation for positive weights) on the
/// contracted graph and returns the best of its lifted cycle and the
/// zero-weight candidates. The result is an `alpha`-approximation.
pub fn girth_with_reduction(
    g: &WeightedGraph,
    alpha: f64,
    subroutine: impl FnOnce(&WeightedGraph) -> Result<GirthEstimate>,
) -> Result<GirthEstimate> {
    let zr = zero_weight_reduce(g);
    let mut stats = Stats { edge_scans: g.m() as u64, ..Stats::default() };
    if let Some(c) = zr.zero_forest_cycle {
        return Ok(GirthEstimate::from_candidate(Some((c, Branch::ZeroForest)), alpha, stats));
    }
    let sub = subroutine(&zr.contracted)?;
    stats += sub.stats;
    let lifted = sub.cycle().map(|c| (lift_reduced_cycle(g, &zr, c), sub.branch));
    let best =
        better(better(zr.best_intra.map(|c| (c, Branch::ZeroIntra)), zr.best_two_component.map(|c| (c, Branch::ZeroTwoComponent))), lifted);
    Ok(GirthEstimate::from_candidate(best, alpha, stats))
}

/// True when some edge has weight 0. Reads one adjacency entry per vertex.
pub fn has_zero_weight(g: &WeightedGraph) -> bool {
    (0..g.n()).any(|v| g.sorted_adj(v).first().is_some_and(|a| a.weight == 0.0))
}
