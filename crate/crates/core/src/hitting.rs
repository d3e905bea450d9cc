//! Deterministic hitting sets over r-nearest sets, and the open balls
//! `B_S(v) = { u : dist(v,u) < dist(v,S) }` they induce.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap, HashMap, HashSet};

use rayon::prelude::*;

use crate::error::{GirthError, Result};
use crate::estimate::Stats;
use crate::exact::Key;
use crate::graph::WeightedGraph;

/// `r` vertices closest to `center` (or its whole component), with exact
/// distances, in non-decreasing distance order.
#[derive(Debug, Clone, PartialEq)]
pub struct NearestSet {
    pub center: usize,
    pub members: Vec<(usize, f64)>,
}

impl NearestSet {
    pub fn contains(&self, v: usize) -> bool {
        self.members.iter().any(|&(x, _)| x == v)
    }
}

#[derive(Debug, Clone)]
pub struct HittingStructure {
    pub r: usize,
    /// The hitting set, sorted by id.
    pub s: Vec<usize>,
    pub in_s: Vec<bool>,
    /// `dist(v, S)` for every vertex.
    pub dist_to_s: Vec<f64>,
    /// The open ball of every vertex, members with their distances.
    pub balls: Vec<Vec<(usize, f64)>>,
    pub nearest: Vec<NearestSet>,
    pub stats: Stats,
}

impl HittingStructure {
    pub fn ball_vertices(&self, v: usize) -> Vec<usize> {
        self.balls[v].iter().map(|&(u, _)| u).collect()
    }

    /// `|S|` upper bound guaranteed by the greedy rule.
    pub fn size_bound(n: usize, r: usize) -> usize {
        if n == 0 {
            return 0;
        }
        ((n as f64 / r as f64) * ((n as f64).ln() + 1.0)).ceil() as usize
    }

    /// Histogram of ball sizes: entry `k` counts the vertices whose ball has
    /// `k` members.
    pub fn ball_histogram(&self) -> Vec<usize> {
        let mut h = vec![0; self.r.max(1)];
        for b in &self.balls {
            if b.len() >= h.len() {
                h.resize(b.len() + 1, 0);
            }
            h[b.len()] += 1;
        }
        h
    }
}

/// `floor(n^(1/3))`, at least 1.
pub fn default_r(n: usize) -> usize {
    let mut r = (n as f64).cbrt().round() as usize;
    while r > 0 && r * r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r.max(1)
}

pub fn r_nearest_set(g: &WeightedGraph, v: usize, r: usize) -> NearestSet {
    r_nearest_set_counted(g, v, r).0
}

/// Truncated best-first search: settles at most `r` vertices and reads at
/// most the `r` lightest entries of each settled vertex's sorted list.
///
/// Reading only `r` entries is enough: if the shortest path to the next
/// vertex uses an edge `xy` beyond `x`'s `r`-th entry, then `x`'s `r`
/// lightest neighbours are all at distance at most `dist(y)`, and fewer than
/// `r` of them are settled, so one of them is settled next at that distance.
pub(crate) fn r_nearest_set_counted(g: &WeightedGraph, v: usize, r: usize) -> (NearestSet, Stats) {
    let mut stats = Stats::default();
    let mut tentative: HashMap<usize, f64> = HashMap::new();
    let mut settled: HashSet<usize> = HashSet::new();
    let mut members = Vec::with_capacity(r);
    let mut heap = BinaryHeap::new();
    tentative.insert(v, 0.0);
    heap.push(Reverse((Key(0.0), v)));
    while let Some(Reverse((Key(d), u))) = heap.pop() {
        if members.len() >= r {
            break;
        }
        if settled.contains(&u) || tentative[&u] != d {
            continue;
        }
        settled.insert(u);
        members.push((u, d));
        stats.nearest_settled += 1;
        if members.len() == r {
            break;
        }
        for a in g.sorted_adj(u).iter().take(r) {
            stats.adjacency_reads += 1;
            if settled.contains(&a.to) {
                continue;
            }
            let nd = d + a.weight;
            let better = tentative.get(&a.to).is_none_or(|&old| nd < old);
            if better {
                tentative.insert(a.to, nd);
                heap.push(Reverse((Key(nd), a.to)));
            }
        }
    }
    (NearestSet { center: v, members }, stats)
}

/// Greedy hitting set: repeatedly takes the element contained in the most
/// sets not yet hit, ties by smallest id. Returns the chosen ids sorted.
pub fn greedy_hitting_set(sets: &[Vec<usize>], universe: usize) -> Result<Vec<usize>> {
    let mut containing: Vec<Vec<usize>> = vec![Vec::new(); universe];
    for (i, set) in sets.iter().enumerate() {
        if set.is_empty() {
            return Err(GirthError::EmptySet { index: i });
        }
        let mut distinct = set.clone();
        distinct.sort_unstable();
        distinct.dedup();
        for &x in &distinct {
            if x >= universe {
                return Err(GirthError::InvalidParameter(format!("element {x} outside universe of size {universe}")));
            }
            containing[x].push(i);
        }
    }
    let mut count: Vec<usize> = containing.iter().map(Vec::len).collect();
    let top = count.iter().copied().max().unwrap_or(0);
    let mut buckets: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); top + 1];
    for (x, &c) in count.iter().enumerate() {
        if c > 0 {
            buckets[c].insert(x);
        }
    }
    let mut hit = vec![false; sets.len()];
    let mut remaining = sets.len();
    let mut level = top;
    let mut chosen = Vec::new();
    while remaining > 0 {
        while buckets[level].is_empty() {
            level -= 1;
        }
        let x = *buckets[level].iter().next().unwrap();
        buckets[level].remove(&x);
        count[x] = 0;
        chosen.push(x);
        for &i in &containing[x] {
            if hit[i] {
                continue;
            }
            hit[i] = true;
            remaining -= 1;
            for &y in &sets[i] {
                if count[y] > 0 && buckets[count[y]].remove(&y) {
                    count[y] -= 1;
                    if count[y] > 0 {
                        buckets[count[y]].insert(y);
                    }
                }
            }
        }
    }
    chosen.sort_unstable();
    Ok(chosen)
}

/// Computes every `N_r(v)`, a greedy hitting set `S` of them, and the open
/// balls `B_S(v)`, each read off `N_r(v)` by keeping the members strictly
/// closer than the first `S` member.
pub fn build_hitting_structure(g: &WeightedGraph, r: usize) -> Result<HittingStructure> {
    if r == 0 {
        return Err(GirthError::InvalidParameter("r must be positive".into()));
    }
    let n = g.n();
    let (nearest, stats): (Vec<NearestSet>, Vec<Stats>) = (0..n).into_par_iter().map(|v| r_nearest_set_counted(g, v, r)).unzip();
    let sets: Vec<Vec<usize>> = nearest.iter().map(|ns| ns.members.iter().map(|&(x, _)| x).collect()).collect();
    let s = greedy_hitting_set(&sets, n)?;
    let mut in_s = vec![false; n];
    for &x in &s {
        in_s[x] = true;
    }
    let mut dist_to_s = vec![0.0; n];
    let mut balls = Vec::with_capacity(n);
    for ns in &nearest {
        let cut = ns.members.iter().position(|&(x, _)| in_s[x]).expect("hitting set misses a nearest set");
        let d = ns.members[cut].1;
        dist_to_s[ns.center] = d;
        balls.push(ns.members[..cut].iter().copied().filter(|&(_, dx)| dx < d).collect());
    }
    let stats = stats.into_iter().sum();
    Ok(HittingStructure { r, s, in_s, dist_to_s, balls, nearest, stats })
}
