use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign};

use crate::cycle::Cycle;

/// Operation counters collected by the algorithms.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct Stats {
    /// Number of truncated-Dijkstra (HBD) runs.
    pub hbd_calls: u64,
    /// Vertices settled across all HBD runs.
    pub hbd_visited: u64,
    /// Edges relaxed (tree edges created) across all HBD runs.
    pub hbd_relaxed: u64,
    /// Adjacency entries inspected across all HBD runs.
    pub hbd_scanned: u64,
    /// Vertices settled by the r-nearest-set searches.
    pub nearest_settled: u64,
    /// Adjacency entries read by the r-nearest-set searches and the prefix
    /// subgraph construction.
    pub adjacency_reads: u64,
    /// Vertex pairs probed while building induced subgraphs.
    pub pair_probes: u64,
    /// Edges touched by passes that are linear in `m`.
    pub edge_scans: u64,
    /// Invocations of the small-graph girth subroutine.
    pub subroutine_calls: u64,
}

impl Add for Stats {
    type Output = Stats;

    fn add(mut self, o: Stats) -> Stats {
        self += o;
        self
    }
}

impl AddAssign for Stats {
    fn add_assign(&mut self, o: Stats) {
        self.hbd_calls += o.hbd_calls;
        self.hbd_visited += o.hbd_visited;
        self.hbd_relaxed += o.hbd_relaxed;
        self.hbd_scanned += o.hbd_scanned;
        self.nearest_settled += o.nearest_settled;
        self.adjacency_reads += o.adjacency_reads;
        self.pair_probes += o.pair_probes;
        self.edge_scans += o.edge_scans;
        self.subroutine_calls += o.subroutine_calls;
    }
}

impl Sum for Stats {
    fn sum<I: Iterator<Item = Stats>>(iter: I) -> Stats {
        iter.fold(Stats::default(), Add::add)
    }
}

/// Which part of an algorithm produced the returned cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    Oracle,
    /// Threshold search from a hitting-set vertex on the whole graph.
    HittingSet,
    /// Search restricted to the open ball of a vertex outside the hitting set.
    Ball,
    /// Best cycle of the bootstrap estimate.
    Bootstrap,
    Sweep,
    PolyBall,
    PolyIntraTree,
    PolyTwoTree,
    PolyQuotient,
    ZeroForest,
    ZeroIntra,
    ZeroTwoComponent,
    PrefixApprox,
    FourCycle,
    NoCycle,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Branch::Oracle => "oracle",
            Branch::HittingSet => "hitting-set",
            Branch::Ball => "ball",
            Branch::Bootstrap => "bootstrap",
            Branch::Sweep => "sweep",
            Branch::PolyBall => "step1-ball",
            Branch::PolyIntraTree => "step3-intra-tree",
            Branch::PolyTwoTree => "step4-two-tree",
            Branch::PolyQuotient => "step5-quotient",
            Branch::ZeroForest => "zero-forest",
            Branch::ZeroIntra => "zero-intra",
            Branch::ZeroTwoComponent => "zero-two-component",
            Branch::PrefixApprox => "prefix-approx",
            Branch::FourCycle => "four-cycle",
            Branch::NoCycle => "none",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Outcome {
    Cycle(Cycle),
    Acyclic,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GirthEstimate {
    pub outcome: Outcome,
    /// Approximation factor guaranteed by the producing algorithm.
    pub declared_factor: f64,
    pub branch: Branch,
    pub stats: Stats,
}

impl GirthEstimate {
    pub(crate) fn from_candidate(best: Option<(Cycle, Branch)>, declared_factor: f64, stats: Stats) -> Self {
        match best {
            Some((c, branch)) => GirthEstimate { outcome: Outcome::Cycle(c), declared_factor, branch, stats },
            None => GirthEstimate { outcome: Outcome::Acyclic, declared_factor, branch: Branch::NoCycle, stats },
        }
    }

    pub fn cycle(&self) -> Option<&Cycle> {
        match &self.outcome {
            Outcome::Cycle(c) => Some(c),
            Outcome::Acyclic => None,
        }
    }

    pub fn weight(&self) -> Option<f64> {
        self.cycle().map(Cycle::weight)
    }

    pub fn is_acyclic(&self) -> bool {
        matches!(self.outcome, Outcome::Acyclic)
    }
}

/// Keeps the lightest labelled candidate (ties by canonical vertex order).
pub(crate) fn better(a: Option<(Cycle, Branch)>, b: Option<(Cycle, Branch)>) -> Option<(Cycle, Branch)> {
    match (a, b) {
        (Some(a), Some(b)) => Some(if b.0.cmp_key(&a.0).is_lt() { b } else { a }),
        (a, b) => a.or(b),
    }
}
