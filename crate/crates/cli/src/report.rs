//! Line-delimited run reports. Every line is `kind key=value ...` with a
//! fixed field order, so reports diff cleanly and parse with `split`.

use std::fmt::Write;

use girth_core::{GirthEstimate, Stats, WeightMode, WeightedGraph};

/// Where an instance came from; enough to regenerate or reload it.
#[derive(Debug, Clone, PartialEq)]
pub struct InstanceDescriptor {
    pub id: usize,
    pub source: String,
    pub n: usize,
    pub m: usize,
    pub mode: WeightMode,
    /// Generator line carried in the input file, if any.
    pub generator: Option<String>,
}

impl InstanceDescriptor {
    pub fn new(id: usize, source: &str, g: &WeightedGraph, generator: Option<String>) -> Self {
        InstanceDescriptor { id, source: source.to_string(), n: g.n(), m: g.m(), mode: g.mode(), generator }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum OracleCheck {
    /// Oracle girth (`None` when acyclic) and the observed ratio.
    Ratio { girth: Option<f64>, ratio: Option<f64> },
    /// `n` above the oracle cap; the ratio is omitted.
    Skipped { cap: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub struct AlgoResult {
    pub algorithm: String,
    /// Parameters in display form, e.g. `eps=0.5`.
    pub params: String,
    pub estimate: GirthEstimate,
    pub valid: bool,
    pub oracle: OracleCheck,
    pub wall_ms: Option<f64>,
}

impl AlgoResult {
    /// True when the cycle validated and the ratio, if known, lies in
    /// `[1, declared factor]` up to rounding.
    pub fn sound(&self) -> bool {
        if !self.valid {
            return false;
        }
        match &self.oracle {
            OracleCheck::Ratio { girth, ratio } => match (girth, self.estimate.weight(), ratio) {
                (None, None, _) => true,
                (Some(_), Some(_), Some(r)) => *r >= 1.0 - 1e-9 && *r <= self.estimate.declared_factor + 1e-9,
                _ => false,
            },
            OracleCheck::Skipped { .. } => true,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunReport {
    pub instance: InstanceDescriptor,
    pub results: Vec<AlgoResult>,
}

/// `w / girth`, with `0/0 = 1`.
pub fn ratio(weight: f64, girth: f64) -> f64 {
    if girth == 0.0 {
        if weight == 0.0 {
            1.0
        } else {
            f64::INFINITY
        }
    } else {
        weight / girth
    }
}

fn mode_label(mode: WeightMode) -> String {
    match mode {
        WeightMode::Integer { max } => format!("int:{max}"),
        WeightMode::Real => "real".into(),
    }
}

fn opt(x: Option<f64>) -> String {
    x.map_or_else(|| "-".into(), |v| format!("{v}"))
}

pub fn stats_fields(s: &Stats) -> String {
    format!(
        "hbd_calls={} hbd_visited={} hbd_relaxed={} hbd_scanned={} nearest_settled={} adjacency_reads={} pair_probes={} edge_scans={} subroutine_calls={}",
        s.hbd_calls,
        s.hbd_visited,
        s.hbd_relaxed,
        s.hbd_scanned,
        s.nearest_settled,
        s.adjacency_reads,
        s.pair_probes,
        s.edge_scans,
        s.subroutine_calls
    )
}

impl RunReport {
    pub fn render(&self) -> String {
        let mut out = String::new();
        let i = &self.instance;
        write!(out, "instance id={} source={} n={} m={} mode={}", i.id, i.source, i.n, i.m, mode_label(i.mode)).unwrap();
        if let Some(gen) = &i.generator {
            write!(out, " gen=[{gen}]").unwrap();
        }
        out.push('\n');
        for r in &self.results {
            let e = &r.estimate;
            write!(out, "result id={} algo={}", i.id, r.algorithm).unwrap();
            if !r.params.is_empty() {
                write!(out, " {}", r.params).unwrap();
            }
            write!(out, " weight={} factor={} branch={} valid={}", opt(e.weight()), e.declared_factor, e.branch, r.valid).unwrap();
            match &r.oracle {
                OracleCheck::Ratio { girth, ratio } => write!(out, " oracle={} ratio={}", opt(*girth), opt(*ratio)).unwrap(),
                OracleCheck::Skipped { cap } => write!(out, " oracle=- ratio=- note=n-above-oracle-cap-{cap}").unwrap(),
            }
            write!(out, " sound={} {}", r.sound(), stats_fields(&e.stats)).unwrap();
            if let Some(ms) = r.wall_ms {
                write!(out, " time_ms={ms:.3}").unwrap();
            }
            let cyc = e.cycle().map_or_else(|| "-".into(), |c| c.vertices().iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","));
            writeln!(out, " cycle={cyc}").unwrap();
        }
        out
    }
}
