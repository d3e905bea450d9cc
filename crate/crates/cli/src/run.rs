//! Algorithm dispatch and oracle comparison.

use std::time::Instant;

use girth_core::{
    approx_general_with, controlled_density_approx_with, derandomized_4_with, derandomized_4eps_with, exact_girth, poly_girth_cfg,
    subquadratic_approx_with, validate_cycle, Config, GirthEstimate, Result, WeightMode, WeightedGraph,
};

use crate::report::{ratio, AlgoResult, InstanceDescriptor, OracleCheck, RunReport};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Algorithm {
    Exact,
    /// Factor 2; `max_weight` overrides the bound declared by the input.
    Approx2 {
        max_weight: Option<u64>,
    },
    Approx2Eps {
        eps: f64,
    },
    Poly,
    Dense8 {
        eps: f64,
    },
    /// `None` runs the factor-4 integer variant.
    Approx4 {
        eps: Option<f64>,
    },
}

impl Algorithm {
    pub fn name(&self) -> &'static str {
        match self {
            Algorithm::Exact => "exact",
            Algorithm::Approx2 { .. } => "approx2",
            Algorithm::Approx2Eps { .. } => "approx2eps",
            Algorithm::Poly => "poly",
            Algorithm::Dense8 { .. } => "dense8",
            Algorithm::Approx4 { .. } => "approx4",
        }
    }

    fn params(&self, g: &WeightedGraph) -> String {
        match *self {
            Algorithm::Exact | Algorithm::Poly => String::new(),
            Algorithm::Approx2 { max_weight } => {
                format!("M={}", max_weight.or(g.mode().max_weight()).map_or("-".into(), |m| m.to_string()))
            }
            Algorithm::Approx2Eps { eps } | Algorithm::Dense8 { eps } | Algorithm::Approx4 { eps: Some(eps) } => format!("eps={eps}"),
            Algorithm::Approx4 { eps: None } => format!("eps=1/(M(n+1)) M={}", g.mode().max_weight().map_or("-".into(), |m| m.to_string())),
        }
    }

    pub fn run(&self, g: &WeightedGraph, cfg: &Config) -> Result<GirthEstimate> {
        match *self {
            Algorithm::Exact => Ok(exact_girth(g)),
            Algorithm::Approx2 { max_weight: Some(m) } => {
                let h = WeightedGraph::new(g.n(), &g.edge_triples(), WeightMode::Integer { max: m })?;
                subquadratic_approx_with(&h, cfg)
            }
            Algorithm::Approx2 { max_weight: None } => subquadratic_approx_with(g, cfg),
            Algorithm::Approx2Eps { eps } => approx_general_with(g, eps, cfg),
            Algorithm::Poly => poly_girth_cfg(g, cfg).map(|(e, _)| e),
            Algorithm::Dense8 { eps } => controlled_density_approx_with(g, eps, cfg),
            Algorithm::Approx4 { eps: Some(eps) } => derandomized_4eps_with(g, eps, cfg),
            Algorithm::Approx4 { eps: None } => derandomized_4_with(g, cfg),
        }
    }
}

#[derive(Debug, Clone)]
pub struct RunOptions {
    pub config: Config,
    pub oracle_cap: usize,
    /// Adds wall time to every result; off by default so reports stay
    /// byte-identical across runs.
    pub timing: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { config: Config::default(), oracle_cap: 200, timing: false }
    }
}

/// Runs `algorithms` on one instance, validating each cycle and comparing
/// with the oracle when `n` is within the cap.
pub fn run_instance(instance: InstanceDescriptor, g: &WeightedGraph, algorithms: &[Algorithm], opts: &RunOptions) -> Result<RunReport> {
    let oracle = (g.n() <= opts.oracle_cap).then(|| exact_girth(g).weight());
    let mut results = Vec::with_capacity(algorithms.len());
    for algo in algorithms {
        let start = Instant::now();
        let estimate = algo.run(g, &opts.config)?;
        let wall_ms = opts.timing.then(|| start.elapsed().as_secs_f64() * 1e3);
        let valid = estimate.cycle().is_none_or(|c| validate_cycle(g, c).is_ok());
        let oracle = match oracle {
            Some(girth) => OracleCheck::Ratio { girth, ratio: girth.zip(estimate.weight()).map(|(t, w)| ratio(w, t)) },
            None => OracleCheck::Skipped { cap: opts.oracle_cap },
        };
        results.push(AlgoResult { algorithm: algo.name().into(), params: algo.params(g), estimate, valid, oracle, wall_ms });
    }
    Ok(RunReport { instance, results })
}

/// The `gen=[...]` descriptor carried by files written by `girth gen`.
pub fn generator_line(text: &str) -> Option<String> {
    text.lines().find_map(|l| l.trim().strip_prefix("# gen ").map(|s| s.trim().to_string()))
}
