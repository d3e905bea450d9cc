//! Doubling experiments: run an algorithm on growing instances and fit
//! `counter ~ n^beta` by least squares on log-log data.

use girth_core::{generate, GenSpec, Result, Stats};

use crate::run::Algorithm;

#[derive(Debug, Clone, PartialEq)]
pub struct BenchPoint {
    pub n: usize,
    pub m: usize,
    pub weight: Option<f64>,
    pub stats: Stats,
}

/// Slope of the least-squares line through `(ln x, ln y)`. Points with a
/// zero coordinate are dropped; `None` below two points.
pub fn fit_exponent(points: &[(f64, f64)]) -> Option<f64> {
    let logs: Vec<(f64, f64)> = points.iter().filter(|(x, y)| *x > 0.0 && *y > 0.0).map(|(x, y)| (x.ln(), y.ln())).collect();
    if logs.len() < 2 {
        return None;
    }
    let k = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / k;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = logs.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

pub fn run_doubling(
    spec: impl Fn(usize) -> GenSpec,
    sizes: &[usize],
    seed: u64,
    algo: Algorithm,
    cfg: &girth_core::Config,
) -> Result<Vec<BenchPoint>> {
    sizes
        .iter()
        .map(|&n| {
            let g = generate(&spec(n), seed)?;
            let est = algo.run(&g, cfg)?;
            Ok(BenchPoint { n: g.n(), m: g.m(), weight: est.weight(), stats: est.stats })
        })
        .collect()
}
