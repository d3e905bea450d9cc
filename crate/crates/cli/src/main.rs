use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use girth_cli::{fit_exponent, generator_line, run_doubling, run_instance, Algorithm, InstanceDescriptor, RunOptions};
use girth_core::{build_hitting_structure, generate, validate_cycle, Config, Cycle, GenKind, GenSpec, WeightedGraph, Weights};
use rayon::prelude::*;

#[derive(Parser)]
#[command(name = "girth", version, about = "Exact and approximate girth of weighted graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Edge-list file; repeat for a batch. Reads stdin when absent.
    #[arg(long = "input", short = 'i')]
    inputs: Vec<PathBuf>,
    /// Write the report here instead of stdout.
    #[arg(long, short = 'o')]
    output: Option<PathBuf>,
    /// Hitting-set parameter r (default: integer cube root of n).
    #[arg(long)]
    r: Option<usize>,
    /// Skip the exact oracle above this many vertices.
    #[arg(long, default_value_t = 200)]
    oracle_cap: usize,
    /// Worker threads (default: all cores).
    #[arg(long)]
    workers: Option<usize>,
    /// Add wall time to every result line.
    #[arg(long)]
    timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Exact girth.
    Exact(Common),
    /// Factor 2, integer weights.
    Approx2 {
        #[command(flatten)]
        common: Common,
        /// Weight bound M (default: the largest weight in the input).
        #[arg(long)]
        max_weight: Option<u64>,
    },
    /// Factor 2+eps.
    Approx2eps {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 0.5)]
        eps: f64,
    },
    /// Factor max(9, 2|S|).
    Poly(Common),
    /// Factor 8+eps without an m term.
    Dense8 {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 0.5)]
        eps: f64,
    },
    /// Factor 4+eps without an m term; factor 4 on integer input when eps is omitted.
    Approx4 {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        eps: Option<f64>,
    },
    /// Generate an instance as an edge list.
    Gen(GenArgs),
    /// Doubling experiment with a fitted exponent per counter.
    Bench(BenchArgs),
    /// Check an edge list and optionally a cycle on it.
    Validate {
        #[arg(long, short = 'i')]
        input: Option<PathBuf>,
        /// Cycle as comma-separated vertices.
        #[arg(long)]
        cycle: Option<String>,
        #[arg(long, short = 'o')]
        output: Option<PathBuf>,
    },
    /// Print the hitting structure: r, |S| and the ball-size histogram.
    Hitting {
        #[arg(long, short = 'i')]
        input: Option<PathBuf>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, short = 'o')]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    ErdosRenyi,
    Grid,
    CyclePlusChords,
    TwoCluster,
    DenseThreshold,
}

#[derive(Clone, Copy, ValueEnum)]
enum WeightKind {
    Unit,
    Int,
    Real,
}

#[derive(Args, Clone)]
struct GenArgs {
    #[arg(long, value_enum, default_value = "erdos-renyi")]
    kind: Kind,
    #[arg(long, short = 'n', default_value_t = 100)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value = "int")]
    weights: WeightKind,
    /// Largest weight for int and real weights.
    #[arg(long, default_value_t = 10.0)]
    max_weight: f64,
    /// Probability that an edge weighs 0.
    #[arg(long, default_value_t = 0.0)]
    zero_fraction: f64,
    /// Edge probability (erdos-renyi) or internal edge probability (two-cluster).
    #[arg(long, default_value_t = 0.1)]
    p: f64,
    /// Skip the spanning tree in erdos-renyi.
    #[arg(long)]
    disconnected: bool,
    #[arg(long, default_value_t = 10)]
    rows: usize,
    #[arg(long, default_value_t = 10)]
    cols: usize,
    #[arg(long, default_value_t = 3)]
    planted: usize,
    /// Chords (cycle-plus-chords) or bridges (two-cluster).
    #[arg(long, default_value_t = 10)]
    extra: usize,
    #[arg(long, short = 'o')]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum BenchAlgo {
    Approx2,
    Approx2eps,
    Poly,
    Dense8,
    Approx4,
}

#[derive(Args, Clone)]
struct BenchArgs {
    #[arg(long, value_enum, default_value = "approx4")]
    algo: BenchAlgo,
    #[command(flatten)]
    gen: GenArgs,
    /// Instance sizes, comma-separated.
    #[arg(long, value_delimiter = ',', default_values_t = vec![64, 128, 256, 512])]
    sizes: Vec<usize>,
    #[arg(long, default_value_t = 0.5)]
    eps: f64,
    #[arg(long)]
    r: Option<usize>,
}

fn gen_spec(a: &GenArgs, n: usize) -> GenSpec {
    let kind = match a.kind {
        Kind::ErdosRenyi => GenKind::ErdosRenyi { p: a.p, connected: !a.disconnected },
        Kind::Grid => GenKind::Grid { rows: a.rows, cols: a.cols },
        Kind::CyclePlusChords => GenKind::CyclePlusChords { planted: a.planted, chords: a.extra },
        Kind::TwoCluster => GenKind::TwoCluster { p_in: a.p, bridges: a.extra },
        Kind::DenseThreshold => GenKind::DenseThreshold,
    };
    let weights = match a.weights {
        WeightKind::Unit => Weights::Unit,
        WeightKind::Int => Weights::Int { max: a.max_weight as u64 },
        WeightKind::Real => Weights::Real { max: a.max_weight },
    };
    GenSpec { kind, n, weights, zero_fraction: a.zero_fraction }
}

fn gen_descriptor(a: &GenArgs, n: usize) -> String {
    let kind = match a.kind {
        Kind::ErdosRenyi => format!("erdos-renyi p={} connected={}", a.p, !a.disconnected),
        Kind::Grid => format!("grid rows={} cols={}", a.rows, a.cols),
        Kind::CyclePlusChords => format!("cycle-plus-chords planted={} chords={}", a.planted, a.extra),
        Kind::TwoCluster => format!("two-cluster p_in={} bridges={}", a.p, a.extra),
        Kind::DenseThreshold => "dense-threshold".into(),
    };
    let weights = match a.weights {
        WeightKind::Unit => "unit".into(),
        WeightKind::Int => format!("int max={}", a.max_weight as u64),
        WeightKind::Real => format!("real max={}", a.max_weight),
    };
    format!("kind={kind} n={n} weights={weights} zero_fraction={} seed={}", a.zero_fraction, a.seed)
}

fn read_input(path: Option<&PathBuf>) -> Result<(String, String), String> {
    match path {
        Some(p) => fs::read_to_string(p).map(|t| (p.display().to_string(), t)).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            let mut t = String::new();
            io::stdin().read_to_string(&mut t).map_err(|e| format!("stdin: {e}"))?;
            Ok(("-".into(), t))
        }
    }
}

fn load(path: Option<&PathBuf>) -> Result<(String, String, WeightedGraph), String> {
    let (name, text) = read_input(path)?;
    let g = WeightedGraph::parse(&text).map_err(|e| format!("{name}: {e}"))?;
    Ok((name, text, g))
}

fn emit(output: Option<&PathBuf>, text: &str) -> Result<(), String> {
    match output {
        Some(p) => fs::write(p, text).map_err(|e| format!("{}: {e}", p.display())),
        None => io::stdout().write_all(text.as_bytes()).map_err(|e| e.to_string()),
    }
}

fn config(r: Option<usize>) -> Config {
    Config { r, ..Config::default() }
}

fn run_batch(common: &Common, algo: Algorithm) -> Result<bool, String> {
    if let Some(w) = common.workers {
        rayon::ThreadPoolBuilder::new().num_threads(w).build_global().map_err(|e| e.to_string())?;
    }
    let opts = RunOptions { config: config(common.r), oracle_cap: common.oracle_cap, timing: common.timing };
    let paths: Vec<Option<&PathBuf>> = if common.inputs.is_empty() { vec![None] } else { common.inputs.iter().map(Some).collect() };
    let reports: Vec<Result<String, String>> = paths
        .par_iter()
        .enumerate()
        .map(|(id, p)| {
            let (name, text, g) = load(*p)?;
            let desc = InstanceDescriptor::new(id, &name, &g, generator_line(&text));
            let report = run_instance(desc, &g, &[algo], &opts).map_err(|e| format!("{name}: {e}"))?;
            let sound = report.results.iter().all(|r| r.sound());
            Ok(report.render() + if sound { "" } else { "# violation\n" })
        })
        .collect();
    let mut out = String::new();
    for r in reports {
        out.push_str(&r?);
    }
    emit(common.output.as_ref(), &out)?;
    Ok(!out.contains("# violation"))
}

fn bench(a: &BenchArgs) -> Result<bool, String> {
    let algo = match a.algo {
        BenchAlgo::Approx2 => Algorithm::Approx2 { max_weight: None },
        BenchAlgo::Approx2eps => Algorithm::Approx2Eps { eps: a.eps },
        BenchAlgo::Poly => Algorithm::Poly,
        BenchAlgo::Dense8 => Algorithm::Dense8 { eps: a.eps },
        BenchAlgo::Approx4 => Algorithm::Approx4 { eps: Some(a.eps) },
    };
    let points = run_doubling(|n| gen_spec(&a.gen, n), &a.sizes, a.gen.seed, algo, &config(a.r)).map_err(|e| e.to_string())?;
    let mut out = String::new();
    out.push_str(&format!("bench algo={} {} gen=[{}]\n", algo.name(), format_args!("eps={}", a.eps), gen_descriptor(&a.gen, 0)));
    for p in &points {
        let w = p.weight.map_or("-".into(), |w| w.to_string());
        out.push_str(&format!("point n={} m={} weight={w} {}\n", p.n, p.m, girth_cli::report::stats_fields(&p.stats)));
    }
    let fit = |f: &dyn Fn(&girth_core::Stats) -> u64| {
        fit_exponent(&points.iter().map(|p| (p.n as f64, f(&p.stats) as f64)).collect::<Vec<_>>()).map_or("-".into(), |b| format!("{b:.4}"))
    };
    let m_fit =
        fit_exponent(&points.iter().map(|p| (p.n as f64, p.m as f64)).collect::<Vec<_>>()).map_or("-".into(), |b| format!("{b:.4}"));
    out.push_str(&format!(
        "fit hbd_visited={} hbd_scanned={} adjacency_reads={} edge_scans={} m={m_fit}\n",
        fit(&|s| s.hbd_visited),
        fit(&|s| s.hbd_scanned),
        fit(&|s| s.adjacency_reads),
        fit(&|s| s.edge_scans)
    ));
    emit(a.gen.output.as_ref(), &out)?;
    Ok(true)
}

fn validate(input: Option<&PathBuf>, cycle: Option<&str>, output: Option<&PathBuf>) -> Result<bool, String> {
    let (name, _, g) = load(input)?;
    let mut out = format!("graph source={name} n={} m={} forest={}\n", g.n(), g.m(), g.is_forest());
    let mut ok = true;
    if let Some(spec) = cycle {
        let vs: Vec<usize> =
            spec.split(',').map(|s| s.trim().parse().map_err(|_| format!("bad vertex `{s}`"))).collect::<Result<_, _>>()?;
        match Cycle::from_vertices(&g, &vs) {
            Ok(c) => {
                validate_cycle(&g, &c).map_err(|v| format!("{v:?}"))?;
                out.push_str(&format!("cycle valid=true len={} weight={}\n", c.len(), c.weight()));
            }
            Err(violations) => {
                ok = false;
                out.push_str("cycle valid=false\n");
                for v in violations {
                    out.push_str(&format!("violation {v:?}\n"));
                }
            }
        }
    }
    emit(output, &out)?;
    Ok(ok)
}

fn hitting(input: Option<&PathBuf>, r: Option<usize>, output: Option<&PathBuf>) -> Result<bool, String> {
    let (name, _, g) = load(input)?;
    let r = config(r).r_for(g.n());
    let hs = build_hitting_structure(&g, r).map_err(|e| e.to_string())?;
    let hist: Vec<String> = hs.ball_histogram().iter().map(|c| c.to_string()).collect();
    let out = format!(
        "hitting source={name} n={} r={} s_size={} s_bound={} ball_histogram={}\n",
        g.n(),
        hs.r,
        hs.s.len(),
        girth_core::HittingStructure::size_bound(g.n(), r),
        hist.join(",")
    );
    emit(output, &out)?;
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Exact(c) => run_batch(c, Algorithm::Exact),
        Command::Approx2 { common, max_weight } => run_batch(common, Algorithm::Approx2 { max_weight: *max_weight }),
        Command::Approx2eps { common, eps } => run_batch(common, Algorithm::Approx2Eps { eps: *eps }),
        Command::Poly(c) => run_batch(c, Algorithm::Poly),
        Command::Dense8 { common, eps } => run_batch(common, Algorithm::Dense8 { eps: *eps }),
        Command::Approx4 { common, eps } => run_batch(common, Algorithm::Approx4 { eps: *eps }),
        Command::Gen(a) => generate(&gen_spec(a, a.n), a.seed)
            .map_err(|e| e.to_string())
            .and_then(|g| emit(a.output.as_ref(), &format!("# gen {}\n{}", gen_descriptor(a, a.n), g.to_text())))
            .map(|_| true),
        Command::Bench(a) => bench(a),
        Command::Validate { input, cycle, output } => validate(input.as_ref(), cycle.as_deref(), output.as_ref()),
        Command::Hitting { input, r, output } => hitting(input.as_ref(), *r, output.as_ref()),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
