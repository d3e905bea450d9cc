mod common;

use common::*;
use girth_core::*;

fn check(g: &WeightedGraph, est: &GirthEstimate, factor: f64, what: &str) {
    let truth = edge_deletion_girth(g);
    match (truth, est.cycle()) {
        (None, None) => {}
        (Some(t), Some(c)) => {
            validate_cycle(g, c).unwrap_or_else(|v| panic!("{what}: invalid cycle {v:?}"));
            assert!(c.weight() >= t - 1e-9 * t.max(1.0), "{what}: below girth");
            assert!(c.weight() <= factor * t + 1e-9 * t.max(1.0), "{what}: {} > {factor} * {t}", c.weight());
        }
        other => panic!("{what}: acyclicity mismatch {other:?}"),
    }
}

fn corpus() -> Vec<(String, WeightedGraph)> {
    let mut out = Vec::new();
    for seed in 0..24u64 {
        let n = 12 + (seed as usize * 11) % 90;
        let p = [0.05, 0.1, 0.3][seed as usize % 3];
        let w = [Weights::Unit, Weights::Int { max: 7 }, Weights::Real { max: 10.0 }][seed as usize % 3];
        out.push((format!("er seed {seed}"), random_graph(n, p, w, seed)));
    }
    for seed in 0..6u64 {
        let spec = GenSpec::new(GenKind::CyclePlusChords { planted: 4 + seed as usize, chords: 60 }, 60, Weights::Int { max: 5 });
        out.push((format!("planted {seed}"), generate(&spec, seed).unwrap()));
        let spec = GenSpec::new(GenKind::TwoCluster { p_in: 0.2, bridges: 3 }, 50, Weights::Real { max: 3.0 });
        out.push((format!("clusters {seed}"), generate(&spec, seed).unwrap()));
        let spec = GenSpec::new(GenKind::DenseThreshold, 40 + 10 * seed as usize, Weights::Int { max: 20 });
        out.push((format!("dense {seed}"), generate(&spec, seed).unwrap()));
    }
    out.push(("petersen".into(), petersen()));
    out.push(("grid".into(), generate(&GenSpec::new(GenKind::Grid { rows: 6, cols: 7 }, 0, Weights::Int { max: 3 }), 1).unwrap()));
    out
}

#[test]
fn every_algorithm_meets_its_factor() {
    for (name, g) in corpus() {
        check(&g, &exact_girth(&g), 1.0, &format!("exact {name}"));
        for eps in [0.1, 1.0] {
            let est = approx_general(&g, eps).unwrap();
            assert_eq!(est.declared_factor, 2.0 + eps);
            check(&g, &est, 2.0 + eps, &format!("approx {eps} {name}"));
            check(&g, &controlled_density_approx(&g, eps).unwrap(), 8.0 + eps, &format!("dense8 {eps} {name}"));
            check(&g, &derandomized_4eps(&g, eps).unwrap(), 4.0 + eps, &format!("approx4 {eps} {name}"));
        }
        let (est, f) = poly_girth(&g, &SmallGirth::default()).unwrap();
        assert_eq!(est.declared_factor, f);
        check(&g, &est, f, &format!("poly {name}"));
        if g.mode().is_integer() {
            check(&g, &subquadratic_approx(&g).unwrap(), 2.0, &format!("approx2 {name}"));
            check(&g, &derandomized_4(&g).unwrap(), 4.0, &format!("approx4 int {name}"));
        } else {
            assert!(matches!(subquadratic_approx(&g), Err(GirthError::ModeMismatch { .. })));
        }
    }
}

#[test]
fn explicit_r_values_keep_the_factors() {
    let g = random_graph(80, 0.08, Weights::Int { max: 4 }, 3);
    for r in [1, 2, 5, 20, 80] {
        let cfg = Config { r: Some(r), ..Config::default() };
        check(&g, &approx_general_with(&g, 0.5, &cfg).unwrap(), 2.5, &format!("approx r={r}"));
        check(&g, &subquadratic_approx_with(&g, &cfg).unwrap(), 2.0, &format!("approx2 r={r}"));
        check(&g, &derandomized_4eps_with(&g, 0.5, &cfg).unwrap(), 4.5, &format!("approx4 r={r}"));
        let (est, f) = poly_girth_cfg(&g, &cfg).unwrap();
        check(&g, &est, f, &format!("poly r={r}"));
    }
}

#[test]
fn zero_weights_are_handled() {
    for seed in 0..40u64 {
        let z = [0.05, 0.2, 0.5, 0.9][seed as usize % 4];
        let g = random_with_zeros(15 + seed as usize, 0.15, z, seed);
        let name = format!("zeros seed {seed}");
        check(&g, &approx_general(&g, 0.5).unwrap(), 2.5, &name);
        check(&g, &derandomized_4eps(&g, 0.5).unwrap(), 4.5, &name);
        check(&g, &controlled_density_approx(&g, 0.5).unwrap(), 8.5, &name);
        let (est, f) = poly_girth(&g, &SmallGirth::default()).unwrap();
        check(&g, &est, f, &name);
        let exact = girth_with_reduction(&g, 1.0, |h| Ok(exact_girth(h))).unwrap();
        check(&g, &exact, 1.0, &name);
    }
}

#[test]
fn zero_cycle_found_in_zero_forest() {
    let g = WeightedGraph::new(5, &[(0, 1, 0.0), (1, 2, 0.0), (2, 0, 0.0), (2, 3, 4.0), (3, 4, 1.0)], WeightMode::Real).unwrap();
    let zr = zero_weight_reduce(&g);
    assert_eq!(zr.zero_forest_cycle.as_ref().map(|c| c.weight()), Some(0.0));
    assert_eq!(approx_general(&g, 1.0).unwrap().weight(), Some(0.0));
    assert_eq!(derandomized_4eps(&g, 1.0).unwrap().weight(), Some(0.0));
}

#[test]
fn reduced_cycles_lift_without_weight_change() {
    for seed in 0..30u64 {
        let g = random_with_zeros(25, 0.15, 0.3, seed);
        let zr = zero_weight_reduce(&g);
        if zr.zero_forest_cycle.is_some() {
            continue;
        }
        if let Some(c) = exact_girth(&zr.contracted).cycle() {
            let lifted = lift_reduced_cycle(&g, &zr, c);
            validate_cycle(&g, &lifted).unwrap();
            assert!(close(lifted.weight(), c.weight()));
        }
    }
}

#[test]
fn scaling_and_ceiling() {
    let g = random_graph(30, 0.2, Weights::Real { max: 4.0 }, 9);
    let s = scale_weights(&g, 3.0).unwrap();
    let (a, b) = (exact_girth(&g).weight().unwrap(), exact_girth(&s).weight().unwrap());
    assert!(close(3.0 * a, b));
    let c = ceil_weights(&scale_weights(&g, 10.0).unwrap()).unwrap();
    assert!(c.mode().is_integer());
    let gc = exact_girth(&c).weight().unwrap();
    assert!(gc >= 10.0 * a - 1e-9 && gc <= 10.0 * a + g.n() as f64);
}

fn sort_prefix(g: &WeightedGraph, k: usize) -> Vec<usize> {
    let mut ids: Vec<usize> = (0..g.m()).collect();
    ids.sort_by(|&a, &b| {
        let (x, y) = (g.edge(a), g.edge(b));
        x.weight.total_cmp(&y.weight).then((x.u.min(x.v), x.u.max(x.v)).cmp(&(y.u.min(y.v), y.u.max(y.v))))
    });
    ids.truncate(k);
    ids
}

#[test]
fn prefix_matches_full_sort() {
    for seed in 0..15u64 {
        let w = [Weights::Unit, Weights::Int { max: 3 }, Weights::Real { max: 1.0 }][seed as usize % 3];
        let g = random_graph(60, 0.3, w, seed);
        for k in [0, 1, 10, density_threshold(60).min(g.m()), g.m()] {
            let p = girth_core::dense::build_prefix_subgraph_k(&g, k);
            let mut got = p.edge_ids.clone();
            let mut want = sort_prefix(&g, k);
            got.sort_unstable();
            want.sort_unstable();
            assert_eq!(got, want, "seed {seed} k {k}");
            assert!(p.adjacency_reads as usize <= 2 * k + g.n());
            if k > 0 {
                assert_eq!(p.w_max, want.iter().map(|&i| g.edge(i).weight).fold(0.0, f64::max));
            }
        }
    }
}

#[test]
fn graphs_above_threshold_contain_a_four_cycle() {
    for seed in 0..10u64 {
        let n = 20 + 5 * seed as usize;
        let g = generate(&GenSpec::new(GenKind::DenseThreshold, n, Weights::Unit), seed).unwrap();
        assert!(g.m() > density_threshold(n));
        let p = build_prefix_subgraph(&g);
        let c = find_c4(&p.graph).expect("prefix at the threshold has a 4-cycle");
        assert_eq!(c.len(), 4);
    }
}

#[test]
fn outputs_are_reproducible() {
    let g = random_graph(150, 0.05, Weights::Int { max: 9 }, 21);
    let runs: Vec<_> = (0..3).map(|_| derandomized_4eps(&g, 0.25).unwrap()).collect();
    assert!(runs.windows(2).all(|w| w[0] == w[1]));
    let runs: Vec<_> = (0..3).map(|_| approx_general(&g, 0.25).unwrap()).collect();
    assert!(runs.windows(2).all(|w| w[0] == w[1]));
}
