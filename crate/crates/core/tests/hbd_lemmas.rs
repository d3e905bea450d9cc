mod common;

use common::*;
use girth_core::{exact_girth, hbd, min_detecting_threshold_exact, validate_cycle, WeightedGraph, Weights};

fn graphs() -> Vec<WeightedGraph> {
    (0..60u64)
        .map(|seed| {
            let n = 5 + (seed as usize % 36);
            let weights = [Weights::Unit, Weights::Int { max: 3 }, Weights::Real { max: 4.0 }][seed as usize % 3];
            random_graph(n, 0.12 + 0.05 * (seed % 4) as f64, weights, seed)
        })
        .collect()
}

#[test]
fn detected_cycles_weigh_at_most_twice_the_threshold() {
    for g in graphs() {
        let total = g.total_weight();
        for s in 0..g.n() {
            for k in 0..8 {
                let t = total * k as f64 / 16.0;
                let d = hbd(&g, s, t);
                if let Some(c) = d.cycle() {
                    validate_cycle(&g, c).unwrap();
                    assert!(c.weight() <= 2.0 * t);
                }
            }
        }
    }
}

#[test]
fn detection_is_monotone_in_t() {
    for g in graphs() {
        let total = g.total_weight();
        for s in 0..g.n() {
            let mut detected = false;
            for k in 0..24 {
                let now = hbd(&g, s, total * k as f64 / 24.0).detected();
                assert!(!detected || now, "detection lost when t grew");
                detected = now;
            }
        }
    }
}

#[test]
fn exhausted_runs_settle_the_ball_along_a_tree() {
    for g in graphs() {
        let total = g.total_weight();
        for s in 0..g.n() {
            let dist = dijkstra(&g, s, None);
            for k in 0..6 {
                let t = total * k as f64 / 20.0;
                let d = hbd(&g, s, t);
                let ball = dist.iter().filter(|&&x| x <= t).count();
                assert!(d.visited <= ball);
                if !d.detected() {
                    assert_eq!(d.relaxed + 1, d.visited);
                    assert_eq!(d.visited, ball);
                }
            }
        }
    }
}

#[test]
fn threshold_corollaries_hold() {
    for g in graphs().into_iter().take(40) {
        let Some(c0) = exact_girth(&g).cycle().cloned() else { continue };
        let cyc = c0.vertices().to_vec();
        for s in 0..g.n() {
            let (t0, c) = min_detecting_threshold_exact(&g, s).expect("graph has a cycle");
            assert!(c.weight() <= 2.0 * t0);
            let dist = dijkstra(&g, s, None);
            let dist_sc = cyc.iter().map(|&x| dist[x]).fold(f64::INFINITY, f64::min);
            assert!(t0 <= dist_sc + c0.weight() + 1e-9);
            // second bound: some x on C0 with ecc_C0(x) >= dist(s,x) > 0
            let k = cyc.len();
            let w = c0.edge_weights();
            for (i, &x) in cyc.iter().enumerate() {
                let mut along: f64 = 0.0;
                let mut ecc: f64 = 0.0;
                for j in 0..k {
                    let forward = along;
                    ecc = ecc.max(forward.min(c0.weight() - forward));
                    along += w[(i + j) % k];
                }
                if dist[x] > 0.0 && ecc >= dist[x] {
                    assert!(t0 <= c0.weight() + 1e-9, "s={s} x={x}");
                }
            }
        }
    }
}
