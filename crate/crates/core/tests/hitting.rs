mod common;

use common::*;
use girth_core::{build_hitting_structure, default_r, r_nearest_set, HittingStructure, Weights};

#[test]
fn nearest_sets_match_dijkstra() {
    for seed in 0..30u64 {
        let n = 20 + (seed as usize * 3) % 80;
        let weights = [Weights::Unit, Weights::Int { max: 6 }, Weights::Real { max: 2.0 }][seed as usize % 3];
        let g = random_graph(n, 0.08, weights, seed);
        for r in [1, 2, default_r(n), 7] {
            for v in 0..n {
                let ns = r_nearest_set(&g, v, r);
                let dist = dijkstra(&g, v, None);
                assert_eq!(ns.members.len(), r.min(dist.iter().filter(|d| d.is_finite()).count()));
                let last = ns.members.last().unwrap().1;
                for &(x, d) in &ns.members {
                    assert!(close(d, dist[x]));
                }
                // nothing outside is strictly closer than the farthest member
                for (x, &dx) in dist.iter().enumerate() {
                    if dx < last && !close(dx, last) {
                        assert!(ns.contains(x), "seed {seed} v {v} r {r}: {x} missing");
                    }
                }
            }
        }
    }
}

#[test]
fn balls_match_dijkstra_and_s_hits_everything() {
    for seed in 0..20u64 {
        let n = 30 + (seed as usize * 7) % 70;
        let weights = [Weights::Unit, Weights::Int { max: 9 }, Weights::Real { max: 5.0 }][seed as usize % 3];
        let g = random_graph(n, 0.1, weights, seed);
        let r = default_r(n).max(3);
        let hs = build_hitting_structure(&g, r).unwrap();
        assert!(hs.s.len() <= HittingStructure::size_bound(n, r));
        assert!(hs.s.windows(2).all(|w| w[0] < w[1]));
        for ns in &hs.nearest {
            assert!(ns.members.iter().any(|&(x, _)| hs.in_s[x]));
        }
        for v in 0..n {
            let dist = dijkstra(&g, v, None);
            let ds = hs.s.iter().map(|&x| dist[x]).fold(f64::INFINITY, f64::min);
            assert!(close(hs.dist_to_s[v], ds));
            let mut want: Vec<usize> = (0..n).filter(|&u| dist[u] < ds && !close(dist[u], ds)).collect();
            let mut got = hs.ball_vertices(v);
            want.sort_unstable();
            got.sort_unstable();
            assert_eq!(got, want, "seed {seed} v {v}");
            assert!(got.len() < r);
        }
    }
}

#[test]
fn structure_is_deterministic() {
    let g = random_graph(200, 0.03, Weights::Int { max: 4 }, 11);
    let a = build_hitting_structure(&g, 6).unwrap();
    let b = build_hitting_structure(&g, 6).unwrap();
    assert_eq!(a.s, b.s);
    assert_eq!(a.balls, b.balls);
    assert_eq!(a.stats, b.stats);
}

#[test]
fn default_r_is_integer_cube_root() {
    assert_eq!(default_r(0), 1);
    assert_eq!(default_r(7), 1);
    assert_eq!(default_r(8), 2);
    assert_eq!(default_r(26), 2);
    assert_eq!(default_r(27), 3);
    assert_eq!(default_r(1_000_000), 100);
}
