mod common;

use common::*;
use girth_core::{approx_general, derandomized_4eps, exact_girth, validate_cycle, WeightMode, WeightedGraph};
use proptest::prelude::*;

fn small_graph() -> impl Strategy<Value = WeightedGraph> {
    (3usize..9).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))).collect();
        let k = pairs.len();
        proptest::collection::vec(proptest::option::of(0u64..6), k).prop_map(move |ws| {
            let edges: Vec<_> = pairs.iter().zip(&ws).filter_map(|(&(u, v), w)| w.map(|w| (u, v, w as f64))).collect();
            WeightedGraph::new(n, &edges, WeightMode::Real).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn exact_matches_enumeration(g in small_graph()) {
        let est = exact_girth(&g);
        prop_assert_eq!(est.weight(), enumerated_girth(&g));
        if let Some(c) = est.cycle() {
            prop_assert!(validate_cycle(&g, c).is_ok());
        }
    }

    #[test]
    fn approximations_bracket_the_girth(g in small_graph(), eps in 0.05f64..2.0) {
        let truth = enumerated_girth(&g);
        for (est, f) in [(approx_general(&g, eps).unwrap(), 2.0 + eps), (derandomized_4eps(&g, eps).unwrap(), 4.0 + eps)] {
            match (truth, est.weight()) {
                (None, None) => {}
                (Some(t), Some(w)) => prop_assert!(w >= t - 1e-9 && w <= f * t + 1e-9),
                other => prop_assert!(false, "mismatch {:?}", other),
            }
        }
    }
}
