mod common;

use std::collections::HashSet;

use orient2::oracle::{
    enumerate_blue, exact_oriented_diameter, exists_orientation_diameter2,
    exists_orientation_diameter_at_most, extremal_graph, verify_sharpness_with, verify_theorem,
    Decision, DiameterOutcome, SearchBudget,
};
use orient2::{Distance, Error, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;

#[test]
fn enumeration_matches_labeled_dedup() {
    for (n, max_edges) in [(4, 4), (5, 5), (6, 6), (7, 5), (8, 3)] {
        let classes = enumerate_blue(n, max_edges).unwrap();
        assert_eq!(classes.len(), labeled_class_count(n, max_edges), "n={n} e<={max_edges}");
        let codes: HashSet<u64> = classes.iter().map(brute_canonical_code).collect();
        assert_eq!(codes.len(), classes.len(), "n={n}: two emitted graphs are isomorphic");
        assert!(classes.iter().all(|g| g.order() == n && g.size() <= max_edges));
    }
}

#[test]
fn enumeration_counts_for_the_theorem_range() {
    // Graphs with at most n - 5 edges, n = 5..=11.
    let counts: Vec<usize> = (5..=11).map(|n| enumerate_blue(n, n - 5).unwrap().len()).collect();
    assert_eq!(counts, vec![1, 2, 4, 9, 20, 46, 113]);
}

#[test]
fn decision_examples() {
    let b = SearchBudget::default();
    assert!(exists_orientation_diameter2(&Graph::complete(5).unwrap(), &b).is_yes());
    let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
    assert!(matches!(exists_orientation_diameter2(&star, &b), Decision::No));
    assert!(matches!(exists_orientation_diameter2(&extremal_graph(8).unwrap(), &b), Decision::No));
    // One more edge reaches the threshold and the answer flips.
    for n in 5..=9 {
        let mut g = extremal_graph(n).unwrap();
        g.add_edge(3, n - 1).unwrap();
        assert!(exists_orientation_diameter2(&g, &b).is_yes(), "n={n}");
    }
}

#[test]
fn undirected_distance_bounds_the_search() {
    let b = SearchBudget::default();
    let c7 = Graph::cycle(7).unwrap();
    assert!(matches!(exists_orientation_diameter_at_most(&c7, 5, &b), Decision::No));
    assert!(exists_orientation_diameter_at_most(&c7, 6, &b).is_yes());
}

#[test]
fn exact_diameters_match_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..120 {
        let n = rng.gen_range(2..=8);
        let p = rng.gen_range(0.25..0.7);
        let g = random_graph(&mut rng, n, p);
        if g.size() > 14 {
            continue;
        }
        let want = naive_oriented_diameter(&g).map_or(Distance::Infinite, Distance::Finite);
        assert_eq!(
            exact_oriented_diameter(&g, &SearchBudget::default()),
            DiameterOutcome::Exact(want),
            "{}",
            orient2::codec::to_graph6(&g)
        );
    }
}

#[test]
fn named_graphs() {
    let b = SearchBudget::default();
    let exact = |g: &Graph| exact_oriented_diameter(g, &b);
    assert_eq!(exact(&Graph::cycle(5).unwrap()), DiameterOutcome::Exact(Distance::Finite(4)));
    assert_eq!(exact(&Graph::path(3).unwrap()), DiameterOutcome::Exact(Distance::Infinite));
    assert_eq!(exact(&Graph::empty(3).unwrap()), DiameterOutcome::Exact(Distance::Infinite));
    assert_eq!(exact(&Graph::complete(6).unwrap()), DiameterOutcome::Exact(Distance::Finite(2)));
}

#[test]
fn budget_exhaustion_is_reported() {
    let tiny = SearchBudget::nodes(2);
    assert_eq!(exact_oriented_diameter(&Graph::complete(9).unwrap(), &tiny), DiameterOutcome::Indeterminate);
    assert!(matches!(verify_sharpness_with(9, &tiny), Err(Error::BudgetExhausted)));
}

#[test]
fn verification_report_shape() {
    let r = verify_theorem(8).unwrap();
    assert_eq!((r.n, r.instances_checked), (8, 9));
    assert!(r.failures.is_empty() && r.confirmed());
    assert!(verify_theorem(4).is_err() && verify_theorem(12).is_err());
    let json = serde_json::to_value(&r).unwrap();
    assert_eq!(json["instances_checked"], 9);
}
