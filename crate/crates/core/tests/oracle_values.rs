//! Values frozen from an independent brute force over raw `k`-assignments
//! drawn from `n·k` colors (no pattern reduction, orbit grouping by explicit
//! permutation sweep).

use ulcolor::assignment_search::{
    enumerate_patterns, list_color_function, threshold_search, unlabeled_list_color_function, SearchOptions,
};
use ulcolor::catalog::{enumerate_unlabeled, filter, FlagFilter};
use ulcolor::chromatic::{chromatic_polynomial, unlabeled_chromatic_polynomial};
use ulcolor::list_coloring::unlabeled_list_coloring_count;
use ulcolor::polynomial::integer;
use ulcolor::symmetry::automorphism_group;
use ulcolor::Graph;

fn g(text: &str) -> Graph {
    text.parse().unwrap()
}

/// (graph, k, labeled P_l, unlabeled P_l, P, unlabeled P)
const TABLE: &[(&str, usize, u128, u128, i64, i64)] = &[
    ("1:", 1, 1, 1, 1, 1),
    ("1:", 2, 2, 2, 2, 2),
    ("1:", 3, 3, 3, 3, 3),
    ("2:", 1, 1, 1, 1, 1),
    ("2:", 2, 4, 3, 4, 3),
    ("2:", 3, 9, 6, 9, 6),
    ("2: 0-1", 1, 0, 0, 0, 0),
    ("2: 0-1", 2, 2, 1, 2, 1),
    ("2: 0-1", 3, 6, 3, 6, 3),
    ("3:", 1, 1, 1, 1, 1),
    ("3:", 2, 8, 4, 8, 4),
    ("3:", 3, 27, 10, 27, 10),
    ("3: 0-1, 1-2", 1, 0, 0, 0, 0),
    ("3: 0-1, 1-2", 2, 2, 2, 2, 2),
    ("3: 0-1, 1-2", 3, 12, 9, 12, 9),
    ("3: 0-1, 1-2, 0-2", 2, 0, 0, 0, 0),
    ("3: 0-1, 1-2, 0-2", 3, 6, 1, 6, 1),
    ("3: 1-2", 2, 4, 2, 4, 2),
    ("3: 1-2", 3, 18, 9, 18, 9),
    ("4: 1-2, 2-3", 2, 4, 4, 4, 4),
    ("4: 1-2, 2-3, 1-3", 2, 0, 0, 0, 0),
    ("4: 0-1, 1-2, 2-3", 2, 2, 1, 2, 1),
    ("4: 0-1, 1-2, 2-3, 0-3", 2, 2, 1, 2, 1),
];

#[test]
fn search_matches_raw_assignment_oracle() {
    let opts = SearchOptions::default();
    for &(text, k, labeled, unlabeled, p, up) in TABLE {
        let graph = g(text);
        let l = list_color_function(&graph, k, &opts).unwrap();
        let u = unlabeled_list_color_function(&graph, k, &opts).unwrap();
        assert_eq!((l.value, u.value), (labeled, unlabeled), "{text} at k = {k}");
        assert!(l.exhausted && u.exhausted);
        assert_eq!(chromatic_polynomial(&graph).eval_int(k as i64), integer(p));
        assert_eq!(unlabeled_chromatic_polynomial(&graph).eval_int(k as i64), integer(up));
    }
}

#[test]
fn search_without_symmetry_reduction_agrees() {
    let opts = SearchOptions {
        symmetry_reduction: false,
        ..SearchOptions::default()
    };
    for &(text, k, labeled, unlabeled, _, _) in TABLE {
        let graph = g(text);
        assert_eq!(list_color_function(&graph, k, &opts).unwrap().value, labeled);
        assert_eq!(
            unlabeled_list_color_function(&graph, k, &opts).unwrap().value,
            unlabeled
        );
    }
}

#[test]
fn per_pattern_values_two_isolated_vertices() {
    // closed form k^2 - t^2/2 + t/2 with t shared colors
    let graph = Graph::empty(2).unwrap();
    let aut = automorphism_group(&graph);
    for k in 1..=4usize {
        for p in enumerate_patterns(2, k, None).unwrap() {
            let t = p.size_of(0b11);
            let u = unlabeled_list_coloring_count(&graph, &aut, &p.materialize()).unwrap() as usize;
            assert_eq!(2 * u, 2 * k * k - t * t + t, "k = {k}, t = {t}");
        }
    }
}

#[test]
fn path_on_four_vertices_threshold_at_two() {
    let t = threshold_search(&Graph::path(4).unwrap(), 2, &SearchOptions::default()).unwrap();
    assert_eq!(t.rows[1].list_value, Some(1));
    assert_eq!(t.rows[1].polynomial_value, 1);
    assert_eq!(t.rows[1].equal, Some(true));
}

#[test]
fn threshold_small_graphs_equal_everywhere() {
    for graph in [Graph::empty(2).unwrap(), Graph::complete(2).unwrap()] {
        let t = threshold_search(&graph, 3, &SearchOptions::default()).unwrap();
        assert!(t.rows.iter().all(|r| r.equal == Some(true)), "{graph}");
    }
}

#[test]
fn connected_point_determining_counts() {
    // brute force over all labeled graphs with exhaustive relabeling
    let expected = [1, 1, 1, 3, 11, 61];
    for (i, &count) in expected.iter().enumerate() {
        let entries = enumerate_unlabeled(i + 1).unwrap();
        let wanted = FlagFilter {
            connected: Some(true),
            point_determining: Some(true),
            ..FlagFilter::default()
        };
        assert_eq!(filter(&entries, &wanted).len(), count, "n = {}", i + 1);
    }
    let six = enumerate_unlabeled(6).unwrap();
    let pd = FlagFilter {
        point_determining: Some(true),
        ..FlagFilter::default()
    };
    assert_eq!(filter(&six, &pd).len(), 78);
}

#[test]
fn edgeless_exploration_values() {
    // n = 3 at k = 2: brute force gives 4 = C(4, 3)
    let t = ulcolor::verifier::explore_conjecture13(3, 3, &SearchOptions::default()).unwrap();
    let values: Vec<_> = t.rows.iter().map(|r| (r.list_value, r.polynomial_value)).collect();
    assert_eq!(values, vec![(Some(1), 1), (Some(4), 4), (Some(10), 10)]);
}
