use num_rational::BigRational;
use proptest::prelude::*;
use proptest::sample::subsequence;

use ulcolor::assignment_search::{
    enumerate_patterns, list_color_function, unlabeled_list_color_function, IntersectionPattern, SearchOptions,
};
use ulcolor::chromatic::{
    chromatic_polynomial, count_colorings_brute, count_unlabeled_colorings_brute, unlabeled_chromatic_polynomial,
};
use ulcolor::list_coloring::{
    burnside_lower_bound, coloring_classes, count_list_colorings, fixed_list_coloring_count,
    fixed_list_coloring_count_by_filter, stabilizer_coset_violation, unlabeled_list_coloring_count, ListAssignment,
};
use ulcolor::polynomial::integer;
use ulcolor::symmetry::{automorphism_group, automorphisms_by_filter};
use ulcolor::{Graph, Permutation};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let len = pairs.len();
        subsequence(pairs, 0..=len).prop_map(move |edges| Graph::from_edge_list(n, &edges).unwrap())
    })
}

/// `k`-subsets of a pool of `2k` colors, one per vertex.
fn lists_strategy(n: usize, k: usize) -> impl Strategy<Value = ListAssignment> {
    let pool: Vec<u8> = (0..(2 * k) as u8).collect();
    proptest::collection::vec(subsequence(pool, k), n).prop_map(ListAssignment::new)
}

fn graph_and_lists(max_n: usize, max_k: usize) -> impl Strategy<Value = (Graph, ListAssignment)> {
    (graph_strategy(max_n), 1..=max_k).prop_flat_map(|(g, k)| {
        let n = g.n();
        (Just(g), lists_strategy(n, k))
    })
}

fn permutation_strategy(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|image| Permutation::new(image).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hanlon_matches_brute_force(g in graph_strategy(5), k in 0u64..=4) {
        prop_assert_eq!(chromatic_polynomial(&g).eval_int(k as i64), integer(count_colorings_brute(&g, k).unwrap()));
        prop_assert_eq!(
            unlabeled_chromatic_polynomial(&g).eval_int(k as i64),
            integer(count_unlabeled_colorings_brute(&g, k).unwrap())
        );
    }

    #[test]
    fn automorphism_routes_agree(g in graph_strategy(6)) {
        let mut fast: Vec<_> = automorphism_group(&g).iter().map(|p| p.image().to_vec()).collect();
        let mut slow: Vec<_> = automorphisms_by_filter(&g).iter().map(|p| p.image().to_vec()).collect();
        fast.sort();
        slow.sort();
        prop_assert_eq!(fast, slow);
    }

    #[test]
    fn fixed_colorings_by_quotient_and_filter((g, l) in graph_and_lists(5, 3)) {
        for pi in automorphism_group(&g).iter() {
            prop_assert_eq!(
                fixed_list_coloring_count(&g, pi, &l).unwrap(),
                fixed_list_coloring_count_by_filter(&g, pi, &l).unwrap()
            );
        }
    }

    #[test]
    fn burnside_is_a_lower_bound((g, l) in graph_and_lists(5, 3)) {
        let aut = automorphism_group(&g);
        let classes = unlabeled_list_coloring_count(&g, &aut, &l).unwrap();
        prop_assert!(burnside_lower_bound(&g, &aut, &l).unwrap() <= integer(classes));
    }

    #[test]
    fn equivalence_respects_stabilizer_cosets((g, l) in graph_and_lists(5, 3)) {
        let aut = automorphism_group(&g);
        let classes = coloring_classes(&g, &aut, &l).unwrap();
        prop_assert_eq!(stabilizer_coset_violation(&g, &aut, &classes), None);
    }

    #[test]
    fn sandwich_bounds((g, l) in graph_and_lists(5, 3)) {
        let aut = automorphism_group(&g);
        let labeled = count_list_colorings(&g, &l).unwrap();
        let unlabeled = unlabeled_list_coloring_count(&g, &aut, &l).unwrap() as u128;
        prop_assert!(unlabeled <= labeled);
        prop_assert!(labeled <= unlabeled * aut.order() as u128);
        let classes = coloring_classes(&g, &aut, &l).unwrap();
        prop_assert_eq!(classes.class_count as u128, unlabeled);
    }

    #[test]
    fn color_bijection_invariance((g, l) in graph_and_lists(5, 3), shift in 0u8..50) {
        let aut = automorphism_group(&g);
        let moved = l.relabel_colors(|c| 200 - c - shift);
        prop_assert_eq!(count_list_colorings(&g, &l).unwrap(), count_list_colorings(&g, &moved).unwrap());
        prop_assert_eq!(
            unlabeled_list_coloring_count(&g, &aut, &l).unwrap(),
            unlabeled_list_coloring_count(&g, &aut, &moved).unwrap()
        );
    }

    #[test]
    fn automorphism_relabeling_of_lists((g, l) in graph_and_lists(5, 3)) {
        let aut = automorphism_group(&g);
        let base = unlabeled_list_coloring_count(&g, &aut, &l).unwrap();
        for pi in aut.iter() {
            prop_assert_eq!(unlabeled_list_coloring_count(&g, &aut, &l.permute_vertices(pi)).unwrap(), base);
        }
    }

    #[test]
    fn isomorphic_copies_count_alike((g, l) in graph_and_lists(5, 3), seed in any::<u64>()) {
        let n = g.n();
        let mut image: Vec<usize> = (0..n).collect();
        image.rotate_left((seed as usize) % n);
        let pi = Permutation::new(image).unwrap();
        let h = g.apply_permutation(&pi).unwrap();
        // vertex π(v) of h carries the list of v
        let moved = l.permute_vertices(&pi.inverse());
        prop_assert_eq!(count_list_colorings(&g, &l).unwrap(), count_list_colorings(&h, &moved).unwrap());
        prop_assert_eq!(
            unlabeled_list_coloring_count(&g, &automorphism_group(&g), &l).unwrap(),
            unlabeled_list_coloring_count(&h, &automorphism_group(&h), &moved).unwrap()
        );
    }

    #[test]
    fn pattern_of_assignment_is_exact((g, l) in graph_and_lists(4, 3)) {
        let k = l.uniform_size().unwrap();
        let pattern = IntersectionPattern::of_assignment(&l).unwrap();
        let rebuilt = pattern.materialize();
        let aut = automorphism_group(&g);
        prop_assert_eq!(count_list_colorings(&g, &l).unwrap(), count_list_colorings(&g, &rebuilt).unwrap());
        prop_assert_eq!(
            unlabeled_list_coloring_count(&g, &aut, &l).unwrap(),
            unlabeled_list_coloring_count(&g, &aut, &rebuilt).unwrap()
        );
        prop_assert!(enumerate_patterns(g.n(), k, None).unwrap().contains(&pattern));
    }

    #[test]
    fn searches_bound_every_sampled_assignment((g, l) in graph_and_lists(4, 3)) {
        let k = l.uniform_size().unwrap();
        let opts = SearchOptions::default();
        let aut = automorphism_group(&g);
        let labeled = list_color_function(&g, k, &opts).unwrap().value;
        let unlabeled = unlabeled_list_color_function(&g, k, &opts).unwrap().value;
        prop_assert!(labeled <= count_list_colorings(&g, &l).unwrap());
        prop_assert!(unlabeled <= unlabeled_list_coloring_count(&g, &aut, &l).unwrap() as u128);
        prop_assert!(integer(labeled) <= chromatic_polynomial(&g).eval_int(k as i64));
        prop_assert!(integer(unlabeled) <= unlabeled_chromatic_polynomial(&g).eval_int(k as i64));
        prop_assert!(BigRational::from_integer(labeled.into()) / integer(aut.order() as u64) <= integer(unlabeled));
    }

    #[test]
    fn worker_count_does_not_change_results(g in graph_strategy(4), k in 1usize..=3, workers in 2usize..=4) {
        let one = unlabeled_list_color_function(&g, k, &SearchOptions::with_workers(1)).unwrap();
        let many = unlabeled_list_color_function(&g, k, &SearchOptions::with_workers(workers)).unwrap();
        prop_assert_eq!(one, many);
        let one = list_color_function(&g, k, &SearchOptions::with_workers(1)).unwrap();
        let many = list_color_function(&g, k, &SearchOptions::with_workers(workers)).unwrap();
        prop_assert_eq!(one, many);
    }

    #[test]
    fn graph6_round_trip(g in graph_strategy(12)) {
        let text = ulcolor::graph6::to_graph6(&g);
        prop_assert_eq!(ulcolor::graph6::parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn canonical_form_is_relabeling_invariant((g, pi) in graph_strategy(7).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), permutation_strategy(n))
    })) {
        let h = g.apply_permutation(&pi).unwrap();
        prop_assert_eq!(ulcolor::canon::canonical_form(&g), ulcolor::canon::canonical_form(&h));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn relabeling_the_vertices_of_a_permuted_graph(pi in (1usize..=6).prop_flat_map(permutation_strategy)) {
        let g = Graph::path(pi.len()).unwrap();
        let h = g.apply_permutation(&pi).unwrap();
        prop_assert_eq!(automorphism_group(&g).order(), automorphism_group(&h).order());
        prop_assert_eq!(chromatic_polynomial(&g), chromatic_polynomial(&h));
    }
}
