//! Automorphism groups and the cycle conditions attached to their elements.

use serde::Serialize;

use crate::canon::refine_colors;
use crate::graph::Graph;
use crate::permutation::Permutation;

/// `Aut(G)` as a flat element list: identity first, then ascending by image.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutGroup {
    elements: Vec<Permutation>,
}

impl AutGroup {
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Permutation> {
        self.elements.iter()
    }

    fn from_unsorted(mut elements: Vec<Permutation>) -> Self {
        // Identity has the smallest image array, so sorting puts it first.
        elements.sort_by(|a, b| a.image().cmp(b.image()));
        AutGroup { elements }
    }
}

impl<'a> IntoIterator for &'a AutGroup {
    type Item = &'a Permutation;
    type IntoIter = std::slice::Iter<'a, Permutation>;

    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter()
    }
}

/// Enumerates `Aut(G)` by backtracking over images that preserve the
/// color-refinement class, checking adjacency against every vertex already
/// mapped.
pub fn automorphism_group(g: &Graph) -> AutGroup {
    let n = g.n();
    let colors = refine_colors(g);
    let mut image = vec![usize::MAX; n];
    let mut out = Vec::new();
    extend(g, &colors, &mut image, 0, 0, &mut out);
    AutGroup::from_unsorted(out)
}

fn extend(g: &Graph, colors: &[usize], image: &mut [usize], v: usize, used: u32, out: &mut Vec<Permutation>) {
    let n = g.n();
    if v == n {
        out.push(Permutation::from_image_unchecked(image.to_vec()));
        return;
    }
    for w in 0..n {
        if used >> w & 1 == 1 || colors[w] != colors[v] {
            continue;
        }
        if (0..v).any(|u| g.has_edge(u, v) != g.has_edge(image[u], w)) {
            continue;
        }
        image[v] = w;
        extend(g, colors, image, v + 1, used | 1 << w, out);
    }
}

/// `{π ∈ S_n : πG = G}` by running through all of `S_n`. Only sensible for
/// small `n`; used to cross-check [`automorphism_group`].
pub fn automorphisms_by_filter(g: &Graph) -> AutGroup {
    let n = g.n();
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        if g.relabel(&perm) == *g {
            out.push(Permutation::from_image_unchecked(perm.clone()));
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    AutGroup::from_unsorted(out)
}

/// Advances to the next permutation in lexicographic order.
pub(crate) fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let Some(i) = (0..a.len() - 1).rev().find(|&i| a[i] < a[i + 1]) else {
        return false;
    };
    let j = (i + 1..a.len()).rev().find(|&j| a[j] > a[i]).expect("successor exists");
    a.swap(i, j);
    a[i + 1..].reverse();
    true
}

/// Per-element data used by the threshold arguments.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ElementClass {
    /// Every cycle is an independent set.
    pub independent_cycles: bool,
    pub cycle_count: usize,
}

/// `a` counts elements whose cycles are all independent (identity included);
/// `b` counts the non-identity ones among them with exactly `n - 2` cycles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AutClassification {
    pub per_element: Vec<ElementClass>,
    pub a: usize,
    pub b: usize,
}

pub fn classify(g: &Graph, aut: &AutGroup) -> AutClassification {
    let n = g.n();
    let per_element: Vec<ElementClass> = aut
        .iter()
        .map(|pi| ElementClass {
            independent_cycles: g.cycles_independent_unchecked(pi),
            cycle_count: pi.cycle_count(),
        })
        .collect();
    let a = per_element.iter().filter(|c| c.independent_cycles).count();
    let b = aut
        .iter()
        .zip(&per_element)
        .filter(|(pi, c)| !pi.is_identity() && c.independent_cycles && c.cycle_count + 2 == n)
        .count();
    AutClassification { per_element, a, b }
}

/// Every non-identity automorphism whose cycles are all independent has at
/// most `n - 2` cycles.
pub fn theorem7_hypothesis(g: &Graph) -> bool {
    let aut = automorphism_group(g);
    aut.iter()
        .filter(|pi| !pi.is_identity() && g.cycles_independent_unchecked(pi))
        .all(|pi| pi.cycle_count() + 2 <= g.n())
}

/// `G` is point-determining and every non-identity automorphism has a cycle
/// containing two adjacent vertices.
pub fn theorem12_hypothesis(g: &Graph) -> bool {
    g.is_point_determining() && only_identity_has_independent_cycles(g)
}

/// Every non-identity automorphism has a cycle containing an edge.
pub fn only_identity_has_independent_cycles(g: &Graph) -> bool {
    automorphism_group(g)
        .iter()
        .all(|pi| pi.is_identity() || !g.cycles_independent_unchecked(pi))
}

impl Graph {
    pub fn automorphism_group(&self) -> AutGroup {
        automorphism_group(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> Graph {
        Graph::path(3).unwrap()
    }

    fn factorial(n: usize) -> usize {
        (1..=n).product()
    }

    #[test]
    fn orders() {
        assert_eq!(automorphism_group(&p3()).order(), 2);
        assert_eq!(automorphism_group(&Graph::path(4).unwrap()).order(), 2);
        for n in 1..=6 {
            assert_eq!(automorphism_group(&Graph::complete(n).unwrap()).order(), factorial(n));
            assert_eq!(automorphism_group(&Graph::empty(n).unwrap()).order(), factorial(n));
        }
        assert_eq!(automorphism_group(&Graph::cycle(4).unwrap()).order(), 8);
        assert_eq!(automorphism_group(&Graph::cycle(5).unwrap()).order(), 10);
        let empty = automorphism_group(&Graph::empty(0).unwrap());
        assert_eq!(empty.order(), 1);
    }

    #[test]
    fn identity_first_then_sorted() {
        let aut = automorphism_group(&Graph::cycle(4).unwrap());
        assert!(aut.elements()[0].is_identity());
        assert!(aut.elements().windows(2).all(|w| w[0].image() < w[1].image()));
    }

    #[test]
    fn agrees_with_exhaustive_filter() {
        // Every labeled graph on at most 5 vertices.
        for n in 1..=5 {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
            for mask in 0u32..1 << pairs.len() {
                let edges: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(b, _)| mask >> b & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                let g = Graph::from_edge_list(n, &edges).unwrap();
                let fast = automorphism_group(&g);
                assert_eq!(fast, automorphisms_by_filter(&g), "{g}");
                assert_eq!(factorial(n) % fast.order(), 0);
                assert!(fast.iter().all(|pi| g.is_automorphism(pi)));
            }
        }
    }

    #[test]
    fn group_closure() {
        let g = Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        let aut = automorphism_group(&g);
        assert_eq!(aut.order(), 72);
        for a in &aut {
            assert!(aut.elements().contains(&a.inverse()));
            for b in aut.iter().take(10) {
                assert!(aut.elements().contains(&a.compose(b).unwrap()));
            }
        }
    }

    #[test]
    fn classification_examples() {
        let p3 = p3();
        let c = classify(&p3, &automorphism_group(&p3));
        assert_eq!((c.a, c.b), (2, 0));

        let k2 = Graph::complete(2).unwrap();
        let c = classify(&k2, &automorphism_group(&k2));
        assert_eq!((c.a, c.b), (1, 0));

        let c4 = Graph::cycle(4).unwrap();
        let c = classify(&c4, &automorphism_group(&c4));
        assert_eq!((c.a, c.b), (4, 1));
        assert!(c.per_element[0].independent_cycles);
        assert_eq!(c.per_element[0].cycle_count, 4);
    }

    #[test]
    fn hypotheses() {
        assert!(!theorem7_hypothesis(&Graph::cycle(4).unwrap()));
        assert!(theorem7_hypothesis(&Graph::path(4).unwrap()));
        assert!(theorem7_hypothesis(&Graph::complete(3).unwrap()));

        for n in 1..=5 {
            assert!(theorem12_hypothesis(&Graph::complete(n).unwrap()));
        }
        // reversal of P4 swaps the adjacent middle pair
        assert!(theorem12_hypothesis(&Graph::path(4).unwrap()));
        // half-turn of C6 has three independent 2-cycles
        assert!(!theorem12_hypothesis(&Graph::cycle(6).unwrap()));
        assert!(!theorem12_hypothesis(&Graph::path(3).unwrap()));
        assert!(theorem12_hypothesis(&Graph::empty(0).unwrap()));
        // Smallest asymmetric graphs have 6 vertices; this one is also point-determining.
        let asym = Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (2, 5)]).unwrap();
        assert_eq!(automorphism_group(&asym).order(), 1);
        assert!(theorem12_hypothesis(&asym));
    }

    #[test]
    fn point_determining_iff_no_nonadjacent_transposition() {
        for g in [
            Graph::path(3).unwrap(),
            Graph::path(4).unwrap(),
            Graph::cycle(4).unwrap(),
            Graph::cycle(5).unwrap(),
            Graph::complete(4).unwrap(),
            Graph::empty(3).unwrap(),
        ] {
            let aut = automorphism_group(&g);
            let bad_transposition = aut.iter().any(|pi| {
                let moved: Vec<_> = pi.cycles().iter().filter(|c| c.len() > 1).collect();
                moved.len() == 1 && moved[0].len() == 2 && !g.has_edge(moved[0][0], moved[0][1])
            });
            assert_eq!(g.is_point_determining(), !bad_transposition, "{g}");
        }
    }
}
