//! Seeded list assignments for the randomized checks.

use rand::seq::index::sample;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::list_coloring::ListAssignment;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ListKind {
    /// `{0, …, k-1}` everywhere.
    Constant,
    /// Constant, except one vertex trades one color for a fresh one.
    NearConstant,
    /// Pairwise disjoint lists.
    Disjoint,
    /// Independent uniform `k`-subsets of `n·k` colors.
    Uniform,
}

impl ListKind {
    pub const ALL: [ListKind; 4] = [
        ListKind::Constant,
        ListKind::NearConstant,
        ListKind::Disjoint,
        ListKind::Uniform,
    ];
}

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A `k`-assignment on `n` vertices of the requested kind. Needs `n·k ≤ 255`.
pub fn random_assignment(rng: &mut impl Rng, n: usize, k: usize, kind: ListKind) -> ListAssignment {
    assert!(n * k < 256, "colors must stay below 256");
    let mut lists: Vec<Vec<u8>> = vec![(0..k as u8).collect(); n];
    match kind {
        ListKind::Constant => {}
        ListKind::NearConstant => {
            if n > 0 && k > 0 {
                let v = rng.gen_range(0..n);
                let i = rng.gen_range(0..k);
                lists[v][i] = k as u8;
            }
        }
        ListKind::Disjoint => {
            for (v, l) in lists.iter_mut().enumerate() {
                for (i, c) in l.iter_mut().enumerate() {
                    *c = (v * k + i) as u8;
                }
            }
        }
        ListKind::Uniform => {
            let pool = (n * k).max(k);
            for l in &mut lists {
                *l = sample(rng, pool, k).into_iter().map(|c| c as u8).collect();
            }
        }
    }
    ListAssignment::new(lists)
}

/// Lists on a path `v_1 … v_n` whose consecutive differences sum to less
/// than `k`: each list replaces a few colors of its predecessor.
pub fn random_path_assignment(rng: &mut impl Rng, n: usize, k: usize) -> ListAssignment {
    assert!(n >= 1 && k >= 1 && (n + 1) * k < 256);
    let pool = (n + 1) * k;
    let mut lists: Vec<Vec<u8>> = Vec::with_capacity(n);
    lists.push(sample(rng, pool, k).into_iter().map(|c| c as u8).collect());
    let mut budget = k - 1;
    for _ in 1..n {
        let mut next = lists.last().expect("nonempty").clone();
        let changes = rng.gen_range(0..=budget.min(2));
        budget -= changes;
        for _ in 0..changes {
            let fresh: Vec<u8> = (0..pool as u8).filter(|c| !next.contains(c)).collect();
            let i = rng.gen_range(0..next.len());
            next[i] = fresh[rng.gen_range(0..fresh.len())];
        }
        lists.push(next);
    }
    ListAssignment::new(lists)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kinds_have_uniform_size() {
        let mut rng = rng_from_seed(7);
        for kind in ListKind::ALL {
            for (n, k) in [(1, 1), (3, 2), (5, 3)] {
                let l = random_assignment(&mut rng, n, k, kind);
                assert_eq!(l.len(), n);
                assert_eq!(l.uniform_size(), Some(k));
            }
        }
        let d = random_assignment(&mut rng, 3, 2, ListKind::Disjoint);
        assert_eq!(d.intersection_size(0, 1), 0);
        let c = random_assignment(&mut rng, 3, 2, ListKind::Constant);
        assert!(c.is_constant());
    }

    #[test]
    fn same_seed_same_lists() {
        let draw = |seed| {
            let mut rng = rng_from_seed(seed);
            (0..20)
                .map(|i| random_assignment(&mut rng, 4, 3, ListKind::ALL[i % 4]))
                .collect::<Vec<_>>()
        };
        assert_eq!(draw(11), draw(11));
        assert_ne!(draw(11), draw(12));
    }

    #[test]
    fn path_lists_respect_budget() {
        let mut rng = rng_from_seed(3);
        for _ in 0..200 {
            let n = rng.gen_range(2..=6);
            let k = rng.gen_range(1..=5);
            let l = random_path_assignment(&mut rng, n, k);
            let s: usize = (1..n).map(|i| l.difference_size(i, i - 1)).sum();
            assert!(s < k);
            assert_eq!(l.uniform_size(), Some(k));
        }
    }
}
