//! Vertex permutations with a cached disjoint-cycle decomposition.

use std::fmt;

use crate::error::{Error, Result};

/// A bijection on `0..n`.
///
/// The cycle decomposition is computed once at construction and kept in
/// canonical order: each cycle starts at its smallest element and cycles are
/// sorted by that element. Fixed points appear as 1-cycles.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    image: Vec<usize>,
    cycles: Vec<Vec<usize>>,
}

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &x in &image {
            if x >= n {
                return Err(Error::InvalidPermutation(format!(
                    "image {x} out of range for {n} points"
                )));
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidPermutation(format!("image {x} appears twice")));
            }
        }
        Ok(Self::from_image_unchecked(image))
    }

    pub(crate) fn from_image_unchecked(image: Vec<usize>) -> Self {
        let cycles = decompose(&image);
        Permutation { image, cycles }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_image_unchecked((0..n).collect())
    }

    /// The transposition exchanging `a` and `b` on `n` points.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        if a >= n || b >= n || a == b {
            return Err(Error::InvalidPermutation(format!(
                "cannot swap {a} and {b} on {n} points"
            )));
        }
        let mut image: Vec<usize> = (0..n).collect();
        image.swap(a, b);
        Ok(Self::from_image_unchecked(image))
    }

    /// Builds a permutation on `n` points from cycles; unlisted points are fixed.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut image: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (i, &v) in cycle.iter().enumerate() {
                if v >= n || std::mem::replace(&mut touched[v], true) {
                    return Err(Error::InvalidPermutation(format!(
                        "cycle element {v} repeated or out of range"
                    )));
                }
                image[v] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Self::from_image_unchecked(image))
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.image.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.image[v]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`, i.e. `v ↦ self(other(v))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.len() != other.len() {
            return Err(Error::InvalidPermutation(format!(
                "cannot compose permutations on {} and {} points",
                self.len(),
                other.len()
            )));
        }
        Ok(Self::from_image_unchecked(
            other.image.iter().map(|&v| self.image[v]).collect(),
        ))
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &x) in self.image.iter().enumerate() {
            inv[x] = i;
        }
        Self::from_image_unchecked(inv)
    }

    /// Bitmask of each cycle's support, in cycle order.
    pub(crate) fn cycle_masks(&self) -> Vec<u32> {
        self.cycles
            .iter()
            .map(|c| c.iter().fold(0u32, |m, &v| m | (1 << v)))
            .collect()
    }
}

/// Disjoint cycles of `pi` in canonical order, 1-cycles included.
pub fn cycle_decomposition(pi: &Permutation) -> Vec<Vec<usize>> {
    pi.cycles.clone()
}

fn decompose(image: &[usize]) -> Vec<Vec<usize>> {
    let n = image.len();
    let mut seen = vec![false; n];
    let mut cycles = Vec::new();
    // Scanning starts in ascending order, so every cycle begins at its minimum
    // and cycles come out sorted by minimum.
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut v = image[start];
        while v != start {
            seen[v] = true;
            cycle.push(v);
            v = image[v];
        }
        cycles.push(cycle);
    }
    cycles
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation with fixed points, e.g. `(0 2)(1)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in &self.cycles {
            write!(f, "(")?;
            for (i, v) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn identity_cycles() {
        let id = Permutation::identity(3);
        assert_eq!(cycle_decomposition(&id), vec![vec![0], vec![1], vec![2]]);
        assert!(id.is_identity());
    }

    #[test]
    fn transposition_cycles() {
        let p = Permutation::new(vec![2, 1, 0]).unwrap();
        assert_eq!(cycle_decomposition(&p), vec![vec![0, 2], vec![1]]);
        assert_eq!(p.to_string(), "(0 2)(1)");
    }

    #[test]
    fn three_cycle() {
        let p = Permutation::new(vec![1, 2, 0]).unwrap();
        assert_eq!(cycle_decomposition(&p), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn cycles_start_at_minimum() {
        let p = Permutation::new(vec![3, 0, 1, 2]).unwrap();
        // 0 -> 3 -> 2 -> 1 -> 0
        assert_eq!(p.cycles(), &[vec![0, 3, 2, 1]]);
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![0, 2]).is_err());
        assert!(Permutation::transposition(3, 1, 1).is_err());
    }

    #[test]
    fn from_cycles_matches_image() {
        let p = Permutation::from_cycles(4, &[&[0, 2], &[1, 3]]).unwrap();
        assert_eq!(p.image(), &[2, 3, 0, 1]);
    }

    fn arb_perm() -> impl Strategy<Value = Permutation> {
        (0usize..9)
            .prop_flat_map(|n| Just((0..n).collect::<Vec<_>>()).prop_shuffle())
            .prop_map(|img| Permutation::new(img).unwrap())
    }

    proptest! {
        #[test]
        fn cycles_partition_and_rebuild(p in arb_perm()) {
            let n = p.len();
            let mut covered = vec![0u8; n];
            for c in p.cycles() {
                prop_assert_eq!(c[0], *c.iter().min().unwrap());
                for &v in c {
                    covered[v] += 1;
                }
            }
            prop_assert!(covered.iter().all(|&c| c == 1));
            let mins: Vec<_> = p.cycles().iter().map(|c| c[0]).collect();
            prop_assert!(mins.windows(2).all(|w| w[0] < w[1]));
            let refs: Vec<&[usize]> = p.cycles().iter().map(|c| c.as_slice()).collect();
            prop_assert_eq!(Permutation::from_cycles(n, &refs).unwrap(), p);
        }

        #[test]
        fn inverse_composes_to_identity(p in arb_perm()) {
            prop_assert!(p.compose(&p.inverse()).unwrap().is_identity());
            prop_assert!(p.inverse().compose(&p).unwrap().is_identity());
        }
    }
}
