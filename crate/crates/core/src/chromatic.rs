//! Chromatic polynomials of labeled graphs, fixed-coloring polynomials of
//! automorphisms, the unlabeled chromatic polynomial, and brute-force counts
//! used to check them.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::permutation::Permutation;
use crate::polynomial::Polynomial;
use crate::symmetry::{automorphism_group, automorphisms_by_filter, AutGroup};

/// Brute-force enumeration refuses more than this many candidate colorings.
pub const BRUTE_FORCE_LIMIT: u128 = 100_000_000;

/// Deletion-contraction with an optional isomorphism-keyed cache.
///
/// One memo per worker; results do not depend on whether it is enabled.
#[derive(Debug)]
pub struct ChromaticMemo {
    cache: HashMap<CanonicalForm, Polynomial>,
    enabled: bool,
    hits: usize,
}

impl Default for ChromaticMemo {
    fn default() -> Self {
        Self::new()
    }
}

impl ChromaticMemo {
    pub fn new() -> Self {
        ChromaticMemo {
            cache: HashMap::new(),
            enabled: true,
            hits: 0,
        }
    }

    pub fn disabled() -> Self {
        ChromaticMemo {
            enabled: false,
            ..Self::new()
        }
    }

    pub fn hits(&self) -> usize {
        self.hits
    }

    pub fn len(&self) -> usize {
        self.cache.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cache.is_empty()
    }

    pub fn polynomial(&mut self, g: &Graph) -> Polynomial {
        let n = g.n();
        if g.is_edgeless() {
            return Polynomial::monomial(n);
        }
        if g.is_complete() {
            return Polynomial::falling_factorial(n);
        }
        let key = self.enabled.then(|| canonical_form(g));
        if let Some(p) = key.as_ref().and_then(|k| self.cache.get(k)) {
            self.hits += 1;
            return p.clone();
        }
        let (u, v) = split_edge(g);
        let mut deleted = *g;
        deleted.remove_edge(u, v);
        let contracted = g.contract(u, v);
        let p = self.polynomial(&deleted) - self.polynomial(&contracted);
        if let Some(k) = key {
            self.cache.insert(k, p.clone());
        }
        p
    }
}

/// The edge whose contraction merges the most edges (most common
/// neighbors), ties broken by the smallest endpoints.
fn split_edge(g: &Graph) -> (usize, usize) {
    g.edges()
        .max_by_key(|&(u, v)| {
            (
                (g.neighbors(u) & g.neighbors(v)).count_ones(),
                std::cmp::Reverse((u, v)),
            )
        })
        .expect("graph has an edge")
}

/// `P(G, k)`: proper `k`-colorings of the labeled graph.
pub fn chromatic_polynomial(g: &Graph) -> Polynomial {
    ChromaticMemo::new().polynomial(g)
}

/// `P(G, π, k)`: proper colorings constant on every cycle of `π`.
pub fn fixed_coloring_polynomial(g: &Graph, pi: &Permutation) -> Result<Polynomial> {
    fixed_coloring_polynomial_with(&mut ChromaticMemo::new(), g, pi)
}

fn fixed_coloring_polynomial_with(memo: &mut ChromaticMemo, g: &Graph, pi: &Permutation) -> Result<Polynomial> {
    if !g.cycles_all_independent(pi)? {
        return Ok(Polynomial::zero());
    }
    Ok(memo.polynomial(&g.quotient(pi)?))
}

/// `P(𝒢, k) = (1/|Aut G|) Σ_π P(G, π, k)`.
pub fn unlabeled_chromatic_polynomial(g: &Graph) -> Polynomial {
    unlabeled_chromatic_polynomial_with(&mut ChromaticMemo::new(), g, &automorphism_group(g))
}

pub fn unlabeled_chromatic_polynomial_with(memo: &mut ChromaticMemo, g: &Graph, aut: &AutGroup) -> Polynomial {
    let sum: Polynomial = aut
        .iter()
        .map(|pi| fixed_coloring_polynomial_with(memo, g, pi).expect("element of Aut(G)"))
        .sum();
    sum.scale(&BigRational::new(BigInt::one(), BigInt::from(aut.order())))
}

fn guard(n: usize, k: u64) -> Result<()> {
    let estimate = (k as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if estimate > BRUTE_FORCE_LIMIT {
        return Err(Error::Infeasible {
            what: "k^n coloring enumeration",
            estimate,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    Ok(())
}

/// Calls `f` on every proper coloring with colors `0..k`, by plain odometer
/// enumeration of all `k^n` assignments.
fn for_each_proper_coloring(g: &Graph, k: u64, mut f: impl FnMut(&[u64])) {
    let n = g.n();
    if k == 0 {
        if n == 0 {
            f(&[]);
        }
        return;
    }
    let mut colors = vec![0u64; n];
    loop {
        let proper = g.edges().all(|(u, v)| colors[u] != colors[v]);
        if proper {
            f(&colors);
        }
        let mut i = 0;
        loop {
            if i == n {
                return;
            }
            colors[i] += 1;
            if colors[i] < k {
                break;
            }
            colors[i] = 0;
            i += 1;
        }
    }
}

/// Proper `k`-colorings by direct enumeration.
pub fn count_colorings_brute(g: &Graph, k: u64) -> Result<u64> {
    guard(g.n(), k)?;
    let mut count = 0;
    for_each_proper_coloring(g, k, |_| count += 1);
    Ok(count)
}

/// Orbits of proper `k`-colorings under `Aut(G)`, found by explicit orbit
/// grouping. The group is taken from the exhaustive `S_n` filter, not from
/// the pruned search.
pub fn count_unlabeled_colorings_brute(g: &Graph, k: u64) -> Result<u64> {
    guard(g.n(), k)?;
    let aut = automorphisms_by_filter(g);
    let mut remaining: HashSet<Vec<u64>> = HashSet::new();
    for_each_proper_coloring(g, k, |c| {
        remaining.insert(c.to_vec());
    });
    let mut all: Vec<Vec<u64>> = remaining.iter().cloned().collect();
    all.sort();
    let mut orbits = 0;
    for f in all {
        if !remaining.contains(&f) {
            continue;
        }
        orbits += 1;
        for pi in &aut {
            // (f∘π)(v) = f(π(v))
            let image: Vec<u64> = (0..f.len()).map(|v| f[pi.apply(v)]).collect();
            remaining.remove(&image);
        }
    }
    Ok(orbits)
}
