//! Exact minimization of list-coloring counts over all `k`-assignments.
//!
//! Counts depend on a list assignment only up to renaming colors, so the
//! search runs over intersection patterns: for every vertex subset `S`, the
//! number of colors that lie in exactly the lists of `S`.

use std::cmp::Reverse;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};
use crate::list_coloring::{count_raw, unlabeled_list_coloring_count, ListAssignment};
use crate::parallel::map_chunks;
use crate::symmetry::{automorphism_group, AutGroup};

pub const MAX_PATTERN_ORDER: usize = 5;
pub const MAX_PATTERN_LIST_SIZE: usize = 4;
pub const WITNESS_CAP: usize = 16;

/// Nonempty subsets of `0..n` in cell order: larger subsets first, then
/// lexicographically by sorted vertex list.
pub fn cell_order(n: usize) -> Vec<u32> {
    let mut masks: Vec<u32> = (1..1u32 << n).collect();
    masks.sort_by_key(|&m| (Reverse(m.count_ones()), bits(m).collect::<Vec<_>>()));
    masks
}

/// A `k`-assignment up to a global renaming of colors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntersectionPattern {
    n: usize,
    k: usize,
    /// Cell sizes indexed like `cell_order(n)`.
    sizes: Vec<u8>,
}

impl IntersectionPattern {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Nonzero cells as `(subset bitmask, size)` in cell order.
    pub fn cells(&self) -> Vec<(u32, usize)> {
        cell_order(self.n)
            .into_iter()
            .zip(&self.sizes)
            .filter(|(_, &x)| x > 0)
            .map(|(m, &x)| (m, x as usize))
            .collect()
    }

    pub fn size_of(&self, subset: u32) -> usize {
        cell_order(self.n)
            .iter()
            .position(|&m| m == subset)
            .map_or(0, |i| self.sizes[i] as usize)
    }

    /// Builds a pattern from explicit cells, checking that every vertex lies
    /// in cells of total size `k`.
    pub fn from_cells(n: usize, k: usize, cells: &[(u32, usize)]) -> Result<Self> {
        let order = cell_order(n);
        let mut sizes = vec![0u8; order.len()];
        for &(mask, x) in cells {
            let i = order.iter().position(|&m| m == mask).ok_or_else(|| {
                Error::Precondition(format!("subset {mask:#b} is not a nonempty subset of {n} vertices"))
            })?;
            sizes[i] =
                u8::try_from(sizes[i] as usize + x).map_err(|_| Error::Precondition("cell size too large".into()))?;
        }
        let p = IntersectionPattern { n, k, sizes };
        for v in 0..n {
            let total: usize = p.cells().iter().filter(|(m, _)| m >> v & 1 == 1).map(|c| c.1).sum();
            if total != k {
                return Err(Error::Precondition(format!(
                    "vertex {v} lies in cells of total size {total}, expected {k}"
                )));
            }
        }
        Ok(p)
    }

    /// The pattern of a concrete `k`-assignment.
    pub fn of_assignment(lists: &ListAssignment) -> Result<Self> {
        let n = lists.len();
        let k = lists
            .uniform_size()
            .ok_or_else(|| Error::InvalidLists("lists differ in size".into()))?;
        let mut by_color: BTreeMap<u8, u32> = BTreeMap::new();
        for (v, l) in lists.lists().iter().enumerate() {
            for &c in l {
                *by_color.entry(c).or_default() |= 1 << v;
            }
        }
        let mut cells: BTreeMap<u32, usize> = BTreeMap::new();
        for mask in by_color.into_values() {
            *cells.entry(mask).or_default() += 1;
        }
        Self::from_cells(n, k, &cells.into_iter().collect::<Vec<_>>())
    }

    /// Concrete lists: colors `0, 1, 2, …` handed out cell by cell in cell order.
    pub fn materialize(&self) -> ListAssignment {
        let mut lists = vec![Vec::with_capacity(self.k); self.n];
        let mut next = 0usize;
        for (mask, x) in self.cells() {
            for c in next..next + x {
                for v in bits(mask) {
                    lists[v].push(c as u8);
                }
            }
            next += x;
        }
        ListAssignment::new(lists)
    }

    /// Total number of distinct colors.
    pub fn color_count(&self) -> usize {
        self.sizes.iter().map(|&x| x as usize).sum()
    }
}

impl fmt::Display for IntersectionPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells = self.cells();
        if cells.is_empty() {
            return write!(f, "(no cells)");
        }
        for (i, (mask, x)) in cells.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            let vs: Vec<String> = bits(*mask).map(|v| v.to_string()).collect();
            write!(f, "{{{}}}:{x}", vs.join(","))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct RawPattern {
    n: usize,
    k: usize,
    cells: BTreeMap<String, usize>,
}

impl Serialize for IntersectionPattern {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawPattern {
            n: self.n,
            k: self.k,
            cells: self.cells().into_iter().map(|(m, x)| (m.to_string(), x)).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntersectionPattern {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = RawPattern::deserialize(d)?;
        let cells = raw
            .cells
            .iter()
            .map(|(m, &x)| m.parse::<u32>().map(|m| (m, x)).map_err(D::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        IntersectionPattern::from_cells(raw.n, raw.k, &cells).map_err(D::Error::custom)
    }
}

fn binomial(n: u128, r: u128) -> u128 {
    (0..r).fold(1u128, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// Upper estimate of the pattern count: each vertex independently splits `k`
/// over the `2^(n-1)` subsets containing it.
pub fn pattern_count_estimate(n: usize, k: usize) -> u128 {
    if n == 0 {
        return 1;
    }
    let per_vertex = binomial(k as u128 + (1u128 << (n - 1)) - 1, k as u128);
    (0..n).fold(1u128, |acc, _| acc.saturating_mul(per_vertex))
}

fn guard(n: usize, k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::Precondition("list size must be at least 1".into()));
    }
    if n > MAX_PATTERN_ORDER {
        return Err(Error::Infeasible {
            what: "vertex count for intersection pattern enumeration",
            estimate: n as u128,
            limit: MAX_PATTERN_ORDER as u128,
        });
    }
    if k > MAX_PATTERN_LIST_SIZE {
        return Err(Error::Infeasible {
            what: "list size for intersection pattern enumeration",
            estimate: k as u128,
            limit: MAX_PATTERN_LIST_SIZE as u128,
        });
    }
    Ok(())
}

/// Every intersection pattern of `k`-assignments on `n` vertices, once each,
/// in lexicographic order of the cell-size vector. With `group`, only the
/// lexicographically least pattern of each orbit under the induced action on
/// subsets is kept.
pub fn enumerate_patterns(n: usize, k: usize, group: Option<&AutGroup>) -> Result<Vec<IntersectionPattern>> {
    guard(n, k)?;
    let order = cell_order(n);
    // Non-singleton cells precede singletons in cell order; singletons take
    // whatever capacity is left.
    let shared = order.iter().take_while(|m| m.count_ones() >= 2).count();
    let mut out = Vec::new();
    let mut sizes = vec![0u8; order.len()];
    let mut room = vec![k as u8; n];
    fill(&order, shared, 0, &mut sizes, &mut room, &mut out);

    let Some(group) = group else {
        return Ok(out
            .into_iter()
            .map(|sizes| IntersectionPattern { n, k, sizes })
            .collect());
    };
    let index_of = |mask: u32| order.iter().position(|&m| m == mask).expect("subset present");
    let maps: Vec<Vec<usize>> = group
        .iter()
        .filter(|pi| !pi.is_identity())
        .map(|pi| {
            order
                .iter()
                .map(|&m| index_of(bits(m).fold(0u32, |acc, v| acc | 1 << pi.apply(v))))
                .collect()
        })
        .collect();
    let mut image = vec![0u8; order.len()];
    Ok(out
        .into_iter()
        .filter(|sizes| {
            maps.iter().all(|map| {
                for (i, &j) in map.iter().enumerate() {
                    image[j] = sizes[i];
                }
                image.as_slice() >= sizes.as_slice()
            })
        })
        .map(|sizes| IntersectionPattern { n, k, sizes })
        .collect())
}

fn fill(order: &[u32], shared: usize, i: usize, sizes: &mut Vec<u8>, room: &mut [u8], out: &mut Vec<Vec<u8>>) {
    if i == shared {
        for (j, &m) in order.iter().enumerate().skip(shared) {
            sizes[j] = room[m.trailing_zeros() as usize];
        }
        out.push(sizes.clone());
        for s in &mut sizes[shared..] {
            *s = 0;
        }
        return;
    }
    let mask = order[i];
    let max = bits(mask).map(|v| room[v]).min().unwrap_or(0);
    for x in 0..=max {
        sizes[i] = x;
        for v in bits(mask) {
            room[v] -= x;
        }
        fill(order, shared, i + 1, sizes, room, out);
        for v in bits(mask) {
            room[v] += x;
        }
    }
    sizes[i] = 0;
}

/// Outcome of a minimization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchResult {
    pub value: u128,
    /// Up to 16 minimizing patterns, first in enumeration order.
    pub witnesses: Vec<IntersectionPattern>,
    /// Patterns examined (after symmetry reduction).
    pub explored: usize,
    /// True when every pattern was examined, so `value` is the exact minimum.
    pub exhausted: bool,
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub workers: usize,
    /// Keep one pattern per orbit of `Aut(G)`.
    pub symmetry_reduction: bool,
    /// Examine at most this many patterns; the result is then an upper bound.
    pub budget: Option<usize>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            workers: 1,
            symmetry_reduction: true,
            budget: None,
        }
    }
}

impl SearchOptions {
    pub fn with_workers(workers: usize) -> Self {
        SearchOptions {
            workers,
            ..Self::default()
        }
    }
}

struct Partial {
    best: u128,
    witnesses: Vec<IntersectionPattern>,
}

/// Runs the branch-and-bound minimization. `evaluate(lists, cap)` returns the
/// pattern's value, or `None` when it certainly exceeds `cap`.
fn minimize<F>(
    g: &Graph,
    k: usize,
    opts: &SearchOptions,
    aut: &AutGroup,
    start: u128,
    evaluate: F,
) -> Result<SearchResult>
where
    F: Fn(&ListAssignment, u128) -> Result<Option<u128>> + Sync,
{
    let group = opts.symmetry_reduction.then_some(aut);
    let mut patterns = enumerate_patterns(g.n(), k, group)?;
    let exhausted = opts.budget.is_none_or(|b| b >= patterns.len());
    if !exhausted {
        patterns.truncate(opts.budget.unwrap_or(0));
    }
    // Without a complete sweep the constant pattern may be missing, so the
    // incumbent cannot start at its value.
    let start = if exhausted { start } else { u128::MAX };
    let parts = map_chunks(&patterns, opts.workers, |chunk| -> Result<Partial> {
        let mut part = Partial {
            best: start,
            witnesses: Vec::new(),
        };
        for p in chunk {
            let Some(v) = evaluate(&p.materialize(), part.best)? else {
                continue;
            };
            if v < part.best {
                part.best = v;
                part.witnesses.clear();
            }
            if v == part.best && part.witnesses.len() < WITNESS_CAP {
                part.witnesses.push(p.clone());
            }
        }
        Ok(part)
    });
    let parts = parts.into_iter().collect::<Result<Vec<_>>>()?;
    let value = parts
        .iter()
        .filter(|p| !p.witnesses.is_empty())
        .map(|p| p.best)
        .min()
        .ok_or_else(|| Error::Precondition("no pattern examined".into()))?;
    let witnesses = parts
        .into_iter()
        .filter(|p| p.best == value)
        .flat_map(|p| p.witnesses)
        .take(WITNESS_CAP)
        .collect();
    Ok(SearchResult {
        value,
        witnesses,
        explored: patterns.len(),
        exhausted,
    })
}

/// `P_ℓ(G, k)`: the least `P(G, L)` over all `k`-assignments.
pub fn list_color_function(g: &Graph, k: usize, opts: &SearchOptions) -> Result<SearchResult> {
    guard(g.n(), k)?;
    let aut = automorphism_group(g);
    let constant = count_raw(g, ListAssignment::constant(g.n(), k).lists(), None);
    minimize(g, k, opts, &aut, constant, |lists, cap| {
        let v = count_raw(g, lists.lists(), Some(cap));
        Ok((v <= cap).then_some(v))
    })
}

/// `P_ℓ(𝒢, k)`: the least `u_ℓ(G, L)` over all `k`-assignments. A pattern is
/// abandoned once `P(G, L)` exceeds `|Aut(G)|` times the incumbent, since
/// every class holds at most `|Aut(G)|` colorings.
pub fn unlabeled_list_color_function(g: &Graph, k: usize, opts: &SearchOptions) -> Result<SearchResult> {
    guard(g.n(), k)?;
    let aut = automorphism_group(g);
    unlabeled_list_color_function_with(g, &aut, k, opts)
}

pub fn unlabeled_list_color_function_with(
    g: &Graph,
    aut: &AutGroup,
    k: usize,
    opts: &SearchOptions,
) -> Result<SearchResult> {
    guard(g.n(), k)?;
    let order = aut.order() as u128;
    let constant = unlabeled_list_coloring_count(g, aut, &ListAssignment::constant(g.n(), k))? as u128;
    minimize(g, k, opts, aut, constant, |lists, cap| {
        let labeled_cap = cap.saturating_mul(order);
        if count_raw(g, lists.lists(), Some(labeled_cap)) > labeled_cap {
            return Ok(None);
        }
        Ok(Some(unlabeled_list_coloring_count(g, aut, lists)? as u128))
    })
}

/// One row of a threshold table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThresholdRow {
    pub k: usize,
    /// `P_ℓ(𝒢, k)`, absent when the search was refused.
    pub list_value: Option<u128>,
    /// `P(𝒢, k)`.
    pub polynomial_value: u128,
    pub equal: Option<bool>,
    pub skipped: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThresholdTable {
    pub graph: String,
    pub rows: Vec<ThresholdRow>,
    /// Least tested `k₀` with equality at every feasible tested `k ≥ k₀`.
    pub empirical_k0: Option<usize>,
    pub note: String,
}

/// Compares `P_ℓ(𝒢, k)` with `P(𝒢, k)` for `k = 1..=k_max`. Infeasible `k`
/// are recorded as skipped rows.
pub fn threshold_search(g: &Graph, k_max: usize, opts: &SearchOptions) -> Result<ThresholdTable> {
    let aut = automorphism_group(g);
    let poly =
        crate::chromatic::unlabeled_chromatic_polynomial_with(&mut crate::chromatic::ChromaticMemo::new(), g, &aut);
    let mut rows = Vec::new();
    for k in 1..=k_max {
        let polynomial_value = poly
            .eval_integer(k as i64)
            .and_then(|v| u128::try_from(v).ok())
            .ok_or_else(|| Error::Precondition("unlabeled chromatic value is not a small integer".into()))?;
        let row = match unlabeled_list_color_function_with(g, &aut, k, opts) {
            Ok(r) => ThresholdRow {
                k,
                list_value: Some(r.value),
                polynomial_value,
                equal: Some(r.value == polynomial_value),
                skipped: None,
            },
            Err(e @ Error::Infeasible { .. }) => ThresholdRow {
                k,
                list_value: None,
                polynomial_value,
                equal: None,
                skipped: Some(e.to_string()),
            },
            Err(e) => return Err(e),
        };
        rows.push(row);
    }
    let mut empirical_k0 = None;
    for row in rows.iter().rev().filter(|r| r.equal.is_some()) {
        if row.equal == Some(true) {
            empirical_k0 = Some(row.k);
        } else {
            break;
        }
    }
    Ok(ThresholdTable {
        graph: g.to_string(),
        rows,
        empirical_k0,
        note: "empirical, not a proof of N".into(),
    })
}
