//! Proper list colorings: counting, fixed points of automorphisms, and the
//! classes of colorings that differ by an automorphism.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::dsu::DisjointSets;
use crate::error::{Error, Result};
use crate::graph::{bits, Graph};
use crate::permutation::Permutation;
use crate::symmetry::AutGroup;

/// `count_list_colorings` refuses list assignments with more candidate
/// colorings than this.
pub const COUNT_LIMIT: u128 = 100_000_000;
/// Enumeration refuses to materialize more colorings than this.
pub const ENUMERATION_LIMIT: usize = 1_000_000;

/// One color per vertex.
pub type Coloring = Vec<u8>;

/// Per-vertex sorted color sets.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawLists", into = "RawLists")]
pub struct ListAssignment {
    lists: Vec<Vec<u8>>,
}

#[derive(Serialize, Deserialize)]
struct RawLists {
    lists: Vec<Vec<u8>>,
}

impl TryFrom<RawLists> for ListAssignment {
    type Error = Error;
    fn try_from(raw: RawLists) -> Result<Self> {
        Ok(ListAssignment::new(raw.lists))
    }
}

impl From<ListAssignment> for RawLists {
    fn from(l: ListAssignment) -> Self {
        RawLists { lists: l.lists }
    }
}

impl ListAssignment {
    /// Lists are sorted and deduplicated. Empty lists are representable (they
    /// arise from intersections) but rejected by the counting entry points.
    pub fn new(mut lists: Vec<Vec<u8>>) -> Self {
        for l in &mut lists {
            l.sort_unstable();
            l.dedup();
        }
        ListAssignment { lists }
    }

    /// The same `k` colors `0..k` on each of `n` vertices.
    pub fn constant(n: usize, k: usize) -> Self {
        assert!(k <= 256, "color identifiers are below 256");
        ListAssignment {
            lists: vec![(0..k).map(|c| c as u8).collect(); n],
        }
    }

    pub fn lists(&self) -> &[Vec<u8>] {
        &self.lists
    }

    pub fn list(&self, v: usize) -> &[u8] {
        &self.lists[v]
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    /// `k` when every list has exactly `k` colors.
    pub fn uniform_size(&self) -> Option<usize> {
        let k = self.lists.first()?.len();
        self.lists.iter().all(|l| l.len() == k).then_some(k)
    }

    pub fn is_constant(&self) -> bool {
        self.lists.windows(2).all(|w| w[0] == w[1])
    }

    /// `L∘π`: vertex `v` receives the list of `π(v)`.
    pub fn permute_vertices(&self, pi: &Permutation) -> ListAssignment {
        ListAssignment {
            lists: (0..self.len()).map(|v| self.lists[pi.apply(v)].clone()).collect(),
        }
    }

    /// Renames every color through `map`, which must be injective on the
    /// colors in use.
    pub fn relabel_colors(&self, map: impl Fn(u8) -> u8) -> ListAssignment {
        ListAssignment::new(self.lists.iter().map(|l| l.iter().map(|&c| map(c)).collect()).collect())
    }

    /// `|L(u) - L(v)|`.
    pub fn difference_size(&self, u: usize, v: usize) -> usize {
        let other = &self.lists[v];
        self.lists[u].iter().filter(|c| other.binary_search(c).is_err()).count()
    }

    pub fn intersection_size(&self, u: usize, v: usize) -> usize {
        let other = &self.lists[v];
        self.lists[u].iter().filter(|c| other.binary_search(c).is_ok()).count()
    }

    fn candidate_count(&self) -> u128 {
        self.lists
            .iter()
            .try_fold(1u128, |acc, l| acc.checked_mul(l.len() as u128))
            .unwrap_or(u128::MAX)
    }

    fn check_for(&self, g: &Graph) -> Result<()> {
        if self.len() != g.n() {
            return Err(Error::InvalidLists(format!(
                "{} lists for a graph on {} vertices",
                self.len(),
                g.n()
            )));
        }
        if let Some(v) = self.lists.iter().position(Vec::is_empty) {
            return Err(Error::InvalidLists(format!("list of vertex {v} is empty")));
        }
        Ok(())
    }
}

impl fmt::Display for ListAssignment {
    /// Inline form `0:1,2;1:1,2;2:2,3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (v, l) in self.lists.iter().enumerate() {
            if v > 0 {
                write!(f, ";")?;
            }
            write!(f, "{v}:")?;
            for (i, c) in l.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{c}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for ListAssignment {
    type Err = Error;

    /// Parses `v:c,c;v:c,c;...`; every vertex `0..n` must appear exactly once.
    fn from_str(s: &str) -> Result<Self> {
        let mut entries: Vec<(usize, Vec<u8>)> = Vec::new();
        for part in s.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            let (v, colors) = part
                .split_once(':')
                .ok_or_else(|| Error::InvalidLists(format!("missing ':' in {part:?}")))?;
            let v: usize = v
                .trim()
                .parse()
                .map_err(|_| Error::InvalidLists(format!("bad vertex in {part:?}")))?;
            let colors = colors
                .split(',')
                .map(str::trim)
                .filter(|c| !c.is_empty())
                .map(|c| {
                    c.parse::<u8>()
                        .map_err(|_| Error::InvalidLists(format!("bad color {c:?} (colors are 0..=255)")))
                })
                .collect::<Result<Vec<u8>>>()?;
            entries.push((v, colors));
        }
        entries.sort_by_key(|e| e.0);
        for (i, (v, _)) in entries.iter().enumerate() {
            if *v != i {
                return Err(Error::InvalidLists(format!(
                    "vertices must be listed exactly once from 0; found {v} at position {i}"
                )));
            }
        }
        Ok(ListAssignment::new(entries.into_iter().map(|e| e.1).collect()))
    }
}

/// Counts proper colorings from `lists` by backtracking, visiting vertices by
/// ascending list size (ties by index). Empty lists give zero. Stops early and
/// returns a value above `cap` once the count exceeds it.
pub(crate) fn count_raw(g: &Graph, lists: &[Vec<u8>], cap: Option<u128>) -> u128 {
    let n = g.n();
    if n == 0 {
        return 1;
    }
    if lists.iter().any(Vec::is_empty) {
        return 0;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (lists[v].len(), v));
    let mut colors = vec![0u8; n];
    let cap = cap.unwrap_or(u128::MAX);
    let mut count = 0u128;
    backtrack_count(g, lists, &order, 0, 0, &mut colors, &mut count, cap);
    count
}

#[allow(clippy::too_many_arguments)]
fn backtrack_count(
    g: &Graph,
    lists: &[Vec<u8>],
    order: &[usize],
    depth: usize,
    colored: u32,
    colors: &mut [u8],
    count: &mut u128,
    cap: u128,
) {
    let v = order[depth];
    let blocked = g.neighbors(v) & colored;
    let last = depth + 1 == order.len();
    for &c in &lists[v] {
        if bits(blocked).any(|u| colors[u] == c) {
            continue;
        }
        if last {
            *count += 1;
        } else {
            colors[v] = c;
            backtrack_count(g, lists, order, depth + 1, colored | 1 << v, colors, count, cap);
        }
        if *count > cap {
            return;
        }
    }
}

/// `P(G, L)`: proper `L`-colorings.
pub fn count_list_colorings(g: &Graph, lists: &ListAssignment) -> Result<u128> {
    lists.check_for(g)?;
    let estimate = lists.candidate_count();
    if estimate > COUNT_LIMIT {
        return Err(Error::Infeasible {
            what: "list coloring count",
            estimate,
            limit: COUNT_LIMIT,
        });
    }
    Ok(count_raw(g, &lists.lists, None))
}

fn intersect(a: &[u8], b: &[u8]) -> Vec<u8> {
    a.iter().copied().filter(|c| b.binary_search(c).is_ok()).collect()
}

/// `(G:π, L')` with `L'(C) = ⋂_{v ∈ C} L(v)`. Requires every cycle of `π` to
/// be independent.
pub fn quotient_list_assignment(
    g: &Graph,
    pi: &Permutation,
    lists: &ListAssignment,
) -> Result<(Graph, ListAssignment)> {
    if lists.len() != g.n() {
        return Err(Error::InvalidLists(format!(
            "{} lists for a graph on {} vertices",
            lists.len(),
            g.n()
        )));
    }
    if !g.cycles_all_independent(pi)? {
        return Err(Error::AdjacentCycle);
    }
    let q = g.quotient(pi)?;
    let merged = pi
        .cycles()
        .iter()
        .map(|cycle| {
            cycle[1..].iter().fold(lists.lists[cycle[0]].clone(), |acc, &v| {
                intersect(&acc, &lists.lists[v])
            })
        })
        .collect();
    Ok((q, ListAssignment { lists: merged }))
}

/// `P(G, π, L)`: proper `L`-colorings constant on every cycle of `π`,
/// counted on the quotient.
pub fn fixed_list_coloring_count(g: &Graph, pi: &Permutation, lists: &ListAssignment) -> Result<u128> {
    lists.check_for(g)?;
    if !g.cycles_all_independent(pi)? {
        return Ok(0);
    }
    let (q, merged) = quotient_list_assignment(g, pi, lists)?;
    Ok(count_raw(&q, &merged.lists, None))
}

/// `P(G, π, L)` by filtering the enumerated colorings for `f∘π = f`.
pub fn fixed_list_coloring_count_by_filter(g: &Graph, pi: &Permutation, lists: &ListAssignment) -> Result<u128> {
    if !g.is_automorphism(pi) {
        return Err(Error::NotAnAutomorphism);
    }
    let all = enumerate_list_colorings(g, lists)?;
    Ok(all
        .iter()
        .filter(|f| (0..f.len()).all(|v| f[pi.apply(v)] == f[v]))
        .count() as u128)
}

/// All proper `L`-colorings in lexicographic order (vertex 0 most significant).
pub fn enumerate_list_colorings(g: &Graph, lists: &ListAssignment) -> Result<Vec<Coloring>> {
    lists.check_for(g)?;
    let mut out = Vec::new();
    let mut colors = vec![0u8; g.n()];
    if !enumerate_rec(g, &lists.lists, 0, &mut colors, &mut out) {
        return Err(Error::Infeasible {
            what: "list coloring enumeration",
            estimate: lists.candidate_count().max(ENUMERATION_LIMIT as u128 + 1),
            limit: ENUMERATION_LIMIT as u128,
        });
    }
    Ok(out)
}

fn enumerate_rec(g: &Graph, lists: &[Vec<u8>], v: usize, colors: &mut [u8], out: &mut Vec<Coloring>) -> bool {
    if v == g.n() {
        if out.len() == ENUMERATION_LIMIT {
            return false;
        }
        out.push(colors.to_vec());
        return true;
    }
    let earlier = g.neighbors(v) & ((1u32 << v) - 1);
    for &c in &lists[v] {
        if bits(earlier).any(|u| colors[u] == c) {
            continue;
        }
        colors[v] = c;
        if !enumerate_rec(g, lists, v + 1, colors, out) {
            return false;
        }
    }
    true
}

/// Packs a coloring into an integer whose order matches lexicographic order.
fn key(f: &[u8]) -> u128 {
    f.iter().fold(0u128, |acc, &c| (acc << 8) | c as u128)
}

/// The classes of `f ~ g ⇔ f∘π = g for some π ∈ Aut(G)` on the proper
/// `L`-colorings, merged with a disjoint-set forest. An image `f∘π` that is
/// not itself an `L`-coloring merges nothing.
#[derive(Clone, Debug)]
pub struct ColoringClasses {
    pub colorings: Vec<Coloring>,
    /// Class index of each coloring; classes are numbered by first appearance.
    pub class_of: Vec<usize>,
    pub class_count: usize,
}

impl ColoringClasses {
    pub fn classes(&self) -> Vec<Vec<&Coloring>> {
        let mut out = vec![Vec::new(); self.class_count];
        for (f, &c) in self.colorings.iter().zip(&self.class_of) {
            out[c].push(f);
        }
        out
    }
}

pub fn coloring_classes(g: &Graph, aut: &AutGroup, lists: &ListAssignment) -> Result<ColoringClasses> {
    let colorings = enumerate_list_colorings(g, lists)?;
    let keys: Vec<u128> = colorings.iter().map(|f| key(f)).collect();
    let mut sets = DisjointSets::new(colorings.len());
    let n = g.n();
    let mut image = vec![0u8; n];
    for (i, f) in colorings.iter().enumerate() {
        for pi in aut {
            for v in 0..n {
                image[v] = f[pi.apply(v)];
            }
            if let Ok(j) = keys.binary_search(&key(&image)) {
                sets.union(i, j);
            }
        }
    }
    let mut label = vec![usize::MAX; colorings.len()];
    let mut class_of = Vec::with_capacity(colorings.len());
    let mut next = 0;
    for i in 0..colorings.len() {
        let root = sets.find(i);
        if label[root] == usize::MAX {
            label[root] = next;
            next += 1;
        }
        class_of.push(label[root]);
    }
    Ok(ColoringClasses {
        colorings,
        class_of,
        class_count: next,
    })
}

/// `u_ℓ(G, L)`: the number of classes of equivalent proper `L`-colorings.
pub fn unlabeled_list_coloring_count(g: &Graph, aut: &AutGroup, lists: &ListAssignment) -> Result<u64> {
    Ok(coloring_classes(g, aut, lists)?.class_count as u64)
}

/// `(1/|Aut G|) Σ_π P(G, π, L)`, a lower bound for `u_ℓ(G, L)`.
pub fn burnside_lower_bound(g: &Graph, aut: &AutGroup, lists: &ListAssignment) -> Result<BigRational> {
    let mut total = BigInt::from(0);
    for pi in aut {
        total += BigInt::from(fixed_list_coloring_count(g, pi, lists)?);
    }
    Ok(BigRational::new(total, BigInt::from(aut.order())))
}

/// For each coloring `f`, tallies how many `π` send `f` to each member of its
/// class and compares with the stabilizer size. Returns the first violation.
pub fn stabilizer_coset_violation(
    g: &Graph,
    aut: &AutGroup,
    classes: &ColoringClasses,
) -> Option<(Coloring, Coloring, usize, usize)> {
    let n = g.n();
    let keys: Vec<u128> = classes.colorings.iter().map(|f| key(f)).collect();
    let members = classes.classes();
    let mut tally = vec![0usize; classes.colorings.len()];
    let mut image = vec![0u8; n];
    for (i, f) in classes.colorings.iter().enumerate() {
        tally.iter_mut().for_each(|t| *t = 0);
        for pi in aut {
            for v in 0..n {
                image[v] = f[pi.apply(v)];
            }
            if let Ok(j) = keys.binary_search(&key(&image)) {
                tally[j] += 1;
            }
        }
        let stab = tally[i];
        for g_col in &members[classes.class_of[i]] {
            let j = keys.binary_search(&key(g_col)).expect("member is enumerated");
            if tally[j] != stab {
                return Some((f.clone(), (*g_col).clone(), tally[j], stab));
            }
        }
    }
    None
}
