//! Canonical forms for small graphs.
//!
//! The canonical form of `G` is the graph6 string of the relabeling of `G`
//! whose graph6 bit string is lexicographically smallest among relabelings
//! that list vertices in nondecreasing color-refinement class. The class
//! order is an isomorphism invariant, so isomorphic graphs search the same
//! set of bit strings and end at the same minimum.

use std::fmt;

use crate::error::Result;
use crate::graph::{bits, Graph};
use crate::graph6::{parse_graph6, to_graph6};

/// Canonical byte string; equal iff the graphs are isomorphic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// The canonical representative graph.
    pub fn to_graph(&self) -> Result<Graph> {
        parse_graph6(std::str::from_utf8(&self.0).expect("canonical form is ASCII"))
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(std::str::from_utf8(&self.0).expect("canonical form is ASCII"))
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({self})")
    }
}

/// Stable color refinement (1-dimensional Weisfeiler-Leman) starting from
/// degrees. Class ids are ranks of sorted signatures, so they are invariant
/// under relabeling.
pub fn refine_colors(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colors: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = count_distinct(&colors);
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = bits(g.neighbors(v)).map(|u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut sorted = signatures.clone();
        sorted.sort();
        sorted.dedup();
        let next: Vec<usize> = signatures
            .iter()
            .map(|s| sorted.binary_search(s).expect("signature present"))
            .collect();
        let next_classes = sorted.len();
        colors = next;
        if next_classes == classes {
            return colors;
        }
        classes = next_classes;
    }
}

fn count_distinct(xs: &[usize]) -> usize {
    let mut v = xs.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

struct Search<'a> {
    g: &'a Graph,
    colors: Vec<usize>,
    /// Required class for each position.
    slot_color: Vec<usize>,
    order: Vec<usize>,
    columns: Vec<u32>,
    best_order: Vec<usize>,
    best_columns: Vec<u32>,
    have_best: bool,
}

impl Search<'_> {
    fn run(&mut self, pos: usize, placed: u32) {
        let n = self.g.n();
        if pos == n {
            if !self.have_best || self.columns < self.best_columns {
                self.best_columns.clone_from(&self.columns);
                self.best_order.clone_from(&self.order);
                self.have_best = true;
            }
            return;
        }
        let want = self.slot_color[pos];
        let mut tried = 0u32;
        for v in 0..n {
            if placed >> v & 1 == 1 || self.colors[v] != want {
                continue;
            }
            // Twins u, v (same neighborhood outside {u, v}) are exchanged by an
            // automorphism fixing every placed vertex; their subtrees coincide.
            let nv = self.g.neighbors(v);
            if bits(tried).any(|u| (self.g.neighbors(u) ^ nv) & !(1 << u | 1 << v) == 0) {
                continue;
            }
            tried |= 1 << v;
            // Column bit for row i is most significant for small i.
            let col = self.order[..pos]
                .iter()
                .fold(0u32, |acc, &u| (acc << 1) | self.g.has_edge(u, v) as u32);
            self.columns[pos] = col;
            if self.have_best && self.columns[..=pos] > self.best_columns[..=pos] {
                continue;
            }
            self.order[pos] = v;
            self.run(pos + 1, placed | 1 << v);
        }
    }
}

/// Returns `order` where `order[p]` is the vertex placed at canonical position `p`.
pub fn canonical_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    let colors = refine_colors(g);
    let mut slot_color = colors.clone();
    slot_color.sort_unstable();
    let mut search = Search {
        g,
        colors,
        slot_color,
        order: vec![0; n],
        columns: vec![0; n],
        best_order: Vec::new(),
        best_columns: Vec::new(),
        have_best: false,
    };
    search.run(0, 0);
    search.best_order
}

/// The canonical relabeling of `g`.
pub fn canonical_graph(g: &Graph) -> Graph {
    let order = canonical_order(g);
    let mut image = vec![0; order.len()];
    for (p, &v) in order.iter().enumerate() {
        image[v] = p;
    }
    g.relabel(&image)
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    CanonicalForm(to_graph6(&canonical_graph(g)).into_bytes())
}

impl Graph {
    pub fn canonical_form(&self) -> CanonicalForm {
        canonical_form(self)
    }

    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        self.n() == other.n() && self.m() == other.m() && canonical_form(self) == canonical_form(other)
    }
}
