//! Small simple graphs stored as bit-vector adjacency rows.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::permutation::Permutation;

/// Largest supported vertex count; every neighborhood fits in one word.
pub const MAX_VERTICES: usize = 16;

/// A simple undirected graph on vertices `0..n`.
///
/// Row `v` of the adjacency array is the bitmask of `N(v)`. Rows past `n`
/// are always zero, so derived equality and hashing compare edge sets.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: [u32; MAX_VERTICES],
}

#[inline]
pub(crate) fn bits(mask: u32) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

impl Graph {
    /// The edgeless graph on `n` vertices. `n = 0` is allowed.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        Ok(Graph {
            n,
            adj: [0; MAX_VERTICES],
        })
    }

    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Self::empty(n)?;
        let all = g.vertex_mask();
        for v in 0..n {
            g.adj[v] = all & !(1 << v);
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_edge_list(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Precondition(format!("cycle needs 3 vertices, got {n}")));
        }
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((n - 1, 0));
        Self::from_edge_list(n, &edges)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::Loop(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.adj[..self.n]
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Bitmask of `N(v)`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u32 {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub(crate) fn vertex_mask(&self) -> u32 {
        if self.n == 32 {
            u32::MAX
        } else {
            (1u32 << self.n) - 1
        }
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits(self.adj[u] >> (u + 1)).map(move |d| (u, u + 1 + d)))
    }

    pub fn is_complete(&self) -> bool {
        2 * self.m() == self.n * self.n.saturating_sub(1)
    }

    pub fn is_edgeless(&self) -> bool {
        self.adj[..self.n].iter().all(|&r| r == 0)
    }

    fn check_perm(&self, pi: &Permutation) -> Result<()> {
        if pi.len() != self.n {
            return Err(Error::SizeMismatch {
                graph: self.n,
                perm: pi.len(),
            });
        }
        Ok(())
    }

    /// `πG`: the graph with edge set `{π(u)π(v) : uv ∈ E(G)}`.
    pub fn apply_permutation(&self, pi: &Permutation) -> Result<Graph> {
        self.check_perm(pi)?;
        Ok(self.relabel(pi.image()))
    }

    /// Relabels vertex `v` as `image[v]`; `image` must be a bijection.
    pub(crate) fn relabel(&self, image: &[usize]) -> Graph {
        let mut out = Graph {
            n: self.n,
            adj: [0; MAX_VERTICES],
        };
        for (u, &pu) in image.iter().enumerate() {
            out.adj[pu] = bits(self.adj[u]).fold(0, |m, v| m | 1 << image[v]);
        }
        out
    }

    pub fn is_automorphism(&self, pi: &Permutation) -> bool {
        pi.len() == self.n && self.relabel(pi.image()) == *self
    }

    fn require_automorphism(&self, pi: &Permutation) -> Result<()> {
        self.check_perm(pi)?;
        if !self.is_automorphism(pi) {
            return Err(Error::NotAnAutomorphism);
        }
        Ok(())
    }

    /// The quotient `G:π`, whose vertices are the cycles of `π` in canonical
    /// order; two cycles are adjacent when some edge of `G` joins them.
    /// Loops are dropped; see [`Graph::cycles_all_independent`].
    pub fn quotient(&self, pi: &Permutation) -> Result<Graph> {
        self.require_automorphism(pi)?;
        let masks = pi.cycle_masks();
        let mut q = Graph::empty(masks.len())?;
        let reach: Vec<u32> = masks
            .iter()
            .map(|&m| bits(m).fold(0, |acc, v| acc | self.adj[v]))
            .collect();
        for (i, r) in reach.iter().enumerate() {
            for (j, m) in masks.iter().enumerate().skip(i + 1) {
                if r & m != 0 {
                    q.add_edge(i, j)?;
                }
            }
        }
        Ok(q)
    }

    /// True when no cycle of `π` contains two adjacent vertices.
    pub fn cycles_all_independent(&self, pi: &Permutation) -> Result<bool> {
        self.require_automorphism(pi)?;
        Ok(self.cycles_independent_unchecked(pi))
    }

    pub(crate) fn cycles_independent_unchecked(&self, pi: &Permutation) -> bool {
        pi.cycle_masks()
            .into_iter()
            .all(|m| bits(m).all(|v| self.adj[v] & m == 0))
    }

    /// No two distinct vertices share an open neighborhood.
    pub fn is_point_determining(&self) -> bool {
        let rows = &self.adj[..self.n];
        (0..self.n).all(|u| ((u + 1)..self.n).all(|v| rows[u] != rows[v]))
    }

    pub fn is_connected(&self) -> Result<bool> {
        if self.n == 0 {
            return Err(Error::EmptyGraph);
        }
        Ok(self.component_of(0) == self.vertex_mask())
    }

    pub(crate) fn component_of(&self, v: usize) -> u32 {
        let mut seen = 1u32 << v;
        let mut frontier = seen;
        while frontier != 0 {
            let next = bits(frontier).fold(0, |m, u| m | self.adj[u]) & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Chordality via maximum-cardinality search followed by a
    /// perfect-elimination check.
    pub fn is_chordal(&self) -> bool {
        let n = self.n;
        let mut weight = vec![0usize; n];
        let mut numbered = 0u32;
        let mut visit = Vec::with_capacity(n);
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| numbered >> v & 1 == 0)
                .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
                .expect("unnumbered vertex remains");
            numbered |= 1 << v;
            visit.push(v);
            for u in bits(self.adj[v] & !numbered) {
                weight[u] += 1;
            }
        }
        // Elimination order is the reverse of the visit order; a vertex's
        // later neighbors are those visited before it and must form a clique.
        let mut earlier = 0u32;
        for &v in &visit {
            let later = self.adj[v] & earlier;
            for u in bits(later) {
                if later & !(1 << u) & !self.adj[u] != 0 {
                    return false;
                }
            }
            earlier |= 1 << v;
        }
        true
    }

    pub fn has_triangle(&self) -> bool {
        self.edges().any(|(u, v)| self.adj[u] & self.adj[v] != 0)
    }

    /// Disjoint union; vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let mut g = Graph::empty(self.n + other.n)?;
        g.adj[..self.n].copy_from_slice(&self.adj[..self.n]);
        for v in 0..other.n {
            g.adj[self.n + v] = other.adj[v] << self.n;
        }
        Ok(g)
    }

    /// The join `self ∨ other`: disjoint union plus every cross edge.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.disjoint_union(other)?;
        let left = self.vertex_mask();
        let right = other.vertex_mask() << self.n;
        for v in 0..self.n {
            g.adj[v] |= right;
        }
        for v in self.n..g.n {
            g.adj[v] |= left;
        }
        Ok(g)
    }

    /// Adds two new nonadjacent vertices `x = n` and `y = n + 1`, each joined
    /// to every original vertex.
    pub fn cone_two_nonadjacent(&self) -> Result<Graph> {
        self.join(&Graph::empty(2)?)
    }

    /// Contracts edge `uv`: `v` is merged into `u` and the last vertex is moved
    /// into slot `v`. Parallel edges collapse.
    pub(crate) fn contract(&self, u: usize, v: usize) -> Graph {
        debug_assert!(u != v && self.has_edge(u, v));
        let mut g = *self;
        let merged = (g.adj[u] | g.adj[v]) & !(1 << u) & !(1 << v);
        for w in bits(g.adj[v]) {
            g.adj[w] &= !(1 << v);
        }
        g.adj[v] = 0;
        g.adj[u] = merged;
        for w in bits(merged) {
            g.adj[w] |= 1 << u;
        }
        g.delete_vertex(v)
    }

    /// Removes vertex `v` (which must be isolated or have been detached), moving
    /// the last vertex into its slot.
    fn delete_vertex(mut self, v: usize) -> Graph {
        let last = self.n - 1;
        for w in 0..self.n {
            self.adj[w] &= !(1 << v);
        }
        if v != last {
            let row = self.adj[last];
            for w in bits(row) {
                self.adj[w] = (self.adj[w] & !(1 << last)) | 1 << v;
            }
            self.adj[v] = row;
        }
        self.adj[last] = 0;
        self.n -= 1;
        self
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({self})")
    }
}

impl fmt::Display for Graph {
    /// Edge-list text form, e.g. `3: 0-1, 1-2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            let sep = if i == 0 { " " } else { ", " };
            write!(f, "{sep}{u}-{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Graph {
    type Err = Error;

    /// Parses the edge-list text form `n: u-v, u-v, ...`.
    fn from_str(s: &str) -> Result<Self> {
        let (head, tail) = s
            .split_once(':')
            .ok_or_else(|| Error::EdgeList(format!("missing ':' in {s:?}")))?;
        let n: usize = head
            .trim()
            .parse()
            .map_err(|_| Error::EdgeList(format!("bad vertex count {:?}", head.trim())))?;
        let mut edges = Vec::new();
        for item in tail.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (a, b) = item
                .split_once('-')
                .ok_or_else(|| Error::EdgeList(format!("bad edge {item:?}")))?;
            let parse = |t: &str| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::EdgeList(format!("bad endpoint {t:?} in {item:?}")))
            };
            edges.push((parse(a)?, parse(b)?));
        }
        Graph::from_edge_list(n, &edges)
    }
}
