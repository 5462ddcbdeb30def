//! One representative per isomorphism class of graphs on `n ≤ 7` vertices.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::parse_graph6;
use crate::symmetry::automorphism_group;

pub const MAX_CATALOG_ORDER: usize = 7;
pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flags {
    pub connected: bool,
    pub point_determining: bool,
    pub chordal: bool,
    pub triangle_free: bool,
}

impl Flags {
    pub fn of(g: &Graph) -> Self {
        Flags {
            // the null graph is treated as disconnected
            connected: g.is_connected().unwrap_or(false),
            point_determining: g.is_point_determining(),
            chordal: g.is_chordal(),
            triangle_free: !g.has_triangle(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    /// Canonical representative.
    pub graph: Graph,
    pub flags: Flags,
    pub aut_order: usize,
}

impl CatalogEntry {
    pub fn new(graph: Graph) -> Self {
        CatalogEntry {
            flags: Flags::of(&graph),
            aut_order: automorphism_group(&graph).order(),
            graph,
        }
    }
}

/// All isomorphism classes on `n` vertices, sorted by canonical form.
pub fn enumerate_unlabeled(n: usize) -> Result<Vec<CatalogEntry>> {
    if n > MAX_CATALOG_ORDER {
        return Err(Error::TooManyVertices {
            n,
            max: MAX_CATALOG_ORDER,
        });
    }
    let forms = if n <= 6 {
        by_labeled_sweep(n)?
    } else {
        by_augmentation(n)?
    };
    forms
        .into_keys()
        .map(|form| form.to_graph().map(CatalogEntry::new))
        .collect()
}

fn by_labeled_sweep(n: usize) -> Result<BTreeMap<CanonicalForm, ()>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut forms = BTreeMap::new();
    for mask in 0u64..1 << pairs.len() {
        let mut g = Graph::empty(n)?;
        for (b, &(u, v)) in pairs.iter().enumerate() {
            if mask >> b & 1 == 1 {
                g.add_edge(u, v)?;
            }
        }
        forms.insert(canonical_form(&g), ());
    }
    Ok(forms)
}

/// Every graph on `n` vertices arises from one on `n - 1` by adding a vertex
/// with some neighbourhood, so extending each smaller representative in all
/// `2^(n-1)` ways reaches every class.
fn by_augmentation(n: usize) -> Result<BTreeMap<CanonicalForm, ()>> {
    let smaller = enumerate_unlabeled(n - 1)?;
    let mut forms = BTreeMap::new();
    for entry in &smaller {
        for nbhd in 0u32..1 << (n - 1) {
            let mut g = entry.graph.disjoint_union(&Graph::empty(1)?)?;
            for u in 0..n - 1 {
                if nbhd >> u & 1 == 1 {
                    g.add_edge(u, n - 1)?;
                }
            }
            forms.insert(canonical_form(&g), ());
        }
    }
    Ok(forms)
}

/// Requested flag values; `None` leaves a flag unconstrained.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FlagFilter {
    pub connected: Option<bool>,
    pub point_determining: Option<bool>,
    pub chordal: Option<bool>,
    pub triangle_free: Option<bool>,
}

impl FlagFilter {
    pub fn matches(&self, f: &Flags) -> bool {
        let ok = |want: Option<bool>, have: bool| want.is_none_or(|w| w == have);
        ok(self.connected, f.connected)
            && ok(self.point_determining, f.point_determining)
            && ok(self.chordal, f.chordal)
            && ok(self.triangle_free, f.triangle_free)
    }
}

pub fn filter<'a>(entries: &'a [CatalogEntry], wanted: &FlagFilter) -> Vec<&'a CatalogEntry> {
    entries.iter().filter(|e| wanted.matches(&e.flags)).collect()
}

/// Every unlabeled graph with `min_order ≤ n ≤ max_order`, by order.
pub fn catalog_up_to(min_order: usize, max_order: usize) -> Result<Vec<CatalogEntry>> {
    let mut out = Vec::new();
    for n in min_order..=max_order {
        out.extend(enumerate_unlabeled(n)?);
    }
    Ok(out)
}

#[derive(Serialize, Deserialize)]
struct Sidecar {
    version: u32,
    n: usize,
    entries: Vec<SidecarEntry>,
}

#[derive(Serialize, Deserialize)]
struct SidecarEntry {
    graph6: String,
    #[serde(flatten)]
    flags: Flags,
    aut_order: usize,
}

pub fn cache_paths(dir: &Path, n: usize) -> (PathBuf, PathBuf) {
    let stem = format!("graphs-n{n}-v{FORMAT_VERSION}");
    (dir.join(format!("{stem}.g6")), dir.join(format!("{stem}.json")))
}

/// Writes one graph6 line per entry plus the JSON flag sidecar.
pub fn write_cache(dir: &Path, n: usize, entries: &[CatalogEntry]) -> Result<()> {
    fs::create_dir_all(dir)?;
    let (g6_path, json_path) = cache_paths(dir, n);
    let mut lines = String::new();
    let mut sidecar = Sidecar {
        version: FORMAT_VERSION,
        n,
        entries: Vec::with_capacity(entries.len()),
    };
    for e in entries {
        let g6 = e.graph.to_graph6();
        lines.push_str(&g6);
        lines.push('\n');
        sidecar.entries.push(SidecarEntry {
            graph6: g6,
            flags: e.flags,
            aut_order: e.aut_order,
        });
    }
    fs::write(g6_path, lines)?;
    fs::write(json_path, serde_json::to_string_pretty(&sidecar)? + "\n")?;
    Ok(())
}

/// Reads a cached catalog. Returns `Ok(None)` when no cache exists; rejects
/// caches whose graph6 lines and sidecar disagree.
pub fn load_cache(dir: &Path, n: usize) -> Result<Option<Vec<CatalogEntry>>> {
    let (g6_path, json_path) = cache_paths(dir, n);
    if !g6_path.exists() || !json_path.exists() {
        return Ok(None);
    }
    let lines = fs::read_to_string(g6_path)?;
    let sidecar: Sidecar = serde_json::from_str(&fs::read_to_string(json_path)?)?;
    if sidecar.version != FORMAT_VERSION || sidecar.n != n {
        return Err(Error::Io(format!(
            "cache header mismatch: version {} order {}",
            sidecar.version, sidecar.n
        )));
    }
    let graphs: Vec<&str> = lines.lines().filter(|l| !l.is_empty()).collect();
    if graphs.len() != sidecar.entries.len() {
        return Err(Error::Io("graph6 file and sidecar differ in length".into()));
    }
    graphs
        .into_iter()
        .zip(sidecar.entries)
        .map(|(line, meta)| {
            if line != meta.graph6 {
                return Err(Error::Io(format!(
                    "sidecar entry {} does not match {line}",
                    meta.graph6
                )));
            }
            let graph = parse_graph6(line)?;
            if graph.n() != n {
                return Err(Error::Io(format!("{line} has {} vertices, expected {n}", graph.n())));
            }
            Ok(CatalogEntry {
                graph,
                flags: meta.flags,
                aut_order: meta.aut_order,
            })
        })
        .collect::<Result<Vec<_>>>()
        .map(Some)
}

/// Loads from `dir` when cached, otherwise enumerates and writes the cache.
pub fn load_or_build(dir: &Path, n: usize) -> Result<Vec<CatalogEntry>> {
    if let Some(entries) = load_cache(dir, n)? {
        return Ok(entries);
    }
    let entries = enumerate_unlabeled(n)?;
    write_cache(dir, n, &entries)?;
    Ok(entries)
}
