//! Isomorph-free enumeration of connected subcubic graphs, censuses and
//! violation searches over the result.
//!
//! Generation is by canonical augmentation. A graph on `n` vertices is
//! produced from a parent on `n - 1` vertices by adding one vertex joined to
//! one, two or three parent vertices of degree at most 2. The child is kept
//! only when the new vertex lies in the automorphism orbit of the child's
//! canonical deletion vertex: the non-cut vertex of least degree, ties broken
//! by canonical label. Deleting a non-cut vertex keeps the graph connected, so
//! every connected graph has exactly one canonical parent class; duplicates
//! from a single parent are removed by canonical form.

mod census;
mod ingest;
mod naive;
mod probe;

pub use census::{
    census, census_equality, search_violations, CensusOptions, CensusReport, CensusRun,
    GraphRecord, OrderCounts, SpecOutcome,
};
pub use ingest::{ingest_graph6, IngestError};
pub use naive::{enumerate_naive, NAIVE_CAP};
pub use probe::{
    ab_samples, c1_samples, probe_necessity, prop5_specs, search_preset, NecessityProbe,
};

use std::collections::HashSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::canon::{canonical_labeling, CanonicalForm};
use crate::graph::{bit, is_triangle_free, Graph};

/// Largest order the built-in generator accepts.
pub const EXHAUSTIVE_CAP: usize = 11;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("max_n = {max_n} exceeds the exhaustive cap {cap}; supply larger corpora as graph6 files")]
    CapExceeded { max_n: usize, cap: usize },
}

/// Output filters. Connectivity and maximum degree 3 always hold.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Filters {
    pub triangle_free: bool,
    pub min_degree: Option<usize>,
    pub exclude_k4: bool,
}

impl Filters {
    pub fn accepts(&self, g: &Graph) -> bool {
        (!self.triangle_free || is_triangle_free(g))
            && self.min_degree.is_none_or(|d| (0..g.n()).all(|v| g.degree(v) >= d))
            && !(self.exclude_k4 && g.n() == 4 && g.edge_count() == 6)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationTask {
    pub min_n: usize,
    pub max_n: usize,
    pub filters: Filters,
}

impl EnumerationTask {
    /// All orders `1..=max_n`.
    pub fn up_to(max_n: usize) -> Self {
        EnumerationTask { min_n: 1, max_n, filters: Filters::default() }
    }

    /// Exactly the order `n`.
    pub fn order(n: usize) -> Self {
        EnumerationTask { min_n: n, max_n: n, filters: Filters::default() }
    }

    /// The class sweep: orders `3..=max_n`, K4 excluded.
    pub fn class(max_n: usize) -> Self {
        EnumerationTask {
            min_n: 3,
            max_n,
            filters: Filters { exclude_k4: true, ..Filters::default() },
        }
    }

    pub fn triangle_free(mut self) -> Self {
        self.filters.triangle_free = true;
        self
    }

    pub fn min_degree(mut self, d: usize) -> Self {
        self.filters.min_degree = Some(d);
        self
    }

    pub fn with_min_n(mut self, n: usize) -> Self {
        self.min_n = n;
        self
    }
}

fn non_cut_vertices(g: &Graph) -> Vec<usize> {
    let all = g.all_mask();
    (0..g.n())
        .filter(|&v| g.n() == 1 || g.components_within(all & !bit(v)).len() == 1)
        .collect()
}

fn marked(g: &Graph, v: usize) -> CanonicalForm {
    let mut colors = vec![0u32; g.n()];
    colors[v] = 1;
    canonical_labeling(g, Some(&colors)).0
}

/// True when `new` is in the orbit of the canonical deletion vertex.
fn is_canonical_child(g: &Graph, label: &[usize], new: usize) -> bool {
    let best = non_cut_vertices(g)
        .into_iter()
        .min_by_key(|&v| (g.degree(v), label[v]))
        .expect("a connected graph has a non-cut vertex");
    best == new || (g.degree(best) == g.degree(new) && marked(g, best) == marked(g, new))
}

fn subsets_up_to_3(items: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for i in 0..items.len() {
        out.push(vec![items[i]]);
        for j in i + 1..items.len() {
            out.push(vec![items[i], items[j]]);
            for k in j + 1..items.len() {
                out.push(vec![items[i], items[j], items[k]]);
            }
        }
    }
    out
}

/// Canonical children of `parent`, canonically relabeled.
fn children(parent: &Graph, triangle_free: bool) -> Vec<(CanonicalForm, Graph)> {
    let n = parent.n();
    let open: Vec<usize> = (0..n).filter(|&v| parent.degree(v) < 3).collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for s in subsets_up_to_3(&open) {
        if triangle_free && s.iter().enumerate().any(|(i, &a)| s[i + 1..].iter().any(|&b| parent.has_edge(a, b))) {
            continue;
        }
        let child = parent
            .extended(1, s.iter().map(|&v| (v, n)))
            .expect("degrees stay within 3");
        let (form, label) = canonical_labeling(&child, None);
        if seen.contains(&form) || !is_canonical_child(&child, &label, n) {
            continue;
        }
        seen.insert(form.clone());
        out.push((form, child.permute(&label)));
    }
    out
}

/// Graphs of every order `1..=max_n`, one list per order, each sorted by
/// canonical form. Only the triangle-free filter is applied (it is hereditary
/// and prunes the search); the others are output filters.
pub fn enumerate_levels(max_n: usize, triangle_free: bool) -> Result<Vec<Vec<Graph>>, EnumerateError> {
    if max_n > EXHAUSTIVE_CAP {
        return Err(EnumerateError::CapExceeded { max_n, cap: EXHAUSTIVE_CAP });
    }
    let mut levels: Vec<Vec<Graph>> = Vec::new();
    if max_n == 0 {
        return Ok(levels);
    }
    levels.push(vec![Graph::empty(1)]);
    for _ in 2..=max_n {
        let prev = levels.last().expect("nonempty");
        let mut next: Vec<(CanonicalForm, Graph)> =
            prev.par_iter().flat_map_iter(|p| children(p, triangle_free)).collect();
        next.sort_by(|a, b| a.0.cmp(&b.0));
        levels.push(next.into_iter().map(|(_, g)| g).collect());
    }
    Ok(levels)
}

/// One representative per isomorphism class of connected subcubic graphs
/// passing the task's filters, ordered by vertex count then canonical form.
pub fn enumerate(task: &EnumerationTask) -> Result<Vec<Graph>, EnumerateError> {
    let levels = enumerate_levels(task.max_n, task.filters.triangle_free)?;
    Ok(levels
        .into_iter()
        .flatten()
        .filter(|g| g.n() >= task.min_n && task.filters.accepts(g))
        .collect())
}

/// Number of graphs of each order `1..=max_n` (index 0 is order 1).
pub fn counts(max_n: usize, triangle_free: bool) -> Result<Vec<usize>, EnumerateError> {
    Ok(enumerate_levels(max_n, triangle_free)?.iter().map(Vec::len).collect())
}
