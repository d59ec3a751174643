//! Canonical forms for isomorphism rejection.
//!
//! [`canonical_labeling`] runs individualization-refinement: the vertex
//! partition is refined to an equitable one, the first non-singleton cell is
//! split on each of its vertices in turn, and the minimum adjacency string over
//! all discrete leaves is kept. Every step depends only on the ordered
//! partition, so the result is an isomorphism invariant. No automorphism
//! pruning is done; at the sizes enumerated here the search trees are small.
//!
//! [`canonical_form_brute`] minimizes over all `n!` relabelings and serves as
//! an independent reference for small graphs.

use std::collections::BTreeMap;

use crate::graph::{emit_graph6, Graph};

/// Upper-triangle adjacency bits under a canonical labeling, packed
/// most-significant-first so that `Ord` is lexicographic on the bit string.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: usize,
    bits: Vec<u64>,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n
    }
}

/// Largest graph accepted by [`canonical_form_brute`].
pub const BRUTE_CANON_CAP: usize = 9;

fn key_under(g: &Graph, order: &[usize]) -> CanonicalForm {
    // order[label] = vertex
    let n = g.n();
    let total = n * n.saturating_sub(1) / 2;
    let mut bits = vec![0u64; total.div_ceil(64)];
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(order[i], order[j]) {
                bits[idx / 64] |= 1u64 << (63 - idx % 64);
            }
            idx += 1;
        }
    }
    CanonicalForm { n, bits }
}

type Partition = Vec<Vec<usize>>;

/// Refines an ordered partition until every cell is equitable.
fn refine(g: &Graph, mut cells: Partition) -> Partition {
    let n = g.n();
    let mut cell_of = vec![0usize; n];
    loop {
        for (ci, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = ci;
            }
        }
        let k = cells.len();
        let mut next: Partition = Vec::with_capacity(k);
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut groups: BTreeMap<Vec<u32>, Vec<usize>> = BTreeMap::new();
            for &v in cell {
                let mut sig = vec![0u32; k];
                for &w in g.neighbors(v) {
                    sig[cell_of[w]] += 1;
                }
                groups.entry(sig).or_default().push(v);
            }
            next.extend(groups.into_values());
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn search(g: &Graph, cells: Partition, best: &mut Option<(CanonicalForm, Vec<usize>)>) {
    let cells = refine(g, cells);
    match cells.iter().position(|c| c.len() > 1) {
        None => {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            let key = key_under(g, &order);
            if best.as_ref().is_none_or(|(b, _)| key < *b) {
                *best = Some((key, order));
            }
        }
        Some(target) => {
            for &v in &cells[target] {
                let mut split = Vec::with_capacity(cells.len() + 1);
                split.extend_from_slice(&cells[..target]);
                split.push(vec![v]);
                split.push(cells[target].iter().copied().filter(|&w| w != v).collect());
                split.extend_from_slice(&cells[target + 1..]);
                search(g, split, best);
            }
        }
    }
}

/// Canonical form plus `label[v]`, the canonical position of vertex `v`.
/// `colors`, when given, restricts labelings to those that sort vertices by color.
pub fn canonical_labeling(g: &Graph, colors: Option<&[u32]>) -> (CanonicalForm, Vec<usize>) {
    let n = g.n();
    if n == 0 {
        return (key_under(g, &[]), Vec::new());
    }
    let cells: Partition = match colors {
        None => vec![(0..n).collect()],
        Some(c) => {
            let mut by: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
            for v in 0..n {
                by.entry(c[v]).or_default().push(v);
            }
            by.into_values().collect()
        }
    };
    let mut best = None;
    search(g, cells, &mut best);
    let (form, order) = best.expect("search visits at least one leaf");
    let mut label = vec![0; n];
    for (l, &v) in order.iter().enumerate() {
        label[v] = l;
    }
    (form, label)
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g, None).0
}

/// The canonically relabeled graph.
pub fn canonical_graph(g: &Graph) -> Graph {
    let (_, label) = canonical_labeling(g, None);
    g.permute(&label)
}

pub fn canonical_graph6(g: &Graph) -> String {
    emit_graph6(&canonical_graph(g))
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_form(a) == canonical_form(b)
}

/// Minimum adjacency string over all relabelings. Panics above [`BRUTE_CANON_CAP`].
pub fn canonical_form_brute(g: &Graph) -> CanonicalForm {
    let n = g.n();
    assert!(n <= BRUTE_CANON_CAP, "brute canonical form limited to {BRUTE_CANON_CAP} vertices");
    let mut order: Vec<usize> = (0..n).collect();
    let mut best = key_under(g, &order);
    // Heap's algorithm
    let mut c = vec![0usize; n];
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                order.swap(0, i);
            } else {
                order.swap(c[i], i);
            }
            let key = key_under(g, &order);
            if key < best {
                best = key;
            }
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    best
}
