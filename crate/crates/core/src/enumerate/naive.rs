//! Generate-and-deduplicate reference enumeration for small orders.

use std::collections::BTreeMap;

use crate::canon::{canonical_labeling, CanonicalForm};
use crate::graph::Graph;

/// Largest order [`enumerate_naive`] accepts.
pub const NAIVE_CAP: usize = 7;

/// Every connected graph on `n` vertices with maximum degree at most 3, up to
/// isomorphism, found by scanning all degree-bounded edge subsets whose degree
/// sequence is nonincreasing in the vertex index (every graph has such a
/// labeling) and deduplicating by canonical form. Sorted by that form.
pub fn enumerate_naive(n: usize) -> Vec<Graph> {
    assert!(n <= NAIVE_CAP, "naive enumeration is limited to n <= {NAIVE_CAP}");
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut found = BTreeMap::new();
    let mut deg = vec![0usize; n];
    let mut chosen = Vec::new();
    scan(n, &pairs, 0, &mut deg, &mut chosen, &mut found);
    found.into_values().collect()
}

fn scan(
    n: usize,
    pairs: &[(usize, usize)],
    i: usize,
    deg: &mut [usize],
    chosen: &mut Vec<(usize, usize)>,
    found: &mut BTreeMap<CanonicalForm, Graph>,
) {
    if i == pairs.len() {
        // connected graphs need at least n - 1 edges
        if chosen.len() + 1 < n || deg.windows(2).any(|w| w[0] < w[1]) {
            return;
        }
        let g = Graph::from_edges(n, chosen.iter().copied()).expect("valid edges");
        if g.is_connected() {
            let (form, label) = canonical_labeling(&g, None);
            found.entry(form).or_insert_with(|| g.permute(&label));
        }
        return;
    }
    scan(n, pairs, i + 1, deg, chosen, found);
    let (u, v) = pairs[i];
    if deg[u] < 3 && deg[v] < 3 {
        deg[u] += 1;
        deg[v] += 1;
        chosen.push((u, v));
        scan(n, pairs, i + 1, deg, chosen, found);
        chosen.pop();
        deg[u] -= 1;
        deg[v] -= 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_orders() {
        assert_eq!(enumerate_naive(1).len(), 1);
        assert_eq!(enumerate_naive(3).len(), 2);
        assert_eq!(enumerate_naive(4).len(), 6);
        assert_eq!(enumerate_naive(5).len(), 10);
    }
}
