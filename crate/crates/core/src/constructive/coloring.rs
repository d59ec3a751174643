//! Proper 3-colorings of connected subcubic graphs other than K4.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::ConstructError;
use crate::graph::{classify, emit_graph6, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub color: Vec<u8>,
}

impl Coloring {
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.color.len() == g.n()
            && self.color.iter().all(|&c| c < 3)
            && g.edges().all(|(u, v)| self.color[u] != self.color[v])
    }

    pub fn num_colors(&self) -> usize {
        (0..3u8).filter(|c| self.color.contains(c)).count()
    }

    pub fn class(&self, c: u8) -> Vec<usize> {
        (0..self.color.len()).filter(|&v| self.color[v] == c).collect()
    }

    /// The largest color class; the lowest color wins ties.
    pub fn largest_class(&self) -> Vec<usize> {
        (0..3u8)
            .map(|c| self.class(c))
            .fold(Vec::new(), |best, cls| if cls.len() > best.len() { cls } else { best })
    }
}

/// BFS order from `root` over vertices not in `blocked`.
fn bfs_order(g: &Graph, root: usize, blocked: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; g.n()];
    for &b in blocked {
        seen[b] = true;
    }
    seen[root] = true;
    let mut order = vec![root];
    let mut q = VecDeque::from([root]);
    while let Some(v) = q.pop_front() {
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                order.push(w);
                q.push_back(w);
            }
        }
    }
    order
}

/// Colors `order` from the back with the least free color.
fn greedy(g: &Graph, color: &mut [Option<u8>], order: &[usize]) -> bool {
    for &v in order.iter().rev() {
        let used: Vec<u8> = g.neighbors(v).iter().filter_map(|&w| color[w]).collect();
        match (0..3u8).find(|c| !used.contains(c)) {
            Some(c) => color[v] = Some(c),
            None => return false,
        }
    }
    true
}

fn backtrack(g: &Graph, color: &mut [Option<u8>]) -> bool {
    // most constrained uncolored vertex first
    let next = (0..g.n()).filter(|&v| color[v].is_none()).max_by_key(|&v| {
        let mut seen = [false; 3];
        for &w in g.neighbors(v) {
            if let Some(c) = color[w] {
                seen[c as usize] = true;
            }
        }
        (seen.iter().filter(|&&s| s).count(), g.degree(v), std::cmp::Reverse(v))
    });
    let Some(v) = next else { return true };
    for c in 0..3u8 {
        if g.neighbors(v).iter().all(|&w| color[w] != Some(c)) {
            color[v] = Some(c);
            if backtrack(g, color) {
                return true;
            }
            color[v] = None;
        }
    }
    false
}

/// A proper coloring with at most three colors.
///
/// With a vertex of degree below 3, greedy coloring in reverse BFS order from
/// it succeeds. In a cubic graph, a vertex `v` with nonadjacent neighbors `a`,
/// `b` such that `G - {a, b}` stays connected lets `a` and `b` share a color
/// before the same greedy pass from `v`. Backtracking covers anything else.
pub fn brooks_coloring(g: &Graph) -> Result<Coloring, ConstructError> {
    if !classify(g).in_class() {
        return Err(ConstructError::NotInClass(emit_graph6(g)));
    }
    let n = g.n();
    let mut color = vec![None; n];
    let done = if let Some(root) = (0..n).find(|&v| g.degree(v) < 3) {
        greedy(g, &mut color, &bfs_order(g, root, &[]))
    } else {
        let site = (0..n).find_map(|v| {
            let nb = g.neighbors(v);
            (0..nb.len())
                .flat_map(|i| (i + 1..nb.len()).map(move |j| (nb[i], nb[j])))
                .find(|&(a, b)| {
                    !g.has_edge(a, b) && g.remove_vertices(&[a, b]).0.is_connected()
                })
                .map(|(a, b)| (v, a, b))
        });
        match site {
            Some((v, a, b)) => {
                color[a] = Some(0);
                color[b] = Some(0);
                greedy(g, &mut color, &bfs_order(g, v, &[a, b]))
            }
            None => false,
        }
    };
    if !done {
        color = vec![None; n];
        backtrack(g, &mut color);
    }
    let c = Coloring {
        color: color.into_iter().map(|c| c.expect("every vertex colored")).collect(),
    };
    if !c.is_proper(g) {
        return Err(ConstructError::Verification("coloring is not proper".into()));
    }
    Ok(c)
}
