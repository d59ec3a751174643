//! Immutable simple undirected graphs on dense vertex indices.
//!
//! Vertices are `0..n`. Adjacency is kept both as sorted neighbor lists and
//! as `u128` bitmasks, so the hard vertex limit is [`MAX_VERTICES`]. Callers
//! that parse external input should go through [`GraphOptions`], which
//! enforces the configurable (smaller) default cap.

mod format;
mod structure;

pub use format::{emit_graph6, parse_edge_list, parse_graph6, FormatError};
pub use structure::{
    bridges, classify, components_after_removal, degree_profile, diamond_sites, is_cycle,
    pendants, structural_queries, triangles, ClassMembership, ComponentInfo, DegreeProfile,
    DiamondSite, Pendant, StructuralReport,
};
pub(crate) use structure::{is_c5, is_triangle_free};

use std::fmt;

use thiserror::Error;

/// Width of the internal adjacency bitmask.
pub const MAX_VERTICES: usize = 128;

/// Default vertex cap for graphs read from external input.
pub const DEFAULT_CAP: usize = 64;

/// Environment variable that overrides [`DEFAULT_CAP`].
pub const CAP_ENV_VAR: &str = "SUBCUBIC_VERTEX_CAP";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has {n} vertices, cap is {cap}")]
    TooManyVertices { n: usize, cap: usize },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} has degree {degree}, exceeding 3")]
    NotSubcubic { vertex: usize, degree: usize },
}

/// Construction-time limits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphOptions {
    pub cap: usize,
    pub require_subcubic: bool,
}

impl Default for GraphOptions {
    fn default() -> Self {
        GraphOptions {
            cap: DEFAULT_CAP,
            require_subcubic: false,
        }
    }
}

impl GraphOptions {
    /// Default options with the cap taken from [`CAP_ENV_VAR`] when set.
    pub fn from_env() -> Self {
        let cap = std::env::var(CAP_ENV_VAR)
            .ok()
            .and_then(|s| s.trim().parse::<usize>().ok())
            .map(|c| c.min(MAX_VERTICES))
            .unwrap_or(DEFAULT_CAP);
        GraphOptions {
            cap,
            require_subcubic: false,
        }
    }

    pub fn subcubic(mut self) -> Self {
        self.require_subcubic = true;
        self
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap.min(MAX_VERTICES);
        self
    }

    pub fn build<I>(&self, n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > self.cap {
            return Err(GraphError::TooManyVertices { n, cap: self.cap });
        }
        let g = Graph::from_edges(n, edges)?;
        if self.require_subcubic {
            g.check_subcubic()?;
        }
        Ok(g)
    }
}

/// A simple undirected graph. Immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    masks: Vec<u128>,
}

/// Old-to-new vertex translation produced by deletions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Remap {
    new_to_old: Vec<usize>,
    old_to_new: Vec<Option<usize>>,
}

impl Remap {
    fn from_kept(old_n: usize, kept: Vec<usize>) -> Self {
        let mut old_to_new = vec![None; old_n];
        for (new, &old) in kept.iter().enumerate() {
            old_to_new[old] = Some(new);
        }
        Remap {
            new_to_old: kept,
            old_to_new,
        }
    }

    pub fn identity(n: usize) -> Self {
        Remap::from_kept(n, (0..n).collect())
    }

    pub fn to_old(&self, v: usize) -> usize {
        self.new_to_old[v]
    }

    pub fn to_new(&self, v: usize) -> Option<usize> {
        self.old_to_new.get(v).copied().flatten()
    }

    /// Translates a vertex set of the reduced graph back to the original indices.
    pub fn lift(&self, set: &[usize]) -> Vec<usize> {
        set.iter().map(|&v| self.new_to_old[v]).collect()
    }

    /// Composes `self` (old -> mid) with `inner` (mid -> new).
    pub fn then(&self, inner: &Remap) -> Remap {
        let kept = inner.new_to_old.iter().map(|&m| self.new_to_old[m]).collect();
        Remap::from_kept(self.old_to_new.len(), kept)
    }

    pub fn new_len(&self) -> usize {
        self.new_to_old.len()
    }
}

#[inline]
pub(crate) fn bit(v: usize) -> u128 {
    1u128 << v
}

/// Iterates the set bits of a mask in increasing order.
pub(crate) fn mask_iter(mut m: u128) -> impl Iterator<Item = usize> {
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
    /// Builds a graph on `n` vertices. Only the hard [`MAX_VERTICES`] limit applies here.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices {
                n,
                cap: MAX_VERTICES,
            });
        }
        let mut masks = vec![0u128; n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if masks[u] & bit(v) != 0 {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            masks[u] |= bit(v);
            masks[v] |= bit(u);
        }
        Ok(Graph::from_masks(masks))
    }

    pub(crate) fn from_masks(masks: Vec<u128>) -> Graph {
        let adj = masks.iter().map(|&m| mask_iter(m).collect()).collect();
        Graph { adj, masks }
    }

    pub fn empty(n: usize) -> Graph {
        Graph::from_edges(n, std::iter::empty()).expect("empty graph within limits")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.masks[u] & bit(v) != 0
    }

    pub(crate) fn mask(&self, v: usize) -> u128 {
        self.masks[v]
    }

    pub(crate) fn masks(&self) -> &[u128] {
        &self.masks
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_subcubic(&self) -> bool {
        self.max_degree() <= 3
    }

    pub fn check_subcubic(&self) -> Result<(), GraphError> {
        match (0..self.n()).find(|&v| self.degree(v) > 3) {
            Some(vertex) => Err(GraphError::NotSubcubic {
                vertex,
                degree: self.degree(vertex),
            }),
            None => Ok(()),
        }
    }

    pub fn all_mask(&self) -> u128 {
        if self.n() == MAX_VERTICES {
            u128::MAX
        } else {
            bit(self.n()) - 1
        }
    }

    /// Connected components, each sorted, ordered by their smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_within(self.all_mask())
            .into_iter()
            .map(|m| mask_iter(m).collect())
            .collect()
    }

    pub(crate) fn components_within(&self, live: u128) -> Vec<u128> {
        let mut rest = live;
        let mut out = Vec::new();
        while rest != 0 {
            let start = rest & rest.wrapping_neg();
            let mut comp = start;
            let mut frontier = start;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = self.masks[v] & live & !comp;
                comp |= fresh;
                frontier |= fresh;
            }
            rest &= !comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components_within(self.all_mask()).len() == 1
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        let mut seen = 0u128;
        for &v in set {
            if v >= self.n() || seen & bit(v) != 0 || self.masks[v] & seen != 0 {
                return false;
            }
            seen |= bit(v);
        }
        true
    }

    /// Induced subgraph on `keep` (deduplicated, taken in increasing order).
    pub fn induced(&self, keep: &[usize]) -> (Graph, Remap) {
        let mut kept: Vec<usize> = keep.iter().copied().filter(|&v| v < self.n()).collect();
        kept.sort_unstable();
        kept.dedup();
        let remap = Remap::from_kept(self.n(), kept);
        let masks = remap
            .new_to_old
            .iter()
            .map(|&old| {
                mask_iter(self.masks[old])
                    .filter_map(|w| remap.to_new(w))
                    .fold(0u128, |m, w| m | bit(w))
            })
            .collect();
        (Graph::from_masks(masks), remap)
    }

    pub fn remove_vertices(&self, removed: &[usize]) -> (Graph, Remap) {
        let mut drop = 0u128;
        for &v in removed {
            drop |= bit(v);
        }
        let keep: Vec<usize> = (0..self.n()).filter(|&v| drop & bit(v) == 0).collect();
        self.induced(&keep)
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        let n = self.n();
        for x in [u, v] {
            if x >= n {
                return Err(GraphError::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        let mut masks = self.masks.clone();
        masks[u] |= bit(v);
        masks[v] |= bit(u);
        Ok(Graph::from_masks(masks))
    }

    /// Returns the graph with edge `uv` removed, or a clone if it is absent.
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut masks = self.masks.clone();
        if u < masks.len() && v < masks.len() {
            masks[u] &= !bit(v);
            masks[v] &= !bit(u);
        }
        Graph::from_masks(masks)
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n(), "permutation length mismatch");
        let mut masks = vec![0u128; self.n()];
        for (u, v) in self.edges() {
            masks[perm[u]] |= bit(perm[v]);
            masks[perm[v]] |= bit(perm[u]);
        }
        Graph::from_masks(masks)
    }

    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let off = self.n();
        let edges = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + off, v + off)))
            .collect::<Vec<_>>();
        Graph::from_edges(off + other.n(), edges)
    }

    /// Adds `extra` new vertices and the given edges.
    pub fn extended<I>(&self, extra: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let all: Vec<_> = self.edges().chain(edges).collect();
        Graph::from_edges(self.n() + extra, all)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; ", self.n())?;
        let mut first = true;
        for (u, v) in self.edges() {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "{u}-{v}")?;
        }
        write!(f, ")")
    }
}
