//! Certified independent sets from the inductive reductions.
//!
//! Each `construct_*` function follows one proof's case ladder: it removes a
//! few vertices, possibly adds an edge, recurses, and lifts the returned set
//! back. Every step is logged in post-order in original vertex ids, so
//! replaying the trace (`set = (set - dropped) + lifted`) rebuilds the answer.

mod audit;
mod c1;
mod coloring;
mod griggs;
mod main_bound;

pub use audit::{
    audit, audit_rule, rules_for, summarize, AuditError, AuditFinding, AuditSummary, AuditVerdict,
    RuleCounts, Theorem,
};
pub use c1::construct_c1;
pub use coloring::{brooks_coloring, Coloring};
pub use griggs::construct_griggs;
pub use main_bound::construct_main;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::BoundSpec;
use crate::graph::{emit_graph6, Graph, Remap};
use crate::oracle::is_independent_set;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("graph {0} is not a connected subcubic graph on at least 3 vertices other than K4")]
    NotInClass(String),
    #[error("graph {0} is not connected and subcubic with at least 2 vertices")]
    NotConnectedSubcubic(String),
    #[error("graph {0} contains a triangle")]
    NotTriangleFree(String),
    #[error("c1 = {0} is outside [5/7, 1]")]
    C1OutOfRange(Rational),
    #[error("certificate failed verification: {0}")]
    Verification(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub rule: String,
    pub removed: Vec<usize>,
    pub added_edges: Vec<(usize, usize)>,
    pub lifted: Vec<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub dropped: Vec<usize>,
    /// Size of the set built for this subproblem minus the bound on it.
    pub margin: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub method: String,
    pub graph6: String,
    pub independent_set: Vec<usize>,
    pub size: usize,
    pub bound_spec: BoundSpec,
    pub bound_value: Rational,
    pub trace: Vec<Step>,
    pub fallbacks_used: usize,
}

impl Certificate {
    /// Rebuilds the set from the trace.
    pub fn replay(&self) -> Vec<usize> {
        replay(&self.trace)
    }
}

pub fn replay(trace: &[Step]) -> Vec<usize> {
    let mut set = BTreeSet::new();
    for s in trace {
        for v in &s.dropped {
            set.remove(v);
        }
        set.extend(s.lifted.iter().copied());
    }
    set.into_iter().collect()
}

/// Shared recursion state: the trace under construction.
pub(crate) struct Builder {
    pub trace: Vec<Step>,
}

/// A reduced graph with its vertices' original ids and the local remap.
pub(crate) struct Reduced {
    pub g: Graph,
    pub orig: Vec<usize>,
    pub remap: Remap,
}

impl Reduced {
    pub fn new(g: &Graph, orig: &[usize], removed: &[usize]) -> Self {
        let (h, remap) = g.remove_vertices(removed);
        Reduced::from_parts(h, orig, remap)
    }

    pub fn induced(g: &Graph, orig: &[usize], keep: &[usize]) -> Self {
        let (h, remap) = g.induced(keep);
        Reduced::from_parts(h, orig, remap)
    }

    fn from_parts(g: Graph, orig: &[usize], remap: Remap) -> Self {
        let o = (0..g.n()).map(|i| orig[remap.to_old(i)]).collect();
        Reduced { g, orig: o, remap }
    }

    /// Parent-local id of a vertex that survived.
    pub fn local(&self, parent_v: usize) -> usize {
        self.remap.to_new(parent_v).expect("vertex survives the reduction")
    }

    /// Adds `uv` (parent-local ids) unless present or the result would be K4.
    /// Returns the edge in original ids when added.
    pub fn add_edge_unless_k4(&mut self, u: usize, v: usize) -> Option<(usize, usize)> {
        let (a, b) = (self.local(u), self.local(v));
        if self.g.has_edge(a, b) {
            return None;
        }
        let h = self.g.with_edge(a, b).expect("degrees stay within 3");
        if is_k4(&h) {
            return None;
        }
        self.g = h;
        let (x, y) = (self.orig[a], self.orig[b]);
        Some((x.min(y), x.max(y)))
    }

    pub fn lift(&self, set: &[usize]) -> Vec<usize> {
        self.remap.lift(set)
    }
}

pub(crate) fn is_k4(g: &Graph) -> bool {
    g.n() == 4 && g.edge_count() == 6
}

impl Builder {
    pub fn new() -> Self {
        Builder { trace: Vec::new() }
    }

    #[allow(clippy::too_many_arguments)]
    pub fn push(
        &mut self,
        rule: &str,
        orig: &[usize],
        removed: &[usize],
        added_edges: Vec<(usize, usize)>,
        lifted: &[usize],
        dropped: &[usize],
        set_size: usize,
        bound: Rational,
    ) {
        let map = |s: &[usize]| {
            let mut v: Vec<usize> = s.iter().map(|&x| orig[x]).collect();
            v.sort_unstable();
            v
        };
        self.trace.push(Step {
            rule: rule.to_string(),
            removed: map(removed),
            added_edges,
            lifted: map(lifted),
            dropped: map(dropped),
            margin: Rational::from_count(set_size) - bound,
        });
    }
}

/// Checks independence, size and trace consistency, then packages the result.
pub(crate) fn finish(
    method: &str,
    g: &Graph,
    mut set: Vec<usize>,
    spec: BoundSpec,
    trace: Vec<Step>,
) -> Result<Certificate, ConstructError> {
    set.sort_unstable();
    let bound_value = spec.value_on(g);
    let g6 = emit_graph6(g);
    if !is_independent_set(g, &set) {
        return Err(ConstructError::Verification(format!("{g6}: set {set:?} is not independent")));
    }
    if Rational::from_count(set.len()) < bound_value {
        return Err(ConstructError::Verification(format!(
            "{g6}: |set| = {} is below the bound {bound_value}",
            set.len()
        )));
    }
    if replay(&trace) != set {
        return Err(ConstructError::Verification(format!("{g6}: trace does not replay to the set")));
    }
    let fallbacks_used = trace.iter().filter(|s| s.rule.ends_with("fallback")).count();
    Ok(Certificate {
        method: method.to_string(),
        graph6: g6,
        size: set.len(),
        independent_set: set,
        bound_spec: spec,
        bound_value,
        trace,
        fallbacks_used,
    })
}

/// Vertices of the cycle through `comp` starting at `start`, stepping first to
/// the lower-index neighbor within `comp`.
pub(crate) fn cycle_order(g: &Graph, comp: &[usize], start: usize) -> Vec<usize> {
    let inside = |v: usize| comp.contains(&v);
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = g
            .neighbors(cur)
            .iter()
            .copied()
            .filter(|&w| inside(w) && w != prev)
            .min_by_key(|&w| (w == start, w));
        match next {
            Some(w) if w != start && order.len() < comp.len() => {
                order.push(w);
                prev = cur;
                cur = w;
            }
            _ => return order,
        }
    }
}
