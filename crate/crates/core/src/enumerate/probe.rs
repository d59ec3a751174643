//! Named search presets and the necessity probes.

use serde::{Deserialize, Serialize};

use crate::bounds::presets::{open_question, spec_ab, spec_c1};
use crate::bounds::{necessity_witness, BoundSpec, Construction, NecessityWitness};
use crate::families::{cycle, gen_a, gen_a_pendant, truncate, cubic_base, Attachment};
use crate::graph::emit_graph6;
use crate::oracle::alpha;
use crate::rational::{q, Rational};

/// Sampled `c1` values for the two-family line `c2 = 2 c1 - 1`.
pub fn ab_samples() -> [Rational; 4] {
    [q(1, 3), q(1, 2), q(9, 14), q(5, 7)]
}

/// Sampled `c1` values for the `(c1, 3/7)` line.
pub fn c1_samples() -> [Rational; 4] {
    [q(5, 7), q(3, 4), q(6, 7), Rational::ONE]
}

/// One spec breaching each necessary condition, in order `i` to `iv`. The
/// excesses are chosen so every witness fits within the vertex limit.
pub fn prop5_specs() -> Vec<BoundSpec> {
    let (third, eps, big) = (q(1, 3), q(1, 100), q(1, 10));
    let mut v = vec![
        BoundSpec::custom([third, third, third + eps, Rational::ONE]),
        BoundSpec::custom([third, third + big, third, Rational::ONE]),
        BoundSpec::custom([q(2, 3) + big, third, third, Rational::ONE]),
        BoundSpec::custom([q(1, 2), q(1, 2) + eps, Rational::ZERO, Rational::ONE]),
    ];
    for (s, tag) in v.iter_mut().zip(["i", "ii", "iii", "iv"]) {
        s.name = format!("prop5-{tag}");
    }
    v
}

/// Specs for a search preset: `open-question`, `corollary-12` or `prop5`.
pub fn search_preset(name: &str) -> Option<Vec<BoundSpec>> {
    match name {
        "open-question" => Some(open_question().to_vec()),
        "corollary-12" => {
            let mut v: Vec<BoundSpec> = ab_samples().into_iter().map(spec_ab).collect();
            v.extend(c1_samples().into_iter().map(|c| spec_c1(c).expect("sample in range")));
            Some(v)
        }
        "prop5" => Some(prop5_specs()),
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NecessityProbe {
    pub spec: String,
    pub witness: NecessityWitness,
    pub graph6: String,
    pub n: usize,
    /// The family's closed-form independence number.
    pub alpha: usize,
    /// The oracle's value, when the instance is small enough to solve.
    pub oracle_alpha: Option<usize>,
    pub bound: Rational,
    pub slack: Rational,
}

/// Builds the witness graph for `spec` and evaluates the spec on it. The
/// oracle confirms `alpha` on instances with at most `oracle_limit` vertices.
pub fn probe_necessity(spec: &BoundSpec, oracle_limit: usize) -> Option<NecessityProbe> {
    let w = necessity_witness(spec)?;
    let inst = match w.construction {
        Construction::Truncation => truncate(&cubic_base(w.parameter).ok()?),
        Construction::FamilyA => gen_a(w.parameter, Attachment::LowestIndex),
        Construction::PendantA => gen_a_pendant(w.parameter, Attachment::LowestIndex),
        Construction::EvenCycle => cycle(w.parameter),
    }
    .ok()?;
    let g = &inst.graph;
    let oracle_alpha = (g.n() <= oracle_limit).then(|| alpha(g).expect("within cap").alpha);
    let bound = spec.value_on(g);
    Some(NecessityProbe {
        spec: spec.name.clone(),
        graph6: emit_graph6(g),
        n: g.n(),
        alpha: inst.predicted_alpha,
        oracle_alpha,
        slack: Rational::from_count(inst.predicted_alpha) - bound,
        bound,
        witness: w,
    })
}
