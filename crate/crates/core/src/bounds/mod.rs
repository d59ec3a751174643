//! Exact evaluation of degree-weighted lower bounds on the independence number.
//!
//! A bound is `c1*n1 + c2*n2 + c3*n3 - d` where `ni` counts vertices of
//! degree `i`. Every coefficient is a [`Rational`]; nothing in this module
//! touches floating point.

mod compare;
mod kp;
mod necessity;
mod polytope;
pub mod presets;

pub use compare::{compare_bounds, Dominance, Verdict};
pub use kp::{kp_verify, KpVerdict, KpViolation, KpWeighting};
pub use necessity::{necessity_witness, Construction, NecessityWitness};
pub use polytope::{
    polytope_extreme_points, reference_extreme_points, Constraint, Discrepancy, PolytopeReport,
    SystemOutcome, CONSTRAINTS,
};
pub use presets::{parametric_presets, ParametricPresets};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::canon::canonical_form;
use crate::graph::{classify, degree_profile, emit_graph6, parse_graph6, DegreeProfile, Graph};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("graph {0} is not a connected subcubic graph on at least 3 vertices other than K4")]
    NotInClass(String),
    #[error("c1 = {0} is outside [5/7, 1]")]
    C1OutOfRange(Rational),
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
    #[error("malformed spec `{0}`: expected c1,c2,c3,d")]
    MalformedSpec(String),
}

/// Graphs a bound is claimed for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Applicability {
    /// Connected subcubic, not K4, at least three vertices.
    Class,
    /// Members of the class with at least this many vertices.
    ClassOrderAtLeast(usize),
    /// Connected triangle-free subcubic graphs on at least two vertices.
    TriangleFree,
    /// Triangle-free members of the class.
    TriangleFreeClass,
}

impl Applicability {
    pub fn applies(&self, g: &Graph) -> bool {
        let c = classify(g);
        match *self {
            Applicability::Class => c.in_class(),
            Applicability::ClassOrderAtLeast(k) => c.in_class() && g.n() >= k,
            Applicability::TriangleFree => {
                c.connected && c.subcubic && c.triangle_free && g.n() >= 2
            }
            Applicability::TriangleFreeClass => c.in_class() && c.triangle_free,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundForm {
    /// `c1*n1 + c2*n2 + c3*n3 - d`.
    Linear,
    /// `sum over v of 1/(deg v + 1)`; coefficients are unused.
    CaroWei,
}

/// How sweeps treat a violation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    /// A theorem: any violation is a failure.
    Proved,
    /// Recorded only.
    Reported,
}

/// Graphs (by graph6, matched up to isomorphism) that use a relaxed constant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExceptionRule {
    pub graphs: Vec<String>,
    pub d: Rational,
}

impl ExceptionRule {
    pub fn matches(&self, g: &Graph) -> bool {
        let opts = crate::graph::GraphOptions::default();
        self.graphs.iter().any(|s| {
            parse_graph6(s, &opts).is_ok_and(|h| {
                h.n() == g.n()
                    && h.edge_count() == g.edge_count()
                    && canonical_form(&h) == canonical_form(g)
            })
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundSpec {
    pub name: String,
    pub form: BoundForm,
    pub c1: Rational,
    pub c2: Rational,
    pub c3: Rational,
    pub d: Rational,
    pub applicability: Applicability,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exception: Option<ExceptionRule>,
    pub status: Status,
}

impl BoundSpec {
    pub fn linear(
        name: impl Into<String>,
        [c1, c2, c3, d]: [Rational; 4],
        applicability: Applicability,
        status: Status,
    ) -> Self {
        BoundSpec {
            name: name.into(),
            form: BoundForm::Linear,
            c1,
            c2,
            c3,
            d,
            applicability,
            exception: None,
            status,
        }
    }

    /// An unnamed class-wide bound, as typed on a command line.
    pub fn custom([c1, c2, c3, d]: [Rational; 4]) -> Self {
        BoundSpec::linear(
            format!("custom({c1},{c2},{c3},{d})"),
            [c1, c2, c3, d],
            Applicability::Class,
            Status::Reported,
        )
    }

    /// Parses `c1,c2,c3,d`.
    pub fn parse_coefficients(s: &str) -> Result<Self, BoundsError> {
        let parts: Result<Vec<Rational>, _> = s.split(',').map(str::parse).collect();
        match parts {
            Ok(v) if v.len() == 4 => Ok(BoundSpec::custom([v[0], v[1], v[2], v[3]])),
            _ => Err(BoundsError::MalformedSpec(s.to_string())),
        }
    }

    pub fn coefficients(&self) -> [Rational; 4] {
        [self.c1, self.c2, self.c3, self.d]
    }

    pub fn with_exception(mut self, rule: ExceptionRule) -> Self {
        self.exception = Some(rule);
        self
    }

    pub fn applies_to(&self, g: &Graph) -> bool {
        self.applicability.applies(g)
    }

    /// The constant `d` that applies to `g`, honoring the exception rule.
    pub fn d_for(&self, g: &Graph) -> Rational {
        match &self.exception {
            Some(rule) if rule.matches(g) => rule.d,
            _ => self.d,
        }
    }

    /// The right-hand side on `g`.
    pub fn value_on(&self, g: &Graph) -> Rational {
        match self.form {
            BoundForm::CaroWei => caro_wei(g),
            BoundForm::Linear => evaluate(self, &degree_profile(g)) + self.d - self.d_for(g),
        }
    }

    pub fn record(&self, g: &Graph, alpha: usize) -> EvaluationRecord {
        let bound_value = self.value_on(g);
        let slack = Rational::from_count(alpha) - bound_value;
        EvaluationRecord {
            spec: self.name.clone(),
            graph6: emit_graph6(g),
            profile: degree_profile(g),
            alpha,
            bound_value,
            slack,
            tight: slack.is_zero(),
        }
    }
}

/// `c1*n1 + c2*n2 + c3*n3 - d` on a profile. For Caro-Wei the degree-class
/// sum `n0 + n1/2 + n2/3 + n3/4` is returned (vertices of degree above 3 are not counted).
pub fn evaluate(spec: &BoundSpec, p: &DegreeProfile) -> Rational {
    match spec.form {
        BoundForm::Linear => spec.c1 * p.n1 + spec.c2 * p.n2 + spec.c3 * p.n3 - spec.d,
        BoundForm::CaroWei => {
            Rational::from_count(p.n0)
                + Rational::new(1, 2) * p.n1
                + Rational::new(1, 3) * p.n2
                + Rational::new(1, 4) * p.n3
        }
    }
}

/// `sum over v of 1/(deg v + 1)`.
pub fn caro_wei(g: &Graph) -> Rational {
    (0..g.n())
        .map(|v| Rational::new(1, g.degree(v) as i64 + 1))
        .sum()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvaluationRecord {
    pub spec: String,
    pub graph6: String,
    pub profile: DegreeProfile,
    pub alpha: usize,
    pub bound_value: Rational,
    /// `alpha - bound_value`; nonnegative exactly when the bound holds.
    pub slack: Rational,
    pub tight: bool,
}

impl EvaluationRecord {
    pub fn holds(&self) -> bool {
        !self.slack.is_negative()
    }
}

/// One record per applicable preset from [`presets::check_all_presets`].
pub fn check_all(g: &Graph, alpha: usize) -> Result<Vec<EvaluationRecord>, BoundsError> {
    if !classify(g).in_class() {
        return Err(BoundsError::NotInClass(emit_graph6(g)));
    }
    Ok(presets::check_all_presets()
        .iter()
        .filter(|s| s.applies_to(g))
        .map(|s| s.record(g, alpha))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::presets::*;
    use super::*;
    use crate::oracle::alpha_brute;
    use crate::rational::q;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn petersen() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, e).unwrap()
    }

    #[test]
    fn evaluate_on_profiles() {
        assert_eq!(evaluate(&eq2(), &DegreeProfile::new(0, 4, 2)), Rational::int(2));
        assert_eq!(evaluate(&eq9(), &DegreeProfile::new(0, 4, 2)), Rational::int(2));
        assert_eq!(evaluate(&eq13(), &DegreeProfile::new(0, 3, 0)), Rational::int(1));
        assert_eq!(evaluate(&eq9(), &DegreeProfile::new(3, 2, 1)), Rational::int(3));
    }

    #[test]
    fn records_on_named_graphs() {
        let c7 = cycle(7);
        let recs = check_all(&c7, 3).unwrap();
        let eq10 = recs.iter().find(|r| r.spec == "eq10-11").unwrap();
        assert!(eq10.tight);

        let c5 = cycle(5);
        let recs = check_all(&c5, 2).unwrap();
        let eq11 = recs.iter().find(|r| r.spec == "eq10-11").unwrap();
        assert_eq!(eq11.bound_value, Rational::int(2));
        assert!(eq11.tight);
        // order-5 gate lets eq5 through on C5
        assert!(recs.iter().any(|r| r.spec == "eq5"));

        let p = petersen();
        let a = alpha_brute(&p).unwrap().alpha;
        let recs = check_all(&p, a).unwrap();
        let r9 = recs.iter().find(|r| r.spec == "eq9").unwrap();
        assert_eq!(r9.bound_value, q(10, 3));
        assert_eq!(r9.slack, q(2, 3));
    }

    #[test]
    fn check_all_rejects_outside_class() {
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(matches!(check_all(&k4, 1), Err(BoundsError::NotInClass(_))));
        let k2 = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert!(check_all(&k2, 1).is_err());
    }

    #[test]
    fn gating() {
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let recs = check_all(&p4, 2).unwrap();
        assert!(!recs.iter().any(|r| r.spec == "eq4" || r.spec == "eq5"));
        let k3 = cycle(3);
        let recs = check_all(&k3, 1).unwrap();
        assert!(!recs.iter().any(|r| r.spec == "eq10-11" || r.spec == "griggs"));
        let r13 = recs.iter().find(|r| r.spec == "eq13").unwrap();
        assert!(r13.tight);
    }

    #[test]
    fn exception_applies_to_k2_and_c5_only() {
        let spec = eq10_11();
        let k2 = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert!(spec.applies_to(&k2));
        assert_eq!(spec.value_on(&k2), Rational::int(1));
        assert_eq!(eq10().value_on(&k2), q(8, 7));
        // C5 relabeled still matches
        let c5 = cycle(5).permute(&[2, 4, 1, 0, 3]);
        assert_eq!(spec.d_for(&c5), q(1, 7));
        assert_eq!(spec.d_for(&cycle(7)), Rational::ZERO);
    }

    #[test]
    fn caro_wei_sum() {
        assert_eq!(caro_wei(&cycle(6)), Rational::int(2));
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(caro_wei(&star), q(1, 4) + q(3, 2));
    }

    #[test]
    fn profile_additivity() {
        let s = eq13();
        let a = DegreeProfile::new(2, 5, 1);
        let b = DegreeProfile::new(1, 0, 4);
        assert_eq!(evaluate(&s, &(a + b)), evaluate(&s, &a) + evaluate(&s, &b) + s.d);
    }

    #[test]
    fn coefficient_parsing() {
        let s = BoundSpec::parse_coefficients("3/4,1/2,1/4,1/2").unwrap();
        assert_eq!(s.coefficients(), [q(3, 4), q(1, 2), q(1, 4), q(1, 2)]);
        assert!(BoundSpec::parse_coefficients("1,2,3").is_err());
    }
}
