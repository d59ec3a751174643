//! Infinite families showing a coefficient choice cannot hold on the whole class.

use serde::{Deserialize, Serialize};

use super::{evaluate, BoundSpec};
use crate::graph::DegreeProfile;
use crate::rational::{q, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Construction {
    /// Every vertex of a cubic graph on `n` vertices replaced by a triangle.
    Truncation,
    /// The triangle chain on `3k` vertices.
    FamilyA,
    /// The triangle chain with a pendant edge hung off each degree-2 vertex.
    PendantA,
    /// An even cycle.
    EvenCycle,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NecessityWitness {
    /// Which of the four necessary conditions fails: `i`..`iv`.
    pub condition: String,
    pub construction: Construction,
    /// Base order `n`, chain length `k`, or cycle length `m`.
    pub parameter: usize,
    pub profile: DegreeProfile,
    pub alpha: usize,
    pub bound_value: Rational,
    pub description: String,
}

impl NecessityWitness {
    /// True when the claimed bound exceeds the exact independence number.
    pub fn is_violation(&self) -> bool {
        Rational::from_count(self.alpha) < self.bound_value
    }
}

/// Smallest `p >= min` with `p % step == min % step` and `slope*p + intercept > 0`.
fn smallest(slope: Rational, intercept: Rational, min: usize, step: usize) -> usize {
    debug_assert!(slope > Rational::ZERO);
    let threshold = (-intercept / slope).floor() + 1;
    let mut p = min.max(usize::try_from(threshold).unwrap_or(0));
    while (p - min) % step != 0 {
        p += 1;
    }
    p
}

/// A construction on which `spec` fails, with the smallest parameter that
/// exhibits the failure, or `None` when all four necessary conditions hold.
pub fn necessity_witness(spec: &BoundSpec) -> Option<NecessityWitness> {
    let third = q(1, 3);
    let (c1, c2, c3, d) = (spec.c1, spec.c2, spec.c3, spec.d);
    let (condition, construction, parameter, profile, alpha, description) = if c3 > third {
        // 3n vertices of degree 3, alpha = n: (3 c3 - 1) n - d > 0
        let n = smallest(c3 * 3usize - Rational::ONE, -d, 4, 2);
        (
            "i",
            Construction::Truncation,
            n,
            DegreeProfile::new(0, 0, 3 * n),
            n,
            format!("truncation of a connected cubic graph on {n} vertices"),
        )
    } else if c3 == third && c2 > third {
        // (c2 - 1/3)(k + 2) - d > 0
        let k = smallest(c2 - third, (c2 - third) * 2usize - d, 1, 1);
        (
            "ii",
            Construction::FamilyA,
            k,
            DegreeProfile::new(0, k + 2, 2 * k - 2),
            k,
            format!("triangle chain with k = {k} on {} vertices", 3 * k),
        )
    } else if c3 == third && c2 == third && c1 > q(2, 3) {
        // (c1 - 2/3)(k + 2) - d > 0
        let e = c1 - q(2, 3);
        let k = smallest(e, e * 2usize - d, 1, 1);
        (
            "iii",
            Construction::PendantA,
            k,
            DegreeProfile::new(k + 2, k + 2, 3 * k),
            2 * k + 2,
            format!(
                "triangle chain with k = {k} plus a pendant K2 at each of its {} degree-2 vertices",
                k + 2
            ),
        )
    } else if c2 > q(1, 2) {
        // (c2 - 1/2) m - d > 0
        let m = smallest(c2 - q(1, 2), -d, 4, 2);
        (
            "iv",
            Construction::EvenCycle,
            m,
            DegreeProfile::new(0, m, 0),
            m / 2,
            format!("cycle on {m} vertices"),
        )
    } else {
        return None;
    };
    let bound_value = evaluate(spec, &profile);
    let w = NecessityWitness {
        condition: condition.into(),
        construction,
        parameter,
        profile,
        alpha,
        bound_value,
        description,
    };
    debug_assert!(w.is_violation());
    Some(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::presets::{eq13, eq9};

    fn spec(c: [Rational; 4]) -> BoundSpec {
        BoundSpec::custom(c)
    }

    #[test]
    fn truncation_parameter() {
        let w = necessity_witness(&spec([third(), third(), third() + q(1, 100), Rational::ONE]))
            .unwrap();
        assert_eq!(w.construction, Construction::Truncation);
        // n > 100/3, even
        assert_eq!(w.parameter, 34);
        assert!(w.is_violation());
        assert_eq!(w.profile, DegreeProfile::new(0, 0, 102));
    }

    fn third() -> Rational {
        q(1, 3)
    }

    #[test]
    fn pendant_chain_parameter() {
        let w = necessity_witness(&spec([q(2, 3) + q(1, 100), third(), third(), Rational::ONE]))
            .unwrap();
        assert_eq!(w.construction, Construction::PendantA);
        assert_eq!(w.parameter, 99);
        assert_eq!(w.alpha, 200);
        assert!(w.is_violation());
    }

    #[test]
    fn chain_and_cycle() {
        let w = necessity_witness(&spec([third(), q(1, 2), third(), Rational::int(3)])).unwrap();
        assert_eq!(w.construction, Construction::FamilyA);
        // (1/6)(k+2) > 3
        assert_eq!(w.parameter, 17);
        assert!(w.is_violation());

        let w = necessity_witness(&spec([Rational::ONE, q(3, 5), Rational::ZERO, Rational::ONE]))
            .unwrap();
        assert_eq!(w.construction, Construction::EvenCycle);
        assert_eq!(w.parameter, 12);
        assert!(w.is_violation());

        let w = necessity_witness(&spec([Rational::ONE, q(3, 5), Rational::ZERO, -Rational::ONE]))
            .unwrap();
        assert_eq!(w.parameter, 4);
    }

    #[test]
    fn proved_bounds_have_no_witness() {
        assert_eq!(necessity_witness(&eq9()), None);
        assert_eq!(necessity_witness(&eq13()), None);
    }
}
