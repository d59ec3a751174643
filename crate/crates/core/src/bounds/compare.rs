//! Coefficient-wise comparison of two bounds over nonnegative degree profiles.

use serde::{Deserialize, Serialize};

use super::{BoundForm, BoundSpec};
use crate::graph::DegreeProfile;
use crate::rational::{q, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    DominatesEverywhere,
    DominatedEverywhere,
    Mixed,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dominance {
    pub a: String,
    pub b: String,
    /// `a - b` for `(c1, c2, c3, d)`.
    pub delta: [Rational; 4],
    /// Where `a >= b`, as a linear inequality in the profile.
    pub region: String,
    pub verdict: Verdict,
    /// A profile with `a < b`, when one exists.
    pub below: Option<DegreeProfile>,
    /// A profile with `a > b`, when one exists.
    pub above: Option<DegreeProfile>,
}

/// Linear coefficients of a spec on graphs without isolated vertices.
fn linear_coefficients(s: &BoundSpec) -> [Rational; 4] {
    match s.form {
        BoundForm::Linear => s.coefficients(),
        BoundForm::CaroWei => [q(1, 2), q(1, 3), q(1, 4), Rational::ZERO],
    }
}

/// A profile on which `dc . p - dd` is negative, if any.
fn negative_point(dc: [Rational; 3], dd: Rational) -> Option<DegreeProfile> {
    if dd > Rational::ZERO {
        return Some(DegreeProfile::default());
    }
    let i = (0..3).find(|&i| dc[i].is_negative())?;
    // dc[i] * t < dd with dd <= 0 < -dc[i]
    let t = (dd / dc[i]).floor() as usize + 1;
    let mut p = [0usize; 3];
    p[i] = t;
    Some(DegreeProfile::new(p[0], p[1], p[2]))
}

pub fn compare_bounds(a: &BoundSpec, b: &BoundSpec) -> Dominance {
    let (ca, cb) = (linear_coefficients(a), linear_coefficients(b));
    let delta: [Rational; 4] = std::array::from_fn(|i| ca[i] - cb[i]);
    let dc = [delta[0], delta[1], delta[2]];
    let dd = delta[3];
    let below = negative_point(dc, dd);
    let above = negative_point(dc.map(|c| -c), -dd);
    let verdict = match (&below, &above) {
        (None, _) => Verdict::DominatesEverywhere,
        (Some(_), None) => Verdict::DominatedEverywhere,
        _ => Verdict::Mixed,
    };
    Dominance {
        a: a.name.clone(),
        b: b.name.clone(),
        delta,
        region: format!("({})*n1 + ({})*n2 + ({})*n3 >= {}", dc[0], dc[1], dc[2], dd),
        verdict,
        below,
        above,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::evaluate;
    use crate::bounds::presets::*;

    #[test]
    fn eq4_dominates_eq3() {
        let r = compare_bounds(&eq4(), &eq3());
        assert_eq!(r.verdict, Verdict::DominatesEverywhere);
        assert_eq!(r.delta, [q(1, 6), q(1, 42), Rational::ZERO, Rational::ZERO]);
        assert_eq!(compare_bounds(&eq3(), &eq4()).verdict, Verdict::DominatedEverywhere);
    }

    #[test]
    fn eq13_vs_eq4_is_mixed() {
        let r = compare_bounds(&eq13(), &eq4());
        assert_eq!(r.verdict, Verdict::Mixed);
        assert_eq!(r.delta, [q(1, 21), q(1, 14), Rational::ZERO, q(2, 7)]);
        let below = r.below.unwrap();
        assert_eq!(below, DegreeProfile::default());
        assert!(evaluate(&eq13(), &below) < evaluate(&eq4(), &below));
        let above = r.above.unwrap();
        assert!(evaluate(&eq13(), &above) > evaluate(&eq4(), &above));
    }

    #[test]
    fn self_comparison() {
        let r = compare_bounds(&eq9(), &eq9());
        assert_eq!(r.verdict, Verdict::DominatesEverywhere);
        assert_eq!(r.delta, [Rational::ZERO; 4]);
    }

    #[test]
    fn witnesses_are_real() {
        let specs = registry();
        for a in &specs {
            for b in &specs {
                let r = compare_bounds(a, b);
                let (la, lb) = (linear_coefficients(a), linear_coefficients(b));
                let val = |c: [Rational; 4], p: &DegreeProfile| {
                    c[0] * p.n1 + c[1] * p.n2 + c[2] * p.n3 - c[3]
                };
                if let Some(p) = &r.below {
                    assert!(val(la, p) < val(lb, p));
                }
                if let Some(p) = &r.above {
                    assert!(val(la, p) > val(lb, p));
                }
            }
        }
    }
}
