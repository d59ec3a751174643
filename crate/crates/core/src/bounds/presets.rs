//! Named bounds and the parametric families they come from.

use serde::{Deserialize, Serialize};

use super::{Applicability, BoundForm, BoundSpec, BoundsError, ExceptionRule, Status};
use crate::rational::{q, Rational};

/// graph6 of K2 and of C5.
pub const K2_C5_GRAPH6: [&str; 2] = ["A_", "Dhc"];

pub fn eq2() -> BoundSpec {
    BoundSpec::linear(
        "eq2",
        [q(1, 3), q(1, 3), q(1, 3), Rational::ZERO],
        Applicability::Class,
        Status::Proved,
    )
}

pub fn eq3() -> BoundSpec {
    BoundSpec::linear(
        "eq3",
        [q(1, 2), q(1, 3), q(2, 7), Rational::ZERO],
        Applicability::Class,
        Status::Proved,
    )
}

pub fn caro_wei_preset() -> BoundSpec {
    BoundSpec {
        form: BoundForm::CaroWei,
        ..BoundSpec::linear(
            "caro-wei",
            [Rational::ZERO; 4],
            Applicability::Class,
            Status::Proved,
        )
    }
}

/// Its derivation from the clique-weighting theorem does not go through
/// (`2/3 + 5/14 > 1`), so sweeps only report it.
pub fn eq4() -> BoundSpec {
    BoundSpec::linear(
        "eq4",
        [q(2, 3), q(5, 14), q(2, 7), Rational::ZERO],
        Applicability::ClassOrderAtLeast(5),
        Status::Reported,
    )
}

pub fn eq5() -> BoundSpec {
    BoundSpec::linear(
        "eq5",
        [q(3, 5), q(2, 5), q(1, 5), Rational::ZERO],
        Applicability::ClassOrderAtLeast(5),
        Status::Proved,
    )
}

pub fn eq9() -> BoundSpec {
    BoundSpec::linear(
        "eq9",
        [q(2, 3), q(1, 3), q(1, 3), Rational::ZERO],
        Applicability::Class,
        Status::Proved,
    )
}

/// The triangle-free bound without its exceptions; K2 and C5 violate it.
pub fn eq10() -> BoundSpec {
    BoundSpec::linear(
        "eq10",
        [q(4, 7), q(3, 7), q(2, 7), Rational::ZERO],
        Applicability::TriangleFree,
        Status::Reported,
    )
}

/// The triangle-free bound with the relaxed constant `1/7` on K2 and C5.
pub fn eq10_11() -> BoundSpec {
    let mut s = eq10();
    s.name = "eq10-11".into();
    s.status = Status::Proved;
    s.with_exception(ExceptionRule {
        graphs: K2_C5_GRAPH6.iter().map(|s| s.to_string()).collect(),
        d: q(1, 7),
    })
}

pub fn griggs() -> BoundSpec {
    BoundSpec::linear(
        "griggs",
        [q(7, 12), q(5, 12), q(1, 3), Rational::ZERO],
        Applicability::TriangleFreeClass,
        Status::Proved,
    )
}

pub fn eq12(c1: Rational) -> Result<BoundSpec, BoundsError> {
    if c1 < q(5, 7) || c1 > Rational::ONE {
        return Err(BoundsError::C1OutOfRange(c1));
    }
    Ok(BoundSpec::linear(
        format!("eq12(c1={c1})"),
        [c1, q(3, 7), Rational::ONE - c1, c1 * Rational::int(2) - q(8, 7)],
        Applicability::Class,
        Status::Proved,
    ))
}

pub fn eq13() -> BoundSpec {
    BoundSpec::linear(
        "eq13",
        [q(5, 7), q(3, 7), q(2, 7), q(2, 7)],
        Applicability::Class,
        Status::Proved,
    )
}

/// The sufficient pair of inequalities for the closing open question.
pub fn open_question() -> [BoundSpec; 2] {
    [
        BoundSpec::linear(
            "open-question-a",
            [q(3, 4), q(1, 2), q(1, 4), q(1, 2)],
            Applicability::Class,
            Status::Reported,
        ),
        BoundSpec::linear(
            "open-question-b",
            [Rational::ONE, q(1, 2), Rational::ZERO, Rational::ONE],
            Applicability::Class,
            Status::Reported,
        ),
    ]
}

/// The `c1` values at which [`eq12`] is swept.
pub fn eq12_samples() -> [Rational; 4] {
    [q(5, 7), q(3, 4), q(6, 7), Rational::ONE]
}

/// Every preset evaluated per graph by `check_all`.
pub fn check_all_presets() -> Vec<BoundSpec> {
    let mut v = vec![eq2(), eq3(), caro_wei_preset(), eq4(), eq5(), eq9(), eq10_11(), griggs()];
    v.extend(
        eq12_samples()
            .into_iter()
            .map(|c| eq12(c).expect("sample c1 in range")),
    );
    v.push(eq13());
    v
}

/// Every named preset, including the ones only used by censuses and searches.
pub fn registry() -> Vec<BoundSpec> {
    let mut v = check_all_presets();
    v.insert(6, eq10());
    v.extend(open_question());
    v
}

/// Looks a preset up by name. `eq12:<c1>` builds eq12 at that `c1`; `eq11` is
/// an alias of `eq10-11`.
pub fn by_name(name: &str) -> Result<BoundSpec, BoundsError> {
    if let Some(c) = name.strip_prefix("eq12:") {
        let c1 = c
            .parse()
            .map_err(|_| BoundsError::UnknownPreset(name.to_string()))?;
        return eq12(c1);
    }
    if let Some(c) = name.strip_prefix("ab:") {
        let c1 = c
            .parse()
            .map_err(|_| BoundsError::UnknownPreset(name.to_string()))?;
        return Ok(spec_ab(c1));
    }
    let name = if name == "eq11" { "eq10-11" } else { name };
    registry()
        .into_iter()
        .find(|s| s.name == name)
        .ok_or_else(|| BoundsError::UnknownPreset(name.to_string()))
}

/// Tight on every member of the triangle-chain family.
pub fn spec_a(c1: Rational, c2: Rational) -> BoundSpec {
    BoundSpec::linear(
        format!("A(c1={c1},c2={c2})"),
        [c1, c2, (Rational::ONE - c2) / Rational::int(2), c2 * Rational::int(3) - Rational::ONE],
        Applicability::Class,
        Status::Reported,
    )
}

/// Tight on every comb.
pub fn spec_b(c1: Rational, c2: Rational) -> BoundSpec {
    BoundSpec::linear(
        format!("B(c1={c1},c2={c2})"),
        [
            c1,
            c2,
            Rational::ONE - c1,
            (c1 + c2) * Rational::int(2) - Rational::int(2),
        ],
        Applicability::Class,
        Status::Reported,
    )
}

/// Tight on both families: `c2 = 2*c1 - 1`.
pub fn spec_ab(c1: Rational) -> BoundSpec {
    let mut s = spec_b(c1, c1 * Rational::int(2) - Rational::ONE);
    s.name = format!("AB(c1={c1})");
    s
}

/// The `(c1, 3/7)` line; the same coefficients as [`eq12`] but unchecked.
pub fn spec_c1(c1: Rational) -> Result<BoundSpec, BoundsError> {
    let mut s = eq12(c1)?;
    s.name = format!("C1(c1={c1})");
    s.status = Status::Reported;
    Ok(s)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParametricPresets {
    pub spec_a: BoundSpec,
    pub spec_b: BoundSpec,
    pub spec_ab: BoundSpec,
    /// Absent when `c1` is outside `[5/7, 1]`.
    pub spec_c1: Option<BoundSpec>,
}

pub fn parametric_presets(c1: Rational, c2: Rational) -> ParametricPresets {
    ParametricPresets {
        spec_a: spec_a(c1, c2),
        spec_b: spec_b(c1, c2),
        spec_ab: spec_ab(c1),
        spec_c1: spec_c1(c1).ok(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ab_line_hits_named_bounds() {
        assert_eq!(spec_ab(q(2, 3)).coefficients(), eq9().coefficients());
        assert_eq!(
            spec_ab(q(3, 4)).coefficients(),
            [q(3, 4), q(1, 2), q(1, 4), q(1, 2)]
        );
        assert_eq!(spec_ab(q(3, 4)).coefficients(), open_question()[0].coefficients());
        assert_eq!(spec_c1(q(5, 7)).unwrap().coefficients(), eq13().coefficients());
    }

    #[test]
    fn a_and_b_agree_on_the_ab_line() {
        for c1 in [q(1, 3), q(1, 2), q(2, 3), q(5, 7)] {
            let c2 = c1 * Rational::int(2) - Rational::ONE;
            assert_eq!(spec_a(c1, c2).coefficients(), spec_b(c1, c2).coefficients());
        }
    }

    #[test]
    fn c1_range_enforced() {
        assert!(matches!(eq12(q(2, 3)), Err(BoundsError::C1OutOfRange(_))));
        assert!(eq12(q(5, 7)).is_ok());
        assert!(eq12(q(8, 7)).is_err());
        assert!(parametric_presets(q(2, 3), q(1, 3)).spec_c1.is_none());
    }

    #[test]
    fn registry_names_are_unique_and_resolvable() {
        let r = registry();
        let mut names: Vec<_> = r.iter().map(|s| s.name.clone()).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), r.len());
        for s in &r {
            assert_eq!(&by_name(&s.name).unwrap(), s);
        }
        assert_eq!(by_name("eq11").unwrap().name, "eq10-11");
        assert_eq!(by_name("eq12:6/7").unwrap().c3, q(1, 7));
        assert!(by_name("nope").is_err());
    }
}
