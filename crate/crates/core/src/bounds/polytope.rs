//! Vertices of the coefficient region cut out by the clique-weighting constraints.

use serde::{Deserialize, Serialize};

use crate::rational::{q, Rational};

/// `coeffs . (c1, c2, c3) <= rhs`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Constraint {
    pub tag: &'static str,
    pub label: &'static str,
    pub coeffs: [i64; 3],
    pub rhs: (i64, i64),
}

impl Constraint {
    fn rhs(&self) -> Rational {
        q(self.rhs.0, self.rhs.1)
    }

    fn lhs(&self, p: [Rational; 3]) -> Rational {
        (0..3).map(|i| Rational::int(self.coeffs[i]) * p[i]).sum()
    }

    /// `lhs - rhs`; positive means violated.
    pub fn excess(&self, p: [Rational; 3]) -> Rational {
        self.lhs(p) - self.rhs()
    }
}

pub const CONSTRAINTS: [Constraint; 5] = [
    Constraint { tag: "A", label: "c1 <= 2/3", coeffs: [1, 0, 0], rhs: (2, 3) },
    Constraint { tag: "B", label: "c2 <= 2/5", coeffs: [0, 1, 0], rhs: (2, 5) },
    Constraint { tag: "C", label: "c3 <= 2/7", coeffs: [0, 0, 1], rhs: (2, 7) },
    Constraint { tag: "D", label: "c1 + c2 <= 1", coeffs: [1, 1, 0], rhs: (1, 1) },
    Constraint { tag: "E", label: "2c2 + c3 <= 1", coeffs: [0, 2, 1], rhs: (1, 1) },
];

/// The published list of extreme points.
pub fn reference_extreme_points() -> Vec<[Rational; 3]> {
    vec![
        [q(2, 3), q(5, 14), q(2, 7)],
        [q(3, 5), q(2, 5), q(1, 5)],
        [q(2, 3), q(1, 3), q(2, 7)],
        [q(9, 14), q(5, 14), q(2, 7)],
    ]
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum SystemOutcome {
    Vertex { point: [Rational; 3] },
    /// Solved, but breaks at least one constraint; each entry is `(tag, excess)`.
    Infeasible { point: [Rational; 3], violated: Vec<(String, Rational)> },
    Singular,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemReport {
    pub binding: [String; 3],
    pub outcome: SystemOutcome,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremePoint {
    pub point: [Rational; 3],
    /// Every constraint tight at the point.
    pub binding: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Discrepancy {
    /// Listed as extreme but not a feasible vertex.
    ListedNotFeasible { point: [Rational; 3], violated: Vec<(String, Rational)> },
    /// Listed and feasible, but not a vertex of the region.
    ListedNotVertex { point: [Rational; 3] },
    /// A vertex missing from the published list.
    Unlisted { point: [Rational; 3] },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeReport {
    pub systems: Vec<SystemReport>,
    pub vertices: Vec<ExtremePoint>,
    pub discrepancies: Vec<Discrepancy>,
}

/// Solves `m x = b` by Cramer's rule; `None` when singular.
fn solve3(m: [[Rational; 3]; 3], b: [Rational; 3]) -> Option<[Rational; 3]> {
    let det = |m: [[Rational; 3]; 3]| {
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    };
    let d = det(m);
    if d.is_zero() {
        return None;
    }
    let mut x = [Rational::ZERO; 3];
    for (col, xc) in x.iter_mut().enumerate() {
        let mut mc = m;
        for row in 0..3 {
            mc[row][col] = b[row];
        }
        *xc = det(mc) / d;
    }
    Some(x)
}

fn violations(p: [Rational; 3]) -> Vec<(String, Rational)> {
    CONSTRAINTS
        .iter()
        .filter_map(|c| {
            let e = c.excess(p);
            (e > Rational::ZERO).then(|| (c.tag.to_string(), e))
        })
        .collect()
}

pub fn polytope_extreme_points() -> PolytopeReport {
    let mut systems = Vec::new();
    let mut vertices: Vec<ExtremePoint> = Vec::new();
    for i in 0..5 {
        for j in i + 1..5 {
            for k in j + 1..5 {
                let cs = [CONSTRAINTS[i], CONSTRAINTS[j], CONSTRAINTS[k]];
                let m = cs.map(|c| c.coeffs.map(Rational::int));
                let b = cs.map(|c| c.rhs());
                let outcome = match solve3(m, b) {
                    None => SystemOutcome::Singular,
                    Some(point) => {
                        let violated = violations(point);
                        if violated.is_empty() {
                            if !vertices.iter().any(|v| v.point == point) {
                                let binding = CONSTRAINTS
                                    .iter()
                                    .filter(|c| c.excess(point).is_zero())
                                    .map(|c| c.tag.to_string())
                                    .collect();
                                vertices.push(ExtremePoint { point, binding });
                            }
                            SystemOutcome::Vertex { point }
                        } else {
                            SystemOutcome::Infeasible { point, violated }
                        }
                    }
                };
                systems.push(SystemReport {
                    binding: cs.map(|c| c.tag.to_string()),
                    outcome,
                });
            }
        }
    }

    let mut discrepancies = Vec::new();
    let listed = reference_extreme_points();
    for &p in &listed {
        let violated = violations(p);
        if !violated.is_empty() {
            discrepancies.push(Discrepancy::ListedNotFeasible { point: p, violated });
        } else if !vertices.iter().any(|v| v.point == p) {
            discrepancies.push(Discrepancy::ListedNotVertex { point: p });
        }
    }
    for v in &vertices {
        if !listed.contains(&v.point) {
            discrepancies.push(Discrepancy::Unlisted { point: v.point });
        }
    }
    PolytopeReport {
        systems,
        vertices,
        discrepancies,
    }
}
