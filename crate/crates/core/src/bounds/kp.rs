//! Feasibility of a vertex weighting for the clique-weighting lower bound.
//!
//! A weighting `g` is feasible when `g(v) <= 2/(2 deg v + 1)` for every vertex
//! and the weights on every clique sum to at most 1; `alpha >= sum g(v)` then.

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum KpWeighting {
    /// One weight per vertex.
    PerVertex(Vec<Rational>),
    /// Weight `c_i` on every vertex of degree `i`; other degrees get 0.
    PerClass([Rational; 3]),
}

impl KpWeighting {
    pub fn per_class(c1: Rational, c2: Rational, c3: Rational) -> Self {
        KpWeighting::PerClass([c1, c2, c3])
    }

    pub fn uniform(w: Rational) -> Self {
        KpWeighting::PerClass([w; 3])
    }

    pub fn weight(&self, g: &Graph, v: usize) -> Rational {
        match self {
            KpWeighting::PerVertex(w) => w.get(v).copied().unwrap_or(Rational::ZERO),
            KpWeighting::PerClass(c) => match g.degree(v) {
                d @ 1..=3 => c[d - 1],
                _ => Rational::ZERO,
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum KpViolation {
    VertexCap {
        vertex: usize,
        degree: usize,
        weight: Rational,
        cap: Rational,
    },
    Clique {
        vertices: Vec<usize>,
        sum: Rational,
    },
    NegativeWeight {
        vertex: usize,
        weight: Rational,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KpVerdict {
    pub feasible: bool,
    /// The first violated constraint: vertex caps are checked before cliques.
    pub violated_constraint: Option<KpViolation>,
    /// `sum g(v)`, present only when feasible.
    pub bound: Option<Rational>,
}

/// Every clique of size at least 2, vertices ascending, in lexicographic order.
pub(crate) fn cliques(g: &Graph) -> Vec<Vec<usize>> {
    fn grow(g: &Graph, current: &mut Vec<usize>, cands: &[usize], out: &mut Vec<Vec<usize>>) {
        for (i, &v) in cands.iter().enumerate() {
            current.push(v);
            out.push(current.clone());
            let next: Vec<usize> = cands[i + 1..]
                .iter()
                .copied()
                .filter(|&w| g.has_edge(v, w))
                .collect();
            grow(g, current, &next, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    for v in 0..g.n() {
        let mut higher: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| w > v).collect();
        higher.sort_unstable();
        grow(g, &mut vec![v], &higher, &mut out);
    }
    out
}

pub fn kp_verify(g: &Graph, w: &KpWeighting) -> KpVerdict {
    let weights: Vec<Rational> = (0..g.n()).map(|v| w.weight(g, v)).collect();
    let fail = |v: KpViolation| KpVerdict {
        feasible: false,
        violated_constraint: Some(v),
        bound: None,
    };
    for (v, &weight) in weights.iter().enumerate() {
        if weight.is_negative() {
            return fail(KpViolation::NegativeWeight { vertex: v, weight });
        }
        let degree = g.degree(v);
        let cap = Rational::new(2, 2 * degree as i64 + 1);
        if weight > cap {
            return fail(KpViolation::VertexCap {
                vertex: v,
                degree,
                weight,
                cap,
            });
        }
    }
    for k in cliques(g) {
        let sum: Rational = k.iter().map(|&v| weights[v]).sum();
        if sum > Rational::ONE {
            return fail(KpViolation::Clique { vertices: k, sum });
        }
    }
    KpVerdict {
        feasible: true,
        violated_constraint: None,
        bound: Some(weights.into_iter().sum()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn clique_listing() {
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        // 6 edges, 4 triangles, 1 K4
        assert_eq!(cliques(&k4).len(), 11);
        assert_eq!(cliques(&path(4)), vec![vec![0, 1], vec![1, 2], vec![2, 3]]);
    }

    #[test]
    fn p5_edge_clique_fails() {
        let v = kp_verify(&path(5), &KpWeighting::per_class(q(2, 3), q(5, 14), q(2, 7)));
        assert!(!v.feasible);
        assert_eq!(
            v.violated_constraint,
            Some(KpViolation::Clique {
                vertices: vec![0, 1],
                sum: q(43, 42)
            })
        );
        assert_eq!(v.bound, None);
    }

    #[test]
    fn vertex_cap_checked_first() {
        let v = kp_verify(&path(3), &KpWeighting::uniform(q(1, 2)));
        assert!(matches!(
            v.violated_constraint,
            Some(KpViolation::VertexCap { vertex: 1, .. })
        ));
    }

    #[test]
    fn per_vertex_weights() {
        let w = KpWeighting::PerVertex(vec![q(2, 3), q(1, 3), q(2, 3)]);
        assert_eq!(kp_verify(&path(3), &w).bound, Some(q(5, 3)));
        let neg = KpWeighting::PerVertex(vec![q(-1, 3), q(0, 1), q(0, 1)]);
        assert!(!kp_verify(&path(3), &neg).feasible);
    }
}
