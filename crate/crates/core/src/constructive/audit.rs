//! Empirical checks of each reduction step's claimed relation between
//! `alpha(G)` and the reduced graph.
//!
//! A rule's sites are the places in `G` where the case applies (a pendant, a
//! diamond, a triangle, a degree-3 vertex). Every site is checked; the finding
//! reports the first violated site, or the first site when all hold.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::is_k4;
use crate::graph::{
    bridges, classify, diamond_sites, emit_graph6, is_c5, is_cycle, is_triangle_free, pendants,
    triangles, Graph,
};
use crate::oracle::alpha;
use crate::rational::{q, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AuditError {
    #[error("unknown rule {0}")]
    UnknownRule(String),
    #[error("unknown theorem {0} (expected main, griggs or c1)")]
    UnknownTheorem(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Theorem {
    Main,
    Griggs,
    C1,
}

impl FromStr for Theorem {
    type Err = AuditError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "main" => Ok(Theorem::Main),
            "griggs" => Ok(Theorem::Griggs),
            "c1" => Ok(Theorem::C1),
            _ => Err(AuditError::UnknownTheorem(s.to_string())),
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Theorem::Main => "main",
            Theorem::Griggs => "griggs",
            Theorem::C1 => "c1",
        })
    }
}

const MAIN_RULES: &[&str] = &["main-case-1", "main-case-2"];
const GRIGGS_RULES: &[&str] = &[
    "griggs-case-1.1",
    "griggs-case-1.2",
    "griggs-case-2",
    "griggs-case-3.1",
    "griggs-case-3.2",
    "griggs-case-3.3",
];
const C1_RULES: &[&str] = &[
    "c1-case-1.2",
    "c1-case-1.3.1",
    "c1-case-1.3.2",
    "c1-case-1.3.3",
    "c1-case-2.1",
    "c1-case-2.2",
];

pub fn rules_for(theorem: Theorem) -> &'static [&'static str] {
    match theorem {
        Theorem::Main => MAIN_RULES,
        Theorem::Griggs => GRIGGS_RULES,
        Theorem::C1 => C1_RULES,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AuditVerdict {
    Holds,
    Violated,
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditFinding {
    pub rule: String,
    pub graph6: String,
    /// The relation checked, e.g. `alpha(G) >= alpha(G')+1`.
    pub claim: String,
    pub lhs: Rational,
    pub rhs: Rational,
    pub verdict: AuditVerdict,
    /// Vertices defining the site the finding refers to.
    pub site: Vec<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Rel {
    Eq,
    Ge,
}

/// One checked site.
struct Check {
    claim: &'static str,
    rel: Rel,
    lhs: Rational,
    rhs: Rational,
    site: Vec<usize>,
    notes: Vec<String>,
}

impl Check {
    fn holds(&self) -> bool {
        match self.rel {
            Rel::Eq => self.lhs == self.rhs,
            Rel::Ge => self.lhs >= self.rhs,
        }
    }
}

fn a(g: &Graph) -> usize {
    alpha(g).expect("graph within the vertex cap").alpha
}

fn ar(g: &Graph) -> Rational {
    Rational::from_count(a(g))
}

/// Sum of alpha over components; equals alpha of the whole graph.
fn a_sum(g: &Graph) -> Rational {
    Rational::from_count(g.components().iter().map(|c| a(&g.induced(c).0)).sum())
}

fn mask_of(vs: &[usize]) -> u128 {
    vs.iter().fold(0u128, |m, &v| m | 1u128 << v)
}

/// `g - removed` plus the edge `xy` if absent (ids in `g`). Returns the graph
/// and whether the edge was added.
fn reduce_with_edge(g: &Graph, removed: &[usize], x: usize, y: usize) -> (Graph, bool) {
    let (h, remap) = g.remove_vertices(removed);
    let (a, b) = (remap.to_new(x).expect("kept"), remap.to_new(y).expect("kept"));
    if h.has_edge(a, b) {
        (h, false)
    } else {
        (h.with_edge(a, b).expect("degree stays within 3"), true)
    }
}

fn k4_note(h: &Graph, notes: &mut Vec<String>) {
    if is_k4(h) {
        notes.push("G' = K4 (outside class)".into());
    }
}

const EQ1: &str = "alpha(G) = alpha(G')+1";
const GE1: &str = "alpha(G) >= alpha(G')+1";

fn pendant_sites(g: &Graph, deg_w: usize) -> Vec<(usize, usize)> {
    pendants(g)
        .into_iter()
        .filter(|p| g.degree(p.neighbor) == deg_w)
        .map(|p| (p.leaf, p.neighbor))
        .collect()
}

fn case_eq_pendant(g: &Graph) -> Vec<Check> {
    let al = ar(g);
    pendant_sites(g, 2)
        .into_iter()
        .map(|(u, w)| Check {
            claim: EQ1,
            rel: Rel::Eq,
            lhs: al,
            rhs: ar(&g.remove_vertices(&[u, w]).0) + Rational::ONE,
            site: vec![u, w],
            notes: vec![],
        })
        .collect()
}

fn case_pendant_with_edge(g: &Graph) -> Vec<Check> {
    let al = ar(g);
    pendant_sites(g, 3)
        .into_iter()
        .map(|(u, w)| {
            let xs: Vec<usize> = g.neighbors(w).iter().copied().filter(|&x| x != u).collect();
            let (h, _) = reduce_with_edge(g, &[u, w], xs[0], xs[1]);
            let mut notes = vec![];
            k4_note(&h, &mut notes);
            Check {
                claim: GE1,
                rel: Rel::Ge,
                lhs: al,
                rhs: a_sum(&h) + Rational::ONE,
                site: vec![u, w],
                notes,
            }
        })
        .collect()
}

fn in_main_scope(g: &Graph) -> bool {
    classify(g).in_class() && g.n() >= 5
}

fn in_griggs_scope(g: &Graph) -> bool {
    g.n() >= 5
        && g.is_connected()
        && g.is_subcubic()
        && is_triangle_free(g)
        && !(g.n() == 5 && is_cycle(g))
}

fn in_c1_scope(g: &Graph) -> bool {
    classify(g).in_class() && g.n() >= 6
}

fn has_pendant(g: &Graph) -> bool {
    (0..g.n()).any(|v| g.degree(v) == 1)
}

/// The vertices of a C5 hanging off a bridge, if any.
fn bridge_c5(g: &Graph) -> Option<Vec<usize>> {
    bridges(g).into_iter().find_map(|(x, y)| {
        let h = g.without_edge(x, y);
        h.components().into_iter().find(|c| is_c5(&h, mask_of(c)))
    })
}

fn griggs_case_1_2(g: &Graph) -> Vec<Check> {
    let al = ar(g);
    pendant_sites(g, 3)
        .into_iter()
        .map(|(u, w)| {
            let (h, remap) = g.remove_vertices(&[u, w]);
            let comps = h.components();
            let (claim, rhs, mut site) = if comps.len() == 1 {
                (EQ1, ar(&h) + Rational::ONE, vec![u, w])
            } else if let Some(single) = comps.iter().find(|c| c.len() == 1) {
                let x1 = remap.to_old(single[0]);
                let h2 = g.remove_vertices(&[u, w, x1]).0;
                ("alpha(G) = alpha(G'')+2", ar(&h2) + Rational::int(2), vec![u, w, x1])
            } else {
                ("alpha(G) = alpha(G1)+alpha(G2)+1", a_sum(&h) + Rational::ONE, vec![u, w])
            };
            site.sort_unstable();
            Check { claim, rel: Rel::Eq, lhs: al, rhs, site, notes: vec![] }
        })
        .collect()
}

fn griggs_case_2(g: &Graph) -> Vec<Check> {
    if !is_cycle(g) {
        return vec![];
    }
    vec![Check {
        claim: "alpha(G) >= 3n/7",
        rel: Rel::Ge,
        lhs: ar(g),
        rhs: q(3, 7) * g.n(),
        site: (0..g.n()).collect(),
        notes: vec![],
    }]
}

fn griggs_case_3_scope(g: &Graph) -> bool {
    !has_pendant(g) && !is_cycle(g)
}

fn griggs_case_3_1(g: &Graph) -> Vec<Check> {
    if !griggs_case_3_scope(g) {
        return vec![];
    }
    let Some(c5) = bridge_c5(g) else { return vec![] };
    vec![Check {
        claim: "alpha(G) = alpha(G2)+2",
        rel: Rel::Eq,
        lhs: ar(g),
        rhs: ar(&g.remove_vertices(&c5).0) + Rational::int(2),
        site: c5,
        notes: vec![],
    }]
}

/// Degree-3 vertices with the C5 components of `G - w` (parent ids).
fn c5_after_removing(g: &Graph, w: usize) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let (h, remap) = g.remove_vertices(&[w]);
    let comps: Vec<Vec<usize>> = h.components().iter().map(|c| remap.lift(c)).collect();
    comps.into_iter().partition(|c| is_c5(g, mask_of(c)))
}

fn griggs_case_3_2(g: &Graph) -> Vec<Check> {
    if !griggs_case_3_scope(g) || bridge_c5(g).is_some() {
        return vec![];
    }
    let al = ar(g);
    (0..g.n())
        .filter(|&w| g.degree(w) == 3)
        .filter_map(|w| {
            let (c5s, _) = c5_after_removing(g, w);
            let c5 = c5s.into_iter().next()?;
            let mut site = c5.clone();
            site.push(w);
            site.sort_unstable();
            Some(Check {
                claim: "alpha(G) = alpha(G-V(C5))+2",
                rel: Rel::Eq,
                lhs: al,
                rhs: ar(&g.remove_vertices(&c5).0) + Rational::int(2),
                site,
                notes: vec![],
            })
        })
        .collect()
}

fn griggs_case_3_3(g: &Graph) -> Vec<Check> {
    if !griggs_case_3_scope(g) || bridge_c5(g).is_some() {
        return vec![];
    }
    let al = ar(g);
    (0..g.n())
        .filter(|&w| g.degree(w) == 3)
        .filter_map(|w| {
            let (c5s, rest) = c5_after_removing(g, w);
            if !c5s.is_empty() {
                return None;
            }
            let mut notes = vec![];
            for c in &rest {
                if c.len() < 4 {
                    notes.push(format!("component {c:?} has {} vertices", c.len()));
                }
            }
            Some(Check {
                claim: "alpha(G) >= sum alpha(G_q)",
                rel: Rel::Ge,
                lhs: al,
                rhs: a_sum(&g.remove_vertices(&[w]).0),
                site: vec![w],
                notes,
            })
        })
        .collect()
}

fn c1_case_1_scope(g: &Graph) -> bool {
    !has_pendant(g) && !is_triangle_free(g)
}

fn c1_case_1_2(g: &Graph) -> Vec<Check> {
    if !c1_case_1_scope(g) {
        return vec![];
    }
    let al = ar(g);
    diamond_sites(g)
        .into_iter()
        .map(|d| {
            let (h, _) = reduce_with_edge(g, &[d.u1, d.u2], d.w1, d.w2);
            Check {
                claim: GE1,
                rel: Rel::Ge,
                lhs: al,
                rhs: a_sum(&h) + Rational::ONE,
                site: vec![d.u1, d.u2, d.w1, d.w2],
                notes: vec![],
            }
        })
        .collect()
}

/// Triangles of a graph in the disjoint-triangle case with `k` degree-2 vertices.
fn triangle_sites(g: &Graph, k: usize) -> Vec<[usize; 3]> {
    if !c1_case_1_scope(g) || !diamond_sites(g).is_empty() {
        return vec![];
    }
    triangles(g)
        .into_iter()
        .filter(|t| t.iter().filter(|&&v| g.degree(v) == 2).count() == k)
        .collect()
}

fn outside(g: &Graph, t: &[usize; 3], w: usize) -> usize {
    g.neighbors(w).iter().copied().find(|x| !t.contains(x)).expect("degree-3 vertex")
}

fn c1_case_1_3_1(g: &Graph) -> Vec<Check> {
    let al = ar(g);
    triangle_sites(g, 2)
        .into_iter()
        .map(|t| Check {
            claim: GE1,
            rel: Rel::Ge,
            lhs: al,
            rhs: a_sum(&g.remove_vertices(&t).0) + Rational::ONE,
            site: t.to_vec(),
            notes: vec![],
        })
        .collect()
}

fn c1_case_1_3_2(g: &Graph) -> Vec<Check> {
    let al = ar(g);
    triangle_sites(g, 1)
        .into_iter()
        .map(|t| {
            let us: Vec<usize> =
                t.iter().filter(|&&v| g.degree(v) == 3).map(|&v| outside(g, &t, v)).collect();
            let (h, _) = reduce_with_edge(g, &t, us[0], us[1]);
            let mut notes = vec![];
            k4_note(&h, &mut notes);
            Check {
                claim: GE1,
                rel: Rel::Ge,
                lhs: al,
                rhs: a_sum(&h) + Rational::ONE,
                site: t.to_vec(),
                notes,
            }
        })
        .collect()
}

fn c1_case_1_3_3(g: &Graph) -> Vec<Check> {
    let al = ar(g);
    triangle_sites(g, 0)
        .into_iter()
        .map(|t| {
            let us = [outside(g, &t, t[0]), outside(g, &t, t[1]), outside(g, &t, t[2])];
            let pair = [(0, 1), (0, 2), (1, 2)].into_iter().find(|&(i, j)| !g.has_edge(us[i], us[j]));
            match pair {
                None => Check {
                    claim: "alpha(G) = 2",
                    rel: Rel::Eq,
                    lhs: al,
                    rhs: Rational::int(2),
                    site: t.to_vec(),
                    notes: vec!["u1, u2, u3 form a triangle".into()],
                },
                Some((i, j)) => {
                    let (h, _) = reduce_with_edge(g, &t, us[i], us[j]);
                    let mut notes = vec![];
                    k4_note(&h, &mut notes);
                    Check {
                        claim: GE1,
                        rel: Rel::Ge,
                        lhs: al,
                        rhs: a_sum(&h) + Rational::ONE,
                        site: t.to_vec(),
                        notes,
                    }
                }
            }
        })
        .collect()
}

fn checks(rule: &str, g: &Graph) -> Result<Vec<Check>, AuditError> {
    let scope = match rule.split('-').next() {
        Some("main") => in_main_scope(g),
        Some("griggs") => in_griggs_scope(g),
        Some("c1") => in_c1_scope(g),
        _ => return Err(AuditError::UnknownRule(rule.to_string())),
    };
    if !MAIN_RULES.contains(&rule) && !GRIGGS_RULES.contains(&rule) && !C1_RULES.contains(&rule) {
        return Err(AuditError::UnknownRule(rule.to_string()));
    }
    if !scope {
        return Ok(vec![]);
    }
    Ok(match rule {
        "main-case-1" | "c1-case-2.1" | "griggs-case-1.1" => case_eq_pendant(g),
        "main-case-2" | "c1-case-2.2" => case_pendant_with_edge(g),
        "griggs-case-1.2" => griggs_case_1_2(g),
        "griggs-case-2" => griggs_case_2(g),
        "griggs-case-3.1" => griggs_case_3_1(g),
        "griggs-case-3.2" => griggs_case_3_2(g),
        "griggs-case-3.3" => griggs_case_3_3(g),
        "c1-case-1.2" => c1_case_1_2(g),
        "c1-case-1.3.1" => c1_case_1_3_1(g),
        "c1-case-1.3.2" => c1_case_1_3_2(g),
        "c1-case-1.3.3" => c1_case_1_3_3(g),
        _ => unreachable!("rule list checked above"),
    })
}

/// Checks one rule on one graph.
pub fn audit_rule(rule: &str, g: &Graph) -> Result<AuditFinding, AuditError> {
    let cs = checks(rule, g)?;
    let graph6 = emit_graph6(g);
    let pick = cs.iter().position(|c| !c.holds()).or(if cs.is_empty() { None } else { Some(0) });
    let finding = match pick {
        None => AuditFinding {
            rule: rule.to_string(),
            graph6,
            claim: String::new(),
            lhs: Rational::ZERO,
            rhs: Rational::ZERO,
            verdict: AuditVerdict::NotApplicable,
            site: vec![],
            notes: vec![],
        },
        Some(i) => {
            let c = &cs[i];
            AuditFinding {
                rule: rule.to_string(),
                graph6,
                claim: c.claim.to_string(),
                lhs: c.lhs,
                rhs: c.rhs,
                verdict: if c.holds() { AuditVerdict::Holds } else { AuditVerdict::Violated },
                site: c.site.clone(),
                notes: c.notes.clone(),
            }
        }
    };
    Ok(finding)
}

/// Applicable findings for every rule of `theorem` over `graphs`, in input order.
pub fn audit(theorem: Theorem, graphs: &[Graph]) -> Vec<AuditFinding> {
    graphs
        .par_iter()
        .flat_map_iter(|g| {
            rules_for(theorem)
                .iter()
                .map(|r| audit_rule(r, g).expect("known rule"))
                .filter(|f| f.verdict != AuditVerdict::NotApplicable)
                .collect::<Vec<_>>()
        })
        .collect()
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleCounts {
    pub checked: usize,
    pub holds: usize,
    pub violated: usize,
    /// Findings carrying at least one note.
    pub noted: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditSummary {
    pub rules: BTreeMap<String, RuleCounts>,
}

impl AuditSummary {
    pub fn violations(&self) -> usize {
        self.rules.values().map(|c| c.violated).sum()
    }
}

pub fn summarize(findings: &[AuditFinding]) -> AuditSummary {
    let mut s = AuditSummary::default();
    for f in findings {
        let c = s.rules.entry(f.rule.clone()).or_default();
        match f.verdict {
            AuditVerdict::Holds => c.holds += 1,
            AuditVerdict::Violated => c.violated += 1,
            AuditVerdict::NotApplicable => continue,
        }
        c.checked += 1;
        if !f.notes.is_empty() {
            c.noted += 1;
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle, gen_n, prism};

    #[test]
    fn diamond_lift_claim_fails() {
        let g = Graph::from_edges(6, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 5), (4, 5)])
            .unwrap();
        let f = audit_rule("c1-case-1.2", &g).unwrap();
        assert_eq!(f.verdict, AuditVerdict::Violated);
        assert_eq!(f.lhs, q(2, 1));
        assert_eq!(f.rhs, q(3, 1));
        assert_eq!(audit_rule("c1-case-1.2", &g).unwrap(), f);
    }

    #[test]
    fn k4_after_edge_addition_is_noted() {
        let g = Graph::from_edges(6, [(0, 5), (5, 1), (5, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])
            .unwrap();
        let f = audit_rule("main-case-2", &g).unwrap();
        assert_eq!(f.verdict, AuditVerdict::Holds);
        assert_eq!((f.lhs, f.rhs), (q(3, 1), q(2, 1)));
        assert!(f.notes.iter().any(|n| n.contains("K4")));
    }

    #[test]
    fn griggs_rules_hold_on_named_graphs() {
        let f = audit_rule("griggs-case-3.1", &gen_n(4).unwrap().graph).unwrap();
        assert_eq!(f.verdict, AuditVerdict::Holds);
        let f = audit_rule("griggs-case-2", &cycle(7).unwrap().graph).unwrap();
        assert_eq!((f.lhs, f.rhs), (q(3, 1), q(3, 1)));
    }

    #[test]
    fn prism_and_unknown_rules() {
        let f = audit_rule("c1-case-1.3.3", &prism()).unwrap();
        assert_eq!(f.verdict, AuditVerdict::Holds);
        assert!(audit_rule("c1-case-9", &prism()).is_err());
        assert_eq!("c1".parse::<Theorem>().unwrap(), Theorem::C1);
    }
}
