//! Evaluating bounds over a corpus.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{enumerate, EnumerateError, EnumerationTask};
use crate::bounds::BoundSpec;
use crate::graph::{degree_profile, emit_graph6, DegreeProfile, Graph};
use crate::oracle::Oracle;
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusOptions {
    pub oracle: Oracle,
    /// Evaluate each spec per component and sum.
    pub per_component: bool,
    /// Stop after the first graph violating some spec.
    pub stop_on_violation: bool,
    /// Solve every graph with both oracles and flag disagreements.
    pub cross_check: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecOutcome {
    pub spec: String,
    pub bound: Rational,
    pub slack: Rational,
    pub tight: bool,
}

impl SpecOutcome {
    pub fn holds(&self) -> bool {
        !self.slack.is_negative()
    }
}

/// One graph's evaluation. Specs that do not apply are omitted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphRecord {
    pub graph6: String,
    pub n: usize,
    pub profile: DegreeProfile,
    pub alpha: usize,
    pub outcomes: Vec<SpecOutcome>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub flags: Vec<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderCounts {
    pub scanned: usize,
    pub holds: usize,
    pub tight: Vec<String>,
    pub violations: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub spec: BoundSpec,
    pub per_n: BTreeMap<usize, OrderCounts>,
    pub stopped_early: bool,
}

impl CensusReport {
    pub fn new(spec: BoundSpec) -> Self {
        CensusReport { spec, per_n: BTreeMap::new(), stopped_early: false }
    }

    pub fn scanned(&self) -> usize {
        self.per_n.values().map(|c| c.scanned).sum()
    }

    pub fn tight(&self) -> Vec<String> {
        self.per_n.values().flat_map(|c| c.tight.iter().cloned()).collect()
    }

    pub fn violations(&self) -> Vec<String> {
        self.per_n.values().flat_map(|c| c.violations.iter().cloned()).collect()
    }

    /// `scanned = holds + violations` and `tight <= holds` at every order.
    pub fn accounting_holds(&self) -> bool {
        self.per_n
            .values()
            .all(|c| c.scanned == c.holds + c.violations.len() && c.tight.len() <= c.holds)
    }

    fn add(&mut self, n: usize, graph6: &str, o: &SpecOutcome) {
        let c = self.per_n.entry(n).or_default();
        c.scanned += 1;
        if o.holds() {
            c.holds += 1;
            if o.tight {
                c.tight.push(graph6.to_string());
            }
        } else {
            c.violations.push(graph6.to_string());
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRun {
    pub records: Vec<GraphRecord>,
    pub reports: Vec<CensusReport>,
    /// Graphs on which the two oracles disagreed (cross-check mode only).
    pub oracle_mismatches: Vec<String>,
}

/// Bound on `g`, or `None` when the spec does not apply. In per-component
/// mode every component must be applicable.
fn bound_on(spec: &BoundSpec, g: &Graph, per_component: bool) -> Option<Rational> {
    if !per_component {
        return spec.applies_to(g).then(|| spec.value_on(g));
    }
    g.components()
        .iter()
        .map(|c| {
            let h = g.induced(c).0;
            spec.applies_to(&h).then(|| spec.value_on(&h))
        })
        .sum()
}

fn evaluate_graph(specs: &[BoundSpec], g: &Graph, opts: &CensusOptions) -> GraphRecord {
    let alpha = opts.oracle.solve(g).expect("graph within the oracle cap").alpha;
    let mut flags = Vec::new();
    if opts.cross_check {
        let other = match opts.oracle {
            Oracle::BranchAndBound => Oracle::Brute,
            Oracle::Brute => Oracle::BranchAndBound,
        };
        match other.solve(g) {
            Ok(r) if r.alpha != alpha => flags.push("oracle-mismatch".to_string()),
            Ok(_) => {}
            Err(_) => flags.push("cross-check-skipped".to_string()),
        }
    }
    let outcomes = specs
        .iter()
        .filter_map(|s| {
            let bound = bound_on(s, g, opts.per_component)?;
            let slack = Rational::from_count(alpha) - bound;
            Some(SpecOutcome { spec: s.name.clone(), bound, slack, tight: slack.is_zero() })
        })
        .collect();
    GraphRecord { graph6: emit_graph6(g), n: g.n(), profile: degree_profile(g), alpha, outcomes, flags }
}

const CHUNK: usize = 512;

/// Evaluates every spec on every graph, in input order.
pub fn census(specs: &[BoundSpec], graphs: &[Graph], opts: &CensusOptions) -> CensusRun {
    let mut records: Vec<GraphRecord> = Vec::with_capacity(graphs.len());
    let mut stopped = false;
    for chunk in graphs.chunks(CHUNK) {
        let batch: Vec<GraphRecord> = chunk.par_iter().map(|g| evaluate_graph(specs, g, opts)).collect();
        records.extend(batch);
        if opts.stop_on_violation {
            if let Some(i) = records.iter().position(|r| r.outcomes.iter().any(|o| !o.holds())) {
                stopped = i + 1 < graphs.len();
                records.truncate(i + 1);
                break;
            }
        }
    }
    let mut reports: Vec<CensusReport> = specs.iter().map(|s| CensusReport::new(s.clone())).collect();
    for r in &records {
        for o in &r.outcomes {
            let k = specs.iter().position(|s| s.name == o.spec).expect("outcome names a spec");
            reports[k].add(r.n, &r.graph6, o);
        }
    }
    for rep in &mut reports {
        rep.stopped_early = stopped;
    }
    let oracle_mismatches = records
        .iter()
        .filter(|r| r.flags.iter().any(|f| f == "oracle-mismatch"))
        .map(|r| r.graph6.clone())
        .collect();
    CensusRun { records, reports, oracle_mismatches }
}

/// Tight and violating graphs for `spec` over the enumerated corpus.
pub fn census_equality(spec: &BoundSpec, task: &EnumerationTask) -> Result<CensusReport, EnumerateError> {
    let graphs = enumerate(task)?;
    let mut run = census(std::slice::from_ref(spec), &graphs, &CensusOptions::default());
    Ok(run.reports.remove(0))
}

/// Like [`census_equality`], optionally stopping at the first violation.
pub fn search_violations(
    spec: &BoundSpec,
    task: &EnumerationTask,
    stop_early: bool,
) -> Result<CensusReport, EnumerateError> {
    let graphs = enumerate(task)?;
    let opts = CensusOptions { stop_on_violation: stop_early, ..CensusOptions::default() };
    let mut run = census(std::slice::from_ref(spec), &graphs, &opts);
    Ok(run.reports.remove(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::presets::{eq10_11, eq13, eq9};
    use crate::bounds::BoundSpec;
    use crate::canon::is_isomorphic;
    use crate::families::{gen_a, gen_b, path, Attachment};
    use crate::graph::{parse_graph6, GraphOptions};
    use crate::rational::q;

    #[test]
    fn eq9_tight_on_families_up_to_eight() {
        let rep = census_equality(&eq9(), &EnumerationTask::class(8)).unwrap();
        assert!(rep.violations().is_empty());
        assert!(rep.accounting_holds());
        let tight: Vec<Graph> =
            rep.tight().iter().map(|s| parse_graph6(s, &GraphOptions::default()).unwrap()).collect();
        let mut members = vec![];
        for k in 1..=2 {
            members.push(gen_a(k, Attachment::LowestIndex).unwrap().graph);
        }
        for n in 2..=4 {
            members.push(gen_b(n).unwrap().graph);
        }
        for m in &members {
            assert!(tight.iter().any(|t| is_isomorphic(t, m)), "missing {}", emit_graph6(m));
        }
    }

    #[test]
    fn exception_graphs_are_tight() {
        let c5 = crate::families::cycle(5).unwrap().graph;
        let k2 = path(2).unwrap().graph;
        let run = census(&[eq10_11()], &[k2, c5], &CensusOptions::default());
        assert!(run.records.iter().all(|r| r.outcomes[0].tight));
    }

    #[test]
    fn early_stop_truncates() {
        let spec = BoundSpec::custom([q(1, 1), q(1, 1), q(1, 1), q(0, 1)]);
        let rep = search_violations(&spec, &EnumerationTask::class(6), true).unwrap();
        assert_eq!(rep.scanned(), 1);
        assert!(rep.stopped_early);
        let rep = search_violations(&eq13(), &EnumerationTask::class(7), true).unwrap();
        assert!(!rep.stopped_early && rep.violations().is_empty());
    }

    #[test]
    fn per_component_sums() {
        let two = path(3).unwrap().graph.disjoint_union(&path(3).unwrap().graph).unwrap();
        let opts = CensusOptions { per_component: true, ..CensusOptions::default() };
        let run = census(&[eq9()], &[two.clone()], &opts);
        assert_eq!(run.records[0].outcomes[0].bound, q(10, 3));
        let run = census(&[eq9()], &[two], &CensusOptions::default());
        assert!(run.records[0].outcomes.is_empty());
    }
}
