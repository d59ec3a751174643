//! Search the exhaustive corpus for violations of candidate bounds.

use subcubic::enumerate::{census, enumerate, probe_necessity, search_preset, CensusOptions, EnumerationTask};

fn main() {
    let graphs = enumerate(&EnumerationTask::class(9)).unwrap();
    let opts = CensusOptions { cross_check: true, ..CensusOptions::default() };
    for preset in ["open-question", "corollary-12"] {
        let specs = search_preset(preset).unwrap();
        let run = census(&specs, &graphs, &opts);
        println!("{preset}: {} graphs, {} oracle mismatches", graphs.len(), run.oracle_mismatches.len());
        for r in &run.reports {
            let v = r.violations();
            println!("  {:18} tight {:4} violations {:4} {}", r.spec.name, r.tight().len(), v.len(),
                v.first().map(|s| format!("first {s}")).unwrap_or_default());
        }
    }
    for s in search_preset("prop5").unwrap() {
        let p = probe_necessity(&s, 40).unwrap();
        println!("{}: {} gives bound {} against alpha {}", s.name, p.witness.description, p.bound, p.alpha);
    }
}
