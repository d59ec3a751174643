//! Check each reduction step of the inductive proofs on small graphs.

use subcubic::constructive::{audit, summarize, AuditVerdict, Theorem};
use subcubic::enumerate::{enumerate, EnumerationTask};

fn main() {
    let graphs = enumerate(&EnumerationTask::class(8)).unwrap();
    for theorem in [Theorem::Main, Theorem::Griggs, Theorem::C1] {
        let findings = audit(theorem, &graphs);
        println!("{theorem}:");
        for (rule, c) in &summarize(&findings).rules {
            println!("  {rule:22} checked {:4} violated {:3} noted {}", c.checked, c.violated, c.noted);
        }
        if let Some(f) = findings.iter().find(|f| f.verdict == AuditVerdict::Violated) {
            println!("  first violation: {} on {} ({}: {} vs {})", f.rule, f.graph6, f.claim, f.lhs, f.rhs);
        }
    }
}
