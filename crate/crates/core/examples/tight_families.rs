//! Build the extremal families and show where the bounds are tight.

use subcubic::bounds::presets::{eq10, eq12, eq13, eq9};
use subcubic::families::{by_name, gen_a, gen_b, gen_n, truncate, Attachment};
use subcubic::families::k33;
use subcubic::q;

fn main() {
    let specs = [eq9(), eq13(), eq12(q(5, 7)).unwrap()];
    for k in 1..=4 {
        for att in [Attachment::LowestIndex, Attachment::SeededRandom(7)] {
            let inst = gen_a(k, att).unwrap();
            let slacks: Vec<String> = specs
                .iter()
                .map(|s| (subcubic::Rational::from_count(inst.predicted_alpha) - s.value_on(&inst.graph)).to_string())
                .collect();
            println!("A k={k} {att:?}: n = {} alpha = {} slacks {:?}", inst.graph.n(), inst.predicted_alpha, slacks);
        }
    }
    for n in 2..=6 {
        let inst = gen_b(n).unwrap();
        let s = subcubic::Rational::from_count(inst.predicted_alpha) - eq9().value_on(&inst.graph);
        println!("B n={n}: alpha = {} eq9 slack {s}", inst.predicted_alpha);
    }
    for i in 1..=4 {
        let inst = gen_n(i).unwrap();
        let s = subcubic::Rational::from_count(inst.predicted_alpha) - eq10().value_on(&inst.graph);
        println!("N{i}: n = {} alpha = {} eq10 slack {s}", inst.graph.n(), inst.predicted_alpha);
    }
    let t = truncate(&k33()).unwrap();
    println!("truncated K33: n = {} alpha = {}", t.graph.n(), t.predicted_alpha);
    let c = by_name("cycle:9").unwrap();
    println!("by name cycle:9 -> alpha {}", c.predicted_alpha);
}
