//! Enumerate connected subcubic graphs and run a tightness census.

use subcubic::bounds::presets::eq10;
use subcubic::enumerate::{census_equality, counts, enumerate_naive, EnumerationTask};

fn main() {
    println!("graphs per order: {:?}", counts(9, false).unwrap());
    println!("triangle-free per order: {:?}", counts(9, true).unwrap());
    println!("naive count at n = 6: {}", enumerate_naive(6).len());

    let rep = census_equality(&eq10(), &EnumerationTask::up_to(10).triangle_free()).unwrap();
    println!("eq10 over triangle-free graphs n <= 10: scanned {}", rep.scanned());
    println!("  tight {:?}", rep.tight());
    println!("  violations {:?}", rep.violations());
}
