//! Evaluate the preset bounds on a graph, compare two bounds, and run the
//! weighting, polytope and necessity checks.

use subcubic::bounds::presets::{eq13, eq4};
use subcubic::bounds::{
    check_all, compare_bounds, kp_verify, necessity_witness, polytope_extreme_points, BoundSpec, KpWeighting,
};
use subcubic::families::{gen_b, path};
use subcubic::oracle::alpha;
use subcubic::q;

fn main() {
    let g = gen_b(4).unwrap().graph;
    let a = alpha(&g).unwrap().alpha;
    println!("comb on 8 vertices, alpha = {a}");
    for r in check_all(&g, a).unwrap() {
        println!("  {:16} bound {:6} slack {}", r.spec, r.bound_value.to_string(), r.slack);
    }

    let d = compare_bounds(&eq13(), &eq4());
    println!("eq13 vs eq4: {:?} on {}", d.verdict, d.region);

    let p5 = path(5).unwrap().graph;
    let v = kp_verify(&p5, &KpWeighting::per_class(q(2, 3), q(5, 14), q(2, 7)));
    println!("weighting (2/3, 5/14, 2/7) on P5: feasible = {}, {:?}", v.feasible, v.violated_constraint);

    let report = polytope_extreme_points();
    println!("polytope: {} systems, {} vertices", report.systems.len(), report.vertices.len());
    for x in &report.vertices {
        println!("  {:?} binding {:?}", x.point.map(|r| r.to_string()), x.binding);
    }
    println!("  discrepancies: {}", report.discrepancies.len());

    let bad = BoundSpec::custom([q(1, 2), q(1, 2) + q(1, 100), q(0, 1), q(1, 1)]);
    let w = necessity_witness(&bad).unwrap();
    println!("necessity witness for {}: {} (bound {} > alpha {})", bad.name, w.description, w.bound_value, w.alpha);
}
