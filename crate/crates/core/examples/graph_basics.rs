//! Parse a graph, inspect its structure and compute a canonical form.

use subcubic::canon::{canonical_graph6, is_isomorphic};
use subcubic::families::petersen;
use subcubic::graph::{
    bridges, classify, degree_profile, diamond_sites, emit_graph6, parse_edge_list, parse_graph6, pendants,
    triangles,
};
use subcubic::GraphOptions;

fn main() {
    let opts = GraphOptions::default();
    let g = parse_graph6("E}GW", &opts).unwrap();
    println!("graph6 E}}GW: n = {}, m = {}", g.n(), g.edge_count());
    println!("profile {:?}", degree_profile(&g).triple());
    println!("in class: {}", classify(&g).in_class());
    println!("triangles {:?}", triangles(&g));
    println!("diamond sites {:?}", diamond_sites(&g).iter().map(|d| d.vertices()).collect::<Vec<_>>());
    println!("bridges {:?}", bridges(&g));
    println!("pendants {}", pendants(&g).len());

    let same = parse_edge_list("0 1\n0 2\n0 3\n1 2\n1 3\n2 4\n3 5\n4 5\n", &opts).unwrap();
    println!("edge list round trip {} -> isomorphic: {}", emit_graph6(&same), is_isomorphic(&g, &same));

    let p = petersen();
    println!("Petersen canonical graph6 {}", canonical_graph6(&p));
}
