//! Exact independence numbers from both solvers, plus a Brooks coloring.

use subcubic::constructive::brooks_coloring;
use subcubic::families::{cycle, petersen, prism};
use subcubic::oracle::{alpha, alpha_brute};

fn main() {
    let graphs = [("C7", cycle(7).unwrap().graph), ("prism", prism()), ("Petersen", petersen())];
    for (name, g) in &graphs {
        let bb = alpha(g).unwrap();
        let brute = alpha_brute(g).unwrap();
        let coloring = brooks_coloring(g).unwrap();
        println!(
            "{name:9} alpha = {} (brute {}), witness {:?}, {} nodes, {} colors",
            bb.alpha,
            brute.alpha,
            bb.witness,
            bb.nodes_explored,
            coloring.num_colors()
        );
    }
}
