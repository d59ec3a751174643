//! `alpha >= 2/3 n1 + 1/3 n2 + 1/3 n3` by pendant reductions and a Brooks base.

use super::{brooks_coloring, finish, Builder, Certificate, ConstructError, Reduced};
use crate::bounds::presets::eq9;
use crate::bounds::BoundSpec;
use crate::graph::{classify, emit_graph6, pendants, Graph};
use crate::oracle::alpha;

pub fn construct_main(g: &Graph) -> Result<Certificate, ConstructError> {
    if !classify(g).in_class() {
        return Err(ConstructError::NotInClass(emit_graph6(g)));
    }
    let spec = eq9();
    let mut b = Builder::new();
    let orig: Vec<usize> = (0..g.n()).collect();
    let set = rec(&mut b, &spec, g, &orig)?;
    finish("main", g, set, spec, b.trace)
}

fn rec(
    b: &mut Builder,
    spec: &BoundSpec,
    g: &Graph,
    orig: &[usize],
) -> Result<Vec<usize>, ConstructError> {
    let bound = spec.value_on(g);
    if g.n() <= 4 {
        let s = alpha(g).expect("tiny graph").witness;
        b.push("main-base", orig, &[], vec![], &s, &[], s.len(), bound);
        return Ok(s);
    }
    let Some(p) = pendants(g).first().copied() else {
        let s = brooks_coloring(g)?.largest_class();
        b.push("main-brooks", orig, &[], vec![], &s, &[], s.len(), bound);
        return Ok(s);
    };
    let (u, w) = (p.leaf, p.neighbor);
    let mut r = Reduced::new(g, orig, &[u, w]);
    let (rule, added) = match g.degree(w) {
        2 => ("main-case-1", vec![]),
        _ => {
            let xs: Vec<usize> = g.neighbors(w).iter().copied().filter(|&x| x != u).collect();
            let added = r.add_edge_unless_k4(xs[0], xs[1]).into_iter().collect();
            ("main-case-2", added)
        }
    };
    let sub = rec(b, spec, &r.g, &r.orig)?;
    let mut s = r.lift(&sub);
    s.push(u);
    b.push(rule, orig, &[u, w], added, &[u], &[], s.len(), bound);
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{gen_a, gen_b, Attachment};
    use crate::rational::q;

    #[test]
    fn comb_is_tight() {
        let c = construct_main(&gen_b(3).unwrap().graph).unwrap();
        assert_eq!(c.size, 3);
        assert_eq!(c.bound_value, q(3, 1));
        assert_eq!(c.fallbacks_used, 0);
    }

    #[test]
    fn chain_uses_brooks() {
        let c = construct_main(&gen_a(2, Attachment::LowestIndex).unwrap().graph).unwrap();
        assert_eq!(c.size, 2);
        assert_eq!(c.trace.last().unwrap().rule, "main-brooks");
    }

    #[test]
    fn claw_base() {
        let claw = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let c = construct_main(&claw).unwrap();
        assert_eq!(c.independent_set, vec![1, 2, 3]);
        assert_eq!(c.bound_value, q(7, 3));
    }

    #[test]
    fn skips_edge_that_would_make_k4() {
        // w = 5 carries leaf 0 and the nonadjacent pair 1, 2 of the diamond 1,2,3,4
        let g = Graph::from_edges(
            6,
            [(0, 5), (5, 1), (5, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)],
        )
        .unwrap();
        let c = construct_main(&g).unwrap();
        let step = c.trace.iter().find(|s| s.rule == "main-case-2").unwrap();
        assert!(step.added_edges.is_empty());
        assert_eq!(c.independent_set, vec![0, 1, 2]);
    }

    #[test]
    fn rejects_outside_class() {
        assert!(construct_main(&crate::families::k4()).is_err());
    }
}
