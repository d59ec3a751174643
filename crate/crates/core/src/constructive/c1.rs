//! `alpha >= c1 n1 + 3/7 n2 + (1 - c1) n3 - (2 c1 - 8/7)` for `5/7 <= c1 <= 1`.

use super::{finish, griggs, Builder, Certificate, ConstructError, Reduced};
use crate::bounds::presets::{eq10_11, eq12};
use crate::bounds::BoundSpec;
use crate::graph::{classify, diamond_sites, emit_graph6, is_triangle_free, pendants, triangles, Graph};
use crate::oracle::{alpha, is_independent_set};
use crate::rational::Rational;

pub fn construct_c1(g: &Graph, c1: Rational) -> Result<Certificate, ConstructError> {
    if !classify(g).in_class() {
        return Err(ConstructError::NotInClass(emit_graph6(g)));
    }
    let spec = eq12(c1).map_err(|_| ConstructError::C1OutOfRange(c1))?;
    let mut b = Builder::new();
    let orig: Vec<usize> = (0..g.n()).collect();
    let set = rec(&mut b, &spec, g, &orig);
    finish("c1", g, set, spec, b.trace)
}

fn oracle_set(g: &Graph) -> Vec<usize> {
    alpha(g).expect("graph within the vertex cap").witness
}

fn rec(b: &mut Builder, spec: &BoundSpec, g: &Graph, orig: &[usize]) -> Vec<usize> {
    let bound = spec.value_on(g);
    let n = g.n();
    if n <= 5 {
        let s = oracle_set(g);
        b.push("c1-base", orig, &[], vec![], &s, &[], s.len(), bound);
        return s;
    }

    if let Some(p) = pendants(g).first().copied() {
        let (u, w) = (p.leaf, p.neighbor);
        let mut r = Reduced::new(g, orig, &[u, w]);
        let (rule, added) = match g.degree(w) {
            2 => ("c1-case-2.1", vec![]),
            _ => {
                let xs: Vec<usize> = g.neighbors(w).iter().copied().filter(|&x| x != u).collect();
                let added = r.add_edge_unless_k4(xs[0], xs[1]).into_iter().collect();
                ("c1-case-2.2", added)
            }
        };
        let mut s = r.lift(&rec(b, spec, &r.g, &r.orig));
        s.push(u);
        b.push(rule, orig, &[u, w], added, &[u], &[], s.len(), bound);
        return s;
    }

    if is_triangle_free(g) {
        let s = griggs::rec(b, &eq10_11(), g, orig);
        b.push("c1-case-1.1", orig, &[], vec![], &[], &[], s.len(), bound);
        return s;
    }

    if let Some(d) = diamond_sites(g).first().copied() {
        return case_1_2(b, spec, g, orig, d.u1, d.u2, d.w1, d.w2);
    }

    let t = triangles(g)[0];
    let mut deg2: Vec<usize> = t.iter().copied().filter(|&v| g.degree(v) == 2).collect();
    let deg3: Vec<usize> = t.iter().copied().filter(|&v| g.degree(v) == 3).collect();
    let outside = |w: usize| -> usize {
        g.neighbors(w).iter().copied().find(|x| !t.contains(x)).expect("degree-3 triangle vertex")
    };
    match deg2.len() {
        2 => {
            let w1 = deg2.remove(0);
            let r = Reduced::new(g, orig, &t);
            let mut s = r.lift(&rec(b, spec, &r.g, &r.orig));
            s.push(w1);
            b.push("c1-case-1.3.1", orig, &t, vec![], &[w1], &[], s.len(), bound);
            s
        }
        1 => {
            let w1 = deg2[0];
            let (u2, u3) = (outside(deg3[0]), outside(deg3[1]));
            let mut r = Reduced::new(g, orig, &t);
            let added: Vec<_> = r.add_edge_unless_k4(u2, u3).into_iter().collect();
            let mut s = r.lift(&rec(b, spec, &r.g, &r.orig));
            s.push(w1);
            b.push("c1-case-1.3.2", orig, &t, added, &[w1], &[], s.len(), bound);
            s
        }
        _ => {
            let us = [outside(t[0]), outside(t[1]), outside(t[2])];
            if g.has_edge(us[0], us[1]) && g.has_edge(us[0], us[2]) && g.has_edge(us[1], us[2]) {
                // triangular prism
                let s = vec![t[0], us[1]];
                b.push("c1-case-1.3.3", orig, &[], vec![], &s, &[], s.len(), bound);
                return s;
            }
            let (i, j) = [(0, 1), (0, 2), (1, 2)]
                .into_iter()
                .find(|&(i, j)| !g.has_edge(us[i], us[j]))
                .expect("u's are not a triangle");
            let mut r = Reduced::new(g, orig, &t);
            let added = r.add_edge_unless_k4(us[i], us[j]).expect("edge is absent");
            let mut sub = Vec::new();
            for comp in r.g.components() {
                let rc = Reduced::induced(&r.g, &r.orig, &comp);
                sub.extend(rc.lift(&rec(b, spec, &rc.g, &rc.orig)));
            }
            let mut s = r.lift(&sub);
            let pick = if s.contains(&us[i]) { t[j] } else { t[i] };
            s.push(pick);
            b.push("c1-case-1.3.3", orig, &t, vec![added], &[pick], &[], s.len(), bound);
            s
        }
    }
}

/// Recurses on `G - {u1, u2} + w1w2` and tries the lift `(I' - {w2}) + {u1, u2}`.
/// When the lifted set is not independent or falls short of the bound, the
/// subproblem's trace is discarded and the oracle solves `g` instead.
#[allow(clippy::too_many_arguments)]
fn case_1_2(
    b: &mut Builder,
    spec: &BoundSpec,
    g: &Graph,
    orig: &[usize],
    u1: usize,
    u2: usize,
    w1: usize,
    w2: usize,
) -> Vec<usize> {
    let bound = spec.value_on(g);
    let mark = b.trace.len();
    let mut r = Reduced::new(g, orig, &[u1, u2]);
    let added: Vec<_> = r.add_edge_unless_k4(w1, w2).into_iter().collect();
    let sub = r.lift(&rec(b, spec, &r.g, &r.orig));
    let mut s: Vec<usize> = sub.iter().copied().filter(|&v| v != w2).collect();
    s.extend([u1, u2]);
    if is_independent_set(g, &s) && Rational::from_count(s.len()) >= bound {
        b.push("c1-case-1.2", orig, &[u1, u2], added, &[u1, u2], &[w2], s.len(), bound);
        return s;
    }
    b.trace.truncate(mark);
    let s = oracle_set(g);
    b.push("c1-case-1.2-fallback", orig, &[], vec![], &s, &[], s.len(), bound);
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{gen_a, gen_b, prism, Attachment};
    use crate::rational::q;

    #[test]
    fn comb_tight_at_six_sevenths() {
        let c = construct_c1(&gen_b(4).unwrap().graph, q(6, 7)).unwrap();
        assert_eq!(c.size, 4);
        assert_eq!(c.bound_value, q(4, 1));
    }

    #[test]
    fn chain_tight_at_five_sevenths() {
        let c = construct_c1(&gen_a(3, Attachment::LowestIndex).unwrap().graph, q(5, 7)).unwrap();
        assert_eq!(c.size, 3);
        assert_eq!(c.bound_value, q(3, 1));
    }

    #[test]
    fn prism_hits_the_u_triangle_case() {
        let c = construct_c1(&prism(), q(5, 7)).unwrap();
        assert_eq!(c.size, 2);
        assert_eq!(c.bound_value, q(10, 7));
        assert_eq!(c.trace.last().unwrap().rule, "c1-case-1.3.3");
    }

    #[test]
    fn diamond_lift_falls_back() {
        // u1 = 0, u2 = 1, w1 = 2, w2 = 3, x = 4, y = 5
        let g = Graph::from_edges(6, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 5), (4, 5)])
            .unwrap();
        let c = construct_c1(&g, q(5, 7)).unwrap();
        assert_eq!(c.fallbacks_used, 1);
        assert_eq!(c.size, 2);
        assert_eq!(c.trace.len(), 1);
    }

    #[test]
    fn rejects_bad_c1() {
        assert!(matches!(
            construct_c1(&prism(), q(1, 2)),
            Err(ConstructError::C1OutOfRange(_))
        ));
    }
}
