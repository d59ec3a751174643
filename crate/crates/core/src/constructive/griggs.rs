//! `alpha >= 4/7 n1 + 3/7 n2 + 2/7 n3` on connected triangle-free subcubic
//! graphs, with `1/7` subtracted on K2 and C5.

use super::{cycle_order, finish, Builder, Certificate, ConstructError, Reduced};
use crate::bounds::presets::eq10_11;
use crate::bounds::BoundSpec;
use crate::graph::{bridges, emit_graph6, is_c5, is_cycle, is_triangle_free, pendants, Graph};
use crate::oracle::alpha;

pub fn construct_griggs(g: &Graph) -> Result<Certificate, ConstructError> {
    check_input(g)?;
    let spec = eq10_11();
    let mut b = Builder::new();
    let orig: Vec<usize> = (0..g.n()).collect();
    let set = rec(&mut b, &spec, g, &orig);
    finish("griggs", g, set, spec, b.trace)
}

pub(crate) fn check_input(g: &Graph) -> Result<(), ConstructError> {
    if g.n() < 2 || !g.is_connected() || !g.is_subcubic() {
        return Err(ConstructError::NotConnectedSubcubic(emit_graph6(g)));
    }
    if !is_triangle_free(g) {
        return Err(ConstructError::NotTriangleFree(emit_graph6(g)));
    }
    Ok(())
}

fn mask_of(vs: &[usize]) -> u128 {
    vs.iter().fold(0u128, |m, &v| m | 1u128 << v)
}

fn is_c5_graph(g: &Graph) -> bool {
    g.n() == 5 && is_cycle(g)
}

/// A bridge `(c0, x)` whose removal leaves a C5 containing `c0`; the C5's vertices.
fn bridge_to_c5(g: &Graph) -> Option<(usize, Vec<usize>)> {
    for (a, c) in bridges(g) {
        let h = g.without_edge(a, c);
        for end in [a, c] {
            let comp = h
                .components()
                .into_iter()
                .find(|comp| comp.contains(&end))
                .expect("endpoint has a component");
            if is_c5(&h, mask_of(&comp)) {
                return Some((end, comp));
            }
        }
    }
    None
}

pub(crate) fn rec(b: &mut Builder, spec: &BoundSpec, g: &Graph, orig: &[usize]) -> Vec<usize> {
    let bound = spec.value_on(g);
    let n = g.n();
    if n <= 4 || is_c5_graph(g) {
        let s = alpha(g).expect("small base").witness;
        b.push("griggs-base", orig, &[], vec![], &s, &[], s.len(), bound);
        return s;
    }

    if let Some(p) = pendants(g).first().copied() {
        let (u, w) = (p.leaf, p.neighbor);
        let r = Reduced::new(g, orig, &[u, w]);
        if g.degree(w) == 2 {
            let mut s = r.lift(&rec(b, spec, &r.g, &r.orig));
            s.push(u);
            b.push("griggs-case-1.1", orig, &[u, w], vec![], &[u], &[], s.len(), bound);
            return s;
        }
        let comps = r.g.components();
        if comps.len() == 1 {
            let mut s = r.lift(&rec(b, spec, &r.g, &r.orig));
            s.push(u);
            b.push("griggs-case-1.2", orig, &[u, w], vec![], &[u], &[], s.len(), bound);
            return s;
        }
        if let Some(single) = comps.iter().find(|c| c.len() == 1) {
            // x1 only touched w: take it along with u
            let x1 = r.remap.to_old(single[0]);
            let rr = Reduced::new(g, orig, &[u, w, x1]);
            let mut s = rr.lift(&rec(b, spec, &rr.g, &rr.orig));
            s.extend([u, x1]);
            b.push("griggs-case-1.2", orig, &[u, w, x1], vec![], &[u, x1], &[], s.len(), bound);
            return s;
        }
        let mut s = Vec::new();
        for comp in &comps {
            let parent: Vec<usize> = r.lift(comp);
            let rc = Reduced::induced(g, orig, &parent);
            s.extend(rc.lift(&rec(b, spec, &rc.g, &rc.orig)));
        }
        s.push(u);
        b.push("griggs-case-1.2", orig, &[u, w], vec![], &[u], &[], s.len(), bound);
        return s;
    }

    if is_cycle(g) {
        let order = cycle_order(g, &(0..n).collect::<Vec<_>>(), 0);
        let s: Vec<usize> = order.iter().step_by(2).take(n / 2).copied().collect();
        b.push("griggs-case-2", orig, &[], vec![], &s, &[], s.len(), bound);
        return s;
    }

    if let Some((c0, comp)) = bridge_to_c5(g) {
        let ord = cycle_order(g, &comp, c0);
        let pick = [ord[1], ord[3]];
        let r = Reduced::new(g, orig, &comp);
        let mut s = r.lift(&rec(b, spec, &r.g, &r.orig));
        s.extend(pick);
        b.push("griggs-case-3.1", orig, &comp, vec![], &pick, &[], s.len(), bound);
        return s;
    }

    let w = (0..n).find(|&v| g.degree(v) == 3).expect("not a cycle and no pendant");
    let r = Reduced::new(g, orig, &[w]);
    let comps: Vec<Vec<usize>> = r.g.components().iter().map(|c| r.lift(c)).collect();
    if let Some(c5) = comps.iter().find(|c| is_c5(g, mask_of(c))) {
        let mut touch: Vec<usize> = g.neighbors(w).iter().copied().filter(|x| c5.contains(x)).collect();
        touch.sort_unstable();
        let (p, q) = (touch[0], touch[1]);
        let mut ord = cycle_order(g, c5, p);
        if ord[2] != q {
            ord[1..].reverse();
        }
        debug_assert_eq!(ord[2], q);
        let pick = [ord[1], ord[3]];
        let rr = Reduced::new(g, orig, c5);
        let mut s = rr.lift(&rec(b, spec, &rr.g, &rr.orig));
        s.extend(pick);
        b.push("griggs-case-3.2", orig, c5, vec![], &pick, &[], s.len(), bound);
        return s;
    }
    let mut s = Vec::new();
    for comp in &comps {
        let rc = Reduced::induced(g, orig, comp);
        s.extend(rc.lift(&rec(b, spec, &rc.g, &rc.orig)));
    }
    b.push("griggs-case-3.3", orig, &[w], vec![], &[], &[], s.len(), bound);
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle, gen_n, path};
    use crate::rational::q;

    #[test]
    fn named_cases() {
        let c = construct_griggs(&cycle(7).unwrap().graph).unwrap();
        assert_eq!(c.size, 3);
        assert_eq!(c.bound_value, q(3, 1));
        let c = construct_griggs(&cycle(5).unwrap().graph).unwrap();
        assert_eq!(c.size, 2);
        assert_eq!(c.bound_value, q(2, 1));
        let c = construct_griggs(&gen_n(4).unwrap().graph).unwrap();
        assert_eq!(c.size, 4);
        assert_eq!(c.bound_value, q(4, 1));
        assert!(c.trace.iter().any(|s| s.rule == "griggs-case-3.1"));
        let k2 = path(2).unwrap().graph;
        assert_eq!(construct_griggs(&k2).unwrap().size, 1);
    }

    #[test]
    fn c5_hanging_off_degree_three_vertex() {
        // w = 0 adjacent to 1 and 3 on the C5 1..=5 and to 6 on the C6 6..=11
        let mut e: Vec<(usize, usize)> = (1..=5).map(|i| (i, i % 5 + 1)).collect();
        e.extend([(0, 1), (0, 3), (0, 6)]);
        e.extend((6..11).map(|i| (i, i + 1)));
        e.push((11, 6));
        let g = Graph::from_edges(12, e).unwrap();
        let c = construct_griggs(&g).unwrap();
        assert!(c.trace.iter().any(|s| s.rule == "griggs-case-3.2"));
    }

    #[test]
    fn rejects_triangles() {
        assert!(matches!(
            construct_griggs(&cycle(3).unwrap().graph),
            Err(ConstructError::NotTriangleFree(_))
        ));
    }
}
