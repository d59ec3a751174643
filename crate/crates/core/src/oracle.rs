//! Exact maximum independent set.
//!
//! [`alpha`] is a branch-and-bound search with the classic reductions
//! (isolated and pendant vertices are taken, components are solved
//! separately). [`alpha_brute`] is an exhaustive subset scan kept as an
//! independent cross-check for small graphs.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{bit, mask_iter, Graph, MAX_VERTICES};

/// Largest graph accepted by [`alpha_brute`].
pub const BRUTE_CAP: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has {n} vertices, oracle cap is {cap}")]
    TooLarge { n: usize, cap: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphaResult {
    pub alpha: usize,
    /// Sorted vertex list attaining `alpha`.
    pub witness: Vec<usize>,
    pub nodes_explored: u64,
}

/// Which exact solver to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Oracle {
    #[default]
    BranchAndBound,
    Brute,
}

impl Oracle {
    pub fn solve(self, g: &Graph) -> Result<AlphaResult, OracleError> {
        match self {
            Oracle::BranchAndBound => alpha(g),
            Oracle::Brute => alpha_brute(g),
        }
    }
}

/// Checks independence from adjacency lists only.
pub fn is_independent_set(g: &Graph, set: &[usize]) -> bool {
    let mut member = vec![false; g.n()];
    for &v in set {
        if v >= g.n() || member[v] {
            return false;
        }
        member[v] = true;
    }
    set.iter()
        .all(|&v| g.neighbors(v).iter().all(|&w| !member[w]))
}

fn checked(g: &Graph, witness: Vec<usize>, nodes_explored: u64) -> AlphaResult {
    assert!(
        is_independent_set(g, &witness),
        "oracle returned a dependent set on {g:?}"
    );
    AlphaResult {
        alpha: witness.len(),
        witness,
        nodes_explored,
    }
}

pub fn alpha(g: &Graph) -> Result<AlphaResult, OracleError> {
    if g.n() > MAX_VERTICES {
        return Err(OracleError::TooLarge {
            n: g.n(),
            cap: MAX_VERTICES,
        });
    }
    let mut solver = Solver {
        masks: g.masks(),
        nodes: 0,
    };
    let set = solver.solve(g.all_mask());
    Ok(checked(g, mask_iter(set).collect(), solver.nodes))
}

struct Solver<'a> {
    masks: &'a [u128],
    nodes: u64,
}

impl Solver<'_> {
    fn components(&self, live: u128) -> Vec<u128> {
        let mut rest = live;
        let mut out = Vec::new();
        while rest != 0 {
            let mut comp = rest & rest.wrapping_neg();
            let mut frontier = comp;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = self.masks[v] & live & !comp;
                comp |= fresh;
                frontier |= fresh;
            }
            rest &= !comp;
            out.push(comp);
        }
        out
    }

    fn solve(&mut self, mut live: u128) -> u128 {
        self.nodes += 1;
        let mut taken = 0u128;
        loop {
            let mut changed = false;
            for v in mask_iter(live) {
                if live & bit(v) == 0 {
                    continue;
                }
                let nb = self.masks[v] & live;
                if nb.count_ones() <= 1 {
                    taken |= bit(v);
                    live &= !(bit(v) | nb);
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        if live == 0 {
            return taken;
        }
        let comps = self.components(live);
        if comps.len() > 1 {
            for c in comps {
                taken |= self.solve(c);
            }
            return taken;
        }
        let v = mask_iter(live)
            .max_by_key(|&v| ((self.masks[v] & live).count_ones(), std::cmp::Reverse(v)))
            .expect("live is nonempty");
        let include = bit(v) | self.solve(live & !bit(v) & !self.masks[v]);
        let rest = live & !bit(v);
        if rest.count_ones() > include.count_ones() {
            let exclude = self.solve(rest);
            if exclude.count_ones() > include.count_ones() {
                return taken | exclude;
            }
        }
        taken | include
    }
}

/// Exhaustive scan over all `2^n` subsets.
pub fn alpha_brute(g: &Graph) -> Result<AlphaResult, OracleError> {
    let n = g.n();
    if n > BRUTE_CAP {
        return Err(OracleError::TooLarge { n, cap: BRUTE_CAP });
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect();
    let total = 1usize << n;
    // independent[s] for every subset s, built from s minus its lowest vertex
    let mut independent = vec![false; total];
    independent[0] = true;
    let (mut best, mut best_size) = (0u32, 0u32);
    for s in 1..total {
        let low = s.trailing_zeros() as usize;
        let rest = s & (s - 1);
        let ok = independent[rest] && adj[low] & s as u32 == 0;
        independent[s] = ok;
        if ok && (s as u32).count_ones() > best_size {
            best = s as u32;
            best_size = best.count_ones();
        }
    }
    let witness = (0..n).filter(|&v| best & (1 << v) != 0).collect();
    Ok(checked(g, witness, total as u64))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn petersen() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, e).unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(alpha(&cycle(5)).unwrap().alpha, 2);
        assert_eq!(alpha_brute(&cycle(5)).unwrap().alpha, 2);
        assert_eq!(alpha(&Graph::empty(5)).unwrap().alpha, 5);
        assert_eq!(alpha_brute(&Graph::empty(5)).unwrap().alpha, 5);
        assert_eq!(alpha(&Graph::empty(0)).unwrap().alpha, 0);
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(alpha(&k4).unwrap().alpha, 1);
        assert_eq!(alpha_brute(&k4).unwrap().alpha, 1);
    }

    #[test]
    fn petersen_has_alpha_four() {
        let p = petersen();
        let brute = alpha_brute(&p).unwrap();
        assert_eq!(brute.alpha, 4);
        let bb = alpha(&p).unwrap();
        assert_eq!(bb.alpha, 4);
        assert!(is_independent_set(&p, &bb.witness));
    }

    #[test]
    fn long_cycle_within_hard_cap() {
        assert_eq!(alpha(&cycle(100)).unwrap().alpha, 50);
        assert_eq!(alpha(&cycle(101)).unwrap().alpha, 50);
    }

    #[test]
    fn brute_rejects_large_graphs() {
        assert_eq!(
            alpha_brute(&cycle(25)),
            Err(OracleError::TooLarge { n: 25, cap: 24 })
        );
    }

    #[test]
    fn deterministic_witness() {
        let p = petersen();
        assert_eq!(alpha(&p).unwrap(), alpha(&p).unwrap());
    }

    #[test]
    fn independence_checker() {
        let c = cycle(6);
        assert!(is_independent_set(&c, &[0, 2, 4]));
        assert!(!is_independent_set(&c, &[0, 1]));
        assert!(!is_independent_set(&c, &[0, 0]));
        assert!(!is_independent_set(&c, &[7]));
    }
}
