//! Generators for the named families, each with its closed-form degree
//! profile and independence number.

use std::collections::BTreeMap;
use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{DegreeProfile, Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("base graph is not 3-regular")]
    NotCubic,
    #[error("base graph is not connected")]
    NotConnected,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Where rule (ii) of the triangle-chain family attaches each new triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Attachment {
    /// The lowest-index degree-2 vertex.
    #[default]
    LowestIndex,
    /// A uniformly chosen degree-2 vertex from a seeded stream.
    SeededRandom(u64),
}

impl fmt::Display for Attachment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Attachment::LowestIndex => write!(f, "lowest-index"),
            Attachment::SeededRandom(s) => write!(f, "seeded-random({s})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyTag {
    A,
    B,
    N,
    Truncation,
    APendant,
    Cycle,
    Path,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyInstance {
    #[serde(skip)]
    pub graph: Graph,
    pub family: FamilyTag,
    pub params: BTreeMap<String, String>,
    pub predicted_profile: DegreeProfile,
    pub predicted_alpha: usize,
}

fn instance(
    graph: Graph,
    family: FamilyTag,
    params: &[(&str, String)],
    predicted_profile: DegreeProfile,
    predicted_alpha: usize,
) -> FamilyInstance {
    FamilyInstance {
        graph,
        family,
        params: params.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
        predicted_profile,
        predicted_alpha,
    }
}

fn chain_edges(k: usize, attachment: Attachment) -> Vec<(usize, usize)> {
    let mut rng = match attachment {
        Attachment::SeededRandom(s) => Some(ChaCha8Rng::seed_from_u64(s)),
        Attachment::LowestIndex => None,
    };
    let mut degree = vec![0usize; 3 * k];
    let mut edges = Vec::with_capacity(4 * k);
    for i in 0..k {
        let base = 3 * i;
        if i > 0 {
            let deg2: Vec<usize> = (0..base).filter(|&v| degree[v] == 2).collect();
            let x = match rng.as_mut() {
                Some(r) => *deg2.choose(r).expect("a chain always has degree-2 vertices"),
                None => deg2[0],
            };
            edges.push((x, base));
            degree[x] += 1;
            degree[base] += 1;
        }
        for (a, b) in [(0, 1), (1, 2), (0, 2)] {
            edges.push((base + a, base + b));
            degree[base + a] += 1;
            degree[base + b] += 1;
        }
    }
    edges
}

/// The triangle chain on `3k` vertices: start from K3 and `k - 1` times hang a
/// new triangle off a degree-2 vertex. Triangle `i` occupies `3i..3i+2` and
/// attaches through `3i`.
pub fn gen_a(k: usize, attachment: Attachment) -> Result<FamilyInstance, FamilyError> {
    if k == 0 {
        return Err(FamilyError::InvalidParameter("k must be at least 1".into()));
    }
    let g = Graph::from_edges(3 * k, chain_edges(k, attachment))?;
    Ok(instance(
        g,
        FamilyTag::A,
        &[("k", k.to_string()), ("attachment", attachment.to_string())],
        DegreeProfile::new(0, k + 2, 2 * k - 2),
        k,
    ))
}

/// The comb: a path on `n` vertices with a pendant edge at each; pendant `n + i`
/// hangs off path vertex `i`.
pub fn gen_b(n: usize) -> Result<FamilyInstance, FamilyError> {
    if n < 2 {
        return Err(FamilyError::InvalidParameter("n must be at least 2".into()));
    }
    let edges = (1..n).map(|i| (i - 1, i)).chain((0..n).map(|i| (i, n + i)));
    let g = Graph::from_edges(2 * n, edges)?;
    Ok(instance(
        g,
        FamilyTag::B,
        &[("n", n.to_string())],
        DegreeProfile::new(n, 2, n - 2),
        n,
    ))
}

/// The four exceptional triangle-free graphs, by index: P4, C5 joined to K2 by
/// an edge, C7, and two C5s joined by an edge.
pub fn gen_n(index: usize) -> Result<FamilyInstance, FamilyError> {
    let c5 = |o: usize| (0..5).map(move |i| (o + i, o + (i + 1) % 5));
    let (g, profile, alpha) = match index {
        1 => (Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)])?, DegreeProfile::new(2, 2, 0), 2),
        2 => (
            Graph::from_edges(7, c5(0).chain([(5, 6), (0, 5)]))?,
            DegreeProfile::new(1, 5, 1),
            3,
        ),
        3 => (cycle_graph(7)?, DegreeProfile::new(0, 7, 0), 3),
        4 => (
            Graph::from_edges(10, c5(0).chain(c5(5)).chain([(0, 5)]))?,
            DegreeProfile::new(0, 8, 2),
            4,
        ),
        _ => return Err(FamilyError::InvalidParameter(format!("index {index} not in 1..=4"))),
    };
    Ok(instance(g, FamilyTag::N, &[("index", index.to_string())], profile, alpha))
}

/// Replaces each vertex of a connected cubic graph by a triangle; vertex `i`
/// becomes `3i..3i+2` and each base edge uses the lowest free slot at both ends.
pub fn truncate(base: &Graph) -> Result<FamilyInstance, FamilyError> {
    if (0..base.n()).any(|v| base.degree(v) != 3) || base.n() == 0 {
        return Err(FamilyError::NotCubic);
    }
    if !base.is_connected() {
        return Err(FamilyError::NotConnected);
    }
    let n = base.n();
    let mut next_slot = vec![0usize; n];
    let mut edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| [(3 * i, 3 * i + 1), (3 * i + 1, 3 * i + 2), (3 * i, 3 * i + 2)])
        .collect();
    for (u, v) in base.edges() {
        edges.push((3 * u + next_slot[u], 3 * v + next_slot[v]));
        next_slot[u] += 1;
        next_slot[v] += 1;
    }
    let g = Graph::from_edges(3 * n, edges)?;
    Ok(instance(
        g,
        FamilyTag::Truncation,
        &[("base_n", n.to_string())],
        DegreeProfile::new(0, 0, 3 * n),
        n,
    ))
}

/// The triangle chain with a two-vertex tail hung on every degree-2 vertex.
pub fn gen_a_pendant(k: usize, attachment: Attachment) -> Result<FamilyInstance, FamilyError> {
    let a = gen_a(k, attachment)?;
    let g = &a.graph;
    let deg2: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) == 2).collect();
    let tails = deg2.iter().enumerate().flat_map(|(j, &x)| {
        let t = g.n() + 2 * j;
        [(x, t), (t, t + 1)]
    });
    let g = g.extended(2 * deg2.len(), tails.collect::<Vec<_>>())?;
    Ok(instance(
        g,
        FamilyTag::APendant,
        &[("k", k.to_string()), ("attachment", attachment.to_string())],
        DegreeProfile::new(k + 2, k + 2, 3 * k),
        2 * k + 2,
    ))
}

fn cycle_graph(m: usize) -> Result<Graph, GraphError> {
    Graph::from_edges(m, (0..m).map(|i| (i, (i + 1) % m)))
}

pub fn cycle(m: usize) -> Result<FamilyInstance, FamilyError> {
    if m < 3 {
        return Err(FamilyError::InvalidParameter("a cycle needs at least 3 vertices".into()));
    }
    Ok(instance(
        cycle_graph(m)?,
        FamilyTag::Cycle,
        &[("m", m.to_string())],
        DegreeProfile::new(0, m, 0),
        m / 2,
    ))
}

pub fn path(m: usize) -> Result<FamilyInstance, FamilyError> {
    if m == 0 {
        return Err(FamilyError::InvalidParameter("a path needs at least 1 vertex".into()));
    }
    let g = Graph::from_edges(m, (1..m).map(|i| (i - 1, i)))?;
    let profile = match m {
        1 => DegreeProfile { n0: 1, ..Default::default() },
        2 => DegreeProfile::new(2, 0, 0),
        _ => DegreeProfile::new(2, m - 2, 0),
    };
    Ok(instance(g, FamilyTag::Path, &[("m", m.to_string())], profile, m.div_ceil(2)))
}

pub fn k4() -> Graph {
    Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).expect("valid")
}

pub fn k33() -> Graph {
    Graph::from_edges(6, (0..3).flat_map(|a| (3..6).map(move |b| (a, b)))).expect("valid")
}

/// Two triangles `0,1,2` and `3,4,5` joined by the matching `i -- i+3`.
pub fn prism() -> Graph {
    circular_ladder(3)
}

/// Outer 5-cycle `0..5`, spokes `i -- i+5`, inner pentagram.
pub fn petersen() -> Graph {
    let mut e = Vec::new();
    for i in 0..5 {
        e.push((i, (i + 1) % 5));
        e.push((i, i + 5));
        e.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, e).expect("valid")
}

fn circular_ladder(r: usize) -> Graph {
    let edges = (0..r).flat_map(|i| [(i, (i + 1) % r), (r + i, r + (i + 1) % r), (i, r + i)]);
    Graph::from_edges(2 * r, edges).expect("valid")
}

/// A connected cubic graph on `n` vertices: K4 for `n = 4`, otherwise the
/// circular ladder on `n/2` rungs.
pub fn cubic_base(n: usize) -> Result<Graph, FamilyError> {
    match n {
        4 => Ok(k4()),
        _ if n >= 6 && n % 2 == 0 && n <= crate::graph::MAX_VERTICES => Ok(circular_ladder(n / 2)),
        _ => Err(FamilyError::InvalidParameter(format!(
            "no cubic base on {n} vertices"
        ))),
    }
}

/// Parses a family name and parameter as accepted by the command line:
/// `A:<k>[:<seed>]`, `B:<n>`, `N:<index>`, `A-pendant:<k>[:<seed>]`,
/// `cycle:<m>`, `path:<m>`, `truncate:<base>` where base is `K4`, `K33`,
/// `prism`, `petersen` or a vertex count.
pub fn by_name(spec: &str) -> Result<FamilyInstance, FamilyError> {
    let bad = || FamilyError::InvalidParameter(format!("unrecognized family `{spec}`"));
    let mut parts = spec.split(':');
    let name = parts.next().ok_or_else(bad)?;
    let arg = parts.next().ok_or_else(bad)?;
    let extra = parts.next();
    let num = |s: &str| s.parse::<usize>().map_err(|_| bad());
    let attach = match extra {
        Some(s) => Attachment::SeededRandom(s.parse().map_err(|_| bad())?),
        None => Attachment::LowestIndex,
    };
    match name.to_ascii_lowercase().as_str() {
        "a" => gen_a(num(arg)?, attach),
        "b" => gen_b(num(arg)?),
        "n" => gen_n(num(arg)?),
        "a-pendant" | "a_pendant" => gen_a_pendant(num(arg)?, attach),
        "cycle" | "c" => cycle(num(arg)?),
        "path" | "p" => path(num(arg)?),
        "truncate" | "truncation" => {
            let base = match arg.to_ascii_lowercase().as_str() {
                "k4" => k4(),
                "k33" => k33(),
                "prism" => prism(),
                "petersen" => petersen(),
                other => cubic_base(num(other)?)?,
            };
            truncate(&base)
        }
        _ => Err(bad()),
    }
}
