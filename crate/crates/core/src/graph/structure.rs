use serde::{Deserialize, Serialize};

use super::{bit, mask_iter, Graph};

/// Vertex counts by degree. Vertices of degree above 3 are counted in `higher`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DegreeProfile {
    pub n0: usize,
    pub n1: usize,
    pub n2: usize,
    pub n3: usize,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub higher: usize,
}

fn is_zero(x: &usize) -> bool {
    *x == 0
}

impl DegreeProfile {
    /// Profile with no isolated vertices.
    pub const fn new(n1: usize, n2: usize, n3: usize) -> Self {
        DegreeProfile {
            n0: 0,
            n1,
            n2,
            n3,
            higher: 0,
        }
    }

    pub fn total(&self) -> usize {
        self.n0 + self.n1 + self.n2 + self.n3 + self.higher
    }

    pub fn triple(&self) -> (usize, usize, usize) {
        (self.n1, self.n2, self.n3)
    }
}

impl std::ops::Add for DegreeProfile {
    type Output = DegreeProfile;

    fn add(self, o: DegreeProfile) -> DegreeProfile {
        DegreeProfile {
            n0: self.n0 + o.n0,
            n1: self.n1 + o.n1,
            n2: self.n2 + o.n2,
            n3: self.n3 + o.n3,
            higher: self.higher + o.higher,
        }
    }
}

pub fn degree_profile(g: &Graph) -> DegreeProfile {
    let mut p = DegreeProfile::default();
    for v in 0..g.n() {
        match g.degree(v) {
            0 => p.n0 += 1,
            1 => p.n1 += 1,
            2 => p.n2 += 1,
            3 => p.n3 += 1,
            _ => p.higher += 1,
        }
    }
    p
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassMembership {
    pub connected: bool,
    pub subcubic: bool,
    pub is_k4: bool,
    pub order_at_least_3: bool,
    pub triangle_free: bool,
}

impl ClassMembership {
    /// Connected, subcubic, not K4, at least three vertices.
    pub fn in_class(&self) -> bool {
        self.connected && self.subcubic && !self.is_k4 && self.order_at_least_3
    }
}

pub fn classify(g: &Graph) -> ClassMembership {
    ClassMembership {
        connected: g.is_connected(),
        subcubic: g.is_subcubic(),
        is_k4: g.n() == 4 && g.edge_count() == 6,
        order_at_least_3: g.n() >= 3,
        triangle_free: is_triangle_free(g),
    }
}

pub(crate) fn is_triangle_free(g: &Graph) -> bool {
    g.edges().all(|(u, v)| g.mask(u) & g.mask(v) == 0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pendant {
    pub leaf: usize,
    pub neighbor: usize,
}

/// An induced K4 minus an edge. `u1u2` is the edge shared by both triangles;
/// `w1`, `w2` is the unique nonadjacent pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiamondSite {
    pub u1: usize,
    pub u2: usize,
    pub w1: usize,
    pub w2: usize,
}

impl DiamondSite {
    pub fn vertices(&self) -> [usize; 4] {
        let mut v = [self.u1, self.u2, self.w1, self.w2];
        v.sort_unstable();
        v
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentInfo {
    /// Vertices in the indexing of the graph the removal was applied to.
    pub vertices: Vec<usize>,
    pub is_c5: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuralReport {
    pub pendants: Vec<Pendant>,
    pub triangles: Vec<[usize; 3]>,
    pub bridges: Vec<(usize, usize)>,
    pub diamonds: Vec<DiamondSite>,
    pub components: Vec<Vec<usize>>,
}

pub fn structural_queries(g: &Graph) -> StructuralReport {
    StructuralReport {
        pendants: pendants(g),
        triangles: triangles(g),
        bridges: bridges(g),
        diamonds: diamond_sites(g),
        components: g.components(),
    }
}

pub fn pendants(g: &Graph) -> Vec<Pendant> {
    (0..g.n())
        .filter(|&v| g.degree(v) == 1)
        .map(|leaf| Pendant {
            leaf,
            neighbor: g.neighbors(leaf)[0],
        })
        .collect()
}

/// Triangles as sorted triples, in lexicographic order.
pub fn triangles(g: &Graph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        let above = !((bit(v) << 1).wrapping_sub(1));
        for w in mask_iter(g.mask(u) & g.mask(v) & above) {
            out.push([u, v, w]);
        }
    }
    out.sort_unstable();
    out
}

pub fn diamond_sites(g: &Graph) -> Vec<DiamondSite> {
    let mut out = Vec::new();
    for (u1, u2) in g.edges() {
        let common: Vec<usize> = mask_iter(g.mask(u1) & g.mask(u2)).collect();
        for (i, &w1) in common.iter().enumerate() {
            for &w2 in &common[i + 1..] {
                if !g.has_edge(w1, w2) {
                    out.push(DiamondSite { u1, u2, w1, w2 });
                }
            }
        }
    }
    out.sort_by_key(|s| (s.vertices(), s.u1, s.u2));
    out
}

/// Cut edges by lowpoint search, as sorted pairs in lexicographic order.
pub fn bridges(g: &Graph) -> Vec<(usize, usize)> {
    fn dfs(
        g: &Graph,
        v: usize,
        parent: Option<usize>,
        timer: &mut usize,
        disc: &mut [usize],
        low: &mut [usize],
        out: &mut Vec<(usize, usize)>,
    ) {
        *timer += 1;
        disc[v] = *timer;
        low[v] = *timer;
        for &w in g.neighbors(v) {
            if Some(w) == parent {
                continue;
            }
            if disc[w] == 0 {
                dfs(g, w, Some(v), timer, disc, low, out);
                low[v] = low[v].min(low[w]);
                if low[w] > disc[v] {
                    out.push((v.min(w), v.max(w)));
                }
            } else {
                low[v] = low[v].min(disc[w]);
            }
        }
    }
    let n = g.n();
    let (mut disc, mut low) = (vec![0; n], vec![0; n]);
    let mut timer = 0;
    let mut out = Vec::new();
    for v in 0..n {
        if disc[v] == 0 {
            dfs(g, v, None, &mut timer, &mut disc, &mut low, &mut out);
        }
    }
    out.sort_unstable();
    out
}

pub(crate) fn is_c5(g: &Graph, comp: u128) -> bool {
    comp.count_ones() == 5 && mask_iter(comp).all(|v| (g.mask(v) & comp).count_ones() == 2)
}

/// True when `g` is a cycle on at least three vertices.
pub fn is_cycle(g: &Graph) -> bool {
    g.n() >= 3 && g.is_connected() && (0..g.n()).all(|v| g.degree(v) == 2)
}

/// Components of `g` after deleting `vertices` and `edges`, with C5 components flagged.
pub fn components_after_removal(
    g: &Graph,
    vertices: &[usize],
    edges: &[(usize, usize)],
) -> Vec<ComponentInfo> {
    let mut h = g.clone();
    for &(u, v) in edges {
        h = h.without_edge(u, v);
    }
    let mut live = g.all_mask();
    for &v in vertices {
        live &= !bit(v);
    }
    h.components_within(live)
        .into_iter()
        .map(|m| ComponentInfo {
            vertices: mask_iter(m).collect(),
            is_c5: is_c5(&h, m),
        })
        .collect()
}
