//! Fat graphs on a surface, face tracing and bigon reduction.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::bound::ReducedCounts;
use crate::error::{Error, Result};

/// Endpoint slot `pos` (0-based, cyclic) at vertex `vertex`. Its index label is `pos mod n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Slot {
    pub vertex: u32,
    pub pos: u32,
}

/// Where a boundary edge meets the surface boundary: component and position along it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BoundaryEnd {
    pub component: u32,
    pub pos: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Surface {
    pub genus: u32,
    pub boundary_count: u32,
}

impl Surface {
    pub fn euler_characteristic(&self) -> i64 {
        2 - 2 * self.genus as i64 - self.boundary_count as i64
    }
}

/// A graph on a compact surface; each of the `q` vertices carries `n * r`
/// cyclically ordered slots labeled `0, 1, ..., n-1` repeated `r` times.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FatGraph {
    pub surface: Surface,
    pub q_vertices: u32,
    pub n: u32,
    pub r: u32,
    pub interior_edges: Vec<(Slot, Slot)>,
    pub boundary_edges: Vec<(Slot, BoundaryEnd)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountCheck {
    pub ok: bool,
    pub diagnostics: Vec<String>,
}

/// `2 e_i + e_b = p n` with `p = q r`.
pub fn count_identity_holds(q: u32, r: u32, n: u32, e_i: u64, e_b: u64) -> bool {
    2 * e_i + e_b == q as u64 * r as u64 * n as u64
}

/// One complementary region of the graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    /// Edge ids along the face; interior edges first, then boundary edges offset by `e_i`.
    pub edges: Vec<usize>,
    pub touches_boundary: bool,
}

impl Face {
    pub fn sides(&self) -> usize {
        self.edges.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BeachballKind {
    /// Sphere, two vertices, all edges parallel interior edges.
    First,
    /// Disk, one vertex, all edges parallel boundary edges.
    Second,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParallelClass {
    pub edges: Vec<usize>,
    pub interior: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedGraph {
    pub counts: ReducedCounts,
    pub families: Vec<ParallelClass>,
}

impl ReducedGraph {
    pub fn family_sizes(&self) -> Vec<usize> {
        self.families.iter().map(|f| f.edges.len()).collect()
    }

    pub fn max_interior_family(&self) -> usize {
        self.families.iter().filter(|f| f.interior).map(|f| f.edges.len()).max().unwrap_or(0)
    }

    pub fn max_boundary_family(&self) -> usize {
        self.families.iter().filter(|f| !f.interior).map(|f| f.edges.len()).max().unwrap_or(0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reduction {
    Reduced(ReducedGraph),
    Beachball(BeachballKind),
}

// Dart layout: vertex slots first, then three darts per boundary point
// (edge end, outgoing arc, incoming arc).
const BP_EDGE: usize = 0;
const BP_OUT: usize = 1;
const BP_IN: usize = 2;

struct Darts {
    alpha: Vec<usize>,
    sigma: Vec<usize>,
    edge_of: Vec<Option<usize>>,
    is_out_arc: Vec<bool>,
    is_in_arc: Vec<bool>,
}

impl FatGraph {
    pub fn p(&self) -> u32 {
        self.q_vertices * self.r
    }

    fn slots_per_vertex(&self) -> u32 {
        self.n * self.r
    }

    pub fn label(&self, s: Slot) -> u32 {
        s.pos % self.n
    }

    pub fn edge_count(&self) -> usize {
        self.interior_edges.len() + self.boundary_edges.len()
    }

    /// Two vertices on a sphere joined by `n` parallel edges (`r = 1`).
    pub fn beachball_first(n: u32) -> FatGraph {
        let interior_edges = (0..n)
            .map(|j| (Slot { vertex: 0, pos: j }, Slot { vertex: 1, pos: (n - 1 - j) }))
            .collect();
        FatGraph {
            surface: Surface { genus: 0, boundary_count: 0 },
            q_vertices: 2,
            n,
            r: 1,
            interior_edges,
            boundary_edges: vec![],
        }
    }

    /// One vertex in a disk with `n` parallel edges to the boundary.
    pub fn beachball_second(n: u32) -> FatGraph {
        let boundary_edges = (0..n)
            .map(|j| (Slot { vertex: 0, pos: j }, BoundaryEnd { component: 0, pos: j }))
            .collect();
        FatGraph {
            surface: Surface { genus: 0, boundary_count: 1 },
            q_vertices: 1,
            n,
            r: 1,
            interior_edges: vec![],
            boundary_edges,
        }
    }

    /// Checks the slot, label-count and Euler invariants.
    pub fn check_counts(&self) -> CountCheck {
        let mut diagnostics = Vec::new();
        if self.q_vertices == 0 || self.n == 0 || self.r == 0 {
            diagnostics.push("q, n and r must be positive".to_string());
            return CountCheck { ok: false, diagnostics };
        }
        let (e_i, e_b) = (self.interior_edges.len() as u64, self.boundary_edges.len() as u64);
        if !count_identity_holds(self.q_vertices, self.r, self.n, e_i, e_b) {
            diagnostics.push(format!(
                "2*{e_i} + {e_b} != p*n = {}*{}",
                self.p(),
                self.n
            ));
        }
        let mut used: BTreeMap<Slot, usize> = BTreeMap::new();
        let ends = self
            .interior_edges
            .iter()
            .flat_map(|(a, b)| [*a, *b])
            .chain(self.boundary_edges.iter().map(|(a, _)| *a));
        for s in ends {
            if s.vertex >= self.q_vertices || s.pos >= self.slots_per_vertex() {
                diagnostics.push(format!("slot {}:{} out of range", s.vertex, s.pos));
                continue;
            }
            *used.entry(s).or_default() += 1;
        }
        for (s, c) in &used {
            if *c > 1 {
                diagnostics.push(format!("slot {}:{} used {c} times", s.vertex, s.pos));
            }
        }
        let total = self.q_vertices as usize * self.slots_per_vertex() as usize;
        if used.len() < total && diagnostics.is_empty() {
            diagnostics.push(format!("{} of {total} slots carry no edge", total - used.len()));
        }
        let mut boundary_points: BTreeMap<BoundaryEnd, usize> = BTreeMap::new();
        for (_, b) in &self.boundary_edges {
            if b.component >= self.surface.boundary_count {
                diagnostics.push(format!("boundary component {} does not exist", b.component));
            }
            *boundary_points.entry(*b).or_default() += 1;
        }
        if boundary_points.values().any(|c| *c > 1) {
            diagnostics.push("two boundary edges end at the same boundary point".to_string());
        }
        for c in 0..self.surface.boundary_count {
            if !self.boundary_edges.iter().any(|(_, b)| b.component == c) {
                diagnostics.push(format!("boundary component {c} meets no edge"));
            }
        }
        if diagnostics.is_empty() {
            let faces = self.faces();
            let b = self.boundary_edges.len() as i64;
            let chi_closed = (self.q_vertices as i64 + b) - (self.edge_count() as i64 + b)
                + faces.len() as i64
                + self.surface.boundary_count as i64;
            let want = 2 - 2 * self.surface.genus as i64;
            if chi_closed != want {
                diagnostics.push(format!(
                    "rotation system has Euler characteristic {chi_closed} after capping, surface needs {want}"
                ));
            }
        }
        CountCheck { ok: diagnostics.is_empty(), diagnostics }
    }

    fn darts(&self) -> Darts {
        let spv = self.slots_per_vertex() as usize;
        let nv = self.q_vertices as usize * spv;
        let nb = self.boundary_edges.len();
        let total = nv + 3 * nb;
        let slot_dart = |s: Slot| s.vertex as usize * spv + s.pos as usize;
        let mut alpha = vec![usize::MAX; total];
        let mut sigma = vec![0; total];
        let mut edge_of = vec![None; total];
        let mut is_out_arc = vec![false; total];
        let mut is_in_arc = vec![false; total];
        for v in 0..self.q_vertices as usize {
            for s in 0..spv {
                sigma[v * spv + s] = v * spv + (s + 1) % spv;
            }
        }
        for (e, (a, b)) in self.interior_edges.iter().enumerate() {
            let (da, db) = (slot_dart(*a), slot_dart(*b));
            alpha[da] = db;
            alpha[db] = da;
            edge_of[da] = Some(e);
            edge_of[db] = Some(e);
        }
        let e_i = self.interior_edges.len();
        let mut by_component: BTreeMap<u32, Vec<(u32, usize)>> = BTreeMap::new();
        for (j, (a, b)) in self.boundary_edges.iter().enumerate() {
            let base = nv + 3 * j;
            let da = slot_dart(*a);
            alpha[da] = base + BP_EDGE;
            alpha[base + BP_EDGE] = da;
            edge_of[da] = Some(e_i + j);
            edge_of[base + BP_EDGE] = Some(e_i + j);
            sigma[base + BP_IN] = base + BP_OUT;
            sigma[base + BP_OUT] = base + BP_EDGE;
            sigma[base + BP_EDGE] = base + BP_IN;
            is_out_arc[base + BP_OUT] = true;
            is_in_arc[base + BP_IN] = true;
            by_component.entry(b.component).or_default().push((b.pos, j));
        }
        for points in by_component.values_mut() {
            points.sort();
            for w in 0..points.len() {
                let here = nv + 3 * points[w].1;
                let next = nv + 3 * points[(w + 1) % points.len()].1;
                alpha[here + BP_OUT] = next + BP_IN;
                alpha[next + BP_IN] = here + BP_OUT;
            }
        }
        Darts { alpha, sigma, edge_of, is_out_arc, is_in_arc }
    }

    /// Complementary regions, excluding the caps glued onto boundary components.
    /// Assumes the slots are fully used (see [`FatGraph::check_counts`]).
    pub fn faces(&self) -> Vec<Face> {
        let d = self.darts();
        let mut seen = vec![false; d.alpha.len()];
        let mut faces = Vec::new();
        for start in 0..d.alpha.len() {
            if seen[start] || d.is_out_arc[start] || d.alpha[start] == usize::MAX {
                continue;
            }
            let mut edges = Vec::new();
            let mut touches_boundary = false;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                match d.edge_of[x] {
                    Some(e) if !d.is_in_arc[x] => edges.push(e),
                    _ => touches_boundary = true,
                }
                x = d.sigma[d.alpha[x]];
            }
            faces.push(Face { edges, touches_boundary });
        }
        faces
    }

    /// Collapses every bigon, or recognizes a beachball.
    pub fn reduce(&self) -> Result<Reduction> {
        let check = self.check_counts();
        if !check.ok {
            return Err(Error::PreconditionViolated(check.diagnostics.join("; ")));
        }
        let faces = self.faces();
        if faces.iter().any(|f| f.sides() == 1) {
            return Err(Error::MonogonPresent);
        }
        let m = self.edge_count();
        let mut uf = UnionFind::new(m);
        for f in faces.iter().filter(|f| f.sides() == 2) {
            uf.union(f.edges[0], f.edges[1]);
        }
        if faces.iter().all(|f| f.sides() == 2) {
            let s = self.surface;
            return match (s.genus, s.boundary_count, self.q_vertices) {
                (0, 0, 2) if self.boundary_edges.is_empty() => Ok(Reduction::Beachball(BeachballKind::First)),
                (0, 1, 1) if self.interior_edges.is_empty() => Ok(Reduction::Beachball(BeachballKind::Second)),
                _ => Err(Error::InternalBoundViolation(
                    "every face is a bigon but the graph is not a beachball".into(),
                )),
            };
        }
        let e_i = self.interior_edges.len();
        let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for e in 0..m {
            classes.entry(uf.find(e)).or_default().push(e);
        }
        let families: Vec<ParallelClass> = classes
            .into_values()
            .map(|edges| ParallelClass { interior: edges[0] < e_i, edges })
            .collect();
        let counts = ReducedCounts {
            v_bar: self.q_vertices as u64,
            e_bar: families.len() as u64,
            f_bar: faces.iter().filter(|f| f.sides() != 2).count() as u64,
            chi_surface: self.surface.euler_characteristic(),
        };
        Ok(Reduction::Reduced(ReducedGraph { counts, families }))
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut y = x;
        while self.parent[y] != root {
            let next = self.parent[y];
            self.parent[y] = root;
            y = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}
