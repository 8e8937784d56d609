//! Finite flag complexes stored as graphs.
//!
//! A [`FlagComplex`] is the clique complex of its 1-skeleton. Untrusted input
//! may carry an explicit triangle list; in that mode a 3-clique only counts as
//! a 2-simplex when it is listed, which is what [`flagness_check`] audits.
//! Nothing above dimension two is ever materialized.

mod cycles;
mod io;
mod metric;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::report::{Condition, ConditionReport, Witness};

pub use cycles::{canonical_cycle, enumerate_full_cycles, shortest_full_cycle};
pub(crate) use cycles::shortest_full_cycle_len;
pub use io::{load_complex, load_complex_auto, ComplexDocument, InputFormat, FORMAT_TAG};
pub use metric::{
    ball, bfs_distances, components, distance, is_connected, sphere, DistanceMatrix,
};

pub type Vertex = usize;

/// Symmetric, irreflexive adjacency with O(1) membership tests.
#[derive(Debug, Clone, PartialEq, Eq)]
struct AdjacencyBits {
    words: usize,
    bits: Vec<u64>,
}

impl AdjacencyBits {
    fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        AdjacencyBits { words, bits: vec![0; words * n] }
    }

    #[inline]
    fn get(&self, u: Vertex, v: Vertex) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    fn set(&mut self, u: Vertex, v: Vertex) {
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
        self.bits[v * self.words + u / 64] |= 1 << (u % 64);
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagComplex {
    neighbors: Vec<Vec<Vertex>>,
    adjacency: AdjacencyBits,
    edge_count: usize,
    triangles: Option<BTreeSet<[Vertex; 3]>>,
    simply_connected: Option<bool>,
    labels: Option<Vec<String>>,
}

impl FlagComplex {
    /// Builds the clique complex of the graph on `0..vertex_count`.
    ///
    /// Self-loops, out-of-range endpoints and repeated edges (in either
    /// orientation) are rejected.
    pub fn new<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adjacency = AdjacencyBits::new(vertex_count);
        let mut neighbors = vec![Vec::new(); vertex_count];
        let mut edge_count = 0;
        for (u, v) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::UnknownVertex(u.max(v)));
            }
            if u == v {
                return Err(Error::Invariant(format!("self-loop at vertex {u}")));
            }
            if adjacency.get(u, v) {
                return Err(Error::Invariant(format!("duplicate edge {{{u}, {v}}}")));
            }
            adjacency.set(u, v);
            neighbors[u].push(v);
            neighbors[v].push(u);
            edge_count += 1;
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        Ok(FlagComplex {
            neighbors,
            adjacency,
            edge_count,
            triangles: None,
            simply_connected: None,
            labels: None,
        })
    }

    /// Switches to explicit mode: only the listed 3-sets are 2-simplices.
    pub fn with_triangles<I>(mut self, triangles: I) -> Result<Self>
    where
        I: IntoIterator<Item = [Vertex; 3]>,
    {
        let mut set = BTreeSet::new();
        for t in triangles {
            let mut t = t;
            t.sort_unstable();
            for &v in &t {
                self.check_vertex(v)?;
            }
            if t[0] == t[1] || t[1] == t[2] {
                return Err(Error::Invariant(format!("degenerate triangle {t:?}")));
            }
            if !(self.is_adjacent(t[0], t[1])
                && self.is_adjacent(t[1], t[2])
                && self.is_adjacent(t[0], t[2]))
            {
                return Err(Error::Invariant(format!(
                    "triangle {t:?} uses an edge missing from the adjacency"
                )));
            }
            if !set.insert(t) {
                return Err(Error::Invariant(format!("duplicate triangle {t:?}")));
            }
        }
        self.triangles = Some(set);
        Ok(self)
    }

    pub fn with_simply_connected(mut self, simply_connected: Option<bool>) -> Self {
        self.simply_connected = simply_connected;
        self
    }

    pub fn with_labels(mut self, labels: Option<Vec<String>>) -> Result<Self> {
        if let Some(l) = &labels {
            if l.len() != self.vertex_count() {
                return Err(Error::Invariant(format!(
                    "{} labels for {} vertices",
                    l.len(),
                    self.vertex_count()
                )));
            }
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.neighbors.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.vertex_count()
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors[v].len()
    }

    #[inline]
    pub fn is_adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.adjacency.get(u, v)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.neighbors
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn explicit_triangles(&self) -> Option<&BTreeSet<[Vertex; 3]>> {
        self.triangles.as_ref()
    }

    pub fn simply_connected(&self) -> Option<bool> {
        self.simply_connected
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    /// Whether `{a, b, c}` is a 2-simplex.
    pub fn is_triangle(&self, a: Vertex, b: Vertex, c: Vertex) -> bool {
        if a == b || b == c || a == c {
            return false;
        }
        if !(self.is_adjacent(a, b) && self.is_adjacent(b, c) && self.is_adjacent(a, c)) {
            return false;
        }
        match &self.triangles {
            None => true,
            Some(set) => {
                let mut t = [a, b, c];
                t.sort_unstable();
                set.contains(&t)
            }
        }
    }

    /// Sorted common neighbors of `u` and `v`.
    pub fn common_neighbors(&self, u: Vertex, v: Vertex) -> Vec<Vertex> {
        self.neighbors[u]
            .iter()
            .copied()
            .filter(|&w| self.is_adjacent(v, w))
            .collect()
    }

    /// All 3-cliques of the 1-skeleton as sorted triples, lexicographically.
    pub fn three_cliques(&self) -> Vec<[Vertex; 3]> {
        let mut out = Vec::new();
        for (a, b) in self.edges() {
            for &c in &self.neighbors[b] {
                if c > b && self.is_adjacent(a, c) {
                    out.push([a, b, c]);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// The 2-simplices: every 3-clique in clique mode, the listed ones otherwise.
    pub fn triangles(&self) -> Vec<[Vertex; 3]> {
        match &self.triangles {
            None => self.three_cliques(),
            Some(set) => set.iter().copied().collect(),
        }
    }

    /// Induced substructure on `vertices` (sorted and deduplicated first).
    pub fn span(&self, vertices: &[Vertex]) -> Result<SubComplex> {
        let mut origin: Vec<Vertex> = vertices.to_vec();
        origin.sort_unstable();
        origin.dedup();
        for &v in &origin {
            self.check_vertex(v)?;
        }
        let mut local = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in origin.iter().enumerate() {
            local[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &u) in origin.iter().enumerate() {
            for &w in &self.neighbors[u] {
                if local[w] != usize::MAX && local[w] > i {
                    edges.push((i, local[w]));
                }
            }
        }
        let mut complex = FlagComplex::new(origin.len(), edges)?;
        if let Some(set) = &self.triangles {
            let tris: Vec<[Vertex; 3]> = set
                .iter()
                .filter(|t| t.iter().all(|&v| local[v] != usize::MAX))
                .map(|t| [local[t[0]], local[t[1]], local[t[2]]])
                .collect();
            complex = complex.with_triangles(tris)?;
        }
        if let Some(labels) = &self.labels {
            complex =
                complex.with_labels(Some(origin.iter().map(|&v| labels[v].clone()).collect()))?;
        }
        Ok(SubComplex { complex, origin })
    }

    /// Link of a vertex or an edge: the common neighbors of its vertices.
    pub fn link(&self, center: Simplex) -> Result<LinkView> {
        let members: Vec<Vertex> = match center {
            Simplex::Vertex(v) => {
                self.check_vertex(v)?;
                self.neighbors[v].clone()
            }
            Simplex::Edge(u, v) => {
                self.check_vertex(u)?;
                self.check_vertex(v)?;
                if !self.is_adjacent(u, v) {
                    return Err(Error::NotASimplex(vec![u, v]));
                }
                self.common_neighbors(u, v)
            }
        };
        let mut sub = self.span(&members)?;
        // The link carries the clique interpretation of its induced graph.
        sub.complex.triangles = None;
        sub.complex.labels = None;
        Ok(LinkView { center, sub })
    }

    /// True iff the subcomplex given by `vertices` and `edges` is full: its
    /// adjacency equals the one induced by the ambient complex.
    pub fn is_full_subcomplex(&self, vertices: &[Vertex], edges: &[(Vertex, Vertex)]) -> Result<bool> {
        for &v in vertices {
            self.check_vertex(v)?;
        }
        let members: BTreeSet<Vertex> = vertices.iter().copied().collect();
        let mut own = BTreeSet::new();
        for &(u, v) in edges {
            self.check_vertex(u)?;
            self.check_vertex(v)?;
            if !members.contains(&u) || !members.contains(&v) || !self.is_adjacent(u, v) {
                return Ok(false);
            }
            own.insert((u.min(v), u.max(v)));
        }
        for &u in &members {
            for &w in &self.neighbors[u] {
                if u < w && members.contains(&w) && !own.contains(&(u, w)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// A loop is full when it has no diagonal and, for length three, spans
    /// no 2-simplex.
    pub fn is_full_loop(&self, gamma: &Loop) -> bool {
        let vs = gamma.vertices();
        if vs.len() == 3 {
            return !self.is_triangle(vs[0], vs[1], vs[2]);
        }
        gamma.diagonals(self).is_empty()
    }
}

/// Induced subcomplex together with the ambient ids of its vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubComplex {
    pub complex: FlagComplex,
    /// `origin[i]` is the ambient vertex behind local vertex `i`; sorted.
    pub origin: Vec<Vertex>,
}

impl SubComplex {
    pub fn members(&self) -> &[Vertex] {
        &self.origin
    }

    pub fn ambient_edges(&self) -> Vec<(Vertex, Vertex)> {
        self.complex
            .edges()
            .map(|(u, v)| (self.origin[u], self.origin[v]))
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Simplex {
    Vertex(Vertex),
    Edge(Vertex, Vertex),
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Simplex::Vertex(v) => write!(f, "{v}"),
            Simplex::Edge(u, v) => write!(f, "{u},{v}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkView {
    pub center: Simplex,
    sub: SubComplex,
}

impl LinkView {
    pub fn members(&self) -> &[Vertex] {
        &self.sub.origin
    }

    /// The link as a complex on local ids `0..members().len()`.
    pub fn complex(&self) -> &FlagComplex {
        &self.sub.complex
    }

    pub fn ambient_edges(&self) -> Vec<(Vertex, Vertex)> {
        self.sub.ambient_edges()
    }

    pub fn to_ambient(&self, local: Vertex) -> Vertex {
        self.sub.origin[local]
    }
}

/// A closed edge path through distinct vertices, at least three of them.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Loop(Vec<Vertex>);

impl Loop {
    pub fn new(x: &FlagComplex, vertices: Vec<Vertex>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::NotALoop(format!("{} vertices, need at least 3", vertices.len())));
        }
        for &v in &vertices {
            x.check_vertex(v)?;
        }
        let distinct: BTreeSet<_> = vertices.iter().collect();
        if distinct.len() != vertices.len() {
            return Err(Error::NotALoop(format!("{vertices:?} repeats a vertex")));
        }
        let n = vertices.len();
        for i in 0..n {
            let (a, b) = (vertices[i], vertices[(i + 1) % n]);
            if !x.is_adjacent(a, b) {
                return Err(Error::NotALoop(format!("{a} and {b} are not adjacent")));
            }
        }
        Ok(Loop(vertices))
    }

    /// Wraps a sequence already known to be a loop in some complex.
    pub(crate) fn from_trusted(vertices: Vec<Vertex>) -> Self {
        debug_assert!(vertices.len() >= 3);
        Loop(vertices)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    /// Number of edges, `|γ|`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        let n = self.0.len();
        (0..n).map(move |i| (self.0[i], self.0[(i + 1) % n]))
    }

    /// Least rotation/reflection.
    pub fn canonical(&self) -> Loop {
        Loop(canonical_cycle(&self.0))
    }

    /// Adjacent pairs of non-consecutive loop vertices, each as `(min, max)`,
    /// sorted.
    pub fn diagonals(&self, x: &FlagComplex) -> Vec<(Vertex, Vertex)> {
        let vs = &self.0;
        let n = vs.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 2..n {
                if i == 0 && j == n - 1 {
                    continue;
                }
                if x.is_adjacent(vs[i], vs[j]) {
                    out.push((vs[i].min(vs[j]), vs[i].max(vs[j])));
                }
            }
        }
        out.sort_unstable();
        out
    }
}

impl fmt::Display for Loop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Every 3-clique must be a listed triangle. Clique-mode complexes pass
/// trivially.
pub fn flagness_check(x: &FlagComplex) -> ConditionReport {
    let mut report = ConditionReport::new(Condition::Flag);
    if let Some(set) = x.explicit_triangles() {
        if let Some(t) = x.three_cliques().into_iter().find(|t| !set.contains(t)) {
            report.push_witness(Witness::vertices(t.to_vec()).with_note("empty 3-clique"));
        }
    }
    report.finish()
}

/// The first empty 3-clique, if the complex is not flag.
pub(crate) fn require_flag(x: &FlagComplex) -> Result<()> {
    if let Some(set) = x.explicit_triangles() {
        if let Some(t) = x.three_cliques().into_iter().find(|t| !set.contains(t)) {
            return Err(Error::NotFlag(t));
        }
    }
    Ok(())
}
