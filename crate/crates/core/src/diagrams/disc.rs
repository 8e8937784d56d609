use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::complex::{FlagComplex, Vertex};
use crate::report::{Condition, ConditionReport, Witness};

/// A triangulated 2-disc on vertices `0..vertex_count`, with its boundary
/// cycle in order. Construction does not validate; see [`validate_disc`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TriangulatedDisc {
    vertex_count: usize,
    boundary: Vec<Vertex>,
    triangles: Vec<[Vertex; 3]>,
}

impl TriangulatedDisc {
    /// Triangles are stored sorted, in lexicographic order.
    pub fn new(vertex_count: usize, boundary: Vec<Vertex>, triangles: Vec<[Vertex; 3]>) -> Self {
        let mut triangles: Vec<[Vertex; 3]> = triangles
            .into_iter()
            .map(|mut t| {
                t.sort_unstable();
                t
            })
            .collect();
        triangles.sort_unstable();
        TriangulatedDisc { vertex_count, boundary, triangles }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn boundary(&self) -> &[Vertex] {
        &self.boundary
    }

    pub fn triangles(&self) -> &[[Vertex; 3]] {
        &self.triangles
    }

    /// Number of triangles.
    pub fn area(&self) -> usize {
        self.triangles.len()
    }

    /// Vertices off the boundary, ascending.
    pub fn interior(&self) -> Vec<Vertex> {
        let on: BTreeSet<Vertex> = self.boundary.iter().copied().collect();
        (0..self.vertex_count).filter(|v| !on.contains(v)).collect()
    }

    pub fn is_boundary(&self, v: Vertex) -> bool {
        self.boundary.contains(&v)
    }

    /// Edges `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        self.face_counts().into_keys().collect()
    }

    /// Number of triangles containing `v`'s edges, i.e. its degree.
    pub fn degree(&self, v: Vertex) -> usize {
        self.edges().iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count as i64 - self.edges().len() as i64 + self.triangles.len() as i64
    }

    fn face_counts(&self) -> BTreeMap<(Vertex, Vertex), usize> {
        let mut count = BTreeMap::new();
        for t in &self.triangles {
            for (a, b) in [(t[0], t[1]), (t[1], t[2]), (t[0], t[2])] {
                *count.entry((a, b)).or_default() += 1;
            }
        }
        count
    }

    /// The disc as an explicit-mode complex whose 2-simplices are its
    /// faces. Only meaningful for a disc that passes [`validate_disc`].
    pub fn to_complex(&self) -> FlagComplex {
        FlagComplex::new(self.vertex_count, self.edges())
            .and_then(|x| x.with_triangles(self.triangles.iter().copied()))
            .expect("disc triangles are well formed")
            .with_simply_connected(Some(true))
    }

    /// Graphviz rendering; boundary vertices are shaded. With `images`,
    /// each vertex is also labelled by its image under a map.
    pub fn to_dot(&self, images: Option<&[Vertex]>) -> String {
        let mut out = String::from("graph disc {\n  node [shape=circle];\n");
        for v in 0..self.vertex_count {
            let label = match images {
                Some(img) => format!("{v}:{}", img[v]),
                None => v.to_string(),
            };
            let style = if self.is_boundary(v) {
                "style=filled, fillcolor=lightgray"
            } else {
                "style=solid"
            };
            let _ = writeln!(out, "  {v} [label=\"{label}\", {style}];");
        }
        let n = self.boundary.len();
        let boundary_edges: BTreeSet<(Vertex, Vertex)> = (0..n)
            .map(|i| {
                let (a, b) = (self.boundary[i], self.boundary[(i + 1) % n]);
                (a.min(b), a.max(b))
            })
            .collect();
        for (a, b) in self.edges() {
            let attr = if boundary_edges.contains(&(a, b)) { " [penwidth=2]" } else { "" };
            let _ = writeln!(out, "  {a} -- {b}{attr};");
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Debug, PartialEq, Eq)]
enum LinkShape {
    Cycle,
    Path(Vertex, Vertex),
    Other,
}

fn link_shape(edges: &[(Vertex, Vertex)]) -> LinkShape {
    let mut adj: BTreeMap<Vertex, Vec<Vertex>> = BTreeMap::new();
    for &(a, b) in edges {
        adj.entry(a).or_default().push(b);
        adj.entry(b).or_default().push(a);
    }
    if adj.is_empty() || adj.values().any(|ns| ns.len() > 2) {
        return LinkShape::Other;
    }
    let start = *adj.keys().next().unwrap();
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for &w in &adj[&u] {
            if seen.insert(w) {
                stack.push(w);
            }
        }
    }
    if seen.len() != adj.len() {
        return LinkShape::Other;
    }
    let ends: Vec<Vertex> = adj.iter().filter(|(_, ns)| ns.len() == 1).map(|(&u, _)| u).collect();
    match ends.as_slice() {
        [] if adj.len() >= 3 => LinkShape::Cycle,
        [a, b] => LinkShape::Path(*a, *b),
        _ => LinkShape::Other,
    }
}

/// Checks that `d` is a triangulated 2-disc with the declared boundary.
/// Each witness carries a note naming the violated clause.
pub fn validate_disc(d: &TriangulatedDisc) -> ConditionReport {
    let mut report = ConditionReport::new(Condition::Disc);
    let n = d.vertex_count;
    let fail = |report: &mut ConditionReport, vs: Vec<Vertex>, note: String| {
        report.push_witness(Witness::vertices(vs).with_note(note));
    };

    let mut well_formed = true;
    for t in &d.triangles {
        if t.iter().any(|&v| v >= n) || t[0] == t[1] || t[1] == t[2] {
            fail(&mut report, t.to_vec(), "malformed triangle".into());
            well_formed = false;
        }
    }
    for w in d.triangles.windows(2) {
        if w[0] == w[1] {
            fail(&mut report, w[0].to_vec(), "repeated triangle".into());
            well_formed = false;
        }
    }
    let bset: BTreeSet<Vertex> = d.boundary.iter().copied().collect();
    if d.boundary.len() < 3 || bset.len() != d.boundary.len() || d.boundary.iter().any(|&v| v >= n)
    {
        fail(&mut report, d.boundary.clone(), "boundary is not a cycle of distinct vertices".into());
        well_formed = false;
    }
    if !well_formed {
        return report.finish();
    }

    // edge-face incidence
    let counts = d.face_counts();
    let m = d.boundary.len();
    let boundary_edges: BTreeSet<(Vertex, Vertex)> = (0..m)
        .map(|i| {
            let (a, b) = (d.boundary[i], d.boundary[(i + 1) % m]);
            (a.min(b), a.max(b))
        })
        .collect();
    for &(a, b) in &boundary_edges {
        if !counts.contains_key(&(a, b)) {
            fail(&mut report, vec![a, b], "boundary edge lies in no triangle".into());
        }
    }
    for (&(a, b), &c) in &counts {
        let want = if boundary_edges.contains(&(a, b)) { 1 } else { 2 };
        if c != want {
            fail(
                &mut report,
                vec![a, b],
                format!("edge-face incidence: edge lies in {c} triangles, expected {want}"),
            );
        }
    }

    // vertex links
    let mut link_edges: Vec<Vec<(Vertex, Vertex)>> = vec![Vec::new(); n];
    for t in &d.triangles {
        link_edges[t[0]].push((t[1], t[2]));
        link_edges[t[1]].push((t[0], t[2]));
        link_edges[t[2]].push((t[0], t[1]));
    }
    for v in 0..n {
        if link_edges[v].is_empty() {
            fail(&mut report, vec![v], "vertex link shape: vertex lies in no triangle".into());
            continue;
        }
        let shape = link_shape(&link_edges[v]);
        if bset.contains(&v) {
            let i = d.boundary.iter().position(|&u| u == v).unwrap();
            let (p, q) = (d.boundary[(i + m - 1) % m], d.boundary[(i + 1) % m]);
            let ok = matches!(shape, LinkShape::Path(a, b) if (a, b) == (p.min(q), p.max(q)));
            if !ok {
                fail(
                    &mut report,
                    vec![v],
                    "vertex link shape: boundary link is not a path between its boundary neighbors"
                        .into(),
                );
            }
        } else if shape != LinkShape::Cycle {
            fail(&mut report, vec![v], "vertex link shape: interior link is not a cycle".into());
        }
    }

    // connectivity through triangles
    let mut parent: Vec<Vertex> = (0..n).collect();
    fn find(p: &mut [Vertex], v: Vertex) -> Vertex {
        let mut r = v;
        while p[r] != r {
            r = p[r];
        }
        p[v] = r;
        r
    }
    for &(a, b) in counts.keys() {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra.max(rb)] = ra.min(rb);
    }
    let roots: BTreeSet<Vertex> = (0..n).map(|v| find(&mut parent, v)).collect();
    if roots.len() > 1 {
        fail(&mut report, roots.into_iter().collect(), "disc is disconnected".into());
    }

    let chi = d.euler_characteristic();
    if chi != 1 {
        fail(&mut report, Vec::new(), format!("Euler characteristic {chi}, expected 1"));
    }
    report.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wheel(k: usize) -> TriangulatedDisc {
        let tris = (0..k).map(|i| [i, (i + 1) % k, k]).collect();
        TriangulatedDisc::new(k + 1, (0..k).collect(), tris)
    }

    #[test]
    fn single_triangle() {
        let t = TriangulatedDisc::new(3, vec![0, 1, 2], vec![[2, 1, 0]]);
        assert!(validate_disc(&t).passed());
        assert!(t.interior().is_empty());
        assert_eq!(t.euler_characteristic(), 1);
    }

    #[test]
    fn wheels() {
        for k in 3..9 {
            let w = wheel(k);
            assert!(validate_disc(&w).passed());
            assert_eq!(w.interior(), vec![k]);
            assert_eq!(w.degree(k), k);
        }
    }

    #[test]
    fn bowtie_fails_on_link_shape() {
        let bowtie = TriangulatedDisc::new(5, vec![0, 1, 2, 3, 4], vec![[0, 1, 2], [0, 3, 4]]);
        let r = validate_disc(&bowtie);
        assert!(r.failed());
        assert!(r.witnesses.iter().any(|w| w.note.as_deref().unwrap().contains("link")));
    }

    #[test]
    fn wrong_boundary_and_sphere() {
        let w = wheel(4);
        let bad = TriangulatedDisc::new(5, vec![0, 2, 1, 3], w.triangles().to_vec());
        assert!(validate_disc(&bad).failed());
        // the octahedron surface has no boundary edges at all
        let oct = [[0, 2, 4], [0, 4, 3], [0, 3, 5], [0, 5, 2], [1, 2, 4], [1, 4, 3], [1, 3, 5], [1, 5, 2]];
        let sphere = TriangulatedDisc::new(6, vec![2, 4, 3], oct.to_vec());
        let r = validate_disc(&sphere);
        assert!(r.failed());
        assert!(r.witnesses.iter().any(|w| w.note.as_deref().unwrap().contains("Euler")));
    }

    #[test]
    fn complex_and_dot() {
        let w = wheel(5);
        let x = w.to_complex();
        assert_eq!(x.explicit_triangles().unwrap().len(), 5);
        assert_eq!(x.simply_connected(), Some(true));
        let dot = w.to_dot(None);
        assert!(dot.contains("0 -- 1 [penwidth=2];"));
        assert!(dot.contains("5 [label=\"5\", style=solid];"));
    }
}
