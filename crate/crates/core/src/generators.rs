//! Deterministic constructors for the test corpus.

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::complex::{FlagComplex, Vertex};
use crate::diagrams::TriangulatedDisc;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Platonic {
    Octahedron,
    Icosahedron,
}

/// A complete description of a generated complex.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GeneratorSpec {
    PolygonDisc { boundary_len: usize, interior_degrees: Vec<usize> },
    TilingPatch { degree: usize, radius: usize },
    Platonic { name: Platonic },
    RandomFlag { n: usize, p: f64, seed: u64 },
    Cone { base: Box<GeneratorSpec> },
    Cycle { n: usize },
    Path { n: usize },
    Simplex { n: usize },
}

impl GeneratorSpec {
    pub fn build(&self) -> Result<FlagComplex> {
        match self {
            GeneratorSpec::PolygonDisc { boundary_len, interior_degrees } => {
                Ok(gen_polygon_disc(*boundary_len, interior_degrees)?.to_complex())
            }
            GeneratorSpec::TilingPatch { degree, radius } => gen_tiling_patch(*degree, *radius),
            GeneratorSpec::Platonic { name } => Ok(gen_platonic(*name)),
            GeneratorSpec::RandomFlag { n, p, seed } => gen_random_flag(*n, *p, *seed),
            GeneratorSpec::Cone { base } => Ok(gen_cone(&base.build()?)),
            GeneratorSpec::Cycle { n } => gen_cycle(*n),
            GeneratorSpec::Path { n } => Ok(gen_path(*n)),
            GeneratorSpec::Simplex { n } => Ok(gen_simplex(*n)),
        }
    }

    /// The same family at another size: the radius of a patch, the vertex
    /// count of cycles, paths, simplices and random graphs. Fixed-size kinds
    /// are returned unchanged.
    pub fn with_scale(&self, scale: usize) -> GeneratorSpec {
        let mut out = self.clone();
        match &mut out {
            GeneratorSpec::TilingPatch { radius, .. } => *radius = scale,
            GeneratorSpec::RandomFlag { n, .. }
            | GeneratorSpec::Cycle { n }
            | GeneratorSpec::Path { n }
            | GeneratorSpec::Simplex { n } => *n = scale,
            GeneratorSpec::Cone { base } => **base = base.with_scale(scale),
            GeneratorSpec::PolygonDisc { .. } | GeneratorSpec::Platonic { .. } => {}
        }
        out
    }
}

/// Ball of radius `r` in the triangulation of the plane (or sphere, for
/// `d = 5` and `r >= 3`) whose interior vertices all have degree `d`.
///
/// Layer `i + 1` is attached to the boundary cycle of layer `i`: a boundary
/// vertex of current degree `c` gets `d - c` new neighbors, consecutive
/// boundary vertices sharing one. The center is vertex 0 and layers are
/// numbered outward in cyclic order.
pub fn gen_tiling_patch(d: usize, r: usize) -> Result<FlagComplex> {
    if d < 5 {
        return Err(Error::PreconditionViolated(format!("degree {d} < 5")));
    }
    if r < 1 {
        return Err(Error::PreconditionViolated("radius 0".into()));
    }
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let mut degree: Vec<usize> = vec![0];
    let add_edge = |edges: &mut Vec<(Vertex, Vertex)>, degree: &mut Vec<usize>, u, v| {
        edges.push((u, v));
        degree[u] += 1;
        degree[v] += 1;
    };

    let mut boundary: Vec<Vertex> = (1..=d).collect();
    degree.resize(d + 1, 0);
    for i in 0..d {
        add_edge(&mut edges, &mut degree, 0, boundary[i]);
        add_edge(&mut edges, &mut degree, boundary[i], boundary[(i + 1) % d]);
    }

    for _ in 2..=r {
        if boundary.is_empty() {
            break;
        }
        let wants: Vec<usize> = boundary.iter().map(|&b| d - degree[b]).collect();
        if wants.iter().all(|&t| t == 1) {
            // the layer closes up into a single cone point
            let apex = degree.len();
            degree.push(0);
            for &b in &boundary {
                add_edge(&mut edges, &mut degree, apex, b);
            }
            boundary.clear();
            continue;
        }
        if let Some(&t) = wants.iter().find(|&&t| t < 2) {
            return Err(Error::Invariant(format!("boundary vertex wants {t} new neighbors")));
        }
        let fresh = |degree: &mut Vec<usize>| {
            degree.push(0);
            degree.len() - 1
        };
        let first = fresh(&mut degree);
        let mut shared = first;
        let mut next_layer = Vec::new();
        let n = boundary.len();
        for (j, &b) in boundary.iter().enumerate() {
            let mut path = vec![shared];
            for _ in 0..wants[j] - 2 {
                path.push(fresh(&mut degree));
            }
            let next = if j + 1 == n { first } else { fresh(&mut degree) };
            path.push(next);
            for &p in &path {
                add_edge(&mut edges, &mut degree, b, p);
            }
            for w in path.windows(2) {
                add_edge(&mut edges, &mut degree, w[0], w[1]);
            }
            next_layer.extend_from_slice(&path[..path.len() - 1]);
            shared = next;
        }
        boundary = next_layer;
    }
    Ok(FlagComplex::new(degree.len(), edges)?.with_simply_connected(Some(true)))
}

const OCTAHEDRON: [(Vertex, Vertex); 12] = [
    (0, 2), (0, 3), (0, 4), (0, 5),
    (1, 2), (1, 3), (1, 4), (1, 5),
    (2, 4), (2, 5), (3, 4), (3, 5),
];

/// Icosahedron: 0 on top, upper ring 1..=5, lower ring 6..=10, 11 at the
/// bottom. Upper `i` sits over the lower ring between `5 + i` and `6 + i`.
const ICOSAHEDRON: [(Vertex, Vertex); 30] = [
    (0, 1), (0, 2), (0, 3), (0, 4), (0, 5),
    (1, 2), (2, 3), (3, 4), (4, 5), (1, 5),
    (1, 6), (1, 7), (2, 7), (2, 8), (3, 8), (3, 9), (4, 9), (4, 10), (5, 10), (5, 6),
    (6, 7), (7, 8), (8, 9), (9, 10), (6, 10),
    (6, 11), (7, 11), (8, 11), (9, 11), (10, 11),
];

/// Octahedron: poles 0 and 1, equator 2, 4, 3, 5 in cyclic order.
pub fn gen_platonic(name: Platonic) -> FlagComplex {
    let (n, edges): (usize, &[(Vertex, Vertex)]) = match name {
        Platonic::Octahedron => (6, &OCTAHEDRON),
        Platonic::Icosahedron => (12, &ICOSAHEDRON),
    };
    FlagComplex::new(n, edges.iter().copied())
        .expect("fixed table")
        .with_simply_connected(Some(true))
}

/// Each edge present independently with probability `p`.
pub fn gen_random_flag(n: usize, p: f64, seed: u64) -> Result<FlagComplex> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::PreconditionViolated(format!("edge probability {p} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    FlagComplex::new(n, edges)
}

/// Adds apex `n` adjacent to every base vertex; the apex link is the base.
pub fn gen_cone(base: &FlagComplex) -> FlagComplex {
    let apex = base.vertex_count();
    let edges = base.edges().chain(base.vertices().map(|v| (v, apex)));
    let mut x = FlagComplex::new(apex + 1, edges).expect("cone edges are distinct");
    if let Some(tris) = base.explicit_triangles() {
        let cone_tris = base.edges().map(|(u, v)| [u, v, apex]);
        x = x
            .with_triangles(tris.iter().copied().chain(cone_tris))
            .expect("cone triangles use cone edges");
    }
    if let Some(labels) = base.labels() {
        let mut labels = labels.to_vec();
        labels.push("apex".into());
        x = x.with_labels(Some(labels)).expect("one label per vertex");
    }
    x.with_simply_connected(Some(true))
}

pub fn gen_cycle(n: usize) -> Result<FlagComplex> {
    if n < 3 {
        return Err(Error::PreconditionViolated(format!("cycle on {n} vertices")));
    }
    FlagComplex::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn gen_path(n: usize) -> FlagComplex {
    FlagComplex::new(n, (1..n).map(|i| (i - 1, i)))
        .expect("path edges")
        .with_simply_connected(Some(true))
}

/// The full simplex on `n` vertices.
pub fn gen_simplex(n: usize) -> FlagComplex {
    FlagComplex::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        .expect("simplex edges")
        .with_simply_connected(Some(true))
}

/// Disc whose interior vertices form a chain `v1, ..., vi` with the given
/// degrees.
///
/// `v1` is a wheel; `v2` is a vertex of its rim, and each later `v(j+1)` is
/// the vertex of `lk(vj)` opposite `v(j-1)`. Every new chain vertex is
/// completed by a fan of fresh boundary vertices. The boundary then has
/// `sum(deg) - 4i + 4` vertices, which `boundary_len` must match. With no
/// interior vertices the result is the fan triangulation of the polygon
/// from vertex 0.
///
/// Boundary vertices are labelled `0..boundary_len` in cyclic order,
/// interior vertices follow in chain order.
pub fn gen_polygon_disc(boundary_len: usize, interior_degrees: &[usize]) -> Result<TriangulatedDisc> {
    if boundary_len < 3 {
        return Err(Error::Unrealizable(format!("boundary of length {boundary_len}")));
    }
    if interior_degrees.is_empty() {
        let triangles = (1..boundary_len - 1).map(|i| [0, i, i + 1]).collect();
        return Ok(TriangulatedDisc::new(boundary_len, (0..boundary_len).collect(), triangles));
    }
    let i = interior_degrees.len();
    let predicted = interior_degrees.iter().sum::<usize>() as i64 - 4 * i as i64 + 4;
    if predicted != boundary_len as i64 {
        return Err(Error::Unrealizable(format!(
            "degrees {interior_degrees:?} give a boundary of length {predicted}, not {boundary_len}"
        )));
    }
    if interior_degrees[0] < 3 || interior_degrees[1..].iter().any(|&d| d < 4) {
        return Err(Error::Unrealizable(format!(
            "degrees {interior_degrees:?}: the first must be at least 3, the rest at least 4"
        )));
    }

    let d1 = interior_degrees[0];
    let mut triangles: Vec<[Vertex; 3]> =
        (0..d1).map(|k| [0, 1 + k, 1 + (k + 1) % d1]).collect();
    let mut next_id = d1 + 1;
    let mut chain = vec![0];
    for &d in &interior_degrees[1..] {
        let current = *chain.last().unwrap();
        let (ring, closed) = link_sequence(&triangles, current);
        debug_assert!(closed);
        let next = match chain.len() {
            1 => ring[0],
            _ => {
                let prev = chain[chain.len() - 2];
                let at = ring.iter().position(|&u| u == prev).expect("prev in link");
                ring[(at + ring.len() / 2) % ring.len()]
            }
        };
        let (path, closed) = link_sequence(&triangles, next);
        if closed || path.len() >= d {
            return Err(Error::Unrealizable(format!(
                "chain vertex already has degree {} before reaching {d}",
                path.len()
            )));
        }
        let fan: Vec<Vertex> = (0..d - path.len()).map(|k| next_id + k).collect();
        next_id += fan.len();
        let (a, b) = (path[0], *path.last().unwrap());
        let mut rim = vec![b];
        rim.extend_from_slice(&fan);
        rim.push(a);
        for w in rim.windows(2) {
            triangles.push([next, w[0], w[1]]);
        }
        chain.push(next);
    }

    let boundary_raw = boundary_cycle(&triangles);
    if boundary_raw.len() != boundary_len {
        return Err(Error::Invariant(format!(
            "construction produced a boundary of length {}",
            boundary_raw.len()
        )));
    }
    let mut relabel = BTreeMap::new();
    for (k, &v) in boundary_raw.iter().enumerate() {
        relabel.insert(v, k);
    }
    for (k, &v) in chain.iter().enumerate() {
        relabel.insert(v, boundary_len + k);
    }
    let triangles = triangles
        .iter()
        .map(|t| [relabel[&t[0]], relabel[&t[1]], relabel[&t[2]]])
        .collect();
    Ok(TriangulatedDisc::new(boundary_len + i, (0..boundary_len).collect(), triangles))
}

/// Link of `v` in a triangle list as an ordered sequence, plus whether it
/// closes up into a cycle. Open links are walked from an endpoint.
fn link_sequence(triangles: &[[Vertex; 3]], v: Vertex) -> (Vec<Vertex>, bool) {
    let mut adj: BTreeMap<Vertex, Vec<Vertex>> = BTreeMap::new();
    for t in triangles.iter().filter(|t| t.contains(&v)) {
        let others: Vec<Vertex> = t.iter().copied().filter(|&u| u != v).collect();
        adj.entry(others[0]).or_default().push(others[1]);
        adj.entry(others[1]).or_default().push(others[0]);
    }
    let start = adj
        .iter()
        .find(|(_, ns)| ns.len() == 1)
        .or_else(|| adj.iter().next())
        .map(|(&u, _)| u)
        .expect("vertex lies in a triangle");
    let closed = adj.values().all(|ns| ns.len() == 2);
    let mut seq = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = adj[&cur].iter().copied().find(|&u| u != prev && !seq.contains(&u));
        match next {
            Some(u) => {
                seq.push(u);
                prev = cur;
                cur = u;
            }
            None => break,
        }
    }
    (seq, closed)
}

/// Boundary cycle of a disc given by triangles, starting at its least
/// vertex and heading to the smaller of its two boundary neighbors.
fn boundary_cycle(triangles: &[[Vertex; 3]]) -> Vec<Vertex> {
    let mut count: BTreeMap<(Vertex, Vertex), usize> = BTreeMap::new();
    for t in triangles {
        for (a, b) in [(t[0], t[1]), (t[1], t[2]), (t[0], t[2])] {
            *count.entry((a.min(b), a.max(b))).or_default() += 1;
        }
    }
    let mut adj: BTreeMap<Vertex, BTreeSet<Vertex>> = BTreeMap::new();
    for (&(a, b), &c) in &count {
        if c == 1 {
            adj.entry(a).or_default().insert(b);
            adj.entry(b).or_default().insert(a);
        }
    }
    let Some((&start, _)) = adj.iter().next() else {
        return Vec::new();
    };
    let mut seq = vec![start];
    let mut prev = start;
    let mut cur = *adj[&start].iter().next().unwrap();
    while cur != start {
        seq.push(cur);
        let next = *adj[&cur].iter().find(|&&u| u != prev).unwrap();
        prev = cur;
        cur = next;
    }
    seq
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{bfs_distances, flagness_check};
    use crate::curvature::{largeness_of_complex, vertex_largeness, Largeness};
    use crate::diagrams::validate_disc;

    /// Vertex count of the degree-`d` ball of radius `r`, from the corner
    /// and edge vertex counts of each layer.
    fn layer_recurrence(d: i64, r: usize) -> i64 {
        let (mut corners, mut sides) = (d, 0i64);
        let mut total = 1 + d;
        for _ in 2..=r {
            total += corners * (d - 4) + sides * (d - 5);
            let next_corners = corners * (d - 5) + sides * (d - 6);
            sides += corners;
            corners = next_corners;
        }
        total
    }

    #[test]
    fn tiling_patch_sizes() {
        let wheel = gen_tiling_patch(6, 1).unwrap();
        assert_eq!(wheel.vertex_count(), 7);
        assert_eq!(wheel.edge_count(), 12);
        assert_eq!(gen_tiling_patch(7, 1).unwrap().vertex_count(), 8);
        for r in 1..=5 {
            assert_eq!(gen_tiling_patch(6, r).unwrap().vertex_count(), 1 + 3 * r * (r + 1));
        }
        for r in 1..=4 {
            let patch = gen_tiling_patch(7, r).unwrap();
            assert_eq!(patch.vertex_count() as i64, layer_recurrence(7, r));
        }
        assert_eq!(gen_tiling_patch(7, 4).unwrap().vertex_count(), 232);
        let sphere = gen_tiling_patch(5, 3).unwrap();
        assert_eq!((sphere.vertex_count(), sphere.edge_count()), (12, 30));
        assert!(gen_tiling_patch(4, 2).is_err());
        assert!(gen_tiling_patch(7, 0).is_err());
    }

    #[test]
    fn tiling_patch_interior_degrees() {
        for d in 5..=8 {
            for r in 1..=3 {
                let patch = gen_tiling_patch(d, r).unwrap();
                assert!(flagness_check(&patch).passed());
                let dist = bfs_distances(&patch, 0);
                for v in patch.vertices() {
                    if dist[v].unwrap() < r as u32 {
                        assert_eq!(patch.degree(v), d, "d={d} r={r} v={v}");
                    }
                }
            }
        }
    }

    #[test]
    fn platonic_tables() {
        let oct = gen_platonic(Platonic::Octahedron);
        assert_eq!((oct.vertex_count(), oct.edge_count()), (6, 12));
        let ico = gen_platonic(Platonic::Icosahedron);
        assert_eq!((ico.vertex_count(), ico.edge_count()), (12, 30));
        assert!(ico.vertices().all(|v| ico.degree(v) == 5));
        assert_eq!(ico.triangles().len(), 20);
        assert!(flagness_check(&oct).passed() && flagness_check(&ico).passed());
    }

    #[test]
    fn random_flag_determinism() {
        assert_eq!(gen_random_flag(10, 0.0, 1).unwrap().edge_count(), 0);
        assert_eq!(gen_random_flag(10, 1.0, 1).unwrap().edge_count(), 45);
        let a = gen_random_flag(20, 0.3, 42).unwrap();
        let b = gen_random_flag(20, 0.3, 42).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        assert_eq!(a.simply_connected(), None);
        assert!(gen_random_flag(5, 1.5, 0).is_err());
    }

    #[test]
    fn cones_have_targeted_apex_largeness() {
        for k in 4..=12 {
            let cone = gen_cone(&gen_cycle(k).unwrap());
            assert_eq!(vertex_largeness(&cone, k).unwrap(), Largeness::Finite(k as u32));
        }
        let tree = FlagComplex::new(4, [(0, 1), (1, 2), (1, 3)]).unwrap();
        let cone = gen_cone(&tree);
        assert_eq!(vertex_largeness(&cone, 4).unwrap(), Largeness::Infinite);
        assert_eq!(cone.simply_connected(), Some(true));
        let base = gen_platonic(Platonic::Octahedron);
        assert_eq!(
            vertex_largeness(&gen_cone(&base), 6).unwrap(),
            largeness_of_complex(&base)
        );
    }

    #[test]
    fn polygon_discs() {
        let tri = gen_polygon_disc(3, &[]).unwrap();
        assert_eq!(tri.triangles(), &[[0, 1, 2]]);
        let wheel = gen_polygon_disc(4, &[4]).unwrap();
        assert_eq!(wheel.area(), 4);
        assert_eq!(wheel.interior(), vec![4]);
        let pair = gen_polygon_disc(4, &[4, 4]).unwrap();
        assert_eq!(pair.area(), 6);
        let step5 = gen_polygon_disc(8, &[4, 8]).unwrap();
        assert_eq!(step5.area(), 10);
        for disc in [&tri, &wheel, &pair, &step5] {
            assert!(validate_disc(disc).passed(), "{disc:?}");
        }
        let chain = gen_polygon_disc(10, &[7, 7, 4]).unwrap();
        assert!(validate_disc(&chain).passed());
        assert_eq!(chain.degree(10), 7);
        assert_eq!(chain.degree(11), 7);
        assert_eq!(chain.degree(12), 4);
        assert!(matches!(gen_polygon_disc(5, &[4]), Err(Error::Unrealizable(_))));
        assert!(matches!(gen_polygon_disc(3, &[3, 3]), Err(Error::Unrealizable(_))));
    }

    #[test]
    fn spec_build_and_scale() {
        let spec = GeneratorSpec::TilingPatch { degree: 7, radius: 1 };
        assert_eq!(spec.with_scale(2).build().unwrap().vertex_count(), 29);
        let cone = GeneratorSpec::Cone { base: Box::new(GeneratorSpec::Cycle { n: 5 }) };
        assert_eq!(cone.with_scale(9).build().unwrap().vertex_count(), 10);
        let json = serde_json::to_string(&cone).unwrap();
        let back: GeneratorSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(back, cone);
    }
}
