use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::disc::TriangulatedDisc;
use crate::complex::{FlagComplex, Vertex};
use crate::error::{Error, Result};
use crate::report::{Condition, ConditionReport, Witness};

/// A filling diagram: a disc with a vertex map into a target complex and
/// the declared simplicial / nondegenerate flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramMap {
    pub disc: TriangulatedDisc,
    /// `vertex_map[v]` is the image of disc vertex `v`.
    pub vertex_map: Vec<Vertex>,
    pub simplicial: bool,
    pub nondegenerate: bool,
}

/// Flags recomputed from a map.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapFlags {
    pub simplicial: bool,
    pub nondegenerate: bool,
}

impl DiagramMap {
    pub fn area(&self) -> usize {
        self.disc.area()
    }

    /// Image of the boundary cycle.
    pub fn filled_loop(&self) -> Vec<Vertex> {
        self.disc.boundary().iter().map(|&v| self.vertex_map[v]).collect()
    }

    pub fn declared_flags(&self) -> MapFlags {
        MapFlags { simplicial: self.simplicial, nondegenerate: self.nondegenerate }
    }

    fn check_target(&self, x: &FlagComplex) -> Result<()> {
        if self.vertex_map.len() != self.disc.vertex_count() {
            return Err(Error::Invariant(format!(
                "map has {} images for {} disc vertices",
                self.vertex_map.len(),
                self.disc.vertex_count()
            )));
        }
        match self.vertex_map.iter().find(|&&t| t >= x.vertex_count()) {
            Some(&t) => Err(Error::TargetMismatch(t)),
            None => Ok(()),
        }
    }

    /// Recomputes both flags against `x`.
    pub fn compute_flags(&self, x: &FlagComplex) -> Result<MapFlags> {
        self.check_target(x)?;
        Ok(self.flag_failures(x).0)
    }

    fn flag_failures(&self, x: &FlagComplex) -> (MapFlags, Vec<Witness>) {
        let f = &self.vertex_map;
        let mut simplicial = true;
        let mut nondegenerate = true;
        let mut notes = Vec::new();
        for (a, b) in self.disc.edges() {
            if f[a] == f[b] {
                nondegenerate = false;
                notes.push(Witness::vertices(vec![a, b]).with_note("edge collapses to a vertex"));
            } else if !x.is_adjacent(f[a], f[b]) {
                simplicial = false;
                notes.push(Witness::vertices(vec![a, b]).with_note("edge image is not an edge"));
            }
        }
        for t in self.disc.triangles() {
            let img: BTreeSet<Vertex> = t.iter().map(|&v| f[v]).collect();
            let img: Vec<Vertex> = img.into_iter().collect();
            let ok = match img.len() {
                3 => x.is_triangle(img[0], img[1], img[2]),
                2 => x.is_adjacent(img[0], img[1]),
                _ => true,
            };
            if !ok {
                simplicial = false;
                notes.push(Witness::vertices(t.to_vec()).with_note("triangle image is not a simplex"));
            } else if img.len() < 3 {
                nondegenerate = false;
            }
        }
        (MapFlags { simplicial, nondegenerate: simplicial && nondegenerate }, notes)
    }

    /// Boundary restriction is a bijection onto a loop of `x`, edge by edge.
    pub fn boundary_is_isomorphic(&self, x: &FlagComplex) -> bool {
        let img = self.filled_loop();
        let distinct: BTreeSet<Vertex> = img.iter().copied().collect();
        let n = img.len();
        distinct.len() == n
            && n >= 3
            && (0..n).all(|i| x.is_adjacent(img[i], img[(i + 1) % n]))
    }

    pub fn to_document(&self) -> DiagramDocument {
        DiagramDocument {
            disc: DiscDocument {
                boundary: self.disc.boundary().to_vec(),
                interior: self.disc.interior(),
                triangles: self.disc.triangles().to_vec(),
            },
            map: self.vertex_map.iter().copied().enumerate().collect(),
            area: self.area(),
            flags: self.declared_flags(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_document()).expect("diagram serializes")
    }

    pub fn to_dot(&self) -> String {
        self.disc.to_dot(Some(&self.vertex_map))
    }

    pub fn from_json(bytes: &[u8]) -> Result<Self> {
        let doc: DiagramDocument =
            serde_json::from_slice(bytes).map_err(|e| Error::Parse(e.to_string()))?;
        doc.into_map()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiscDocument {
    pub boundary: Vec<Vertex>,
    pub interior: Vec<Vertex>,
    pub triangles: Vec<[Vertex; 3]>,
}

/// Serialized form of a [`DiagramMap`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagramDocument {
    pub disc: DiscDocument,
    pub map: BTreeMap<Vertex, Vertex>,
    pub area: usize,
    pub flags: MapFlags,
}

impl DiagramDocument {
    /// Disc vertices must be exactly `0..n`, split into boundary and interior.
    pub fn into_map(self) -> Result<DiagramMap> {
        let n = self.disc.boundary.len() + self.disc.interior.len();
        let all: BTreeSet<Vertex> =
            self.disc.boundary.iter().chain(&self.disc.interior).copied().collect();
        if all.len() != n || all.iter().next_back().is_some_and(|&m| m + 1 != n) {
            return Err(Error::Parse(format!(
                "disc vertices must be 0..{n} split between boundary and interior"
            )));
        }
        if self.map.len() != n || self.map.keys().copied().ne(0..n) {
            return Err(Error::Parse("map must give an image for every disc vertex".into()));
        }
        let disc = TriangulatedDisc::new(n, self.disc.boundary, self.disc.triangles);
        if disc.area() != self.area {
            return Err(Error::Parse(format!(
                "area {} does not match {} triangles",
                self.area,
                disc.area()
            )));
        }
        Ok(DiagramMap {
            disc,
            vertex_map: self.map.into_values().collect(),
            simplicial: self.flags.simplicial,
            nondegenerate: self.flags.nondegenerate,
        })
    }
}

/// Recomputes the flags of `m` against `x`; passes iff they match the
/// declared ones and the boundary maps isomorphically onto its image.
pub fn validate_map(m: &DiagramMap, x: &FlagComplex) -> Result<ConditionReport> {
    m.check_target(x)?;
    let mut report = ConditionReport::new(Condition::DiagramMap);
    let (flags, failures) = m.flag_failures(x);
    if flags.simplicial != m.simplicial {
        report.push_witness(Witness::vertices(Vec::new()).with_note(format!(
            "declared simplicial={} but recomputed {}",
            m.simplicial, flags.simplicial
        )));
    }
    if flags.nondegenerate != m.nondegenerate {
        report.push_witness(Witness::vertices(Vec::new()).with_note(format!(
            "declared nondegenerate={} but recomputed {}",
            m.nondegenerate, flags.nondegenerate
        )));
    }
    if flags != m.declared_flags() {
        for w in failures {
            report.push_witness(w);
        }
    }
    if !m.boundary_is_isomorphic(x) {
        report.push_witness(
            Witness::vertices(m.filled_loop()).with_note("boundary is not mapped isomorphically"),
        );
    }
    Ok(report.finish())
}
