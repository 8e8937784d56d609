//! The `cliquecomplex-v1` JSON document and the plain edge-list format.

use serde::{Deserialize, Serialize};

use super::{FlagComplex, Vertex};
use crate::error::{Error, Result};

pub const FORMAT_TAG: &str = "cliquecomplex-v1";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    Json,
    EdgeList,
}

/// Serialized form of a [`FlagComplex`]. Field order is the emitted order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub format: Option<String>,
    pub vertices: usize,
    pub edges: Vec<[Vertex; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub triangles: Option<Vec<[Vertex; 3]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub simply_connected: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl ComplexDocument {
    pub fn into_complex(self) -> Result<FlagComplex> {
        if let Some(tag) = &self.format {
            if tag != FORMAT_TAG {
                return Err(Error::Parse(format!("unsupported format tag {tag:?}")));
            }
        }
        let mut x = FlagComplex::new(self.vertices, self.edges.iter().map(|e| (e[0], e[1])))?;
        if let Some(tris) = self.triangles {
            x = x.with_triangles(tris)?;
        }
        x.with_labels(self.labels)
            .map(|x| x.with_simply_connected(self.simply_connected))
    }
}

impl From<&FlagComplex> for ComplexDocument {
    fn from(x: &FlagComplex) -> Self {
        ComplexDocument {
            format: Some(FORMAT_TAG.to_string()),
            vertices: x.vertex_count(),
            edges: x.edges().map(|(u, v)| [u, v]).collect(),
            triangles: x.explicit_triangles().map(|s| s.iter().copied().collect()),
            simply_connected: x.simply_connected(),
            labels: x.labels().map(|l| l.to_vec()),
        }
    }
}

impl FlagComplex {
    pub fn to_document(&self) -> ComplexDocument {
        ComplexDocument::from(self)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_document()).expect("document serializes")
    }
}

pub fn load_complex(bytes: &[u8], format: InputFormat) -> Result<FlagComplex> {
    match format {
        InputFormat::Json => {
            let doc: ComplexDocument =
                serde_json::from_slice(bytes).map_err(|e| Error::Parse(e.to_string()))?;
            doc.into_complex()
        }
        InputFormat::EdgeList => parse_edge_list(bytes),
    }
}

/// JSON when the first non-blank byte is `{`, edge list otherwise.
pub fn load_complex_auto(bytes: &[u8]) -> Result<FlagComplex> {
    let first = bytes.iter().find(|b| !b.is_ascii_whitespace());
    if first == Some(&b'{') {
        load_complex(bytes, InputFormat::Json)
    } else {
        load_complex(bytes, InputFormat::EdgeList)
    }
}

fn parse_edge_list(bytes: &[u8]) -> Result<FlagComplex> {
    let text = std::str::from_utf8(bytes).map_err(|e| Error::Parse(e.to_string()))?;
    let mut edges = Vec::new();
    let mut max_vertex: Option<Vertex> = None;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::Parse(format!(
                "line {}: expected \"u v\", got {raw:?}",
                lineno + 1
            )));
        }
        let parse = |s: &str| {
            s.parse::<Vertex>()
                .map_err(|e| Error::Parse(format!("line {}: {s:?}: {e}", lineno + 1)))
        };
        let (u, v) = (parse(fields[0])?, parse(fields[1])?);
        max_vertex = Some(max_vertex.map_or(u.max(v), |m| m.max(u).max(v)));
        edges.push((u, v));
    }
    let n = max_vertex.map_or(0, |m| m + 1);
    FlagComplex::new(n, edges)
}
