//! Path metric on the 0-skeleton, balls and spheres.

use std::collections::VecDeque;

use rayon::prelude::*;

use super::{FlagComplex, SubComplex, Vertex};
use crate::error::Result;

/// Single-source BFS. `None` marks vertices in other components.
pub fn bfs_distances(x: &FlagComplex, source: Vertex) -> Vec<Option<u32>> {
    let mut dist = vec![None; x.vertex_count()];
    let mut queue = VecDeque::new();
    dist[source] = Some(0);
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let d = dist[u].unwrap();
        for &w in x.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Graph distance; `None` is infinite (different components).
pub fn distance(x: &FlagComplex, u: Vertex, v: Vertex) -> Result<Option<u32>> {
    x.check_vertex(u)?;
    x.check_vertex(v)?;
    Ok(bfs_distances(x, u)[v])
}

pub fn ball(x: &FlagComplex, v: Vertex, radius: u32) -> Result<SubComplex> {
    x.check_vertex(v)?;
    let members: Vec<Vertex> = bfs_distances(x, v)
        .into_iter()
        .enumerate()
        .filter(|(_, d)| d.is_some_and(|d| d <= radius))
        .map(|(w, _)| w)
        .collect();
    x.span(&members)
}

pub fn sphere(x: &FlagComplex, v: Vertex, radius: u32) -> Result<SubComplex> {
    x.check_vertex(v)?;
    let members: Vec<Vertex> = bfs_distances(x, v)
        .into_iter()
        .enumerate()
        .filter(|(_, d)| *d == Some(radius))
        .map(|(w, _)| w)
        .collect();
    x.span(&members)
}

/// Connected components as sorted vertex lists, ordered by least vertex.
pub fn components(x: &FlagComplex) -> Vec<Vec<Vertex>> {
    let mut seen = vec![false; x.vertex_count()];
    let mut out = Vec::new();
    for s in x.vertices() {
        if seen[s] {
            continue;
        }
        let mut comp = Vec::new();
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(u) = stack.pop() {
            comp.push(u);
            for &w in x.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

pub fn is_connected(x: &FlagComplex) -> bool {
    components(x).len() <= 1
}

/// All-pairs BFS distances, row-major. Unreachable pairs hold `u32::MAX`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<u32>,
}

impl DistanceMatrix {
    pub fn new(x: &FlagComplex) -> Self {
        let n = x.vertex_count();
        let rows: Vec<Vec<u32>> = x
            .vertices()
            .into_par_iter()
            .map(|s| {
                bfs_distances(x, s)
                    .into_iter()
                    .map(|d| d.unwrap_or(u32::MAX))
                    .collect()
            })
            .collect();
        DistanceMatrix { n, data: rows.concat() }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn raw(&self, u: Vertex, v: Vertex) -> u32 {
        self.data[u * self.n + v]
    }

    pub fn get(&self, u: Vertex, v: Vertex) -> Option<u32> {
        let d = self.raw(u, v);
        (d != u32::MAX).then_some(d)
    }

    pub fn row(&self, u: Vertex) -> &[u32] {
        &self.data[u * self.n..(u + 1) * self.n]
    }

    pub fn diameter(&self) -> Option<u32> {
        if self.data.contains(&u32::MAX) {
            None
        } else {
            self.data.iter().copied().max().or(Some(0))
        }
    }
}
