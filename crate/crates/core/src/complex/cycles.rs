//! Induced (chordless) cycles of the 1-skeleton.

use std::collections::VecDeque;

use rayon::prelude::*;

use super::{FlagComplex, Loop, Vertex};

/// Lexicographically least rotation or reflection of a cyclic sequence.
/// Repeated entries are allowed.
pub fn canonical_cycle(seq: &[Vertex]) -> Vec<Vertex> {
    let n = seq.len();
    if n == 0 {
        return Vec::new();
    }
    let mut best: Option<Vec<Vertex>> = None;
    let mut candidate = Vec::with_capacity(n);
    for start in 0..n {
        for reversed in [false, true] {
            candidate.clear();
            for k in 0..n {
                let i = if reversed { (start + n - k) % n } else { (start + k) % n };
                candidate.push(seq[i]);
            }
            if best.as_ref().is_none_or(|b| candidate < *b) {
                best = Some(candidate.clone());
            }
        }
    }
    best.unwrap()
}

/// All full cycles of length at most `max_len`, each once in canonical form,
/// sorted by length and then lexicographically.
///
/// Cycles of length four and more are the chordless cycles of the 1-skeleton.
/// A 3-cycle is full only when it spans no 2-simplex, which can happen only
/// for explicit-mode input that fails the flagness audit.
pub fn enumerate_full_cycles(x: &FlagComplex, max_len: usize) -> Vec<Loop> {
    if max_len < 3 {
        return Vec::new();
    }
    let mut found: Vec<Loop> = Vec::new();
    if x.explicit_triangles().is_some() {
        found.extend(
            x.three_cliques()
                .into_iter()
                .filter(|t| !x.is_triangle(t[0], t[1], t[2]))
                .map(|t| Loop::from_trusted(t.to_vec())),
        );
    }
    if max_len >= 4 {
        let per_start: Vec<Vec<Loop>> = x
            .vertices()
            .into_par_iter()
            .map(|s| {
                let mut out = Vec::new();
                let mut path = vec![s];
                extend_chordless(x, max_len, &mut path, &mut out);
                out
            })
            .collect();
        found.extend(per_start.into_iter().flatten());
    }
    found.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    found
}

/// Depth-first growth of chordless paths starting at `path[0]`, which is kept
/// the least vertex of the cycle. Each cycle is emitted in the orientation
/// whose second vertex is smaller than its last.
fn extend_chordless(x: &FlagComplex, max_len: usize, path: &mut Vec<Vertex>, out: &mut Vec<Loop>) {
    let s = path[0];
    let last = *path.last().unwrap();
    let k = path.len();
    for &u in x.neighbors(last) {
        if u <= s || path.contains(&u) {
            continue;
        }
        // u may touch only `last` and, when closing, the start vertex.
        if path.iter().skip(1).take(k.saturating_sub(2)).any(|&p| x.is_adjacent(p, u)) {
            continue;
        }
        let closes = k >= 2 && x.is_adjacent(s, u);
        if closes {
            if k >= 3 && path[1] < u {
                let mut cycle = path.clone();
                cycle.push(u);
                out.push(Loop::from_trusted(cycle));
            }
        } else if k + 1 < max_len {
            path.push(u);
            extend_chordless(x, max_len, path, out);
            path.pop();
        }
    }
}

/// Length of the shortest full cycle, or `None` when there is none, with
/// its canonically least witness.
///
/// Exact for every length: a shortest chordless cycle through `v` with
/// neighbors `a`, `b` closes a shortest `a`–`b` path that avoids the closed
/// neighborhood of `v`, and shortest paths are induced.
pub fn shortest_full_cycle(x: &FlagComplex) -> Option<(usize, Loop)> {
    let length = shortest_full_cycle_len(x)?;
    let witness = enumerate_full_cycles(x, length)
        .into_iter()
        .find(|c| c.len() == length)
        .expect("a full cycle of the computed length exists");
    Some((length, witness))
}

pub(crate) fn shortest_full_cycle_len(x: &FlagComplex) -> Option<usize> {
    if let Some(set) = x.explicit_triangles() {
        if x.three_cliques().iter().any(|t| !set.contains(t)) {
            return Some(3);
        }
    }
    x.vertices()
        .into_par_iter()
        .filter_map(|v| shortest_hole_through(x, v))
        .min()
}

fn shortest_hole_through(x: &FlagComplex, v: Vertex) -> Option<usize> {
    let n = x.vertex_count();
    let ns = x.neighbors(v);
    if ns.len() < 2 {
        return None;
    }
    let mut blocked = vec![false; n];
    blocked[v] = true;
    for &a in ns {
        blocked[a] = true;
    }
    let mut best: Option<usize> = None;
    let mut dist = vec![u32::MAX; n];
    let mut queue = VecDeque::new();
    for (ia, &a) in ns.iter().enumerate() {
        let targets: Vec<Vertex> =
            ns[ia + 1..].iter().copied().filter(|&b| !x.is_adjacent(a, b)).collect();
        if targets.is_empty() {
            continue;
        }
        dist.iter_mut().for_each(|d| *d = u32::MAX);
        queue.clear();
        for &u in x.neighbors(a) {
            if !blocked[u] {
                dist[u] = 1;
                queue.push_back(u);
            }
        }
        while let Some(u) = queue.pop_front() {
            if let Some(b) = best {
                // the cycle would be dist + 2 (to b) + 1 (through v) edges at least
                if dist[u] as usize + 3 >= b {
                    break;
                }
            }
            for &w in x.neighbors(u) {
                if !blocked[w] && dist[w] == u32::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        for &b in &targets {
            let reach = x
                .neighbors(b)
                .iter()
                .filter(|&&u| !blocked[u] && dist[u] != u32::MAX)
                .map(|&u| dist[u] as usize)
                .min();
            if let Some(d) = reach {
                // a ... u, then b, then v, back to a
                let len = d + 3;
                if best.is_none_or(|cur| len < cur) {
                    best = Some(len);
                }
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> FlagComplex {
        FlagComplex::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn octahedron() -> FlagComplex {
        let edges = (0..6)
            .flat_map(|u| (u + 1..6).map(move |v| (u, v)))
            .filter(|&(u, v)| u ^ 1 != v);
        FlagComplex::new(6, edges).unwrap()
    }

    fn complete(n: usize) -> FlagComplex {
        FlagComplex::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    /// Induced cycles by brute force over vertex subsets: a subset spans a
    /// chordless cycle iff its induced graph is connected and 2-regular.
    fn brute_force_count(x: &FlagComplex, max_len: usize) -> usize {
        let n = x.vertex_count();
        let mut count = 0;
        for mask in 0u32..(1 << n) {
            let k = mask.count_ones() as usize;
            if !(4..=max_len).contains(&k) {
                continue;
            }
            let vs: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            let regular = vs
                .iter()
                .all(|&v| vs.iter().filter(|&&w| x.is_adjacent(v, w)).count() == 2);
            if !regular {
                continue;
            }
            let mut seen = vec![vs[0]];
            let mut stack = vec![vs[0]];
            while let Some(u) = stack.pop() {
                for &w in &vs {
                    if x.is_adjacent(u, w) && !seen.contains(&w) {
                        seen.push(w);
                        stack.push(w);
                    }
                }
            }
            if seen.len() == k {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn canonical_form() {
        assert_eq!(canonical_cycle(&[3, 1, 2]), vec![1, 2, 3]);
        assert_eq!(canonical_cycle(&[1, 3, 2]), vec![1, 2, 3]);
        assert_eq!(canonical_cycle(&[4, 0, 2, 0]), vec![0, 2, 0, 4]);
    }

    #[test]
    fn pentagon_has_one_full_cycle() {
        let cycles = enumerate_full_cycles(&cycle(5), 9);
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].vertices(), &[0, 1, 2, 3, 4]);
    }

    #[test]
    fn octahedron_has_three_equators() {
        let x = octahedron();
        let cycles = enumerate_full_cycles(&x, 9);
        assert_eq!(brute_force_count(&x, 9), 3);
        assert_eq!(cycles.len(), 3);
        assert!(cycles.iter().all(|c| c.len() == 4));
        for c in &cycles {
            assert_eq!(c, &c.canonical());
        }
    }

    #[test]
    fn complete_graph_has_none() {
        assert!(enumerate_full_cycles(&complete(5), 9).is_empty());
        assert_eq!(shortest_full_cycle(&complete(5)), None);
    }

    #[test]
    fn explicit_empty_triangles_are_full_cycles() {
        let x = cycle(3).with_triangles([]).unwrap();
        let cycles = enumerate_full_cycles(&x, 5);
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].len(), 3);
        assert_eq!(shortest_full_cycle(&x).unwrap().0, 3);
        assert!(enumerate_full_cycles(&cycle(3), 5).is_empty());
    }

    #[test]
    fn shortest_matches_cycle_graphs() {
        for n in 4..15 {
            let (len, witness) = shortest_full_cycle(&cycle(n)).unwrap();
            assert_eq!(len, n);
            assert_eq!(witness.len(), n);
        }
        let tree = FlagComplex::new(5, [(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        assert_eq!(shortest_full_cycle(&tree), None);
    }

    #[test]
    fn enumeration_matches_brute_force_on_random_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..40 {
            let n = rng.gen_range(4..11);
            let p = rng.gen_range(0.2..0.7);
            let edges: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|_| rng.gen_bool(p))
                .collect();
            let x = FlagComplex::new(n, edges).unwrap();
            let cycles = enumerate_full_cycles(&x, n);
            assert_eq!(cycles.len(), brute_force_count(&x, n));
            let shortest = cycles.iter().map(|c| c.len()).min();
            assert_eq!(shortest_full_cycle_len(&x), shortest);
        }
    }
}
