//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the search or checking code of the library; only the plain
//! adjacency accessors of `FlagComplex` are used.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::{Mutex, OnceLock};

use flagcheck_core::complex::DistanceMatrix;
use flagcheck_core::{FlagComplex, Vertex};
use rand::seq::SliceRandom;
use rand::Rng;

/// Length of the shortest induced cycle of length >= 4 in the subgraph
/// induced on `members`, by trying vertex subsets in order of size.
/// `None` means infinite.
pub fn induced_cycle_largeness(x: &FlagComplex, members: &[Vertex]) -> Option<usize> {
    let m = members.len();
    assert!(m <= 22, "oracle is exponential in the member count");
    let adj: Vec<u32> = (0..m)
        .map(|i| {
            (0..m)
                .filter(|&j| j != i && x.is_adjacent(members[i], members[j]))
                .fold(0u32, |acc, j| acc | 1 << j)
        })
        .collect();
    let mut best: Option<usize> = None;
    for mask in 1u32..(1u32 << m) {
        let k = mask.count_ones() as usize;
        if k < 4 || best.is_some_and(|b| k >= b) {
            continue;
        }
        let all_degree_two = (0..m)
            .filter(|&i| mask >> i & 1 == 1)
            .all(|i| (adj[i] & mask).count_ones() == 2);
        if !all_degree_two {
            continue;
        }
        // 2-regular: a cycle iff connected
        let start = mask.trailing_zeros() as usize;
        let mut seen = 1u32 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let i = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = adj[i] & mask & !seen;
            seen |= new;
            frontier |= new;
        }
        if seen == mask {
            best = Some(k);
        }
    }
    best
}

pub fn vertex_largeness_oracle(x: &FlagComplex, v: Vertex) -> Option<usize> {
    induced_cycle_largeness(x, x.neighbors(v))
}

/// Whether a (largeness, largeness) pair of adjacent vertices is allowed by
/// all three clauses; `None` is infinite.
pub fn pair_satisfies_clauses(a: Option<usize>, b: Option<usize>) -> bool {
    let ok = |p: Option<usize>, q: Option<usize>| {
        let bound = match p {
            Some(4) => 9,
            Some(5) => 8,
            Some(6) => 7,
            _ => return true,
        };
        q.is_none_or(|q| q >= bound)
    };
    ok(a, b) && ok(b, a)
}

/// Max over all ordered quadruples of twice the four-point value, straight
/// from BFS distances.
pub fn brute_delta_twice(x: &FlagComplex) -> u64 {
    let n = x.vertex_count();
    let d: Vec<Vec<u64>> = (0..n)
        .map(|s| {
            let mut dist = vec![u64::MAX; n];
            dist[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in x.neighbors(u) {
                    if dist[w] == u64::MAX {
                        dist[w] = dist[u] + 1;
                        queue.push_back(w);
                    }
                }
            }
            dist
        })
        .collect();
    let mut best = 0;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for e in 0..n {
                    let mut s = [d[a][b] + d[c][e], d[a][c] + d[b][e], d[a][e] + d[b][c]];
                    s.sort_unstable();
                    best = best.max(s[2] - s[1]);
                }
            }
        }
    }
    best
}

/// Vertex count of the degree-`d` ball of radius `r` from the recurrence on
/// the numbers of corner and side vertices of each layer.
pub fn layer_recurrence_count(d: i64, r: usize) -> i64 {
    let (mut corners, mut sides) = (d, 0i64);
    let mut total = 1 + d;
    for _ in 2..=r {
        total += corners * (d - 4) + sides * (d - 5);
        let next = corners * (d - 5) + sides * (d - 6);
        sides += corners;
        corners = next;
    }
    total
}

/// A triangulated disc on `0..n` with boundary cycle `0..boundary_len`.
pub type RawDisc = Vec<[usize; 3]>;

fn is_disc(n: usize, boundary_len: usize, tris: &[[usize; 3]]) -> bool {
    let mut count: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut used = vec![false; n];
    for t in tris {
        for &v in t {
            used[v] = true;
        }
        for (a, b) in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
            *count.entry((a, b)).or_default() += 1;
        }
    }
    if used.iter().any(|u| !u) {
        return false;
    }
    let boundary: BTreeSet<(usize, usize)> = (0..boundary_len)
        .map(|i| {
            let j = (i + 1) % boundary_len;
            (i.min(j), i.max(j))
        })
        .collect();
    for (e, &c) in &count {
        let want = if boundary.contains(e) { 1 } else { 2 };
        if c != want {
            return false;
        }
    }
    if boundary.iter().any(|e| !count.contains_key(e)) {
        return false;
    }
    if n as i64 - count.len() as i64 + tris.len() as i64 != 1 {
        return false;
    }
    // every vertex link connected (a cycle inside, a path on the boundary)
    for v in 0..n {
        let edges: Vec<(usize, usize)> = tris
            .iter()
            .filter(|t| t.contains(&v))
            .map(|t| {
                let o: Vec<usize> = t.iter().copied().filter(|&u| u != v).collect();
                (o[0], o[1])
            })
            .collect();
        let mut comp: BTreeSet<usize> = BTreeSet::from([edges[0].0]);
        let mut grew = true;
        while grew {
            grew = false;
            for &(a, b) in &edges {
                if comp.contains(&a) != comp.contains(&b) {
                    comp.insert(a);
                    comp.insert(b);
                    grew = true;
                }
            }
        }
        let all: BTreeSet<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
        if comp != all {
            return false;
        }
    }
    true
}

/// Adding `t` keeps every boundary edge in at most one triangle and every
/// other edge in at most two.
fn fits(boundary_len: usize, chosen: &[[usize; 3]], t: [usize; 3]) -> bool {
    [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])].iter().all(|&(a, b)| {
        let on_boundary = b < boundary_len && (b == a + 1 || (a == 0 && b == boundary_len - 1));
        let used = chosen.iter().filter(|s| s.contains(&a) && s.contains(&b)).count();
        used < if on_boundary { 1 } else { 2 }
    })
}

/// Every labelled disc with `boundary_len` boundary vertices and `interior`
/// interior vertices, found by testing every set of the right number of
/// triangles.
pub fn all_discs(boundary_len: usize, interior: usize) -> Vec<RawDisc> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, usize), Vec<RawDisc>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(found) = cache.lock().unwrap().get(&(boundary_len, interior)) {
        return found.clone();
    }
    let n = boundary_len + interior;
    let area = boundary_len + 2 * interior - 2;
    let triples: Vec<[usize; 3]> = (0..n)
        .flat_map(|a| (a + 1..n).flat_map(move |b| (b + 1..n).map(move |c| [a, b, c])))
        .collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    fn rec(
        triples: &[[usize; 3]],
        from: usize,
        area: usize,
        n: usize,
        boundary_len: usize,
        chosen: &mut Vec<[usize; 3]>,
        out: &mut Vec<RawDisc>,
    ) {
        if chosen.len() == area {
            if is_disc(n, boundary_len, chosen) {
                out.push(chosen.clone());
            }
            return;
        }
        for i in from..triples.len() {
            if triples.len() - i < area - chosen.len() {
                break;
            }
            if !fits(boundary_len, chosen, triples[i]) {
                continue;
            }
            chosen.push(triples[i]);
            rec(triples, i + 1, area, n, boundary_len, chosen, out);
            chosen.pop();
        }
    }
    rec(&triples, 0, area, n, boundary_len, &mut chosen, &mut out);
    cache.lock().unwrap().insert((boundary_len, interior), out.clone());
    out
}

/// Least area of a simplicial nondegenerate filling of `gamma` with at most
/// `max_area` triangles, by trying every disc and every interior map.
pub fn brute_min_filling_area(x: &FlagComplex, gamma: &[Vertex], max_area: usize) -> Option<usize> {
    let len = gamma.len();
    let mut interior = 0;
    while len + 2 * interior - 2 <= max_area {
        for disc in all_discs(len, interior) {
            if has_map(x, gamma, &disc, interior) {
                return Some(len + 2 * interior - 2);
            }
        }
        interior += 1;
    }
    None
}

fn has_map(x: &FlagComplex, gamma: &[Vertex], disc: &RawDisc, interior: usize) -> bool {
    let len = gamma.len();
    let n = x.vertex_count();
    let mut image: Vec<Vertex> = gamma.to_vec();
    image.resize(len + interior, 0);
    let total = n.pow(interior as u32);
    (0..total).any(|mut code| {
        for slot in image.iter_mut().skip(len) {
            *slot = code % n;
            code /= n;
        }
        disc.iter().all(|t| {
            let [a, b, c] = t.map(|v| image[v]);
            a != b && b != c && a != c && x.is_triangle(a, b, c)
        })
    })
}

/// Random closed walk through distinct vertices of the given length, steered
/// so it can always return to its start.
pub fn random_loop<R: Rng>(x: &FlagComplex, dm: &DistanceMatrix, len: usize, rng: &mut R) -> Option<Vec<Vertex>> {
    let n = x.vertex_count();
    if n == 0 {
        return None;
    }
    let start = rng.gen_range(0..n);
    let mut path = vec![start];
    for step in 1..len {
        let last = *path.last().unwrap();
        let remaining = (len - step) as u32;
        let choices: Vec<Vertex> = x
            .neighbors(last)
            .iter()
            .copied()
            .filter(|&c| !path.contains(&c))
            .filter(|&c| dm.get(c, start).is_some_and(|d| d <= remaining))
            .filter(|&c| step + 1 < len || x.is_adjacent(c, start))
            .collect();
        path.push(*choices.choose(rng)?);
    }
    (len >= 3).then_some(path)
}

pub fn canonical(seq: &[Vertex]) -> Vec<Vertex> {
    let n = seq.len();
    let mut best = seq.to_vec();
    for s in 0..n {
        let fwd: Vec<Vertex> = (0..n).map(|k| seq[(s + k) % n]).collect();
        let bwd: Vec<Vertex> = (0..n).map(|k| seq[(s + n - k) % n]).collect();
        best = best.min(fwd).min(bwd);
    }
    best
}

/// A loop is chordless when no two non-consecutive vertices are adjacent.
pub fn is_chordless(x: &FlagComplex, gamma: &[Vertex]) -> bool {
    let n = gamma.len();
    (0..n).all(|i| x.is_adjacent(gamma[i], gamma[(i + 1) % n]))
        && (0..n).all(|i| {
            (i + 2..n)
                .filter(|&j| !(i == 0 && j == n - 1))
                .all(|j| !x.is_adjacent(gamma[i], gamma[j]))
        })
}

pub fn in_some_unit_ball(x: &FlagComplex, gamma: &[Vertex]) -> bool {
    x.vertices()
        .any(|c| gamma.iter().all(|&v| v == c || x.is_adjacent(c, v)))
}
