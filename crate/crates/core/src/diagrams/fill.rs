use std::collections::HashMap;

use super::disc::{validate_disc, TriangulatedDisc};
use super::map::{validate_map, DiagramMap};
use crate::complex::{canonical_cycle, flagness_check, require_flag, FlagComplex, Loop, Vertex};
use crate::curvature::{largeness_of_complex, Largeness};
use crate::error::{Error, Result};

/// Fills a loop shorter than the largeness of `x` by repeatedly cutting
/// along a diagonal, so the disc has no interior vertices and exactly
/// `|gamma| - 2` triangles. Sub-loops are split at their first diagonal in
/// position order.
pub fn fill_without_interior(x: &FlagComplex, gamma: &Loop, k: Largeness) -> Result<DiagramMap> {
    let gamma = Loop::new(x, gamma.vertices().to_vec())?;
    let len = gamma.len();
    if Largeness::Finite(len as u32) >= k {
        return Err(Error::PreconditionViolated(format!("|gamma| = {len} is not below k = {k}")));
    }
    require_flag(x).map_err(|e| Error::PreconditionViolated(e.to_string()))?;
    let actual = largeness_of_complex(x);
    if actual < k {
        return Err(Error::PreconditionViolated(format!("complex is only {actual}-large, not {k}-large")));
    }

    let vs = gamma.vertices();
    let mut triangles = Vec::new();
    let mut stack: Vec<Vec<usize>> = vec![(0..len).collect()];
    while let Some(sub) = stack.pop() {
        let n = sub.len();
        if n == 3 {
            let [a, b, c] = [vs[sub[0]], vs[sub[1]], vs[sub[2]]];
            if !x.is_triangle(a, b, c) {
                return Err(Error::NoDiagonal(vec![a, b, c]));
            }
            triangles.push([sub[0], sub[1], sub[2]]);
            continue;
        }
        let diagonal = (0..n)
            .flat_map(|i| (i + 2..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !(i == 0 && j == n - 1))
            .find(|&(i, j)| x.is_adjacent(vs[sub[i]], vs[sub[j]]));
        let Some((i, j)) = diagonal else {
            return Err(Error::NoDiagonal(sub.iter().map(|&p| vs[p]).collect()));
        };
        let inner = sub[i..=j].to_vec();
        let mut outer = sub[j..].to_vec();
        outer.extend_from_slice(&sub[..=i]);
        stack.push(outer);
        stack.push(inner);
    }
    Ok(DiagramMap {
        disc: TriangulatedDisc::new(len, (0..len).collect(), triangles),
        vertex_map: vs.to_vec(),
        simplicial: true,
        nondegenerate: true,
    })
}

/// Least rotation or reflection of `word`, with `perm[i]` the index in
/// `word` of the `i`-th letter of the result.
fn canonical_with_perm(word: &[Vertex]) -> (Vec<Vertex>, Vec<usize>) {
    let n = word.len();
    let mut best: Option<(Vec<Vertex>, Vec<usize>)> = None;
    for start in 0..n {
        for dir in [1, n - 1] {
            let perm: Vec<usize> = (0..n).map(|i| (start + i * dir) % n).collect();
            let w: Vec<Vertex> = perm.iter().map(|&p| word[p]).collect();
            if best.as_ref().is_none_or(|(b, _)| w < *b) {
                best = Some((w, perm));
            }
        }
    }
    best.unwrap()
}

#[derive(Debug, Clone, Copy)]
enum Step {
    /// The word is the boundary of a single triangle.
    Triangle,
    /// Cone the first edge to the `j`-th letter and fill both sides.
    Split(usize),
    /// Cone the first edge to a new interior vertex with this image.
    Apex(Vertex),
}

#[derive(Debug, Clone, Copy)]
enum Entry {
    Solved { area: usize, step: Step },
    /// No filling of area at most this much exists.
    NoneWithin(usize),
}

/// Minimum-area search over closed edge words in the target.
///
/// A word `w0 w1 ... w(n-1)` (consecutive letters adjacent, letters may
/// repeat) is filled by looking at the triangle on its first edge: the third
/// vertex is either another letter `wj` of the word, which cuts the word in
/// two, or a new interior vertex mapped to a common neighbor of `w0, w1`,
/// which lengthens the word by one. The area of a word of length `n` is at
/// least `n - 2` and has the parity of `n`.
struct Search<'a> {
    x: &'a FlagComplex,
    memo: HashMap<Vec<Vertex>, Entry>,
}

impl Search<'_> {
    fn fill(&mut self, word: &[Vertex], budget: usize) -> Option<usize> {
        let (canon, _) = canonical_with_perm(word);
        self.fill_canonical(canon, budget)
    }

    fn fill_canonical(&mut self, word: Vec<Vertex>, budget: usize) -> Option<usize> {
        let n = word.len();
        if n == 2 {
            return Some(0);
        }
        if n - 2 > budget {
            return None;
        }
        match self.memo.get(&word) {
            Some(&Entry::Solved { area, .. }) => return (area <= budget).then_some(area),
            Some(&Entry::NoneWithin(within)) if within >= budget => return None,
            _ => {}
        }
        let (w0, w1) = (word[0], word[1]);
        if n == 3 && self.x.is_triangle(w0, w1, word[2]) {
            self.memo.insert(word, Entry::Solved { area: 1, step: Step::Triangle });
            return Some(1);
        }

        let mut best: Option<(usize, Step)> = None;
        let mut limit = budget;
        for j in 2..n {
            let c = word[j];
            if c == w0 || c == w1 || !self.x.is_triangle(w0, w1, c) {
                continue;
            }
            let left = &word[1..=j];
            let mut right = word[j..].to_vec();
            right.push(w0);
            let (lb_left, lb_right) = (left.len() - 2, right.len() - 2);
            if 1 + lb_left + lb_right > limit {
                continue;
            }
            let Some(la) = self.fill(left, limit - 1 - lb_right) else {
                continue;
            };
            let Some(ra) = self.fill(&right, limit - 1 - la) else {
                continue;
            };
            let total = 1 + la + ra;
            best = Some((total, Step::Split(j)));
            if total == n - 2 {
                break;
            }
            limit = total - 1;
        }
        if best.is_none_or(|(a, _)| a > n - 2) {
            for c in self.x.common_neighbors(w0, w1) {
                if n - 1 + 1 > limit {
                    break;
                }
                if !self.x.is_triangle(w0, w1, c) {
                    continue;
                }
                let mut child = Vec::with_capacity(n + 1);
                child.extend_from_slice(&[w0, c]);
                child.extend_from_slice(&word[1..]);
                if let Some(ca) = self.fill(&child, limit - 1) {
                    best = Some((1 + ca, Step::Apex(c)));
                    limit = ca;
                }
            }
        }
        match best {
            Some((area, step)) => {
                self.memo.insert(word, Entry::Solved { area, step });
                Some(area)
            }
            None => {
                self.memo.insert(word, Entry::NoneWithin(budget));
                None
            }
        }
    }

    /// Replays solved steps, laying out disc vertices `labels` along `word`.
    fn build(
        &self,
        word: &[Vertex],
        labels: &[Vertex],
        images: &mut Vec<Vertex>,
        triangles: &mut Vec<[Vertex; 3]>,
    ) {
        if word.len() == 2 {
            return;
        }
        let (canon, perm) = canonical_with_perm(word);
        let lab: Vec<Vertex> = perm.iter().map(|&p| labels[p]).collect();
        let Some(&Entry::Solved { step, .. }) = self.memo.get(&canon) else {
            unreachable!("every word on a solved path is memoized");
        };
        match step {
            Step::Triangle => triangles.push([lab[0], lab[1], lab[2]]),
            Step::Split(j) => {
                triangles.push([lab[0], lab[1], lab[j]]);
                self.build(&canon[1..=j], &lab[1..=j], images, triangles);
                let mut w = canon[j..].to_vec();
                w.push(canon[0]);
                let mut l = lab[j..].to_vec();
                l.push(lab[0]);
                self.build(&w, &l, images, triangles);
            }
            Step::Apex(c) => {
                let z = images.len();
                images.push(c);
                triangles.push([lab[0], lab[1], z]);
                let mut w = vec![canon[0], c];
                w.extend_from_slice(&canon[1..]);
                let mut l = vec![lab[0], z];
                l.extend_from_slice(&lab[1..]);
                self.build(&w, &l, images, triangles);
            }
        }
    }
}

/// A filling diagram for `gamma` with the least number of triangles, if one
/// with at most `max_area` triangles exists.
///
/// Discs are simplicial and flag and maps are nondegenerate; a minimum over
/// singular diagrams is always attained by such a disc when `x` is flag.
/// Equal-area candidates are resolved by a fixed search order, so the
/// result is deterministic. The diagram is re-validated before returning.
pub fn find_minimal_filling(x: &FlagComplex, gamma: &Loop, max_area: usize) -> Result<DiagramMap> {
    if max_area < 1 {
        return Err(Error::PreconditionViolated("max_area must be at least 1".into()));
    }
    let gamma = Loop::new(x, gamma.vertices().to_vec())?;
    require_flag(x)?;
    let word = gamma.vertices();
    let len = word.len();
    let mut search = Search { x, memo: HashMap::new() };
    let mut budget = len - 2;
    let area = loop {
        if budget > max_area {
            return Err(Error::BudgetExceeded { max_area });
        }
        if let Some(a) = search.fill(word, budget) {
            break a;
        }
        budget += 2;
    };

    let mut images: Vec<Vertex> = word.to_vec();
    let mut triangles = Vec::with_capacity(area);
    let labels: Vec<Vertex> = (0..len).collect();
    search.build(word, &labels, &mut images, &mut triangles);
    let n = images.len();
    let m = DiagramMap {
        disc: TriangulatedDisc::new(n, labels, triangles),
        vertex_map: images,
        simplicial: true,
        nondegenerate: true,
    };

    let disc_report = validate_disc(&m.disc);
    let flag_report = flagness_check(&m.disc.to_complex());
    let map_report = validate_map(&m, x)?;
    if m.area() != area || !disc_report.passed() || !flag_report.passed() || !map_report.passed() {
        return Err(Error::Invariant(format!(
            "filling of {gamma} failed re-validation: disc {:?}, flag {:?}, map {:?}",
            disc_report.verdict, flag_report.verdict, map_report.verdict
        )));
    }
    debug_assert_eq!(canonical_cycle(&m.filled_loop()), canonical_cycle(word));
    Ok(m)
}
