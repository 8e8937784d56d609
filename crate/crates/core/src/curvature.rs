//! Largeness of links and the local curvature conditions built on it:
//! local k-largeness, the 5/9-condition and m-location.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::complex::{
    enumerate_full_cycles, require_flag, shortest_full_cycle, shortest_full_cycle_len, FlagComplex,
    LinkView, Loop, Simplex, Vertex,
};
use crate::diagrams::find_minimal_filling;
use crate::error::{Error, Result};
use crate::report::{Clause, Condition, ConditionReport, Witness};

/// Length of the shortest full cycle of a complex, infinite when there is
/// none. A complex is k-large exactly when its largeness is at least `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Largeness {
    Finite(u32),
    Infinite,
}

impl Largeness {
    pub fn is_at_least(self, k: Largeness) -> bool {
        self >= k
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Largeness::Finite(n) => Some(n),
            Largeness::Infinite => None,
        }
    }
}

impl From<u32> for Largeness {
    fn from(n: u32) -> Self {
        Largeness::Finite(n)
    }
}

impl fmt::Display for Largeness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Largeness::Finite(n) => write!(f, "{n}"),
            Largeness::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for Largeness {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "inf" | "infinite" | "∞" => Ok(Largeness::Infinite),
            _ => s
                .parse()
                .map(Largeness::Finite)
                .map_err(|e| Error::Parse(format!("largeness {s:?}: {e}"))),
        }
    }
}

impl Serialize for Largeness {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Largeness::Finite(n) => s.serialize_u32(*n),
            Largeness::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Largeness {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct LargenessVisitor;
        impl Visitor<'_> for LargenessVisitor {
            type Value = Largeness;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a natural number or \"inf\"")
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Largeness, E> {
                u32::try_from(v).map(Largeness::Finite).map_err(E::custom)
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Largeness, E> {
                v.parse().map_err(E::custom)
            }
        }
        d.deserialize_any(LargenessVisitor)
    }
}

pub fn largeness_of_complex(l: &FlagComplex) -> Largeness {
    match shortest_full_cycle_len(l) {
        Some(n) => Largeness::Finite(n as u32),
        None => Largeness::Infinite,
    }
}

pub fn largeness_of_link(link: &LinkView) -> Largeness {
    largeness_of_complex(link.complex())
}

pub fn vertex_largeness(x: &FlagComplex, v: Vertex) -> Result<Largeness> {
    Ok(largeness_of_link(&x.link(Simplex::Vertex(v))?))
}

/// Largeness of every vertex, computed once per link.
pub fn all_vertex_largeness(x: &FlagComplex) -> Vec<Largeness> {
    x.vertices()
        .into_par_iter()
        .map(|v| vertex_largeness(x, v).expect("vertex in range"))
        .collect()
}

/// The canonically least shortest full cycle of the link of `v`, in ambient
/// vertex ids.
pub fn shortest_link_cycle(x: &FlagComplex, v: Vertex) -> Result<Option<Loop>> {
    let link = x.link(Simplex::Vertex(v))?;
    Ok(shortest_full_cycle(link.complex()).map(|(_, c)| {
        // origin ids are increasing, so the canonical form survives the relabeling
        Loop::from_trusted(c.vertices().iter().map(|&u| link.to_ambient(u)).collect())
    }))
}

fn histogram(report: &mut ConditionReport, values: &[Largeness]) {
    for &l in values {
        *report.stats.largeness_histogram.entry(l).or_default() += 1;
    }
}

/// Every link must be k-large. Failing vertices are witnessed by their
/// shortest full link cycle.
pub fn check_k_large_local(x: &FlagComplex, k: u32) -> ConditionReport {
    let values = all_vertex_largeness(x);
    check_k_large_local_with(x, k, &values)
}

fn check_k_large_local_with(x: &FlagComplex, k: u32, values: &[Largeness]) -> ConditionReport {
    let mut report = ConditionReport::new(Condition::KLargeLocal).with_parameter(k as usize);
    histogram(&mut report, values);
    for v in x.vertices() {
        if values[v] < Largeness::Finite(k) {
            let cycle = shortest_link_cycle(x, v)
                .expect("vertex in range")
                .expect("finite largeness has a witness cycle");
            report.push_witness(Witness::vertices(vec![v]).with_loop(cycle));
        }
    }
    report.finish()
}

/// The 5/9-condition: a vertex of largeness exactly 4, 5 or 6 forces all of
/// its neighbors to have largeness at least 9, 8 or 7 respectively.
///
/// A witness `[v, w]` names the constrained vertex `v`, the offending
/// neighbor `w`, the clause, and the shortest full link cycles of both.
pub fn check_five_nine(x: &FlagComplex) -> Result<ConditionReport> {
    require_flag(x)?;
    let values = all_vertex_largeness(x);
    Ok(check_five_nine_with(x, &values))
}

pub(crate) fn check_five_nine_with(x: &FlagComplex, values: &[Largeness]) -> ConditionReport {
    let mut report = ConditionReport::new(Condition::FiveNine);
    histogram(&mut report, values);
    for v in x.vertices() {
        let Some(clause) = Clause::for_trigger(values[v]) else {
            continue;
        };
        for &w in x.neighbors(v) {
            if values[w] < Largeness::Finite(clause.neighbor_bound()) {
                let own = shortest_link_cycle(x, v).unwrap().unwrap();
                let theirs = shortest_link_cycle(x, w).unwrap().unwrap();
                report.push_witness(
                    Witness::vertices(vec![v, w])
                        .with_clause(clause)
                        .with_loop(own)
                        .with_loop(theirs),
                );
            }
        }
    }
    report.finish()
}

/// Adjacent pairs of non-consecutive vertices of `gamma`.
pub fn find_diagonals(x: &FlagComplex, gamma: &[Vertex]) -> Result<Vec<(Vertex, Vertex)>> {
    let gamma = Loop::new(x, gamma.to_vec())?;
    Ok(gamma.diagonals(x))
}

/// `rim` is a full cycle and `hub` is adjacent to each of its vertices.
pub fn is_wheel(x: &FlagComplex, hub: Vertex, rim: &[Vertex]) -> Result<bool> {
    x.check_vertex(hub)?;
    let rim = Loop::new(x, rim.to_vec())?;
    Ok(x.is_full_loop(&rim) && rim.vertices().iter().all(|&v| x.is_adjacent(hub, v)))
}

/// Evidence that a loop is homotopically trivial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Triviality {
    /// Every loop is trivial; requires `simply_connected: true` metadata.
    All,
    /// A loop is trivial when a filling diagram of at most this many
    /// triangles is found.
    Bounded { max_area: usize },
}

/// A vertex whose closed neighborhood contains every vertex of `gamma`,
/// i.e. `gamma` lies in its 1-ball. The least such vertex is returned.
pub fn covering_center(x: &FlagComplex, gamma: &Loop) -> Option<Vertex> {
    let first = gamma.vertices()[0];
    std::iter::once(first)
        .chain(x.neighbors(first).iter().copied())
        .filter(|&c| gamma.vertices().iter().all(|&v| v == c || x.is_adjacent(c, v)))
        .min()
}

/// m-location: every full, homotopically trivial loop of length at most `m`
/// lies in some 1-ball.
///
/// Uncovered loops certified trivial are witnesses; uncovered loops the
/// bounded search cannot fill are reported as undetermined.
pub fn check_m_location(x: &FlagComplex, m: usize, triviality: Triviality) -> Result<ConditionReport> {
    require_flag(x)?;
    if triviality == Triviality::All && x.simply_connected() != Some(true) {
        return Err(Error::MissingTrivialityEvidence);
    }
    let loops = enumerate_full_cycles(x, m);
    let outcomes: Vec<Result<(Loop, Option<bool>)>> = loops
        .into_par_iter()
        .filter(|gamma| covering_center(x, gamma).is_none())
        .map(|gamma| match triviality {
            Triviality::All => Ok((gamma, Some(true))),
            Triviality::Bounded { max_area } => match find_minimal_filling(x, &gamma, max_area) {
                Ok(_) => Ok((gamma, Some(true))),
                Err(Error::BudgetExceeded { .. }) => Ok((gamma, None)),
                Err(e) => Err(e),
            },
        })
        .collect();

    let mut report = ConditionReport::new(Condition::MLocation).with_parameter(m);
    for outcome in outcomes {
        let (gamma, trivial) = outcome?;
        match trivial {
            Some(true) => report.push_witness(
                Witness::vertices(gamma.vertices().to_vec())
                    .with_loop(gamma)
                    .with_note("full loop in no 1-ball"),
            ),
            _ => report.push_undetermined(gamma),
        }
    }
    Ok(report.finish())
}
