//! Verdicts with re-checkable witnesses, shared by every checker.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::complex::{Loop, Vertex};
use crate::curvature::Largeness;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Condition {
    Flag,
    KLargeLocal,
    FiveNine,
    MLocation,
    Disc,
    DiagramMap,
    MinimalDiagram,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Condition::Flag => "flag",
            Condition::KLargeLocal => "k-large-local",
            Condition::FiveNine => "five-nine",
            Condition::MLocation => "m-location",
            Condition::Disc => "disc",
            Condition::DiagramMap => "diagram-map",
            Condition::MinimalDiagram => "minimal-diagram",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Undetermined,
}

impl Verdict {
    /// CLI convention: 0 pass, 1 fail, 2 undetermined.
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
            Verdict::Undetermined => 2,
        }
    }
}

/// The three clauses of the 5/9-condition, named by the largeness of the
/// constrained vertex and the bound on its neighbors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Clause {
    #[serde(rename = "5/9")]
    FiveNine,
    #[serde(rename = "6/8")]
    SixEight,
    #[serde(rename = "7/7")]
    SevenSeven,
}

impl Clause {
    pub const ALL: [Clause; 3] = [Clause::FiveNine, Clause::SixEight, Clause::SevenSeven];

    /// Largeness of the vertex the clause constrains.
    pub fn trigger(self) -> u32 {
        match self {
            Clause::FiveNine => 4,
            Clause::SixEight => 5,
            Clause::SevenSeven => 6,
        }
    }

    /// Minimum largeness required of each neighbor.
    pub fn neighbor_bound(self) -> u32 {
        match self {
            Clause::FiveNine => 9,
            Clause::SixEight => 8,
            Clause::SevenSeven => 7,
        }
    }

    pub fn for_trigger(largeness: Largeness) -> Option<Clause> {
        Clause::ALL
            .into_iter()
            .find(|c| largeness == Largeness::Finite(c.trigger()))
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.trigger() + 1, self.neighbor_bound())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Witness {
    pub vertices: Vec<Vertex>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub loops: Vec<Loop>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub clause: Option<Clause>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Witness {
    pub fn vertices(vertices: Vec<Vertex>) -> Self {
        Witness { vertices, loops: Vec::new(), clause: None, note: None }
    }

    pub fn with_loop(mut self, gamma: Loop) -> Self {
        self.loops.push(gamma);
        self
    }

    pub fn with_clause(mut self, clause: Clause) -> Self {
        self.clause = Some(clause);
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stats {
    pub largeness_histogram: BTreeMap<Largeness, usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionReport {
    pub condition: Condition,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parameter: Option<usize>,
    pub verdict: Verdict,
    pub witnesses: Vec<Witness>,
    /// Loops whose triviality could not be certified either way.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub undetermined: Vec<Loop>,
    pub stats: Stats,
}

impl ConditionReport {
    pub fn new(condition: Condition) -> Self {
        ConditionReport {
            condition,
            parameter: None,
            verdict: Verdict::Pass,
            witnesses: Vec::new(),
            undetermined: Vec::new(),
            stats: Stats::default(),
        }
    }

    pub fn with_parameter(mut self, parameter: usize) -> Self {
        self.parameter = Some(parameter);
        self
    }

    pub fn push_witness(&mut self, w: Witness) {
        self.witnesses.push(w);
    }

    pub fn push_undetermined(&mut self, gamma: Loop) {
        self.undetermined.push(gamma);
    }

    /// Sorts witnesses so the canonically least comes first and derives the
    /// verdict: any witness fails, otherwise any undetermined loop leaves the
    /// report undetermined.
    pub fn finish(mut self) -> Self {
        self.witnesses.sort();
        self.witnesses.dedup();
        self.undetermined.sort();
        self.undetermined.dedup();
        self.verdict = if !self.witnesses.is_empty() {
            Verdict::Fail
        } else if !self.undetermined.is_empty() {
            Verdict::Undetermined
        } else {
            Verdict::Pass
        };
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn failed(&self) -> bool {
        self.verdict == Verdict::Fail
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}
