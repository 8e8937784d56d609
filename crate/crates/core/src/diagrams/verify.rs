use super::disc::{validate_disc, TriangulatedDisc};
use super::map::{validate_map, DiagramMap};
use crate::complex::{flagness_check, FlagComplex};
use crate::curvature::{check_five_nine, check_m_location, Triviality};
use crate::error::{Error, Result};
use crate::report::{Condition, ConditionReport, Witness};

/// The disc as a flag complex, after checking it is a disc whose 3-cliques
/// all bound faces.
fn disc_complex(d: &TriangulatedDisc) -> Result<FlagComplex> {
    let report = validate_disc(d);
    if let Some(w) = report.witnesses.first() {
        return Err(Error::NotADisc(w.note.clone().unwrap_or_default()));
    }
    let x = d.to_complex();
    let audit = flagness_check(&x);
    if let Some(w) = audit.witnesses.first() {
        return Err(Error::NotFlagDisc([w.vertices[0], w.vertices[1], w.vertices[2]]));
    }
    Ok(x)
}

/// A minimal diagram over a 5/9 target must be simplicial, nondegenerate,
/// map its boundary isomorphically, and its disc must satisfy the
/// 5/9-condition.
pub fn verify_minimal_diagram(m: &DiagramMap, x: &FlagComplex) -> Result<ConditionReport> {
    let disc = disc_complex(&m.disc)?;
    let flags = m.compute_flags(x)?;
    let mut report = ConditionReport::new(Condition::MinimalDiagram);
    if !flags.simplicial {
        report.push_witness(Witness::vertices(Vec::new()).with_note("map is not simplicial"));
    }
    if !flags.nondegenerate {
        let collapsed: Vec<_> = m
            .disc
            .edges()
            .into_iter()
            .filter(|&(a, b)| m.vertex_map[a] == m.vertex_map[b])
            .flat_map(|(a, b)| [a, b])
            .collect();
        report.push_witness(Witness::vertices(collapsed).with_note("map is degenerate"));
    }
    let map_report = validate_map(m, x)?;
    for w in map_report.witnesses {
        report.push_witness(w);
    }
    for w in check_five_nine(&disc)?.witnesses {
        report.push_witness(w);
    }
    Ok(report.finish())
}

/// Every full loop of length at most 8 in the disc lies in a 1-ball.
pub fn disc_is_8_located(d: &TriangulatedDisc) -> Result<ConditionReport> {
    let x = disc_complex(d)?;
    check_m_location(&x, 8, Triviality::All)
}
