//! Local curvature conditions on flag simplicial complexes: largeness of
//! links, the 5/9-condition, m-location, filling diagrams and the four-point
//! hyperbolicity constant.

pub mod complex;
pub mod curvature;
pub mod diagrams;
pub mod error;
pub mod generators;
pub mod hyperbolicity;
pub mod report;

pub use complex::{flagness_check, FlagComplex, LinkView, Loop, Simplex, SubComplex, Vertex};
pub use curvature::{
    check_five_nine, check_k_large_local, check_m_location, largeness_of_complex,
    largeness_of_link, vertex_largeness, Largeness, Triviality,
};
pub use diagrams::{
    disc_is_8_located, fill_without_interior, find_minimal_filling, validate_disc, validate_map,
    verify_minimal_diagram, DiagramMap, TriangulatedDisc,
};
pub use error::{Error, Result};
pub use generators::{GeneratorSpec, Platonic};
pub use hyperbolicity::{four_point_delta, DeltaMethod, DeltaResult, HalfInteger};
pub use report::{Clause, Condition, ConditionReport, Verdict, Witness};
