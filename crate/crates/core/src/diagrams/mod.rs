//! Triangulated discs, filling maps into a complex, and searches for them.

mod disc;
mod fill;
mod map;
mod verify;

pub use disc::{validate_disc, TriangulatedDisc};
pub use fill::{fill_without_interior, find_minimal_filling};
pub use map::{validate_map, DiagramDocument, DiagramMap, DiscDocument, MapFlags};
pub use verify::{disc_is_8_located, verify_minimal_diagram};
