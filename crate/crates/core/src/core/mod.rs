//! Objects and morphisms of the three categories.

pub mod generators;
mod hypergraph;
mod incidence;
mod morphism;
mod orientation;
mod quiver;
mod sort;
mod walks;

pub use hypergraph::{HypergraphMorphism, SetSystemHypergraph};
pub use incidence::{IncidenceHypergraph, IncidenceMorphism};
pub use morphism::Morphism;
pub use orientation::Orientation;
pub use quiver::{Quiver, QuiverMorphism};
pub use sort::{Sort, SortKind, Violation};
pub use generators::Object;
pub use walks::{classify_path_map, PathMapKind};


