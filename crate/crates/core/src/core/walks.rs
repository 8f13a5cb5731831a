use super::generators::path_r;
use super::incidence::IncidenceMorphism;
use crate::error::{Error, Result};

/// The three kinds of length-one weak walk.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PathMapKind {
    /// Not incidence-monic: both incidences land on the same one.
    Backstep,
    /// Incidence-monic but not vertex-monic.
    Loop,
    /// Incidence-monic and vertex-monic.
    Adjacency,
}

impl PathMapKind {
    /// Loops count as adjacencies too.
    pub fn is_adjacency(self) -> bool {
        !matches!(self, PathMapKind::Backstep)
    }
}

/// Classifies a map out of the length-one incidence path.
pub fn classify_path_map(f: &IncidenceMorphism) -> Result<PathMapKind> {
    if *f.domain() != path_r(2) {
        return Err(Error::Mismatch("path maps must start at the length-one incidence path".into()));
    }
    Ok(if !f.is_incidence_monic() {
        PathMapKind::Backstep
    } else if !f.is_vertex_monic() {
        PathMapKind::Loop
    } else {
        PathMapKind::Adjacency
    })
}
