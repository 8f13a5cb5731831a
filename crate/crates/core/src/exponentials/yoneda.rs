//! Generator morphisms: the Yoneda maps between unit objects and the
//! "points" of an object picked out by a single element.

use crate::core::generators::{
    edge_unit_head, edge_unit_q, edge_unit_r, edge_unit_tail, incidence_unit_r, vertex_unit_q, vertex_unit_r,
};
use crate::core::{IncidenceHypergraph, IncidenceMorphism, Quiver, QuiverMorphism, SortKind};
use crate::elem::Elem;
use crate::error::{Error, Result};

fn unknown(kind: SortKind, x: &Elem) -> Error {
    Error::UnknownElement { sort: kind.name(), label: x.to_string() }
}

/// `Y(s)`: the vertex unit onto the tail of the edge unit.
pub fn yoneda_s() -> QuiverMorphism {
    let tail = edge_unit_tail();
    QuiverMorphism::build(&vertex_unit_q(), &edge_unit_q(), |_| Some(tail.clone()), |_| None, "Y(s)")
}

/// `Y(t)`: the vertex unit onto the head of the edge unit.
pub fn yoneda_t() -> QuiverMorphism {
    let head = edge_unit_head();
    QuiverMorphism::build(&vertex_unit_q(), &edge_unit_q(), |_| Some(head.clone()), |_| None, "Y(t)")
}

/// `Y(y)`: the vertex unit onto the vertex of the 1-edge.
pub fn yoneda_y() -> IncidenceMorphism {
    IncidenceMorphism::build(&vertex_unit_r(), &incidence_unit_r(), |_| Some(Elem::one()), |_| None, |_| None, "Y(y)")
}

/// `Y(z)`: the edge unit onto the edge of the 1-edge.
pub fn yoneda_z() -> IncidenceMorphism {
    IncidenceMorphism::build(&edge_unit_r(), &incidence_unit_r(), |_| None, |_| Some(Elem::one()), |_| None, "Y(z)")
}

pub fn vertex_point_q(q: &Quiver, v: &Elem) -> Result<QuiverMorphism> {
    if !q.vertices().contains(v) {
        return Err(unknown(SortKind::Vertex, v));
    }
    Ok(QuiverMorphism::build(&vertex_unit_q(), q, |_| Some(v.clone()), |_| None, "vertex point"))
}

pub fn edge_point_q(q: &Quiver, e: &Elem) -> Result<QuiverMorphism> {
    let (s, t) = match (q.source_of(e), q.target_of(e)) {
        (Some(s), Some(t)) => (s.clone(), t.clone()),
        _ => return Err(unknown(SortKind::Edge, e)),
    };
    let tail = edge_unit_tail();
    Ok(QuiverMorphism::build(
        &edge_unit_q(),
        q,
        |x| Some(if *x == tail { s.clone() } else { t.clone() }),
        |_| Some(e.clone()),
        "edge point",
    ))
}

pub fn vertex_point_r(g: &IncidenceHypergraph, v: &Elem) -> Result<IncidenceMorphism> {
    if !g.vertices().contains(v) {
        return Err(unknown(SortKind::Vertex, v));
    }
    Ok(IncidenceMorphism::build(&vertex_unit_r(), g, |_| Some(v.clone()), |_| None, |_| None, "vertex point"))
}

pub fn edge_point_r(g: &IncidenceHypergraph, e: &Elem) -> Result<IncidenceMorphism> {
    if !g.edges().contains(e) {
        return Err(unknown(SortKind::Edge, e));
    }
    Ok(IncidenceMorphism::build(&edge_unit_r(), g, |_| None, |_| Some(e.clone()), |_| None, "edge point"))
}

/// The map from the 1-edge picking out incidence `i` with its port and attachment.
pub fn incidence_point_r(g: &IncidenceHypergraph, i: &Elem) -> Result<IncidenceMorphism> {
    let (p, a) = match (g.port_of(i), g.attachment_of(i)) {
        (Some(p), Some(a)) => (p.clone(), a.clone()),
        _ => return Err(unknown(SortKind::Incidence, i)),
    };
    Ok(IncidenceMorphism::build(
        &incidence_unit_r(),
        g,
        |_| Some(p.clone()),
        |_| Some(a.clone()),
        |_| Some(i.clone()),
        "incidence point",
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::generators::path_r;

    #[test]
    fn yoneda_maps_are_morphisms() {
        assert_ne!(yoneda_s(), yoneda_t());
        assert!(yoneda_y().validate().is_ok());
        assert!(yoneda_z().validate().is_ok());
    }

    #[test]
    fn incidence_point_lands_on_its_ends() {
        let p = path_r(2);
        let i0 = p.incidences().elem(0).clone();
        let m = incidence_point_r(&p, &i0).unwrap();
        assert_eq!(m.vertex_image(&Elem::one()).as_ref(), p.port_of(&i0));
        assert!(incidence_point_r(&p, &Elem::atom("nope")).is_err());
    }
}
