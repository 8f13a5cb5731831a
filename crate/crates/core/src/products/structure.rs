//! Unitors, commutators, associators and anti-unitors for every product.

use super::{box_h, box_q, box_r, laplacian_product};
use crate::core::generators::{edge_unit_r, vertex_unit_h, vertex_unit_q, vertex_unit_r};
use crate::core::{
    HypergraphMorphism, IncidenceHypergraph, IncidenceMorphism, Object, Quiver, QuiverMorphism, SetSystemHypergraph,
};
use crate::elem::Elem;
use crate::error::{Error, Result};

fn is_one(x: &Elem) -> bool {
    *x == Elem::one()
}

/// `((v,w),u) -> (v,(w,u))`
fn assoc_vertex(x: &Elem) -> Option<Elem> {
    let (vw, u) = x.as_pair()?;
    let (v, w) = vw.as_pair()?;
    Some(Elem::pair(v.clone(), Elem::pair(w.clone(), u.clone())))
}

/// Edges (and incidences) of `(A □ B) □ C -> A □ (B □ C)`.
fn assoc_tagged(x: &Elem) -> Option<Elem> {
    let t = Elem::tagged;
    match x.as_tagged()? {
        (1, inner, u) => match inner.as_tagged()? {
            (1, e, w) => Some(t(1, e.clone(), Elem::pair(w.clone(), u.clone()))),
            (2, v, f) => Some(t(2, v.clone(), t(1, f.clone(), u.clone()))),
            _ => None,
        },
        (2, vw, g) => {
            let (v, w) = vw.as_pair()?;
            Some(t(2, v.clone(), t(2, w.clone(), g.clone())))
        }
        _ => None,
    }
}

fn swap_pair(x: &Elem) -> Option<Elem> {
    let (v, w) = x.as_pair()?;
    Some(Elem::pair(w.clone(), v.clone()))
}

fn swap_tagged(total: u8) -> impl Fn(&Elem) -> Option<Elem> {
    move |x| {
        let (n, a, b) = x.as_tagged()?;
        Some(Elem::tagged(total - n, b.clone(), a.clone()))
    }
}

fn right_unit_vertex(x: &Elem) -> Option<Elem> {
    let (v, one) = x.as_pair()?;
    is_one(one).then(|| v.clone())
}

fn left_unit_vertex(x: &Elem) -> Option<Elem> {
    let (one, v) = x.as_pair()?;
    is_one(one).then(|| v.clone())
}

/// `(tag, x, 1) -> x`
fn right_tag(tag: u8) -> impl Fn(&Elem) -> Option<Elem> {
    move |x| match x.as_tagged()? {
        (n, v, one) if n == tag && is_one(one) => Some(v.clone()),
        _ => None,
    }
}

/// `(tag, 1, x) -> x`
fn left_tag(tag: u8) -> impl Fn(&Elem) -> Option<Elem> {
    move |x| match x.as_tagged()? {
        (n, one, v) if n == tag && is_one(one) => Some(v.clone()),
        _ => None,
    }
}

// -- quivers ---------------------------------------------------------------

pub fn quiver_right_unitor(q: &Quiver) -> QuiverMorphism {
    QuiverMorphism::build(&box_q(q, &vertex_unit_q()), q, right_unit_vertex, right_tag(1), "quiver right unitor")
}

pub fn quiver_left_unitor(q: &Quiver) -> QuiverMorphism {
    QuiverMorphism::build(&box_q(&vertex_unit_q(), q), q, left_unit_vertex, left_tag(2), "quiver left unitor")
}

pub fn quiver_commutator(q: &Quiver, p: &Quiver) -> QuiverMorphism {
    QuiverMorphism::build(&box_q(q, p), &box_q(p, q), swap_pair, swap_tagged(3), "quiver commutator")
}

pub fn quiver_associator(q: &Quiver, p: &Quiver, m: &Quiver) -> QuiverMorphism {
    QuiverMorphism::build(
        &box_q(&box_q(q, p), m),
        &box_q(q, &box_q(p, m)),
        assoc_vertex,
        assoc_tagged,
        "quiver associator",
    )
}

// -- set systems -------------------------------------------------------------

pub fn hypergraph_right_unitor(g: &SetSystemHypergraph) -> HypergraphMorphism {
    HypergraphMorphism::build(&box_h(g, &vertex_unit_h()), g, right_unit_vertex, right_tag(1), "set-system right unitor")
}

pub fn hypergraph_left_unitor(g: &SetSystemHypergraph) -> HypergraphMorphism {
    HypergraphMorphism::build(&box_h(&vertex_unit_h(), g), g, left_unit_vertex, left_tag(2), "set-system left unitor")
}

pub fn hypergraph_commutator(g: &SetSystemHypergraph, h: &SetSystemHypergraph) -> HypergraphMorphism {
    HypergraphMorphism::build(&box_h(g, h), &box_h(h, g), swap_pair, swap_tagged(3), "set-system commutator")
}

pub fn hypergraph_associator(g: &SetSystemHypergraph, h: &SetSystemHypergraph, k: &SetSystemHypergraph) -> HypergraphMorphism {
    HypergraphMorphism::build(
        &box_h(&box_h(g, h), k),
        &box_h(g, &box_h(h, k)),
        assoc_vertex,
        assoc_tagged,
        "set-system associator",
    )
}

// -- incidence box -----------------------------------------------------------

pub fn box_right_unitor(g: &IncidenceHypergraph) -> IncidenceMorphism {
    IncidenceMorphism::build(
        &box_r(g, &vertex_unit_r()),
        g,
        right_unit_vertex,
        right_tag(1),
        right_tag(1),
        "incidence box right unitor",
    )
}

pub fn box_left_unitor(g: &IncidenceHypergraph) -> IncidenceMorphism {
    IncidenceMorphism::build(
        &box_r(&vertex_unit_r(), g),
        g,
        left_unit_vertex,
        left_tag(2),
        left_tag(2),
        "incidence box left unitor",
    )
}

pub fn box_commutator(g: &IncidenceHypergraph, h: &IncidenceHypergraph) -> IncidenceMorphism {
    IncidenceMorphism::build(
        &box_r(g, h),
        &box_r(h, g),
        swap_pair,
        swap_tagged(3),
        swap_tagged(3),
        "incidence box commutator",
    )
}

pub fn box_associator(g: &IncidenceHypergraph, h: &IncidenceHypergraph, k: &IncidenceHypergraph) -> IncidenceMorphism {
    IncidenceMorphism::build(
        &box_r(&box_r(g, h), k),
        &box_r(g, &box_r(h, k)),
        assoc_vertex,
        assoc_tagged,
        assoc_tagged,
        "incidence box associator",
    )
}

// -- Laplacian product -------------------------------------------------------

/// `G ■ V⋄({1}) -> G`.
pub fn laplacian_right_unitor(g: &IncidenceHypergraph) -> IncidenceMorphism {
    IncidenceMorphism::build(
        &laplacian_product(g, &vertex_unit_r()),
        g,
        right_tag(1),
        right_tag(2),
        right_tag(1),
        "Laplacian right unitor",
    )
}

/// `V⋄({1}) ■ G -> G`.
pub fn laplacian_left_unitor(g: &IncidenceHypergraph) -> IncidenceMorphism {
    IncidenceMorphism::build(
        &laplacian_product(&vertex_unit_r(), g),
        g,
        left_tag(1),
        left_tag(3),
        left_tag(4),
        "Laplacian left unitor",
    )
}

/// `G ■ H -> H ■ G`.
pub fn laplacian_commutator(g: &IncidenceHypergraph, h: &IncidenceHypergraph) -> IncidenceMorphism {
    IncidenceMorphism::build(
        &laplacian_product(g, h),
        &laplacian_product(h, g),
        swap_tagged_keep,
        swap_tagged(5),
        swap_tagged(5),
        "Laplacian commutator",
    )
}

fn swap_tagged_keep(x: &Elem) -> Option<Elem> {
    let (n, a, b) = x.as_tagged()?;
    Some(Elem::tagged(n, b.clone(), a.clone()))
}

fn lap_assoc_vertex(x: &Elem) -> Option<Elem> {
    let t = Elem::tagged;
    let (n, inner, z) = x.as_tagged()?;
    let (m, a, b) = inner.as_tagged()?;
    let (a, b, z) = (a.clone(), b.clone(), z.clone());
    match (n, m) {
        (1, 1) => Some(t(1, a, t(1, b, z))),
        (1, 4) => Some(t(4, a, t(2, b, z))),
        (4, 2) => Some(t(4, a, t(3, b, z))),
        (4, 3) => Some(t(1, a, t(4, b, z))),
        _ => None,
    }
}

fn lap_assoc_edge(x: &Elem) -> Option<Elem> {
    let t = Elem::tagged;
    let (n, inner, z) = x.as_tagged()?;
    let (m, a, b) = inner.as_tagged()?;
    let (a, b, z) = (a.clone(), b.clone(), z.clone());
    match (n, m) {
        (2, 2) => Some(t(2, a, t(1, b, z))),
        (2, 3) => Some(t(3, a, t(2, b, z))),
        (3, 1) => Some(t(3, a, t(3, b, z))),
        (3, 4) => Some(t(2, a, t(4, b, z))),
        _ => None,
    }
}

fn lap_assoc_incidence(x: &Elem) -> Option<Elem> {
    let t = Elem::tagged;
    let (n, inner, z) = x.as_tagged()?;
    let (m, a, b) = inner.as_tagged()?;
    let (a, b, z) = (a.clone(), b.clone(), z.clone());
    match (n, m) {
        (1, 1) => Some(t(1, a, t(1, b, z))),
        (1, 2) => Some(t(2, a, t(2, b, z))),
        (1, 3) => Some(t(3, a, t(1, b, z))),
        (1, 4) => Some(t(4, a, t(1, b, z))),
        (2, 1) => Some(t(2, a, t(3, b, z))),
        (2, 2) => Some(t(1, a, t(4, b, z))),
        (2, 3) => Some(t(3, a, t(2, b, z))),
        (2, 4) => Some(t(4, a, t(2, b, z))),
        (3, 2) => Some(t(3, a, t(4, b, z))),
        (3, 3) => Some(t(4, a, t(3, b, z))),
        (4, 1) => Some(t(4, a, t(4, b, z))),
        (4, 4) => Some(t(3, a, t(3, b, z))),
        _ => None,
    }
}

/// `(G ■ H) ■ K -> G ■ (H ■ K)`.
pub fn laplacian_associator(g: &IncidenceHypergraph, h: &IncidenceHypergraph, k: &IncidenceHypergraph) -> IncidenceMorphism {
    IncidenceMorphism::build(
        &laplacian_product(&laplacian_product(g, h), k),
        &laplacian_product(g, &laplacian_product(h, k)),
        lap_assoc_vertex,
        lap_assoc_edge,
        lap_assoc_incidence,
        "Laplacian associator",
    )
}

/// `G ■ E⋄({1}) -> G#`.
pub fn right_anti_unitor(g: &IncidenceHypergraph) -> IncidenceMorphism {
    IncidenceMorphism::build(
        &laplacian_product(g, &edge_unit_r()),
        &g.dual(),
        right_tag(4),
        right_tag(3),
        right_tag(2),
        "right anti-unitor",
    )
}

/// `E⋄({1}) ■ G -> G#`.
pub fn left_anti_unitor(g: &IncidenceHypergraph) -> IncidenceMorphism {
    IncidenceMorphism::build(
        &laplacian_product(&edge_unit_r(), g),
        &g.dual(),
        left_tag(4),
        left_tag(2),
        left_tag(3),
        "left anti-unitor",
    )
}

/// A morphism of any of the three categories.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyMorphism {
    Quiver(QuiverMorphism),
    Hypergraph(HypergraphMorphism),
    Incidence(IncidenceMorphism),
}

impl AnyMorphism {
    pub fn is_iso(&self) -> bool {
        match self {
            AnyMorphism::Quiver(m) => m.inverse().is_some(),
            AnyMorphism::Hypergraph(m) => m.inverse().is_some(),
            AnyMorphism::Incidence(m) => m.inverse().is_some(),
        }
    }

    pub fn to_elem(&self) -> Elem {
        match self {
            AnyMorphism::Quiver(m) => m.to_elem(),
            AnyMorphism::Hypergraph(m) => m.to_elem(),
            AnyMorphism::Incidence(m) => m.to_elem(),
        }
    }
}

/// Every structure-map name accepted by [`structure_map`], with its arity.
pub const STRUCTURE_MAPS: &[(&str, usize)] = &[
    ("quiver_right_unitor", 1),
    ("quiver_left_unitor", 1),
    ("quiver_commutator", 2),
    ("quiver_associator", 3),
    ("hypergraph_right_unitor", 1),
    ("hypergraph_left_unitor", 1),
    ("hypergraph_commutator", 2),
    ("hypergraph_associator", 3),
    ("box_right_unitor", 1),
    ("box_left_unitor", 1),
    ("box_commutator", 2),
    ("box_associator", 3),
    ("laplacian_right_unitor", 1),
    ("laplacian_left_unitor", 1),
    ("laplacian_commutator", 2),
    ("laplacian_associator", 3),
    ("right_anti_unitor", 1),
    ("left_anti_unitor", 1),
];

/// Builds a structure map by name.
pub fn structure_map(name: &str, objects: &[Object]) -> Result<AnyMorphism> {
    let arity = STRUCTURE_MAPS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, a)| *a)
        .ok_or_else(|| Error::Input(format!("unknown structure map `{name}`")))?;
    if objects.len() != arity {
        return Err(Error::Input(format!("`{name}` takes {arity} objects, got {}", objects.len())));
    }
    let wrong = || Error::Input(format!("`{name}` applied to objects of the wrong category"));
    let quivers = || -> Result<Vec<&Quiver>> {
        objects.iter().map(|o| if let Object::Quiver(q) = o { Ok(q) } else { Err(wrong()) }).collect()
    };
    let hypers = || -> Result<Vec<&SetSystemHypergraph>> {
        objects.iter().map(|o| if let Object::Hypergraph(h) = o { Ok(h) } else { Err(wrong()) }).collect()
    };
    let incs = || -> Result<Vec<&IncidenceHypergraph>> {
        objects.iter().map(|o| if let Object::Incidence(g) = o { Ok(g) } else { Err(wrong()) }).collect()
    };
    Ok(match name {
        "quiver_right_unitor" => AnyMorphism::Quiver(quiver_right_unitor(quivers()?[0])),
        "quiver_left_unitor" => AnyMorphism::Quiver(quiver_left_unitor(quivers()?[0])),
        "quiver_commutator" => {
            let q = quivers()?;
            AnyMorphism::Quiver(quiver_commutator(q[0], q[1]))
        }
        "quiver_associator" => {
            let q = quivers()?;
            AnyMorphism::Quiver(quiver_associator(q[0], q[1], q[2]))
        }
        "hypergraph_right_unitor" => AnyMorphism::Hypergraph(hypergraph_right_unitor(hypers()?[0])),
        "hypergraph_left_unitor" => AnyMorphism::Hypergraph(hypergraph_left_unitor(hypers()?[0])),
        "hypergraph_commutator" => {
            let h = hypers()?;
            AnyMorphism::Hypergraph(hypergraph_commutator(h[0], h[1]))
        }
        "hypergraph_associator" => {
            let h = hypers()?;
            AnyMorphism::Hypergraph(hypergraph_associator(h[0], h[1], h[2]))
        }
        _ => {
            let g = incs()?;
            AnyMorphism::Incidence(match name {
                "box_right_unitor" => box_right_unitor(g[0]),
                "box_left_unitor" => box_left_unitor(g[0]),
                "box_commutator" => box_commutator(g[0], g[1]),
                "box_associator" => box_associator(g[0], g[1], g[2]),
                "laplacian_right_unitor" => laplacian_right_unitor(g[0]),
                "laplacian_left_unitor" => laplacian_left_unitor(g[0]),
                "laplacian_commutator" => laplacian_commutator(g[0], g[1]),
                "laplacian_associator" => laplacian_associator(g[0], g[1], g[2]),
                "right_anti_unitor" => right_anti_unitor(g[0]),
                "left_anti_unitor" => left_anti_unitor(g[0]),
                _ => unreachable!("names are checked against the table"),
            })
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::generators::*;

    #[test]
    fn laplacian_commutator_flips_incidence_tags() {
        let g = path_r(2);
        let h = path_r(1);
        let c = laplacian_commutator(&g, &h);
        let x = Elem::tagged(1, "i0".into(), "v0".into());
        assert_eq!(c.incidence_image(&x), Some(Elem::tagged(4, "v0".into(), "i0".into())));
    }

    #[test]
    fn right_anti_unitor_sends_rung_incidences_home() {
        let g = path_r(3);
        let r = right_anti_unitor(&g);
        assert!(r.is_iso());
        let x = Elem::tagged(2, "i1".into(), Elem::one());
        assert_eq!(r.incidence_image(&x), Some(Elem::atom("i1")));
    }

    #[test]
    fn every_structure_map_is_invertible() {
        let (a, b, c) = (path_r(2), cycle_r(2), path_r(1));
        for m in [
            laplacian_associator(&a, &b, &c),
            laplacian_associator(&c, &a, &b),
            box_associator(&a, &b, &c),
            laplacian_left_unitor(&b),
            laplacian_right_unitor(&b),
            left_anti_unitor(&a),
        ] {
            assert!(m.inverse().is_some());
        }
        assert!(quiver_associator(&path_q(1), &cycle_q(2), &path_q(2)).inverse().is_some());
        assert!(hypergraph_associator(&path_h(1), &n_edge_h(3), &cycle_h(1)).inverse().is_some());
    }

    #[test]
    fn dispatch_checks_arity() {
        let g = Object::Incidence(path_r(1));
        assert!(structure_map("laplacian_commutator", &[g.clone()]).is_err());
        assert!(structure_map("quiver_right_unitor", &[g.clone()]).is_err());
        assert!(structure_map("laplacian_commutator", &[g.clone(), g]).unwrap().is_iso());
    }
}
