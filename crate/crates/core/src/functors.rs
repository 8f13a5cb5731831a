//! Functors between the categories and their monoidal comparison maps.
//!
//! `U` undirects, `D⃗` orients both ways, `N` includes multigraphs,
//! `Del` drops edges of size outside {1,2}, `𝕀` forms incidences and
//! `Υ⋄` builds the bipartite incidence quiver.

use crate::core::{
    HypergraphMorphism, IncidenceHypergraph, IncidenceMorphism, Quiver, QuiverMorphism, SetSystemHypergraph,
};
use crate::elem::Elem;
use crate::error::Result;
use crate::products::{box_h, box_q, box_r, laplacian_product};

// -- U ---------------------------------------------------------------------

pub fn undirect(q: &Quiver) -> SetSystemHypergraph {
    let edges = q
        .edges()
        .iter()
        .map(|e| (e.clone(), vec![q.source_of(e).unwrap().clone(), q.target_of(e).unwrap().clone()]));
    SetSystemHypergraph::build(q.vertices().elems().to_vec(), edges.collect(), "undirected quiver")
}

pub fn undirect_mor(f: &QuiverMorphism) -> HypergraphMorphism {
    let (dom, cod) = (undirect(f.domain()), undirect(f.codomain()));
    HypergraphMorphism::unchecked(&dom, &cod, f.vertex_map().to_vec(), f.edge_map().to_vec())
}

// -- D⃗ ---------------------------------------------------------------------

fn arc(e: &Elem, x: &Elem, y: &Elem) -> Elem {
    Elem::tuple([e.clone(), x.clone(), y.clone()])
}

fn as_arc(a: &Elem) -> Option<(&Elem, &Elem, &Elem)> {
    match a.as_tuple()? {
        [e, x, y] => Some((e, x, y)),
        _ => None,
    }
}

/// Arcs `(e,x,y)` with `ε(e) = {x,y}`: two per proper edge, one per loop.
pub fn associated_digraph(g: &SetSystemHypergraph) -> Result<Quiver> {
    g.require_multigraph()?;
    let mut arcs = Vec::new();
    for e in g.edges().iter() {
        match g.endpoints_of(e).unwrap()[..] {
            [v] => arcs.push((arc(e, v, v), v.clone(), v.clone())),
            [x, y] => {
                arcs.push((arc(e, x, y), x.clone(), y.clone()));
                arcs.push((arc(e, y, x), y.clone(), x.clone()));
            }
            _ => unreachable!("multigraph edges have one or two endpoints"),
        }
    }
    Ok(Quiver::build(g.vertices().elems().to_vec(), arcs, "associated digraph"))
}

pub fn associated_digraph_mor(f: &HypergraphMorphism) -> Result<QuiverMorphism> {
    let dom = associated_digraph(f.domain())?;
    let cod = associated_digraph(f.codomain())?;
    Ok(QuiverMorphism::build(
        &dom,
        &cod,
        |v| f.vertex_image(v),
        |a| {
            let (e, x, y) = as_arc(a)?;
            Some(arc(&f.edge_image(e)?, &f.vertex_image(x)?, &f.vertex_image(y)?))
        },
        "associated digraph of a morphism",
    ))
}

/// Counit `θ_G: U D⃗(G) -> G`, `(e,x,y) ↦ e`.
pub fn theta_counit(g: &SetSystemHypergraph) -> Result<HypergraphMorphism> {
    let dom = undirect(&associated_digraph(g)?);
    Ok(HypergraphMorphism::build(
        &dom,
        g,
        |v| Some(v.clone()),
        |a| as_arc(a).map(|(e, _, _)| e.clone()),
        "counit of U and D⃗",
    ))
}

/// Unit `θ⋄_Q: Q -> D⃗ U(Q)`, `e ↦ (e, σe, τe)`.
pub fn theta_unit(q: &Quiver) -> QuiverMorphism {
    let cod = associated_digraph(&undirect(q)).expect("undirected quivers are multigraphs");
    QuiverMorphism::build(
        q,
        &cod,
        |v| Some(v.clone()),
        |e| Some(arc(e, q.source_of(e)?, q.target_of(e)?)),
        "unit of U and D⃗",
    )
}

/// `ψ_{G,H}: D⃗(G) □ D⃗(H) -> D⃗(G □ H)`.
pub fn psi_digraph(g: &SetSystemHypergraph, h: &SetSystemHypergraph) -> Result<QuiverMorphism> {
    let dom = box_q(&associated_digraph(g)?, &associated_digraph(h)?);
    let cod = associated_digraph(&box_h(g, h))?;
    let p = |a: &Elem, b: &Elem| Elem::pair(a.clone(), b.clone());
    Ok(QuiverMorphism::build(
        &dom,
        &cod,
        |v| Some(v.clone()),
        |x| match x.as_tagged()? {
            (1, a, w) => {
                let (e, v, z) = as_arc(a)?;
                Some(arc(&Elem::tagged(1, e.clone(), w.clone()), &p(v, w), &p(z, w)))
            }
            (2, v, a) => {
                let (f, w, u) = as_arc(a)?;
                Some(arc(&Elem::tagged(2, v.clone(), f.clone()), &p(v, w), &p(v, u)))
            }
            _ => None,
        },
        "ψ for D⃗",
    ))
}

/// `ψ•: V⃗⋄ -> D⃗(V⋄)`.
pub fn psi_digraph_unit() -> QuiverMorphism {
    use crate::core::generators::{vertex_unit_h, vertex_unit_q};
    let cod = associated_digraph(&vertex_unit_h()).expect("the vertex unit is a multigraph");
    QuiverMorphism::build(&vertex_unit_q(), &cod, |v| Some(v.clone()), |_| None, "ψ• for D⃗")
}

// -- N, Del ----------------------------------------------------------------

/// `N`: a multigraph regarded as a set-system hypergraph.
pub fn inclusion_n(g: &SetSystemHypergraph) -> Result<SetSystemHypergraph> {
    g.require_multigraph()?;
    Ok(g.clone())
}

/// Keeps only the edges with one or two endpoints.
pub fn del(h: &SetSystemHypergraph) -> SetSystemHypergraph {
    let edges = h
        .edges()
        .iter()
        .enumerate()
        .filter(|(e, _)| matches!(h.endpoints(*e).len(), 1 | 2))
        .map(|(_, e)| (e.clone(), h.endpoints_of(e).unwrap().into_iter().cloned().collect()));
    SetSystemHypergraph::build(h.vertices().elems().to_vec(), edges.collect(), "Del")
}

pub fn del_mor(f: &HypergraphMorphism) -> HypergraphMorphism {
    let (dom, cod) = (del(f.domain()), del(f.codomain()));
    HypergraphMorphism::build(&dom, &cod, |v| f.vertex_image(v), |e| f.edge_image(e), "Del of a morphism")
}

/// The inclusion `N Del(H) -> H`.
pub fn del_inclusion(h: &SetSystemHypergraph) -> HypergraphMorphism {
    HypergraphMorphism::build(&del(h), h, |v| Some(v.clone()), |e| Some(e.clone()), "Del inclusion")
}

// -- 𝕀 ---------------------------------------------------------------------

/// Incidences `(v,e)` for every `v ∈ ε(e)`.
pub fn incidence_forming(h: &SetSystemHypergraph) -> IncidenceHypergraph {
    let mut incs = Vec::new();
    for e in h.edges().iter() {
        for v in h.endpoints_of(e).unwrap() {
            incs.push((Elem::pair(v.clone(), e.clone()), v.clone(), e.clone()));
        }
    }
    IncidenceHypergraph::build(h.vertices().elems().to_vec(), h.edges().elems().to_vec(), incs, "incidence forming")
}

pub fn incidence_forming_mor(f: &HypergraphMorphism) -> IncidenceMorphism {
    let (dom, cod) = (incidence_forming(f.domain()), incidence_forming(f.codomain()));
    IncidenceMorphism::build(
        &dom,
        &cod,
        |v| f.vertex_image(v),
        |e| f.edge_image(e),
        |i| {
            let (v, e) = i.as_pair()?;
            Some(Elem::pair(f.vertex_image(v)?, f.edge_image(e)?))
        },
        "incidence forming of a morphism",
    )
}

/// `Φ_{G,H}: 𝕀(G) □̌ 𝕀(H) -> 𝕀(G □ H)`.
pub fn phi_incidence(g: &SetSystemHypergraph, h: &SetSystemHypergraph) -> IncidenceMorphism {
    let dom = box_r(&incidence_forming(g), &incidence_forming(h));
    let cod = incidence_forming(&box_h(g, h));
    let p = |a: &Elem, b: &Elem| Elem::pair(a.clone(), b.clone());
    IncidenceMorphism::build(
        &dom,
        &cod,
        |v| Some(v.clone()),
        |e| Some(e.clone()),
        |i| match i.as_tagged()? {
            (1, ve, w) => {
                let (v, e) = ve.as_pair()?;
                Some(p(&p(v, w), &Elem::tagged(1, e.clone(), w.clone())))
            }
            (2, v, wf) => {
                let (w, f) = wf.as_pair()?;
                Some(p(&p(v, w), &Elem::tagged(2, v.clone(), f.clone())))
            }
            _ => None,
        },
        "Φ for incidence forming",
    )
}

// -- Υ⋄, UΥ⋄ ----------------------------------------------------------------

/// Arcs are the incidences, from `(1,ς(i))` to `(2,ω(i))`.
pub fn bipartite_incidence(g: &IncidenceHypergraph) -> Quiver {
    let vertices = g
        .vertices()
        .iter()
        .map(|v| Elem::tagged1(1, v.clone()))
        .chain(g.edges().iter().map(|e| Elem::tagged1(2, e.clone())));
    let arcs = g.incidences().iter().map(|i| {
        (
            i.clone(),
            Elem::tagged1(1, g.port_of(i).unwrap().clone()),
            Elem::tagged1(2, g.attachment_of(i).unwrap().clone()),
        )
    });
    Quiver::build(vertices.collect(), arcs.collect(), "bipartite incidence quiver")
}

pub fn bipartite_incidence_mor(f: &IncidenceMorphism) -> QuiverMorphism {
    let (dom, cod) = (bipartite_incidence(f.domain()), bipartite_incidence(f.codomain()));
    QuiverMorphism::build(
        &dom,
        &cod,
        |x| match x.as_tagged1()? {
            (1, v) => Some(Elem::tagged1(1, f.vertex_image(v)?)),
            (2, e) => Some(Elem::tagged1(2, f.edge_image(e)?)),
            _ => None,
        },
        |i| f.incidence_image(i),
        "bipartite incidence quiver of a morphism",
    )
}

pub fn u_bipartite(g: &IncidenceHypergraph) -> SetSystemHypergraph {
    undirect(&bipartite_incidence(g))
}

pub fn u_bipartite_mor(f: &IncidenceMorphism) -> HypergraphMorphism {
    undirect_mor(&bipartite_incidence_mor(f))
}

/// `Ψ_{G,H}: UΥ⋄(G) □ UΥ⋄(H) -> UΥ⋄(G ■ H)`.
pub fn psi_bipartite(g: &IncidenceHypergraph, h: &IncidenceHypergraph) -> HypergraphMorphism {
    let dom = box_h(&u_bipartite(g), &u_bipartite(h));
    let cod = u_bipartite(&laplacian_product(g, h));
    let t = Elem::tagged;
    let t1 = Elem::tagged1;
    HypergraphMorphism::build(
        &dom,
        &cod,
        |x| {
            let (a, b) = x.as_pair()?;
            let ((n, v), (m, w)) = (a.as_tagged1()?, b.as_tagged1()?);
            let (v, w) = (v.clone(), w.clone());
            match (n, m) {
                (1, 1) => Some(t1(1, t(1, v, w))),
                (2, 1) => Some(t1(2, t(2, v, w))),
                (1, 2) => Some(t1(2, t(3, v, w))),
                (2, 2) => Some(t1(1, t(4, v, w))),
                _ => None,
            }
        },
        |x| match x.as_tagged()? {
            (1, i, b) => match b.as_tagged1()? {
                (1, w) => Some(t(1, i.clone(), w.clone())),
                (2, f) => Some(t(2, i.clone(), f.clone())),
                _ => None,
            },
            (2, a, j) => match a.as_tagged1()? {
                (1, v) => Some(t(4, v.clone(), j.clone())),
                (2, e) => Some(t(3, e.clone(), j.clone())),
                _ => None,
            },
            _ => None,
        },
        "Ψ for UΥ⋄",
    )
}

/// `Ψ•: V⋄ -> UΥ⋄(V̌⋄)`.
pub fn psi_bipartite_unit() -> HypergraphMorphism {
    use crate::core::generators::{vertex_unit_h, vertex_unit_r};
    HypergraphMorphism::build(
        &vertex_unit_h(),
        &u_bipartite(&vertex_unit_r()),
        |v| Some(Elem::tagged1(1, v.clone())),
        |_| None,
        "Ψ• for UΥ⋄",
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::generators::{cycle_h, incidence_unit_r, n_edge_h, path_h, path_q, path_r};
    use crate::homsearch::is_isomorphic;
    use crate::products::box_q;

    #[test]
    fn undirect_path_and_loop() {
        assert_eq!(undirect(&path_q(1)), path_h(1));
        let lp = Quiver::from_labels(&["v"], &[("e", "v", "v")]).unwrap();
        assert_eq!(undirect(&lp).endpoints(0), &[0]);
        assert_eq!(undirect(&box_q(&path_q(1), &path_q(1))), box_h(&path_h(1), &path_h(1)));
    }

    #[test]
    fn digraph_of_edge_and_loop() {
        assert_eq!(associated_digraph(&path_h(1)).unwrap().counts(), (2, 2));
        assert_eq!(associated_digraph(&cycle_h(1)).unwrap().counts(), (1, 1));
        assert!(associated_digraph(&n_edge_h(3)).is_err());
        let (g, h) = (path_h(1), cycle_h(2));
        assert!(psi_digraph(&g, &h).unwrap().is_iso());
        assert!(psi_digraph_unit().is_iso());
    }

    #[test]
    fn del_drops_big_edges() {
        let d = del(&n_edge_h(3));
        assert_eq!(d.counts(), (3, 0));
        assert_eq!(del(&cycle_h(3)), cycle_h(3));
    }

    #[test]
    fn phi_is_iso() {
        let (g, h) = (n_edge_h(2), n_edge_h(3));
        assert_eq!(incidence_forming(&h).counts(), (3, 1, 3));
        let phi = phi_incidence(&g, &h);
        assert!(phi.is_iso());
        let i = Elem::tagged(1, Elem::pair(Elem::atom("v0"), Elem::atom("e0")), Elem::atom("v1"));
        let want = Elem::pair(
            Elem::pair(Elem::atom("v0"), Elem::atom("v1")),
            Elem::tagged(1, Elem::atom("e0"), Elem::atom("v1")),
        );
        assert_eq!(phi.incidence_image(&i), Some(want));
    }

    #[test]
    fn bipartite_of_paths() {
        for n in 1..5 {
            assert!(is_isomorphic(&u_bipartite(&path_r(n)), &path_h(n)));
        }
        let (g, h) = (path_r(2), incidence_unit_r());
        assert!(psi_bipartite(&g, &h).is_iso());
        assert!(psi_bipartite_unit().is_iso());
    }

    #[test]
    fn bipartite_quiver_is_not_monoidal() {
        let one = incidence_unit_r();
        let lhs = bipartite_incidence(&laplacian_product(&one, &one));
        let rhs = box_q(&bipartite_incidence(&one), &bipartite_incidence(&one));
        assert_eq!(lhs.counts(), rhs.counts());
        assert!(!is_isomorphic(&lhs, &rhs));
    }
}
