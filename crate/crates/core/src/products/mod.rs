//! Box products, the Laplacian product, and their actions on morphisms.
//!
//! Product elements are tagged tuples `(n, x, y)`; vertices of the box
//! products are plain pairs `(v, w)`.

mod monoidal;
mod structure;

pub use monoidal::*;

pub use structure::*;

use crate::core::{
    HypergraphMorphism, IncidenceHypergraph, IncidenceMorphism, Quiver, QuiverMorphism, SetSystemHypergraph,
};
use crate::elem::Elem;

fn pairs(xs: &[Elem], ys: &[Elem]) -> Vec<Elem> {
    xs.iter().flat_map(|x| ys.iter().map(move |y| Elem::pair(x.clone(), y.clone()))).collect()
}

fn tagged_block<'a>(n: u8, xs: &'a [Elem], ys: &'a [Elem]) -> impl Iterator<Item = Elem> + 'a {
    xs.iter().flat_map(move |x| ys.iter().map(move |y| Elem::tagged(n, x.clone(), y.clone())))
}

/// Quiver box product `Q □ P`.
pub fn box_q(q: &Quiver, p: &Quiver) -> Quiver {
    let (qv, pv) = (q.vertices().elems(), p.vertices().elems());
    let mut edges = Vec::new();
    for e in q.edges().iter() {
        for w in pv {
            let (s, t) = (q.source_of(e).unwrap(), q.target_of(e).unwrap());
            edges.push((
                Elem::tagged(1, e.clone(), w.clone()),
                Elem::pair(s.clone(), w.clone()),
                Elem::pair(t.clone(), w.clone()),
            ));
        }
    }
    for v in qv {
        for f in p.edges().iter() {
            let (s, t) = (p.source_of(f).unwrap(), p.target_of(f).unwrap());
            edges.push((
                Elem::tagged(2, v.clone(), f.clone()),
                Elem::pair(v.clone(), s.clone()),
                Elem::pair(v.clone(), t.clone()),
            ));
        }
    }
    Quiver::build(pairs(qv, pv), edges, "quiver box product")
}

pub fn box_q_mor(phi: &QuiverMorphism, psi: &QuiverMorphism) -> QuiverMorphism {
    let dom = box_q(phi.domain(), psi.domain());
    let cod = box_q(phi.codomain(), psi.codomain());
    QuiverMorphism::build(
        &dom,
        &cod,
        |x| {
            let (v, w) = x.as_pair()?;
            Some(Elem::pair(phi.vertex_image(v)?, psi.vertex_image(w)?))
        },
        |x| match x.as_tagged()? {
            (1, e, w) => Some(Elem::tagged(1, phi.edge_image(e)?, psi.vertex_image(w)?)),
            (2, v, f) => Some(Elem::tagged(2, phi.vertex_image(v)?, psi.edge_image(f)?)),
            _ => None,
        },
        "quiver box product of morphisms",
    )
}

/// Set-system box product `G □ H`.
pub fn box_h(g: &SetSystemHypergraph, h: &SetSystemHypergraph) -> SetSystemHypergraph {
    let (gv, hv) = (g.vertices().elems(), h.vertices().elems());
    let mut edges = Vec::new();
    for e in g.edges().iter() {
        let ends = g.endpoints_of(e).unwrap();
        for w in hv {
            edges.push((Elem::tagged(1, e.clone(), w.clone()), ends.iter().map(|&v| Elem::pair(v.clone(), w.clone())).collect()));
        }
    }
    for v in gv {
        for f in h.edges().iter() {
            let ends = h.endpoints_of(f).unwrap();
            edges.push((Elem::tagged(2, v.clone(), f.clone()), ends.iter().map(|&w| Elem::pair(v.clone(), w.clone())).collect()));
        }
    }
    SetSystemHypergraph::build(pairs(gv, hv), edges, "set-system box product")
}

pub fn box_h_mor(phi: &HypergraphMorphism, psi: &HypergraphMorphism) -> HypergraphMorphism {
    let dom = box_h(phi.domain(), psi.domain());
    let cod = box_h(phi.codomain(), psi.codomain());
    HypergraphMorphism::build(
        &dom,
        &cod,
        |x| {
            let (v, w) = x.as_pair()?;
            Some(Elem::pair(phi.vertex_image(v)?, psi.vertex_image(w)?))
        },
        |x| match x.as_tagged()? {
            (1, e, w) => Some(Elem::tagged(1, phi.edge_image(e)?, psi.vertex_image(w)?)),
            (2, v, f) => Some(Elem::tagged(2, phi.vertex_image(v)?, psi.edge_image(f)?)),
            _ => None,
        },
        "set-system box product of morphisms",
    )
}

/// Incidence box product `G □̌ H`.
pub fn box_r(g: &IncidenceHypergraph, h: &IncidenceHypergraph) -> IncidenceHypergraph {
    let (gv, hv) = (g.vertices().elems(), h.vertices().elems());
    let edges: Vec<Elem> = tagged_block(1, g.edges().elems(), hv).chain(tagged_block(2, gv, h.edges().elems())).collect();
    let mut incs = Vec::new();
    for i in g.incidences().iter() {
        let (p, a) = (g.port_of(i).unwrap(), g.attachment_of(i).unwrap());
        for w in hv {
            incs.push((
                Elem::tagged(1, i.clone(), w.clone()),
                Elem::pair(p.clone(), w.clone()),
                Elem::tagged(1, a.clone(), w.clone()),
            ));
        }
    }
    for v in gv {
        for j in h.incidences().iter() {
            let (p, a) = (h.port_of(j).unwrap(), h.attachment_of(j).unwrap());
            incs.push((
                Elem::tagged(2, v.clone(), j.clone()),
                Elem::pair(v.clone(), p.clone()),
                Elem::tagged(2, v.clone(), a.clone()),
            ));
        }
    }
    IncidenceHypergraph::build(pairs(gv, hv), edges, incs, "incidence box product")
}

pub fn box_r_mor(phi: &IncidenceMorphism, psi: &IncidenceMorphism) -> IncidenceMorphism {
    let dom = box_r(phi.domain(), psi.domain());
    let cod = box_r(phi.codomain(), psi.codomain());
    IncidenceMorphism::build(
        &dom,
        &cod,
        |x| {
            let (v, w) = x.as_pair()?;
            Some(Elem::pair(phi.vertex_image(v)?, psi.vertex_image(w)?))
        },
        |x| match x.as_tagged()? {
            (1, e, w) => Some(Elem::tagged(1, phi.edge_image(e)?, psi.vertex_image(w)?)),
            (2, v, f) => Some(Elem::tagged(2, phi.vertex_image(v)?, psi.edge_image(f)?)),
            _ => None,
        },
        |x| match x.as_tagged()? {
            (1, i, w) => Some(Elem::tagged(1, phi.incidence_image(i)?, psi.vertex_image(w)?)),
            (2, v, j) => Some(Elem::tagged(2, phi.vertex_image(v)?, psi.incidence_image(j)?)),
            _ => None,
        },
        "incidence box product of morphisms",
    )
}

/// Incidence dual `G#`.
pub fn dual(g: &IncidenceHypergraph) -> IncidenceHypergraph {
    g.dual()
}

pub fn dual_mor(phi: &IncidenceMorphism) -> IncidenceMorphism {
    phi.dual()
}

/// Laplacian product `G ■ H`.
pub fn laplacian_product(g: &IncidenceHypergraph, h: &IncidenceHypergraph) -> IncidenceHypergraph {
    let (gv, ge, gi) = (g.vertices().elems(), g.edges().elems(), g.incidences().elems());
    let (hv, he, hi) = (h.vertices().elems(), h.edges().elems(), h.incidences().elems());
    let vertices: Vec<Elem> = tagged_block(1, gv, hv).chain(tagged_block(4, ge, he)).collect();
    let edges: Vec<Elem> = tagged_block(2, ge, hv).chain(tagged_block(3, gv, he)).collect();
    let t = Elem::tagged;
    let mut incs = Vec::new();
    for i in gi {
        let (p, a) = (g.port_of(i).unwrap(), g.attachment_of(i).unwrap());
        for w in hv {
            incs.push((t(1, i.clone(), w.clone()), t(1, p.clone(), w.clone()), t(2, a.clone(), w.clone())));
        }
        for f in he {
            incs.push((t(2, i.clone(), f.clone()), t(4, a.clone(), f.clone()), t(3, p.clone(), f.clone())));
        }
    }
    for j in hi {
        let (p, a) = (h.port_of(j).unwrap(), h.attachment_of(j).unwrap());
        for e in ge {
            incs.push((t(3, e.clone(), j.clone()), t(4, e.clone(), a.clone()), t(2, e.clone(), p.clone())));
        }
        for v in gv {
            incs.push((t(4, v.clone(), j.clone()), t(1, v.clone(), p.clone()), t(3, v.clone(), a.clone())));
        }
    }
    IncidenceHypergraph::build(vertices, edges, incs, "Laplacian product")
}

pub fn laplacian_mor(phi: &IncidenceMorphism, psi: &IncidenceMorphism) -> IncidenceMorphism {
    let dom = laplacian_product(phi.domain(), psi.domain());
    let cod = laplacian_product(phi.codomain(), psi.codomain());
    let t = Elem::tagged;
    IncidenceMorphism::build(
        &dom,
        &cod,
        |x| match x.as_tagged()? {
            (1, v, w) => Some(t(1, phi.vertex_image(v)?, psi.vertex_image(w)?)),
            (4, e, f) => Some(t(4, phi.edge_image(e)?, psi.edge_image(f)?)),
            _ => None,
        },
        |x| match x.as_tagged()? {
            (2, e, w) => Some(t(2, phi.edge_image(e)?, psi.vertex_image(w)?)),
            (3, v, f) => Some(t(3, phi.vertex_image(v)?, psi.edge_image(f)?)),
            _ => None,
        },
        |x| match x.as_tagged()? {
            (1, i, w) => Some(t(1, phi.incidence_image(i)?, psi.vertex_image(w)?)),
            (2, i, f) => Some(t(2, phi.incidence_image(i)?, psi.edge_image(f)?)),
            (3, e, j) => Some(t(3, phi.edge_image(e)?, psi.incidence_image(j)?)),
            (4, v, j) => Some(t(4, phi.vertex_image(v)?, psi.incidence_image(j)?)),
            _ => None,
        },
        "Laplacian product of morphisms",
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::generators::*;

    #[test]
    fn directed_box_of_two_arcs() {
        let b = box_q(&path_q(1), &path_q(1));
        assert_eq!(b.counts(), (4, 4));
    }

    #[test]
    fn two_edge_times_three_edge() {
        let b = box_h(&n_edge_h(2), &n_edge_h(3));
        assert_eq!(b.counts(), (6, 5));
        let mut sizes: Vec<usize> = b.all_endpoints().iter().map(Vec::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![2, 2, 2, 3, 3]);
        assert_eq!(box_r(&n_edge_r(2), &n_edge_r(3)).counts(), (6, 5, 12));
    }

    #[test]
    fn loop_times_loop() {
        let b = box_h(&cycle_h(1), &cycle_h(1));
        assert_eq!(b.counts(), (1, 2));
        assert!(b.is_multigraph());
    }

    #[test]
    fn box_with_loose_edge_and_unit_incidences() {
        let g = path_r(3);
        let b = box_r(&g, &edge_unit_r());
        assert_eq!(b.counts(), (0, 2, 0));
        assert_eq!(box_r(&incidence_unit_r(), &incidence_unit_r()).counts(), (1, 2, 2));
    }

    #[test]
    fn laplacian_counts() {
        let half = path_r(1);
        assert_eq!(laplacian_product(&half, &half).counts(), (2, 2, 4));
        assert_eq!(laplacian_product(&path_r(2), &half).counts(), (3, 3, 7));
    }

    #[test]
    fn tagged_labels_print_canonically() {
        let l = laplacian_product(&path_r(1), &path_r(1));
        let labels: Vec<String> = l.incidences().iter().map(|x| x.to_string()).collect();
        assert_eq!(labels, ["1:i0:v0", "2:i0:e0", "3:e0:i0", "4:v0:i0"]);
    }
}
