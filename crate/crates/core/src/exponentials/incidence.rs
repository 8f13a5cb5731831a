use std::collections::HashMap;
use std::sync::OnceLock;

use super::yoneda::{edge_point_r, incidence_point_r, vertex_point_r, yoneda_y, yoneda_z};
use super::{index_of, labelled, wrong_domain, Exponential};
use crate::core::generators::incidence_unit_r;
use crate::core::{IncidenceHypergraph, IncidenceMorphism, Sort, SortKind};
use crate::elem::Elem;
use crate::error::{Error, Result};
use crate::homsearch::all_homs;
use crate::products::{
    box_r, box_r_mor, box_right_unitor, laplacian_mor, laplacian_product, laplacian_right_unitor, right_anti_unitor,
};

/// Cap on `|Ě(H)|^|V̌(G)|`, the edge count of the incidence box exponential.
const EDGE_FUNCTION_CAP: u64 = 1 << 20;

fn composed(outer: &IncidenceMorphism, inner: &IncidenceMorphism) -> IncidenceMorphism {
    outer.compose(inner).expect("composable by construction")
}

type Key = [Vec<usize>; 3];

const SORTS: [SortKind; 3] = [SortKind::Vertex, SortKind::Edge, SortKind::Incidence];

fn by_key(homs: &[IncidenceMorphism]) -> HashMap<Key, usize> {
    homs.iter().enumerate().map(|(ix, m)| (SORTS.map(|k| m.map(k).to_vec()), ix)).collect()
}

/// Index maps of `outer ∘ inner`.
fn through(outer: &IncidenceMorphism, inner: &IncidenceMorphism) -> Key {
    SORTS.map(|k| inner.map(k).iter().map(|&x| outer.map(k)[x]).collect())
}

fn one() -> Elem {
    Elem::one()
}

/// `[G,H]_V`: vertices `ℛ(G,H)`, edges all functions `V̌(G) -> Ě(H)`,
/// incidences `ℛ(G □̌ I⋄, H)`.
#[derive(Clone, Debug)]
pub struct IncidenceBoxExponential {
    base: IncidenceHypergraph,
    target: IncidenceHypergraph,
    carrier: IncidenceHypergraph,
    vertex_homs: Vec<IncidenceMorphism>,
    incidence_homs: Vec<IncidenceMorphism>,
    eval: IncidenceMorphism,
    unit_inv: IncidenceMorphism,
}

/// Every function `V̌(G) -> Ě(H)` as a map label.
fn functions(g: &IncidenceHypergraph, h: &IncidenceHypergraph) -> Result<Vec<Elem>> {
    let (nv, ne) = (g.vertices().len(), h.edges().len());
    let needed = (ne as u64).checked_pow(nv as u32).unwrap_or(u64::MAX);
    if needed > EDGE_FUNCTION_CAP {
        return Err(Error::SizeGuard { what: "box exponential edge set", needed, cap: EDGE_FUNCTION_CAP });
    }
    let mut out = vec![Vec::new()];
    for v in g.vertices().iter() {
        out = out
            .into_iter()
            .flat_map(|t: Vec<(Elem, Elem)>| {
                h.edges().iter().map(move |f| [t.clone(), vec![(v.clone(), f.clone())]].concat())
            })
            .collect();
    }
    Ok(out.into_iter().map(Elem::map).collect())
}

pub fn exp_box_r(g: &IncidenceHypergraph, h: &IncidenceHypergraph) -> Result<IncidenceBoxExponential> {
    let (vlabels, vertex_homs) = labelled(all_homs(g, h));
    let (ilabels, incidence_homs) = labelled(all_homs(&box_r(g, &incidence_unit_r()), h));
    let edges = functions(g, h)?;
    let unit_inv = box_right_unitor(g).inverse().expect("unitors are invertible");
    let pre_y = composed(&box_r_mor(&IncidenceMorphism::identity(g), &yoneda_y()), &unit_inv);
    let incs = incidence_homs
        .iter()
        .zip(&ilabels)
        .map(|(psi, l)| {
            let port = composed(psi, &pre_y).to_elem();
            let att = Elem::map(
                g.vertices().iter().map(|v| (v.clone(), psi.edge_image(&Elem::tagged(2, v.clone(), one())).unwrap())),
            );
            (l.clone(), port, att)
        })
        .collect();
    let carrier = IncidenceHypergraph::build(vlabels, edges, incs, "incidence box exponential");
    let eval = IncidenceMorphism::build(
        &box_r(g, &carrier),
        h,
        |x| {
            let (v, phi) = x.as_pair()?;
            vertex_homs[carrier.vertices().get(phi)?].vertex_image(v)
        },
        |x| match x.as_tagged()? {
            (1, e, phi) => vertex_homs[carrier.vertices().get(phi)?].edge_image(e),
            (2, v, f) => f.apply(v).cloned(),
            _ => None,
        },
        |x| match x.as_tagged()? {
            (1, i, phi) => vertex_homs[carrier.vertices().get(phi)?].incidence_image(i),
            (2, v, psi) => {
                incidence_homs[carrier.incidences().get(psi)?].incidence_image(&Elem::tagged(2, v.clone(), one()))
            }
            _ => None,
        },
        "incidence box evaluation",
    );
    Ok(IncidenceBoxExponential { base: g.clone(), target: h.clone(), carrier, vertex_homs, incidence_homs, eval, unit_inv })
}

impl IncidenceBoxExponential {
    pub fn vertex_index(&self, v: usize) -> &IncidenceMorphism {
        &self.vertex_homs[v]
    }

    /// The function `V̌(G) -> Ě(H)` behind edge `e`.
    pub fn edge_index(&self, e: usize) -> &Elem {
        self.carrier.edges().elem(e)
    }

    pub fn incidence_index(&self, i: usize) -> &IncidenceMorphism {
        &self.incidence_homs[i]
    }

    /// Ports agree with restricting along `G -> G □̌ I⋄`.
    pub fn check_attachments(&self) -> bool {
        let g = &self.base;
        let incl = IncidenceMorphism::build(
            g,
            &box_r(g, &incidence_unit_r()),
            |v| Some(Elem::pair(v.clone(), one())),
            |e| Some(Elem::tagged(1, e.clone(), one())),
            |i| Some(Elem::tagged(1, i.clone(), one())),
            "inclusion into the product with the 1-edge",
        );
        (0..self.carrier.incidences().len()).all(|i| {
            let port = self.carrier.vertices().elem(self.carrier.port(i));
            composed(&self.incidence_homs[i], &incl).to_elem() == *port
        })
    }
}

impl Exponential for IncidenceBoxExponential {
    type Object = IncidenceHypergraph;
    type Arrow = IncidenceMorphism;

    fn base(&self) -> &IncidenceHypergraph {
        &self.base
    }

    fn target(&self) -> &IncidenceHypergraph {
        &self.target
    }

    fn carrier(&self) -> &IncidenceHypergraph {
        &self.carrier
    }

    fn eval(&self) -> &IncidenceMorphism {
        &self.eval
    }

    fn product(&self, k: &IncidenceHypergraph) -> IncidenceHypergraph {
        box_r(&self.base, k)
    }

    fn product_right(&self, psi: &IncidenceMorphism) -> IncidenceMorphism {
        box_r_mor(&IncidenceMorphism::identity(&self.base), psi)
    }

    fn curry(&self, phi: &IncidenceMorphism, k: &IncidenceHypergraph) -> Result<IncidenceMorphism> {
        if *phi.domain() != self.product(k) || *phi.codomain() != self.target {
            return Err(wrong_domain("incidence box"));
        }
        let c = &self.carrier;
        let vertex = k
            .vertices()
            .iter()
            .map(|v| {
                let m = phi.compose(&self.product_right(&vertex_point_r(k, v)?))?.compose(&self.unit_inv)?;
                index_of(c.vertices(), SortKind::Vertex, &m.to_elem())
            })
            .collect::<Result<_>>()?;
        let edge = k
            .edges()
            .iter()
            .map(|e| {
                let f = Elem::map(self.base.vertices().iter().map(|w| {
                    (w.clone(), phi.edge_image(&Elem::tagged(2, w.clone(), e.clone())).expect("φ is total"))
                }));
                index_of(c.edges(), SortKind::Edge, &f)
            })
            .collect::<Result<_>>()?;
        let incidence = k
            .incidences()
            .iter()
            .map(|i| {
                let m = phi.compose(&self.product_right(&incidence_point_r(k, i)?))?;
                index_of(c.incidences(), SortKind::Incidence, &m.to_elem())
            })
            .collect::<Result<_>>()?;
        IncidenceMorphism::from_indices(k, c, vertex, edge, incidence).map_err(Error::from)
    }
}

/// `[G,H]_L`: vertices `ℛ(G,H)`, edges `ℛ(G#,H)`, incidences `ℛ(G ■ I⋄, H)`.
#[derive(Clone, Debug)]
pub struct LaplacianExponential {
    base: IncidenceHypergraph,
    target: IncidenceHypergraph,
    carrier: IncidenceHypergraph,
    vertex_homs: Vec<IncidenceMorphism>,
    edge_homs: Vec<IncidenceMorphism>,
    incidence_homs: Vec<IncidenceMorphism>,
    eval: OnceLock<IncidenceMorphism>,
    unit_inv: IncidenceMorphism,
    anti_inv: IncidenceMorphism,
}

pub fn exp_laplacian(g: &IncidenceHypergraph, h: &IncidenceHypergraph) -> LaplacianExponential {
    let (vlabels, vertex_homs) = labelled(all_homs(g, h));
    let (elabels, edge_homs) = labelled(all_homs(&g.dual(), h));
    let (ilabels, incidence_homs) = labelled(all_homs(&laplacian_product(g, &incidence_unit_r()), h));
    let unit_inv = laplacian_right_unitor(g).inverse().expect("unitors are invertible");
    let anti_inv = right_anti_unitor(g).inverse().expect("anti-unitors are invertible");
    let id = IncidenceMorphism::identity(g);
    let pre_y = composed(&laplacian_mor(&id, &yoneda_y()), &unit_inv);
    let pre_z = composed(&laplacian_mor(&id, &yoneda_z()), &anti_inv);
    let (vindex, eindex) = (by_key(&vertex_homs), by_key(&edge_homs));
    let (port, attachment) = incidence_homs
        .iter()
        .map(|psi| (vindex[&through(psi, &pre_y)], eindex[&through(psi, &pre_z)]))
        .unzip();
    let sort = |kind, labels| Sort::new(kind, labels).expect("hom labels are distinct");
    let carrier = IncidenceHypergraph::from_parts(
        sort(SortKind::Vertex, vlabels),
        sort(SortKind::Edge, elabels),
        sort(SortKind::Incidence, ilabels),
        port,
        attachment,
    );
    LaplacianExponential {
        base: g.clone(),
        target: h.clone(),
        carrier,
        vertex_homs,
        edge_homs,
        incidence_homs,
        eval: OnceLock::new(),
        unit_inv,
        anti_inv,
    }
}

impl LaplacianExponential {
    fn build_eval(&self) -> IncidenceMorphism {
        let (g, c) = (&self.base, &self.carrier);
        let (cv, ce, ci) = (c.vertices(), c.edges(), c.incidences());
        let (vh, eh, ih) = (&self.vertex_homs, &self.edge_homs, &self.incidence_homs);
        IncidenceMorphism::build(
            &laplacian_product(g, c),
            &self.target,
            |x| match x.as_tagged()? {
                (1, v, phi) => vh[cv.get(phi)?].vertex_image(v),
                (4, e, phi) => eh[ce.get(phi)?].vertex_image(e),
                _ => None,
            },
            |x| match x.as_tagged()? {
                (2, e, phi) => vh[cv.get(phi)?].edge_image(e),
                (3, v, phi) => eh[ce.get(phi)?].edge_image(v),
                _ => None,
            },
            |x| match x.as_tagged()? {
                (1, i, phi) => vh[cv.get(phi)?].incidence_image(i),
                (2, i, phi) => eh[ce.get(phi)?].incidence_image(i),
                (3, e, psi) => ih[ci.get(psi)?].incidence_image(&Elem::tagged(3, e.clone(), one())),
                (4, v, psi) => ih[ci.get(psi)?].incidence_image(&Elem::tagged(4, v.clone(), one())),
                _ => None,
            },
            "Laplacian evaluation",
        )
    }

    pub fn vertex_index(&self, v: usize) -> &IncidenceMorphism {
        &self.vertex_homs[v]
    }

    /// The hom `G# -> H` behind edge `e`.
    pub fn edge_index(&self, e: usize) -> &IncidenceMorphism {
        &self.edge_homs[e]
    }

    pub fn incidence_index(&self, i: usize) -> &IncidenceMorphism {
        &self.incidence_homs[i]
    }

    /// Port and attachment agree with restricting along the inclusions of
    /// `G` and `G#` into `G ■ I⋄`.
    pub fn check_attachments(&self) -> bool {
        let g = &self.base;
        let prod = laplacian_product(g, &incidence_unit_r());
        let t = |n: u8, x: &Elem| Some(Elem::tagged(n, x.clone(), one()));
        let incl = IncidenceMorphism::build(g, &prod, |v| t(1, v), |e| t(2, e), |i| t(1, i), "inclusion of G");
        let incl_dual =
            IncidenceMorphism::build(&g.dual(), &prod, |e| t(4, e), |v| t(3, v), |i| t(2, i), "inclusion of G#");
        let c = &self.carrier;
        (0..c.incidences().len()).all(|i| {
            let psi = &self.incidence_homs[i];
            composed(psi, &incl).to_elem() == *c.vertices().elem(c.port(i))
                && composed(psi, &incl_dual).to_elem() == *c.edges().elem(c.attachment(i))
        })
    }
}

impl Exponential for LaplacianExponential {
    type Object = IncidenceHypergraph;
    type Arrow = IncidenceMorphism;

    fn base(&self) -> &IncidenceHypergraph {
        &self.base
    }

    fn target(&self) -> &IncidenceHypergraph {
        &self.target
    }

    fn carrier(&self) -> &IncidenceHypergraph {
        &self.carrier
    }

    fn eval(&self) -> &IncidenceMorphism {
        self.eval.get_or_init(|| self.build_eval())
    }

    fn product(&self, k: &IncidenceHypergraph) -> IncidenceHypergraph {
        laplacian_product(&self.base, k)
    }

    fn product_right(&self, psi: &IncidenceMorphism) -> IncidenceMorphism {
        laplacian_mor(&IncidenceMorphism::identity(&self.base), psi)
    }

    fn curry(&self, phi: &IncidenceMorphism, k: &IncidenceHypergraph) -> Result<IncidenceMorphism> {
        if *phi.domain() != self.product(k) || *phi.codomain() != self.target {
            return Err(wrong_domain("Laplacian"));
        }
        let c = &self.carrier;
        let vertex = k
            .vertices()
            .iter()
            .map(|v| {
                let m = phi.compose(&self.product_right(&vertex_point_r(k, v)?))?.compose(&self.unit_inv)?;
                index_of(c.vertices(), SortKind::Vertex, &m.to_elem())
            })
            .collect::<Result<_>>()?;
        let edge = k
            .edges()
            .iter()
            .map(|e| {
                let m = phi.compose(&self.product_right(&edge_point_r(k, e)?))?.compose(&self.anti_inv)?;
                index_of(c.edges(), SortKind::Edge, &m.to_elem())
            })
            .collect::<Result<_>>()?;
        let incidence = k
            .incidences()
            .iter()
            .map(|i| {
                let m = phi.compose(&self.product_right(&incidence_point_r(k, i)?))?;
                index_of(c.incidences(), SortKind::Incidence, &m.to_elem())
            })
            .collect::<Result<_>>()?;
        IncidenceMorphism::from_indices(k, c, vertex, edge, incidence).map_err(Error::from)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::generators::{edge_unit_r, path_r, vertex_unit_r};
    use crate::exponentials::check_adjunction;
    use crate::homsearch::is_isomorphic;

    #[test]
    fn box_exponential_of_the_one_edge() {
        let x = exp_box_r(&incidence_unit_r(), &path_r(2)).unwrap();
        assert_eq!(x.carrier().counts(), (2, 1, 2));
        assert!(x.check_attachments());
    }

    #[test]
    fn box_edges_are_all_functions() {
        let (g, h) = (path_r(2), path_r(3));
        let x = exp_box_r(&g, &h).unwrap();
        assert_eq!(x.carrier().edges().len(), 2usize.pow(2));
    }

    #[test]
    fn laplacian_half_path_into_path() {
        let x = exp_laplacian(&path_r(1), &path_r(2));
        assert_eq!(x.carrier().counts(), (2, 2, 4));
        assert!(x.check_attachments());
        let b = exp_box_r(&path_r(1), &path_r(2)).unwrap();
        assert_eq!(x.carrier().vertices(), b.carrier().vertices());
    }

    #[test]
    fn curry_of_unitor_picks_identity() {
        let g = path_r(2);
        let x = exp_laplacian(&g, &g);
        let k = vertex_unit_r();
        let hat = x.curry(&laplacian_right_unitor(&g), &k).unwrap();
        let picked = hat.vertex_image(&Elem::one()).unwrap();
        assert_eq!(picked, IncidenceMorphism::identity(&g).to_elem());
    }

    #[test]
    fn curry_rejects_wrong_domain() {
        let g = path_r(1);
        let x = exp_laplacian(&g, &g);
        assert!(x.curry(&IncidenceMorphism::identity(&g), &vertex_unit_r()).is_err());
    }

    #[test]
    fn adjunctions() {
        let (g, h) = (path_r(1), path_r(2));
        let l = exp_laplacian(&g, &h);
        let b = exp_box_r(&g, &h).unwrap();
        for k in [vertex_unit_r(), edge_unit_r(), incidence_unit_r(), path_r(2)] {
            assert!(check_adjunction(&l, &k).unwrap().holds(), "Laplacian, K = {k:?}");
            assert!(check_adjunction(&b, &k).unwrap().holds(), "box, K = {k:?}");
        }
    }

    #[test]
    fn laplacian_duality() {
        let (g, h) = (path_r(1), path_r(2));
        let a = exp_laplacian(&g, &h).carrier().dual();
        assert!(is_isomorphic(&a, exp_laplacian(&g, &h.dual()).carrier()));
        assert!(is_isomorphic(&a, exp_laplacian(&g.dual(), &h).carrier()));
    }
}
