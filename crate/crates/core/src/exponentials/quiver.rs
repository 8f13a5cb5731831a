use super::yoneda::{edge_point_q, vertex_point_q, yoneda_s, yoneda_t};
use super::{index_of, labelled, wrong_domain, Exponential};
use crate::core::generators::edge_unit_q;
use crate::core::{Quiver, QuiverMorphism, SortKind};
use crate::elem::Elem;
use crate::error::{Error, Result};
use crate::homsearch::all_homs;
use crate::products::{box_q, box_q_mor, quiver_right_unitor};

/// `[Q₁,Q₂]_B`: vertices are homs `Q₁ -> Q₂`, edges are homs `Q₁ □ E⃗⋄ -> Q₂`.
#[derive(Clone, Debug)]
pub struct QuiverExponential {
    base: Quiver,
    target: Quiver,
    carrier: Quiver,
    vertex_homs: Vec<QuiverMorphism>,
    edge_homs: Vec<QuiverMorphism>,
    eval: QuiverMorphism,
    unit_inv: QuiverMorphism,
}

pub fn exp_box_q(q1: &Quiver, q2: &Quiver) -> QuiverExponential {
    let (vlabels, vertex_homs) = labelled(all_homs(q1, q2));
    let (elabels, edge_homs) = labelled(all_homs(&box_q(q1, &edge_unit_q()), q2));
    let unit_inv = quiver_right_unitor(q1).inverse().expect("unitors are invertible");
    let id = QuiverMorphism::identity(q1);
    let at = |y: QuiverMorphism| box_q_mor(&id, &y).compose(&unit_inv).expect("composable");
    let (pre_s, pre_t) = (at(yoneda_s()), at(yoneda_t()));
    let edges = edge_homs
        .iter()
        .zip(&elabels)
        .map(|(psi, l)| {
            let s = psi.compose(&pre_s).expect("composable").to_elem();
            let t = psi.compose(&pre_t).expect("composable").to_elem();
            (l.clone(), s, t)
        })
        .collect();
    let carrier = Quiver::build(vlabels, edges, "quiver exponential");
    let dom = box_q(q1, &carrier);
    let eval = QuiverMorphism::build(
        &dom,
        q2,
        |x| {
            let (v, phi) = x.as_pair()?;
            vertex_homs[carrier.vertices().get(phi)?].vertex_image(v)
        },
        |x| match x.as_tagged()? {
            (1, e, phi) => vertex_homs[carrier.vertices().get(phi)?].edge_image(e),
            (2, v, psi) => edge_homs[carrier.edges().get(psi)?].edge_image(&Elem::tagged(2, v.clone(), Elem::one())),
            _ => None,
        },
        "quiver evaluation",
    );
    QuiverExponential { base: q1.clone(), target: q2.clone(), carrier, vertex_homs, edge_homs, eval, unit_inv }
}

impl QuiverExponential {
    pub fn vertex_index(&self, v: usize) -> &QuiverMorphism {
        &self.vertex_homs[v]
    }

    pub fn edge_index(&self, e: usize) -> &QuiverMorphism {
        &self.edge_homs[e]
    }
}

impl Exponential for QuiverExponential {
    type Object = Quiver;
    type Arrow = QuiverMorphism;

    fn base(&self) -> &Quiver {
        &self.base
    }

    fn target(&self) -> &Quiver {
        &self.target
    }

    fn carrier(&self) -> &Quiver {
        &self.carrier
    }

    fn eval(&self) -> &QuiverMorphism {
        &self.eval
    }

    fn product(&self, k: &Quiver) -> Quiver {
        box_q(&self.base, k)
    }

    fn product_right(&self, psi: &QuiverMorphism) -> QuiverMorphism {
        box_q_mor(&QuiverMorphism::identity(&self.base), psi)
    }

    fn curry(&self, phi: &QuiverMorphism, k: &Quiver) -> Result<QuiverMorphism> {
        if *phi.domain() != self.product(k) || *phi.codomain() != self.target {
            return Err(wrong_domain("quiver box"));
        }
        let c = &self.carrier;
        let vertex = k
            .vertices()
            .iter()
            .map(|w| {
                let m = phi.compose(&self.product_right(&vertex_point_q(k, w)?))?.compose(&self.unit_inv)?;
                index_of(c.vertices(), SortKind::Vertex, &m.to_elem())
            })
            .collect::<Result<_>>()?;
        let edge = k
            .edges()
            .iter()
            .map(|f| {
                let m = phi.compose(&self.product_right(&edge_point_q(k, f)?))?;
                index_of(c.edges(), SortKind::Edge, &m.to_elem())
            })
            .collect::<Result<_>>()?;
        QuiverMorphism::from_indices(k, c, vertex, edge).map_err(Error::from)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::generators::{cycle_q, path_q, vertex_unit_q};
    use crate::exponentials::check_adjunction;

    #[test]
    fn path_into_digon() {
        let x = exp_box_q(&path_q(1), &cycle_q(2));
        assert_eq!(x.carrier().counts(), (2, 2));
        for e in 0..2 {
            assert_ne!(x.carrier().source(e), x.carrier().target(e));
        }
    }

    #[test]
    fn point_exponent_copies_vertices() {
        let q = cycle_q(3);
        assert_eq!(exp_box_q(&vertex_unit_q(), &q).carrier().counts().0, 3);
    }

    #[test]
    fn adjunction_on_small_quivers() {
        let x = exp_box_q(&path_q(1), &cycle_q(2));
        for k in [path_q(1), cycle_q(1), path_q(2)] {
            assert!(check_adjunction(&x, &k).unwrap().holds());
        }
    }
}
