//! The five products as symmetric monoidal structures, and their coherence laws.

use std::fmt::Debug;

use super::*;
use crate::core::generators::{edge_unit_r, vertex_unit_h, vertex_unit_q, vertex_unit_r};
use crate::core::Morphism;
use crate::error::Result;

pub trait Monoidal {
    type Object: Clone + PartialEq + Debug;
    type Arrow: Morphism<Object = Self::Object>;

    const NAME: &'static str;

    fn unit() -> Self::Object;
    fn product(a: &Self::Object, b: &Self::Object) -> Self::Object;
    fn product_mor(f: &Self::Arrow, g: &Self::Arrow) -> Self::Arrow;
    /// `(A ⊠ B) ⊠ C -> A ⊠ (B ⊠ C)`.
    fn associator(a: &Self::Object, b: &Self::Object, c: &Self::Object) -> Self::Arrow;
    /// `I ⊠ A -> A`.
    fn left_unitor(a: &Self::Object) -> Self::Arrow;
    /// `A ⊠ I -> A`.
    fn right_unitor(a: &Self::Object) -> Self::Arrow;
    /// `A ⊠ B -> B ⊠ A`.
    fn commutator(a: &Self::Object, b: &Self::Object) -> Self::Arrow;
}

macro_rules! monoidal {
    ($name:ident, $label:expr, $o:ty, $m:ty, $unit:expr, $prod:ident, $prodm:ident, $assoc:ident, $lu:ident, $ru:ident, $comm:ident) => {
        pub struct $name;

        impl Monoidal for $name {
            type Object = $o;
            type Arrow = $m;

            const NAME: &'static str = $label;

            fn unit() -> $o {
                $unit
            }

            fn product(a: &$o, b: &$o) -> $o {
                $prod(a, b)
            }

            fn product_mor(f: &$m, g: &$m) -> $m {
                $prodm(f, g)
            }

            fn associator(a: &$o, b: &$o, c: &$o) -> $m {
                $assoc(a, b, c)
            }

            fn left_unitor(a: &$o) -> $m {
                $lu(a)
            }

            fn right_unitor(a: &$o) -> $m {
                $ru(a)
            }

            fn commutator(a: &$o, b: &$o) -> $m {
                $comm(a, b)
            }
        }
    };
}

monoidal!(QuiverBox, "quiver box", Quiver, QuiverMorphism, vertex_unit_q(), box_q, box_q_mor,
    quiver_associator, quiver_left_unitor, quiver_right_unitor, quiver_commutator);
monoidal!(HypergraphBox, "set-system box", SetSystemHypergraph, HypergraphMorphism, vertex_unit_h(), box_h, box_h_mor,
    hypergraph_associator, hypergraph_left_unitor, hypergraph_right_unitor, hypergraph_commutator);
monoidal!(IncidenceBox, "incidence box", IncidenceHypergraph, IncidenceMorphism, vertex_unit_r(), box_r, box_r_mor,
    box_associator, box_left_unitor, box_right_unitor, box_commutator);
monoidal!(LaplacianBox, "Laplacian", IncidenceHypergraph, IncidenceMorphism, vertex_unit_r(), laplacian_product,
    laplacian_mor, laplacian_associator, laplacian_left_unitor, laplacian_right_unitor, laplacian_commutator);

fn id<M: Monoidal>(a: &M::Object) -> M::Arrow {
    M::Arrow::identity(a)
}

/// Composes right to left: `chain(&[f, g, h]) = f ∘ g ∘ h`.
pub fn chain<A: Morphism>(maps: &[A]) -> Result<A> {
    let (last, rest) = maps.split_last().expect("at least one morphism");
    rest.iter().rev().try_fold(last.clone(), |acc, f| f.then_after(&acc))
}

/// Mac Lane's pentagon for `A, B, C, D`.
pub fn pentagon<M: Monoidal>(a: &M::Object, b: &M::Object, c: &M::Object, d: &M::Object) -> Result<bool> {
    let ab = M::product(a, b);
    let cd = M::product(c, d);
    let bc = M::product(b, c);
    let lhs = chain(&[M::associator(a, b, &cd), M::associator(&ab, c, d)])?;
    let rhs = chain(&[
        M::product_mor(&id::<M>(a), &M::associator(b, c, d)),
        M::associator(a, &bc, d),
        M::product_mor(&M::associator(a, b, c), &id::<M>(d)),
    ])?;
    Ok(lhs == rhs)
}

/// `(id_A ⊠ λ_B) ∘ α_{A,I,B} = ρ_A ⊠ id_B`.
pub fn triangle<M: Monoidal>(a: &M::Object, b: &M::Object) -> Result<bool> {
    let lhs = chain(&[M::product_mor(&id::<M>(a), &M::left_unitor(b)), M::associator(a, &M::unit(), b)])?;
    Ok(lhs == M::product_mor(&M::right_unitor(a), &id::<M>(b)))
}

/// `α_{B,C,A} ∘ γ_{A,B⊠C} ∘ α_{A,B,C} = (id_B ⊠ γ_{A,C}) ∘ α_{B,A,C} ∘ (γ_{A,B} ⊠ id_C)`.
pub fn hexagon<M: Monoidal>(a: &M::Object, b: &M::Object, c: &M::Object) -> Result<bool> {
    let lhs = chain(&[M::associator(b, c, a), M::commutator(a, &M::product(b, c)), M::associator(a, b, c)])?;
    let rhs = chain(&[
        M::product_mor(&id::<M>(b), &M::commutator(a, c)),
        M::associator(b, a, c),
        M::product_mor(&M::commutator(a, b), &id::<M>(c)),
    ])?;
    Ok(lhs == rhs)
}

/// `γ_{B,A} ∘ γ_{A,B} = id` and `λ_A ∘ γ_{A,I} = ρ_A`.
pub fn symmetry<M: Monoidal>(a: &M::Object, b: &M::Object) -> Result<bool> {
    let twice = M::commutator(b, a).then_after(&M::commutator(a, b))?;
    let units = M::left_unitor(a).then_after(&M::commutator(a, &M::unit()))?;
    Ok(twice == id::<M>(&M::product(a, b)) && units == M::right_unitor(a))
}

/// Cells of the duality diagram for the Laplacian product, each `true` when it commutes.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Triforce {
    /// `λ̂_G = ρ̂_G ∘ γ_{E,G}`.
    pub anti_unitor_triangle: bool,
    /// `λ̂_G ■ id = (ρ̂_G ■ id) ∘ (γ_{E,G} ■ id)`.
    pub top: bool,
    /// `λ̂_{G■H} = ρ̂_{G■H} ∘ γ_{E,G■H}`.
    pub left: bool,
    /// `id ■ λ̂_H = (id ■ ρ̂_H) ∘ (id ■ γ_{E,H})`.
    pub bottom: bool,
    /// `α_{G,H,E} ∘ γ_{E,G■H} ∘ α_{E,G,H} = (id ■ γ_{E,H}) ∘ α_{G,E,H} ∘ (γ_{E,G} ■ id)`.
    pub hexagon: bool,
    /// The composites `(G■H)# -> G#■H -> G■H#` and `(G■H)# -> G■H#` are isomorphisms and agree.
    pub composite: bool,
}

impl Triforce {
    pub fn holds(&self) -> bool {
        self.anti_unitor_triangle && self.top && self.left && self.bottom && self.hexagon && self.composite
    }
}

pub fn triforce(g: &IncidenceHypergraph, h: &IncidenceHypergraph) -> Result<Triforce> {
    type L = LaplacianBox;
    let e = edge_unit_r();
    let (idg, idh) = (IncidenceMorphism::identity(g), IncidenceMorphism::identity(h));
    let gh = laplacian_product(g, h);
    let m = laplacian_mor;
    let inv = |f: &IncidenceMorphism| f.inverse().expect("structure maps are invertible");

    let anti = left_anti_unitor(g) == right_anti_unitor(g).compose(&laplacian_commutator(&e, g))?;
    let top = m(&left_anti_unitor(g), &idh) == m(&right_anti_unitor(g), &idh).compose(&m(&laplacian_commutator(&e, g), &idh))?;
    let left = left_anti_unitor(&gh) == right_anti_unitor(&gh).compose(&laplacian_commutator(&e, &gh))?;
    let bottom =
        m(&idg, &left_anti_unitor(h)) == m(&idg, &right_anti_unitor(h)).compose(&m(&idg, &laplacian_commutator(&e, h)))?;
    let hexagon = hexagon::<L>(&e, g, h)?;

    let iso1 = chain(&[m(&left_anti_unitor(g), &idh), inv(&laplacian_associator(&e, g, h)), inv(&left_anti_unitor(&gh))])?;
    let iso2 = chain(&[
        m(&idg, &left_anti_unitor(h)),
        laplacian_associator(g, &e, h),
        m(&laplacian_commutator(&e, g), &idh),
        inv(&m(&left_anti_unitor(g), &idh)),
    ])?;
    let iso3 = chain(&[m(&idg, &right_anti_unitor(h)), laplacian_associator(g, h, &e), inv(&right_anti_unitor(&gh))])?;
    let composite = iso1.is_iso() && iso2.is_iso() && iso3.is_iso() && iso3 == iso2.compose(&iso1)?;
    Ok(Triforce { anti_unitor_triangle: anti, top, left, bottom, hexagon, composite })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::generators::*;

    #[test]
    fn coherence_on_paths() {
        let (a, b, c) = (path_r(1), path_r(2), cycle_r(1));
        assert!(pentagon::<LaplacianBox>(&a, &b, &c, &a).unwrap());
        assert!(pentagon::<IncidenceBox>(&a, &b, &c, &a).unwrap());
        assert!(triangle::<LaplacianBox>(&a, &b).unwrap());
        assert!(hexagon::<LaplacianBox>(&a, &b, &c).unwrap());
        assert!(symmetry::<IncidenceBox>(&b, &c).unwrap());
        let (p, q) = (path_q(1), cycle_q(2));
        assert!(pentagon::<QuiverBox>(&p, &q, &p, &q).unwrap());
        assert!(hexagon::<QuiverBox>(&p, &q, &p).unwrap());
        let (h, k) = (n_edge_h(2), cycle_h(1));
        assert!(triangle::<HypergraphBox>(&h, &k).unwrap());
        assert!(hexagon::<HypergraphBox>(&h, &k, &h).unwrap());
    }

    #[test]
    fn triforce_on_paths() {
        let t = triforce(&path_r(2), &path_r(1)).unwrap();
        assert!(t.holds(), "{t:?}");
    }
}
