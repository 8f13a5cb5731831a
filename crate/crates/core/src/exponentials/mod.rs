//! Exponential objects for the four box products and the Laplacian product.
//!
//! Carrier elements are labelled by the serialization of the morphism or
//! function they stand for, so `carrier().vertices().get(&m.to_elem())`
//! is the index map. Each `*_index` accessor goes the other way.

mod incidence;
mod quiver;
mod setsystem;
pub mod yoneda;

use std::fmt::Debug;

pub use incidence::{exp_box_r, exp_laplacian, IncidenceBoxExponential, LaplacianExponential};
pub use quiver::{exp_box_q, QuiverExponential};
pub use setsystem::{exp_box_h, exp_box_h_capped, exp_box_m, size_guard, HypergraphExponential, DEFAULT_SIZE_GUARD};

use crate::core::{Morphism, Sort, SortKind};
use crate::elem::Elem;
use crate::error::{Error, Result};
use crate::homsearch::{all_homs, HomSearch};

/// An exponential `[G,H]` with its evaluation and the currying bijection
/// `hom(G ⊠ K, H) ≅ hom(K, [G,H])`.
pub trait Exponential {
    type Object: HomSearch<Morphism = Self::Arrow> + Clone + PartialEq + Debug;
    type Arrow: Morphism<Object = Self::Object>;

    /// `G`.
    fn base(&self) -> &Self::Object;
    /// `H`.
    fn target(&self) -> &Self::Object;
    /// `[G,H]`.
    fn carrier(&self) -> &Self::Object;
    /// `ev: G ⊠ [G,H] -> H`.
    fn eval(&self) -> &Self::Arrow;
    /// `G ⊠ K`.
    fn product(&self, k: &Self::Object) -> Self::Object;
    /// `id_G ⊠ ψ`.
    fn product_right(&self, psi: &Self::Arrow) -> Self::Arrow;
    /// `φ: G ⊠ K -> H` to `φ̂: K -> [G,H]`.
    fn curry(&self, phi: &Self::Arrow, k: &Self::Object) -> Result<Self::Arrow>;

    /// `ψ: K -> [G,H]` to `ev ∘ (G ⊠ ψ)`.
    fn uncurry(&self, psi: &Self::Arrow) -> Result<Self::Arrow> {
        if psi.codomain() != self.carrier() {
            return Err(Error::Mismatch("morphism does not land in the exponential".into()));
        }
        self.eval().then_after(&self.product_right(psi))
    }
}

/// Outcome of checking the adjunction for one `K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjunctionCheck {
    pub product_homs: u64,
    pub curried_homs: u64,
    pub round_trips: bool,
    pub unique_factorization: bool,
}

impl AdjunctionCheck {
    pub fn holds(&self) -> bool {
        self.product_homs == self.curried_homs && self.round_trips && self.unique_factorization
    }
}

/// Enumerates both hom-sets and checks curry/uncurry are mutually inverse
/// and that every `φ` factors through `ev` exactly once.
pub fn check_adjunction<X: Exponential>(x: &X, k: &X::Object) -> Result<AdjunctionCheck> {
    let gk = x.product(k);
    let left = all_homs(&gk, x.target());
    let right = all_homs(k, x.carrier());
    let uncurried: Vec<X::Arrow> = right.iter().map(|psi| x.uncurry(psi)).collect::<Result<_>>()?;
    let mut round_trips = true;
    let mut unique = true;
    for phi in &left {
        round_trips &= x.uncurry(&x.curry(phi, k)?)? == *phi;
        unique &= uncurried.iter().filter(|u| *u == phi).count() == 1;
    }
    for (psi, u) in right.iter().zip(&uncurried) {
        round_trips &= x.curry(u, k)? == *psi;
    }
    Ok(AdjunctionCheck { product_homs: left.len() as u64, curried_homs: right.len() as u64, round_trips, unique_factorization: unique })
}

/// Homs sorted by label, so list position equals carrier index.
fn labelled<M: Morphism>(homs: Vec<M>) -> (Vec<Elem>, Vec<M>) {
    let mut pairs: Vec<(Elem, M)> = homs.into_iter().map(|m| (m.to_elem(), m)).collect();
    pairs.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    pairs.into_iter().unzip()
}

fn index_of(sort: &Sort, kind: SortKind, label: &Elem) -> Result<usize> {
    sort.get(label).ok_or_else(|| Error::UnknownElement { sort: kind.name(), label: label.to_string() })
}

fn wrong_domain(kind: &str) -> Error {
    Error::Mismatch(format!("domain is not a {kind} product with the exponent"))
}
