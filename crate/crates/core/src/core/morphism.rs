use std::fmt::Debug;

use super::{
    HypergraphMorphism, IncidenceHypergraph, IncidenceMorphism, Quiver, QuiverMorphism, SetSystemHypergraph,
};
use crate::elem::Elem;
use crate::error::Result;

/// What the three morphism types have in common.
pub trait Morphism: Clone + PartialEq + Debug {
    type Object: Clone + PartialEq + Debug;

    fn domain(&self) -> &Self::Object;
    fn codomain(&self) -> &Self::Object;
    fn identity(o: &Self::Object) -> Self;
    /// `self ∘ f`.
    fn then_after(&self, f: &Self) -> Result<Self>;
    fn inverse(&self) -> Option<Self>;
    fn to_elem(&self) -> Elem;
}

macro_rules! impl_morphism {
    ($m:ty, $o:ty) => {
        impl Morphism for $m {
            type Object = $o;

            fn domain(&self) -> &$o {
                <$m>::domain(self)
            }

            fn codomain(&self) -> &$o {
                <$m>::codomain(self)
            }

            fn identity(o: &$o) -> Self {
                <$m>::identity(o)
            }

            fn then_after(&self, f: &Self) -> Result<Self> {
                <$m>::compose(self, f)
            }

            fn inverse(&self) -> Option<Self> {
                <$m>::inverse(self)
            }

            fn to_elem(&self) -> Elem {
                <$m>::to_elem(self)
            }
        }
    };
}

impl_morphism!(QuiverMorphism, Quiver);
impl_morphism!(HypergraphMorphism, SetSystemHypergraph);
impl_morphism!(IncidenceMorphism, IncidenceHypergraph);
