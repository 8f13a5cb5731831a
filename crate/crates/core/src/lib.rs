//! Box products, exponentials, incidence duality and the Laplacian product
//! for quivers, set-system hypergraphs and incidence hypergraphs, with the
//! oriented-hypergraph matrices they compute.

pub mod core;
pub mod document;
pub mod elem;
pub mod error;
pub mod exponentials;
pub mod functors;
pub mod homsearch;
pub mod products;
pub mod random;
pub mod spectral;
pub mod suites;

pub use crate::core::*;
pub use crate::elem::Elem;
pub use crate::error::{Error, Result};
