//! Exact root-system combinatorics for adapted pairs of biparabolic subalgebras.
//!
//! Every quantity is computed over the integers or the rationals. Simple roots
//! are labelled 1..=n in Bourbaki order throughout the public API.

pub mod biparabolic;
pub mod cascade;
pub mod checker;
pub mod diophantine;
pub mod error;
pub mod frobenius_pairs;
pub mod integral_pairs;
mod linalg;
pub mod rootsys;
pub mod semiinvariant_weights;

pub use error::{Error, Result};
pub use rootsys::{Family, NodeSet, RootSystem, RootVec, SimpleSystem, WeightVec};
