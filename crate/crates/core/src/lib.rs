//! Root data, p-isogenies and complete root data, in exact arithmetic.
//!
//! A root datum is given by a factorization C = Ǎ·Aᵀ of a Cartan matrix:
//! the rows of `A` are the simple roots in X and the rows of `Ǎ` the simple
//! coroots in Y, so that c_st = ⟨α_t, α_s∨⟩.

pub mod cartan;
pub mod error;
pub mod exact_linalg;
pub mod generic_group;
pub mod isogeny;
pub mod rootdatum;

pub use error::{Error, Result};
pub use exact_linalg::{IntMat, QPoly, QuadMat, QuadNum};
