//! Exact antipode computations in combinatorial Hopf algebras.
//!
//! Each algebra implements [`hopf::HopfAlgebra`]. The generic evaluator in
//! [`hopf::takeuchi`] computes the antipode from the product and coproduct
//! alone, and each algebra also exposes a cancellation-free closed form so the
//! two can be compared term by term.

pub mod algebras;
pub mod codec;
pub mod combinat;
pub mod error;
pub mod graphs;
pub mod hopf;
pub mod linear;
pub mod par;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
pub use linear::{LinComb, Scalar, TensorKey};
pub use par::Execution;
