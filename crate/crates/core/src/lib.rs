//! Exact rational post-Lie algebra structures, Rota-Baxter operators and the
//! structure theory of the Lie algebras involved.

pub mod catalog;
pub mod error;
pub mod exactla;
pub mod laj;
pub mod liealg;
pub mod postlie;
pub mod solver;

pub use error::{Error, ErrorClass, Result};
pub use exactla::{Matrix, Rational, Vector};
pub use liealg::{Fingerprint, LieAlgebra, LinearMap, Subspace};
pub use postlie::{BilinearProduct, LiePair};
