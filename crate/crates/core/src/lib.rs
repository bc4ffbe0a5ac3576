//! Exact computer algebra for symmetric functions of Calogero--Moser--
//! Sutherland type: Jack, Hermite, Laguerre and Jacobi symmetric functions,
//! the differential operators they diagonalise, Pieri recurrences, dualities,
//! invariant ideals, truncated hypergeometric series, and the restriction to
//! super polynomials under deformed CMS operators.
//!
//! All arithmetic is exact over big-integer rationals; rational-function
//! equality is semantic (cross multiplication).

pub mod error;
pub mod exec;
pub mod scalar;
pub mod partition;
pub mod symfunc;
pub mod ops;
pub mod context;
pub mod family;
pub mod hyper;
pub mod superpoly;
pub mod text;
pub mod verify;

pub use context::Context;
pub use error::CmsError;
pub use exec::ExecMode;
pub use partition::Partition;
pub use scalar::{Generator, MPoly, Rat, Scalar};
pub use symfunc::{Basis, SymFunc};
