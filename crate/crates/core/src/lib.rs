//! Exact plethysm coefficients, positive-plethysm semigroups and finite-field
//! evaluation of highest weight vectors on Chow and power-sum varieties.

pub mod combinatorics;
pub mod error;
pub mod hwv;
pub mod obstructions;
pub mod plethysm;
pub mod semigroup;

pub use combinatorics::{Composition, Partition, QPolynomial};
pub use error::{Error, Result};
