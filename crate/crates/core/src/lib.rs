pub mod calculus;
pub mod check;
pub mod darboux;
pub mod error;
pub mod graded;
pub mod io;
pub mod linalg;
pub mod scalar;
pub mod stack;
pub mod symplectification;
pub mod verify;

#[cfg(test)]
mod testing;

pub use error::{Error, Result};
pub use scalar::Field;

/// Exact rationals, the default coefficient field.
pub type Q = num_rational::BigRational;
