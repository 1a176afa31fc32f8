//! Free graded-commutative polynomial algebras over an exact field, with
//! generators in nonpositive degrees.

mod element;
mod monomial;
mod point;
mod signature;

pub use element::Element;
pub(crate) use element::apply_sign;
pub use monomial::Monomial;
pub use point::Point;
pub use signature::{make_algebra, Gen, GeneratorSpec, Signature, SignatureRef};
pub(crate) use signature::same_signature;
