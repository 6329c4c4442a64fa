//! Exact scalar arithmetic: rationals and the real cyclotomic fields
//! Q(2cos(pi/N)) used by the geometric representation.

pub mod poly;
pub mod scalar;

pub use poly::Rat;
pub use scalar::{AlgebraicScalar, FieldContext};
