//! Exact arithmetic for the dg bialgebra of coinvariant sharblies over `Z`.

pub mod bialgebra;
pub mod canon;
pub mod cli;
pub mod classes;
pub mod error;
pub mod json;
pub mod linalg;
pub mod truncation;
pub mod verify;

pub use bialgebra::{antipode, boundary, coproduct, counit, is_primitive, product, TensorElement};
pub use canon::{canonicalize, BasicSharbly, Canonical, CanonicalSharbly, Character, Element};
pub use error::{Error, Result};
