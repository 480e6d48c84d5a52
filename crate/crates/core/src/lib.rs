//! Exact computations with monomial ideals in `K[x1, .., xn]`.
//!
//! Variable indices in the Rust API are 0-based; every text and JSON format
//! is 1-based (`x1` is index 0).

pub mod classes;
pub mod closure;
pub mod complex;
pub mod decomp;
pub mod dsl;
pub mod error;
pub mod generate;
pub mod ideal;
pub mod json;
pub mod limits;
mod lp;
pub mod monomial;
pub mod polar;
pub mod selftest;
pub mod symbolic;

pub use classes::{Characteristic, IdealClass, StablyLexVerdict};
pub use complex::SimplicialComplex;
pub use decomp::MonomialPrime;
pub use error::{Error, ErrorKind, Result};
pub use generate::{gen_ideal, GenParams};
pub use ideal::MonomialIdeal;
pub use monomial::{Monomial, MonomialOrder, VarSet};
pub use polar::{PolarizedIdeal, SlotVar};
