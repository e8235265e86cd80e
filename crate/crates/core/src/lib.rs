//! c-differential uniformity of functions over GF(p^n).
//!
//! The crate builds table-driven finite fields ([`field`]), evaluates the
//! quadratic character and absolute trace ([`character`]), counts solutions of
//! `F(x + a) - c F(x) = b` by exhaustion ([`cdiff`]), and checks published
//! bounds for families of power functions against those counts
//! ([`families`]). [`report`] renders verification results as human-readable
//! text, JSON or CSV.

pub mod arith;
pub mod cdiff;
pub mod character;
pub mod families;
pub mod field;
pub mod report;

pub use cdiff::{FunctionUnderTest, SpectrumResult, UniformityResult};
pub use field::{Element, Field, FieldError, FieldSpec};
