//! Exact local intersection analysis of plane curve pairs at the origin.
//!
//! Given two curves f, g in k[x,y] through the origin with no common
//! component, this crate computes the local intersection multiplicity e,
//! the initial degrees c and d, the common-tangent count t, the colon-ideal
//! correction invariants, and the multiplicities of the strict transforms
//! on the two blow-up charts, then verifies the identities tying all of
//! these together. Two independent engines (a Groebner-based stabilized
//! length and a recursive reduction count) cross-check every multiplicity.

pub mod bezout;
pub mod blowup;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod field;
pub mod groebner;
pub mod localmult;
pub mod parse;
pub mod poly;
pub mod tangentcone;

pub use error::{Error, Result};
pub use field::{FieldElem, FieldSpec};
pub use parse::parse;
pub use poly::{binary_form_gcd, share_nonconstant_factor, Monomial, MultiPoly};
