//! Exact arithmetic on monomial ideals of `K[x,y]`.
//!
//! Coefficients never matter for monomial ideals, so everything here is
//! exponent combinatorics: an ideal is its staircase of minimal generators
//! ([`StaircaseIdeal`]), products and powers are computed on exponent pairs,
//! and `μ(I)` is the length of the staircase.
//!
//! Beyond the basic arithmetic the crate provides the family of ideals with
//! `μ(I) = m` and `μ(I²) = 9` ([`constructions`]), the pair/divisor
//! bookkeeping used to reason about minimal generators of squares
//! ([`gamma`]), and bounded exhaustive searches for the least possible
//! `μ(I²)` ([`search`]).

pub mod cli;
pub mod constructions;
pub mod error;
pub mod gamma;
pub mod ideal;
pub mod monomial;
pub mod search;

pub use error::{Error, Result};
pub use ideal::{
    contains, ideal_power, ideal_product, minimalize, minimalize_pairwise, mu, normalize,
    pair_product, PairIndex, StaircaseIdeal,
};
pub use monomial::{divides, product, Monomial};
