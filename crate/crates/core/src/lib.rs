//! Credit weights for multi-author papers.
//!
//! A paper with `k` authors hands each author a positional share of its
//! credit. This crate computes those shares under five schemes (equal,
//! arithmetic type-1, arithmetic type-2 with a tunable decrement `alpha`,
//! geometric and harmonic), solves for and validates `alpha`, applies the
//! shares to citation counts to get per-author weighted h-indices, and
//! regenerates reference tables and plot datasets.
//!
//! The scheme functions are generic over [`Scalar`]; the aliases below fix
//! the exact instantiation used by the index, I/O and report layers.

pub mod corpus;
pub mod error;
pub mod fraction;
pub mod index;
pub mod report;
pub mod scalar;
pub mod scheme;

pub use error::WeightError;
pub use scalar::Scalar;
pub use scheme::{
    equal_weights, geometric_weights, harmonic_weights, type1_weights, type2_weights, Positivity,
    SchemeKind, SchemeSpec, WeightVector,
};

/// Exact arbitrary-precision rational.
pub type Rational = num_rational::BigRational;

/// Exact weights; the representation used for tables and indexing.
pub type Weights = WeightVector<Rational>;
/// Double-precision weights.
pub type WeightsF64 = WeightVector<f64>;

pub type Scheme = SchemeSpec<Rational>;
pub type SchemeF64 = SchemeSpec<f64>;
pub type Bound = scheme::AlphaBound<Rational>;
