//! Spatially-coupled LDPC code construction for partial-response channels.
//!
//! The pipeline partitions a circulant-based base protograph with the
//! optimal-overlap (OO) objective, couples it, and then tunes circulant powers
//! to remove lifted `(4, 4(γ-2))` absorbing/trapping sets.
//!
//! Counting code is generic over an integer [`Count`] type. The aliases below
//! fix the common choices.

pub mod census;
pub mod cpo;
pub mod error;
pub mod io;
pub mod lifting;
pub mod matrix;
pub mod num;
pub mod oo;
pub mod params;
pub mod protograph;

pub use error::{Error, Result};
pub use num::Count;
pub use params::CodeParams;

/// Exact weighted count over the default scalar.
pub type Weighted = num_rational::Ratio<i64>;
/// Pattern census over `i64` counts.
pub type Census = census::PatternCensus<i64>;
/// Pattern census over `i128` counts, for very wide protographs.
pub type WideCensus = census::PatternCensus<i128>;
