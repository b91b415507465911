//! Exact power series, closed forms and generating functions.

pub mod cf;
pub mod closed;
pub mod genocchi;
pub mod identities;
pub mod series;

use thiserror::Error;

pub use cf::{catalan_trunc, d4_1423_series, solve_prst_system, Parity, PrstSolution};
pub use closed::{binomial, catalan, closed_form, closed_form_range, SequenceId};
pub use genocchi::genocchi;
pub use identities::{gf_identities_check, IdentityCheck};
pub use series::{RationalSeries, TruncatedSeries};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("division by a series with zero constant term")]
    ZeroConstantTerm,
    #[error("quotient has a non-integral coefficient at degree {degree}")]
    NonIntegral { degree: usize },
    #[error("{id} is defined for {range}, not n = {n}")]
    OutOfRange { id: SequenceId, n: u64, range: String },
    #[error("unknown sequence id {0:?}")]
    UnknownId(String),
    #[error("internal error: {0}")]
    Internal(String),
}
