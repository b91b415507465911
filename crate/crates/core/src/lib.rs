//! Exact enumeration of pattern-restricted Dumont permutations.
//!
//! - [`perm`]: permutations, symmetries, positional statistics
//! - [`dumont`]: membership tests and pruned generators for the four kinds
//! - [`patterns`]: classical/vincular containment and restricted enumeration
//! - [`bijections`]: Foata's transformation and the constructive maps onto
//!   Dyck paths, compositions and reflected avoiders
//! - [`gfseries`]: exact truncated power series, closed forms, Genocchi numbers
//!   and the continued-fraction generating function for `D4(1423)`
//! - [`harness`]: verification suites, conjecture experiments and diagrams
//! - [`golden`]: reference values vendored under `golden/`

pub mod bijections;
pub mod dumont;
pub mod gfseries;
pub mod golden;
pub mod harness;
pub mod patterns;
pub mod perm;

pub use bijections::{BijectionError, Composition, DyckPath};
pub use dumont::{DumontError, DumontKind};
pub use gfseries::{SequenceId, SeriesError, TruncatedSeries};
pub use harness::{DistributionTable, HarnessError, RunOptions, Suite, VerificationReport};
pub use patterns::{AvoidanceQuery, ClassicalPattern, PatternError, Restriction, VincularPattern};
pub use perm::{PermError, Permutation, StatProfile};
