//! Constructive maps between restricted Dumont permutations and other objects.

mod composition;
mod dyck;
mod foata;
mod reflect;
mod split;

use thiserror::Error;

use crate::dumont::DumontError;
use crate::perm::Permutation;

pub use composition::{composition_to_d4_1342, d4_1342_to_composition, Composition};
pub use dyck::{d4_321_to_dyck, dyck_to_d4_321, DyckPath, Step};
pub use foata::{foata, foata_inverse};
pub use reflect::{construct_1324_avoider, reflect_1243_to_1324, reflect_1324_to_1243, Avoider1324};
pub use split::{split_single_321, BParity, SplitPair};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("{perm} is not in {set}")]
    NotMember { perm: Permutation, set: &'static str },
    #[error("malformed Dyck path: {0}")]
    MalformedPath(String),
    #[error("malformed composition: {0}")]
    MalformedComposition(String),
    #[error("parameters out of range: {0}")]
    OutOfRange(String),
    #[error("{perm} contains {found} occurrences of 321, expected exactly one")]
    NotSingleOccurrence { perm: Permutation, found: u64 },
    /// A construction produced an object violating its own postcondition.
    #[error("internal consistency check failed: {0}")]
    Internal(String),
    #[error(transparent)]
    Dumont(#[from] DumontError),
}

fn require(cond: bool, perm: &Permutation, set: &'static str) -> Result<(), BijectionError> {
    if cond {
        Ok(())
    } else {
        Err(BijectionError::NotMember {
            perm: perm.clone(),
            set,
        })
    }
}
