use thiserror::Error;

use crate::value::{MAtomLabel, Species};

/// Failures raised by the quasi-set kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QSetError {
    #[error("expected a quasi-set, found {0}")]
    NotAQSet(String),
    #[error("species `{0}` is not declared in the universe")]
    UnknownSpecies(Species),
    #[error("M-atom {0} is not declared in the universe")]
    UnknownAtom(MAtomLabel),
    /// An m-atom occurrence lies beyond its species' declared population.
    #[error("an occurrence of species `{species}` lies outside the declared population of {population}")]
    OutsideUniverse { species: Species, population: usize },
    #[error("the element is not a member of the quasi-set")]
    NotMember,
    #[error("the replacement is already a member of the quasi-set")]
    AlreadyMember,
    #[error("the two elements are not indistinguishable")]
    NotIndistinguishable,
    #[error("cannot build a quasi-function from a nonempty domain into an empty codomain")]
    EmptyCodomain,
    #[error("every member of the family must be a quasi-set")]
    NotAFamily,
    #[error("members of the family are not pairwise disjoint")]
    NotDisjoint,
    #[error("the family has an empty member")]
    EmptyMember,
    /// An enumeration would exceed the configured finite bound.
    #[error("enumeration of {what} would produce {size} items (limit {limit})")]
    ScopeTooLarge {
        what: &'static str,
        size: String,
        limit: usize,
    },
}

/// Failures raised by the occupancy statistics.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StatError {
    #[error("the number of boxes must be at least 1")]
    InvalidShape,
    #[error("enumeration would produce {size} items (limit {limit})")]
    TooLarge { size: String, limit: usize },
}

pub type Result<T, E = QSetError> = std::result::Result<T, E>;
