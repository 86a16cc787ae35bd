//! A finite-model kernel of quasi-set theory.
//!
//! Values live on two layers. The raw layer tags every m-atom occurrence
//! with a hidden [`Witness`], so that a qset can hold several
//! indistinguishable particles. The observable layer is the [`View`]:
//! a witness-free description that every public rendering and every
//! indistinguishability test is computed from.
//!
//! ```
//! use quasiset::{ops, QSet, Occurrence};
//!
//! let x = QSet::from_occurrences([Occurrence::mocc("e", 0), Occurrence::mocc("e", 1)]);
//! let y = QSet::from_occurrences([Occurrence::mocc("e", 7), Occurrence::mocc("e", 9)]);
//! assert!(ops::indistinguishable_qsets(&x, &y));
//! assert_ne!(x, y);
//! assert_eq!(x.quasi_cardinal(), 2);
//! ```

pub mod combinatorics;
pub mod error;
pub mod gen;
pub mod laws;
pub mod ops;
pub mod power;
pub mod qfun;
pub mod render;
pub mod stat;
pub mod universe;
pub mod value;

pub use error::{QSetError, Result, StatError};
pub use ops::{Classification, ExtEq};
pub use power::{power_qset, PowerEntry};
pub use qfun::{classify_qfunction, enumerate_qfunctions, QfKind, QuasiFunction};
pub use stat::{DistributionReport, Model, OccupancyVector};
pub use universe::Universe;
pub use value::{Fresh, MAtomLabel, Occurrence, QSet, Species, View, Witness};

/// The guide's chapters, compiled so their examples stay in sync.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/two-layers.md")]
    mod two_layers {}
    #[doc = include_str!("../../../book/src/indistinguishability.md")]
    mod indistinguishability {}
    #[doc = include_str!("../../../book/src/operations.md")]
    mod operations {}
    #[doc = include_str!("../../../book/src/universes.md")]
    mod universes {}
    #[doc = include_str!("../../../book/src/quasi-functions.md")]
    mod quasi_functions {}
    #[doc = include_str!("../../../book/src/statistics.md")]
    mod statistics {}
}
