//! Finite-poset algebra toolkit: bounded posets with a dense bitmask
//! representation, cone operators, the complement-set operator ⁺ and its
//! closed-set ortholattice, derived residuation-style operators, the
//! Dedekind-MacNeille completion, convex-subset posets, and exhaustive
//! search/verification over small posets up to isomorphism.

pub mod checks;
pub mod complement;
pub mod completion;
pub mod cone;
pub mod error;
pub mod exec;
pub mod fixtures;
pub mod poset;
pub mod residuation;
pub mod search;

pub use error::{Error, Result};
pub use exec::ExecMode;
pub use poset::{as_bounded, horizontal_sum, BoundedPoset, Elem, Poset, Subset, MAX_ELEMENTS};
