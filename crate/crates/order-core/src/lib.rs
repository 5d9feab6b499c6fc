//! Finite and lazily represented posets: suprema, infima, directedness and
//! compactness, plus the error type shared across the workspace.

pub mod error;
pub mod lazy;
pub mod poset;

pub use error::{Error, Result};
pub use lazy::{CarrierKind, ChainOmega, EffectivePoset, Family, Omega, Subset, UpSet, UpSetsCarrier};
pub use poset::{mask_members, subsets, ElementId, FinitePoset, PosetFlags, ENUMERATION_CAP};
