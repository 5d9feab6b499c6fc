//! Ordered magmas over finite posets: classification into the prequantale
//! family, residuals, and distinguished element sets.

pub mod builders;
pub mod classify;
pub mod magma;
pub mod sets;

pub use classify::{ClassificationProfile, IMPLICATIONS};
pub use magma::{OrderedMagma, Residual};
pub use sets::DistinguishedSets;
