//! Finitary closures, the companion `⋆_f`, and compactness after quotienting.

pub mod finite;
pub mod lazy;

pub use finite::{
    composition_monoid, composition_sup_join, finite_type_checks, is_finitary, star_f, verify_klattice,
    FinitaryReport, KLatticeVerdict,
};
pub use lazy::{
    check_star_f, is_finitary_lazy, klattice_lazy, star_f_lazy, upset_samples, ChainClosure, FiniteOrFull,
    LazyMagma, LazyNucleus, Saturation, StarFSummary,
};
