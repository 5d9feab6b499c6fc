//! Ideal completions, compact parts, and the round trips between
//! multiplicative semilattices and precoherent near prequantales.

pub mod functor;
pub mod ideals;
pub mod lazy;

pub use functor::{
    compose, equivalence_coherent, idl_functorial, idl_of_morphism, is_isomorphism, is_precoherent_morphism,
    is_semilattice_morphism, k_functor, k_functorial, k_of_morphism, quantale_roundtrip, roundtrip_checks,
    semilattice_roundtrip, Category, CompactPart, RoundTrip,
};
pub use ideals::{
    down_closure, downarrow_on_subsets, downarrow_submultiplicative, ideals, idl, is_ideal, DownarrowOnSubsets,
    IdealCompletion,
};
pub use lazy::{compact_upsets, finite_union_semilattice};
