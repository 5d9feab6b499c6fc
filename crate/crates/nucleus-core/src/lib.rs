//! Closure operations and nuclei on finite ordered magmas.

pub mod closure;
pub mod enumerate;
pub mod galois;
pub mod induced;
pub mod lattice;
pub mod map;
pub mod morphism;
pub mod nucleus;
pub mod quotient;
pub mod tower;

pub use closure::{
    closure_from_image, closure_from_preclosure, enumerate_closures, enumerate_closures_naive,
    is_closure, is_preclosure,
};
pub use enumerate::{enumerate_nuclei, enumerate_nuclei_with, NucleusRoute};
pub use galois::{d_map, one_bracket, one_bracket_map, unit_part};
pub use induced::{induced_lower, induced_upper, is_saturated};
pub use lattice::{
    composition_join_check, nuclei_join, nuclei_meet, CompositionVerdict, NucleusLattice,
};
pub use map::MonotoneMap;
pub use morphism::nucleus_of_morphism;
pub use nucleus::{
    is_nucleus, is_strict, lax_transportables, nucleus_report, transportables, NucleusReport,
};
pub use quotient::{quotient, QuotientMagma};
pub use tower::{nucleus_tower, NucleusTower};
