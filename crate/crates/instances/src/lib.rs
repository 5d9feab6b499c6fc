//! Concrete carriers: power sets of finite magmas, module and ideal systems,
//! ideal lattices of finite rings with the radical and tight closure, chain
//! examples and the numerical quantale of up-sets.

pub mod chains;
pub mod corpus;
pub mod desc;
pub mod ring;
pub mod semiprime;
pub mod systems;
pub mod upsets;

pub use chains::{chain_instances, group_with_infinity, truncated_chain, ChainInstance, ChainSpec};
pub use corpus::corpus;
pub use desc::{powerset_prequantale, FiniteMagmaDesc, POWERSET_CAP};
pub use ring::{ring_ideal_lattice, FiniteRing, RingDesc, RingIdealLattice, RING_CAP};
pub use semiprime::{
    radical_operation, tight_closure, tight_closure_star, tight_closure_t, TightClosure,
};
pub use systems::{
    ideal_system_conditions, ideal_system_lattice, is_ideal_system, is_module_system,
    is_weak_ideal_system, module_system_conditions, module_system_lattice, module_systems,
    weak_ideal_systems, IdealSystemConditions, ModuleSystemConditions, ZeroPowerSet, SYSTEM_CAP,
    SYSTEM_ENUMERATION_CAP,
};
pub use upsets::{
    shipped_upset_nuclei, spot_check_precoherent, upsets_quantale, PrecoherenceSpotCheck,
};
