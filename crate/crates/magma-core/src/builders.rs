use order_core::{Error, FinitePoset, Result};

use crate::magma::OrderedMagma;

/// A join semilattice with multiplication `∨`.
pub fn lattice_join(poset: FinitePoset) -> Result<OrderedMagma> {
    if !poset.flags().join_semilattice {
        return Err(Error::hypothesis("multiplication by join needs a join semilattice"));
    }
    let p = poset.clone();
    OrderedMagma::from_fn(poset, |x, y| p.join(x, y).expect("checked above"))
}

/// A meet semilattice with multiplication `∧`.
pub fn lattice_meet(poset: FinitePoset) -> Result<OrderedMagma> {
    if !poset.flags().meet_semilattice {
        return Err(Error::hypothesis("multiplication by meet needs a meet semilattice"));
    }
    let p = poset.clone();
    OrderedMagma::from_fn(poset, |x, y| p.meet(x, y).expect("checked above"))
}

/// The `n`-chain `0 < 1 < ... < n-1` under `max`.
pub fn chain_join(n: usize) -> OrderedMagma {
    lattice_join(FinitePoset::chain(n)).expect("chains are lattices")
}

/// The `n`-chain under `min`.
pub fn chain_meet(n: usize) -> OrderedMagma {
    lattice_meet(FinitePoset::chain(n)).expect("chains are lattices")
}

/// The multiplicative lattice `{0, 1}`.
pub fn two_element() -> OrderedMagma {
    chain_meet(2)
}

/// The one-element magma.
pub fn trivial() -> OrderedMagma {
    chain_meet(1)
}
