//! Named finite carriers used throughout the test suites.

use magma_core::builders::{chain_join, chain_meet, lattice_join, lattice_meet, two_element};
use magma_core::OrderedMagma;
use order_core::FinitePoset;

use crate::chains::group_with_infinity;
use crate::desc::{powerset_prequantale, FiniteMagmaDesc};
use crate::ring::{ring_ideal_lattice, RingDesc};

fn ideals(desc: RingDesc) -> OrderedMagma {
    ring_ideal_lattice(&desc)
        .expect("shipped rings are small")
        .magma
}

/// Every shipped finite carrier, with a short name.
pub fn corpus() -> Vec<(String, OrderedMagma)> {
    let z2 = FiniteMagmaDesc::cyclic_group(2);
    let lz = FiniteMagmaDesc::left_zero(2);
    let poly = |f: &str| RingDesc::poly(2, f).expect("valid polynomial");
    vec![
        (
            "2^Z2".into(),
            powerset_prequantale(&z2, false).expect("small"),
        ),
        (
            "2^Z2-empty".into(),
            powerset_prequantale(&z2, true).expect("small"),
        ),
        ("I(Z/4)".into(), ideals(RingDesc::Zmod(4))),
        ("I(Z/6)".into(), ideals(RingDesc::Zmod(6))),
        ("I(Z/8)".into(), ideals(RingDesc::Zmod(8))),
        ("I(Z/12)".into(), ideals(RingDesc::Zmod(12))),
        ("I(F2[x]/(x^3))".into(), ideals(poly("x^3"))),
        ("I(F2[x]/(x^2))".into(), ideals(poly("x^2"))),
        (
            "diamond-join".into(),
            lattice_join(FinitePoset::diamond()).expect("lattice"),
        ),
        (
            "diamond-meet".into(),
            lattice_meet(FinitePoset::diamond()).expect("lattice"),
        ),
        ("chain3-join".into(), chain_join(3)),
        ("chain4-meet".into(), chain_meet(4)),
        (
            "2^LZ2".into(),
            powerset_prequantale(&lz, false).expect("small"),
        ),
        ("{0,1}".into(), two_element()),
        (
            "Z3[inf]".into(),
            group_with_infinity(3, false).expect("small"),
        ),
        (
            "Z2[+-inf]".into(),
            group_with_infinity(2, true).expect("small"),
        ),
    ]
}
