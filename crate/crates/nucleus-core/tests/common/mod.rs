#![allow(dead_code)]

use magma_core::OrderedMagma;
use order_core::FinitePoset;
use proptest::prelude::*;

/// Ideals of Z/4: (0) < (2) < (1), with (2)(2) = (0).
pub fn z4_ideals() -> OrderedMagma {
    let p = FinitePoset::chain(3)
        .with_labels(vec!["(0)".into(), "(2)".into(), "(1)".into()])
        .unwrap();
    OrderedMagma::new(p, vec![vec![0, 0, 0], vec![0, 0, 1], vec![0, 1, 2]]).unwrap()
}

/// 2^G for G = Z/2 as bitmasks over {1, g}; optionally without the empty set.
pub fn powerset_z2(drop_empty: bool) -> OrderedMagma {
    let masks: Vec<usize> = (0..4).filter(|&m| !(drop_empty && m == 0)).collect();
    let labels = masks.iter().map(|m| format!("m{m}")).collect();
    let poset = FinitePoset::from_fn(labels, |a, b| masks[a] & !masks[b] == 0).unwrap();
    let prod = |a: usize, b: usize| {
        let mut out = 0;
        for i in 0..2 {
            for j in 0..2 {
                if a >> i & 1 == 1 && b >> j & 1 == 1 {
                    out |= 1 << (i ^ j);
                }
            }
        }
        out
    };
    OrderedMagma::from_fn(poset, |x, y| {
        masks
            .iter()
            .position(|&m| m == prod(masks[x], masks[y]))
            .unwrap()
    })
    .unwrap()
}

pub fn m3() -> FinitePoset {
    FinitePoset::from_covers(
        (0..5).map(|i| i.to_string()).collect(),
        &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)],
    )
    .unwrap()
}

/// Monotone table: each entry joins random values over the product down-set.
pub fn monotone_magma(poset: FinitePoset, raw: &[usize]) -> OrderedMagma {
    let n = poset.size();
    let p = poset.clone();
    OrderedMagma::from_fn(poset, |x, y| {
        let mut acc = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if p.leq(a, x) && p.leq(b, y) {
                    acc.push(raw[a * n + b] % n);
                }
            }
        }
        p.sup(&acc).unwrap()
    })
    .unwrap()
}

pub fn lattice_carrier() -> impl Strategy<Value = FinitePoset> {
    prop_oneof![
        (1usize..6).prop_map(FinitePoset::chain),
        Just(FinitePoset::diamond()),
        Just(FinitePoset::boolean(2)),
        Just(m3()),
    ]
}

pub fn random_magma() -> impl Strategy<Value = OrderedMagma> {
    lattice_carrier().prop_flat_map(|p| {
        let n = p.size();
        proptest::collection::vec(0usize..8, n * n)
            .prop_map(move |raw| monotone_magma(p.clone(), &raw))
    })
}

/// Random poset on up to `max` elements from a random upper-triangular relation.
pub fn random_poset(max: usize) -> impl Strategy<Value = FinitePoset> {
    (1usize..=max).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            let covers: Vec<(usize, usize)> = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| bits[i * n + j])
                .collect();
            FinitePoset::from_covers((0..n).map(|i| i.to_string()).collect(), &covers).unwrap()
        })
    })
}
