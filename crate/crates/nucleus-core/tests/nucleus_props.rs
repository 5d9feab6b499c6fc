mod common;

use common::{lattice_carrier, monotone_magma, powerset_z2, random_magma, random_poset, z4_ideals};
use magma_core::builders::{chain_join, chain_meet, lattice_join, lattice_meet};
use magma_core::OrderedMagma;
use nucleus_core::closure::closure_from_image;
use nucleus_core::galois::galois_laws_hold;
use nucleus_core::nucleus::*;
use nucleus_core::*;
use order_core::{ElementId, FinitePoset};
use proptest::prelude::*;

/// Bottom acts as a unit on the left (and on the right too when `two_sided`).
fn unital_magma(p: FinitePoset, raw: &[usize], two_sided: bool) -> OrderedMagma {
    let g = monotone_magma(p.clone(), raw);
    let b = p.bottom().unwrap();
    OrderedMagma::from_fn(p.clone(), |x, y| {
        if x == b {
            y
        } else if y == b && two_sided {
            x
        } else if two_sided {
            p.sup(&[x, y, g.mul(x, y)]).unwrap()
        } else {
            p.sup(&[y, g.mul(x, y)]).unwrap()
        }
    })
    .unwrap()
}

fn unital() -> impl Strategy<Value = OrderedMagma> {
    (lattice_carrier(), any::<bool>()).prop_flat_map(|(p, two)| {
        let n = p.size();
        proptest::collection::vec(0usize..8, n * n)
            .prop_map(move |raw| unital_magma(p.clone(), &raw, two))
    })
}

/// Uniform maps, closures from random images, and closures with one entry moved.
fn map_for(n: usize) -> impl Strategy<Value = (usize, Vec<usize>, Vec<bool>, usize, usize)> {
    (
        0usize..3,
        proptest::collection::vec(0..n, n),
        proptest::collection::vec(any::<bool>(), n),
        0..n,
        0..n,
    )
}

fn realize(
    m: &OrderedMagma,
    (kind, raw, bits, at, to): (usize, Vec<usize>, Vec<bool>, usize, usize),
) -> Vec<ElementId> {
    let p = m.poset();
    let img: Vec<ElementId> = p
        .elements()
        .filter(|&x| bits[x] || Some(x) == p.top())
        .collect();
    let closure = closure_from_image(p, &img)
        .map(MonotoneMap::into_vec)
        .unwrap_or_else(|| p.elements().collect());
    match kind {
        0 => raw,
        1 => closure,
        _ => {
            let mut c = closure;
            c[at] = to;
            c
        }
    }
}

fn magma_and_map(
    ms: impl Strategy<Value = OrderedMagma>,
) -> impl Strategy<Value = (OrderedMagma, Vec<ElementId>)> {
    ms.prop_flat_map(|m| {
        let n = m.size();
        map_for(n).prop_map(move |raw| {
            let f = realize(&m, raw);
            (m.clone(), f)
        })
    })
}

fn commutative_monoids() -> Vec<OrderedMagma> {
    vec![
        chain_join(4),
        chain_meet(3),
        lattice_join(FinitePoset::diamond()).unwrap(),
        lattice_meet(FinitePoset::boolean(2)).unwrap(),
        powerset_z2(false),
        powerset_z2(true),
        z4_ideals(),
    ]
}

#[test]
fn galois_connection_on_commutative_monoids() {
    for m in commutative_monoids() {
        let nuclei = enumerate_nuclei(&m).unwrap();
        assert!(galois_laws_hold(&m, &nuclei).unwrap());
        for a in m.r_set().unwrap() {
            let da = d_map(&m, a).unwrap();
            assert_eq!(unit_part(&m, &da).unwrap(), a);
        }
    }
}

#[test]
fn bracket_is_least_idempotent_above() {
    for m in commutative_monoids() {
        if m.classify().unwrap().near_prequantale {
            let s = one_bracket_map(&m).unwrap();
            for x in m.elements() {
                assert_eq!(one_bracket(&m, x).unwrap(), s[x]);
            }
        }
    }
}

#[test]
fn tower_levels_on_small_carriers() {
    for m in [
        chain_join(3),
        powerset_z2(false),
        z4_ideals(),
        lattice_meet(FinitePoset::diamond()).unwrap(),
    ] {
        let t = nucleus_tower(&m, 2).unwrap();
        assert_eq!(t.levels.len(), 2);
        assert_eq!(t.simple, t.sizes()[0] <= 2);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(250))]

    #[test]
    fn closure_enumeration_matches_brute_force(p in random_poset(6)) {
        prop_assert_eq!(enumerate_closures(&p).unwrap(), enumerate_closures_naive(&p).unwrap());
    }

    #[test]
    fn closure_conditions_agree((m, f) in magma_and_map(random_magma())) {
        if is_closure(m.poset(), &f) {
            let a = cond_products(&m, &f);
            prop_assert_eq!(a, cond_closed_products(&m, &f));
            prop_assert_eq!(a, cond_one_sided(&m, &f));
        }
    }

    #[test]
    fn unital_conditions_agree((m, f) in magma_and_map(unital())) {
        let n = is_nucleus(&m, &f);
        prop_assert_eq!(n, cond_residual_form(&m, &f));
        prop_assert_eq!(n, cond_expansive_transfer(&m, &f));
        if m.is_associative() && m.unit().is_some() && is_closure(m.poset(), &f) {
            prop_assert_eq!(n, star_product_associative(&m, &f));
        }
    }

    #[test]
    fn invertibles_are_transportable(m in prop_oneof![random_magma(), unital()]) {
        let inv = m.invertibles();
        for s in enumerate_nuclei(&m).unwrap() {
            let t = transportables(&m, s.as_slice());
            prop_assert!(inv.iter().all(|u| t.contains(u)));
        }
    }

    #[test]
    fn spanning_transportables_force_nucleus(m in random_magma()) {
        for s in enumerate_closures(m.poset()).unwrap() {
            let t = transportables(&m, s.as_slice());
            if m.is_sup_spanning(&t).unwrap() {
                prop_assert!(is_nucleus(&m, s.as_slice()));
            }
        }
    }

    #[test]
    fn spanning_set_test((m, bits) in random_magma().prop_flat_map(|m| {
        let n = m.size();
        (Just(m), proptest::collection::vec(any::<bool>(), n))
    })) {
        let sigma: Vec<ElementId> = m.elements().filter(|&x| bits[x]).collect();
        let all: Vec<ElementId> = m.elements().collect();
        for s in enumerate_closures(m.poset()).unwrap() {
            prop_assert_eq!(nucleus_via_spanning(&m, s.as_slice(), &all).unwrap(), is_nucleus(&m, s.as_slice()));
            if m.is_sup_spanning(&sigma).unwrap() {
                nucleus_via_spanning(&m, s.as_slice(), &sigma).unwrap();
            }
        }
    }

    #[test]
    fn meets_and_joins_are_lattice_bounds((m, i, j) in random_magma().prop_flat_map(|m| (Just(m), 0usize..64, 0usize..64))) {
        let nuclei = enumerate_nuclei(&m).unwrap();
        let (a, b) = (&nuclei[i % nuclei.len()], &nuclei[j % nuclei.len()]);
        let p = m.poset();
        let meet = nuclei_meet(&m, &[a.clone(), b.clone()]).unwrap();
        prop_assert!(nuclei.contains(&meet));
        for c in &nuclei {
            prop_assert_eq!(c.leq(p, a) && c.leq(p, b), c.leq(p, &meet));
        }
        if m.classify().unwrap().near_prequantale {
            let join = nuclei_join(&m, &[a.clone(), b.clone()]).unwrap();
            for c in &nuclei {
                prop_assert_eq!(a.leq(p, c) && b.leq(p, c), join.leq(p, c));
            }
            let lat = NucleusLattice::from_nuclei(&m, nuclei.clone()).unwrap();
            let (ia, ib) = (lat.index_of(a).unwrap(), lat.index_of(b).unwrap());
            prop_assert_eq!(&lat.nuclei[lat.magma.mul(ia, ib)], &join);
            if let Ok(v) = composition_join_check(&m, a, b, 6) {
                prop_assert_eq!(v.join, join);
            }
        }
    }

    #[test]
    fn quotients_are_sound(m in prop_oneof![random_magma(), unital()]) {
        let monoid = m.is_associative() && m.unit().is_some();
        for s in enumerate_nuclei(&m).unwrap() {
            let q = quotient(&m, &s).unwrap();
            if monoid {
                prop_assert!(q.magma.is_associative());
            }
        }
    }

    #[test]
    fn preclosure_hull_is_least_closure_above((m, raw) in random_magma().prop_flat_map(|m| {
        let n = m.size();
        (Just(m), proptest::collection::vec(0..n, n))
    })) {
        let p = m.poset();
        let plus: Vec<ElementId> = p
            .elements()
            .map(|x| {
                let mut v: Vec<ElementId> = p.down_set(x).into_iter().map(|y| raw[y]).collect();
                v.push(x);
                p.sup(&v).unwrap()
            })
            .collect();
        let hull = nucleus_from_preclosure(&m, &plus).unwrap();
        let above: Vec<MonotoneMap> = enumerate_closures(p)
            .unwrap()
            .into_iter()
            .filter(|c| p.elements().all(|x| p.leq(plus[x], c[x])))
            .collect();
        prop_assert!(above.contains(&hull.closure));
        prop_assert!(above.iter().all(|c| hull.closure.leq(p, c)));
    }

    #[test]
    fn induced_nuclei_are_extremal(m in random_magma()) {
        let nuclei = enumerate_nuclei(&m).unwrap();
        let p = m.poset();
        let all: Vec<ElementId> = m.elements().collect();
        if m.classify().unwrap().near_prequantale {
            // whole carrier, every nucleus: both extensions return it
            for s in &nuclei {
                prop_assert_eq!(&induced_lower(&m, &all, s.as_slice()).unwrap(), s);
            }
        }
        // saturated down-closed submagmas: the coarsest extension
        for n in order_core::subsets(m.size()).filter(|n| !n.is_empty()) {
            if !p.is_down_closed(&n) || !is_saturated(&m, &n) || m.submagma(&n).is_err() || m.top().is_none() {
                continue;
            }
            let sub = m.submagma(&n).unwrap();
            for t in enumerate_nuclei(&sub).unwrap() {
                let s: Vec<ElementId> = t.as_slice().iter().map(|&i| n[i]).collect();
                let up = induced_upper(&m, &n, &s).unwrap();
                let ext: Vec<&MonotoneMap> = nuclei
                    .iter()
                    .filter(|c| n.iter().zip(&s).all(|(&x, &v)| c[x] == v))
                    .collect();
                prop_assert!(ext.contains(&&up));
                prop_assert!(ext.iter().all(|c| c.leq(p, &up)));
            }
        }
    }
}
