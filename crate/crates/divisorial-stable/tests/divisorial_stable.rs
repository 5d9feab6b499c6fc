mod common;

use common::*;
use divisorial_stable::*;
use magma_core::builders::{chain_meet, two_element};
use magma_core::OrderedMagma;
use nucleus_core::{enumerate_nuclei, is_nucleus, nuclei_meet, MonotoneMap};
use order_core::{Error, FinitePoset, UpSet};
use proptest::prelude::*;

fn radical() -> MonotoneMap {
    MonotoneMap::from_table(vec![1, 1, 2])
}

/// The largest enumerated nucleus fixing `a`, found by brute force.
fn coarsest_by_enumeration(m: &OrderedMagma, a: usize) -> MonotoneMap {
    let fixing: Vec<MonotoneMap> = enumerate_nuclei(m).unwrap().into_iter().filter(|s| s[a] == a).collect();
    fixing
        .iter()
        .find(|s| fixing.iter().all(|t| t.leq(m.poset(), s)))
        .cloned()
        .expect("nuclei fixing a have a maximum")
}

fn corpus() -> Vec<OrderedMagma> {
    vec![
        z4_ideals(),
        z2n_ideals(3),
        two_element(),
        chain_meet(4),
        powerset_of(&cyclic_group(2), false),
        powerset_of(&cyclic_group(3), true),
        powerset_of(&[vec![0, 0], vec![1, 1]], false),
        group_with_infinity(3, false),
        group_with_infinity(2, true),
        clamped_integers(2, false),
        clamped_integers(1, true),
    ]
}

#[test]
fn z4_examples() {
    let m = z4_ideals();
    assert_eq!(v(&m, 1).unwrap(), radical());
    assert_eq!(v(&m, 0).unwrap(), MonotoneMap::identity(3));
    assert_eq!(v(&m, 2).unwrap(), MonotoneMap::constant(3, 2));
    let tags: Vec<VStrategy> = v_strategies(&m, 1).unwrap().into_iter().map(|(t, _)| t).collect();
    assert!(tags.contains(&VStrategy::Lin) && tags.contains(&VStrategy::Sandwich));
    assert!(tags.contains(&VStrategy::DoubleResidual));
}

#[test]
fn top_gives_e() {
    for m in corpus() {
        let top = m.top().unwrap();
        assert_eq!(v(&m, top).unwrap(), MonotoneMap::top_map(m.poset()).unwrap());
    }
}

#[test]
fn v_is_the_coarsest_nucleus_fixing_a() {
    for m in corpus() {
        for a in m.elements() {
            let s = v_checked(&m, a).unwrap();
            assert_eq!(s, coarsest_by_enumeration(&m, a), "{}", m.label(a));
        }
    }
}

#[test]
fn every_nucleus_is_a_meet_of_divisorial_ones() {
    for m in corpus() {
        for s in enumerate_nuclei(&m).unwrap() {
            let image = divisorial_decomposition(&m, &s).unwrap();
            assert_eq!(image, s.image());
        }
    }
    let m = z4_ideals();
    assert_eq!(divisorial_decomposition(&m, &radical()).unwrap(), vec![1, 2]);
    assert_eq!(divisorial_decomposition(&m, &MonotoneMap::constant(3, 2)).unwrap(), vec![2]);
}

#[test]
fn lin_monoid_contains_translations() {
    let m = z4_ideals();
    let lin = lin_monoid(&m, 1000).unwrap();
    assert!(lin.contains(&vec![0, 1, 2]));
    assert!(lin.contains(&vec![0, 0, 1]));
    assert!(lin.contains(&vec![0, 0, 0]));
    assert_eq!(lin.len(), 3);
}

#[test]
fn cyclicity() {
    let m = z4_ideals();
    for a in m.elements() {
        assert!(is_cyclic(&m, a).unwrap().is_cyclic);
    }
    // subsets of the left-zero semigroup {p, q}: XY = X for Y nonempty
    let lz = powerset_of(&[vec![0, 0], vec![1, 1]], false);
    let r = is_cyclic(&lz, 2).unwrap();
    assert!(!r.is_cyclic);
    let (x, y) = r.counterexample.unwrap();
    assert_eq!((x, y), (2, 1));
    assert!(lz.leq(lz.mul(x, y), 2) && !lz.leq(lz.mul(y, x), 2));
    assert!(is_cyclic(&lz, 3).unwrap().is_cyclic);
    assert!(matches!(v_double_residual(&lz, 2), Err(Error::HypothesisNotMet(_))));
}

#[test]
fn unit_sandwich_on_subsets_of_z3() {
    let m = powerset_of(&cyclic_group(3), true);
    for a in m.elements() {
        let s = v_via_units(&m, a).unwrap();
        assert_eq!(s, v(&m, a).unwrap());
        // single elements are the units; every sandwich above x bounds x^v
        for x in m.elements() {
            for u in [0, 1, 3] {
                for w in [0, 1, 3] {
                    let z = m.mul(m.mul(u, a), w);
                    if m.leq(x, z) {
                        assert!(m.leq(s[x], z));
                    }
                }
            }
        }
    }
    let top = m.top().unwrap();
    assert_eq!(v_via_units(&m, top).unwrap(), MonotoneMap::constant(m.size(), top));
    assert!(v_via_units(&z4_ideals(), 1).is_err());
}

#[test]
fn simplicity_examples() {
    let two = two_element();
    let r = simplicity(&two).unwrap();
    assert!(r.simple && r.by_double_residual == Some(true));
    let z4 = simplicity(&z4_ideals()).unwrap();
    assert!(!z4.simple);
    assert_eq!(z4.nucleus_count, 3);
    assert_eq!(z4.witness, Some(1));
    for k in 1..5 {
        assert!(is_simple(&group_with_infinity(k, false)).unwrap());
        assert!(!is_simple(&group_with_infinity(k, true)).unwrap());
    }
    // clamping creates an extra nucleus at the largest finite value
    for n in 1..4 {
        let r = simplicity(&clamped_integers(n, false)).unwrap();
        assert!(!r.simple && r.by_double_residual.is_none());
        assert_eq!(r.witness, Some(2 * n as usize));
    }
}

#[test]
fn gv_examples() {
    let m = z4_ideals();
    assert_eq!(gv_elements(&m, &MonotoneMap::identity(3)).unwrap().elements, vec![2]);
    assert_eq!(gv_elements(&m, &MonotoneMap::constant(3, 2)).unwrap().elements, vec![0, 1, 2]);
    assert_eq!(gv_elements(&m, &radical()).unwrap().elements, vec![2]);
    let no_unit = OrderedMagma::from_fn(FinitePoset::chain(2), |_, _| 1).unwrap();
    assert!(gv_elements(&no_unit, &MonotoneMap::identity(2)).is_err());
}

#[test]
fn stable_examples() {
    let m = z4_ideals();
    let d = MonotoneMap::identity(3);
    let e = MonotoneMap::constant(3, 2);
    assert_eq!(stable_closure(&m, &d).unwrap(), d);
    assert_eq!(stable_closure(&m, &e).unwrap(), e);
    assert_eq!(stable_closure(&m, &radical()).unwrap(), d);
    assert!(is_stable(&m, &d).unwrap());
    assert!(is_stable(&m, &e).unwrap());
    let r = stability(&m, &radical()).unwrap();
    assert!(!r.stable && !r.equals_closure && !r.residual_meet_one);
    assert_eq!(v_bar(&m, 1).unwrap(), d);
    assert_eq!(t_of(&m, 1).unwrap(), radical());
    assert_eq!(w_of(&m, 1).unwrap(), d);
    for f in [t_of, v_bar, w_of] {
        assert_eq!(f(&m, 2).unwrap(), e);
    }
}

fn near_multiplicative_lattices() -> Vec<OrderedMagma> {
    vec![
        z4_ideals(),
        z2n_ideals(3),
        two_element(),
        chain_meet(3),
        powerset_of(&cyclic_group(2), false),
        powerset_of(&cyclic_group(3), false),
        powerset_of(&[vec![0, 1], vec![1, 1]], false),
        group_with_infinity(2, true),
    ]
}

#[test]
fn stability_conditions_agree_on_corpus() {
    for m in near_multiplicative_lattices() {
        let nuclei = enumerate_nuclei(&m).unwrap();
        let stable: Vec<MonotoneMap> =
            nuclei.iter().filter(|s| is_stable(&m, s).unwrap()).cloned().collect();
        assert!(stable.contains(&MonotoneMap::identity(m.size())));
        for s in &nuclei {
            let bar = stable_closure(&m, s).unwrap();
            assert!(is_stable(&m, &bar).unwrap());
            assert_eq!(star_w(&m, s).unwrap(), bar);
            // stable iff a meet of v̄(a) over its own image
            let vbars: Vec<MonotoneMap> = s.image().iter().map(|&a| v_bar(&m, a).unwrap()).collect();
            let meet = nuclei_meet(&m, &vbars).unwrap();
            assert_eq!(is_stable(&m, s).unwrap(), meet == *s);
            for a in m.elements() {
                assert_eq!(t_of(&m, a).unwrap(), v(&m, a).unwrap());
                assert_eq!(w_of(&m, a).unwrap(), v_bar(&m, a).unwrap());
            }
        }
        for a in &stable {
            for b in &stable {
                let meet = nuclei_meet(&m, &[a.clone(), b.clone()]).unwrap();
                assert!(is_stable(&m, &meet).unwrap());
            }
        }
    }
}

#[test]
fn stable_hypotheses_refused() {
    // no meet of disjoint nonempty subsets, so some x/t is undefined
    let nonempty = powerset_of(&cyclic_group(3), true);
    assert!(matches!(stable_closure(&nonempty, &MonotoneMap::identity(7)), Err(Error::HypothesisNotMet(_))));
    let lz = powerset_of(&[vec![0, 0], vec![1, 1]], false);
    assert!(matches!(stable_closure(&lz, &MonotoneMap::identity(4)), Err(Error::HypothesisNotMet(_))));
    assert!(matches!(is_stable(&clamped_integers(1, false), &MonotoneMap::identity(4)), Err(Error::HypothesisNotMet(_))));
}

#[test]
fn star_w_on_upsets() {
    let one = UpSet::finite(&[0]);
    assert_eq!(gv_upsets(&UpSetsIdentity), vec![one.clone()]);
    assert_eq!(gv_upsets(&finitary::Saturation::ideal_generation()), vec![one]);
    for x in finitary::upset_samples(40) {
        assert_eq!(star_w_upsets(&UpSetsIdentity, &x).unwrap(), x);
        // ∅ never reaches ℕ, so only {0} is GV and ⋆_w is the identity
        assert_eq!(star_w_upsets(&finitary::Saturation::ideal_generation(), &x).unwrap(), x);
    }
}

fn chain_magmas() -> impl Strategy<Value = OrderedMagma> {
    (2usize..6).prop_flat_map(|n| proptest::collection::vec(0..n, n * n).prop_map(move |raw| chain_magma(n, &raw)))
}

fn powerset_magmas() -> impl Strategy<Value = OrderedMagma> {
    (1usize..4).prop_flat_map(|k| {
        proptest::collection::vec(0..k, k * k).prop_map(move |raw| {
            let t: Vec<Vec<usize>> = raw.chunks(k).map(|c| c.to_vec()).collect();
            powerset_of(&t, false)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn v_matches_enumeration_on_chains(m in chain_magmas()) {
        for a in m.elements() {
            let s = v(&m, a).unwrap();
            prop_assert!(is_nucleus(&m, s.as_slice()));
            prop_assert_eq!(s, coarsest_by_enumeration(&m, a));
        }
        for s in enumerate_nuclei(&m).unwrap() {
            divisorial_decomposition(&m, &s).unwrap();
        }
        simplicity(&m).unwrap();
    }

    #[test]
    fn v_matches_enumeration_on_powersets(m in powerset_magmas()) {
        for a in m.elements() {
            prop_assert_eq!(v(&m, a).unwrap(), coarsest_by_enumeration(&m, a));
            is_cyclic(&m, a).unwrap();
        }
        simplicity(&m).unwrap();
    }
}
