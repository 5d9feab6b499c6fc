use order_core::{subsets, EffectivePoset, FinitePoset, Subset, UpSet, UpSetsCarrier};
use proptest::prelude::*;

fn random_poset() -> impl Strategy<Value = FinitePoset> {
    (1usize..7).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for i in 0..n {
                for j in (i + 1)..n {
                    if bits[k] {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            let labels = (0..n).map(|i| format!("p{i}")).collect();
            FinitePoset::from_covers(labels, &edges).unwrap()
        })
    })
}

/// Sup by definition: an upper bound below every other upper bound.
fn sup_oracle(p: &FinitePoset, xs: &[usize]) -> Option<usize> {
    let n = p.size();
    let ub: Vec<usize> = (0..n).filter(|&u| xs.iter().all(|&x| p.leq(x, u))).collect();
    let least: Vec<usize> = ub
        .iter()
        .copied()
        .filter(|&u| ub.iter().all(|&v| p.leq(u, v)))
        .collect();
    assert!(least.len() <= 1);
    least.first().copied()
}

fn label_set(k: usize) -> Vec<String> {
    (0..k).map(|i| i.to_string()).collect()
}

#[test]
fn chain_and_diamond_examples() {
    let c = FinitePoset::chain(3);
    assert_eq!(c.sup(&[0, 1]), Some(1));
    assert_eq!(c.inf(&[]), Some(2));
    assert!(c.is_directed(&[0, 1, 2]));
    assert!(!c.is_directed(&[]));

    let d = FinitePoset::diamond();
    assert_eq!(d.sup(&[1, 2]), Some(3));
    assert_eq!(d.inf(&[1, 2]), Some(0));
    assert!(!d.is_directed(&[1, 2]));
    assert_eq!(d.inf(&[2]), Some(2));
    let f = d.flags();
    assert!(f.complete && f.near_sup_complete && f.bounded_complete && f.algebraic);

    let a = FinitePoset::antichain(2);
    assert_eq!(a.sup(&[0, 1]), None);
    assert!(!a.flags().join_semilattice);
}

#[test]
fn rejects_non_transitive_with_triple() {
    let m = vec![
        vec![true, true, false],
        vec![false, true, true],
        vec![false, false, true],
    ];
    let err = FinitePoset::new(label_set(3), m).unwrap_err().to_string();
    assert!(err.contains("(0, 1, 2)"), "{err}");
}

#[test]
fn rejects_non_antisymmetric() {
    let m = vec![vec![true, true], vec![true, true]];
    assert!(FinitePoset::new(label_set(2), m).is_err());
}

#[test]
fn flags_match_subset_scan() {
    for p in [
        FinitePoset::chain(1),
        FinitePoset::chain(4),
        FinitePoset::diamond(),
        FinitePoset::antichain(3),
        FinitePoset::boolean(3),
        FinitePoset::from_covers(label_set(4), &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap(),
    ] {
        let n = p.size();
        let all_sups = subsets(n).all(|s| sup_oracle(&p, &s).is_some());
        let nonempty_sups = subsets(n).filter(|s| !s.is_empty()).all(|s| sup_oracle(&p, &s).is_some());
        let bounded = subsets(n)
            .filter(|s| !s.is_empty() && !p.upper_bounds(s).is_empty())
            .all(|s| sup_oracle(&p, &s).is_some());
        let f = p.flags();
        assert_eq!(f.complete, all_sups);
        assert_eq!(f.near_sup_complete, nonempty_sups);
        assert_eq!(f.bounded_complete, bounded);
    }
}

#[test]
fn upsets_lattice_laws() {
    let samples = [
        UpSet::empty(),
        UpSet::naturals(),
        UpSet::finite(&[1, 4]),
        UpSet::progression(3, 2),
        UpSet::generated_submonoid(&[3, 5]),
        UpSet::tail(6),
    ];
    for a in &samples {
        for b in &samples {
            let u = a.union(b);
            assert!(a.is_subset(&u) && b.is_subset(&u));
            let i = a.intersection(b);
            assert!(i.is_subset(a) && i.is_subset(b));
            for n in 0..60 {
                assert_eq!(u.contains(n), a.contains(n) || b.contains(n));
                assert_eq!(i.contains(n), a.contains(n) && b.contains(n));
            }
        }
    }
    let sup = UpSetsCarrier
        .sup(&Subset::Explicit(samples.to_vec()))
        .unwrap()
        .unwrap();
    assert_eq!(sup, UpSet::naturals());
}

fn upset_strategy() -> impl Strategy<Value = UpSet> {
    (
        proptest::collection::vec(any::<bool>(), 0..8),
        proptest::collection::vec(any::<bool>(), 1..4),
    )
        .prop_map(|(p, c)| UpSet::from_parts(p, c).unwrap())
}

proptest! {
    #[test]
    fn sup_matches_definition(p in random_poset(), mask in 0u32..128) {
        let xs: Vec<usize> = (0..p.size()).filter(|i| mask >> i & 1 == 1).collect();
        prop_assert_eq!(p.sup(&xs), sup_oracle(&p, &xs));
    }

    #[test]
    fn inf_is_dual_sup(p in random_poset(), mask in 0u32..128) {
        let xs: Vec<usize> = (0..p.size()).filter(|i| mask >> i & 1 == 1).collect();
        prop_assert_eq!(p.inf(&xs), p.dual().sup(&xs));
    }

    #[test]
    fn directedness_survives_adding_pair_bounds(p in random_poset(), mask in 1u32..128) {
        let mut xs: Vec<usize> = (0..p.size()).filter(|i| mask >> i & 1 == 1).collect();
        if p.is_directed(&xs) {
            for a in xs.clone() {
                for b in xs.clone() {
                    if let Some(j) = p.join(a, b) {
                        if !xs.contains(&j) {
                            xs.push(j);
                        }
                    }
                }
            }
            prop_assert!(p.is_directed(&xs));
        }
    }

    #[test]
    fn upset_membership_agrees_with_parts(prefix in proptest::collection::vec(any::<bool>(), 0..8),
                                          cycle in proptest::collection::vec(any::<bool>(), 1..4)) {
        let s = UpSet::from_parts(prefix.clone(), cycle.clone()).unwrap();
        for n in 0..40usize {
            let raw = if n < prefix.len() { prefix[n] } else { cycle[(n - prefix.len()) % cycle.len()] };
            prop_assert_eq!(s.contains(n as u64), raw);
        }
    }

    #[test]
    fn minkowski_is_commutative_associative_monotone(a in upset_strategy(), b in upset_strategy(), c in upset_strategy()) {
        prop_assert_eq!(a.minkowski(&b), b.minkowski(&a));
        prop_assert_eq!(a.minkowski(&b).minkowski(&c), a.minkowski(&b.minkowski(&c)));
        let ac = a.union(&c);
        prop_assert!(a.minkowski(&b).is_subset(&ac.minkowski(&b)));
        let sum = a.minkowski(&b);
        for n in 0..50u64 {
            let brute = (0..=n).any(|x| a.contains(x) && b.contains(n - x));
            prop_assert_eq!(sum.contains(n), brute);
        }
    }
}
