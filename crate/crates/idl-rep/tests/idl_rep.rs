use idl_rep::*;
use magma_core::builders::{chain_join, lattice_meet, trivial};
use magma_core::OrderedMagma;
use order_core::{subsets, Error, FinitePoset, UpSet};
use proptest::prelude::*;

fn z4_ideals() -> OrderedMagma {
    OrderedMagma::new(FinitePoset::chain(3), vec![vec![0, 0, 0], vec![0, 0, 1], vec![0, 1, 2]]).unwrap()
}

/// Three atoms under a common top, multiplied by join.
fn antichain_with_top() -> OrderedMagma {
    let p = FinitePoset::from_covers(vec!["a".into(), "b".into(), "c".into(), "1".into()], &[(0, 3), (1, 3), (2, 3)])
        .unwrap();
    let q = p.clone();
    OrderedMagma::from_fn(p, move |x, y| q.join(x, y).unwrap()).unwrap()
}

/// `2^{Z/2}` with element ids as bit masks.
fn powerset_z2(drop_empty: bool) -> OrderedMagma {
    let mul = |a: usize, b: usize| {
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
    if !drop_empty {
        return OrderedMagma::from_fn(FinitePoset::boolean(2), mul).unwrap();
    }
    let p = FinitePoset::from_fn(vec!["1".into(), "g".into(), "1g".into()], |x, y| (x + 1) & !(y + 1) == 0).unwrap();
    OrderedMagma::from_fn(p, |x, y| mul(x + 1, y + 1) - 1).unwrap()
}

fn corpus() -> Vec<OrderedMagma> {
    vec![
        trivial(),
        chain_join(2),
        chain_join(4),
        z4_ideals(),
        antichain_with_top(),
        powerset_z2(false),
        powerset_z2(true),
        lattice_meet(FinitePoset::diamond()).unwrap(),
        lattice_meet(FinitePoset::boolean(3)).unwrap(),
    ]
}

#[test]
fn down_closure_examples() {
    let d = FinitePoset::diamond();
    for x in d.elements() {
        assert_eq!(down_closure(&d, &[x]).unwrap(), d.down_set(x));
    }
    assert_eq!(down_closure(&d, &[1, 2]).unwrap(), vec![0, 1, 2, 3]);
    assert_eq!(down_closure(&d, &[]).unwrap(), vec![0]);
    let no_bottom = antichain_with_top();
    assert!(matches!(down_closure(no_bottom.poset(), &[]), Err(Error::HypothesisNotMet(_))));
    assert!(down_closure(&FinitePoset::antichain(2), &[0]).is_err());
}

/// `↓X` is the least ideal containing `X`, by a scan of all subsets.
#[test]
fn down_closure_is_least() {
    for m in corpus() {
        let p = m.poset();
        let all_ideals: Vec<Vec<usize>> = subsets(p.size()).filter(|s| is_ideal(p, s)).collect();
        for x in subsets(p.size()).filter(|s| !s.is_empty()) {
            let d = down_closure(p, &x).unwrap();
            for i in all_ideals.iter().filter(|i| x.iter().all(|z| i.contains(z))) {
                assert!(d.iter().all(|z| i.contains(z)));
            }
            assert!(all_ideals.contains(&d));
        }
    }
}

#[test]
fn ideal_completions() {
    let two = chain_join(2);
    let c = idl(&two).unwrap();
    let f: Vec<usize> = two.elements().map(|x| c.principal(two.poset(), x)).collect();
    assert!(is_isomorphism(&two, &c.magma, &f));
    assert_eq!(idl(&antichain_with_top()).unwrap().ideals.len(), 4);
    // finite nonempty subsets of Z/2
    let k = powerset_z2(true);
    let c = idl(&k).unwrap();
    assert_eq!(c.magma.size(), 3);
    assert!(roundtrip_checks(&k).unwrap().holds());
    let not_semilattice = OrderedMagma::from_fn(FinitePoset::antichain(2), |x, _| x).unwrap();
    assert!(matches!(idl(&not_semilattice), Err(Error::HypothesisNotMet(_))));
}

#[test]
fn compact_parts() {
    for m in corpus() {
        if m.classify().unwrap().near_prequantale {
            let k = k_functor(&m).unwrap();
            assert_eq!(k.elements, m.elements().collect::<Vec<_>>());
        }
    }
    let k = k_functor(&powerset_z2(false)).unwrap();
    assert!(k.magma.classify().unwrap().prequantic_semilattice);
}

#[test]
fn roundtrips_on_corpus() {
    for m in corpus() {
        let r = roundtrip_checks(&m).unwrap();
        assert!(r.holds(), "{r:?}");
    }
    let z4 = roundtrip_checks(&z4_ideals()).unwrap();
    assert_eq!(z4, RoundTrip { semilattice_side: Some(true), quantale_side: Some(true) });
    let t = roundtrip_checks(&trivial()).unwrap();
    assert!(t.holds());
}

#[test]
fn downarrow_is_a_finitary_nucleus_on_subsets() {
    for m in corpus().into_iter().filter(|m| m.size() <= 5) {
        let prof = m.classify().unwrap();
        if prof.multiplicative_semilattice {
            let d = downarrow_on_subsets(&m, false).unwrap();
            assert!(nucleus_core::is_nucleus(&d.subsets, d.downarrow.as_slice()));
            assert!(downarrow_submultiplicative(&m).unwrap());
        }
        if prof.prequantic_semilattice {
            let d = downarrow_on_subsets(&m, true).unwrap();
            assert!(nucleus_core::is_nucleus(&d.subsets, d.downarrow.as_slice()));
        }
    }
}

#[test]
fn upsets_pieces() {
    let gens = [UpSet::finite(&[0]), UpSet::finite(&[2, 5]), UpSet::finite(&[1])];
    let (m, elems) = finite_union_semilattice(&gens).unwrap();
    assert_eq!(elems.len(), 7);
    assert_eq!(roundtrip_checks(&m).unwrap().semilattice_side, Some(true));
    let samples = [UpSet::finite(&[3]), UpSet::naturals(), UpSet::tail(4), UpSet::empty()];
    assert_eq!(compact_upsets(&samples).unwrap(), vec![UpSet::finite(&[3]), UpSet::empty()]);
    assert!(finite_union_semilattice(&[UpSet::tail(2)]).is_err());
}

#[test]
fn morphisms_and_functoriality() {
    let (c2, c3, c4) = (chain_join(2), chain_join(3), chain_join(4));
    let id3: Vec<usize> = c3.elements().collect();
    let (ca, _, m) = idl_of_morphism(&c3, &c3, &id3, Category::Complete).unwrap();
    assert_eq!(m, ca.magma.elements().collect::<Vec<_>>());
    let h = vec![0, 2];
    let g = vec![0, 1, 3];
    let (_, _, ih) = idl_of_morphism(&c2, &c3, &h, Category::Complete).unwrap();
    assert_eq!(ih, vec![0, 2]);
    assert!(idl_functorial(&c2, &c3, &c4, &h, &g, Category::Complete).unwrap());
    assert!(k_functorial(&c2, &c3, &c4, &h, &g, Category::Complete).unwrap());
    assert!(equivalence_coherent(&c2, &c3, &h, Category::Near).unwrap());
    // not order preserving, hence not join preserving
    assert!(matches!(idl_of_morphism(&c3, &c3, &[2, 1, 0], Category::Near), Err(Error::NotAMorphism(_))));
    // bottom not preserved: fine for the near category only
    assert!(idl_of_morphism(&c2, &c3, &[1, 2], Category::Near).is_ok());
    assert!(idl_of_morphism(&c2, &c3, &[1, 2], Category::Complete).is_err());
    assert!(matches!(idl_of_morphism(&c2, &c3, &[0, 7], Category::Near), Err(Error::ForeignId { .. })));
}

fn chain_magma(n: usize, raw: &[usize]) -> OrderedMagma {
    let mut t = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut v = raw[i * n + j] % n;
            if i > 0 {
                v = v.max(t[i - 1][j]);
            }
            if j > 0 {
                v = v.max(t[i][j - 1]);
            }
            t[i][j] = v;
        }
    }
    OrderedMagma::new(FinitePoset::chain(n), t).unwrap()
}

fn monotone(len: usize, range: usize) -> impl Strategy<Value = Vec<usize>> {
    proptest::collection::vec(0..range, len).prop_map(|mut v| {
        v.sort_unstable();
        v
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_chain_magmas_round_trip(n in 1usize..6, raw in proptest::collection::vec(0usize..6, 36)) {
        let m = chain_magma(n, &raw);
        let r = roundtrip_checks(&m).unwrap();
        prop_assert_eq!(r, RoundTrip { semilattice_side: Some(true), quantale_side: Some(true) });
        prop_assert!(downarrow_submultiplicative(&m).unwrap());
        downarrow_on_subsets(&m, false).unwrap();
    }

    #[test]
    fn monotone_maps_between_join_chains(a in 1usize..5, b in 1usize..5, c in 1usize..5,
                                         seed_h in monotone(5, 5), seed_g in monotone(5, 5)) {
        let (ma, mb, mc) = (chain_join(a), chain_join(b), chain_join(c));
        let h: Vec<usize> = seed_h[..a].iter().map(|&x| x % b).collect::<Vec<_>>();
        let g: Vec<usize> = seed_g[..b].iter().map(|&x| x % c).collect::<Vec<_>>();
        let mono = |f: &[usize]| f.windows(2).all(|w| w[0] <= w[1]);
        prop_assume!(mono(&h) && mono(&g));
        prop_assert!(idl_functorial(&ma, &mb, &mc, &h, &g, Category::Near).unwrap());
        prop_assert!(k_functorial(&ma, &mb, &mc, &h, &g, Category::Near).unwrap());
        prop_assert!(equivalence_coherent(&ma, &mb, &h, Category::Near).unwrap());
    }
}
