//! `K` and `Idl` on objects and morphisms, and the round trips between them.

use magma_core::OrderedMagma;
use order_core::{ElementId, Error, Result};

use crate::ideals::{down_closure, idl, IdealCompletion};

/// Bijective, order embedding in both directions, and multiplicative.
pub fn is_isomorphism(a: &OrderedMagma, b: &OrderedMagma, f: &[ElementId]) -> bool {
    if a.size() != b.size() || f.len() != a.size() {
        return false;
    }
    let mut hit = vec![false; b.size()];
    for &y in f {
        if y >= b.size() || hit[y] {
            return false;
        }
        hit[y] = true;
    }
    a.elements().all(|x| a.elements().all(|y| a.leq(x, y) == b.leq(f[x], f[y])))
        && a.is_homomorphism_to(b, f)
}

/// `K(Q)` with the parent ids of its elements.
#[derive(Clone, Debug)]
pub struct CompactPart {
    pub magma: OrderedMagma,
    pub elements: Vec<ElementId>,
}

pub fn k_functor(q: &OrderedMagma) -> Result<CompactPart> {
    let prof = q.classify()?;
    if !prof.near_prequantale {
        return Err(Error::hypothesis("K(Q) is taken of a near prequantale"));
    }
    if !prof.precoherent {
        return Err(Error::hypothesis("K(Q) needs a precoherent carrier"));
    }
    let elements = q.poset().compact_elements();
    let magma = q.submagma(&elements)?;
    let kp = magma.classify()?;
    if !kp.multiplicative_semilattice {
        return Err(Error::internal("K(Q) is not a multiplicative semilattice"));
    }
    if prof.prequantale && !kp.prequantic_semilattice {
        return Err(Error::internal("K of a prequantale is not a prequantic semilattice"));
    }
    Ok(CompactPart { magma, elements })
}

/// Outcome of the two round trips, where they apply.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RoundTrip {
    /// `x ↦ ↓x` from `M` onto `K(Idl(M))`.
    pub semilattice_side: Option<bool>,
    /// `I ↦ ⋁I` from `Idl(K(Q))` onto `Q`.
    pub quantale_side: Option<bool>,
}

impl RoundTrip {
    pub fn holds(&self) -> bool {
        self.semilattice_side.unwrap_or(true) && self.quantale_side.unwrap_or(true)
    }
}

/// `M → K(Idl(M))`, `x ↦ ↓x`.
pub fn semilattice_roundtrip(m: &OrderedMagma) -> Result<bool> {
    let c = idl(m)?;
    let k = k_functor(&c.magma)?;
    let f: Vec<ElementId> = m
        .elements()
        .map(|x| {
            let id = c.principal(m.poset(), x);
            k.elements.iter().position(|&e| e == id).ok_or_else(|| Error::internal("↓x is not compact"))
        })
        .collect::<Result<_>>()?;
    Ok(is_isomorphism(m, &k.magma, &f))
}

/// `Idl(K(Q)) → Q`, `I ↦ ⋁I`.
pub fn quantale_roundtrip(q: &OrderedMagma) -> Result<bool> {
    let k = k_functor(q)?;
    let c = idl(&k.magma)?;
    let f: Vec<ElementId> = c
        .ideals
        .iter()
        .map(|i| {
            let parent: Vec<ElementId> = i.iter().map(|&x| k.elements[x]).collect();
            q.sup(&parent).ok_or_else(|| Error::internal("an ideal of K(Q) has no supremum"))
        })
        .collect::<Result<_>>()?;
    Ok(is_isomorphism(&c.magma, q, &f))
}

/// Runs each round trip whose hypotheses hold; fails when none does.
pub fn roundtrip_checks(m: &OrderedMagma) -> Result<RoundTrip> {
    let prof = m.classify()?;
    let semilattice_side = if prof.multiplicative_semilattice { Some(semilattice_roundtrip(m)?) } else { None };
    let quantale_side =
        if prof.near_prequantale && prof.precoherent { Some(quantale_roundtrip(m)?) } else { None };
    if semilattice_side.is_none() && quantale_side.is_none() {
        return Err(Error::hypothesis(
            "round trips need a multiplicative semilattice or a precoherent near prequantale",
        ));
    }
    Ok(RoundTrip { semilattice_side, quantale_side })
}

/// Which pair of categories a morphism is taken in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Category {
    /// Multiplicative semilattices and precoherent near prequantales.
    Near,
    /// Prequantic semilattices and precoherent prequantales.
    Complete,
}

fn preserves_binary_joins(a: &OrderedMagma, b: &OrderedMagma, f: &[ElementId]) -> bool {
    a.elements().all(|x| {
        a.elements().all(|y| match a.poset().join(x, y) {
            Some(j) => b.poset().join(f[x], f[y]) == Some(f[j]),
            None => true,
        })
    })
}

fn preserves_bottom(a: &OrderedMagma, b: &OrderedMagma, f: &[ElementId]) -> bool {
    match (a.bottom(), b.bottom()) {
        (Some(x), Some(y)) => f[x] == y,
        _ => false,
    }
}

fn check_map(a: &OrderedMagma, b: &OrderedMagma, f: &[ElementId]) -> Result<()> {
    if f.len() != a.size() {
        return Err(Error::NotAMorphism(format!("map has {} entries for {} elements", f.len(), a.size())));
    }
    if let Some(&bad) = f.iter().find(|&&y| y >= b.size()) {
        return Err(Error::ForeignId { id: bad, size: b.size() });
    }
    Ok(())
}

/// A morphism of multiplicative (prequantic) semilattices.
pub fn is_semilattice_morphism(a: &OrderedMagma, b: &OrderedMagma, f: &[ElementId], cat: Category) -> Result<bool> {
    check_map(a, b, f)?;
    Ok(a.is_homomorphism_to(b, f)
        && preserves_binary_joins(a, b, f)
        && (cat == Category::Near || preserves_bottom(a, b, f)))
}

/// A morphism of precoherent near prequantales (prequantales) sending
/// compacts to compacts.
pub fn is_precoherent_morphism(a: &OrderedMagma, b: &OrderedMagma, f: &[ElementId], cat: Category) -> Result<bool> {
    check_map(a, b, f)?;
    let kb = b.poset().compact_elements();
    let compacts = a.poset().compact_elements().iter().all(|&x| kb.contains(&f[x]));
    Ok(a.is_homomorphism_to(b, f)
        && a.is_near_sup_preserving_to(b, f)
        && (cat == Category::Near || preserves_bottom(a, b, f))
        && compacts)
}

/// `Idl(g)(I) = ↓g(I)`, as a map between ideal completions.
pub fn idl_of_morphism(
    a: &OrderedMagma,
    b: &OrderedMagma,
    g: &[ElementId],
    cat: Category,
) -> Result<(IdealCompletion, IdealCompletion, Vec<ElementId>)> {
    if !is_semilattice_morphism(a, b, g, cat)? {
        return Err(Error::NotAMorphism("map is not a semilattice morphism".into()));
    }
    let ca = idl(a)?;
    let cb = idl(b)?;
    let map: Vec<ElementId> = ca
        .ideals
        .iter()
        .map(|i| {
            let mut img: Vec<ElementId> = i.iter().map(|&x| g[x]).collect();
            img.sort_unstable();
            img.dedup();
            let d = down_closure(b.poset(), &img)?;
            cb.index_of(&d).ok_or_else(|| Error::internal("↓g(I) is not an ideal"))
        })
        .collect::<Result<_>>()?;
    if !is_precoherent_morphism(&ca.magma, &cb.magma, &map, cat)? {
        return Err(Error::internal("Idl(g) is not a morphism of precoherent near prequantales"));
    }
    Ok((ca, cb, map))
}

/// `K(f)(x) = f(x)` on compact elements, as a map between compact parts.
pub fn k_of_morphism(
    a: &OrderedMagma,
    b: &OrderedMagma,
    f: &[ElementId],
    cat: Category,
) -> Result<(CompactPart, CompactPart, Vec<ElementId>)> {
    if !is_precoherent_morphism(a, b, f, cat)? {
        return Err(Error::NotAMorphism("map is not a precoherent morphism".into()));
    }
    let ka = k_functor(a)?;
    let kb = k_functor(b)?;
    let map: Vec<ElementId> = ka
        .elements
        .iter()
        .map(|&x| kb.elements.iter().position(|&y| y == f[x]).expect("compacts go to compacts"))
        .collect();
    if !is_semilattice_morphism(&ka.magma, &kb.magma, &map, cat)? {
        return Err(Error::internal("K(f) is not a semilattice morphism"));
    }
    Ok((ka, kb, map))
}

pub fn compose(g: &[ElementId], h: &[ElementId]) -> Vec<ElementId> {
    h.iter().map(|&x| g[x]).collect()
}

/// `Idl(id) = id` and `Idl(g∘h) = Idl(g)∘Idl(h)` for `h: a → b`, `g: b → c`.
pub fn idl_functorial(
    a: &OrderedMagma,
    b: &OrderedMagma,
    c: &OrderedMagma,
    h: &[ElementId],
    g: &[ElementId],
    cat: Category,
) -> Result<bool> {
    let id: Vec<ElementId> = a.elements().collect();
    let (ca, _, idl_id) = idl_of_morphism(a, a, &id, cat)?;
    let identity_ok = idl_id == ca.magma.elements().collect::<Vec<_>>();
    let (_, _, ih) = idl_of_morphism(a, b, h, cat)?;
    let (_, _, ig) = idl_of_morphism(b, c, g, cat)?;
    let (_, _, igh) = idl_of_morphism(a, c, &compose(g, h), cat)?;
    Ok(identity_ok && igh == compose(&ig, &ih))
}

/// `K(id) = id` and `K(f∘e) = K(f)∘K(e)`.
pub fn k_functorial(
    a: &OrderedMagma,
    b: &OrderedMagma,
    c: &OrderedMagma,
    e: &[ElementId],
    f: &[ElementId],
    cat: Category,
) -> Result<bool> {
    let id: Vec<ElementId> = a.elements().collect();
    let (ka, _, k_id) = k_of_morphism(a, a, &id, cat)?;
    let identity_ok = k_id == ka.magma.elements().collect::<Vec<_>>();
    let (_, _, ke) = k_of_morphism(a, b, e, cat)?;
    let (_, _, kf) = k_of_morphism(b, c, f, cat)?;
    let (_, _, kfe) = k_of_morphism(a, c, &compose(f, e), cat)?;
    Ok(identity_ok && kfe == compose(&kf, &ke))
}

/// `K(Idl(g))` corresponds to `g` under `x ↦ ↓x` on both sides.
pub fn equivalence_coherent(a: &OrderedMagma, b: &OrderedMagma, g: &[ElementId], cat: Category) -> Result<bool> {
    let (ca, cb, ig) = idl_of_morphism(a, b, g, cat)?;
    let (ka, kb, kig) = k_of_morphism(&ca.magma, &cb.magma, &ig, cat)?;
    Ok(a.elements().all(|x| {
        let down_x = ca.principal(a.poset(), x);
        let down_gx = cb.principal(b.poset(), g[x]);
        let i = ka.elements.iter().position(|&e| e == down_x).expect("principal ideals are compact");
        kb.elements[kig[i]] == down_gx
    }))
}
