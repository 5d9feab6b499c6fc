//! Nucleus predicates and the equivalent conditions used to cross-check them.

use magma_core::OrderedMagma;
use order_core::{ElementId, Error, Result};

use crate::closure::{closure_from_preclosure, is_closure, is_preclosure};
use crate::map::MonotoneMap;

fn all_pairs(m: &OrderedMagma, mut f: impl FnMut(ElementId, ElementId) -> bool) -> bool {
    m.elements().all(|x| m.elements().all(|y| f(x, y)))
}

/// `x*y* ≤ (xy)*`.
pub fn cond_products(m: &OrderedMagma, s: &[ElementId]) -> bool {
    all_pairs(m, |x, y| m.leq(m.mul(s[x], s[y]), s[m.mul(x, y)]))
}

/// `(x*y*)* = (xy)*`.
pub fn cond_closed_products(m: &OrderedMagma, s: &[ElementId]) -> bool {
    all_pairs(m, |x, y| s[m.mul(s[x], s[y])] == s[m.mul(x, y)])
}

/// `xy* ≤ (xy)*` and `x*y ≤ (xy)*`.
pub fn cond_one_sided(m: &OrderedMagma, s: &[ElementId]) -> bool {
    all_pairs(m, |x, y| {
        let xy = s[m.mul(x, y)];
        m.leq(m.mul(x, s[y]), xy) && m.leq(m.mul(s[x], y), xy)
    })
}

/// `x ⋆ y = (xy)*` is associative.
pub fn star_product_associative(m: &OrderedMagma, s: &[ElementId]) -> bool {
    let star = |x: ElementId, y: ElementId| s[m.mul(x, y)];
    m.elements().all(|x| {
        m.elements().all(|y| {
            m.elements()
                .all(|z| star(star(x, y), z) == star(x, star(y, z)))
        })
    })
}

/// `xy ≤ z* ⇔ xy* ≤ z* ⇔ x*y ≤ z*` for all `x, y, z`.
pub fn cond_residual_form(m: &OrderedMagma, s: &[ElementId]) -> bool {
    m.elements().all(|x| {
        m.elements().all(|y| {
            m.elements().all(|z| {
                let a = m.leq(m.mul(x, y), s[z]);
                a == m.leq(m.mul(x, s[y]), s[z]) && a == m.leq(m.mul(s[x], y), s[z])
            })
        })
    })
}

/// `x ≤ x*` and `xy ≤ z* ⇒ x*y* ≤ z*`.
pub fn cond_expansive_transfer(m: &OrderedMagma, s: &[ElementId]) -> bool {
    m.elements().all(|x| m.leq(x, s[x]))
        && m.elements().all(|x| {
            m.elements().all(|y| {
                m.elements()
                    .all(|z| !m.leq(m.mul(x, y), s[z]) || m.leq(m.mul(s[x], s[y]), s[z]))
            })
        })
}

/// A closure with `x*y* ≤ (xy)*`.  The other closure-level
/// characterizations are compared in debug builds.
pub fn is_nucleus(m: &OrderedMagma, s: &[ElementId]) -> bool {
    if s.len() != m.size() || s.iter().any(|&z| z >= m.size()) {
        return false;
    }
    let closure = is_closure(m.poset(), s);
    let v = closure && cond_products(m, s);
    if cfg!(debug_assertions) && closure {
        debug_assert_eq!(v, cond_closed_products(m, s));
        debug_assert_eq!(v, cond_one_sided(m, s));
    }
    v
}

/// `x*y* = (xy)*`.
pub fn is_strict(m: &OrderedMagma, s: &[ElementId]) -> bool {
    all_pairs(m, |x, y| m.mul(s[x], s[y]) == s[m.mul(x, y)])
}

/// Result of running every nucleus condition on one map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NucleusReport {
    pub closure: bool,
    pub nucleus: bool,
    pub strict: bool,
    pub products: bool,
    pub closed_products: bool,
    pub one_sided: bool,
    /// Only meaningful on associative carriers.
    pub star_associative: Option<bool>,
    /// Only meaningful when a one-sided unit exists.
    pub residual_form: Option<bool>,
    pub expansive_transfer: Option<bool>,
}

pub fn nucleus_report(m: &OrderedMagma, s: &[ElementId]) -> Result<NucleusReport> {
    if s.len() != m.size() {
        return Err(Error::malformed("map size does not match carrier"));
    }
    m.poset().check_subset(&{
        let mut v = s.to_vec();
        v.sort_unstable();
        v.dedup();
        v
    })?;
    let closure = is_closure(m.poset(), s);
    let nucleus = closure && cond_products(m, s);
    let unital = has_one_sided_unit(m);
    Ok(NucleusReport {
        closure,
        nucleus,
        strict: nucleus && is_strict(m, s),
        products: cond_products(m, s),
        closed_products: cond_closed_products(m, s),
        one_sided: cond_one_sided(m, s),
        star_associative: (m.is_associative() && m.unit().is_some())
            .then(|| star_product_associative(m, s)),
        residual_form: unital.then(|| cond_residual_form(m, s)),
        expansive_transfer: unital.then(|| cond_expansive_transfer(m, s)),
    })
}

/// Some `e` with `ex = x` for all `x`, or with `xe = x` for all `x`.
pub fn has_one_sided_unit(m: &OrderedMagma) -> bool {
    m.elements().any(|e| m.elements().all(|x| m.mul(e, x) == x))
        || m.elements().any(|e| m.elements().all(|x| m.mul(x, e) == x))
}

/// `T* = {a : (ax)* = ax* and (xa)* = x*a for all x}`.
pub fn transportables(m: &OrderedMagma, s: &[ElementId]) -> Vec<ElementId> {
    m.elements()
        .filter(|&a| {
            m.elements()
                .all(|x| s[m.mul(a, x)] == m.mul(a, s[x]) && s[m.mul(x, a)] == m.mul(s[x], a))
        })
        .collect()
}

/// `{a : ax* ≤ (ax)* and x*a ≤ (xa)* for all x}`, the one-sided version of
/// `T*` used by the spanning-set test.
pub fn lax_transportables(m: &OrderedMagma, s: &[ElementId]) -> Vec<ElementId> {
    m.elements()
        .filter(|&a| {
            m.elements().all(|x| {
                m.leq(m.mul(a, s[x]), s[m.mul(a, x)]) && m.leq(m.mul(s[x], a), s[m.mul(x, a)])
            })
        })
        .collect()
}

/// Nucleus test through a sup-spanning set: a closure is a nucleus iff
/// every element of `sigma` is transportable.  Errors if `sigma` does not span.
pub fn nucleus_via_spanning(
    m: &OrderedMagma,
    s: &[ElementId],
    sigma: &[ElementId],
) -> Result<bool> {
    if !m.is_sup_spanning(sigma)? {
        return Err(Error::hypothesis("the given set is not sup-spanning"));
    }
    if !is_closure(m.poset(), s) {
        return Err(Error::hypothesis("map is not a closure operation"));
    }
    let t = lax_transportables(m, s);
    let v = sigma.iter().all(|a| t.contains(a));
    if v != is_nucleus(m, s) {
        return Err(Error::internal(
            "spanning-set nucleus test disagrees with the direct test",
        ));
    }
    Ok(v)
}

/// Closure hull of a preclosure, with the multiplicative hypothesis that
/// forces the hull to be a nucleus on near residuated carriers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreclosureHull {
    pub closure: MonotoneMap,
    /// `xy⁺ ≤ (xy)⁺` and `x⁺y ≤ (xy)⁺`.
    pub multiplicative: bool,
    pub nucleus: bool,
}

pub fn nucleus_from_preclosure(m: &OrderedMagma, f: &[ElementId]) -> Result<PreclosureHull> {
    if !is_preclosure(m.poset(), f) {
        return Err(Error::hypothesis(
            "map is not a preclosure (expansive and order-preserving)",
        ));
    }
    let closure = closure_from_preclosure(m.poset(), f)?;
    let multiplicative = cond_one_sided(m, f);
    let nucleus = is_nucleus(m, closure.as_slice());
    if multiplicative && m.is_near_residuated() && !nucleus {
        return Err(Error::internal(
            "hull of a multiplicative preclosure on a near residuated carrier is not a nucleus",
        ));
    }
    Ok(PreclosureHull {
        closure,
        multiplicative,
        nucleus,
    })
}
