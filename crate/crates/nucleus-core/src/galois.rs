//! `d_a : x ↦ xa`, the unit part `1*`, and `1[x] = 1 ∨ x ∨ x² ∨ ⋯`.

use magma_core::OrderedMagma;
use order_core::{ElementId, Error, Result};

use crate::closure::is_closure;
use crate::map::MonotoneMap;
use crate::nucleus::{is_nucleus, is_strict};

fn require_commutative_monoid(m: &OrderedMagma) -> Result<ElementId> {
    let one = m
        .unit()
        .ok_or_else(|| Error::hypothesis("d_a needs a unit"))?;
    if !m.is_associative() || !m.is_commutative() {
        return Err(Error::hypothesis("d_a needs a commutative monoid"));
    }
    Ok(one)
}

/// `d_a` for `a ∈ R(M)`; asserted a strict nucleus with `1^{d_a} = a`.
pub fn d_map(m: &OrderedMagma, a: ElementId) -> Result<MonotoneMap> {
    m.poset().check(a)?;
    let one = require_commutative_monoid(m)?;
    if m.mul(a, a) != a || !m.leq(one, a) {
        return Err(Error::hypothesis(format!(
            "{} is not an idempotent above the unit",
            m.label(a)
        )));
    }
    let s = MonotoneMap::from_table(m.elements().map(|x| m.mul(x, a)).collect());
    if !is_nucleus(m, s.as_slice()) || !is_strict(m, s.as_slice()) {
        return Err(Error::internal("d_a is not a strict nucleus"));
    }
    if s[one] != a {
        return Err(Error::internal("unit part of d_a differs from a"));
    }
    Ok(s)
}

/// `1*`, which lies in `R(M)`.
pub fn unit_part(m: &OrderedMagma, s: &MonotoneMap) -> Result<ElementId> {
    let one = m
        .unit()
        .ok_or_else(|| Error::hypothesis("the unit part needs a unit"))?;
    if !is_nucleus(m, s.as_slice()) {
        return Err(Error::hypothesis("unit_part takes a nucleus"));
    }
    let u = s[one];
    if m.mul(u, u) != u || !m.leq(one, u) {
        return Err(Error::internal("1* is not an idempotent above the unit"));
    }
    Ok(u)
}

/// `d_a ≤ ⋆ ⇔ a ≤ 1*` for every `a ∈ R(M)` and every given nucleus.
pub fn galois_laws_hold(m: &OrderedMagma, nuclei: &[MonotoneMap]) -> Result<bool> {
    require_commutative_monoid(m)?;
    for a in m.r_set()? {
        let da = d_map(m, a)?;
        for s in nuclei {
            let u = unit_part(m, s)?;
            if da.leq(m.poset(), s) != m.leq(a, u) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn require_unital_near_quantale(m: &OrderedMagma) -> Result<ElementId> {
    let one = m
        .unit()
        .ok_or_else(|| Error::hypothesis("1[x] needs a unit"))?;
    if !m.is_associative() || !m.classify()?.near_prequantale {
        return Err(Error::hypothesis("1[x] needs a unital near quantale"));
    }
    Ok(one)
}

fn bracket(m: &OrderedMagma, one: ElementId, x: ElementId) -> Result<ElementId> {
    // (1 ∨ x)^(2^k) covers every power up to 2^k
    let mut z = m
        .sup(&[one, x])
        .ok_or_else(|| Error::internal("missing binary join"))?;
    for _ in 0..=m.size() {
        let next = m.mul(z, z);
        if next == z {
            return Ok(z);
        }
        z = next;
    }
    Err(Error::BudgetExceeded(m.size() + 1))
}

/// The least element of `R(Q)` above `x`.
pub fn one_bracket(m: &OrderedMagma, x: ElementId) -> Result<ElementId> {
    m.poset().check(x)?;
    let one = require_unital_near_quantale(m)?;
    let z = bracket(m, one, x)?;
    let r = m.r_set()?;
    let above: Vec<ElementId> = r.iter().copied().filter(|&y| m.leq(x, y)).collect();
    if m.poset().least_of(&above) != Some(z) {
        return Err(Error::internal(
            "1[x] is not the least element of R(Q) above x",
        ));
    }
    Ok(z)
}

/// `1[-]` as a map; asserted a closure whose image is `R(Q)`.
pub fn one_bracket_map(m: &OrderedMagma) -> Result<MonotoneMap> {
    let one = require_unital_near_quantale(m)?;
    let table: Result<Vec<ElementId>> = m.elements().map(|x| bracket(m, one, x)).collect();
    let s = MonotoneMap::from_table(table?);
    if !is_closure(m.poset(), s.as_slice()) {
        return Err(Error::internal("1[-] is not a closure operation"));
    }
    if s.image() != m.r_set()? {
        return Err(Error::internal("image of 1[-] differs from R(Q)"));
    }
    Ok(s)
}
