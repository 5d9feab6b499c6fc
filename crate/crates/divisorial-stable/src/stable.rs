//! Stable nuclei, GV elements, `⋆̄`, `⋆_w` and the companions of `v(a)`.

use finitary::{is_finitary, star_f};
use magma_core::OrderedMagma;
use nucleus_core::{enumerate_nuclei, is_nucleus, MonotoneMap};
use order_core::{ElementId, Error, Result};

use crate::divisorial::{v, COARSEST_CHECK_LIMIT};

/// `{z ≤ 1 : z* = 1*}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GVSet {
    pub one: ElementId,
    pub elements: Vec<ElementId>,
}

impl GVSet {
    pub fn contains(&self, z: ElementId) -> bool {
        self.elements.binary_search(&z).is_ok()
    }
}

pub fn gv_elements(m: &OrderedMagma, s: &MonotoneMap) -> Result<GVSet> {
    let one = m.unit().ok_or_else(|| Error::hypothesis("GV elements need a unit"))?;
    if !is_nucleus(m, s.as_slice()) {
        return Err(Error::hypothesis("gv_elements takes a nucleus"));
    }
    let elements: Vec<ElementId> = m.elements().filter(|&z| m.leq(z, one) && s[z] == s[one]).collect();
    let gv = GVSet { one, elements };
    for &x in &gv.elements {
        for &y in &gv.elements {
            if !gv.contains(m.mul(x, y)) {
                return Err(Error::internal("GV elements are not closed under multiplication"));
            }
            let closed_sup = m.poset().join(x, y).is_none_or(|j| gv.contains(j));
            let closed_inf = m.poset().meet(x, y).is_none_or(|j| gv.contains(j));
            if !closed_sup || !closed_inf {
                return Err(Error::internal("GV elements are not closed under binary sups and infs"));
            }
        }
    }
    Ok(gv)
}

/// Checks the carrier hypotheses for `⋆̄`: a precoherent near multiplicative
/// lattice whose compact elements are residuated and where every `x ∧ 1`
/// exists.  Returns the unit.
pub fn stable_hypotheses(m: &OrderedMagma) -> Result<ElementId> {
    let prof = m.classify()?;
    if !prof.is_near_multiplicative_lattice() {
        return Err(Error::hypothesis("stable closures need a near multiplicative lattice"));
    }
    if !prof.precoherent {
        return Err(Error::hypothesis("stable closures need a precoherent carrier"));
    }
    let one = m.unit().expect("unital by the profile");
    let p = m.poset();
    for t in p.compact_elements() {
        if m.elements().any(|x| m.residual_left(x, t).is_none()) {
            return Err(Error::hypothesis(format!("compact element {} is not residuated", m.label(t))));
        }
    }
    if let Some(x) = m.elements().find(|&x| p.meet(x, one).is_none()) {
        return Err(Error::hypothesis(format!("{} ∧ 1 does not exist", m.label(x))));
    }
    Ok(one)
}

fn bar_formula(m: &OrderedMagma, gv: &[ElementId]) -> Result<MonotoneMap> {
    let mut table = Vec::with_capacity(m.size());
    for x in m.elements() {
        let quotients = gv
            .iter()
            .map(|&z| m.residual_left(x, z).ok_or_else(|| Error::internal("x/z undefined for z ≤ 1")))
            .collect::<Result<Vec<_>>>()?;
        table.push(m.sup(&quotients).ok_or_else(|| Error::internal("no supremum of x/z over GV"))?);
    }
    Ok(MonotoneMap::from_table(table))
}

/// `(⋀X)* = ⋀X*` for every `X` of size at most three with an infimum.
fn meets_distribute(m: &OrderedMagma, s: &MonotoneMap) -> bool {
    let n = m.size();
    for x in 0..n {
        for y in x..n {
            for z in y..n {
                if let Some(lo) = m.inf(&[x, y, z]) {
                    if m.inf(&[s[x], s[y], s[z]]) != Some(s[lo]) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// `(x/t)* = x*/t` and `(t\x)* = t\x*` for compact `t` wherever defined.
fn residuals_commute(m: &OrderedMagma, s: &MonotoneMap) -> bool {
    m.poset().compact_elements().into_iter().all(|t| {
        m.elements().all(|x| {
            let left = m.residual_left(x, t).is_none_or(|q| m.residual_left(s[x], t) == Some(s[q]));
            let right = m.residual_right(t, x).is_none_or(|q| m.residual_right(t, s[x]) == Some(s[q]));
            left && right
        })
    })
}

fn is_stable_by_definition(m: &OrderedMagma, s: &MonotoneMap) -> bool {
    meets_distribute(m, s) && residuals_commute(m, s)
}

/// `x ↦ ⋁{x/z : z ∈ ⋆-GV}`: the coarsest stable nucleus finer than `⋆`.
pub fn stable_closure(m: &OrderedMagma, s: &MonotoneMap) -> Result<MonotoneMap> {
    stable_hypotheses(m)?;
    let gv = gv_elements(m, s)?;
    let bar = bar_formula(m, &gv.elements)?;
    if !is_nucleus(m, bar.as_slice()) {
        return Err(Error::internal("the stable closure is not a nucleus"));
    }
    if !bar.leq(m.poset(), s) {
        return Err(Error::internal("the stable closure is not finer than the nucleus"));
    }
    if !is_stable_by_definition(m, &bar) {
        return Err(Error::internal("the stable closure is not stable"));
    }
    if m.size() <= COARSEST_CHECK_LIMIT {
        for t in enumerate_nuclei(m)? {
            if t.leq(m.poset(), s) && is_stable_by_definition(m, &t) && !t.leq(m.poset(), &bar) {
                return Err(Error::internal("a stable nucleus finer than ⋆ is not below ⋆̄"));
            }
        }
    }
    Ok(bar)
}

/// The four equivalent stability conditions, evaluated separately.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityReport {
    pub stable: bool,
    /// Meets of finite sets and residuals by compacts are preserved.
    pub by_definition: bool,
    /// `(x∧1)* = x*∧1*` and `(x/t)* = x*/t`.
    pub meet_one_and_residuals: bool,
    /// `(x/t ∧ 1)* = x*/t ∧ 1*`.
    pub residual_meet_one: bool,
    /// `⋆ = ⋆̄`.
    pub equals_closure: bool,
}

pub fn stability(m: &OrderedMagma, s: &MonotoneMap) -> Result<StabilityReport> {
    let one = stable_hypotheses(m)?;
    if !is_nucleus(m, s.as_slice()) {
        return Err(Error::hypothesis("stability is tested on nuclei"));
    }
    let p = m.poset();
    let meet1 = |x: ElementId| p.meet(x, one).expect("checked by the hypotheses");
    let compacts = p.compact_elements();
    let by_definition = is_stable_by_definition(m, s);
    let meet_one_and_residuals = m.elements().all(|x| p.meet(s[x], s[one]) == Some(s[meet1(x)]))
        && compacts.iter().all(|&t| {
            m.elements().all(|x| {
                let q = m.residual_left(x, t).expect("compacts are residuated");
                m.residual_left(s[x], t) == Some(s[q])
            })
        });
    let residual_meet_one = compacts.iter().all(|&t| {
        m.elements().all(|x| {
            let q = m.residual_left(x, t).expect("compacts are residuated");
            let qs = m.residual_left(s[x], t).expect("compacts are residuated");
            p.meet(qs, s[one]) == Some(s[meet1(q)])
        })
    });
    let equals_closure = stable_closure(m, s)? == *s;
    let all = [by_definition, meet_one_and_residuals, residual_meet_one, equals_closure];
    if all.iter().any(|&b| b != by_definition) {
        return Err(Error::internal(format!("stability conditions disagree: {all:?}")));
    }
    Ok(StabilityReport { stable: by_definition, by_definition, meet_one_and_residuals, residual_meet_one, equals_closure })
}

pub fn is_stable(m: &OrderedMagma, s: &MonotoneMap) -> Result<bool> {
    Ok(stability(m, s)?.stable)
}

/// `x ↦ ⋁{x/z : z ∈ ⋆-GV ∩ K}`, checked against `stable_closure(⋆_f)`.
pub fn star_w(m: &OrderedMagma, s: &MonotoneMap) -> Result<MonotoneMap> {
    let one = stable_hypotheses(m)?;
    let p = m.poset();
    let compacts = p.compact_elements();
    if !compacts.contains(&one) {
        return Err(Error::hypothesis("⋆_w needs a coherent carrier (1 compact)"));
    }
    let gv = gv_elements(m, s)?;
    let gvk: Vec<ElementId> = gv.elements.iter().copied().filter(|z| compacts.contains(z)).collect();
    let w = bar_formula(m, &gvk)?;
    if stable_closure(m, &star_f(m, s)?)? != w {
        return Err(Error::internal("⋆_w differs from the stable closure of ⋆_f"));
    }
    if !is_finitary(p, w.as_slice())?.is_finitary {
        return Err(Error::internal("⋆_w is not finitary"));
    }
    Ok(w)
}

fn coarsest_fixing(
    m: &OrderedMagma,
    a: ElementId,
    s: &MonotoneMap,
    admissible: impl Fn(&MonotoneMap) -> Result<bool>,
    what: &str,
) -> Result<()> {
    if s[a] != a {
        return Err(Error::internal(format!("{what} does not fix {}", m.label(a))));
    }
    if m.size() <= COARSEST_CHECK_LIMIT {
        for t in enumerate_nuclei(m)? {
            if t[a] == a && admissible(&t)? && !t.leq(m.poset(), s) {
                return Err(Error::internal(format!("{what} is not the coarsest of its kind")));
            }
        }
    }
    Ok(())
}

/// `t(a) = v(a)_f`.
pub fn t_of(m: &OrderedMagma, a: ElementId) -> Result<MonotoneMap> {
    let t = star_f(m, &v(m, a)?)?;
    coarsest_fixing(m, a, &t, |u| Ok(is_finitary(m.poset(), u.as_slice())?.is_finitary), "t(a)")?;
    Ok(t)
}

/// `v̄(a)`, the stable closure of `v(a)`.
pub fn v_bar(m: &OrderedMagma, a: ElementId) -> Result<MonotoneMap> {
    let s = stable_closure(m, &v(m, a)?)?;
    coarsest_fixing(m, a, &s, |u| Ok(is_stable_by_definition(m, u)), "v̄(a)")?;
    Ok(s)
}

/// `w(a)`, the stable closure of `t(a)`.
pub fn w_of(m: &OrderedMagma, a: ElementId) -> Result<MonotoneMap> {
    let s = stable_closure(m, &t_of(m, a)?)?;
    coarsest_fixing(
        m,
        a,
        &s,
        |u| Ok(is_stable_by_definition(m, u) && is_finitary(m.poset(), u.as_slice())?.is_finitary),
        "w(a)",
    )?;
    Ok(s)
}
