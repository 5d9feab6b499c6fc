//! The coarsest nucleus fixing an element, computed several ways.

use std::collections::HashSet;
use std::fmt;

use magma_core::OrderedMagma;
use nucleus_core::{enumerate_nuclei, is_nucleus, nuclei_meet, MonotoneMap};
use order_core::{ElementId, Error, Result};

/// Largest translation monoid built explicitly before falling back to the
/// pair saturation alone.
const LIN_CAP: usize = 4096;

/// Carriers up to this size get the enumeration check for coarseness.
pub const COARSEST_CHECK_LIMIT: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VStrategy {
    /// Translations and their composites, on a near prequantale.
    Lin,
    /// `rxs ≤ a ⇒ rys ≤ a`, on a unital near quantale.
    Sandwich,
    /// `a/(a/x)`, for cyclic `a` on a (near) residuated monoid.
    DoubleResidual,
    /// Meets of `uav` over units, on an associative unital near U-lattice.
    Units,
}

impl fmt::Display for VStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VStrategy::Lin => "lin",
            VStrategy::Sandwich => "rs",
            VStrategy::DoubleResidual => "double-residual",
            VStrategy::Units => "units",
        })
    }
}

fn check_element(m: &OrderedMagma, a: ElementId) -> Result<()> {
    m.poset().check(a)
}

fn largest(m: &OrderedMagma, ys: &[ElementId], x: ElementId) -> Result<ElementId> {
    m.sup(ys)
        .ok_or_else(|| Error::hypothesis(format!("no supremum of the admissible set at {}", m.label(x))))
}

/// Pairs `(x, y)` such that some composite of translations sends `x` below
/// `a` and `y` outside `↓a`.  This is the orbit of `(x, y)` under `Lin(Q)`,
/// saturated to a fixpoint.
fn separated_pairs(m: &OrderedMagma, a: ElementId) -> Vec<bool> {
    let n = m.size();
    let mut w: Vec<bool> = (0..n * n)
        .map(|i| m.leq(i / n, a) && !m.leq(i % n, a))
        .collect();
    loop {
        let mut changed = false;
        for u in 0..n {
            for v in 0..n {
                if w[u * n + v] {
                    continue;
                }
                let hit = m.elements().any(|r| {
                    w[m.mul(r, u) * n + m.mul(r, v)] || w[m.mul(u, r) * n + m.mul(v, r)]
                });
                if hit {
                    w[u * n + v] = true;
                    changed = true;
                }
            }
        }
        if !changed {
            return w;
        }
    }
}

/// `Lin(Q)`: the monoid generated by all left and right translations, or
/// `None` once it outgrows `cap`.
pub fn lin_monoid(m: &OrderedMagma, cap: usize) -> Option<Vec<Vec<ElementId>>> {
    let n = m.size();
    let mut gens = Vec::with_capacity(2 * n);
    for r in m.elements() {
        gens.push(m.elements().map(|x| m.mul(r, x)).collect::<Vec<_>>());
        gens.push(m.elements().map(|x| m.mul(x, r)).collect::<Vec<_>>());
    }
    let id: Vec<ElementId> = m.elements().collect();
    let mut seen: HashSet<Vec<ElementId>> = HashSet::from([id.clone()]);
    let mut out = vec![id];
    let mut i = 0;
    while i < out.len() {
        for g in &gens {
            let c: Vec<ElementId> = out[i].iter().map(|&x| g[x]).collect();
            if seen.insert(c.clone()) {
                if out.len() >= cap {
                    return None;
                }
                out.push(c);
            }
        }
        i += 1;
    }
    Some(out)
}

/// `x ↦ ⋁{y : ∀f∈Lin(Q) (f(x) ≤ a ⇒ f(y) ≤ a)}` on a near prequantale.
pub fn v_lin(m: &OrderedMagma, a: ElementId) -> Result<MonotoneMap> {
    check_element(m, a)?;
    if !m.classify()?.near_prequantale {
        return Err(Error::hypothesis("the translation formula for v(a) needs a near prequantale"));
    }
    let n = m.size();
    let w = separated_pairs(m, a);
    let mut table = Vec::with_capacity(n);
    for x in m.elements() {
        let ys: Vec<ElementId> = m.elements().filter(|&y| !w[x * n + y]).collect();
        table.push(largest(m, &ys, x)?);
    }
    let out = MonotoneMap::from_table(table);
    if let Some(lin) = lin_monoid(m, LIN_CAP) {
        // the same formula over the explicit monoid
        for x in m.elements() {
            let ys: Vec<ElementId> = m
                .elements()
                .filter(|&y| lin.iter().all(|f| !m.leq(f[x], a) || m.leq(f[y], a)))
                .collect();
            if m.sup(&ys) != Some(out[x]) {
                return Err(Error::internal("explicit Lin(Q) and the pair saturation disagree"));
            }
        }
    }
    Ok(out)
}

/// `x ↦` the largest `y` with `rxs ≤ a ⇒ rys ≤ a` for all `r, s`.
pub fn v_sandwich(m: &OrderedMagma, a: ElementId) -> Result<MonotoneMap> {
    check_element(m, a)?;
    let prof = m.classify()?;
    if !(prof.near_prequantale && prof.associative && prof.unital) {
        return Err(Error::hypothesis("the (r,s) formula for v(a) needs a unital near quantale"));
    }
    let mut table = Vec::with_capacity(m.size());
    for x in m.elements() {
        let ys: Vec<ElementId> = m
            .elements()
            .filter(|&y| {
                m.elements().all(|r| {
                    m.elements().all(|s| !m.leq(m.mul(m.mul(r, x), s), a) || m.leq(m.mul(m.mul(r, y), s), a))
                })
            })
            .collect();
        table.push(largest(m, &ys, x)?);
    }
    Ok(MonotoneMap::from_table(table))
}

/// Whether `xy ≤ a` always forces `yx ≤ a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicityReport {
    pub is_cyclic: bool,
    /// The lexicographically least `(x, y)` with `xy ≤ a` and `yx ≰ a`.
    pub counterexample: Option<(ElementId, ElementId)>,
}

pub fn is_cyclic(m: &OrderedMagma, a: ElementId) -> Result<CyclicityReport> {
    check_element(m, a)?;
    let counterexample = m
        .elements()
        .flat_map(|x| m.elements().map(move |y| (x, y)))
        .find(|&(x, y)| m.leq(m.mul(x, y), a) && !m.leq(m.mul(y, x), a));
    let is_cyclic = counterexample.is_none();
    if m.is_near_residuated() {
        // a/x and x\a are defined together and agree
        let by_residuals = m
            .elements()
            .all(|x| m.residual_left(a, x) == m.residual_right(x, a));
        if by_residuals != is_cyclic {
            return Err(Error::internal("cyclicity disagrees with the residual criterion"));
        }
    }
    Ok(CyclicityReport { is_cyclic, counterexample })
}

/// `a/(a/x)` on `M_a^{LR}` and `⋁M` elsewhere.
pub fn v_double_residual(m: &OrderedMagma, a: ElementId) -> Result<MonotoneMap> {
    check_element(m, a)?;
    let prof = m.classify()?;
    let monoid = prof.associative && prof.unital;
    if !(monoid && (prof.residuated || (prof.near_residuated && m.top().is_some()))) {
        return Err(Error::hypothesis(
            "the double residual formula needs a residuated monoid, or a near residuated monoid with a top",
        ));
    }
    let cyc = is_cyclic(m, a)?;
    if let Some((x, y)) = cyc.counterexample {
        return Err(Error::hypothesis(format!(
            "{} is not cyclic: {}·{} lies below it but {}·{} does not",
            m.label(a),
            m.label(x),
            m.label(y),
            m.label(y),
            m.label(x)
        )));
    }
    let mut table = Vec::with_capacity(m.size());
    for x in m.elements() {
        let in_lr = m.residual_left(a, x).is_some() && m.residual_right(x, a).is_some();
        let val = if in_lr {
            let ax = m.residual_left(a, x).expect("checked above");
            m.residual_left(a, ax)
                .ok_or_else(|| Error::internal("a/(a/x) undefined for x in the two-sided domain"))?
        } else {
            m.top().ok_or_else(|| Error::internal("residuated carrier missing a top"))?
        };
        table.push(val);
    }
    Ok(MonotoneMap::from_table(table))
}

/// `x ↦ ⋀{uav : u,v ∈ U(Q), x ≤ uav}`.
pub fn v_via_units(m: &OrderedMagma, a: ElementId) -> Result<MonotoneMap> {
    check_element(m, a)?;
    let prof = m.classify()?;
    if !(prof.near_sup_magma && prof.associative && prof.unital) {
        return Err(Error::hypothesis("the unit formula needs an associative unital near sup-magma"));
    }
    let units = m.distinguished_sets()?.u;
    if !m.is_sup_spanning(&units)? {
        return Err(Error::hypothesis("U(Q) is not sup-spanning"));
    }
    let mut sandwiches: Vec<ElementId> = units
        .iter()
        .flat_map(|&u| units.iter().map(move |&v| (u, v)))
        .map(|(u, v)| m.mul(m.mul(u, a), v))
        .collect();
    sandwiches.sort_unstable();
    sandwiches.dedup();
    let mut table = Vec::with_capacity(m.size());
    for x in m.elements() {
        let above: Vec<ElementId> = sandwiches.iter().copied().filter(|&z| m.leq(x, z)).collect();
        let val = m
            .inf(&above)
            .ok_or_else(|| Error::hypothesis(format!("no infimum of the sandwiches above {}", m.label(x))))?;
        table.push(val);
    }
    let out = MonotoneMap::from_table(table);
    if let Ok(general) = v_lin(m, a) {
        if general != out {
            return Err(Error::internal("unit formula disagrees with the translation formula"));
        }
    }
    Ok(out)
}

/// Every strategy whose hypotheses hold, with its result.
pub fn v_strategies(m: &OrderedMagma, a: ElementId) -> Result<Vec<(VStrategy, MonotoneMap)>> {
    check_element(m, a)?;
    let mut out = Vec::new();
    let attempts: [(VStrategy, fn(&OrderedMagma, ElementId) -> Result<MonotoneMap>); 4] = [
        (VStrategy::Lin, v_lin),
        (VStrategy::Sandwich, v_sandwich),
        (VStrategy::DoubleResidual, v_double_residual),
        (VStrategy::Units, v_via_units),
    ];
    for (tag, f) in attempts {
        match f(m, a) {
            Ok(s) => out.push((tag, s)),
            Err(Error::HypothesisNotMet(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

/// `v(a)`: the coarsest nucleus fixing `a`.  All applicable strategies must
/// agree, and the result must be a nucleus fixing `a`.
pub fn v(m: &OrderedMagma, a: ElementId) -> Result<MonotoneMap> {
    let all = v_strategies(m, a)?;
    let Some((first, s)) = all.first().cloned() else {
        return Err(Error::hypothesis(
            "v(a) needs a near prequantale, a unital near quantale, or a residuated monoid with a cyclic",
        ));
    };
    for (tag, t) in &all[1..] {
        if *t != s {
            return Err(Error::internal(format!("v({}) by {first} and by {tag} disagree", m.label(a))));
        }
    }
    if s[a] != a || !is_nucleus(m, s.as_slice()) {
        return Err(Error::internal(format!("v({}) is not a nucleus fixing it", m.label(a))));
    }
    Ok(s)
}

/// `v(a)` together with a check against every enumerated nucleus fixing `a`.
pub fn v_checked(m: &OrderedMagma, a: ElementId) -> Result<MonotoneMap> {
    let s = v(m, a)?;
    if m.size() <= COARSEST_CHECK_LIMIT {
        for t in enumerate_nuclei(m)? {
            if t[a] == a && !t.leq(m.poset(), &s) {
                return Err(Error::internal(format!(
                    "a nucleus fixing {} is not below v({})",
                    m.label(a),
                    m.label(a)
                )));
            }
        }
    }
    Ok(s)
}

/// `Q^⋆`, after checking `⋆ = ⋀{v(a) : a ∈ Q^⋆}`.
pub fn divisorial_decomposition(m: &OrderedMagma, s: &MonotoneMap) -> Result<Vec<ElementId>> {
    if !is_nucleus(m, s.as_slice()) {
        return Err(Error::hypothesis("divisorial_decomposition takes a nucleus"));
    }
    let image = s.image();
    let vs = image.iter().map(|&a| v(m, a)).collect::<Result<Vec<_>>>()?;
    if nuclei_meet(m, &vs)? != *s {
        return Err(Error::internal("a nucleus differs from the meet of v(a) over its image"));
    }
    Ok(image)
}
