//! Meets and joins in `N(M)`, the lattice of nuclei as an ordered magma, and
//! joins certified by alternating composition.

use magma_core::OrderedMagma;
use order_core::{ElementId, Error, FinitePoset, Result};

use crate::enumerate::enumerate_nuclei;
use crate::map::MonotoneMap;
use crate::nucleus::is_nucleus;

fn require_nuclei(m: &OrderedMagma, gamma: &[MonotoneMap]) -> Result<()> {
    for (i, s) in gamma.iter().enumerate() {
        if !is_nucleus(m, s.as_slice()) {
            return Err(Error::hypothesis(format!(
                "member {i} of the family is not a nucleus"
            )));
        }
    }
    Ok(())
}

/// Pointwise infimum.  The empty family gives `e`.
pub fn nuclei_meet(m: &OrderedMagma, gamma: &[MonotoneMap]) -> Result<MonotoneMap> {
    require_nuclei(m, gamma)?;
    if gamma.is_empty() {
        return MonotoneMap::top_map(m.poset());
    }
    let mut table = Vec::with_capacity(m.size());
    for x in m.elements() {
        let vals: Vec<ElementId> = gamma.iter().map(|s| s[x]).collect();
        let lo = m.inf(&vals).ok_or_else(|| {
            Error::hypothesis(format!("the values at {} have no infimum", m.label(x)))
        })?;
        table.push(lo);
    }
    let out = MonotoneMap::from_table(table);
    if !is_nucleus(m, out.as_slice()) {
        return Err(Error::internal("pointwise meet of nuclei is not a nucleus"));
    }
    Ok(out)
}

/// `x ↦ ⋀{y ≥ x : y fixed by every member}`.
///
/// Accepted on near prequantales, and on bounded complete near residuated
/// carriers when the family has an upper bound, which here means every `x`
/// has a common fixed point above it.  Anything else is refused.
pub fn nuclei_join(m: &OrderedMagma, gamma: &[MonotoneMap]) -> Result<MonotoneMap> {
    require_nuclei(m, gamma)?;
    let prof = m.classify()?;
    let fallback = prof.bounded_complete && prof.near_residuated;
    if !prof.near_prequantale && !fallback {
        return Err(Error::hypothesis(
            "joins of nuclei need a near prequantale or a bounded complete near residuated carrier",
        ));
    }
    let common: Vec<ElementId> = m
        .elements()
        .filter(|&y| gamma.iter().all(|s| s[y] == y))
        .collect();
    let mut table = Vec::with_capacity(m.size());
    for x in m.elements() {
        let above: Vec<ElementId> = common.iter().copied().filter(|&y| m.leq(x, y)).collect();
        if above.is_empty() {
            return Err(Error::hypothesis(format!(
                "the family is unbounded: no common fixed point above {}",
                m.label(x)
            )));
        }
        let lo = m
            .inf(&above)
            .ok_or_else(|| Error::internal("bounded complete carrier lacks an infimum"))?;
        table.push(lo);
    }
    let out = MonotoneMap::from_table(table);
    if !is_nucleus(m, out.as_slice()) {
        return Err(Error::internal("join of nuclei is not a nucleus"));
    }
    if out.image() != common {
        return Err(Error::internal(
            "image of the join differs from the common fixed points",
        ));
    }
    Ok(out)
}

/// Label used for nuclei in lattice and tower output.
pub fn nucleus_name(p: &FinitePoset, s: &MonotoneMap, index: usize) -> String {
    if *s == MonotoneMap::identity(p.size()) {
        "d".to_string()
    } else if p
        .top()
        .is_some_and(|t| s.as_slice().iter().all(|&y| y == t))
    {
        "e".to_string()
    } else {
        format!("n{index}")
    }
}

/// `N(M)` under the pointwise order, with join as multiplication.
#[derive(Clone, Debug)]
pub struct NucleusLattice {
    pub nuclei: Vec<MonotoneMap>,
    pub magma: OrderedMagma,
}

impl NucleusLattice {
    pub fn new(m: &OrderedMagma) -> Result<Self> {
        let nuclei = enumerate_nuclei(m)?;
        Self::from_nuclei(m, nuclei)
    }

    pub fn from_nuclei(m: &OrderedMagma, nuclei: Vec<MonotoneMap>) -> Result<Self> {
        let p = m.poset();
        let labels: Vec<String> = nuclei
            .iter()
            .enumerate()
            .map(|(i, s)| nucleus_name(p, s, i))
            .collect();
        let poset = FinitePoset::from_fn(labels, |a, b| nuclei[a].leq(p, &nuclei[b]))?;
        let mut table = vec![vec![0; nuclei.len()]; nuclei.len()];
        for a in 0..nuclei.len() {
            for b in 0..nuclei.len() {
                table[a][b] = poset.join(a, b).ok_or_else(|| {
                    Error::hypothesis("N(M) is not a join semilattice on this carrier")
                })?;
            }
        }
        let magma = OrderedMagma::new(poset, table)?;
        let d = nuclei
            .iter()
            .position(|s| *s == MonotoneMap::identity(m.size()))
            .ok_or_else(|| Error::internal("the identity is missing from N(M)"))?;
        if magma.unit() != Some(d) {
            return Err(Error::internal("d is not the unit of N(M) under join"));
        }
        if magma.r_set()?.len() != magma.size() {
            return Err(Error::internal("N(M) differs from R(N(M))"));
        }
        Ok(NucleusLattice { nuclei, magma })
    }

    pub fn size(&self) -> usize {
        self.nuclei.len()
    }

    pub fn index_of(&self, s: &MonotoneMap) -> Option<ElementId> {
        self.nuclei.iter().position(|t| t == s)
    }

    pub fn to_dot(&self) -> String {
        self.magma.poset().to_dot("nuclei")
    }
}

/// Outcome of a successful alternating-composition test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositionVerdict {
    pub n: usize,
    pub join: MonotoneMap,
}

/// `n`-fold alternating composition whose innermost factor is `first`.
fn alternate(first: &MonotoneMap, second: &MonotoneMap, n: usize) -> MonotoneMap {
    let mut acc = first.clone();
    for i in 1..n {
        let outer = if i % 2 == 0 { first } else { second };
        acc = outer.compose(&acc);
    }
    acc
}

/// Looks for `n ≤ bound` with `⋯∘s2∘s1∘s2` coarser than `⋯∘s1∘s2∘s1`; that
/// composition is then `s1 ∨ s2`.  Exhausting the bound is not a refutation.
pub fn composition_join_check(
    m: &OrderedMagma,
    s1: &MonotoneMap,
    s2: &MonotoneMap,
    bound: usize,
) -> Result<CompositionVerdict> {
    require_nuclei(m, &[s1.clone(), s2.clone()])?;
    for n in 1..=bound {
        let a = alternate(s2, s1, n);
        let b = alternate(s1, s2, n);
        if b.leq(m.poset(), &a) {
            if !is_nucleus(m, a.as_slice()) {
                return Err(Error::internal(format!(
                    "{n}-fold composition is not a nucleus"
                )));
            }
            match nuclei_join(m, &[s1.clone(), s2.clone()]) {
                Ok(j) if j != a => {
                    return Err(Error::internal(
                        "composition disagrees with the fixed-point join",
                    ))
                }
                _ => {}
            }
            return Ok(CompositionVerdict { n, join: a });
        }
    }
    Err(Error::BudgetExceeded(bound))
}
