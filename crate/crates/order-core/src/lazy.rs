//! Lazily represented infinite carriers.
//!
//! Two carriers are shipped: the chain `ℕ ∪ {∞}` and the ultimately periodic
//! subsets of `ℕ` ordered by inclusion.  Both answer suprema only for explicit
//! finite lists and for the symbolic families in [`Family`]; anything else is
//! reported as undecidable.

use std::fmt;

use crate::error::{Error, Result};
use crate::poset::{FinitePoset, PosetFlags};

/// Which kind of carrier an [`EffectivePoset`] is.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CarrierKind {
    Finite,
    LazyChain,
    UpSetsOfNaturals,
}

/// Symbolic directed families understood by the lazy carriers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    /// All naturals, inside `ℕ ∪ {∞}`.
    Naturals,
    /// `{k, k+1, ...}` inside `ℕ ∪ {∞}`.
    TailFrom(u64),
    /// `{start + i*step}` inside `ℕ ∪ {∞}`.
    Progression { start: u64, step: u64 },
    /// The chain `X ∩ [0, n)` for `n ∈ ℕ`.
    Truncations(UpSet),
    /// All finite subsets of `X`.
    FiniteSubsets(UpSet),
}

/// A subset of a carrier: either listed explicitly or named by a family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Subset<E> {
    Explicit(Vec<E>),
    Family(Family),
}

impl<E> Subset<E> {
    pub fn explicit(xs: Vec<E>) -> Self {
        Subset::Explicit(xs)
    }
}

/// Order oracles common to finite and lazy carriers.
pub trait EffectivePoset {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn kind(&self) -> CarrierKind;
    fn leq(&self, a: &Self::Elem, b: &Self::Elem) -> bool;
    fn sup(&self, xs: &Subset<Self::Elem>) -> Result<Option<Self::Elem>>;
    fn inf(&self, xs: &Subset<Self::Elem>) -> Result<Option<Self::Elem>>;
    fn is_directed(&self, xs: &Subset<Self::Elem>) -> Result<bool>;
    fn is_compact(&self, x: &Self::Elem) -> Result<bool>;
    fn flags(&self) -> PosetFlags;
}

fn undescribable(f: &Family, carrier: &str) -> Error {
    Error::Undecidable(format!("family {f:?} is not describable on {carrier}"))
}

impl EffectivePoset for FinitePoset {
    type Elem = usize;

    fn kind(&self) -> CarrierKind {
        CarrierKind::Finite
    }

    fn leq(&self, a: &usize, b: &usize) -> bool {
        FinitePoset::leq(self, *a, *b)
    }

    fn sup(&self, xs: &Subset<usize>) -> Result<Option<usize>> {
        match xs {
            Subset::Explicit(v) => {
                self.check_subset(v)?;
                Ok(FinitePoset::sup(self, v))
            }
            Subset::Family(f) => Err(undescribable(f, "a finite carrier")),
        }
    }

    fn inf(&self, xs: &Subset<usize>) -> Result<Option<usize>> {
        match xs {
            Subset::Explicit(v) => {
                self.check_subset(v)?;
                Ok(FinitePoset::inf(self, v))
            }
            Subset::Family(f) => Err(undescribable(f, "a finite carrier")),
        }
    }

    fn is_directed(&self, xs: &Subset<usize>) -> Result<bool> {
        match xs {
            Subset::Explicit(v) => {
                self.check_subset(v)?;
                Ok(FinitePoset::is_directed(self, v))
            }
            Subset::Family(f) => Err(undescribable(f, "a finite carrier")),
        }
    }

    fn is_compact(&self, x: &usize) -> Result<bool> {
        self.check(*x)?;
        Ok(true)
    }

    fn flags(&self) -> PosetFlags {
        FinitePoset::flags(self)
    }
}

/// An element of the chain `ℕ ∪ {∞}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Omega {
    Fin(u64),
    Inf,
}

impl fmt::Display for Omega {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Omega::Fin(n) => write!(f, "{n}"),
            Omega::Inf => write!(f, "inf"),
        }
    }
}

/// The complete chain `ℕ ∪ {∞}`; `∞` is its only non-compact element.
#[derive(Clone, Copy, Debug, Default)]
pub struct ChainOmega;

impl EffectivePoset for ChainOmega {
    type Elem = Omega;

    fn kind(&self) -> CarrierKind {
        CarrierKind::LazyChain
    }

    fn leq(&self, a: &Omega, b: &Omega) -> bool {
        a <= b
    }

    fn sup(&self, xs: &Subset<Omega>) -> Result<Option<Omega>> {
        Ok(Some(match xs {
            Subset::Explicit(v) => v.iter().copied().max().unwrap_or(Omega::Fin(0)),
            Subset::Family(Family::Naturals | Family::TailFrom(_)) => Omega::Inf,
            Subset::Family(Family::Progression { start, step }) => {
                if *step == 0 {
                    Omega::Fin(*start)
                } else {
                    Omega::Inf
                }
            }
            Subset::Family(f) => return Err(undescribable(f, "the chain carrier")),
        }))
    }

    fn inf(&self, xs: &Subset<Omega>) -> Result<Option<Omega>> {
        Ok(Some(match xs {
            Subset::Explicit(v) => v.iter().copied().min().unwrap_or(Omega::Inf),
            Subset::Family(Family::Naturals) => Omega::Fin(0),
            Subset::Family(Family::TailFrom(k)) => Omega::Fin(*k),
            Subset::Family(Family::Progression { start, .. }) => Omega::Fin(*start),
            Subset::Family(f) => return Err(undescribable(f, "the chain carrier")),
        }))
    }

    fn is_directed(&self, xs: &Subset<Omega>) -> Result<bool> {
        match xs {
            Subset::Explicit(v) => Ok(!v.is_empty()),
            Subset::Family(Family::Naturals | Family::TailFrom(_) | Family::Progression { .. }) => {
                Ok(true)
            }
            Subset::Family(f) => Err(undescribable(f, "the chain carrier")),
        }
    }

    fn is_compact(&self, x: &Omega) -> Result<bool> {
        Ok(matches!(x, Omega::Fin(_)))
    }

    fn flags(&self) -> PosetFlags {
        PosetFlags {
            complete: true,
            near_sup_complete: true,
            bounded_complete: true,
            dcpo: true,
            bdcpo: true,
            bounded_above: true,
            join_semilattice: true,
            meet_semilattice: true,
            algebraic: true,
        }
    }
}

/// An ultimately periodic subset of `ℕ` in canonical form.
///
/// `n < prefix.len()` is a member iff `prefix[n]`; larger `n` is a member iff
/// `cycle[(n - prefix.len()) % cycle.len()]`.  The period is minimal and the
/// prefix is as short as possible, so structural equality is set equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct UpSet {
    prefix: Vec<bool>,
    cycle: Vec<bool>,
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

impl UpSet {
    /// Builds a set from a prefix and a nonempty repeating block.
    pub fn from_parts(prefix: Vec<bool>, cycle: Vec<bool>) -> Result<Self> {
        if cycle.is_empty() {
            return Err(Error::malformed("periodic block must be nonempty"));
        }
        Ok(UpSet::normalized(prefix, cycle))
    }

    fn normalized(mut prefix: Vec<bool>, mut cycle: Vec<bool>) -> Self {
        let p = cycle.len();
        if let Some(d) = (1..=p)
            .filter(|d| p % d == 0)
            .find(|&d| (0..p).all(|i| cycle[i] == cycle[i % d]))
        {
            cycle.truncate(d);
        }
        while let Some(&last) = prefix.last() {
            if last != cycle[cycle.len() - 1] {
                break;
            }
            prefix.pop();
            cycle.rotate_right(1);
        }
        UpSet { prefix, cycle }
    }

    pub fn empty() -> Self {
        UpSet { prefix: vec![], cycle: vec![false] }
    }

    pub fn naturals() -> Self {
        UpSet { prefix: vec![], cycle: vec![true] }
    }

    pub fn finite(members: &[u64]) -> Self {
        let len = members.iter().map(|&m| m as usize + 1).max().unwrap_or(0);
        let mut prefix = vec![false; len];
        for &m in members {
            prefix[m as usize] = true;
        }
        UpSet::normalized(prefix, vec![false])
    }

    /// `{start + i*step : i ≥ 0}`; `step = 0` gives `{start}`.
    pub fn progression(start: u64, step: u64) -> Self {
        if step == 0 {
            return UpSet::finite(&[start]);
        }
        let mut cycle = vec![false; step as usize];
        cycle[0] = true;
        UpSet::normalized(vec![false; start as usize], cycle)
    }

    /// `{n : n ≥ start}`.
    pub fn tail(start: u64) -> Self {
        UpSet::normalized(vec![false; start as usize], vec![true])
    }

    /// The submonoid of `(ℕ, +)` generated by `gens`.
    pub fn generated_submonoid(gens: &[u64]) -> Self {
        let gens: Vec<usize> = gens.iter().map(|&g| g as usize).filter(|&g| g > 0).collect();
        if gens.is_empty() {
            return UpSet::finite(&[0]);
        }
        let g = gens.iter().copied().fold(0, gcd);
        let lo = *gens.iter().min().unwrap();
        let hi = *gens.iter().max().unwrap();
        // every multiple of g beyond lo*hi is reachable
        let bound = (lo * hi + 1).div_ceil(g) * g;
        let mut reach = vec![false; bound];
        reach[0] = true;
        for n in 1..bound {
            reach[n] = gens.iter().any(|&a| a <= n && reach[n - a]);
        }
        let mut cycle = vec![false; g];
        cycle[0] = true;
        UpSet::normalized(reach, cycle)
    }

    pub fn threshold(&self) -> usize {
        self.prefix.len()
    }

    pub fn period(&self) -> usize {
        self.cycle.len()
    }

    pub fn contains(&self, n: u64) -> bool {
        let n = n as usize;
        if n < self.prefix.len() {
            self.prefix[n]
        } else {
            self.cycle[(n - self.prefix.len()) % self.cycle.len()]
        }
    }

    pub fn is_finite(&self) -> bool {
        self.cycle.iter().all(|&b| !b)
    }

    pub fn is_empty(&self) -> bool {
        self.is_finite() && self.prefix.iter().all(|&b| !b)
    }

    pub fn min(&self) -> Option<u64> {
        let window = (self.threshold() + self.period()) as u64;
        (0..window).find(|&n| self.contains(n))
    }

    /// Least member `≥ n`.
    pub fn next_at_or_above(&self, n: u64) -> Option<u64> {
        let end = n.max(self.threshold() as u64) + self.period() as u64;
        (n..end).find(|&k| self.contains(k))
    }

    /// Members below `bound`.
    pub fn members_below(&self, bound: u64) -> Vec<u64> {
        (0..bound).filter(|&n| self.contains(n)).collect()
    }

    /// Members of a finite set; `None` for infinite sets.
    pub fn finite_members(&self) -> Option<Vec<u64>> {
        self.is_finite()
            .then(|| self.members_below(self.threshold() as u64))
    }

    /// `X ∩ [0, n)`.
    pub fn truncate(&self, n: u64) -> Self {
        UpSet::finite(&self.members_below(n))
    }

    fn combine(&self, other: &UpSet, f: impl Fn(bool, bool) -> bool) -> UpSet {
        let t = self.threshold().max(other.threshold());
        let p = lcm(self.period(), other.period());
        let at = |n: usize| f(self.contains(n as u64), other.contains(n as u64));
        let prefix = (0..t).map(at).collect();
        let cycle = (t..t + p).map(at).collect();
        UpSet::normalized(prefix, cycle)
    }

    pub fn union(&self, other: &UpSet) -> UpSet {
        self.combine(other, |a, b| a || b)
    }

    pub fn intersection(&self, other: &UpSet) -> UpSet {
        self.combine(other, |a, b| a && b)
    }

    pub fn is_subset(&self, other: &UpSet) -> bool {
        let t = self.threshold().max(other.threshold());
        let p = lcm(self.period(), other.period());
        (0..(t + p) as u64).all(|n| !self.contains(n) || other.contains(n))
    }

    /// Minkowski sum `{a + b : a ∈ X, b ∈ Y}`.
    pub fn minkowski(&self, other: &UpSet) -> UpSet {
        if self.is_empty() || other.is_empty() {
            return UpSet::empty();
        }
        let (ta, pa) = (self.threshold(), self.period());
        let (tb, pb) = (other.threshold(), other.period());
        // beyond this point every summand family is periodic with period dividing lcm(pa, pb)
        let start = ta + tb + pa + pb + pa * pb;
        let p = lcm(pa, pb);
        let member = |n: usize| {
            (0..=n).any(|a| self.contains(a as u64) && other.contains((n - a) as u64))
        };
        let prefix = (0..start).map(member).collect();
        let cycle = (start..start + p).map(member).collect();
        UpSet::normalized(prefix, cycle)
    }
}

impl fmt::Display for UpSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_finite() {
            let items: Vec<String> = self
                .members_below(self.threshold() as u64)
                .iter()
                .map(|n| n.to_string())
                .collect();
            return write!(f, "{{{}}}", items.join(","));
        }
        let shown = (self.threshold() + 2 * self.period()) as u64;
        let items: Vec<String> = self.members_below(shown).iter().map(|n| n.to_string()).collect();
        write!(f, "{{{},...}}", items.join(","))
    }
}

/// The ultimately periodic subsets of `ℕ` under inclusion.
///
/// Only describable families have suprema here; the declared flags describe
/// the ambient power set of `ℕ` of which this carrier is the computable part.
#[derive(Clone, Copy, Debug, Default)]
pub struct UpSetsCarrier;

impl EffectivePoset for UpSetsCarrier {
    type Elem = UpSet;

    fn kind(&self) -> CarrierKind {
        CarrierKind::UpSetsOfNaturals
    }

    fn leq(&self, a: &UpSet, b: &UpSet) -> bool {
        a.is_subset(b)
    }

    fn sup(&self, xs: &Subset<UpSet>) -> Result<Option<UpSet>> {
        match xs {
            Subset::Explicit(v) => Ok(Some(
                v.iter().fold(UpSet::empty(), |acc, x| acc.union(x)),
            )),
            Subset::Family(Family::Truncations(x) | Family::FiniteSubsets(x)) => {
                Ok(Some(x.clone()))
            }
            Subset::Family(f) => Err(undescribable(f, "the up-sets carrier")),
        }
    }

    fn inf(&self, xs: &Subset<UpSet>) -> Result<Option<UpSet>> {
        match xs {
            Subset::Explicit(v) => Ok(Some(
                v.iter().fold(UpSet::naturals(), |acc, x| acc.intersection(x)),
            )),
            Subset::Family(Family::Truncations(_) | Family::FiniteSubsets(_)) => {
                Ok(Some(UpSet::empty()))
            }
            Subset::Family(f) => Err(undescribable(f, "the up-sets carrier")),
        }
    }

    fn is_directed(&self, xs: &Subset<UpSet>) -> Result<bool> {
        match xs {
            Subset::Explicit(v) => Ok(!v.is_empty()
                && v.iter().all(|a| {
                    v.iter()
                        .all(|b| v.iter().any(|c| a.union(b).is_subset(c)))
                })),
            Subset::Family(Family::Truncations(_) | Family::FiniteSubsets(_)) => Ok(true),
            Subset::Family(f) => Err(undescribable(f, "the up-sets carrier")),
        }
    }

    fn is_compact(&self, x: &UpSet) -> Result<bool> {
        Ok(x.is_finite())
    }

    fn flags(&self) -> PosetFlags {
        PosetFlags {
            complete: true,
            near_sup_complete: true,
            bounded_complete: true,
            dcpo: true,
            bdcpo: true,
            bounded_above: true,
            join_semilattice: true,
            meet_semilattice: true,
            algebraic: true,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minkowski_of_two_three() {
        let a = UpSet::finite(&[2, 3]);
        assert_eq!(a.minkowski(&a), UpSet::finite(&[4, 5, 6]));
    }

    #[test]
    fn ideal_generated_by_two_three() {
        let a = UpSet::finite(&[2, 3]);
        let ideal = a.minkowski(&UpSet::naturals());
        assert_eq!(ideal, UpSet::tail(2));
        assert_eq!(ideal.threshold(), 2);
    }

    #[test]
    fn truncation_sup_recovers_semigroup() {
        let s = UpSet::generated_submonoid(&[2, 3]);
        assert_eq!(s.members_below(6), vec![0, 2, 3, 4, 5]);
        let sup = UpSetsCarrier
            .sup(&Subset::Family(Family::Truncations(s.clone())))
            .unwrap();
        assert_eq!(sup, Some(s));
    }

    #[test]
    fn normal_form_is_canonical() {
        let a = UpSet::from_parts(vec![true, false, true], vec![false, true, false, true]).unwrap();
        let b = UpSet::progression(0, 2);
        assert_eq!(a, b);
        assert_eq!(b.period(), 2);
        assert_eq!(b.threshold(), 0);
    }

    #[test]
    fn chain_infinity_is_not_compact() {
        assert!(ChainOmega.is_compact(&Omega::Fin(7)).unwrap());
        assert!(!ChainOmega.is_compact(&Omega::Inf).unwrap());
        assert_eq!(
            ChainOmega.sup(&Subset::Family(Family::Naturals)).unwrap(),
            Some(Omega::Inf)
        );
    }

    #[test]
    fn finite_carrier_rejects_families() {
        let p = FinitePoset::chain(3);
        assert!(matches!(
            EffectivePoset::sup(&p, &Subset::Family(Family::Naturals)),
            Err(Error::Undecidable(_))
        ));
    }
}
