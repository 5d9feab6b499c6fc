//! Module systems on finite abelian groups and weak ideal systems on finite
//! commutative monoids, as self-maps of `2^{M_0}`.

use magma_core::OrderedMagma;
use nucleus_core::nucleus::{cond_closed_products, star_product_associative};
use nucleus_core::{enumerate_nuclei, is_closure, is_nucleus, transportables, MonotoneMap};
use order_core::{ElementId, Error, Result};

use crate::desc::{powerset_prequantale, FiniteMagmaDesc};

/// Largest group or monoid whose `2^{M_0}` is built.
pub const SYSTEM_CAP: usize = 4;

/// Largest group or monoid whose systems are enumerated outright.
pub const SYSTEM_ENUMERATION_CAP: usize = 3;

/// `2^{M_0}` with element ids as bit masks: bit `i < n` is `i ∈ M`, bit `n`
/// is the adjoined `0`.
#[derive(Clone, Debug)]
pub struct ZeroPowerSet {
    pub base: FiniteMagmaDesc,
    pub magma: OrderedMagma,
}

impl ZeroPowerSet {
    fn build(base: &FiniteMagmaDesc) -> Result<Self> {
        if base.size() > SYSTEM_CAP {
            return Err(Error::TooLarge {
                size: base.size(),
                cap: SYSTEM_CAP,
            });
        }
        let magma = powerset_prequantale(&base.with_zero(), false)?;
        if !magma.classify()?.is_multiplicative_lattice() {
            return Err(Error::internal(
                "2^{M_0} of a commutative monoid is not a multiplicative lattice",
            ));
        }
        Ok(ZeroPowerSet {
            base: base.clone(),
            magma,
        })
    }

    pub fn size(&self) -> usize {
        self.magma.size()
    }

    pub fn empty(&self) -> ElementId {
        0
    }

    /// `{0}`.
    pub fn zero(&self) -> ElementId {
        1 << self.base.size()
    }

    /// `M_0`.
    pub fn full(&self) -> ElementId {
        self.size() - 1
    }

    /// `{c}` for `c` in `M`, or `{0}` for `c = |M|`.
    pub fn singleton(&self, c: usize) -> ElementId {
        1 << c
    }

    /// `{1}`.
    pub fn one(&self) -> ElementId {
        self.singleton(self.base.unit().expect("unital base"))
    }

    pub fn mul(&self, x: ElementId, y: ElementId) -> ElementId {
        self.magma.mul(x, y)
    }

    fn subset(&self, x: ElementId, y: ElementId) -> bool {
        x & !y == 0
    }

    fn check(&self, r: &[ElementId]) -> Result<()> {
        if r.len() != self.size() {
            return Err(Error::malformed(format!(
                "map has {} entries for {} elements",
                r.len(),
                self.size()
            )));
        }
        match r.iter().find(|&&z| z >= self.size()) {
            Some(&bad) => Err(Error::ForeignId {
                id: bad,
                size: self.size(),
            }),
            None => Ok(()),
        }
    }

    /// Singletons `{c}` for every `c ∈ M_0`.
    fn singletons(&self) -> impl Iterator<Item = ElementId> + '_ {
        (0..=self.base.size()).map(|c| self.singleton(c))
    }

    /// `X ↦ X ∪ {0}`.
    pub fn zero_adjunction(&self) -> MonotoneMap {
        MonotoneMap::from_table(self.magma.elements().map(|x| x | self.zero()).collect())
    }

    /// `X ↦ XM_0 ∪ {0}`, the `M_0`-ideal generated by `X`.
    pub fn ideal_generation(&self) -> MonotoneMap {
        MonotoneMap::from_table(
            self.magma
                .elements()
                .map(|x| self.mul(x, self.full()) | self.zero())
                .collect(),
        )
    }

    /// `∅, {0} ↦ {0}`, everything else `↦ M_0`.
    pub fn collapse(&self) -> MonotoneMap {
        let z = self.zero();
        MonotoneMap::from_table(
            self.magma
                .elements()
                .map(|x| if x & !z == 0 { z } else { self.full() })
                .collect(),
        )
    }
}

/// `2^{G_0}` for a finite abelian group `G`.
pub fn module_system_lattice(g: &FiniteMagmaDesc) -> Result<ZeroPowerSet> {
    if !g.is_abelian_group() {
        return Err(Error::hypothesis("module systems live on abelian groups"));
    }
    ZeroPowerSet::build(g)
}

/// `2^{M_0}` for a finite commutative monoid `M`.
pub fn ideal_system_lattice(m: &FiniteMagmaDesc) -> Result<ZeroPowerSet> {
    if !m.is_commutative_monoid() {
        return Err(Error::hypothesis(
            "ideal systems live on commutative monoids",
        ));
    }
    ZeroPowerSet::build(m)
}

/// The four equivalent conditions for a self-map with `∅^r = {0}`, and the
/// nucleus form they are all equivalent to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModuleSystemConditions {
    /// Closure with `(cX)^r = cX^r` for `c ∈ G_0`.
    pub raw: bool,
    /// Closure with associative `r`-multiplication.
    pub associative: bool,
    /// Closure with `(X^r Y^r)^r = (XY)^r`.
    pub closed_products: bool,
    /// `XY ⊆ Z^r ⇔ XY^r ⊆ Z^r`.
    pub residual: bool,
    pub nucleus: bool,
}

impl ModuleSystemConditions {
    pub fn all(&self) -> [bool; 5] {
        [
            self.raw,
            self.associative,
            self.closed_products,
            self.residual,
            self.nucleus,
        ]
    }

    pub fn agree(&self) -> bool {
        self.all().iter().all(|&b| b == self.raw)
    }
}

/// Evaluates every condition; `None` when `∅^r ≠ {0}`, where they do not apply.
pub fn module_system_conditions(
    l: &ZeroPowerSet,
    r: &[ElementId],
) -> Result<Option<ModuleSystemConditions>> {
    l.check(r)?;
    if r[l.empty()] != l.zero() {
        return Ok(None);
    }
    let m = &l.magma;
    let closure = is_closure(m.poset(), r);
    let raw = closure
        && l.singletons()
            .all(|c| m.elements().all(|x| r[l.mul(c, x)] == l.mul(c, r[x])));
    let residual = m.elements().all(|x| {
        m.elements().all(|y| {
            m.elements()
                .all(|z| l.subset(l.mul(x, y), r[z]) == l.subset(l.mul(x, r[y]), r[z]))
        })
    });
    Ok(Some(ModuleSystemConditions {
        raw,
        associative: closure && star_product_associative(m, r),
        closed_products: closure && cond_closed_products(m, r),
        residual,
        nucleus: is_nucleus(m, r),
    }))
}

/// Whether `r` is a module system; all characterizations must agree.
pub fn is_module_system(l: &ZeroPowerSet, r: &[ElementId]) -> Result<bool> {
    match module_system_conditions(l, r)? {
        None => Ok(false),
        Some(c) if c.agree() => Ok(c.raw),
        Some(c) => Err(Error::internal(format!(
            "module system characterizations disagree: {c:?}"
        ))),
    }
}

fn enumerable(l: &ZeroPowerSet) -> Result<()> {
    let n = l.base.size();
    if n > SYSTEM_ENUMERATION_CAP {
        return Err(Error::TooLarge {
            size: n,
            cap: SYSTEM_ENUMERATION_CAP,
        });
    }
    Ok(())
}

/// All module systems, as the nuclei with `∅^r = {0}`.
pub fn module_systems(l: &ZeroPowerSet) -> Result<Vec<MonotoneMap>> {
    enumerable(l)?;
    let mut out = Vec::new();
    for s in enumerate_nuclei(&l.magma)? {
        if s[l.empty()] == l.zero() {
            if !is_module_system(l, s.as_slice())? {
                return Err(Error::internal(
                    "a nucleus with ∅^r = {0} fails the module system test",
                ));
            }
            out.push(s);
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IdealSystemConditions {
    /// Closure with `0 ∈ ∅^r`, `cM_0 ⊆ {c}^r` and `cX^r ⊆ (cX)^r`.
    pub raw_weak: bool,
    /// Nucleus with `{0}^r = ∅^r` and `{1}^r = M_0`.
    pub nucleus_weak: bool,
    /// Weak, with `(cX)^r = cX^r`.
    pub raw_ideal: bool,
    /// Weak, with every singleton transportable.
    pub transportable_ideal: bool,
}

pub fn ideal_system_conditions(l: &ZeroPowerSet, r: &[ElementId]) -> Result<IdealSystemConditions> {
    l.check(r)?;
    let m = &l.magma;
    let closure = is_closure(m.poset(), r);
    let raw_weak = closure
        && l.subset(l.zero(), r[l.empty()])
        && l.singletons().all(|c| l.subset(l.mul(c, l.full()), r[c]))
        && l.singletons().all(|c| {
            m.elements()
                .all(|x| l.subset(l.mul(c, r[x]), r[l.mul(c, x)]))
        });
    let nucleus_weak = is_nucleus(m, r) && r[l.zero()] == r[l.empty()] && r[l.one()] == l.full();
    let raw_ideal = raw_weak
        && l.singletons()
            .all(|c| m.elements().all(|x| r[l.mul(c, x)] == l.mul(c, r[x])));
    let t = transportables(m, r);
    let transportable_ideal = nucleus_weak && l.singletons().all(|c| t.contains(&c));
    Ok(IdealSystemConditions {
        raw_weak,
        nucleus_weak,
        raw_ideal,
        transportable_ideal,
    })
}

fn ideal_verdict(l: &ZeroPowerSet, r: &[ElementId]) -> Result<IdealSystemConditions> {
    let c = ideal_system_conditions(l, r)?;
    if c.raw_weak != c.nucleus_weak || c.raw_ideal != c.transportable_ideal {
        return Err(Error::internal(format!(
            "ideal system characterizations disagree: {c:?}"
        )));
    }
    Ok(c)
}

pub fn is_weak_ideal_system(l: &ZeroPowerSet, r: &[ElementId]) -> Result<bool> {
    Ok(ideal_verdict(l, r)?.raw_weak)
}

pub fn is_ideal_system(l: &ZeroPowerSet, r: &[ElementId]) -> Result<bool> {
    Ok(ideal_verdict(l, r)?.raw_ideal)
}

/// All weak ideal systems, each tagged with whether it is an ideal system.
pub fn weak_ideal_systems(l: &ZeroPowerSet) -> Result<Vec<(MonotoneMap, bool)>> {
    enumerable(l)?;
    let mut out = Vec::new();
    for s in enumerate_nuclei(&l.magma)? {
        let c = ideal_verdict(l, s.as_slice())?;
        if c.raw_weak {
            out.push((s, c.raw_ideal));
        }
    }
    Ok(out)
}
