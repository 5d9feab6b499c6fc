//! Semiprime operations on finite rings: the radical and tight closure.

use nucleus_core::{
    closure_from_preclosure, enumerate_nuclei, is_nucleus, is_preclosure, MonotoneMap,
};
use order_core::{ElementId, Error, Result};

use crate::ring::RingIdealLattice;

/// `I ↦ √I`, cross-checked against the meet of the primes above `I`.
pub fn radical_operation(l: &RingIdealLattice) -> Result<MonotoneMap> {
    let ring = &l.ring;
    let n = ring.size();
    let primes = l.primes();
    let mut table = Vec::with_capacity(l.ideals.len());
    for (i, members) in l.ideals.iter().enumerate() {
        // x^k ∈ I for some k iff x^n ∈ I, as R/I has at most n elements
        let rad: Vec<ElementId> = (0..n)
            .filter(|&x| members.contains(&ring.pow(x, n as u64)))
            .collect();
        let id = l
            .index_of(&rad)
            .ok_or_else(|| Error::internal("√I is not an ideal"))?;
        let above: Vec<ElementId> = primes
            .iter()
            .copied()
            .filter(|&p| l.magma.leq(i, p))
            .collect();
        let meet = if above.is_empty() {
            l.whole_ring()
        } else {
            l.magma.inf(&above).expect("complete lattice")
        };
        if meet != id {
            return Err(Error::internal(
                "√I differs from the meet of the primes containing I",
            ));
        }
        table.push(id);
    }
    if !is_nucleus(&l.magma, &table) {
        return Err(Error::internal("the radical is not a semiprime operation"));
    }
    Ok(MonotoneMap::from_table(table))
}

/// Tight closure data for a ring of prime power characteristic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TightClosure {
    pub p: u64,
    /// Whether the characteristic is `p` itself, so that `x ↦ x^p` is a ring
    /// endomorphism.  Otherwise the formula is evaluated literally.
    pub frobenius: bool,
    /// `x ↦ x^{p^e}` depends only on `e mod period` once `e ≥ preperiod`.
    pub preperiod: usize,
    pub period: usize,
    /// Elements outside every minimal prime.
    pub r_o: Vec<ElementId>,
    pub t: MonotoneMap,
    pub star: MonotoneMap,
    /// Ideals with `I^T = I`.
    pub tightly_closed: Vec<ElementId>,
}

/// The prime `p` with `characteristic = p^k`.
fn prime_of(c: u64) -> Option<u64> {
    let p = (2..=c).find(|d| c % d == 0)?;
    let mut rest = c;
    while rest % p == 0 {
        rest /= p;
    }
    (rest == 1).then_some(p)
}

/// The maps `x ↦ x^{p^e}` for `e = 0, 1, ...` until one repeats.
fn frobenius_orbit(l: &RingIdealLattice, p: u64) -> (Vec<Vec<ElementId>>, usize, usize) {
    let ring = &l.ring;
    let mut maps: Vec<Vec<ElementId>> = vec![(0..ring.size()).collect()];
    loop {
        let next: Vec<ElementId> = maps
            .last()
            .expect("nonempty")
            .iter()
            .map(|&x| ring.pow(x, p))
            .collect();
        if let Some(s) = maps.iter().position(|m| *m == next) {
            let period = maps.len() - s;
            return (maps, s, period);
        }
        maps.push(next);
    }
}

/// `I^T` for every ideal, with `e` ranging over `[from, from + period)`.
fn t_table(
    l: &RingIdealLattice,
    maps: &[Vec<ElementId>],
    preperiod: usize,
    period: usize,
    from: usize,
    r_o: &[ElementId],
) -> Result<Vec<ElementId>> {
    let ring = &l.ring;
    let power = |e: usize| {
        let k = if e < preperiod {
            e
        } else {
            preperiod + (e - preperiod) % period
        };
        &maps[k]
    };
    let window: Vec<usize> = (from..from + period).collect();
    let mut table = Vec::with_capacity(l.ideals.len());
    for members in &l.ideals {
        let brackets: Vec<Vec<ElementId>> = window
            .iter()
            .map(|&e| {
                let f = power(e);
                ring.ideal_generated(&members.iter().map(|&x| f[x]).collect::<Vec<_>>())
            })
            .collect();
        let closure: Vec<ElementId> = (0..ring.size())
            .filter(|&x| {
                r_o.iter().any(|&c| {
                    window
                        .iter()
                        .zip(&brackets)
                        .all(|(&e, b)| b.contains(&ring.mul(c, power(e)[x])))
                })
            })
            .collect();
        let id = l.index_of(&closure).ok_or_else(|| {
            Error::hypothesis(
                "I^T is not an ideal here; the power map is not additive in this characteristic",
            )
        })?;
        table.push(id);
    }
    Ok(table)
}

pub fn tight_closure(l: &RingIdealLattice) -> Result<TightClosure> {
    let p = prime_of(l.characteristic).ok_or_else(|| {
        Error::hypothesis(format!(
            "characteristic {} is not a prime power",
            l.characteristic
        ))
    })?;
    let frobenius = p == l.characteristic;
    let (maps, preperiod, period) = frobenius_orbit(l, p);
    let r_o = l.r_o();
    let t = t_table(l, &maps, preperiod, period, preperiod, &r_o)?;
    // q ≫ 0: starting the window later never changes I^T
    for from in [
        preperiod + 1,
        preperiod + period,
        preperiod + 2 * period + 1,
    ] {
        if t_table(l, &maps, preperiod, period, from, &r_o)? != t {
            return Err(Error::internal(
                "I^T depends on where the Frobenius window starts",
            ));
        }
    }
    let m = &l.magma;
    if !is_preclosure(m.poset(), &t) {
        return Err(Error::internal("T is not a preclosure"));
    }
    for i in m.elements() {
        for j in m.elements() {
            if !m.leq(m.mul(i, t[j]), t[m.mul(i, j)]) {
                return Err(Error::internal("I·J^T is not contained in (IJ)^T"));
            }
        }
    }
    let star = closure_from_preclosure(m.poset(), &t)?;
    let tightly_closed: Vec<ElementId> = m.elements().filter(|&i| t[i] == i).collect();
    for i in m.elements() {
        let above: Vec<ElementId> = tightly_closed
            .iter()
            .copied()
            .filter(|&j| m.leq(i, j))
            .collect();
        if m.inf(&above) != Some(star[i]) {
            return Err(Error::internal(
                "I^* is not the smallest tightly closed ideal containing I",
            ));
        }
    }
    if !is_nucleus(m, star.as_slice()) {
        return Err(Error::internal("* is not a semiprime operation"));
    }
    let same_image: Vec<MonotoneMap> = enumerate_nuclei(m)?
        .into_iter()
        .filter(|s| s.fixed_points() == tightly_closed)
        .collect();
    if same_image != [star.clone()] {
        return Err(Error::internal(
            "* is not the unique semiprime operation fixing the tightly closed ideals",
        ));
    }
    if frobenius && star.as_slice() != t.as_slice() {
        return Err(Error::internal("T and * differ on a Noetherian ring"));
    }
    Ok(TightClosure {
        p,
        frobenius,
        preperiod,
        period,
        r_o,
        t: MonotoneMap::from_table(t),
        star,
        tightly_closed,
    })
}

pub fn tight_closure_t(l: &RingIdealLattice, i: ElementId) -> Result<ElementId> {
    l.magma.poset().check(i)?;
    Ok(tight_closure(l)?.t[i])
}

pub fn tight_closure_star(l: &RingIdealLattice, i: ElementId) -> Result<ElementId> {
    l.magma.poset().check(i)?;
    Ok(tight_closure(l)?.star[i])
}
