//! Finite commutative rings `Z/n` and `F_p[x]/(f)` and their ideal lattices.

use std::fmt;

use magma_core::OrderedMagma;
use order_core::{ElementId, Error, FinitePoset, Result};

/// Largest ring whose ideals are computed.
pub const RING_CAP: usize = 256;

/// A finite commutative ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingDesc {
    Zmod(u64),
    /// `F_p[x]/(f)`, `f` monic with coefficients listed from the constant term up.
    Poly {
        p: u64,
        f: Vec<u64>,
    },
}

impl fmt::Display for RingDesc {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDesc::Zmod(n) => write!(out, "Z/{n}"),
            RingDesc::Poly { p, f } => write!(out, "F_{p}[x]/({})", poly_label(f)),
        }
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

fn poly_label(c: &[u64]) -> String {
    let terms: Vec<String> = c
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &a)| a != 0)
        .map(|(i, &a)| {
            let coef = if a == 1 && i > 0 {
                String::new()
            } else {
                a.to_string()
            };
            match i {
                0 => coef,
                1 => format!("{coef}x"),
                _ => format!("{coef}x^{i}"),
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

impl RingDesc {
    /// Parses a polynomial like `x^3+x+1` or `2x^2+1` over `F_p`, made monic.
    pub fn poly(p: u64, f: &str) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::hypothesis(format!("F_{p} needs a prime p")));
        }
        let mut coeffs: Vec<u64> = Vec::new();
        for term in f.split('+').map(str::trim) {
            if term.is_empty() {
                return Err(Error::malformed(format!("empty term in polynomial {f:?}")));
            }
            let (coef, deg) = match term.find('x') {
                None => (term, 0),
                Some(i) => {
                    let rest = &term[i + 1..];
                    let deg = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^')
                            .and_then(|d| d.parse::<usize>().ok())
                            .ok_or_else(|| {
                                Error::malformed(format!("bad exponent in term {term:?}"))
                            })?
                    };
                    (term[..i].trim_end_matches('*'), deg)
                }
            };
            let c = if coef.is_empty() {
                1
            } else {
                coef.parse::<u64>()
                    .map_err(|_| Error::malformed(format!("bad coefficient in term {term:?}")))?
            };
            if coeffs.len() <= deg {
                coeffs.resize(deg + 1, 0);
            }
            coeffs[deg] = (coeffs[deg] + c) % p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        if coeffs.len() < 2 {
            return Err(Error::malformed(format!("{f:?} has degree below 1")));
        }
        let inv = pow_mod(*coeffs.last().expect("nonempty"), p - 2, p);
        let f = coeffs.iter().map(|c| c * inv % p).collect();
        Ok(RingDesc::Poly { p, f })
    }

    pub fn size(&self) -> Result<usize> {
        let too_large = || Error::TooLarge {
            size: usize::MAX,
            cap: RING_CAP,
        };
        match self {
            RingDesc::Zmod(n) => usize::try_from(*n).map_err(|_| too_large()),
            RingDesc::Poly { p, f } => {
                let d = u32::try_from(f.len() - 1).map_err(|_| too_large())?;
                p.checked_pow(d)
                    .and_then(|s| usize::try_from(s).ok())
                    .ok_or_else(too_large)
            }
        }
    }
}

/// Addition and multiplication tables of a finite ring; element `0` is zero
/// and element `1` is one (in a nonzero ring).
#[derive(Clone, Debug)]
pub struct FiniteRing {
    pub desc: RingDesc,
    pub labels: Vec<String>,
    add: Vec<Vec<ElementId>>,
    mul: Vec<Vec<ElementId>>,
}

impl FiniteRing {
    pub fn new(desc: RingDesc) -> Result<Self> {
        let n = desc.size()?;
        if n > RING_CAP {
            return Err(Error::TooLarge {
                size: n,
                cap: RING_CAP,
            });
        }
        if n < 2 {
            return Err(Error::malformed("the zero ring is not handled"));
        }
        let (labels, add, mul) = match &desc {
            RingDesc::Zmod(_) => {
                let labels = (0..n).map(|x| x.to_string()).collect();
                let add = (0..n)
                    .map(|x| (0..n).map(|y| (x + y) % n).collect())
                    .collect();
                let mul = (0..n)
                    .map(|x| (0..n).map(|y| x * y % n).collect())
                    .collect();
                (labels, add, mul)
            }
            RingDesc::Poly { p, f } => {
                let p = *p as usize;
                let d = f.len() - 1;
                let digits = |mut x: usize| {
                    (0..d)
                        .map(|_| {
                            let c = x % p;
                            x /= p;
                            c
                        })
                        .collect::<Vec<usize>>()
                };
                let index = |c: &[usize]| c.iter().rev().fold(0, |acc, &a| acc * p + a);
                let polymul = |a: &[usize], b: &[usize]| {
                    let mut prod = vec![0usize; 2 * d];
                    for (i, &x) in a.iter().enumerate() {
                        for (j, &y) in b.iter().enumerate() {
                            prod[i + j] = (prod[i + j] + x * y) % p;
                        }
                    }
                    // reduce with the monic f, from the top degree down
                    for k in (d..2 * d).rev() {
                        let c = prod[k];
                        if c != 0 {
                            for (i, &fi) in f.iter().enumerate().take(d) {
                                prod[k - d + i] = (prod[k - d + i] + (p - c) * fi as usize) % p;
                            }
                            prod[k] = 0;
                        }
                    }
                    prod.truncate(d);
                    prod
                };
                let labels = (0..n)
                    .map(|x| poly_label(&digits(x).iter().map(|&c| c as u64).collect::<Vec<_>>()))
                    .collect();
                let add = (0..n)
                    .map(|x| {
                        (0..n)
                            .map(|y| {
                                let s: Vec<usize> = digits(x)
                                    .iter()
                                    .zip(digits(y))
                                    .map(|(a, b)| (a + b) % p)
                                    .collect();
                                index(&s)
                            })
                            .collect()
                    })
                    .collect();
                let mul = (0..n)
                    .map(|x| {
                        (0..n)
                            .map(|y| index(&polymul(&digits(x), &digits(y))))
                            .collect()
                    })
                    .collect();
                (labels, add, mul)
            }
        };
        Ok(FiniteRing {
            desc,
            labels,
            add,
            mul,
        })
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn add(&self, x: ElementId, y: ElementId) -> ElementId {
        self.add[x][y]
    }

    pub fn mul(&self, x: ElementId, y: ElementId) -> ElementId {
        self.mul[x][y]
    }

    pub fn pow(&self, x: ElementId, e: u64) -> ElementId {
        (0..e).fold(1, |acc, _| self.mul(acc, x))
    }

    /// Additive order of `1`.
    pub fn characteristic(&self) -> u64 {
        let mut k = 1;
        let mut x = 1;
        while x != 0 {
            x = self.add(x, 1);
            k += 1;
        }
        k
    }

    pub fn units(&self) -> Vec<ElementId> {
        (0..self.size())
            .filter(|&x| (0..self.size()).any(|y| self.mul(x, y) == 1))
            .collect()
    }

    /// The ideal generated by `gens`: the additive closure of `R·gens`.
    pub fn ideal_generated(&self, gens: &[ElementId]) -> Vec<ElementId> {
        let n = self.size();
        let mut member = vec![false; n];
        member[0] = true;
        let mut stack: Vec<ElementId> = Vec::new();
        for &g in gens {
            for r in 0..n {
                let z = self.mul(r, g);
                if !member[z] {
                    member[z] = true;
                    stack.push(z);
                }
            }
        }
        while let Some(z) = stack.pop() {
            for y in 0..n {
                if member[y] {
                    let s = self.add(z, y);
                    if !member[s] {
                        member[s] = true;
                        stack.push(s);
                    }
                }
            }
        }
        (0..n).filter(|&x| member[x]).collect()
    }

    /// Closed under addition and under multiplication by `R`, and nonempty.
    pub fn is_ideal(&self, xs: &[ElementId]) -> bool {
        let n = self.size();
        let mut member = vec![false; n];
        xs.iter().for_each(|&x| member[x] = true);
        member[0]
            && xs
                .iter()
                .all(|&x| xs.iter().all(|&y| member[self.add(x, y)]))
            && xs.iter().all(|&x| (0..n).all(|r| member[self.mul(r, x)]))
    }
}

/// `I(R)` under inclusion and ideal multiplication.
#[derive(Clone, Debug)]
pub struct RingIdealLattice {
    pub ring: FiniteRing,
    /// Member lists, ordered by size and then lexicographically.
    pub ideals: Vec<Vec<ElementId>>,
    pub magma: OrderedMagma,
    pub characteristic: u64,
}

impl RingIdealLattice {
    pub fn index_of(&self, members: &[ElementId]) -> Option<ElementId> {
        self.ideals.iter().position(|i| i == members)
    }

    pub fn generated(&self, gens: &[ElementId]) -> ElementId {
        self.index_of(&self.ring.ideal_generated(gens))
            .expect("every generated ideal is listed")
    }

    pub fn zero_ideal(&self) -> ElementId {
        0
    }

    pub fn whole_ring(&self) -> ElementId {
        self.ideals.len() - 1
    }

    /// Prime ideals: proper, with `ab ∈ P ⇒ a ∈ P or b ∈ P`.
    pub fn primes(&self) -> Vec<ElementId> {
        let n = self.ring.size();
        (0..self.ideals.len())
            .filter(|&i| {
                let members = &self.ideals[i];
                let mut member = vec![false; n];
                members.iter().for_each(|&x| member[x] = true);
                members.len() < n
                    && (0..n).all(|a| {
                        member[a] || (0..n).all(|b| member[b] || !member[self.ring.mul(a, b)])
                    })
            })
            .collect()
    }

    pub fn minimal_primes(&self) -> Vec<ElementId> {
        let primes = self.primes();
        primes
            .iter()
            .copied()
            .filter(|&p| primes.iter().all(|&q| q == p || !self.magma.leq(q, p)))
            .collect()
    }

    /// `R^o`: elements outside every minimal prime.
    pub fn r_o(&self) -> Vec<ElementId> {
        let mins = self.minimal_primes();
        (0..self.ring.size())
            .filter(|x| mins.iter().all(|&p| !self.ideals[p].contains(x)))
            .collect()
    }
}

fn label_for(ring: &FiniteRing, members: &[ElementId]) -> String {
    if let Some(&g) = members
        .iter()
        .find(|&&g| ring.ideal_generated(&[g]) == members)
    {
        return format!("({})", ring.labels[g]);
    }
    // greedy: smallest element not yet reached
    let mut gens = Vec::new();
    let mut reached = ring.ideal_generated(&[]);
    while reached != members {
        let g = *members
            .iter()
            .find(|x| !reached.contains(x))
            .expect("members exceed reached");
        gens.push(g);
        reached = ring.ideal_generated(&gens);
    }
    let names: Vec<&str> = gens.iter().map(|&g| ring.labels[g].as_str()).collect();
    format!("({})", names.join(","))
}

pub fn ring_ideal_lattice(desc: &RingDesc) -> Result<RingIdealLattice> {
    let ring = FiniteRing::new(desc.clone())?;
    let n = ring.size();
    let mut ideals: Vec<Vec<ElementId>> = (0..n).map(|x| ring.ideal_generated(&[x])).collect();
    ideals.sort();
    ideals.dedup();
    // close under sums
    let mut i = 0;
    while i < ideals.len() {
        for j in 0..i {
            let mut gens = ideals[i].clone();
            gens.extend(&ideals[j]);
            let s = ring.ideal_generated(&gens);
            if !ideals.contains(&s) {
                ideals.push(s);
            }
        }
        i += 1;
    }
    ideals.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    if let Some(bad) = ideals.iter().find(|i| !ring.is_ideal(i)) {
        return Err(Error::internal(format!(
            "generated set {bad:?} is not an ideal"
        )));
    }
    let labels = ideals.iter().map(|i| label_for(&ring, i)).collect();
    let poset = FinitePoset::from_fn(labels, |a, b| {
        ideals[a].iter().all(|x| ideals[b].contains(x))
    })?;
    let pos = |members: &[ElementId]| ideals.iter().position(|i| i == members);
    let mut table = Vec::with_capacity(ideals.len());
    for a in &ideals {
        let mut row = Vec::with_capacity(ideals.len());
        for b in &ideals {
            let prods: Vec<ElementId> = a
                .iter()
                .flat_map(|&x| b.iter().map(move |&y| (x, y)))
                .map(|(x, y)| ring.mul(x, y))
                .collect();
            row.push(
                pos(&ring.ideal_generated(&prods))
                    .ok_or_else(|| Error::internal("IJ is not listed"))?,
            );
        }
        table.push(row);
    }
    let magma = OrderedMagma::new(poset, table)?;
    if !magma.classify()?.is_multiplicative_lattice() {
        return Err(Error::internal("I(R) is not a multiplicative lattice"));
    }
    if magma.unit() != Some(ideals.len() - 1) || magma.annihilator() != Some(0) {
        return Err(Error::internal(
            "I(R) should have unit R and annihilator (0)",
        ));
    }
    let characteristic = ring.characteristic();
    Ok(RingIdealLattice {
        ring,
        ideals,
        magma,
        characteristic,
    })
}
