//! Finite magma descriptors and their power-set prequantales.

use magma_core::OrderedMagma;
use order_core::{ElementId, Error, FinitePoset, Result};

/// Largest magma whose power set is built.
pub const POWERSET_CAP: usize = 5;

/// A finite magma given by its table, with verified flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteMagmaDesc {
    pub labels: Vec<String>,
    pub table: Vec<Vec<ElementId>>,
    pub associative: bool,
    pub commutative: bool,
    pub unital: bool,
}

impl FiniteMagmaDesc {
    pub fn new(labels: Vec<String>, table: Vec<Vec<ElementId>>) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::malformed("a magma needs at least one element"));
        }
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(Error::malformed(format!("table is not {n} by {n}")));
        }
        if let Some(&bad) = table.iter().flatten().find(|&&z| z >= n) {
            return Err(Error::ForeignId { id: bad, size: n });
        }
        let mul = |x: usize, y: usize| table[x][y];
        let associative =
            (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| mul(mul(x, y), z) == mul(x, mul(y, z)))));
        let commutative = (0..n).all(|x| (0..n).all(|y| mul(x, y) == mul(y, x)));
        let unital = (0..n).any(|e| (0..n).all(|x| mul(e, x) == x && mul(x, e) == x));
        Ok(FiniteMagmaDesc {
            labels,
            table,
            associative,
            commutative,
            unital,
        })
    }

    pub fn from_fn(
        labels: Vec<String>,
        f: impl Fn(ElementId, ElementId) -> ElementId,
    ) -> Result<Self> {
        let n = labels.len();
        let table = (0..n).map(|x| (0..n).map(|y| f(x, y)).collect()).collect();
        Self::new(labels, table)
    }

    /// The cyclic group of order `k`, written multiplicatively: `1, g, g^2, ...`.
    pub fn cyclic_group(k: usize) -> Self {
        let labels = (0..k)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{i}"),
            })
            .collect();
        Self::from_fn(labels, |x, y| (x + y) % k).expect("valid table")
    }

    /// `M ⊔ {0}` with `0` absorbing; `0` gets the last id.
    pub fn with_zero(&self) -> Self {
        let n = self.size();
        let mut labels = self.labels.clone();
        labels.push("0".into());
        Self::from_fn(
            labels,
            |x, y| if x == n || y == n { n } else { self.mul(x, y) },
        )
        .expect("valid table")
    }

    /// `xy = x`.
    pub fn left_zero(k: usize) -> Self {
        let labels = (0..k)
            .map(|i| ((b'p' + i as u8) as char).to_string())
            .collect();
        Self::from_fn(labels, |x, _| x).expect("valid table")
    }

    /// `{1, a}` with `a² = a`.
    pub fn two_element_monoid() -> Self {
        Self::from_fn(vec!["1".into(), "a".into()], |x, y| x.max(y)).expect("valid table")
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn mul(&self, x: ElementId, y: ElementId) -> ElementId {
        self.table[x][y]
    }

    pub fn unit(&self) -> Option<ElementId> {
        (0..self.size())
            .find(|&e| (0..self.size()).all(|x| self.mul(e, x) == x && self.mul(x, e) == x))
    }

    /// Associative, commutative, unital and every element invertible.
    pub fn is_abelian_group(&self) -> bool {
        let n = self.size();
        self.associative
            && self.commutative
            && self
                .unit()
                .is_some_and(|e| (0..n).all(|x| (0..n).any(|y| self.mul(x, y) == e)))
    }

    pub fn is_commutative_monoid(&self) -> bool {
        self.associative && self.commutative && self.unital
    }
}

/// `{a,b}` style label of a subset mask.
pub(crate) fn subset_label(labels: &[String], mask: usize) -> String {
    if mask == 0 {
        return "∅".into();
    }
    let items: Vec<&str> = (0..labels.len())
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| labels[i].as_str())
        .collect();
    format!("{{{}}}", items.join(","))
}

/// Complex product of two subset masks.
pub(crate) fn mask_product(m: &FiniteMagmaDesc, a: usize, b: usize) -> usize {
    let n = m.size();
    let mut out = 0;
    for i in (0..n).filter(|i| a >> i & 1 == 1) {
        for j in (0..n).filter(|j| b >> j & 1 == 1) {
            out |= 1 << m.mul(i, j);
        }
    }
    out
}

/// `2^M`, or `2^M − {∅}`, under complex multiplication.  Element ids are
/// bit masks, shifted down by one when `∅` is dropped.
pub fn powerset_prequantale(m: &FiniteMagmaDesc, drop_empty: bool) -> Result<OrderedMagma> {
    let n = m.size();
    if n > POWERSET_CAP {
        return Err(Error::TooLarge {
            size: n,
            cap: POWERSET_CAP,
        });
    }
    let shift = usize::from(drop_empty);
    let masks: Vec<usize> = (shift..1 << n).collect();
    let labels = masks.iter().map(|&k| subset_label(&m.labels, k)).collect();
    let poset = FinitePoset::from_fn(labels, |a, b| masks[a] & !masks[b] == 0)?;
    let q = OrderedMagma::from_fn(poset, |a, b| mask_product(m, masks[a], masks[b]) - shift)?;
    let prof = q.classify()?;
    let expect_prequantale = !drop_empty || n == 1;
    if prof.prequantale != expect_prequantale || !prof.near_prequantale {
        return Err(Error::internal(
            "power set classification disagrees with its construction",
        ));
    }
    if prof.associative != m.associative {
        return Err(Error::internal(
            "2^M is associative exactly when M is a semigroup",
        ));
    }
    Ok(q)
}
