use magma_core::{ClassificationProfile, OrderedMagma};
use order_core::{subsets, ElementId, Error, Result};

use crate::map::MonotoneMap;
use crate::nucleus::is_nucleus;

/// Carriers up to this size get the sup-preservation check on every subset.
const SUBSET_CHECK_LIMIT: usize = 12;

/// `M*` with `⋆`-multiplication `x ⋆ y = (xy)*`.
#[derive(Clone, Debug)]
pub struct QuotientMagma {
    /// Parent ids of the image, ascending; position `i` is quotient id `i`.
    pub image: Vec<ElementId>,
    pub magma: OrderedMagma,
    pub nucleus: MonotoneMap,
}

impl QuotientMagma {
    /// Quotient id of a parent element of the image.
    pub fn local(&self, x: ElementId) -> Option<ElementId> {
        self.image.iter().position(|&y| y == x)
    }

    /// The corestriction `M → M*` in quotient ids.
    pub fn corestriction(&self) -> Vec<ElementId> {
        self.nucleus
            .as_slice()
            .iter()
            .map(|&y| self.local(y).expect("image contains every value"))
            .collect()
    }
}

/// Classes of the table that pass from a carrier to its quotients.
fn inherited(p: &ClassificationProfile) -> Vec<(&'static str, bool)> {
    vec![
        ("prequantale", p.prequantale),
        ("near prequantale", p.near_prequantale),
        ("semiprequantale", p.semiprequantale),
        ("multiplicative semilattice", p.multiplicative_semilattice),
        ("prequantic semilattice", p.prequantic_semilattice),
        ("residuated", p.residuated),
        ("near residuated", p.near_residuated),
        ("associative", p.associative),
        ("commutative", p.commutative),
        ("unital", p.unital),
    ]
}

pub fn quotient(m: &OrderedMagma, s: &MonotoneMap) -> Result<QuotientMagma> {
    if !is_nucleus(m, s.as_slice()) {
        return Err(Error::hypothesis("quotients are taken by nuclei"));
    }
    let image = s.image();
    let poset = m.poset().subposet(&image);
    let pos = |x: ElementId| image.iter().position(|&y| y == x).expect("value in image");
    let table: Vec<Vec<ElementId>> = image
        .iter()
        .map(|&x| image.iter().map(|&y| pos(s[m.mul(x, y)])).collect())
        .collect();
    let magma = OrderedMagma::new(poset, table)?;
    let q = QuotientMagma {
        image,
        magma,
        nucleus: s.clone(),
    };
    check_sup_preserving(m, &q)?;
    check_inheritance(m, &q)?;
    check_residuals(m, &q)?;
    if let Some(one) = m.unit() {
        if q.magma.unit() != q.local(s[one]) {
            return Err(Error::internal("1* is not the unit of the quotient"));
        }
    }
    Ok(q)
}

/// `(⋁X)* = ⋁_{M*} X*` whenever `⋁X` exists.
fn check_sup_preserving(m: &OrderedMagma, q: &QuotientMagma) -> Result<()> {
    let n = m.size();
    let family: Box<dyn Iterator<Item = Vec<ElementId>>> = if n <= SUBSET_CHECK_LIMIT {
        Box::new(subsets(n))
    } else {
        let pairs = (0..n).flat_map(move |x| (x..n).map(move |y| vec![x, y]));
        Box::new(std::iter::once(vec![]).chain(pairs))
    };
    let f = q.corestriction();
    for xs in family {
        let Some(j) = m.sup(&xs) else { continue };
        let imgs: Vec<ElementId> = xs.iter().map(|&x| f[x]).collect();
        if q.magma.sup(&imgs) != Some(f[j]) {
            return Err(Error::internal(
                "corestriction fails to preserve a supremum",
            ));
        }
    }
    Ok(())
}

fn check_inheritance(m: &OrderedMagma, q: &QuotientMagma) -> Result<()> {
    let parent = inherited(&m.classify()?);
    let child = inherited(&q.magma.classify()?);
    for ((name, a), (_, b)) in parent.into_iter().zip(child) {
        if a && !b {
            return Err(Error::internal(format!(
                "quotient is not {name} although the carrier is"
            )));
        }
    }
    Ok(())
}

/// `(x/y)* = x/y* = x/y` for `x ∈ M*` whenever some `zy ≤ x`, and the mirror.
fn check_residuals(m: &OrderedMagma, q: &QuotientMagma) -> Result<()> {
    if !m.is_near_residuated() {
        return Ok(());
    }
    let s = &q.nucleus;
    for &x in &q.image {
        for y in m.elements() {
            if m.elements().any(|z| m.leq(m.mul(z, y), x)) {
                let r = m.residual_left(x, y);
                let r_star = m.residual_left(x, s[y]);
                if r.is_none() || r != r_star || r.map(|r| s[r]) != r {
                    return Err(Error::internal(
                        "left residual formula fails in the quotient",
                    ));
                }
            }
            if m.elements().any(|z| m.leq(m.mul(y, z), x)) {
                let r = m.residual_right(y, x);
                let r_star = m.residual_right(s[y], x);
                if r.is_none() || r != r_star || r.map(|r| s[r]) != r {
                    return Err(Error::internal(
                        "right residual formula fails in the quotient",
                    ));
                }
            }
        }
    }
    Ok(())
}
