use magma_core::OrderedMagma;
use order_core::{ElementId, Error, Result};

use crate::map::MonotoneMap;
use crate::nucleus::is_nucleus;

/// The nucleus `x ↦ ⋁{y : f(y) = f(x)}` of a near sup-preserving magma
/// homomorphism out of a near prequantale.
pub fn nucleus_of_morphism(
    q: &OrderedMagma,
    target: &OrderedMagma,
    f: &[ElementId],
) -> Result<MonotoneMap> {
    if f.len() != q.size() {
        return Err(Error::NotAMorphism(format!(
            "map has {} entries, source has {}",
            f.len(),
            q.size()
        )));
    }
    if let Some(&bad) = f.iter().find(|&&y| y >= target.size()) {
        return Err(Error::ForeignId {
            id: bad,
            size: target.size(),
        });
    }
    if !q.is_homomorphism_to(target, f) {
        return Err(Error::NotAMorphism(
            "map does not preserve multiplication".into(),
        ));
    }
    if !q.is_near_sup_preserving_to(target, f) {
        return Err(Error::NotAMorphism(
            "map does not preserve nonempty suprema".into(),
        ));
    }
    if !q.classify()?.near_prequantale {
        return Err(Error::hypothesis("the source must be a near prequantale"));
    }
    let mut table = Vec::with_capacity(q.size());
    for x in q.elements() {
        let fiber: Vec<ElementId> = q.elements().filter(|&y| f[y] == f[x]).collect();
        table.push(
            q.sup(&fiber)
                .ok_or_else(|| Error::internal("fiber has no supremum"))?,
        );
    }
    let s = MonotoneMap::from_table(table);
    if !is_nucleus(q, s.as_slice()) {
        return Err(Error::internal("fiber-supremum map is not a nucleus"));
    }
    // f restricted to the image is an isomorphism onto im f
    let image = s.image();
    for &a in &image {
        for &b in &image {
            if (a != b && f[a] == f[b]) || q.leq(a, b) != target.leq(f[a], f[b]) {
                return Err(Error::internal(
                    "f is not an order embedding on the fixed points",
                ));
            }
            if f[s[q.mul(a, b)]] != target.mul(f[a], f[b]) {
                return Err(Error::internal(
                    "f does not carry the star product to the product",
                ));
            }
        }
    }
    for x in q.elements() {
        if f[s[x]] != f[x] {
            return Err(Error::internal(
                "f does not factor through the corestriction",
            ));
        }
    }
    Ok(s)
}
