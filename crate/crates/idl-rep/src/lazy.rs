//! Finite pieces of the up-sets carrier.

use magma_core::OrderedMagma;
use order_core::{EffectivePoset, Error, FinitePoset, Result, UpSet, UpSetsCarrier};

/// The compact members of `samples`: on up-sets these are the finite sets.
pub fn compact_upsets(samples: &[UpSet]) -> Result<Vec<UpSet>> {
    let mut out = Vec::new();
    for x in samples {
        if UpSetsCarrier.is_compact(x)? {
            if !x.is_finite() {
                return Err(Error::internal(format!("compactness oracle accepts the infinite set {x}")));
            }
            out.push(x.clone());
        }
    }
    Ok(out)
}

/// The union closure of finitely many finite up-sets, as a join semilattice
/// multiplied by `∪`.
pub fn finite_union_semilattice(gens: &[UpSet]) -> Result<(OrderedMagma, Vec<UpSet>)> {
    if gens.is_empty() {
        return Err(Error::hypothesis("the generating family is empty"));
    }
    let mut elems: Vec<UpSet> = compact_upsets(gens)?;
    if elems.len() != gens.len() {
        return Err(Error::hypothesis("generators must be finite sets"));
    }
    let mut i = 0;
    while i < elems.len() {
        for j in 0..=i {
            let u = elems[i].union(&elems[j]);
            if !elems.contains(&u) {
                if elems.len() >= order_core::ENUMERATION_CAP {
                    return Err(Error::TooLarge { size: elems.len() + 1, cap: order_core::ENUMERATION_CAP });
                }
                elems.push(u);
            }
        }
        i += 1;
    }
    let labels = elems.iter().map(|x| x.to_string()).collect();
    let p = FinitePoset::from_fn(labels, |a, b| UpSetsCarrier.leq(&elems[a], &elems[b]))?;
    let m = OrderedMagma::from_fn(p, |a, b| {
        let u = elems[a].union(&elems[b]);
        elems.iter().position(|x| *x == u).expect("closed under unions")
    })?;
    Ok((m, elems))
}
