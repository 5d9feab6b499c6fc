//! `⋆_w` on the up-sets of ℕ under Minkowski sum.
//!
//! The elements below the unit `{0}` are `∅` and `{0}`, both compact, so
//! `GV ∩ K` is found by direct inspection and the formula is exact.

use finitary::{star_f_lazy, LazyNucleus};
use order_core::{EffectivePoset, Error, Result, UpSet, UpSetsCarrier};

/// The identity on up-sets: every set is its own ideal.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct UpSetsIdentity;

impl LazyNucleus<UpSetsCarrier> for UpSetsIdentity {
    fn name(&self) -> String {
        "identity".into()
    }

    fn apply(&self, x: &UpSet) -> UpSet {
        x.clone()
    }

    fn compact_sup(&self, x: &UpSet) -> Option<UpSet> {
        Some(x.clone())
    }
}

/// `⋆`-GV elements among `{∅, {0}}`.
pub fn gv_upsets<N: LazyNucleus<UpSetsCarrier>>(s: &N) -> Vec<UpSet> {
    let one = UpSet::finite(&[0]);
    let target = s.apply(&one);
    [UpSet::empty(), one].into_iter().filter(|z| s.apply(z) == target).collect()
}

/// `x/z` for `z ⊆ {0}`: `x/∅ = ℕ` and `x/{0} = x`.
fn quotient_by_sub_unit(x: &UpSet, z: &UpSet) -> UpSet {
    if z.is_empty() {
        UpSet::naturals()
    } else {
        x.clone()
    }
}

pub fn star_w_upsets<N: LazyNucleus<UpSetsCarrier>>(s: &N, x: &UpSet) -> Result<UpSet> {
    let gv = gv_upsets(s);
    let mut out = UpSet::empty();
    for z in &gv {
        out = out.union(&quotient_by_sub_unit(x, z));
    }
    let f = star_f_lazy(&UpSetsCarrier, s, x)?;
    if !UpSetsCarrier.leq(&out, &f) {
        return Err(Error::internal(format!("⋆_w exceeds ⋆_f at {x}")));
    }
    Ok(out)
}
