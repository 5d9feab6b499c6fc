//! The numerical quantale: ultimately periodic subsets of `(ℕ, +)`.

use finitary::lazy::WINDOW;
use finitary::{LazyMagma, Saturation};
use order_core::{EffectivePoset, Family, Result, Subset, UpSet, UpSetsCarrier};

/// Up-sets of `ℕ` under inclusion with Minkowski sum.
pub fn upsets_quantale() -> UpSetsCarrier {
    UpSetsCarrier
}

/// `X ↦ X + ℕ` and `X ↦ X + ⟨2,3⟩`.
pub fn shipped_upset_nuclei() -> Vec<Saturation> {
    vec![
        Saturation::ideal_generation(),
        Saturation::numerical(&[2, 3]),
    ]
}

/// Precoherence, checked on a finite list of describable elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrecoherenceSpotCheck {
    pub samples: usize,
    /// The unit `{0}` is compact.
    pub unit_compact: bool,
    /// Sums of finite samples are finite.
    pub compacts_closed: bool,
    /// Each sample is the sup of its finite truncations.
    pub sup_of_compacts: bool,
}

impl PrecoherenceSpotCheck {
    pub fn holds(&self) -> bool {
        self.unit_compact && self.compacts_closed && self.sup_of_compacts
    }
}

pub fn spot_check_precoherent(samples: &[UpSet]) -> Result<PrecoherenceSpotCheck> {
    let c = upsets_quantale();
    let unit_compact = c.is_compact(&UpSet::finite(&[0]))?;
    let compact: Vec<&UpSet> = samples.iter().filter(|x| x.is_finite()).collect();
    let compacts_closed = compact
        .iter()
        .all(|a| compact.iter().all(|b| c.mul(a, b).is_finite()));
    let mut sup_of_compacts = true;
    for x in samples {
        let sup = c.sup(&Subset::Family(Family::Truncations(x.clone())))?;
        let approx = c.approx(x, WINDOW);
        sup_of_compacts &= sup.as_ref() == Some(x)
            && c.is_compact(&approx)?
            && approx.members_below(WINDOW) == x.members_below(WINDOW);
    }
    Ok(PrecoherenceSpotCheck {
        samples: samples.len(),
        unit_compact,
        compacts_closed,
        sup_of_compacts,
    })
}
