use magma_core::OrderedMagma;
use nucleus_core::{enumerate_nuclei, MonotoneMap};
use order_core::{ElementId, Error, Result};

use crate::divisorial::v;

/// Simplicity decided three ways.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicityReport {
    pub simple: bool,
    pub nucleus_count: usize,
    /// `v(a) = d` for every `a` below the top.
    pub by_v: bool,
    /// `x/(x/y) = y` below the top; only on near multiplicative lattices.
    pub by_double_residual: Option<bool>,
    /// An `a < ⊤` whose `v(a)` is not `d`.
    pub witness: Option<ElementId>,
}

pub fn simplicity(m: &OrderedMagma) -> Result<SimplicityReport> {
    let prof = m.classify()?;
    if !prof.near_prequantale {
        return Err(Error::hypothesis("simplicity tests need a near prequantale"));
    }
    let nucleus_count = enumerate_nuclei(m)?.len();
    let by_count = nucleus_count <= 2;
    let top = m.top().ok_or_else(|| Error::internal("finite near prequantale without a top"))?;
    let d = MonotoneMap::identity(m.size());
    let mut witness = None;
    for a in m.elements().filter(|&a| a != top) {
        if v(m, a)? != d {
            witness = Some(a);
            break;
        }
    }
    let by_v = witness.is_none();
    let by_double_residual = prof.is_near_multiplicative_lattice().then(|| {
        let below: Vec<ElementId> = m.elements().filter(|&x| x != top).collect();
        below.iter().all(|&x| {
            below.iter().all(|&y| match m.residual_left(x, y) {
                Some(xy) => m.residual_left(x, xy) == Some(y),
                None => false,
            })
        })
    });
    if by_count != by_v || by_double_residual.is_some_and(|b| b != by_count) {
        return Err(Error::internal(format!(
            "simplicity routes disagree: count {by_count}, v {by_v}, residual {by_double_residual:?}"
        )));
    }
    Ok(SimplicityReport { simple: by_count, nucleus_count, by_v, by_double_residual, witness })
}

pub fn is_simple(m: &OrderedMagma) -> Result<bool> {
    Ok(simplicity(m)?.simple)
}
