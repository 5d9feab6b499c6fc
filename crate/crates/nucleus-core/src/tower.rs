use magma_core::OrderedMagma;
use order_core::{Error, Result, ENUMERATION_CAP};

use crate::closure::enumerate_closures;
use crate::enumerate::enumerate_nuclei;
use crate::galois::d_map;
use crate::lattice::NucleusLattice;

/// `N(M), N(N(M)), …` up to the requested depth.
#[derive(Clone, Debug)]
pub struct NucleusTower {
    pub levels: Vec<NucleusLattice>,
    /// Entry `i` compares level `i+1` with level `i+2`: whether `d_-` between them is onto.
    pub d_iso: Vec<bool>,
    /// `|N(M)| ≤ 2`.
    pub simple: bool,
}

impl NucleusTower {
    pub fn sizes(&self) -> Vec<usize> {
        self.levels.iter().map(NucleusLattice::size).collect()
    }

    /// First level `n ≥ 1` with `N^n ≅ N^{n+1}` via `d_-`, if seen.
    pub fn stabilizes_at(&self) -> Option<usize> {
        self.d_iso.iter().position(|&b| b).map(|i| i + 1)
    }
}

pub fn nucleus_tower(m: &OrderedMagma, depth: usize) -> Result<NucleusTower> {
    if depth == 0 {
        return Err(Error::malformed("tower depth must be at least 1"));
    }
    if !m.poset().flags().near_sup_complete {
        return Err(Error::hypothesis(
            "the nucleus tower needs a near sup-magma",
        ));
    }
    let mut levels: Vec<NucleusLattice> = Vec::new();
    let mut d_iso = Vec::new();
    let mut current = m.clone();
    for level in 1..=depth {
        let lat = NucleusLattice::new(&current)?;
        if lat.size() > ENUMERATION_CAP {
            return Err(Error::TooLarge {
                size: lat.size(),
                cap: ENUMERATION_CAP,
            });
        }
        let nm = &lat.magma;
        // on N^n every closure is a nucleus
        let closures = enumerate_closures(nm.poset())?.len();
        let nuclei = enumerate_nuclei(nm)?.len();
        if closures != nuclei {
            return Err(Error::internal(format!(
                "level {level}: {nuclei} nuclei but {closures} closures"
            )));
        }
        if let Some(prev) = levels.last() {
            // d_a = a ∨ - embeds the previous level; it is onto iff the sizes match
            for a in prev.magma.elements() {
                let da = d_map(&prev.magma, a)?;
                if lat.index_of(&da).is_none() {
                    return Err(Error::internal("d_a is missing from the next level"));
                }
            }
            d_iso.push(prev.size() == lat.size());
        }
        current = lat.magma.clone();
        levels.push(lat);
    }
    let simple = levels[0].size() <= 2;
    if depth >= 2 && m.classify()?.near_prequantale && simple != d_iso[0] {
        return Err(Error::internal(
            "simplicity disagrees with tower stabilization",
        ));
    }
    Ok(NucleusTower {
        levels,
        d_iso,
        simple,
    })
}
