//! Ideals of a join semilattice, the `↓` operator and the ideal completion.

use magma_core::OrderedMagma;
use nucleus_core::{is_closure, is_nucleus, MonotoneMap};
use order_core::{subsets, ElementId, Error, FinitePoset, Result};

/// Carriers up to this size have their down-sets enumerated outright.
pub const DOWNSET_SCAN_LIMIT: usize = 16;

/// Carriers up to this size get the `2^S − {∅}` scans.
pub const POWERSET_LIMIT: usize = 6;

fn require_join_semilattice(p: &FinitePoset) -> Result<()> {
    if p.is_empty() || !p.flags().join_semilattice {
        return Err(Error::hypothesis("↓ needs a nonempty join semilattice"));
    }
    Ok(())
}

/// Nonempty, downward closed and directed.
pub fn is_ideal(p: &FinitePoset, xs: &[ElementId]) -> bool {
    !xs.is_empty() && p.is_down_closed(xs) && p.is_directed(xs)
}

/// `{y : y ≤ ⋁T, T ⊆ X finite nonempty}`, sorted.  `↓∅` is `{⊥}` when a
/// bottom exists.
pub fn down_closure(p: &FinitePoset, xs: &[ElementId]) -> Result<Vec<ElementId>> {
    require_join_semilattice(p)?;
    p.check_subset(xs)?;
    if xs.is_empty() {
        let bottom = p.bottom().ok_or_else(|| Error::hypothesis("↓∅ needs a least element"))?;
        return Ok(vec![bottom]);
    }
    // finite sets: the join of all of X bounds every finite join
    let mut top = xs[0];
    for &x in &xs[1..] {
        top = p.join(top, x).expect("join semilattice");
    }
    let out = p.down_set(top);
    if xs.len() <= 10 {
        // the definition, over every finite nonempty T ⊆ X
        let mut literal: Vec<ElementId> = subsets(xs.len())
            .filter(|t| !t.is_empty())
            .map(|t| t.iter().map(|&i| xs[i]).collect::<Vec<_>>())
            .flat_map(|t| p.down_set(p.sup(&t).expect("join semilattice")))
            .collect();
        literal.sort_unstable();
        literal.dedup();
        if literal != out || !is_ideal(p, &out) {
            return Err(Error::internal("↓X disagrees with the finite-join description"));
        }
    }
    Ok(out)
}

/// All ideals, sorted by their member lists.
pub fn ideals(p: &FinitePoset) -> Result<Vec<Vec<ElementId>>> {
    require_join_semilattice(p)?;
    let mut principal: Vec<Vec<ElementId>> = p.elements().map(|x| p.down_set(x)).collect();
    principal.sort();
    if p.size() <= DOWNSET_SCAN_LIMIT {
        let mut scanned: Vec<Vec<ElementId>> = subsets(p.size()).filter(|s| is_ideal(p, s)).collect();
        scanned.sort();
        if scanned != principal {
            return Err(Error::internal("ideal scan disagrees with the principal ideals"));
        }
    }
    Ok(principal)
}

/// `Idl(M)` under `↓`-multiplication.
#[derive(Clone, Debug)]
pub struct IdealCompletion {
    pub ideals: Vec<Vec<ElementId>>,
    pub magma: OrderedMagma,
}

impl IdealCompletion {
    pub fn index_of(&self, ideal: &[ElementId]) -> Option<ElementId> {
        self.ideals.iter().position(|i| i == ideal)
    }

    /// The id of `↓x`.
    pub fn principal(&self, p: &FinitePoset, x: ElementId) -> ElementId {
        self.index_of(&p.down_set(x)).expect("principal ideals are ideals")
    }
}

pub fn idl(m: &OrderedMagma) -> Result<IdealCompletion> {
    let prof = m.classify()?;
    if !prof.multiplicative_semilattice {
        return Err(Error::hypothesis("Idl needs a multiplicative semilattice"));
    }
    let p = m.poset();
    let ids = ideals(p)?;
    let labels: Vec<String> = ids
        .iter()
        .map(|i| {
            let top = p.greatest_of(i).expect("finite ideals are principal");
            format!("↓{}", p.label(top))
        })
        .collect();
    let poset = FinitePoset::from_fn(labels, |a, b| ids[a].iter().all(|x| ids[b].contains(x)))?;
    let mut table = Vec::with_capacity(ids.len());
    for a in &ids {
        let mut row = Vec::with_capacity(ids.len());
        for b in &ids {
            let prod = down_closure(p, &m.product_set(a, b))?;
            row.push(ids.iter().position(|i| *i == prod).ok_or_else(|| Error::internal("↓(IJ) is not an ideal"))?);
        }
        table.push(row);
    }
    let magma = OrderedMagma::new(poset, table)?;
    let q = magma.classify()?;
    if !(q.near_prequantale && q.precoherent) {
        return Err(Error::internal("Idl(M) is not a precoherent near prequantale"));
    }
    if prof.prequantic_semilattice && !q.prequantale {
        return Err(Error::internal("Idl of a prequantic semilattice is not a prequantale"));
    }
    Ok(IdealCompletion { ideals: ids, magma })
}

/// `2^S − {∅}` (or `2^S` with `with_empty`) as the power set magma of `m`,
/// with `↓` as a map on it.  Element ids are bit masks, shifted down by one
/// when `∅` is left out.
pub struct DownarrowOnSubsets {
    pub subsets: OrderedMagma,
    pub masks: Vec<u64>,
    pub downarrow: MonotoneMap,
}

pub fn downarrow_on_subsets(m: &OrderedMagma, with_empty: bool) -> Result<DownarrowOnSubsets> {
    let n = m.size();
    if n > POWERSET_LIMIT {
        return Err(Error::TooLarge { size: n, cap: POWERSET_LIMIT });
    }
    let p = m.poset();
    require_join_semilattice(p)?;
    let masks: Vec<u64> = (if with_empty { 0 } else { 1 }..1u64 << n).collect();
    let to_set = |mask: u64| order_core::mask_members(mask);
    let to_mask = |xs: &[ElementId]| xs.iter().fold(0u64, |acc, &x| acc | 1 << x);
    let labels = masks.iter().map(|k| format!("s{k}")).collect();
    let poset = FinitePoset::from_fn(labels, |a, b| masks[a] & !masks[b] == 0)?;
    let pos = |mask: u64| masks.iter().position(|&k| k == mask).expect("mask in range");
    let subsets = OrderedMagma::from_fn(poset, |a, b| pos(to_mask(&m.product_set(&to_set(masks[a]), &to_set(masks[b])))))?;
    let mut table = Vec::with_capacity(masks.len());
    for &k in &masks {
        table.push(pos(to_mask(&down_closure(p, &to_set(k))?)));
    }
    let downarrow = MonotoneMap::from_table(table);
    if !is_closure(subsets.poset(), downarrow.as_slice()) {
        return Err(Error::internal("↓ is not a closure on subsets"));
    }
    let image: Vec<Vec<ElementId>> = downarrow.image().iter().map(|&i| to_set(masks[i])).collect();
    let mut expected = ideals(p)?;
    if with_empty {
        expected.push(down_closure(p, &[])?);
    }
    expected.sort();
    expected.dedup();
    let mut got = image;
    got.sort();
    if got != expected {
        return Err(Error::internal("the image of ↓ is not Idl(S)"));
    }
    let prof = m.classify()?;
    let class_ok = if with_empty { prof.prequantic_semilattice } else { prof.multiplicative_semilattice };
    if class_ok && !is_nucleus(&subsets, downarrow.as_slice()) {
        return Err(Error::internal("↓ is not a nucleus on subsets of a multiplicative semilattice"));
    }
    Ok(DownarrowOnSubsets { subsets, masks, downarrow })
}

/// `↓X·↓Y ⊆ ↓(XY)` for all nonempty `X, Y`.
pub fn downarrow_submultiplicative(m: &OrderedMagma) -> Result<bool> {
    let n = m.size();
    if n > POWERSET_LIMIT {
        return Err(Error::TooLarge { size: n, cap: POWERSET_LIMIT });
    }
    let p = m.poset();
    let all: Vec<Vec<ElementId>> = subsets(n).filter(|s| !s.is_empty()).collect();
    let downs = all.iter().map(|x| down_closure(p, x)).collect::<Result<Vec<_>>>()?;
    for (x, dx) in all.iter().zip(&downs) {
        for (y, dy) in all.iter().zip(&downs) {
            let rhs = down_closure(p, &m.product_set(x, y))?;
            if !m.product_set(dx, dy).iter().all(|z| rhs.contains(z)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
