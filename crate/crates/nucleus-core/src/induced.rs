//! Extending a nucleus on a submagma to the whole carrier, finest and coarsest.

use magma_core::OrderedMagma;
use order_core::{ElementId, Error, Result};

use crate::map::MonotoneMap;
use crate::nucleus::is_nucleus;

/// `xy ∈ X` with `x, y` not annihilators forces `x, y ∈ X`.
pub fn is_saturated(m: &OrderedMagma, xs: &[ElementId]) -> bool {
    let zero = m.annihilator();
    m.elements().all(|x| {
        m.elements().all(|y| {
            Some(x) == zero
                || Some(y) == zero
                || !xs.contains(&m.mul(x, y))
                || (xs.contains(&x) && xs.contains(&y))
        })
    })
}

/// Checks that `s` (given on all of `n`, as parent ids) is a nucleus of the submagma.
fn check_sub_nucleus(m: &OrderedMagma, n: &[ElementId], s: &[ElementId]) -> Result<()> {
    m.poset().check_subset(n)?;
    if s.len() != n.len() {
        return Err(Error::malformed(
            "the nucleus on N needs one value per element of N",
        ));
    }
    let sub = m.submagma(n)?;
    let local: Option<Vec<ElementId>> = s.iter().map(|v| n.iter().position(|w| w == v)).collect();
    let local = local.ok_or_else(|| Error::malformed("the nucleus on N leaves N"))?;
    if !is_nucleus(&sub, &local) {
        return Err(Error::hypothesis("the given map is not a nucleus on N"));
    }
    Ok(())
}

fn check_restriction(out: &MonotoneMap, n: &[ElementId], s: &[ElementId]) -> Result<()> {
    if n.iter().zip(s).any(|(&x, &v)| out[x] != v) {
        return Err(Error::internal(
            "induced nucleus does not restrict to the given one",
        ));
    }
    Ok(())
}

/// Finest nucleus restricting to `s` on a sup-spanning submagma `n`:
/// `x ↦ ⋀{y ≥ x : z ≤ y ⇒ z* ≤ y for all z ∈ N}`.
pub fn induced_lower(m: &OrderedMagma, n: &[ElementId], s: &[ElementId]) -> Result<MonotoneMap> {
    check_sub_nucleus(m, n, s)?;
    if !m.classify()?.near_prequantale {
        return Err(Error::hypothesis("induced_lower needs a near prequantale"));
    }
    if !m.is_sup_spanning(n)? {
        return Err(Error::hypothesis("N is not sup-spanning"));
    }
    let good: Vec<ElementId> = m
        .elements()
        .filter(|&y| {
            n.iter()
                .zip(s)
                .all(|(&z, &zs)| !m.leq(z, y) || m.leq(zs, y))
        })
        .collect();
    let mut table = Vec::with_capacity(m.size());
    for x in m.elements() {
        let above: Vec<ElementId> = good.iter().copied().filter(|&y| m.leq(x, y)).collect();
        table.push(
            m.inf(&above)
                .ok_or_else(|| Error::internal("missing infimum in a near prequantale"))?,
        );
    }
    let out = MonotoneMap::from_table(table);
    if !is_nucleus(m, out.as_slice()) {
        return Err(Error::internal("induced_lower produced a non-nucleus"));
    }
    check_restriction(&out, n, s)?;
    Ok(out)
}

/// Coarsest nucleus restricting to `s` on a saturated down-closed `n`:
/// `s` on `N`, the top elsewhere.
pub fn induced_upper(m: &OrderedMagma, n: &[ElementId], s: &[ElementId]) -> Result<MonotoneMap> {
    check_sub_nucleus(m, n, s)?;
    if !m.poset().is_down_closed(n) {
        return Err(Error::hypothesis("N is not downward closed"));
    }
    if !is_saturated(m, n) {
        return Err(Error::hypothesis("N is not saturated"));
    }
    let top = m
        .top()
        .ok_or_else(|| Error::hypothesis("induced_upper needs a largest element"))?;
    let table: Vec<ElementId> = m
        .elements()
        .map(|x| match n.iter().position(|&z| z == x) {
            Some(i) => s[i],
            None => top,
        })
        .collect();
    let out = MonotoneMap::from_table(table);
    if !is_nucleus(m, out.as_slice()) {
        return Err(Error::internal("induced_upper produced a non-nucleus"));
    }
    check_restriction(&out, n, s)?;
    Ok(out)
}
