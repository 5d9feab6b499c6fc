//! Closure operations on finite posets: predicates, construction from an
//! image set or a preclosure, and exhaustive enumeration.

use order_core::{ElementId, Error, FinitePoset, Result, ENUMERATION_CAP};

use crate::map::MonotoneMap;

/// Upper limit on the number of closures an enumeration may return.
pub const MAX_ENUMERATED: usize = 2_000_000;

pub fn is_expansive(p: &FinitePoset, f: &[ElementId]) -> bool {
    p.elements().all(|x| p.leq(x, f[x]))
}

pub fn is_idempotent(f: &[ElementId]) -> bool {
    f.iter().all(|&y| f[y] == y)
}

/// Expansive and order-preserving.
pub fn is_preclosure(p: &FinitePoset, f: &[ElementId]) -> bool {
    is_expansive(p, f) && p.is_order_preserving(f)
}

/// Expansive, order-preserving and idempotent.
pub fn is_closure_axioms(p: &FinitePoset, f: &[ElementId]) -> bool {
    is_preclosure(p, f) && is_idempotent(f)
}

/// The single-axiom form: `x ≤ y* ⇔ x* ≤ y*` for all `x, y`.
pub fn is_closure_single_axiom(p: &FinitePoset, f: &[ElementId]) -> bool {
    p.elements()
        .all(|x| p.elements().all(|y| p.leq(x, f[y]) == p.leq(f[x], f[y])))
}

/// Closure test; the two characterizations are compared in debug builds.
pub fn is_closure(p: &FinitePoset, f: &[ElementId]) -> bool {
    let v = is_closure_axioms(p, f);
    debug_assert_eq!(
        v,
        is_closure_single_axiom(p, f),
        "closure characterizations disagree"
    );
    v
}

/// `x ↦ ⋀{a ∈ C : a ≥ x}`, when every such infimum exists (as a minimum of
/// `C ∩ ↑x`, which is what the infimum must be for a closure image).
pub fn closure_from_image(p: &FinitePoset, image: &[ElementId]) -> Option<MonotoneMap> {
    let mut table = Vec::with_capacity(p.size());
    for x in p.elements() {
        let above: Vec<ElementId> = image.iter().copied().filter(|&a| p.leq(x, a)).collect();
        let lo = p.inf(&above)?;
        if !image.contains(&lo) {
            return None;
        }
        table.push(lo);
    }
    Some(MonotoneMap::from_table(table))
}

/// The finest closure coarser than a preclosure: iterate to the fixpoint,
/// and cross-check against `x ↦ ⋀{y ∈ Fix(+) : y ≥ x}`.
pub fn closure_from_preclosure(p: &FinitePoset, f: &[ElementId]) -> Result<MonotoneMap> {
    if f.len() != p.size() {
        return Err(Error::malformed("map size does not match carrier"));
    }
    if !is_preclosure(p, f) {
        return Err(Error::hypothesis(
            "map is not a preclosure (expansive and order-preserving)",
        ));
    }
    let plus = MonotoneMap::from_table(f.to_vec());
    let mut cur = plus.clone();
    let mut steps = 0;
    loop {
        let next = plus.compose(&cur);
        if next == cur {
            break;
        }
        cur = next;
        steps += 1;
        if steps > p.size() + 1 {
            return Err(Error::BudgetExceeded(steps));
        }
    }
    let fix: Vec<ElementId> = p.elements().filter(|&y| f[y] == y).collect();
    for x in p.elements() {
        let above: Vec<ElementId> = fix.iter().copied().filter(|&y| p.leq(x, y)).collect();
        if p.inf(&above) != Some(cur[x]) {
            return Err(Error::internal(format!(
                "preclosure iteration disagrees with the fixed-point infimum at {}",
                p.label(x)
            )));
        }
    }
    Ok(cur)
}

/// Every closure operation on `p`, sorted by table.
///
/// Elements are decided from the top of a linear extension down.  An element
/// may always join the image; it may stay out only if the image elements
/// above it have a least member, which then becomes its closure.  Every
/// branch therefore ends in a valid closure.
pub fn enumerate_closures(p: &FinitePoset) -> Result<Vec<MonotoneMap>> {
    let n = p.size();
    if n > ENUMERATION_CAP {
        return Err(Error::TooLarge {
            size: n,
            cap: ENUMERATION_CAP,
        });
    }
    let mut order = p.linear_extension();
    order.reverse();
    let strictly_above: Vec<Vec<ElementId>> = p
        .elements()
        .map(|x| p.elements().filter(|&y| p.lt(x, y)).collect())
        .collect();
    let mut img = vec![usize::MAX; n];
    let mut out = Vec::new();
    fill(p, &order, &strictly_above, 0, &mut img, &mut out)?;
    out.sort();
    Ok(out)
}

fn fill(
    p: &FinitePoset,
    order: &[ElementId],
    above: &[Vec<ElementId>],
    depth: usize,
    img: &mut Vec<ElementId>,
    out: &mut Vec<MonotoneMap>,
) -> Result<()> {
    if depth == order.len() {
        if out.len() >= MAX_ENUMERATED {
            return Err(Error::TooLarge {
                size: out.len(),
                cap: MAX_ENUMERATED,
            });
        }
        out.push(MonotoneMap::from_table(img.clone()));
        return Ok(());
    }
    let x = order[depth];
    img[x] = x;
    fill(p, order, above, depth + 1, img, out)?;
    let members: Vec<ElementId> = above[x].iter().copied().filter(|&y| img[y] == y).collect();
    if let Some(lo) = p.least_of(&members) {
        img[x] = lo;
        fill(p, order, above, depth + 1, img, out)?;
    }
    img[x] = usize::MAX;
    Ok(())
}

/// Oracle: filter all `n^n` self-maps.  Only for tiny carriers.
pub fn enumerate_closures_naive(p: &FinitePoset) -> Result<Vec<MonotoneMap>> {
    let n = p.size();
    if n > 7 {
        return Err(Error::TooLarge { size: n, cap: 7 });
    }
    let total = n.pow(n as u32);
    let mut out = Vec::new();
    let mut f = vec![0; n];
    for code in 0..total {
        let mut c = code;
        for slot in f.iter_mut() {
            *slot = c % n;
            c /= n;
        }
        if is_closure(p, &f) {
            out.push(MonotoneMap::from_table(f.clone()));
        }
    }
    out.sort();
    Ok(out)
}
