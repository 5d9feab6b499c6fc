//! Finite carriers: every element is compact, so the interesting statements
//! collapse, but each one is still evaluated rather than assumed.

use magma_core::OrderedMagma;
use nucleus_core::{is_closure, is_nucleus, nuclei_join, quotient, MonotoneMap};
use order_core::{subsets, ElementId, Error, FinitePoset, Result};

/// Outcome of a finitary check on one closure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitaryReport<W> {
    pub is_finitary: bool,
    /// True when every directed family was covered, so the verdict is a proof.
    pub exhaustive: bool,
    /// A directed family on which `(⋁Δ)* = ⋁(Δ*)` fails.
    pub witness: Option<W>,
    pub families_checked: usize,
    pub note: String,
}

/// Carriers up to this size get the directed-subset scan.
const DIRECTED_SCAN_LIMIT: usize = 12;

pub fn is_finitary(p: &FinitePoset, s: &[ElementId]) -> Result<FinitaryReport<Vec<ElementId>>> {
    if !is_closure(p, s) {
        return Err(Error::hypothesis("is_finitary takes a closure operation"));
    }
    let mut checked = 0;
    if p.size() <= DIRECTED_SCAN_LIMIT {
        for d in subsets(p.size()).filter(|d| p.is_directed(d)) {
            checked += 1;
            let top = p.sup(&d).ok_or_else(|| Error::internal("directed set without supremum"))?;
            let imgs: Vec<ElementId> = d.iter().map(|&x| s[x]).collect();
            if p.sup(&imgs) != Some(s[top]) {
                return Ok(FinitaryReport {
                    is_finitary: false,
                    exhaustive: true,
                    witness: Some(d),
                    families_checked: checked,
                    note: "directed family violates (⋁Δ)* = ⋁(Δ*)".into(),
                });
            }
        }
    }
    Ok(FinitaryReport {
        is_finitary: true,
        exhaustive: true,
        witness: None,
        families_checked: checked,
        note: "directed subsets of a finite poset have maxima".into(),
    })
}

/// `x ↦ ⋁{y* : y compact, y ≤ x}`; on a finite carrier this is `⋆` itself.
pub fn star_f(m: &OrderedMagma, s: &MonotoneMap) -> Result<MonotoneMap> {
    if !is_nucleus(m, s.as_slice()) {
        return Err(Error::hypothesis("star_f takes a nucleus"));
    }
    let prof = m.classify()?;
    if !prof.precoherent {
        return Err(Error::hypothesis("star_f needs a precoherent carrier"));
    }
    let p = m.poset();
    let compact = p.compact_elements();
    let mut table = Vec::with_capacity(m.size());
    for x in m.elements() {
        let vals: Vec<ElementId> = compact.iter().filter(|&&y| p.leq(y, x)).map(|&y| s[y]).collect();
        table.push(p.sup(&vals).ok_or_else(|| Error::hypothesis("compact images have no supremum"))?);
    }
    let f = MonotoneMap::from_table(table);
    if f != *s {
        return Err(Error::internal("star_f differs from the nucleus on a finite carrier"));
    }
    Ok(f)
}

/// `K(S)^⋆ ⊆ K(S^⋆)`, and for finitary closures `x* = ⋁{y* : y ∈ K, y ≤ x}`
/// together with `K(S^⋆) ⊆ K(S)^⋆`.
pub fn finite_type_checks(p: &FinitePoset, s: &[ElementId]) -> Result<bool> {
    if !is_closure(p, s) {
        return Err(Error::hypothesis("finite_type_checks takes a closure operation"));
    }
    let image = MonotoneMap::from_table(s.to_vec()).image();
    let sub = p.subposet(&image);
    let k_image: Vec<ElementId> = sub.compact_elements().iter().map(|&i| image[i]).collect();
    let mut k_star: Vec<ElementId> = p.compact_elements().iter().map(|&y| s[y]).collect();
    k_star.sort_unstable();
    k_star.dedup();
    let forward = k_star.iter().all(|y| k_image.contains(y));
    let backward = k_image.iter().all(|y| k_star.contains(y));
    let formula = p.elements().all(|x| {
        let vals: Vec<ElementId> =
            p.compact_elements().into_iter().filter(|&y| p.leq(y, x)).map(|y| s[y]).collect();
        p.sup(&vals) == Some(s[x])
    });
    Ok(forward && backward && formula)
}

/// Compact-set identity after quotienting by `⋆_f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KLatticeVerdict {
    pub holds: bool,
    pub quotient_size: usize,
    pub quotient_precoherent: bool,
    /// Compact elements of `Q^{⋆_f}`, as parent ids.
    pub compacts: Vec<ElementId>,
}

pub fn verify_klattice(m: &OrderedMagma, s: &MonotoneMap) -> Result<KLatticeVerdict> {
    let f = star_f(m, s)?;
    let q = quotient(m, &f)?;
    let qp = q.magma.classify()?;
    let compacts: Vec<ElementId> = q.magma.poset().compact_elements().iter().map(|&i| q.image[i]).collect();
    let mut k_star: Vec<ElementId> = m.poset().compact_elements().iter().map(|&y| f[y]).collect();
    k_star.sort_unstable();
    k_star.dedup();
    Ok(KLatticeVerdict {
        holds: compacts == k_star && qp.precoherent,
        quotient_size: q.magma.size(),
        quotient_precoherent: qp.precoherent,
        compacts,
    })
}

/// Every composite of members of `gamma`, including the identity.
pub fn composition_monoid(n: usize, gamma: &[MonotoneMap]) -> Vec<MonotoneMap> {
    let mut out = vec![MonotoneMap::identity(n)];
    let mut i = 0;
    while i < out.len() {
        for g in gamma {
            let c = g.compose(&out[i]);
            if !out.contains(&c) {
                out.push(c);
            }
        }
        i += 1;
    }
    out
}

/// `x ↦ ⋁{x^γ : γ ∈ ⟨Γ⟩}`, compared with the fixed-point join when that is defined.
pub fn composition_sup_join(m: &OrderedMagma, gamma: &[MonotoneMap]) -> Result<MonotoneMap> {
    for g in gamma {
        if !is_nucleus(m, g.as_slice()) {
            return Err(Error::hypothesis("composition_sup_join takes nuclei"));
        }
    }
    let monoid = composition_monoid(m.size(), gamma);
    let mut table = Vec::with_capacity(m.size());
    for x in m.elements() {
        let vals: Vec<ElementId> = monoid.iter().map(|g| g[x]).collect();
        table.push(m.sup(&vals).ok_or_else(|| Error::hypothesis("missing supremum of composites"))?);
    }
    let out = MonotoneMap::from_table(table);
    if let Ok(j) = nuclei_join(m, gamma) {
        if j != out {
            return Err(Error::internal("composition supremum differs from the fixed-point join"));
        }
    }
    Ok(out)
}
