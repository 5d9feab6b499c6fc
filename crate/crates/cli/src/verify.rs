//! `verify-all`: every applicable invariant suite against one structure, and
//! the explicit round-trip bijections.

use std::fmt::Write;

use divisorial_stable::{divisorial_decomposition, simplicity, stability, stable_hypotheses, v_strategies};
use finitary::{finite_type_checks, is_finitary, star_f, verify_klattice};
use idl_rep::{idl, is_isomorphism, k_functor};
use magma_core::OrderedMagma;
use nucleus_core::galois::galois_laws_hold;
use nucleus_core::{
    enumerate_closures, enumerate_nuclei, nuclei_join, nuclei_meet, nucleus_report, nucleus_tower, quotient,
    MonotoneMap, NucleusLattice,
};
use order_core::{ElementId, Error, Result};
use serde_json::json;

use crate::doc::StructureDoc;
use crate::Report;

/// Verdict of one suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail(String),
    /// The structure does not meet the suite's hypotheses.
    NotApplicable(String),
    /// Beyond the enumeration caps.
    Skipped(String),
}

impl Status {
    pub fn word(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail(_) => "FAIL",
            Status::NotApplicable(_) => "n/a",
            Status::Skipped(_) => "skipped",
        }
    }

    pub fn reason(&self) -> Option<&str> {
        match self {
            Status::Pass => None,
            Status::Fail(r) | Status::NotApplicable(r) | Status::Skipped(r) => Some(r),
        }
    }

    fn from_result(r: Result<std::result::Result<(), String>>) -> Self {
        match r {
            Ok(Ok(())) => Status::Pass,
            Ok(Err(why)) => Status::Fail(why),
            Err(Error::HypothesisNotMet(why)) => Status::NotApplicable(why),
            Err(e @ Error::TooLarge { .. }) => Status::Skipped(e.to_string()),
            Err(e) => Status::Fail(e.to_string()),
        }
    }
}

fn check(ok: bool, why: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(why())
    }
}

type Suite = fn(&OrderedMagma) -> Result<std::result::Result<(), String>>;

fn implications(m: &OrderedMagma) -> Result<std::result::Result<(), String>> {
    let v = m.classify()?.implication_violations();
    Ok(check(v.is_empty(), || format!("violated arrows: {v:?}")))
}

/// On closures: nucleus ⇔ closed products ⇔ one-sided inequalities, plus the
/// associativity and unital forms where they apply.
fn closure_characterizations(m: &OrderedMagma) -> Result<std::result::Result<(), String>> {
    for c in enumerate_closures(m.poset())? {
        let r = nucleus_report(m, c.as_slice())?;
        let mut forms = vec![r.nucleus, r.closed_products, r.one_sided];
        forms.extend(r.star_associative);
        forms.extend(r.residual_form);
        forms.extend(r.expansive_transfer);
        if forms.iter().any(|&b| b != r.nucleus) {
            return Ok(Err(format!("characterizations disagree on {c}: {r:?}")));
        }
    }
    Ok(Ok(()))
}

fn nucleus_lattice(m: &OrderedMagma) -> Result<std::result::Result<(), String>> {
    let lat = NucleusLattice::new(m)?;
    let p = lat.magma.poset();
    for a in 0..lat.size() {
        for b in 0..lat.size() {
            let pair = [lat.nuclei[a].clone(), lat.nuclei[b].clone()];
            let meet = lat.index_of(&nuclei_meet(m, &pair)?);
            let join = lat.index_of(&nuclei_join(m, &pair)?);
            if meet != p.meet(a, b) || join != p.join(a, b) {
                return Ok(Err(format!("meet or join of {} and {} is off", p.label(a), p.label(b))));
            }
            let mut common = lat.nuclei[a].fixed_points();
            common.retain(|x| lat.nuclei[b].fixed_points().contains(x));
            if lat.nuclei[join.expect("checked")].fixed_points() != common {
                return Ok(Err("fixed points of a join are not the common fixed points".into()));
            }
        }
    }
    Ok(Ok(()))
}

fn galois(m: &OrderedMagma) -> Result<std::result::Result<(), String>> {
    let all = enumerate_nuclei(m)?;
    Ok(check(galois_laws_hold(m, &all)?, || "Galois laws fail".into()))
}

fn quotients(m: &OrderedMagma) -> Result<std::result::Result<(), String>> {
    for s in enumerate_nuclei(m)? {
        quotient(m, &s)?;
    }
    Ok(Ok(()))
}

fn finitary_companion(m: &OrderedMagma) -> Result<std::result::Result<(), String>> {
    for s in enumerate_nuclei(m)? {
        if !is_finitary(m.poset(), s.as_slice())?.is_finitary || !finite_type_checks(m.poset(), s.as_slice())? {
            return Ok(Err(format!("{s} fails a finite-type check")));
        }
        if star_f(m, &s)? != s || !verify_klattice(m, &s)?.holds {
            return Ok(Err(format!("star_f or the K-identity fails for {s}")));
        }
    }
    Ok(Ok(()))
}

fn v_agreement(m: &OrderedMagma) -> Result<std::result::Result<(), String>> {
    let mut applicable = false;
    for a in m.elements() {
        let all = v_strategies(m, a)?;
        applicable |= !all.is_empty();
        if all.windows(2).any(|w| w[0].1 != w[1].1) {
            return Ok(Err(format!("v({}) strategies disagree", m.label(a))));
        }
    }
    if !applicable {
        return Err(Error::hypothesis("no v(a) strategy applies"));
    }
    Ok(Ok(()))
}

fn divisorial(m: &OrderedMagma) -> Result<std::result::Result<(), String>> {
    for s in enumerate_nuclei(m)? {
        divisorial_decomposition(m, &s)?;
    }
    Ok(Ok(()))
}

fn simplicity_routes(m: &OrderedMagma) -> Result<std::result::Result<(), String>> {
    simplicity(m)?;
    Ok(Ok(()))
}

fn stable_nuclei(m: &OrderedMagma) -> Result<std::result::Result<(), String>> {
    stable_hypotheses(m)?;
    let mut stable = Vec::new();
    for s in enumerate_nuclei(m)? {
        if stability(m, &s)?.stable {
            stable.push(s);
        }
    }
    for a in &stable {
        for b in &stable {
            let meet = nuclei_meet(m, &[a.clone(), b.clone()])?;
            if !stability(m, &meet)?.stable {
                return Ok(Err(format!("the meet of {a} and {b} is not stable")));
            }
        }
    }
    Ok(Ok(()))
}

fn representation(m: &OrderedMagma) -> Result<std::result::Result<(), String>> {
    let w = roundtrip_witnesses(m)?;
    let ok = [&w.semilattice, &w.quantale].iter().all(|s| s.as_ref().is_none_or(|(_, iso)| *iso));
    Ok(check(ok, || "a round trip is not an isomorphism".into()))
}

fn tower(m: &OrderedMagma) -> Result<std::result::Result<(), String>> {
    let t = nucleus_tower(m, 2)?;
    for lat in &t.levels {
        let n = &lat.magma;
        let join_is_mul = n.elements().all(|a| n.elements().all(|b| n.poset().join(a, b) == Some(n.mul(a, b))));
        if !join_is_mul || n.r_set()?.len() != n.size() {
            return Ok(Err("a tower level is not R(N) under join".into()));
        }
    }
    Ok(check(t.simple == (t.stabilizes_at() == Some(1)), || {
        "simplicity and stabilization at level 1 disagree".into()
    }))
}

/// Suite keys in the order they are run and printed.
pub const SUITES: &[(&str, Suite)] = &[
    ("classification-implications", implications),
    ("closure-nucleus-characterizations", closure_characterizations),
    ("nucleus-lattice-meets-joins", nucleus_lattice),
    ("galois-connection-laws", galois),
    ("nucleus-quotients", quotients),
    ("finitary-companion-and-k-identity", finitary_companion),
    ("divisorial-strategies-agree", v_agreement),
    ("divisorial-decomposition", divisorial),
    ("simplicity-routes", simplicity_routes),
    ("stability-conditions", stable_nuclei),
    ("ideal-completion-round-trips", representation),
    ("nucleus-tower-depth-2", tower),
];

pub fn verify_all(m: &OrderedMagma) -> Vec<(&'static str, Status)> {
    SUITES.iter().map(|&(k, f)| (k, Status::from_result(f(m)))).collect()
}

/// The matrix as a report, and whether any suite failed.
pub fn verify_all_report(d: &StructureDoc) -> Result<(Report, bool)> {
    let m = d.finite_magma()?;
    let rows = verify_all(&m);
    let mut text = format!("verify-all on {}\n", d.name().unwrap_or("structure"));
    let mut obj = serde_json::Map::new();
    for (k, s) in &rows {
        let _ = write!(text, "  {k:<36} {}", s.word());
        if let Some(r) = s.reason() {
            let _ = write!(text, "  ({r})");
        }
        text.push('\n');
        obj.insert(k.to_string(), json!({ "status": s.word(), "reason": s.reason() }));
    }
    let failed = rows.iter().any(|(_, s)| matches!(s, Status::Fail(_)));
    Ok((Report::new(text, json!({ "name": d.name(), "suites": obj, "failed": failed })), failed))
}

/// Both round-trip maps as label pairs, each with its isomorphism verdict;
/// `None` where the hypotheses do not hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RoundTripWitnesses {
    /// `x ↦ ↓x` from `M` to `K(Idl(M))`.
    pub semilattice: Option<(Vec<(String, String)>, bool)>,
    /// `I ↦ ⋁I` from `Idl(K(Q))` to `Q`.
    pub quantale: Option<(Vec<(String, String)>, bool)>,
}

fn pairs(a: &OrderedMagma, b: &OrderedMagma, f: &[ElementId]) -> Vec<(String, String)> {
    a.elements().map(|x| (a.label(x).to_string(), b.label(f[x]).to_string())).collect()
}

pub fn roundtrip_witnesses(m: &OrderedMagma) -> Result<RoundTripWitnesses> {
    let prof = m.classify()?;
    let semilattice = if prof.multiplicative_semilattice {
        let c = idl(m)?;
        let k = k_functor(&c.magma)?;
        let f: Vec<ElementId> = m
            .elements()
            .map(|x| {
                let id = c.principal(m.poset(), x);
                k.elements.iter().position(|&e| e == id).ok_or_else(|| Error::internal("↓x is not compact"))
            })
            .collect::<Result<_>>()?;
        Some((pairs(m, &k.magma, &f), is_isomorphism(m, &k.magma, &f)))
    } else {
        None
    };
    let quantale = if prof.near_prequantale && prof.precoherent {
        let k = k_functor(m)?;
        let c = idl(&k.magma)?;
        let f: Vec<ElementId> = c
            .ideals
            .iter()
            .map(|i| {
                let parent: Vec<ElementId> = i.iter().map(|&x| k.elements[x]).collect();
                m.sup(&parent).ok_or_else(|| Error::internal("an ideal of K(Q) has no supremum"))
            })
            .collect::<Result<_>>()?;
        Some((pairs(&c.magma, m, &f), is_isomorphism(&c.magma, m, &f)))
    } else {
        None
    };
    if semilattice.is_none() && quantale.is_none() {
        return Err(Error::hypothesis(
            "round trips need a multiplicative semilattice or a precoherent near prequantale",
        ));
    }
    Ok(RoundTripWitnesses { semilattice, quantale })
}

/// Used by tests that want a map document for a nucleus.
pub fn map_doc(m: &OrderedMagma, s: &MonotoneMap, name: Option<&str>) -> StructureDoc {
    StructureDoc::new(crate::doc::Body::Map(crate::doc::MapDoc {
        magma: crate::doc::MagmaDoc::from_magma(m, name),
        assign: s.as_slice().to_vec(),
    }))
}
