//! The analysis subcommands.

use std::fmt::Write;

use divisorial_stable::{
    simplicity, stability, stable_closure, v_double_residual, v_lin, v_sandwich, v_strategies, v_via_units,
};
use finitary::{
    check_star_f, is_finitary_lazy, star_f as finite_star_f, verify_klattice, ChainClosure, FiniteOrFull, LazyMagma,
    LazyNucleus, Saturation,
};
use magma_core::OrderedMagma;
use nucleus_core::{is_strict, nucleus_tower, MonotoneMap, NucleusLattice};
use order_core::{ChainOmega, EffectivePoset, Error, Result, UpSet, UpSetsCarrier};
use serde_json::{json, Value};

use crate::doc::{Body, LazyCarrier, StructureDoc};
use crate::resolve::{self, StrategyArg};
use crate::verify::roundtrip_witnesses;
use crate::{Inputs, Report};

fn title(d: &StructureDoc) -> String {
    d.name().unwrap_or("structure").to_string()
}

fn labels(m: &OrderedMagma, xs: &[usize]) -> Vec<String> {
    xs.iter().map(|&x| m.label(x).to_string()).collect()
}

fn set(m: &OrderedMagma, xs: &[usize]) -> String {
    format!("{{{}}}", labels(m, xs).join(", "))
}

pub fn classify(d: &StructureDoc, dot: bool) -> Result<Report> {
    if let Body::Lazy(l) = &d.body {
        let flags = match l.carrier {
            LazyCarrier::ChainOmega => ChainOmega.flags(),
            LazyCarrier::UpsetsNat => UpSetsCarrier.flags(),
        };
        let mut text = format!("{} (lazy carrier; flags are declared, not computed)\n", l.carrier.name());
        let mut obj = serde_json::Map::new();
        for (k, v) in flags.entries() {
            let _ = writeln!(text, "  {k:<28} {v}");
            obj.insert(k.to_string(), json!(v));
        }
        return Ok(Report::new(text, json!({"carrier": l.carrier.name(), "declared": obj})));
    }
    let m = d.finite_magma()?;
    if dot {
        let dot = m.poset().to_dot("carrier");
        return Ok(Report::new(dot.clone(), json!({ "dot": dot })));
    }
    let prof = m.classify()?;
    let mut text = format!("{} ({} elements)\n", title(d), m.size());
    let mut flags = serde_json::Map::new();
    for (k, v) in prof.entries() {
        let _ = writeln!(text, "  {k:<28} {v}");
        flags.insert(k.to_string(), json!(v));
    }
    let position = prof.diagram_position();
    let violations: Vec<String> = prof.implication_violations().iter().map(|(a, b)| format!("{a} => {b}")).collect();
    let _ = writeln!(text, "diagram position: {}", position.join(" "));
    let _ = writeln!(text, "multiplicative lattice: {}", prof.is_multiplicative_lattice());
    if !violations.is_empty() {
        let _ = writeln!(text, "implication violations: {}", violations.join(", "));
    }
    Ok(Report::new(
        text,
        json!({
            "name": d.name(),
            "size": m.size(),
            "profile": flags,
            "diagram_position": position,
            "multiplicative_lattice": prof.is_multiplicative_lattice(),
            "implication_violations": violations,
        }),
    ))
}

fn nucleus_json(m: &OrderedMagma, name: &str, s: &MonotoneMap) -> Value {
    json!({
        "name": name,
        "assign": s.as_slice(),
        "moves": s.describe(m.poset()),
        "image": labels(m, &s.image()),
        "strict": is_strict(m, s.as_slice()),
    })
}

pub fn nuclei(d: &StructureDoc) -> Result<Report> {
    let m = d.finite_magma()?;
    let all = resolve::named_nuclei(&m)?;
    let mut text = format!("{}: {} nuclei\n", title(d), all.len());
    let mut rows = Vec::new();
    for (name, s) in &all {
        let _ = writeln!(
            text,
            "  {name:<4} {s}  image {}  strict {}  [{}]",
            set(&m, &s.image()),
            is_strict(&m, s.as_slice()),
            s.describe(m.poset())
        );
        rows.push(nucleus_json(&m, name, s));
    }
    Ok(Report::new(text, json!({ "name": d.name(), "count": all.len(), "nuclei": rows })))
}

pub fn nucleus_lattice(d: &StructureDoc, dot: bool) -> Result<Report> {
    let m = d.finite_magma()?;
    let lat = NucleusLattice::new(&m)?;
    let dot_text = lat.to_dot();
    if dot {
        return Ok(Report::new(dot_text.clone(), json!({ "dot": dot_text })));
    }
    let p = lat.magma.poset();
    let covers: Vec<[String; 2]> =
        p.covers().iter().map(|&(a, b)| [p.label(a).to_string(), p.label(b).to_string()]).collect();
    let mut text = format!("N({}): {} nuclei\n", title(d), lat.size());
    for (a, b) in &covers.iter().map(|[a, b]| (a, b)).collect::<Vec<_>>() {
        let _ = writeln!(text, "  {a} < {b}");
    }
    Ok(Report::new(
        text,
        json!({
            "size": lat.size(),
            "nuclei": p.labels(),
            "covers": covers,
            "magma": serde_json::to_value(StructureDoc::magma(&lat.magma, Some("N(M)"))).expect("serializes"),
        }),
    ))
}

fn chain_nucleus(word: &str) -> Result<ChainClosure> {
    Ok(match word {
        "d" => ChainClosure::identity(),
        "e" => ChainClosure::top(),
        "evens" => ChainClosure { image: UpSet::progression(0, 2) },
        _ => return Err(Error::malformed(format!("chain-omega nuclei are d, e and evens, not `{word}`"))),
    })
}

enum UpsetRule {
    Saturation(Saturation),
    FiniteOrFull,
}

fn upset_nucleus(word: &str) -> Result<UpsetRule> {
    if let Some(gens) = word.strip_prefix("numerical:") {
        let gens = gens
            .split(',')
            .map(|g| g.trim().parse::<u64>().map_err(|_| Error::malformed(format!("bad generator `{g}`"))))
            .collect::<Result<Vec<_>>>()?;
        return Ok(UpsetRule::Saturation(Saturation::numerical(&gens)));
    }
    Ok(match word {
        "ideal" => UpsetRule::Saturation(Saturation::ideal_generation()),
        "finite-or-full" => UpsetRule::FiniteOrFull,
        _ => {
            return Err(Error::malformed(format!(
                "upsets-nat nuclei are ideal, numerical:<gens> and finite-or-full, not `{word}`"
            )))
        }
    })
}

fn lazy_row<C: LazyMagma, N: LazyNucleus<C>>(c: &C, s: &N, samples: usize) -> Result<(String, Value)>
where
    C::Elem: std::fmt::Display,
{
    let xs = c.samples(samples);
    let sum = check_star_f(c, s, &xs)?;
    let fin = is_finitary_lazy(c, s, &xs)?;
    let text = format!(
        "  {}: evaluated {}, below star {}, agrees on compacts {}, idempotent {}, multiplicative {}, finitary {} ({})\n",
        s.name(),
        sum.evaluated,
        sum.below_star,
        sum.agrees_on_compacts,
        sum.idempotent,
        sum.multiplicative,
        fin.is_finitary,
        fin.note
    );
    let json = json!({
        "nucleus": s.name(),
        "evaluated": sum.evaluated,
        "below_star": sum.below_star,
        "agrees_on_compacts": sum.agrees_on_compacts,
        "idempotent": sum.idempotent,
        "multiplicative": sum.multiplicative,
        "finitary": fin.is_finitary,
        "exhaustive": fin.exhaustive,
    });
    Ok((text, json))
}

fn star_f_lazy_report(carrier: LazyCarrier, nucleus: Option<&str>, samples: usize) -> Result<Report> {
    let mut text = format!("{}: star_f on {samples} describable elements\n", carrier.name());
    let mut rows = Vec::new();
    let mut push = |(t, j): (String, Value)| {
        text.push_str(&t);
        rows.push(j);
    };
    match carrier {
        LazyCarrier::ChainOmega => {
            let words: Vec<&str> = nucleus.map_or(vec!["d", "e", "evens"], |w| vec![w]);
            for w in words {
                push(lazy_row(&ChainOmega, &chain_nucleus(w)?, samples)?);
            }
        }
        LazyCarrier::UpsetsNat => {
            let words: Vec<&str> = nucleus.map_or(vec!["ideal", "numerical:2,3", "finite-or-full"], |w| vec![w]);
            for w in words {
                push(match upset_nucleus(w)? {
                    UpsetRule::Saturation(s) => lazy_row(&UpSetsCarrier, &s, samples)?,
                    UpsetRule::FiniteOrFull => lazy_row(&UpSetsCarrier, &FiniteOrFull, samples)?,
                });
            }
        }
    }
    Ok(Report::new(text, json!({ "carrier": carrier.name(), "samples": samples, "nuclei": rows })))
}

pub fn star_f(args: &[String], carrier: Option<LazyCarrier>, samples: usize, inputs: &mut Inputs<'_>) -> Result<Report> {
    if let Some(c) = carrier {
        if args.len() > 1 {
            return Err(Error::malformed("with --carrier, star-f takes at most a nucleus name"));
        }
        return star_f_lazy_report(c, args.first().map(String::as_str), samples);
    }
    let Some(first) = args.first() else {
        return Err(Error::malformed("star-f needs a magma document or --carrier"));
    };
    let d = inputs.doc(first)?;
    if let Body::Lazy(l) = &d.body {
        return star_f_lazy_report(l.carrier, args.get(1).map(String::as_str), samples);
    }
    let m = d.finite_magma()?;
    let chosen: Vec<(String, MonotoneMap)> = match args.get(1) {
        Some(w) => vec![(w.clone(), resolve::nucleus(&m, w, inputs)?)],
        None => resolve::named_nuclei(&m)?,
    };
    let mut text = format!("{}: star_f\n", title(&d));
    let mut rows = Vec::new();
    for (name, s) in &chosen {
        let f = finite_star_f(&m, s)?;
        let k = verify_klattice(&m, s)?;
        let _ = writeln!(
            text,
            "  {name}: star_f {f}  equals star {}  K-identity {}  quotient size {}  compacts {}",
            f == *s,
            k.holds,
            k.quotient_size,
            set(&m, &k.compacts)
        );
        rows.push(json!({
            "nucleus": name,
            "star_f": f.as_slice(),
            "equals_star": f == *s,
            "k_identity": k.holds,
            "quotient_size": k.quotient_size,
            "quotient_precoherent": k.quotient_precoherent,
            "compacts": labels(&m, &k.compacts),
        }));
    }
    Ok(Report::new(text, json!({ "name": d.name(), "nuclei": rows })))
}

pub fn stable(d: &StructureDoc, word: &str, inputs: &mut Inputs<'_>) -> Result<Report> {
    let m = d.finite_magma()?;
    let s = resolve::nucleus(&m, word, inputs)?;
    let r = stability(&m, &s)?;
    let bar = stable_closure(&m, &s)?;
    let text = format!(
        "{word} on {}: stable {}\n  by definition {}\n  meet with one and residuals {}\n  residual meet one {}\n  equals its stable closure {}\n  stable closure {bar}  [{}]\n",
        title(d),
        r.stable,
        r.by_definition,
        r.meet_one_and_residuals,
        r.residual_meet_one,
        r.equals_closure,
        bar.describe(m.poset())
    );
    Ok(Report::new(
        text,
        json!({
            "nucleus": s.as_slice(),
            "stable": r.stable,
            "by_definition": r.by_definition,
            "meet_one_and_residuals": r.meet_one_and_residuals,
            "residual_meet_one": r.residual_meet_one,
            "equals_closure": r.equals_closure,
            "stable_closure": bar.as_slice(),
        }),
    ))
}

pub fn v(d: &StructureDoc, word: &str, strategy: StrategyArg) -> Result<Report> {
    let m = d.finite_magma()?;
    let a = resolve::element(&m, word)?;
    let results: Vec<(String, MonotoneMap)> = match strategy {
        StrategyArg::All => {
            let all = v_strategies(&m, a)?;
            if all.is_empty() {
                // `v` names the missing hypotheses
                divisorial_stable::v(&m, a)?;
            }
            all.into_iter().map(|(t, s)| (t.to_string(), s)).collect()
        }
        StrategyArg::Lin => vec![("lin".into(), v_lin(&m, a)?)],
        StrategyArg::Rs => vec![("rs".into(), v_sandwich(&m, a)?)],
        StrategyArg::Residual => vec![("double-residual".into(), v_double_residual(&m, a)?)],
        StrategyArg::Units => vec![("units".into(), v_via_units(&m, a)?)],
    };
    let agree = results.windows(2).all(|w| w[0].1 == w[1].1);
    let mut text = format!("v({}) on {}\n", m.label(a), title(d));
    let mut rows = Vec::new();
    for (tag, s) in &results {
        let _ = writeln!(text, "  {tag:<16} {s}  [{}]", s.describe(m.poset()));
        rows.push(json!({ "strategy": tag, "assign": s.as_slice() }));
    }
    let _ = writeln!(text, "strategies agree: {agree}");
    if !agree {
        return Err(Error::internal(format!("v strategies disagree:\n{text}")));
    }
    Ok(Report::new(text, json!({ "element": m.label(a), "results": rows, "agree": agree })))
}

pub fn simple(d: &StructureDoc) -> Result<Report> {
    let m = d.finite_magma()?;
    let r = simplicity(&m)?;
    let witness = r.witness.map(|w| m.label(w).to_string());
    let text = format!(
        "{}: simple {}\n  nuclei {}\n  every v(a) below the top is d: {}\n  double residual route: {}\n{}",
        title(d),
        r.simple,
        r.nucleus_count,
        r.by_v,
        r.by_double_residual.map_or("not applicable".to_string(), |b| b.to_string()),
        witness.as_ref().map_or(String::new(), |w| format!("  witness: v({w}) is not d\n"))
    );
    Ok(Report::new(
        text,
        json!({
            "simple": r.simple,
            "nucleus_count": r.nucleus_count,
            "by_v": r.by_v,
            "by_double_residual": r.by_double_residual,
            "witness": witness,
        }),
    ))
}

pub fn idl(d: &StructureDoc) -> Result<Report> {
    let m = d.finite_magma()?;
    let c = idl_rep::idl(&m)?;
    let mut text = format!("Idl({}): {} ideals\n", title(d), c.ideals.len());
    let mut rows = Vec::new();
    for (i, members) in c.ideals.iter().enumerate() {
        let _ = writeln!(text, "  {} = {}", c.magma.label(i), set(&m, members));
        rows.push(json!({ "label": c.magma.label(i), "members": labels(&m, members) }));
    }
    let name = format!("Idl({})", title(d));
    Ok(Report::new(
        text,
        json!({
            "ideals": rows,
            "magma": serde_json::to_value(StructureDoc::magma(&c.magma, Some(&name))).expect("serializes"),
        }),
    ))
}

pub fn roundtrip(d: &StructureDoc) -> Result<Report> {
    let m = d.finite_magma()?;
    let w = roundtrip_witnesses(&m)?;
    let mut text = format!("round trips on {}\n", title(d));
    let side = |text: &mut String, head: &str, pairs: &Option<(Vec<(String, String)>, bool)>| match pairs {
        None => {
            let _ = writeln!(text, "{head}: not applicable");
        }
        Some((pairs, iso)) => {
            let _ = writeln!(text, "{head}: isomorphism {iso}");
            for (a, b) in pairs {
                let _ = writeln!(text, "  {a} -> {b}");
            }
        }
    };
    side(&mut text, "M -> K(Idl(M)), x -> ↓x", &w.semilattice);
    side(&mut text, "Idl(K(Q)) -> Q, I -> sup I", &w.quantale);
    let to_json = |p: &Option<(Vec<(String, String)>, bool)>| {
        p.as_ref().map(|(pairs, iso)| json!({ "bijection": pairs, "isomorphism": iso }))
    };
    Ok(Report::new(text, json!({ "semilattice": to_json(&w.semilattice), "quantale": to_json(&w.quantale) })))
}

pub fn tower(d: &StructureDoc, depth: usize) -> Result<Report> {
    let m = d.finite_magma()?;
    let t = nucleus_tower(&m, depth)?;
    let sizes = t.sizes();
    let mut text = format!("nucleus tower of {} to depth {depth}\n", title(d));
    for (i, n) in sizes.iter().enumerate() {
        let _ = writeln!(text, "  level {}: {n} nuclei", i + 1);
    }
    let _ = writeln!(text, "d_- onto between consecutive levels: {:?}", t.d_iso);
    let _ = writeln!(text, "simple: {}", t.simple);
    let _ = writeln!(
        text,
        "stabilizes at: {}",
        t.stabilizes_at().map_or("not within depth".to_string(), |n| n.to_string())
    );
    Ok(Report::new(
        text,
        json!({ "sizes": sizes, "d_iso": t.d_iso, "simple": t.simple, "stabilizes_at": t.stabilizes_at() }),
    ))
}
