//! `make`: constructors that print a document.

use clap::Subcommand;
use instances::{
    chain_instances, corpus, ideal_system_lattice, module_system_lattice, powerset_prequantale,
    ring_ideal_lattice, ChainInstance, ChainSpec, FiniteMagmaDesc, RingDesc,
};
use order_core::{Error, Result};
use serde_json::json;

use crate::doc::{Body, LazyCarrier, LazyDoc, StructureDoc};
use crate::{Inputs, Report};

#[derive(Debug, Subcommand)]
pub enum MakeCmd {
    /// Ideal lattice of `Z/n` or of `F_p[x]/(f)`.
    Ring {
        #[arg(long, conflicts_with = "poly")]
        zmod: Option<u64>,
        /// `p=<prime> f=<polynomial>`, e.g. `p=2 f=x^3`.
        #[arg(long, num_args = 1..=2)]
        poly: Vec<String>,
    },
    /// `2^{G_0}` for a cyclic group `G` (`Z1`, `Z2`, `Z3`, `Z4`).
    ModuleSystemLattice {
        #[arg(long)]
        group: String,
    },
    /// `2^{M_0}` for a small commutative monoid (`Z1`, `Z2`, `Z3`, `M2`).
    IdealSystemLattice {
        #[arg(long)]
        monoid: String,
    },
    /// The power set of a finite magma under complex multiplication.
    Powerset {
        /// A magma document, or one of `Z<k>`, `LZ<k>`, `M2`.
        #[arg(long)]
        magma: String,
        #[arg(long)]
        drop_empty: bool,
    },
    /// The lazy carrier of ultimately periodic subsets of the naturals.
    Upsets,
    /// Chain examples.
    Chain {
        /// `{-n..n} ∪ {inf}` under clamped addition.
        #[arg(long, group = "shape")]
        truncated: Option<u32>,
        /// `Z/k` ordered discretely with `inf` on top.
        #[arg(long, group = "shape")]
        group_inf: Option<usize>,
        /// The lazy chain of naturals with infinity.
        #[arg(long, group = "shape")]
        omega: bool,
        /// Adjoin `-inf` as an annihilating bottom.
        #[arg(long)]
        minus_inf: bool,
    },
    /// A named member of the built-in corpus.
    Corpus {
        #[arg(long, required_unless_present = "list")]
        name: Option<String>,
        #[arg(long)]
        list: bool,
    },
}

fn parse_poly(args: &[String]) -> Result<RingDesc> {
    let mut p = None;
    let mut f = None;
    for a in args.iter().flat_map(|a| a.split_whitespace()) {
        match a.split_once('=') {
            Some(("p", v)) => {
                p = Some(v.parse::<u64>().map_err(|_| Error::malformed(format!("bad prime `{v}`")))?)
            }
            Some(("f", v)) => f = Some(v.to_string()),
            _ => return Err(Error::malformed(format!("expected p=<prime> or f=<polynomial>, got `{a}`"))),
        }
    }
    match (p, f) {
        (Some(p), Some(f)) => RingDesc::poly(p, &f),
        _ => Err(Error::malformed("--poly needs both p=<prime> and f=<polynomial>")),
    }
}

/// `Z<k>`, `LZ<k>`, `M2`, and `trivial` for `Z1`.
pub fn named_magma(name: &str) -> Option<FiniteMagmaDesc> {
    let k = |s: &str| s.parse::<usize>().ok().filter(|&k| k >= 1);
    if name == "trivial" {
        return Some(FiniteMagmaDesc::cyclic_group(1));
    }
    if name == "M2" {
        return Some(FiniteMagmaDesc::two_element_monoid());
    }
    if let Some(rest) = name.strip_prefix("LZ") {
        return k(rest).map(FiniteMagmaDesc::left_zero);
    }
    name.strip_prefix('Z').and_then(k).map(FiniteMagmaDesc::cyclic_group)
}

fn magma_desc(spec: &str, inputs: &mut Inputs<'_>) -> Result<FiniteMagmaDesc> {
    if let Some(d) = named_magma(spec) {
        return Ok(d);
    }
    let m = inputs.doc(spec)?.finite_magma()?;
    FiniteMagmaDesc::new(m.poset().labels().to_vec(), m.table())
}

fn named(spec: &str) -> Result<FiniteMagmaDesc> {
    named_magma(spec).ok_or_else(|| Error::malformed(format!("unknown group or monoid `{spec}`")))
}

fn chain_name(spec: &ChainSpec) -> String {
    match spec {
        ChainSpec::Truncated { n } => format!("[-{n}..{n}][inf]"),
        ChainSpec::TruncatedPlusMinus { n } => format!("[-{n}..{n}][+-inf]"),
        ChainSpec::GroupWithInfinity { k, minus_inf: false } => format!("Z{k}[inf]"),
        ChainSpec::GroupWithInfinity { k, minus_inf: true } => format!("Z{k}[+-inf]"),
        ChainSpec::LazyOmega => "N[inf]".into(),
    }
}

pub fn make(cmd: &MakeCmd, inputs: &mut Inputs<'_>) -> Result<Report> {
    let doc = match cmd {
        MakeCmd::Ring { zmod, poly } => {
            let desc = match zmod {
                Some(n) => RingDesc::Zmod(*n),
                None if !poly.is_empty() => parse_poly(poly)?,
                None => return Err(Error::malformed("make ring needs --zmod or --poly")),
            };
            let l = ring_ideal_lattice(&desc)?;
            StructureDoc::magma(&l.magma, Some(&format!("I({desc})")))
        }
        MakeCmd::ModuleSystemLattice { group } => {
            let l = module_system_lattice(&named(group)?)?;
            StructureDoc::magma(&l.magma, Some(&format!("2^({group})_0")))
        }
        MakeCmd::IdealSystemLattice { monoid } => {
            let l = ideal_system_lattice(&named(monoid)?)?;
            StructureDoc::magma(&l.magma, Some(&format!("2^({monoid})_0")))
        }
        MakeCmd::Powerset { magma, drop_empty } => {
            let desc = magma_desc(magma, inputs)?;
            let q = powerset_prequantale(&desc, *drop_empty)?;
            let name = if *drop_empty { format!("2^{magma}-empty") } else { format!("2^{magma}") };
            StructureDoc::magma(&q, Some(&name))
        }
        MakeCmd::Upsets => StructureDoc::new(Body::Lazy(LazyDoc { carrier: LazyCarrier::UpsetsNat })),
        MakeCmd::Chain { truncated, group_inf, omega, minus_inf } => {
            let spec = match (truncated, group_inf, omega) {
                (Some(n), _, _) if *minus_inf => ChainSpec::TruncatedPlusMinus { n: *n },
                (Some(n), _, _) => ChainSpec::Truncated { n: *n },
                (_, Some(k), _) => ChainSpec::GroupWithInfinity { k: *k, minus_inf: *minus_inf },
                (_, _, true) => ChainSpec::LazyOmega,
                _ => return Err(Error::malformed("make chain needs --truncated, --group-inf or --omega")),
            };
            match chain_instances(&spec)? {
                ChainInstance::Finite(m) => StructureDoc::magma(&m, Some(&chain_name(&spec))),
                ChainInstance::Lazy(_) => StructureDoc::new(Body::Lazy(LazyDoc { carrier: LazyCarrier::ChainOmega })),
            }
        }
        MakeCmd::Corpus { name, list } => {
            let all = corpus();
            if *list {
                let names: Vec<&str> = all.iter().map(|(n, _)| n.as_str()).collect();
                return Ok(Report::new(names.join("\n"), json!(names)));
            }
            let name = name.as_deref().expect("required unless --list");
            let (n, m) = all
                .iter()
                .find(|(n, _)| n == name)
                .ok_or_else(|| Error::malformed(format!("no corpus entry named `{name}`")))?;
            StructureDoc::magma(m, Some(n))
        }
    };
    Ok(Report::doc(&doc))
}
