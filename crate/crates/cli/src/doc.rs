//! `StructureDoc`: the JSON interchange form read and written by every
//! subcommand.

use magma_core::OrderedMagma;
use nucleus_core::MonotoneMap;
use order_core::{ElementId, Error, FinitePoset, Result};
use serde::{Deserialize, Serialize};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureDoc {
    pub format_version: u32,
    #[serde(flatten)]
    pub body: Body,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Body {
    Poset(PosetDoc),
    Magma(MagmaDoc),
    Map(MapDoc),
    Morphism(MorphismDoc),
    Lazy(LazyDoc),
}

/// Labels plus the covering pairs `[lower, upper]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetDoc {
    pub labels: Vec<String>,
    pub covers: Vec<[ElementId; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MagmaDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub poset: PosetDoc,
    pub mul: Vec<Vec<ElementId>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<ElementId>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub annihilator: Option<ElementId>,
}

/// A self-map of a magma, which is carried inline so that a map file stands
/// on its own.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapDoc {
    pub magma: MagmaDoc,
    pub assign: Vec<ElementId>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismDoc {
    pub source: MagmaDoc,
    pub target: MagmaDoc,
    pub assign: Vec<ElementId>,
}

/// One of the shipped lazy carriers, selected by name.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LazyDoc {
    pub carrier: LazyCarrier,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum LazyCarrier {
    ChainOmega,
    UpsetsNat,
}

impl LazyCarrier {
    pub fn name(self) -> &'static str {
        match self {
            LazyCarrier::ChainOmega => "chain-omega",
            LazyCarrier::UpsetsNat => "upsets-nat",
        }
    }
}

impl StructureDoc {
    pub fn new(body: Body) -> Self {
        StructureDoc { format_version: FORMAT_VERSION, body }
    }

    pub fn kind(&self) -> &'static str {
        match self.body {
            Body::Poset(_) => "poset",
            Body::Magma(_) => "magma",
            Body::Map(_) => "map",
            Body::Morphism(_) => "morphism",
            Body::Lazy(_) => "lazy",
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let doc: StructureDoc =
            serde_json::from_str(text).map_err(|e| Error::malformed(format!("bad document: {e}")))?;
        if doc.format_version != FORMAT_VERSION {
            return Err(Error::malformed(format!(
                "format version {} is not supported (expected {FORMAT_VERSION})",
                doc.format_version
            )));
        }
        doc.validate()?;
        Ok(doc)
    }

    /// Builds every structure the document names, so that a document that
    /// parses is also well formed.
    pub fn validate(&self) -> Result<()> {
        match &self.body {
            Body::Poset(p) => p.to_poset().map(drop),
            Body::Magma(m) => m.to_magma().map(drop),
            Body::Map(m) => m.to_map().map(drop),
            Body::Morphism(m) => m.to_morphism().map(drop),
            Body::Lazy(_) => Ok(()),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    pub fn magma(m: &OrderedMagma, name: Option<&str>) -> Self {
        StructureDoc::new(Body::Magma(MagmaDoc::from_magma(m, name)))
    }

    /// The finite magma the document describes; a map document yields its
    /// carrier.
    pub fn finite_magma(&self) -> Result<OrderedMagma> {
        match &self.body {
            Body::Magma(m) => m.to_magma(),
            Body::Map(m) => m.magma.to_magma(),
            Body::Lazy(l) => Err(Error::hypothesis(format!(
                "{} is a lazy carrier; this command needs a finite magma",
                l.carrier.name()
            ))),
            _ => Err(Error::malformed(format!(
                "expected a magma document, found kind `{}`",
                self.kind()
            ))),
        }
    }

    pub fn name(&self) -> Option<&str> {
        match &self.body {
            Body::Magma(m) => m.name.as_deref(),
            Body::Map(m) => m.magma.name.as_deref(),
            _ => None,
        }
    }
}

impl PosetDoc {
    pub fn from_poset(p: &FinitePoset) -> Self {
        PosetDoc {
            labels: p.labels().to_vec(),
            covers: p.covers().into_iter().map(|(a, b)| [a, b]).collect(),
        }
    }

    pub fn to_poset(&self) -> Result<FinitePoset> {
        let n = self.labels.len();
        if let Some(&bad) = self.covers.iter().flatten().find(|&&x| x >= n) {
            return Err(Error::ForeignId { id: bad, size: n });
        }
        let covers: Vec<(ElementId, ElementId)> = self.covers.iter().map(|&[a, b]| (a, b)).collect();
        FinitePoset::from_covers(self.labels.clone(), &covers)
    }
}

impl MagmaDoc {
    pub fn from_magma(m: &OrderedMagma, name: Option<&str>) -> Self {
        MagmaDoc {
            name: name.map(str::to_string),
            poset: PosetDoc::from_poset(m.poset()),
            mul: m.table(),
            unit: m.unit(),
            annihilator: m.annihilator(),
        }
    }

    pub fn to_magma(&self) -> Result<OrderedMagma> {
        OrderedMagma::with_declared(self.poset.to_poset()?, self.mul.clone(), self.unit, self.annihilator)
    }
}

impl MapDoc {
    pub fn to_map(&self) -> Result<(OrderedMagma, MonotoneMap)> {
        let m = self.magma.to_magma()?;
        let s = MonotoneMap::new(m.poset(), self.assign.clone())?;
        Ok((m, s))
    }
}

impl MorphismDoc {
    pub fn to_morphism(&self) -> Result<(OrderedMagma, OrderedMagma, Vec<ElementId>)> {
        let a = self.source.to_magma()?;
        let b = self.target.to_magma()?;
        if self.assign.len() != a.size() {
            return Err(Error::malformed(format!(
                "morphism has {} entries for a source of size {}",
                self.assign.len(),
                a.size()
            )));
        }
        if let Some(&bad) = self.assign.iter().find(|&&y| y >= b.size()) {
            return Err(Error::ForeignId { id: bad, size: b.size() });
        }
        Ok((a, b, self.assign.clone()))
    }
}
