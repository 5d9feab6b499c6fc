//! Turning command-line words into element ids, nuclei and strategies.

use std::path::Path;

use magma_core::OrderedMagma;
use nucleus_core::lattice::nucleus_name;
use nucleus_core::{enumerate_nuclei, MonotoneMap};
use order_core::{ElementId, Error, Result};

use crate::doc::Body;
use crate::Inputs;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum StrategyArg {
    Lin,
    Rs,
    Residual,
    Units,
    All,
}

/// An element given by label, or else by numeric id.
pub fn element(m: &OrderedMagma, word: &str) -> Result<ElementId> {
    if let Some(x) = m.poset().find(word) {
        return Ok(x);
    }
    match word.parse::<ElementId>() {
        Ok(x) => {
            m.poset().check(x)?;
            Ok(x)
        }
        Err(_) => Err(Error::malformed(format!("no element labeled `{word}`"))),
    }
}

/// Every nucleus paired with the name `nuclei` prints for it.
pub fn named_nuclei(m: &OrderedMagma) -> Result<Vec<(String, MonotoneMap)>> {
    Ok(enumerate_nuclei(m)?
        .into_iter()
        .enumerate()
        .map(|(i, s)| (nucleus_name(m.poset(), &s, i), s))
        .collect())
}

/// A nucleus given as a map document, as a name from `nuclei`, or as a
/// comma separated table of labels or ids.
pub fn nucleus(m: &OrderedMagma, word: &str, inputs: &mut Inputs<'_>) -> Result<MonotoneMap> {
    if word == "-" || Path::new(word).is_file() {
        let doc = inputs.doc(word)?;
        let Body::Map(map) = &doc.body else {
            return Err(Error::malformed(format!("expected a map document, found kind `{}`", doc.kind())));
        };
        let (carrier, s) = map.to_map()?;
        if carrier != *m {
            return Err(Error::malformed("the map document is over a different magma"));
        }
        return Ok(s);
    }
    if !word.contains(',') {
        if let Some((_, s)) = named_nuclei(m)?.into_iter().find(|(n, _)| n == word) {
            return Ok(s);
        }
        if m.size() != 1 {
            return Err(Error::malformed(format!("`{word}` names no nucleus; see the `nuclei` command")));
        }
    }
    let assign = word.split(',').map(|w| element(m, w.trim())).collect::<Result<Vec<_>>>()?;
    MonotoneMap::new(m.poset(), assign)
}
