//! Chain examples: finite surrogates for `G[∞]` and the lazy chain `ℕ ∪ {∞}`.

use magma_core::OrderedMagma;
use order_core::{ChainOmega, FinitePoset, Result};

/// Which chain to build.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChainSpec {
    /// `{-n..n} ∪ {∞}` under addition clamped to `[-n, n]`.
    Truncated { n: u32 },
    /// The same with a bottom `-∞` adjoined as annihilator.
    TruncatedPlusMinus { n: u32 },
    /// `Z/k` ordered discretely, with `∞` on top and optionally `-∞` below.
    GroupWithInfinity { k: usize, minus_inf: bool },
    /// `ℕ ∪ {∞}` under `∨`.
    LazyOmega,
}

#[derive(Clone, Debug)]
pub enum ChainInstance {
    Finite(OrderedMagma),
    Lazy(ChainOmega),
}

impl ChainInstance {
    pub fn finite(self) -> Option<OrderedMagma> {
        match self {
            ChainInstance::Finite(m) => Some(m),
            ChainInstance::Lazy(_) => None,
        }
    }
}

fn with_minus_inf(m: OrderedMagma) -> Result<OrderedMagma> {
    let mut labels = m.poset().labels().to_vec();
    let m = m.adjoin_annihilator();
    labels.push("-inf".into());
    m.with_labels(labels)
}

pub fn truncated_chain(n: u32, minus_inf: bool) -> Result<OrderedMagma> {
    let n = i64::from(n);
    let span = (2 * n + 1) as usize;
    let mut labels: Vec<String> = (-n..=n).map(|v| v.to_string()).collect();
    labels.push("inf".into());
    let m = OrderedMagma::from_fn(FinitePoset::chain(span + 1).with_labels(labels)?, |x, y| {
        if x == span || y == span {
            return span;
        }
        let s = (x as i64 - n) + (y as i64 - n);
        (s.clamp(-n, n) + n) as usize
    })?;
    if minus_inf {
        with_minus_inf(m)
    } else {
        Ok(m)
    }
}

pub fn group_with_infinity(k: usize, minus_inf: bool) -> Result<OrderedMagma> {
    let mut labels: Vec<String> = (0..k).map(|g| format!("g{g}")).collect();
    labels.push("inf".into());
    let p = FinitePoset::from_fn(labels, |x, y| x == y || y == k)?;
    let m = OrderedMagma::from_fn(p, |x, y| if x == k || y == k { k } else { (x + y) % k })?;
    if minus_inf {
        with_minus_inf(m)
    } else {
        Ok(m)
    }
}

pub fn chain_instances(spec: &ChainSpec) -> Result<ChainInstance> {
    Ok(match *spec {
        ChainSpec::Truncated { n } => ChainInstance::Finite(truncated_chain(n, false)?),
        ChainSpec::TruncatedPlusMinus { n } => ChainInstance::Finite(truncated_chain(n, true)?),
        ChainSpec::GroupWithInfinity { k, minus_inf } => {
            ChainInstance::Finite(group_with_infinity(k, minus_inf)?)
        }
        ChainSpec::LazyOmega => ChainInstance::Lazy(ChainOmega),
    })
}
