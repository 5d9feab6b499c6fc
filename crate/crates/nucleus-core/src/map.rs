use std::fmt;

use order_core::{ElementId, Error, FinitePoset, Result};

/// An order-preserving self-map of a finite carrier, stored as a table.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonotoneMap(Vec<ElementId>);

impl MonotoneMap {
    /// Validates ids and monotonicity against `p`.
    pub fn new(p: &FinitePoset, assign: Vec<ElementId>) -> Result<Self> {
        if assign.len() != p.size() {
            return Err(Error::malformed(format!(
                "map has {} entries, carrier has {}",
                assign.len(),
                p.size()
            )));
        }
        for &z in &assign {
            p.check(z)?;
        }
        if !p.is_order_preserving(&assign) {
            return Err(Error::malformed("map is not order-preserving"));
        }
        Ok(MonotoneMap(assign))
    }

    /// Wraps a table the caller already knows to be monotone.
    pub fn from_table(assign: Vec<ElementId>) -> Self {
        MonotoneMap(assign)
    }

    pub fn identity(n: usize) -> Self {
        MonotoneMap((0..n).collect())
    }

    pub fn constant(n: usize, c: ElementId) -> Self {
        MonotoneMap(vec![c; n])
    }

    /// `e`: everything goes to the top.
    pub fn top_map(p: &FinitePoset) -> Result<Self> {
        let top = p
            .top()
            .ok_or_else(|| Error::hypothesis("the map e needs a greatest element"))?;
        Ok(MonotoneMap::constant(p.size(), top))
    }

    #[inline]
    pub fn apply(&self, x: ElementId) -> ElementId {
        self.0[x]
    }

    pub fn as_slice(&self) -> &[ElementId] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<ElementId> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `self ∘ other`, i.e. `x ↦ self(other(x))`.
    pub fn compose(&self, other: &MonotoneMap) -> MonotoneMap {
        MonotoneMap(other.0.iter().map(|&y| self.0[y]).collect())
    }

    /// Sorted, deduplicated image.
    pub fn image(&self) -> Vec<ElementId> {
        let mut v = self.0.clone();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn fixed_points(&self) -> Vec<ElementId> {
        (0..self.len()).filter(|&x| self.0[x] == x).collect()
    }

    /// Pointwise order: `self ≤ other`.
    pub fn leq(&self, p: &FinitePoset, other: &MonotoneMap) -> bool {
        (0..self.len()).all(|x| p.leq(self.0[x], other.0[x]))
    }

    /// Renders the map as `label ↦ label` pairs, skipping fixed points.
    pub fn describe(&self, p: &FinitePoset) -> String {
        let moved: Vec<String> = (0..self.len())
            .filter(|&x| self.0[x] != x)
            .map(|x| format!("{}->{}", p.label(x), p.label(self.0[x])))
            .collect();
        if moved.is_empty() {
            "d".to_string()
        } else {
            moved.join(", ")
        }
    }
}

impl fmt::Display for MonotoneMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|z| z.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl std::ops::Index<ElementId> for MonotoneMap {
    type Output = ElementId;
    fn index(&self, x: ElementId) -> &ElementId {
        &self.0[x]
    }
}
