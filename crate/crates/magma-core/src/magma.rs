use order_core::{ElementId, Error, FinitePoset, Result};

/// A finite poset with an order-compatible binary operation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderedMagma {
    poset: FinitePoset,
    mul: Vec<ElementId>,
    unit: Option<ElementId>,
    annihilator: Option<ElementId>,
}

/// The two residuals `x/a` and `a\x`, when they exist.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Residual {
    /// Largest `z` with `z·a ≤ x`.
    pub left: Option<ElementId>,
    /// Largest `z` with `a·z ≤ x`.
    pub right: Option<ElementId>,
}

impl OrderedMagma {
    /// Builds a magma from a table, checking order-compatibility and
    /// detecting the unit and annihilator.
    pub fn new(poset: FinitePoset, table: Vec<Vec<ElementId>>) -> Result<Self> {
        let n = poset.size();
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(Error::malformed(format!("multiplication table must be {n}x{n}")));
        }
        let mul: Vec<ElementId> = table.into_iter().flatten().collect();
        if let Some(&bad) = mul.iter().find(|&&z| z >= n) {
            return Err(Error::ForeignId { id: bad, size: n });
        }
        let mut m = OrderedMagma { poset, mul, unit: None, annihilator: None };
        m.check_compatible()?;
        m.unit = m.detect_unit();
        m.annihilator = m.detect_annihilator();
        Ok(m)
    }

    pub fn from_fn(poset: FinitePoset, f: impl Fn(ElementId, ElementId) -> ElementId) -> Result<Self> {
        let n = poset.size();
        let table = (0..n).map(|x| (0..n).map(|y| f(x, y)).collect()).collect();
        OrderedMagma::new(poset, table)
    }

    /// Like [`OrderedMagma::new`], additionally checking declared identities.
    pub fn with_declared(
        poset: FinitePoset,
        table: Vec<Vec<ElementId>>,
        unit: Option<ElementId>,
        annihilator: Option<ElementId>,
    ) -> Result<Self> {
        let m = OrderedMagma::new(poset, table)?;
        if let Some(u) = unit {
            m.poset.check(u)?;
            if m.unit != Some(u) {
                return Err(Error::malformed(format!("declared unit {u} is not a two-sided unit")));
            }
        }
        if let Some(z) = annihilator {
            m.poset.check(z)?;
            if m.annihilator != Some(z) {
                return Err(Error::malformed(format!(
                    "declared annihilator {z} is not a least absorbing element"
                )));
            }
        }
        Ok(m)
    }

    fn check_compatible(&self) -> Result<()> {
        let n = self.size();
        for x in 0..n {
            for x2 in 0..n {
                if !self.poset.leq(x, x2) {
                    continue;
                }
                for y in 0..n {
                    if !self.poset.leq(self.mul(x, y), self.mul(x2, y)) {
                        return Err(Error::malformed(format!(
                            "multiplication is not order-compatible: {} <= {} but {}*{} !<= {}*{}",
                            self.label(x), self.label(x2), self.label(x), self.label(y),
                            self.label(x2), self.label(y)
                        )));
                    }
                    if !self.poset.leq(self.mul(y, x), self.mul(y, x2)) {
                        return Err(Error::malformed(format!(
                            "multiplication is not order-compatible: {} <= {} but {}*{} !<= {}*{}",
                            self.label(x), self.label(x2), self.label(y), self.label(x),
                            self.label(y), self.label(x2)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    fn detect_unit(&self) -> Option<ElementId> {
        self.elements()
            .find(|&u| self.elements().all(|x| self.mul(u, x) == x && self.mul(x, u) == x))
    }

    fn detect_annihilator(&self) -> Option<ElementId> {
        let b = self.poset.bottom()?;
        self.elements()
            .all(|x| self.mul(b, x) == b && self.mul(x, b) == b)
            .then_some(b)
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn size(&self) -> usize {
        self.poset.size()
    }

    pub fn elements(&self) -> std::ops::Range<ElementId> {
        self.poset.elements()
    }

    #[inline]
    pub fn mul(&self, x: ElementId, y: ElementId) -> ElementId {
        self.mul[x * self.size() + y]
    }

    #[inline]
    pub fn leq(&self, x: ElementId, y: ElementId) -> bool {
        self.poset.leq(x, y)
    }

    pub fn label(&self, x: ElementId) -> &str {
        self.poset.label(x)
    }

    pub fn unit(&self) -> Option<ElementId> {
        self.unit
    }

    pub fn annihilator(&self) -> Option<ElementId> {
        self.annihilator
    }

    pub fn top(&self) -> Option<ElementId> {
        self.poset.top()
    }

    pub fn bottom(&self) -> Option<ElementId> {
        self.poset.bottom()
    }

    pub fn sup(&self, xs: &[ElementId]) -> Option<ElementId> {
        self.poset.sup(xs)
    }

    pub fn inf(&self, xs: &[ElementId]) -> Option<ElementId> {
        self.poset.inf(xs)
    }

    pub fn table(&self) -> Vec<Vec<ElementId>> {
        self.elements()
            .map(|x| self.elements().map(|y| self.mul(x, y)).collect())
            .collect()
    }

    pub fn is_associative(&self) -> bool {
        self.elements().all(|x| {
            self.elements().all(|y| {
                self.elements()
                    .all(|z| self.mul(self.mul(x, y), z) == self.mul(x, self.mul(y, z)))
            })
        })
    }

    pub fn is_commutative(&self) -> bool {
        self.elements()
            .all(|x| self.elements().all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    /// The product set `XY`, sorted and deduplicated.
    pub fn product_set(&self, xs: &[ElementId], ys: &[ElementId]) -> Vec<ElementId> {
        let mut out: Vec<ElementId> = xs
            .iter()
            .flat_map(|&x| ys.iter().map(move |&y| (x, y)))
            .map(|(x, y)| self.mul(x, y))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// `x/a`: the largest `z` with `z·a ≤ x`.
    pub fn residual_left(&self, x: ElementId, a: ElementId) -> Option<ElementId> {
        let zs: Vec<ElementId> = self.elements().filter(|&z| self.leq(self.mul(z, a), x)).collect();
        self.poset.greatest_of(&zs)
    }

    /// `a\x`: the largest `z` with `a·z ≤ x`.
    pub fn residual_right(&self, a: ElementId, x: ElementId) -> Option<ElementId> {
        let zs: Vec<ElementId> = self.elements().filter(|&z| self.leq(self.mul(a, z), x)).collect();
        self.poset.greatest_of(&zs)
    }

    pub fn residual(&self, x: ElementId, a: ElementId) -> Result<Residual> {
        self.poset.check(x)?;
        self.poset.check(a)?;
        Ok(Residual { left: self.residual_left(x, a), right: self.residual_right(a, x) })
    }

    /// `M ⊔ {0}` with a fresh least element that absorbs everything.
    pub fn adjoin_annihilator(&self) -> OrderedMagma {
        self.adjoin(|n, x| x == n, "0*", true)
    }

    /// `M ⊔ {⊤}` with a fresh greatest element that absorbs everything.
    pub fn adjoin_top(&self) -> OrderedMagma {
        self.adjoin(|n, x| x == n, "inf*", false)
    }

    fn adjoin(&self, is_new: impl Fn(usize, usize) -> bool, label: &str, below: bool) -> OrderedMagma {
        let n = self.size();
        let mut labels = self.poset.labels().to_vec();
        labels.push(label.to_string());
        let poset = FinitePoset::from_fn(labels, |x, y| {
            match (is_new(n, x), is_new(n, y)) {
                (true, true) => true,
                (true, false) => below,
                (false, true) => !below,
                (false, false) => self.leq(x, y),
            }
        })
        .expect("adjoining an extremal element preserves the order axioms");
        OrderedMagma::from_fn(poset, |x, y| if x == n || y == n { n } else { self.mul(x, y) })
            .expect("absorbing extremal elements keep multiplication order-compatible")
    }

    /// The sub-ordered-magma on `elems`, which must be closed under `mul`.
    pub fn submagma(&self, elems: &[ElementId]) -> Result<OrderedMagma> {
        self.poset.check_subset(elems)?;
        let pos = |z: ElementId| elems.iter().position(|&e| e == z);
        let mut table = Vec::with_capacity(elems.len());
        for &x in elems {
            let mut row = Vec::with_capacity(elems.len());
            for &y in elems {
                let z = self.mul(x, y);
                row.push(pos(z).ok_or_else(|| {
                    Error::hypothesis(format!(
                        "subset is not closed under multiplication: {}*{} = {}",
                        self.label(x), self.label(y), self.label(z)
                    ))
                })?);
            }
            table.push(row);
        }
        OrderedMagma::new(self.poset.subposet(elems), table)
    }

    /// Relabels elements without changing the structure.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        self.poset = self.poset.with_labels(labels)?;
        Ok(self)
    }

    /// Whether `f` is a magma homomorphism into `target`.
    pub fn is_homomorphism_to(&self, target: &OrderedMagma, f: &[ElementId]) -> bool {
        f.len() == self.size()
            && f.iter().all(|&z| z < target.size())
            && self.elements().all(|x| {
                self.elements()
                    .all(|y| f[self.mul(x, y)] == target.mul(f[x], f[y]))
            })
    }

    /// Whether `f` preserves every existing supremum of a nonempty subset.
    pub fn is_near_sup_preserving_to(&self, target: &OrderedMagma, f: &[ElementId]) -> bool {
        let n = self.size();
        if n > 16 {
            // binary joins plus top suffice on finite lattices
            return self.elements().all(|x| {
                self.elements().all(|y| match self.poset.join(x, y) {
                    Some(j) => target.poset.join(f[x], f[y]) == Some(f[j]),
                    None => true,
                })
            });
        }
        order_core::subsets(n).filter(|s| !s.is_empty()).all(|s| match self.sup(&s) {
            Some(j) => {
                let img: Vec<ElementId> = s.iter().map(|&x| f[x]).collect();
                target.sup(&img) == Some(f[j])
            }
            None => true,
        })
    }
}
