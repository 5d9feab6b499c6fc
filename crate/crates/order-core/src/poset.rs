use crate::error::{Error, Result};

/// Identifier of an element inside one finite carrier.
pub type ElementId = usize;

/// Largest carrier on which exponential enumeration is attempted.
pub const ENUMERATION_CAP: usize = 64;

/// A finite partial order stored as its full `leq` matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinitePoset {
    labels: Vec<String>,
    leq: Vec<bool>,
}

/// Order-theoretic completeness flags of a poset.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct PosetFlags {
    pub complete: bool,
    pub near_sup_complete: bool,
    pub bounded_complete: bool,
    pub dcpo: bool,
    pub bdcpo: bool,
    pub bounded_above: bool,
    pub join_semilattice: bool,
    pub meet_semilattice: bool,
    pub algebraic: bool,
}

impl PosetFlags {
    /// `(name, value)` pairs in a fixed order, for printing.
    pub fn entries(&self) -> Vec<(&'static str, bool)> {
        vec![
            ("complete", self.complete),
            ("near-sup-complete", self.near_sup_complete),
            ("bounded-complete", self.bounded_complete),
            ("dcpo", self.dcpo),
            ("bdcpo", self.bdcpo),
            ("bounded-above", self.bounded_above),
            ("join-semilattice", self.join_semilattice),
            ("meet-semilattice", self.meet_semilattice),
            ("algebraic", self.algebraic),
        ]
    }
}

impl FinitePoset {
    /// Builds a poset from a boolean matrix, rejecting anything that is not
    /// reflexive, antisymmetric and transitive.
    pub fn new(labels: Vec<String>, leq: Vec<Vec<bool>>) -> Result<Self> {
        let n = labels.len();
        if leq.len() != n || leq.iter().any(|row| row.len() != n) {
            return Err(Error::malformed(format!(
                "order matrix must be {n}x{n} to match the labels"
            )));
        }
        let flat: Vec<bool> = leq.into_iter().flatten().collect();
        let p = FinitePoset { labels, leq: flat };
        p.validate()?;
        Ok(p)
    }

    /// Builds a poset from a predicate `leq(x, y)` on `0..labels.len()`.
    pub fn from_fn(labels: Vec<String>, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let n = labels.len();
        let flat = (0..n * n).map(|k| leq(k / n, k % n)).collect();
        let p = FinitePoset { labels, leq: flat };
        p.validate()?;
        Ok(p)
    }

    /// Builds a poset as the reflexive-transitive closure of `x < y` pairs.
    pub fn from_covers(labels: Vec<String>, covers: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let mut m = vec![false; n * n];
        for i in 0..n {
            m[i * n + i] = true;
        }
        for &(a, b) in covers {
            if a >= n || b >= n {
                return Err(Error::ForeignId { id: a.max(b), size: n });
            }
            m[a * n + b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if m[i * n + k] {
                    for j in 0..n {
                        if m[k * n + j] {
                            m[i * n + j] = true;
                        }
                    }
                }
            }
        }
        let p = FinitePoset { labels, leq: m };
        p.validate()?;
        Ok(p)
    }

    fn validate(&self) -> Result<()> {
        let n = self.size();
        for x in 0..n {
            if !self.leq(x, x) {
                return Err(Error::InvalidOrder(format!(
                    "not reflexive at {}",
                    self.labels[x]
                )));
            }
        }
        for x in 0..n {
            for y in (x + 1)..n {
                if self.leq(x, y) && self.leq(y, x) {
                    return Err(Error::InvalidOrder(format!(
                        "not antisymmetric: {} <= {} <= {}",
                        self.labels[x], self.labels[y], self.labels[x]
                    )));
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                if !self.leq(x, y) {
                    continue;
                }
                for z in 0..n {
                    if self.leq(y, z) && !self.leq(x, z) {
                        return Err(Error::InvalidOrder(format!(
                            "not transitive: ({}, {}, {}) has {} <= {} <= {} but not {} <= {}",
                            x,
                            y,
                            z,
                            self.labels[x],
                            self.labels[y],
                            self.labels[z],
                            self.labels[x],
                            self.labels[z]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn chain(n: usize) -> Self {
        let labels = (0..n).map(|i| i.to_string()).collect();
        FinitePoset::from_fn(labels, |a, b| a <= b).expect("chains are posets")
    }

    pub fn antichain(n: usize) -> Self {
        let labels = (0..n).map(|i| format!("a{i}")).collect();
        FinitePoset::from_fn(labels, |a, b| a == b).expect("antichains are posets")
    }

    /// The four-element lattice `0 < a, b < 1`.
    pub fn diamond() -> Self {
        let labels = ["0", "a", "b", "1"].iter().map(|s| s.to_string()).collect();
        FinitePoset::from_covers(labels, &[(0, 1), (0, 2), (1, 3), (2, 3)])
            .expect("diamond is a poset")
    }

    /// Subsets of a `k`-element set ordered by inclusion, indexed by bitmask.
    pub fn boolean(k: usize) -> Self {
        let n = 1usize << k;
        let labels = (0..n).map(|m| mask_label(m, k)).collect();
        FinitePoset::from_fn(labels, |a, b| a & !b == 0).expect("boolean lattices are posets")
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    #[inline]
    pub fn leq(&self, x: ElementId, y: ElementId) -> bool {
        self.leq[x * self.size() + y]
    }

    #[inline]
    pub fn lt(&self, x: ElementId, y: ElementId) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: ElementId, y: ElementId) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    pub fn label(&self, x: ElementId) -> &str {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.size() {
            return Err(Error::malformed("label count does not match carrier size"));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn elements(&self) -> std::ops::Range<ElementId> {
        0..self.size()
    }

    /// Looks an element up by its label.
    pub fn find(&self, label: &str) -> Option<ElementId> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn check(&self, x: ElementId) -> Result<()> {
        if x < self.size() {
            Ok(())
        } else {
            Err(Error::ForeignId { id: x, size: self.size() })
        }
    }

    /// Rejects foreign ids and duplicates.
    pub fn check_subset(&self, xs: &[ElementId]) -> Result<()> {
        let mut seen = vec![false; self.size()];
        for &x in xs {
            self.check(x)?;
            if seen[x] {
                return Err(Error::malformed(format!("duplicate element {x} in subset")));
            }
            seen[x] = true;
        }
        Ok(())
    }

    pub fn dual(&self) -> Self {
        let n = self.size();
        let flat = (0..n * n).map(|k| self.leq(k % n, k / n)).collect();
        FinitePoset { labels: self.labels.clone(), leq: flat }
    }

    /// The induced subposet on `elems`, in the given order.
    pub fn subposet(&self, elems: &[ElementId]) -> Self {
        let labels = elems.iter().map(|&e| self.labels[e].clone()).collect();
        let m = elems.len();
        let flat = (0..m * m).map(|k| self.leq(elems[k / m], elems[k % m])).collect();
        FinitePoset { labels, leq: flat }
    }

    pub fn upper_bounds(&self, xs: &[ElementId]) -> Vec<ElementId> {
        self.elements().filter(|&u| xs.iter().all(|&x| self.leq(x, u))).collect()
    }

    pub fn lower_bounds(&self, xs: &[ElementId]) -> Vec<ElementId> {
        self.elements().filter(|&l| xs.iter().all(|&x| self.leq(l, x))).collect()
    }

    /// The least member of `xs`, if it has one.
    pub fn least_of(&self, xs: &[ElementId]) -> Option<ElementId> {
        xs.iter().copied().find(|&c| xs.iter().all(|&d| self.leq(c, d)))
    }

    /// The greatest member of `xs`, if it has one.
    pub fn greatest_of(&self, xs: &[ElementId]) -> Option<ElementId> {
        xs.iter().copied().find(|&c| xs.iter().all(|&d| self.leq(d, c)))
    }

    pub fn sup(&self, xs: &[ElementId]) -> Option<ElementId> {
        self.least_of(&self.upper_bounds(xs))
    }

    pub fn inf(&self, xs: &[ElementId]) -> Option<ElementId> {
        self.greatest_of(&self.lower_bounds(xs))
    }

    pub fn join(&self, x: ElementId, y: ElementId) -> Option<ElementId> {
        if self.leq(x, y) {
            return Some(y);
        }
        if self.leq(y, x) {
            return Some(x);
        }
        self.sup(&[x, y])
    }

    pub fn meet(&self, x: ElementId, y: ElementId) -> Option<ElementId> {
        if self.leq(x, y) {
            return Some(x);
        }
        if self.leq(y, x) {
            return Some(y);
        }
        self.inf(&[x, y])
    }

    pub fn top(&self) -> Option<ElementId> {
        self.sup(&self.elements().collect::<Vec<_>>())
    }

    pub fn bottom(&self) -> Option<ElementId> {
        self.inf(&self.elements().collect::<Vec<_>>())
    }

    /// Nonempty, and every pair has an upper bound inside the set.
    pub fn is_directed(&self, xs: &[ElementId]) -> bool {
        if xs.is_empty() {
            return false;
        }
        xs.iter().all(|&a| {
            xs.iter()
                .all(|&b| xs.iter().any(|&c| self.leq(a, c) && self.leq(b, c)))
        })
    }

    pub fn is_down_closed(&self, xs: &[ElementId]) -> bool {
        let mut inside = vec![false; self.size()];
        for &x in xs {
            inside[x] = true;
        }
        xs.iter()
            .all(|&x| self.elements().all(|y| !self.leq(y, x) || inside[y]))
    }

    pub fn down_set(&self, x: ElementId) -> Vec<ElementId> {
        self.elements().filter(|&y| self.leq(y, x)).collect()
    }

    pub fn up_set(&self, x: ElementId) -> Vec<ElementId> {
        self.elements().filter(|&y| self.leq(x, y)).collect()
    }

    /// Every element of a finite poset is compact.
    pub fn compact_elements(&self) -> Vec<ElementId> {
        self.elements().collect()
    }

    pub fn is_order_preserving(&self, f: &[ElementId]) -> bool {
        f.len() == self.size()
            && self.elements().all(|x| {
                self.elements()
                    .all(|y| !self.leq(x, y) || self.leq(f[x], f[y]))
            })
    }

    /// A linear extension: `x` precedes `y` whenever `x < y`.
    pub fn linear_extension(&self) -> Vec<ElementId> {
        let mut order: Vec<ElementId> = self.elements().collect();
        order.sort_by_key(|&x| (self.down_set(x).len(), x));
        order
    }

    /// Covering pairs `(x, y)` of the Hasse diagram.
    pub fn covers(&self) -> Vec<(ElementId, ElementId)> {
        let mut out = Vec::new();
        for x in self.elements() {
            for y in self.elements() {
                if self.lt(x, y)
                    && !self
                        .elements()
                        .any(|z| self.lt(x, z) && self.lt(z, y))
                {
                    out.push((x, y));
                }
            }
        }
        out
    }

    pub fn is_chain(&self) -> bool {
        self.elements()
            .all(|x| self.elements().all(|y| self.comparable(x, y)))
    }

    pub fn flags(&self) -> PosetFlags {
        let n = self.size();
        let mut join = true;
        let mut meet = true;
        let mut bounded = true;
        for x in 0..n {
            for y in 0..n {
                let j = self.join(x, y);
                if j.is_none() {
                    join = false;
                    if !self.upper_bounds(&[x, y]).is_empty() {
                        bounded = false;
                    }
                }
                if self.meet(x, y).is_none() {
                    meet = false;
                }
            }
        }
        let top = self.top().is_some();
        let bottom = self.bottom().is_some();
        let near = n > 0 && join && top;
        PosetFlags {
            complete: near && bottom,
            near_sup_complete: near,
            bounded_complete: bounded,
            dcpo: true,
            bdcpo: true,
            bounded_above: top,
            join_semilattice: join,
            meet_semilattice: meet,
            algebraic: true,
        }
    }

    /// Graphviz rendering of the Hasse diagram.
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = format!("digraph \"{name}\" {{\n  rankdir=BT;\n");
        for x in self.elements() {
            s.push_str(&format!("  n{x} [label=\"{}\"];\n", self.labels[x].replace('"', "'")));
        }
        for (x, y) in self.covers() {
            s.push_str(&format!("  n{x} -> n{y};\n"));
        }
        s.push_str("}\n");
        s
    }
}

fn mask_label(m: usize, k: usize) -> String {
    let items: Vec<String> = (0..k).filter(|i| m >> i & 1 == 1).map(|i| i.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

/// All subsets of `0..n` as sorted vectors, smallest masks first.
pub fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    assert!(n < 32, "subset enumeration is limited to small carriers");
    (0u32..(1u32 << n)).map(move |m| (0..n).filter(|i| m >> i & 1 == 1).collect())
}

/// Members of the bitmask `m`.
pub fn mask_members(m: u64) -> Vec<usize> {
    (0..64).filter(|i| m >> i & 1 == 1).collect()
}
