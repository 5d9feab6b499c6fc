use order_core::{subsets, ElementId, Error, Result};

use crate::magma::OrderedMagma;

/// One flag per row of the classification table, plus algebraic extras.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct ClassificationProfile {
    pub sup_magma: bool,
    pub near_sup_magma: bool,
    pub dcpo_magma: bool,
    pub bounded_complete: bool,
    pub bounded_above: bool,
    pub with_annihilator: bool,
    pub prequantale: bool,
    pub near_prequantale: bool,
    pub semiprequantale: bool,
    pub prequantic_semilattice: bool,
    pub multiplicative_semilattice: bool,
    pub scott_topological: bool,
    pub residuated: bool,
    pub near_residuated: bool,
    pub associative: bool,
    pub commutative: bool,
    pub unital: bool,
    pub precoherent: bool,
}

/// Arrows of the class diagrams, as `premise ⇒ conclusion` over abbreviations.
pub const IMPLICATIONS: &[(&str, &str)] = &[
    ("p", "r+ns"),
    ("p", "np+s"),
    ("r+ns", "r+d"),
    ("r+ns", "np"),
    ("np+s", "np"),
    ("np+s", "t+s"),
    ("r+d", "r"),
    ("r+d", "nr+d"),
    ("np", "nr+d"),
    ("np", "t+ns"),
    ("t+s", "t+ns"),
    ("t+s", "s"),
    ("r", "nr"),
    ("nr+d", "nr"),
    ("nr+d", "t+d"),
    ("t+ns", "t+d"),
    ("t+ns", "ns"),
    ("s", "ns"),
    ("nr", "t"),
    ("t+d", "t"),
    ("t+d", "d"),
    ("ns", "d"),
    ("p", "ps+t+b"),
    ("p", "ps+s"),
    ("ps+t+b", "t+a+b"),
    ("ps+t+b", "ps+b"),
    ("ps+t+b", "ms+t+b"),
    ("ps+s", "ps+b"),
    ("ps+s", "ms+ns"),
    ("np", "ms+t+b"),
    ("np", "ms+ns"),
    ("np", "sp"),
    ("t+a+b", "a+b"),
    ("t+a+b", "t+b"),
    ("ps", "a"),
    ("ps", "ms"),
    ("ps+b", "ms+b"),
    ("ms+t+b", "ms+b"),
    ("ms+t+b", "t+b"),
    ("ms+t+b", "ms+t"),
    ("ms+ns", "ms+b"),
    ("ms+ns", "ms+bc"),
    ("sp", "ms+t"),
    ("sp", "ms+bc"),
    ("ms+bc", "ms"),
    ("ms+t", "ms"),
    ("ms+t", "t"),
    ("a+b", "b"),
    ("ms+b", "ms"),
    ("ms+b", "b"),
    ("t+b", "t"),
];

impl ClassificationProfile {
    /// Looks a flag up by its abbreviation (`p`, `np`, `ms`, ...).
    pub fn flag(&self, abbr: &str) -> Option<bool> {
        Some(match abbr {
            "s" => self.sup_magma,
            "ns" => self.near_sup_magma,
            "d" => self.dcpo_magma,
            "bc" => self.bounded_complete,
            "b" => self.bounded_above,
            "a" => self.with_annihilator,
            "p" => self.prequantale,
            "np" => self.near_prequantale,
            "sp" => self.semiprequantale,
            "ps" => self.prequantic_semilattice,
            "ms" => self.multiplicative_semilattice,
            "t" => self.scott_topological,
            "r" => self.residuated,
            "nr" => self.near_residuated,
            _ => return None,
        })
    }

    /// Whether every flag in a `+`-joined node such as `"r+ns"` holds.
    pub fn holds(&self, node: &str) -> bool {
        node.split('+')
            .all(|a| self.flag(a).expect("known abbreviation"))
    }

    /// Diagram arrows whose premise holds but conclusion fails.
    pub fn implication_violations(&self) -> Vec<(&'static str, &'static str)> {
        IMPLICATIONS
            .iter()
            .copied()
            .filter(|(l, r)| self.holds(l) && !self.holds(r))
            .collect()
    }

    /// The diagram nodes satisfied by this profile.
    pub fn diagram_position(&self) -> Vec<&'static str> {
        let mut nodes: Vec<&'static str> = IMPLICATIONS
            .iter()
            .flat_map(|(l, r)| [*l, *r])
            .filter(|n| self.holds(n))
            .collect();
        nodes.sort_unstable();
        nodes.dedup();
        nodes
    }

    pub fn is_near_multiplicative_lattice(&self) -> bool {
        self.near_prequantale && self.associative && self.commutative && self.unital
    }

    pub fn is_multiplicative_lattice(&self) -> bool {
        self.prequantale && self.associative && self.commutative && self.unital
    }

    pub fn entries(&self) -> Vec<(&'static str, bool)> {
        vec![
            ("sup-magma", self.sup_magma),
            ("near-sup-magma", self.near_sup_magma),
            ("dcpo-magma", self.dcpo_magma),
            ("bounded-complete", self.bounded_complete),
            ("bounded-above", self.bounded_above),
            ("with-annihilator", self.with_annihilator),
            ("prequantale", self.prequantale),
            ("near-prequantale", self.near_prequantale),
            ("semiprequantale", self.semiprequantale),
            ("prequantic-semilattice", self.prequantic_semilattice),
            ("multiplicative-semilattice", self.multiplicative_semilattice),
            ("scott-topological", self.scott_topological),
            ("residuated", self.residuated),
            ("near-residuated", self.near_residuated),
            ("associative", self.associative),
            ("commutative", self.commutative),
            ("unital", self.unital),
            ("precoherent", self.precoherent),
        ]
    }
}

/// Carriers up to this size also get the subset-pair check `⋁(XY) = ⋁X⋁Y`.
const PAIR_SCAN_LIMIT: usize = 7;
/// Carriers up to this size also get the single-subset distributivity check.
const SUBSET_SCAN_LIMIT: usize = 12;

impl OrderedMagma {
    /// `a(x ∨ y) = ax ∨ ay` and `(x ∨ y)a = xa ∨ ya` wherever `x ∨ y` exists.
    pub fn binary_distributive(&self) -> bool {
        let p = self.poset();
        self.elements().all(|x| {
            self.elements().all(|y| match p.join(x, y) {
                None => true,
                Some(j) => self.elements().all(|a| {
                    p.join(self.mul(a, x), self.mul(a, y)) == Some(self.mul(a, j))
                        && p.join(self.mul(x, a), self.mul(y, a)) == Some(self.mul(j, a))
                }),
            })
        })
    }

    /// The least element exists and annihilates: `⋁(X∅) = ⋁X ⋁∅`.
    fn bottom_annihilates(&self) -> bool {
        self.annihilator().is_some()
    }

    /// `a⋁X = ⋁(aX)` and `(⋁X)a = ⋁(Xa)` for every subset `X` accepted by
    /// `which`, with all the suprema required to exist.
    fn subset_distributive(&self, which: impl Fn(&[ElementId]) -> bool) -> bool {
        let n = self.size();
        subsets(n).filter(|s| which(s)).all(|s| match self.sup(&s) {
            None => false,
            Some(j) => self.elements().all(|a| {
                let left: Vec<ElementId> = s.iter().map(|&x| self.mul(a, x)).collect();
                let right: Vec<ElementId> = s.iter().map(|&x| self.mul(x, a)).collect();
                self.sup(&left) == Some(self.mul(a, j)) && self.sup(&right) == Some(self.mul(j, a))
            }),
        })
    }

    /// `⋁(XY) = ⋁X ⋁Y` for all pairs of subsets accepted by `which`.
    fn pair_distributive(&self, which: impl Fn(&[ElementId]) -> bool) -> bool {
        let n = self.size();
        let family: Vec<Vec<ElementId>> = subsets(n).filter(|s| which(s)).collect();
        family.iter().all(|xs| {
            family.iter().all(|ys| {
                let (Some(a), Some(b)) = (self.sup(xs), self.sup(ys)) else {
                    return false;
                };
                self.sup(&self.product_set(xs, ys)) == Some(self.mul(a, b))
            })
        })
    }

    pub fn is_residuated(&self) -> bool {
        self.elements().all(|x| {
            self.elements()
                .all(|a| self.residual_left(x, a).is_some() && self.residual_right(a, x).is_some())
        })
    }

    pub fn is_near_residuated(&self) -> bool {
        self.elements().all(|x| {
            self.elements().all(|a| {
                let l_nonempty = self.elements().any(|z| self.leq(self.mul(z, a), x));
                let r_nonempty = self.elements().any(|z| self.leq(self.mul(a, z), x));
                (!l_nonempty || self.residual_left(x, a).is_some())
                    && (!r_nonempty || self.residual_right(a, x).is_some())
            })
        })
    }

    /// Prequantale test without cross-validation (used by the cross-checks).
    fn prequantale_direct(&self) -> bool {
        let f = self.poset().flags();
        f.complete && self.binary_distributive() && self.bottom_annihilates()
    }

    /// Decides every flag, cross-validating each one that has an
    /// independent characterization.  A disagreement is an internal error.
    pub fn classify(&self) -> Result<ClassificationProfile> {
        let n = self.size();
        if n > order_core::ENUMERATION_CAP {
            return Err(Error::TooLarge { size: n, cap: order_core::ENUMERATION_CAP });
        }
        let pf = self.poset().flags();
        let dist = self.binary_distributive();
        let residuated = self.is_residuated();
        let near_residuated = self.is_near_residuated();

        let prequantale = self.prequantale_direct();
        let near_prequantale = pf.near_sup_complete && dist;
        let semiprequantale = pf.join_semilattice && pf.bounded_complete && dist && n > 0;
        let multiplicative_semilattice = pf.join_semilattice && n > 0 && dist;
        let prequantic_semilattice = multiplicative_semilattice && self.bottom_annihilates();

        // complete and residuated
        if prequantale != (pf.complete && residuated) {
            return Err(Error::internal(format!(
                "prequantale characterizations disagree (direct {prequantale}, complete+residuated {})",
                pf.complete && residuated
            )));
        }
        // near sup-complete and near residuated
        if near_prequantale != (pf.near_sup_complete && near_residuated) {
            return Err(Error::internal(format!(
                "near prequantale characterizations disagree (direct {near_prequantale}, near-sup+near-residuated {})",
                pf.near_sup_complete && near_residuated
            )));
        }
        // M is a near prequantale iff M with a fresh annihilator is a prequantale
        if n > 0 && near_prequantale != self.adjoin_annihilator().prequantale_direct() {
            return Err(Error::internal(
                "near prequantale disagrees with the prequantale test on the annihilator extension",
            ));
        }
        if n <= SUBSET_SCAN_LIMIT {
            let all = pf.complete && self.subset_distributive(|_| true);
            if all != prequantale {
                return Err(Error::internal("prequantale disagrees with the subset scan"));
            }
            let nonempty = pf.near_sup_complete && self.subset_distributive(|s| !s.is_empty());
            if nonempty != near_prequantale {
                return Err(Error::internal("near prequantale disagrees with the subset scan"));
            }
        }
        if n <= PAIR_SCAN_LIMIT {
            if self.pair_distributive(|_| true) != prequantale {
                return Err(Error::internal("prequantale disagrees with the pair scan"));
            }
            if self.pair_distributive(|s| !s.is_empty()) != near_prequantale {
                return Err(Error::internal("near prequantale disagrees with the pair scan"));
            }
        }

        Ok(ClassificationProfile {
            sup_magma: pf.complete,
            near_sup_magma: pf.near_sup_complete,
            dcpo_magma: pf.dcpo,
            bounded_complete: pf.bounded_complete,
            bounded_above: pf.bounded_above,
            with_annihilator: self.annihilator().is_some(),
            prequantale,
            near_prequantale,
            semiprequantale,
            prequantic_semilattice,
            multiplicative_semilattice,
            // directed subsets of a finite poset have maxima
            scott_topological: true,
            residuated,
            near_residuated,
            associative: self.is_associative(),
            commutative: self.is_commutative(),
            unital: self.unit().is_some(),
            // every element is compact, so K(M) = M is a submagma
            precoherent: pf.algebraic,
        })
    }

    /// Multiplication preserves directed suprema; automatic on finite carriers.
    pub fn is_scott_topological(&self) -> bool {
        true
    }
}
