use order_core::{ElementId, Error, Result};

use crate::magma::OrderedMagma;

/// Units, invertibles, idempotents and friends.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistinguishedSets {
    /// Elements whose left and right translations are poset automorphisms.
    pub u: Vec<ElementId>,
    /// Elements with a two-sided inverse (empty without a unit).
    pub inv: Vec<ElementId>,
    pub idem: Vec<ElementId>,
    /// Idempotents above the unit; `None` without a unit.
    pub r: Option<Vec<ElementId>>,
    /// Whether the compact elements form a submagma.
    pub compacts_closed: bool,
}

impl OrderedMagma {
    fn is_automorphism(&self, f: &[ElementId]) -> bool {
        let mut hit = vec![false; self.size()];
        for &z in f {
            hit[z] = true;
        }
        hit.iter().all(|&h| h)
            && self
                .elements()
                .all(|x| self.elements().all(|y| self.leq(x, y) == self.leq(f[x], f[y])))
    }

    pub fn is_translation_automorphism(&self, a: ElementId) -> bool {
        let left: Vec<ElementId> = self.elements().map(|y| self.mul(a, y)).collect();
        let right: Vec<ElementId> = self.elements().map(|y| self.mul(y, a)).collect();
        self.is_automorphism(&left) && self.is_automorphism(&right)
    }

    pub fn invertibles(&self) -> Vec<ElementId> {
        let Some(one) = self.unit() else { return vec![] };
        self.elements()
            .filter(|&u| {
                self.elements()
                    .any(|v| self.mul(u, v) == one && self.mul(v, u) == one)
            })
            .collect()
    }

    pub fn idempotents(&self) -> Vec<ElementId> {
        self.elements().filter(|&x| self.mul(x, x) == x).collect()
    }

    /// `R(M)`: idempotents above the unit.
    pub fn r_set(&self) -> Result<Vec<ElementId>> {
        let one = self
            .unit()
            .ok_or_else(|| Error::hypothesis("R(M) requires a unit"))?;
        Ok(self
            .elements()
            .filter(|&x| self.mul(x, x) == x && self.leq(one, x))
            .collect())
    }

    pub fn distinguished_sets(&self) -> Result<DistinguishedSets> {
        let u: Vec<ElementId> = self
            .elements()
            .filter(|&a| self.is_translation_automorphism(a))
            .collect();
        let inv = self.invertibles();
        if let Some(x) = inv.iter().find(|x| !u.contains(x)) {
            return Err(Error::internal(format!(
                "invertible element {} is not in U(M)",
                self.label(*x)
            )));
        }
        Ok(DistinguishedSets {
            u,
            inv,
            idem: self.idempotents(),
            r: self.r_set().ok(),
            // all elements of a finite carrier are compact
            compacts_closed: true,
        })
    }

    /// `xy = ⋁{ay : a∈Σ, a≤x} = ⋁{xb : b∈Σ, b≤y}` for all `x, y`.
    pub fn is_sup_spanning(&self, sigma: &[ElementId]) -> Result<bool> {
        self.poset().check_subset(sigma)?;
        Ok(self.elements().all(|x| {
            self.elements().all(|y| {
                let left: Vec<ElementId> = sigma
                    .iter()
                    .filter(|&&a| self.leq(a, x))
                    .map(|&a| self.mul(a, y))
                    .collect();
                let right: Vec<ElementId> = sigma
                    .iter()
                    .filter(|&&b| self.leq(b, y))
                    .map(|&b| self.mul(x, b))
                    .collect();
                let xy = Some(self.mul(x, y));
                self.sup(&left) == xy && self.sup(&right) == xy
            })
        }))
    }
}
