use std::sync::Arc;

use num_traits::One;

use super::{descends, NormPair};
use crate::burnside::{Burnside, BurnsideElement};
use crate::error::{Error, Result};
use crate::group::SubgroupId;
use crate::primes::PrimeSet;

/// The summand `e · A(-)_(P)` of the Burnside Green ring cut out by an
/// idempotent `e ∈ A(G)_(P)`.
///
/// Its value at `H` is `R_H(e) · A(H)_(P)`, free on the `H`-classes `Q` with
/// `φ^Q(R_H e) = 1`. Restrictions and transfers are the global ones
/// multiplied by the restricted idempotent; norms exist only on pairs along
/// which they descend.
#[derive(Debug)]
pub struct LocalizedGreenRing {
    burnside: Arc<Burnside>,
    idempotent: BurnsideElement,
    primes: PrimeSet,
    /// Per subgroup id: positions of the unit marks of `R_H(e)`.
    basis: Vec<Vec<usize>>,
}

impl LocalizedGreenRing {
    pub fn new(burnside: Arc<Burnside>, idempotent: BurnsideElement, primes: PrimeSet) -> Result<Self> {
        if idempotent.level() != burnside.top() {
            return Err(Error::LevelMismatch {
                expected: burnside.lattice().subgroup_label(burnside.top()),
                found: burnside.lattice().subgroup_label(idempotent.level()),
            });
        }
        if &idempotent * &idempotent != idempotent {
            return Err(Error::NotIdempotent);
        }
        if !burnside.is_p_local(&idempotent, &primes) {
            return Err(Error::NotPLocal);
        }
        let basis = burnside
            .lattice()
            .ids()
            .map(|h| {
                let r = burnside.restrict(&idempotent, h).expect("subgroup of the whole group");
                r.marks().iter().enumerate().filter(|(_, m)| m.is_one()).map(|(i, _)| i).collect()
            })
            .collect();
        Ok(LocalizedGreenRing { burnside, idempotent, primes, basis })
    }

    pub fn idempotent(&self) -> &BurnsideElement {
        &self.idempotent
    }

    pub fn primes(&self) -> &PrimeSet {
        &self.primes
    }

    /// `R_H(e)`, the unit of the value at `H`.
    pub fn unit(&self, h: SubgroupId) -> BurnsideElement {
        self.burnside.restrict(&self.idempotent, h).expect("subgroup of the whole group")
    }

    /// Positions (in the class order of `A(H)`) spanning the value at `H`.
    pub fn basis(&self, h: SubgroupId) -> &[usize] {
        &self.basis[h.0]
    }

    /// Rank of the value at `H` as a free `Z_(P)`-module.
    pub fn rank(&self, h: SubgroupId) -> usize {
        self.basis[h.0].len()
    }

    /// The localization map `A(H) → R_H(e)·A(H)`.
    pub fn localize(&self, a: &BurnsideElement) -> BurnsideElement {
        &self.unit(a.level()) * a
    }

    /// `R̃(R_H(e)·a) = R_K(e)·R^H_K(a)`.
    pub fn restrict(&self, a: &BurnsideElement, k: SubgroupId) -> Result<BurnsideElement> {
        Ok(&self.unit(k) * &self.burnside.restrict(a, k)?)
    }

    /// `T̃(R_K(e)·b) = R_H(e)·T_K^H(b)`.
    pub fn transfer(&self, b: &BurnsideElement, h: SubgroupId) -> Result<BurnsideElement> {
        Ok(&self.unit(h) * &self.burnside.transfer(b, h)?)
    }

    pub fn conjugate(&self, a: &BurnsideElement, g: usize) -> BurnsideElement {
        self.localize(&self.burnside.conjugate(a, g))
    }

    pub fn multiply(&self, a: &BurnsideElement, b: &BurnsideElement) -> BurnsideElement {
        &self.localize(a) * &self.localize(b)
    }

    pub fn norm_descends(&self, k: SubgroupId, h: SubgroupId) -> Result<bool> {
        descends(&self.burnside, &self.idempotent, NormPair::new(self.burnside.lattice(), k, h)?)
    }

    /// `Ñ(R_K(e)·b) = R_H(e)·N_K^H(b)`, only where the norm descends.
    pub fn norm(&self, b: &BurnsideElement, h: SubgroupId) -> Result<BurnsideElement> {
        let k = b.level();
        if !self.norm_descends(k, h)? {
            let lattice = self.burnside.lattice();
            return Err(Error::NormNotAdmissible { k: lattice.subgroup_label(k), h: lattice.subgroup_label(h) });
        }
        Ok(&self.unit(h) * &self.burnside.norm(b, h)?)
    }
}
