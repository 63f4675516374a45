//! Which norms of the Burnside ring survive in the idempotent summands
//! `A(-)_(P)[e_L⁻¹]`.
//!
//! For a `P`-perfect class `L` and a pair `K ≤ H`, three conditions are
//! computed independently:
//!
//! * *star*: every conjugate `L' ≤ H` of `L` lies in `K`;
//! * *diamond*: `φ^Q(N_K^H R_K e_L) = 1` whenever `O^P(Q) ~ L`, `Q ≤ H`;
//! * *division*: `N_K^H(R_K e_L) · R_H e_L = R_H e_L`, i.e. the norm
//!   descends to the localization.
//!
//! [`NormAnalysis::verify_theorem_a`] checks that they agree everywhere.

mod green;
mod indexing;
mod report;

use std::sync::Arc;

use rayon::prelude::*;

pub use green::LocalizedGreenRing;
pub use indexing::IndexingSystem;
pub use report::{
    FactorReport, PairAdmissibility, RankRow, RestrictionExperiment, SplittingReport, TheoremAReport, TripleRecord,
};

use crate::burnside::{Burnside, BurnsideElement, GSet};
use crate::error::{Error, Result};
use crate::group::{ClassId, ResidualTable, SubgroupId, SubgroupLattice};
use crate::primes::PrimeSet;

/// A pair of subgroups `K ≤ H`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormPair {
    k: SubgroupId,
    h: SubgroupId,
}

impl NormPair {
    pub fn new(lattice: &SubgroupLattice, k: SubgroupId, h: SubgroupId) -> Result<Self> {
        if !lattice.is_subgroup(k, h) {
            return Err(Error::NotContained { inner: lattice.subgroup_label(k), outer: lattice.subgroup_label(h) });
        }
        Ok(NormPair { k, h })
    }

    pub fn k(&self) -> SubgroupId {
        self.k
    }

    pub fn h(&self) -> SubgroupId {
        self.h
    }
}

/// The two sides of the normality criterion for one class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NormalityCheck {
    pub is_normal: bool,
    pub has_all_norms_above: bool,
}

impl NormalityCheck {
    pub fn agrees(&self) -> bool {
        self.is_normal == self.has_all_norms_above
    }
}

/// Dress idempotents of `A(G)_(P)` and the norm-descent questions about them.
#[derive(Debug)]
pub struct NormAnalysis {
    burnside: Arc<Burnside>,
    residuals: ResidualTable,
    idempotents: Vec<(ClassId, BurnsideElement)>,
}

impl NormAnalysis {
    pub fn new(burnside: Arc<Burnside>, primes: &PrimeSet) -> Result<Self> {
        let residuals = burnside.lattice().residuals(primes)?;
        let idempotents = residuals
            .perfect_classes()
            .iter()
            .map(|&l| Ok((l, burnside.dress_idempotent(l, &residuals)?)))
            .collect::<Result<_>>()?;
        Ok(NormAnalysis { burnside, residuals, idempotents })
    }

    pub fn burnside(&self) -> &Arc<Burnside> {
        &self.burnside
    }

    pub fn lattice(&self) -> &Arc<SubgroupLattice> {
        self.burnside.lattice()
    }

    /// The prime set, normalized to the group order in all-primes mode.
    pub fn primes(&self) -> &PrimeSet {
        &self.residuals.primes
    }

    pub fn residuals(&self) -> &ResidualTable {
        &self.residuals
    }

    pub fn perfect_classes(&self) -> &[ClassId] {
        self.residuals.perfect_classes()
    }

    pub fn idempotents(&self) -> &[(ClassId, BurnsideElement)] {
        &self.idempotents
    }

    pub fn idempotent(&self, l: ClassId) -> Result<&BurnsideElement> {
        self.idempotents
            .iter()
            .find(|(c, _)| *c == l)
            .map(|(_, e)| e)
            .ok_or_else(|| Error::NotPPerfect(self.lattice().class(l).label.clone()))
    }

    pub fn pair(&self, k: SubgroupId, h: SubgroupId) -> Result<NormPair> {
        NormPair::new(self.lattice(), k, h)
    }

    /// Whether `O^P(Q)` lies in the class `l`.
    pub fn residual_in_class(&self, q: SubgroupId, l: ClassId) -> bool {
        self.lattice().class_of(self.residuals.residual(q)) == l
    }

    pub fn condition_star(&self, l: ClassId, pair: NormPair) -> bool {
        let lattice = self.lattice();
        lattice
            .class(l)
            .members
            .iter()
            .filter(|&&m| lattice.is_subgroup(m, pair.h))
            .all(|&m| lattice.is_subgroup(m, pair.k))
    }

    /// `N_K^H(R_K e)` for an element `e` over the whole group.
    pub fn norm_of_restriction(&self, e: &BurnsideElement, pair: NormPair) -> Result<BurnsideElement> {
        self.burnside.norm(&self.burnside.restrict(e, pair.k)?, pair.h)
    }

    pub fn condition_diamond(&self, l: ClassId, pair: NormPair) -> Result<bool> {
        let e = self.idempotent(l)?;
        let normed = self.norm_of_restriction(e, pair)?;
        let ring = self.burnside.ring(pair.h);
        Ok((0..ring.rank())
            .filter(|&i| self.residual_in_class(ring.representative(i), l))
            .all(|i| num_traits::One::is_one(&normed.marks()[i])))
    }

    pub fn norm_descends(&self, l: ClassId, pair: NormPair) -> Result<bool> {
        descends(&self.burnside, self.idempotent(l)?, pair)
    }

    /// Star, diamond and division for every `P`-perfect class and every pair
    /// up to simultaneous conjugacy.
    pub fn verify_theorem_a(&self) -> Result<TheoremAReport> {
        let lattice = self.lattice();
        let pairs = lattice.pair_representatives();
        let jobs: Vec<(ClassId, (SubgroupId, SubgroupId))> =
            self.perfect_classes().iter().flat_map(|&l| pairs.iter().map(move |&p| (l, p))).collect();
        let records = jobs
            .par_iter()
            .map(|&(l, (k, h))| {
                let pair = NormPair { k, h };
                Ok(TripleRecord {
                    l: lattice.class(l).label.clone(),
                    k: lattice.class(lattice.class_of(k)).label.clone(),
                    h: lattice.class(lattice.class_of(h)).label.clone(),
                    k_subgroup: lattice.subgroup_label(k),
                    h_subgroup: lattice.subgroup_label(h),
                    star: self.condition_star(l, pair),
                    diamond: self.condition_diamond(l, pair)?,
                    division: self.norm_descends(l, pair)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let verdict = records.iter().all(TripleRecord::agrees);
        Ok(TheoremAReport {
            group: lattice.group().label().to_string(),
            order: lattice.group().order(),
            primes: self.primes().to_string(),
            records,
            verdict,
        })
    }

    /// `I_L`: pairs satisfying star, with the indexing-system axioms checked.
    pub fn indexing_system(&self, l: ClassId) -> Result<IndexingSystem> {
        self.idempotent(l)?;
        let system = IndexingSystem::from_predicate(self.lattice().clone(), |k, h| self.condition_star(l, NormPair { k, h }));
        system.verify()?;
        Ok(system)
    }

    /// The intersection of all `I_L`, checked pair by pair against the
    /// direct description: `H/K` is admissible iff every `P`-perfect
    /// subgroup of `H` lies in `K`.
    pub fn shared_indexing_system(&self) -> Result<IndexingSystem> {
        let systems = self.perfect_classes().iter().map(|&l| self.indexing_system(l)).collect::<Result<Vec<_>>>()?;
        let meet = IndexingSystem::intersect(&systems)?;
        let direct = IndexingSystem::from_predicate(self.lattice().clone(), |k, h| self.all_perfect_subgroups_inside(k, h));
        if meet != direct {
            return Err(Error::Invariant("intersection of the I_L differs from the direct description".into()));
        }
        Ok(meet)
    }

    /// Every `P`-perfect subgroup of `h` is contained in `k`.
    pub fn all_perfect_subgroups_inside(&self, k: SubgroupId, h: SubgroupId) -> bool {
        let lattice = self.lattice();
        lattice
            .subgroups_of(h)
            .into_iter()
            .filter(|&s| self.residuals.residual(s) == s)
            .all(|s| lattice.is_subgroup(s, k))
    }

    /// `L` is normal iff every pair `K ≤ H` with `K` containing a conjugate
    /// of `L` satisfies star.
    pub fn normality_characterization(&self, l: ClassId) -> Result<NormalityCheck> {
        self.idempotent(l)?;
        let lattice = self.lattice();
        let rep = lattice.class(l).representative;
        let has_all_norms_above = lattice
            .pair_representatives()
            .into_iter()
            .filter(|&(k, _)| lattice.is_subconjugate(rep, k))
            .all(|(k, h)| self.condition_star(l, NormPair { k, h }));
        Ok(NormalityCheck { is_normal: lattice.is_normal(rep), has_all_norms_above })
    }

    pub fn localized_green_ring(&self, e: BurnsideElement) -> Result<LocalizedGreenRing> {
        LocalizedGreenRing::new(self.burnside.clone(), e, self.primes().clone())
    }
}

/// Whether `N_K^H` descends along the idempotent `e`.
pub(crate) fn descends(burnside: &Burnside, e: &BurnsideElement, pair: NormPair) -> Result<bool> {
    let r_h = burnside.restrict(e, pair.h)?;
    let normed = burnside.norm(&burnside.restrict(e, pair.k)?, pair.h)?;
    Ok(&normed * &r_h == r_h)
}

/// Whether a map of `H`-sets `f: X → Y` is admissible: for every point `x`,
/// the stabilizer pair `H_x ≤ H_{f(x)}` is admissible in `system`.
pub fn is_admissible_map(system: &IndexingSystem, x: &GSet, y: &GSet, f: &[usize]) -> Result<bool> {
    let lattice = system.lattice();
    if x.acting() != y.acting() {
        return Err(Error::NotEquivariant("source and target have different acting groups".into()));
    }
    if f.len() != x.size() || f.iter().any(|&v| v >= y.size()) {
        return Err(Error::NotEquivariant("point map does not go from source to target".into()));
    }
    for &g in lattice.subgroup(x.acting()).generators() {
        for p in 0..x.size() {
            if f[x.act(g, p)] != y.act(g, f[p]) {
                return Err(Error::NotEquivariant(format!("f(g·{p}) ≠ g·f({p}) for g = {}", lattice.group().perm(g))));
            }
        }
    }
    Ok((0..x.size()).all(|p| system.is_admissible(x.stabilizer(lattice, p), y.stabilizer(lattice, f[p]))))
}
