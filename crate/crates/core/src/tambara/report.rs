use std::fmt::Write;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{NormAnalysis, NormPair};
use crate::burnside::BurnsideElement;
use crate::error::Result;
use crate::group::{ClassId, SubgroupId};
use crate::rational;

/// One `(L, K ≤ H)` triple. `k` and `h` are class labels; `k_subgroup` and
/// `h_subgroup` pin down the pair itself.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleRecord {
    #[serde(rename = "L")]
    pub l: String,
    #[serde(rename = "K")]
    pub k: String,
    #[serde(rename = "H")]
    pub h: String,
    pub k_subgroup: String,
    pub h_subgroup: String,
    pub star: bool,
    pub diamond: bool,
    pub division: bool,
}

impl TripleRecord {
    pub fn agrees(&self) -> bool {
        self.star == self.diamond && self.diamond == self.division
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremAReport {
    pub group: String,
    pub order: usize,
    pub primes: String,
    pub records: Vec<TripleRecord>,
    pub verdict: bool,
}

impl TheoremAReport {
    pub fn counterexamples(&self) -> impl Iterator<Item = &TripleRecord> {
        self.records.iter().filter(|r| !r.agrees())
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "norm descent for {} (order {}), P = {}", self.group, self.order, self.primes);
        let _ = writeln!(out, "{:<8} {:<12} {:<12} {:>5} {:>8} {:>9}", "L", "K", "H", "star", "diamond", "division");
        for r in &self.records {
            let _ = writeln!(
                out,
                "{:<8} {:<12} {:<12} {:>5} {:>8} {:>9}{}",
                r.l,
                r.k_subgroup,
                r.h_subgroup,
                yes_no(r.star),
                yes_no(r.diamond),
                yes_no(r.division),
                if r.agrees() { "" } else { "   <-- disagreement" }
            );
        }
        let _ = writeln!(out, "verdict: {}", if self.verdict { "all three conditions agree" } else { "FAILED" });
        out
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairAdmissibility {
    pub k: String,
    pub h: String,
    pub k_subgroup: String,
    pub h_subgroup: String,
    pub admissible: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorReport {
    pub l: String,
    pub generators: String,
    pub normal: bool,
    pub marks: Vec<String>,
    pub orbit_coefficients: Vec<String>,
    pub p_local: bool,
    /// Localized rank at each class representative, in class order.
    pub ranks: Vec<usize>,
    /// Proper pairs up to conjugacy.
    pub admissibility: Vec<PairAdmissibility>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankRow {
    pub h: String,
    pub rank: usize,
    pub factor_ranks: Vec<usize>,
    pub additive: bool,
}

/// How many primitive idempotents of `A(H)_(P)` sum to `R_H(e_L)`, against
/// the number of `H`-classes inside the class of `L`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictionExperiment {
    pub l: String,
    pub h: String,
    pub primitive_summands: usize,
    pub predicted: usize,
    pub summands_add_up: bool,
    pub agrees: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplittingReport {
    pub group: String,
    pub order: usize,
    pub primes: String,
    pub classes: Vec<String>,
    pub factors: Vec<FactorReport>,
    pub sum_is_one: bool,
    pub orthogonal: bool,
    pub ranks: Vec<RankRow>,
    /// Proper pairs of the shared indexing system, up to conjugacy.
    pub shared_admissible: Vec<PairAdmissibility>,
    pub shared_norms_descend: bool,
    pub restriction_experiment: Vec<RestrictionExperiment>,
    pub verdict: bool,
}

impl SplittingReport {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "idempotent splitting of A({})_(P), order {}, P = {}", self.group, self.order, self.primes);
        let _ = writeln!(out, "classes: {}", self.classes.join(" "));
        for f in &self.factors {
            let _ = writeln!(out, "\ne_L for L = {} [{}]{}", f.l, f.generators, if f.normal { " (normal)" } else { "" });
            let _ = writeln!(out, "  marks:      {}", f.marks.join(" "));
            let _ = writeln!(out, "  orbit basis: {}", f.orbit_coefficients.join(" "));
            let _ = writeln!(out, "  P-local: {}", yes_no(f.p_local));
            let ranks: Vec<String> = f.ranks.iter().map(usize::to_string).collect();
            let _ = writeln!(out, "  localized ranks: {}", ranks.join(" "));
            let admitted: Vec<String> =
                f.admissibility.iter().filter(|p| p.admissible).map(|p| format!("{} <= {}", p.k_subgroup, p.h_subgroup)).collect();
            let _ = writeln!(out, "  proper admissible pairs: {}", if admitted.is_empty() { "none".into() } else { admitted.join(", ") });
        }
        let _ = writeln!(out, "\nsum of idempotents is 1: {}", yes_no(self.sum_is_one));
        let _ = writeln!(out, "pairwise orthogonal: {}", yes_no(self.orthogonal));
        for r in &self.ranks {
            let parts: Vec<String> = r.factor_ranks.iter().map(usize::to_string).collect();
            let _ = writeln!(out, "rank at {:<8} {} = {}{}", r.h, r.rank, parts.join("+"), if r.additive { "" } else { "  <-- mismatch" });
        }
        let shared: Vec<String> =
            self.shared_admissible.iter().filter(|p| p.admissible).map(|p| format!("{} <= {}", p.k_subgroup, p.h_subgroup)).collect();
        let _ = writeln!(out, "shared proper admissible pairs: {}", if shared.is_empty() { "none".into() } else { shared.join(", ") });
        let _ = writeln!(out, "shared norms descend in every factor: {}", yes_no(self.shared_norms_descend));
        let disagreements = self.restriction_experiment.iter().filter(|e| !e.agrees).count();
        let _ = writeln!(
            out,
            "restricted idempotents split as predicted: {} of {}",
            self.restriction_experiment.len() - disagreements,
            self.restriction_experiment.len()
        );
        let _ = writeln!(out, "verdict: {}", if self.verdict { "ok" } else { "FAILED" });
        out
    }
}

impl NormAnalysis {
    fn pair_record(&self, k: SubgroupId, h: SubgroupId, admissible: bool) -> PairAdmissibility {
        let lattice = self.lattice();
        PairAdmissibility {
            k: lattice.class(lattice.class_of(k)).label.clone(),
            h: lattice.class(lattice.class_of(h)).label.clone(),
            k_subgroup: lattice.subgroup_label(k),
            h_subgroup: lattice.subgroup_label(h),
            admissible,
        }
    }

    /// Checks the splitting `A(-)_(P) ≅ ∏ e_L·A(-)_(P)` and tabulates the
    /// norms each factor keeps.
    pub fn splitting_report(&self) -> Result<SplittingReport> {
        let lattice = self.lattice();
        let burnside = self.burnside();
        let top = burnside.top();
        let primes = self.primes();
        let pairs = lattice.pair_representatives();
        let class_reps: Vec<SubgroupId> = lattice.classes().iter().map(|c| c.representative).collect();

        let mut factors = Vec::new();
        let mut rings = Vec::new();
        for (l, e) in self.idempotents() {
            let ring = self.localized_green_ring(e.clone())?;
            let system = self.indexing_system(*l)?;
            let rep = lattice.class(*l).representative;
            factors.push(FactorReport {
                l: lattice.class(*l).label.clone(),
                generators: lattice.subgroup(rep).describe(lattice.group()),
                normal: lattice.is_normal(rep),
                marks: e.marks().iter().map(rational::format).collect(),
                orbit_coefficients: burnside.to_orbit_basis(e).iter().map(rational::format).collect(),
                p_local: burnside.is_p_local(e, primes),
                ranks: class_reps.iter().map(|&h| ring.rank(h)).collect(),
                admissibility: pairs
                    .iter()
                    .filter(|(k, h)| k != h)
                    .map(|&(k, h)| self.pair_record(k, h, system.is_admissible(k, h)))
                    .collect(),
            });
            rings.push(ring);
        }

        let mut sum = burnside.zero(top);
        for (_, e) in self.idempotents() {
            sum = &sum + e;
        }
        let sum_is_one = sum.is_one();
        let orthogonal = self.idempotents().iter().enumerate().all(|(i, (_, a))| {
            self.idempotents().iter().skip(i + 1).all(|(_, b)| (a * b).is_zero())
        });

        let ranks = class_reps
            .iter()
            .map(|&h| {
                let rank = burnside.ring(h).rank();
                let factor_ranks: Vec<usize> = rings.iter().map(|r| r.rank(h)).collect();
                RankRow {
                    h: lattice.class(lattice.class_of(h)).label.clone(),
                    rank,
                    additive: factor_ranks.iter().sum::<usize>() == rank,
                    factor_ranks,
                }
            })
            .collect::<Vec<_>>();

        let shared = self.shared_indexing_system()?;
        let mut shared_norms_descend = true;
        for &(k, h) in &pairs {
            if !shared.is_admissible(k, h) {
                continue;
            }
            for (l, _) in self.idempotents() {
                if !self.norm_descends(*l, NormPair { k, h })? {
                    shared_norms_descend = false;
                }
            }
        }
        let shared_admissible =
            pairs.iter().filter(|(k, h)| k != h).map(|&(k, h)| self.pair_record(k, h, shared.is_admissible(k, h))).collect();

        let mut restriction_experiment = Vec::new();
        for (l, e) in self.idempotents() {
            for &h in &class_reps {
                restriction_experiment.push(self.restriction_experiment(*l, e, h)?);
            }
        }

        let verdict = sum_is_one
            && orthogonal
            && ranks.iter().all(|r| r.additive)
            && shared_norms_descend
            && factors.iter().all(|f| f.p_local);
        Ok(SplittingReport {
            group: lattice.group().label().to_string(),
            order: lattice.group().order(),
            primes: primes.to_string(),
            classes: lattice.classes().iter().map(|c| c.label.clone()).collect(),
            factors,
            sum_is_one,
            orthogonal,
            ranks,
            shared_admissible,
            shared_norms_descend,
            restriction_experiment,
            verdict,
        })
    }

    /// Decomposes `R_H(e_L)` into the primitive idempotents of `A(H)_(P)`.
    fn restriction_experiment(&self, l: ClassId, e: &BurnsideElement, h: SubgroupId) -> Result<RestrictionExperiment> {
        let lattice = self.lattice();
        let burnside = self.burnside();
        let restricted = burnside.restrict(e, h)?;
        let ring = burnside.ring(h);
        let mut total = burnside.zero(h);
        let mut summands = 0;
        for local_class in ring.classes() {
            let rep = local_class[0];
            if self.residuals().residual(rep) != rep {
                continue;
            }
            // primitive idempotent of A(H)_(P) for the H-class of rep
            let marks = (0..ring.rank())
                .map(|i| {
                    let r = self.residuals().residual(ring.representative(i));
                    if local_class.contains(&r) {
                        rational::one()
                    } else {
                        rational::zero()
                    }
                })
                .collect();
            let primitive = burnside.from_marks(h, marks)?;
            if &primitive * &restricted == primitive {
                summands += 1;
                total = &total + &primitive;
            }
        }
        let predicted = ring.classes().iter().filter(|c| lattice.class_of(c[0]) == l).count();
        let summands_add_up = total == restricted;
        debug_assert!(total.marks().iter().all(|m| m.is_zero() || m.is_one()));
        Ok(RestrictionExperiment {
            l: lattice.class(l).label.clone(),
            h: lattice.class(lattice.class_of(h)).label.clone(),
            primitive_summands: summands,
            predicted,
            summands_add_up,
            agrees: summands_add_up && summands == predicted,
        })
    }
}
