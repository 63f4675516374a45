use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{ElementSet, SubgroupId, SubgroupLattice};

/// An indexing system, stored as its admissible pairs `K ≤ H` (the
/// admissible transitive `H`-sets `H/K`). Arbitrary admissible `H`-sets are
/// the disjoint unions of admissible orbits.
#[derive(Debug, Clone)]
pub struct IndexingSystem {
    lattice: Arc<SubgroupLattice>,
    /// `admissible[h]` holds the ids `k` with `H/K` admissible.
    admissible: Vec<ElementSet>,
}

impl PartialEq for IndexingSystem {
    fn eq(&self, other: &Self) -> bool {
        same_group(&self.lattice, &other.lattice) && self.admissible == other.admissible
    }
}

fn same_group(a: &Arc<SubgroupLattice>, b: &Arc<SubgroupLattice>) -> bool {
    Arc::ptr_eq(a, b) || (a.group() == b.group() && a.len() == b.len())
}

impl IndexingSystem {
    /// Admits `(K, H)` for `K ≤ H` exactly when `admit(K, H)`. The result is
    /// not verified; see [`IndexingSystem::verify`].
    pub fn from_predicate(lattice: Arc<SubgroupLattice>, mut admit: impl FnMut(SubgroupId, SubgroupId) -> bool) -> Self {
        let n = lattice.len();
        let admissible = lattice
            .ids()
            .map(|h| ElementSet::from_indices(n, lattice.subgroups_of(h).into_iter().filter(|&k| admit(k, h)).map(|k| k.0)))
            .collect();
        IndexingSystem { lattice, admissible }
    }

    /// Every pair admissible.
    pub fn complete(lattice: Arc<SubgroupLattice>) -> Self {
        Self::from_predicate(lattice, |_, _| true)
    }

    /// Only the reflexive pairs.
    pub fn minimal(lattice: Arc<SubgroupLattice>) -> Self {
        Self::from_predicate(lattice, |k, h| k == h)
    }

    pub fn lattice(&self) -> &Arc<SubgroupLattice> {
        &self.lattice
    }

    pub fn is_admissible(&self, k: SubgroupId, h: SubgroupId) -> bool {
        self.admissible[h.0].contains(k.0)
    }

    /// All admissible pairs `(K, H)`, by `H` then `K`.
    pub fn pairs(&self) -> Vec<(SubgroupId, SubgroupId)> {
        self.admissible
            .iter()
            .enumerate()
            .flat_map(|(h, ks)| ks.iter().map(move |k| (SubgroupId(k), SubgroupId(h))))
            .collect()
    }

    /// Admissible pairs with `K ≠ H`, one per conjugacy class of pairs.
    pub fn proper_pair_representatives(&self) -> Vec<(SubgroupId, SubgroupId)> {
        self.lattice.pair_representatives().into_iter().filter(|&(k, h)| k != h && self.is_admissible(k, h)).collect()
    }

    pub fn is_complete(&self) -> bool {
        self.lattice.all_pairs().into_iter().all(|(k, h)| self.is_admissible(k, h))
    }

    pub fn is_minimal(&self) -> bool {
        self.pairs().into_iter().all(|(k, h)| k == h)
    }

    pub fn is_contained_in(&self, other: &IndexingSystem) -> bool {
        self.admissible.iter().zip(&other.admissible).all(|(a, b)| a.is_subset(b))
    }

    /// Levelwise intersection, verified afterwards.
    pub fn intersect(systems: &[IndexingSystem]) -> Result<IndexingSystem> {
        let first = systems.first().ok_or_else(|| Error::Invariant("intersection of no indexing systems".into()))?;
        if systems.iter().any(|s| !same_group(&s.lattice, &first.lattice)) {
            return Err(Error::MixedGroups);
        }
        let mut out = first.clone();
        for s in &systems[1..] {
            for (a, b) in out.admissible.iter_mut().zip(&s.admissible) {
                *a = a.intersection(b);
            }
        }
        out.verify()?;
        Ok(out)
    }

    /// Checks reflexivity and closure under conjugation, composition and
    /// pullback along subgroup inclusions.
    pub fn verify(&self) -> Result<()> {
        let lattice = &self.lattice;
        let group = lattice.group();
        let label = |s: SubgroupId| lattice.subgroup_label(s);
        let fail = |property: &'static str, detail: String| Err(Error::IndexingSystem { property, detail });

        for h in lattice.ids() {
            if !self.is_admissible(h, h) {
                return fail("reflexivity", label(h));
            }
        }
        let pairs = self.pairs();
        for &(k, h) in &pairs {
            for &g in group.generators() {
                let (gk, gh) = (lattice.conjugate_id(k, g), lattice.conjugate_id(h, g));
                if !self.is_admissible(gk, gh) {
                    return fail("conjugation", format!("({}, {}) by {}", label(k), label(h), group.perm(g)));
                }
            }
        }
        for &(a, b) in &pairs {
            for c in lattice.ids() {
                if self.is_admissible(b, c) && !self.is_admissible(a, c) {
                    return fail("composition", format!("{} ≤ {} ≤ {}", label(a), label(b), label(c)));
                }
            }
        }
        for &(k, h) in &pairs {
            if k == h {
                continue;
            }
            let (hs, ks) = (lattice.subgroup(h), lattice.subgroup(k));
            for a in lattice.subgroups_of(h) {
                for x in group.double_cosets(lattice.subgroup(a), ks, hs)? {
                    let meet = lattice.intersection_id(a, lattice.conjugate_id(k, x));
                    if !self.is_admissible(meet, a) {
                        return fail(
                            "pullback",
                            format!("({}, {}) restricted to {}", label(k), label(h), label(a)),
                        );
                    }
                }
            }
        }
        Ok(())
    }
}
