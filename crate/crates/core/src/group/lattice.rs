//! The subgroup lattice of a finite group: every subgroup, the conjugacy
//! classes, and the `P`-residual table.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use super::{ElementSet, FiniteGroup, Subgroup};
use crate::error::{Error, Result};
use crate::primes::PrimeSet;

/// Position of a subgroup in [`SubgroupLattice::subgroups`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubgroupId(pub usize);

/// Position of a conjugacy class in [`SubgroupLattice::classes`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassId(pub usize);

impl SubgroupId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl ClassId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for SubgroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// A conjugacy class of subgroups. The representative is the member with the
/// lexicographically least element list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupClass {
    pub representative: SubgroupId,
    pub members: Vec<SubgroupId>,
    pub order: usize,
    /// `order:index`, where `index` counts classes of the same order.
    pub label: String,
}

#[derive(Debug)]
pub struct SubgroupLattice {
    group: Arc<FiniteGroup>,
    subgroups: Vec<Subgroup>,
    index: HashMap<ElementSet, SubgroupId>,
    classes: Vec<SubgroupClass>,
    class_of: Vec<ClassId>,
    /// `conj_by_gen[i][s]` is the id of `g_i S g_i⁻¹` for the i-th group generator.
    conj_by_gen: Vec<Vec<SubgroupId>>,
}

impl SubgroupLattice {
    pub fn new(group: Arc<FiniteGroup>) -> Self {
        let mut subgroups = enumerate_by_cyclic_extension(&group);
        subgroups.sort();
        let index: HashMap<ElementSet, SubgroupId> =
            subgroups.iter().enumerate().map(|(i, s)| (s.set().clone(), SubgroupId(i))).collect();

        let conj_by_gen: Vec<Vec<SubgroupId>> = group
            .generators()
            .iter()
            .map(|&g| {
                subgroups
                    .par_iter()
                    .map(|s| {
                        let set = ElementSet::from_indices(
                            group.order(),
                            s.elements().iter().map(|&x| group.conjugate_element(x, g)),
                        );
                        index[&set]
                    })
                    .collect()
            })
            .collect();

        let mut class_of = vec![ClassId(usize::MAX); subgroups.len()];
        let mut classes: Vec<SubgroupClass> = Vec::new();
        for start in 0..subgroups.len() {
            if class_of[start].0 != usize::MAX {
                continue;
            }
            let cid = ClassId(classes.len());
            let mut members = vec![SubgroupId(start)];
            class_of[start] = cid;
            let mut i = 0;
            while i < members.len() {
                let s = members[i];
                for action in &conj_by_gen {
                    let t = action[s.0];
                    if class_of[t.0].0 == usize::MAX {
                        class_of[t.0] = cid;
                        members.push(t);
                    }
                }
                i += 1;
            }
            members.sort();
            let order = subgroups[start].order();
            let same_order = classes.iter().filter(|c| c.order == order).count();
            classes.push(SubgroupClass {
                representative: members[0],
                members,
                order,
                label: format!("{order}:{same_order}"),
            });
        }
        SubgroupLattice { group, subgroups, index, classes, class_of, conj_by_gen }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    /// All subgroups, sorted by order and then by element list.
    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn ids(&self) -> impl Iterator<Item = SubgroupId> {
        (0..self.subgroups.len()).map(SubgroupId)
    }

    pub fn subgroup(&self, id: SubgroupId) -> &Subgroup {
        &self.subgroups[id.0]
    }

    pub fn order_of(&self, id: SubgroupId) -> usize {
        self.subgroups[id.0].order()
    }

    pub fn id_of(&self, s: &Subgroup) -> Option<SubgroupId> {
        self.index.get(s.set()).copied()
    }

    pub fn id_of_set(&self, s: &ElementSet) -> Option<SubgroupId> {
        self.index.get(s).copied()
    }

    pub fn trivial_id(&self) -> SubgroupId {
        SubgroupId(0)
    }

    pub fn whole_id(&self) -> SubgroupId {
        SubgroupId(self.subgroups.len() - 1)
    }

    /// Conjugacy classes sorted by order, then by representative.
    pub fn classes(&self) -> &[SubgroupClass] {
        &self.classes
    }

    pub fn class(&self, c: ClassId) -> &SubgroupClass {
        &self.classes[c.0]
    }

    pub fn class_of(&self, s: SubgroupId) -> ClassId {
        self.class_of[s.0]
    }

    pub fn class_ids(&self) -> impl Iterator<Item = ClassId> {
        (0..self.classes.len()).map(ClassId)
    }

    pub fn class_by_label(&self, label: &str) -> Option<ClassId> {
        self.classes.iter().position(|c| c.label == label).map(ClassId)
    }

    /// `class-label/position` of a subgroup within its class.
    pub fn subgroup_label(&self, s: SubgroupId) -> String {
        let class = self.class(self.class_of(s));
        let pos = class.members.iter().position(|&m| m == s).unwrap();
        format!("{}/{}", class.label, pos)
    }

    /// True when `a ≤ b`.
    pub fn is_subgroup(&self, a: SubgroupId, b: SubgroupId) -> bool {
        self.subgroup(a).is_subgroup_of(self.subgroup(b))
    }

    /// True when some conjugate of `a` lies in `b`.
    pub fn is_subconjugate(&self, a: SubgroupId, b: SubgroupId) -> bool {
        self.class(self.class_of(a)).members.iter().any(|&m| self.is_subgroup(m, b))
    }

    /// Subgroups of `h`, in lattice order.
    pub fn subgroups_of(&self, h: SubgroupId) -> Vec<SubgroupId> {
        let hs = self.subgroup(h);
        self.ids().filter(|&k| self.subgroup(k).is_subgroup_of(hs)).collect()
    }

    pub fn conjugate_id(&self, s: SubgroupId, g: usize) -> SubgroupId {
        let set = ElementSet::from_indices(
            self.group.order(),
            self.subgroup(s).elements().iter().map(|&x| self.group.conjugate_element(x, g)),
        );
        self.index[&set]
    }

    pub fn intersection_id(&self, a: SubgroupId, b: SubgroupId) -> SubgroupId {
        self.index[&self.subgroup(a).set().intersection(self.subgroup(b).set())]
    }

    pub fn is_normal(&self, s: SubgroupId) -> bool {
        self.class(self.class_of(s)).members.len() == 1
    }

    /// An element `g` with `g S g⁻¹` equal to the class representative.
    pub fn conjugator_to_representative(&self, s: SubgroupId) -> usize {
        let rep = self.class(self.class_of(s)).representative;
        (0..self.group.order()).find(|&g| self.conjugate_id(s, g) == rep).expect("class members are conjugate")
    }

    /// Conjugacy classes of the subgroups of `h` under conjugation by `h`,
    /// each sorted, listed by (order, least member).
    pub fn classes_within(&self, h: SubgroupId) -> Vec<Vec<SubgroupId>> {
        let gens = self.subgroup(h).generators().to_vec();
        let mut assigned: HashSet<SubgroupId> = HashSet::new();
        let mut out = Vec::new();
        for k in self.subgroups_of(h) {
            if assigned.contains(&k) {
                continue;
            }
            let mut orbit = vec![k];
            assigned.insert(k);
            let mut i = 0;
            while i < orbit.len() {
                let s = orbit[i];
                for &g in &gens {
                    let t = self.conjugate_id(s, g);
                    if assigned.insert(t) {
                        orbit.push(t);
                    }
                }
                i += 1;
            }
            orbit.sort();
            out.push(orbit);
        }
        out
    }

    /// One pair `K ≤ H` per orbit of simultaneous conjugation, namely the
    /// least `(H, K)` by lattice position. Sorted by `(H, K)`.
    pub fn pair_representatives(&self) -> Vec<(SubgroupId, SubgroupId)> {
        let mut seen: HashSet<(SubgroupId, SubgroupId)> = HashSet::new();
        let mut reps = Vec::new();
        for h in self.ids() {
            for k in self.subgroups_of(h) {
                if seen.contains(&(h, k)) {
                    continue;
                }
                reps.push((k, h));
                let mut orbit = vec![(h, k)];
                seen.insert((h, k));
                let mut i = 0;
                while i < orbit.len() {
                    let (a, b) = orbit[i];
                    for action in &self.conj_by_gen {
                        let next = (action[a.0], action[b.0]);
                        if seen.insert(next) {
                            orbit.push(next);
                        }
                    }
                    i += 1;
                }
            }
        }
        reps
    }

    /// Every pair `K ≤ H`, listed as `(K, H)`.
    pub fn all_pairs(&self) -> Vec<(SubgroupId, SubgroupId)> {
        self.ids().flat_map(|h| self.subgroups_of(h).into_iter().map(move |k| (k, h))).collect()
    }

    /// `O^P(H)` for every subgroup, with the minimality of each residual
    /// checked against all qualifying normal subgroups in the lattice.
    pub fn residuals(&self, primes: &PrimeSet) -> Result<ResidualTable> {
        let primes = primes.normalized(self.group.order());
        let residual: Vec<SubgroupId> =
            self.ids().collect::<Vec<_>>().par_iter().map(|&h| self.checked_residual(h, &primes)).collect::<Result<_>>()?;
        let perfect_classes = self
            .class_ids()
            .filter(|&c| {
                let rep = self.class(c).representative;
                residual[rep.0] == rep
            })
            .collect();
        Ok(ResidualTable { primes, residual, perfect_classes })
    }

    fn checked_residual(&self, h: SubgroupId, primes: &PrimeSet) -> Result<SubgroupId> {
        let g = &self.group;
        let hs = self.subgroup(h);
        let found = g.p_residual(hs, primes);
        let found_id = self.id_of(&found).ok_or_else(|| Error::Invariant("residual is not in the lattice".into()))?;
        let solvable_core = g.solvable_residual(hs);
        let qualifies = |n: &Subgroup| {
            primes.is_p_number((hs.order() / n.order()) as u64)
                && solvable_core.is_subgroup_of(n)
                && g.is_normal_in(n, hs)
        };
        if !qualifies(&found) {
            return Err(Error::Invariant(format!("residual of {} does not have a solvable P-quotient", self.subgroup_label(h))));
        }
        for n in self.subgroups_of(h) {
            let ns = self.subgroup(n);
            if ns.order() % found.order() == 0 && found.is_subgroup_of(ns) {
                continue;
            }
            if qualifies(ns) {
                return Err(Error::Invariant(format!(
                    "residual of {} is not contained in the qualifying subgroup {}",
                    self.subgroup_label(h),
                    self.subgroup_label(n)
                )));
            }
        }
        Ok(found_id)
    }
}

/// `O^P(H)` for every subgroup `H`, and the `P`-perfect classes.
#[derive(Debug, Clone)]
pub struct ResidualTable {
    pub primes: PrimeSet,
    residual: Vec<SubgroupId>,
    perfect_classes: Vec<ClassId>,
}

impl ResidualTable {
    pub fn residual(&self, h: SubgroupId) -> SubgroupId {
        self.residual[h.0]
    }

    /// Classes whose members `L` satisfy `O^P(L) = L`.
    pub fn perfect_classes(&self) -> &[ClassId] {
        &self.perfect_classes
    }

    pub fn is_perfect(&self, lattice: &SubgroupLattice, c: ClassId) -> bool {
        let _ = lattice;
        self.perfect_classes.contains(&c)
    }
}

/// Joins prime-power cyclic subgroups onto already found subgroups until
/// nothing new appears. Every subgroup is generated by its prime-power
/// elements, so the search is complete; joins with a normalizing generator
/// are formed directly as products `U·⟨z⟩`.
fn enumerate_by_cyclic_extension(group: &FiniteGroup) -> Vec<Subgroup> {
    let n = group.order();
    let mut cyclic_seen: HashSet<ElementSet> = HashSet::new();
    let mut extenders: Vec<(usize, Subgroup)> = Vec::new();
    for x in 1..n {
        if !is_prime_power(group.element_order(x)) {
            continue;
        }
        let c = group.closure(&[x]);
        if cyclic_seen.insert(c.set().clone()) {
            extenders.push((x, c));
        }
    }

    let trivial = group.trivial();
    let mut found: HashMap<ElementSet, Subgroup> = HashMap::new();
    found.insert(trivial.set().clone(), trivial.clone());
    let mut queue = vec![trivial];
    let mut i = 0;
    while i < queue.len() {
        let u = queue[i].clone();
        i += 1;
        for (z, zc) in &extenders {
            if u.contains(*z) {
                continue;
            }
            let v = if group.normalizes(*z, &u) {
                let mut elements = Vec::with_capacity(u.order() * zc.order());
                for &a in u.elements() {
                    for &b in zc.elements() {
                        elements.push(group.mul(a, b));
                    }
                }
                let mut gens = u.generators().to_vec();
                gens.push(*z);
                Subgroup::from_elements(n, elements, gens)
            } else {
                group.extend(&u, &[*z])
            };
            if !found.contains_key(v.set()) {
                found.insert(v.set().clone(), v.clone());
                queue.push(v);
            }
        }
    }
    found.into_values().map(|s| s.with_small_generators(group)).collect()
}

fn is_prime_power(k: usize) -> bool {
    crate::primes::prime_divisors(k as u64).len() == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::build_group;

    fn lattice(spec: &str) -> SubgroupLattice {
        SubgroupLattice::new(Arc::new(build_group(spec).unwrap()))
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(lattice("S3").len(), 6);
        assert_eq!(lattice("C7").len(), 2);
        assert_eq!(lattice("C1").len(), 1);
        assert_eq!(lattice("S4").len(), 30);
        assert_eq!(lattice("A5").len(), 59);
    }

    #[test]
    fn class_counts_and_order() {
        let s3 = lattice("S3");
        let orders: Vec<usize> = s3.classes().iter().map(|c| c.order).collect();
        assert_eq!(orders, vec![1, 2, 3, 6]);
        assert_eq!(lattice("A5").classes().len(), 9);
        assert_eq!(lattice("C2").classes().len(), 2);
        assert_eq!(lattice("S4").classes().len(), 11);
    }

    #[test]
    fn representatives_are_lex_least() {
        let l = lattice("S4");
        for c in l.classes() {
            let rep = l.subgroup(c.representative).elements();
            assert!(c.members.iter().all(|&m| l.subgroup(m).elements() >= rep));
        }
    }

    #[test]
    fn subgroups_are_valid() {
        let l = lattice("D8");
        for s in l.subgroups() {
            assert!(s.is_valid_in(l.group()));
        }
    }

    #[test]
    fn residual_table_s3() {
        let l = lattice("S3");
        let t = l.residuals(&PrimeSet::from_primes([3]).unwrap()).unwrap();
        let labels: Vec<&str> = t.perfect_classes().iter().map(|&c| l.class(c).label.as_str()).collect();
        assert_eq!(labels, vec!["1:0", "2:0", "6:0"]);
        let all = l.residuals(&PrimeSet::all()).unwrap();
        assert_eq!(all.perfect_classes().len(), 1);
    }

    #[test]
    fn pair_representatives_cover_each_orbit_once() {
        let l = lattice("S3");
        let reps = l.pair_representatives();
        // (1,1) (1,C2) (C2,C2) (1,A3) (A3,A3) (1,S3) (C2,S3) (A3,S3) (S3,S3)
        assert_eq!(reps.len(), 9);
    }

    #[test]
    fn classes_within_a_subgroup() {
        let l = lattice("S4");
        let whole = l.whole_id();
        assert_eq!(l.classes_within(whole).len(), 11);
        let a4 = l.ids().find(|&s| l.order_of(s) == 12).unwrap();
        // 1, C2, C3, V4, A4
        assert_eq!(l.classes_within(a4).len(), 5);
    }
}
