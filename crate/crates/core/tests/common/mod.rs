#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::Arc;

use burnside_core::group::{build_group, ClassId, FiniteGroup, Subgroup, SubgroupId, SubgroupLattice};
use burnside_core::perm::parse_generators;
use burnside_core::rational::{self, Rational};
use burnside_core::{Burnside, BurnsideElement, GSet, NormAnalysis, PrimeSet};
use rand::rngs::StdRng;
use rand::Rng;

pub const SL23: &str = "(1,4,7)(2,8,5); (1,6,2,3)(4,7,8,5)";

/// `(name, spec)` for the fixture groups.
pub const FIXTURES: &[(&str, &str)] = &[
    ("C1", "C1"),
    ("C2", "C2"),
    ("C6", "C6"),
    ("S3", "S3"),
    ("D8", "D8"),
    ("Q8", "Q8"),
    ("A4", "A4"),
    ("S4", "S4"),
    ("SL(2,3)", SL23),
    ("A5", "A5"),
];

pub fn burnside(spec: &str) -> Arc<Burnside> {
    Arc::new(Burnside::for_group(build_group(spec).unwrap()))
}

pub fn analysis(b: &Arc<Burnside>, primes: &PrimeSet) -> NormAnalysis {
    NormAnalysis::new(b.clone(), primes).unwrap()
}

pub fn subgroup(lattice: &SubgroupLattice, gens: &str) -> SubgroupId {
    let g = lattice.group();
    let elems: Vec<usize> = parse_generators(gens, g.degree()).unwrap().iter().map(|p| g.element_of(p).unwrap()).collect();
    lattice.id_of(&g.closure(&elems)).unwrap()
}

pub fn class(lattice: &SubgroupLattice, label: &str) -> ClassId {
    lattice.class_by_label(label).unwrap()
}

pub fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| rational::int(x)).collect()
}

/// A virtual element with small integer orbit coefficients, and occasionally
/// a denominator.
pub fn random_element(b: &Burnside, level: SubgroupId, rng: &mut StdRng) -> BurnsideElement {
    let rank = b.ring(level).rank();
    let coeffs: Vec<Rational> = (0..rank)
        .map(|_| {
            let num = rng.gen_range(-3i64..=3);
            let den = if rng.gen_bool(0.2) { rng.gen_range(1i64..=3) } else { 1 };
            Rational::new(num.into(), den.into())
        })
        .collect();
    b.from_orbit_basis(level, &coeffs).unwrap()
}

pub fn random_pair(lattice: &SubgroupLattice, rng: &mut StdRng) -> (SubgroupId, SubgroupId) {
    let pairs = lattice.all_pairs();
    pairs[rng.gen_range(0..pairs.len())]
}

/// Closure of a set under the group law, by multiplying until nothing new
/// appears.
pub fn naive_closure(g: &FiniteGroup, seed: &BTreeSet<usize>) -> BTreeSet<usize> {
    let mut set = seed.clone();
    set.insert(0);
    loop {
        let mut added = Vec::new();
        for &a in &set {
            for &b in &set {
                let c = g.mul(a, b);
                if !set.contains(&c) {
                    added.push(c);
                }
            }
        }
        if added.is_empty() {
            return set;
        }
        set.extend(added);
    }
}

/// Every subset containing the identity that is closed under the law.
pub fn subgroups_by_subset_search(g: &FiniteGroup) -> BTreeSet<Vec<usize>> {
    let n = g.order();
    assert!(n <= 16, "subset search is exponential");
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << (n - 1)) {
        let elems: Vec<usize> = std::iter::once(0).chain((1..n).filter(|i| mask & (1 << (i - 1)) != 0)).collect();
        let closed = elems.iter().all(|&a| elems.iter().all(|&b| elems.binary_search(&g.mul(a, b)).is_ok()));
        if closed {
            out.insert(elems);
        }
    }
    out
}

/// Closures of subsets, grown one element at a time from the trivial group.
pub fn subgroups_by_adjoining(g: &FiniteGroup) -> BTreeSet<Vec<usize>> {
    let mut found: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    let mut queue = vec![naive_closure(g, &BTreeSet::new())];
    found.insert(queue[0].clone());
    while let Some(s) = queue.pop() {
        for x in 0..g.order() {
            if s.contains(&x) {
                continue;
            }
            let mut seed = s.clone();
            seed.insert(x);
            let t = naive_closure(g, &seed);
            if found.insert(t.clone()) {
                queue.push(t);
            }
        }
    }
    found.into_iter().map(|s| s.into_iter().collect()).collect()
}

pub fn as_lists(subgroups: &[Subgroup]) -> BTreeSet<Vec<usize>> {
    subgroups.iter().map(|s| s.elements().to_vec()).collect()
}

/// Every `K`-set of size at most `max_size` up to isomorphism, as disjoint
/// unions of coset spaces, the empty set included.
pub fn ksets(b: &Burnside, k: SubgroupId, max_size: usize) -> Vec<GSet> {
    let l = b.lattice();
    let ring = b.ring(k);
    let orbits: Vec<GSet> = (0..ring.rank())
        .map(|i| GSet::cosets(l, k, ring.representative(i)).unwrap())
        .filter(|x| x.size() <= max_size)
        .collect();
    let mut out = Vec::new();
    let mut stack = vec![(0usize, GSet::empty(l, k))];
    while let Some((start, set)) = stack.pop() {
        for (i, orbit) in orbits.iter().enumerate().skip(start) {
            if set.size() + orbit.size() <= max_size {
                stack.push((i, set.disjoint_union(orbit)));
            }
        }
        out.push(set);
    }
    out
}

/// Checks coinduction against the marks formula on every small `K`-set for
/// every pair with `|H/K| ≤ max_index`. Returns the number of cases checked
/// and a description of the first mismatch.
pub fn coinduction_cases(b: &Burnside, max_size: usize, max_index: usize) -> (usize, Option<String>) {
    let l = b.lattice();
    let mut checked = 0;
    for (k, h) in l.pair_representatives() {
        if l.order_of(h) / l.order_of(k) > max_index {
            continue;
        }
        for x in ksets(b, k, max_size) {
            let explicit = b.gset_class(&b.coinduce(&x, h).unwrap());
            let formula = b.norm(&b.gset_class(&x), h).unwrap();
            checked += 1;
            if explicit != formula {
                let what = format!("{} <= {} on a set of size {}", l.subgroup_label(k), l.subgroup_label(h), x.size());
                return (checked, Some(what));
            }
        }
    }
    (checked, None)
}
