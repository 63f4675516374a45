mod common;

use burnside_core::group::{ClassId, SubgroupId, SubgroupLattice};
use burnside_core::tambara::is_admissible_map;
use burnside_core::{GSet, NormAnalysis, PrimeSet};
use common::*;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const GROUPS: &[&str] = &["C1", "C2", "C6", "S3", "D8", "Q8", "A4", "S4", SL23];

fn prime_sets(order: usize) -> Vec<PrimeSet> {
    let mut out = PrimeSet::subsets_for_order(order);
    out.push(PrimeSet::all());
    out
}

/// Members of the class `l` lying inside `h`.
fn copies_in(lattice: &SubgroupLattice, l: ClassId, h: SubgroupId) -> Vec<SubgroupId> {
    lattice.class(l).members.iter().copied().filter(|&m| lattice.is_subgroup(m, h)).collect()
}

fn diamond_a(a: &NormAnalysis, l: ClassId, k: SubgroupId, h: SubgroupId) -> bool {
    let b = a.burnside();
    let normed = a.norm_of_restriction(a.idempotent(l).unwrap(), a.pair(k, h).unwrap()).unwrap();
    copies_in(a.lattice(), l, h).into_iter().all(|m| b.mark(&normed, m).unwrap().is_one())
}

fn diamond_b(a: &NormAnalysis, l: ClassId, k: SubgroupId, h: SubgroupId) -> bool {
    let lattice = a.lattice();
    copies_in(lattice, l, h).into_iter().all(|m| a.residual_in_class(lattice.intersection_id(m, k), l))
}

/// Division read off the marks: it fails exactly when some `Q ≤ H` has
/// `φ^Q(R_H e) = 1` and `φ^Q(N R_K e) = 0`.
fn division_by_marks(a: &NormAnalysis, l: ClassId, k: SubgroupId, h: SubgroupId) -> bool {
    let b = a.burnside();
    let e = a.idempotent(l).unwrap();
    let normed = a.norm_of_restriction(e, a.pair(k, h).unwrap()).unwrap();
    let r = b.restrict(e, h).unwrap();
    !r.marks().iter().zip(normed.marks()).any(|(x, y)| x.is_one() && y.is_zero())
}

/// `O^P(H)` as the intersection of the normal subgroups `N` of `H` for which
/// `H/N` is a solvable `P`-group.
fn residual_oracle(lattice: &SubgroupLattice, primes: &PrimeSet, h: SubgroupId) -> SubgroupId {
    let g = lattice.group();
    let hs = lattice.subgroup(h);
    let bottom = g.derived_series(hs).last().unwrap().clone();
    let mut meet = h;
    for n in lattice.subgroups_of(h) {
        let ns = lattice.subgroup(n);
        let index = hs.order() / ns.order();
        if g.is_normal_in(ns, hs) && primes.is_p_number(index as u64) && bottom.is_subgroup_of(ns) {
            meet = lattice.intersection_id(meet, n);
        }
    }
    meet
}

#[test]
fn residuals_match_normal_subgroup_oracle() {
    for spec in GROUPS.iter().chain(&["A5"]) {
        let b = burnside(spec);
        let l = b.lattice();
        for primes in prime_sets(l.group().order()) {
            let table = l.residuals(&primes).unwrap();
            for h in l.ids() {
                assert_eq!(table.residual(h), residual_oracle(l, &primes, h), "{spec} {primes}");
            }
        }
    }
}

#[test]
fn dress_idempotents_are_p_local_and_split_one() {
    for spec in GROUPS {
        let b = burnside(spec);
        for primes in prime_sets(b.group().order()) {
            let a = analysis(&b, &primes);
            let mut sum = b.zero(b.top());
            for (_, e) in a.idempotents() {
                assert!(e.is_idempotent());
                assert!(b.is_p_local(e, &primes), "{spec} {primes}");
                sum = &sum + e;
            }
            assert!(sum.is_one(), "{spec} {primes}");
        }
    }
}

#[test]
fn all_five_conditions_agree_on_every_pair() {
    for spec in GROUPS {
        let b = burnside(spec);
        let lattice = b.lattice();
        for primes in prime_sets(b.group().order()) {
            let a = analysis(&b, &primes);
            for &l in a.perfect_classes() {
                for (k, h) in lattice.all_pairs() {
                    let pair = a.pair(k, h).unwrap();
                    let star = a.condition_star(l, pair);
                    let values = [
                        a.condition_diamond(l, pair).unwrap(),
                        diamond_a(&a, l, k, h),
                        diamond_b(&a, l, k, h),
                        a.norm_descends(l, pair).unwrap(),
                        division_by_marks(&a, l, k, h),
                    ];
                    assert!(values.iter().all(|&v| v == star), "{spec} {primes} L={} {k:?}<={h:?}: {star} {values:?}", lattice.class(l).label);
                }
            }
        }
    }
}

#[test]
fn indexing_systems_are_maximal() {
    for spec in GROUPS {
        let b = burnside(spec);
        let lattice = b.lattice();
        for primes in prime_sets(b.group().order()) {
            let a = analysis(&b, &primes);
            for &l in a.perfect_classes() {
                let system = a.indexing_system(l).unwrap();
                for (k, h) in lattice.all_pairs() {
                    let descends = a.norm_descends(l, a.pair(k, h).unwrap()).unwrap();
                    assert_eq!(system.is_admissible(k, h), descends, "{spec} {primes}");
                }
                let shared = a.shared_indexing_system().unwrap();
                assert!(shared.is_contained_in(&system));
            }
        }
    }
}

#[test]
fn trivial_class_keeps_every_norm_and_others_lose_the_free_one() {
    for spec in GROUPS.iter().chain(&["A5"]) {
        let b = burnside(spec);
        let lattice = b.lattice();
        for primes in prime_sets(b.group().order()) {
            let a = analysis(&b, &primes);
            for &l in a.perfect_classes() {
                let system = a.indexing_system(l).unwrap();
                let free = system.is_admissible(lattice.trivial_id(), lattice.whole_id());
                if lattice.class(l).order == 1 {
                    assert!(system.is_complete(), "{spec} {primes}");
                } else {
                    assert!(!free, "{spec} {primes}");
                }
            }
        }
    }
}

#[test]
fn normality_matches_norms_above() {
    for spec in GROUPS {
        let b = burnside(spec);
        for primes in prime_sets(b.group().order()) {
            let a = analysis(&b, &primes);
            for &l in a.perfect_classes() {
                assert!(a.normality_characterization(l).unwrap().agrees(), "{spec} {primes}");
            }
        }
    }
}

#[test]
fn admissible_maps_follow_the_stabilizer_pairs() {
    let b = burnside("S3");
    let lattice = b.lattice();
    let a = analysis(&b, &"3".parse().unwrap());
    let system = a.indexing_system(class(lattice, "2:0")).unwrap();
    let top = b.top();
    let a3 = subgroup(lattice, "(1,2,3)");
    let c2 = subgroup(lattice, "(1,2)");
    let free = GSet::cosets(lattice, top, lattice.trivial_id()).unwrap();
    let over_a3 = GSet::cosets(lattice, top, a3).unwrap();
    let over_c2 = GSet::cosets(lattice, top, c2).unwrap();
    let point = GSet::trivial(lattice, top, 1);
    // S3/1 → S3/A3 and S3/1 → S3/C2 are the quotient maps x ↦ x·A3, x ↦ x·C2
    let to = |target: &GSet| -> Vec<usize> {
        (0..free.size())
            .map(|x| {
                let g = (0..b.group().order()).find(|&g| free.act(g, 0) == x).unwrap();
                target.act(g, 0)
            })
            .collect()
    };
    assert!(is_admissible_map(&system, &free, &over_a3, &to(&over_a3)).unwrap());
    assert!(!is_admissible_map(&system, &free, &over_c2, &to(&over_c2)).unwrap());
    assert!(!is_admissible_map(&system, &over_c2, &point, &[0, 0, 0]).unwrap());
    assert!(is_admissible_map(&system, &point, &point, &[0]).unwrap());
    assert!(is_admissible_map(&system, &free, &point, &[0; 6]).is_ok_and(|ok| !ok));
}

#[test]
fn localized_frobenius_and_mackey() {
    let mut rng = StdRng::seed_from_u64(21);
    for spec in ["S3", "A4", "S4", SL23] {
        let b = burnside(spec);
        let lattice = b.lattice();
        let g = lattice.group();
        for primes in prime_sets(g.order()) {
            let a = analysis(&b, &primes);
            for (_, e) in a.idempotents() {
                let ring = a.localized_green_ring(e.clone()).unwrap();
                for _ in 0..10 {
                    let (k, h) = random_pair(lattice, &mut rng);
                    let x = ring.localize(&random_element(&b, k, &mut rng));
                    let y = ring.localize(&random_element(&b, h, &mut rng));
                    let lhs = ring.transfer(&ring.multiply(&x, &ring.restrict(&y, k).unwrap()), h).unwrap();
                    let rhs = ring.multiply(&ring.transfer(&x, h).unwrap(), &y);
                    assert_eq!(lhs, rhs, "{spec} {primes}");
                    assert_eq!(ring.multiply(&ring.unit(h), &y), y);

                    let subs = lattice.subgroups_of(h);
                    let q = subs[rng.gen_range(0..subs.len())];
                    let lhs = ring.restrict(&ring.transfer(&x, h).unwrap(), q).unwrap();
                    let mut rhs = b.zero(q);
                    for r in g.double_cosets(lattice.subgroup(q), lattice.subgroup(k), lattice.subgroup(h)).unwrap() {
                        let meet = lattice.intersection_id(lattice.conjugate_id(q, g.inv(r)), k);
                        let piece = ring.conjugate(&ring.restrict(&x, meet).unwrap(), r);
                        rhs = &rhs + &ring.transfer(&piece, q).unwrap();
                    }
                    assert_eq!(lhs, rhs, "{spec} {primes}");
                }
            }
        }
    }
}

#[test]
fn localized_norms_are_multiplicative_and_commute_with_localization() {
    let mut rng = StdRng::seed_from_u64(22);
    for spec in ["S3", "D8", "A4", "S4"] {
        let b = burnside(spec);
        let lattice = b.lattice();
        for primes in prime_sets(b.group().order()) {
            let a = analysis(&b, &primes);
            for (l, e) in a.idempotents() {
                let ring = a.localized_green_ring(e.clone()).unwrap();
                let system = a.indexing_system(*l).unwrap();
                for (k, h) in lattice.pair_representatives() {
                    let x = random_element(&b, k, &mut rng);
                    let y = random_element(&b, k, &mut rng);
                    if !system.is_admissible(k, h) {
                        assert!(ring.norm(&ring.localize(&x), h).is_err());
                        continue;
                    }
                    let nx = ring.norm(&ring.localize(&x), h).unwrap();
                    assert_eq!(nx, ring.localize(&b.norm(&x, h).unwrap()), "{spec} {primes}");
                    let nxy = ring.norm(&ring.multiply(&x, &y), h).unwrap();
                    let ny = ring.norm(&ring.localize(&y), h).unwrap();
                    assert_eq!(nxy, ring.multiply(&nx, &ny), "{spec} {primes}");
                    assert_eq!(ring.norm(&ring.unit(k), h).unwrap(), ring.unit(h));
                }
            }
        }
    }
}

#[test]
fn ranks_add_up_and_factors_are_orthogonal() {
    for spec in GROUPS {
        let b = burnside(spec);
        for primes in prime_sets(b.group().order()) {
            let report = analysis(&b, &primes).splitting_report().unwrap();
            assert!(report.sum_is_one && report.orthogonal, "{spec} {primes}");
            assert!(report.ranks.iter().all(|r| r.additive), "{spec} {primes}");
            assert!(report.shared_norms_descend, "{spec} {primes}");
            assert!(report.verdict, "{spec} {primes}");
        }
    }
}

#[test]
fn restriction_experiment_is_consistent() {
    for spec in ["S3", "A4", "S4", SL23] {
        let b = burnside(spec);
        for primes in prime_sets(b.group().order()) {
            let report = analysis(&b, &primes).splitting_report().unwrap();
            for row in &report.restriction_experiment {
                assert!(row.summands_add_up, "{spec} {primes} {row:?}");
            }
        }
    }
}

#[test]
fn rational_case_keeps_no_shared_norms() {
    for spec in GROUPS {
        let b = burnside(spec);
        let a = analysis(&b, &PrimeSet::none());
        assert!(a.shared_indexing_system().unwrap().is_minimal(), "{spec}");
        assert_eq!(a.perfect_classes().len(), b.lattice().classes().len());
    }
}

#[test]
fn one_has_only_unit_marks() {
    let b = burnside("S4");
    assert!(b.one(b.top()).marks().iter().all(|m| m.is_one()));
    assert!(b.zero(b.top()).marks().iter().all(|m| m.is_zero()));
}
