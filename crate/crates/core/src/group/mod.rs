//! Finite groups given by a multiplication table, their subgroups, and the
//! subgroup lattice.

mod element_set;
mod lattice;
mod spec;
mod subgroup;

use std::collections::HashMap;
use std::fmt;

pub use element_set::ElementSet;
pub use lattice::{ClassId, ResidualTable, SubgroupClass, SubgroupId, SubgroupLattice};
pub use spec::{build_group, build_group_with_cap, parse_group_spec, DEFAULT_ORDER_CAP};
pub use subgroup::Subgroup;

use crate::error::{Error, Result};
use crate::perm::Perm;

/// A finite group with elements `0..order`. Element `0` is the identity.
///
/// Every group carries a faithful permutation realization, used for display
/// and for resolving user-supplied generators. Groups built from a Cayley
/// table use the right regular representation.
#[derive(Clone)]
pub struct FiniteGroup {
    label: String,
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    element_orders: Vec<u32>,
    generators: Vec<usize>,
    perms: Vec<Perm>,
    lookup: HashMap<Perm, usize>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup").field("label", &self.label).field("order", &self.order).finish()
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.mul == other.mul
    }
}

impl Eq for FiniteGroup {}

impl FiniteGroup {
    /// Closes `generators` (all of one degree) under composition.
    ///
    /// Elements are enumerated breadth first from the identity; each new
    /// layer is sorted by image tuple, so the numbering depends only on the
    /// generator list.
    pub fn from_permutations(label: impl Into<String>, generators: &[Perm], cap: usize) -> Result<Self> {
        let degree = generators.iter().map(Perm::degree).max().unwrap_or(1).max(1);
        let gens: Vec<Perm> = generators.iter().map(|g| g.extended(degree)).collect();
        let mut perms = vec![Perm::identity(degree)];
        let mut lookup: HashMap<Perm, usize> = HashMap::new();
        lookup.insert(perms[0].clone(), 0);
        let mut layer = vec![0usize];
        while !layer.is_empty() {
            let mut next: Vec<Perm> = Vec::new();
            for &x in &layer {
                for g in &gens {
                    let y = perms[x].then(g);
                    if !lookup.contains_key(&y) && !next.contains(&y) {
                        next.push(y);
                    }
                }
            }
            next.sort();
            layer.clear();
            for p in next {
                if perms.len() >= cap {
                    return Err(Error::OrderCap { cap });
                }
                lookup.insert(p.clone(), perms.len());
                layer.push(perms.len());
                perms.push(p);
            }
        }
        let generators = gens.iter().filter(|g| !g.is_identity()).map(|g| lookup[g]).collect();
        Ok(Self::assemble(label.into(), perms, lookup, generators))
    }

    /// Builds a group from a Cayley table over `0..n` with identity `0`,
    /// checking the group axioms exhaustively.
    pub fn from_cayley_table(label: impl Into<String>, table: &[Vec<usize>]) -> Result<Self> {
        let n = table.len();
        let bad = |msg: String| Error::Invariant(format!("Cayley table: {msg}"));
        if n == 0 || table.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
            return Err(bad("not a square table over 0..n".into()));
        }
        for x in 0..n {
            if table[0][x] != x || table[x][0] != x {
                return Err(bad("element 0 is not the identity".into()));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(bad(format!("not associative at ({a},{b},{c})")));
                    }
                }
            }
        }
        // right regular representation: x acts as y -> y*x
        let perms: Vec<Perm> = (0..n)
            .map(|x| {
                Perm::from_images((0..n).map(|y| table[y][x] as u32).collect())
                    .ok_or_else(|| bad(format!("column {x} is not a permutation")))
            })
            .collect::<Result<_>>()?;
        let lookup: HashMap<Perm, usize> = perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        if lookup.len() != n {
            return Err(bad("rows are not distinct".into()));
        }
        let generators = (1..n).collect();
        let group = Self::assemble(label.into(), perms, lookup, generators);
        group.check_axioms()?;
        Ok(group)
    }

    fn assemble(label: String, perms: Vec<Perm>, lookup: HashMap<Perm, usize>, generators: Vec<usize>) -> Self {
        let n = perms.len();
        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[a * n + b] = lookup[&perms[a].then(&perms[b])] as u32;
            }
        }
        let inv = (0..n).map(|a| lookup[&perms[a].inverse()] as u32).collect();
        let mut element_orders = vec![0u32; n];
        for a in 0..n {
            let mut x = a;
            let mut k = 1;
            while x != 0 {
                x = mul[x * n + a] as usize;
                k += 1;
            }
            element_orders[a] = k;
        }
        // the identity has order 1
        element_orders[0] = 1;
        FiniteGroup { label, order: n, mul, inv, element_orders, generators, perms, lookup }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn element_order(&self, a: usize) -> usize {
        self.element_orders[a] as usize
    }

    /// `g x g⁻¹`.
    #[inline]
    pub fn conjugate_element(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// `a⁻¹ b⁻¹ a b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn degree(&self) -> usize {
        self.perms[0].degree()
    }

    pub fn perm(&self, a: usize) -> &Perm {
        &self.perms[a]
    }

    /// Index of a permutation of the ambient realization, padding or
    /// rejecting degree mismatches.
    pub fn element_of(&self, p: &Perm) -> Option<usize> {
        let degree = self.degree();
        if p.degree() > degree {
            let trimmed = p.images()[degree..].iter().enumerate().all(|(i, &x)| x as usize == degree + i);
            if !trimmed {
                return None;
            }
            let q = Perm::from_images(p.images()[..degree].to_vec())?;
            return self.lookup.get(&q).copied();
        }
        self.lookup.get(&p.extended(degree)).copied()
    }

    /// Exhaustive check of the group axioms on the stored table.
    pub fn check_axioms(&self) -> Result<()> {
        let n = self.order;
        for x in 0..n {
            if self.mul(0, x) != x || self.mul(x, 0) != x {
                return Err(Error::Invariant(format!("identity law fails at {x}")));
            }
            if self.mul(x, self.inv(x)) != 0 {
                return Err(Error::Invariant(format!("inverse law fails at {x}")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::Invariant(format!("associativity fails at ({a},{b},{c})")));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_elements(self.order, (0..self.order).collect(), self.generators.clone())
    }

    pub fn trivial(&self) -> Subgroup {
        Subgroup::from_elements(self.order, vec![0], Vec::new())
    }

    /// The subgroup generated by `gens`.
    pub fn closure(&self, gens: &[usize]) -> Subgroup {
        self.extend(&self.trivial(), gens)
    }

    /// The subgroup generated by `base` and `extra`.
    pub fn extend(&self, base: &Subgroup, extra: &[usize]) -> Subgroup {
        let mut gens: Vec<usize> = base.generators().to_vec();
        for &x in extra {
            if !base.contains(x) && !gens.contains(&x) {
                gens.push(x);
            }
        }
        if gens.len() == base.generators().len() {
            return base.clone();
        }
        let mut set = base.set().clone();
        let mut elements: Vec<usize> = base.elements().to_vec();
        let mut i = 0;
        while i < elements.len() {
            let x = elements[i];
            for &g in &gens {
                let y = self.mul(x, g);
                if set.insert(y) {
                    elements.push(y);
                }
            }
            i += 1;
        }
        Subgroup::from_elements(self.order, elements, gens)
    }

    /// `g H g⁻¹`.
    pub fn conjugate(&self, h: &Subgroup, g: usize) -> Subgroup {
        let elements = h.elements().iter().map(|&x| self.conjugate_element(x, g)).collect();
        let gens = h.generators().iter().map(|&x| self.conjugate_element(x, g)).collect();
        Subgroup::from_elements(self.order, elements, gens)
    }

    pub fn normalizes(&self, g: usize, h: &Subgroup) -> bool {
        h.generators().iter().all(|&x| h.contains(self.conjugate_element(x, g)))
    }

    /// True when `n` is a normal subgroup of `h`.
    pub fn is_normal_in(&self, n: &Subgroup, h: &Subgroup) -> bool {
        n.is_subgroup_of(h) && h.generators().iter().all(|&g| self.normalizes(g, n))
    }

    pub fn normalizer(&self, h: &Subgroup) -> Subgroup {
        let elements: Vec<usize> = (0..self.order).filter(|&g| self.normalizes(g, h)).collect();
        let gens = elements.clone();
        Subgroup::from_elements(self.order, elements, gens).with_small_generators(self)
    }

    /// Smallest subgroup of `h` containing `seeds` and normalized by `h`.
    pub fn normal_closure(&self, seeds: &[usize], h: &Subgroup) -> Subgroup {
        let mut n = self.closure(seeds);
        loop {
            let mut extra = Vec::new();
            for &g in h.generators() {
                for &x in n.generators() {
                    let y = self.conjugate_element(x, g);
                    if !n.contains(y) && !extra.contains(&y) {
                        extra.push(y);
                    }
                }
            }
            if extra.is_empty() {
                return n;
            }
            n = self.extend(&n, &extra);
        }
    }

    /// `[H, H]`, the normal closure of the commutators of generators.
    pub fn derived_subgroup(&self, h: &Subgroup) -> Subgroup {
        let gens = h.generators();
        let mut seeds = Vec::new();
        for (i, &a) in gens.iter().enumerate() {
            for &b in &gens[i + 1..] {
                let c = self.commutator(a, b);
                if c != 0 && !seeds.contains(&c) {
                    seeds.push(c);
                }
            }
        }
        self.normal_closure(&seeds, h).with_small_generators(self)
    }

    /// The derived series `H ⊇ H' ⊇ H'' ⊇ …` up to its first repeated term.
    pub fn derived_series(&self, h: &Subgroup) -> Vec<Subgroup> {
        let mut series = vec![h.clone()];
        loop {
            let last = series.last().unwrap();
            let next = self.derived_subgroup(last);
            if next.order() == last.order() {
                return series;
            }
            series.push(next);
        }
    }

    pub fn is_solvable(&self, h: &Subgroup) -> bool {
        self.derived_series(h).last().unwrap().order() == 1
    }

    /// The last term of the derived series, i.e. the smallest normal subgroup
    /// with solvable quotient.
    pub fn solvable_residual(&self, h: &Subgroup) -> Subgroup {
        self.derived_series(h).pop().unwrap()
    }

    /// `O^P(H)`, the smallest normal subgroup of `H` whose quotient is a
    /// solvable group of `P`-order.
    ///
    /// Iterates `N ↦ [N, N]·⟨P'-elements of N⟩`; each step peels off the
    /// largest abelian `P`-quotient, and the fixed point is the residual.
    pub fn p_residual(&self, h: &Subgroup, primes: &crate::primes::PrimeSet) -> Subgroup {
        let mut n = h.clone();
        loop {
            let derived = self.derived_subgroup(&n);
            let coprime: Vec<usize> = n
                .elements()
                .iter()
                .copied()
                .filter(|&x| x != 0 && !self.order_meets(self.element_order(x), primes))
                .collect();
            let next = self.extend(&derived, &coprime).with_small_generators(self);
            if next.order() == n.order() {
                return n;
            }
            n = next;
        }
    }

    fn order_meets(&self, k: usize, primes: &crate::primes::PrimeSet) -> bool {
        crate::primes::prime_divisors(k as u64).into_iter().any(|p| primes.contains(p))
    }

    /// The partition of `h` into double cosets `Q x K`, each listed in
    /// ascending order; blocks are ordered by their least element.
    pub fn double_coset_partition(&self, q: &Subgroup, k: &Subgroup, h: &Subgroup) -> Result<Vec<Vec<usize>>> {
        if !q.is_subgroup_of(h) || !k.is_subgroup_of(h) {
            return Err(Error::NotContained {
                inner: format!("{} and {}", q.describe(self), k.describe(self)),
                outer: h.describe(self),
            });
        }
        let mut seen = ElementSet::empty(self.order);
        let mut blocks = Vec::new();
        for &x in h.elements() {
            if seen.contains(x) {
                continue;
            }
            let mut block = Vec::new();
            for &a in q.elements() {
                let ax = self.mul(a, x);
                for &b in k.elements() {
                    let y = self.mul(ax, b);
                    if seen.insert(y) {
                        block.push(y);
                    }
                }
            }
            block.sort_unstable();
            blocks.push(block);
        }
        Ok(blocks)
    }

    /// One representative per double coset `Q h K` in `H`: the least element
    /// index of each double coset.
    pub fn double_cosets(&self, q: &Subgroup, k: &Subgroup, h: &Subgroup) -> Result<Vec<usize>> {
        Ok(self.double_coset_partition(q, k, h)?.into_iter().map(|b| b[0]).collect())
    }
}
