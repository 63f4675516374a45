//! Burnside rings `A(H)_(P)` for all subgroups `H` of a finite group,
//! computed on marks with exact rationals.
//!
//! An element over `H` is stored by its marks `φ^Q(x)` at the `H`-classes of
//! subgroups `Q ≤ H`. Restriction, transfer, conjugation and norm move
//! elements between subgroups.

mod element;
mod gset;
mod marks;

use std::sync::{Arc, OnceLock};

use num_traits::{One, Zero};

pub use element::BurnsideElement;
pub use gset::GSet;
pub use marks::{BurnsideRing, TableOfMarks};

use crate::error::{Error, Result};
use crate::group::{ClassId, FiniteGroup, ResidualTable, SubgroupId, SubgroupLattice};
use crate::primes::PrimeSet;
use crate::rational::{self, Rational};

/// The Burnside Mackey functor of a group: the rings `A(H)` of every
/// subgroup `H`, built lazily and shared.
pub struct Burnside {
    lattice: Arc<SubgroupLattice>,
    rings: Vec<OnceLock<Arc<BurnsideRing>>>,
}

impl std::fmt::Debug for Burnside {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Burnside").field("group", &self.lattice.group().label()).finish()
    }
}

impl Burnside {
    pub fn new(lattice: Arc<SubgroupLattice>) -> Self {
        let rings = (0..lattice.len()).map(|_| OnceLock::new()).collect();
        Burnside { lattice, rings }
    }

    pub fn for_group(group: FiniteGroup) -> Self {
        Self::new(Arc::new(SubgroupLattice::new(Arc::new(group))))
    }

    pub fn lattice(&self) -> &Arc<SubgroupLattice> {
        &self.lattice
    }

    pub fn group(&self) -> &FiniteGroup {
        self.lattice.group()
    }

    pub fn top(&self) -> SubgroupId {
        self.lattice.whole_id()
    }

    pub fn ring(&self, level: SubgroupId) -> &Arc<BurnsideRing> {
        self.rings[level.0].get_or_init(|| Arc::new(BurnsideRing::new(&self.lattice, level)))
    }

    pub fn table_of_marks(&self, level: SubgroupId) -> &TableOfMarks {
        self.ring(level).table()
    }

    fn label(&self, s: SubgroupId) -> String {
        self.lattice.subgroup_label(s)
    }

    fn require_subgroup(&self, inner: SubgroupId, outer: SubgroupId) -> Result<()> {
        if self.lattice.is_subgroup(inner, outer) {
            Ok(())
        } else {
            Err(Error::NotContained { inner: self.label(inner), outer: self.label(outer) })
        }
    }

    pub fn zero(&self, level: SubgroupId) -> BurnsideElement {
        BurnsideElement { level, marks: vec![Rational::zero(); self.ring(level).rank()] }
    }

    pub fn one(&self, level: SubgroupId) -> BurnsideElement {
        BurnsideElement { level, marks: vec![Rational::one(); self.ring(level).rank()] }
    }

    pub fn from_marks(&self, level: SubgroupId, marks: Vec<Rational>) -> Result<BurnsideElement> {
        let rank = self.ring(level).rank();
        if marks.len() != rank {
            return Err(Error::Invariant(format!("expected {rank} marks, got {}", marks.len())));
        }
        Ok(BurnsideElement { level, marks })
    }

    /// The class `[H/K]` of an orbit, for `K ≤ H`.
    pub fn orbit(&self, level: SubgroupId, stabilizer: SubgroupId) -> Result<BurnsideElement> {
        self.require_subgroup(stabilizer, level)?;
        let ring = self.ring(level);
        let j = ring.class_index(stabilizer).expect("subgroup of the level");
        let marks = ring.table().column(j).into_iter().map(|m| rational::int(m as i64)).collect();
        Ok(BurnsideElement { level, marks })
    }

    /// Coefficients in the orbit basis `[H/K_j]`.
    pub fn to_orbit_basis(&self, x: &BurnsideElement) -> Vec<Rational> {
        self.table_of_marks(x.level).solve(&x.marks)
    }

    pub fn from_orbit_basis(&self, level: SubgroupId, coeffs: &[Rational]) -> Result<BurnsideElement> {
        let table = self.table_of_marks(level);
        if coeffs.len() != table.len() {
            return Err(Error::Invariant(format!("expected {} coefficients, got {}", table.len(), coeffs.len())));
        }
        Ok(BurnsideElement { level, marks: table.apply(coeffs) })
    }

    /// True when every orbit coefficient lies in `Z_(P)`.
    pub fn is_p_local(&self, x: &BurnsideElement, primes: &PrimeSet) -> bool {
        self.to_orbit_basis(x).iter().all(|c| primes.is_unit_denominator(c.denom()))
    }

    /// `φ^Q(x)` for a subgroup `Q` of the level of `x`.
    pub fn mark<'a>(&self, x: &'a BurnsideElement, q: SubgroupId) -> Result<&'a Rational> {
        let i = self
            .ring(x.level)
            .class_index(q)
            .ok_or_else(|| Error::NotContained { inner: self.label(q), outer: self.label(x.level) })?;
        Ok(&x.marks[i])
    }

    /// `R^K_H x` for `H ≤ K`: `φ^Q(R x) = φ^Q(x)`.
    pub fn restrict(&self, x: &BurnsideElement, h: SubgroupId) -> Result<BurnsideElement> {
        self.require_subgroup(h, x.level)?;
        let source = self.ring(x.level);
        let target = self.ring(h);
        let marks = (0..target.rank())
            .map(|i| x.marks[source.class_index(target.representative(i)).unwrap()].clone())
            .collect();
        Ok(BurnsideElement { level: h, marks })
    }

    /// `T_K^H x` for `K ≤ H`, sending `[K/J]` to `[H/J]`.
    pub fn transfer(&self, x: &BurnsideElement, h: SubgroupId) -> Result<BurnsideElement> {
        self.require_subgroup(x.level, h)?;
        let source = self.ring(x.level);
        let target = self.ring(h);
        let coeffs = self.to_orbit_basis(x);
        let mut lifted = vec![Rational::zero(); target.rank()];
        for (j, c) in coeffs.into_iter().enumerate() {
            if !c.is_zero() {
                lifted[target.class_index(source.representative(j)).unwrap()] += c;
            }
        }
        self.from_orbit_basis(h, &lifted)
    }

    /// `c_g x` over `gHg⁻¹`: `φ^{gQg⁻¹}(c_g x) = φ^Q(x)`.
    pub fn conjugate(&self, x: &BurnsideElement, g: usize) -> BurnsideElement {
        let group = self.group();
        let level = self.lattice.conjugate_id(x.level, g);
        let source = self.ring(x.level);
        let target = self.ring(level);
        let g_inv = group.inv(g);
        let marks = (0..target.rank())
            .map(|i| {
                let back = self.lattice.conjugate_id(target.representative(i), g_inv);
                x.marks[source.class_index(back).unwrap()].clone()
            })
            .collect();
        BurnsideElement { level, marks }
    }

    /// `N_K^H x` for `K ≤ H`, through the double coset product
    /// `φ^Q(N x) = ∏_{h ∈ Q\H/K} φ^{h⁻¹Qh ∩ K}(x)`.
    ///
    /// This is the definition for virtual elements; on actual `K`-sets it
    /// agrees with coinduction (see [`Burnside::coinduce`]).
    pub fn norm(&self, x: &BurnsideElement, h: SubgroupId) -> Result<BurnsideElement> {
        let k = x.level;
        self.require_subgroup(k, h)?;
        let group = self.group();
        let source = self.ring(k);
        let target = self.ring(h);
        let hs = self.lattice.subgroup(h);
        let ks = self.lattice.subgroup(k);
        let mut marks = Vec::with_capacity(target.rank());
        for i in 0..target.rank() {
            let q = target.representative(i);
            let reps = group.double_cosets(self.lattice.subgroup(q), ks, hs)?;
            let mut product = Rational::one();
            for r in reps {
                let conj = self.lattice.conjugate_id(q, group.inv(r));
                let meet = self.lattice.intersection_id(conj, k);
                product *= &x.marks[source.class_index(meet).unwrap()];
                if product.is_zero() {
                    break;
                }
            }
            marks.push(product);
        }
        Ok(BurnsideElement { level: h, marks })
    }

    /// The class of a `K`-set in `A(K)`.
    pub fn gset_class(&self, x: &GSet) -> BurnsideElement {
        let ring = self.ring(x.acting());
        let marks = (0..ring.rank())
            .map(|i| rational::int(x.fixed_points(self.lattice.subgroup(ring.representative(i))) as i64))
            .collect();
        BurnsideElement { level: x.acting(), marks }
    }

    /// `map_K(H, X)`: `K`-equivariant functions `f(kh) = k·f(h)`, stored by
    /// their values on the least elements `t_1 < … < t_m` of the right cosets
    /// `K t_i` and ordered lexicographically. `H` acts by
    /// `(h·f)(t) = f(t h)`.
    pub fn coinduce(&self, x: &GSet, h: SubgroupId) -> Result<GSet> {
        let k = x.acting();
        self.require_subgroup(k, h)?;
        let group = self.group();
        let hs = self.lattice.subgroup(h);
        let ks = self.lattice.subgroup(k);

        let mut coset_of = vec![usize::MAX; group.order()];
        let mut reps = Vec::new();
        for &t in hs.elements() {
            if coset_of[t] != usize::MAX {
                continue;
            }
            for &a in ks.elements() {
                coset_of[group.mul(a, t)] = reps.len();
            }
            reps.push(t);
        }
        let m = reps.len();
        let base = x.size();
        let size = base.checked_pow(m as u32).ok_or_else(|| Error::InvalidGSet("coinduced set too large".into()))?;

        // for each h and coset i: t_i h = k · t_j
        let moves: Vec<Vec<(usize, usize)>> = hs
            .elements()
            .iter()
            .map(|&g| {
                reps.iter()
                    .map(|&t| {
                        let th = group.mul(t, g);
                        let j = coset_of[th];
                        (j, group.mul(th, group.inv(reps[j])))
                    })
                    .collect()
            })
            .collect();
        let position = |g: usize| hs.elements().binary_search(&g).unwrap();

        let decode = |mut code: usize| {
            let mut values = vec![0usize; m];
            for v in values.iter_mut().rev() {
                *v = code % base;
                code /= base;
            }
            values
        };
        let encode = |values: &[usize]| values.iter().fold(0usize, |acc, &v| acc * base + v);

        GSet::new(&self.lattice, h, size, |g, code| {
            let values = decode(code);
            let image: Vec<usize> = moves[position(g)].iter().map(|&(j, kk)| x.act(kk, values[j])).collect();
            encode(&image)
        })
    }

    /// The Dress idempotent `e_L`: mark one at `H` exactly when `O^P(H)` is
    /// conjugate to `L`.
    pub fn dress_idempotent(&self, l: ClassId, residuals: &ResidualTable) -> Result<BurnsideElement> {
        if !residuals.perfect_classes().contains(&l) {
            return Err(Error::NotPPerfect(self.lattice.class(l).label.clone()));
        }
        let top = self.top();
        let ring = self.ring(top);
        let marks = (0..ring.rank())
            .map(|i| {
                let r = residuals.residual(ring.representative(i));
                if self.lattice.class_of(r) == l {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            })
            .collect();
        Ok(BurnsideElement { level: top, marks })
    }
}
