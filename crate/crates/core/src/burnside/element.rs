use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::group::SubgroupId;
use crate::rational::Rational;

/// An element of the rationalized Burnside ring of a subgroup `H` (its
/// *level*), stored by its marks at the `H`-conjugacy classes of subgroups of
/// `H`, in the class order of the level's table of marks.
///
/// Ring operations act pointwise on marks; mixing levels panics.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BurnsideElement {
    pub(crate) level: SubgroupId,
    pub(crate) marks: Vec<Rational>,
}

impl BurnsideElement {
    pub fn level(&self) -> SubgroupId {
        self.level
    }

    pub fn marks(&self) -> &[Rational] {
        &self.marks
    }

    pub fn is_zero(&self) -> bool {
        self.marks.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.marks.iter().all(One::is_one)
    }

    pub fn is_idempotent(&self) -> bool {
        self.marks.iter().all(|m| m.is_zero() || m.is_one())
    }

    pub fn scale(&self, c: &Rational) -> BurnsideElement {
        BurnsideElement { level: self.level, marks: self.marks.iter().map(|m| m * c).collect() }
    }

    pub fn pow(&self, k: u32) -> BurnsideElement {
        BurnsideElement { level: self.level, marks: self.marks.iter().map(|m| num_traits::pow(m.clone(), k as usize)).collect() }
    }

    fn zip(&self, other: &BurnsideElement, f: impl Fn(&Rational, &Rational) -> Rational) -> BurnsideElement {
        assert_eq!(self.level, other.level, "Burnside elements over different subgroups");
        BurnsideElement { level: self.level, marks: self.marks.iter().zip(&other.marks).map(|(a, b)| f(a, b)).collect() }
    }
}

impl Add for &BurnsideElement {
    type Output = BurnsideElement;
    fn add(self, rhs: &BurnsideElement) -> BurnsideElement {
        self.zip(rhs, |a, b| a + b)
    }
}

impl Sub for &BurnsideElement {
    type Output = BurnsideElement;
    fn sub(self, rhs: &BurnsideElement) -> BurnsideElement {
        self.zip(rhs, |a, b| a - b)
    }
}

impl Mul for &BurnsideElement {
    type Output = BurnsideElement;
    fn mul(self, rhs: &BurnsideElement) -> BurnsideElement {
        self.zip(rhs, |a, b| a * b)
    }
}

impl Neg for &BurnsideElement {
    type Output = BurnsideElement;
    fn neg(self) -> BurnsideElement {
        BurnsideElement { level: self.level, marks: self.marks.iter().map(|m| -m).collect() }
    }
}
