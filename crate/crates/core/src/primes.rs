//! Sets of primes `P` and the ring `Z_(P)` they determine.
//!
//! `Z_(P)` inverts every prime *outside* `P`: the full set of primes gives
//! the integers, the empty set gives the rationals.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimeSet {
    primes: BTreeSet<u64>,
    all_primes_mode: bool,
}

impl PrimeSet {
    /// Every prime; nothing is inverted.
    pub fn all() -> Self {
        PrimeSet { primes: BTreeSet::new(), all_primes_mode: true }
    }

    /// The empty set; everything is inverted (rational coefficients).
    pub fn none() -> Self {
        PrimeSet { primes: BTreeSet::new(), all_primes_mode: false }
    }

    pub fn from_primes<I: IntoIterator<Item = u64>>(primes: I) -> Result<Self, Error> {
        let primes: BTreeSet<u64> = primes.into_iter().collect();
        if let Some(&bad) = primes.iter().find(|&&p| !is_prime(p)) {
            return Err(Error::PrimeSpec { spec: bad.to_string(), reason: format!("{bad} is not prime") });
        }
        Ok(PrimeSet { primes, all_primes_mode: false })
    }

    pub fn is_all(&self) -> bool {
        self.all_primes_mode
    }

    pub fn is_empty(&self) -> bool {
        !self.all_primes_mode && self.primes.is_empty()
    }

    /// Membership. In all-primes mode every prime is a member, whether or not
    /// the set has been normalized.
    pub fn contains(&self, p: u64) -> bool {
        self.all_primes_mode || self.primes.contains(&p)
    }

    /// The explicit primes. In all-primes mode these are the prime divisors
    /// recorded by [`PrimeSet::normalized`] (empty before normalization).
    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.primes.iter().copied()
    }

    /// In all-primes mode, records the prime divisors of `group_order` as the
    /// explicit primes. Only those primes can occur in residual quotients or
    /// in idempotent denominators, so nothing is lost. Other sets are
    /// returned unchanged.
    pub fn normalized(&self, group_order: usize) -> PrimeSet {
        if self.all_primes_mode {
            PrimeSet { primes: prime_divisors(group_order as u64).into_iter().collect(), all_primes_mode: true }
        } else {
            self.clone()
        }
    }

    /// True when `n` has only prime factors in this set.
    pub fn is_p_number(&self, n: u64) -> bool {
        prime_divisors(n).into_iter().all(|p| self.contains(p))
    }

    /// True when `d` is a unit of `Z_(P)`, i.e. no prime of the set divides it.
    pub fn is_unit_denominator(&self, d: &BigInt) -> bool {
        if d.is_zero() {
            return false;
        }
        let d = d.abs();
        if self.all_primes_mode {
            return d.is_one();
        }
        self.primes.iter().all(|&p| !d.is_multiple_of(&BigInt::from(p)))
    }

    /// Every subset of the prime divisors of `order`, smallest first.
    pub fn subsets_for_order(order: usize) -> Vec<PrimeSet> {
        let divisors = prime_divisors(order as u64);
        let mut out = Vec::with_capacity(1 << divisors.len());
        for mask in 0u32..(1 << divisors.len()) {
            let primes = divisors.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, &p)| p);
            out.push(PrimeSet { primes: primes.collect(), all_primes_mode: false });
        }
        out.sort_by_key(|s| (s.primes.len(), s.primes.iter().copied().collect::<Vec<_>>()));
        out
    }
}

impl fmt::Display for PrimeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.all_primes_mode {
            return f.write_str("all");
        }
        if self.primes.is_empty() {
            return f.write_str("none");
        }
        let list: Vec<String> = self.primes.iter().map(u64::to_string).collect();
        f.write_str(&list.join(","))
    }
}

impl FromStr for PrimeSet {
    type Err = Error;

    /// `all`, `none`, or a comma-separated list of primes.
    fn from_str(s: &str) -> Result<Self, Error> {
        let trimmed = s.trim();
        match trimmed.to_ascii_lowercase().as_str() {
            "all" => return Ok(PrimeSet::all()),
            "none" | "" => return Ok(PrimeSet::none()),
            _ => {}
        }
        let mut primes = Vec::new();
        for part in trimmed.split(',') {
            let part = part.trim();
            let p: u64 = part
                .parse()
                .map_err(|_| Error::PrimeSpec { spec: s.to_string(), reason: format!("{part:?} is not a number") })?;
            if !is_prime(p) {
                return Err(Error::PrimeSpec { spec: s.to_string(), reason: format!("{p} is not prime") });
            }
            primes.push(p);
        }
        PrimeSet::from_primes(primes)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert!("all".parse::<PrimeSet>().unwrap().is_all());
        assert!("none".parse::<PrimeSet>().unwrap().is_empty());
        let p: PrimeSet = "2, 3".parse().unwrap();
        assert!(p.contains(2) && p.contains(3) && !p.contains(5));
        assert!("4".parse::<PrimeSet>().is_err());
        assert!("2,x".parse::<PrimeSet>().is_err());
    }

    #[test]
    fn normalization_keeps_all_mode_semantics() {
        let p = PrimeSet::all().normalized(60);
        assert_eq!(p.primes().collect::<Vec<_>>(), vec![2, 3, 5]);
        // 7 does not divide 60 but is still not inverted.
        assert!(p.contains(7));
        assert!(!p.is_unit_denominator(&BigInt::from(7)));
    }

    #[test]
    fn unit_denominators() {
        let three = PrimeSet::from_primes([3]).unwrap();
        assert!(three.is_unit_denominator(&BigInt::from(4)));
        assert!(!three.is_unit_denominator(&BigInt::from(6)));
        assert!(PrimeSet::none().is_unit_denominator(&BigInt::from(30)));
    }

    #[test]
    fn subsets() {
        let s = PrimeSet::subsets_for_order(12);
        assert_eq!(s.len(), 4);
        assert!(s[0].is_empty());
        assert_eq!(PrimeSet::subsets_for_order(1).len(), 1);
    }

    #[test]
    fn p_numbers() {
        let two = PrimeSet::from_primes([2]).unwrap();
        assert!(two.is_p_number(8) && two.is_p_number(1) && !two.is_p_number(6));
    }
}
