//! The group-spec grammar:
//!
//! ```text
//! spec    := factor ( 'x' factor )*
//! factor  := 'S'<n> | 'A'<n> | 'C'<n> | 'D'<2n> | 'Q8' | gens
//! gens    := cycles ( ';' cycles )*        e.g. "(1,2)(3,4); (1,3,5)"
//! ```
//!
//! Points in cycle notation are 1-based. A direct product places its factors
//! on disjoint point sets.

use super::FiniteGroup;
use crate::error::{Error, Result};
use crate::perm::{parse_generators, Perm};

pub const DEFAULT_ORDER_CAP: usize = 2000;

pub fn build_group(spec: &str) -> Result<FiniteGroup> {
    build_group_with_cap(spec, DEFAULT_ORDER_CAP)
}

pub fn build_group_with_cap(spec: &str, cap: usize) -> Result<FiniteGroup> {
    let (label, gens) = parse_group_spec(spec)?;
    FiniteGroup::from_permutations(label, &gens, cap)
}

/// Reads a spec into a label and generating permutations without closing
/// them up into a group.
pub fn parse_group_spec(spec: &str) -> Result<(String, Vec<Perm>)> {
    let mut degree = 0;
    let mut gens: Vec<Perm> = Vec::new();
    let mut labels = Vec::new();
    for factor in spec.split(['x', 'X']) {
        let factor = factor.trim();
        let (d, fgens) = realize_factor(factor, spec)?;
        let total = degree + d;
        for g in &mut gens {
            *g = g.extended(total);
        }
        gens.extend(fgens.iter().map(|g| g.shifted(degree, total)));
        degree = total;
        labels.push(factor.to_string());
    }
    if gens.is_empty() {
        gens.push(Perm::identity(degree.max(1)));
    }
    Ok((labels.join("x"), gens))
}

fn realize_factor(factor: &str, spec: &str) -> Result<(usize, Vec<Perm>)> {
    let err = |reason: &str| Error::GroupSpec { spec: spec.to_string(), reason: reason.to_string() };
    if factor.is_empty() {
        return Err(err("empty factor"));
    }
    if factor.starts_with('(') {
        let gens = parse_generators(factor, 1)?;
        let degree = gens[0].degree();
        return Ok((degree, gens));
    }
    if factor.eq_ignore_ascii_case("Q8") {
        let gens = parse_generators("(1,2,3,4)(5,6,7,8); (1,5,3,7)(2,8,4,6)", 8)?;
        return Ok((8, gens));
    }
    let (family, digits) = factor.split_at(1);
    let n: usize = digits.parse().map_err(|_| err(&format!("cannot read {factor:?}")))?;
    if n == 0 {
        return Err(err("families start at 1"));
    }
    let cycle = |pts: Vec<usize>| Perm::from_cycles(n.max(1), &[pts]);
    let gens = match family {
        "S" | "s" => {
            if n < 2 {
                vec![]
            } else {
                vec![cycle(vec![0, 1]), cycle((0..n).collect())]
            }
        }
        "A" | "a" => (2..n).map(|k| cycle(vec![0, 1, k])).collect(),
        "C" | "c" => {
            if n < 2 {
                vec![]
            } else {
                vec![cycle((0..n).collect())]
            }
        }
        "D" | "d" => {
            if n % 2 != 0 {
                return Err(err("dihedral groups are written D<2n> with even order"));
            }
            let m = n / 2;
            return Ok(match m {
                1 => (2, vec![Perm::from_cycles(2, &[vec![0, 1]])]),
                2 => (4, vec![Perm::from_cycles(4, &[vec![0, 1], vec![2, 3]]), Perm::from_cycles(4, &[vec![0, 2], vec![1, 3]])]),
                _ => {
                    let rotation = Perm::from_cycles(m, &[(0..m).collect()]);
                    let reflection = Perm::from_images((0..m).map(|i| ((m - i) % m) as u32).collect()).unwrap();
                    (m, vec![rotation, reflection])
                }
            });
        }
        _ => return Err(err(&format!("unknown family in {factor:?}"))),
    };
    Ok((n, gens))
}
