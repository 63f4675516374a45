//! Permutations on `0..degree` and cycle notation with 1-based points.

use std::fmt;

use crate::error::Error;

/// A permutation stored as its image list. Products compose left to right:
/// `a.then(b)` maps `x` to `b(a(x))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u32>);

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        Perm((0..degree as u32).collect())
    }

    pub fn from_images(images: Vec<u32>) -> Option<Perm> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            let slot = seen.get_mut(i as usize)?;
            if *slot {
                return None;
            }
            *slot = true;
        }
        Some(Perm(images))
    }

    /// Builds a permutation from 0-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Perm {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for cycle in cycles {
            for (i, &p) in cycle.iter().enumerate() {
                images[p] = cycle[(i + 1) % cycle.len()] as u32;
            }
        }
        Perm(images)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    pub fn apply(&self, point: usize) -> usize {
        self.0[point] as usize
    }

    pub fn then(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm(self.0.iter().map(|&x| other.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut out = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            out[x as usize] = i as u32;
        }
        Perm(out)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// Pads with fixed points up to `degree`.
    pub fn extended(&self, degree: usize) -> Perm {
        let mut images = self.0.clone();
        images.extend(self.0.len() as u32..degree as u32);
        Perm(images)
    }

    /// Relabels every point `p` as `p + offset` inside a larger domain.
    pub fn shifted(&self, offset: usize, degree: usize) -> Perm {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for (i, &x) in self.0.iter().enumerate() {
            images[i + offset] = x + offset as u32;
        }
        Perm(images)
    }

    /// 0-based cycles of length at least two.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] || self.0[start] as usize == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.apply(start);
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.apply(p);
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let pts: Vec<String> = c.iter().map(|p| (p + 1).to_string()).collect();
            write!(f, "({})", pts.join(","))?;
        }
        Ok(())
    }
}

/// Parses one generator in cycle notation, e.g. `(1,2)(3,4)`, into 0-based
/// cycles. `()` is the identity.
pub fn parse_cycles(text: &str) -> Result<Vec<Vec<usize>>, String> {
    let mut cycles = Vec::new();
    let mut rest = text.trim();
    if rest.is_empty() {
        return Err("empty generator".into());
    }
    while !rest.is_empty() {
        let body_start = rest.strip_prefix('(').ok_or_else(|| format!("expected '(' at {rest:?}"))?;
        let close = body_start.find(')').ok_or_else(|| format!("unclosed cycle in {text:?}"))?;
        let body = body_start[..close].trim();
        rest = body_start[close + 1..].trim_start();
        if body.is_empty() {
            continue;
        }
        let mut cycle = Vec::new();
        for tok in body.split(',') {
            let tok = tok.trim();
            let p: usize = tok.parse().map_err(|_| format!("bad point {tok:?}"))?;
            if p == 0 {
                return Err("points are 1-based".into());
            }
            if cycle.contains(&(p - 1)) {
                return Err(format!("point {p} repeated in a cycle"));
            }
            cycle.push(p - 1);
        }
        if cycles.iter().flatten().any(|q| cycle.contains(q)) {
            return Err(format!("cycles of {text:?} are not disjoint"));
        }
        cycles.push(cycle);
    }
    Ok(cycles)
}

/// Parses a `;`-separated generator list. Returns the permutations at the
/// smallest common degree (at least `min_degree`).
pub fn parse_generators(text: &str, min_degree: usize) -> Result<Vec<Perm>, Error> {
    let err = |reason: String| Error::GroupSpec { spec: text.to_string(), reason };
    let mut all = Vec::new();
    for part in text.split(';') {
        all.push(parse_cycles(part).map_err(err)?);
    }
    let degree = all.iter().flatten().flatten().map(|&p| p + 1).max().unwrap_or(0).max(min_degree).max(1);
    Ok(all.iter().map(|c| Perm::from_cycles(degree, c)).collect())
}
