use std::collections::HashMap;

use crate::group::{SubgroupId, SubgroupLattice};
use crate::rational::Rational;

/// The table of marks of a subgroup `H`: `matrix[i][j]` is the number of
/// points of the orbit `H/K_j` fixed by the representative `H_i`.
///
/// Classes are ordered by (order, representative), so `matrix[i][j] ≠ 0`
/// only when `H_i` is subconjugate to `K_j`, which forces `i ≤ j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableOfMarks {
    pub level: SubgroupId,
    /// Class representatives, also the orbit stabilizers `K_j`.
    pub representatives: Vec<SubgroupId>,
    pub matrix: Vec<Vec<u64>>,
}

impl TableOfMarks {
    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    /// Marks of the orbit `H/K_j`.
    pub fn column(&self, j: usize) -> Vec<u64> {
        self.matrix.iter().map(|row| row[j]).collect()
    }

    /// Solves `matrix · coeffs = marks` by back substitution.
    pub fn solve(&self, marks: &[Rational]) -> Vec<Rational> {
        let n = self.len();
        let mut coeffs = vec![Rational::default(); n];
        for i in (0..n).rev() {
            let mut acc = marks[i].clone();
            for j in i + 1..n {
                if self.matrix[i][j] != 0 {
                    acc -= &coeffs[j] * Rational::from_integer(self.matrix[i][j].into());
                }
            }
            coeffs[i] = acc / Rational::from_integer(self.matrix[i][i].into());
        }
        coeffs
    }

    /// `matrix · coeffs`.
    pub fn apply(&self, coeffs: &[Rational]) -> Vec<Rational> {
        self.matrix
            .iter()
            .map(|row| {
                row.iter()
                    .zip(coeffs)
                    .filter(|(&m, _)| m != 0)
                    .map(|(&m, c)| c * Rational::from_integer(m.into()))
                    .sum()
            })
            .collect()
    }
}

/// The Burnside ring data of one subgroup: its subgroup classes under its own
/// conjugation, and its table of marks.
#[derive(Debug)]
pub struct BurnsideRing {
    level: SubgroupId,
    classes: Vec<Vec<SubgroupId>>,
    class_of: HashMap<SubgroupId, usize>,
    table: TableOfMarks,
}

impl BurnsideRing {
    pub(crate) fn new(lattice: &SubgroupLattice, level: SubgroupId) -> Self {
        let classes = lattice.classes_within(level);
        let class_of = classes.iter().enumerate().flat_map(|(i, c)| c.iter().map(move |&s| (s, i))).collect();
        let h_order = lattice.order_of(level);
        let representatives: Vec<SubgroupId> = classes.iter().map(|c| c[0]).collect();
        // φ^A(H/B) = |N_H(B) : B| · #{B' ~ B : A ≤ B'}
        let matrix = representatives
            .iter()
            .map(|&a| {
                classes
                    .iter()
                    .map(|members| {
                        let b_order = lattice.order_of(members[0]);
                        let weyl = (h_order / members.len() / b_order) as u64;
                        let above = members.iter().filter(|&&b| lattice.is_subgroup(a, b)).count() as u64;
                        weyl * above
                    })
                    .collect()
            })
            .collect();
        BurnsideRing { level, classes, class_of, table: TableOfMarks { level, representatives, matrix } }
    }

    pub fn level(&self) -> SubgroupId {
        self.level
    }

    pub fn rank(&self) -> usize {
        self.classes.len()
    }

    /// Classes of subgroups of the level under conjugation by the level.
    pub fn classes(&self) -> &[Vec<SubgroupId>] {
        &self.classes
    }

    pub fn representative(&self, i: usize) -> SubgroupId {
        self.classes[i][0]
    }

    /// Position of the class of `q`, if `q` is a subgroup of the level.
    pub fn class_index(&self, q: SubgroupId) -> Option<usize> {
        self.class_of.get(&q).copied()
    }

    pub fn table(&self) -> &TableOfMarks {
        &self.table
    }
}
