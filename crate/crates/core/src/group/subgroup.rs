use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

use super::{ElementSet, FiniteGroup};

/// A subgroup of a [`FiniteGroup`], as a sorted list of element indices.
///
/// Equality, hashing and ordering only look at the element set. Ordering is
/// by order, then lexicographically by element list.
#[derive(Debug, Clone)]
pub struct Subgroup {
    elements: Vec<usize>,
    set: ElementSet,
    generators: Vec<usize>,
}

impl Subgroup {
    /// `elements` need not be sorted. `generators` must generate the subgroup.
    pub(crate) fn from_elements(universe: usize, mut elements: Vec<usize>, generators: Vec<usize>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        let set = ElementSet::from_indices(universe, elements.iter().copied());
        let generators = generators.into_iter().filter(|&g| g != 0).collect();
        Subgroup { elements, set, generators }
    }

    /// Replaces the generator list by a short one picked greedily from the
    /// elements, largest element order first.
    pub(crate) fn with_small_generators(mut self, group: &FiniteGroup) -> Self {
        let mut candidates: Vec<usize> = self.elements.clone();
        candidates.sort_by_key(|&x| (std::cmp::Reverse(group.element_order(x)), x));
        let mut current = group.trivial();
        let mut gens = Vec::new();
        for x in candidates {
            if current.order() == self.order() {
                break;
            }
            if !current.contains(x) {
                current = group.extend(&current, &[x]);
                gens.push(x);
            }
        }
        self.generators = gens;
        self
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn set(&self) -> &ElementSet {
        &self.set
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.set.contains(x)
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.order() <= other.order() && self.set.is_subset(&other.set)
    }

    /// Checks closure, identity and inverses against `group`, plus Lagrange.
    pub fn is_valid_in(&self, group: &FiniteGroup) -> bool {
        self.contains(0)
            && group.order() % self.order() == 0
            && self.elements.iter().all(|&a| self.contains(group.inv(a)))
            && self.elements.iter().all(|&a| self.elements.iter().all(|&b| self.contains(group.mul(a, b))))
    }

    /// Generators in cycle notation, e.g. `(1,2); (1,2,3)`.
    pub fn describe(&self, group: &FiniteGroup) -> String {
        if self.generators.is_empty() {
            return "()".to_string();
        }
        self.generators.iter().map(|&g| group.perm(g).to_string()).collect::<Vec<_>>().join("; ")
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.elements.hash(state);
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order().cmp(&other.order()).then_with(|| self.elements.cmp(&other.elements))
    }
}
