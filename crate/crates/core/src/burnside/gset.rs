use crate::error::{Error, Result};
use crate::group::{Subgroup, SubgroupId, SubgroupLattice};

/// A finite left `H`-set on points `0..size`, for a subgroup `H` of the
/// ambient group. The action is tabulated per element of `H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GSet {
    acting: SubgroupId,
    elements: Vec<usize>,
    size: usize,
    action: Vec<u32>,
}

impl GSet {
    /// Tabulates `act` and checks the action axioms.
    pub fn new(lattice: &SubgroupLattice, acting: SubgroupId, size: usize, act: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let elements = lattice.subgroup(acting).elements().to_vec();
        let mut action = Vec::with_capacity(elements.len() * size);
        for &g in &elements {
            for x in 0..size {
                let y = act(g, x);
                if y >= size {
                    return Err(Error::InvalidGSet(format!("point {y} out of range")));
                }
                action.push(y as u32);
            }
        }
        let set = GSet { acting, elements, size, action };
        set.check_axioms(lattice)?;
        Ok(set)
    }

    pub fn empty(lattice: &SubgroupLattice, acting: SubgroupId) -> Self {
        GSet { acting, elements: lattice.subgroup(acting).elements().to_vec(), size: 0, action: Vec::new() }
    }

    /// `n` fixed points.
    pub fn trivial(lattice: &SubgroupLattice, acting: SubgroupId, n: usize) -> Self {
        let elements = lattice.subgroup(acting).elements().to_vec();
        let action = (0..elements.len()).flat_map(|_| 0..n as u32).collect();
        GSet { acting, elements, size: n, action }
    }

    /// The orbit `H/K` of left cosets `hK`, ordered by least element.
    pub fn cosets(lattice: &SubgroupLattice, acting: SubgroupId, stabilizer: SubgroupId) -> Result<Self> {
        let g = lattice.group();
        let h = lattice.subgroup(acting);
        let k = lattice.subgroup(stabilizer);
        if !k.is_subgroup_of(h) {
            return Err(Error::NotContained { inner: lattice.subgroup_label(stabilizer), outer: lattice.subgroup_label(acting) });
        }
        // coset_of[x] = index of the coset xK
        let mut coset_of = vec![usize::MAX; g.order()];
        let mut count = 0;
        for &x in h.elements() {
            if coset_of[x] != usize::MAX {
                continue;
            }
            for &y in k.elements() {
                coset_of[g.mul(x, y)] = count;
            }
            count += 1;
        }
        let reps: Vec<usize> = {
            let mut reps = vec![0; count];
            for &x in h.elements().iter().rev() {
                reps[coset_of[x]] = x;
            }
            reps
        };
        GSet::new(lattice, acting, count, |a, c| coset_of[g.mul(a, reps[c])])
    }

    pub fn acting(&self) -> SubgroupId {
        self.acting
    }

    pub fn size(&self) -> usize {
        self.size
    }

    fn position(&self, g: usize) -> usize {
        self.elements.binary_search(&g).expect("element of the acting subgroup")
    }

    pub fn act(&self, g: usize, x: usize) -> usize {
        self.action[self.position(g) * self.size + x] as usize
    }

    pub fn disjoint_union(&self, other: &GSet) -> GSet {
        assert_eq!(self.acting, other.acting, "G-sets over different subgroups");
        let size = self.size + other.size;
        let mut action = Vec::with_capacity(self.elements.len() * size);
        for pos in 0..self.elements.len() {
            action.extend_from_slice(&self.action[pos * self.size..(pos + 1) * self.size]);
            action.extend(other.action[pos * other.size..(pos + 1) * other.size].iter().map(|&y| y + self.size as u32));
        }
        GSet { acting: self.acting, elements: self.elements.clone(), size, action }
    }

    /// Number of points fixed by every element of `q`.
    pub fn fixed_points(&self, q: &Subgroup) -> usize {
        (0..self.size).filter(|&x| q.generators().iter().all(|&g| self.act(g, x) == x)).count()
    }

    pub fn stabilizer(&self, lattice: &SubgroupLattice, x: usize) -> SubgroupId {
        let g = lattice.group();
        let fixing: Vec<usize> = self.elements.iter().copied().filter(|&e| self.act(e, x) == x).collect();
        lattice.id_of(&g.closure(&fixing)).expect("stabilizers are subgroups")
    }

    /// The identity fixes every point and `g·(h·x) = (gh)·x`. Checking `g`
    /// over generators and `h` over all elements covers every pair.
    pub fn check_axioms(&self, lattice: &SubgroupLattice) -> Result<()> {
        let g = lattice.group();
        for x in 0..self.size {
            if self.act(0, x) != x {
                return Err(Error::InvalidGSet(format!("identity moves point {x}")));
            }
        }
        for &a in lattice.subgroup(self.acting).generators() {
            for &b in &self.elements {
                let ab = g.mul(a, b);
                for x in 0..self.size {
                    if self.act(a, self.act(b, x)) != self.act(ab, x) {
                        return Err(Error::InvalidGSet(format!("action is not associative at point {x}")));
                    }
                }
            }
        }
        Ok(())
    }
}
