//! Exact computations in `P`-local Burnside rings of finite groups.

pub mod burnside;
pub mod error;
pub mod group;
pub mod perm;
pub mod primes;
pub mod rational;
pub mod tambara;

pub use burnside::{Burnside, BurnsideElement, GSet, TableOfMarks};
pub use error::{Error, Result};
pub use group::{build_group, FiniteGroup, Subgroup, SubgroupId, SubgroupLattice};
pub use primes::PrimeSet;
pub use tambara::{IndexingSystem, LocalizedGreenRing, NormAnalysis, NormPair};
