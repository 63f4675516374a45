//! Groups shared by the benchmarks.

use std::sync::Arc;

use burnside_core::{build_group, Burnside, FiniteGroup};

pub const SL23: &str = "(1,4,7)(2,8,5); (1,6,2,3)(4,7,8,5)";

/// `(name, spec)` pairs, smallest first.
pub const GROUPS: &[(&str, &str)] = &[("S3", "S3"), ("S4", "S4"), ("SL(2,3)", SL23), ("A5", "A5"), ("S5", "S5")];

pub fn group(spec: &str) -> FiniteGroup {
    build_group(spec).expect("benchmark specs are valid")
}

pub fn burnside(spec: &str) -> Arc<Burnside> {
    Arc::new(Burnside::for_group(group(spec)))
}
