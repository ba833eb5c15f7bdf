//! Inputs shared by the benchmarks.

use std::sync::Arc;

use domtilt::fixtures;
use domtilt::pathalg::Algebra;

/// A bundled fixture; panics on an unknown name.
pub fn algebra(name: &str) -> Arc<Algebra> {
    fixtures::algebra(name).expect("bundled fixture")
}

#[cfg(test)]
mod tests {
    #[test]
    fn fixtures_load() {
        assert_eq!(super::algebra("e4").num_vertices(), 4);
    }
}
