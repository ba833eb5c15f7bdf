//! Bundled example algebras.

use std::sync::Arc;

use crate::error::Result;
use crate::input::AlgebraFile;
use crate::pathalg::Algebra;

pub const E1: &str = include_str!("../fixtures/e1.alg");
pub const E2: &str = include_str!("../fixtures/e2.alg");
pub const E3_N4: &str = include_str!("../fixtures/e3_n4.alg");
pub const E3_N5: &str = include_str!("../fixtures/e3_n5.alg");
pub const E3P_N4: &str = include_str!("../fixtures/e3p_n4.alg");
pub const E3P_N5: &str = include_str!("../fixtures/e3p_n5.alg");
pub const E4: &str = include_str!("../fixtures/e4.alg");
pub const A3: &str = include_str!("../fixtures/a3.alg");
pub const A3_REV: &str = include_str!("../fixtures/a3_rev.alg");
pub const AUS_KX2: &str = include_str!("../fixtures/aus_kx2.alg");
pub const NAKAYAMA_SELFINJ: &str = include_str!("../fixtures/nakayama_selfinj.alg");

/// `(name, text)` for every bundled fixture.
pub const ALL: &[(&str, &str)] = &[
    ("e1", E1),
    ("e2", E2),
    ("e3_n4", E3_N4),
    ("e3_n5", E3_N5),
    ("e3p_n4", E3P_N4),
    ("e3p_n5", E3P_N5),
    ("e4", E4),
    ("a3", A3),
    ("a3_rev", A3_REV),
    ("aus_kx2", AUS_KX2),
    ("nakayama_selfinj", NAKAYAMA_SELFINJ),
];

pub fn text(name: &str) -> Option<&'static str> {
    ALL.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

/// Parses a bundled fixture. Panics on an unknown name.
pub fn file(name: &str) -> AlgebraFile {
    AlgebraFile::parse(text(name).unwrap_or_else(|| panic!("no fixture `{name}`"))).expect("bundled fixture parses")
}

pub fn algebra(name: &str) -> Result<Arc<Algebra>> {
    file(name).build(None, None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions() {
        let expect = [
            ("e1", 15),
            ("e2", 9),
            ("e3_n4", 14),
            ("e3_n5", 18),
            ("e4", 9),
            ("a3", 6),
            ("a3_rev", 6),
            ("aus_kx2", 5),
            ("nakayama_selfinj", 4),
        ];
        for (n, d) in expect {
            assert_eq!(algebra(n).unwrap().dim(), d, "{n}");
        }
    }
}
