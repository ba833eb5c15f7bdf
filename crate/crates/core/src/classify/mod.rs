//! Almost Auslander(-Gorenstein), Iwanaga-Gorenstein, Auslander,
//! relative Auslander and hereditary detection, with verifiers for the
//! tilting characterisations.

mod verify;

use std::sync::Arc;

use serde::Serialize;

use crate::homo::{gldim, id, pd, Bounded};
use crate::pathalg::Algebra;
use crate::repmod::Module;
use crate::tilt::{i_dominant_dimension, tilting_chain, TiltingChain};

pub use verify::{
    verify_almost_ag_theorem, verify_auslander_tilting, verify_injective_bookkeeping, verify_main_theorem,
    AlmostAgEvidence, AuslanderTiltingEvidence, DegreeEvidence, MainTheoremEvidence,
};

/// Vertices `i` with `pd I(i) <= 1`.
pub fn canonical_injective_vertices(alg: &Arc<Algebra>) -> Vec<usize> {
    (0..alg.num_vertices()).filter(|&i| pd(&Module::injective(alg, i), 1).is_finite()).collect()
}

/// The basic sum of indecomposable injectives with `pd <= 1`; may be zero.
pub fn canonical_injective_pd1(alg: &Arc<Algebra>) -> Module {
    let parts: Vec<Module> = canonical_injective_vertices(alg).iter().map(|&i| Module::injective(alg, i)).collect();
    Module::direct_sum(alg, &parts)
}

/// The basic projective-injective module.
pub fn projective_injective(alg: &Arc<Algebra>) -> Module {
    let parts: Vec<Module> =
        (0..alg.num_vertices()).map(|i| Module::projective(alg, i)).filter(Module::is_injective).collect();
    Module::direct_sum(alg, &parts)
}

/// `Some(b >= k)` when decidable.
pub fn at_least(b: Bounded, k: usize) -> Option<bool> {
    match b {
        Bounded::Finite(g) => Some(g >= k),
        Bounded::Exceeds(e) if e + 1 >= k => Some(true),
        Bounded::Exceeds(_) => None,
    }
}

fn and(a: Option<bool>, b: Option<bool>) -> Option<bool> {
    match (a, b) {
        (Some(false), _) | (_, Some(false)) => Some(false),
        (Some(true), Some(true)) => Some(true),
        _ => None,
    }
}

/// The values of `n` for which a level condition holds: `from..=to`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Levels {
    pub from: usize,
    /// `Exceeds(b)`: holds at least up to `b`.
    pub to: Bounded,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationReport {
    pub bound: usize,
    /// Vertices of the summands of `I`, the canonical injective with `pd <= 1`.
    pub i_vertices: Vec<usize>,
    /// The same over `A^op`.
    pub j_vertices: Vec<usize>,
    pub gldim: Bounded,
    pub id: Bounded,
    pub id_op: Bounded,
    pub gdom_i: Bounded,
    pub gdom_j_op: Bounded,
    pub domdim: Bounded,
    pub almost_ag: Option<Levels>,
    pub almost_auslander: Option<Levels>,
    /// Least `k` with `A` `k`-Iwanaga-Gorenstein.
    pub iwanaga_gorenstein: Option<usize>,
    pub auslander: Option<bool>,
    pub relative_auslander: Option<bool>,
    pub hereditary: Option<bool>,
    pub self_injective: bool,
    #[serde(skip)]
    pub chain: Option<TiltingChain>,
}

fn levels(lower: Bounded, gdom: Bounded) -> Option<Levels> {
    let low = lower.finite()?;
    let from = low.saturating_sub(1);
    let to = match gdom {
        Bounded::Finite(0) => return None,
        Bounded::Finite(g) => Bounded::Finite(g - 1),
        Bounded::Exceeds(b) => Bounded::Exceeds(b),
    };
    match to {
        Bounded::Finite(t) if t < from => None,
        Bounded::Exceeds(b) if b < from => None,
        _ => Some(Levels { from, to }),
    }
}

impl ClassificationReport {
    /// `id A <= n+1 <= gdom_I A`.
    pub fn is_almost_ag(&self, n: usize) -> Option<bool> {
        and(self.id.at_most(n + 1), at_least(self.gdom_i, n + 1))
    }

    /// `gldim A <= n+1 <= gdom_I A`.
    pub fn is_almost_auslander(&self, n: usize) -> Option<bool> {
        and(self.gldim.at_most(n + 1), at_least(self.gdom_i, n + 1))
    }

    pub fn is_iwanaga_gorenstein(&self, k: usize) -> Option<bool> {
        and(self.id.at_most(k), self.id_op.at_most(k))
    }

    /// Implications between the flags that hold for every algebra.
    pub fn consistent(&self) -> bool {
        let imp = |a: Option<bool>, b: Option<bool>| a != Some(true) || b != Some(false);
        (0..=self.bound.saturating_sub(1)).all(|n| {
            imp(self.is_almost_auslander(n), self.is_almost_ag(n))
                && imp(self.is_almost_auslander(n), Some(self.gldim.is_finite()))
                && imp(self.is_almost_ag(n), self.is_iwanaga_gorenstein(n + 1))
        }) && imp(self.hereditary, self.is_almost_auslander(0))
            && imp(self.auslander, self.is_almost_auslander(1))
            && imp(self.relative_auslander, self.is_almost_auslander(1))
    }
}

pub fn classify(alg: &Arc<Algebra>, bound: usize) -> crate::Result<ClassificationReport> {
    let op = alg.opposite()?;
    let a = Module::regular(alg);
    let a_op = Module::regular(&op);
    let i = canonical_injective_pd1(alg);
    let j = canonical_injective_pd1(&op);
    let g = gldim(alg, bound);
    let id_a = id(&a, bound);
    let id_op = id(&a_op, bound);
    let gdom_i = i_dominant_dimension(&a, &i, bound);
    let gdom_j_op = i_dominant_dimension(&a_op, &j, bound);
    let domdim = i_dominant_dimension(&a, &projective_injective(alg), bound);
    let iwanaga_gorenstein = match (id_a, id_op) {
        (Bounded::Finite(x), Bounded::Finite(y)) => Some(x.max(y)),
        _ => None,
    };
    let gl2 = g.at_most(2);
    let auslander = and(gl2, at_least(domdim, 2));
    let relative_auslander = and(gl2, and(at_least(gdom_i, 2), at_least(gdom_j_op, 2)));
    let self_injective = id_a == Bounded::Finite(0);
    let chain = if self_injective || i.is_zero() { None } else { tilting_chain(&a, &i, bound).ok() };
    Ok(ClassificationReport {
        bound,
        i_vertices: canonical_injective_vertices(alg),
        j_vertices: canonical_injective_vertices(&op),
        gldim: g,
        id: id_a,
        id_op,
        gdom_i,
        gdom_j_op,
        domdim,
        almost_ag: levels(id_a, gdom_i),
        almost_auslander: levels(g, gdom_i),
        iwanaga_gorenstein,
        auslander,
        relative_auslander,
        hereditary: g.at_most(1),
        self_injective,
        chain,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn selfinjective_has_i_equal_da() {
        let a = fixtures::algebra("nakayama_selfinj").unwrap();
        assert_eq!(canonical_injective_vertices(&a), (0..a.num_vertices()).collect::<Vec<_>>());
        let r = classify(&a, 8).unwrap();
        assert!(r.self_injective);
        assert_eq!(r.is_almost_ag(0), Some(true));
        assert_eq!(r.is_almost_ag(5), Some(true));
        assert!(r.consistent());
    }

    #[test]
    fn e4_is_almost_one_auslander() {
        let a = fixtures::algebra("e4").unwrap();
        assert_eq!(canonical_injective_vertices(&a), vec![1, 2, 3]);
        let r = classify(&a, 10).unwrap();
        assert_eq!(r.is_almost_auslander(1), Some(true));
        assert_eq!(r.is_almost_auslander(0), Some(false));
        assert_eq!(r.almost_auslander, Some(Levels { from: 1, to: Bounded::Finite(1) }));
        assert!(r.chain.is_some() && r.consistent());
    }

    #[test]
    fn hereditary_a3() {
        let a = fixtures::algebra("a3").unwrap();
        let r = classify(&a, 6).unwrap();
        assert_eq!(r.hereditary, Some(true));
        assert_eq!(r.is_almost_auslander(0), Some(true));
        assert!(r.consistent());
    }

    #[test]
    fn at_least_is_bound_relative() {
        assert_eq!(at_least(Bounded::Exceeds(4), 5), Some(true));
        assert_eq!(at_least(Bounded::Exceeds(4), 6), None);
        assert_eq!(at_least(Bounded::Finite(2), 3), Some(false));
    }
}
