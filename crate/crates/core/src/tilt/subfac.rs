//! `Sub^n(Q)`, `Fac_n(Q)`, Q-codimension and dominant dimension with
//! respect to an injective module, by iterated minimal approximations.

use serde::Serialize;

use crate::homo::{min_inj_coresolution, Bounded};
use crate::repmod::Module;

use super::{AddCategory, Approximation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Length {
    /// The sequence stops with an epimorphism (monomorphism) at this stage.
    Reached(usize),
    /// The approximation at this stage is not a monomorphism (epimorphism),
    /// so the module is not in `Sub^{stage+1}` (`Fac_{stage+1}`).
    Fails { stage: usize },
    Exceeds(usize),
}

impl Length {
    pub fn value(self) -> Option<usize> {
        match self {
            Length::Reached(n) => Some(n),
            _ => None,
        }
    }
}

/// `0 -> X -> Q^0 -> Q^1 -> ...` with `X^{i+1} = Cok(X^i -> Q^i)`.
#[derive(Clone, Debug)]
pub struct AddCoresolution {
    pub stages: Vec<Approximation>,
    /// `X^0 = X, X^1, ...`
    pub cosyzygies: Vec<Module>,
    pub length: Length,
}

/// `... -> Q_1 -> Q_0 -> Y -> 0` with `Y_{i+1} = Ker(Q_i -> Y_i)`.
#[derive(Clone, Debug)]
pub struct AddResolution {
    pub stages: Vec<Approximation>,
    pub syzygies: Vec<Module>,
    pub length: Length,
}

pub fn add_coresolution(x: &Module, add: &AddCategory, bound: usize) -> AddCoresolution {
    let mut out = AddCoresolution { stages: Vec::new(), cosyzygies: vec![x.clone()], length: Length::Exceeds(bound) };
    for i in 0..=bound {
        let ap = add.left_approximation(&out.cosyzygies[i]);
        let mono = ap.morphism.is_injective();
        let (c, _) = ap.morphism.cokernel();
        out.stages.push(ap);
        if !mono {
            out.length = Length::Fails { stage: i };
            return out;
        }
        let done = c.is_zero();
        out.cosyzygies.push(c);
        if done {
            out.length = Length::Reached(i);
            return out;
        }
    }
    out
}

pub fn add_resolution(y: &Module, add: &AddCategory, bound: usize) -> AddResolution {
    let mut out = AddResolution { stages: Vec::new(), syzygies: vec![y.clone()], length: Length::Exceeds(bound) };
    for i in 0..=bound {
        let ap = add.right_approximation(&out.syzygies[i]);
        let epi = ap.morphism.is_surjective();
        let k = ap.morphism.kernel().module;
        out.stages.push(ap);
        if !epi {
            out.length = Length::Fails { stage: i };
            return out;
        }
        let done = k.is_zero();
        out.syzygies.push(k);
        if done {
            out.length = Length::Reached(i);
            return out;
        }
    }
    out
}

/// `Q-codim X`.
pub fn sub_codim(x: &Module, q: &Module, bound: usize) -> Length {
    add_coresolution(x, &AddCategory::new(q), bound).length
}

/// `Q-dim Y`.
pub fn fac_dim(y: &Module, q: &Module, bound: usize) -> Length {
    add_resolution(y, &AddCategory::new(q), bound).length
}

/// `X in Sub^n(Q)`: `n` monomorphic approximation steps, or an earlier stop.
pub fn in_sub(x: &Module, add: &AddCategory, n: usize) -> bool {
    if n == 0 {
        return true;
    }
    match add_coresolution(x, add, n - 1).length {
        Length::Reached(_) | Length::Exceeds(_) => true,
        Length::Fails { .. } => false,
    }
}

/// `Y in Fac_n(Q)`.
pub fn in_fac(y: &Module, add: &AddCategory, n: usize) -> bool {
    if n == 0 {
        return true;
    }
    match add_resolution(y, add, n - 1).length {
        Length::Reached(_) | Length::Exceeds(_) => true,
        Length::Fails { .. } => false,
    }
}

/// Number of leading terms of the minimal injective coresolution of `x`
/// lying in `add I`, or `Exceeds` when all of the first `bound + 1` do.
pub fn i_dominant_dimension(x: &Module, i: &Module, bound: usize) -> Bounded {
    let support: Vec<bool> = i.socle_dims().iter().map(|&d| d > 0).collect();
    let cores = min_inj_coresolution(x, bound);
    for (k, _) in cores.terms.iter().enumerate() {
        let mult = cores.term_multiplicities(k);
        if mult.iter().zip(&support).any(|(&m, &s)| m > 0 && !s) {
            return Bounded::Finite(k);
        }
    }
    Bounded::Exceeds(bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn e4_i() -> (std::sync::Arc<crate::pathalg::Algebra>, Module) {
        let a = fixtures::algebra("e4").unwrap();
        let i = Module::direct_sum(&a, &[1, 2, 3].map(|v| Module::injective(&a, v)));
        (a, i)
    }

    #[test]
    fn e4_dominant_dimension() {
        let (a, i) = e4_i();
        assert_eq!(i_dominant_dimension(&Module::regular(&a), &i, 10), Bounded::Finite(2));
        let add = AddCategory::new(&i);
        assert!(in_sub(&Module::regular(&a), &add, 2));
        assert!(!in_sub(&Module::regular(&a), &add, 3));
    }

    #[test]
    fn selfinjective_has_unbounded_dominant_dimension() {
        let a = fixtures::algebra("nakayama_selfinj").unwrap();
        let da = Module::dual_regular(&a);
        assert_eq!(i_dominant_dimension(&Module::regular(&a), &da, 8), Bounded::Exceeds(8));
    }

    #[test]
    fn objects_of_add_q_have_codim_zero() {
        let (a, i) = e4_i();
        assert_eq!(sub_codim(&Module::injective(&a, 2), &i, 3), Length::Reached(0));
        assert_eq!(fac_dim(&Module::injective(&a, 2), &i, 3), Length::Reached(0));
    }
}
