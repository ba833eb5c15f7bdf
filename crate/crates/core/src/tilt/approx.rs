//! Minimal add Q-approximations.
//!
//! The multiplicity of an indecomposable `Q_k` in the target of the minimal
//! left approximation of `X` is the dimension of
//! `Hom(X, Q_k) / rad_Q(X, Q_k)`, where `rad_Q(X, Q_k)` consists of the maps
//! factoring through a radical map into `Q_k`. Lifting a basis of that
//! quotient gives the approximation directly.

use serde::Serialize;

use crate::exactla::{Field, Mat, Matrix, PrimeField};
use crate::repmod::{decompose, hom_space, is_isomorphic_indecomposable, Module, Morphism};

/// `add Q`, presented by one module per isomorphism class of summands.
#[derive(Clone, Debug)]
pub struct AddCategory {
    pub module: Module,
    pub reps: Vec<Module>,
    /// `rad[l][k]`: a basis of `rad(Q_l, Q_k)`.
    rad: Vec<Vec<Vec<Morphism>>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
}

/// A minimal approximation `X -> Q'` (left) or `Q' -> X` (right).
#[derive(Clone, Debug)]
pub struct Approximation {
    pub side: Side,
    pub morphism: Morphism,
    /// Multiplicity of each `AddCategory::reps` entry in `Q'`.
    pub multiplicities: Vec<usize>,
}

fn span_basis(f: &PrimeField, width: usize, rows: Vec<Vec<u32>>) -> Matrix {
    Mat::from_rows(f, width, rows).row_space()
}

fn rank_with(span: &Matrix, v: &[u32]) -> usize {
    let f = *span.field();
    span.vstack(&Mat::from_rows(&f, span.cols(), vec![v.to_vec()])).rank()
}

fn coord_width(a: &Module, b: &Module) -> usize {
    a.dims().iter().zip(b.dims()).map(|(x, y)| x * y).sum()
}

impl AddCategory {
    pub fn new(q: &Module) -> AddCategory {
        let d = decompose(q);
        let reps: Vec<Module> = d.multiplicities().into_iter().map(|(m, _)| m).collect();
        AddCategory::from_indecomposables(q, reps)
    }

    /// `reps` must be pairwise non-isomorphic indecomposables.
    pub fn from_indecomposables(q: &Module, reps: Vec<Module>) -> AddCategory {
        let rad = reps
            .iter()
            .enumerate()
            .map(|(l, ql)| {
                reps.iter()
                    .enumerate()
                    .map(|(k, qk)| {
                        let hs = hom_space(ql, qk);
                        if l != k {
                            return hs;
                        }
                        // Local endomorphism ring: the radical is the kernel of the trace.
                        let tr: Vec<u32> = hs.iter().map(Morphism::trace).collect();
                        let Some(p) = tr.iter().position(|&t| t != 0) else { return hs };
                        let f = ql.field();
                        let inv = f.inv(&tr[p]).expect("nonzero trace");
                        hs.iter()
                            .enumerate()
                            .filter(|(i, _)| *i != p)
                            .map(|(i, h)| h.sub(&hs[p].scale(f.mul(&tr[i], &inv))))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        AddCategory { module: q.clone(), reps, rad }
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Index of the representative isomorphic to an indecomposable `x`.
    pub fn position(&self, x: &Module) -> Option<usize> {
        self.reps.iter().position(|r| is_isomorphic_indecomposable(r, x))
    }

    /// `M in add Q`.
    pub fn contains(&self, m: &Module) -> bool {
        if m.is_zero() {
            return true;
        }
        decompose(m).multiplicities().iter().all(|(x, _)| self.position(x).is_some())
    }

    pub fn left_approximation(&self, x: &Module) -> Approximation {
        let alg = x.algebra();
        let f = x.field();
        let homs: Vec<Vec<Morphism>> = self.reps.iter().map(|qk| hom_space(x, qk)).collect();
        let mut comps = Vec::new();
        let mut mult = Vec::with_capacity(self.reps.len());
        for (k, qk) in self.reps.iter().enumerate() {
            let width = coord_width(x, qk);
            let mut rows = Vec::new();
            for (l, hl) in homs.iter().enumerate() {
                for g in hl {
                    for r in &self.rad[l][k] {
                        rows.push(g.then(r).coords());
                    }
                }
            }
            let mut span = span_basis(&f, width, rows);
            let mut m = 0;
            for h in &homs[k] {
                let c = h.coords();
                if rank_with(&span, &c) > span.rows() {
                    span = span.vstack(&Mat::from_rows(&f, width, vec![c])).row_space();
                    comps.push(h.clone());
                    m += 1;
                }
            }
            mult.push(m);
        }
        let morphism = if comps.is_empty() {
            Morphism::zero(x, &Module::zero(alg))
        } else {
            Morphism::from_components_out(x, &comps).1
        };
        Approximation { side: Side::Left, morphism, multiplicities: mult }
    }

    pub fn right_approximation(&self, y: &Module) -> Approximation {
        let alg = y.algebra();
        let f = y.field();
        let homs: Vec<Vec<Morphism>> = self.reps.iter().map(|qk| hom_space(qk, y)).collect();
        let mut comps = Vec::new();
        let mut mult = Vec::with_capacity(self.reps.len());
        for (k, qk) in self.reps.iter().enumerate() {
            let width = coord_width(qk, y);
            let mut rows = Vec::new();
            for (l, hl) in homs.iter().enumerate() {
                for g in hl {
                    for r in &self.rad[k][l] {
                        rows.push(r.then(g).coords());
                    }
                }
            }
            let mut span = span_basis(&f, width, rows);
            let mut m = 0;
            for h in &homs[k] {
                let c = h.coords();
                if rank_with(&span, &c) > span.rows() {
                    span = span.vstack(&Mat::from_rows(&f, width, vec![c])).row_space();
                    comps.push(h.clone());
                    m += 1;
                }
            }
            mult.push(m);
        }
        let morphism = if comps.is_empty() {
            Morphism::zero(&Module::zero(alg), y)
        } else {
            Morphism::from_components_in(y, &comps).1
        };
        Approximation { side: Side::Right, morphism, multiplicities: mult }
    }
}

impl Approximation {
    /// The approximating object `Q'`.
    pub fn object(&self) -> &Module {
        match self.side {
            Side::Left => self.morphism.target(),
            Side::Right => self.morphism.source(),
        }
    }

    /// Every map into (left) or out of (right) `add Q` factors through it:
    /// checked on a Hom basis against each representative.
    pub fn is_approximation(&self, add: &AddCategory) -> bool {
        let f = self.morphism.source().field();
        add.reps.iter().all(|qk| match self.side {
            Side::Left => {
                let x = self.morphism.source();
                let width = coord_width(x, qk);
                let through: Vec<Vec<u32>> =
                    hom_space(self.object(), qk).iter().map(|g| self.morphism.then(g).coords()).collect();
                let span = span_basis(&f, width, through);
                hom_space(x, qk).iter().all(|h| rank_with(&span, &h.coords()) == span.rows())
            }
            Side::Right => {
                let y = self.morphism.target();
                let width = coord_width(qk, y);
                let through: Vec<Vec<u32>> =
                    hom_space(qk, self.object()).iter().map(|g| g.then(&self.morphism).coords()).collect();
                let span = span_basis(&f, width, through);
                hom_space(qk, y).iter().all(|h| rank_with(&span, &h.coords()) == span.rows())
            }
        })
    }

    /// Left minimality: `g f = f` forces `g` invertible. Equivalently the
    /// one-sided ideal `{h : h f = 0}` of `End(Q')` lies in the radical,
    /// which is the kernel of the trace form. Dually on the right.
    pub fn is_minimal(&self) -> bool {
        let q = self.object();
        if q.is_zero() {
            return true;
        }
        let f = q.field();
        let ends = hom_space(q, q);
        let images: Vec<Vec<u32>> = ends
            .iter()
            .map(|g| match self.side {
                Side::Left => self.morphism.then(g).coords(),
                Side::Right => g.then(&self.morphism).coords(),
            })
            .collect();
        let width = match self.side {
            Side::Left => coord_width(self.morphism.source(), q),
            Side::Right => coord_width(q, self.morphism.target()),
        };
        let kill: Vec<Vec<u32>> = if width == 0 {
            (0..ends.len()).map(|i| (0..ends.len()).map(|j| u32::from(i == j)).collect()).collect()
        } else {
            Mat::from_rows(&f, width, images).left_kernel_basis()
        };
        kill.iter().all(|c| {
            let terms: Vec<(u32, &Morphism)> = c.iter().copied().zip(ends.iter()).collect();
            let h = Morphism::combine(q, q, &terms);
            ends.iter().all(|e| h.then(e).trace() == 0)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn approximation_of_object_in_add_q() {
        let a = fixtures::algebra("e4").unwrap();
        let q = Module::injective(&a, 1).plus(&Module::injective(&a, 3));
        let add = AddCategory::new(&q);
        let x = Module::injective(&a, 3);
        let ap = add.left_approximation(&x);
        assert!(ap.morphism.is_iso());
        assert!(ap.is_approximation(&add) && ap.is_minimal());
    }

    #[test]
    fn zero_approximation() {
        let a = fixtures::algebra("a3").unwrap();
        // Nothing maps from S(1) into P(3) = S(3).
        let add = AddCategory::new(&Module::projective(&a, 2));
        let ap = add.left_approximation(&Module::simple(&a, 0));
        assert!(ap.object().is_zero());
    }

    #[test]
    fn injective_hull_is_the_left_approximation_by_da() {
        for (name, _) in fixtures::ALL {
            let a = fixtures::algebra(name).unwrap();
            let add = AddCategory::new(&Module::dual_regular(&a));
            for i in 0..a.num_vertices() {
                let s = Module::simple(&a, i);
                let ap = add.left_approximation(&s);
                assert_eq!(ap.object().dims(), Module::injective(&a, i).dims(), "{name}");
                assert!(ap.morphism.is_injective() && ap.is_minimal());
                let pa = AddCategory::new(&Module::regular(&a)).right_approximation(&s);
                assert_eq!(pa.object().dims(), Module::projective(&a, i).dims(), "{name}");
                assert!(pa.morphism.is_surjective() && pa.is_minimal());
            }
        }
    }
}
