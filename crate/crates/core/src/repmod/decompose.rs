//! Krull-Schmidt decomposition by Fitting splitting along random
//! endomorphisms, with locality certified by the trace form.
//!
//! For `p > dim M` the radical of `End(M)` is the kernel of the form
//! `(x, y) -> tr(xy)`, so `M` is indecomposable exactly when that form
//! has rank one.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactla::{find_root, Mat, Matrix};

use super::{hom_space, Module, Morphism, Subspace};

const SEED: u64 = 0x5eed_d0d0;
const MAX_TRIES: usize = 400;

/// An indecomposable summand with its split inclusion and projection.
#[derive(Clone, Debug)]
pub struct Summand {
    pub module: Module,
    pub inclusion: Morphism,
    pub projection: Morphism,
}

impl Summand {
    /// The idempotent `projection then inclusion` of the ambient module.
    pub fn idempotent(&self) -> Morphism {
        self.projection.then(&self.inclusion)
    }
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub module: Module,
    /// All indecomposable summands, in discovery order.
    pub summands: Vec<Summand>,
    /// Isomorphism classes as indices into `summands`, first member is the
    /// representative; ordered by dimension vector, then discovery.
    pub classes: Vec<Vec<usize>>,
}

impl Decomposition {
    pub fn multiplicities(&self) -> Vec<(Module, usize)> {
        self.classes.iter().map(|c| (self.summands[c[0]].module.clone(), c.len())).collect()
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    /// Orthogonal idempotents summing to the identity, each with local
    /// endomorphism ring.
    pub fn verify(&self) -> bool {
        let m = &self.module;
        let es: Vec<Morphism> = self.summands.iter().map(Summand::idempotent).collect();
        let mut total = Morphism::zero(m, m);
        for (i, e) in es.iter().enumerate() {
            total = total.add(e);
            for (j, g) in es.iter().enumerate() {
                let prod = e.then(g);
                let ok = if i == j { prod.mats() == e.mats() } else { prod.is_zero() };
                if !ok {
                    return false;
                }
            }
        }
        let id = Morphism::identity(m);
        total.mats() == id.mats() && self.summands.iter().all(|s| is_local(&s.module))
    }
}

fn gram_rank(basis: &[Morphism]) -> usize {
    if basis.is_empty() {
        return 0;
    }
    let f = basis[0].source().field();
    let rows: Vec<Vec<u32>> = basis
        .iter()
        .map(|x| basis.iter().map(|y| x.then(y).trace()).collect())
        .collect();
    Mat::from_rows(&f, basis.len(), rows).rank()
}

/// `End(M)` is local.
pub fn is_local(m: &Module) -> bool {
    !m.is_zero() && gram_rank(&hom_space(m, m)) == 1
}

fn mat_pow(m: &Matrix, mut e: usize) -> Matrix {
    let f = *m.field();
    let mut acc = Mat::identity(&f, m.rows());
    let mut b = m.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(&b);
        }
        b = b.mul(&b);
        e >>= 1;
    }
    acc
}

/// A nontrivial Fitting decomposition `M = K + I`, if `x` has one.
fn fitting_split<R: Rng>(m: &Module, x: &Morphism, rng: &mut R) -> Option<(Subspace, Subspace)> {
    let f = m.field();
    for t in 0..m.dims().len() {
        if m.dims()[t] == 0 {
            continue;
        }
        let Some(lambda) = find_root(&f, &x.mat(t).charpoly(), rng) else { continue };
        let y: Vec<Matrix> = x
            .mats()
            .iter()
            .map(|a| {
                let l = Mat::identity(&f, a.rows()).scale(&lambda);
                mat_pow(&a.sub(&l), a.rows())
            })
            .collect();
        let ker = Subspace::new(
            y.iter().map(|a| Mat::from_rows(&f, a.rows(), a.left_kernel_basis())).collect(),
        );
        let k = ker.dim();
        if k == 0 || k == m.dim() {
            continue;
        }
        let im = Subspace::new(y);
        return Some((ker, im));
    }
    None
}

fn split<R: Rng>(m: &Module, rng: &mut R) -> Vec<Summand> {
    if m.is_zero() {
        return Vec::new();
    }
    let end = hom_space(m, m);
    let whole = || {
        vec![Summand { module: m.clone(), inclusion: Morphism::identity(m), projection: Morphism::identity(m) }]
    };
    if end.len() == 1 || gram_rank(&end) == 1 {
        return whole();
    }
    let f = m.field();
    for _ in 0..MAX_TRIES {
        let coeffs: Vec<u32> = end.iter().map(|_| rng.gen_range(0..f.characteristic())).collect();
        let terms: Vec<(u32, &Morphism)> = coeffs.iter().copied().zip(end.iter()).collect();
        let x = Morphism::combine(m, m, &terms);
        let Some((ker, im)) = fitting_split(m, &x, rng) else { continue };
        let mut out = Vec::new();
        for (part, other) in [(&ker, &im), (&im, &ker)] {
            let emb = m.submodule(part);
            // Coordinates in the basis (part, other) of each M_t.
            let proj_mats: Vec<Matrix> = (0..m.dims().len())
                .map(|t| {
                    let b = part.0[t].vstack(&other.0[t]);
                    let inv = b.inverse().expect("complementary subspaces");
                    inv.block(0, 0, inv.rows(), part.0[t].rows())
                })
                .collect();
            let proj = Morphism::raw(m.clone(), emb.module.clone(), proj_mats);
            for s in split(&emb.module, rng) {
                out.push(Summand {
                    module: s.module.clone(),
                    inclusion: s.inclusion.then(&emb.inclusion),
                    projection: proj.then(&s.projection),
                });
            }
        }
        return out;
    }
    panic!("no splitting endomorphism found after {MAX_TRIES} tries; End(M)/rad is not split");
}

/// Isomorphism of two indecomposables: some `g f` is a unit of `End(X)`.
pub fn is_isomorphic_indecomposable(x: &Module, y: &Module) -> bool {
    if x.dims() != y.dims() {
        return false;
    }
    let fs = hom_space(x, y);
    if fs.is_empty() {
        return false;
    }
    let gs = hom_space(y, x);
    fs.iter().any(|f| gs.iter().any(|g| f.then(g).trace() != 0))
}

pub fn decompose(m: &Module) -> Decomposition {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let summands = split(m, &mut rng);
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (i, s) in summands.iter().enumerate() {
        match classes
            .iter_mut()
            .find(|c| is_isomorphic_indecomposable(&summands[c[0]].module, &s.module))
        {
            Some(c) => c.push(i),
            None => classes.push(vec![i]),
        }
    }
    classes.sort_by(|a, b| summands[a[0]].module.dims().cmp(summands[b[0]].module.dims()).then(a[0].cmp(&b[0])));
    Decomposition { module: m.clone(), summands, classes }
}

/// One summand from each isomorphism class.
pub fn basic(m: &Module) -> Module {
    let d = decompose(m);
    let reps: Vec<Module> = d.classes.iter().map(|c| d.summands[c[0]].module.clone()).collect();
    Module::direct_sum(m.algebra(), &reps)
}

/// Compares Krull-Schmidt multisets.
pub fn is_isomorphic(m: &Module, n: &Module) -> bool {
    if m.dims() != n.dims() {
        return false;
    }
    let a = decompose(m).multiplicities();
    let b = decompose(n).multiplicities();
    if a.len() != b.len() {
        return false;
    }
    let mut used = vec![false; b.len()];
    for (x, k) in &a {
        let hit = b
            .iter()
            .enumerate()
            .position(|(j, (y, l))| !used[j] && l == k && is_isomorphic_indecomposable(x, y));
        match hit {
            Some(j) => used[j] = true,
            None => return false,
        }
    }
    true
}
