//! Finite-dimensional right modules, as quiver representations.
//!
//! A module assigns a space `M_v = k^{d_v}` to each vertex and to each arrow
//! `a: s -> t` a `d_s x d_t` matrix acting on row vectors. A path `a*b`
//! acts by `M_a * M_b`.

mod decompose;
mod expr;
mod hom;
mod morphism;
mod sub;

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::exactla::{Field, Mat, Matrix, PrimeField};
use crate::pathalg::Algebra;

pub use decompose::{basic, decompose, is_isomorphic, is_isomorphic_indecomposable, Decomposition, Summand};
pub use expr::{eval_module_expr, ModuleEnv};
pub use hom::{hom_dim, hom_space, trace, trace_space, Presentation};
pub use morphism::Morphism;
pub use sub::{Subspace, SubmoduleEmbedding};

pub(crate) struct Inner {
    alg: Arc<Algebra>,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
    paths: OnceLock<Vec<Matrix>>,
    pres: OnceLock<Arc<Presentation>>,
}

/// A module over a bound quiver algebra. Cheap to clone.
#[derive(Clone)]
pub struct Module(Arc<Inner>);

impl fmt::Debug for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Module{:?}", self.dims())
    }
}

impl Module {
    /// Checks matrix shapes and every defining relation.
    pub fn new(alg: &Arc<Algebra>, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Module> {
        let q = alg.quiver();
        if dims.len() != q.num_vertices() {
            return Err(Error::Dimension(format!("{} vertex dimensions for {} vertices", dims.len(), q.num_vertices())));
        }
        if maps.len() != q.arrows().len() {
            return Err(Error::Dimension(format!("{} arrow maps for {} arrows", maps.len(), q.arrows().len())));
        }
        for (a, m) in q.arrows().iter().zip(&maps) {
            if m.rows() != dims[a.source] || m.cols() != dims[a.target] {
                return Err(Error::Dimension(format!(
                    "arrow `{}` needs a {}x{} matrix, got {}x{}",
                    a.name,
                    dims[a.source],
                    dims[a.target],
                    m.rows(),
                    m.cols()
                )));
            }
        }
        let m = Self::raw(alg, dims, maps);
        for (i, r) in alg.relations().iter().enumerate() {
            let f = alg.field();
            let start = q.arrow(r.terms[0].1[0]).source;
            let end = q.arrow(*r.terms[0].1.last().unwrap()).target;
            let mut acc = Mat::zeros(&f, m.dims()[start], m.dims()[end]);
            for (c, w) in &r.terms {
                acc = acc.add(&m.word_action(w).scale(&f.from_i64(*c)));
            }
            if !acc.is_zero() {
                return Err(Error::RelationViolated(i));
            }
        }
        Ok(m)
    }

    /// No relation check; callers guarantee the module axioms.
    pub(crate) fn raw(alg: &Arc<Algebra>, dims: Vec<usize>, maps: Vec<Matrix>) -> Module {
        Module(Arc::new(Inner { alg: alg.clone(), dims, maps, paths: OnceLock::new(), pres: OnceLock::new() }))
    }

    pub fn zero(alg: &Arc<Algebra>) -> Module {
        let f = alg.field();
        let maps = alg.quiver().arrows().iter().map(|_| Mat::zeros(&f, 0, 0)).collect();
        Self::raw(alg, vec![0; alg.num_vertices()], maps)
    }

    /// `P(i) = e_i A`; the basis at `t` is the normal paths `i -> t`.
    pub fn projective(alg: &Arc<Algebra>, i: usize) -> Module {
        let f = alg.field();
        let n = alg.num_vertices();
        let bases: Vec<Vec<usize>> = (0..n).map(|t| alg.paths_between(i, t)).collect();
        let pos = |t: usize, b: usize| bases[t].iter().position(|&x| x == b).unwrap();
        let maps = alg
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let mut m = Mat::zeros(&f, bases[a.source].len(), bases[a.target].len());
                let ab = alg.arrow_basis(ai);
                for (r, &p) in bases[a.source].iter().enumerate() {
                    for &(k, c) in alg.product(p, ab) {
                        m.set(r, pos(a.target, k), c);
                    }
                }
                m
            })
            .collect();
        Self::raw(alg, bases.iter().map(Vec::len).collect(), maps)
    }

    /// `I(i) = D(A e_i)`; the basis at `t` is dual to the normal paths `t -> i`.
    pub fn injective(alg: &Arc<Algebra>, i: usize) -> Module {
        let f = alg.field();
        let n = alg.num_vertices();
        let bases: Vec<Vec<usize>> = (0..n).map(|t| alg.paths_between(t, i)).collect();
        let maps = alg
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let mut m = Mat::zeros(&f, bases[a.source].len(), bases[a.target].len());
                let ab = alg.arrow_basis(ai);
                for (col, &v) in bases[a.target].iter().enumerate() {
                    for &(k, c) in alg.product(ab, v) {
                        let row = bases[a.source].iter().position(|&x| x == k).unwrap();
                        m.set(row, col, c);
                    }
                }
                m
            })
            .collect();
        Self::raw(alg, bases.iter().map(Vec::len).collect(), maps)
    }

    pub fn simple(alg: &Arc<Algebra>, i: usize) -> Module {
        let f = alg.field();
        let mut dims = vec![0; alg.num_vertices()];
        dims[i] = 1;
        let maps = alg
            .quiver()
            .arrows()
            .iter()
            .map(|a| Mat::zeros(&f, dims[a.source], dims[a.target]))
            .collect();
        Self::raw(alg, dims, maps)
    }

    /// `A_A = P(1) + ... + P(n)`.
    pub fn regular(alg: &Arc<Algebra>) -> Module {
        let ps: Vec<Module> = (0..alg.num_vertices()).map(|i| Self::projective(alg, i)).collect();
        Self::direct_sum(alg, &ps)
    }

    /// `DA = I(1) + ... + I(n)`.
    pub fn dual_regular(alg: &Arc<Algebra>) -> Module {
        let is: Vec<Module> = (0..alg.num_vertices()).map(|i| Self::injective(alg, i)).collect();
        Self::direct_sum(alg, &is)
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.0.alg
    }

    pub fn field(&self) -> PrimeField {
        self.0.alg.field()
    }

    pub fn dims(&self) -> &[usize] {
        &self.0.dims
    }

    pub fn dim(&self) -> usize {
        self.0.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn map(&self, arrow: usize) -> &Matrix {
        &self.0.maps[arrow]
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.0.maps
    }

    pub fn same_algebra(&self, other: &Module) -> bool {
        Arc::ptr_eq(&self.0.alg, &other.0.alg)
    }

    /// Offset of vertex `v` in the concatenated coordinates.
    pub fn offset(&self, v: usize) -> usize {
        self.0.dims[..v].iter().sum()
    }

    /// Action of an arrow word (nonempty, composable).
    pub fn word_action(&self, w: &[usize]) -> Matrix {
        let mut m = self.0.maps[w[0]].clone();
        for &a in &w[1..] {
            m = m.mul(&self.0.maps[a]);
        }
        m
    }

    /// Action of basis path `b` of the algebra: `d_start x d_end`.
    pub fn path_action(&self, b: usize) -> &Matrix {
        &self.path_actions()[b]
    }

    fn path_actions(&self) -> &Vec<Matrix> {
        self.0.paths.get_or_init(|| {
            let alg = &self.0.alg;
            let f = alg.field();
            alg.basis()
                .iter()
                .map(|p| {
                    if p.is_trivial() {
                        Mat::identity(&f, self.0.dims[p.start])
                    } else {
                        self.word_action(&p.word)
                    }
                })
                .collect()
        })
    }

    /// `x * b` for `x` in `M_v`, summed over an algebra element.
    pub fn act(&self, v: usize, x: &[u32], element: &[u32]) -> Vec<Vec<u32>> {
        let f = self.field();
        let n = self.0.alg.num_vertices();
        let mut out: Vec<Vec<u32>> = (0..n).map(|t| vec![0; self.0.dims[t]]).collect();
        for (b, &c) in element.iter().enumerate() {
            let p = &self.0.alg.basis()[b];
            if c == 0 || p.start != v {
                continue;
            }
            let y = self.path_action(b).vec_mul(x);
            for (o, yi) in out[p.end].iter_mut().zip(&y) {
                *o = f.add(o, &f.mul(&c, yi));
            }
        }
        out
    }

    pub fn direct_sum(alg: &Arc<Algebra>, parts: &[Module]) -> Module {
        let f = alg.field();
        let n = alg.num_vertices();
        let dims: Vec<usize> = (0..n).map(|v| parts.iter().map(|m| m.dims()[v]).sum()).collect();
        let maps = (0..alg.quiver().arrows().len())
            .map(|a| {
                let blocks: Vec<&Matrix> = parts.iter().map(|m| m.map(a)).collect();
                Mat::block_diag(&f, &blocks)
            })
            .collect();
        Self::raw(alg, dims, maps)
    }

    /// Direct sum with its canonical injections and projections.
    pub fn direct_sum_with_maps(alg: &Arc<Algebra>, parts: &[Module]) -> (Module, Vec<Morphism>, Vec<Morphism>) {
        let sum = Self::direct_sum(alg, parts);
        let f = alg.field();
        let n = alg.num_vertices();
        let mut inj = Vec::new();
        let mut proj = Vec::new();
        let mut offs = vec![0usize; n];
        for p in parts {
            let mut i_m = Vec::new();
            let mut p_m = Vec::new();
            for v in 0..n {
                let mut a = Mat::zeros(&f, p.dims()[v], sum.dims()[v]);
                a.set_block(0, offs[v], &Mat::identity(&f, p.dims()[v]));
                p_m.push(a.transpose());
                i_m.push(a);
                offs[v] += p.dims()[v];
            }
            inj.push(Morphism::raw(p.clone(), sum.clone(), i_m));
            proj.push(Morphism::raw(sum.clone(), p.clone(), p_m));
        }
        (sum, inj, proj)
    }

    pub fn power(&self, k: usize) -> Module {
        Self::direct_sum(self.algebra(), &vec![self.clone(); k])
    }

    pub fn plus(&self, other: &Module) -> Module {
        Self::direct_sum(self.algebra(), &[self.clone(), other.clone()])
    }

    /// `D M` over the opposite algebra.
    pub fn dual(&self) -> Result<Module> {
        let op = self.algebra().opposite()?;
        Ok(Self::raw(&op, self.dims().to_vec(), self.maps().iter().map(Mat::transpose).collect()))
    }

    /// Dimensions of the top `M / rad M`.
    pub fn top_dims(&self) -> Vec<usize> {
        let rad = self.radical_space();
        (0..self.dims().len()).map(|v| self.dims()[v] - rad.0[v].rows()).collect()
    }

    /// Dimensions of the socle.
    pub fn socle_dims(&self) -> Vec<usize> {
        self.socle_space().0.iter().map(Mat::rows).collect()
    }

    pub fn is_projective(&self) -> bool {
        let top = self.top_dims();
        let want: usize = top
            .iter()
            .enumerate()
            .map(|(v, &k)| k * self.algebra().paths_from(v).len())
            .sum();
        want == self.dim()
    }

    pub fn is_injective(&self) -> bool {
        let soc = self.socle_dims();
        let alg = self.algebra();
        let want: usize = soc
            .iter()
            .enumerate()
            .map(|(v, &k)| k * (0..alg.dim()).filter(|&b| alg.basis()[b].end == v).count())
            .sum();
        want == self.dim()
    }

    /// `nu P`: replaces each `P(i)` summand by `I(i)`.
    pub fn nakayama(&self) -> Result<Module> {
        if !self.is_projective() {
            return Err(Error::NotProjective);
        }
        let alg = self.algebra();
        let parts: Vec<Module> = self
            .top_dims()
            .iter()
            .enumerate()
            .flat_map(|(v, &k)| std::iter::repeat_n(Self::injective(alg, v), k))
            .collect();
        Ok(Self::direct_sum(alg, &parts))
    }

    /// Checks every relation; modules built internally always pass.
    pub fn satisfies_relations(&self) -> bool {
        Module::new(self.algebra(), self.dims().to_vec(), self.maps().to_vec()).is_ok()
    }

    /// `End(S(i))` must be one-dimensional for every simple.
    pub fn check_split(alg: &Arc<Algebra>) -> Result<()> {
        for i in 0..alg.num_vertices() {
            let s = Self::simple(alg, i);
            let d = hom_dim(&s, &s);
            if d != 1 {
                return Err(Error::Precondition(format!("End(S({})) has dimension {d}", alg.quiver().label(i))));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn projectives_and_injectives_of_a3() {
        let a = fixtures::algebra("a3").unwrap();
        assert_eq!(Module::projective(&a, 0).dims(), &[1, 1, 1]);
        assert_eq!(Module::projective(&a, 2).dims(), &[0, 0, 1]);
        assert_eq!(Module::injective(&a, 0).dims(), &[1, 0, 0]);
        assert_eq!(Module::injective(&a, 2).dims(), &[1, 1, 1]);
        for i in 0..3 {
            assert!(Module::projective(&a, i).satisfies_relations());
            assert!(Module::injective(&a, i).satisfies_relations());
        }
    }

    #[test]
    fn square_dimension_vectors() {
        let a = fixtures::algebra("e4").unwrap();
        assert_eq!(Module::projective(&a, 0).dims(), &[1, 1, 1, 1]);
        assert_eq!(Module::injective(&a, 3).dims(), &[1, 1, 1, 1]);
        for i in 0..4 {
            assert!(Module::injective(&a, i).satisfies_relations());
            assert!(Module::injective(&a, i).is_injective());
            assert!(Module::projective(&a, i).is_projective());
        }
    }

    #[test]
    fn e1_projectives() {
        let a = fixtures::algebra("e1").unwrap();
        let want = [[1, 1, 1, 1, 1], [0, 1, 0, 1, 1], [0, 0, 1, 1, 1], [0, 0, 0, 1, 1], [0, 1, 0, 0, 1]];
        for (i, w) in want.iter().enumerate() {
            assert_eq!(Module::projective(&a, i).dims(), w);
        }
    }

    #[test]
    fn bad_representation_rejected() {
        let a = fixtures::algebra("a3").unwrap();
        let f = a.field();
        let one = Mat::identity(&f, 1);
        // a*b is not a relation here, so this is fine.
        assert!(Module::new(&a, vec![1, 1, 1], vec![one.clone(), one.clone()]).is_ok());
        let b = fixtures::algebra("nakayama_selfinj").unwrap();
        assert_eq!(
            Module::new(&b, vec![1, 1], vec![one.clone(), one.clone()]).unwrap_err(),
            Error::RelationViolated(0)
        );
        assert!(Module::new(&b, vec![1, 2], vec![one.clone(), one]).is_err());
    }

    #[test]
    fn nakayama_sends_projectives_to_injectives() {
        let a = fixtures::algebra("e4").unwrap();
        for i in 0..4 {
            let nu = Module::projective(&a, i).nakayama().unwrap();
            assert!(is_isomorphic(&nu, &Module::injective(&a, i)));
        }
        assert_eq!(Module::simple(&a, 0).nakayama().unwrap_err(), Error::NotProjective);
    }

    #[test]
    fn fixtures_are_split() {
        for (name, _) in fixtures::ALL {
            Module::check_split(&fixtures::algebra(name).unwrap()).unwrap();
        }
    }
}
