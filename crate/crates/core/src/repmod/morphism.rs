use crate::error::{Error, Result};
use crate::exactla::{Field, Mat, Matrix};

use super::Module;

/// A module homomorphism, one matrix per vertex acting on row vectors.
#[derive(Clone, Debug)]
pub struct Morphism {
    source: Module,
    target: Module,
    mats: Vec<Matrix>,
}

impl Morphism {
    /// Checks shapes and naturality at every arrow.
    pub fn new(source: Module, target: Module, mats: Vec<Matrix>) -> Result<Morphism> {
        if !source.same_algebra(&target) {
            return Err(Error::Precondition("modules over different algebras".into()));
        }
        let n = source.dims().len();
        if mats.len() != n {
            return Err(Error::Dimension(format!("{} vertex maps for {n} vertices", mats.len())));
        }
        for v in 0..n {
            if mats[v].rows() != source.dims()[v] || mats[v].cols() != target.dims()[v] {
                return Err(Error::Dimension(format!("vertex map {v} has the wrong shape")));
            }
        }
        let f = Morphism { source, target, mats };
        if let Some(a) = f.naturality_failure() {
            return Err(Error::NotNatural(f.source.algebra().quiver().arrow(a).name.clone()));
        }
        Ok(f)
    }

    pub(crate) fn raw(source: Module, target: Module, mats: Vec<Matrix>) -> Morphism {
        Morphism { source, target, mats }
    }

    pub fn zero(source: &Module, target: &Module) -> Morphism {
        let f = source.field();
        let mats = (0..source.dims().len())
            .map(|v| Mat::zeros(&f, source.dims()[v], target.dims()[v]))
            .collect();
        Morphism::raw(source.clone(), target.clone(), mats)
    }

    pub fn identity(m: &Module) -> Morphism {
        let f = m.field();
        Morphism::raw(m.clone(), m.clone(), m.dims().iter().map(|&d| Mat::identity(&f, d)).collect())
    }

    pub fn source(&self) -> &Module {
        &self.source
    }

    pub fn target(&self) -> &Module {
        &self.target
    }

    pub fn mats(&self) -> &[Matrix] {
        &self.mats
    }

    pub fn mat(&self, v: usize) -> &Matrix {
        &self.mats[v]
    }

    /// First arrow whose square fails to commute.
    pub fn naturality_failure(&self) -> Option<usize> {
        let q = self.source.algebra().quiver();
        (0..q.arrows().len()).find(|&ai| {
            let a = q.arrow(ai);
            let lhs = self.source.map(ai).mul(&self.mats[a.target]);
            let rhs = self.mats[a.source].mul(self.target.map(ai));
            lhs != rhs
        })
    }

    pub fn is_natural(&self) -> bool {
        self.naturality_failure().is_none()
    }

    /// `self` followed by `g`.
    pub fn then(&self, g: &Morphism) -> Morphism {
        assert_eq!(self.target.dims(), g.source.dims(), "composable morphisms");
        let mats = self.mats.iter().zip(&g.mats).map(|(a, b)| a.mul(b)).collect();
        Morphism::raw(self.source.clone(), g.target.clone(), mats)
    }

    pub fn add(&self, g: &Morphism) -> Morphism {
        let mats = self.mats.iter().zip(&g.mats).map(|(a, b)| a.add(b)).collect();
        Morphism::raw(self.source.clone(), self.target.clone(), mats)
    }

    pub fn sub(&self, g: &Morphism) -> Morphism {
        let mats = self.mats.iter().zip(&g.mats).map(|(a, b)| a.sub(b)).collect();
        Morphism::raw(self.source.clone(), self.target.clone(), mats)
    }

    pub fn scale(&self, c: u32) -> Morphism {
        let mats = self.mats.iter().map(|a| a.scale(&c)).collect();
        Morphism::raw(self.source.clone(), self.target.clone(), mats)
    }

    /// Linear combination `sum c_i f_i` of parallel morphisms.
    pub fn combine(source: &Module, target: &Module, terms: &[(u32, &Morphism)]) -> Morphism {
        let mut acc = Morphism::zero(source, target);
        for (c, g) in terms {
            if *c != 0 {
                acc = acc.add(&g.scale(*c));
            }
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.mats.iter().all(Mat::is_zero)
    }

    pub fn rank(&self) -> usize {
        self.mats.iter().map(Mat::rank).sum()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.dim()
    }

    pub fn is_iso(&self) -> bool {
        self.source.dim() == self.target.dim() && self.is_injective()
    }

    /// Sum of the vertex traces of an endomorphism.
    pub fn trace(&self) -> u32 {
        let f = self.source.field();
        self.mats.iter().fold(0, |acc, m| f.add(&acc, &m.trace()))
    }

    /// Concatenated entries, for linear algebra on Hom spaces.
    pub fn coords(&self) -> Vec<u32> {
        crate::exactla::flatten(&self.mats)
    }

    /// Inverse of an isomorphism.
    pub fn inverse(&self) -> Option<Morphism> {
        let mats = self.mats.iter().map(Mat::inverse).collect::<Option<Vec<_>>>()?;
        Some(Morphism::raw(self.target.clone(), self.source.clone(), mats))
    }

    /// The map `M^k -> N` (or `M -> N^k`) assembled from components.
    pub fn from_components_out(source: &Module, parts: &[Morphism]) -> (Module, Morphism) {
        let alg = source.algebra();
        let targets: Vec<Module> = parts.iter().map(|p| p.target.clone()).collect();
        let sum = Module::direct_sum(alg, &targets);
        let mats = (0..source.dims().len())
            .map(|v| {
                let f = source.field();
                let mut m = Mat::zeros(&f, source.dims()[v], 0);
                for p in parts {
                    m = m.hstack(&p.mats[v]);
                }
                m
            })
            .collect();
        (sum.clone(), Morphism::raw(source.clone(), sum, mats))
    }

    /// `[f_1 ... f_k]: X_1 + ... + X_k -> N`.
    pub fn from_components_in(target: &Module, parts: &[Morphism]) -> (Module, Morphism) {
        let alg = target.algebra();
        let sources: Vec<Module> = parts.iter().map(|p| p.source.clone()).collect();
        let sum = Module::direct_sum(alg, &sources);
        let mats = (0..target.dims().len())
            .map(|v| {
                let f = target.field();
                let mut m = Mat::zeros(&f, 0, target.dims()[v]);
                for p in parts {
                    m = m.vstack(&p.mats[v]);
                }
                m
            })
            .collect();
        (sum.clone(), Morphism::raw(sum, target.clone(), mats))
    }

    /// `f + g: M + M' -> N + N'`.
    pub fn direct_sum(parts: &[Morphism]) -> Morphism {
        let first = &parts[0];
        let alg = first.source.algebra();
        let f = first.source.field();
        let src = Module::direct_sum(alg, &parts.iter().map(|p| p.source.clone()).collect::<Vec<_>>());
        let tgt = Module::direct_sum(alg, &parts.iter().map(|p| p.target.clone()).collect::<Vec<_>>());
        let mats = (0..src.dims().len())
            .map(|v| {
                let blocks: Vec<&Matrix> = parts.iter().map(|p| &p.mats[v]).collect();
                Mat::block_diag(&f, &blocks)
            })
            .collect();
        Morphism::raw(src, tgt, mats)
    }

    /// `D f: D N -> D M` over the opposite algebra.
    pub fn dual(&self) -> Result<Morphism> {
        Ok(Morphism::raw(
            self.target.dual()?,
            self.source.dual()?,
            self.mats.iter().map(Mat::transpose).collect(),
        ))
    }
}
