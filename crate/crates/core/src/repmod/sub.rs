//! Submodules, quotients, kernels, images, radicals and socles.

use crate::exactla::{Field, Mat, Matrix, PrimeField};

use super::{Module, Morphism};

/// A graded subspace: one row basis per vertex, kept in reduced echelon form.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace(pub Vec<Matrix>);

impl Subspace {
    /// Normalises each vertex basis to its row space.
    pub fn new(rows: Vec<Matrix>) -> Subspace {
        Subspace(rows.iter().map(Mat::row_space).collect())
    }

    pub fn zero(m: &Module) -> Subspace {
        let f = m.field();
        Subspace(m.dims().iter().map(|&d| Mat::zeros(&f, 0, d)).collect())
    }

    pub fn full(m: &Module) -> Subspace {
        let f = m.field();
        Subspace(m.dims().iter().map(|&d| Mat::identity(&f, d)).collect())
    }

    pub fn dims(&self) -> Vec<usize> {
        self.0.iter().map(Mat::rows).collect()
    }

    pub fn dim(&self) -> usize {
        self.0.iter().map(Mat::rows).sum()
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::new(self.0.iter().zip(&other.0).map(|(a, b)| a.vstack(b)).collect())
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        Subspace(self.0.iter().zip(&other.0).map(|(a, b)| intersect(a, b)).collect())
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        self.sum(other).dims() == self.dims()
    }
}

fn intersect(a: &Matrix, b: &Matrix) -> Matrix {
    let f = *a.field();
    if a.rows() == 0 || b.rows() == 0 {
        return Mat::zeros(&f, 0, a.cols());
    }
    let stacked = a.vstack(b);
    let mut rows = Vec::new();
    for y in stacked.left_kernel_basis() {
        rows.push(a.vec_mul(&y[..a.rows()]));
    }
    Mat::from_rows(&f, a.cols(), rows).row_space()
}

/// A submodule together with its inclusion.
#[derive(Clone, Debug)]
pub struct SubmoduleEmbedding {
    pub module: Module,
    pub inclusion: Morphism,
}

fn pivot_cols(m: &Matrix) -> Vec<usize> {
    // Rows are in reduced echelon form: the first nonzero entry of each row.
    (0..m.rows()).map(|r| m.row(r).iter().position(|&x| x != 0).unwrap()).collect()
}

/// `d x (d - k)` matrix sending a vector to its class modulo the rref rows `u`.
fn projection_mod(f: &PrimeField, u: &Matrix) -> (Matrix, Vec<usize>) {
    let d = u.cols();
    let piv = pivot_cols(u);
    let free: Vec<usize> = (0..d).filter(|c| !piv.contains(c)).collect();
    let mut q = Mat::zeros(f, d, free.len());
    for (k, &j) in free.iter().enumerate() {
        q.set(j, k, 1);
    }
    for (i, &p) in piv.iter().enumerate() {
        for (k, &j) in free.iter().enumerate() {
            q.set(p, k, f.neg(u.get(i, j)));
        }
    }
    (q, free)
}

impl Module {
    /// Smallest submodule containing the given vectors.
    pub fn generated(&self, gens: &Subspace) -> Subspace {
        let q = self.algebra().quiver();
        let mut cur = Subspace::new(gens.0.clone());
        loop {
            let mut next = cur.0.clone();
            for (ai, a) in q.arrows().iter().enumerate() {
                if cur.0[a.source].rows() == 0 {
                    continue;
                }
                next[a.target] = next[a.target].vstack(&cur.0[a.source].mul(self.map(ai)));
            }
            let next = Subspace::new(next);
            if next.dims() == cur.dims() {
                return cur;
            }
            cur = next;
        }
    }

    /// The submodule on a closed subspace.
    pub fn submodule(&self, s: &Subspace) -> SubmoduleEmbedding {
        let q = self.algebra().quiver();
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let img = s.0[a.source].mul(self.map(ai));
                let piv = pivot_cols(&s.0[a.target]);
                img.transpose().select_rows(&piv).transpose()
            })
            .collect();
        let sub = Module::raw(self.algebra(), s.dims(), maps);
        let inclusion = Morphism::raw(sub.clone(), self.clone(), s.0.clone());
        SubmoduleEmbedding { module: sub, inclusion }
    }

    /// `M / U` for a closed subspace `U`, with the projection.
    pub fn quotient(&self, s: &Subspace) -> (Module, Morphism) {
        let f = self.field();
        let q = self.algebra().quiver();
        let projs: Vec<(Matrix, Vec<usize>)> = s.0.iter().map(|u| projection_mod(&f, u)).collect();
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| self.map(ai).select_rows(&projs[a.source].1).mul(&projs[a.target].0))
            .collect();
        let dims = projs.iter().map(|(_, free)| free.len()).collect();
        let quo = Module::raw(self.algebra(), dims, maps);
        let pi = Morphism::raw(self.clone(), quo.clone(), projs.into_iter().map(|(m, _)| m).collect());
        (quo, pi)
    }

    /// `rad M`: the sum of the images of all arrows.
    pub fn radical_space(&self) -> Subspace {
        let f = self.field();
        let q = self.algebra().quiver();
        let mut rows: Vec<Matrix> = self.dims().iter().map(|&d| Mat::zeros(&f, 0, d)).collect();
        for (ai, a) in q.arrows().iter().enumerate() {
            rows[a.target] = rows[a.target].vstack(self.map(ai));
        }
        Subspace::new(rows)
    }

    /// `soc M`: vectors killed by every arrow.
    pub fn socle_space(&self) -> Subspace {
        let f = self.field();
        let q = self.algebra().quiver();
        let rows = (0..self.dims().len())
            .map(|v| {
                let mut m = Mat::zeros(&f, self.dims()[v], 0);
                for ai in q.arrows_from(v) {
                    m = m.hstack(self.map(ai));
                }
                let ker = m.left_kernel_basis();
                Mat::from_rows(&f, self.dims()[v], ker)
            })
            .collect();
        Subspace::new(rows)
    }

    pub fn radical(&self) -> SubmoduleEmbedding {
        self.submodule(&self.radical_space())
    }

    pub fn socle(&self) -> SubmoduleEmbedding {
        self.submodule(&self.socle_space())
    }

    pub fn top(&self) -> (Module, Morphism) {
        self.quotient(&self.radical_space())
    }

    /// `M > rad M > rad^2 M > ... > 0`, as subspaces of `M`.
    pub fn radical_series(&self) -> Vec<Subspace> {
        let q = self.algebra().quiver();
        let mut out = vec![Subspace::full(self)];
        loop {
            let cur = out.last().unwrap();
            if cur.dim() == 0 {
                break;
            }
            let f = self.field();
            let mut rows: Vec<Matrix> = self.dims().iter().map(|&d| Mat::zeros(&f, 0, d)).collect();
            for (ai, a) in q.arrows().iter().enumerate() {
                rows[a.target] = rows[a.target].vstack(&cur.0[a.source].mul(self.map(ai)));
            }
            out.push(Subspace::new(rows));
        }
        out
    }

    /// Loewy length.
    pub fn loewy_length(&self) -> usize {
        self.radical_series().len() - 1
    }
}

impl Morphism {
    pub fn kernel_space(&self) -> Subspace {
        let f = self.source().field();
        Subspace::new(
            self.mats()
                .iter()
                .map(|m| Mat::from_rows(&f, m.rows(), m.left_kernel_basis()))
                .collect(),
        )
    }

    pub fn image_space(&self) -> Subspace {
        Subspace::new(self.mats().to_vec())
    }

    pub fn kernel(&self) -> SubmoduleEmbedding {
        self.source().submodule(&self.kernel_space())
    }

    pub fn image(&self) -> SubmoduleEmbedding {
        self.target().submodule(&self.image_space())
    }

    pub fn cokernel(&self) -> (Module, Morphism) {
        self.target().quotient(&self.image_space())
    }

    /// The factorisation `M -> Im f` of `f` through its image.
    pub fn corestrict_to_image(&self) -> (SubmoduleEmbedding, Morphism) {
        let img = self.image();
        let mats = self
            .mats()
            .iter()
            .zip(&img.inclusion.mats().to_vec())
            .map(|(m, u)| {
                let piv = pivot_cols(u);
                m.transpose().select_rows(&piv).transpose()
            })
            .collect();
        let g = Morphism::raw(self.source().clone(), img.module.clone(), mats);
        (img, g)
    }

    /// Factors `self: X -> N` through a submodule of `N`; `None` unless the
    /// image lies inside it.
    pub fn factor_through_sub(&self, sub: &SubmoduleEmbedding) -> Option<Morphism> {
        let mats = self
            .mats()
            .iter()
            .zip(sub.inclusion.mats())
            .map(|(m, u)| {
                let piv = pivot_cols(u);
                let x = m.transpose().select_rows(&piv).transpose();
                (x.mul(u) == *m).then_some(x)
            })
            .collect::<Option<Vec<_>>>()?;
        Some(Morphism::raw(self.source().clone(), sub.module.clone(), mats))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn radical_and_socle_of_a3() {
        let a = fixtures::algebra("a3").unwrap();
        let p1 = Module::projective(&a, 0);
        assert_eq!(p1.radical().module.dims(), &[0, 1, 1]);
        assert_eq!(p1.top().0.dims(), &[1, 0, 0]);
        assert_eq!(p1.socle().module.dims(), &[0, 0, 1]);
        assert_eq!(p1.loewy_length(), 3);
    }

    #[test]
    fn kernel_of_identity_and_cokernel_of_zero() {
        let a = fixtures::algebra("e4").unwrap();
        let m = Module::projective(&a, 0);
        assert_eq!(Morphism::identity(&m).kernel().module.dim(), 0);
        let z = Module::zero(&a);
        let (c, _) = Morphism::zero(&z, &m).cokernel();
        assert_eq!(c.dims(), m.dims());
    }

    #[test]
    fn quotients_satisfy_relations() {
        let a = fixtures::algebra("e1").unwrap();
        for i in 0..5 {
            let p = Module::projective(&a, i);
            let (t, pi) = p.quotient(&p.socle_space());
            assert!(t.satisfies_relations());
            assert!(pi.is_natural());
            let r = p.radical();
            assert!(r.module.satisfies_relations());
            assert!(r.inclusion.is_natural());
        }
    }

    #[test]
    fn socles_of_injectives_are_simple() {
        for (name, _) in fixtures::ALL {
            let a = fixtures::algebra(name).unwrap();
            for i in 0..a.num_vertices() {
                let mut want = vec![0; a.num_vertices()];
                want[i] = 1;
                assert_eq!(Module::injective(&a, i).socle_dims(), want, "{name}");
                assert_eq!(Module::projective(&a, i).top_dims(), want, "{name}");
            }
        }
    }
}
