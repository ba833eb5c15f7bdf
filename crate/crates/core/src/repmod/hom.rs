//! Hom spaces from projective presentations.
//!
//! With generators `g_r in M_{v_r}` and `pi: P_0 = sum P(v_r) -> M`, a map
//! `M -> N` is a choice of images `n_r in N_{v_r}` killing `Ker pi`.

use std::sync::Arc;

use crate::exactla::{Field, Mat, Matrix};

use super::{Module, Morphism, SubmoduleEmbedding, Subspace};

/// Generators of a module and the kernel of the induced cover.
#[derive(Debug)]
pub struct Presentation {
    /// `(vertex, vector in M_vertex)`, one per top basis vector.
    pub gens: Vec<(usize, Vec<u32>)>,
    /// At each vertex `t`: the coordinates `(generator, path)` of `(P_0)_t`.
    pub p0: Vec<Vec<(usize, usize)>>,
    /// At each vertex: the cover `(P_0)_t -> M_t`.
    pub pi: Vec<Matrix>,
    /// At each vertex: a right inverse `M_t -> (P_0)_t` of `pi`.
    pub section: Vec<Matrix>,
    /// At each vertex: a row basis of `Ker pi`.
    pub kernel: Vec<Matrix>,
}

impl Module {
    pub fn presentation(&self) -> Arc<Presentation> {
        self.0.pres.get_or_init(|| Arc::new(self.build_presentation())).clone()
    }

    fn build_presentation(&self) -> Presentation {
        let f = self.field();
        let alg = self.algebra();
        let n = self.dims().len();
        let rad = self.radical_space();
        let mut gens = Vec::new();
        for v in 0..n {
            let piv: Vec<usize> =
                (0..rad.0[v].rows()).map(|r| rad.0[v].row(r).iter().position(|&x| x != 0).unwrap()).collect();
            for j in (0..self.dims()[v]).filter(|j| !piv.contains(j)) {
                let mut e = vec![0u32; self.dims()[v]];
                e[j] = 1;
                gens.push((v, e));
            }
        }
        let mut p0 = Vec::with_capacity(n);
        let mut pi = Vec::with_capacity(n);
        let mut section = Vec::with_capacity(n);
        let mut kernel = Vec::with_capacity(n);
        for t in 0..n {
            let coords: Vec<(usize, usize)> = gens
                .iter()
                .enumerate()
                .flat_map(|(r, (v, _))| alg.paths_between(*v, t).into_iter().map(move |b| (r, b)))
                .collect();
            let rows: Vec<Vec<u32>> =
                coords.iter().map(|&(r, b)| self.path_action(b).vec_mul(&gens[r].1)).collect();
            let m = Mat::from_rows(&f, self.dims()[t], rows);
            let s = m
                .transpose()
                .solve_many(&Mat::identity(&f, self.dims()[t]))
                .expect("generators span")
                .transpose();
            let k = Mat::from_rows(&f, coords.len(), m.left_kernel_basis());
            p0.push(coords);
            pi.push(m);
            section.push(s);
            kernel.push(k);
        }
        Presentation { gens, p0, pi, section, kernel }
    }

    /// `P_0 -> M` with `P_0 = sum P(v_r)` over a basis of the top.
    pub fn projective_cover(&self) -> Morphism {
        let alg = self.algebra();
        let pres = self.presentation();
        let parts: Vec<Module> = pres.gens.iter().map(|(v, _)| Module::projective(alg, *v)).collect();
        let p0 = Module::direct_sum(alg, &parts);
        Morphism::raw(p0, self.clone(), pres.pi.clone())
    }

    /// `M -> I_0` with `I_0 = sum I(t)` over a basis of the socle.
    pub fn injective_hull(&self) -> Morphism {
        let alg = self.algebra();
        let soc = self.socle_space();
        let mut comps = Vec::new();
        for t in 0..self.dims().len() {
            for r in 0..soc.0[t].rows() {
                let p = soc.0[t].row(r).iter().position(|&x| x != 0).unwrap();
                let mut phi = vec![0u32; self.dims()[t]];
                phi[p] = 1;
                comps.push(Morphism::to_injective(self, t, &phi));
            }
        }
        if comps.is_empty() {
            return Morphism::zero(self, &Module::zero(alg));
        }
        Morphism::from_components_out(self, &comps).1
    }
}

impl Morphism {
    /// `P(i) -> M` sending `e_i` to `x in M_i`.
    pub fn from_projective(target: &Module, i: usize, x: &[u32]) -> Morphism {
        let alg = target.algebra();
        let f = target.field();
        let p = Module::projective(alg, i);
        let mats = (0..alg.num_vertices())
            .map(|t| {
                let rows: Vec<Vec<u32>> =
                    alg.paths_between(i, t).into_iter().map(|b| target.path_action(b).vec_mul(x)).collect();
                Mat::from_rows(&f, target.dims()[t], rows)
            })
            .collect();
        Morphism::raw(p, target.clone(), mats)
    }

    /// `M -> I(i)` induced by a functional `phi` on `M_i`.
    pub fn to_injective(source: &Module, i: usize, phi: &[u32]) -> Morphism {
        let alg = source.algebra();
        let f = source.field();
        let inj = Module::injective(alg, i);
        let mats = (0..alg.num_vertices())
            .map(|s| {
                let cols: Vec<Vec<u32>> =
                    alg.paths_between(s, i).into_iter().map(|w| source.path_action(w).mul_vec(phi)).collect();
                Mat::from_rows(&f, source.dims()[s], cols).transpose()
            })
            .collect();
        Morphism::raw(source.clone(), inj, mats)
    }
}

struct HomSystem {
    offsets: Vec<usize>,
    unknowns: usize,
    constraints: Matrix,
}

fn hom_system(m: &Module, n: &Module) -> HomSystem {
    let f = m.field();
    let pres = m.presentation();
    let mut offsets = Vec::with_capacity(pres.gens.len());
    let mut unknowns = 0;
    for (v, _) in &pres.gens {
        offsets.push(unknowns);
        unknowns += n.dims()[*v];
    }
    let cols: usize = (0..m.dims().len()).map(|t| pres.kernel[t].rows() * n.dims()[t]).sum();
    let mut c = Mat::zeros(&f, unknowns, cols);
    let mut col = 0;
    for t in 0..m.dims().len() {
        let dt = n.dims()[t];
        for k in 0..pres.kernel[t].rows() {
            for (pos, &(r, b)) in pres.p0[t].iter().enumerate() {
                let coef = *pres.kernel[t].get(k, pos);
                if coef == 0 {
                    continue;
                }
                let nb = n.path_action(b);
                for i in 0..nb.rows() {
                    for j in 0..dt {
                        let v = *nb.get(i, j);
                        if v != 0 {
                            let cur = *c.get(offsets[r] + i, col + j);
                            c.set(offsets[r] + i, col + j, f.add(&cur, &f.mul(&coef, &v)));
                        }
                    }
                }
            }
            col += dt;
        }
    }
    HomSystem { offsets, unknowns, constraints: c }
}

pub fn hom_dim(m: &Module, n: &Module) -> usize {
    if m.is_zero() || n.is_zero() {
        return 0;
    }
    let sys = hom_system(m, n);
    sys.unknowns - sys.constraints.rank()
}

/// A basis of `Hom(M, N)`.
pub fn hom_space(m: &Module, n: &Module) -> Vec<Morphism> {
    if m.is_zero() || n.is_zero() {
        return Vec::new();
    }
    let f = m.field();
    let pres = m.presentation();
    let sys = hom_system(m, n);
    let sols: Vec<Vec<u32>> = if sys.constraints.cols() == 0 {
        (0..sys.unknowns)
            .map(|i| {
                let mut e = vec![0u32; sys.unknowns];
                e[i] = 1;
                e
            })
            .collect()
    } else {
        sys.constraints.left_kernel_basis()
    };
    sols.iter()
        .map(|x| {
            let mats = (0..m.dims().len())
                .map(|t| {
                    let rows: Vec<Vec<u32>> = pres.p0[t]
                        .iter()
                        .map(|&(r, b)| {
                            let v = pres.gens[r].0;
                            let xr = &x[sys.offsets[r]..sys.offsets[r] + n.dims()[v]];
                            n.path_action(b).vec_mul(xr)
                        })
                        .collect();
                    let phi = Mat::from_rows(&f, n.dims()[t], rows);
                    pres.section[t].mul(&phi)
                })
                .collect();
            Morphism::raw(m.clone(), n.clone(), mats)
        })
        .collect()
}

/// `Tr_N M`: the sum of the images of all maps `N -> M`.
pub fn trace_space(n: &Module, m: &Module) -> Subspace {
    let mut acc = Subspace::zero(m);
    for g in hom_space(n, m) {
        acc = acc.sum(&g.image_space());
    }
    acc
}

pub fn trace(n: &Module, m: &Module) -> SubmoduleEmbedding {
    m.submodule(&trace_space(n, m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn yoneda_dimensions() {
        for (name, _) in fixtures::ALL {
            let a = fixtures::algebra(name).unwrap();
            let m = Module::regular(&a).plus(&Module::dual_regular(&a));
            for i in 0..a.num_vertices() {
                assert_eq!(hom_dim(&Module::projective(&a, i), &m), m.dims()[i], "{name}");
                assert_eq!(hom_dim(&m, &Module::injective(&a, i)), m.dims()[i], "{name}");
                assert_eq!(hom_dim(&Module::simple(&a, i), &Module::simple(&a, i)), 1);
            }
        }
    }

    #[test]
    fn basis_morphisms_are_natural() {
        let a = fixtures::algebra("e1").unwrap();
        let m = Module::dual_regular(&a);
        let n = Module::regular(&a);
        for g in hom_space(&m, &n).iter().chain(hom_space(&n, &m).iter()) {
            assert!(g.is_natural());
        }
    }

    #[test]
    fn covers_and_hulls() {
        let a = fixtures::algebra("e4").unwrap();
        for i in 0..4 {
            let s = Module::simple(&a, i);
            let c = s.projective_cover();
            assert!(c.is_surjective());
            assert_eq!(c.source().dims(), Module::projective(&a, i).dims());
            let h = s.injective_hull();
            assert!(h.is_injective());
            assert_eq!(h.target().dims(), Module::injective(&a, i).dims());
            assert!(h.is_natural() && c.is_natural());
        }
    }

    #[test]
    fn trace_of_module_in_itself() {
        let a = fixtures::algebra("e1").unwrap();
        let m = Module::projective(&a, 0);
        assert_eq!(trace(&m, &m).module.dim(), m.dim());
        // No path from 5 to 1: S(1) maps nowhere into P(5).
        assert_eq!(trace_space(&Module::simple(&a, 0), &Module::projective(&a, 4)).dim(), 0);
    }
}
