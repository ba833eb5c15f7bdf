//! Ext groups by dimension shifting along minimal (co)resolutions.
//!
//! From `0 -> Omega^i -> P_{i-1} -> Omega^{i-1} -> 0`,
//! `Ext^i(M, N) = Hom(Omega^i, N) / (restrictions of Hom(P_{i-1}, N))`.

use crate::exactla::Mat;
use crate::repmod::{hom_dim, hom_space, Module, Morphism};

use super::{min_inj_coresolution, min_proj_resolution, Resolution};

/// `Ext^i(M, N)` with representatives `Omega^i M -> N` of a basis.
#[derive(Clone, Debug)]
pub struct ExtGroup {
    pub degree: usize,
    pub dim: usize,
    pub cocycles: Vec<Morphism>,
}

fn ext_dim_from(res: &Resolution, n: &Module, i: usize) -> usize {
    if i == 0 {
        return hom_dim(&res.module, n);
    }
    if res.syzygies.len() <= i {
        return 0;
    }
    let omega = &res.syzygies[i];
    if omega.is_zero() {
        return 0;
    }
    hom_dim(omega, n) + hom_dim(&res.syzygies[i - 1], n) - hom_dim(&res.terms[i - 1], n)
}

pub fn ext_dim(m: &Module, n: &Module, i: usize) -> usize {
    if m.is_zero() || n.is_zero() {
        return 0;
    }
    let res = min_proj_resolution(m, i.saturating_sub(1));
    ext_dim_from(&res, n, i)
}

/// `dim Ext^i(M, N)` for `i = 0..=up_to`, sharing one resolution.
pub fn ext_dims(m: &Module, n: &Module, up_to: usize) -> Vec<usize> {
    if m.is_zero() || n.is_zero() {
        return vec![0; up_to + 1];
    }
    let res = min_proj_resolution(m, up_to.saturating_sub(1));
    (0..=up_to).map(|i| ext_dim_from(&res, n, i)).collect()
}

/// The same dimensions through the injective coresolution of `N`.
pub fn ext_dim_injective(m: &Module, n: &Module, i: usize) -> usize {
    if m.is_zero() || n.is_zero() {
        return 0;
    }
    if i == 0 {
        return hom_dim(m, n);
    }
    let cores = min_inj_coresolution(n, i.saturating_sub(1));
    if cores.cosyzygies.len() <= i || cores.cosyzygies[i].is_zero() {
        return 0;
    }
    hom_dim(m, &cores.cosyzygies[i]) + hom_dim(m, &cores.cosyzygies[i - 1]) - hom_dim(m, &cores.terms[i - 1])
}

/// `Ext^i(M, N)` with a basis of cocycles.
pub fn ext(m: &Module, n: &Module, i: usize) -> ExtGroup {
    if i == 0 {
        let cocycles = hom_space(m, n);
        return ExtGroup { degree: 0, dim: cocycles.len(), cocycles };
    }
    let res = min_proj_resolution(m, i - 1);
    if res.syzygies.len() <= i || res.syzygies[i].is_zero() || n.is_zero() {
        return ExtGroup { degree: i, dim: 0, cocycles: Vec::new() };
    }
    let omega = &res.syzygies[i];
    let inc = &res.inclusions[i - 1];
    let all = hom_space(omega, n);
    let f = n.field();
    let width: usize = omega.dims().iter().zip(n.dims()).map(|(a, b)| a * b).sum();
    let coboundaries: Vec<Vec<u32>> =
        hom_space(&res.terms[i - 1], n).iter().map(|g| inc.then(g).coords()).collect();
    let mut span = Mat::from_rows(&f, width, coboundaries).row_space();
    let mut cocycles = Vec::new();
    for g in all {
        let c = g.coords();
        let grown = span.vstack(&Mat::from_rows(&f, width, vec![c]));
        if grown.rank() > span.rows() {
            span = grown.row_space();
            cocycles.push(g);
        }
    }
    ExtGroup { degree: i, dim: cocycles.len(), cocycles }
}

/// `Ext^i(M, N) = 0` for `1 <= i <= up_to`.
pub fn ext_vanishes(m: &Module, n: &Module, up_to: usize) -> bool {
    ext_dims(m, n, up_to).iter().skip(1).all(|&d| d == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn projectives_have_no_ext() {
        let a = fixtures::algebra("e2").unwrap();
        let n = Module::regular(&a).plus(&Module::dual_regular(&a));
        for i in 0..a.num_vertices() {
            let d = ext_dims(&Module::projective(&a, i), &n, 3);
            assert!(d[1..].iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn cocycles_match_dimension() {
        for (name, _) in fixtures::ALL {
            let a = fixtures::algebra(name).unwrap();
            for i in 0..a.num_vertices() {
                for j in 0..a.num_vertices() {
                    let (s, t) = (Module::simple(&a, i), Module::simple(&a, j));
                    for k in 1..3 {
                        let g = ext(&s, &t, k);
                        assert_eq!(g.dim, ext_dim(&s, &t, k), "{name}");
                        assert!(g.cocycles.iter().all(Morphism::is_natural));
                    }
                }
            }
        }
    }

    #[test]
    fn ext1_between_simples_counts_arrows() {
        // Ext^1(S(i), S(j)) is spanned by the arrows i -> j.
        for (name, _) in fixtures::ALL {
            let a = fixtures::algebra(name).unwrap();
            let q = a.quiver();
            for i in 0..a.num_vertices() {
                for j in 0..a.num_vertices() {
                    let arrows = q.arrows().iter().filter(|x| x.source == i && x.target == j).count();
                    assert_eq!(ext_dim(&Module::simple(&a, i), &Module::simple(&a, j), 1), arrows, "{name}");
                }
            }
        }
    }
}
