//! Brute-force search for tilting modules among a capped family of
//! indecomposables, used as an independent check of uniqueness and
//! minimality statements on small representation-finite algebras.
//!
//! The family is generated from simples, projectives, injectives and any
//! extra seeds by repeatedly taking radicals, quotients by the socle,
//! syzygies and cosyzygies. It is not all of `ind A` in general.

use std::sync::Arc;

use crate::homo::{ext_dims, pd};
use crate::pathalg::Algebra;
use crate::repmod::{decompose, is_isomorphic_indecomposable, Module};

use super::{in_fac, is_tilting, AddCategory};

#[derive(Clone, Debug)]
pub struct SearchConfig {
    /// Per-vertex dimension cap; defaults to `2 dim A` at every vertex.
    pub cap: Option<Vec<usize>>,
    pub rounds: usize,
    pub extra_seeds: Vec<Module>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { cap: None, rounds: 3, extra_seeds: Vec::new() }
    }
}

#[derive(Clone, Debug)]
pub enum SearchMode {
    /// Tilting `T` with `pd T <= d` and `T` in `Fac_d(I)`.
    FacInjective { i: Module, d: usize },
    /// Tilting `T` with `pd T <= d` and `Ext^{>0}(T, Q) = 0`.
    AboveQ { q: Module, d: usize },
}

impl SearchMode {
    fn degree(&self) -> usize {
        match self {
            SearchMode::FacInjective { d, .. } | SearchMode::AboveQ { d, .. } => *d,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchResult {
    pub candidates: Vec<Module>,
    /// Indices of candidates admitted by the mode.
    pub admitted: Vec<usize>,
    /// Basic tilting modules found, as sums of admitted candidates.
    pub tilting: Vec<Module>,
}

fn push_new(pool: &mut Vec<Module>, m: Module, cap: &[usize]) -> bool {
    if m.is_zero() || m.dims().iter().zip(cap).any(|(d, c)| d > c) {
        return false;
    }
    if pool.iter().any(|p| is_isomorphic_indecomposable(p, &m)) {
        return false;
    }
    pool.push(m);
    true
}

fn neighbours(m: &Module) -> Vec<Module> {
    vec![
        m.radical().module,
        m.quotient(&m.socle_space()).0,
        m.projective_cover().kernel().module,
        m.injective_hull().cokernel().0,
    ]
}

pub fn candidate_indecomposables(alg: &Arc<Algebra>, config: &SearchConfig) -> Vec<Module> {
    let n = alg.num_vertices();
    let cap = config.cap.clone().unwrap_or_else(|| vec![2 * alg.dim(); n]);
    let mut pool = Vec::new();
    let mut seeds: Vec<Module> = (0..n)
        .flat_map(|i| [Module::simple(alg, i), Module::projective(alg, i), Module::injective(alg, i)])
        .collect();
    seeds.extend(config.extra_seeds.iter().cloned());
    let mut fresh = Vec::new();
    for s in seeds {
        for (x, _) in decompose(&s).multiplicities() {
            if push_new(&mut pool, x.clone(), &cap) {
                fresh.push(x);
            }
        }
    }
    for _ in 0..config.rounds {
        let mut next = Vec::new();
        for m in &fresh {
            for y in neighbours(m) {
                if y.is_zero() {
                    continue;
                }
                for (x, _) in decompose(&y).multiplicities() {
                    if push_new(&mut pool, x.clone(), &cap) {
                        next.push(x);
                    }
                }
            }
        }
        if next.is_empty() {
            break;
        }
        fresh = next;
    }
    pool
}

fn higher_ext_vanishes(x: &Module, y: &Module, d: usize) -> bool {
    ext_dims(x, y, d.max(1)).iter().skip(1).all(|&e| e == 0)
}

fn cliques(adj: &[Vec<bool>], size: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if current.len() == size {
        out.push(current.clone());
        return;
    }
    for v in start..adj.len() {
        if current.iter().all(|&u| adj[u][v]) {
            current.push(v);
            cliques(adj, size, v + 1, current, out);
            current.pop();
        }
    }
}

pub fn search_tilting(alg: &Arc<Algebra>, mode: &SearchMode, config: &SearchConfig) -> SearchResult {
    let d = mode.degree();
    let candidates = candidate_indecomposables(alg, config);
    let fac = match mode {
        SearchMode::FacInjective { i, .. } => Some(AddCategory::new(i)),
        SearchMode::AboveQ { .. } => None,
    };
    let admitted: Vec<usize> = candidates
        .iter()
        .enumerate()
        .filter(|(_, x)| pd(x, d).at_most(d) == Some(true) && higher_ext_vanishes(x, x, d))
        .filter(|(_, x)| match mode {
            SearchMode::FacInjective { .. } => in_fac(x, fac.as_ref().unwrap(), d),
            SearchMode::AboveQ { q, .. } => higher_ext_vanishes(x, q, d),
        })
        .map(|(k, _)| k)
        .collect();
    let k = admitted.len();
    let adj: Vec<Vec<bool>> = (0..k)
        .map(|a| {
            (0..k)
                .map(|b| {
                    let (x, y) = (&candidates[admitted[a]], &candidates[admitted[b]]);
                    a == b || (higher_ext_vanishes(x, y, d) && higher_ext_vanishes(y, x, d))
                })
                .collect()
        })
        .collect();
    let mut found = Vec::new();
    cliques(&adj, alg.num_vertices(), 0, &mut Vec::new(), &mut found);
    let tilting = found
        .into_iter()
        .map(|c| Module::direct_sum(alg, &c.iter().map(|&i| candidates[admitted[i]].clone()).collect::<Vec<_>>()))
        .filter(|t| is_tilting(t, d).is_ok())
        .collect();
    SearchResult { candidates, admitted, tilting }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::repmod::is_isomorphic;

    #[test]
    fn hereditary_a3_has_all_six_indecomposables() {
        let a = fixtures::algebra("a3").unwrap();
        assert_eq!(candidate_indecomposables(&a, &SearchConfig::default()).len(), 6);
    }

    #[test]
    fn zero_tilting_is_the_regular_module() {
        let a = fixtures::algebra("a3").unwrap();
        let mode = SearchMode::AboveQ { q: Module::zero(&a), d: 0 };
        let r = search_tilting(&a, &mode, &SearchConfig::default());
        assert_eq!(r.tilting.len(), 1);
        assert!(is_isomorphic(&r.tilting[0], &Module::regular(&a)));
    }
}
