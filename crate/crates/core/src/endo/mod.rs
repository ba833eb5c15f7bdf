//! Endomorphism algebras of tilting modules, their presentations, and the
//! modules `Hom(T, X)` and `Hom(X, T)` over them.
//!
//! Composition in `End(T)` is `x y = x o y`: apply `y` first. With that,
//! `e_i B e_j = Hom(T_j, T_i)` and `Hom(T, X)` is a right `B`-module.

mod algebra;
mod chain_endo;

use std::sync::Arc;

use crate::error::Result;
use crate::exactla::{Mat, Matrix, PrimeField};
use crate::pathalg::Algebra;
use crate::repmod::{decompose, hom_space, Module, Morphism};

pub use algebra::{presentation, AbstractAlgebra, BoundPresentation};
pub use chain_endo::{check_chain_endos, Check, CheckStatus, EndoSummary, ChainEndoReport};

/// A basis of `Hom(X, Y)` with a coordinate solver.
#[derive(Clone, Debug)]
pub struct HomBasis {
    pub source: Module,
    pub target: Module,
    pub maps: Vec<Morphism>,
    coords: Matrix,
}

impl HomBasis {
    pub fn new(source: &Module, target: &Module) -> HomBasis {
        let maps = hom_space(source, target);
        let width = source.dims().iter().zip(target.dims()).map(|(a, b)| a * b).sum();
        let coords = Mat::from_rows(&source.field(), width, maps.iter().map(Morphism::coords).collect());
        HomBasis { source: source.clone(), target: target.clone(), maps, coords }
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    pub fn coordinates(&self, g: &Morphism) -> Vec<u32> {
        if self.maps.is_empty() {
            return Vec::new();
        }
        self.coords.solve_left(&g.coords()).expect("morphism lies in the Hom space")
    }

    pub fn combine(&self, c: &[u32]) -> Morphism {
        let terms: Vec<(u32, &Morphism)> = c.iter().copied().zip(&self.maps).collect();
        Morphism::combine(&self.source, &self.target, &terms)
    }
}

/// `End(T)` for a basic representative of `T`; vertex `i` is the `i`th
/// indecomposable summand class.
#[derive(Clone, Debug)]
pub struct EndAlgebra {
    pub summands: Vec<Module>,
    pub algebra: AbstractAlgebra,
    /// `blocks[s * n + t]`: `Hom(T_s, T_t)` and its offset in the basis.
    blocks: Vec<(usize, HomBasis)>,
}

impl EndAlgebra {
    pub fn num_vertices(&self) -> usize {
        self.summands.len()
    }

    pub fn block(&self, s: usize, t: usize) -> &HomBasis {
        &self.blocks[s * self.num_vertices() + t].1
    }

    /// The component of `x` in `Hom(T_s, T_t)`.
    pub fn morphism(&self, x: &[u32], s: usize, t: usize) -> Morphism {
        let (off, hb) = &self.blocks[s * self.num_vertices() + t];
        hb.combine(&x[*off..off + hb.len()])
    }

    /// The element of `B` given by a map `T_s -> T_t`.
    pub fn element(&self, g: &Morphism, s: usize, t: usize) -> Vec<u32> {
        let (off, hb) = &self.blocks[s * self.num_vertices() + t];
        let mut x = vec![0; self.algebra.dim()];
        for (k, c) in hb.coordinates(g).into_iter().enumerate() {
            x[off + k] = c;
        }
        x
    }
}

pub fn end_algebra(t: &Module) -> Result<EndAlgebra> {
    let summands: Vec<Module> = decompose(t).multiplicities().into_iter().map(|(x, _)| x).collect();
    let n = summands.len();
    let f: PrimeField = t.field();
    let mut blocks = Vec::with_capacity(n * n);
    let mut labels = Vec::new();
    let mut off = 0;
    for s in 0..n {
        for u in 0..n {
            let hb = HomBasis::new(&summands[s], &summands[u]);
            for k in 0..hb.len() {
                labels.push(format!("h{}:{}->{}", k + 1, s + 1, u + 1));
            }
            let len = hb.len();
            blocks.push((off, hb));
            off += len;
        }
    }
    let d = off;
    // owner[k] = (s, u, index within block)
    let owner: Vec<(usize, usize, usize)> = (0..n * n)
        .flat_map(|b| (0..blocks[b].1.len()).map(move |k| (b / n, b % n, k)))
        .collect();
    let mut products = vec![vec![vec![0u32; d]; d]; d];
    for (i, &(s1, t1, k1)) in owner.iter().enumerate() {
        for (j, &(s2, t2, k2)) in owner.iter().enumerate() {
            // b_i b_j = b_i o b_j: T_s2 -> T_t2 = T_s1 -> T_t1.
            if t2 != s1 {
                continue;
            }
            let g = blocks[s2 * n + t2].1.maps[k2].then(&blocks[s1 * n + t1].1.maps[k1]);
            let (o, hb) = &blocks[s2 * n + t1];
            for (k, c) in hb.coordinates(&g).into_iter().enumerate() {
                products[i][j][o + k] = c;
            }
        }
    }
    let idempotents = (0..n)
        .map(|s| {
            let (o, hb) = &blocks[s * n + s];
            let c = hb.coordinates(&Morphism::identity(&summands[s]));
            let mut e = vec![0; d];
            e[*o..o + c.len()].copy_from_slice(&c);
            e
        })
        .collect();
    let algebra = AbstractAlgebra::new(f, labels, products, idempotents)?;
    Ok(EndAlgebra { summands, algebra, blocks })
}

/// `Hom(T, X)` as a module over the presented `End(T)`: at vertex `i` the
/// space `Hom(T_i, X)`, and an arrow `i -> j` acting by precomposition with
/// its map `T_j -> T_i`.
pub fn hom_module(e: &EndAlgebra, p: &BoundPresentation, x: &Module) -> Result<Module> {
    let alg = &p.algebra;
    let bases: Vec<HomBasis> = e.summands.iter().map(|t| HomBasis::new(t, x)).collect();
    let dims: Vec<usize> = bases.iter().map(HomBasis::len).collect();
    let f = x.field();
    let maps = alg
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, arr)| {
            let (i, j) = (arr.source, arr.target);
            let alpha = e.morphism(&p.arrows[a], j, i);
            let rows = bases[i].maps.iter().map(|phi| bases[j].coordinates(&alpha.then(phi))).collect();
            Mat::from_rows(&f, dims[j], rows)
        })
        .collect();
    Module::new(alg, dims, maps)
}

/// `Hom(X, T)` as a module over the opposite of the presented `End(T)`.
pub fn cohom_module(e: &EndAlgebra, p: &BoundPresentation, x: &Module) -> Result<Module> {
    let op = p.algebra.opposite()?;
    let bases: Vec<HomBasis> = e.summands.iter().map(|t| HomBasis::new(x, t)).collect();
    let dims: Vec<usize> = bases.iter().map(HomBasis::len).collect();
    let f = x.field();
    let maps = op
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, arr)| {
            // The opposite arrow runs j -> i; the map is T_j -> T_i.
            let (j, i) = (arr.source, arr.target);
            let alpha = e.morphism(&p.arrows[a], j, i);
            let rows = bases[j].maps.iter().map(|psi| bases[i].coordinates(&psi.then(&alpha))).collect();
            Mat::from_rows(&f, dims[i], rows)
        })
        .collect();
    Module::new(&op, dims, maps)
}

/// Radical layers of dimension at most one.
fn uniserial(m: &Module) -> bool {
    let series = m.radical_series();
    series.windows(2).all(|w| w[0].dim() - w[1].dim() <= 1)
}

/// Every indecomposable projective and injective is uniserial.
pub fn is_nakayama(alg: &Arc<Algebra>) -> bool {
    (0..alg.num_vertices()).all(|i| uniserial(&Module::projective(alg, i)) && uniserial(&Module::injective(alg, i)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::repmod::is_isomorphic;

    #[test]
    fn end_of_a_simple_is_the_field() {
        let a = fixtures::algebra("e4").unwrap();
        let e = end_algebra(&Module::simple(&a, 0)).unwrap();
        assert_eq!(e.algebra.dim(), 1);
    }

    #[test]
    fn end_of_regular_is_the_algebra() {
        for name in ["e4", "e1", "a3"] {
            let a = fixtures::algebra(name).unwrap();
            let e = end_algebra(&Module::regular(&a)).unwrap();
            assert_eq!(e.algebra.dim(), a.dim());
            assert_eq!(e.num_vertices(), a.num_vertices());
            let p = presentation(&e.algebra).unwrap();
            assert_eq!(p.algebra.quiver().arrows().len(), a.quiver().arrows().len());
        }
    }

    #[test]
    fn hom_from_t_sends_t_to_projectives() {
        let a = fixtures::algebra("e4").unwrap();
        let t = Module::dual_regular(&a);
        let e = end_algebra(&t).unwrap();
        let p = presentation(&e.algebra).unwrap();
        for (i, s) in e.summands.iter().enumerate() {
            let h = hom_module(&e, &p, s).unwrap();
            assert!(is_isomorphic(&h, &Module::projective(&p.algebra, i)));
            let c = cohom_module(&e, &p, s).unwrap();
            let op = p.algebra.opposite().unwrap();
            assert!(is_isomorphic(&c, &Module::projective(&op, i)));
        }
    }

    #[test]
    fn nakayama_detection() {
        assert!(is_nakayama(&fixtures::algebra("a3").unwrap()));
        assert!(is_nakayama(&fixtures::algebra("nakayama_selfinj").unwrap()));
        assert!(!is_nakayama(&fixtures::algebra("e1").unwrap()));
    }
}
