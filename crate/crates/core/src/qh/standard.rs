//! Standard and costandard modules, and filtrations by standard modules.

use std::sync::Arc;

use serde::Serialize;

use crate::error::Result;
use crate::homo::ext_dim;
use crate::pathalg::Algebra;
use crate::repmod::{hom_dim, is_isomorphic, trace_space, Module, Morphism, SubmoduleEmbedding, Subspace};

use super::PartialOrder;

/// `Delta(l)`, `Nabla(l)` and `K(l) = ker(P(l) -> Delta(l))` for every vertex.
#[derive(Clone, Debug)]
pub struct Standard {
    pub order: PartialOrder,
    pub delta: Vec<Module>,
    pub nabla: Vec<Module>,
    /// `P(l) -> Delta(l)`.
    pub delta_proj: Vec<Morphism>,
    pub kernels: Vec<SubmoduleEmbedding>,
}

/// `P(l)` modulo the trace of the `P(m)` with `m` not below `l`.
fn delta_over(alg: &Arc<Algebra>, ord: &PartialOrder, l: usize) -> (Module, Morphism, SubmoduleEmbedding) {
    let p = Module::projective(alg, l);
    let mut u = Subspace::zero(&p);
    for m in (0..alg.num_vertices()).filter(|&m| !ord.le(m, l)) {
        u = u.sum(&trace_space(&Module::projective(alg, m), &p));
    }
    let (d, proj) = p.quotient(&u);
    (d, proj, p.submodule(&u))
}

pub fn standard_modules(alg: &Arc<Algebra>, ord: &PartialOrder) -> Result<Standard> {
    if ord.len() != alg.num_vertices() {
        return Err(crate::Error::InvalidOrder(format!(
            "order has {} elements, the algebra {} vertices",
            ord.len(),
            alg.num_vertices()
        )));
    }
    let op = alg.opposite()?;
    let mut delta = Vec::new();
    let mut nabla = Vec::new();
    let mut delta_proj = Vec::new();
    let mut kernels = Vec::new();
    for l in 0..alg.num_vertices() {
        let (d, proj, k) = delta_over(alg, ord, l);
        delta.push(d);
        delta_proj.push(proj);
        kernels.push(k);
        // Nabla(l) = D Delta(l) over the opposite algebra.
        nabla.push(delta_over(&op, ord, l).0.dual()?);
    }
    Ok(Standard { order: ord.clone(), delta, nabla, delta_proj, kernels })
}

/// A filtration `0 = M_0 < M_1 < ... < M_r = M` with
/// `M_i / M_{i-1} = Delta(l_i)^{k_i}`.
#[derive(Clone, Debug, Serialize)]
pub struct DeltaFiltration {
    /// `(M : Delta(l))` by vertex.
    pub multiplicities: Vec<usize>,
    /// `(l_i, k_i)` from the bottom up.
    pub layers: Vec<(usize, usize)>,
    /// `M_1, ..., M_r` as subspaces of `M`.
    #[serde(skip)]
    pub chain: Vec<Subspace>,
}

/// Why a module has no `Delta`-filtration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiltrationRefusal {
    /// Vertex at which the trace of `P(l)` is not a sum of copies of `Delta(l)`.
    pub peeled_at: Option<usize>,
    /// First `l` with `Ext^1(M, Nabla(l)) != 0`, and its dimension.
    pub ext_witness: Option<(usize, usize)>,
}

/// Peels top layers: along a descending linear extension, the trace of
/// `P(l)` in what is left must be `Delta(l)^k`.
pub fn peel(m: &Module, st: &Standard) -> std::result::Result<DeltaFiltration, usize> {
    let n = st.delta.len();
    let mut rest = m.clone();
    let mut to_rest = Morphism::identity(m);
    let mut multiplicities = vec![0; n];
    let mut layers = Vec::new();
    let mut subs = Vec::new();
    for &l in st.order.linear_extension().iter().rev() {
        let p = Module::projective(m.algebra(), l);
        let u = trace_space(&p, &rest);
        if u.dim() == 0 {
            continue;
        }
        let layer = rest.submodule(&u).module;
        let k = layer.top_dims()[l];
        if !is_isomorphic(&layer, &st.delta[l].power(k)) {
            return Err(l);
        }
        multiplicities[l] = k;
        let (q, proj) = rest.quotient(&u);
        to_rest = to_rest.then(&proj);
        subs.push(to_rest.kernel_space());
        layers.push((l, k));
        rest = q;
    }
    if !rest.is_zero() {
        return Err(st.order.linear_extension()[0]);
    }
    // The kernels grow as layers are removed, so the chain is bottom-up.
    Ok(DeltaFiltration { multiplicities, layers, chain: subs })
}

/// `Delta`-filtration of `M` for a quasi-hereditary order. The peeled
/// filtration and the criterion `Ext^1(M, Nabla(l)) = 0` must agree, and the
/// multiplicities must equal `dim Hom(M, Nabla(l))`.
pub fn delta_filtration(m: &Module, st: &Standard) -> std::result::Result<DeltaFiltration, FiltrationRefusal> {
    let ext_witness = (0..st.nabla.len())
        .map(|l| (l, ext_dim(m, &st.nabla[l], 1)))
        .find(|&(_, d)| d != 0);
    match peel(m, st) {
        Ok(f) if ext_witness.is_none() => {
            let hom: Vec<usize> = st.nabla.iter().map(|x| hom_dim(m, x)).collect();
            if hom == f.multiplicities {
                Ok(f)
            } else {
                let l = (0..hom.len()).find(|&l| hom[l] != f.multiplicities[l]);
                Err(FiltrationRefusal { peeled_at: l, ext_witness: None })
            }
        }
        Ok(_) => Err(FiltrationRefusal { peeled_at: None, ext_witness }),
        Err(l) => Err(FiltrationRefusal { peeled_at: Some(l), ext_witness }),
    }
}
