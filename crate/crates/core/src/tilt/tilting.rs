//! Tilting and cotilting certificates, mutation, the Ext order and the
//! canonical chain `T^1, ..., T^{m+1}` built from an `add Q`-coresolution of `A`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::homo::{ext_dim, ext_dims, min_proj_resolution, pd, Bounded, Resolution};
use crate::repmod::{basic, decompose, is_isomorphic, Module};

use super::{add_coresolution, AddCategory, AddCoresolution, Approximation, Length};

/// Evidence that `T` satisfies the three tilting axioms.
#[derive(Clone, Debug)]
pub struct TiltingCertificate {
    pub module: Module,
    /// `pd T`.
    pub degree: usize,
    pub resolution: Resolution,
    /// `dim Ext^i(T, T)` for `i = 1..=degree`; all zero.
    pub ext_table: Vec<usize>,
    /// `0 -> A -> T^0 -> ... -> T^c -> 0` by minimal `add T`-approximations.
    pub coresolution: AddCoresolution,
    pub codim: usize,
    pub basic: bool,
    /// `|T|`, the number of isomorphism classes of indecomposable summands.
    pub num_summands: usize,
}

impl TiltingCertificate {
    /// `|T| = |A|` and `codim_T A = pd T`.
    pub fn verify(&self) -> bool {
        self.num_summands == self.module.algebra().num_vertices()
            && self.codim == self.degree
            && self.ext_table.iter().all(|&d| d == 0)
    }
}

/// The first axiom that fails, with a witness.
#[derive(Clone, Debug)]
pub enum TiltingRefusal {
    /// (T1): no finite projective resolution within the bound.
    InfinitePd { bound: usize },
    /// (T2): `Ext^degree(T, T)` has dimension `dim`, witnessed by a pair of
    /// indecomposable summands `(X, Y)` with `Ext^degree(X, Y) != 0`.
    ExtNonvanishing { degree: usize, dim: usize, witness: Option<(Module, Module)> },
    /// (T3): `A` has no finite `add T`-coresolution of length `pd T`.
    NotCogenerating { degree: usize, length: Length },
}

impl TiltingRefusal {
    pub fn axiom(&self) -> &'static str {
        match self {
            TiltingRefusal::InfinitePd { .. } => "T1",
            TiltingRefusal::ExtNonvanishing { .. } => "T2",
            TiltingRefusal::NotCogenerating { .. } => "T3",
        }
    }
}

impl fmt::Display for TiltingRefusal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TiltingRefusal::InfinitePd { bound } => write!(f, "(T1) pd T > {bound}"),
            TiltingRefusal::ExtNonvanishing { degree, dim, witness } => {
                write!(f, "(T2) dim Ext^{degree}(T, T) = {dim}")?;
                if let Some((x, y)) = witness {
                    write!(f, ", nonzero on summands {:?} -> {:?}", x.dims(), y.dims())?;
                }
                Ok(())
            }
            TiltingRefusal::NotCogenerating { degree, length } => {
                write!(f, "(T3) no add T-coresolution of A of length {degree}: {length:?}")
            }
        }
    }
}

fn ext_witness(t: &Module, degree: usize) -> Option<(Module, Module)> {
    let parts: Vec<Module> = decompose(t).multiplicities().into_iter().map(|(m, _)| m).collect();
    parts
        .iter()
        .flat_map(|x| parts.iter().map(move |y| (x, y)))
        .find(|(x, y)| ext_dim(x, y, degree) != 0)
        .map(|(x, y)| (x.clone(), y.clone()))
}

pub fn is_tilting(t: &Module, bound: usize) -> std::result::Result<TiltingCertificate, TiltingRefusal> {
    let resolution = min_proj_resolution(t, bound);
    let Bounded::Finite(d) = resolution.length else {
        return Err(TiltingRefusal::InfinitePd { bound });
    };
    let ext_table: Vec<usize> = ext_dims(t, t, d).into_iter().skip(1).collect();
    if let Some(k) = ext_table.iter().position(|&x| x != 0) {
        let degree = k + 1;
        return Err(TiltingRefusal::ExtNonvanishing { degree, dim: ext_table[k], witness: ext_witness(t, degree) });
    }
    let add = AddCategory::new(t);
    let a = Module::regular(t.algebra());
    let coresolution = add_coresolution(&a, &add, d);
    let codim = match coresolution.length {
        Length::Reached(c) => c,
        length => return Err(TiltingRefusal::NotCogenerating { degree: d, length }),
    };
    let num_summands = add.len();
    let basic = decompose(t).summands.len() == num_summands;
    Ok(TiltingCertificate { module: t.clone(), degree: d, resolution, ext_table, coresolution, codim, basic, num_summands })
}

/// Cotilting `C` over `A`: the certificate is for `D C`, tilting over `A^op`.
pub fn is_cotilting(c: &Module, bound: usize) -> std::result::Result<TiltingCertificate, TiltingRefusal> {
    // The opposite of an admissible finite-dimensional algebra always builds.
    let dc = c.dual().expect("opposite algebra");
    is_tilting(&dc, bound)
}

/// `mu_X(T) = Cok(X -> U') + U` where `T = X + U` and `X -> U'` is the
/// minimal left `add U`-approximation. `X` must lie in `add T`.
pub fn mutate(t: &Module, x: &Module) -> Result<Module> {
    if x.is_zero() {
        return Err(Error::MutationUndefined("X is zero".into()));
    }
    let xs = AddCategory::new(x);
    let dt = decompose(t);
    let mut rest = Vec::new();
    let mut hit = vec![false; xs.len()];
    for s in &dt.summands {
        match xs.position(&s.module) {
            Some(k) => hit[k] = true,
            None => rest.push(s.module.clone()),
        }
    }
    if hit.iter().any(|h| !h) {
        return Err(Error::MutationUndefined("X is not a summand of T".into()));
    }
    let u = Module::direct_sum(t.algebra(), &rest);
    let ap = AddCategory::new(&u).left_approximation(x);
    if !ap.morphism.is_injective() {
        return Err(Error::MutationUndefined("the minimal left add U-approximation of X is not a monomorphism".into()));
    }
    let (c, _) = ap.morphism.cokernel();
    Ok(c.plus(&u))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtOrder {
    /// `add T = add T'`.
    Equal,
    /// `T > T'`: `Ext^{>0}(T, T') = 0` only.
    Succeeds,
    /// `T < T'`.
    Precedes,
    Incomparable,
    /// Ext vanishes both ways without `add T = add T'`; impossible for tilting modules.
    MutuallyVanishing,
}

fn ext_range(t: &Module, bound: usize) -> usize {
    match pd(t, bound) {
        Bounded::Finite(d) => d,
        Bounded::Exceeds(b) => b + 1,
    }
}

/// `T >= T'` iff `Ext^i(T, T') = 0` for all `i >= 1`; checked up to the larger pd.
pub fn ext_order_compare(t: &Module, t2: &Module, bound: usize) -> ExtOrder {
    let n = ext_range(t, bound).max(ext_range(t2, bound)).max(1);
    let fwd = ext_dims(t, t2, n).iter().skip(1).all(|&d| d == 0);
    let back = ext_dims(t2, t, n).iter().skip(1).all(|&d| d == 0);
    match (fwd, back) {
        (true, true) if is_isomorphic(&basic(t), &basic(t2)) => ExtOrder::Equal,
        (true, true) => ExtOrder::MutuallyVanishing,
        (true, false) => ExtOrder::Succeeds,
        (false, true) => ExtOrder::Precedes,
        (false, false) => ExtOrder::Incomparable,
    }
}

/// The `add Q`-coresolution `0 -> A -> Q^0 -> ... -> Q^m` with `f^m` not epi,
/// before any validation of `Q`.
#[derive(Clone, Debug)]
pub struct ChainSkeleton {
    pub q: Module,
    pub stages: Vec<Approximation>,
    /// `A^1, ..., A^{m+1}`.
    pub cosyzygies: Vec<Module>,
    pub m: usize,
    /// The monomorphic steps did not stop within the bound.
    pub truncated: bool,
}

impl ChainSkeleton {
    /// `basic(A^d + Q)` for `d = 1..=m+1`.
    pub fn modules(&self) -> Vec<Module> {
        self.cosyzygies.iter().map(|ad| basic(&ad.plus(&self.q))).collect()
    }
}

/// `None` when `A` lies in `add Q` or does not embed in `add Q`.
pub fn chain_skeleton(a: &Module, q: &Module, bound: usize) -> Option<ChainSkeleton> {
    let add = AddCategory::new(q);
    let res = add_coresolution(a, &add, bound);
    let (m, truncated) = match res.length {
        Length::Reached(0) => return None,
        Length::Reached(k) => (k - 1, false),
        Length::Fails { stage: 0 } => return None,
        Length::Fails { stage } => (stage - 1, false),
        Length::Exceeds(b) => (b, true),
    };
    Some(ChainSkeleton {
        q: q.clone(),
        stages: res.stages[..=m].to_vec(),
        cosyzygies: res.cosyzygies[1..=m + 1].to_vec(),
        m,
        truncated,
    })
}

#[derive(Clone, Debug)]
pub struct TiltingChain {
    pub skeleton: ChainSkeleton,
    /// `T^0 = A, T^1, ..., T^{m+1}`, basic.
    pub modules: Vec<Module>,
    /// Certificate of `T^d`, of degree `d`.
    pub certificates: Vec<TiltingCertificate>,
    /// Isomorphism classes of indecomposable summands of `A^d` outside `add Q`.
    pub transport: Vec<usize>,
}

impl TiltingChain {
    pub fn m(&self) -> usize {
        self.skeleton.m
    }
}

/// Validates `pd Q <= 1` and `Ext^1(Q, Q) = 0`, then certifies every `T^d`.
pub fn tilting_chain(a: &Module, q: &Module, bound: usize) -> Result<TiltingChain> {
    match pd(q, 1) {
        Bounded::Finite(_) => {}
        Bounded::Exceeds(_) => {
            return Err(Error::Precondition(format!("pd Q = {} exceeds 1", pd(q, bound))));
        }
    }
    let e1 = ext_dim(q, q, 1);
    if e1 != 0 {
        return Err(Error::Precondition(format!("dim Ext^1(Q, Q) = {e1}")));
    }
    let b = basic(a);
    let add_q = AddCategory::new(q);
    let Some(skeleton) = chain_skeleton(a, q, bound) else {
        let why = if add_q.contains(a) { "A lies in add Q; the chain is empty" } else { "A does not embed in add Q" };
        return Err(Error::Precondition(why.into()));
    };
    let mut modules = vec![b];
    let mut certificates = vec![];
    let mut transport = vec![];
    for (i, t) in skeleton.modules().into_iter().enumerate() {
        let d = i + 1;
        let cert = is_tilting(&t, bound.max(d))
            .map_err(|r| Error::Precondition(format!("T^{d} is not tilting: {r}")))?;
        if cert.degree != d {
            return Err(Error::Precondition(format!("T^{d} has pd {}", cert.degree)));
        }
        let outside = decompose(&skeleton.cosyzygies[i])
            .multiplicities()
            .iter()
            .filter(|(x, _)| add_q.position(x).is_none())
            .count();
        transport.push(outside);
        modules.push(t);
        certificates.push(cert);
    }
    let cert0 = is_tilting(&modules[0], bound).map_err(|r| Error::Precondition(format!("A: {r}")))?;
    certificates.insert(0, cert0);
    Ok(TiltingChain { skeleton, modules, certificates, transport })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn regular_module_is_zero_tilting() {
        let a = fixtures::algebra("e4").unwrap();
        let c = is_tilting(&Module::regular(&a), 4).unwrap();
        assert_eq!(c.degree, 0);
        assert!(c.verify() && c.basic);
    }

    #[test]
    fn zero_module_fails_t3() {
        let a = fixtures::algebra("a3").unwrap();
        let r = is_tilting(&Module::zero(&a), 4).unwrap_err();
        assert_eq!(r.axiom(), "T3");
    }

    #[test]
    fn hereditary_chain_reaches_da() {
        let a = fixtures::algebra("a3").unwrap();
        let da = Module::dual_regular(&a);
        let pi: Vec<Module> =
            (0..3).map(|i| Module::projective(&a, i)).filter(Module::is_injective).collect();
        let q = Module::direct_sum(&a, &pi);
        let chain = tilting_chain(&Module::regular(&a), &q, 6).unwrap();
        assert_eq!(chain.m(), 0);
        assert!(is_isomorphic(&chain.modules[1], &da));
    }

    #[test]
    fn order_is_reflexive() {
        let a = fixtures::algebra("e1").unwrap();
        let da = Module::dual_regular(&a);
        assert_eq!(ext_order_compare(&da, &da, 6), ExtOrder::Equal);
        assert_eq!(ext_order_compare(&Module::regular(&a), &da, 6), ExtOrder::Succeeds);
    }
}
