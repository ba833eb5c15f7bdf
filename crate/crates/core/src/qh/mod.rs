//! Quasi-hereditary structure for a given partial order: standard and
//! costandard modules, `Delta`-filtrations, the characteristic tilting module
//! and the strongly quasi-hereditary conditions.

mod checks;
mod order;
mod standard;

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::homo::{ext, ext_dim, id, min_proj_resolution, pd};
use crate::pathalg::Algebra;
use crate::repmod::{basic, decompose, Module, Morphism};
use crate::tilt::{is_cotilting, is_tilting};

pub use checks::{strongly_qh_conditions, trace_identity_check, StronglyQhConditions, TraceIdentity};
pub use order::PartialOrder;
pub use standard::{delta_filtration, peel, standard_modules, DeltaFiltration, FiltrationRefusal, Standard};

#[derive(Clone, Debug, Serialize)]
pub struct LambdaRecord {
    pub vertex: String,
    pub delta_dims: Vec<usize>,
    pub nabla_dims: Vec<usize>,
    pub kernel_dims: Vec<usize>,
    /// `(K(l) : Delta(m))`, when `K(l)` is filtered.
    pub kernel_multiplicities: Option<Vec<usize>>,
}

/// The clause of the definition that fails first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "clause", rename_all = "snake_case")]
pub enum QhFailure {
    /// `[Delta(l) : S(l)] != 1`.
    NotSchurian { vertex: usize, multiplicity: usize },
    /// `K(l)` has no `Delta`-filtration; peeling stopped at `at`.
    KernelNotFiltered { vertex: usize, at: usize },
    /// `(K(l) : Delta(m)) != 0` although `l < m` fails.
    OrderViolated { vertex: usize, mu: usize },
}

/// `pd` and `id` conditions, each computed three ways.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrongFlags {
    pub right: bool,
    pub left: bool,
    pub strongly: bool,
    /// `pd Delta(l) <= 1` for all `l`; `pd X <= 1` for the filtered modules
    /// tested; `pd T <= 1`.
    pub right_clauses: [bool; 3],
    /// The duals with `id`, `Nabla` and `F(Nabla)`.
    pub left_clauses: [bool; 3],
}

impl StrongFlags {
    pub fn consistent(&self) -> bool {
        self.right_clauses.iter().all(|&c| c == self.right) && self.left_clauses.iter().all(|&c| c == self.left)
    }
}

/// `T = basic (+)_l T(l)`.
#[derive(Clone, Debug)]
pub struct CharacteristicTilting {
    /// `T(l)` by vertex.
    pub summands: Vec<Module>,
    pub module: Module,
    pub tilting_degree: Option<usize>,
    pub cotilting_degree: Option<usize>,
}

impl CharacteristicTilting {
    pub fn certified(&self) -> bool {
        self.tilting_degree.is_some() && self.cotilting_degree.is_some()
    }
}

#[derive(Clone, Debug)]
pub struct QhCertificate {
    pub standard: Standard,
    pub records: Vec<LambdaRecord>,
    pub failure: Option<QhFailure>,
    pub strong: Option<StrongFlags>,
    pub tilting: Option<CharacteristicTilting>,
}

impl QhCertificate {
    pub fn order(&self) -> &PartialOrder {
        &self.standard.order
    }

    pub fn is_qh(&self) -> bool {
        self.failure.is_none()
    }
}

fn check_definition(st: &Standard) -> (Vec<LambdaRecord>, Option<QhFailure>) {
    let ord = &st.order;
    let mut records = Vec::new();
    let mut failure = None;
    for l in ord.linear_extension() {
        let k = &st.kernels[l].module;
        let own = st.delta[l].dims()[l];
        if own != 1 {
            failure.get_or_insert(QhFailure::NotSchurian { vertex: l, multiplicity: own });
        }
        let mult = match peel(k, st) {
            Ok(f) => {
                if let Some(mu) = (0..ord.len()).find(|&mu| f.multiplicities[mu] != 0 && !ord.lt(l, mu)) {
                    failure.get_or_insert(QhFailure::OrderViolated { vertex: l, mu });
                }
                Some(f.multiplicities)
            }
            Err(at) => {
                failure.get_or_insert(QhFailure::KernelNotFiltered { vertex: l, at });
                None
            }
        };
        records.push(LambdaRecord {
            vertex: ord.label(l).to_string(),
            delta_dims: st.delta[l].dims().to_vec(),
            nabla_dims: st.nabla[l].dims().to_vec(),
            kernel_dims: k.dims().to_vec(),
            kernel_multiplicities: mult,
        });
    }
    (records, failure)
}

/// Tests the definition vertex by vertex, with `[Delta(l) : S(l)] = 1`; on success also builds the
/// characteristic tilting module and the strong flags.
pub fn is_quasi_hereditary(alg: &Arc<Algebra>, ord: &PartialOrder, bound: usize) -> Result<QhCertificate> {
    let st = standard_modules(alg, ord)?;
    let (records, failure) = check_definition(&st);
    let mut cert = QhCertificate { standard: st, records, failure, strong: None, tilting: None };
    if cert.is_qh() {
        let t = characteristic_tilting(&cert.standard, bound)?;
        cert.strong = Some(strong_flags(&cert.standard, &t));
        cert.tilting = Some(t);
    }
    Ok(cert)
}

/// `0 -> X -> Y -> Delta(m)^e -> 0` with `e = dim Ext^1(Delta(m), X)` and
/// connecting map onto `Ext^1`, as a pushout of `Omega Delta(m) -> P`.
fn universal_extension(x: &Module, d: &Module) -> Module {
    let group = ext(d, x, 1);
    if group.dim == 0 {
        return x.clone();
    }
    let res = min_proj_resolution(d, 0);
    let iota = &res.inclusions[0];
    let (omega_e, phi) = Morphism::from_components_in(x, &group.cocycles);
    let iota_e = Morphism::direct_sum(&vec![iota.clone(); group.dim]);
    let neg = Morphism::zero(iota_e.source(), iota_e.target()).sub(&iota_e);
    let (_, g) = Morphism::from_components_out(&omega_e, &[phi, neg]);
    g.cokernel().0
}

/// Ringel's construction: from `Delta(l)`, universal extensions by `Delta(m)`
/// for `m < l`, largest first, until `Ext^1(Delta(m), T(l)) = 0` for all `m`.
pub fn characteristic_tilting(st: &Standard, bound: usize) -> Result<CharacteristicTilting> {
    let ord = &st.order;
    let n = ord.len();
    let desc: Vec<usize> = ord.linear_extension().into_iter().rev().collect();
    let mut summands = Vec::new();
    for l in 0..n {
        let mut y = st.delta[l].clone();
        let mut done = false;
        for _ in 0..=n {
            for &m in desc.iter().filter(|&&m| ord.lt(m, l)) {
                y = universal_extension(&y, &st.delta[m]);
            }
            if (0..n).all(|m| ext_dim(&st.delta[m], &y, 1) == 0) {
                done = true;
                break;
            }
        }
        if !done {
            return Err(Error::Precondition(format!(
                "no Ext-injective object for `{}` after {} rounds",
                ord.label(l),
                n + 1
            )));
        }
        let t = decompose(&y)
            .multiplicities()
            .into_iter()
            .map(|(x, _)| x)
            .find(|x| x.dims()[l] > 0)
            .expect("Delta(l) has S(l) in its top");
        summands.push(t);
    }
    let alg = st.delta[0].algebra();
    let module = basic(&Module::direct_sum(alg, &summands));
    let tilting_degree = is_tilting(&module, bound).ok().map(|c| c.degree);
    let cotilting_degree = is_cotilting(&module, bound).ok().map(|c| c.degree);
    Ok(CharacteristicTilting { summands, module, tilting_degree, cotilting_degree })
}

fn strong_flags(st: &Standard, t: &CharacteristicTilting) -> StrongFlags {
    let alg = st.delta[0].algebra();
    let n = st.delta.len();
    let pd1 = |m: &Module| pd(m, 1).at_most(1) == Some(true);
    let id1 = |m: &Module| id(m, 1).at_most(1) == Some(true);
    let ra = st.delta.iter().all(pd1);
    let rb = ra
        && (0..n).all(|l| pd1(&Module::projective(alg, l)))
        && st.kernels.iter().all(|k| pd1(&k.module))
        && t.summands.iter().all(pd1);
    let rc = pd1(&t.module);
    let la = st.nabla.iter().all(id1);
    let lb = la && (0..n).all(|l| id1(&Module::injective(alg, l))) && t.summands.iter().all(id1);
    let lc = id1(&t.module);
    StrongFlags {
        right: ra,
        left: la,
        strongly: ra && la,
        right_clauses: [ra, rb, rc],
        left_clauses: [la, lb, lc],
    }
}

/// The strong flags for `(A, ord)`; refused when the order is not
/// quasi-hereditary.
pub fn strongly_qh_check(alg: &Arc<Algebra>, ord: &PartialOrder, bound: usize) -> Result<StrongFlags> {
    let cert = is_quasi_hereditary(alg, ord, bound)?;
    match (cert.strong, cert.failure) {
        (Some(s), _) => Ok(s),
        (None, f) => Err(Error::Precondition(format!("not quasi-hereditary: {f:?}"))),
    }
}

/// Every total order on at most `max` vertices, with whether it is
/// quasi-hereditary.
pub fn scan_total_orders(alg: &Arc<Algebra>, max: usize) -> Result<Vec<(PartialOrder, bool)>> {
    PartialOrder::all_total(alg.quiver().vertices(), max)?
        .into_iter()
        .map(|o| {
            let st = standard_modules(alg, &o)?;
            let ok = check_definition(&st).1.is_none();
            Ok((o, ok))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::repmod::is_isomorphic;

    fn order(alg: &Arc<Algebra>, s: &str) -> PartialOrder {
        PartialOrder::parse(alg.quiver(), s).unwrap()
    }

    #[test]
    fn extreme_weights() {
        let a = fixtures::algebra("e4").unwrap();
        let st = standard_modules(&a, &order(&a, "2<3<1<4")).unwrap();
        assert!(is_isomorphic(&st.delta[3], &Module::projective(&a, 3)));
        assert!(is_isomorphic(&st.delta[1], &Module::simple(&a, 1)));
        assert!(is_isomorphic(&st.delta[2], &Module::simple(&a, 2)));
    }

    #[test]
    fn hereditary_adapted_order_gives_regular() {
        let a = fixtures::algebra("a3").unwrap();
        let cert = is_quasi_hereditary(&a, &order(&a, "3<2<1"), 6).unwrap();
        assert!(cert.is_qh());
        let t = cert.tilting.unwrap();
        assert!(t.certified());
        assert!(is_isomorphic(&t.module, &Module::regular(&a)));
        assert!(cert.strong.unwrap().strongly);
    }

    #[test]
    fn opposite_order_gives_dual() {
        let a = fixtures::algebra("a3").unwrap();
        let cert = is_quasi_hereditary(&a, &order(&a, "1<2<3"), 6).unwrap();
        let t = cert.tilting.unwrap();
        assert!(is_isomorphic(&t.module, &Module::dual_regular(&a)));
    }

    #[test]
    fn standard_is_filtered_once() {
        let a = fixtures::algebra("e4").unwrap();
        let st = standard_modules(&a, &order(&a, "2<3<1<4")).unwrap();
        for l in 0..4 {
            let f = delta_filtration(&st.delta[l], &st).unwrap();
            let mut want = vec![0; 4];
            want[l] = 1;
            assert_eq!(f.multiplicities, want);
        }
    }
}
