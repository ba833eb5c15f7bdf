//! Comparisons of the characteristic tilting module with the chain module
//! `T^1`, and the trace identity for Auslander algebras.

use std::sync::Arc;

use serde::Serialize;

use crate::classify::{canonical_injective_pd1, classify, projective_injective};
use crate::endo::{end_algebra, is_nakayama, presentation};
use crate::error::Result;
use crate::pathalg::Algebra;
use crate::repmod::{is_isomorphic, trace_space, Module};
use crate::tilt::{tilting_chain, AddCategory};

use super::{is_quasi_hereditary, PartialOrder};

#[derive(Clone, Debug, Serialize)]
pub struct StronglyQhConditions {
    pub order: PartialOrder,
    pub qh: bool,
    pub almost_1_auslander: Option<bool>,
    pub right_strongly: bool,
    /// Both hypotheses hold.
    pub applicable: bool,
    /// Strongly quasi-hereditary.
    pub cond1: bool,
    /// `T = T^1`; `None` when the chain cannot be built.
    pub cond2: Option<bool>,
    /// The projective cover of `T` lies in `add I`.
    pub cond3: bool,
    pub i_projective: bool,
    pub auslander: Option<bool>,
    /// `End(I)` is Nakayama; evaluated for Auslander algebras.
    pub cond4: Option<bool>,
    /// `(3) => (2) => (1)`, `(1) => (3)` when `I` is projective, and all
    /// conditions equal for Auslander algebras.
    pub implications_hold: bool,
}

fn implies(a: bool, b: Option<bool>) -> bool {
    !a || b != Some(false)
}

pub fn strongly_qh_conditions(alg: &Arc<Algebra>, ord: &PartialOrder, bound: usize) -> Result<StronglyQhConditions> {
    let report = classify(alg, bound)?;
    let cert = is_quasi_hereditary(alg, ord, bound)?;
    let i = canonical_injective_pd1(alg);
    let add_i = AddCategory::new(&i);
    let strong = cert.strong.clone();
    let right = strong.as_ref().is_some_and(|s| s.right);
    let cond1 = strong.as_ref().is_some_and(|s| s.strongly);
    let (cond2, cond3) = match &cert.tilting {
        Some(t) => {
            let t1 = if i.is_zero() {
                None
            } else {
                tilting_chain(&Module::regular(alg), &i, bound).ok().map(|c| c.modules[1].clone())
            };
            let cond2 = t1.map(|t1| is_isomorphic(&t1, &t.module));
            let top = t.module.top_dims();
            let cond3 = (0..alg.num_vertices()).all(|v| top[v] == 0 || add_i.contains(&Module::projective(alg, v)));
            (cond2, cond3)
        }
        None => (None, false),
    };
    let i_projective = !i.is_zero() && i.is_projective();
    let cond4 = match report.auslander {
        Some(true) if !i.is_zero() => {
            let e = end_algebra(&i)?;
            Some(is_nakayama(&presentation(&e.algebra)?.algebra))
        }
        _ => None,
    };
    let mut ok = implies(cond3, cond2) && implies(cond2 == Some(true), Some(cond1));
    if i_projective {
        ok &= implies(cond1, Some(cond3));
    }
    if let Some(c4) = cond4 {
        ok &= cond2 == Some(cond1) && cond3 == cond1 && c4 == cond1;
    }
    let almost = report.is_almost_auslander(1);
    Ok(StronglyQhConditions {
        order: ord.clone(),
        qh: cert.is_qh(),
        almost_1_auslander: almost,
        right_strongly: right,
        applicable: almost == Some(true) && right,
        cond1,
        cond2,
        cond3,
        i_projective,
        auslander: report.auslander,
        cond4,
        implications_hold: ok,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct TraceIdentity {
    pub applicable: bool,
    pub reason: Option<String>,
    pub tr_t_dims: Vec<usize>,
    pub tr_pt_dims: Vec<usize>,
    pub aea_dims: Vec<usize>,
    /// `Tr_T A` inside `Tr_P(T) A`.
    pub contained: bool,
    /// `Tr_T A = Tr_P(T) A = AeA`, when applicable.
    pub holds: Option<bool>,
}

/// Compares `Tr_T A`, `Tr_P(T) A` and `AeA` as subspaces of `A`, with `eA`
/// the largest projective-injective summand.
pub fn trace_identity_check(alg: &Arc<Algebra>, ord: &PartialOrder, bound: usize) -> Result<TraceIdentity> {
    let report = classify(alg, bound)?;
    let cert = is_quasi_hereditary(alg, ord, bound)?;
    let left = cert.strong.as_ref().is_some_and(|s| s.left);
    let reason = match (report.auslander, left) {
        (Some(true), true) => None,
        (Some(true), false) => Some("the order is not left-strongly quasi-hereditary"),
        _ => Some("A is not an Auslander algebra"),
    };
    let Some(t) = &cert.tilting else {
        return Ok(TraceIdentity {
            applicable: false,
            reason: Some("the order is not quasi-hereditary".into()),
            tr_t_dims: vec![],
            tr_pt_dims: vec![],
            aea_dims: vec![],
            contained: false,
            holds: None,
        });
    };
    let a = Module::regular(alg);
    let top = t.module.top_dims();
    let parts: Vec<Module> =
        (0..alg.num_vertices()).filter(|&v| top[v] > 0).map(|v| Module::projective(alg, v)).collect();
    let cover = Module::direct_sum(alg, &parts);
    let tr_t = trace_space(&t.module, &a);
    let tr_pt = trace_space(&cover, &a);
    let aea = trace_space(&projective_injective(alg), &a);
    let holds = reason.is_none().then(|| tr_t == tr_pt && tr_pt == aea);
    Ok(TraceIdentity {
        applicable: reason.is_none(),
        reason: reason.map(str::to_string),
        tr_t_dims: tr_t.dims(),
        tr_pt_dims: tr_pt.dims(),
        aea_dims: aea.dims(),
        contained: tr_pt.contains(&tr_t),
        holds,
    })
}
