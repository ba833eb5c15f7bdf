//! One function per subcommand. Each returns the text rendering and the
//! structured result side by side.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};

use domtilt::classify::{
    canonical_injective_pd1, classify as classify_alg, verify_almost_ag_theorem, verify_auslander_tilting,
    verify_main_theorem, ClassificationReport,
};
use domtilt::endo::{check_chain_endos, CheckStatus};
use domtilt::homo::{min_inj_coresolution, min_proj_resolution, Bounded};
use domtilt::qh::{is_quasi_hereditary, strongly_qh_conditions, PartialOrder, QhFailure};
use domtilt::repmod::{is_isomorphic, Module};
use domtilt::tilt::{
    is_cotilting, is_tilting, search_tilting, tilting_chain, SearchConfig, SearchMode, TiltingCertificate,
    TiltingRefusal,
};

use crate::load::{load, Input, InputEcho};
use crate::names::{render, Namer, Summand};
use crate::Opts;

pub const SCHEMA: &str = "domtilt.report/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    /// The question was refused, with a witness in the result.
    Refused,
}

pub struct Outcome {
    pub command: &'static str,
    pub inputs: Vec<InputEcho>,
    pub status: Status,
    pub text: String,
    pub result: Value,
}

impl Outcome {
    pub fn document(&self) -> Value {
        json!({
            "schema": SCHEMA,
            "command": self.command,
            "status": match self.status { Status::Ok => "ok", Status::Refused => "refused" },
            "inputs": self.inputs,
            "result": self.result,
        })
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serialisable")
}

/// `P(1)^4 + P(5)^2` from a multiplicity vector.
fn sum_of(inp: &Input, letter: &str, mult: &[usize]) -> String {
    let q = inp.alg.quiver();
    let parts: Vec<String> = mult
        .iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(v, &k)| {
            let base = format!("{letter}({})", q.label(v));
            if k == 1 {
                base
            } else {
                format!("{base}^{k}")
            }
        })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

/// `= 2`, or `> 8` past the bound.
fn is(b: Bounded) -> String {
    match b {
        Bounded::Finite(k) => format!("= {k}"),
        Bounded::Exceeds(k) => format!("> {k}"),
    }
}

fn header(text: &mut String, inp: &Input) {
    let _ = writeln!(text, "algebra {} (dim {}, {} vertices)", inp.name, inp.alg.dim(), inp.alg.num_vertices());
    if inp.is_rational() {
        let _ = writeln!(text, "field: rational, computed over F_{}", inp.alg.field().characteristic());
    }
}

pub fn resolve(path: &str, module: Option<&str>, opts: &Opts) -> Result<Outcome, String> {
    let inp = load(path, opts)?;
    let expr = module.unwrap_or("A");
    let m = inp.module(expr)?;
    let res = min_proj_resolution(&m, opts.bound);
    let cor = min_inj_coresolution(&m, opts.bound);
    let proj: Vec<String> =
        res.terms.iter().filter(|t| !t.is_zero()).map(|t| sum_of(&inp, "P", &t.top_dims())).collect();
    let inj: Vec<String> =
        cor.terms.iter().filter(|t| !t.is_zero()).map(|t| sum_of(&inp, "I", &t.socle_dims())).collect();
    let mut text = String::new();
    header(&mut text, &inp);
    let _ = writeln!(text, "module {expr}, dimension vector {:?}", m.dims());
    let _ = writeln!(text, "projective resolution, pd {}", is(res.length));
    for (i, t) in proj.iter().enumerate() {
        let _ = writeln!(text, "  P_{i} = {t}");
    }
    let _ = writeln!(text, "injective coresolution, id {}", is(cor.length));
    for (i, t) in inj.iter().enumerate() {
        let _ = writeln!(text, "  I^{i} = {t}");
    }
    let result = json!({
        "module": expr,
        "dims": m.dims(),
        "projective": { "terms": proj, "length": res.length },
        "injective": { "terms": inj, "length": cor.length },
    });
    Ok(Outcome { command: "resolve", inputs: vec![inp.echo(opts.bound)], status: Status::Ok, text, result })
}

#[derive(Serialize)]
struct CertificateView {
    summands: Vec<Summand>,
    pd: usize,
    ext_table: Vec<usize>,
    codim: usize,
    num_summands: usize,
    verified: bool,
    cotilting_degree: Option<usize>,
}

fn certificate_view(namer: &Namer, c: &TiltingCertificate, bound: usize) -> CertificateView {
    CertificateView {
        summands: namer.summands(&c.module),
        pd: c.degree,
        ext_table: c.ext_table.clone(),
        codim: c.codim,
        num_summands: c.num_summands,
        verified: c.verify(),
        cotilting_degree: is_cotilting(&c.module, bound).ok().map(|c| c.degree),
    }
}

fn refusal_value(namer: &Namer, r: &TiltingRefusal) -> Value {
    let witness = match r {
        TiltingRefusal::ExtNonvanishing { witness: Some((x, y)), .. } => Some([namer.name(x), namer.name(y)]),
        _ => None,
    };
    json!({ "axiom": r.axiom(), "reason": r.to_string(), "witness": witness })
}

/// `Q` from the flag, the file's module `Q`, or the canonical injective.
fn chain_source(inp: &Input, q: Option<&str>) -> Result<(String, Module), String> {
    match q {
        Some(e) => Ok((e.to_string(), inp.module(e)?)),
        None if inp.env.get("Q").is_some() => Ok(("Q".into(), inp.module("Q")?)),
        None => Ok(("I".into(), canonical_injective_pd1(&inp.alg))),
    }
}

pub fn tilting(path: &str, q: Option<&str>, check: Option<&str>, opts: &Opts) -> Result<Outcome, String> {
    let inp = load(path, opts)?;
    let namer = Namer::new(&inp.env);
    let mut text = String::new();
    header(&mut text, &inp);
    let inputs = vec![inp.echo(opts.bound)];
    if let Some(expr) = check {
        let t = inp.module(expr)?;
        let _ = writeln!(text, "T = {}", render(&namer.summands(&t)));
        return Ok(match is_tilting(&t, opts.bound) {
            Ok(c) => {
                let v = certificate_view(&namer, &c, opts.bound);
                let _ = writeln!(text, "tilting, pd = {}, codim = {}, |T| = {}", v.pd, v.codim, v.num_summands);
                Outcome { command: "tilting", inputs, status: Status::Ok, text, result: json!({ "check": v }) }
            }
            Err(r) => {
                let v = refusal_value(&namer, &r);
                let _ = writeln!(text, "refused at {}: {}", r.axiom(), r);
                if let Some(w) = v["witness"].as_array() {
                    let name = |i: usize| w[i].as_str().unwrap_or_default().to_string();
                    let _ = writeln!(text, "witness: Ext between {} and {}", name(0), name(1));
                }
                Outcome { command: "tilting", inputs, status: Status::Refused, text, result: json!({ "refusal": v }) }
            }
        });
    }
    let (qname, qm) = chain_source(&inp, q)?;
    let listed = render(&namer.summands(&qm));
    match qname.as_str() {
        "Q" => writeln!(text, "Q = {listed}"),
        _ => writeln!(text, "Q = {qname} = {listed}"),
    }
    .ok();
    let a = Module::regular(&inp.alg);
    let chain = match tilting_chain(&a, &qm, opts.bound) {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(text, "refused: {e}");
            let result = json!({ "q": qname, "refusal": e.to_string() });
            return Ok(Outcome { command: "tilting", inputs, status: Status::Refused, text, result });
        }
    };
    let mut stages = Vec::new();
    for (i, s) in chain.skeleton.stages.iter().enumerate() {
        let r = render(&namer.summands(s.morphism.target()));
        let _ = writeln!(text, "Q^{i} = {r}");
        stages.push(r);
    }
    let _ = writeln!(text, "m = {}", chain.m());
    let config = SearchConfig { extra_seeds: chain.skeleton.cosyzygies.clone(), ..Default::default() };
    let mut degrees = Vec::new();
    for d in 1..chain.modules.len() {
        let v = certificate_view(&namer, &chain.certificates[d], opts.bound);
        let green = if v.verified { "certified" } else { "NOT certified" };
        let _ = writeln!(text, "T^{d} = {}", render(&v.summands));
        let _ = writeln!(
            text,
            "  {green} {d}-tilting: pd = {}, Ext^i(T, T) = 0 for i <= {}, codim = {}, |T| = {}",
            v.pd,
            v.ext_table.len(),
            v.codim,
            v.num_summands
        );
        if let Some(k) = v.cotilting_degree {
            let _ = writeln!(text, "  {k}-cotilting");
        }
        let found = opts.oracle.then(|| {
            let r = search_tilting(&inp.alg, &SearchMode::FacInjective { i: qm.clone(), d }, &config);
            let _ = writeln!(text, "  capped search in Fac_{d}(Q) with pd <= {d}: {} found", r.tilting.len());
            r.tilting.len()
        });
        degrees.push(json!({ "d": d, "certificate": v, "search_found": found }));
    }
    let result = json!({ "q": qname, "m": chain.m(), "stages": stages, "chain": degrees });
    Ok(Outcome { command: "tilting", inputs, status: Status::Ok, text, result })
}

fn levels_line(what: &str, l: &Option<domtilt::classify::Levels>) -> String {
    match l {
        None => format!("not almost n-{what} for any n"),
        Some(l) => match l.to {
            Bounded::Finite(t) if t == l.from => format!("almost {}-{what}", l.from),
            Bounded::Finite(t) => format!("almost n-{what} for {} <= n <= {t}", l.from),
            Bounded::Exceeds(b) => format!("almost n-{what} for n >= {} (checked to {b})", l.from),
        },
    }
}

fn flag(x: Option<bool>) -> &'static str {
    match x {
        Some(true) => "yes",
        Some(false) => "no",
        None => "unknown",
    }
}

fn classify_text(text: &mut String, inp: &Input, r: &ClassificationReport) {
    let _ = writeln!(text, "I = {}", sum_of(inp, "I", &indicator(inp, &r.i_vertices)));
    let _ = writeln!(text, "gldim A {}", is(r.gldim));
    let _ = writeln!(text, "id A {}, id A^op {}", is(r.id), is(r.id_op));
    let _ = writeln!(text, "gdom_I A {}, domdim A {}", is(r.gdom_i), is(r.domdim));
    let _ = writeln!(text, "{}", levels_line("Auslander-Gorenstein", &r.almost_ag));
    let _ = writeln!(text, "{}", levels_line("Auslander", &r.almost_auslander));
    let ig = r.iwanaga_gorenstein.map_or("no".to_string(), |k| format!("{k}-Iwanaga-Gorenstein"));
    let _ = writeln!(text, "Iwanaga-Gorenstein: {ig}");
    let _ = writeln!(text, "Auslander algebra: {}", flag(r.auslander));
    let _ = writeln!(text, "hereditary: {}, self-injective: {}", flag(r.hereditary), flag(Some(r.self_injective)));
}

fn indicator(inp: &Input, vs: &[usize]) -> Vec<usize> {
    let mut m = vec![0; inp.alg.num_vertices()];
    for &v in vs {
        m[v] += 1;
    }
    m
}

pub fn classify(path: &str, opts: &Opts) -> Result<Outcome, String> {
    let inp = load(path, opts)?;
    let r = classify_alg(&inp.alg, opts.bound).map_err(|e| e.to_string())?;
    let mut text = String::new();
    header(&mut text, &inp);
    classify_text(&mut text, &inp, &r);
    let mut theorems = serde_json::Map::new();
    if let Some(l) = r.almost_ag {
        let n = l.from;
        let main = verify_main_theorem(&inp.alg, n, opts.bound, opts.oracle);
        let _ = writeln!(text, "dominant dimension and tilting at n = {n}: consistent = {}", flag(main.consistent));
        theorems.insert("main".into(), to_value(&main));
        if let Ok(ag) = verify_almost_ag_theorem(&inp.alg, n, opts.bound, opts.oracle) {
            let _ = writeln!(text, "almost Auslander-Gorenstein characterisation: consistent = {}", flag(ag.consistent));
            theorems.insert("almost_ag".into(), to_value(&ag));
        }
    }
    if r.auslander == Some(true) {
        if let Ok(ev) = verify_auslander_tilting(&inp.alg, opts.bound, opts.oracle) {
            let _ = writeln!(text, "Auslander tilting module: consistent = {}", flag(ev.consistent));
            theorems.insert("auslander".into(), to_value(&ev));
        }
    }
    let result = json!({ "classification": r, "theorems": theorems });
    Ok(Outcome { command: "classify", inputs: vec![inp.echo(opts.bound)], status: Status::Ok, text, result })
}

fn qh_body(inp: &Input, ord: &PartialOrder, opts: &Opts, text: &mut String) -> Result<(Status, Value), String> {
    let namer = Namer::new(&inp.env);
    let cert = is_quasi_hereditary(&inp.alg, ord, opts.bound).map_err(|e| e.to_string())?;
    let _ = writeln!(text, "order {ord}");
    if let Some(f) = &cert.failure {
        let _ = writeln!(text, "not quasi-hereditary: {}", failure_text(ord, f));
        let result = json!({ "order": ord, "quasi_hereditary": false, "failure": f, "records": cert.records });
        return Ok((Status::Refused, result));
    }
    let _ = writeln!(text, "quasi-hereditary");
    for (l, r) in cert.records.iter().enumerate() {
        let _ = writeln!(
            text,
            "  {}: Delta = {} {:?}, Nabla = {} {:?}",
            r.vertex,
            namer.name(&cert.standard.delta[cert_index(ord, l)]),
            r.delta_dims,
            namer.name(&cert.standard.nabla[cert_index(ord, l)]),
            r.nabla_dims
        );
    }
    let strong = cert.strong.clone().expect("qh certificates carry flags");
    let _ = writeln!(text, "right-strongly qh: {}", strong.right);
    let _ = writeln!(text, "left-strongly qh: {}", strong.left);
    let _ = writeln!(text, "strongly-qh: {}", strong.strongly);
    let t = cert.tilting.as_ref().expect("qh certificates carry T");
    let summands = namer.summands(&t.module);
    let _ = writeln!(text, "T = {}", render(&summands));
    let _ = writeln!(
        text,
        "  tilting degree {}, cotilting degree {}",
        t.tilting_degree.map_or("-".into(), |d| d.to_string()),
        t.cotilting_degree.map_or("-".into(), |d| d.to_string())
    );
    let i = canonical_injective_pd1(&inp.alg);
    let t1 = if i.is_zero() {
        None
    } else {
        tilting_chain(&Module::regular(&inp.alg), &i, opts.bound).ok().map(|c| c.modules[1].clone())
    };
    let same = t1.as_ref().map(|t1| is_isomorphic(t1, &t.module));
    match (&t1, same) {
        (Some(t1), Some(s)) => {
            let _ = writeln!(text, "T^1 = {}", render(&namer.summands(t1)));
            let _ = writeln!(text, "T = T^1: {s}");
        }
        _ => {
            let _ = writeln!(text, "T = T^1: no chain from the canonical injective");
        }
    }
    let ev = strongly_qh_conditions(&inp.alg, ord, opts.bound).map_err(|e| e.to_string())?;
    let result = json!({
        "order": ord,
        "quasi_hereditary": true,
        "records": cert.records,
        "strong": strong,
        "characteristic_tilting": {
            "summands": summands,
            "tilting_degree": t.tilting_degree,
            "cotilting_degree": t.cotilting_degree,
        },
        "equals_t1": same,
        "strongly_qh_conditions": ev,
    });
    Ok((Status::Ok, result))
}

fn failure_text(ord: &PartialOrder, f: &QhFailure) -> String {
    match *f {
        QhFailure::NotSchurian { vertex, multiplicity } => {
            format!("[Delta({v}) : S({v})] = {multiplicity}", v = ord.label(vertex))
        }
        QhFailure::KernelNotFiltered { vertex, at } => format!(
            "K({}) has no Delta-filtration (the trace of P({}) is not a sum of Delta({}))",
            ord.label(vertex),
            ord.label(at),
            ord.label(at)
        ),
        QhFailure::OrderViolated { vertex, mu } => {
            format!("Delta({}) occurs in K({}) but {} < {} fails", ord.label(mu), ord.label(vertex), ord.label(vertex), ord.label(mu))
        }
    }
}

/// Records follow the linear extension; map back to vertices.
fn cert_index(ord: &PartialOrder, k: usize) -> usize {
    ord.linear_extension()[k]
}

pub fn qh(path: &str, opts: &Opts) -> Result<Outcome, String> {
    let inp = load(path, opts)?;
    let ord = inp.order(opts.order.as_deref())?;
    let mut text = String::new();
    header(&mut text, &inp);
    let (status, result) = qh_body(&inp, &ord, opts, &mut text)?;
    Ok(Outcome { command: "qh", inputs: vec![inp.echo(opts.bound)], status, text, result })
}

pub fn chain_endos(path: &str, q: Option<&str>, opts: &Opts) -> Result<Outcome, String> {
    let inp = load(path, opts)?;
    let qm = match q {
        Some(e) => Some(inp.module(e)?),
        None if inp.env.get("Q").is_some() => Some(inp.module("Q")?),
        None => None,
    };
    let mut text = String::new();
    header(&mut text, &inp);
    let inputs = vec![inp.echo(opts.bound)];
    let rep = match check_chain_endos(&inp.alg, qm.as_ref(), opts.bound) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(text, "refused: {e}");
            let result = json!({ "refusal": e.to_string() });
            return Ok(Outcome { command: "section4", inputs, status: Status::Refused, text, result });
        }
    };
    for e in &rep.endos {
        let _ = writeln!(text, "B^{} = End(T^{}): dim {}, {} vertices, gldim {}", e.d, e.d, e.dim, e.vertices, is(e.gldim));
    }
    for c in &rep.checks {
        let d = c.d.map_or(String::new(), |d| format!(" (d = {d})"));
        let s = match &c.status {
            CheckStatus::Pass => "pass".to_string(),
            CheckStatus::Fail => "FAIL".to_string(),
            CheckStatus::Skipped(why) => format!("skipped: {why}"),
        };
        let _ = writeln!(text, "{}{d}: {s}", c.name);
    }
    let _ = writeln!(text, "{} passed, {} failed, {} skipped", rep.passed(), rep.failures().len(), rep.skipped());
    Ok(Outcome { command: "section4", inputs, status: Status::Ok, text, result: to_value(&rep) })
}

fn report_one(path: &str, opts: &Opts) -> Result<(InputEcho, String, Value), String> {
    let inp = load(path, opts)?;
    let mut text = String::new();
    let _ = writeln!(text, "== {}", inp.name);
    header(&mut text, &inp);
    let r = classify_alg(&inp.alg, opts.bound).map_err(|e| e.to_string())?;
    classify_text(&mut text, &inp, &r);
    let namer = Namer::new(&inp.env);
    let (qname, qm) = chain_source(&inp, None)?;
    let chain = if qm.is_zero() {
        Err("Q is zero".to_string())
    } else {
        tilting_chain(&Module::regular(&inp.alg), &qm, opts.bound).map_err(|e| e.to_string())
    };
    let chain_v = match &chain {
        Ok(c) => {
            let mods: Vec<Vec<Summand>> = c.modules[1..].iter().map(|t| namer.summands(t)).collect();
            for (d, s) in mods.iter().enumerate() {
                let _ = writeln!(text, "T^{} from {qname} = {}", d + 1, render(s));
            }
            json!({ "q": qname, "m": c.m(), "modules": mods })
        }
        Err(e) => {
            let _ = writeln!(text, "chain from {qname}: refused: {e}");
            json!({ "q": qname, "refusal": e })
        }
    };
    let mut qh = Vec::new();
    for o in &inp.file.orders {
        let ord = PartialOrder::parse(inp.alg.quiver(), &o.value).map_err(|e| e.to_string())?;
        let (_, v) = qh_body(&inp, &ord, opts, &mut text)?;
        qh.push(v);
    }
    let result = json!({ "classification": r, "chain": chain_v, "qh": qh });
    Ok((inp.echo(opts.bound), text, result))
}

pub fn report_all(files: &[String], opts: &Opts) -> Result<Outcome, String> {
    let paths: Vec<String> = if files.is_empty() {
        domtilt::fixtures::ALL.iter().map(|(n, _)| format!("@{n}")).collect()
    } else {
        files.to_vec()
    };
    // Fixtures run in parallel; output keeps input order.
    let parts: Vec<Result<(InputEcho, String, Value), String>> = std::thread::scope(|s| {
        let handles: Vec<_> = paths.iter().map(|p| s.spawn(move || report_one(p, opts))).collect();
        handles.into_iter().map(|h| h.join().unwrap_or_else(|_| Err("worker panicked".into()))).collect()
    });
    let mut inputs = Vec::new();
    let mut text = String::new();
    let mut results = Vec::new();
    for p in parts {
        let (echo, t, v) = p?;
        inputs.push(echo);
        text.push_str(&t);
        results.push(v);
    }
    Ok(Outcome { command: "report-all", inputs, status: Status::Ok, text, result: Value::Array(results) })
}
