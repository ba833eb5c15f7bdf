//! Module expressions, as used in `module NAME = EXPR` lines.
//!
//! ```text
//! expr  := term ('+' term)*
//! term  := atom ('^' N)?
//! atom  := P(v) | I(v) | S(v) | A | DA | 0 | NAME | (expr)
//!        | rad(expr) | soc(expr) | top(expr)
//!        | coker(P(j) + ... -> P(i) + ... : row; row; ...)
//!        | rep([d1, ..., dn], arrow = [[..], ..], ...)
//! ```
//!
//! A `coker` row lists, for one source summand `P(j)`, an element of
//! `e_i A e_j` for every target summand `P(i)`; `1` is the trivial path.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactla::{Field, Mat};
use crate::input::AlgebraFile;
use crate::pathalg::Algebra;

use super::{Module, Morphism};

/// Named modules over one algebra.
#[derive(Clone, Debug)]
pub struct ModuleEnv {
    alg: Arc<Algebra>,
    modules: BTreeMap<String, Module>,
    order: Vec<String>,
}

impl ModuleEnv {
    pub fn new(alg: &Arc<Algebra>) -> ModuleEnv {
        ModuleEnv { alg: alg.clone(), modules: BTreeMap::new(), order: Vec::new() }
    }

    /// Evaluates every `module` line of a file in order.
    pub fn from_file(alg: &Arc<Algebra>, file: &AlgebraFile) -> Result<ModuleEnv> {
        let mut env = ModuleEnv::new(alg);
        for decl in &file.modules {
            let m = eval_module_expr(alg, &env, &decl.value.expr).map_err(|e| match e {
                Error::Parse { column, message, .. } => Error::Parse {
                    line: decl.line,
                    column: decl.column + column.saturating_sub(1),
                    message,
                },
                other => other,
            })?;
            env.insert(&decl.value.name, m);
        }
        Ok(env)
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn insert(&mut self, name: &str, m: Module) {
        if self.modules.insert(name.to_string(), m).is_none() {
            self.order.push(name.to_string());
        }
    }

    pub fn get(&self, name: &str) -> Option<&Module> {
        self.modules.get(name)
    }

    /// Names in definition order.
    pub fn names(&self) -> &[String] {
        &self.order
    }
}

pub fn eval_module_expr(alg: &Arc<Algebra>, env: &ModuleEnv, text: &str) -> Result<Module> {
    let mut p = Parser { alg, env, src: text, pos: 0 };
    let m = p.expr()?;
    p.skip_ws();
    if p.pos < text.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(m)
}

struct Parser<'a> {
    alg: &'a Arc<Algebra>,
    env: &'a ModuleEnv,
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse { line: 1, column: self.pos + 1, message: msg.into() }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let r = self.rest();
        self.pos += r.len() - r.trim_start().len();
    }

    fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &str) -> Result<()> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(self.err(format!("expected `{tok}`")))
        }
    }

    fn ident(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let r = self.rest();
        let n = r.find(|c: char| !(c.is_alphanumeric() || c == '_' || c == '\'')).unwrap_or(r.len());
        if n == 0 {
            return Err(self.err("expected a name"));
        }
        self.pos += n;
        Ok(&r[..n])
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let r = self.rest();
        let n = r.find(|c: char| !c.is_ascii_digit()).unwrap_or(r.len());
        let v = r[..n].parse().map_err(|_| self.err("expected a number"))?;
        self.pos += n;
        Ok(v)
    }

    fn vertex(&mut self) -> Result<usize> {
        self.expect("(")?;
        let at = self.pos;
        let label = self.ident()?;
        let v = self.alg.quiver().vertex(label).map_err(|_| {
            Error::Parse { line: 1, column: at + 1, message: format!("unknown vertex `{label}`") }
        })?;
        self.expect(")")?;
        Ok(v)
    }

    fn expr(&mut self) -> Result<Module> {
        let mut parts = vec![self.term()?];
        while self.eat("+") {
            parts.push(self.term()?);
        }
        Ok(if parts.len() == 1 { parts.pop().unwrap() } else { Module::direct_sum(self.alg, &parts) })
    }

    fn term(&mut self) -> Result<Module> {
        let m = self.atom()?;
        if self.eat("^") {
            let k = self.number()?;
            return Ok(m.power(k));
        }
        Ok(m)
    }

    fn atom(&mut self) -> Result<Module> {
        self.skip_ws();
        if self.eat("(") {
            let m = self.expr()?;
            self.expect(")")?;
            return Ok(m);
        }
        if self.rest().starts_with('0') {
            self.pos += 1;
            return Ok(Module::zero(self.alg));
        }
        let at = self.pos;
        let name = self.ident()?;
        let alg = self.alg;
        match name {
            "P" => Ok(Module::projective(alg, self.vertex()?)),
            "I" => Ok(Module::injective(alg, self.vertex()?)),
            "S" => Ok(Module::simple(alg, self.vertex()?)),
            "A" => Ok(Module::regular(alg)),
            "DA" => Ok(Module::dual_regular(alg)),
            "rad" | "soc" | "top" => {
                self.expect("(")?;
                let m = self.expr()?;
                self.expect(")")?;
                Ok(match name {
                    "rad" => m.radical().module,
                    "soc" => m.socle().module,
                    _ => m.top().0,
                })
            }
            "coker" => self.coker(),
            "rep" => self.rep(),
            _ => self.env.get(name).cloned().ok_or_else(|| Error::Parse {
                line: 1,
                column: at + 1,
                message: format!("unknown module `{name}`"),
            }),
        }
    }

    fn projective_list(&mut self) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        loop {
            if self.eat("0") {
                // empty sum
            } else {
                let name = self.ident()?;
                if name != "P" {
                    return Err(self.err("expected `P(v)`"));
                }
                out.push(self.vertex()?);
            }
            if !self.eat("+") {
                return Ok(out);
            }
        }
    }

    /// Raw text up to the next `,`, `;` or closing `)` at depth zero.
    fn raw_entry(&mut self) -> (usize, &'a str) {
        self.skip_ws();
        let r = self.rest();
        let n = r.find([',', ';', ')']).unwrap_or(r.len());
        let start = self.pos;
        self.pos += n;
        (start, r[..n].trim())
    }

    /// Coordinates in `e_i A e_j` of a combination of paths from `i` to `j`.
    fn path_combination(&self, at: usize, text: &str, i: usize, j: usize) -> Result<Vec<u32>> {
        let alg = self.alg;
        let f = alg.field();
        let bad = |msg: String| Error::Parse { line: 1, column: at + 1, message: msg };
        let mut total = vec![0u32; alg.dim()];
        if text != "0" {
            let mut terms: Vec<(i64, &str)> = Vec::new();
            let mut sign = 1i64;
            let mut start = 0;
            let bytes = text.as_bytes();
            for k in 0..=bytes.len() {
                if k == bytes.len() || bytes[k] == b'+' || bytes[k] == b'-' {
                    let piece = text[start..k].trim();
                    if !piece.is_empty() {
                        terms.push((sign, piece));
                        sign = 1;
                    }
                    if k < bytes.len() && bytes[k] == b'-' {
                        sign = -sign;
                    }
                    start = k + 1;
                }
            }
            for (sign, piece) in terms {
                let digits: String = piece.chars().take_while(char::is_ascii_digit).collect();
                let word_text = piece[digits.len()..].trim().trim_start_matches('*').trim();
                let (coeff, word) = match (digits.is_empty(), word_text.is_empty()) {
                    (true, _) => (1i64, alg.quiver().parse_word(word_text).map_err(|e| bad(e.to_string()))?),
                    (false, true) if digits == "1" && i == j => (1, Vec::new()),
                    (false, true) => {
                        let c: i64 = digits.parse().map_err(|_| bad("bad coefficient".into()))?;
                        if i != j {
                            return Err(bad(format!("`{piece}` is not a path from {} to {}", label(alg, i), label(alg, j))));
                        }
                        (c, Vec::new())
                    }
                    (false, false) => (
                        digits.parse().map_err(|_| bad("bad coefficient".into()))?,
                        alg.quiver().parse_word(word_text).map_err(|e| bad(e.to_string()))?,
                    ),
                };
                let q = alg.quiver();
                let ends = match (word.first(), word.last()) {
                    (Some(&a), Some(&b)) => (q.arrow(a).source, q.arrow(b).target),
                    _ => (i, i),
                };
                if ends != (i, j) || !q.is_path(&word) && !word.is_empty() {
                    return Err(bad(format!("`{piece}` is not a path from {} to {}", label(alg, i), label(alg, j))));
                }
                let e = alg.path_element(i, &word);
                let c = f.from_i64(sign * coeff);
                for k in 0..total.len() {
                    total[k] = f.add(&total[k], &f.mul(&c, &e[k]));
                }
            }
        }
        Ok(alg.paths_between(i, j).into_iter().map(|b| total[b]).collect())
    }

    fn coker(&mut self) -> Result<Module> {
        self.expect("(")?;
        let src = self.projective_list()?;
        self.expect("->")?;
        let tgt = self.projective_list()?;
        let alg = self.alg;
        let targets: Vec<Module> = tgt.iter().map(|&i| Module::projective(alg, i)).collect();
        let (tsum, incl, _) = Module::direct_sum_with_maps(alg, &targets);
        let mut rows = Vec::new();
        if !src.is_empty() {
            self.expect(":")?;
        }
        for (s, &j) in src.iter().enumerate() {
            if s > 0 {
                self.expect(";")?;
            }
            let pj = Module::projective(alg, j);
            let mut row = Morphism::zero(&pj, &tsum);
            for (k, &i) in tgt.iter().enumerate() {
                if k > 0 {
                    self.expect(",")?;
                }
                let (at, text) = self.raw_entry();
                if text.is_empty() {
                    return Err(self.err("missing entry"));
                }
                let x = self.path_combination(at, text, i, j)?;
                row = row.add(&Morphism::from_projective(&targets[k], j, &x).then(&incl[k]));
            }
            rows.push(row);
        }
        self.expect(")")?;
        if rows.is_empty() {
            return Ok(tsum);
        }
        let (_, map) = Morphism::from_components_in(&tsum, &rows);
        Ok(map.cokernel().0)
    }

    /// A bracket-balanced JSON value.
    fn json<T: serde::de::DeserializeOwned>(&mut self) -> Result<T> {
        self.skip_ws();
        let r = self.rest();
        let mut depth = 0i32;
        let mut end = None;
        for (k, c) in r.char_indices() {
            match c {
                '[' => depth += 1,
                ']' => {
                    depth -= 1;
                    if depth == 0 {
                        end = Some(k + 1);
                        break;
                    }
                }
                _ if depth == 0 => break,
                _ => {}
            }
        }
        let end = end.ok_or_else(|| self.err("expected a bracketed array"))?;
        let v = serde_json::from_str(&r[..end]).map_err(|e| self.err(e.to_string()))?;
        self.pos += end;
        Ok(v)
    }

    fn rep(&mut self) -> Result<Module> {
        self.expect("(")?;
        let alg = self.alg;
        let f = alg.field();
        let dims: Vec<usize> = self.json()?;
        if dims.len() != alg.num_vertices() {
            return Err(self.err(format!("{} dimensions for {} vertices", dims.len(), alg.num_vertices())));
        }
        let q = alg.quiver();
        let mut maps: Vec<_> =
            q.arrows().iter().map(|a| Mat::zeros(&f, dims[a.source], dims[a.target])).collect();
        while self.eat(",") {
            let at = self.pos;
            let name = self.ident()?;
            let ai = q
                .arrow_index(name)
                .ok_or_else(|| Error::Parse { line: 1, column: at + 1, message: format!("unknown arrow `{name}`") })?;
            self.expect("=")?;
            let rows: Vec<Vec<i64>> = self.json()?;
            let a = q.arrow(ai);
            let (r, c) = (dims[a.source], dims[a.target]);
            if rows.len() != r || rows.iter().any(|row| row.len() != c) {
                return Err(self.err(format!("matrix for `{name}` must be {r} x {c}")));
            }
            let flat: Vec<i64> = rows.into_iter().flatten().collect();
            maps[ai] = Mat::from_i64(&f, r, c, &flat);
        }
        self.expect(")")?;
        Module::new(alg, dims, maps)
    }
}

fn label(alg: &Algebra, v: usize) -> &str {
    alg.quiver().label(v)
}
