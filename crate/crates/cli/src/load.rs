//! Reading inputs: files on disk or bundled fixtures.

use std::sync::Arc;

use serde::Serialize;

use domtilt::exactla::PrimeField;
use domtilt::fixtures;
use domtilt::input::{AlgebraFile, FieldSpec};
use domtilt::pathalg::Algebra;
use domtilt::qh::PartialOrder;
use domtilt::repmod::{eval_module_expr, Module, ModuleEnv};

use crate::Opts;

pub struct Input {
    pub name: String,
    pub file: AlgebraFile,
    pub alg: Arc<Algebra>,
    pub env: ModuleEnv,
}

/// Echoed in every structured report.
#[derive(Clone, Debug, Serialize)]
pub struct InputEcho {
    pub name: String,
    pub field: u32,
    pub vertices: Vec<String>,
    pub arrows: Vec<String>,
    pub relations: Vec<String>,
    pub dim: usize,
    pub bound: usize,
}

pub fn load(path: &str, opts: &Opts) -> Result<Input, String> {
    let (name, text) = match path.strip_prefix('@') {
        Some(fx) => {
            let t = fixtures::text(fx).ok_or_else(|| format!("no bundled fixture `{fx}`"))?;
            (fx.to_string(), t.to_string())
        }
        None => {
            let t = std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
            (path.to_string(), t)
        }
    };
    let file = AlgebraFile::parse(&text).map_err(|e| format!("{name}: {e}"))?;
    let field = match opts.field {
        Some(p) => Some(PrimeField::new(p).ok_or_else(|| format!("{p} is not a prime below 2^31"))?),
        None => None,
    };
    let alg = file.build(field, None).map_err(|e| format!("{name}: {e}"))?;
    let env = ModuleEnv::from_file(&alg, &file).map_err(|e| format!("{name}: {e}"))?;
    Ok(Input { name, file, alg, env })
}

impl Input {
    pub fn echo(&self, bound: usize) -> InputEcho {
        let q = self.alg.quiver();
        InputEcho {
            name: self.name.clone(),
            field: self.alg.field().characteristic(),
            vertices: q.vertices().to_vec(),
            arrows: q
                .arrows()
                .iter()
                .map(|a| format!("{}: {} -> {}", a.name, q.label(a.source), q.label(a.target)))
                .collect(),
            relations: self.file.relations.iter().map(|r| r.value.clone()).collect(),
            dim: self.alg.dim(),
            bound,
        }
    }

    pub fn module(&self, expr: &str) -> Result<Module, String> {
        eval_module_expr(&self.alg, &self.env, expr).map_err(|e| format!("module `{expr}`: {e}"))
    }

    /// `--order`, else the first `order` line of the file.
    pub fn order(&self, flag: Option<&str>) -> Result<PartialOrder, String> {
        let text = match flag {
            Some(t) => t.to_string(),
            None => self
                .file
                .orders
                .first()
                .map(|o| o.value.clone())
                .ok_or("no order given: pass --order or add an `order` line")?,
        };
        PartialOrder::parse(self.alg.quiver(), &text).map_err(|e| e.to_string())
    }

    pub fn is_rational(&self) -> bool {
        self.file.field == FieldSpec::Rational
    }
}
