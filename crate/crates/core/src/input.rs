//! Line-oriented algebra description files.
//!
//! ```text
//! # comment
//! field 32003            # or `rational`
//! vertices 1 2 3 4
//! arrow a: 1 -> 2
//! relation a*b - c*d
//! max_path_length 12
//! order 2<3<1<4
//! module Q = I(2) + I(3)
//! ```

use std::fmt::Write as _;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactla::{PrimeField, DEFAULT_PRIME};
use crate::pathalg::{Algebra, Quiver, Relation, DEFAULT_MAX_PATH_LENGTH};

/// Largest prime below 2^31; stands in for the rationals.
pub const RATIONAL_PROXY_PRIME: u32 = 2_147_483_629;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Prime(u32),
    Rational,
}

impl FieldSpec {
    pub fn prime_field(self) -> Result<PrimeField> {
        let p = match self {
            FieldSpec::Prime(p) => p,
            FieldSpec::Rational => RATIONAL_PROXY_PRIME,
        };
        PrimeField::new(p).ok_or(Error::NotPrime(p))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Located<T> {
    pub value: T,
    pub line: usize,
    pub column: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowDecl {
    pub name: String,
    pub source: String,
    pub target: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleDecl {
    pub name: String,
    pub expr: String,
}

/// A parsed description file, before the algebra is built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraFile {
    pub field: FieldSpec,
    pub vertices: Vec<String>,
    pub arrows: Vec<Located<ArrowDecl>>,
    pub relations: Vec<Located<String>>,
    pub max_path_length: Option<usize>,
    pub orders: Vec<Located<String>>,
    pub modules: Vec<Located<ModuleDecl>>,
}

fn perr(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

fn is_ident(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_alphanumeric() || c == '_' || c == '\'')
}

impl AlgebraFile {
    pub fn parse(text: &str) -> Result<AlgebraFile> {
        let mut field = None;
        let mut vertices: Option<Vec<String>> = None;
        let mut arrows = Vec::new();
        let mut relations = Vec::new();
        let mut max_path_length = None;
        let mut orders = Vec::new();
        let mut modules = Vec::new();

        for (ln, raw) in text.lines().enumerate() {
            let line = ln + 1;
            let body = raw.split('#').next().unwrap();
            let trimmed = body.trim_start();
            if trimmed.trim().is_empty() {
                continue;
            }
            let indent = body.len() - trimmed.len();
            let key_end = trimmed.find(char::is_whitespace).unwrap_or(trimmed.len());
            let key = &trimmed[..key_end];
            let rest = trimmed[key_end..].trim_start();
            let rest_col = indent + 1 + (trimmed.len() - rest.len());
            let rest = rest.trim_end();
            match key {
                "field" => {
                    if field.is_some() {
                        return Err(perr(line, 1 + indent, "duplicate `field` line"));
                    }
                    field = Some(if rest == "rational" {
                        FieldSpec::Rational
                    } else {
                        let p: u32 = rest
                            .parse()
                            .map_err(|_| perr(line, rest_col, format!("expected a prime or `rational`, found `{rest}`")))?;
                        if PrimeField::new(p).is_none() {
                            return Err(perr(line, rest_col, format!("{p} is not a prime below 2^31")));
                        }
                        FieldSpec::Prime(p)
                    });
                }
                "vertices" => {
                    if vertices.is_some() {
                        return Err(perr(line, 1 + indent, "duplicate `vertices` line"));
                    }
                    let vs: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
                    if vs.is_empty() {
                        return Err(perr(line, rest_col, "no vertices given"));
                    }
                    for (i, v) in vs.iter().enumerate() {
                        if !is_ident(v) {
                            return Err(perr(line, rest_col, format!("bad vertex label `{v}`")));
                        }
                        if vs[..i].contains(v) {
                            return Err(perr(line, rest_col, format!("duplicate vertex `{v}`")));
                        }
                    }
                    vertices = Some(vs);
                }
                "arrow" => {
                    let Some(colon) = rest.find(':') else {
                        return Err(perr(line, rest_col, "expected `name: source -> target`"));
                    };
                    let name = rest[..colon].trim();
                    if !is_ident(name) {
                        return Err(perr(line, rest_col, format!("bad arrow name `{name}`")));
                    }
                    let ends = &rest[colon + 1..];
                    let ends_col = rest_col + colon + 1;
                    let Some(arrow_pos) = ends.find("->") else {
                        return Err(perr(line, ends_col, "expected `->` between endpoints"));
                    };
                    let src = ends[..arrow_pos].trim();
                    let tgt = ends[arrow_pos + 2..].trim();
                    let vs = vertices.as_ref().ok_or_else(|| perr(line, 1 + indent, "`arrow` before `vertices`"))?;
                    let tgt_col = ends_col + arrow_pos + 2 + (ends[arrow_pos + 2..].len() - ends[arrow_pos + 2..].trim_start().len());
                    let src_col = ends_col + (ends.len() - ends.trim_start().len());
                    if !vs.iter().any(|v| v == src) {
                        return Err(perr(line, src_col, format!("unknown source vertex `{src}`")));
                    }
                    if !vs.iter().any(|v| v == tgt) {
                        return Err(perr(line, tgt_col, format!("unknown target vertex `{tgt}`")));
                    }
                    if arrows.iter().any(|a: &Located<ArrowDecl>| a.value.name == name) {
                        return Err(perr(line, rest_col, format!("duplicate arrow `{name}`")));
                    }
                    arrows.push(Located {
                        value: ArrowDecl { name: name.into(), source: src.into(), target: tgt.into() },
                        line,
                        column: rest_col,
                    });
                }
                "relation" => {
                    if rest.is_empty() {
                        return Err(perr(line, rest_col, "empty relation"));
                    }
                    relations.push(Located { value: rest.to_string(), line, column: rest_col });
                }
                "max_path_length" => {
                    let n: usize =
                        rest.parse().map_err(|_| perr(line, rest_col, format!("expected an integer, found `{rest}`")))?;
                    if n < 2 {
                        return Err(perr(line, rest_col, "max_path_length must be at least 2"));
                    }
                    max_path_length = Some(n);
                }
                "order" => {
                    if rest.is_empty() {
                        return Err(perr(line, rest_col, "empty order"));
                    }
                    orders.push(Located { value: rest.to_string(), line, column: rest_col });
                }
                "module" => {
                    let Some(eq) = rest.find('=') else {
                        return Err(perr(line, rest_col, "expected `module NAME = expression`"));
                    };
                    let name = rest[..eq].trim();
                    if !is_ident(name) {
                        return Err(perr(line, rest_col, format!("bad module name `{name}`")));
                    }
                    let expr = rest[eq + 1..].trim();
                    if expr.is_empty() {
                        return Err(perr(line, rest_col + eq + 1, "empty module expression"));
                    }
                    modules.push(Located {
                        value: ModuleDecl { name: name.into(), expr: expr.into() },
                        line,
                        column: rest_col + eq + 1 + (rest[eq + 1..].len() - rest[eq + 1..].trim_start().len()),
                    });
                }
                other => return Err(perr(line, 1 + indent, format!("unknown key `{other}`"))),
            }
        }
        let vertices = vertices.ok_or_else(|| perr(1, 1, "missing `vertices` line"))?;
        Ok(AlgebraFile {
            field: field.unwrap_or(FieldSpec::Prime(DEFAULT_PRIME)),
            vertices,
            arrows,
            relations,
            max_path_length,
            orders,
            modules,
        })
    }

    pub fn quiver(&self) -> Result<Quiver> {
        let mut q = Quiver::new(self.vertices.clone())?;
        for a in &self.arrows {
            q.add_arrow(&a.value.name, &a.value.source, &a.value.target)?;
        }
        Ok(q)
    }

    /// Builds the algebra; `field` and `bound` override the file's values.
    pub fn build(&self, field: Option<PrimeField>, bound: Option<usize>) -> Result<Arc<Algebra>> {
        let q = self.quiver()?;
        let mut rels = Vec::new();
        for r in &self.relations {
            let rel = Relation::parse(&q, &r.value).map_err(|e| perr(r.line, r.column, e.to_string()))?;
            rels.push(rel);
        }
        let field = match field {
            Some(f) => f,
            None => self.field.prime_field()?,
        };
        let bound = bound.or(self.max_path_length).unwrap_or(DEFAULT_MAX_PATH_LENGTH);
        Algebra::new(field, q, rels, bound)
    }

    pub fn module(&self, name: &str) -> Option<&Located<ModuleDecl>> {
        self.modules.iter().find(|m| m.value.name == name)
    }

    /// Canonical text; parsing it back gives an equal value up to locations.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        match self.field {
            FieldSpec::Prime(p) => writeln!(s, "field {p}").unwrap(),
            FieldSpec::Rational => writeln!(s, "field rational").unwrap(),
        }
        writeln!(s, "vertices {}", self.vertices.join(" ")).unwrap();
        for a in &self.arrows {
            writeln!(s, "arrow {}: {} -> {}", a.value.name, a.value.source, a.value.target).unwrap();
        }
        for r in &self.relations {
            writeln!(s, "relation {}", r.value).unwrap();
        }
        if let Some(l) = self.max_path_length {
            writeln!(s, "max_path_length {l}").unwrap();
        }
        for o in &self.orders {
            writeln!(s, "order {}", o.value).unwrap();
        }
        for m in &self.modules {
            writeln!(s, "module {} = {}", m.value.name, m.value.expr).unwrap();
        }
        s
    }

    /// Same content, ignoring source locations.
    pub fn same_content(&self, other: &AlgebraFile) -> bool {
        let strip = |f: &AlgebraFile| {
            (
                f.field,
                f.vertices.clone(),
                f.arrows.iter().map(|a| a.value.clone()).collect::<Vec<_>>(),
                f.relations.iter().map(|a| a.value.clone()).collect::<Vec<_>>(),
                f.max_path_length,
                f.orders.iter().map(|a| a.value.clone()).collect::<Vec<_>>(),
                f.modules.iter().map(|a| a.value.clone()).collect::<Vec<_>>(),
            )
        };
        strip(self) == strip(other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SQUARE: &str = "\
# commutative square
field 32003
vertices 1 2 3 4
arrow a: 1 -> 2
arrow b: 2 -> 4
arrow c: 1 -> 3
arrow d: 3 -> 4
relation a*b - c*d
order 2<3<1<4
";

    #[test]
    fn parses_and_builds() {
        let f = AlgebraFile::parse(SQUARE).unwrap();
        assert_eq!(f.arrows.len(), 4);
        assert_eq!(f.orders[0].value, "2<3<1<4");
        assert_eq!(f.build(None, None).unwrap().dim(), 9);
    }

    #[test]
    fn round_trip() {
        let f = AlgebraFile::parse(SQUARE).unwrap();
        let g = AlgebraFile::parse(&f.to_text()).unwrap();
        assert!(f.same_content(&g));
    }

    #[test]
    fn no_relations_is_fine() {
        let f = AlgebraFile::parse("vertices 1 2\narrow a: 1 -> 2\n").unwrap();
        assert_eq!(f.build(None, None).unwrap().dim(), 3);
    }

    #[test]
    fn bad_endpoint_is_located() {
        let err = AlgebraFile::parse("vertices 1 2\narrow a: 1 -> 7\n").unwrap_err();
        assert_eq!(err, Error::Parse { line: 2, column: 15, message: "unknown target vertex `7`".into() });
        let err = AlgebraFile::parse("vertices 1 2\n  colour red\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, column: 3, .. }));
    }

    #[test]
    fn relation_errors_carry_location() {
        let err = AlgebraFile::parse("vertices 1 2\narrow a: 1 -> 2\nrelation a*z\n")
            .unwrap()
            .build(None, None)
            .unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, column: 10, .. }));
    }
}
