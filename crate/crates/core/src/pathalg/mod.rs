//! Bound quiver algebras `kQ/I` with a normal-word basis and exact structure
//! constants.

mod quiver;
mod rewrite;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, Weak};

use crate::error::{Error, Result};
use crate::exactla::{Field, Mat, Matrix, PrimeField};

pub use quiver::{Arrow, Quiver};
pub use rewrite::{Poly, RewriteSystem, Strategy, Word};

/// Default bound on path length used for truncation.
pub const DEFAULT_MAX_PATH_LENGTH: usize = 12;

/// A linear combination of paths with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(i64, Vec<usize>)>,
}

impl Relation {
    /// Parses `a*b - c*d`, `2 a*b + 3*c*d`, `-a*a`.
    pub fn parse(quiver: &Quiver, s: &str) -> Result<Relation> {
        let mut terms = Vec::new();
        let mut sign = 1i64;
        let mut buf = String::new();
        let flush = |buf: &mut String, sign: i64, terms: &mut Vec<(i64, Vec<usize>)>| -> Result<()> {
            let t = buf.trim();
            if t.is_empty() {
                return Err(Error::Precondition(format!("empty term in relation `{s}`")));
            }
            let digits: String = t.chars().take_while(|c| c.is_ascii_digit()).collect();
            let (coeff, rest) = if digits.is_empty() {
                (1, t)
            } else {
                let c: i64 = digits
                    .parse()
                    .map_err(|_| Error::Precondition(format!("bad coefficient `{digits}`")))?;
                (c, t[digits.len()..].trim_start().trim_start_matches('*').trim_start())
            };
            terms.push((sign * coeff, quiver.parse_word(rest)?));
            buf.clear();
            Ok(())
        };
        for ch in s.chars() {
            match ch {
                '+' | '-' if !buf.trim().is_empty() => {
                    flush(&mut buf, sign, &mut terms)?;
                    sign = if ch == '-' { -1 } else { 1 };
                }
                '+' => {}
                '-' => sign = -sign,
                _ => buf.push(ch),
            }
        }
        flush(&mut buf, sign, &mut terms)?;
        Ok(Relation { terms })
    }

    pub fn format(&self, quiver: &Quiver) -> String {
        let mut out = String::new();
        for (i, (c, w)) in self.terms.iter().enumerate() {
            let word = quiver.format_word(w);
            match (i, *c) {
                (0, 1) => out.push_str(&word),
                (0, -1) => out.push_str(&format!("-{word}")),
                (0, c) => out.push_str(&format!("{c} {word}")),
                (_, 1) => out.push_str(&format!(" + {word}")),
                (_, -1) => out.push_str(&format!(" - {word}")),
                (_, c) if c < 0 => out.push_str(&format!(" - {} {word}", -c)),
                (_, c) => out.push_str(&format!(" + {c} {word}")),
            }
        }
        out
    }
}

/// A basis element: the class of a normal path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisPath {
    pub start: usize,
    pub end: usize,
    /// Empty for the trivial path at `start`.
    pub word: Vec<usize>,
}

impl BasisPath {
    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.word.is_empty()
    }
}

/// A finite-dimensional algebra `kQ/I`. Paths compose left to right.
pub struct Algebra {
    field: PrimeField,
    quiver: Quiver,
    relations: Vec<Relation>,
    max_len: usize,
    system: RewriteSystem,
    basis: Vec<BasisPath>,
    index: HashMap<Vec<usize>, usize>,
    table: Vec<Vec<(usize, u32)>>,
    op: OnceLock<Arc<Algebra>>,
    op_back: OnceLock<Weak<Algebra>>,
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra")
            .field("vertices", &self.quiver.num_vertices())
            .field("arrows", &self.quiver.arrows().len())
            .field("dim", &self.dim())
            .finish()
    }
}

impl Algebra {
    pub fn new(field: PrimeField, quiver: Quiver, relations: Vec<Relation>, max_len: usize) -> Result<Arc<Self>> {
        Self::build(field, quiver, relations, max_len).map(Arc::new)
    }

    fn build(field: PrimeField, quiver: Quiver, relations: Vec<Relation>, max_len: usize) -> Result<Self> {
        if max_len < 2 {
            return Err(Error::BoundTooSmall(max_len));
        }
        let mut gens = Vec::new();
        for (ri, r) in relations.iter().enumerate() {
            let mut endpoints = None;
            let mut p = Poly::new();
            for (c, w) in &r.terms {
                if w.len() < 2 {
                    return Err(Error::NonAdmissibleRelation {
                        index: ri,
                        reason: format!("term `{}` has length below 2", quiver.format_word(w)),
                    });
                }
                if !quiver.is_path(w) {
                    return Err(Error::NonAdmissibleRelation {
                        index: ri,
                        reason: format!("`{}` is not a path", quiver.format_word(w)),
                    });
                }
                let ends = (quiver.arrow(w[0]).source, quiver.arrow(*w.last().unwrap()).target);
                match endpoints {
                    None => endpoints = Some(ends),
                    Some(e) if e != ends => {
                        return Err(Error::NonAdmissibleRelation {
                            index: ri,
                            reason: "terms do not share start and end vertices".into(),
                        })
                    }
                    _ => {}
                }
                let cf = field.from_i64(*c);
                let e = p.entry(Word(w.clone())).or_insert(0);
                *e = field.add(e, &cf);
            }
            p.retain(|_, c| *c != 0);
            if !p.is_empty() {
                gens.push(p);
            }
        }
        let system = rewrite::complete(field, &quiver, gens, max_len);

        // Normal words, layer by layer; prefixes of normal words are normal.
        let n = quiver.num_vertices();
        let mut basis: Vec<BasisPath> =
            (0..n).map(|v| BasisPath { start: v, end: v, word: Vec::new() }).collect();
        let mut layer: Vec<Vec<usize>> = (0..quiver.arrows().len())
            .map(|a| vec![a])
            .filter(|w| system.is_normal(w))
            .collect();
        let mut len = 1;
        while !layer.is_empty() {
            if len == max_len {
                return Err(Error::NotFiniteDimensional {
                    bound: max_len,
                    witness: quiver.format_word(&layer[0]),
                });
            }
            let mut sorted = layer.clone();
            sorted.sort();
            for w in &sorted {
                basis.push(BasisPath {
                    start: quiver.arrow(w[0]).source,
                    end: quiver.arrow(*w.last().unwrap()).target,
                    word: w.clone(),
                });
            }
            let mut next = Vec::new();
            for w in &sorted {
                let end = quiver.arrow(*w.last().unwrap()).target;
                for a in quiver.arrows_from(end) {
                    let mut w2 = w.clone();
                    w2.push(a);
                    if system.is_normal(&w2) {
                        next.push(w2);
                    }
                }
            }
            layer = next;
            len += 1;
        }
        let index: HashMap<Vec<usize>, usize> = basis
            .iter()
            .enumerate()
            .filter(|(_, b)| !b.is_trivial())
            .map(|(i, b)| (b.word.clone(), i))
            .collect();

        let mut alg = Algebra {
            field,
            quiver,
            relations,
            max_len,
            system,
            basis,
            index,
            table: Vec::new(),
            op: OnceLock::new(),
            op_back: OnceLock::new(),
        };
        let d = alg.basis.len();
        let mut table = vec![Vec::new(); d * d];
        for i in 0..d {
            for j in 0..d {
                let (bi, bj) = (&alg.basis[i], &alg.basis[j]);
                if bi.end != bj.start {
                    continue;
                }
                table[i * d + j] = if bi.is_trivial() {
                    vec![(j, 1)]
                } else if bj.is_trivial() {
                    vec![(i, 1)]
                } else {
                    let mut w = bi.word.clone();
                    w.extend_from_slice(&bj.word);
                    alg.reduce_word(&w)
                };
            }
        }
        alg.table = table;
        Ok(alg)
    }

    fn reduce_word(&self, w: &[usize]) -> Vec<(usize, u32)> {
        let mut p = Poly::new();
        p.insert(Word(w.to_vec()), 1);
        self.poly_to_basis(&self.system.reduce(&p))
    }

    fn poly_to_basis(&self, p: &Poly) -> Vec<(usize, u32)> {
        let mut out: Vec<(usize, u32)> = p.iter().map(|(w, c)| (self.index[&w.0], *c)).collect();
        out.sort();
        out
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn max_path_length(&self) -> usize {
        self.max_len
    }

    pub fn rewrite_system(&self) -> &RewriteSystem {
        &self.system
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.quiver.num_vertices()
    }

    pub fn basis(&self) -> &[BasisPath] {
        &self.basis
    }

    /// Basis indices of paths `i -> j`, in basis order.
    pub fn paths_between(&self, i: usize, j: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&b| self.basis[b].start == i && self.basis[b].end == j).collect()
    }

    /// Basis indices of paths starting at `i`.
    pub fn paths_from(&self, i: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&b| self.basis[b].start == i).collect()
    }

    /// Basis index of arrow `a`.
    pub fn arrow_basis(&self, a: usize) -> usize {
        self.index[&vec![a]]
    }

    /// `b_i * b_j` in the basis, sparse.
    pub fn product(&self, i: usize, j: usize) -> &[(usize, u32)] {
        &self.table[i * self.dim() + j]
    }

    pub fn multiply(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let f = &self.field;
        let d = self.dim();
        let mut out = vec![0u32; d];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj == 0 {
                    continue;
                }
                let c = f.mul(&xi, &yj);
                for &(k, v) in self.product(i, j) {
                    out[k] = f.add(&out[k], &f.mul(&c, &v));
                }
            }
        }
        out
    }

    /// Normal form of a path given by arrow indices, as a dense vector.
    pub fn path_element(&self, start: usize, w: &[usize]) -> Vec<u32> {
        let mut out = vec![0u32; self.dim()];
        if w.is_empty() {
            out[start] = 1;
        } else if self.quiver.is_path(w) {
            for (k, c) in self.reduce_word(w) {
                out[k] = c;
            }
        }
        out
    }

    /// Evaluates a relation in the algebra; zero for every defining relation.
    pub fn relation_element(&self, r: &Relation) -> Vec<u32> {
        let f = &self.field;
        let mut out = vec![0u32; self.dim()];
        for (c, w) in &r.terms {
            let start = self.quiver.arrow(w[0]).source;
            let e = self.path_element(start, w);
            let cf = f.from_i64(*c);
            for k in 0..out.len() {
                out[k] = f.add(&out[k], &f.mul(&cf, &e[k]));
            }
        }
        out
    }

    /// Matrix of right multiplication by basis element `j`: row `i` holds `b_i * b_j`.
    pub fn right_mult(&self, j: usize) -> Matrix {
        let d = self.dim();
        let mut m = Mat::zeros(&self.field, d, d);
        for i in 0..d {
            for &(k, c) in self.product(i, j) {
                m.set(i, k, c);
            }
        }
        m
    }

    pub fn format_basis(&self, i: usize) -> String {
        let b = &self.basis[i];
        if b.is_trivial() {
            format!("e{}", self.quiver.label(b.start))
        } else {
            self.quiver.format_word(&b.word)
        }
    }

    /// The opposite algebra, built once and cached in both directions.
    pub fn opposite(self: &Arc<Self>) -> Result<Arc<Algebra>> {
        if let Some(op) = self.op.get() {
            return Ok(op.clone());
        }
        if let Some(orig) = self.op_back.get().and_then(Weak::upgrade) {
            return Ok(orig);
        }
        let rels = self
            .relations
            .iter()
            .map(|r| Relation {
                terms: r
                    .terms
                    .iter()
                    .map(|(c, w)| (*c, w.iter().rev().copied().collect()))
                    .collect(),
            })
            .collect();
        let op = Self::build(self.field, self.quiver.opposite(), rels, self.max_len)?;
        let _ = op.op_back.set(Arc::downgrade(self));
        let op = Arc::new(op);
        let _ = self.op.set(op.clone());
        Ok(self.op.get().unwrap().clone())
    }

    /// Dimension of the two-sided ideal `AeA` for `e` the sum of the given vertex idempotents.
    pub fn idempotent_ideal_dim(&self, vertices: &[usize]) -> usize {
        let d = self.dim();
        let mut rows = Vec::new();
        for i in 0..d {
            for j in 0..d {
                if self.basis[i].end == self.basis[j].start && vertices.contains(&self.basis[i].end) {
                    let mut r = vec![0u32; d];
                    for &(k, c) in self.product(i, j) {
                        r[k] = c;
                    }
                    rows.push(r);
                }
            }
        }
        if rows.is_empty() {
            return 0;
        }
        Mat::from_rows(&self.field, d, rows).rank()
    }

    /// `A/AeA`, with the map from old vertex indices to new ones.
    pub fn quotient_by_idempotent(&self, vertices: &[usize]) -> Result<(Arc<Algebra>, Vec<Option<usize>>)> {
        let n = self.num_vertices();
        let keep: Vec<usize> = (0..n).filter(|v| !vertices.contains(v)).collect();
        if keep.is_empty() {
            return Err(Error::ZeroAlgebra);
        }
        let mut vmap = vec![None; n];
        for (i, &v) in keep.iter().enumerate() {
            vmap[v] = Some(i);
        }
        let mut q = Quiver::new(keep.iter().map(|&v| self.quiver.label(v).to_string()).collect())?;
        let mut amap = vec![None; self.quiver.arrows().len()];
        for (ai, a) in self.quiver.arrows().iter().enumerate() {
            if let (Some(_), Some(_)) = (vmap[a.source], vmap[a.target]) {
                amap[ai] = Some(q.add_arrow(&a.name, self.quiver.label(a.source), self.quiver.label(a.target))?);
            }
        }
        let mut rels = Vec::new();
        for r in &self.relations {
            let terms: Vec<(i64, Vec<usize>)> = r
                .terms
                .iter()
                .filter_map(|(c, w)| {
                    let mapped: Option<Vec<usize>> = w.iter().map(|&a| amap[a]).collect();
                    mapped.map(|m| (*c, m))
                })
                .collect();
            if !terms.is_empty() {
                rels.push(Relation { terms });
            }
        }
        let quot = Algebra::new(self.field, q, rels, self.max_len)?;
        let expected = self.dim() - self.idempotent_ideal_dim(vertices);
        if quot.dim() != expected {
            return Err(Error::Dimension(format!(
                "quotient has dimension {} but dim A - dim AeA = {expected}",
                quot.dim()
            )));
        }
        Ok((quot, vmap))
    }
}

/// Builds an algebra from vertex count, `(name, source, target)` arrows with
/// 1-based numeric vertex labels, and relation strings.
pub fn algebra_from_spec(
    field: PrimeField,
    vertices: usize,
    arrows: &[(&str, usize, usize)],
    relations: &[&str],
    max_len: usize,
) -> Result<Arc<Algebra>> {
    let mut q = Quiver::numbered(vertices);
    for (name, s, t) in arrows {
        q.add_arrow(name, &s.to_string(), &t.to_string())?;
    }
    let rels = relations.iter().map(|r| Relation::parse(&q, r)).collect::<Result<Vec<_>>>()?;
    Algebra::new(field, q, rels, max_len)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f() -> PrimeField {
        PrimeField::default()
    }

    #[test]
    fn linear_a3() {
        let a = algebra_from_spec(f(), 3, &[("a", 1, 2), ("b", 2, 3)], &[], 12).unwrap();
        assert_eq!(a.dim(), 6);
        let a = algebra_from_spec(f(), 3, &[("a", 1, 2), ("b", 2, 3)], &["a*b"], 12).unwrap();
        assert_eq!(a.dim(), 5);
    }

    #[test]
    fn commutative_square() {
        let a = algebra_from_spec(
            f(),
            4,
            &[("a", 1, 2), ("b", 2, 4), ("c", 1, 3), ("d", 3, 4)],
            &["a*b - c*d"],
            12,
        )
        .unwrap();
        assert_eq!(a.dim(), 9);
        let ab = a.path_element(0, &[0, 1]);
        let cd = a.path_element(0, &[2, 3]);
        assert_eq!(ab, cd);
    }

    #[test]
    fn loop_without_relation_is_infinite() {
        let r = algebra_from_spec(f(), 1, &[("x", 1, 1)], &[], 6);
        assert!(matches!(r, Err(Error::NotFiniteDimensional { .. })));
    }

    #[test]
    fn bad_relations_rejected() {
        let r = algebra_from_spec(f(), 2, &[("a", 1, 2)], &["a"], 6);
        assert!(matches!(r, Err(Error::NonAdmissibleRelation { .. })));
        let r = algebra_from_spec(f(), 2, &[("a", 1, 2)], &["a*a"], 6);
        assert!(matches!(r, Err(Error::NonAdmissibleRelation { .. })));
    }

    #[test]
    fn relation_parsing() {
        let mut q = Quiver::numbered(2);
        q.add_arrow("x", "1", "1").unwrap();
        q.add_arrow("y", "1", "2").unwrap();
        let r = Relation::parse(&q, "2 x*y - x*x*y").unwrap();
        assert_eq!(r.terms, vec![(2, vec![0, 1]), (-1, vec![0, 0, 1])]);
        let r = Relation::parse(&q, "-x*x").unwrap();
        assert_eq!(r.terms, vec![(-1, vec![0, 0])]);
        assert_eq!(r.format(&q), "-x*x");
    }

    #[test]
    fn opposite_is_cached_both_ways() {
        let a = algebra_from_spec(f(), 2, &[("a", 1, 2), ("b", 2, 1)], &["a*b"], 8).unwrap();
        let op = a.opposite().unwrap();
        assert_eq!(op.dim(), a.dim());
        assert!(Arc::ptr_eq(&op, &a.opposite().unwrap()));
        assert!(Arc::ptr_eq(&a, &op.opposite().unwrap()));
    }

    #[test]
    fn idempotent_quotient() {
        let a = algebra_from_spec(
            f(),
            4,
            &[("a", 1, 2), ("b", 2, 4), ("c", 1, 3), ("d", 3, 4)],
            &["a*b - c*d"],
            12,
        )
        .unwrap();
        let (q, vmap) = a.quotient_by_idempotent(&[3]).unwrap();
        assert_eq!(q.dim(), 5);
        assert_eq!(vmap[3], None);
        assert!(matches!(a.quotient_by_idempotent(&[0, 1, 2, 3]), Err(Error::ZeroAlgebra)));
    }
}
