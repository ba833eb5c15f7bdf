//! Algebras given by structure constants, and recovery of a bound quiver
//! presentation from a basic split one.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactla::{Field, Mat, Matrix, PrimeField};
use crate::pathalg::{Algebra, Quiver, Relation};

/// A finite-dimensional algebra on a labelled basis, with a complete set of
/// primitive orthogonal idempotents.
#[derive(Clone, Debug)]
pub struct AbstractAlgebra {
    field: PrimeField,
    labels: Vec<String>,
    /// `table[i * d + j]` holds the coordinates of `b_i b_j`.
    table: Vec<Vec<(usize, u32)>>,
    idempotents: Vec<Vec<u32>>,
}

impl AbstractAlgebra {
    /// `products[i][j]` is the coordinate vector of `b_i b_j`.
    pub fn new(
        field: PrimeField,
        labels: Vec<String>,
        products: Vec<Vec<Vec<u32>>>,
        idempotents: Vec<Vec<u32>>,
    ) -> Result<AbstractAlgebra> {
        let d = labels.len();
        if products.len() != d || products.iter().any(|r| r.len() != d || r.iter().any(|v| v.len() != d)) {
            return Err(Error::Dimension(format!("structure constants for a {d}-dimensional algebra")));
        }
        let table = products
            .into_iter()
            .flatten()
            .map(|v| v.into_iter().enumerate().filter(|(_, c)| *c != 0).collect())
            .collect();
        let b = AbstractAlgebra { field, labels, table, idempotents };
        if !b.is_associative() {
            return Err(Error::Precondition("structure constants are not associative".into()));
        }
        if !b.idempotents_ok() {
            return Err(Error::Precondition("idempotents are not orthogonal or do not sum to 1".into()));
        }
        Ok(b)
    }

    /// A bound quiver algebra as an abstract one, on its path basis.
    pub fn from_algebra(alg: &Algebra) -> AbstractAlgebra {
        let d = alg.dim();
        let labels = (0..d).map(|i| alg.format_basis(i)).collect();
        let table = (0..d * d).map(|k| alg.product(k / d, k % d).to_vec()).collect();
        let idempotents = (0..alg.num_vertices())
            .map(|v| {
                let mut e = vec![0; d];
                e[v] = 1;
                e
            })
            .collect();
        AbstractAlgebra { field: alg.field(), labels, table, idempotents }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn idempotents(&self) -> &[Vec<u32>] {
        &self.idempotents
    }

    pub fn unit(&self, i: usize) -> Vec<u32> {
        let mut e = vec![0; self.dim()];
        e[i] = 1;
        e
    }

    pub fn one(&self) -> Vec<u32> {
        let f = &self.field;
        self.idempotents.iter().fold(vec![0; self.dim()], |acc, e| {
            acc.iter().zip(e).map(|(a, b)| f.add(a, b)).collect()
        })
    }

    pub fn multiply(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let f = &self.field;
        let d = self.dim();
        let mut out = vec![0; d];
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| **c != 0) {
            for (j, yj) in y.iter().enumerate().filter(|(_, c)| **c != 0) {
                let c = f.mul(xi, yj);
                for &(k, t) in &self.table[i * d + j] {
                    out[k] = f.add(&out[k], &f.mul(&c, &t));
                }
            }
        }
        out
    }

    pub fn is_associative(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| {
            (0..d).all(|j| {
                let ij = self.multiply(&self.unit(i), &self.unit(j));
                (0..d).all(|k| {
                    let jk = self.multiply(&self.unit(j), &self.unit(k));
                    self.multiply(&ij, &self.unit(k)) == self.multiply(&self.unit(i), &jk)
                })
            })
        })
    }

    pub fn idempotents_ok(&self) -> bool {
        let one = self.one();
        let es = &self.idempotents;
        let zero = vec![0; self.dim()];
        let orth = es.iter().enumerate().all(|(i, e)| {
            es.iter().enumerate().all(|(j, g)| {
                let p = self.multiply(e, g);
                if i == j {
                    p == *e
                } else {
                    p == zero
                }
            })
        });
        orth && (0..self.dim()).all(|k| {
            let u = self.unit(k);
            self.multiply(&one, &u) == u && self.multiply(&u, &one) == u
        })
    }

    /// Trace of left multiplication by each basis element.
    fn left_traces(&self) -> Vec<u32> {
        let f = &self.field;
        let d = self.dim();
        let mut t = vec![0; d];
        for m in 0..d {
            for k in 0..d {
                for &(c, v) in &self.table[m * d + k] {
                    if c == k {
                        t[m] = f.add(&t[m], &v);
                    }
                }
            }
        }
        t
    }

    /// `rad B` as the kernel of the trace form `(x, y) -> tr L(xy)`.
    pub fn radical_basis(&self) -> Vec<Vec<u32>> {
        let f = &self.field;
        let d = self.dim();
        let t = self.left_traces();
        let mut g = Mat::zeros(f, d, d);
        for i in 0..d {
            for j in 0..d {
                let v = self.table[i * d + j].iter().fold(0, |acc, &(k, c)| f.add(&acc, &f.mul(&c, &t[k])));
                g.set(i, j, v);
            }
        }
        g.left_kernel_basis()
    }

    fn span(&self, vs: Vec<Vec<u32>>) -> Matrix {
        Mat::from_rows(&self.field, self.dim(), vs).row_space()
    }

    fn rows(m: &Matrix) -> Vec<Vec<u32>> {
        (0..m.rows()).map(|r| m.row(r).to_vec()).collect()
    }

    fn products(&self, xs: &Matrix, ys: &Matrix) -> Matrix {
        let mut out = Vec::new();
        for x in Self::rows(xs) {
            for y in Self::rows(ys) {
                out.push(self.multiply(&x, &y));
            }
        }
        self.span(out)
    }

    /// Powers `rad^1, rad^2, ...` up to the first zero one (excluded).
    pub fn radical_powers(&self) -> Vec<Matrix> {
        let r = self.span(self.radical_basis());
        let mut out = Vec::new();
        let mut cur = r.clone();
        while cur.rows() > 0 {
            out.push(cur.clone());
            cur = self.products(&cur, &r);
            if out.len() > self.dim() + 1 {
                break;
            }
        }
        out
    }

    /// `e_i S e_j` for a subspace `S` closed under the idempotents.
    fn corner(&self, s: &Matrix, i: usize, j: usize) -> Matrix {
        let (ei, ej) = (&self.idempotents[i], &self.idempotents[j]);
        self.span(Self::rows(s).iter().map(|x| self.multiply(&self.multiply(ei, x), ej)).collect())
    }
}

/// A bound quiver presentation of an abstract algebra.
#[derive(Clone, Debug)]
pub struct BoundPresentation {
    pub algebra: Arc<Algebra>,
    /// The image of each arrow; arrow `i -> j` lies in `e_i B e_j`.
    pub arrows: Vec<Vec<u32>>,
    /// Loewy length of `B`.
    pub loewy_length: usize,
}

fn independent_complement(base: &Matrix, big: &Matrix) -> Vec<Vec<u32>> {
    let mut acc = base.clone();
    let mut out = Vec::new();
    for r in 0..big.rows() {
        let row = big.row(r).to_vec();
        let mut trial = acc.clone();
        trial.push_row(&row);
        if trial.rank() > acc.rank() {
            acc = trial;
            out.push(row);
        }
    }
    out
}

/// Gabriel quiver from `e_i (rad B / rad^2 B) e_j`, relations from the
/// kernel of `kQ -> B` on paths of length `2..=L`, `L` the Loewy length.
pub fn presentation(b: &AbstractAlgebra) -> Result<BoundPresentation> {
    let f = b.field();
    let n = b.idempotents().len();
    if n == 0 {
        return Err(Error::ZeroAlgebra);
    }
    let powers = b.radical_powers();
    let rad_dim = powers.first().map_or(0, Matrix::rows);
    if b.dim() - rad_dim != n {
        return Err(Error::Precondition(format!(
            "not basic and split: dim B/rad B = {} but {n} primitive idempotents",
            b.dim() - rad_dim
        )));
    }
    let loewy = powers.len() + 1;
    let zero = Mat::zeros(&f, 0, b.dim());
    let r1 = powers.first().cloned().unwrap_or_else(|| zero.clone());
    let r2 = powers.get(1).cloned().unwrap_or_else(|| zero.clone());

    let mut quiver = Quiver::numbered(n);
    let mut arrows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let top = b.corner(&r1, i, j);
            let below = b.corner(&r2, i, j);
            for x in independent_complement(&below, &top) {
                let name = format!("x{}", arrows.len() + 1);
                quiver.add_arrow(&name, &(i + 1).to_string(), &(j + 1).to_string())?;
                arrows.push(x);
            }
        }
    }

    // Images of paths by length, starting from the idempotents.
    let image = |w: &[usize]| -> Vec<u32> {
        let start = quiver.arrow(w[0]).source;
        w.iter().fold(b.idempotents()[start].clone(), |acc, &a| b.multiply(&acc, &arrows[a]))
    };
    let mut relations = Vec::new();
    for i in 0..n {
        let mut paths: Vec<Vec<usize>> = Vec::new();
        for len in 2..=loewy {
            paths.extend(quiver.words_from(i, len));
        }
        for j in 0..n {
            let ps: Vec<&Vec<usize>> = paths.iter().filter(|w| quiver.arrow(*w.last().unwrap()).target == j).collect();
            if ps.is_empty() {
                continue;
            }
            let m = Mat::from_rows(&f, b.dim(), ps.iter().map(|w| image(w)).collect());
            for k in m.left_kernel_basis() {
                let terms = k
                    .iter()
                    .zip(&ps)
                    .filter(|(c, _)| **c != 0)
                    .map(|(c, w)| (f.signed(*c), (*w).clone()))
                    .collect();
                relations.push(Relation { terms });
            }
        }
    }
    let algebra = Algebra::new(f, quiver, relations, (loewy + 2).max(3))?;
    if algebra.dim() != b.dim() {
        return Err(Error::Dimension(format!(
            "presentation has dimension {} but the algebra has dimension {}",
            algebra.dim(),
            b.dim()
        )));
    }
    Ok(BoundPresentation { algebra, arrows, loewy_length: loewy })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn truncated_polynomial(k: usize) -> AbstractAlgebra {
        let f = PrimeField::new(32003).unwrap();
        let products = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| {
                        let mut v = vec![0; k];
                        if i + j < k {
                            v[i + j] = 1;
                        }
                        v
                    })
                    .collect()
            })
            .collect();
        let mut one = vec![0; k];
        one[0] = 1;
        AbstractAlgebra::new(f, (0..k).map(|i| format!("x^{i}")).collect(), products, vec![one]).unwrap()
    }

    #[test]
    fn truncated_polynomial_has_one_loop() {
        let p = presentation(&truncated_polynomial(3)).unwrap();
        let q = p.algebra.quiver();
        assert_eq!((q.num_vertices(), q.arrows().len()), (1, 1));
        assert_eq!(p.algebra.dim(), 3);
        assert_eq!(p.loewy_length, 3);
        let words: Vec<usize> = p.algebra.relations().iter().flat_map(|r| r.terms.iter().map(|t| t.1.len())).collect();
        assert!(words.contains(&3));
    }

    #[test]
    fn round_trip_of_path_algebras() {
        for name in ["e4", "a3", "e1", "aus_kx2"] {
            let a = fixtures::algebra(name).unwrap();
            let b = AbstractAlgebra::from_algebra(&a);
            assert!(b.is_associative() && b.idempotents_ok());
            let p = presentation(&b).unwrap();
            assert_eq!(p.algebra.dim(), a.dim(), "{name}");
            assert_eq!(p.algebra.quiver().arrows().len(), a.quiver().arrows().len(), "{name}");
        }
    }

    #[test]
    fn non_basic_is_rejected() {
        // 2x2 matrices with only the identity as idempotent.
        let f = PrimeField::new(32003).unwrap();
        let unit = |r: usize, c: usize| r * 2 + c;
        let products = (0..4)
            .map(|i| {
                (0..4)
                    .map(|j| {
                        let mut v = vec![0; 4];
                        let ((a, b), (c, d)) = ((i / 2, i % 2), (j / 2, j % 2));
                        if b == c {
                            v[unit(a, d)] = 1;
                        }
                        v
                    })
                    .collect()
            })
            .collect();
        let one = vec![1, 0, 0, 1];
        let b = AbstractAlgebra::new(f, vec!["e11".into(), "e12".into(), "e21".into(), "e22".into()], products, vec![one])
            .unwrap();
        assert!(presentation(&b).is_err());
    }
}
