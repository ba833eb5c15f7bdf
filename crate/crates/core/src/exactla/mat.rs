use std::fmt;

use super::field::Field;

/// Dense row-major matrix over a field context `F`.
#[derive(Clone, PartialEq)]
pub struct Mat<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Rref<F: Field> {
    pub reduced: Mat<F>,
    pub pivots: Vec<usize>,
}

impl<F: Field> Rref<F> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

impl<F: Field> fmt::Debug for Mat<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        write!(f, "]")
    }
}

impl<F: Field> Mat<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Mat {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(field: &F, cols: usize, rows: Vec<Vec<F::Elem>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged row");
            data.extend(r);
        }
        Mat {
            field: field.clone(),
            rows: n,
            cols,
            data,
        }
    }

    pub fn from_i64(field: &F, rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        Mat {
            field: field.clone(),
            rows,
            cols,
            data: entries.iter().map(|&v| field.from_i64(v)).collect(),
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn entries(&self) -> &[F::Elem] {
        &self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &F::Elem {
        &self.data[r * self.cols + c]
    }
    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: F::Elem) {
        self.data[r * self.cols + c] = v;
    }
    pub fn row(&self, r: usize) -> &[F::Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }
    pub fn row_mut(&mut self, r: usize) -> &mut [F::Elem] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }
    pub fn col(&self, c: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if f.is_zero(a) {
                    continue;
                }
                let brow = other.row(k);
                let orow = &mut out.data[r * other.cols..(r + 1) * other.cols];
                for (o, b) in orow.iter_mut().zip(brow) {
                    if !f.is_zero(b) {
                        *o = f.add(o, &f.mul(a, b));
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        Mat {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f.add(a, b)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        Mat {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f.sub(a, b)).collect(),
        }
    }

    pub fn scale(&self, s: &F::Elem) -> Self {
        let f = &self.field;
        Mat {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| f.mul(a, s)).collect(),
        }
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(v.len(), self.rows);
        let f = &self.field;
        let mut out = vec![f.zero(); self.cols];
        for (k, a) in v.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (o, b) in out.iter_mut().zip(self.row(k)) {
                *o = f.add(o, &f.mul(a, b));
            }
        }
        out
    }

    /// Matrix times column vector.
    pub fn mul_vec(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(v.len(), self.cols);
        let f = &self.field;
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(f.zero(), |acc, (a, b)| f.add(&acc, &f.mul(a, b)))
            })
            .collect()
    }

    pub fn trace(&self) -> F::Elem {
        let f = &self.field;
        (0..self.rows.min(self.cols)).fold(f.zero(), |acc, i| f.add(&acc, self.get(i, i)))
    }

    /// Stack `self` on top of `other`.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Mat {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            data.extend(self.row(r).iter().cloned());
            data.extend(other.row(r).iter().cloned());
        }
        Mat {
            field: self.field.clone(),
            rows: self.rows,
            cols,
            data,
        }
    }

    /// Block diagonal sum.
    pub fn block_diag(field: &F, blocks: &[&Self]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Self) {
        for r in 0..b.rows {
            for c in 0..b.cols {
                self.set(r0 + r, c0 + c, b.get(r, c).clone());
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        let mut out = Self::zeros(&self.field, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                out.set(r, c, self.get(r0 + r, c0 + c).clone());
            }
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &r in idx {
            data.extend(self.row(r).iter().cloned());
        }
        Mat {
            field: self.field.clone(),
            rows: idx.len(),
            cols: self.cols,
            data,
        }
    }

    pub fn push_row(&mut self, row: &[F::Elem]) {
        assert_eq!(row.len(), self.cols);
        self.data.extend(row.iter().cloned());
        self.rows += 1;
    }

    /// Reduced row echelon form by Gauss-Jordan elimination.
    pub fn rref(&self) -> Rref<F> {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut prow = 0;
        for c in 0..m.cols {
            if prow == m.rows {
                break;
            }
            let Some(sel) = (prow..m.rows).find(|&r| !f.is_zero(m.get(r, c))) else {
                continue;
            };
            if sel != prow {
                for k in 0..m.cols {
                    m.data.swap(sel * m.cols + k, prow * m.cols + k);
                }
            }
            let inv = f.inv(m.get(prow, c)).expect("nonzero pivot");
            for k in c..m.cols {
                let v = f.mul(m.get(prow, k), &inv);
                m.set(prow, k, v);
            }
            let pivot_row: Vec<F::Elem> = m.row(prow)[c..].to_vec();
            for r in 0..m.rows {
                if r == prow {
                    continue;
                }
                let factor = m.get(r, c).clone();
                if f.is_zero(&factor) {
                    continue;
                }
                let row = &mut m.data[r * m.cols + c..(r + 1) * m.cols];
                for (x, pv) in row.iter_mut().zip(&pivot_row) {
                    if !f.is_zero(pv) {
                        *x = f.sub(x, &f.mul(&factor, pv));
                    }
                }
            }
            pivots.push(c);
            prow += 1;
        }
        Rref { reduced: m, pivots }
    }

    pub fn rank(&self) -> usize {
        if self.rows <= self.cols {
            self.rref().rank()
        } else {
            self.transpose().rref().rank()
        }
    }

    /// Basis of the right null space `{x : self * x = 0}` as column vectors.
    pub fn kernel_basis(&self) -> Vec<Vec<F::Elem>> {
        let f = &self.field;
        let Rref { reduced, pivots } = self.rref();
        let mut is_pivot = vec![None; self.cols];
        for (i, &c) in pivots.iter().enumerate() {
            is_pivot[c] = Some(i);
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free].is_some() {
                continue;
            }
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(reduced.get(i, free));
            }
            basis.push(v);
        }
        basis
    }

    /// Basis of the left null space `{y : y * self = 0}` as row vectors.
    pub fn left_kernel_basis(&self) -> Vec<Vec<F::Elem>> {
        self.transpose().kernel_basis()
    }

    /// Some `x` with `self * x = b`, or `None` when `b` is not in the image.
    pub fn solve(&self, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
        assert_eq!(b.len(), self.rows);
        let f = &self.field;
        let bcol = Mat {
            field: f.clone(),
            rows: self.rows,
            cols: 1,
            data: b.to_vec(),
        };
        let aug = self.hstack(&bcol);
        let Rref { reduced, pivots } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![f.zero(); self.cols];
        for (i, &pc) in pivots.iter().enumerate() {
            x[pc] = reduced.get(i, self.cols).clone();
        }
        Some(x)
    }

    /// Some `X` with `self * X = b`, solving all columns at once.
    pub fn solve_many(&self, b: &Self) -> Option<Self> {
        assert_eq!(b.rows, self.rows);
        let f = &self.field;
        let Rref { reduced, pivots } = self.hstack(b).rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Self::zeros(f, self.cols, b.cols);
        for (i, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(pc, j, reduced.get(i, self.cols + j).clone());
            }
        }
        Some(x)
    }

    /// Some row vector `y` with `y * self = b`.
    pub fn solve_left(&self, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
        self.transpose().solve(b)
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(self.clone());
        }
        let aug = self.hstack(&Self::identity(&self.field, n));
        let r = aug.rref();
        if r.rank() < n || r.pivots[n - 1] != n - 1 {
            return None;
        }
        Some(r.reduced.block(0, n, n, n))
    }

    /// Basis (as rows, in rref) of the row space.
    pub fn row_space(&self) -> Self {
        let r = self.rref();
        let k = r.rank();
        r.reduced.block(0, 0, k, self.cols)
    }

    /// Characteristic polynomial `det(tI - self)`, coefficients from the
    /// constant term upwards (monic, length n+1). Hessenberg reduction.
    pub fn charpoly(&self) -> Vec<F::Elem> {
        assert_eq!(self.rows, self.cols);
        let f = &self.field;
        let n = self.rows;
        let mut h = self.clone();
        // Reduce to upper Hessenberg form by similarity transforms.
        for c in 0..n.saturating_sub(2) {
            let Some(piv) = (c + 1..n).find(|&r| !f.is_zero(h.get(r, c))) else {
                continue;
            };
            if piv != c + 1 {
                for k in 0..n {
                    h.data.swap(piv * n + k, (c + 1) * n + k);
                }
                for k in 0..n {
                    h.data.swap(k * n + piv, k * n + c + 1);
                }
            }
            let inv = f.inv(h.get(c + 1, c)).unwrap();
            for r in c + 2..n {
                let factor = f.mul(h.get(r, c), &inv);
                if f.is_zero(&factor) {
                    continue;
                }
                for k in 0..n {
                    let v = f.sub(h.get(r, k), &f.mul(&factor, h.get(c + 1, k)));
                    h.set(r, k, v);
                }
                for k in 0..n {
                    let v = f.add(h.get(k, c + 1), &f.mul(&factor, h.get(k, r)));
                    h.set(k, c + 1, v);
                }
            }
        }
        // Recurrence on leading principal minors of tI - H.
        let mut polys: Vec<Vec<F::Elem>> = vec![vec![f.one()]];
        for m in 1..=n {
            // p_m = (t - h_mm) p_{m-1} - sum_{i<m} h_im * prod_{j=i+1}^{m} h_{j,j-1} * p_{i-1}
            let prev = &polys[m - 1];
            let mut p = vec![f.zero(); m + 1];
            for (k, c) in prev.iter().enumerate() {
                p[k + 1] = f.add(&p[k + 1], c);
                p[k] = f.sub(&p[k], &f.mul(h.get(m - 1, m - 1), c));
            }
            let mut prod = f.one();
            for i in (1..m).rev() {
                prod = f.mul(&prod, h.get(i, i - 1));
                if f.is_zero(&prod) {
                    break;
                }
                let coef = f.mul(h.get(i - 1, m - 1), &prod);
                for (k, c) in polys[i - 1].iter().enumerate() {
                    p[k] = f.sub(&p[k], &f.mul(&coef, c));
                }
            }
            polys.push(p);
        }
        polys.pop().unwrap()
    }
}

/// Evaluate a polynomial given low-to-high coefficients.
pub fn eval_poly<F: Field>(field: &F, coeffs: &[F::Elem], x: &F::Elem) -> F::Elem {
    coeffs
        .iter()
        .rev()
        .fold(field.zero(), |acc, c| field.add(&field.mul(&acc, x), c))
}

#[cfg(test)]
mod tests {
    use super::super::field::{PrimeField, Rationals};
    use super::*;

    fn f7() -> PrimeField {
        PrimeField::new(7).unwrap()
    }

    #[test]
    fn identity_rref_is_itself() {
        let f = f7();
        let id = Mat::identity(&f, 3);
        let r = id.rref();
        assert_eq!(r.reduced, id);
        assert_eq!(r.rank(), 3);
        assert_eq!(r.pivots, vec![0, 1, 2]);
    }

    #[test]
    fn zero_matrix_has_rank_zero() {
        let f = f7();
        let z = Mat::zeros(&f, 2, 4);
        let r = z.rref();
        assert_eq!(r.reduced, z);
        assert_eq!(r.rank(), 0);
    }

    #[test]
    fn kernel_of_identity_and_zero() {
        let f = f7();
        assert!(Mat::identity(&f, 4).kernel_basis().is_empty());
        assert_eq!(Mat::zeros(&f, 3, 2).kernel_basis().len(), 2);
    }

    #[test]
    fn solve_trivial_cases() {
        let f = f7();
        let b = vec![1, 2, 3];
        assert_eq!(Mat::identity(&f, 3).solve(&b), Some(b.clone()));
        assert_eq!(Mat::zeros(&f, 3, 3).solve(&b), None);
    }

    #[test]
    fn inverse_roundtrip() {
        let f = f7();
        let m = Mat::from_i64(&f, 2, 2, &[1, 2, 3, 4]);
        let mi = m.inverse().unwrap();
        assert_eq!(m.mul(&mi), Mat::identity(&f, 2));
        assert!(Mat::from_i64(&f, 2, 2, &[1, 2, 2, 4]).inverse().is_none());
    }

    #[test]
    fn charpoly_of_companion() {
        // t^2 - 3t + 2 over Q: matrix [[0,-2],[1,3]].
        let q = Rationals;
        let m = Mat::from_i64(&q, 2, 2, &[0, -2, 1, 3]);
        let p = m.charpoly();
        assert_eq!(p, vec![q.from_i64(2), q.from_i64(-3), q.from_i64(1)]);
    }

    #[test]
    fn charpoly_matches_det_expansion_3x3() {
        let f = PrimeField::new(101).unwrap();
        let m = Mat::from_i64(&f, 3, 3, &[2, 1, 0, 1, 3, 1, 4, 0, 5]);
        let p = m.charpoly();
        // det(tI - M) at t = x for several x, against the cofactor expansion.
        for x in 0..10i64 {
            let a = |r: usize, c: usize| -> i64 {
                let v = f.signed(*m.get(r, c));
                if r == c { x - v } else { -v }
            };
            let det = a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1))
                - a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0))
                + a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
            assert_eq!(eval_poly(&f, &p, &f.from_i64(x)), f.from_i64(det));
        }
    }
}
