//! Dense matrices over the coefficient ring and Smith normal form.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::ring::Ring;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        Matrix {
            rows: r,
            cols: c,
            data,
        }
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix, ring: Ring) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] += a * b;
                }
            }
        }
        for v in &mut out.data {
            *v = ring.reduce(std::mem::take(v));
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt], ring: Ring) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        let support: Vec<(usize, &BigInt)> =
            v.iter().enumerate().filter(|(_, b)| !b.is_zero()).collect();
        (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let mut s = BigInt::zero();
                for &(j, b) in &support {
                    let a = &row[j];
                    if !a.is_zero() {
                        s += a * b;
                    }
                }
                ring.reduce(s)
            })
            .collect()
    }

    /// Submatrix of the given rows and columns.
    pub fn select(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Matrix {
        let mut out = Matrix::zeros(rows.len(), cols.len());
        for (oi, i) in rows.clone().enumerate() {
            for (oj, j) in cols.clone().enumerate() {
                out.set(oi, oj, self.get(i, j).clone());
            }
        }
        out
    }

    /// Plain-text dump: row-major, one row per line, entries separated by
    /// single spaces.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row_dst += q · row_src
    fn add_row(&mut self, dst: usize, src: usize, q: &BigInt, ring: Ring) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let s = &self.data[src * self.cols + j];
            if s.is_zero() {
                continue;
            }
            let v = q * s;
            let d = &mut self.data[dst * self.cols + j];
            *d = ring.reduce(&*d + v);
        }
    }

    /// col_dst += q · col_src
    fn add_col(&mut self, dst: usize, src: usize, q: &BigInt, ring: Ring) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let s = &self.data[i * self.cols + src];
            if s.is_zero() {
                continue;
            }
            let v = q * s;
            let d = &mut self.data[i * self.cols + dst];
            *d = ring.reduce(&*d + v);
        }
    }

    fn scale_row(&mut self, i: usize, u: &BigInt, ring: Ring) {
        for j in 0..self.cols {
            let d = &mut self.data[i * self.cols + j];
            *d = ring.reduce(&*d * u);
        }
    }

    fn scale_col(&mut self, j: usize, u: &BigInt, ring: Ring) {
        for i in 0..self.rows {
            let d = &mut self.data[i * self.cols + j];
            *d = ring.reduce(&*d * u);
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.dump())
    }
}

/// Smith normal form `U·M·V = D` with the inverses of both transforms.
#[derive(Clone, Debug)]
pub struct Snf {
    pub ring: Ring,
    /// Nonzero diagonal entries of `D`, each dividing the next.
    pub factors: Vec<BigInt>,
    pub u: Matrix,
    pub u_inv: Matrix,
    pub v: Matrix,
    pub v_inv: Matrix,
}

impl Snf {
    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    /// The diagonal matrix `D` with the shape of the input.
    pub fn diagonal(&self) -> Matrix {
        let mut d = Matrix::zeros(self.u.rows(), self.v.rows());
        for (i, f) in self.factors.iter().enumerate() {
            d.set(i, i, f.clone());
        }
        d
    }
}

struct Transforms {
    u: Matrix,
    u_inv: Matrix,
    v: Matrix,
    v_inv: Matrix,
}

impl Transforms {
    fn swap_rows(&mut self, a: usize, b: usize) {
        self.u.swap_rows(a, b);
        self.u_inv.swap_cols(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.v.swap_cols(a, b);
        self.v_inv.swap_rows(a, b);
    }

    fn add_row(&mut self, dst: usize, src: usize, q: &BigInt, ring: Ring) {
        self.u.add_row(dst, src, q, ring);
        self.u_inv.add_col(src, dst, &ring.neg(q), ring);
    }

    fn add_col(&mut self, dst: usize, src: usize, q: &BigInt, ring: Ring) {
        self.v.add_col(dst, src, q, ring);
        self.v_inv.add_row(src, dst, &ring.neg(q), ring);
    }

    fn scale_row(&mut self, i: usize, unit: &BigInt, ring: Ring) {
        self.u.scale_row(i, unit, ring);
        self.u_inv.scale_col(i, &unit_inverse(ring, unit), ring);
    }
}

fn unit_inverse(ring: Ring, u: &BigInt) -> BigInt {
    match ring {
        Ring::PrimeField(_) => ring.inverse(u),
        _ => u.clone(),
    }
}

/// Smith normal form over the ring. Integer and rational inputs use the
/// Euclidean algorithm on integral entries; prime fields use Gaussian
/// elimination with pivots normalized to 1.
pub fn smith_normal_form(m: &Matrix, ring: Ring) -> Snf {
    let (r, c) = (m.rows(), m.cols());
    let mut a = m.clone();
    for v in &mut a.data {
        *v = ring.reduce(std::mem::take(v));
    }
    let mut t = Transforms {
        u: Matrix::identity(r),
        u_inv: Matrix::identity(r),
        v: Matrix::identity(c),
        v_inv: Matrix::identity(c),
    };
    let mut factors = Vec::new();
    let mut p = 0;
    while p < r.min(c) {
        let Some((pi, pj)) = smallest_entry(&a, ring, p..r, p..c) else {
            break;
        };
        a.swap_rows(p, pi);
        t.swap_rows(p, pi);
        a.swap_cols(p, pj);
        t.swap_cols(p, pj);
        loop {
            let mut clean = true;
            for i in p + 1..r {
                if a.get(i, p).is_zero() {
                    continue;
                }
                let (q, rem) = ring.div_rem(a.get(i, p), a.get(p, p));
                let q = ring.neg(&q);
                a.add_row(i, p, &q, ring);
                t.add_row(i, p, &q, ring);
                if !rem.is_zero() {
                    clean = false;
                }
            }
            for j in p + 1..c {
                if a.get(p, j).is_zero() {
                    continue;
                }
                let (q, rem) = ring.div_rem(a.get(p, j), a.get(p, p));
                let q = ring.neg(&q);
                a.add_col(j, p, &q, ring);
                t.add_col(j, p, &q, ring);
                if !rem.is_zero() {
                    clean = false;
                }
            }
            if !clean {
                let col = smallest_entry(&a, ring, p..r, p..p + 1).map(|(i, _)| (i, p));
                let row = smallest_entry(&a, ring, p..p + 1, p..c).map(|(_, j)| (p, j));
                let best = match (col, row) {
                    (Some(x), Some(y)) => {
                        if ring.pivot_size(a.get(x.0, x.1)) <= ring.pivot_size(a.get(y.0, y.1)) {
                            x
                        } else {
                            y
                        }
                    }
                    (Some(x), None) => x,
                    (None, Some(y)) => y,
                    (None, None) => unreachable!("pivot vanished"),
                };
                a.swap_rows(p, best.0);
                t.swap_rows(p, best.0);
                a.swap_cols(p, best.1);
                t.swap_cols(p, best.1);
                continue;
            }
            if !ring.is_unit(a.get(p, p)) {
                let piv = a.get(p, p).clone();
                let bad =
                    (p + 1..r).find(|&i| (p + 1..c).any(|j| !ring.divides(&piv, a.get(i, j))));
                if let Some(i) = bad {
                    let one = BigInt::one();
                    a.add_row(p, i, &one, ring);
                    t.add_row(p, i, &one, ring);
                    continue;
                }
            }
            break;
        }
        let unit = ring.normalizing_unit(a.get(p, p));
        if !unit.is_one() {
            a.scale_row(p, &unit, ring);
            t.scale_row(p, &unit, ring);
        }
        factors.push(a.get(p, p).clone());
        p += 1;
    }
    Snf {
        ring,
        factors,
        u: t.u,
        u_inv: t.u_inv,
        v: t.v,
        v_inv: t.v_inv,
    }
}

fn smallest_entry(
    a: &Matrix,
    ring: Ring,
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), BigInt)> = None;
    for i in rows {
        for j in cols.clone() {
            let x = a.get(i, j);
            if x.is_zero() {
                continue;
            }
            let s = ring.pivot_size(x);
            if s.is_one() {
                return Some((i, j));
            }
            if best.as_ref().is_none_or(|(_, b)| s < *b) {
                best = Some(((i, j), s));
            }
        }
    }
    best.map(|(ij, _)| ij)
}

/// Basis of the kernel of `m` as column vectors: the trailing columns of
/// `V`. Over the integers the span is saturated.
pub fn kernel_columns(m: &Matrix, ring: Ring) -> Vec<Vec<BigInt>> {
    let snf = smith_normal_form(m, ring);
    (snf.rank()..m.cols()).map(|j| snf.v.column(j)).collect()
}

/// Rank of the matrix over the ring's fraction field.
pub fn rank(m: &Matrix, ring: Ring) -> usize {
    smith_normal_form(m, ring).rank()
}
