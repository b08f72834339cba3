//! Integer matrices, Smith normal form and the multiplicative
//! lattice-consistency test built on it.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rat::Rat;
use crate::error::{Error, Result};

/// Dense integer matrix, row major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> IntMatrix {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows; `cols` fixes the width when `rows` is empty.
    pub fn from_rows(rows: &[Vec<i64>], cols: usize) -> Result<IntMatrix> {
        let mut m = IntMatrix::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::LengthMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    r.len()
                )));
            }
            for (j, v) in r.iter().enumerate() {
                m[(i, j)] = BigInt::from(*v);
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * &other[(k, j)];
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut out = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        if self.rows != self.cols {
            return Err(Error::InvalidArgument("determinant of non-square matrix".into()));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                    return Ok(BigInt::zero());
                };
                a.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)]) / &prev;
                    a[(i, j)] = v;
                }
                a[(i, k)] = BigInt::zero();
            }
            prev = a[(k, k)].clone();
        }
        Ok(sign * &a[(n - 1, n - 1)])
    }

    /// Inverse of a unimodular matrix.
    pub fn unimodular_inverse(&self) -> Result<IntMatrix> {
        let det = self.determinant()?;
        if det.abs() != BigInt::one() {
            return Err(Error::InvalidArgument(format!(
                "matrix is not unimodular (det = {det})"
            )));
        }
        let n = self.rows;
        let mut inv = IntMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let minor = self.minor(j, i);
                let cof = minor.determinant()?;
                let cof = if (i + j) % 2 == 0 { cof } else { -cof };
                inv[(i, j)] = cof * &det;
            }
        }
        Ok(inv)
    }

    fn minor(&self, skip_row: usize, skip_col: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.rows - 1, self.cols - 1);
        for (r, i) in (0..self.rows).filter(|&i| i != skip_row).enumerate() {
            for (c, j) in (0..self.cols).filter(|&j| j != skip_col).enumerate() {
                m[(r, c)] = self[(i, j)].clone();
            }
        }
        m
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

    /// row[dst] += c * row[src]
    fn add_row(&mut self, dst: usize, src: usize, c: &BigInt) {
        for j in 0..self.cols {
            let v = c * &self[(src, j)];
            self[(dst, j)] += v;
        }
    }

    /// col[dst] += c * col[src]
    fn add_col(&mut self, dst: usize, src: usize, c: &BigInt) {
        for i in 0..self.rows {
            let v = c * &self[(i, src)];
            self[(i, dst)] += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -&self[(i, j)];
            self[(i, j)] = v;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// `left * m * right = diag(diagonal)` with `d_i | d_(i+1)`, `d_i >= 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub diagonal: Vec<BigInt>,
    pub left: IntMatrix,
    pub right: IntMatrix,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|d| !d.is_zero()).count()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (rows, cols) = (m.rows, m.cols);
    let mut a = m.clone();
    let mut left = IntMatrix::identity(rows);
    let mut right = IntMatrix::identity(cols);
    let steps = rows.min(cols);

    for t in 0..steps {
        loop {
            // smallest nonzero entry of the trailing block becomes the pivot
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if a[(i, j)].is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| a[(i, j)].abs() < a[(bi, bj)].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                break;
            };
            a.swap_rows(t, pi);
            left.swap_rows(t, pi);
            a.swap_cols(t, pj);
            right.swap_cols(t, pj);

            let pivot = a[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..rows {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = -a[(i, t)].div_floor(&pivot);
                a.add_row(i, t, &q);
                left.add_row(i, t, &q);
                clean &= a[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = -a[(t, j)].div_floor(&pivot);
                a.add_col(j, t, &q);
                right.add_col(j, t, &q);
                clean &= a[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }
            let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    let one = BigInt::one();
                    a.add_row(t, i, &one);
                    left.add_row(t, i, &one);
                }
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            a.negate_row(t);
            left.negate_row(t);
        }
    }

    let diagonal = (0..steps).map(|i| a[(i, i)].clone()).collect();
    SmithForm { diagonal, left, right }
}

/// Integer basis of the left kernel `{c : c^T m = 0}`.
pub fn left_kernel_basis(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    let snf = smith_normal_form(m);
    let rank = snf.rank();
    (rank..m.rows).map(|i| snf.left.row(i).to_vec()).collect()
}

/// Whether a complex torus point `t` with `t^(w_j) = ratios[j]` exists for
/// every `j`.
///
/// Each weight vector has one entry per torus coordinate. The test computes a
/// basis of the integer relations among the weight vectors and checks that
/// every relation holds multiplicatively among the ratios.
pub fn multiplicative_consistency(weights: &[Vec<i64>], ratios: &[Rat]) -> Result<bool> {
    if weights.len() != ratios.len() {
        return Err(Error::LengthMismatch(format!(
            "{} weight vectors but {} ratios",
            weights.len(),
            ratios.len()
        )));
    }
    if ratios.iter().any(Rat::is_zero) {
        return Err(Error::InvalidArgument("ratios must be nonzero".into()));
    }
    let Some(dim) = weights.first().map(Vec::len) else {
        return Ok(true);
    };
    let w = IntMatrix::from_rows(weights, dim)?;
    for c in left_kernel_basis(&w) {
        let mut num = Rat::one();
        for (cj, rho) in c.iter().zip(ratios) {
            if cj.is_zero() {
                continue;
            }
            let e: i64 = cj
                .try_into()
                .map_err(|_| Error::Internal("lattice relation exponent too large".into()))?;
            num = num * rho.pow(e);
        }
        if !num.is_one() {
            return Ok(false);
        }
    }
    Ok(true)
}
