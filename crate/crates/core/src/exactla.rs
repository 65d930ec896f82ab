//! Exact rational scalars, vectors and dense matrices.
//!
//! Everything here is exact: there is no floating point anywhere in the crate.
//! Vectors are plain coordinate tuples relative to a fixed ordered basis.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;
pub type Vector = Vec<Rational>;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `p` or `p/q` with `q > 0`. Decimals, exponents and NaN are rejected.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::MalformedRational(s.to_string());
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((p, q)) => (p, Some(q)),
        None => (t, None),
    };
    let is_int = |x: &str, signed: bool| {
        let digits = if signed { x.strip_prefix('-').unwrap_or(x) } else { x };
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !is_int(num, true) {
        return Err(bad());
    }
    let p: BigInt = num.parse().map_err(|_| bad())?;
    let q: BigInt = match den {
        Some(d) => {
            if !is_int(d, false) {
                return Err(bad());
            }
            d.parse().map_err(|_| bad())?
        }
        None => BigInt::one(),
    };
    if q.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(p, q))
}

pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn zero_vec(n: usize) -> Vector {
    vec![Rational::zero(); n]
}

pub fn unit_vec(n: usize, i: usize) -> Vector {
    let mut v = zero_vec(n);
    v[i] = Rational::one();
    v
}

pub fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn add_vec(a: &[Rational], b: &[Rational]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vec(a: &[Rational], b: &[Rational]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vec(s: &Rational, a: &[Rational]) -> Vector {
    a.iter().map(|x| s * x).collect()
}

/// `acc += s * a`
pub fn axpy(acc: &mut [Rational], s: &Rational, a: &[Rational]) {
    if s.is_zero() {
        return;
    }
    for (x, y) in acc.iter_mut().zip(a) {
        if !y.is_zero() {
            *x += s * y;
        }
    }
}

/// Dense row-major matrix over the rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(format_rational).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (r, c): (usize, usize)) -> &Rational {
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rational {
        &mut self.data[r * self.cols + c]
    }
}

/// Result of [`Matrix::rref`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// Every solution of `m x = b` is `particular + span(homogeneous)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineSolution {
    pub particular: Vector,
    pub homogeneous: Vec<Vector>,
    /// Coordinate that each homogeneous vector is pinned to (it has a 1 there
    /// and every other homogeneous vector and the particular solution a 0).
    pub free_columns: Vec<usize>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vector>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    /// Builds a `rows x cols` matrix; `rows == 0` yields an empty matrix with `cols` columns.
    pub fn from_rows_with_cols(rows: Vec<Vector>, cols: usize) -> Self {
        if rows.is_empty() {
            return Self::zeros(0, cols);
        }
        let m = Self::from_rows(rows);
        assert_eq!(m.cols, cols);
        m
    }

    pub fn from_columns(cols: &[Vector], rows: usize) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vector> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vector> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .fold(Rational::zero(), |acc, x| acc + x)
            })
            .collect())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn scale(&self, s: &Rational) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| s * a).collect() }
    }

    pub fn neg(&self) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| -a).collect() }
    }

    pub fn trace(&self) -> Result<Rational> {
        self.require_square()?;
        Ok((0..self.rows).fold(Rational::zero(), |acc, i| acc + &self[(i, i)]))
    }

    /// Row-major flattening.
    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    fn check_same_shape(&self, other: &Matrix) -> Result<()> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, found: other.rows });
        }
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.cols });
        }
        Ok(())
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NonSquare { rows: self.rows, cols: self.cols })
        }
    }

    /// Reduced row echelon form by exact Gauss-Jordan elimination.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut prow = 0;
        for col in 0..m.cols {
            if prow == m.rows {
                break;
            }
            let Some(src) = (prow..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(prow, src);
            let inv = m[(prow, col)].recip();
            for c in col..m.cols {
                let v = &m[(prow, c)] * &inv;
                m[(prow, c)] = v;
            }
            for r in 0..m.rows {
                if r == prow || m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].clone();
                for c in col..m.cols {
                    if m[(prow, c)].is_zero() {
                        continue;
                    }
                    let v = &factor * &m[(prow, c)];
                    m[(r, c)] -= v;
                }
            }
            pivots.push(col);
            prow += 1;
        }
        Rref { matrix: m, rank: pivots.len(), pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Basis of the null space, one vector per free column.
    pub fn kernel(&self) -> Vec<Vector> {
        let Rref { matrix, pivots, .. } = self.rref();
        kernel_from_rref(&matrix, &pivots).0
    }

    /// Solves `self * x = b`.
    pub fn solve_affine(&self, b: &[Rational]) -> Result<AffineSolution> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, found: b.len() });
        }
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug[(r, c)] = self[(r, c)].clone();
            }
            aug[(r, self.cols)] = b[r].clone();
        }
        let Rref { matrix, pivots, .. } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Err(Error::Inconsistent);
        }
        let mut particular = zero_vec(self.cols);
        for (r, &p) in pivots.iter().enumerate() {
            particular[p] = matrix[(r, self.cols)].clone();
        }
        // Kernel of the coefficient part: drop the augmented column.
        let mut coeff = Matrix::zeros(pivots.len(), self.cols);
        for r in 0..pivots.len() {
            for c in 0..self.cols {
                coeff[(r, c)] = matrix[(r, c)].clone();
            }
        }
        let (homogeneous, free_columns) = kernel_from_rref(&coeff, &pivots);
        Ok(AffineSolution { particular, homogeneous, free_columns })
    }

    /// Exact determinant by Gaussian elimination.
    pub fn det(&self) -> Result<Rational> {
        self.require_square()?;
        let mut m = self.clone();
        let n = m.rows;
        let mut det = Rational::one();
        for col in 0..n {
            let Some(src) = (col..n).find(|&r| !m[(r, col)].is_zero()) else {
                return Ok(Rational::zero());
            };
            if src != col {
                m.swap_rows(src, col);
                det = -det;
            }
            let pivot = m[(col, col)].clone();
            det *= &pivot;
            for r in col + 1..n {
                if m[(r, col)].is_zero() {
                    continue;
                }
                let factor = &m[(r, col)] / &pivot;
                for c in col..n {
                    let v = &factor * &m[(col, c)];
                    m[(r, c)] -= v;
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<Option<Matrix>> {
        self.require_square()?;
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug[(r, c)] = self[(r, c)].clone();
            }
            aug[(r, n + r)] = Rational::one();
        }
        let red = aug.rref();
        if red.pivots.iter().copied().take(n).ne(0..n) {
            return Ok(None);
        }
        let mut inv = Matrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv[(r, c)] = red.matrix[(r, n + c)].clone();
            }
        }
        Ok(Some(inv))
    }

    /// True iff `self^n = 0` where `n` is the size.
    pub fn is_nilpotent(&self) -> Result<bool> {
        self.require_square()?;
        let mut p = Matrix::identity(self.rows);
        for _ in 0..self.rows {
            p = p.mul(self)?;
            if p.is_zero() {
                return Ok(true);
            }
        }
        Ok(p.is_zero())
    }

    /// `sum_{k < n} self^k / k!` for a nilpotent matrix.
    pub fn nilpotent_exp(&self) -> Result<Matrix> {
        if !self.is_nilpotent()? {
            return Err(Error::NotNilpotent);
        }
        let n = self.rows;
        let mut sum = Matrix::identity(n);
        let mut term = Matrix::identity(n);
        for k in 1..n.max(1) {
            term = term.mul(self)?.scale(&rat(k as i64).recip());
            if term.is_zero() {
                break;
            }
            sum = sum.add(&term)?;
        }
        Ok(sum)
    }
}

fn kernel_from_rref(rref: &Matrix, pivots: &[usize]) -> (Vec<Vector>, Vec<usize>) {
    let cols = rref.cols();
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..cols).filter(|&c| !is_pivot[c]).collect();
    let basis = free
        .iter()
        .map(|&f| {
            let mut v = zero_vec(cols);
            v[f] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -rref[(r, f)].clone();
            }
            v
        })
        .collect();
    (basis, free)
}
