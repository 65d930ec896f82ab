use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactla::{axpy, is_zero_vec, zero_vec, Matrix, Rational, Vector};

/// A linear subspace of a fixed coordinate space, stored as the nonzero rows
/// of the reduced row echelon form of a spanning set. Two subspaces are equal
/// exactly when their stored matrices are equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    span: Matrix,
}

impl Subspace {
    pub fn new(ambient: usize, vectors: &[Vector]) -> Self {
        let rows: Vec<Vector> = vectors.iter().filter(|v| !is_zero_vec(v)).cloned().collect();
        for v in &rows {
            assert_eq!(v.len(), ambient, "vector length does not match ambient dimension");
        }
        let red = Matrix::from_rows_with_cols(rows, ambient).rref();
        let basis: Vec<Vector> = (0..red.rank).map(|r| red.matrix.row(r).to_vec()).collect();
        Subspace { ambient, span: Matrix::from_rows_with_cols(basis, ambient) }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, span: Matrix::zeros(0, ambient) }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, span: Matrix::identity(ambient) }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.span.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn span_matrix(&self) -> &Matrix {
        &self.span
    }

    pub fn basis(&self) -> Vec<Vector> {
        self.span.to_rows()
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: other.ambient });
        }
        Ok(())
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.ambient);
        // Reduce v against the echelon rows; pivots are the leading ones.
        let mut rest = v.to_vec();
        for r in 0..self.dim() {
            let row = self.span.row(r);
            let pivot = row.iter().position(|x| !x.is_zero()).expect("echelon rows are nonzero");
            if !rest[pivot].is_zero() {
                let f = -rest[pivot].clone();
                axpy(&mut rest, &f, row);
            }
        }
        is_zero_vec(&rest)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.span.to_rows().iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut vs = self.basis();
        vs.extend(other.basis());
        Ok(Subspace::new(self.ambient, &vs))
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let a = self.basis();
        let b = other.basis();
        if a.is_empty() || b.is_empty() {
            return Ok(Subspace::zero(self.ambient));
        }
        // Solve sum_i x_i a_i - sum_j y_j b_j = 0.
        let mut cols = a.clone();
        cols.extend(b.iter().map(|v| v.iter().map(|x| -x).collect::<Vector>()));
        let m = Matrix::from_columns(&cols, self.ambient);
        let vectors: Vec<Vector> = m
            .kernel()
            .into_iter()
            .map(|k| {
                let mut v = zero_vec(self.ambient);
                for (coef, ai) in k.iter().zip(&a) {
                    axpy(&mut v, coef, ai);
                }
                v
            })
            .collect();
        Ok(Subspace::new(self.ambient, &vectors))
    }

    /// Sum, intersection and the two derived flags.
    pub fn relation(&self, other: &Subspace) -> Result<SubspaceRelation> {
        let sum = self.sum(other)?;
        let intersection = self.intersection(other)?;
        Ok(SubspaceRelation {
            is_direct: intersection.is_zero(),
            spans: sum.dim() == self.ambient,
            sum,
            intersection,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceRelation {
    pub sum: Subspace,
    pub intersection: Subspace,
    pub is_direct: bool,
    pub spans: bool,
}

/// Coordinates relative to a fixed list of linearly independent vectors.
#[derive(Debug, Clone)]
pub struct SpanCoordinates {
    len: usize,
    echelon: Matrix,
    pivots: Vec<usize>,
    /// `echelon = transform * basis` (rows).
    transform: Matrix,
}

impl SpanCoordinates {
    pub fn new(basis: &[Vector], len: usize) -> Result<Self> {
        let k = basis.len();
        let mut aug = Matrix::zeros(k, len + k);
        for (r, v) in basis.iter().enumerate() {
            if v.len() != len {
                return Err(Error::DimensionMismatch { expected: len, found: v.len() });
            }
            for (c, x) in v.iter().enumerate() {
                aug[(r, c)] = x.clone();
            }
            aug[(r, len + r)] = num_traits::One::one();
        }
        let red = aug.rref();
        if red.pivots.iter().filter(|&&p| p < len).count() != k {
            return Err(Error::InvalidArgument("basis vectors are linearly dependent".into()));
        }
        let mut echelon = Matrix::zeros(k, len);
        let mut transform = Matrix::zeros(k, k);
        for r in 0..k {
            for c in 0..len {
                echelon[(r, c)] = red.matrix[(r, c)].clone();
            }
            for c in 0..k {
                transform[(r, c)] = red.matrix[(r, len + c)].clone();
            }
        }
        Ok(SpanCoordinates { len, echelon, pivots: red.pivots[..k].to_vec(), transform })
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    /// Coordinates of `v`, or `None` when `v` is outside the span.
    pub fn coords(&self, v: &[Rational]) -> Option<Vector> {
        assert_eq!(v.len(), self.len);
        let d: Vector = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut recon = zero_vec(self.len);
        for (r, dr) in d.iter().enumerate() {
            axpy(&mut recon, dr, self.echelon.row(r));
        }
        if recon.as_slice() != v {
            return None;
        }
        // v = d^T echelon = d^T transform basis, so c = transform^T d.
        let k = self.dim();
        Some(
            (0..k)
                .map(|i| {
                    (0..k).fold(Rational::zero(), |acc, r| acc + &self.transform[(r, i)] * &d[r])
                })
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{rat, unit_vec};

    #[test]
    fn canonical_form_makes_equal_spans_equal() {
        let a = Subspace::new(3, &[vec![rat(1), rat(1), rat(0)], vec![rat(0), rat(1), rat(0)]]);
        let b = Subspace::new(3, &[unit_vec(3, 0), vec![rat(2), rat(5), rat(0)]]);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn equal_subspaces_are_not_direct() {
        let a = Subspace::new(3, &[unit_vec(3, 0), unit_vec(3, 2)]);
        let rel = a.relation(&a).unwrap();
        assert_eq!(rel.intersection, a);
        assert!(!rel.is_direct);
        let z = Subspace::zero(3);
        assert!(z.relation(&z).unwrap().is_direct);
    }

    #[test]
    fn coordinates_roundtrip() {
        let basis = vec![vec![rat(1), rat(2), rat(0)], vec![rat(0), rat(1), rat(1)]];
        let sc = SpanCoordinates::new(&basis, 3).unwrap();
        // 3*b0 - 2*b1
        let v = vec![rat(3), rat(4), rat(-2)];
        assert_eq!(sc.coords(&v).unwrap(), vec![rat(3), rat(-2)]);
        assert!(sc.coords(&unit_vec(3, 2)).is_none());
    }
}
