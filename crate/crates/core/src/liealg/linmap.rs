use crate::error::{Error, Result};
use crate::exactla::{Matrix, Rational, Vector};

use super::Subspace;

/// A linear map between coordinate spaces. Column `j` of the matrix is the
/// image of basis vector `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap {
    matrix: Matrix,
}

impl LinearMap {
    pub fn new(matrix: Matrix) -> Self {
        LinearMap { matrix }
    }

    pub fn identity(n: usize) -> Self {
        LinearMap { matrix: Matrix::identity(n) }
    }

    pub fn zero(target: usize, source: usize) -> Self {
        LinearMap { matrix: Matrix::zeros(target, source) }
    }

    /// Builds the map sending basis vector `j` to `images[j]`.
    pub fn from_images(images: &[Vector], target: usize) -> Self {
        LinearMap { matrix: Matrix::from_columns(images, target) }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix {
        self.matrix
    }

    pub fn source_dim(&self) -> usize {
        self.matrix.cols()
    }

    pub fn target_dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn is_square(&self) -> bool {
        self.matrix.is_square()
    }

    pub fn require_square(&self, dim: usize) -> Result<()> {
        if self.source_dim() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: self.source_dim() });
        }
        if self.target_dim() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: self.target_dim() });
        }
        Ok(())
    }

    pub fn apply(&self, v: &[Rational]) -> Result<Vector> {
        self.matrix.mul_vec(v)
    }

    pub fn image_of_basis(&self, j: usize) -> Vector {
        self.matrix.column(j)
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &LinearMap) -> Result<LinearMap> {
        Ok(LinearMap { matrix: self.matrix.mul(&other.matrix)? })
    }

    /// `self ∘ other − other ∘ self`
    pub fn commutator(&self, other: &LinearMap) -> Result<LinearMap> {
        let ab = self.matrix.mul(&other.matrix)?;
        let ba = other.matrix.mul(&self.matrix)?;
        Ok(LinearMap { matrix: ab.sub(&ba)? })
    }

    pub fn image(&self, s: &Subspace) -> Result<Subspace> {
        let images = s.basis().iter().map(|v| self.apply(v)).collect::<Result<Vec<_>>>()?;
        Ok(Subspace::new(self.target_dim(), &images))
    }

    pub fn kernel(&self) -> Subspace {
        Subspace::new(self.source_dim(), &self.matrix.kernel())
    }

    pub fn det(&self) -> Result<Rational> {
        self.matrix.det()
    }

    pub fn is_invertible(&self) -> Result<bool> {
        Ok(self.is_square() && !num_traits::Zero::is_zero(&self.det()?))
    }

    pub fn inverse(&self) -> Result<Option<LinearMap>> {
        Ok(self.matrix.inverse()?.map(LinearMap::new))
    }

    pub fn is_nilpotent(&self) -> Result<bool> {
        self.matrix.is_nilpotent()
    }

    pub fn exp_nilpotent(&self) -> Result<LinearMap> {
        Ok(LinearMap { matrix: self.matrix.nilpotent_exp()? })
    }

    pub fn neg(&self) -> LinearMap {
        LinearMap { matrix: self.matrix.neg() }
    }

    /// Column-major flattening: the images of the basis vectors, concatenated.
    pub fn flatten(&self) -> Vector {
        (0..self.source_dim()).flat_map(|j| self.matrix.column(j)).collect()
    }

    pub fn unflatten(v: &[Rational], target: usize, source: usize) -> LinearMap {
        assert_eq!(v.len(), target * source);
        let cols: Vec<Vector> = v.chunks(target.max(1)).take(source).map(<[_]>::to_vec).collect();
        if target == 0 {
            return LinearMap::zero(0, source);
        }
        LinearMap::from_images(&cols, target)
    }
}
