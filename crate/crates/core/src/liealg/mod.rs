//! Lie algebras given by structure constants, and their structure theory.

mod construct;
mod linmap;
mod structure;
mod subspace;

pub use construct::{check_isomorphism, direct_sum, exp_ad, semidirect};
pub use linmap::LinearMap;
pub use structure::{matrix_lie_algebra, DerivationAlgebra, ExistenceClass, Fingerprint};
pub use subspace::{SpanCoordinates, Subspace, SubspaceRelation};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactla::{axpy, is_zero_vec, unit_vec, zero_vec, Matrix, Rational, Vector};

/// Outcome of a Jacobi check: `None` on success, otherwise the first failing
/// basis triple `i < j < k` in lexicographic order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct JacobiReport {
    pub failure: Option<(usize, usize, usize)>,
}

impl JacobiReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// A finite-dimensional Lie algebra over the rationals. `consts[i * dim + j]`
/// holds the coordinates of `[e_i, e_j]`.
#[derive(Debug, Clone)]
pub struct LieAlgebra {
    name: String,
    basis: Vec<String>,
    consts: Vec<Vector>,
}

impl PartialEq for LieAlgebra {
    /// Algebras are equal when their structure constants agree; labels are ignored.
    fn eq(&self, other: &Self) -> bool {
        self.consts == other.consts && self.dim() == other.dim()
    }
}

impl Eq for LieAlgebra {}

impl LieAlgebra {
    /// Builds an algebra from the brackets `[e_i, e_j]` for the listed pairs.
    /// The table is completed by antisymmetry; unlisted pairs are zero. The
    /// result is checked for Jacobi.
    pub fn new(
        name: impl Into<String>,
        basis: Vec<String>,
        brackets: &[(usize, usize, Vector)],
    ) -> Result<Self> {
        let g = Self::new_unchecked(name, basis, brackets)?;
        if let Some((i, j, k)) = g.check_jacobi().failure {
            return Err(Error::JacobiFailure(i, j, k));
        }
        Ok(g)
    }

    /// Like [`LieAlgebra::new`] but skips the Jacobi check. Antisymmetry and
    /// dimensions are still enforced.
    pub fn new_unchecked(
        name: impl Into<String>,
        basis: Vec<String>,
        brackets: &[(usize, usize, Vector)],
    ) -> Result<Self> {
        let n = basis.len();
        let mut consts = vec![zero_vec(n); n * n];
        let mut seen = vec![false; n * n];
        for (i, j, v) in brackets {
            let (i, j) = (*i, *j);
            if i >= n || j >= n {
                return Err(Error::DimensionMismatch { expected: n, found: i.max(j) + 1 });
            }
            if v.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: v.len() });
            }
            if i == j {
                if !is_zero_vec(v) {
                    return Err(Error::NotAntisymmetric(i, j));
                }
                continue;
            }
            if seen[i * n + j] {
                return Err(Error::DuplicateEntry(basis[i].clone(), basis[j].clone()));
            }
            seen[i * n + j] = true;
            seen[j * n + i] = true;
            consts[i * n + j] = v.clone();
            consts[j * n + i] = v.iter().map(|x| -x).collect();
        }
        Ok(LieAlgebra { name: name.into(), basis, consts })
    }

    /// Builds an algebra from a full table `table[i][j] = [e_i, e_j]`, checking
    /// antisymmetry but not Jacobi.
    pub fn from_full_table(name: impl Into<String>, basis: Vec<String>, table: Vec<Vector>) -> Result<Self> {
        let n = basis.len();
        if table.len() != n * n {
            return Err(Error::DimensionMismatch { expected: n * n, found: table.len() });
        }
        for i in 0..n {
            for j in 0..n {
                let a = &table[i * n + j];
                if a.len() != n {
                    return Err(Error::DimensionMismatch { expected: n, found: a.len() });
                }
                let b = &table[j * n + i];
                if a.iter().zip(b).any(|(x, y)| !(x + y).is_zero()) {
                    return Err(Error::NotAntisymmetric(i, j));
                }
            }
        }
        Ok(LieAlgebra { name: name.into(), basis, consts: table })
    }

    pub fn abelian(name: impl Into<String>, basis: Vec<String>) -> Self {
        let n = basis.len();
        LieAlgebra { name: name.into(), basis, consts: vec![zero_vec(n); n * n] }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn with_basis_names(mut self, basis: Vec<String>) -> Self {
        assert_eq!(basis.len(), self.dim());
        self.basis = basis;
        self
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    pub fn basis_index(&self, label: &str) -> Option<usize> {
        self.basis.iter().position(|b| b == label)
    }

    /// `[e_i, e_j]`
    pub fn structure(&self, i: usize, j: usize) -> &Vector {
        &self.consts[i * self.dim() + j]
    }

    pub fn is_abelian(&self) -> bool {
        self.consts.iter().all(|v| is_zero_vec(v))
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        unit_vec(self.dim(), i)
    }

    fn check_len(&self, v: &[Rational]) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: v.len() });
        }
        Ok(())
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<Vector> {
        self.check_len(x)?;
        self.check_len(y)?;
        Ok(self.bracket_unchecked(x, y))
    }

    pub(crate) fn bracket_unchecked(&self, x: &[Rational], y: &[Rational]) -> Vector {
        let n = self.dim();
        let mut out = zero_vec(n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() || i == j {
                    continue;
                }
                let c = &self.consts[i * n + j];
                if !is_zero_vec(c) {
                    axpy(&mut out, &(xi * yj), c);
                }
            }
        }
        out
    }

    /// `[e_i, y]`
    fn bracket_basis_left(&self, i: usize, y: &[Rational]) -> Vector {
        let n = self.dim();
        let mut out = zero_vec(n);
        for (j, yj) in y.iter().enumerate() {
            if !yj.is_zero() {
                axpy(&mut out, yj, &self.consts[i * n + j]);
            }
        }
        out
    }

    pub fn check_jacobi(&self) -> JacobiReport {
        let n = self.dim();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let a = self.bracket_unchecked(self.structure(i, j), &self.basis_vector(k));
                    let b = self.bracket_unchecked(self.structure(j, k), &self.basis_vector(i));
                    let c = self.bracket_unchecked(self.structure(k, i), &self.basis_vector(j));
                    let sum: Vec<Rational> =
                        a.iter().zip(&b).zip(&c).map(|((x, y), z)| x + y + z).collect();
                    if !is_zero_vec(&sum) {
                        return JacobiReport { failure: Some((i, j, k)) };
                    }
                }
            }
        }
        JacobiReport { failure: None }
    }

    /// The matrix of `y ↦ [x, y]`.
    pub fn adjoint(&self, x: &[Rational]) -> Result<LinearMap> {
        self.check_len(x)?;
        let n = self.dim();
        let cols: Vec<Vector> =
            (0..n).map(|j| self.bracket_unchecked(x, &self.basis_vector(j))).collect();
        Ok(LinearMap::from_images(&cols, n))
    }

    pub(crate) fn ad_basis(&self, i: usize) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.consts[i * n + j].clone()).collect();
        Matrix::from_columns(&cols, n)
    }

    pub fn killing_form(&self) -> Matrix {
        let n = self.dim();
        let ads: Vec<Matrix> = (0..n).map(|i| self.ad_basis(i)).collect();
        let mut k = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let t = ads[i].mul(&ads[j]).and_then(|m| m.trace()).expect("square");
                k[(i, j)] = t.clone();
                k[(j, i)] = t;
            }
        }
        k
    }

    /// `[A, B]` as a subspace.
    pub fn bracket_subspaces(&self, a: &Subspace, b: &Subspace) -> Result<Subspace> {
        let n = self.dim();
        if a.ambient_dim() != n {
            return Err(Error::DimensionMismatch { expected: n, found: a.ambient_dim() });
        }
        if b.ambient_dim() != n {
            return Err(Error::DimensionMismatch { expected: n, found: b.ambient_dim() });
        }
        let bb = b.basis();
        let mut vs = Vec::new();
        for x in a.basis() {
            for y in &bb {
                vs.push(self.bracket_unchecked(&x, y));
            }
        }
        Ok(Subspace::new(n, &vs))
    }

    pub fn full_space(&self) -> Subspace {
        Subspace::full(self.dim())
    }

    pub fn derived_algebra(&self) -> Subspace {
        let n = self.dim();
        let mut vs = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                vs.push(self.structure(i, j).clone());
            }
        }
        Subspace::new(n, &vs)
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> Result<bool> {
        Ok(s.contains_subspace(&self.bracket_subspaces(s, s)?))
    }

    pub fn is_ideal(&self, s: &Subspace) -> Result<bool> {
        Ok(s.contains_subspace(&self.bracket_subspaces(&self.full_space(), s)?))
    }

    /// The subalgebra `s` as a Lie algebra in its own right, in the given
    /// basis of `s` (which must span a subalgebra).
    pub fn restrict(&self, name: impl Into<String>, basis: &[Vector]) -> Result<LieAlgebra> {
        let coords = SpanCoordinates::new(basis, self.dim())?;
        let k = basis.len();
        let mut table = Vec::with_capacity(k * k);
        for x in basis {
            for y in basis {
                let b = self.bracket(x, y)?;
                let c = coords
                    .coords(&b)
                    .ok_or(Error::NotSubalgebra("restriction"))?;
                table.push(c);
            }
        }
        let names = (1..=k).map(|i| format!("b{i}")).collect();
        LieAlgebra::from_full_table(name, names, table)
    }

    /// The quotient-free test: is `d` a derivation of this algebra?
    pub fn is_derivation(&self, d: &LinearMap) -> Result<bool> {
        d.require_square(self.dim())?;
        Ok(self.derivation_failure(d).is_none())
    }

    /// First basis pair `(i, j)` with `d[e_i,e_j] ≠ [d e_i, e_j] + [e_i, d e_j]`.
    pub fn derivation_failure(&self, d: &LinearMap) -> Option<(usize, usize)> {
        let n = self.dim();
        let images: Vec<Vector> = (0..n).map(|i| d.image_of_basis(i)).collect();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = d.apply(self.structure(i, j)).expect("square");
                let mut rhs = self.bracket_unchecked(&images[i], &self.basis_vector(j));
                let r2 = self.bracket_basis_left(i, &images[j]);
                for (a, b) in rhs.iter_mut().zip(r2) {
                    *a += b;
                }
                if lhs != rhs {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// `{{n,n},n} = 0`
    pub fn is_two_step_nilpotent(&self) -> bool {
        let d = self.derived_algebra();
        self.bracket_subspaces(&d, &self.full_space()).map(|s| s.is_zero()).unwrap_or(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rat;

    fn names(n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("e{i}")).collect()
    }

    fn r2() -> LieAlgebra {
        LieAlgebra::new("r2", names(2), &[(0, 1, vec![rat(0), rat(1)])]).unwrap()
    }

    fn sl2() -> LieAlgebra {
        // x, y, h: [x,y]=h, [h,x]=2x, [h,y]=-2y
        LieAlgebra::new(
            "sl2",
            vec!["x".into(), "y".into(), "h".into()],
            &[
                (0, 1, vec![rat(0), rat(0), rat(1)]),
                (2, 0, vec![rat(2), rat(0), rat(0)]),
                (2, 1, vec![rat(0), rat(-2), rat(0)]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn r2_bracket_and_adjoint() {
        let g = r2();
        assert_eq!(g.bracket(&unit_vec(2, 0), &unit_vec(2, 1)).unwrap(), unit_vec(2, 1));
        let x = vec![rat(3), rat(-2)];
        assert!(is_zero_vec(&g.bracket(&x, &x).unwrap()));
        assert_eq!(
            g.adjoint(&unit_vec(2, 0)).unwrap().into_matrix(),
            Matrix::from_i64(&[&[0, 0], &[0, 1]])
        );
        assert!(matches!(g.bracket(&unit_vec(3, 0), &unit_vec(2, 0)), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn killing_form_examples() {
        let k = r2().killing_form();
        assert_eq!(k, Matrix::from_i64(&[&[1, 0], &[0, 0]]));
        let k = sl2().killing_form();
        assert_eq!(k[(2, 2)], rat(8));
        assert_eq!(k[(0, 1)], rat(4));
        assert_eq!(k[(2, 0)], rat(0));
        let ab = LieAlgebra::abelian("a", names(3));
        assert!(ab.killing_form().is_zero());
    }

    #[test]
    fn trace_of_adjoint_is_linear() {
        let g = r2();
        let x = vec![rat(2), rat(5)];
        let y = vec![rat(-1), rat(7)];
        let tr = |v: &Vector| g.adjoint(v).unwrap().matrix().trace().unwrap();
        let s: Vector = x.iter().zip(&y).map(|(a, b)| a * rat(3) + b).collect();
        assert_eq!(tr(&s), tr(&x) * rat(3) + tr(&y));
    }

    #[test]
    fn jacobi_failure_reports_a_triple() {
        let bad = LieAlgebra::new_unchecked(
            "bad",
            names(3),
            &[(0, 1, unit_vec(3, 2)), (0, 2, unit_vec(3, 0))],
        )
        .unwrap();
        assert_eq!(bad.check_jacobi().failure, Some((0, 1, 2)));
        assert!(sl2().check_jacobi().passed());
    }

    #[test]
    fn ideals_and_subalgebras() {
        let g = sl2();
        assert!(g.is_ideal(&g.full_space()).unwrap());
        let borel = Subspace::new(3, &[unit_vec(3, 0), unit_vec(3, 2)]);
        assert!(g.is_subalgebra(&borel).unwrap());
        assert!(!g.is_ideal(&borel).unwrap());
    }
}
