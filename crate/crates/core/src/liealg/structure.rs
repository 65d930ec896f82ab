//! Structure theory: center, series, radical, nilradical, derivations and the
//! isomorphism fingerprint.

use num_traits::Zero;
use serde::Serialize;

use crate::error::Result;
use crate::exactla::{Matrix, Rational, Vector};

use super::{LieAlgebra, LinearMap, SpanCoordinates, Subspace};

/// Basis of `Der(g)` together with its Lie algebra structure under the commutator.
#[derive(Debug, Clone)]
pub struct DerivationAlgebra {
    pub basis: Vec<LinearMap>,
    pub algebra: LieAlgebra,
}

/// Exact isomorphism invariants. Equal fingerprints are necessary, not sufficient,
/// for isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub dim: usize,
    pub dim_center: usize,
    pub derived_series_dims: Vec<usize>,
    pub lower_central_dims: Vec<usize>,
    pub dim_radical: usize,
    pub dim_nilradical: usize,
    pub dim_derivations: usize,
    pub dim_centroid: usize,
    pub is_semisimple: bool,
    pub is_solvable: bool,
    pub is_nilpotent: bool,
    pub is_perfect: bool,
    pub is_abelian: bool,
    pub is_complete: bool,
    pub is_reductive: bool,
    pub is_simple: bool,
}

/// The seven classes of the existence table, with its overlap conventions:
/// nilpotent means non-abelian, solvable means non-nilpotent, semisimple means
/// non-simple, reductive and complete mean non-semisimple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ExistenceClass {
    Abelian,
    Nilpotent,
    Solvable,
    Simple,
    Semisimple,
    Reductive,
    Complete,
}

impl std::fmt::Display for ExistenceClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            ExistenceClass::Abelian => "abelian",
            ExistenceClass::Nilpotent => "nilpotent",
            ExistenceClass::Solvable => "solvable",
            ExistenceClass::Simple => "simple",
            ExistenceClass::Semisimple => "semisimple",
            ExistenceClass::Reductive => "reductive",
            ExistenceClass::Complete => "complete",
        };
        f.write_str(s)
    }
}

impl Fingerprint {
    /// Every existence-table class this algebra belongs to. A complete algebra
    /// may also be solvable; a reductive one may also be abelian.
    pub fn existence_classes(&self) -> Vec<ExistenceClass> {
        let mut out = Vec::new();
        if self.dim == 0 {
            return out;
        }
        if self.is_abelian {
            out.push(ExistenceClass::Abelian);
        } else if self.is_nilpotent {
            out.push(ExistenceClass::Nilpotent);
        } else if self.is_solvable {
            out.push(ExistenceClass::Solvable);
        }
        if self.is_simple {
            out.push(ExistenceClass::Simple);
        } else if self.is_semisimple {
            out.push(ExistenceClass::Semisimple);
        }
        if !self.is_semisimple {
            if self.is_reductive {
                out.push(ExistenceClass::Reductive);
            }
            if self.is_complete {
                out.push(ExistenceClass::Complete);
            }
        }
        out
    }

    pub fn in_class(&self, c: ExistenceClass) -> bool {
        self.existence_classes().contains(&c)
    }
}

fn chain_dims(mut current: Subspace, mut next: impl FnMut(&Subspace) -> Subspace) -> Vec<usize> {
    let mut dims = vec![current.dim()];
    loop {
        let s = next(&current);
        if s.dim() == current.dim() {
            return dims;
        }
        dims.push(s.dim());
        if s.is_zero() {
            return dims;
        }
        current = s;
    }
}

impl LieAlgebra {
    pub fn center(&self) -> Subspace {
        // x central iff sum_i x_i [e_i, e_j] = 0 for every j.
        let n = self.dim();
        let mut rows = Vec::new();
        for j in 0..n {
            for k in 0..n {
                rows.push((0..n).map(|i| self.structure(i, j)[k].clone()).collect::<Vector>());
            }
        }
        Subspace::new(n, &Matrix::from_rows_with_cols(rows, n).kernel())
    }

    pub fn derived_series(&self) -> Vec<usize> {
        chain_dims(self.full_space(), |s| self.bracket_subspaces(s, s).expect("same ambient"))
    }

    pub fn lower_central_series(&self) -> Vec<usize> {
        let full = self.full_space();
        chain_dims(full.clone(), |s| self.bracket_subspaces(&full, s).expect("same ambient"))
    }

    /// Orthogonal complement of `s` under the Killing form.
    fn killing_orthogonal(&self, s: &Subspace) -> Subspace {
        let n = self.dim();
        if s.is_zero() {
            return self.full_space();
        }
        let k = self.killing_form();
        let rows = s.span_matrix().mul(&k).expect("shapes agree");
        Subspace::new(n, &rows.kernel())
    }

    /// Solvable radical, as the Killing-orthogonal complement of `[g, g]`.
    pub fn radical(&self) -> Subspace {
        self.killing_orthogonal(&self.derived_algebra())
    }

    /// Largest nilpotent ideal.
    ///
    /// `nil(g)` is the set of `x ∈ rad(g)` with `ad x` nilpotent. `ad(rad g)`
    /// is simultaneously triangularizable, so inside it `ad x` is nilpotent iff
    /// `tr(ad x · u) = 0` for every `u` in the unital associative algebra
    /// generated by `ad(rad g)`. That condition is linear in `x`.
    pub fn nilradical(&self) -> Subspace {
        let n = self.dim();
        let rad = self.radical();
        if rad.is_zero() {
            return rad;
        }
        let rad_basis = rad.basis();
        let gens: Vec<Matrix> = rad_basis
            .iter()
            .map(|r| self.adjoint(r).expect("length").into_matrix())
            .collect();
        let envelope = associative_envelope(&gens, n);
        let rows: Vec<Vector> = envelope
            .iter()
            .map(|u| {
                gens.iter()
                    .map(|a| a.mul(u).and_then(|m| m.trace()).expect("square"))
                    .collect()
            })
            .collect();
        let k = rad_basis.len();
        let coeffs = Matrix::from_rows_with_cols(rows, k).kernel();
        let vectors: Vec<Vector> = coeffs
            .iter()
            .map(|c| {
                let mut v = crate::exactla::zero_vec(n);
                for (ci, ri) in c.iter().zip(&rad_basis) {
                    crate::exactla::axpy(&mut v, ci, ri);
                }
                v
            })
            .collect();
        Subspace::new(n, &vectors)
    }

    /// Basis of `Der(g)`, solving `D[x,y] = [Dx,y] + [x,Dy]` on basis pairs.
    pub fn derivations(&self) -> Vec<LinearMap> {
        let n = self.dim();
        // Unknown D[r][c] at index c * n + r (column-major, column c = D e_c).
        let idx = |r: usize, c: usize| c * n + r;
        let mut rows: Vec<Vector> = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let cij = self.structure(i, j);
                for k in 0..n {
                    let mut row = vec![Rational::zero(); n * n];
                    // D(c_ij)_k = sum_s c_ij[s] D[k][s]
                    for (s, cs) in cij.iter().enumerate() {
                        if !cs.is_zero() {
                            row[idx(k, s)] += cs;
                        }
                    }
                    // [D e_i, e_j]_k = sum_r D[r][i] c[r][j][k]
                    for r in 0..n {
                        let c = &self.structure(r, j)[k];
                        if !c.is_zero() {
                            row[idx(r, i)] -= c;
                        }
                        let c = &self.structure(i, r)[k];
                        if !c.is_zero() {
                            row[idx(r, j)] -= c;
                        }
                    }
                    if row.iter().any(|x| !x.is_zero()) {
                        rows.push(row);
                    }
                }
            }
        }
        let kernel = Matrix::from_rows_with_cols(rows, n * n).kernel();
        kernel.iter().map(|v| LinearMap::unflatten(v, n, n)).collect()
    }

    /// `Der(g)` with its commutator bracket.
    pub fn derivation_algebra(&self) -> DerivationAlgebra {
        let basis = self.derivations();
        let algebra = matrix_lie_algebra(format!("Der({})", self.name()), &basis)
            .expect("derivations are closed under commutator");
        DerivationAlgebra { basis, algebra }
    }

    /// Linear maps commuting with every `ad x`.
    pub fn centroid_dim(&self) -> usize {
        let n = self.dim();
        let idx = |r: usize, c: usize| c * n + r;
        let mut rows = Vec::new();
        for i in 0..n {
            let ad = self.ad_basis(i);
            // (T ad - ad T)[r][c] = sum_s T[r][s] ad[s][c] - ad[r][s] T[s][c]
            for r in 0..n {
                for c in 0..n {
                    let mut row = vec![Rational::zero(); n * n];
                    for s in 0..n {
                        if !ad[(s, c)].is_zero() {
                            row[idx(r, s)] += &ad[(s, c)];
                        }
                        if !ad[(r, s)].is_zero() {
                            row[idx(s, c)] -= &ad[(r, s)];
                        }
                    }
                    if row.iter().any(|x| !x.is_zero()) {
                        rows.push(row);
                    }
                }
            }
        }
        n * n - Matrix::from_rows_with_cols(rows, n * n).rank()
    }

    pub fn is_semisimple(&self) -> bool {
        self.dim() == 0 || !self.killing_form().det().expect("square").is_zero()
    }

    pub fn classify(&self) -> Fingerprint {
        let dim = self.dim();
        let center = self.center();
        let derived = self.derived_series();
        let lower = self.lower_central_series();
        let radical = self.radical();
        let nil = self.nilradical();
        let dim_derivations = self.derivations().len();
        let dim_centroid = self.centroid_dim();
        let is_semisimple = self.is_semisimple();
        let is_solvable = *derived.last().unwrap() == 0;
        let is_nilpotent = *lower.last().unwrap() == 0;
        let is_perfect = self.derived_algebra().dim() == dim;
        let is_abelian = self.is_abelian();
        let is_complete = center.is_zero() && dim_derivations == dim;
        let is_reductive = radical == center;
        let is_simple = dim > 0 && is_semisimple && dim_centroid == 1;
        Fingerprint {
            dim,
            dim_center: center.dim(),
            derived_series_dims: derived,
            lower_central_dims: lower,
            dim_radical: radical.dim(),
            dim_nilradical: nil.dim(),
            dim_derivations,
            dim_centroid,
            is_semisimple,
            is_solvable,
            is_nilpotent,
            is_perfect,
            is_abelian,
            is_complete,
            is_reductive,
            is_simple,
        }
    }
}

/// Spans the unital associative algebra generated by `gens` (all `n x n`).
fn associative_envelope(gens: &[Matrix], n: usize) -> Vec<Matrix> {
    let flat = |m: &Matrix| m.entries().to_vec();
    let mut basis = vec![Matrix::identity(n)];
    let mut span = Subspace::new(n * n, &[flat(&basis[0])]);
    let mut frontier = basis.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for m in &frontier {
            for g in gens {
                let p = m.mul(g).expect("square");
                let v = flat(&p);
                if !span.contains(&v) {
                    span = span.sum(&Subspace::new(n * n, &[v])).expect("same ambient");
                    basis.push(p.clone());
                    next.push(p);
                }
            }
        }
        frontier = next;
    }
    basis
}

/// The Lie algebra spanned by linearly independent square matrices under the
/// commutator. Fails if the span is not closed.
pub fn matrix_lie_algebra(name: String, maps: &[LinearMap]) -> Result<LieAlgebra> {
    let k = maps.len();
    let len = maps.first().map_or(0, |m| m.source_dim() * m.target_dim());
    let flats: Vec<Vector> = maps.iter().map(LinearMap::flatten).collect();
    let coords = SpanCoordinates::new(&flats, len)?;
    let mut table = Vec::with_capacity(k * k);
    for a in maps {
        for b in maps {
            let c = a.commutator(b)?;
            let v = coords
                .coords(&c.flatten())
                .ok_or(crate::error::Error::NotSubalgebra("matrix span"))?;
            table.push(v);
        }
    }
    let names = (1..=k).map(|i| format!("d{i}")).collect();
    LieAlgebra::from_full_table(name, names, table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{rat, unit_vec};

    fn names(n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("e{i}")).collect()
    }

    #[test]
    fn abelian_plane_has_all_maps_as_derivations() {
        let a = LieAlgebra::abelian("a2", names(2));
        assert_eq!(a.derivation_algebra().basis.len(), 4);
        let f = a.classify();
        assert!(f.is_abelian && f.is_nilpotent && f.is_solvable);
        assert_eq!(f.dim_nilradical, 2);
    }

    #[test]
    fn heisenberg_has_six_derivations() {
        // Oracle: D e3 = (tr of the 2x2 block) e3 is forced, D e1, D e2 free in
        // the e1,e2 block (4) plus their e3-components (2); D e3 has no e1,e2 part.
        let n3 = LieAlgebra::new("n3", names(3), &[(0, 1, unit_vec(3, 2))]).unwrap();
        let der = n3.derivation_algebra();
        assert_eq!(der.basis.len(), 6);
        for d in &der.basis {
            assert!(n3.is_derivation(d).unwrap());
        }
        assert!(der.algebra.check_jacobi().passed());
    }

    #[test]
    fn r2_nilradical_is_e2() {
        let r2 = LieAlgebra::new("r2", names(2), &[(0, 1, unit_vec(2, 1))]).unwrap();
        assert_eq!(r2.nilradical(), Subspace::new(2, &[unit_vec(2, 1)]));
        let f = r2.classify();
        assert!(f.is_complete && f.is_solvable && !f.is_nilpotent);
        assert_eq!(f.derived_series_dims, vec![2, 1, 0]);
        assert_eq!(f.lower_central_dims, vec![2, 1]);
    }

    #[test]
    fn nilradical_avoids_trace_zero_non_nilpotent_elements() {
        // t acts on a 3-dim abelian ideal by the companion matrix of x^3 - 1,
        // whose eigenvalues 1, w, w^2 have squares summing to zero, so the
        // Killing-orthogonal test alone would wrongly accept t.
        let cols = [vec![rat(0), rat(1), rat(0)], vec![rat(0), rat(0), rat(1)], vec![rat(1), rat(0), rat(0)]];
        let mut brackets = Vec::new();
        for (j, c) in cols.iter().enumerate() {
            let mut v = vec![rat(0)];
            v.extend(c.iter().cloned());
            brackets.push((0, j + 1, v));
        }
        let g = LieAlgebra::new("s", names(4), &brackets).unwrap();
        let k = g.killing_form();
        assert_eq!(k[(0, 0)], rat(0));
        let nil = g.nilradical();
        assert_eq!(nil.dim(), 3);
        assert!(!nil.contains(&unit_vec(4, 0)));
    }
}
