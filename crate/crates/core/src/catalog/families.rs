//! Generic families: `gl_n`, `sl_n`, `aff_n`, abelian, Heisenberg, filiform,
//! `sl_2 ⋉ V(2)`, and the matrix-product pre-Lie structure on `gl_n`.

use num_traits::One;

use crate::exactla::{unit_vec, zero_vec, Matrix, Rational, Vector};
use crate::liealg::{semidirect, LieAlgebra, LinearMap, SpanCoordinates};
use crate::postlie::BilinearProduct;

fn pair_label(prefix: &str, n: usize, i: usize, j: usize) -> String {
    if n < 10 {
        format!("{prefix}{}{}", i + 1, j + 1)
    } else {
        format!("{prefix}{}_{}", i + 1, j + 1)
    }
}

fn elementary(n: usize, i: usize, j: usize) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    m[(i, j)] = Rational::one();
    m
}

/// Lie algebra spanned by the given matrices under the commutator. The span
/// must be closed; coordinates are computed exactly.
pub(crate) fn from_matrix_basis(name: impl Into<String>, labels: Vec<String>, mats: &[Matrix]) -> LieAlgebra {
    let flat: Vec<Vector> = mats.iter().map(|m| m.entries().to_vec()).collect();
    let len = flat.first().map_or(0, Vec::len);
    let coords = SpanCoordinates::new(&flat, len).expect("independent matrices");
    let d = mats.len();
    let mut brackets = Vec::new();
    for i in 0..d {
        for j in i + 1..d {
            let ab = mats[i].mul(&mats[j]).expect("square");
            let ba = mats[j].mul(&mats[i]).expect("square");
            let c = ab.sub(&ba).expect("square");
            brackets.push((i, j, coords.coords(c.entries()).expect("span is closed")));
        }
    }
    LieAlgebra::new(name, labels, &brackets).expect("matrix commutators satisfy Jacobi")
}

/// `gl_n` on `E_ij` in row-major order.
pub fn gl(n: usize) -> LieAlgebra {
    let mut labels = Vec::new();
    let mut mats = Vec::new();
    for i in 0..n {
        for j in 0..n {
            labels.push(pair_label("E", n, i, j));
            mats.push(elementary(n, i, j));
        }
    }
    from_matrix_basis(format!("gl{n}"), labels, &mats)
}

/// `sl_n` on the off-diagonal `E_ij` in row-major order followed by
/// `H_i = E_ii − E_{i+1,i+1}`. For `n = 2` the labels are `x, y, h`.
pub fn sl(n: usize) -> LieAlgebra {
    let mut labels = Vec::new();
    let mut mats = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                labels.push(pair_label("E", n, i, j));
                mats.push(elementary(n, i, j));
            }
        }
    }
    for i in 0..n.saturating_sub(1) {
        labels.push(format!("H{}", i + 1));
        let h = elementary(n, i, i).sub(&elementary(n, i + 1, i + 1)).expect("square");
        mats.push(h);
    }
    if n == 2 {
        labels = vec!["x".into(), "y".into(), "h".into()];
    }
    from_matrix_basis(format!("sl{n}"), labels, &mats)
}

pub fn abelian(k: usize) -> LieAlgebra {
    LieAlgebra::abelian(format!("abelian{k}"), (1..=k).map(|i| format!("e{i}")).collect())
}

fn natural_action(h: &LieAlgebra, mats: &[Matrix]) -> Vec<LinearMap> {
    assert_eq!(h.dim(), mats.len());
    mats.iter().map(|m| LinearMap::new(m.clone())).collect()
}

/// `aff_n = gl_n ⋉ ℂⁿ` with basis `(E_ij, v_1..v_n)`.
pub fn aff(n: usize) -> LieAlgebra {
    let g = gl(n);
    let mats: Vec<Matrix> = (0..n).flat_map(|i| (0..n).map(move |j| elementary(n, i, j))).collect();
    let v = LieAlgebra::abelian("V", (1..=n).map(|i| format!("v{i}")).collect());
    semidirect(&g, &v, &natural_action(&g, &mats)).expect("natural action").with_name(format!("aff{n}"))
}

/// `sl_2 ⋉ V(2)` with basis `(x, y, h, v1, v2)` and the natural action.
pub fn sl2_ltimes_v2() -> LieAlgebra {
    let s = sl(2);
    let mats = [elementary(2, 0, 1), elementary(2, 1, 0), elementary(2, 0, 0).sub(&elementary(2, 1, 1)).unwrap()];
    let v = LieAlgebra::abelian("V(2)", vec!["v1".into(), "v2".into()]);
    semidirect(&s, &v, &natural_action(&s, &mats)).expect("natural action").with_name("sl2-v2")
}

/// Heisenberg algebra of dimension `2k + 1`: `[x_i, y_i] = z`.
pub fn heisenberg(k: usize) -> LieAlgebra {
    let d = 2 * k + 1;
    let brackets: Vec<(usize, usize, Vector)> = (0..k).map(|i| (2 * i, 2 * i + 1, unit_vec(d, d - 1))).collect();
    let basis = (1..=d).map(|i| format!("e{i}")).collect();
    LieAlgebra::new(format!("heisenberg{d}"), basis, &brackets).expect("Heisenberg is Lie")
}

/// Standard graded filiform algebra: `[e_1, e_i] = e_{i+1}` for `2 ≤ i < n`.
pub fn filiform(n: usize) -> LieAlgebra {
    let brackets: Vec<(usize, usize, Vector)> = (1..n.saturating_sub(1)).map(|i| (0, i, unit_vec(n, i + 1))).collect();
    let basis = (1..=n).map(|i| format!("e{i}")).collect();
    LieAlgebra::new(format!("filiform{n}"), basis, &brackets).expect("filiform is Lie")
}

/// Associative matrix product on the `gl_n` basis: `E_ij · E_kl = δ_jk E_il`.
pub fn gl_matrix_product(n: usize) -> BilinearProduct {
    let d = n * n;
    let mut entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                let mut v = zero_vec(d);
                v[i * n + l] = Rational::one();
                entries.push((i * n + j, j * n + l, v));
            }
        }
    }
    BilinearProduct::from_entries(d, &entries).expect("distinct entries")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rat;

    #[test]
    fn sl2_brackets() {
        // [x,y] = h, [h,x] = 2x, [h,y] = −2y.
        let s = sl(2);
        assert_eq!(s.structure(0, 1), &vec![rat(0), rat(0), rat(1)]);
        assert_eq!(s.structure(2, 0), &vec![rat(2), rat(0), rat(0)]);
        assert_eq!(s.structure(2, 1), &vec![rat(0), rat(-2), rat(0)]);
    }

    #[test]
    fn dimensions() {
        assert_eq!(gl(3).dim(), 9);
        assert_eq!(sl(3).dim(), 8);
        assert_eq!(aff(2).dim(), 6);
        assert_eq!(sl2_ltimes_v2().dim(), 5);
        assert_eq!(heisenberg(1).dim(), 3);
        assert_eq!(filiform(4).dim(), 4);
    }

    #[test]
    fn aff_translations() {
        // [E12, v2] = v1 in aff2.
        let a = aff(2);
        let mut expect = zero_vec(6);
        expect[4] = rat(1);
        assert_eq!(a.structure(1, 5), &expect);
    }
}
