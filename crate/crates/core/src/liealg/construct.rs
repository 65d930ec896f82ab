use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactla::{zero_vec, Rational, Vector};

use super::{LieAlgebra, LinearMap};

fn prefixed_names(a: &LieAlgebra, b: &LieAlgebra) -> Vec<String> {
    let collide = a.basis_names().iter().any(|x| b.basis_names().contains(x));
    if collide {
        a.basis_names()
            .iter()
            .map(|x| format!("L.{x}"))
            .chain(b.basis_names().iter().map(|x| format!("R.{x}")))
            .collect()
    } else {
        a.basis_names().iter().chain(b.basis_names()).cloned().collect()
    }
}

/// `g1 ⊕ g2` with the basis of `g1` first. Colliding labels get `L.`/`R.` prefixes.
pub fn direct_sum(g1: &LieAlgebra, g2: &LieAlgebra) -> LieAlgebra {
    let (n1, n2) = (g1.dim(), g2.dim());
    let n = n1 + n2;
    let mut table = vec![zero_vec(n); n * n];
    for i in 0..n1 {
        for j in 0..n1 {
            table[i * n + j][..n1].clone_from_slice(g1.structure(i, j));
        }
    }
    for i in 0..n2 {
        for j in 0..n2 {
            table[(n1 + i) * n + n1 + j][n1..].clone_from_slice(g2.structure(i, j));
        }
    }
    let name = format!("{}+{}", g1.name(), g2.name());
    LieAlgebra::from_full_table(name, prefixed_names(g1, g2), table).expect("blocks are antisymmetric")
}

/// `h ⋉ n` with basis `(h, n)` and bracket
/// `[(x,u),(y,v)] = ([x,y], A(x)v − A(y)u + {u,v})`.
pub fn semidirect(h: &LieAlgebra, n: &LieAlgebra, action: &[LinearMap]) -> Result<LieAlgebra> {
    let (dh, dn) = (h.dim(), n.dim());
    if action.len() != dh {
        return Err(Error::DimensionMismatch { expected: dh, found: action.len() });
    }
    for (i, a) in action.iter().enumerate() {
        a.require_square(dn)?;
        if !n.is_derivation(a)? {
            return Err(Error::ActionNotDerivation(i));
        }
    }
    for i in 0..dh {
        for j in i + 1..dh {
            let lhs = action[i].commutator(&action[j])?;
            let mut rhs = LinearMap::zero(dn, dn).into_matrix();
            for (k, c) in h.structure(i, j).iter().enumerate() {
                if !c.is_zero() {
                    rhs = rhs.add(&action[k].matrix().scale(c))?;
                }
            }
            if lhs.matrix() != &rhs {
                return Err(Error::ActionNotHomomorphism(i, j));
            }
        }
    }
    let d = dh + dn;
    let mut table = vec![zero_vec(d); d * d];
    for i in 0..dh {
        for j in 0..dh {
            table[i * d + j][..dh].clone_from_slice(h.structure(i, j));
        }
        for j in 0..dn {
            let img = action[i].image_of_basis(j);
            let neg: Vector = img.iter().map(|x| -x).collect();
            table[i * d + dh + j][dh..].clone_from_slice(&img);
            table[(dh + j) * d + i][dh..].clone_from_slice(&neg);
        }
    }
    for i in 0..dn {
        for j in 0..dn {
            table[(dh + i) * d + dh + j][dh..].clone_from_slice(n.structure(i, j));
        }
    }
    let name = format!("{}⋉{}", h.name(), n.name());
    let g = LieAlgebra::from_full_table(name, prefixed_names(h, n), table)?;
    if let Some((i, j, k)) = g.check_jacobi().failure {
        return Err(Error::JacobiFailure(i, j, k));
    }
    Ok(g)
}

/// `exp(ad z)` for `ad z` nilpotent, verified to be an automorphism.
pub fn exp_ad(g: &LieAlgebra, z: &[Rational]) -> Result<LinearMap> {
    let ad = g.adjoint(z)?;
    let phi = ad.exp_nilpotent()?;
    if !check_isomorphism(&phi, g, g)? {
        return Err(Error::NotAutomorphism);
    }
    Ok(phi)
}

/// True iff `f` is invertible and `f[x,y] = [fx, fy]` on all basis pairs.
pub fn check_isomorphism(f: &LinearMap, g1: &LieAlgebra, g2: &LieAlgebra) -> Result<bool> {
    if g1.dim() != g2.dim() {
        return Err(Error::DimensionMismatch { expected: g1.dim(), found: g2.dim() });
    }
    f.require_square(g1.dim())?;
    if !f.is_invertible()? {
        return Ok(false);
    }
    let n = g1.dim();
    let images: Vec<Vector> = (0..n).map(|i| f.image_of_basis(i)).collect();
    for i in 0..n {
        for j in i + 1..n {
            let lhs = f.apply(g1.structure(i, j))?;
            let rhs = g2.bracket(&images[i], &images[j])?;
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
