//! Post-Lie and pre-Lie structures on pairs of Lie brackets, Rota-Baxter
//! operators of weight 1, and the constructions that produce them.
//!
//! A post-Lie structure on `(g, n)` is a bilinear product `x·y` with
//!
//! 1. `x·y − y·x = [x,y] − {x,y}`
//! 2. `[x,y]·z = x·(y·z) − y·(x·z)`
//! 3. `x·{y,z} = {x·y,z} + {y,x·z}`
//!
//! where `[,]` is the bracket of `g` and `{,}` the bracket of `n`.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::catalog::families;
use crate::error::{Error, Result};
use crate::exactla::{axpy, is_zero_vec, ratio, sub_vec, zero_vec, Matrix, Rational, Vector};
use crate::liealg::{
    direct_sum, matrix_lie_algebra, semidirect, JacobiReport, LieAlgebra, LinearMap,
    SpanCoordinates, Subspace,
};

/// Two Lie brackets on the same coordinate space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiePair {
    pub g: LieAlgebra,
    pub n: LieAlgebra,
}

impl LiePair {
    pub fn new(g: LieAlgebra, n: LieAlgebra) -> Result<Self> {
        if g.dim() != n.dim() {
            return Err(Error::DimensionMismatch { expected: g.dim(), found: n.dim() });
        }
        Ok(LiePair { g, n })
    }

    pub fn dim(&self) -> usize {
        self.g.dim()
    }
}

/// A bilinear product on a fixed basis; `get(i, j)` holds `e_i · e_j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BilinearProduct {
    dim: usize,
    table: Vec<Vector>,
}

impl BilinearProduct {
    pub fn zero(dim: usize) -> Self {
        BilinearProduct { dim, table: vec![zero_vec(dim); dim * dim] }
    }

    /// Listed entries `e_i · e_j = v`; everything else is zero.
    pub fn from_entries(dim: usize, entries: &[(usize, usize, Vector)]) -> Result<Self> {
        let mut p = Self::zero(dim);
        let mut seen = vec![false; dim * dim];
        for (i, j, v) in entries {
            if *i >= dim || *j >= dim {
                return Err(Error::DimensionMismatch { expected: dim, found: (*i).max(*j) + 1 });
            }
            if v.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: v.len() });
            }
            if seen[i * dim + j] {
                return Err(Error::DuplicateEntry(format!("e{}", i + 1), format!("e{}", j + 1)));
            }
            seen[i * dim + j] = true;
            p.table[i * dim + j] = v.clone();
        }
        Ok(p)
    }

    /// Flattened coordinates, index `(i * dim + j) * dim + k`.
    pub fn from_flat(dim: usize, flat: &[Rational]) -> Self {
        assert_eq!(flat.len(), dim * dim * dim);
        let table = if dim == 0 { Vec::new() } else { flat.chunks(dim).map(<[_]>::to_vec).collect() };
        BilinearProduct { dim, table }
    }

    pub fn flatten(&self) -> Vector {
        self.table.iter().flatten().cloned().collect()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Vector {
        &self.table[i * self.dim + j]
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().all(|v| is_zero_vec(v))
    }

    /// Nonzero entries in lexicographic order.
    pub fn nonzero_entries(&self) -> Vec<(usize, usize, &Vector)> {
        let n = self.dim;
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !is_zero_vec(self.get(i, j)))
            .map(|(i, j)| (i, j, self.get(i, j)))
            .collect()
    }

    fn check_len(&self, v: &[Rational]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: v.len() });
        }
        Ok(())
    }

    pub fn mul(&self, x: &[Rational], y: &[Rational]) -> Result<Vector> {
        self.check_len(x)?;
        self.check_len(y)?;
        let mut out = zero_vec(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if !yj.is_zero() {
                    axpy(&mut out, &(xi * yj), self.get(i, j));
                }
            }
        }
        Ok(out)
    }

    /// Left multiplication `L(e_i): y ↦ e_i · y`.
    pub fn left(&self, i: usize) -> LinearMap {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.get(i, j).clone()).collect();
        LinearMap::from_images(&cols, self.dim)
    }

    /// Right multiplication `R(e_i): y ↦ y · e_i`.
    pub fn right(&self, i: usize) -> LinearMap {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.get(j, i).clone()).collect();
        LinearMap::from_images(&cols, self.dim)
    }

    pub fn left_of(&self, x: &[Rational]) -> Result<LinearMap> {
        self.check_len(x)?;
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (i, xi) in x.iter().enumerate() {
            if !xi.is_zero() {
                m = m.add(&self.left(i).matrix().scale(xi))?;
            }
        }
        Ok(LinearMap::new(m))
    }
}

/// Which post-Lie axioms hold, with the first failing basis tuple of each.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub eq1_ok: bool,
    pub eq2_ok: bool,
    pub eq3_ok: bool,
    pub eq1_witness: Option<(usize, usize)>,
    pub eq2_witness: Option<(usize, usize, usize)>,
    pub eq3_witness: Option<(usize, usize, usize)>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.eq1_ok && self.eq2_ok && self.eq3_ok
    }

    pub fn summary(&self) -> String {
        let flag = |ok: bool| if ok { "pass" } else { "FAIL" };
        let mut s = format!(
            "eq1 {}, eq2 {}, eq3 {}",
            flag(self.eq1_ok),
            flag(self.eq2_ok),
            flag(self.eq3_ok)
        );
        if let Some((i, j)) = self.eq1_witness {
            s += &format!("; eq1 fails at (e{}, e{})", i + 1, j + 1);
        }
        if let Some((i, j, k)) = self.eq2_witness {
            s += &format!("; eq2 fails at (e{}, e{}, e{})", i + 1, j + 1, k + 1);
        }
        if let Some((i, j, k)) = self.eq3_witness {
            s += &format!("; eq3 fails at (e{}, e{}, e{})", i + 1, j + 1, k + 1);
        }
        s
    }
}

fn check_dims(pair: &LiePair, prod: &BilinearProduct) -> Result<()> {
    if pair.g.dim() != pair.n.dim() {
        return Err(Error::DimensionMismatch { expected: pair.g.dim(), found: pair.n.dim() });
    }
    if prod.dim() != pair.dim() {
        return Err(Error::DimensionMismatch { expected: pair.dim(), found: prod.dim() });
    }
    Ok(())
}

fn eq1_failure(pair: &LiePair, prod: &BilinearProduct) -> Option<(usize, usize)> {
    let n = pair.dim();
    for i in 0..n {
        for j in i + 1..n {
            let lhs = sub_vec(prod.get(i, j), prod.get(j, i));
            let rhs = sub_vec(pair.g.structure(i, j), pair.n.structure(i, j));
            if lhs != rhs {
                return Some((i, j));
            }
        }
    }
    None
}

fn eq2_failure(g: &LieAlgebra, prod: &BilinearProduct) -> Option<(usize, usize, usize)> {
    let n = g.dim();
    let lefts: Vec<Matrix> = (0..n).map(|i| prod.left(i).into_matrix()).collect();
    for i in 0..n {
        for j in 0..n {
            // L([e_i, e_j]) = [L(e_i), L(e_j)] column by column.
            let lbr = prod.left_of(g.structure(i, j)).expect("length").into_matrix();
            let comm = lefts[i]
                .mul(&lefts[j])
                .and_then(|a| lefts[j].mul(&lefts[i]).and_then(|b| a.sub(&b)))
                .expect("square");
            if lbr != comm {
                let k = (0..n).find(|&k| lbr.column(k) != comm.column(k)).expect("differs");
                return Some((i, j, k));
            }
        }
    }
    None
}

fn eq3_failure(nalg: &LieAlgebra, prod: &BilinearProduct) -> Option<(usize, usize, usize)> {
    let n = nalg.dim();
    for i in 0..n {
        let l = prod.left(i);
        for j in 0..n {
            for k in 0..n {
                let lhs = l.apply(nalg.structure(j, k)).expect("length");
                let mut rhs = nalg.bracket_unchecked(prod.get(i, j), &nalg.basis_vector(k));
                let r2 = nalg.bracket_unchecked(&nalg.basis_vector(j), prod.get(i, k));
                for (a, b) in rhs.iter_mut().zip(r2) {
                    *a += b;
                }
                if lhs != rhs {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

pub fn check_postlie(pair: &LiePair, prod: &BilinearProduct) -> Result<AxiomReport> {
    check_dims(pair, prod)?;
    let w1 = eq1_failure(pair, prod);
    let w2 = eq2_failure(&pair.g, prod);
    let w3 = eq3_failure(&pair.n, prod);
    Ok(AxiomReport {
        eq1_ok: w1.is_none(),
        eq2_ok: w2.is_none(),
        eq3_ok: w3.is_none(),
        eq1_witness: w1,
        eq2_witness: w2,
        eq3_witness: w3,
    })
}

/// Pre-Lie check on `g`: the post-Lie axioms against the abelian bracket.
pub fn check_prelie(g: &LieAlgebra, prod: &BilinearProduct) -> Result<AxiomReport> {
    let ab = LieAlgebra::abelian(format!("abelian{}", g.dim()), g.basis_names().to_vec());
    check_postlie(&LiePair::new(g.clone(), ab)?, prod)
}

/// `[x,y] = x·y − y·x + {x,y}`, with Jacobi reported rather than assumed.
pub fn induced_g(n: &LieAlgebra, prod: &BilinearProduct) -> Result<(LieAlgebra, JacobiReport)> {
    let d = n.dim();
    if prod.dim() != d {
        return Err(Error::DimensionMismatch { expected: d, found: prod.dim() });
    }
    let mut table = Vec::with_capacity(d * d);
    for i in 0..d {
        for j in 0..d {
            let mut v = sub_vec(prod.get(i, j), prod.get(j, i));
            for (a, b) in v.iter_mut().zip(n.structure(i, j)) {
                *a += b;
            }
            table.push(v);
        }
    }
    let g = LieAlgebra::from_full_table(format!("g({})", n.name()), n.basis_names().to_vec(), table)?;
    let report = g.check_jacobi();
    Ok((g, report))
}

/// `x·y = {φ(x), y}`.
pub fn inner_product_from_map(n: &LieAlgebra, phi: &LinearMap) -> Result<BilinearProduct> {
    let d = n.dim();
    phi.require_square(d)?;
    let mut entries = Vec::new();
    for i in 0..d {
        let fi = phi.image_of_basis(i);
        for j in 0..d {
            entries.push((i, j, n.bracket_unchecked(&fi, &n.basis_vector(j))));
        }
    }
    let prod = BilinearProduct::from_entries(d, &entries)?;
    debug_assert!(eq3_failure(n, &prod).is_none(), "inner derivations satisfy eq3");
    Ok(prod)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RotaBaxterReport {
    pub passed: bool,
    pub failure: Option<(usize, usize)>,
}

/// Checks `{Rx,Ry} = R({Rx,y} + {x,Ry} + λ{x,y})` on basis pairs.
pub fn check_rota_baxter(n: &LieAlgebra, r: &LinearMap, weight: &Rational) -> Result<RotaBaxterReport> {
    let d = n.dim();
    r.require_square(d)?;
    let images: Vec<Vector> = (0..d).map(|i| r.image_of_basis(i)).collect();
    for i in 0..d {
        for j in 0..d {
            let lhs = n.bracket_unchecked(&images[i], &images[j]);
            let mut inner = n.bracket_unchecked(&images[i], &n.basis_vector(j));
            let t2 = n.bracket_unchecked(&n.basis_vector(i), &images[j]);
            for (a, b) in inner.iter_mut().zip(t2) {
                *a += b;
            }
            axpy(&mut inner, weight, n.structure(i, j));
            let rhs = r.apply(&inner)?;
            if lhs != rhs {
                return Ok(RotaBaxterReport { passed: false, failure: Some((i, j)) });
            }
        }
    }
    Ok(RotaBaxterReport { passed: true, failure: None })
}

/// `R(u + v) = −v` for `u ∈ n1`, `v ∈ n2`.
pub fn rb_from_subalgebra_pair(n: &LieAlgebra, n1: &Subspace, n2: &Subspace) -> Result<LinearMap> {
    let d = n.dim();
    if !n.is_subalgebra(n1)? {
        return Err(Error::NotSubalgebra("n1"));
    }
    if !n.is_subalgebra(n2)? {
        return Err(Error::NotSubalgebra("n2"));
    }
    let rel = n1.relation(n2)?;
    if !rel.is_direct {
        return Err(Error::NotDirect);
    }
    if !rel.spans {
        return Err(Error::NotSpanning);
    }
    let mut basis = n1.basis();
    basis.extend(n2.basis());
    let coords = SpanCoordinates::new(&basis, d)?;
    let k1 = n1.dim();
    let images: Vec<Vector> = (0..d)
        .map(|j| {
            let c = coords.coords(&n.basis_vector(j)).expect("spanning");
            let mut v = zero_vec(d);
            for (ci, bi) in c.iter().zip(&basis).skip(k1) {
                axpy(&mut v, &-ci, bi);
            }
            v
        })
        .collect();
    Ok(LinearMap::from_images(&images, d))
}

/// `x∘y = ½{x,y} + x·y`, a pre-Lie structure on `g` when `n` is 2-step nilpotent.
pub fn postlie_to_prelie(pair: &LiePair, prod: &BilinearProduct) -> Result<BilinearProduct> {
    check_dims(pair, prod)?;
    if !pair.n.is_two_step_nilpotent() {
        return Err(Error::NotTwoStepNilpotent);
    }
    let report = check_postlie(pair, prod)?;
    if !report.passed() {
        return Err(Error::NotPostLie(report.summary()));
    }
    let d = pair.dim();
    let half = ratio(1, 2);
    let mut entries = Vec::with_capacity(d * d);
    for i in 0..d {
        for j in 0..d {
            let mut v = prod.get(i, j).clone();
            axpy(&mut v, &half, pair.n.structure(i, j));
            entries.push((i, j, v));
        }
    }
    BilinearProduct::from_entries(d, &entries)
}

/// Blockwise product on `(g1 ⊕ g2, n1 ⊕ n2)`.
pub fn direct_sum_products(
    pair1: &LiePair,
    prod1: &BilinearProduct,
    pair2: &LiePair,
    prod2: &BilinearProduct,
) -> Result<(LiePair, BilinearProduct)> {
    for (pair, prod) in [(pair1, prod1), (pair2, prod2)] {
        let report = check_postlie(pair, prod)?;
        if !report.passed() {
            return Err(Error::NotPostLie(report.summary()));
        }
    }
    let (d1, d2) = (pair1.dim(), pair2.dim());
    let d = d1 + d2;
    let mut entries = Vec::new();
    for (i, j, v) in prod1.nonzero_entries() {
        let mut w = v.clone();
        w.extend(zero_vec(d2));
        entries.push((i, j, w));
    }
    for (i, j, v) in prod2.nonzero_entries() {
        let mut w = zero_vec(d1);
        w.extend(v.iter().cloned());
        entries.push((d1 + i, d1 + j, w));
    }
    let pair = LiePair::new(direct_sum(&pair1.g, &pair2.g), direct_sum(&pair1.n, &pair2.n))?;
    Ok((pair, BilinearProduct::from_entries(d, &entries)?))
}

/// The embedding `x ↦ (x, L(x))` of `g` into `n ⋊ h`, `h = span{L(e_i)} ⊆ Der(n)`.
#[derive(Debug, Clone)]
pub struct Embedding {
    /// `h` with basis `left_basis`.
    pub h: LieAlgebra,
    pub left_basis: Vec<LinearMap>,
    /// `h ⋉ n`, basis `(h, n)`.
    pub ambient: LieAlgebra,
    /// `dim(h) + dim(n)` by `dim(g)`.
    pub map: LinearMap,
    pub is_homomorphism: bool,
    pub is_injective: bool,
    pub projection_is_isomorphism: bool,
}

impl Embedding {
    pub fn passed(&self) -> bool {
        self.is_homomorphism && self.is_injective && self.projection_is_isomorphism
    }
}

pub fn embedding_into_semidirect(pair: &LiePair, prod: &BilinearProduct) -> Result<Embedding> {
    check_dims(pair, prod)?;
    let report = check_postlie(pair, prod)?;
    if !report.passed() {
        return Err(Error::NotPostLie(report.summary()));
    }
    let d = pair.dim();
    let lefts: Vec<LinearMap> = (0..d).map(|i| prod.left(i)).collect();
    // Pick an independent subset of the left multiplications as a basis of h.
    let mut left_basis: Vec<LinearMap> = Vec::new();
    let mut span = Subspace::zero(d * d);
    for l in &lefts {
        let v = l.flatten();
        if !span.contains(&v) {
            span = span.sum(&Subspace::new(d * d, &[v]))?;
            left_basis.push(l.clone());
        }
    }
    let h = matrix_lie_algebra("h".into(), &left_basis)?;
    let ambient = semidirect(&h, &pair.n, &left_basis)?;
    let dh = h.dim();
    let coords = SpanCoordinates::new(&left_basis.iter().map(LinearMap::flatten).collect::<Vec<_>>(), d * d)?;
    let images: Vec<Vector> = (0..d)
        .map(|i| {
            let mut v = if dh == 0 {
                Vec::new()
            } else {
                coords.coords(&lefts[i].flatten()).expect("in span")
            };
            v.extend(pair.n.basis_vector(i));
            v
        })
        .collect();
    let map = LinearMap::from_images(&images, dh + d);
    let mut is_homomorphism = true;
    'outer: for i in 0..d {
        for j in i + 1..d {
            let lhs = map.apply(pair.g.structure(i, j))?;
            let rhs = ambient.bracket(&images[i], &images[j])?;
            if lhs != rhs {
                is_homomorphism = false;
                break 'outer;
            }
        }
    }
    let is_injective = map.matrix().rank() == d;
    let mut proj = Matrix::zeros(d, d);
    for r in 0..d {
        for c in 0..d {
            proj[(r, c)] = map.matrix()[(dh + r, c)].clone();
        }
    }
    let projection_is_isomorphism = !proj.det()?.is_zero();
    Ok(Embedding { h, left_basis, ambient, map, is_homomorphism, is_injective, projection_is_isomorphism })
}

/// `g = gl_n ⊕ ℂ` with basis `(y_1..y_{n²}, x)`, `n` with `{x, y_i} = y_i`, and
/// the product: matrix multiplication on the `y` block, `x·y_i = −y_i`, all
/// products with `x` on the right zero.
pub fn prop52_structure(size: usize) -> Result<(LiePair, BilinearProduct)> {
    if size < 2 {
        return Err(Error::InvalidArgument(format!("matrix size must be at least 2, got {size}")));
    }
    let gl = families::gl(size);
    let m = gl.dim();
    let d = m + 1;
    let one = LieAlgebra::abelian("C", vec!["x".into()]);
    let g = direct_sum(&gl, &one).with_name(format!("gl{size}+C"));
    let mut names: Vec<String> = gl.basis_names().to_vec();
    names.push("x".into());
    let n_brackets: Vec<(usize, usize, Vector)> = (0..m)
        .map(|i| {
            let mut v = zero_vec(d);
            v[i] = Rational::one();
            (m, i, v)
        })
        .collect();
    let n = LieAlgebra::new(format!("C^{m}⋊C"), names, &n_brackets)?;
    let pre = families::gl_matrix_product(size);
    let mut entries = Vec::new();
    for (i, j, v) in pre.nonzero_entries() {
        let mut w = v.clone();
        w.push(Rational::zero());
        entries.push((i, j, w));
    }
    for i in 0..m {
        let mut v = zero_vec(d);
        v[i] = -Rational::one();
        entries.push((m, i, v));
    }
    Ok((LiePair::new(g, n)?, BilinearProduct::from_entries(d, &entries)?))
}
