//! Randomized exact identities over small rational matrices and algebras.

use postlie::catalog::{self, families};
use postlie::exactla::{rat, ratio, Matrix, Rational, Vector};
use postlie::liealg::{check_isomorphism, exp_ad, LieAlgebra, LinearMap, Subspace};
use postlie::postlie::{check_postlie, BilinearProduct, LiePair};
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-4i64..=4, 1i64..=3).prop_map(|(p, q)| ratio(p, q))
}

fn sparse_rational() -> impl Strategy<Value = Rational> {
    prop_oneof![3 => Just(rat(0)), 2 => small_rational()]
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(sparse_rational(), rows * cols)
        .prop_map(move |v| Matrix::from_rows_with_cols(v.chunks(cols).map(<[Rational]>::to_vec).collect(), cols))
}

fn sized_matrix() -> impl Strategy<Value = Matrix> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| matrix(r, c))
}

fn square_pair() -> impl Strategy<Value = (Matrix, Matrix)> {
    (1usize..=4).prop_flat_map(|n| (matrix(n, n), matrix(n, n)))
}

/// Algebras with a nonzero ad-nilpotent ideal, and that ideal's basis indices.
fn nilpotent_setting() -> impl Strategy<Value = (LieAlgebra, Vec<usize>)> {
    prop_oneof![
        Just((families::sl2_ltimes_v2(), vec![3, 4])),
        Just((catalog::algebra("n4").unwrap(), vec![0, 1, 2, 3])),
        Just((families::heisenberg(2), vec![0, 1, 2, 3, 4])),
        Just((families::aff(2), vec![4, 5])),
        Just((families::filiform(5), vec![0, 1, 2, 3, 4])),
    ]
}

fn element_of(idx: Vec<usize>, dim: usize) -> impl Strategy<Value = Vector> {
    prop::collection::vec(small_rational(), idx.len()).prop_map(move |c| {
        let mut v = vec![rat(0); dim];
        for (&i, x) in idx.iter().zip(c) {
            v[i] = x;
        }
        v
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn rank_nullity(m in sized_matrix()) {
        let kernel = m.kernel();
        prop_assert_eq!(m.rank() + kernel.len(), m.cols());
        for v in &kernel {
            prop_assert!(m.mul_vec(v).unwrap().iter().all(|x| *x == rat(0)));
        }
    }

    #[test]
    fn solve_substitution(m in sized_matrix(), seed in prop::collection::vec(small_rational(), 5)) {
        let x0: Vector = seed[..m.cols()].to_vec();
        let b = m.mul_vec(&x0).unwrap();
        let sol = m.solve_affine(&b).unwrap();
        prop_assert_eq!(m.mul_vec(&sol.particular).unwrap(), b.clone());
        for h in &sol.homogeneous {
            prop_assert!(m.mul_vec(h).unwrap().iter().all(|x| *x == rat(0)));
        }
        prop_assert_eq!(sol.homogeneous.len(), m.cols() - m.rank());
        // x0 lies in the affine solution set.
        let diff: Vector = x0.iter().zip(&sol.particular).map(|(a, b)| a - b).collect();
        prop_assert!(Subspace::new(m.cols(), &sol.homogeneous).contains(&diff));
    }

    #[test]
    fn det_is_multiplicative((a, b) in square_pair()) {
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(ab.det().unwrap(), a.det().unwrap() * b.det().unwrap());
        prop_assert_eq!(a.transpose().det().unwrap(), a.det().unwrap());
    }

    #[test]
    fn inverse_when_invertible(m in (1usize..=4).prop_flat_map(|n| matrix(n, n))) {
        match m.inverse().unwrap() {
            Some(inv) => prop_assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(m.rows())),
            None => prop_assert_eq!(m.det().unwrap(), rat(0)),
        }
    }

    #[test]
    fn exp_ad_is_automorphism_with_inverse(
        (g, z) in nilpotent_setting().prop_flat_map(|(g, idx)| {
            let d = g.dim();
            (Just(g), element_of(idx, d))
        })
    ) {
        let phi = exp_ad(&g, &z).unwrap();
        prop_assert!(check_isomorphism(&phi, &g, &g).unwrap());
        let minus: Vector = z.iter().map(|x| -x.clone()).collect();
        let back = exp_ad(&g, &minus).unwrap();
        prop_assert_eq!(phi.compose(&back).unwrap(), LinearMap::identity(g.dim()));
        prop_assert_eq!(phi.det().unwrap(), rat(1));
    }
}

fn small_pair() -> impl Strategy<Value = LiePair> {
    let names = ["r2", "abelian2", "n3", "r3", "r31", "abelian3", "sl2", "heisenberg1"];
    (0..names.len(), 0..names.len())
        .prop_filter("same dimension", move |(a, b)| {
            catalog::algebra(names[*a]).unwrap().dim() == catalog::algebra(names[*b]).unwrap().dim()
        })
        .prop_map(move |(a, b)| LiePair::new(catalog::algebra(names[a]).unwrap(), catalog::algebra(names[b]).unwrap()).unwrap())
}

fn product_on(pair: LiePair) -> impl Strategy<Value = (LiePair, BilinearProduct)> {
    let d = pair.dim();
    prop::collection::vec(prop_oneof![6 => Just(rat(0)), 1 => (-1i64..=1).prop_map(rat)], d * d * d)
        .prop_map(move |flat| (pair.clone(), BilinearProduct::from_flat(d, &flat)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    /// The derivation axiom holds exactly when every left multiplication is a derivation of n,
    /// and the representation axiom exactly when `x ↦ L(x)` is a representation of g.
    #[test]
    fn axiom_equivalences((pair, prod) in small_pair().prop_flat_map(product_on)) {
        let rep = check_postlie(&pair, &prod).unwrap();
        let d = pair.dim();
        let derivs = (0..d).all(|i| pair.n.is_derivation(&prod.left(i)).unwrap());
        prop_assert_eq!(derivs, rep.eq3_ok);
        let mut repn = true;
        for i in 0..d {
            for j in i + 1..d {
                let lhs = prod.left_of(pair.g.structure(i, j)).unwrap();
                repn &= lhs == prod.left(i).commutator(&prod.left(j)).unwrap();
            }
        }
        prop_assert_eq!(repn, rep.eq2_ok);
    }
}
