use postlie::catalog;
use postlie::exactla::rat;
use postlie::liealg::LinearMap;
use postlie::postlie::LiePair;
use postlie::solver::{nonexistence_report, search_postlie, search_rb, Ansatz, SearchOutcome, SupportMask};

fn pair(g: &str, n: &str) -> LiePair {
    LiePair::new(catalog::algebra(g).unwrap(), catalog::algebra(n).unwrap()).unwrap()
}

fn products(p: &LiePair, ansatz: &Ansatz) -> Vec<Vec<postlie::Rational>> {
    match search_postlie(p, ansatz).unwrap() {
        SearchOutcome::LinearInconsistent => Vec::new(),
        SearchOutcome::Searched(set) => set.solutions.into_iter().map(|s| s.product.flatten()).collect(),
    }
}

#[test]
fn output_does_not_depend_on_thread_count() {
    let p = pair("r31", "r3");
    let a = Ansatz::default();
    let one = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap().install(|| products(&p, &a));
    let four = rayon::ThreadPoolBuilder::new().num_threads(4).build().unwrap().install(|| products(&p, &a));
    assert!(!one.is_empty());
    assert_eq!(one, four);
}

#[test]
fn semisimple_g_with_different_n_has_no_structure() {
    for (g, n) in [("sl2", "r3"), ("sl2", "n3"), ("sl2", "r31"), ("sl2", "abelian3"), ("sl2", "r2+C")] {
        let p = pair(g, n);
        assert_ne!(p.g.classify(), p.n.classify());
        let rep = nonexistence_report(&p, &Ansatz::default()).unwrap();
        assert!(rep.witness.is_none(), "({g}, {n}): {}", rep.verdict);
    }
}

#[test]
fn equal_pair_has_zero_witness() {
    let rep = nonexistence_report(&pair("sl2", "sl2"), &Ansatz::default()).unwrap();
    assert!(rep.verdict.has_witness());
    assert!(rep.witness.unwrap().product.is_zero());
}

#[test]
fn rb_search_contains_zero_and_minus_identity() {
    let diagonal = SupportMask::parse(r#"{"nonzero": [["x", "x"], ["y", "y"], ["h", "h"]]}"#).unwrap();
    for (name, support) in [("r2", None), ("sl2", Some(diagonal))] {
        let n = catalog::algebra(name).unwrap();
        let found = search_rb(&n, &Ansatz { support, ..Ansatz::default() }).unwrap();
        assert!(found.exhausted, "{name}");
        let ops: Vec<&LinearMap> = found.solutions.iter().map(|s| &s.operator).collect();
        assert!(ops.contains(&&LinearMap::zero(n.dim(), n.dim())), "{name}");
        assert!(ops.contains(&&LinearMap::identity(n.dim()).neg()), "{name}");
    }
}

#[test]
fn rb_search_with_mask_recovers_subalgebra_pair_operator() {
    let n = catalog::algebra("sl2-plus-sl2").unwrap();
    let mask = SupportMask::parse(r#"{"nonzero": [["e2", "e2"], ["e3", "e5"], ["e5", "e5"]]}"#).unwrap();
    let ansatz = Ansatz { support: Some(mask), ..Ansatz::default() };
    let found = search_rb(&n, &ansatz).unwrap();
    let mut phi = postlie::Matrix::zeros(6, 6);
    for (r, c) in [(1, 1), (2, 4), (4, 4)] {
        phi[(r, c)] = rat(-1);
    }
    assert!(found.exhausted);
    assert!(found.solutions.iter().any(|s| *s.operator.matrix() == phi));
}

#[test]
fn full_operator_grid_on_six_dimensions_hits_the_cap() {
    let n = catalog::algebra("sl2-plus-sl2").unwrap();
    assert!(search_rb(&n, &Ansatz::default()).is_err());
}
