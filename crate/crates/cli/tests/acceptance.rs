//! Acceptance criteria, one PASS/FAIL line each. Runs without the test harness
//! so the lines always print; exits nonzero if any criterion fails.

use std::process::Command;
use std::time::{Duration, Instant};

use num_traits::Zero;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use postlie::catalog::{self, families};
use postlie::exactla::{rat, ratio, Matrix, Rational, Vector};
use postlie::laj::{parse_span, LajDoc, LajMatrixDoc, LajProductDoc};
use postlie::liealg::{check_isomorphism, direct_sum, exp_ad, LieAlgebra, LinearMap, Subspace};
use postlie::postlie::{
    check_postlie, check_rota_baxter, induced_g, inner_product_from_map, prop52_structure, rb_from_subalgebra_pair,
    BilinearProduct, LiePair,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, what: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn data(stem: &str) -> &'static str {
    catalog::data_file(stem).unwrap_or_else(|| panic!("data file {stem}"))
}

fn algebra_file(stem: &str) -> LieAlgebra {
    LajDoc::parse(data(stem)).and_then(|d| d.to_algebra()).unwrap()
}

fn product_file(stem: &str) -> BilinearProduct {
    LajProductDoc::parse(data(stem)).and_then(|d| d.to_product()).unwrap()
}

fn map_file(stem: &str) -> LinearMap {
    LinearMap::new(LajMatrixDoc::parse(data(stem)).and_then(|d| d.to_matrix()).unwrap())
}

fn cli(args: &[&str], threads: Option<&str>) -> (i32, String, Duration) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_postlie"));
    cmd.args(args);
    if let Some(t) = threads {
        cmd.env("THREADS", t);
    }
    let start = Instant::now();
    let out = cmd.output().expect("binary runs");
    let elapsed = start.elapsed();
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned(), elapsed)
}

/// Bodies of the `#k: ...` solution lines, anchors stripped.
fn solution_bodies(stdout: &str) -> Vec<String> {
    stdout
        .lines()
        .filter(|l| l.starts_with('#'))
        .map(|l| {
            let body = l.split_once(": ").map_or("", |(_, b)| b);
            body.split("  [").next().unwrap_or("").to_string()
        })
        .collect()
}

// Independent oracles: center and derived algebra straight from structure constants.

fn center_dim(g: &LieAlgebra) -> usize {
    let d = g.dim();
    // x is central iff Σ_i x_i c_ij^k = 0 for all j, k.
    let mut rows = Vec::new();
    for j in 0..d {
        for k in 0..d {
            rows.push((0..d).map(|i| g.structure(i, j)[k].clone()).collect::<Vector>());
        }
    }
    d - Matrix::from_rows_with_cols(rows, d).rank()
}

fn derived_dim(g: &LieAlgebra) -> usize {
    let d = g.dim();
    let rows: Vec<Vector> = (0..d).flat_map(|i| (0..d).map(move |j| (i, j))).map(|(i, j)| g.structure(i, j).clone()).collect();
    Matrix::from_rows_with_cols(rows, d).rank()
}

fn span_of(g: &LieAlgebra, idx: &[usize]) -> Subspace {
    let d = g.dim();
    let vs: Vec<Vector> = idx
        .iter()
        .map(|&i| {
            let mut v = vec![rat(0); d];
            v[i] = rat(1);
            v
        })
        .collect();
    Subspace::new(d, &vs)
}

// ---------------------------------------------------------------- criteria

fn c1() -> Outcome {
    let (code, out, _) = cli(&["paper", "verify"], None);
    let summary = out.lines().last().unwrap_or("").to_string();
    ensure(code == 0, format!("exit {code}: {summary}"))?;
    ensure(!out.lines().any(|l| l.starts_with("FAIL")), "a FAIL row was printed")?;
    Ok(summary)
}

fn c2() -> Outcome {
    let pair = LiePair::new(algebra_file("r31"), algebra_file("r3")).unwrap();
    let prod = product_file("ex31-product");
    // e1·e3 = −e2 and nothing else.
    let expected = BilinearProduct::from_entries(3, &[(0, 2, vec![rat(0), rat(-1), rat(0)])]).unwrap();
    ensure(prod == expected, "product file is not e1·e3 = -e2")?;
    let rep = check_postlie(&pair, &prod).unwrap();
    ensure(rep.passed(), rep.summary())?;
    let (fg, fnn) = (pair.g.classify(), pair.n.classify());
    ensure(fg.is_solvable && fnn.is_solvable, "not both solvable")?;
    ensure(fg != fnn, "fingerprints coincide")?;
    let (code, out, _) = cli(&["check", "postlie", "--g", "r31", "--n", "r3", "--prod", "ex31-product"], None);
    ensure(code == 0 && out.contains("§3 Example"), format!("CLI exit {code}"))?;
    Ok(format!("all three axioms pass; dim Der(r31) = {}, dim Der(r3) = {}", fg.dim_derivations, fnn.dim_derivations))
}

fn c3() -> Outcome {
    let n = algebra_file("sl3-paper");
    let phi = map_file("prop43-phi");
    let table = product_file("prop43-product");
    let g_table = algebra_file("prop43-induced-g");
    let f = map_file("prop43-f");
    let target = algebra_file("aff2-plus-aff1");
    let prod = inner_product_from_map(&n, &phi).unwrap();
    ensure(prod == table, "inner product differs from the printed product table")?;
    let (g, jac) = induced_g(&n, &prod).unwrap();
    ensure(jac.passed() && g == g_table, "induced bracket differs from the printed table")?;
    ensure(check_isomorphism(&f, &g, &target).unwrap(), "f is not an isomorphism")?;
    ensure(f.det().unwrap() == rat(-3), "det f != -3")?;
    let det_k = Matrix::det(&n.killing_form()).unwrap();
    ensure(!det_k.is_zero(), "Killing form degenerate")?;
    let fp = n.classify();
    ensure(fp.is_complete && fp.is_semisimple, "sl3 not complete")?;
    let products = table.nonzero_entries().len();
    let brackets = LajDoc::from_algebra(&g_table).brackets.len();
    Ok(format!("{products} product entries, {brackets} brackets as printed; det f = -3; det K = {det_k}"))
}

fn c4() -> Outcome {
    let n = algebra_file("sl2-plus-sl2");
    let basis = n.basis_names().to_vec();
    let n1 = Subspace::new(6, &parse_span(&basis, "e1, e3, e4, e6").unwrap());
    let n2 = Subspace::new(6, &parse_span(&basis, "e2, e3+e5").unwrap());
    let phi = map_file("prop44-phi");
    let r = rb_from_subalgebra_pair(&n, &n1, &n2).unwrap();
    ensure(r == phi, "operator differs from the printed matrix")?;
    ensure(check_rota_baxter(&n, &r, &rat(1)).unwrap().passed, "not Rota-Baxter of weight 1")?;
    let (g, jac) = induced_g(&n, &inner_product_from_map(&n, &r).unwrap()).unwrap();
    ensure(jac.passed(), "induced bracket fails Jacobi")?;
    ensure(g == algebra_file("prop44-induced-g"), "induced bracket differs from the printed table")?;
    let count = LajDoc::from_algebra(&g).brackets.len();
    ensure(count == 4, format!("{count} brackets"))?;
    let ideals = ["e1, e3", "e4, e6", "e2, e3+e5"].map(|s| Subspace::new(6, &parse_span(&basis, s).unwrap()));
    let r2 = algebra_file("r2").classify();
    for s in &ideals {
        ensure(g.is_ideal(s).unwrap(), "not an ideal")?;
        ensure(g.restrict("i", &s.basis()).unwrap().classify() == r2, "ideal is not r2")?;
    }
    for a in 0..3 {
        for b in a + 1..3 {
            ensure(ideals[a].relation(&ideals[b]).unwrap().is_direct, "ideals overlap")?;
        }
    }
    let total = ideals[0].sum(&ideals[1]).unwrap().sum(&ideals[2]).unwrap();
    ensure(total.dim() == 6, "ideals do not span")?;
    // Same operator through the command line.
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("phi.lajm.json");
    let p = path.to_str().unwrap();
    let (code, _, _) = cli(&["build", "from-pair", "--n", "sl2-plus-sl2", "--n1", "e1,e3,e4,e6", "--n2", "e2, e3+e5", "-o", p], None);
    ensure(code == 0, format!("build from-pair exit {code}"))?;
    let built = LajMatrixDoc::parse(&std::fs::read_to_string(&path).unwrap()).unwrap().to_matrix().unwrap();
    ensure(built == *phi.matrix(), "CLI operator differs")?;
    Ok("operator, weight-1 identity, 4 brackets, three r2 ideals".into())
}

fn c5() -> Outcome {
    let mut details = Vec::new();
    for size in [2, 3] {
        let (pair, prod) = prop52_structure(size).unwrap();
        let rep = check_postlie(&pair, &prod).unwrap();
        ensure(rep.passed(), format!("n = {size}: {}", rep.summary()))?;
        let fnn = pair.n.classify();
        ensure(fnn.is_solvable && !fnn.is_nilpotent, format!("n = {size}: n not solvable non-nilpotent"))?;
        let d = pair.dim();
        let (z, dd) = (center_dim(&pair.g), derived_dim(&pair.g));
        ensure(z == 2, format!("n = {size}: center {z}"))?;
        ensure(dd + 2 == d, format!("n = {size}: [g,g] has dim {dd} of {d}"))?;
        ensure(pair.g.classify().dim_center == z, "fingerprint center disagrees with the oracle")?;
        details.push(format!("n={size}: dim {d}, center 2, codim [g,g] 2"));
    }
    Ok(details.join("; "))
}

fn c6() -> Outcome {
    let g = families::sl2_ltimes_v2();
    let z: Vector = vec![rat(0), rat(0), rat(0), rat(1), rat(0)];
    let s1 = span_of(&g, &[0, 1, 2]);
    let s2 = exp_ad(&g, &z).unwrap().image(&s1).unwrap();
    let rel = s1.relation(&s2).unwrap();
    ensure(rel.spans, "s1 + s2 does not span")?;
    let k = rel.intersection.dim();
    // n² − n − 1 with n = 2.
    let expected = 2 * 2 - 2 - 1;
    ensure(k == expected, format!("dim(s1 ∩ s2) = {k}, expected {expected}"))?;
    let fp = g.classify();
    ensure(fp.is_perfect, "not perfect")?;
    let v = span_of(&g, &[3, 4]);
    ensure(g.radical() == v && g.nilradical() == v, "rad or nil differs from V(2)")?;
    Ok("span, dim(s1 ∩ s2) = 1, perfect, rad = nil = V(2)".into())
}

fn c7() -> Outcome {
    let s = families::sl(2);
    let g = direct_sum(&s, &s);
    let s1 = span_of(&g, &[0, 1, 2]);
    let diag: Vec<Vector> = (0..3)
        .map(|i| {
            let mut v = vec![rat(0); 6];
            v[i] = rat(1);
            v[i + 3] = rat(1);
            v
        })
        .collect();
    let s2 = Subspace::new(6, &diag);
    for s in [&s1, &s2] {
        ensure(g.is_subalgebra(s).unwrap(), "not a subalgebra")?;
        ensure(g.restrict("s", &s.basis()).unwrap().is_semisimple(), "not semisimple")?;
    }
    let rel = s1.relation(&s2).unwrap();
    ensure(rel.is_direct && rel.spans, "not a direct spanning sum")?;
    let fp = g.classify();
    ensure(fp.is_semisimple, "ambient not semisimple")?;
    ensure(fp == algebra_file("sl2-plus-sl2").classify(), "fingerprint differs from sl2+sl2")?;
    Ok("direct spanning sum of two sl2 copies; ambient semisimple".into())
}

fn c8() -> Outcome {
    // Hand-derived nilradicals by basis index.
    let table: [(&str, &[usize]); 5] =
        [("r2", &[1]), ("r3", &[1, 2]), ("r31", &[1, 2]), ("n3", &[0, 1, 2]), ("n4", &[0, 1, 2, 3])];
    let mut details = Vec::new();
    for (name, idx) in table {
        let g = catalog::algebra(name).unwrap();
        let nil = g.nilradical();
        ensure(nil == span_of(&g, idx), format!("{name}: nilradical differs from the table"))?;
        let der = g.derivations();
        for d in &der {
            for j in 0..g.dim() {
                ensure(nil.contains(&d.image_of_basis(j)), format!("{name}: a derivation leaves nil"))?;
            }
        }
        details.push(format!("{name}:{}", der.len()));
    }
    Ok(format!("derivation counts {}", details.join(" ")))
}

fn c9() -> Outcome {
    let args = ["search", "postlie", "--g", "r31", "--n", "r3", "--bound", "1"];
    let (code, out1, t1) = cli(&args, Some("1"));
    ensure(code == 0, format!("exit {code}"))?;
    ensure(t1 < Duration::from_secs(60), format!("took {t1:?}"))?;
    let (_, out4, _) = cli(&args, Some("4"));
    ensure(out1 == out4, "output depends on the thread count")?;
    let bodies = solution_bodies(&out1);
    ensure(bodies.iter().any(|b| b == "e1·e3 = -e2"), "e1·e3 = -e2 missing")?;
    let (code, out, t2) = cli(&["search", "postlie", "--g", "abelian3", "--n", "n3", "--bound", "1"], None);
    ensure(code == 0, format!("exit {code}"))?;
    let lr = solution_bodies(&out);
    let pos = lr.iter().position(|b| b == "e2·e1 = e3").ok_or("e2·e1 = e3 missing")?;
    Ok(format!(
        "(r31, r3): {} solutions in {:.2?}; (abelian3, n3): e2·e1 = e3 at #{} in {:.2?}",
        bodies.len(),
        t1,
        pos + 1,
        t2
    ))
}

fn c10() -> Outcome {
    let mut verdicts = Vec::new();
    for (g, n) in [("sl2", "r3"), ("sl2", "n3"), ("gl2", "n4"), ("gl2", "n3+C"), ("gl2", "r2+r2")] {
        let (code, out, t) = cli(&["report", "nonexistence", "--g", g, "--n", n, "--bound", "1"], None);
        ensure(code == 0, format!("({g}, {n}): exit {code}"))?;
        ensure(t < Duration::from_secs(300), format!("({g}, {n}): took {t:?}"))?;
        let verdict = out.lines().find_map(|l| l.strip_prefix("verdict: ")).ok_or("no verdict")?.to_string();
        ensure(!verdict.contains("WITNESS"), format!("({g}, {n}): {verdict}"))?;
        ensure(verdict.starts_with("PROVEN-EMPTY") || verdict.contains("not a proof"), "unlabeled verdict")?;
        verdicts.push(format!("({g},{n}) {verdict}"));
    }
    Ok(verdicts.join("; "))
}

fn c11() -> Outcome {
    let cases = 1000;
    let mut runner = TestRunner::new(Config { cases, failure_persistence: None, ..Config::default() });
    let q = (-4i64..=4, 1i64..=3).prop_map(|(p, q)| ratio(p, q));
    let entry = prop_oneof![3 => Just(rat(0)), 2 => q.clone()];
    let mat = (1usize..=5, 1usize..=5)
        .prop_flat_map(move |(r, c)| (Just(c), prop::collection::vec(entry.clone(), r * c)))
        .prop_map(|(c, v)| Matrix::from_rows_with_cols(v.chunks(c).map(<[Rational]>::to_vec).collect(), c));
    let strategy = (mat, prop::collection::vec(q.clone(), 5));
    runner
        .run(&strategy, |(m, seed)| {
            let kernel = m.kernel();
            prop_assert_eq!(m.rank() + kernel.len(), m.cols());
            let x0: Vector = seed[..m.cols()].to_vec();
            let b = m.mul_vec(&x0).unwrap();
            let sol = m.solve_affine(&b).unwrap();
            prop_assert_eq!(m.mul_vec(&sol.particular).unwrap(), b);
            Ok(())
        })
        .map_err(|e| format!("linear algebra: {e}"))?;

    let settings = [(families::sl2_ltimes_v2(), vec![3usize, 4]),
        (catalog::algebra("n4").unwrap(), vec![0, 1, 2, 3]),
        (families::heisenberg(2), vec![0, 1, 2, 3, 4]),
        (families::aff(2), vec![4, 5])];
    let mut runner = TestRunner::new(Config { cases, failure_persistence: None, ..Config::default() });
    let strategy = (0..settings.len(), prop::collection::vec(q, 5));
    let mut witnesses = 0usize;
    runner
        .run(&strategy, |(k, coeffs)| {
            let (g, idx) = &settings[k];
            let mut z = vec![rat(0); g.dim()];
            for (&i, c) in idx.iter().zip(coeffs) {
                z[i] = c;
            }
            let phi = exp_ad(g, &z).unwrap();
            prop_assert!(check_isomorphism(&phi, g, g).unwrap());
            let minus: Vector = z.iter().map(|x| -x.clone()).collect();
            prop_assert_eq!(phi.compose(&exp_ad(g, &minus).unwrap()).unwrap(), LinearMap::identity(g.dim()));
            Ok(())
        })
        .map_err(|e| format!("exp(ad z): {e}"))?;

    // The derivation axiom ⟺ derivations and the representation axiom ⟺ representation on every fixture structure.
    let structures = catalog::known_structures();
    for k in structures {
        let (pair, prod) = (&k.pair, &k.product);
        let rep = check_postlie(pair, prod).unwrap();
        let d = pair.dim();
        let derivs = (0..d).all(|i| pair.n.is_derivation(&prod.left(i)).unwrap());
        ensure(derivs == rep.eq3_ok, format!("{}: derivation-axiom equivalence", k.fixture))?;
        let mut repn = true;
        for i in 0..d {
            for j in i + 1..d {
                repn &= prod.left_of(pair.g.structure(i, j)).unwrap() == prod.left(i).commutator(&prod.left(j)).unwrap();
            }
        }
        ensure(repn == rep.eq2_ok, format!("{}: representation-axiom equivalence", k.fixture))?;
    }

    // Every verified isomorphism witness has matching fingerprints.
    let g43 = algebra_file("prop43-induced-g");
    let target = algebra_file("aff2-plus-aff1");
    let sum = direct_sum(&families::aff(2), &families::aff(1));
    let mut aff_witness = Matrix::identity(8);
    aff_witness[(6, 6)] = rat(0);
    aff_witness[(7, 7)] = rat(0);
    aff_witness[(7, 6)] = rat(1);
    aff_witness[(6, 7)] = rat(-1);
    let isos = [
        (map_file("prop43-f"), &g43, &target),
        (LinearMap::new(aff_witness), &target, &sum),
        (exp_ad(&families::sl2_ltimes_v2(), &[rat(0), rat(0), rat(0), rat(1), rat(0)]).unwrap(), &families::sl2_ltimes_v2(), &families::sl2_ltimes_v2()),
    ];
    for (f, a, b) in &isos {
        ensure(check_isomorphism(f, a, b).unwrap(), "witness is not an isomorphism")?;
        ensure(a.classify() == b.classify(), "isomorphic algebras with different fingerprints")?;
        witnesses += 1;
    }
    Ok(format!(
        "{cases} linear-algebra cases, {cases} exp(ad z) cases, {} fixture structures, {witnesses} isomorphism witnesses",
        structures.len()
    ))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("paper verify", c1),
        ("§3 Example", c2),
        ("Prop. 4.3", c3),
        ("Prop. 4.4", c4),
        ("Prop. 5.2", c5),
        ("Remark after Thm. 2.6", c6),
        ("Thm. 2.6 sanity", c7),
        ("Thm. 5.1 derivations", c8),
        ("solver rediscovery", c9),
        ("rigidity spot checks", c10),
        ("property suites", c11),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let t = start.elapsed();
        match result {
            Ok(detail) => println!("PASS criterion {:>2} [{name}] ({t:.2?}): {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {:>2} [{name}] ({t:.2?}): {why}", k + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
