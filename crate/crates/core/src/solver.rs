//! Exact search for post-Lie structures and weight-1 Rota-Baxter operators.
//!
//! The commutator and derivation axioms are affine in the product tensor and are solved exactly
//! (the linear stage). The representation axiom is quadratic; it is written as polynomials in the
//! free parameters of the linear stage and enumerated over a bounded grid. The
//! polynomials are first brought to echelon form with monomials ordered by
//! their highest variable, so every constraint is tested as soon as its last
//! variable is assigned and constraints linear in that variable fix it
//! outright. Every hit is re-verified with the exact axiom checks.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::{Matrix, Rational, Vector};
use crate::liealg::{Fingerprint, LieAlgebra, LinearMap};
use crate::postlie::{
    check_postlie, check_rota_baxter, induced_g, inner_product_from_map, AxiomReport, BilinearProduct, LiePair,
};

/// Entries allowed to be nonzero. A product entry is `[left, right, component]`,
/// an operator entry is `[row, column]`, all given by basis label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SupportMask {
    pub nonzero: Vec<Vec<String>>,
}

impl SupportMask {
    pub fn parse(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    fn indices(&self, basis: &[String], arity: usize) -> Result<HashSet<Vec<usize>>> {
        let idx = |l: &String| {
            basis.iter().position(|b| b == l).ok_or_else(|| Error::UnknownBasisLabel(l.clone()))
        };
        self.nonzero
            .iter()
            .map(|e| {
                if e.len() != arity {
                    return Err(Error::Format(format!(
                        "support entry {e:?} should have {arity} labels"
                    )));
                }
                e.iter().map(idx).collect()
            })
            .collect()
    }
}

/// Search policy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ansatz {
    pub coefficient_bound: u32,
    pub denominators: Vec<u32>,
    pub max_solutions: usize,
    pub parameter_cap: usize,
    pub support: Option<SupportMask>,
}

impl Default for Ansatz {
    fn default() -> Self {
        Ansatz {
            coefficient_bound: 1,
            denominators: vec![1, 2],
            max_solutions: 1000,
            parameter_cap: 30,
            support: None,
        }
    }
}

impl Ansatz {
    pub fn with_bound(bound: u32) -> Self {
        Ansatz { coefficient_bound: bound, ..Self::default() }
    }

    fn validate(&self) -> Result<()> {
        if self.denominators.is_empty() || self.denominators.contains(&0) {
            return Err(Error::InvalidArgument("denominators must be nonempty and positive".into()));
        }
        Ok(())
    }

    /// Grid values `a/d`, `|a| ≤ B·d`, in search order: zero first, then by
    /// absolute value with the positive value before the negative one.
    pub fn grid_values(&self) -> Result<Vec<Rational>> {
        self.validate()?;
        let scale = self.scale();
        Ok(self.scaled_grid()?.into_iter().map(|s| Rational::new(s.into(), scale.into())).collect())
    }

    fn scale(&self) -> i64 {
        self.denominators.iter().fold(1i64, |acc, &d| acc.lcm(&(d as i64)))
    }

    fn scaled_grid(&self) -> Result<Vec<i64>> {
        self.validate()?;
        let scale = self.scale();
        let bound = self.coefficient_bound as i64;
        if bound.checked_mul(scale).is_none_or(|x| x > 1 << 20) {
            return Err(Error::InvalidArgument("grid too fine for exact enumeration".into()));
        }
        let mut set = HashSet::new();
        for &d in &self.denominators {
            let d = d as i64;
            for a in -bound * d..=bound * d {
                set.insert(a * (scale / d));
            }
        }
        let mut v: Vec<i64> = set.into_iter().collect();
        v.sort_by_key(|&s| (s.abs(), s < 0));
        Ok(v)
    }
}

/// Solutions of the commutator and derivation axioms: `particular + span(homogeneous_basis)`,
/// vectors indexed by `(i * dim + j) * dim + k` for the `e_k` coefficient of `e_i · e_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineSolutionSpace {
    pub particular: Vector,
    pub homogeneous_basis: Vec<Vector>,
    pub dim: usize,
}

/// Assembles the commutator axiom (all `i < j`) and the derivation axiom (all triples), plus zero constraints
/// from the support mask. `None` means the system is inconsistent, which proves
/// that no post-Lie structure exists on the pair.
pub fn linear_stage(pair: &LiePair, support: Option<&SupportMask>) -> Result<Option<AffineSolutionSpace>> {
    let d = pair.dim();
    let unknowns = d * d * d;
    let at = |i: usize, j: usize, k: usize| (i * d + j) * d + k;
    let mut rows: Vec<Vector> = Vec::new();
    let mut rhs: Vec<Rational> = Vec::new();
    for i in 0..d {
        for j in i + 1..d {
            let target = crate::exactla::sub_vec(pair.g.structure(i, j), pair.n.structure(i, j));
            for (l, t) in target.into_iter().enumerate() {
                let mut row = vec![Rational::zero(); unknowns];
                row[at(i, j, l)] += Rational::one();
                row[at(j, i, l)] -= Rational::one();
                rows.push(row);
                rhs.push(t);
            }
        }
    }
    // e_i·{e_j,e_k} − {e_i·e_j, e_k} − {e_j, e_i·e_k} = 0, coordinate l.
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                for l in 0..d {
                    let mut row = vec![Rational::zero(); unknowns];
                    for (m, c) in pair.n.structure(j, k).iter().enumerate() {
                        if !c.is_zero() {
                            row[at(i, m, l)] += c;
                        }
                    }
                    for m in 0..d {
                        let c = &pair.n.structure(m, k)[l];
                        if !c.is_zero() {
                            row[at(i, j, m)] -= c;
                        }
                        let c = &pair.n.structure(j, m)[l];
                        if !c.is_zero() {
                            row[at(i, k, m)] -= c;
                        }
                    }
                    if row.iter().any(|x| !x.is_zero()) {
                        rows.push(row);
                        rhs.push(Rational::zero());
                    }
                }
            }
        }
    }
    if let Some(mask) = support {
        let allowed = mask.indices(pair.g.basis_names(), 3)?;
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    if !allowed.contains(&vec![i, j, k]) {
                        let mut row = vec![Rational::zero(); unknowns];
                        row[at(i, j, k)] = Rational::one();
                        rows.push(row);
                        rhs.push(Rational::zero());
                    }
                }
            }
        }
    }
    let m = Matrix::from_rows_with_cols(rows, unknowns);
    match m.solve_affine(&rhs) {
        Ok(sol) => {
            let dim = sol.homogeneous.len();
            Ok(Some(AffineSolutionSpace { particular: sol.particular, homogeneous_basis: sol.homogeneous, dim }))
        }
        Err(Error::Inconsistent) => Ok(None),
        Err(e) => Err(e),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
enum Mono {
    Quad(usize, usize),
    Lin(usize),
}

/// Affine form `c + Σ lin[v]·t_v`.
#[derive(Debug, Clone, Default)]
struct Affine {
    c: Rational,
    lin: BTreeMap<usize, Rational>,
}

impl Affine {
    fn is_zero(&self) -> bool {
        self.c.is_zero() && self.lin.is_empty()
    }
}

/// Quadratic polynomial; `None` is the constant monomial.
#[derive(Debug, Clone, Default)]
struct Poly {
    terms: BTreeMap<Option<Mono>, Rational>,
}

impl Poly {
    fn add(&mut self, m: Option<Mono>, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    fn add_affine(&mut self, s: &Rational, a: &Affine) {
        self.add(None, s * &a.c);
        for (&v, c) in &a.lin {
            self.add(Some(Mono::Lin(v)), s * c);
        }
    }

    fn add_product(&mut self, s: &Rational, a: &Affine, b: &Affine) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        self.add(None, s * &a.c * &b.c);
        for (&v, c) in &a.lin {
            self.add(Some(Mono::Lin(v)), s * c * &b.c);
        }
        for (&v, c) in &b.lin {
            self.add(Some(Mono::Lin(v)), s * c * &a.c);
        }
        for (&u, cu) in &a.lin {
            for (&v, cv) in &b.lin {
                let (x, y) = if u <= v { (u, v) } else { (v, u) };
                self.add(Some(Mono::Quad(x, y)), s * cu * cv);
            }
        }
    }
}

/// Column order for elimination: blocks by descending highest variable; inside
/// block `v` the square `t_v²` first, then `t_a·t_v` for descending `a`, then
/// `t_v`; the constant last.
fn column_key(m: Option<Mono>, vars: usize) -> (usize, usize) {
    match m {
        None => (vars, 0),
        Some(Mono::Quad(a, b)) => (vars - 1 - b, b - a),
        Some(Mono::Lin(v)) => (vars - 1 - v, v + 1),
    }
}

/// A polynomial keyed by column order.
type EchelonRow = BTreeMap<(usize, usize), (Option<Mono>, Rational)>;
/// An integer row attached to its highest variable.
type IntRow = (usize, Vec<(Option<Mono>, BigInt)>);

/// Sparse echelon basis of the row space of the polynomials.
fn echelon(polys: Vec<Poly>, vars: usize) -> Vec<EchelonRow> {
    let mut pivots: BTreeMap<(usize, usize), EchelonRow> = BTreeMap::new();
    for p in polys {
        let mut row: EchelonRow =
            p.terms.into_iter().map(|(m, c)| (column_key(m, vars), (m, c))).collect();
        while let Some((&lead, (_, lc))) = row.iter().next() {
            let Some(prow) = pivots.get(&lead) else {
                let inv = lc.recip();
                for (_, c) in row.values_mut() {
                    *c *= &inv;
                }
                pivots.insert(lead, row);
                break;
            };
            let factor = lc.clone();
            for (k, (m, c)) in prow {
                let e = row.entry(*k).or_insert_with(|| (*m, Rational::zero()));
                e.1 -= &factor * c;
                if e.1.is_zero() {
                    row.remove(k);
                }
            }
        }
    }
    pivots.into_values().collect()
}

/// Integer arithmetic used on the scaled grid: `i128` when the magnitudes are
/// provably safe, `BigInt` otherwise.
trait GridInt: Integer + Signed + ToPrimitive + Clone + Send + Sync + fmt::Debug {
    fn from_big(b: &BigInt) -> Self;
    fn from_i64(x: i64) -> Self;
}

impl GridInt for i128 {
    fn from_big(b: &BigInt) -> Self {
        b.to_i128().expect("magnitude checked before choosing i128")
    }
    fn from_i64(x: i64) -> Self {
        x as i128
    }
}

impl GridInt for BigInt {
    fn from_big(b: &BigInt) -> Self {
        b.clone()
    }
    fn from_i64(x: i64) -> Self {
        BigInt::from(x)
    }
}

/// One constraint whose highest variable is `v`, scaled by `D²` so that every
/// term is an integer in the scaled grid coordinates `s = D·t`.
#[derive(Debug, Clone)]
struct Constraint<T> {
    constant: T,
    lower_lin: Vec<(usize, T)>,
    lower_quad: Vec<(usize, usize, T)>,
    beta_lin: T,
    beta_quad: Vec<(usize, T)>,
    gamma: T,
}

impl<T: GridInt> Constraint<T> {
    /// `(α, β, γ)` of `α + β·s_v + γ·s_v²` for the assigned prefix.
    fn coefficients(&self, s: &[T]) -> (T, T, T) {
        let mut alpha = self.constant.clone();
        for (a, w) in &self.lower_lin {
            alpha = alpha + w.clone() * s[*a].clone();
        }
        for (a, b, w) in &self.lower_quad {
            alpha = alpha + w.clone() * s[*a].clone() * s[*b].clone();
        }
        let mut beta = self.beta_lin.clone();
        for (a, w) in &self.beta_quad {
            beta = beta + w.clone() * s[*a].clone();
        }
        (alpha, beta, self.gamma.clone())
    }
}

#[derive(Debug, Clone)]
struct Engine<T> {
    vars: usize,
    grid: Vec<T>,
    blocks: Vec<Vec<Constraint<T>>>,
}

enum Prepared {
    Inconsistent,
    Small(Engine<i128>),
    Big(Engine<BigInt>),
}

fn lcm_denominators(row: &EchelonRow) -> BigInt {
    row.values().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()))
}

fn prepare(polys: Vec<Poly>, vars: usize, ansatz: &Ansatz) -> Result<Prepared> {
    let scaled = ansatz.scaled_grid()?;
    let scale = BigInt::from(ansatz.scale());
    let rows = echelon(polys, vars);
    let mut big_rows: Vec<IntRow> = Vec::new();
    for row in rows {
        let (&lead, _) = row.iter().next().expect("echelon rows are nonzero");
        if lead.0 == vars {
            return Ok(Prepared::Inconsistent);
        }
        let v = vars - 1 - lead.0;
        let l = lcm_denominators(&row);
        let terms = row
            .into_values()
            .map(|(m, c)| {
                let int = (c * Rational::from_integer(l.clone())).to_integer();
                let weight = match m {
                    None => int * &scale * &scale,
                    Some(Mono::Lin(_)) => int * &scale,
                    Some(Mono::Quad(..)) => int,
                };
                (m, weight)
            })
            .collect();
        big_rows.push((v, terms));
    }
    let limit = BigInt::from(1u64 << 60);
    let small = big_rows.iter().all(|(_, t)| t.iter().all(|(_, w)| w.abs() < limit))
        && big_rows.iter().map(|(_, t)| t.len()).max().unwrap_or(0) < (1 << 20);
    if small {
        Ok(Prepared::Small(build_engine(vars, &scaled, &big_rows)))
    } else {
        Ok(Prepared::Big(build_engine(vars, &scaled, &big_rows)))
    }
}

fn build_engine<T: GridInt>(
    vars: usize,
    scaled: &[i64],
    rows: &[IntRow],
) -> Engine<T> {
    let mut blocks: Vec<Vec<Constraint<T>>> = vec![Vec::new(); vars];
    for (v, terms) in rows {
        let v = *v;
        let mut c = Constraint {
            constant: T::zero(),
            lower_lin: Vec::new(),
            lower_quad: Vec::new(),
            beta_lin: T::zero(),
            beta_quad: Vec::new(),
            gamma: T::zero(),
        };
        for (m, w) in terms {
            let w = T::from_big(w);
            match *m {
                None => c.constant = w,
                Some(Mono::Lin(a)) if a == v => c.beta_lin = w,
                Some(Mono::Lin(a)) => c.lower_lin.push((a, w)),
                Some(Mono::Quad(a, b)) if a == v && b == v => c.gamma = w,
                Some(Mono::Quad(a, b)) if b == v => c.beta_quad.push((a, w)),
                Some(Mono::Quad(a, b)) => c.lower_quad.push((a, b, w)),
            }
        }
        blocks[v].push(c);
    }
    Engine { vars, grid: scaled.iter().map(|&s| T::from_i64(s)).collect(), blocks }
}

impl<T: GridInt> Engine<T> {
    /// Admissible scaled values for variable `depth` given the prefix.
    fn candidates(&self, s: &[T]) -> Vec<T> {
        let depth = s.len();
        let coeffs: Vec<(T, T, T)> = self.blocks[depth].iter().map(|c| c.coefficients(s)).collect();
        let mut forced: Option<T> = None;
        for (alpha, beta, gamma) in &coeffs {
            if gamma.is_zero() {
                if beta.is_zero() {
                    if !alpha.is_zero() {
                        return Vec::new();
                    }
                } else {
                    let (q, r) = (-alpha.clone()).div_rem(beta);
                    if !r.is_zero() {
                        return Vec::new();
                    }
                    match &forced {
                        Some(f) if *f != q => return Vec::new(),
                        _ => forced = Some(q),
                    }
                }
            }
        }
        let pool: Vec<T> = match forced {
            Some(f) => {
                let in_grid = self.grid.contains(&f);
                if in_grid {
                    vec![f]
                } else {
                    Vec::new()
                }
            }
            None => self.grid.clone(),
        };
        pool.into_iter()
            .filter(|x| {
                coeffs.iter().all(|(a, b, g)| {
                    (a.clone() + b.clone() * x.clone() + g.clone() * x.clone() * x.clone()).is_zero()
                })
            })
            .collect()
    }

    /// Depth-first enumeration below `prefix`, stopping after `limit` leaves.
    fn enumerate(&self, prefix: &mut Vec<T>, limit: usize, out: &mut Vec<Vec<T>>) {
        if out.len() >= limit {
            return;
        }
        if prefix.len() == self.vars {
            out.push(prefix.clone());
            return;
        }
        for x in self.candidates(prefix) {
            prefix.push(x);
            self.enumerate(prefix, limit, out);
            prefix.pop();
            if out.len() >= limit {
                return;
            }
        }
    }

    /// Prefixes used as parallel blocks, in search order.
    fn split(&self) -> Vec<Vec<T>> {
        let target = 4 * rayon::current_num_threads().max(1);
        let mut level: Vec<Vec<T>> = vec![Vec::new()];
        let mut depth = 0;
        while depth < self.vars && level.len() < target && depth < 4 {
            let mut next = Vec::new();
            for p in &level {
                for x in self.candidates(p) {
                    let mut q = p.clone();
                    q.push(x);
                    next.push(q);
                }
            }
            level = next;
            depth += 1;
        }
        level
    }

    /// All grid points satisfying every constraint, up to `limit`, in search order.
    /// The flag is true when the grid was fully covered.
    fn solve(&self, limit: usize) -> (Vec<Vec<i64>>, bool) {
        let per_block = limit.saturating_add(1);
        let blocks: Vec<Vec<Vec<T>>> = self
            .split()
            .into_par_iter()
            .map(|p| {
                let mut prefix = p;
                let mut out = Vec::new();
                self.enumerate(&mut prefix, per_block, &mut out);
                out
            })
            .collect();
        let mut all: Vec<Vec<i64>> = Vec::new();
        let mut exhausted = true;
        for b in blocks {
            for point in b {
                if all.len() == limit {
                    exhausted = false;
                    break;
                }
                all.push(point.iter().map(to_i64).collect());
            }
            if !exhausted {
                break;
            }
        }
        (all, exhausted)
    }
}

fn to_i64<T: GridInt>(x: &T) -> i64 {
    x.to_i64().expect("grid values are bounded by 2^20")
}

/// A verified post-Lie structure.
#[derive(Debug, Clone)]
pub struct Solution {
    pub product: BilinearProduct,
    pub parameters: Vector,
    pub report: AxiomReport,
    pub induced_fingerprint: Fingerprint,
}

#[derive(Debug, Clone)]
pub struct SolutionSet {
    pub solutions: Vec<Solution>,
    pub exhausted: bool,
    pub parameters: usize,
    /// Set when an exact linear combination of the representation-axiom polynomials is a
    /// nonzero constant, so no structure exists over any field extension.
    pub quadratic_inconsistent: bool,
}

/// Affine forms of every product coordinate in the space's parameters.
fn product_forms(space: &AffineSolutionSpace) -> Vec<Affine> {
    let n = space.particular.len();
    (0..n)
        .map(|idx| Affine {
            c: space.particular[idx].clone(),
            lin: space
                .homogeneous_basis
                .iter()
                .enumerate()
                .filter(|(_, h)| !h[idx].is_zero())
                .map(|(v, h)| (v, h[idx].clone()))
                .collect(),
        })
        .collect()
}

/// The representation axiom as polynomials: `[e_i,e_j]·e_k − e_i·(e_j·e_k) + e_j·(e_i·e_k)`, `i < j`.
fn eq2_polys(pair: &LiePair, forms: &[Affine]) -> Vec<Poly> {
    let d = pair.dim();
    let p = |i: usize, j: usize, k: usize| &forms[(i * d + j) * d + k];
    let one = Rational::one();
    let minus = -Rational::one();
    let mut out = Vec::new();
    for i in 0..d {
        for j in i + 1..d {
            for k in 0..d {
                for l in 0..d {
                    let mut poly = Poly::default();
                    for (m, c) in pair.g.structure(i, j).iter().enumerate() {
                        if !c.is_zero() {
                            poly.add_affine(c, p(m, k, l));
                        }
                    }
                    for m in 0..d {
                        poly.add_product(&minus, p(j, k, m), p(i, m, l));
                        poly.add_product(&one, p(i, k, m), p(j, m, l));
                    }
                    if !poly.terms.is_empty() {
                        out.push(poly);
                    }
                }
            }
        }
    }
    out
}

fn scaled_to_rational(s: &[i64], scale: i64) -> Vector {
    s.iter().map(|&x| Rational::new(x.into(), scale.into())).collect()
}

fn run_engine(polys: Vec<Poly>, vars: usize, ansatz: &Ansatz) -> Result<Option<(Vec<Vec<i64>>, bool)>> {
    Ok(match prepare(polys, vars, ansatz)? {
        Prepared::Inconsistent => None,
        Prepared::Small(e) => Some(e.solve(ansatz.max_solutions)),
        Prepared::Big(e) => Some(e.solve(ansatz.max_solutions)),
    })
}

/// Enumerates the grid over the parameters of `space` and keeps the points
/// satisfying the representation axiom. Every returned product is re-checked against all axioms.
pub fn grid_search(pair: &LiePair, space: &AffineSolutionSpace, ansatz: &Ansatz) -> Result<SolutionSet> {
    ansatz.validate()?;
    if space.dim > ansatz.parameter_cap {
        return Err(Error::ParameterCap { dim: space.dim, cap: ansatz.parameter_cap });
    }
    let forms = product_forms(space);
    let polys = eq2_polys(pair, &forms);
    let Some((points, exhausted)) = run_engine(polys, space.dim, ansatz)? else {
        return Ok(SolutionSet { solutions: Vec::new(), exhausted: true, parameters: space.dim, quadratic_inconsistent: true });
    };
    let d = pair.dim();
    let scale = ansatz.scale();
    let fingerprint = pair.g.classify();
    let mut solutions = Vec::with_capacity(points.len());
    for s in points {
        let t = scaled_to_rational(&s, scale);
        let mut flat = space.particular.clone();
        for (tv, h) in t.iter().zip(&space.homogeneous_basis) {
            if !tv.is_zero() {
                crate::exactla::axpy(&mut flat, tv, h);
            }
        }
        let product = BilinearProduct::from_flat(d, &flat);
        let report = check_postlie(pair, &product)?;
        let (induced, jac) = induced_g(&pair.n, &product)?;
        if !report.passed() || !jac.passed() || induced != pair.g {
            return Err(Error::NotPostLie(format!("grid hit failed re-verification: {}", report.summary())));
        }
        // The commutator axiom makes the induced algebra equal to g, so its fingerprint is g's.
        solutions.push(Solution { product, parameters: t, report, induced_fingerprint: fingerprint.clone() });
    }
    Ok(SolutionSet { solutions, exhausted, parameters: space.dim, quadratic_inconsistent: false })
}

/// Outcome of a full post-Lie search on a pair.
#[derive(Debug, Clone)]
pub enum SearchOutcome {
    LinearInconsistent,
    Searched(SolutionSet),
}

pub fn search_postlie(pair: &LiePair, ansatz: &Ansatz) -> Result<SearchOutcome> {
    match linear_stage(pair, ansatz.support.as_ref())? {
        None => Ok(SearchOutcome::LinearInconsistent),
        Some(space) => Ok(SearchOutcome::Searched(grid_search(pair, &space, ansatz)?)),
    }
}

/// A verified weight-1 Rota-Baxter operator. `induced_fingerprint` is `None`
/// only if the induced bracket fails Jacobi, which the weight-1 identity rules out.
#[derive(Debug, Clone)]
pub struct RbSolution {
    pub operator: LinearMap,
    pub induced_fingerprint: Option<Fingerprint>,
}

#[derive(Debug, Clone)]
pub struct RbSearch {
    pub solutions: Vec<RbSolution>,
    pub exhausted: bool,
    pub parameters: usize,
}

/// Grid search for `R` with `{Rx,Ry} = R({Rx,y} + {x,Ry} + {x,y})`. The unknowns
/// are the entries allowed by the support mask, or all `dim²` entries.
pub fn search_rb(n: &LieAlgebra, ansatz: &Ansatz) -> Result<RbSearch> {
    ansatz.validate()?;
    let d = n.dim();
    let mut entries: Vec<(usize, usize)> = Vec::new();
    match &ansatz.support {
        Some(mask) => {
            let allowed = mask.indices(n.basis_names(), 2)?;
            for c in 0..d {
                for r in 0..d {
                    if allowed.contains(&vec![r, c]) {
                        entries.push((r, c));
                    }
                }
            }
        }
        None => {
            for c in 0..d {
                for r in 0..d {
                    entries.push((r, c));
                }
            }
        }
    }
    let vars = entries.len();
    if vars > ansatz.parameter_cap {
        return Err(Error::ParameterCap { dim: vars, cap: ansatz.parameter_cap });
    }
    let var_of: HashMap<(usize, usize), usize> = entries.iter().enumerate().map(|(v, &e)| (e, v)).collect();
    let r_form = |r: usize, c: usize| -> Affine {
        let mut a = Affine::default();
        if let Some(&v) = var_of.get(&(r, c)) {
            a.lin.insert(v, Rational::one());
        }
        a
    };
    let r_forms: Vec<Vec<Affine>> = (0..d).map(|r| (0..d).map(|c| r_form(r, c)).collect()).collect();
    let one = Rational::one();
    let mut polys = Vec::new();
    for i in 0..d {
        for j in i + 1..d {
            // w = {Re_i, e_j} + {e_i, Re_j} + {e_i, e_j}, as affine forms per coordinate.
            let mut w: Vec<Affine> = vec![Affine::default(); d];
            for (l, wl) in w.iter_mut().enumerate() {
                wl.c = n.structure(i, j)[l].clone();
                for a in 0..d {
                    let c1 = &n.structure(a, j)[l];
                    let c2 = &n.structure(i, a)[l];
                    for (c, rf) in [(c1, &r_forms[a][i]), (c2, &r_forms[a][j])] {
                        if c.is_zero() {
                            continue;
                        }
                        for (&v, x) in &rf.lin {
                            let e = wl.lin.entry(v).or_insert_with(Rational::zero);
                            *e += c * x;
                        }
                    }
                }
                wl.lin.retain(|_, x| !x.is_zero());
            }
            for l in 0..d {
                let mut poly = Poly::default();
                // {Re_i, Re_j}_l = Σ R_ai R_bj {e_a, e_b}_l
                for a in 0..d {
                    for b in 0..d {
                        let c = &n.structure(a, b)[l];
                        if !c.is_zero() {
                            poly.add_product(c, &r_forms[a][i], &r_forms[b][j]);
                        }
                    }
                }
                // − (R w)_l = − Σ_m R_lm w_m
                for (m, wm) in w.iter().enumerate() {
                    poly.add_product(&-one.clone(), &r_forms[l][m], wm);
                }
                if !poly.terms.is_empty() {
                    polys.push(poly);
                }
            }
        }
    }
    let Some((points, exhausted)) = run_engine(polys, vars, ansatz)? else {
        return Ok(RbSearch { solutions: Vec::new(), exhausted: true, parameters: vars });
    };
    let scale = ansatz.scale();
    let mut solutions = Vec::with_capacity(points.len());
    for s in points {
        let t = scaled_to_rational(&s, scale);
        let mut m = Matrix::zeros(d, d);
        for (&(r, c), tv) in entries.iter().zip(&t) {
            m[(r, c)] = tv.clone();
        }
        let operator = LinearMap::new(m);
        if !check_rota_baxter(n, &operator, &one)?.passed {
            return Err(Error::InvalidArgument("grid hit failed Rota-Baxter re-verification".into()));
        }
        let prod = inner_product_from_map(n, &operator)?;
        let (g, jac) = induced_g(n, &prod)?;
        let induced_fingerprint = jac.passed().then(|| g.classify());
        solutions.push(RbSolution { operator, induced_fingerprint });
    }
    Ok(RbSearch { solutions, exhausted, parameters: vars })
}

/// Classification of a non-existence run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// The commutator and derivation axioms have no common solution: a proof.
    ProvenEmptyLinear,
    /// A linear combination of the representation-axiom polynomials is a nonzero constant: a proof.
    ProvenEmptyQuadratic,
    /// Nothing on the grid with the given bound: evidence only.
    GridEmpty { bound: u32 },
    WitnessFound,
}

impl Verdict {
    pub fn is_proof(&self) -> bool {
        matches!(self, Verdict::ProvenEmptyLinear | Verdict::ProvenEmptyQuadratic)
    }

    pub fn has_witness(&self) -> bool {
        matches!(self, Verdict::WitnessFound)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::ProvenEmptyLinear => write!(f, "PROVEN-EMPTY (linear stage inconsistent)"),
            Verdict::ProvenEmptyQuadratic => write!(f, "PROVEN-EMPTY (quadratic constraints inconsistent)"),
            Verdict::GridEmpty { bound } => write!(f, "GRID-EMPTY({bound}) not a proof"),
            Verdict::WitnessFound => write!(f, "WITNESS-FOUND"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct NonexistenceReport {
    pub verdict: Verdict,
    pub parameters: Option<usize>,
    pub exhausted: bool,
    pub witness: Option<Solution>,
}

pub fn nonexistence_report(pair: &LiePair, ansatz: &Ansatz) -> Result<NonexistenceReport> {
    let limited = Ansatz { max_solutions: 1, ..ansatz.clone() };
    match search_postlie(pair, &limited)? {
        SearchOutcome::LinearInconsistent => Ok(NonexistenceReport {
            verdict: Verdict::ProvenEmptyLinear,
            parameters: None,
            exhausted: true,
            witness: None,
        }),
        SearchOutcome::Searched(set) => {
            let verdict = if set.quadratic_inconsistent {
                Verdict::ProvenEmptyQuadratic
            } else if set.solutions.is_empty() {
                Verdict::GridEmpty { bound: ansatz.coefficient_bound }
            } else {
                Verdict::WitnessFound
            };
            Ok(NonexistenceReport {
                verdict,
                parameters: Some(set.parameters),
                exhausted: set.exhausted,
                witness: set.solutions.into_iter().next(),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{rat, ratio, unit_vec};

    fn names(n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("e{i}")).collect()
    }

    #[test]
    fn grid_order_starts_at_zero() {
        let v = Ansatz::default().grid_values().unwrap();
        assert_eq!(v, vec![rat(0), ratio(1, 2), ratio(-1, 2), rat(1), rat(-1)]);
        let v = Ansatz { denominators: vec![1], ..Ansatz::with_bound(2) }.grid_values().unwrap();
        assert_eq!(v, vec![rat(0), rat(1), rat(-1), rat(2), rat(-2)]);
        assert!(Ansatz { denominators: vec![], ..Ansatz::default() }.grid_values().is_err());
    }

    #[test]
    fn inconsistent_toy_pair() {
        // g abelian, n = r2: the commutator axiom forces e1·e2 − e2·e1 = −e2, the derivation axiom with a
        // zero-dimensional grid still has solutions, so use a support mask that
        // removes every product entry instead.
        let g = LieAlgebra::abelian("a2", names(2));
        let n = LieAlgebra::new("r2", names(2), &[(0, 1, unit_vec(2, 1))]).unwrap();
        let pair = LiePair::new(g, n).unwrap();
        let mask = SupportMask { nonzero: vec![] };
        assert!(linear_stage(&pair, Some(&mask)).unwrap().is_none());
        let ansatz = Ansatz { support: Some(mask), ..Ansatz::with_bound(3) };
        assert_eq!(nonexistence_report(&pair, &ansatz).unwrap().verdict, Verdict::ProvenEmptyLinear);
    }

    #[test]
    fn zero_product_on_equal_pair() {
        let n = LieAlgebra::new("n3", names(3), &[(0, 1, unit_vec(3, 2))]).unwrap();
        let pair = LiePair::new(n.clone(), n).unwrap();
        let space = linear_stage(&pair, None).unwrap().unwrap();
        assert!(space.particular.iter().all(Zero::is_zero));
        let rep = nonexistence_report(&pair, &Ansatz::default()).unwrap();
        assert_eq!(rep.verdict, Verdict::WitnessFound);
        assert!(rep.witness.unwrap().product.is_zero());
    }

    #[test]
    fn parameter_cap_is_enforced() {
        let g = LieAlgebra::abelian("a6", names(6));
        let err = search_rb(&g, &Ansatz::default()).unwrap_err();
        assert!(matches!(err, Error::ParameterCap { dim: 36, .. }));
    }

    #[test]
    fn rb_search_on_abelian_plane_finds_everything() {
        let g = LieAlgebra::abelian("a2", names(2));
        let ansatz = Ansatz { denominators: vec![1], max_solutions: 10_000, ..Ansatz::default() };
        let res = search_rb(&g, &ansatz).unwrap();
        assert!(res.exhausted);
        assert_eq!(res.solutions.len(), 81);
    }
}
