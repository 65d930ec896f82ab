//! Named algebras and fixtures, each fixture tagged with where its data comes
//! from and the checks it is expected to pass.

pub mod families;
mod fixtures;

use crate::error::{Error, Result};
use crate::exactla::{format_rational, Vector};
use crate::laj::{LajDoc, LajMatrixDoc, LajProductDoc};
use crate::liealg::{direct_sum, LieAlgebra, LinearMap, Subspace};
use crate::postlie::{BilinearProduct, LiePair};

pub use fixtures::fixture_names;

pub(crate) mod data {
    pub const SL3_PAPER: &str = include_str!("../../data/sl3-paper.laj.json");
    pub const AFF2_PLUS_AFF1: &str = include_str!("../../data/aff2-plus-aff1.laj.json");
    pub const SL2_PLUS_SL2: &str = include_str!("../../data/sl2-plus-sl2.laj.json");
    pub const R2: &str = include_str!("../../data/r2.laj.json");
    pub const R3: &str = include_str!("../../data/r3.laj.json");
    pub const R31: &str = include_str!("../../data/r31.laj.json");
    pub const N3: &str = include_str!("../../data/n3.laj.json");
    pub const N4: &str = include_str!("../../data/n4.laj.json");
    pub const EX31_PRODUCT: &str = include_str!("../../data/ex31-product.lajp.json");
    pub const PROP43_PHI: &str = include_str!("../../data/prop43-phi.lajm.json");
    pub const PROP43_PRODUCT: &str = include_str!("../../data/prop43-product.lajp.json");
    pub const PROP43_INDUCED_G: &str = include_str!("../../data/prop43-induced-g.laj.json");
    pub const PROP43_F: &str = include_str!("../../data/prop43-f.lajm.json");
    pub const PROP44_PHI: &str = include_str!("../../data/prop44-phi.lajm.json");
    pub const PROP44_PRODUCT: &str = include_str!("../../data/prop44-product.lajp.json");
    pub const PROP44_INDUCED_G: &str = include_str!("../../data/prop44-induced-g.laj.json");

    /// Every shipped data file, by file name.
    pub const ALL: &[(&str, &str)] = &[
        ("sl3-paper.laj.json", SL3_PAPER),
        ("aff2-plus-aff1.laj.json", AFF2_PLUS_AFF1),
        ("sl2-plus-sl2.laj.json", SL2_PLUS_SL2),
        ("r2.laj.json", R2),
        ("r3.laj.json", R3),
        ("r31.laj.json", R31),
        ("n3.laj.json", N3),
        ("n4.laj.json", N4),
        ("ex31-product.lajp.json", EX31_PRODUCT),
        ("prop43-phi.lajm.json", PROP43_PHI),
        ("prop43-product.lajp.json", PROP43_PRODUCT),
        ("prop43-induced-g.laj.json", PROP43_INDUCED_G),
        ("prop43-f.lajm.json", PROP43_F),
        ("prop44-phi.lajm.json", PROP44_PHI),
        ("prop44-product.lajp.json", PROP44_PRODUCT),
        ("prop44-induced-g.laj.json", PROP44_INDUCED_G),
    ];
}

/// Shipped data files by file name, for round-trip tests and emission.
pub fn data_files() -> &'static [(&'static str, &'static str)] {
    data::ALL
}

pub(crate) fn parse_algebra(text: &str) -> LieAlgebra {
    LajDoc::parse(text).and_then(|d| d.to_algebra()).expect("shipped algebra file parses")
}

pub(crate) fn parse_product(text: &str) -> BilinearProduct {
    LajProductDoc::parse(text).and_then(|d| d.to_product()).expect("shipped product file parses")
}

pub(crate) fn parse_map(text: &str) -> LinearMap {
    LajMatrixDoc::parse(text).and_then(|d| d.to_matrix()).map(LinearMap::new).expect("shipped matrix file parses")
}

fn sized(name: &str, stem: &str) -> Option<usize> {
    let rest = name.strip_prefix(stem)?;
    let digits = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(rest);
    digits.parse().ok()
}

fn single_algebra(name: &str) -> Result<LieAlgebra> {
    let g = match name {
        "sl3-paper" => parse_algebra(data::SL3_PAPER),
        "aff2-plus-aff1" => parse_algebra(data::AFF2_PLUS_AFF1),
        "sl2-plus-sl2" => parse_algebra(data::SL2_PLUS_SL2),
        "prop43-induced-g" => parse_algebra(data::PROP43_INDUCED_G),
        "prop44-induced-g" => parse_algebra(data::PROP44_INDUCED_G),
        "r2" => parse_algebra(data::R2),
        "r3" => parse_algebra(data::R3),
        "r31" => parse_algebra(data::R31),
        "n3" => parse_algebra(data::N3),
        "n4" => parse_algebra(data::N4),
        "sl2-v2" => families::sl2_ltimes_v2(),
        "C" => families::abelian(1),
        _ => {
            if let Some(k) = sized(name, "abelian").or_else(|| sized(name, "C")) {
                families::abelian(k)
            } else if let Some(n) = sized(name, "gl").filter(|&n| n >= 1) {
                families::gl(n)
            } else if let Some(n) = sized(name, "sl").filter(|&n| n >= 2) {
                families::sl(n)
            } else if let Some(n) = sized(name, "aff").filter(|&n| n >= 1) {
                families::aff(n)
            } else if let Some(k) = sized(name, "heisenberg").filter(|&k| k >= 1) {
                families::heisenberg(k)
            } else if let Some(n) = sized(name, "filiform").filter(|&n| n >= 2) {
                families::filiform(n)
            } else {
                return Err(Error::UnknownName(name.to_string()));
            }
        }
    };
    Ok(g)
}

/// Resolves an algebra name such as `gl2`, `sl(3)`, `r31`, `abelian3`,
/// `sl3-paper` or a direct sum like `n3+abelian1`.
pub fn algebra(name: &str) -> Result<LieAlgebra> {
    let name = name.trim();
    if let Ok(g) = single_algebra(name) {
        return Ok(g);
    }
    let parts: Vec<&str> = name.split('+').map(str::trim).collect();
    if parts.len() < 2 {
        return Err(Error::UnknownName(name.to_string()));
    }
    let mut acc = single_algebra(parts[0])?;
    for p in &parts[1..] {
        acc = direct_sum(&acc, &single_algebra(p)?);
    }
    Ok(acc.with_name(name))
}

/// One named piece of a fixture.
#[derive(Debug, Clone)]
pub enum Part {
    Algebra(LieAlgebra),
    Product { basis: Vec<String>, product: BilinearProduct },
    Map { basis: Vec<String>, map: LinearMap },
    Span { basis: Vec<String>, subspace: Subspace },
    Vector { basis: Vec<String>, vector: Vector },
}

/// Result of one expected check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(label: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check { label: label.into(), passed, detail: detail.into() }
    }
}

/// A named fixture: the data, its source anchor, and its expected checks.
#[derive(Clone)]
pub struct Fixture {
    pub name: String,
    pub provenance: &'static str,
    pub description: String,
    pub parts: Vec<(String, Part)>,
    pub expected: Vec<&'static str>,
    checks: fn(&Fixture) -> Result<Vec<Check>>,
}

impl std::fmt::Debug for Fixture {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Fixture")
            .field("name", &self.name)
            .field("provenance", &self.provenance)
            .field("expected", &self.expected)
            .finish()
    }
}

impl Fixture {
    fn part(&self, role: &str) -> Result<&Part> {
        self.parts
            .iter()
            .find(|(r, _)| r == role)
            .map(|(_, p)| p)
            .ok_or_else(|| Error::UnknownName(format!("{}:{role}", self.name)))
    }

    pub fn algebra(&self, role: &str) -> Result<&LieAlgebra> {
        match self.part(role)? {
            Part::Algebra(g) => Ok(g),
            _ => Err(Error::UnknownName(format!("{}:{role} is not an algebra", self.name))),
        }
    }

    pub fn product(&self, role: &str) -> Result<&BilinearProduct> {
        match self.part(role)? {
            Part::Product { product, .. } => Ok(product),
            _ => Err(Error::UnknownName(format!("{}:{role} is not a product", self.name))),
        }
    }

    pub fn map(&self, role: &str) -> Result<&LinearMap> {
        match self.part(role)? {
            Part::Map { map, .. } => Ok(map),
            _ => Err(Error::UnknownName(format!("{}:{role} is not a map", self.name))),
        }
    }

    pub fn span(&self, role: &str) -> Result<&Subspace> {
        match self.part(role)? {
            Part::Span { subspace, .. } => Ok(subspace),
            _ => Err(Error::UnknownName(format!("{}:{role} is not a span", self.name))),
        }
    }

    pub fn vector(&self, role: &str) -> Result<&Vector> {
        match self.part(role)? {
            Part::Vector { vector, .. } => Ok(vector),
            _ => Err(Error::UnknownName(format!("{}:{role} is not a vector", self.name))),
        }
    }

    /// Runs the checks. Missing expected labels, unexpected labels and errors
    /// are all reported as failures.
    pub fn verify(&self) -> Vec<Check> {
        let mut out = match (self.checks)(self) {
            Ok(c) => c,
            Err(e) => return vec![Check::new("evaluation", false, e.to_string())],
        };
        for c in out.iter_mut() {
            if !self.expected.contains(&c.label.as_str()) {
                c.passed = false;
                c.detail = format!("unexpected check label; {}", c.detail);
            }
        }
        for label in &self.expected {
            if !out.iter().any(|c| c.label == *label) {
                out.push(Check::new(*label, false, "check was not evaluated"));
            }
        }
        out
    }

    /// LAJ documents for every part, as `(file suffix, text)`.
    pub fn emit(&self) -> Vec<(String, String)> {
        self.parts
            .iter()
            .map(|(role, part)| {
                let name = format!("{}.{role}", self.name);
                match part {
                    Part::Algebra(g) => {
                        let mut doc = LajDoc::from_algebra(g);
                        doc.name = name.clone();
                        (format!("{role}.laj.json"), doc.emit())
                    }
                    Part::Product { basis, product } => {
                        (format!("{role}.lajp.json"), LajProductDoc::from_product(&name, basis, product).emit())
                    }
                    Part::Map { basis, map } => {
                        (format!("{role}.lajm.json"), LajMatrixDoc::from_matrix(&name, basis, map.matrix()).emit())
                    }
                    Part::Span { basis, subspace } => {
                        let rows = crate::exactla::Matrix::from_rows_with_cols(subspace.basis(), basis.len());
                        (format!("{role}.span.lajm.json"), LajMatrixDoc::from_matrix(&name, &[], &rows).emit())
                    }
                    Part::Vector { basis, vector } => {
                        let terms: Vec<String> = basis
                            .iter()
                            .zip(vector)
                            .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
                            .map(|(b, c)| format!("{} {b}", format_rational(c)))
                            .collect();
                        (format!("{role}.txt"), format!("{}\n", terms.join(" + ")))
                    }
                }
            })
            .collect()
    }
}

/// Looks up a fixture by name, including parameterized ones such as `gl(4)`
/// or `prop52-fixture(3)`.
pub fn get(name: &str) -> Result<Fixture> {
    fixtures::build(name.trim())
}

/// Names of the standard fixture suite.
pub fn list() -> Vec<String> {
    fixture_names().iter().map(|s| s.to_string()).collect()
}

/// One row of the verification table.
#[derive(Debug, Clone)]
pub struct VerifyRow {
    pub fixture: String,
    pub provenance: &'static str,
    pub check: Check,
}

/// Runs every fixture in the standard suite, in list order.
pub fn verify_all() -> Vec<VerifyRow> {
    use rayon::prelude::*;
    fixture_names()
        .par_iter()
        .map(|name| match get(name) {
            Ok(f) => f
                .verify()
                .into_iter()
                .map(|check| VerifyRow { fixture: f.name.clone(), provenance: f.provenance, check })
                .collect::<Vec<_>>(),
            Err(e) => vec![VerifyRow {
                fixture: name.to_string(),
                provenance: "",
                check: Check::new("construction", false, e.to_string()),
            }],
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

/// Pairs with no post-Lie structure by a result of the source, as
/// `(g, n, anchor)` in catalog names.
pub const NONEXISTENCE_CLAIMS: &[(&str, &str, &str)] = &[
    ("sl2", "r3", "Thm. 3.3"),
    ("sl2", "n3", "Thm. 3.3"),
    ("gl2", "n4", "Prop. 5.3"),
    ("gl2", "n3+C", "Prop. 5.3"),
    ("gl2", "r2+r2", "Thm. 5.1"),
];

/// The anchor of the non-existence result covering `(g, n)`, matched on
/// structure constants.
pub fn nonexistence_anchor(g: &LieAlgebra, n: &LieAlgebra) -> Option<&'static str> {
    NONEXISTENCE_CLAIMS.iter().find_map(|(gn, nn, anchor)| {
        let same = algebra(gn).ok()? == *g && algebra(nn).ok()? == *n;
        same.then_some(*anchor)
    })
}

/// A shipped product or matrix file by stem, e.g. `prop43-phi`.
pub fn data_file(stem: &str) -> Option<&'static str> {
    data::ALL
        .iter()
        .find(|(file, _)| file.split('.').next() == Some(stem))
        .map(|(_, text)| *text)
}

/// A post-Lie structure held by a fixture.
#[derive(Debug, Clone)]
pub struct KnownStructure {
    pub fixture: String,
    pub provenance: &'static str,
    pub pair: LiePair,
    pub product: BilinearProduct,
}

/// Every `(g, n, prod)` triple in the standard suite, built once.
pub fn known_structures() -> &'static [KnownStructure] {
    static CELL: std::sync::OnceLock<Vec<KnownStructure>> = std::sync::OnceLock::new();
    CELL.get_or_init(|| {
        fixture_names()
            .iter()
            .filter_map(|name| get(name).ok())
            .filter_map(|f| {
                let pair = LiePair::new(f.algebra("g").ok()?.clone(), f.algebra("n").ok()?.clone()).ok()?;
                let product = f.product("prod").ok()?.clone();
                Some(KnownStructure { fixture: f.name.clone(), provenance: f.provenance, pair, product })
            })
            .collect()
    })
}

/// The fixture holding exactly this structure, compared on structure constants.
pub fn structure_anchor(pair: &LiePair, product: &BilinearProduct) -> Option<&'static KnownStructure> {
    known_structures().iter().find(|k| k.pair == *pair && k.product == *product)
}
