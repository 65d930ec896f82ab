//! LAJ text formats: JSON documents for Lie algebras (LAJ), bilinear products
//! (LAJ-P) and matrices / linear maps (LAJ-M). Scalars are always strings of the
//! form `p` or `p/q`.
//!
//! Emission writes one table entry per line so files diff cleanly against
//! printed tables.

use std::collections::HashSet;
use std::fmt::Write as _;

use indexmap::IndexMap;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::{format_rational, parse_rational, zero_vec, Matrix, Rational, Vector};
use crate::liealg::{LieAlgebra, LinearMap};
use crate::postlie::BilinearProduct;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Entry {
    pub left: String,
    pub right: String,
    pub value: IndexMap<String, String>,
}

/// Lie algebra document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LajDoc {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub brackets: Vec<Entry>,
}

/// Product document; every listed `left · right` entry is independent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LajProductDoc {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub products: Vec<Entry>,
}

/// Matrix document, row-major; column `j` is the image of basis vector `j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LajMatrixDoc {
    pub name: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub basis: Vec<String>,
    pub matrix: Vec<Vec<String>>,
}

/// Action document for semidirect products: one LAJ-M style matrix on the
/// ideal for each basis label of the acting algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LajActionDoc {
    pub name: String,
    pub maps: IndexMap<String, Vec<Vec<String>>>,
}

impl LajActionDoc {
    pub fn parse(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// Matrices in the acting algebra's basis order; every label must appear once.
    pub fn to_action(&self, acting: &LieAlgebra, ideal: &LieAlgebra) -> Result<Vec<LinearMap>> {
        for label in self.maps.keys() {
            index_of(acting.basis_names(), label)?;
        }
        acting
            .basis_names()
            .iter()
            .map(|label| {
                let rows = self
                    .maps
                    .get(label)
                    .ok_or_else(|| Error::Format(format!("no matrix for acting element `{label}`")))?;
                let doc = LajMatrixDoc { name: label.clone(), basis: Vec::new(), matrix: rows.clone() };
                doc.to_map_on(ideal)
            })
            .collect()
    }
}

fn check_basis(dim: usize, basis: &[String]) -> Result<()> {
    if basis.len() != dim {
        return Err(Error::DimensionMismatch { expected: dim, found: basis.len() });
    }
    let mut seen = HashSet::new();
    for b in basis {
        if !seen.insert(b.as_str()) {
            return Err(Error::Format(format!("basis label `{b}` repeated")));
        }
    }
    Ok(())
}

fn index_of(basis: &[String], label: &str) -> Result<usize> {
    basis.iter().position(|b| b == label).ok_or_else(|| Error::UnknownBasisLabel(label.to_string()))
}

fn parse_value(basis: &[String], value: &IndexMap<String, String>) -> Result<Vector> {
    let mut v = zero_vec(basis.len());
    for (label, coef) in value {
        let i = index_of(basis, label)?;
        v[i] = parse_rational(coef)?;
    }
    Ok(v)
}

fn emit_value(basis: &[String], v: &[Rational]) -> IndexMap<String, String> {
    basis
        .iter()
        .zip(v)
        .filter(|(_, c)| !c.is_zero())
        .map(|(b, c)| (b.clone(), format_rational(c)))
        .collect()
}

impl LajDoc {
    pub fn parse(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// Builds the algebra. Jacobi is not checked here; see `check_jacobi`.
    pub fn to_algebra(&self) -> Result<LieAlgebra> {
        check_basis(self.dim, &self.basis)?;
        let mut brackets = Vec::with_capacity(self.brackets.len());
        let mut seen = HashSet::new();
        for e in &self.brackets {
            let i = index_of(&self.basis, &e.left)?;
            let j = index_of(&self.basis, &e.right)?;
            if i >= j {
                return Err(Error::Format(format!(
                    "bracket [{}, {}] must list the lower basis index first",
                    e.left, e.right
                )));
            }
            if !seen.insert((i, j)) {
                return Err(Error::DuplicateEntry(e.left.clone(), e.right.clone()));
            }
            brackets.push((i, j, parse_value(&self.basis, &e.value)?));
        }
        LieAlgebra::new_unchecked(self.name.clone(), self.basis.clone(), &brackets)
    }

    pub fn from_algebra(g: &LieAlgebra) -> Self {
        let basis = g.basis_names().to_vec();
        let n = g.dim();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let v = g.structure(i, j);
                if v.iter().any(|c| !c.is_zero()) {
                    brackets.push(Entry {
                        left: basis[i].clone(),
                        right: basis[j].clone(),
                        value: emit_value(&basis, v),
                    });
                }
            }
        }
        LajDoc { name: g.name().to_string(), dim: n, basis, brackets }
    }

    pub fn emit(&self) -> String {
        emit_table_doc(&self.name, self.dim, &self.basis, "brackets", &self.brackets)
    }
}

impl LajProductDoc {
    pub fn parse(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_product(&self) -> Result<BilinearProduct> {
        check_basis(self.dim, &self.basis)?;
        let mut entries = Vec::with_capacity(self.products.len());
        let mut seen = HashSet::new();
        for e in &self.products {
            let i = index_of(&self.basis, &e.left)?;
            let j = index_of(&self.basis, &e.right)?;
            if !seen.insert((i, j)) {
                return Err(Error::DuplicateEntry(e.left.clone(), e.right.clone()));
            }
            entries.push((i, j, parse_value(&self.basis, &e.value)?));
        }
        BilinearProduct::from_entries(self.dim, &entries)
    }

    /// Parses against an algebra, requiring matching labels.
    pub fn to_product_on(&self, g: &LieAlgebra) -> Result<BilinearProduct> {
        if self.dim != g.dim() {
            return Err(Error::DimensionMismatch { expected: g.dim(), found: self.dim });
        }
        if self.basis != g.basis_names() {
            return Err(Error::Format(format!(
                "product basis {:?} does not match algebra basis {:?}",
                self.basis,
                g.basis_names()
            )));
        }
        self.to_product()
    }

    pub fn from_product(name: &str, basis: &[String], p: &BilinearProduct) -> Self {
        assert_eq!(basis.len(), p.dim());
        let products = p
            .nonzero_entries()
            .into_iter()
            .map(|(i, j, v)| Entry {
                left: basis[i].clone(),
                right: basis[j].clone(),
                value: emit_value(basis, v),
            })
            .collect();
        LajProductDoc { name: name.to_string(), dim: p.dim(), basis: basis.to_vec(), products }
    }

    pub fn emit(&self) -> String {
        emit_table_doc(&self.name, self.dim, &self.basis, "products", &self.products)
    }
}

impl LajMatrixDoc {
    pub fn parse(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_matrix(&self) -> Result<Matrix> {
        let cols = self.matrix.first().map_or(0, Vec::len);
        let mut rows = Vec::with_capacity(self.matrix.len());
        for row in &self.matrix {
            if row.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: row.len() });
            }
            rows.push(row.iter().map(|s| parse_rational(s)).collect::<Result<Vector>>()?);
        }
        if !self.basis.is_empty() {
            check_basis(self.basis.len(), &self.basis)?;
            if cols != self.basis.len() || rows.len() != self.basis.len() {
                return Err(Error::DimensionMismatch { expected: self.basis.len(), found: cols });
            }
        }
        Ok(Matrix::from_rows_with_cols(rows, cols))
    }

    /// A square map on `g`, with dimensions (and labels, if present) checked.
    pub fn to_map_on(&self, g: &LieAlgebra) -> Result<LinearMap> {
        let m = self.to_matrix()?;
        if !self.basis.is_empty() && self.basis != g.basis_names() {
            return Err(Error::Format("matrix basis does not match algebra basis".into()));
        }
        let map = LinearMap::new(m);
        map.require_square(g.dim())?;
        Ok(map)
    }

    pub fn from_matrix(name: &str, basis: &[String], m: &Matrix) -> Self {
        LajMatrixDoc {
            name: name.to_string(),
            basis: basis.to_vec(),
            matrix: m.to_rows().iter().map(|r| r.iter().map(format_rational).collect()).collect(),
        }
    }

    pub fn emit(&self) -> String {
        let mut s = String::from("{\n");
        let _ = writeln!(s, "  \"name\": {},", json(&self.name));
        if !self.basis.is_empty() {
            let _ = writeln!(s, "  \"basis\": {},", json_list(&self.basis));
        }
        s.push_str("  \"matrix\": [");
        for (k, row) in self.matrix.iter().enumerate() {
            let sep = if k + 1 == self.matrix.len() { "" } else { "," };
            let _ = write!(s, "\n    {}{sep}", json_list(row));
        }
        s.push_str(if self.matrix.is_empty() { "]\n}\n" } else { "\n  ]\n}\n" });
        s
    }
}

fn json<T: Serialize + ?Sized>(v: &T) -> String {
    serde_json::to_string(v).expect("plain data serializes")
}

fn json_list(items: &[String]) -> String {
    let parts: Vec<String> = items.iter().map(json).collect();
    format!("[{}]", parts.join(", "))
}

fn json_entry(e: &Entry) -> String {
    let value: Vec<String> = e.value.iter().map(|(k, v)| format!("{}: {}", json(k), json(v))).collect();
    format!(
        "{{\"left\": {}, \"right\": {}, \"value\": {{{}}}}}",
        json(&e.left),
        json(&e.right),
        value.join(", ")
    )
}

fn emit_table_doc(name: &str, dim: usize, basis: &[String], key: &str, entries: &[Entry]) -> String {
    let mut s = String::from("{\n");
    let _ = writeln!(s, "  \"name\": {},", json(name));
    let _ = writeln!(s, "  \"dim\": {dim},");
    let _ = writeln!(s, "  \"basis\": {},", json_list(basis));
    let _ = write!(s, "  \"{key}\": [");
    for (k, e) in entries.iter().enumerate() {
        let sep = if k + 1 == entries.len() { "" } else { "," };
        let _ = write!(s, "\n    {}{sep}", json_entry(e));
    }
    s.push_str(if entries.is_empty() { "]\n}\n" } else { "\n  ]\n}\n" });
    s
}

/// Parses a comma-separated list of linear combinations over basis labels,
/// e.g. `"e2, e3+e5, 2e1-1/2e4"`.
pub fn parse_span(basis: &[String], text: &str) -> Result<Vec<Vector>> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| parse_combination(basis, t))
        .collect()
}

/// Parses a single linear combination such as `e3+e5` or `-2*e1 + 1/2 e4`.
/// Longer labels are matched first, so `e10` is not read as `e1` followed by `0`.
pub fn parse_combination(basis: &[String], text: &str) -> Result<Vector> {
    let bad = || Error::Format(format!("cannot parse linear combination `{text}`"));
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut labels: Vec<(usize, &String)> = basis.iter().enumerate().collect();
    labels.sort_by_key(|(_, l)| std::cmp::Reverse(l.len()));
    let mut v = zero_vec(basis.len());
    let mut rest = compact.as_str();
    if rest.is_empty() {
        return Err(bad());
    }
    while !rest.is_empty() {
        let mut sign = Rational::from_integer(1.into());
        if let Some(r) = rest.strip_prefix('+') {
            rest = r;
        } else if let Some(r) = rest.strip_prefix('-') {
            sign = -sign;
            rest = r;
        }
        // Coefficient: everything up to the first label match.
        let (pos, idx, len) = (0..=rest.len())
            .filter(|&p| rest.is_char_boundary(p))
            .find_map(|p| {
                labels
                    .iter()
                    .find(|(_, l)| rest[p..].starts_with(l.as_str()))
                    .map(|(i, l)| (p, *i, l.len()))
            })
            .ok_or_else(bad)?;
        let coef_text = rest[..pos].trim_end_matches('*');
        let coef = if coef_text.is_empty() { Rational::from_integer(1.into()) } else { parse_rational(coef_text)? };
        v[idx] += sign * coef;
        rest = &rest[pos + len..];
        if !(rest.is_empty() || rest.starts_with('+') || rest.starts_with('-')) {
            return Err(bad());
        }
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{rat, ratio, unit_vec};

    fn basis(n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("e{i}")).collect()
    }

    #[test]
    fn decimal_values_are_rejected() {
        let doc = r#"{"name":"x","dim":2,"basis":["e1","e2"],
            "brackets":[{"left":"e1","right":"e2","value":{"e2":"0.5"}}]}"#;
        let err = LajDoc::parse(doc).unwrap().to_algebra().unwrap_err();
        assert!(matches!(err, Error::MalformedRational(_)));
    }

    #[test]
    fn unknown_labels_and_duplicates_are_rejected() {
        let doc = r#"{"name":"x","dim":2,"basis":["e1","e2"],
            "brackets":[{"left":"e1","right":"e3","value":{"e2":"1"}}]}"#;
        assert!(matches!(LajDoc::parse(doc).unwrap().to_algebra(), Err(Error::UnknownBasisLabel(_))));
        let doc = r#"{"name":"x","dim":2,"basis":["e1","e2"],
            "brackets":[{"left":"e1","right":"e2","value":{"e2":"1"}},
                        {"left":"e1","right":"e2","value":{"e2":"1"}}]}"#;
        assert!(matches!(LajDoc::parse(doc).unwrap().to_algebra(), Err(Error::DuplicateEntry(..))));
        let doc = r#"{"name":"x","dim":3,"basis":["e1","e2"],"brackets":[]}"#;
        assert!(matches!(
            LajDoc::parse(doc).unwrap().to_algebra(),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn emitted_algebra_parses_back() {
        let g = LieAlgebra::new("r2", basis(2), &[(0, 1, vec![rat(0), ratio(-3, 2)])]).unwrap();
        let text = LajDoc::from_algebra(&g).emit();
        let back = LajDoc::parse(&text).unwrap();
        assert_eq!(back.to_algebra().unwrap(), g);
        assert_eq!(back.emit(), text);
    }

    #[test]
    fn span_syntax() {
        let b = basis(12);
        let v = parse_combination(&b, "e3+e5").unwrap();
        assert_eq!(v, {
            let mut w = unit_vec(12, 2);
            w[4] = rat(1);
            w
        });
        let v = parse_combination(&b, "-2*e1 + 1/2 e10").unwrap();
        assert_eq!(v[0], rat(-2));
        assert_eq!(v[9], ratio(1, 2));
        assert_eq!(parse_span(&b, "e2, e3+e5").unwrap().len(), 2);
        assert!(parse_combination(&b, "e3x").is_err());
        assert!(parse_combination(&b, "0.5e1").is_err());
    }
}
