//! JSON file formats. Rationals are always strings such as `"-3/2"`.

use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::linalg::{format_vector, parse_rational, Rational};
use crate::maps::BilinearMap;
use crate::poly::MultilinearPolynomial;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub unity: Vec<String>,
    /// `table[i][j]` holds the coordinates of `u_i · u_j`.
    pub table: Vec<Vec<Vec<String>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolynomialTerm {
    /// One-line permutation, 1-indexed.
    pub perm: Vec<usize>,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolynomialFile {
    pub n: usize,
    pub terms: Vec<PolynomialTerm>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<String>,
    /// `values[i][j]` holds the coordinates of `B(u_i, u_j)`.
    pub values: Vec<Vec<Vec<String>>>,
}

fn from_json<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("file types serialize");
    s.push('\n');
    s
}

fn rational_at(field: &str, s: &str) -> Result<Rational> {
    parse_rational(s).map_err(|_| Error::Parse(format!("{field}: malformed rational {s:?}")))
}

fn element_at(field: &str, items: &[String], expected: usize) -> Result<Element> {
    if items.len() != expected {
        return Err(Error::FieldLength {
            field: field.to_string(),
            expected,
            found: items.len(),
        });
    }
    items
        .iter()
        .enumerate()
        .map(|(k, s)| rational_at(&format!("{field}[{k}]"), s))
        .collect::<Result<Vec<_>>>()
        .map(Element)
}

fn table_at(
    field: &str,
    rows: &[Vec<Vec<String>>],
    d: usize,
    width: usize,
) -> Result<Vec<Vec<Element>>> {
    if rows.len() != d {
        return Err(Error::FieldLength {
            field: field.to_string(),
            expected: d,
            found: rows.len(),
        });
    }
    rows.iter()
        .enumerate()
        .map(|(i, row)| {
            if row.len() != d {
                return Err(Error::FieldLength {
                    field: format!("{field}[{i}]"),
                    expected: d,
                    found: row.len(),
                });
            }
            row.iter()
                .enumerate()
                .map(|(j, v)| element_at(&format!("{field}[{i}][{j}]"), v, width))
                .collect()
        })
        .collect()
}

impl AlgebraFile {
    pub fn from_algebra(alg: &Algebra) -> Self {
        AlgebraFile {
            name: alg.name().to_string(),
            dim: alg.dim(),
            basis: alg.basis_names().to_vec(),
            unity: format_vector(alg.unity().coords()),
            table: alg
                .table()
                .iter()
                .map(|row| row.iter().map(|p| format_vector(p.coords())).collect())
                .collect(),
        }
    }

    /// Builds and validates the algebra.
    pub fn to_algebra(&self) -> Result<Algebra> {
        let (name, basis, table, unity) = self.parts()?;
        Algebra::new(name, basis, table, unity)
    }

    /// Shape checks only; see [`Algebra::validate`] for the algebra laws.
    pub fn to_algebra_unchecked(&self) -> Result<Algebra> {
        let (name, basis, table, unity) = self.parts()?;
        Algebra::new_unchecked(name, basis, table, unity)
    }

    fn parts(&self) -> Result<(String, Vec<String>, Vec<Vec<Element>>, Element)> {
        let d = self.dim;
        if self.basis.len() != d {
            return Err(Error::FieldLength {
                field: "basis".into(),
                expected: d,
                found: self.basis.len(),
            });
        }
        let unity = element_at("unity", &self.unity, d)?;
        let table = table_at("table", &self.table, d, d)?;
        Ok((self.name.clone(), self.basis.clone(), table, unity))
    }
}

impl PolynomialFile {
    pub fn from_polynomial(f: &MultilinearPolynomial) -> Self {
        PolynomialFile {
            n: f.arity(),
            terms: f
                .terms()
                .map(|(p, c)| PolynomialTerm {
                    perm: p.iter().map(|i| i + 1).collect(),
                    coeff: crate::linalg::format_rational(c),
                })
                .collect(),
        }
    }

    pub fn to_polynomial(&self) -> Result<MultilinearPolynomial> {
        let terms = self
            .terms
            .iter()
            .enumerate()
            .map(|(k, t)| {
                let perm = t
                    .perm
                    .iter()
                    .map(|&i| {
                        i.checked_sub(1).ok_or_else(|| {
                            Error::Parse(format!("terms[{k}].perm: entries are 1-indexed"))
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok((perm, rational_at(&format!("terms[{k}].coeff"), &t.coeff)?))
            })
            .collect::<Result<Vec<_>>>()?;
        MultilinearPolynomial::new(self.n, terms)
    }
}

impl MapFile {
    pub fn from_map(b: &BilinearMap, algebra: Option<&str>) -> Self {
        MapFile {
            algebra: algebra.map(str::to_string),
            values: b
                .values()
                .iter()
                .map(|row| row.iter().map(|v| format_vector(v.coords())).collect())
                .collect(),
        }
    }

    /// Parses a map `A × A → A` over `alg`.
    pub fn to_map(&self, alg: &Algebra) -> Result<BilinearMap> {
        if let Some(name) = &self.algebra {
            if name != alg.name() {
                return Err(Error::Parse(format!(
                    "map is over algebra {name:?}, not {:?}",
                    alg.name()
                )));
            }
        }
        let d = alg.dim();
        BilinearMap::from_values(table_at("values", &self.values, d, d)?, d)
    }
}

pub fn parse_algebra(text: &str) -> Result<Algebra> {
    from_json::<AlgebraFile>(text)?.to_algebra()
}

/// Parses an algebra file without checking associativity or the unity law.
pub fn parse_algebra_unchecked(text: &str) -> Result<Algebra> {
    from_json::<AlgebraFile>(text)?.to_algebra_unchecked()
}

pub fn parse_polynomial(text: &str) -> Result<MultilinearPolynomial> {
    from_json::<PolynomialFile>(text)?.to_polynomial()
}

pub fn parse_map(text: &str, alg: &Algebra) -> Result<BilinearMap> {
    from_json::<MapFile>(text)?.to_map(alg)
}

pub fn algebra_to_json(alg: &Algebra) -> String {
    to_json(&AlgebraFile::from_algebra(alg))
}

pub fn polynomial_to_json(f: &MultilinearPolynomial) -> String {
    to_json(&PolynomialFile::from_polynomial(f))
}

pub fn map_to_json(b: &BilinearMap, algebra: Option<&str>) -> String {
    to_json(&MapFile::from_map(b, algebra))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_algebra, Preset};
    use crate::poly::NamedPoly;

    fn t2_json() -> String {
        algebra_to_json(&build_algebra(&Preset::UpperTriangular(2)).unwrap())
    }

    #[test]
    fn preset_round_trip() {
        for p in [
            Preset::UpperTriangular(2),
            Preset::Matrix(2),
            Preset::BlockUpperTriangular(vec![2, 1]),
            Preset::OneDim,
        ] {
            let alg = build_algebra(&p).unwrap();
            let back = parse_algebra(&algebra_to_json(&alg)).unwrap();
            assert_eq!(back.table(), alg.table());
            assert_eq!(back.basis_names(), alg.basis_names());
            assert_eq!(back.unity(), alg.unity());
        }
    }

    #[test]
    fn wrong_entry_length_names_the_field() {
        let mut f: AlgebraFile = serde_json::from_str(&t2_json()).unwrap();
        f.table[0][0].pop();
        let err = f.to_algebra().unwrap_err().to_string();
        assert!(err.starts_with("table[0][0]: expected 3 entries"), "{err}");
    }

    #[test]
    fn bad_unity_is_a_unity_error() {
        let mut f: AlgebraFile = serde_json::from_str(&t2_json()).unwrap();
        f.unity = vec!["1".into(), "0".into(), "0".into()];
        assert!(matches!(
            f.to_algebra(),
            Err(Error::UnityLaw { index: 1, .. })
        ));
    }

    #[test]
    fn missing_field_and_bad_rational() {
        let err = parse_algebra(r#"{"name": "x", "dim": 1, "basis": ["u"], "unity": ["1"]}"#)
            .unwrap_err();
        assert!(err.to_string().contains("table"), "{err}");
        let err = parse_algebra(
            r#"{"name": "x", "dim": 1, "basis": ["u"], "unity": ["1/0"], "table": [[["1"]]]}"#,
        )
        .unwrap_err();
        assert!(err.to_string().contains("unity[0]"), "{err}");
    }

    #[test]
    fn non_associative_table_is_rejected() {
        let mut f: AlgebraFile = serde_json::from_str(&t2_json()).unwrap();
        f.table[1][2] = vec!["1".into(), "0".into(), "0".into()];
        assert!(matches!(
            f.to_algebra(),
            Err(Error::NotAssociative { .. } | Error::UnityLaw { .. })
        ));
    }

    #[test]
    fn polynomial_round_trip() {
        for name in [NamedPoly::Jordan, NamedPoly::LieTriple] {
            let f = MultilinearPolynomial::named(name);
            assert_eq!(parse_polynomial(&polynomial_to_json(&f)).unwrap(), f);
        }
        let text = r#"{"n": 2, "terms": [{"perm": [2, 1], "coeff": "-3/2"}]}"#;
        let f = parse_polynomial(text).unwrap();
        assert!(polynomial_to_json(&f).contains("\"-3/2\""));
        assert!(
            parse_polynomial(r#"{"n": 2, "terms": [{"perm": [0, 1], "coeff": "1"}]}"#).is_err()
        );
    }

    #[test]
    fn map_round_trip() {
        let m2 = build_algebra(&Preset::Matrix(2)).unwrap();
        let c = BilinearMap::commutator(&m2);
        let text = map_to_json(&c, Some("M2"));
        assert_eq!(parse_map(&text, &m2).unwrap(), c);
        let t2 = build_algebra(&Preset::UpperTriangular(2)).unwrap();
        assert!(parse_map(&text, &t2).is_err());
    }
}
