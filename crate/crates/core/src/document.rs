//! JSON document format for algebras.
//!
//! ```json
//! {
//!   "dim": 3,
//!   "c_entries": [
//!     [2, 3, 1, "1"]
//!   ],
//!   "omega_entries": []
//! }
//! ```
//!
//! A `c_entries` item `[i, j, k, v]` means `c^k_ij = v` (so `[e_i, e_j]` has
//! `e_k` component `v`); `omega_entries` items `[i, j, v]` mean `ω_ij = v`.
//! Indices are 1-based with `i < j`, the skew partners are implied. Values are
//! exact rationals written `"p"` or `"p/q"`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use num::Zero;

use crate::algebra::AlgebraSpec;
use crate::error::{Error, Result};
use crate::scalar::{format_scalar, parse_scalar, Field, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    pub dim: usize,
    #[serde(default)]
    pub c_entries: Vec<(usize, usize, usize, String)>,
    #[serde(default)]
    pub omega_entries: Vec<(usize, usize, String)>,
    /// Free-form annotations (label, parameter, seed); ignored by the parser.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub metadata: BTreeMap<String, String>,
}

impl AlgebraDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn to_spec(&self) -> Result<AlgebraSpec> {
        let dim = self.dim;
        if dim == 0 {
            return Err(Error::UnsupportedDimension {
                requirement: ">= 1",
                actual: 0,
            });
        }
        let check = |index: usize| {
            if (1..=dim).contains(&index) {
                Ok(index - 1)
            } else {
                Err(Error::IndexOutOfRange { index, dim })
            }
        };
        let mut spec = AlgebraSpec::abelian(dim);
        let mut seen = BTreeSet::new();
        for (i, j, k, value) in &self.c_entries {
            let name = format!("c[{i},{j},{k}]");
            let (i0, j0, k0) = (check(*i)?, check(*j)?, check(*k)?);
            if i >= j {
                return Err(Error::UnorderedEntry(name));
            }
            if !seen.insert((i0, j0, k0)) {
                return Err(Error::DuplicateEntry(name));
            }
            spec.set_bracket(i0, j0, k0, parse_scalar(value)?);
        }
        let mut seen = BTreeSet::new();
        for (i, j, value) in &self.omega_entries {
            let name = format!("omega[{i},{j}]");
            let (i0, j0) = (check(*i)?, check(*j)?);
            if i >= j {
                return Err(Error::UnorderedEntry(name));
            }
            if !seen.insert((i0, j0)) {
                return Err(Error::DuplicateEntry(name));
            }
            spec.set_omega(i0, j0, parse_scalar(value)?);
        }
        Ok(spec)
    }

    /// Canonical document of a skew spec: zero entries dropped, ordering by
    /// `(i, j)` then `k`, lowest-terms values.
    pub fn from_spec<T: Field>(spec: &AlgebraSpec<T>) -> Result<Self> {
        let violations = spec.validate_skew().len();
        if violations > 0 {
            return Err(Error::NotSkew(violations));
        }
        let exact = |v: &T| v.to_exact().ok_or(Error::NonRational);
        let dim = spec.dim();
        let mut c_entries = Vec::new();
        let mut omega_entries = Vec::new();
        for i in 0..dim {
            for j in i + 1..dim {
                for k in 0..dim {
                    let v: Scalar = exact(spec.c(k, i, j))?;
                    if !v.is_zero() {
                        c_entries.push((i + 1, j + 1, k + 1, format_scalar(&v)));
                    }
                }
            }
        }
        for i in 0..dim {
            for j in i + 1..dim {
                let v = exact(spec.omega(i, j))?;
                if !v.is_zero() {
                    omega_entries.push((i + 1, j + 1, format_scalar(&v)));
                }
            }
        }
        Ok(Self {
            dim,
            c_entries,
            omega_entries,
            metadata: BTreeMap::new(),
        })
    }

    pub fn with_metadata(mut self, key: &str, value: impl Into<String>) -> Self {
        self.metadata.insert(key.to_string(), value.into());
        self
    }

    /// Byte-stable text form, one entry per line.
    pub fn to_json(&self) -> String {
        let quote = |s: &str| serde_json::to_string(s).expect("strings serialize");
        let mut out = String::new();
        let _ = writeln!(out, "{{");
        let _ = writeln!(out, "  \"dim\": {},", self.dim);
        let c: Vec<String> = self
            .c_entries
            .iter()
            .map(|(i, j, k, v)| format!("[{i}, {j}, {k}, {}]", quote(v)))
            .collect();
        let w: Vec<String> = self
            .omega_entries
            .iter()
            .map(|(i, j, v)| format!("[{i}, {j}, {}]", quote(v)))
            .collect();
        let _ = writeln!(out, "  \"c_entries\": {},", json_list(&c));
        let _ = write!(out, "  \"omega_entries\": {}", json_list(&w));
        if !self.metadata.is_empty() {
            let m = serde_json::to_string(&self.metadata).expect("map serializes");
            let _ = write!(out, ",\n  \"metadata\": {m}");
        }
        out.push_str("\n}\n");
        out
    }
}

fn json_list(items: &[String]) -> String {
    if items.is_empty() {
        return "[]".to_string();
    }
    format!("[\n    {}\n  ]", items.join(",\n    "))
}

/// Parses a document into an exact spec.
pub fn parse(text: &str) -> Result<AlgebraSpec> {
    AlgebraDocument::from_json(text)?.to_spec()
}

/// Canonical document text of a spec. Float specs are rejected.
pub fn serialize<T: Field>(spec: &AlgebraSpec<T>) -> Result<String> {
    Ok(AlgebraDocument::from_spec(spec)?.to_json())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};

    #[test]
    fn parses_type_ii() {
        let s = parse(r#"{"dim":3,"c_entries":[[2,3,1,"1"]],"omega_entries":[]}"#).unwrap();
        let mut expected = AlgebraSpec::abelian(3);
        expected.set_bracket(1, 2, 0, int(1));
        assert_eq!(s, expected);
    }

    #[test]
    fn empty_document_is_abelian() {
        let s = parse(r#"{"dim":3,"c_entries":[],"omega_entries":[]}"#).unwrap();
        assert_eq!(s, AlgebraSpec::abelian(3));
        let text = serialize(&s).unwrap();
        assert_eq!(
            text,
            "{\n  \"dim\": 3,\n  \"c_entries\": [],\n  \"omega_entries\": []\n}\n"
        );
    }

    #[test]
    fn values_are_stored_in_lowest_terms() {
        let s = parse(r#"{"dim":3,"c_entries":[[1,2,3,"2/4"]],"omega_entries":[]}"#).unwrap();
        assert_eq!(s.c(2, 0, 1), &ratio(1, 2));
        assert!(serialize(&s).unwrap().contains("[1, 2, 3, \"1/2\"]"));
    }

    #[test]
    fn type_v_storage() {
        let mut v = AlgebraSpec::abelian(3);
        v.set_bracket(2, 0, 0, int(1));
        v.set_bracket(1, 2, 1, int(-1));
        let doc = AlgebraDocument::from_spec(&v).unwrap();
        assert_eq!(
            doc.c_entries,
            vec![(1, 3, 1, "-1".to_string()), (2, 3, 2, "-1".to_string())]
        );
    }

    #[test]
    fn structural_errors() {
        let cases = [
            (r#"{"dim":3,"c_entries":[[1,4,1,"1"]]}"#, "out of range"),
            (r#"{"dim":3,"c_entries":[[2,1,1,"1"]]}"#, "i < j"),
            (
                r#"{"dim":3,"c_entries":[[1,2,1,"1"],[1,2,1,"2"]]}"#,
                "duplicate",
            ),
            (r#"{"dim":3,"omega_entries":[[1,2,"x"]]}"#, "malformed"),
            (
                r#"{"dim":3,"omega_entries":[[1,3,"1"],[1,3,"1"]]}"#,
                "duplicate",
            ),
            (r#"{"dim":0}"#, "dimension"),
        ];
        for (text, needle) in cases {
            let err = parse(text).unwrap_err().to_string();
            assert!(err.contains(needle), "{text}: {err}");
        }
    }

    #[test]
    fn syntax_errors_report_position() {
        match parse("{\n  \"dim\": 3,\n  oops\n}") {
            Err(Error::Syntax { line, column, .. }) => {
                assert_eq!(line, 3);
                assert!(column > 0);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn float_specs_are_rejected() {
        let s = AlgebraSpec::<f64>::abelian(3);
        assert!(matches!(serialize(&s), Err(Error::NonRational)));
    }

    #[test]
    fn metadata_round_trips() {
        let doc = AlgebraDocument::from_spec(&AlgebraSpec::<Scalar>::abelian(2))
            .unwrap()
            .with_metadata("label", "I");
        let text = doc.to_json();
        assert_eq!(AlgebraDocument::from_json(&text).unwrap(), doc);
    }
}
