//! The array-document JSON format. A document pins the field (p, k, and
//! modulus when k > 1), the dimensions, the entry matrix, and optional
//! provenance. Parsing a document yields an array *candidate*: dimension and
//! field consistency are enforced here, but Heffter verification is not
//! implied — run the checks separately.
//!
//! Serialization is canonical: compact JSON with a fixed key order and a
//! trailing newline, so equal documents are byte-identical and diffable.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use heffter_core::{Field, FieldElement, HeffterArray};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ArrayDocument {
    pub field: FieldDoc,
    pub m: usize,
    pub n: usize,
    pub entries: Vec<Vec<Entry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Provenance>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FieldDoc {
    pub p: u64,
    pub k: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u64>>,
}

/// A matrix entry: a bare residue (prime fields only) or a k-length
/// coefficient list, constant coefficient first. Output always uses the
/// bare form for k = 1 and the list form otherwise.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Residue(i64),
    Coeffs(Vec<i64>),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Provenance {
    pub method: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub params: Option<serde_json::Value>,
}

impl Provenance {
    pub fn external() -> Provenance {
        Provenance {
            method: "external".into(),
            params: None,
        }
    }

    pub fn perfect() -> Provenance {
        Provenance {
            method: "perfect".into(),
            params: None,
        }
    }

    pub fn agreeable(m1: u64, n1: u64) -> Provenance {
        Provenance {
            method: "agreeable".into(),
            params: Some(serde_json::json!({ "m1": m1, "n1": n1 })),
        }
    }

    pub fn search(strategy: &str, seed: u64, max_candidates: u64) -> Provenance {
        Provenance {
            method: "search".into(),
            params: Some(serde_json::json!({
                "strategy": strategy,
                "seed": seed,
                "max_candidates": max_candidates,
            })),
        }
    }
}

/// Document failures split by exit-code class: `Parse` for malformed JSON
/// (with line/column from the JSON parser), `Schema` for well-formed JSON
/// that does not describe a valid array candidate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DocumentError {
    Parse(String),
    Schema(String),
}

impl fmt::Display for DocumentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DocumentError::Parse(msg) => write!(f, "parse error: {msg}"),
            DocumentError::Schema(msg) => write!(f, "schema error: {msg}"),
        }
    }
}

impl std::error::Error for DocumentError {}

impl ArrayDocument {
    pub fn parse(text: &str) -> Result<ArrayDocument, DocumentError> {
        serde_json::from_str(text).map_err(|e| DocumentError::Parse(e.to_string()))
    }

    /// Compact canonical JSON with a trailing newline.
    pub fn to_canonical_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("document serialization cannot fail");
        s.push('\n');
        s
    }

    pub fn from_array(a: &HeffterArray, provenance: Option<Provenance>) -> ArrayDocument {
        let f = a.field();
        let entries = (0..a.m())
            .map(|i| {
                a.row(i)
                    .iter()
                    .map(|&x| {
                        if f.k() == 1 {
                            Entry::Residue(x.encoding() as i64)
                        } else {
                            Entry::Coeffs(f.coeffs(x).iter().map(|&c| c as i64).collect())
                        }
                    })
                    .collect()
            })
            .collect();
        ArrayDocument {
            field: FieldDoc {
                p: f.p(),
                k: f.k(),
                modulus: f.modulus().map(|m| m.to_vec()),
            },
            m: a.m(),
            n: a.n(),
            entries,
            provenance,
        }
    }

    /// Decodes the document into an array candidate. Entries must be nonzero
    /// (a half-set can never contain 0) but duplicates pass through so that
    /// verification can report them.
    pub fn to_array(&self) -> Result<HeffterArray, DocumentError> {
        let field = Field::new(self.field.p, self.field.k, self.field.modulus.as_deref())
            .map_err(|e| DocumentError::Schema(format!("invalid field: {e}")))?;
        let field = Arc::new(field);
        if self.entries.len() != self.m {
            return Err(DocumentError::Schema(format!(
                "expected {} rows, found {}",
                self.m,
                self.entries.len()
            )));
        }
        let mut entries: Vec<FieldElement> = Vec::with_capacity(self.m * self.n);
        for (i, row) in self.entries.iter().enumerate() {
            if row.len() != self.n {
                return Err(DocumentError::Schema(format!(
                    "row {} has {} entries, expected {}",
                    i + 1,
                    row.len(),
                    self.n
                )));
            }
            for (j, entry) in row.iter().enumerate() {
                let x = decode_entry(&field, entry)
                    .map_err(|msg| DocumentError::Schema(format!("entry ({},{}): {msg}", i + 1, j + 1)))?;
                if x.is_zero() {
                    return Err(DocumentError::Schema(format!(
                        "zero entry at ({},{}); half-sets exclude 0",
                        i + 1,
                        j + 1
                    )));
                }
                entries.push(x);
            }
        }
        HeffterArray::new(&field, self.m, self.n, entries)
            .map_err(|e| DocumentError::Schema(e.to_string()))
    }
}

fn decode_entry(field: &Arc<Field>, entry: &Entry) -> Result<FieldElement, String> {
    match entry {
        Entry::Residue(v) => {
            if field.k() != 1 {
                return Err("bare integers are only valid over prime fields".into());
            }
            field.element_from_coeffs(&[*v]).map_err(|e| e.to_string())
        }
        Entry::Coeffs(coeffs) => {
            if coeffs.len() != field.k() as usize {
                return Err(format!(
                    "coefficient list has length {}, expected {}",
                    coeffs.len(),
                    field.k()
                ));
            }
            field.element_from_coeffs(coeffs).map_err(|e| e.to_string())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE1: &str = r#"{"field":{"p":19,"k":1},"m":3,"n":3,"entries":[[1,3,15],[7,2,10],[11,14,13]]}"#;

    #[test]
    fn parses_the_example1_document() {
        let doc = ArrayDocument::parse(EXAMPLE1).unwrap();
        let a = doc.to_array().unwrap();
        let report = a.verify();
        assert!(report.is_heffter() && report.rank_one);
    }

    #[test]
    fn round_trip_is_byte_identical() {
        let doc = ArrayDocument::parse(EXAMPLE1).unwrap();
        let a = doc.to_array().unwrap();
        let out = ArrayDocument::from_array(&a, None);
        let bytes = out.to_canonical_json();
        let reparsed = ArrayDocument::parse(&bytes).unwrap();
        assert_eq!(reparsed.to_canonical_json(), bytes);
    }

    #[test]
    fn extension_field_document_round_trips() {
        let a = heffter_core::construct_perfect(9, 19).unwrap();
        let doc = ArrayDocument::from_array(&a, Some(Provenance::perfect()));
        assert_eq!(doc.field.k, 3);
        assert!(doc.field.modulus.is_some());
        let text = doc.to_canonical_json();
        let back = ArrayDocument::parse(&text).unwrap().to_array().unwrap();
        assert_eq!(back, a);
        assert_eq!(
            ArrayDocument::parse(&text).unwrap().to_canonical_json(),
            text
        );
    }

    #[test]
    fn zero_entries_are_schema_errors() {
        let text = r#"{"field":{"p":19,"k":1},"m":3,"n":3,"entries":[[0,3,15],[7,2,10],[11,14,13]]}"#;
        let err = ArrayDocument::parse(text).unwrap().to_array().unwrap_err();
        assert!(matches!(err, DocumentError::Schema(_)));
        assert!(err.to_string().contains("zero entry"));
    }

    #[test]
    fn malformed_json_reports_position() {
        let err = ArrayDocument::parse("{\"field\": {").unwrap_err();
        match err {
            DocumentError::Parse(msg) => assert!(msg.contains("line"), "{msg}"),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn dimension_mismatches_are_schema_errors() {
        let wrong_q = r#"{"field":{"p":23,"k":1},"m":3,"n":3,"entries":[[1,3,15],[7,2,10],[11,14,13]]}"#;
        assert!(matches!(
            ArrayDocument::parse(wrong_q).unwrap().to_array().unwrap_err(),
            DocumentError::Schema(_)
        ));
        let ragged = r#"{"field":{"p":19,"k":1},"m":3,"n":3,"entries":[[1,3],[7,2,10],[11,14,13]]}"#;
        assert!(matches!(
            ArrayDocument::parse(ragged).unwrap().to_array().unwrap_err(),
            DocumentError::Schema(_)
        ));
    }

    #[test]
    fn duplicate_entries_pass_through_for_verification() {
        let text = r#"{"field":{"p":19,"k":1},"m":3,"n":3,"entries":[[3,3,15],[7,2,10],[11,14,13]]}"#;
        let a = ArrayDocument::parse(text).unwrap().to_array().unwrap();
        assert!(!a.verify().half_set);
    }

    #[test]
    fn bare_integers_rejected_over_extension_fields() {
        let text = r#"{"field":{"p":5,"k":2},"m":3,"n":4,"entries":[[1,1,1,1],[1,1,1,1],[1,1,1,1]]}"#;
        let err = ArrayDocument::parse(text).unwrap().to_array().unwrap_err();
        assert!(matches!(err, DocumentError::Schema(_)));
    }

    #[test]
    fn negative_residues_normalize() {
        let text = r#"{"field":{"p":19,"k":1},"m":3,"n":3,"entries":[[1,3,-4],[7,2,-9],[-8,-5,-6]]}"#;
        let a = ArrayDocument::parse(text).unwrap().to_array().unwrap();
        assert!(a.verify().is_heffter());
        let doc = ArrayDocument::from_array(&a, None);
        match doc.entries[0][2] {
            Entry::Residue(v) => assert_eq!(v, 15),
            _ => panic!("expected residue"),
        }
    }
}
