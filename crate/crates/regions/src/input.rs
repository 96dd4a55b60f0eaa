//! Input documents: a JSON schema with either normal vectors or an
//! explicit tope list.
//!
//! ```json
//! {"dimension": 2, "normals": [[1, 0], [0, 1], ["1/2", "-3"]]}
//! {"elements": 2, "topes": ["++", "+-", "-+", "--"]}
//! ```

use num::BigRational;
use serde::Deserialize;

use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::exact::parse_rational;
use crate::sign::SignVector;

#[derive(Deserialize)]
#[serde(untagged)]
enum InputDoc {
    Geometric {
        dimension: usize,
        normals: Vec<Vec<Coefficient>>,
    },
    Topes {
        elements: usize,
        topes: Vec<String>,
    },
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Coefficient {
    Int(i64),
    Text(String),
}

impl Coefficient {
    fn to_rational(&self) -> Result<BigRational> {
        match self {
            Coefficient::Int(v) => Ok(BigRational::from_integer((*v).into())),
            Coefficient::Text(s) => parse_rational(s),
        }
    }
}

/// Parses an arrangement document. Parse errors carry the position
/// reported by the JSON parser; semantic errors carry the offending index.
pub fn parse_arrangement(text: &str) -> Result<Arrangement> {
    let doc: InputDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    match doc {
        InputDoc::Geometric { dimension, normals } => {
            let mut rows = Vec::with_capacity(normals.len());
            for row in &normals {
                rows.push(
                    row.iter()
                        .map(Coefficient::to_rational)
                        .collect::<Result<Vec<_>>>()?,
                );
            }
            Arrangement::from_normals(dimension, rows)
        }
        InputDoc::Topes { elements, topes } => {
            let mut parsed = Vec::with_capacity(topes.len());
            for (i, t) in topes.iter().enumerate() {
                let sv = SignVector::parse(t)?;
                if !sv.is_zero_free() {
                    return Err(Error::MalformedTope {
                        index: i,
                        reason: "contains a zero entry; topes use only `+` and `-`".into(),
                    });
                }
                parsed.push(sv);
            }
            Arrangement::from_topes(elements, parsed)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::Mode;

    #[test]
    fn parses_geometric_documents() {
        let arr =
            parse_arrangement(r#"{"dimension": 2, "normals": [[1, 0], ["0", "1/1"]]}"#).unwrap();
        assert_eq!(arr.mode(), Mode::Geometric);
        assert_eq!(arr.n(), 2);
        assert_eq!(arr.rank(), Some(2));
    }

    #[test]
    fn parses_tope_documents() {
        let arr =
            parse_arrangement(r#"{"elements": 2, "topes": ["++", "+-", "-+", "--"]}"#).unwrap();
        assert_eq!(arr.mode(), Mode::TopeOnly);
    }

    #[test]
    fn malformed_rational_is_reported() {
        let err = parse_arrangement(r#"{"dimension": 2, "normals": [[1, 0], ["1/0", 1]]}"#);
        assert!(matches!(err, Err(Error::MalformedRational { .. })));
        let err = parse_arrangement(r#"{"dimension": 2, "normals": [[1, 0], ["x", 1]]}"#);
        assert!(matches!(err, Err(Error::MalformedRational { .. })));
    }

    #[test]
    fn malformed_json_reports_position() {
        let err = parse_arrangement("{\"dimension\": 2,\n \"normals\": [[1, 0], }");
        match err {
            Err(Error::Parse(msg)) => assert!(msg.contains("line"), "{msg}"),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn tope_document_with_zero_rejected() {
        let err = parse_arrangement(r#"{"elements": 2, "topes": ["+0", "-0"]}"#);
        assert!(matches!(err, Err(Error::MalformedTope { .. })));
    }
}
