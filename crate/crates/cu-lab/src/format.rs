//! The model file format: one JSON document with a `kind` discriminator.
//!
//! ```json
//! {"kind": "finite-table", "size": 2, "names": ["0", "inf"],
//!  "leq": [[1,1],[0,1]], "add": [[0,1],[1,1]], "scale": [0,1]}
//! {"kind": "nbar"}
//! {"kind": "e-k", "k": 2}
//! {"kind": "lsc", "space": {"points": ["u","v"], "leq": [[1,0],[1,1]]}}
//! {"kind": "product", "factors": [{"kind": "nbar"}, {"kind": "e-k", "k": 2}]}
//! ```
//!
//! Boolean matrices are arrays of 0/1 rows for diffability; `∞` is the
//! string `"inf"` in value positions. An optional `scale` on a
//! finite-table file lists the member indices of a scale. Parsing
//! validates shapes first (with row coordinates), then the model laws.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{CuError, CuResult};
use crate::model::{CuModel, ModelKind};
use crate::space::Space;
use crate::structure::{is_scale, validate_model, Scale};

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", deny_unknown_fields)]
enum ModelFile {
    #[serde(rename = "finite-table")]
    FiniteTable {
        size: usize,
        names: Vec<String>,
        leq: Vec<Vec<u8>>,
        add: Vec<Vec<usize>>,
        #[serde(skip_serializing_if = "Option::is_none")]
        scale: Option<Vec<usize>>,
    },
    #[serde(rename = "nbar")]
    Nbar {},
    #[serde(rename = "e-k")]
    Elementary { k: u64 },
    #[serde(rename = "lsc")]
    Lsc { space: SpaceFile },
    #[serde(rename = "product")]
    Product { factors: Vec<ModelFile> },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpaceFile {
    points: Vec<String>,
    leq: Vec<Vec<u8>>,
}

fn bool_matrix(rows: &[Vec<u8>], size: usize, what: &str) -> CuResult<Vec<Vec<bool>>> {
    if rows.len() != size {
        return Err(CuError::ParseError(format!(
            "{what} matrix has {} rows, expected {size}",
            rows.len()
        )));
    }
    let mut out = Vec::with_capacity(size);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != size {
            return Err(CuError::ParseError(format!(
                "{what} matrix row {i} has {} entries, expected {size}",
                row.len()
            )));
        }
        for (j, &v) in row.iter().enumerate() {
            if v > 1 {
                return Err(CuError::ParseError(format!(
                    "{what} matrix entry ({i},{j}) must be 0 or 1"
                )));
            }
        }
        out.push(row.iter().map(|&v| v == 1).collect());
    }
    Ok(out)
}

fn build(file: &ModelFile) -> CuResult<(CuModel, Option<Scale>)> {
    match file {
        ModelFile::FiniteTable { size, names, leq, add, scale } => {
            if names.len() != *size {
                return Err(CuError::ParseError(format!(
                    "names list has {} entries, expected {size}",
                    names.len()
                )));
            }
            let leq = bool_matrix(leq, *size, "leq")?;
            if add.len() != *size {
                return Err(CuError::ParseError(format!(
                    "add matrix has {} rows, expected {size}",
                    add.len()
                )));
            }
            for (i, row) in add.iter().enumerate() {
                if row.len() != *size {
                    return Err(CuError::ParseError(format!(
                        "add matrix row {i} has {} entries, expected {size}",
                        row.len()
                    )));
                }
                for (j, &v) in row.iter().enumerate() {
                    if v >= *size {
                        return Err(CuError::ParseError(format!(
                            "add matrix entry ({i},{j}) = {v} is out of range"
                        )));
                    }
                }
            }
            let model = CuModel::finite_table(names.clone(), leq, add.clone())?;
            let scale = match scale {
                None => None,
                Some(indices) => {
                    let mut mask = vec![false; *size];
                    for &i in indices {
                        if i >= *size {
                            return Err(CuError::ParseError(format!(
                                "scale index {i} is out of range"
                            )));
                        }
                        mask[i] = true;
                    }
                    let s = Scale::from_members(&model, mask)?;
                    if !is_scale(&model, &s)? {
                        return Err(CuError::ValidationError(
                            "declared scale is not downward-hereditary and generating".into(),
                        ));
                    }
                    Some(s)
                }
            };
            Ok((model, scale))
        }
        ModelFile::Nbar {} => Ok((CuModel::nbar(), None)),
        ModelFile::Elementary { k } => Ok((CuModel::elementary(*k), None)),
        ModelFile::Lsc { space } => {
            let n = space.points.len();
            let leq = bool_matrix(&space.leq, n, "space leq")?;
            let space = Space::new(space.points.clone(), leq)?;
            Ok((CuModel::lsc(space), None))
        }
        ModelFile::Product { factors } => {
            let mut parts = Vec::new();
            for f in factors {
                let (model, _) = build(f)?;
                parts.push(model);
            }
            Ok((CuModel::product_many(parts)?, None))
        }
    }
}

/// Parses a model document. The returned scale, when present, has already
/// passed the scale laws; absent means the full scale.
pub fn parse_model(text: &str) -> CuResult<(CuModel, Option<Scale>)> {
    let file: ModelFile =
        serde_json::from_str(text).map_err(|e| CuError::ParseError(e.to_string()))?;
    let (model, scale) = build(&file)?;
    let report = validate_model(&model);
    if !report.is_clean() {
        return Err(CuError::ValidationError(report.violations.join("\n")));
    }
    Ok((model, scale))
}

fn to_file(model: &CuModel) -> ModelFile {
    match model.kind() {
        ModelKind::FiniteTable(t) => ModelFile::FiniteTable {
            size: t.size(),
            names: t.names.clone(),
            leq: t
                .leq
                .iter()
                .map(|row| row.iter().map(|&b| u8::from(b)).collect())
                .collect(),
            add: t.add.clone(),
            scale: None,
        },
        ModelKind::Nbar => ModelFile::Nbar {},
        ModelKind::Elementary { k } => ModelFile::Elementary { k: *k },
        ModelKind::Lsc(space) => ModelFile::Lsc {
            space: SpaceFile {
                points: space.point_names().to_vec(),
                leq: space
                    .order_matrix()
                    .iter()
                    .map(|row| row.iter().map(|&b| u8::from(b)).collect())
                    .collect(),
            },
        },
        ModelKind::Product(factors) => ModelFile::Product {
            factors: factors.iter().map(to_file).collect(),
        },
    }
}

/// Serializes a model to its document form (stable key order).
pub fn serialize_model(model: &CuModel) -> String {
    let file = to_file(model);
    let value = serde_json::to_value(&file).expect("model files are serializable");
    serde_json::to_string_pretty(&value).expect("json rendering")
}

/// Serializes a model with a finite member-mask scale attached.
pub fn serialize_model_with_scale(model: &CuModel, scale: &Scale) -> CuResult<String> {
    let mut file = to_file(model);
    if let ModelFile::FiniteTable { scale: slot, .. } = &mut file {
        if !scale.is_full() {
            let carrier = model.carrier().expect("finite");
            let mut indices = Vec::new();
            for (i, e) in carrier.iter().enumerate() {
                if scale.contains(model, e)? {
                    indices.push(i);
                }
            }
            *slot = Some(indices);
        }
    }
    let value = serde_json::to_value(&file).expect("model files are serializable");
    Ok(serde_json::to_string_pretty(&value).expect("json rendering"))
}

/// Reads a search-spec document.
pub fn parse_search_spec(text: &str) -> CuResult<crate::search::SearchSpec> {
    serde_json::from_str(text).map_err(|e| CuError::ParseError(e.to_string()))
}

/// Renders an element as a JSON value: names for finite tables, numbers
/// with `"inf"` for the extended naturals, arrays for vectors and tuples.
pub fn element_json(model: &CuModel, e: &crate::model::Element) -> Value {
    use crate::extnat::ExtNat;
    use crate::model::Payload;
    fn nat_value(v: &ExtNat) -> Value {
        match v {
            ExtNat::Fin(n) => Value::from(*n),
            ExtNat::Inf => Value::from("inf"),
        }
    }
    fn go(model: &CuModel, payload: &Payload) -> Value {
        match (model.kind(), payload) {
            (ModelKind::FiniteTable(t), Payload::Index(i)) => Value::from(t.names[*i].clone()),
            (_, Payload::Nat(v)) => nat_value(v),
            (_, Payload::Vector(vals)) => Value::from(
                vals.iter().map(nat_value).collect::<Vec<_>>(),
            ),
            (ModelKind::Product(fs), Payload::Tuple(parts)) => Value::from(
                fs.iter()
                    .zip(parts)
                    .map(|(f, p)| go(f, p))
                    .collect::<Vec<_>>(),
            ),
            _ => unreachable!("payload shape does not match model kind"),
        }
    }
    go(model, e.payload())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_serialize_roundtrip() {
        for (_, model) in crate::corpus::all() {
            let text = serialize_model(&model);
            let (reparsed, _) = parse_model(&text).unwrap();
            assert_eq!(reparsed, model);
            assert_eq!(serialize_model(&reparsed), text);
        }
    }

    #[test]
    fn non_square_add_matrix_names_the_row() {
        let text = r#"{"kind":"finite-table","size":2,"names":["0","a"],
                       "leq":[[1,1],[0,1]],"add":[[0,1],[1]]}"#;
        let err = parse_model(text).unwrap_err();
        match err {
            CuError::ParseError(msg) => assert!(msg.contains("row 1"), "{msg}"),
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn zero_not_least_is_a_validation_error() {
        let text = r#"{"kind":"finite-table","size":2,"names":["0","a"],
                       "leq":[[1,0],[0,1]],"add":[[0,1],[1,1]]}"#;
        let err = parse_model(text).unwrap_err();
        match err {
            CuError::ValidationError(msg) => assert!(msg.contains("zero-least"), "{msg}"),
            other => panic!("expected a validation error, got {other:?}"),
        }
    }

    #[test]
    fn elementary_file_matches_constructor() {
        let (model, _) = parse_model(r#"{"kind":"e-k","k":2}"#).unwrap();
        assert_eq!(model, CuModel::elementary(2));
        assert_eq!(model.carrier_len(), Some(4));
    }

    #[test]
    fn scale_from_file_is_validated() {
        // {0, 1} is a hereditary generating subset of E_2
        let good = r#"{"kind":"finite-table","size":3,"names":["0","1","inf"],
                       "leq":[[1,1,1],[0,1,1],[0,0,1]],
                       "add":[[0,1,2],[1,2,2],[2,2,2]],"scale":[0,1]}"#;
        let (_, scale) = parse_model(good).unwrap();
        assert!(scale.is_some());

        // {0} does not generate
        let bad = r#"{"kind":"finite-table","size":3,"names":["0","1","inf"],
                      "leq":[[1,1,1],[0,1,1],[0,0,1]],
                      "add":[[0,1,2],[1,2,2],[2,2,2]],"scale":[0]}"#;
        assert!(matches!(parse_model(bad), Err(CuError::ValidationError(_))));
    }
}
