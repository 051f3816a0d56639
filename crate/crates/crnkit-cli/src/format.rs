//! On-disk document formats.
//!
//! Networks are `.crn` JSON documents with a `format_version`, a species
//! list, and reactions carrying sparse input/output coefficient maps.
//! Matrices are JSON documents with `row_labels`, `col_labels` and an
//! `entries` grid. Coefficients are JSON integers or `"p/q"` strings;
//! unknown fields are rejected by name. The writer is canonical (fixed
//! field order, sorted maps, two-space indentation, trailing newline), so
//! parse-then-write is the identity on canonically written files.

use crate::CliError;
use crnkit::arrow::ArrowRep;
use crnkit::crn::{Crn, Reaction};
use crnkit::linalg::Matrix;
use crnkit::rational::{self, Rational};
use num_traits::One;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::Path;

pub const FORMAT_VERSION: &str = "1";

/// A network document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CrnDocument {
    pub format_version: String,
    pub species: Vec<String>,
    pub reactions: Vec<ReactionDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReactionDoc {
    pub id: String,
    #[serde(default)]
    pub inputs: BTreeMap<String, Coefficient>,
    #[serde(default)]
    pub outputs: BTreeMap<String, Coefficient>,
}

/// A matrix document, the input format of `recon`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixDocument {
    pub row_labels: Vec<String>,
    pub col_labels: Vec<String>,
    pub entries: Vec<Vec<Coefficient>>,
}

/// An exact coefficient: a JSON integer, or a string `"p"` / `"p/q"` for
/// values outside the integer range of JSON numbers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coefficient {
    Integer(i64),
    Text(String),
}

impl Coefficient {
    pub fn to_rational(&self) -> Result<Rational, String> {
        match self {
            Coefficient::Integer(n) => Ok(rational::int(*n)),
            Coefficient::Text(s) => rational::parse(s).map_err(|e| e.to_string()),
        }
    }

    pub fn from_rational(r: &Rational) -> Coefficient {
        if r.denom().is_one() {
            if let Ok(n) = i64::try_from(r.numer().clone()) {
                return Coefficient::Integer(n);
            }
        }
        Coefficient::Text(rational::display(r))
    }
}

fn parse_error(path: &Path, detail: impl std::fmt::Display) -> CliError {
    CliError::Parse(format!("{}: {detail}", path.display()))
}

/// Canonical serialization: pretty JSON with a trailing newline.
pub fn to_canonical_string<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

pub fn parse_crn_document(path: &Path) -> Result<CrnDocument, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| parse_error(path, e))?;
    let doc: CrnDocument =
        serde_json::from_str(&text).map_err(|e| parse_error(path, e))?;
    if doc.format_version != FORMAT_VERSION {
        return Err(parse_error(
            path,
            format!("unsupported format_version {:?}, expected {FORMAT_VERSION:?}", doc.format_version),
        ));
    }
    Ok(doc)
}

pub fn document_to_crn(doc: &CrnDocument, path: &Path) -> Result<Crn, CliError> {
    let mut reactions = Vec::with_capacity(doc.reactions.len());
    for r in &doc.reactions {
        let convert = |side: &BTreeMap<String, Coefficient>| -> Result<Vec<(String, Rational)>, CliError> {
            side.iter()
                .map(|(species, coeff)| {
                    coeff
                        .to_rational()
                        .map(|q| (species.clone(), q))
                        .map_err(|e| {
                            parse_error(path, format!("reaction {:?}, species {species:?}: {e}", r.id))
                        })
                })
                .collect()
        };
        reactions.push(Reaction::new(r.id.clone(), convert(&r.inputs)?, convert(&r.outputs)?));
    }
    Crn::new(doc.species.clone(), reactions).map_err(|e| parse_error(path, e))
}

/// Parses and validates a network file.
pub fn parse_crn_file(path: &Path) -> Result<Crn, CliError> {
    document_to_crn(&parse_crn_document(path)?, path)
}

pub fn crn_to_document(crn: &Crn) -> CrnDocument {
    CrnDocument {
        format_version: FORMAT_VERSION.to_string(),
        species: crn.species().to_vec(),
        reactions: crn
            .reactions()
            .iter()
            .map(|r| ReactionDoc {
                id: r.id().to_string(),
                inputs: r
                    .inputs()
                    .iter()
                    .map(|(s, c)| (s.clone(), Coefficient::from_rational(c)))
                    .collect(),
                outputs: r
                    .outputs()
                    .iter()
                    .map(|(s, c)| (s.clone(), Coefficient::from_rational(c)))
                    .collect(),
            })
            .collect(),
    }
}

pub fn write_crn_file(crn: &Crn, path: &Path) -> Result<(), CliError> {
    let text = to_canonical_string(&crn_to_document(crn));
    std::fs::write(path, text)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

pub fn parse_matrix_document(path: &Path) -> Result<MatrixDocument, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| parse_error(path, e))?;
    serde_json::from_str(&text).map_err(|e| parse_error(path, e))
}

/// Parses a matrix file into a labeled arrow: columns are the domain,
/// rows the codomain.
pub fn parse_matrix_file(path: &Path) -> Result<ArrowRep, CliError> {
    let doc = parse_matrix_document(path)?;
    if doc.entries.len() != doc.row_labels.len() {
        return Err(parse_error(
            path,
            format!("{} entry rows for {} row labels", doc.entries.len(), doc.row_labels.len()),
        ));
    }
    let mut rows = Vec::with_capacity(doc.entries.len());
    for (i, row) in doc.entries.iter().enumerate() {
        if row.len() != doc.col_labels.len() {
            return Err(parse_error(
                path,
                format!("row {i} has {} entries for {} column labels", row.len(), doc.col_labels.len()),
            ));
        }
        let converted: Result<Vec<Rational>, CliError> = row
            .iter()
            .enumerate()
            .map(|(j, c)| c.to_rational().map_err(|e| parse_error(path, format!("entry ({i},{j}): {e}"))))
            .collect();
        rows.push(converted?);
    }
    ArrowRep::new(Matrix::from_rows(rows), doc.col_labels, doc.row_labels)
        .map_err(|e| parse_error(path, e))
}

/// The matrix document of a labeled matrix.
pub fn matrix_to_document(m: &Matrix, row_labels: &[String], col_labels: &[String]) -> MatrixDocument {
    MatrixDocument {
        row_labels: row_labels.to_vec(),
        col_labels: col_labels.to_vec(),
        entries: (0..m.rows())
            .map(|i| (0..m.cols()).map(|j| Coefficient::from_rational(m.get(i, j))).collect())
            .collect(),
    }
}

pub fn write_matrix_file(
    m: &Matrix,
    row_labels: &[String],
    col_labels: &[String],
    path: &Path,
) -> Result<(), CliError> {
    let text = to_canonical_string(&matrix_to_document(m, row_labels, col_labels));
    std::fs::write(path, text)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}
