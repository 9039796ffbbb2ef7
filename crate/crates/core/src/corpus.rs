//! Corpus and weight-vector file formats.
//!
//! Corpora come as JSON lines (`{"id": .., "citations": .., "authors": [..]}`
//! per line) or CSV with header `id,citations,authors` where the authors
//! cell is `;`-joined. Weight vectors are written as `position,weight` CSV
//! (exact fractions or 6-place decimals) or JSON.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fraction::{parse_rational, render_common, to_decimal};
use crate::index::{PaperRecord, RecordError};
use crate::{Rational, WeightError, Weights};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CorpusFormat {
    JsonLines,
    Csv,
}

impl CorpusFormat {
    /// `.csv` files are CSV, everything else is JSON lines.
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("csv") => CorpusFormat::Csv,
            _ => CorpusFormat::JsonLines,
        }
    }
}

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("line {line}: malformed record: {reason}")]
    MalformedRecord { line: u64, reason: String },
    #[error("line {line}: duplicate paper id '{id}'")]
    DuplicatePaperId { line: u64, id: String },
    #[error("line {line}: negative citation count")]
    NegativeCitations { line: u64 },
    #[error("line {line}: empty author list")]
    EmptyAuthorList { line: u64 },
    #[error("author id '{0}' contains ';' and cannot be written as CSV")]
    UnwritableAuthor(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusDocument {
    pub papers: Vec<PaperRecord>,
    pub source_path: String,
    pub format: CorpusFormat,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonRecord {
    id: String,
    citations: serde_json::Number,
    authors: Vec<String>,
}

#[derive(Serialize)]
struct JsonRecordOut<'a> {
    id: &'a str,
    citations: u64,
    authors: &'a [String],
}

/// Parses and validates a corpus held in memory.
pub fn parse_corpus(bytes: &[u8], format: CorpusFormat) -> Result<CorpusDocument, CorpusError> {
    let papers = match format {
        CorpusFormat::JsonLines => parse_json_lines(bytes)?,
        CorpusFormat::Csv => parse_csv(bytes)?,
    };
    Ok(CorpusDocument {
        papers,
        source_path: "-".to_string(),
        format,
    })
}

/// Reads a corpus file, picking the format from its extension.
pub fn load_corpus(path: &Path) -> Result<CorpusDocument, CorpusError> {
    let bytes = fs::read(path).map_err(|source| CorpusError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let format = CorpusFormat::from_path(path);
    let mut doc = parse_corpus(&bytes, format)?;
    doc.source_path = path.display().to_string();
    Ok(doc)
}

struct Validator {
    ids: HashSet<String>,
    papers: Vec<PaperRecord>,
}

impl Validator {
    fn new() -> Self {
        Validator {
            ids: HashSet::new(),
            papers: Vec::new(),
        }
    }

    fn push(
        &mut self,
        line: u64,
        id: String,
        citations: u64,
        authors: Vec<String>,
    ) -> Result<(), CorpusError> {
        if self.ids.contains(&id) {
            return Err(CorpusError::DuplicatePaperId { line, id });
        }
        let record = PaperRecord::new(id.clone(), citations, authors).map_err(|e| match e {
            RecordError::EmptyAuthors(_) => CorpusError::EmptyAuthorList { line },
            other => CorpusError::MalformedRecord {
                line,
                reason: other.to_string(),
            },
        })?;
        self.ids.insert(id);
        self.papers.push(record);
        Ok(())
    }
}

fn parse_citations(text: &str, line: u64) -> Result<u64, CorpusError> {
    let text = text.trim();
    match text.parse::<i128>() {
        Ok(n) if n < 0 => Err(CorpusError::NegativeCitations { line }),
        Ok(n) => u64::try_from(n).map_err(|_| CorpusError::MalformedRecord {
            line,
            reason: format!("citation count {n} too large"),
        }),
        Err(_) => Err(CorpusError::MalformedRecord {
            line,
            reason: format!("citations '{text}' is not an integer"),
        }),
    }
}

fn parse_json_lines(bytes: &[u8]) -> Result<Vec<PaperRecord>, CorpusError> {
    let text = std::str::from_utf8(bytes).map_err(|e| CorpusError::MalformedRecord {
        line: 1 + bytes[..e.valid_up_to()]
            .iter()
            .filter(|&&b| b == b'\n')
            .count() as u64,
        reason: "invalid UTF-8".to_string(),
    })?;
    let mut validator = Validator::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i as u64 + 1;
        if raw.trim().is_empty() {
            continue;
        }
        let record: JsonRecord =
            serde_json::from_str(raw).map_err(|e| CorpusError::MalformedRecord {
                line,
                reason: e.to_string(),
            })?;
        let citations = parse_citations(&record.citations.to_string(), line)?;
        validator.push(line, record.id, citations, record.authors)?;
    }
    Ok(validator.papers)
}

fn parse_csv(bytes: &[u8]) -> Result<Vec<PaperRecord>, CorpusError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(bytes);
    let header_error = |reason: String| CorpusError::MalformedRecord { line: 1, reason };
    let headers = reader
        .headers()
        .map_err(|e| header_error(e.to_string()))?
        .clone();
    // an entirely empty file is an empty corpus
    if headers.is_empty() {
        return Ok(Vec::new());
    }
    if headers.iter().collect::<Vec<_>>() != ["id", "citations", "authors"] {
        return Err(header_error(format!(
            "expected header 'id,citations,authors', found '{}'",
            headers.iter().collect::<Vec<_>>().join(",")
        )));
    }

    let mut validator = Validator::new();
    for result in reader.records() {
        let record = result.map_err(|e| CorpusError::MalformedRecord {
            line: e.position().map_or(0, |p| p.line()),
            reason: e.to_string(),
        })?;
        let line = record.position().map_or(0, |p| p.line());
        if record.len() != 3 {
            return Err(CorpusError::MalformedRecord {
                line,
                reason: format!("expected 3 fields, found {}", record.len()),
            });
        }
        let citations = parse_citations(&record[1], line)?;
        let authors: Vec<String> = if record[2].is_empty() {
            Vec::new()
        } else {
            record[2].split(';').map(|a| a.trim().to_string()).collect()
        };
        if authors.iter().any(String::is_empty) && !authors.is_empty() {
            return Err(CorpusError::MalformedRecord {
                line,
                reason: "blank author id".to_string(),
            });
        }
        validator.push(line, record[0].to_string(), citations, authors)?;
    }
    Ok(validator.papers)
}

fn csv_field(text: &str, always_quote: bool) -> String {
    if always_quote || text.contains([',', '"', '\n', '\r']) || text.trim() != text {
        format!("\"{}\"", text.replace('"', "\"\""))
    } else {
        text.to_string()
    }
}

/// Serialises papers in the given corpus format.
pub fn write_corpus(papers: &[PaperRecord], format: CorpusFormat) -> Result<String, CorpusError> {
    let mut out = String::new();
    match format {
        CorpusFormat::JsonLines => {
            for p in papers {
                let record = JsonRecordOut {
                    id: p.paper_id(),
                    citations: p.citations(),
                    authors: p.authors(),
                };
                out.push_str(&serde_json::to_string(&record).expect("record serialises"));
                out.push('\n');
            }
        }
        CorpusFormat::Csv => {
            out.push_str("id,citations,authors\n");
            for p in papers {
                if let Some(bad) = p.authors().iter().find(|a| a.contains(';')) {
                    return Err(CorpusError::UnwritableAuthor(bad.clone()));
                }
                let _ = writeln!(
                    out,
                    "{},{},{}",
                    csv_field(p.paper_id(), false),
                    p.citations(),
                    csv_field(&p.authors().join(";"), true)
                );
            }
        }
    }
    Ok(out)
}

/// Output encodings for a weight vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum WeightFormat {
    /// `position,weight` with 6-place decimals, round half to even.
    CsvDecimal,
    /// `position,weight` with exact fractions over the row's common
    /// denominator, e.g. `4/10` rather than `2/5`.
    #[default]
    CsvFraction,
    /// `{"k": .., "weights": [{"position", "fraction", "decimal"}, ..]}`.
    Json,
}

impl WeightFormat {
    pub fn name(self) -> &'static str {
        match self {
            WeightFormat::CsvDecimal => "csv-decimal",
            WeightFormat::CsvFraction => "csv-fraction",
            WeightFormat::Json => "json",
        }
    }
}

impl std::str::FromStr for WeightFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv-decimal" => Ok(WeightFormat::CsvDecimal),
            "csv-fraction" => Ok(WeightFormat::CsvFraction),
            "json" => Ok(WeightFormat::Json),
            other => Err(format!(
                "unknown weight format '{other}' (expected csv-fraction, csv-decimal or json)"
            )),
        }
    }
}

pub const DECIMAL_PLACES: usize = 6;

#[derive(Serialize)]
struct JsonWeights {
    k: usize,
    weights: Vec<JsonWeight>,
}

#[derive(Serialize)]
struct JsonWeight {
    position: usize,
    fraction: String,
    decimal: serde_json::Number,
}

pub fn write_weights(v: &Weights, format: WeightFormat) -> String {
    let fractions = render_common(v.weights());
    match format {
        WeightFormat::CsvFraction | WeightFormat::CsvDecimal => {
            let mut out = String::from("position,weight\n");
            for ((position, w), fraction) in v.positions().zip(&fractions) {
                let cell = match format {
                    WeightFormat::CsvFraction => fraction.clone(),
                    _ => to_decimal(w, DECIMAL_PLACES),
                };
                let _ = writeln!(out, "{position},{cell}");
            }
            out
        }
        WeightFormat::Json => {
            let weights = v
                .positions()
                .zip(fractions)
                .map(|((position, w), fraction)| JsonWeight {
                    position,
                    fraction,
                    decimal: decimal_number(w),
                })
                .collect();
            let mut out = serde_json::to_string_pretty(&JsonWeights { k: v.k(), weights })
                .expect("weights serialise");
            out.push('\n');
            out
        }
    }
}

fn decimal_number(w: &Rational) -> serde_json::Number {
    let text = to_decimal(w, DECIMAL_PLACES);
    let value: f64 = text.parse().expect("decimal rendering parses");
    serde_json::Number::from_f64(value).expect("finite decimal")
}

#[derive(Debug, Error)]
pub enum WeightsParseError {
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error(transparent)]
    Invalid(#[from] WeightError),
}

/// Reads back `position,weight` CSV. Fraction cells are recovered exactly;
/// decimal cells are read as the exact decimal they spell, so rounded output
/// generally fails the sum-to-one check.
pub fn parse_weights_csv(text: &str) -> Result<Weights, WeightsParseError> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, "position,weight")) => {}
        _ => {
            return Err(WeightsParseError::Malformed {
                line: 1,
                reason: "expected header 'position,weight'".to_string(),
            })
        }
    }
    let mut weights = Vec::new();
    for (i, line) in lines {
        let line_no = i + 1;
        let malformed = |reason: String| WeightsParseError::Malformed {
            line: line_no,
            reason,
        };
        let (position, weight) = line
            .split_once(',')
            .ok_or_else(|| malformed("expected 'position,weight'".to_string()))?;
        let position: usize = position
            .trim()
            .parse()
            .map_err(|_| malformed(format!("bad position '{position}'")))?;
        if position != weights.len() + 1 {
            return Err(malformed(format!(
                "expected position {}, found {position}",
                weights.len() + 1
            )));
        }
        weights.push(parse_rational(weight).map_err(|e| malformed(e.to_string()))?);
    }
    Ok(Weights::new(weights)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scheme::{equal_weights, geometric_weights, type1_weights};

    const JSON_LINE: &str = r#"{"id":"p1","citations":10,"authors":["a","b","c","d"]}"#;

    #[test]
    fn json_and_csv_agree() {
        let json = parse_corpus(JSON_LINE.as_bytes(), CorpusFormat::JsonLines).unwrap();
        let csv = parse_corpus(
            b"id,citations,authors\np1,10,\"a;b;c;d\"\n",
            CorpusFormat::Csv,
        )
        .unwrap();
        assert_eq!(json.papers.len(), 1);
        assert_eq!(json.papers, csv.papers);
        assert_eq!(json.papers[0].authors(), ["a", "b", "c", "d"]);
    }

    #[test]
    fn negative_citations_report_line() {
        let input =
            format!("{JSON_LINE}\n{{\"id\":\"p2\",\"citations\":-3,\"authors\":[\"a\"]}}\n");
        let err = parse_corpus(input.as_bytes(), CorpusFormat::JsonLines).unwrap_err();
        assert!(
            matches!(err, CorpusError::NegativeCitations { line: 2 }),
            "{err}"
        );

        let err = parse_corpus(
            b"id,citations,authors\np1,1,a\np2,-3,\"a;b\"\n",
            CorpusFormat::Csv,
        )
        .unwrap_err();
        assert!(
            matches!(err, CorpusError::NegativeCitations { line: 3 }),
            "{err}"
        );
    }

    #[test]
    fn validation_errors() {
        let dup = format!("{JSON_LINE}\n\n{JSON_LINE}\n");
        assert!(matches!(
            parse_corpus(dup.as_bytes(), CorpusFormat::JsonLines),
            Err(CorpusError::DuplicatePaperId { line: 3, .. })
        ));
        assert!(matches!(
            parse_corpus(
                br#"{"id":"p","citations":1,"authors":[]}"#,
                CorpusFormat::JsonLines
            ),
            Err(CorpusError::EmptyAuthorList { line: 1 })
        ));
        assert!(matches!(
            parse_corpus(b"id,citations,authors\np,1,\"\"\n", CorpusFormat::Csv),
            Err(CorpusError::EmptyAuthorList { line: 2 })
        ));
        for bad in [
            r#"{"id":"p","citations":1.5,"authors":["a"]}"#,
            r#"{"id":"p","citations":"1","authors":["a"]}"#,
            r#"{"id":"p","authors":["a"]}"#,
            r#"{"id":"p","citations":1,"authors":["a","a"]}"#,
            "not json",
        ] {
            assert!(
                matches!(
                    parse_corpus(bad.as_bytes(), CorpusFormat::JsonLines),
                    Err(CorpusError::MalformedRecord { line: 1, .. })
                ),
                "{bad}"
            );
        }
        assert!(matches!(
            parse_corpus(b"paper,cites,who\n", CorpusFormat::Csv),
            Err(CorpusError::MalformedRecord { line: 1, .. })
        ));
        assert!(matches!(
            parse_corpus(b"id,citations,authors\np,x,a\n", CorpusFormat::Csv),
            Err(CorpusError::MalformedRecord { line: 2, .. })
        ));
    }

    #[test]
    fn empty_inputs_are_empty_corpora() {
        assert!(parse_corpus(b"", CorpusFormat::JsonLines)
            .unwrap()
            .papers
            .is_empty());
        assert!(parse_corpus(b"", CorpusFormat::Csv)
            .unwrap()
            .papers
            .is_empty());
        assert!(parse_corpus(b"id,citations,authors\n", CorpusFormat::Csv)
            .unwrap()
            .papers
            .is_empty());
    }

    #[test]
    fn csv_writer_quotes_authors() {
        let papers = parse_corpus(JSON_LINE.as_bytes(), CorpusFormat::JsonLines)
            .unwrap()
            .papers;
        assert_eq!(
            write_corpus(&papers, CorpusFormat::Csv).unwrap(),
            "id,citations,authors\np1,10,\"a;b;c;d\"\n"
        );
        assert_eq!(
            write_corpus(&papers, CorpusFormat::JsonLines).unwrap(),
            format!("{JSON_LINE}\n")
        );
        let bad = vec![PaperRecord::new("p", 1, vec!["x;y".into()]).unwrap()];
        assert!(write_corpus(&bad, CorpusFormat::Csv).is_err());
    }

    #[test]
    fn weight_output_examples() {
        let v = type1_weights(4).unwrap();
        assert_eq!(
            write_weights(&v, WeightFormat::CsvFraction),
            "position,weight\n1,4/10\n2,3/10\n3,2/10\n4,1/10\n"
        );
        let v = equal_weights(2).unwrap();
        assert_eq!(
            write_weights(&v, WeightFormat::CsvDecimal),
            "position,weight\n1,0.500000\n2,0.500000\n"
        );
        let v = geometric_weights(3).unwrap();
        let json: serde_json::Value =
            serde_json::from_str(&write_weights(&v, WeightFormat::Json)).unwrap();
        assert_eq!(json["k"], 3);
        assert_eq!(json["weights"][0]["position"], 1);
        assert_eq!(json["weights"][0]["fraction"], "4/7");
        assert_eq!(json["weights"][0]["decimal"].as_f64(), Some(0.571429));
    }

    #[test]
    fn weight_fraction_csv_reads_back() {
        let v = geometric_weights(7).unwrap();
        let text = write_weights(&v, WeightFormat::CsvFraction);
        assert_eq!(parse_weights_csv(&text).unwrap(), v);
        assert!(parse_weights_csv("position,weight\n1,1/2\n2,1/3\n").is_err());
        assert!(parse_weights_csv("position,weight\n2,1\n").is_err());
        assert!(parse_weights_csv("pos,w\n1,1\n").is_err());
    }
}
