//! Reference tables and plot datasets generated from the weight schemes.
//!
//! Weight tables list one row per author count with the row's weights in
//! position order. Their CSV and markdown renderings put each row over its
//! least common denominator (`3/6, 2/6, 1/6`), the customary way of printing
//! these tables; the stored cells are always reduced.

use std::fmt::Write as _;
use std::fs;
use std::io;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use thiserror::Error;

use crate::error::WeightError;
use crate::fraction::{render_common, render_reduced, to_decimal};
use crate::scalar::{frac, int};
use crate::scheme::{
    classify_linearity, first_last_ratio, max_alpha, monotonicity, positivity_bound, Linearity,
    Monotonicity, Positivity, SchemeKind, SchemeSpec,
};
use crate::{Rational, Weights};

/// Largest author count in the reference weight tables.
pub const TABLE_MAX_K: usize = 10;

#[derive(Debug, Error)]
pub enum ReportError {
    #[error(transparent)]
    Scheme(#[from] WeightError),
    #[error("author-count range {start}..={end} must start at 2 or above and be non-empty")]
    InvalidRange { start: usize, end: usize },
    #[error("max_k must be at least 1")]
    EmptyTable,
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cell {
    Empty,
    Value(Rational),
    Text(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportRow {
    pub label: String,
    pub cells: Vec<Cell>,
}

impl ReportRow {
    pub fn values(&self) -> Vec<Rational> {
        self.cells
            .iter()
            .filter_map(|c| match c {
                Cell::Value(v) => Some(v.clone()),
                _ => None,
            })
            .collect()
    }
}

/// How rational cells are printed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FractionStyle {
    /// Each row over its least common denominator.
    #[default]
    CommonDenominator,
    /// Every cell in lowest terms.
    Reduced,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportTable {
    pub title: String,
    pub column_labels: Vec<String>,
    pub rows: Vec<ReportRow>,
}

impl ReportTable {
    fn rendered_rows(&self, style: FractionStyle) -> Vec<Vec<String>> {
        self.rows
            .iter()
            .map(|row| {
                let values = row.values();
                let mut fractions = match style {
                    FractionStyle::CommonDenominator => render_common(&values),
                    FractionStyle::Reduced => values.iter().map(render_reduced).collect(),
                }
                .into_iter();
                let mut out = vec![row.label.clone()];
                out.extend(row.cells.iter().map(|c| match c {
                    Cell::Empty => String::new(),
                    Cell::Value(_) => fractions.next().expect("one rendering per value"),
                    Cell::Text(t) => t.clone(),
                }));
                out
            })
            .collect()
    }

    pub fn to_csv(&self, style: FractionStyle) -> String {
        let mut out = self.column_labels.join(",");
        out.push('\n');
        for row in self.rendered_rows(style) {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_markdown(&self, style: FractionStyle) -> String {
        let mut out = format!("# {}\n\n", self.title);
        let _ = writeln!(out, "| {} |", self.column_labels.join(" | "));
        let _ = writeln!(
            out,
            "|{}",
            self.column_labels
                .iter()
                .map(|_| "---|")
                .collect::<String>()
        );
        for row in self.rendered_rows(style) {
            let _ = writeln!(out, "| {} |", row.join(" | "));
        }
        out
    }
}

fn weight_table(
    title: &str,
    max_k: usize,
    weights: impl Fn(usize) -> Result<Weights, WeightError>,
) -> Result<ReportTable, ReportError> {
    if max_k == 0 {
        return Err(ReportError::EmptyTable);
    }
    let mut column_labels = vec!["authors".to_string()];
    column_labels.extend((1..=max_k).map(|j| format!("w_{j}")));
    let rows = (1..=max_k)
        .map(|k| {
            let v = weights(k)?;
            let mut cells: Vec<Cell> = v.weights().iter().cloned().map(Cell::Value).collect();
            cells.resize(max_k, Cell::Empty);
            Ok(ReportRow {
                label: k.to_string(),
                cells,
            })
        })
        .collect::<Result<_, WeightError>>()?;
    Ok(ReportTable {
        title: title.to_string(),
        column_labels,
        rows,
    })
}

/// Arithmetic type-1 weights for 1..=max_k authors.
pub fn table_type1(max_k: usize) -> Result<ReportTable, ReportError> {
    weight_table(
        "Arithmetic: Type-1 weights by number of authors",
        max_k,
        crate::type1_weights,
    )
}

/// Geometric weights for 1..=max_k authors.
pub fn table_geometric(max_k: usize) -> Result<ReportTable, ReportError> {
    weight_table(
        "Geometric weights by number of authors",
        max_k,
        crate::geometric_weights,
    )
}

/// Harmonic weights for 1..=max_k authors.
pub fn table_harmonic(max_k: usize) -> Result<ReportTable, ReportError> {
    weight_table(
        "Harmonic weights by number of authors",
        max_k,
        crate::harmonic_weights,
    )
}

/// Symbolic first-to-last weight ratio of a scheme.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatioLaw {
    One,
    PowerOfTwo,
    AuthorCount,
    Variable,
}

impl RatioLaw {
    pub fn of(kind: SchemeKind) -> Self {
        match kind {
            SchemeKind::Equal => RatioLaw::One,
            SchemeKind::Geometric => RatioLaw::PowerOfTwo,
            SchemeKind::Harmonic | SchemeKind::ArithmeticType1 => RatioLaw::AuthorCount,
            SchemeKind::ArithmeticType2 => RatioLaw::Variable,
        }
    }

    /// The ratio at `k` authors, or `None` when it depends on a parameter.
    pub fn evaluate(self, k: usize) -> Option<Rational> {
        match self {
            RatioLaw::One => Some(int(1)),
            RatioLaw::PowerOfTwo => Some(num_traits::pow(int(2), k - 1)),
            RatioLaw::AuthorCount => Some(int(k as i64)),
            RatioLaw::Variable => None,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            RatioLaw::One => "1",
            RatioLaw::PowerOfTwo => "2^(k-1)",
            RatioLaw::AuthorCount => "k",
            RatioLaw::Variable => "Variable",
        }
    }
}

/// Author counts over which the features table classifies each scheme.
const FEATURE_SAMPLE_K: RangeInclusive<usize> = 3..=10;

fn sample_scheme(kind: SchemeKind, k: usize) -> SchemeSpec<Rational> {
    match SchemeSpec::fixed(kind) {
        Some(spec) => spec,
        // half the positivity bound: strictly decreasing, strictly positive
        None => SchemeSpec::type2(
            positivity_bound::<Rational>(k).expect("k >= 2") / int(2),
            Positivity::StrictPositive,
        ),
    }
}

/// Scheme comparison: ratio law, linearity, positionality, and whether the
/// weights are tunable. Linearity and positionality are measured on the
/// generated weights for 3 to 10 authors.
pub fn features_table() -> Result<ReportTable, ReportError> {
    let order = [
        SchemeKind::Equal,
        SchemeKind::Geometric,
        SchemeKind::Harmonic,
        SchemeKind::ArithmeticType1,
        SchemeKind::ArithmeticType2,
    ];
    let mut rows = Vec::with_capacity(order.len());
    for kind in order {
        let mut linear = true;
        let mut constant = true;
        for k in FEATURE_SAMPLE_K {
            let v = sample_scheme(kind, k).weights(k)?;
            linear &= classify_linearity(&v) == Linearity::Linear;
            constant &= monotonicity(&v) == Monotonicity::Constant;
            if let Some(expected) = RatioLaw::of(kind).evaluate(k) {
                debug_assert_eq!(first_last_ratio(&v)?, expected, "{kind} ratio at k={k}");
            }
        }
        let text = |s: &str| Cell::Text(s.to_string());
        rows.push(ReportRow {
            label: kind.label().to_string(),
            cells: vec![
                text(RatioLaw::of(kind).symbol()),
                text(if linear { "Linear" } else { "Non-linear" }),
                text(if constant {
                    "Position independent"
                } else {
                    "Positional"
                }),
                text(if kind.is_parameterized() {
                    "Variable"
                } else {
                    "Fixed"
                }),
            ],
        });
    }
    Ok(ReportTable {
        title: "Features of weight assignment schemes".to_string(),
        column_labels: ["Scheme", "w_1/w_k", "Linearity", "Positionality", "Weights"]
            .map(String::from)
            .to_vec(),
        rows,
    })
}

/// A plotted series. `gaps` lists x values skipped because the point was
/// infeasible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveDataset {
    pub series_label: String,
    pub points: Vec<(Rational, Rational)>,
    pub gaps: Vec<Rational>,
}

/// Default floors on the last author's weight for the alpha-bound curves.
pub fn default_mu_values() -> Vec<Rational> {
    vec![int(0), frac(1, 100), frac(1, 50), frac(1, 20), frac(1, 10)]
}

pub const DEFAULT_FIG1_K: RangeInclusive<usize> = 2..=10;

/// Largest admissible alpha as a function of author count, one series per
/// floor `mu`. Author counts where `mu > 1/k` are recorded as gaps.
pub fn fig1_dataset(
    k_range: RangeInclusive<usize>,
    mu_values: &[Rational],
) -> Result<Vec<CurveDataset>, ReportError> {
    if *k_range.start() < 2 || k_range.is_empty() {
        return Err(ReportError::InvalidRange {
            start: *k_range.start(),
            end: *k_range.end(),
        });
    }
    let mut series = Vec::with_capacity(mu_values.len());
    for mu in mu_values {
        let mut points = Vec::new();
        let mut gaps = Vec::new();
        for k in k_range.clone() {
            let x = int(k as i64);
            match max_alpha(k, mu) {
                Ok(bound) => points.push((x, bound.max_alpha)),
                Err(WeightError::InfeasibleFloor { .. }) => gaps.push(x),
                Err(e) => return Err(e.into()),
            }
        }
        series.push(CurveDataset {
            series_label: format!("mu={mu}"),
            points,
            gaps,
        });
    }
    Ok(series)
}

/// Weight against author position for every scheme at `k` authors, type2
/// evaluated at `alpha`.
pub fn fig2_dataset(k: usize, alpha: &Rational) -> Result<Vec<CurveDataset>, ReportError> {
    SchemeKind::ALL
        .into_iter()
        .map(|kind| {
            let (spec, label) = match SchemeSpec::fixed(kind) {
                Some(spec) => (spec, kind.name().to_string()),
                None => (
                    SchemeSpec::type2(alpha.clone(), Positivity::StrictPositive),
                    format!("{kind}(alpha={alpha})"),
                ),
            };
            let v = spec.weights(k)?;
            Ok(CurveDataset {
                series_label: label,
                points: v
                    .positions()
                    .map(|(j, w)| (int(j as i64), w.clone()))
                    .collect(),
                gaps: Vec::new(),
            })
        })
        .collect()
}

pub fn fig1_csv(series: &[CurveDataset]) -> String {
    let mut out = String::from("series,k,max_alpha,decimal\n");
    for s in series {
        for (x, y) in &s.points {
            let _ = writeln!(
                out,
                "{},{},{},{}",
                s.series_label,
                x,
                y,
                to_decimal(y, crate::corpus::DECIMAL_PLACES)
            );
        }
    }
    out
}

pub fn fig2_csv(series: &[CurveDataset]) -> String {
    let mut out = String::from("series,position,weight,decimal\n");
    for s in series {
        for (x, y) in &s.points {
            let _ = writeln!(
                out,
                "{},{},{},{}",
                s.series_label,
                x,
                y,
                to_decimal(y, crate::corpus::DECIMAL_PLACES)
            );
        }
    }
    out
}

/// The reference outputs, by file stem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Artifact {
    Table2,
    Table3,
    Table4,
    Table5,
    Fig1,
    Fig2,
}

impl Artifact {
    pub const ALL: [Artifact; 6] = [
        Artifact::Table2,
        Artifact::Table3,
        Artifact::Table4,
        Artifact::Table5,
        Artifact::Fig1,
        Artifact::Fig2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Artifact::Table2 => "table2",
            Artifact::Table3 => "table3",
            Artifact::Table4 => "table4",
            Artifact::Table5 => "table5",
            Artifact::Fig1 => "fig1",
            Artifact::Fig2 => "fig2",
        }
    }

    /// File names this artifact is written to.
    pub fn file_names(self) -> Vec<String> {
        let stem = self.name();
        match self {
            Artifact::Table2 | Artifact::Table3 | Artifact::Table4 => {
                vec![format!("{stem}.md"), format!("{stem}.csv")]
            }
            Artifact::Table5 => vec![format!("{stem}.md")],
            Artifact::Fig1 | Artifact::Fig2 => vec![format!("{stem}.csv")],
        }
    }

    fn weight_table(self) -> Option<Result<ReportTable, ReportError>> {
        match self {
            Artifact::Table2 => Some(table_type1(TABLE_MAX_K)),
            Artifact::Table3 => Some(table_geometric(TABLE_MAX_K)),
            Artifact::Table4 => Some(table_harmonic(TABLE_MAX_K)),
            _ => None,
        }
    }

    /// Contents of `file_name` (one of [`Artifact::file_names`]), with the
    /// default parameters.
    pub fn render(self, file_name: &str) -> Result<String, ReportError> {
        let markdown = file_name.ends_with(".md");
        if let Some(table) = self.weight_table() {
            let table = table?;
            return Ok(if markdown {
                table.to_markdown(FractionStyle::CommonDenominator)
            } else {
                table.to_csv(FractionStyle::CommonDenominator)
            });
        }
        Ok(match self {
            Artifact::Table5 => features_table()?.to_markdown(FractionStyle::Reduced),
            Artifact::Fig1 => fig1_csv(&fig1_dataset(DEFAULT_FIG1_K, &default_mu_values())?),
            Artifact::Fig2 => fig2_csv(&fig2_dataset(5, &frac(1, 20))?),
            _ => unreachable!("weight tables handled above"),
        })
    }

    /// Writes every file of this artifact into `dir`, returning the paths.
    pub fn write_to(self, dir: &Path) -> Result<Vec<PathBuf>, ReportError> {
        fs::create_dir_all(dir).map_err(|source| ReportError::Io {
            path: dir.to_path_buf(),
            source,
        })?;
        self.file_names()
            .into_iter()
            .map(|name| {
                let path = dir.join(&name);
                fs::write(&path, self.render(&name)?).map_err(|source| ReportError::Io {
                    path: path.clone(),
                    source,
                })?;
                Ok(path)
            })
            .collect()
    }
}

impl FromStr for Artifact {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Artifact::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| format!("unknown table '{s}'"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(table: &ReportTable, k: usize) -> Vec<Rational> {
        table.rows[k - 1].values()
    }

    fn fracs(ws: &[(i64, i64)]) -> Vec<Rational> {
        ws.iter().map(|&(n, d)| frac(n, d)).collect()
    }

    #[test]
    fn type1_table_rows() {
        let t = table_type1(10).unwrap();
        assert_eq!(
            row(&t, 5),
            fracs(&[(5, 15), (4, 15), (3, 15), (2, 15), (1, 15)])
        );
        let nine: Vec<_> = (1..=9).rev().map(|n| frac(n, 45)).collect();
        assert_eq!(row(&t, 9), nine);
        let t = table_type1(1).unwrap();
        assert_eq!(t.rows.len(), 1);
        assert_eq!(row(&t, 1), vec![int(1)]);
        assert!(matches!(table_type1(0), Err(ReportError::EmptyTable)));
    }

    #[test]
    fn geometric_table_rows() {
        let t = table_geometric(10).unwrap();
        assert_eq!(row(&t, 4), fracs(&[(8, 15), (4, 15), (2, 15), (1, 15)]));
        assert_eq!(row(&t, 10)[0], frac(512, 1023));
        assert_eq!(row(&t, 6)[5], frac(1, 63));
    }

    #[test]
    fn harmonic_table_rows() {
        let t = table_harmonic(10).unwrap();
        assert_eq!(
            row(&t, 5),
            fracs(&[(60, 137), (30, 137), (20, 137), (15, 137), (12, 137)])
        );
        assert_eq!(row(&t, 10)[9], frac(252, 7381));
        assert_eq!(row(&t, 1), vec![int(1)]);
    }

    #[test]
    fn rows_have_k_cells_and_sum_to_one() {
        for t in [
            table_type1(10).unwrap(),
            table_geometric(10).unwrap(),
            table_harmonic(10).unwrap(),
        ] {
            for (i, r) in t.rows.iter().enumerate() {
                let values = r.values();
                assert_eq!(values.len(), i + 1);
                assert_eq!(r.cells.len(), 10);
                assert_eq!(values.iter().cloned().fold(int(0), |a, b| a + b), int(1));
            }
        }
    }

    #[test]
    fn common_denominator_matches_customary_layout() {
        let csv = table_harmonic(10)
            .unwrap()
            .to_csv(FractionStyle::CommonDenominator);
        assert!(csv.contains("\n6,60/147,30/147,20/147,15/147,12/147,10/147,,,,\n"));
        let reduced = table_harmonic(6).unwrap().to_csv(FractionStyle::Reduced);
        assert!(reduced.contains("\n6,20/49,10/49,20/147,5/49,4/49,10/147\n"));
    }

    #[test]
    fn features_rows() {
        let t = features_table().unwrap();
        let cells = |label: &str| -> Vec<String> {
            let r = t.rows.iter().find(|r| r.label == label).unwrap();
            r.cells
                .iter()
                .map(|c| match c {
                    Cell::Text(s) => s.clone(),
                    other => panic!("unexpected cell {other:?}"),
                })
                .collect()
        };
        assert_eq!(
            cells("Equal"),
            ["1", "Linear", "Position independent", "Fixed"]
        );
        assert_eq!(
            cells("Geometric"),
            ["2^(k-1)", "Non-linear", "Positional", "Fixed"]
        );
        assert_eq!(
            cells("Harmonic"),
            ["k", "Non-linear", "Positional", "Fixed"]
        );
        assert_eq!(
            cells("Arithmetic: Type-1"),
            ["k", "Linear", "Positional", "Fixed"]
        );
        assert_eq!(
            cells("Arithmetic: Type-2"),
            ["Variable", "Linear", "Positional", "Variable"]
        );
    }

    #[test]
    fn fig1_examples() {
        let series = fig1_dataset(2..=10, &[int(0)]).unwrap();
        let pts = &series[0].points;
        assert_eq!(pts[0], (int(2), int(1)));
        assert_eq!(pts[1], (int(3), frac(1, 3)));
        assert_eq!(pts[2], (int(4), frac(1, 6)));
        for (x, y) in pts {
            let k = x.to_integer();
            assert_eq!(*y, int(2) / (x.clone() * (x.clone() - int(1))), "k={k}");
        }

        let series = fig1_dataset(4..=4, &[frac(1, 4)]).unwrap();
        assert_eq!(series[0].points, vec![(int(4), int(0))]);

        let series = fig1_dataset(4..=4, &[frac(1, 20)]).unwrap();
        assert_eq!(series[0].points, vec![(int(4), frac(2, 15))]);
    }

    #[test]
    fn fig1_records_gaps() {
        let series = fig1_dataset(2..=6, &[frac(1, 4)]).unwrap();
        let xs: Vec<_> = series[0].points.iter().map(|p| p.0.clone()).collect();
        assert_eq!(xs, vec![int(2), int(3), int(4)]);
        assert_eq!(series[0].gaps, vec![int(5), int(6)]);
        assert!(fig1_dataset(1..=4, &[int(0)]).is_err());
    }

    #[test]
    fn fig2_examples() {
        let series = fig2_dataset(5, &frac(1, 20)).unwrap();
        assert_eq!(series.len(), 5);
        let by_label = |prefix: &str| {
            series
                .iter()
                .find(|s| s.series_label.starts_with(prefix))
                .unwrap()
                .points
                .iter()
                .map(|p| p.1.clone())
                .collect::<Vec<_>>()
        };
        assert_eq!(
            by_label("type2"),
            fracs(&[(3, 10), (1, 4), (1, 5), (3, 20), (1, 10)])
        );
        assert_eq!(by_label("equal"), vec![frac(1, 5); 5]);
        assert_eq!(
            by_label("geometric"),
            fracs(&[(16, 31), (8, 31), (4, 31), (2, 31), (1, 31)])
        );
        assert!(fig2_dataset(5, &frac(1, 5)).is_err());
    }

    #[test]
    fn artifacts_round_trip_names() {
        for a in Artifact::ALL {
            assert_eq!(a.name().parse::<Artifact>().unwrap(), a);
            for f in a.file_names() {
                assert!(!a.render(&f).unwrap().is_empty());
            }
        }
        assert!("table6".parse::<Artifact>().is_err());
    }
}
