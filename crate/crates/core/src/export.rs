//! Named tables and their JSON, CSV and LaTeX renderings.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::context::Context;
use crate::counts;
use crate::exactring::{parse_fraction, QTFraction, QTLaurent};
use crate::hecke;
use crate::matrix::{Label, LabeledMatrix};
use crate::Error;

/// The tables the crate can export.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TableName {
    Kappa,
    C,
    A,
    Aw,
    LowerA,
    B,
    K,
    L,
    F,
    R,
    ChiH,
    ChiG,
    MkCD,
    Springer,
}

impl TableName {
    pub const ALL: [TableName; 14] = [
        TableName::Kappa,
        TableName::C,
        TableName::A,
        TableName::Aw,
        TableName::LowerA,
        TableName::B,
        TableName::K,
        TableName::L,
        TableName::F,
        TableName::R,
        TableName::ChiH,
        TableName::ChiG,
        TableName::MkCD,
        TableName::Springer,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TableName::Kappa => "kappa",
            TableName::C => "C",
            TableName::A => "A",
            TableName::Aw => "Aw",
            TableName::LowerA => "a",
            TableName::B => "b",
            TableName::K => "K",
            TableName::L => "L",
            TableName::F => "F",
            TableName::R => "R",
            TableName::ChiH => "chiH",
            TableName::ChiG => "chiG",
            TableName::MkCD => "MkCD",
            TableName::Springer => "springer",
        }
    }
}

impl fmt::Display for TableName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TableName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TableName::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| format!("unknown matrix {s:?}"))
    }
}

/// A table with its labels, entries printed in the exact-ring grammar.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExportEnvelope {
    pub n: usize,
    pub matrix_name: String,
    pub row_labels: Vec<String>,
    pub col_labels: Vec<String>,
    pub entries: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ImportError {
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("grid is {0}x{1} but there are {2} row and {3} column labels")]
    Shape(usize, usize, usize, usize),
    #[error("entry ({0}, {1}): {2}")]
    Entry(usize, usize, String),
}

impl ExportEnvelope {
    pub fn from_matrix<R: Label, C: Label>(n: usize, name: &str, m: &LabeledMatrix<R, C>) -> Self {
        Self {
            n,
            matrix_name: name.to_string(),
            row_labels: m.row_labels(),
            col_labels: m.col_labels(),
            entries: m.entry_strings(),
        }
    }

    /// Pretty JSON, newline-terminated.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("envelope serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, ImportError> {
        let env: Self = serde_json::from_str(text).map_err(|e| ImportError::Json(e.to_string()))?;
        env.values()?;
        Ok(env)
    }

    /// Parses every entry, checking the grid against the labels.
    pub fn values(&self) -> Result<Vec<Vec<QTFraction>>, ImportError> {
        let rows = self.entries.len();
        let bad_shape = rows != self.row_labels.len()
            || self.entries.iter().any(|r| r.len() != self.col_labels.len());
        if bad_shape {
            let cols = self.entries.first().map_or(0, Vec::len);
            return Err(ImportError::Shape(rows, cols, self.row_labels.len(), self.col_labels.len()));
        }
        self.entries
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, e)| parse_fraction(e).map_err(|err| ImportError::Entry(i, j, err.to_string())))
                    .collect()
            })
            .collect()
    }

    pub fn to_matrix(&self) -> Result<LabeledMatrix<String, String>, ImportError> {
        Ok(LabeledMatrix::from_entries(
            self.row_labels.clone(),
            self.col_labels.clone(),
            self.values()?,
        ))
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        let header: Vec<String> = std::iter::once(String::new())
            .chain(self.col_labels.iter().cloned())
            .map(|s| csv_field(&s))
            .collect();
        out.push_str(&header.join(","));
        out.push('\n');
        for (label, row) in self.row_labels.iter().zip(&self.entries) {
            let fields: Vec<String> = std::iter::once(label).chain(row).map(|s| csv_field(s)).collect();
            out.push_str(&fields.join(","));
            out.push('\n');
        }
        out
    }

    /// An `array` with the column labels on top and row labels on the left.
    pub fn to_latex(&self) -> Result<String, ImportError> {
        let values = self.values()?;
        let mut out = format!("% {} for n = {}\n", self.matrix_name, self.n);
        out.push_str(&format!("\\begin{{array}}{{r|{}}}\n", "c".repeat(self.col_labels.len())));
        let words = self.col_labels.iter().any(|l| l.contains('s'));
        let head: Vec<String> = self.col_labels.iter().map(|l| latex_label(l, words)).collect();
        out.push_str(&format!(" & {} \\\\ \\hline\n", head.join(" & ")));
        let row_words = self.row_labels.iter().any(|l| l.contains('s'));
        for (label, row) in self.row_labels.iter().zip(&values) {
            let cells: Vec<String> = row.iter().map(latex_fraction).collect();
            out.push_str(&format!("{} & {} \\\\\n", latex_label(label, row_words), cells.join(" & ")));
        }
        out.push_str("\\end{array}\n");
        Ok(out)
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// `words` marks permutation labels, where `"1"` is the identity.
fn latex_label(label: &str, words: bool) -> String {
    if words && label == "1" {
        "1".into()
    } else if words {
        label
            .split_whitespace()
            .map(|g| format!("s_{{{}}}", &g[1..]))
            .collect::<Vec<_>>()
            .join(" ")
    } else {
        format!("({})", label.replace(',', ""))
    }
}

pub fn latex_laurent(f: &QTLaurent) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, ((eq, et), c)) in f.sorted_terms().into_iter().enumerate() {
        match (i, c.is_negative()) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let abs = c.abs();
        let mut body = String::new();
        for (var, e) in [("q", eq), ("t", et)] {
            match e {
                0 => {}
                1 => body.push_str(var),
                _ => body.push_str(&format!("{var}^{{{e}}}")),
            }
        }
        if body.is_empty() {
            out.push_str(&abs.to_string());
        } else if abs.is_one() {
            out.push_str(&body);
        } else if abs.is_integer() {
            out.push_str(&format!("{abs}{body}"));
        } else {
            out.push_str(&format!("\\tfrac{{{}}}{{{}}}{body}", abs.numer(), abs.denom()));
        }
    }
    out
}

pub fn latex_fraction(f: &QTFraction) -> String {
    match f.as_laurent() {
        Some(p) => latex_laurent(&p),
        None => format!("\\frac{{{}}}{{{}}}", latex_laurent(f.num()), latex_laurent(f.den())),
    }
}

/// Computes the named table for `ctx` and wraps it.
pub fn table(ctx: &Context, name: TableName) -> Result<ExportEnvelope, Error> {
    let n = ctx.n();
    let sym = ctx.sym();
    let label = name.as_str();
    Ok(match name {
        TableName::Kappa => ExportEnvelope::from_matrix(n, label, ctx.kappa()?),
        TableName::C => ExportEnvelope::from_matrix(n, label, &hecke::contraction_matrix_partitions(n)),
        TableName::A => ExportEnvelope::from_matrix(n, label, counts::lusztig(ctx)?),
        TableName::Aw => ExportEnvelope::from_matrix(n, label, counts::lusztig_w(ctx)?),
        TableName::LowerA => ExportEnvelope::from_matrix(n, label, sym.a_matrix()?),
        TableName::B => ExportEnvelope::from_matrix(n, label, sym.b_matrix()?),
        TableName::K => ExportEnvelope::from_matrix(n, label, sym.k_matrix()?),
        TableName::L => ExportEnvelope::from_matrix(n, label, sym.l_matrix()?),
        TableName::F => ExportEnvelope::from_matrix(n, label, sym.f_matrix()?),
        TableName::R => ExportEnvelope::from_matrix(n, label, &sym.r_matrices()?.untwisted),
        TableName::ChiH => ExportEnvelope::from_matrix(n, label, counts::chi_h(ctx)?),
        TableName::ChiG => ExportEnvelope::from_matrix(n, label, counts::chi_g(ctx)?),
        TableName::MkCD => ExportEnvelope::from_matrix(n, label, counts::mkcd(ctx)?),
        TableName::Springer => ExportEnvelope::from_matrix(n, label, counts::springer(ctx)?),
    })
}
