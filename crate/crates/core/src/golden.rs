//! Worked tables for `n = 2, 3`, transcribed by hand, and a comparison of
//! each against the computed table.
//!
//! Entries use the exact-ring grammar; labels use the crate's own label
//! strings (`"2,1"`, `"s1 s2"`, `"1"` for the identity).

use crate::context::Context;
use crate::counts;
use crate::exactring::{parse_fraction, QTFraction};
use crate::hecke;
use crate::matrix::{Label, LabeledMatrix};
use crate::partitions::Composition;
use crate::symgroup::poincare;
use crate::Error;

/// One hand-copied table.
pub struct Golden {
    pub name: &'static str,
    pub n: usize,
    pub rows: &'static [&'static str],
    pub cols: &'static [&'static str],
    pub entries: &'static [&'static [&'static str]],
}

const P2: &[&str] = &["2", "1,1"];
const P3: &[&str] = &["3", "2,1", "1,1,1"];
const S2: &[&str] = &["s1", "1"];
const S3: &[&str] = &["s1 s2", "s2 s1", "s1 s2 s1", "s2", "s1", "1"];
const FLAGS3: &str = "(1 + q)*(1 + q + q^2)";

pub const TABLES: &[Golden] = &[
    Golden { name: "K", n: 2, rows: P2, cols: P2, entries: &[&["1", "t"], &["q", "1"]] },
    Golden {
        name: "K",
        n: 3,
        rows: P3,
        cols: P3,
        entries: &[&["1", "t", "t^3"], &["q + q^2", "1 + q*t", "t + t^2"], &["q^3", "q", "1"]],
    },
    Golden { name: "L", n: 2, rows: P2, cols: P2, entries: &[&["1", "1"], &["-t", "1"]] },
    Golden {
        name: "L",
        n: 3,
        rows: P3,
        cols: P3,
        entries: &[&["1", "1", "1"], &["-t", "1 - t", "2"], &["t^2", "-t", "1"]],
    },
    Golden { name: "a", n: 2, rows: P2, cols: P2, entries: &[&["1 - q*t", "1 + q"], &["0", "1 + t"]] },
    Golden {
        name: "a",
        n: 3,
        rows: P3,
        cols: P3,
        entries: &[
            &["(1 - q*t)*(1 - q^2*t)", "(1 - q*t)*(1 + q + q^2)", "(1 + q)*(1 + q + q^2)"],
            &["0", "1 - q*t^2", "2 + t + q + 2*q*t"],
            &["0", "0", "(1 + t)*(1 + t + t^2)"],
        ],
    },
    Golden { name: "kostka", n: 2, rows: P2, cols: P2, entries: &[&["1", "1"], &["0", "1"]] },
    Golden {
        name: "kostka",
        n: 3,
        rows: P3,
        cols: P3,
        entries: &[&["1", "1", "1"], &["0", "1", "2"], &["0", "0", "1"]],
    },
    Golden { name: "Hschur", n: 2, rows: P2, cols: P2, entries: &[&["1", "1"], &["q", "t"]] },
    Golden {
        name: "Hschur",
        n: 3,
        rows: P3,
        cols: P3,
        entries: &[&["1", "1", "1"], &["q^2 + q", "q + t", "t^2 + t"], &["q^3", "q*t", "t^3"]],
    },
    Golden { name: "b", n: 2, rows: P2, cols: P2, entries: &[&["1", "1 + q"], &["1", "1 + t"]] },
    Golden {
        name: "b",
        n: 3,
        rows: P3,
        cols: P3,
        entries: &[
            &["1", "1 + q + q^2", "1 + 2*(q^2 + q) + q^3"],
            &["1", "1 + q + t", "1 + 2*(q + t) + q*t"],
            &["1", "1 + t + t^2", "1 + 2*(t + t^2) + t^3"],
        ],
    },
    Golden { name: "C", n: 2, rows: S2, cols: P2, entries: &[&["1", "0"], &["1", "1"]] },
    Golden {
        name: "C",
        n: 3,
        rows: S3,
        cols: P3,
        entries: &[
            &["1", "0", "0"],
            &["1", "0", "0"],
            &["1", "0", "0"],
            &["1", "0", "0"],
            &["1", "1", "0"],
            &["1", "1", "1"],
        ],
    },
    Golden { name: "kappa", n: 2, rows: P2, cols: S2, entries: &[&["1", "0"], &["0", "1"]] },
    Golden {
        name: "kappa",
        n: 3,
        rows: P3,
        cols: S3,
        entries: &[
            &["1", "1", "q - 1", "0", "0", "0"],
            &["0", "0", "q", "1", "1", "0"],
            &["0", "0", "0", "0", "0", "1"],
        ],
    },
    Golden { name: "chiH", n: 2, rows: P2, cols: P2, entries: &[&["q", "1"], &["-1", "1"]] },
    Golden {
        name: "chiH",
        n: 3,
        rows: P3,
        cols: P3,
        entries: &[&["q^2", "q", "1"], &["-q", "q - 1", "2"], &["1", "-1", "1"]],
    },
    Golden { name: "chiG", n: 2, rows: P2, cols: P2, entries: &[&["1", "1"], &["0", "q"]] },
    Golden {
        name: "chiG",
        n: 3,
        rows: P3,
        cols: P3,
        entries: &[&["1", "1", "1"], &["0", "q", "q^2 + q"], &["0", "0", "q^3"]],
    },
    Golden { name: "A", n: 2, rows: P2, cols: P2, entries: &[&["q", "1"], &["0", "q + 1"]] },
    Golden {
        name: "A",
        n: 3,
        rows: P3,
        cols: P3,
        entries: &[&["q^2", "q", "1"], &["0", "q^2", "2*q + 1"], &["0", "0", FLAGS3]],
    },
    Golden { name: "Aw", n: 2, rows: P2, cols: S2, entries: &[&["q", "1"], &["0", "q + 1"]] },
    Golden {
        name: "Aw",
        n: 3,
        rows: P3,
        cols: S3,
        entries: &[
            &["q^2", "q^2", "q^3", "q", "q", "1"],
            &["0", "0", "q^3", "q^2", "q^2", "2*q + 1"],
            &["0", "0", "0", "0", "0", FLAGS3],
        ],
    },
    // rows λ, columns ν: the coefficient of κ_ν in z_λ
    Golden {
        name: "z",
        n: 2,
        rows: P2,
        cols: P2,
        entries: &[&["q/(1 + q)", "1/(1 + q)"], &["-q/(1 + q)", "q/(1 + q)"]],
    },
    Golden {
        name: "z",
        n: 3,
        rows: P3,
        cols: P3,
        entries: &[
            &["q^2/((1 + q)*(1 + q + q^2))", "q/((1 + q)*(1 + q + q^2))", "1/((1 + q)*(1 + q + q^2))"],
            &[
                "q*(1 + q)*(-q)/((1 + q)*(1 + q + q^2))",
                "q*(1 + q)*(q - 1)/((1 + q)*(1 + q + q^2))",
                "2*q*(1 + q)/((1 + q)*(1 + q + q^2))",
            ],
            &[
                "q^3/((1 + q)*(1 + q + q^2))",
                "-q^3/((1 + q)*(1 + q + q^2))",
                "q^3/((1 + q)*(1 + q + q^2))",
            ],
        ],
    },
    // rows μ, columns composition π: W_π(q) times the Springer count
    Golden {
        name: "springer_weighted",
        n: 3,
        rows: P3,
        cols: &["1,1,1", "2,1", "1,2", "3"],
        entries: &[
            &["1", "1 + q", "1 + q", FLAGS3],
            &["2*q + 1", "q^2 + 2*q + 1", "q^2 + 2*q + 1", FLAGS3],
            &[FLAGS3, FLAGS3, FLAGS3, FLAGS3],
        ],
    },
    Golden { name: "MkCD", n: 2, rows: P2, cols: P2, entries: &[&["q/(1 + q)", "0"], &["1/(1 + q)", "1"]] },
    Golden {
        name: "MkCD",
        n: 3,
        rows: P3,
        cols: P3,
        entries: &[
            &["q^2/(1 + q + q^2)", "0", "0"],
            &["(q^2 + 2*q)/((1 + q + q^2)*(1 + q))", "q/(1 + q)", "0"],
            &["1/((1 + q + q^2)*(1 + q))", "1/(1 + q)", "1"],
        ],
    },
    Golden { name: "F", n: 2, rows: P2, cols: P2, entries: &[&["1", "-1"], &["0", "1"]] },
    Golden {
        name: "F",
        n: 3,
        rows: P3,
        cols: P3,
        entries: &[&["1", "-1", "1"], &["0", "1", "-2"], &["0", "0", "1"]],
    },
    Golden { name: "FL", n: 2, rows: P2, cols: P2, entries: &[&["1 + q^-1", "0"], &["-q^-1", "1"]] },
    Golden {
        name: "FL",
        n: 3,
        rows: P3,
        cols: P3,
        entries: &[
            &["q^-2*(1 + q + q^2)", "0", "0"],
            &["-q^-2*(q + 2)", "q^-1*(q + 1)", "0"],
            &["q^-2", "-q^-1", "1"],
        ],
    },
    Golden {
        name: "affine",
        n: 2,
        rows: P2,
        cols: P2,
        entries: &[&["q*(1 - t*q^-1)", "1 + t"], &["0", "1 + q"]],
    },
];

/// Outcome of comparing one golden table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenCheck {
    pub name: &'static str,
    pub n: usize,
    pub mismatches: Vec<String>,
}

impl GoldenCheck {
    pub fn holds(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn as_strings<R: Label + Clone + PartialEq, C: Label + Clone + PartialEq>(m: &LabeledMatrix<R, C>) -> LabeledMatrix<String, String> {
    m.relabel(m.row_labels(), m.col_labels())
}

/// The computed counterpart of a golden table.
pub fn computed(ctx: &Context, name: &str) -> Result<LabeledMatrix<String, String>, Error> {
    let sym = ctx.sym();
    Ok(match name {
        "K" => as_strings(sym.k_matrix()?),
        "L" => as_strings(sym.l_matrix()?),
        "a" => as_strings(sym.a_matrix()?),
        "kostka" => as_strings(&sym.k_matrix_at_0_1()?),
        "Hschur" => as_strings(&sym.modified_schur_matrix()?),
        "b" => as_strings(sym.b_matrix()?),
        "C" => as_strings(&hecke::contraction_matrix_partitions(ctx.n())),
        "kappa" => as_strings(ctx.kappa()?),
        "chiH" => as_strings(counts::chi_h(ctx)?),
        "chiG" => as_strings(counts::chi_g(ctx)?),
        "A" => as_strings(counts::lusztig(ctx)?),
        "Aw" => as_strings(counts::lusztig_w(ctx)?),
        "z" => {
            let parts = ctx.partitions();
            let mut rows = Vec::new();
            for lambda in &parts {
                let z = hecke::central_idempotent(ctx, lambda)?;
                rows.push(hecke::kappa_coordinates(ctx.kappa()?, &z).ok_or_else(|| {
                    Error::InternalMismatch(format!("z_{lambda} is not in the span of the κ_ν"))
                })?);
            }
            as_strings(&LabeledMatrix::from_entries(parts.clone(), parts, rows))
        }
        "springer_weighted" => {
            let s = counts::springer(ctx)?;
            let weighted = LabeledMatrix::from_fn(s.rows().to_vec(), s.cols().to_vec(), |mu, pi: &Composition| {
                s.entry(mu, pi).unwrap() * &QTFraction::from(poincare(pi))
            });
            as_strings(&weighted)
        }
        "MkCD" => as_strings(counts::mkcd(ctx)?),
        "F" => as_strings(sym.f_matrix()?),
        "FL" => as_strings(&counts::fl_product(ctx)?),
        "affine" => as_strings(counts::affine(ctx)?),
        other => return Err(Error::Unsupported(format!("no table named {other}"))),
    })
}

/// Compares a golden table cell by cell, looking cells up by label.
///
/// Partition and permutation labels must also appear in the same order;
/// composition columns are matched by label only.
pub fn check(ctx: &Context, g: &Golden) -> Result<GoldenCheck, Error> {
    let m = computed(ctx, g.name)?;
    let mut mismatches = Vec::new();
    let ordered = g.name != "springer_weighted";
    if ordered && (m.rows() != g.rows || m.cols() != g.cols) {
        mismatches.push(format!("labels {:?} x {:?}, expected {:?} x {:?}", m.rows(), m.cols(), g.rows, g.cols));
    }
    for (r, row) in g.rows.iter().zip(g.entries) {
        for (c, text) in g.cols.iter().zip(row.iter()) {
            let expect = parse_fraction(text)?;
            match m.entry(&r.to_string(), &c.to_string()) {
                Some(v) if *v == expect => {}
                Some(v) => mismatches.push(format!("({r}; {c}): got {v}, expected {expect}")),
                None => mismatches.push(format!("({r}; {c}): missing")),
            }
        }
    }
    Ok(GoldenCheck {
        name: g.name,
        n: g.n,
        mismatches,
    })
}

/// Every golden table for `ctx.n()`; empty unless `n` is 2 or 3.
pub fn check_all(ctx: &Context) -> Result<Vec<GoldenCheck>, Error> {
    TABLES.iter().filter(|g| g.n == ctx.n()).map(|g| check(ctx, g)).collect()
}
