//! Named groups of identity checks, each reporting one line per check.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::One;

use crate::context::Context;
use crate::counts;
use crate::exactring::{q_factorial, QTFraction};
use crate::golden;
use crate::hecke::{self, HeckeElement};
use crate::matrix::LabeledMatrix;
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    All,
    Golden,
    Central,
    Idempotent,
    Atob,
    Plethysm,
    Symmetry,
    Triangularity,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::All,
        Suite::Golden,
        Suite::Central,
        Suite::Idempotent,
        Suite::Atob,
        Suite::Plethysm,
        Suite::Symmetry,
        Suite::Triangularity,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Golden => "golden",
            Suite::Central => "central",
            Suite::Idempotent => "idempotent",
            Suite::Atob => "atob",
            Suite::Plethysm => "plethysm",
            Suite::Symmetry => "symmetry",
            Suite::Triangularity => "triangularity",
        }
    }

    /// Largest `n` the suite is run for.
    pub fn max_n(self) -> usize {
        match self {
            Suite::Golden => 3,
            Suite::Idempotent => 4,
            Suite::All | Suite::Central | Suite::Atob | Suite::Plethysm => 5,
            Suite::Symmetry | Suite::Triangularity => 6,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub suite: Suite,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} [{}] {}", self.suite, self.name)?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

struct Report {
    suite: Suite,
    out: Vec<Outcome>,
}

impl Report {
    fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.out.push(Outcome {
            suite: self.suite,
            name: name.into(),
            passed,
            detail: if passed { String::new() } else { detail.into() },
        });
    }
}

/// Runs `suite` for `ctx.n()`. `All` runs every other suite whose range
/// covers `n`; a single suite outside its range is an error.
pub fn run(ctx: &Context, suite: Suite) -> Result<Vec<Outcome>, Error> {
    let n = ctx.n();
    if suite == Suite::All {
        let mut out = Vec::new();
        for s in Suite::ALL.into_iter().skip(1) {
            let applies = n <= s.max_n() && (s != Suite::Golden || n >= 2);
            if applies {
                out.extend(run(ctx, s)?);
            }
        }
        return Ok(out);
    }
    if suite == Suite::Golden && !(2..=3).contains(&n) {
        return Err(Error::Unsupported(format!("golden tables exist for n = 2, 3 only, not {n}")));
    }
    if n > suite.max_n() {
        return Err(Error::Unsupported(format!("suite {suite} runs for n <= {}", suite.max_n())));
    }
    let mut r = Report { suite, out: Vec::new() };
    match suite {
        Suite::All => unreachable!(),
        Suite::Golden => golden_suite(ctx, &mut r)?,
        Suite::Central => central_suite(ctx, &mut r)?,
        Suite::Idempotent => idempotent_suite(ctx, &mut r)?,
        Suite::Atob => atob_suite(ctx, &mut r)?,
        Suite::Plethysm => plethysm_suite(ctx, &mut r)?,
        Suite::Symmetry => symmetry_suite(ctx, &mut r)?,
        Suite::Triangularity => triangularity_suite(ctx, &mut r)?,
    }
    Ok(r.out)
}

fn golden_suite(ctx: &Context, r: &mut Report) -> Result<(), Error> {
    for c in golden::check_all(ctx)? {
        r.check(format!("{} (n={})", c.name, c.n), c.holds(), c.mismatches.join("; "));
    }
    Ok(())
}

fn central_suite(ctx: &Context, r: &mut Report) -> Result<(), Error> {
    let n = ctx.n();
    let kappa = ctx.kappa()?;
    let one = BigRational::one();
    let mut bad = Vec::new();
    for (i, nu) in kappa.rows().iter().enumerate() {
        for (j, w) in kappa.cols().iter().enumerate() {
            let v = kappa.get(i, j).eval(&one, &one);
            let expect = BigRational::from_integer(i64::from(w.cycle_type() == *nu).into());
            if v.as_ref() != Some(&expect) {
                bad.push(format!("κ_{{{nu},{w}}}"));
            }
        }
    }
    r.check("κ at q=1 is the class indicator", bad.is_empty(), bad.join(", "));
    let violations = hecke::rule_violations(kappa);
    r.check("κ satisfies the length recursion", violations.is_empty(), violations.join("; "));
    for nu in kappa.rows() {
        let k = hecke::geck_rouquier(kappa, nu);
        r.check(format!("κ_{nu} is central"), k.is_central(), "commutator with a generator is nonzero");
    }
    for mu in ctx.partitions() {
        let a = hecke::central_a(ctx, &mu)?;
        r.check(format!("A_{mu} is central"), a.is_central(), "commutator with a generator is nonzero");
    }
    let product = counts::chi_g(ctx)?.transpose().mul(counts::chi_h(ctx)?);
    let a = counts::lusztig(ctx)?;
    r.check("A = chi_G^t chi_H", product == *a, format!("cells {:?}", product.differences(a)));
    let flags = q_factorial(n as u32);
    let mut bad_rows = Vec::new();
    for (mu, row) in counts::lusztig_w(ctx)?.rows().iter().zip(counts::lusztig_w(ctx)?.entries()) {
        let sum = row.iter().fold(QTFraction::zero(), |acc, e| &acc + e);
        if sum != flags.clone() {
            bad_rows.push(format!("{mu}: {sum}"));
        }
    }
    r.check(format!("rows of A_w sum to [{n}]!"), bad_rows.is_empty(), bad_rows.join("; "));
    let springer = counts::springer(ctx)?;
    let negative: Vec<String> = springer
        .laurent_entries()
        .into_iter()
        .flatten()
        .flatten()
        .filter(|e| !e.is_counting_polynomial())
        .map(|e| e.to_string())
        .collect();
    r.check(
        "Springer counts have nonnegative integer coefficients",
        negative.is_empty(),
        negative.join("; "),
    );
    Ok(())
}

fn idempotent_suite(ctx: &Context, r: &mut Report) -> Result<(), Error> {
    let n = ctx.n();
    let parts = ctx.partitions();
    let zs = parts
        .iter()
        .map(|l| hecke::central_idempotent(ctx, l))
        .collect::<Result<Vec<_>, _>>()?;
    let mut total = HeckeElement::zero(n);
    for z in &zs {
        total = total.add(z)?;
    }
    r.check("Σ z_λ = 1", total == HeckeElement::one(n), format!("sum is {total}"));
    for (i, a) in zs.iter().enumerate() {
        for (j, b) in zs.iter().enumerate().skip(i) {
            let p = a.multiply(b)?;
            let ok = if i == j { p == *a } else { p.is_zero() };
            r.check(format!("z_{} z_{}", parts[i], parts[j]), ok, format!("product is {p}"));
        }
    }
    Ok(())
}

fn atob_suite(ctx: &Context, r: &mut Report) -> Result<(), Error> {
    let report = counts::verify_atob(ctx)?;
    r.check("A'(t,1/q) M κ C D = b(t,q)", report.holds(), format!("{:?}", report.failures));
    let p = counts::mkcd(ctx)?.mul(&counts::fl_product(ctx)?);
    r.check("(MκCD)(FL at t=1/q) = 1", p.is_identity(), format!("product {p:?}"));
    Ok(())
}

fn plethysm_suite(ctx: &Context, r: &mut Report) -> Result<(), Error> {
    let sym = ctx.sym();
    let twisted = &sym.r_matrices()?.twisted;
    let mkcd = counts::mkcd(ctx)?;
    r.check("E·R = MκCD", twisted == mkcd, format!("cells {:?}", twisted.differences(mkcd)));
    for mu in ctx.partitions() {
        let lhs = sym.modified_h_by_plethysm(&mu)?;
        let rhs = sym.modified_h(&mu)?;
        r.check(
            format!("t^n(μ) J_{mu}[X/(1-1/t); q, 1/t] = H̃_{mu}"),
            lhs == rhs,
            format!("{lhs} vs {rhs}"),
        );
    }
    Ok(())
}

fn symmetry_suite(ctx: &Context, r: &mut Report) -> Result<(), Error> {
    let b = ctx.sym().b_matrix()?;
    for mu in b.rows() {
        let conj = mu.conjugate();
        let mut bad = Vec::new();
        for pi in b.cols() {
            let lhs = b.entry(mu, pi).unwrap();
            let rhs = b.entry(&conj, pi).unwrap().swap_qt();
            if *lhs != rhs {
                bad.push(format!("π={pi}"));
            }
        }
        r.check(format!("b_{{{mu},π}}(q,t) = b_{{{conj},π}}(t,q)"), bad.is_empty(), bad.join(", "));
    }
    Ok(())
}

/// Nonzero cells `(row, col)` of `m` must satisfy `allowed(row, col)`.
fn support_within<R: Clone + PartialEq + fmt::Display, C: Clone + PartialEq + fmt::Display>(
    m: &LabeledMatrix<R, C>,
    allowed: impl Fn(&R, &C) -> bool,
) -> Vec<String> {
    let mut bad = Vec::new();
    for (i, row) in m.rows().iter().enumerate() {
        for (j, col) in m.cols().iter().enumerate() {
            if !m.get(i, j).is_zero() && !allowed(row, col) {
                bad.push(format!("({row}; {col})"));
            }
        }
    }
    bad
}

fn unit_diagonal(m: &LabeledMatrix<crate::Partition, crate::Partition>) -> bool {
    (0..m.rows().len()).all(|i| m.get(i, i).is_one())
}

fn triangularity_suite(ctx: &Context, r: &mut Report) -> Result<(), Error> {
    let sym = ctx.sym();
    let a = sym.a_matrix()?;
    let bad = support_within(a, |mu, nu| mu.dominates(nu));
    r.check("a_{μν} ≠ 0 only for μ ≥ ν", bad.is_empty(), bad.join(", "));
    let kostka = sym.k_matrix_at_0_1()?;
    let bad = support_within(&kostka, |lam, mu| lam.dominates(mu));
    r.check(
        "Kostka numbers are unitriangular",
        bad.is_empty() && unit_diagonal(&kostka),
        bad.join(", "),
    );
    let chi = counts::chi_g(ctx)?;
    let bad = support_within(chi, |lam, mu| lam.dominates(mu));
    r.check("chi_G(λ, u_μ) ≠ 0 only for λ ≥ μ", bad.is_empty(), bad.join(", "));
    let bad = support_within(counts::lusztig(ctx)?, |mu, nu| mu.dominates(nu));
    r.check("A_{μν} ≠ 0 only for μ ≥ ν", bad.is_empty(), bad.join(", "));
    let k = sym.k_matrix()?;
    let top = k.get(0, 0).is_one() && k.get(k.rows().len() - 1, k.cols().len() - 1).is_one();
    r.check("K_{(n),(n)} = K_{(1^n),(1^n)} = 1", top, "corner entries differ from 1");
    Ok(())
}
