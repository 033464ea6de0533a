//! Acceptance suite: one PASS/FAIL line per criterion, with sub-check lines
//! underneath. All comparisons are exact.
//!
//! Criterion 8 contains one claim that is false: some Lusztig counts have
//! negative coefficients from n = 4 on. That line prints FAIL together with
//! the counterexample, which is itself checked against brute force; the
//! process exits nonzero only if anything else fails.

use std::process::ExitCode;
use std::time::Instant;

use num_rational::BigRational;
use num_traits::One;

use expcon::counts;
use expcon::exactring::{q_factorial, QTFraction, QTLaurent};
use expcon::golden;
use expcon::hecke::{self, HeckeElement};
use expcon::oracle;
use expcon::partitions::{compositions_of, partitions_of};
use expcon::{Context, Partition, Permutation};

/// Result of one sub-check.
struct Sub {
    name: String,
    ok: bool,
    detail: String,
}

fn sub(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Sub {
    Sub {
        name: name.into(),
        ok,
        detail: if ok { String::new() } else { detail.into() },
    }
}

struct Criterion {
    id: &'static str,
    title: &'static str,
    run: fn(&[Context]) -> Vec<Sub>,
    /// Sub-checks whose failure is documented as unattainable.
    known_false: &'static [&'static str],
}

fn ctx(all: &[Context], n: usize) -> &Context {
    &all[n - 1]
}

fn golden_tables(all: &[Context]) -> Vec<Sub> {
    let mut out = Vec::new();
    for n in [2, 3] {
        for c in golden::check_all(ctx(all, n)).expect("golden tables compute") {
            out.push(sub(format!("{} n={n}", c.name), c.holds(), c.mismatches.join("; ")));
        }
    }
    out
}

fn atob(all: &[Context]) -> Vec<Sub> {
    let mut out = Vec::new();
    for n in 2..=5 {
        let c = ctx(all, n);
        let report = counts::verify_atob(c).unwrap();
        out.push(sub(format!("n={n}, partition columns"), report.holds(), format!("{:?}", report.failures)));
        // the same identity with every composition as a column
        let cols = compositions_of(n);
        let product = counts::a_prime(c).unwrap().mul(&counts::mkcd_compositions(c, &cols).unwrap());
        let b = c.sym().b_matrix().unwrap();
        let mut bad = Vec::new();
        for mu in product.rows() {
            for pi in &cols {
                let expect = b.entry(mu, &pi.sorted()).unwrap().swap_qt();
                if *product.entry(mu, pi).unwrap() != expect {
                    bad.push(format!("({mu}; {pi})"));
                }
            }
        }
        out.push(sub(format!("n={n}, composition columns"), bad.is_empty(), bad.join(", ")));
    }
    out
}

fn inverse_fl(all: &[Context]) -> Vec<Sub> {
    (1..=5)
        .map(|n| {
            let c = ctx(all, n);
            let p = counts::mkcd(c).unwrap().mul(&counts::fl_product(c).unwrap());
            sub(format!("n={n}"), p.is_identity(), format!("{p:?}"))
        })
        .collect()
}

fn twisted_plethysm(all: &[Context]) -> Vec<Sub> {
    (1..=4)
        .map(|n| {
            let c = ctx(all, n);
            let twisted = &c.sym().r_matrices().unwrap().twisted;
            let mkcd = counts::mkcd(c).unwrap();
            sub(format!("n={n}"), twisted == mkcd, format!("cells {:?}", twisted.differences(mkcd)))
        })
        .collect()
}

fn macdonald_plethysm(all: &[Context]) -> Vec<Sub> {
    let mut out = Vec::new();
    for n in 1..=4 {
        let sym = ctx(all, n).sym();
        for mu in partitions_of(n) {
            let lhs = sym.modified_h_by_plethysm(&mu).unwrap();
            let rhs = sym.modified_h(&mu).unwrap();
            out.push(sub(format!("μ={mu}"), lhs == rhs, format!("{lhs} vs {rhs}")));
        }
    }
    out
}

fn b_symmetry(all: &[Context]) -> Vec<Sub> {
    let mut out = Vec::new();
    for n in 1..=5 {
        let b = ctx(all, n).sym().b_matrix().unwrap();
        let mut bad = Vec::new();
        for mu in b.rows() {
            for pi in b.cols() {
                if *b.entry(mu, pi).unwrap() != b.entry(&mu.conjugate(), pi).unwrap().swap_qt() {
                    bad.push(format!("({mu}; {pi})"));
                }
            }
        }
        out.push(sub(format!("n={n}"), bad.is_empty(), bad.join(", ")));
    }
    out
}

fn oracle_equivalence(all: &[Context]) -> Vec<Sub> {
    let mut out = Vec::new();
    for (n, p) in [(2, 2), (2, 3), (2, 5), (3, 2), (3, 3)] {
        let c = ctx(all, n);
        let lus = oracle::compare_lusztig(c, p).unwrap();
        let bad: Vec<String> = lus
            .iter()
            .filter(|r| !r.matches)
            .map(|r| format!("{} {}: {} vs {}", r.mu, r.w_or_pi, r.oracle_count, r.polynomial_value))
            .collect();
        out.push(sub(format!("Lusztig n={n} p={p} ({} cells)", lus.len()), bad.is_empty(), bad.join("; ")));
        let spr = oracle::compare_springer(c, p, &compositions_of(n)).unwrap();
        let bad: Vec<String> = spr
            .iter()
            .filter(|r| !r.matches)
            .map(|r| format!("{} {}: {} vs {}", r.mu, r.w_or_pi, r.oracle_count, r.polynomial_value))
            .collect();
        out.push(sub(format!("Springer n={n} p={p} ({} cells)", spr.len()), bad.is_empty(), bad.join("; ")));
    }
    for (n, p) in [(2, 2), (2, 3), (3, 2)] {
        let reports = oracle::oracle_class_intersection(n, p).unwrap();
        let bad: Vec<String> = reports
            .iter()
            .filter(|r| !r.holds())
            .map(|r| format!("{} {}", r.mu, r.w))
            .collect();
        out.push(sub(
            format!("class intersection n={n} p={p} ({} cells)", reports.len()),
            bad.is_empty(),
            bad.join("; "),
        ));
    }
    out
}

const NONNEGATIVE_LUSZTIG: &str = "Lusztig count polynomials have nonnegative coefficients, n ≤ 5";

fn properties(all: &[Context]) -> Vec<Sub> {
    let mut out = Vec::new();
    let one = BigRational::one();
    for n in 1..=5 {
        let c = ctx(all, n);
        let kappa = c.kappa().unwrap();
        let mut bad = Vec::new();
        for (i, nu) in kappa.rows().iter().enumerate() {
            for (j, w) in kappa.cols().iter().enumerate() {
                let indicator = BigRational::from_integer(i64::from(w.cycle_type() == *nu).into());
                if kappa.get(i, j).eval(&one, &one) != Some(indicator) {
                    bad.push(format!("({nu}; {w})"));
                }
            }
        }
        out.push(sub(format!("κ(q=1) is the class indicator, n={n}"), bad.is_empty(), bad.join(", ")));

        let mut not_central = Vec::new();
        for nu in kappa.rows() {
            if !hecke::geck_rouquier(kappa, nu).is_central() {
                not_central.push(format!("κ_{nu}"));
            }
            if !hecke::central_a(c, nu).unwrap().is_central() {
                not_central.push(format!("A_{nu}"));
            }
        }
        out.push(sub(format!("κ_ν and A_μ central, n={n}"), not_central.is_empty(), not_central.join(", ")));

        let flags = QTFraction::from(q_factorial(n as u32));
        let aw = counts::lusztig_w(c).unwrap();
        let bad: Vec<String> = aw
            .rows()
            .iter()
            .zip(aw.entries())
            .filter(|(_, row)| row.iter().fold(QTFraction::zero(), |s, e| &s + e) != flags)
            .map(|(mu, _)| mu.to_string())
            .collect();
        out.push(sub(format!("rows of A_w sum to [{n}]!, n={n}"), bad.is_empty(), bad.join(", ")));

        let a = c.sym().a_matrix().unwrap();
        let mut bad = Vec::new();
        for (i, mu) in a.rows().iter().enumerate() {
            for (j, nu) in a.cols().iter().enumerate() {
                if !a.get(i, j).is_zero() && !mu.dominates(nu) {
                    bad.push(format!("({mu}; {nu})"));
                }
            }
        }
        out.push(sub(format!("a is dominance triangular, n={n}"), bad.is_empty(), bad.join(", ")));
    }
    for n in 1..=4 {
        let c = ctx(all, n);
        let zs: Vec<HeckeElement> = partitions_of(n)
            .iter()
            .map(|l| hecke::central_idempotent(c, l).unwrap())
            .collect();
        let mut ok = zs.iter().try_fold(HeckeElement::zero(n), |s, z| s.add(z)).unwrap() == HeckeElement::one(n);
        for (i, x) in zs.iter().enumerate() {
            for (j, y) in zs.iter().enumerate() {
                let p = x.multiply(y).unwrap();
                ok &= if i == j { p == *x } else { p.is_zero() };
            }
        }
        out.push(sub(format!("idempotents complete and orthogonal, n={n}"), ok, "a product or the sum is wrong"));
    }

    let mut negative = Vec::new();
    let mut springer_bad = Vec::new();
    for n in 1..=5 {
        let c = ctx(all, n);
        let mut rows = counts::lusztig(c).unwrap().laurent_entries().unwrap();
        rows.extend(counts::lusztig_w(c).unwrap().laurent_entries().unwrap());
        for row in rows {
            negative.extend(row.into_iter().filter(|e| !e.is_counting_polynomial()).map(|e| e.to_string()));
        }
        for row in counts::springer(c).unwrap().laurent_entries().unwrap() {
            springer_bad.extend(row.into_iter().filter(|e| !e.is_counting_polynomial()).map(|e| e.to_string()));
        }
    }
    out.push(sub("Springer count polynomials have nonnegative coefficients, n ≤ 5", springer_bad.is_empty(), springer_bad.join("; ")));
    // the counterexample must be a genuine point count
    let w = Permutation::from_word(4, &[1, 3]).unwrap();
    let mu: Partition = "3,1".parse().unwrap();
    let poly = counts::lusztig_count_w(ctx(all, 4), &mu, &w).unwrap();
    let confirmed = [2u32, 3].iter().all(|&p| {
        let brute = oracle::oracle_lusztig(&mu, &w, p).unwrap();
        poly.eval_q(p as i64) == Some(BigRational::from_integer(brute.into()))
    }) && poly == &QTLaurent::q_pow(3) - &QTLaurent::q_pow(2);
    assert!(confirmed, "counterexample {poly} is not confirmed by brute force");
    out.push(sub(
        NONNEGATIVE_LUSZTIG,
        negative.is_empty(),
        format!(
            "{} entries with a negative coefficient, e.g. μ=(3,1), w=s1 s3 gives {poly}, \
             matching brute-force counts 4 and 18 over F_2 and F_3",
            negative.len()
        ),
    ));
    out
}

fn affine(all: &[Context]) -> Vec<Sub> {
    let mut out = Vec::new();
    let g = golden::TABLES.iter().find(|g| g.name == "affine" && g.n == 2).unwrap();
    let c = golden::check(ctx(all, 2), g).unwrap();
    out.push(sub("n=2 table", c.holds(), c.mismatches.join("; ")));
    for n in 1..=4 {
        let c = ctx(all, n);
        let mut bad = Vec::new();
        for mu in partitions_of(n) {
            for nu in partitions_of(n) {
                let at0 = counts::affine_count(c, &mu, &nu).unwrap().at_t_zero().unwrap();
                if at0 != counts::lusztig_count(c, &mu, &nu).unwrap() {
                    bad.push(format!("({mu}; {nu})"));
                }
            }
        }
        out.push(sub(format!("t=0 gives the Lusztig table, n={n}"), bad.is_empty(), bad.join(", ")));
    }
    out
}

const CRITERIA: &[Criterion] = &[
    Criterion { id: "1", title: "worked tables for n=2,3 reproduced", run: golden_tables, known_false: &[] },
    Criterion { id: "2", title: "A'(t,1/q)·MκCD = b(t,q), n=2..5", run: atob, known_false: &[] },
    Criterion { id: "3", title: "(MκCD)·(FL at t=1/q) = 1, n≤5", run: inverse_fl, known_false: &[] },
    Criterion { id: "4", title: "diag((1-1/q)^ℓ(ν))·R = MκCD, n≤4", run: twisted_plethysm, known_false: &[] },
    Criterion {
        id: "5",
        title: "t^n(μ) J_μ[X/(1-1/t); q,1/t] = H̃_μ, n≤4",
        run: macdonald_plethysm,
        known_false: &[],
    },
    Criterion { id: "6", title: "b_μπ(q,t) = b_μ'π(t,q), n≤5", run: b_symmetry, known_false: &[] },
    Criterion { id: "7", title: "brute-force counts over F_p match", run: oracle_equivalence, known_false: &[] },
    Criterion { id: "8", title: "property suites", run: properties, known_false: &[NONNEGATIVE_LUSZTIG] },
    Criterion { id: "9", title: "affine count table", run: affine, known_false: &[] },
];

fn main() -> ExitCode {
    let all: Vec<Context> = (1..=5).map(|n| Context::new(n).unwrap()).collect();
    let mut unexpected = 0;
    for c in CRITERIA {
        let start = Instant::now();
        let subs = (c.run)(&all);
        let failed: Vec<&Sub> = subs.iter().filter(|s| !s.ok).collect();
        let status = if failed.is_empty() { "PASS" } else { "FAIL" };
        println!("{status} criterion {}: {} ({} checks, {:.1?})", c.id, c.title, subs.len(), start.elapsed());
        for s in &subs {
            if s.ok {
                println!("    ok   {}", s.name);
            } else {
                let known = c.known_false.contains(&s.name.as_str());
                if !known {
                    unexpected += 1;
                }
                let tag = if known { "FAIL (documented, claim is false)" } else { "FAIL" };
                println!("    {tag} {}: {}", s.name, s.detail);
            }
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{unexpected} unexpected failures");
        ExitCode::FAILURE
    }
}
