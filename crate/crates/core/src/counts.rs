//! Character tables and point-count polynomials.
//!
//! Every count is produced twice by independent routes (a closed formula
//! and a character sum or recursion) and the two must agree exactly;
//! disagreement is reported as [`Error::InternalMismatch`].
//!
//! `springer_count` is normalized by `1/W_π(q)`, so it is the number of
//! partial flags. Tables that list `W_π(q)` times this number are the
//! unnormalized sums over `W_π`.

use crate::context::{get, Context};
use crate::exactring::{exact_div, substitute_fraction, QTFraction, QTLaurent};
use crate::hecke::{contraction_matrix, contraction_matrix_partitions, propagate};
use crate::matrix::{LabeledMatrix, MixedMatrix, PartitionMatrix};
use crate::partitions::{compositions_of, Composition, Partition};
use crate::symgroup::{poincare, young_subgroup, Permutation};
use crate::Error;

fn q_frac(e: i32) -> QTFraction {
    QTFraction::from(QTLaurent::q_pow(e))
}

fn laurent(f: &QTFraction, what: impl FnOnce() -> String) -> Result<QTLaurent, Error> {
    f.as_laurent()
        .ok_or_else(|| Error::InternalMismatch(format!("{} is not a polynomial", what())))
}

fn mismatch<R: crate::matrix::Label, C: crate::matrix::Label>(
    name: &str,
    m: &LabeledMatrix<R, C>,
    cells: &[(usize, usize)],
) -> Error {
    let (i, j) = cells[0];
    Error::InternalMismatch(format!(
        "{name} at ({}, {})",
        m.row_labels()[i],
        m.col_labels()[j]
    ))
}

/// `χ^λ_G(u_μ) = q^{n(μ)} K_{λμ}(0, q^{-1})`; rows `λ`, columns `μ`.
pub fn chi_g(ctx: &Context) -> Result<&PartitionMatrix, Error> {
    get(&ctx.chi_g, || {
        let k = ctx.sym().k_matrix()?;
        let (zero, qinv) = (QTFraction::zero(), q_frac(-1));
        let mut out = k.clone();
        for i in 0..k.rows().len() {
            for (j, mu) in k.cols().iter().enumerate() {
                let v = &substitute_fraction(k.get(i, j), &zero, &qinv)? * &q_frac(mu.n_stat() as i32);
                out.set(i, j, v);
            }
        }
        Ok(out)
    })
}

/// `χ^λ_H(T_{γ_ν}) = q^{n-ℓ(ν)} L_{λν}(q^{-1})`; rows `λ`, columns `ν`.
pub fn chi_h(ctx: &Context) -> Result<&PartitionMatrix, Error> {
    get(&ctx.chi_h, || {
        let l = ctx.sym().l_matrix()?;
        let n = ctx.n() as i32;
        let mut out = l.clone();
        for i in 0..l.rows().len() {
            for (j, nu) in l.cols().iter().enumerate() {
                let v = &l.get(i, j).substitute_monomial((1, 0), (-1, 0)) * &q_frac(n - nu.len() as i32);
                out.set(i, j, v);
            }
        }
        Ok(out)
    })
}

/// `A_{μν} = q^{n(μ)+n-ℓ(ν)} a_{μν}(0, q^{-1})`, the number of points of
/// the Lusztig variety of `γ_ν` at `u_μ`; checked against
/// `Σ_λ χ^λ_G(u_μ) χ^λ_H(T_{γ_ν})`.
pub fn lusztig(ctx: &Context) -> Result<&PartitionMatrix, Error> {
    get(&ctx.lusztig, || {
        let a = ctx.sym().a_matrix()?;
        let n = ctx.n() as i32;
        let (zero, qinv) = (QTFraction::zero(), q_frac(-1));
        let mut out = a.clone();
        for (i, mu) in a.rows().iter().enumerate() {
            for (j, nu) in a.cols().iter().enumerate() {
                let shift = mu.n_stat() as i32 + n - nu.len() as i32;
                out.set(i, j, &substitute_fraction(a.get(i, j), &zero, &qinv)? * &q_frac(shift));
            }
        }
        let by_characters = chi_g(ctx)?.transpose().mul(chi_h(ctx)?);
        let diff = out.differences(&by_characters);
        if !diff.is_empty() {
            return Err(mismatch("A versus character sum", &out, &diff));
        }
        Ok(out)
    })
}

/// `A_{μν}` as a polynomial in `q`.
pub fn lusztig_count(ctx: &Context, mu: &Partition, nu: &Partition) -> Result<QTLaurent, Error> {
    let a = lusztig(ctx)?;
    let v = a
        .entry(mu, nu)
        .ok_or_else(|| Error::Unsupported(format!("partitions {mu} and {nu} must have size {}", ctx.n())))?;
    laurent(v, || format!("A_{mu},{nu}"))
}

/// `A_{μw} = Σ_ν A_{μν} κ_{ν,w}`, checked against the trace recursion
/// started from the values at minimal-length class elements.
pub fn lusztig_w(ctx: &Context) -> Result<&MixedMatrix, Error> {
    get(&ctx.lusztig_w, || {
        let a = lusztig(ctx)?;
        let product = a.mul(ctx.kappa()?);
        let seed = |nu: &Partition| {
            let j = a.col_index(nu).unwrap();
            (0..a.rows().len()).map(|i| a.get(i, j).clone()).collect()
        };
        let (perms, values) = propagate(ctx.n(), &seed)?;
        let recursive = LabeledMatrix::from_fn(a.rows().to_vec(), perms, |mu, w| {
            let i = a.row_index(mu).unwrap();
            let k = product.col_index(w).unwrap();
            values[k][i].clone()
        });
        let diff = product.differences(&recursive);
        if !diff.is_empty() {
            return Err(mismatch("A_w versus recursion", &product, &diff));
        }
        Ok(product)
    })
}

/// Points of the Lusztig variety of `w` at `u_μ`.
pub fn lusztig_count_w(ctx: &Context, mu: &Partition, w: &Permutation) -> Result<QTLaurent, Error> {
    let m = lusztig_w(ctx)?;
    let v = m
        .entry(mu, w)
        .ok_or_else(|| Error::Unsupported(format!("{mu} or {w} has the wrong size")))?;
    laurent(v, || format!("A_{mu},{w}"))
}

/// `b_{μπ}(0, q)` from the modified Macdonald table.
fn b_at_zero_q(ctx: &Context, mu: &Partition, pi: &Partition) -> Result<QTFraction, Error> {
    let b = ctx.sym().b_matrix()?;
    let v = b.entry(mu, pi).expect("labels of size n");
    Ok(substitute_fraction(v, &QTFraction::zero(), &QTFraction::from(QTLaurent::q()))?)
}

/// Parabolic Springer fiber counts for every composition of `n`: rows `μ`,
/// columns compositions.
pub fn springer(ctx: &Context) -> Result<&LabeledMatrix<Partition, Composition>, Error> {
    get(&ctx.springer, || {
        let aw = lusztig_w(ctx)?;
        let cols = compositions_of(ctx.n());
        let mut out = LabeledMatrix::zeros(aw.rows().to_vec(), cols.clone());
        for (j, pi) in cols.iter().enumerate() {
            let members = young_subgroup(pi);
            let wq = poincare(pi);
            for (i, mu) in aw.rows().iter().enumerate() {
                let mut sum = QTLaurent::zero();
                for w in &members {
                    sum += laurent(aw.entry(mu, w).unwrap(), || format!("A_{mu},{w}"))?;
                }
                let count = exact_div(&sum, &wq)
                    .map_err(|_| Error::InternalMismatch(format!("sum over W_{pi} at {mu} not divisible")))?;
                let expect = b_at_zero_q(ctx, mu, &pi.sorted())?;
                if expect != count {
                    return Err(Error::InternalMismatch(format!(
                        "springer count at ({mu}, {pi}): {count} vs b(0,q) = {expect}"
                    )));
                }
                out.set(i, j, QTFraction::from(count));
            }
        }
        Ok(out)
    })
}

/// Points of the parabolic Springer fiber of `π` at `u_μ`.
pub fn springer_count(ctx: &Context, mu: &Partition, pi: &Composition) -> Result<QTLaurent, Error> {
    let m = springer(ctx)?;
    let v = m
        .entry(mu, pi)
        .ok_or_else(|| Error::Unsupported(format!("{mu} or {pi} has the wrong size")))?;
    laurent(v, || format!("Y_{pi}({mu})"))
}

/// `M = diag(q^{n-ℓ(ν)})`.
pub fn m_diagonal(ctx: &Context) -> PartitionMatrix {
    let parts = ctx.partitions();
    let diag = parts.iter().map(|nu| q_frac((ctx.n() - nu.len()) as i32)).collect();
    LabeledMatrix::diagonal(parts, diag)
}

/// `D = diag(1/[π]!)` over the given compositions.
pub fn d_diagonal(cols: &[Composition]) -> LabeledMatrix<Composition, Composition> {
    let diag = cols
        .iter()
        .map(|pi| QTFraction::one() / QTFraction::from(poincare(pi)))
        .collect();
    LabeledMatrix::diagonal(cols.to_vec(), diag)
}

/// `MκCD`, with partition columns.
pub fn mkcd(ctx: &Context) -> Result<&PartitionMatrix, Error> {
    get(&ctx.mkcd, || {
        let c = contraction_matrix_partitions(ctx.n());
        let d = d_diagonal(c.cols());
        let prod = m_diagonal(ctx).mul(ctx.kappa()?).mul(&c).mul(&d);
        Ok(prod.relabel(ctx.partitions(), ctx.partitions()))
    })
}

/// `MκCD` with arbitrary composition columns.
pub fn mkcd_compositions(ctx: &Context, cols: &[Composition]) -> Result<LabeledMatrix<Partition, Composition>, Error> {
    let c = contraction_matrix(ctx.n(), cols);
    Ok(m_diagonal(ctx).mul(ctx.kappa()?).mul(&c).mul(&d_diagonal(cols)))
}

/// `A'(t, q^{-1}) = (q^{n(μ)} a_{μν}(t, q^{-1}))`.
pub fn a_prime(ctx: &Context) -> Result<PartitionMatrix, Error> {
    let a = ctx.sym().a_matrix()?;
    let mut out = a.clone();
    for (i, mu) in a.rows().iter().enumerate() {
        for j in 0..a.cols().len() {
            let v = &a.get(i, j).substitute_monomial((0, 1), (-1, 0)) * &q_frac(mu.n_stat() as i32);
            out.set(i, j, v);
        }
    }
    Ok(out)
}

/// Outcome of checking `A'(t, q^{-1}) · M · κ · C · D = b(t, q)`.
#[derive(Debug, Clone)]
pub struct AtobReport {
    pub n: usize,
    pub product: PartitionMatrix,
    pub expected: PartitionMatrix,
    /// `(μ, π, product entry, expected entry)` for every failing cell.
    pub failures: Vec<(Partition, Partition, String, String)>,
}

impl AtobReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn verify_atob(ctx: &Context) -> Result<AtobReport, Error> {
    let product = a_prime(ctx)?.mul(mkcd(ctx)?);
    let expected = ctx.sym().b_matrix()?.map(|f| f.swap_qt());
    let failures = product
        .differences(&expected)
        .into_iter()
        .map(|(i, j)| {
            (
                product.rows()[i].clone(),
                product.cols()[j].clone(),
                product.get(i, j).to_string(),
                expected.get(i, j).to_string(),
            )
        })
        .collect();
    Ok(AtobReport {
        n: ctx.n(),
        product,
        expected,
        failures,
    })
}

/// `F · L(t = q^{-1})`.
pub fn fl_product(ctx: &Context) -> Result<PartitionMatrix, Error> {
    let f = ctx.sym().f_matrix()?;
    let l = ctx.sym().l_matrix()?.map(|x| x.substitute_monomial((1, 0), (-1, 0)));
    Ok(f.mul(&l))
}

/// `q^{n(μ)} a_{μν}(t, q^{-1}) q^{n-ℓ(ν)}`, a polynomial in `q` and `t`.
pub fn affine(ctx: &Context) -> Result<&PartitionMatrix, Error> {
    get(&ctx.affine, || Ok(a_prime(ctx)?.mul(&m_diagonal(ctx))))
}

pub fn affine_count(ctx: &Context, mu: &Partition, nu: &Partition) -> Result<QTLaurent, Error> {
    let m = affine(ctx)?;
    let v = m
        .entry(mu, nu)
        .ok_or_else(|| Error::Unsupported(format!("{mu} or {nu} has the wrong size")))?;
    laurent(v, || format!("affine {mu},{nu}"))
}
