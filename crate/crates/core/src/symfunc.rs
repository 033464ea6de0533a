//! Homogeneous symmetric functions of degree `n` in the monomial, power-sum
//! and Schur bases, the `(q, t)` inner product, Macdonald polynomials by
//! Gram-Schmidt, plethystic scaling and the transition matrices between
//! these families.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

use crate::exactring::{exact_div, substitute_fraction, ExactError, QTFraction, QTLaurent};
use crate::matrix::{LabeledMatrix, MatrixError, PartitionMatrix};
use crate::partitions::{kostka, partitions_of, Partition};

/// Largest degree for which transition matrices are built.
pub const MAX_DEGREE: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymFuncError {
    #[error("degree {0} exceeds the supported bound")]
    UnsupportedDegree(usize),
    #[error("degrees {0} and {1} differ")]
    DegreeMismatch(usize, usize),
    #[error("coefficient of {0} is not divisible by the expected power of (1 - t)")]
    NotDivisible(String),
    #[error("singular system")]
    SingularSystem,
    #[error("expected a polynomial at {0}")]
    NonPolynomialResult(String),
    #[error("Gram-Schmidt output of {0} is not unitriangular in dominance order")]
    NotTriangular(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

impl From<MatrixError> for SymFuncError {
    fn from(_: MatrixError) -> Self {
        SymFuncError::SingularSystem
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    Monomial,
    PowerSum,
    Schur,
}

impl Basis {
    fn letter(self) -> char {
        match self {
            Basis::Monomial => 'm',
            Basis::PowerSum => 'p',
            Basis::Schur => 's',
        }
    }
}

/// A homogeneous symmetric function, stored densely over
/// [`partitions_of`]`(n)` in one of the three bases.
#[derive(Clone, PartialEq)]
pub struct SymFunc {
    basis: Basis,
    n: usize,
    coeffs: Vec<QTFraction>,
}

impl SymFunc {
    pub fn zero(basis: Basis, n: usize) -> Self {
        Self {
            basis,
            n,
            coeffs: vec![QTFraction::zero(); partitions_of(n).len()],
        }
    }

    /// The basis element indexed by `lambda`.
    pub fn basis_element(basis: Basis, lambda: &Partition) -> Self {
        let n = lambda.size();
        let mut f = Self::zero(basis, n);
        let k = index_of(n, lambda);
        f.coeffs[k] = QTFraction::one();
        f
    }

    pub fn from_coeffs(basis: Basis, n: usize, coeffs: Vec<QTFraction>) -> Self {
        assert_eq!(coeffs.len(), partitions_of(n).len());
        Self { basis, n, coeffs }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[QTFraction] {
        &self.coeffs
    }

    pub fn coeff(&self, lambda: &Partition) -> QTFraction {
        if lambda.size() != self.n {
            return QTFraction::zero();
        }
        self.coeffs[index_of(self.n, lambda)].clone()
    }

    /// Nonzero terms in partition order.
    pub fn terms(&self) -> Vec<(Partition, QTFraction)> {
        partitions_of(self.n)
            .into_iter()
            .zip(&self.coeffs)
            .filter(|(_, c)| !c.is_zero())
            .map(|(p, c)| (p, c.clone()))
            .collect()
    }

    pub fn scale(&self, c: &QTFraction) -> Self {
        self.map(|x| x * c)
    }

    /// Apply `f` to every coefficient.
    pub fn map(&self, f: impl Fn(&QTFraction) -> QTFraction) -> Self {
        Self {
            basis: self.basis,
            n: self.n,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    fn axpy(&mut self, c: &QTFraction, other: &Self) {
        debug_assert_eq!(self.basis, other.basis);
        for (x, y) in self.coeffs.iter_mut().zip(&other.coeffs) {
            if !y.is_zero() {
                *x = &*x + &(c * y);
            }
        }
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = terms
            .iter()
            .map(|(p, c)| {
                let c = match c.as_laurent() {
                    Some(l) if l.len() > 1 => format!("({l})"),
                    _ => c.to_string(),
                };
                format!("{c} * {}[{p}]", self.basis.letter())
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymFunc({self})")
    }
}

fn index_of(n: usize, lambda: &Partition) -> usize {
    partitions_of(n)
        .iter()
        .position(|p| p == lambda)
        .expect("partition of the right size")
}

/// Coefficient of `x^μ` in `p_λ`: the number of ways to distribute the
/// parts of `λ` among `ℓ(μ)` variables with exponent vector `μ`.
fn power_sum_monomial(lambda: &Partition, mu: &Partition) -> i64 {
    fn rec(parts: &[usize], rem: &mut Vec<usize>, memo: &mut HashMap<(usize, Vec<usize>), i64>) -> i64 {
        if parts.is_empty() {
            return i64::from(rem.iter().all(|&r| r == 0));
        }
        let key = (parts.len(), rem.clone());
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let mut total = 0;
        for i in 0..rem.len() {
            if rem[i] >= parts[0] {
                rem[i] -= parts[0];
                total += rec(&parts[1..], rem, memo);
                rem[i] += parts[0];
            }
        }
        memo.insert(key, total);
        total
    }
    rec(lambda.parts(), &mut mu.parts().to_vec(), &mut HashMap::new())
}

/// `⟨p_ρ, p_ρ⟩_{q,t} = z_ρ Π (1 - q^{ρ_i}) / (1 - t^{ρ_i})`.
pub fn power_sum_norm(rho: &Partition) -> QTFraction {
    let mut num = QTLaurent::integer(rho.z_coefficient() as i64);
    let mut den = QTLaurent::one();
    for &k in rho.parts() {
        num = &num * &(&QTLaurent::one() - &QTLaurent::q_pow(k as i32));
        den = &den * &(&QTLaurent::one() - &QTLaurent::t_pow(k as i32));
    }
    QTFraction::new(num, den).expect("nonzero denominator")
}

fn cell_factor(mu: &Partition) -> QTLaurent {
    mu.cells().fold(QTLaurent::one(), |acc, cell| {
        let a = mu.arm(cell).unwrap() as i32;
        let l = mu.leg(cell).unwrap() as i32;
        &acc * &(&QTLaurent::one() - &QTLaurent::monomial(crate::exactring::rat(1), a, l + 1))
    })
}

fn one_minus_t_pow(k: usize) -> QTLaurent {
    (&QTLaurent::one() - &QTLaurent::t()).pow(k as u32)
}

fn dense(m: &[Vec<i64>]) -> Vec<Vec<QTFraction>> {
    m.iter()
        .map(|r| r.iter().map(|&v| QTFraction::integer(v)).collect())
        .collect()
}

/// Per-degree cache of transition matrices and Macdonald data.
///
/// Everything is computed on first use and then shared read-only.
pub struct SymContext {
    n: usize,
    parts: Vec<Partition>,
    /// row `λ`: `p_λ` in the monomial basis
    p_to_m: Vec<Vec<QTFraction>>,
    m_to_p: Vec<Vec<QTFraction>>,
    /// row `λ`: `s_λ` in the monomial basis (Kostka numbers)
    s_to_m: Vec<Vec<QTFraction>>,
    m_to_s: Vec<Vec<QTFraction>>,
    macdonald: OnceLock<Result<Vec<SymFunc>, SymFuncError>>,
    big_schur: OnceLock<Vec<SymFunc>>,
    l: OnceLock<Result<PartitionMatrix, SymFuncError>>,
    a: OnceLock<Result<PartitionMatrix, SymFuncError>>,
    k: OnceLock<Result<PartitionMatrix, SymFuncError>>,
    f: OnceLock<Result<PartitionMatrix, SymFuncError>>,
    b: OnceLock<Result<PartitionMatrix, SymFuncError>>,
    r: OnceLock<Result<RMatrices, SymFuncError>>,
}

/// The plethysm matrix `m_ν[X/(1-q^{-1})] = Σ_π R_{νπ} m_π` and its twist
/// `E·R` with `E = diag((1-q^{-1})^{ℓ(ν)})`.
#[derive(Clone, Debug)]
pub struct RMatrices {
    pub untwisted: PartitionMatrix,
    pub twisted: PartitionMatrix,
}

fn square_inverse(labels: &[Partition], m: &[Vec<QTFraction>]) -> Result<Vec<Vec<QTFraction>>, SymFuncError> {
    let mat = LabeledMatrix::from_entries(labels.to_vec(), labels.to_vec(), m.to_vec());
    Ok(mat.inverse()?.entries().to_vec())
}

impl SymContext {
    pub fn new(n: usize) -> Result<Self, SymFuncError> {
        if n > MAX_DEGREE {
            return Err(SymFuncError::UnsupportedDegree(n));
        }
        let parts = partitions_of(n);
        let p_to_m: Vec<Vec<i64>> = parts
            .iter()
            .map(|l| parts.iter().map(|m| power_sum_monomial(l, m)).collect())
            .collect();
        let s_to_m: Vec<Vec<i64>> = parts
            .iter()
            .map(|l| parts.iter().map(|m| kostka(l, m).unwrap() as i64).collect())
            .collect();
        let p_to_m = dense(&p_to_m);
        let s_to_m = dense(&s_to_m);
        let m_to_p = square_inverse(&parts, &p_to_m)?;
        let m_to_s = square_inverse(&parts, &s_to_m)?;
        Ok(Self {
            n,
            parts,
            p_to_m,
            m_to_p,
            s_to_m,
            m_to_s,
            macdonald: OnceLock::new(),
            big_schur: OnceLock::new(),
            l: OnceLock::new(),
            a: OnceLock::new(),
            k: OnceLock::new(),
            f: OnceLock::new(),
            b: OnceLock::new(),
            r: OnceLock::new(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.parts
    }

    fn check(&self, f: &SymFunc) -> Result<(), SymFuncError> {
        if f.n != self.n {
            return Err(SymFuncError::DegreeMismatch(f.n, self.n));
        }
        Ok(())
    }

    fn apply(coeffs: &[QTFraction], m: &[Vec<QTFraction>]) -> Vec<QTFraction> {
        let mut out = vec![QTFraction::zero(); m.first().map_or(0, |r| r.len())];
        for (c, row) in coeffs.iter().zip(m) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(row) {
                if !x.is_zero() {
                    *o = &*o + &(c * x);
                }
            }
        }
        out
    }

    /// Re-express `f` in `target`.
    pub fn convert(&self, f: &SymFunc, target: Basis) -> Result<SymFunc, SymFuncError> {
        self.check(f)?;
        if f.basis == target {
            return Ok(f.clone());
        }
        let in_m = match f.basis {
            Basis::Monomial => f.coeffs.clone(),
            Basis::PowerSum => Self::apply(&f.coeffs, &self.p_to_m),
            Basis::Schur => Self::apply(&f.coeffs, &self.s_to_m),
        };
        let coeffs = match target {
            Basis::Monomial => in_m,
            Basis::PowerSum => Self::apply(&in_m, &self.m_to_p),
            Basis::Schur => Self::apply(&in_m, &self.m_to_s),
        };
        Ok(SymFunc::from_coeffs(target, self.n, coeffs))
    }

    /// The Macdonald `(q, t)` inner product.
    pub fn inner_qt(&self, f: &SymFunc, g: &SymFunc) -> Result<QTFraction, SymFuncError> {
        if f.n != g.n {
            return Err(SymFuncError::DegreeMismatch(f.n, g.n));
        }
        let fp = self.convert(f, Basis::PowerSum)?;
        let gp = self.convert(g, Basis::PowerSum)?;
        Ok(self.inner_p(&fp.coeffs, &gp.coeffs))
    }

    fn inner_p(&self, f: &[QTFraction], g: &[QTFraction]) -> QTFraction {
        let mut acc = QTFraction::zero();
        for ((a, b), rho) in f.iter().zip(g).zip(&self.parts) {
            if a.is_zero() || b.is_zero() {
                continue;
            }
            acc = &acc + &(&(a * b) * &power_sum_norm(rho));
        }
        acc
    }

    /// `p_k ↦ p_k · factor(q^k, t^k)`, returned in the basis of `f`.
    pub fn plethysm_scale(&self, f: &SymFunc, factor: &QTFraction) -> Result<SymFunc, SymFuncError> {
        let fp = self.convert(f, Basis::PowerSum)?;
        let mut powers: HashMap<usize, QTFraction> = HashMap::new();
        let mut coeffs = Vec::with_capacity(fp.coeffs.len());
        for (c, rho) in fp.coeffs.iter().zip(&self.parts) {
            if c.is_zero() {
                coeffs.push(QTFraction::zero());
                continue;
            }
            let mut scale = QTFraction::one();
            for &k in rho.parts() {
                let fk = powers
                    .entry(k)
                    .or_insert_with(|| factor.substitute_monomial((k as i32, 0), (0, k as i32)));
                if fk.is_zero() {
                    return Err(ExactError::ZeroDenominator.into());
                }
                scale = &scale * fk;
            }
            coeffs.push(c * &scale);
        }
        self.convert(&SymFunc::from_coeffs(Basis::PowerSum, self.n, coeffs), f.basis)
    }

    fn macdonald_all(&self) -> Result<&Vec<SymFunc>, SymFuncError> {
        self.macdonald
            .get_or_init(|| self.gram_schmidt())
            .as_ref()
            .map_err(Clone::clone)
    }

    /// `P_μ` for every `μ`, in partition order, monomial basis.
    fn gram_schmidt(&self) -> Result<Vec<SymFunc>, SymFuncError> {
        let len = self.parts.len();
        // process (1^n) first: ascending lexicographic order refines dominance
        let mut built: Vec<(usize, Vec<QTFraction>, SymFunc, QTFraction)> = Vec::new();
        for idx in (0..len).rev() {
            let mu = &self.parts[idx];
            let mut p_m = SymFunc::basis_element(Basis::Monomial, mu);
            let mut p_p = self.m_to_p[idx].clone();
            for (_, prev_p, prev_m, norm) in &built {
                let proj = &self.inner_p(&self.m_to_p[idx], prev_p) / norm;
                if proj.is_zero() {
                    continue;
                }
                let neg = -&proj;
                p_m.axpy(&neg, prev_m);
                for (x, y) in p_p.iter_mut().zip(prev_p) {
                    if !y.is_zero() {
                        *x = &*x + &(&neg * y);
                    }
                }
            }
            let norm = self.inner_p(&p_p, &p_p);
            for (k, c) in p_m.coeffs.iter().enumerate() {
                let ok = if k == idx { c.is_one() } else { c.is_zero() || mu.dominates(&self.parts[k]) };
                if !ok {
                    return Err(SymFuncError::NotTriangular(mu.to_string()));
                }
            }
            built.push((idx, p_p, p_m, norm));
        }
        built.sort_by_key(|b| b.0);
        Ok(built.into_iter().map(|b| b.2).collect())
    }

    /// The monic Macdonald polynomial `P_μ(x; q, t)`, monomial basis.
    pub fn macdonald_p(&self, mu: &Partition) -> Result<SymFunc, SymFuncError> {
        Ok(self.macdonald_all()?[index_of(self.n, mu)].clone())
    }

    /// `J_μ = P_μ · Π_{s ∈ μ} (1 - q^{a(s)} t^{l(s)+1})`, monomial basis.
    pub fn macdonald_j(&self, mu: &Partition) -> Result<SymFunc, SymFuncError> {
        let c = QTFraction::from(cell_factor(mu));
        let j = self.macdonald_p(mu)?.scale(&c);
        for (k, coeff) in j.coeffs.iter().enumerate() {
            if coeff.as_laurent().is_none() {
                return Err(SymFuncError::NonPolynomialResult(format!(
                    "J_{mu} at m_{}",
                    self.parts[k]
                )));
            }
        }
        Ok(j)
    }

    fn big_schur_all(&self) -> &Vec<SymFunc> {
        self.big_schur.get_or_init(|| {
            let factor = QTFraction::from(&QTLaurent::one() - &QTLaurent::t());
            self.parts
                .iter()
                .map(|l| {
                    let s = SymFunc::basis_element(Basis::Schur, l);
                    let m = self.convert(&s, Basis::Monomial).unwrap();
                    self.plethysm_scale(&m, &factor).unwrap()
                })
                .collect()
        })
    }

    /// `S_λ(x; t) = s_λ[X(1 - t)]`, monomial basis.
    pub fn big_schur(&self, lambda: &Partition) -> SymFunc {
        self.big_schur_all()[index_of(self.n, lambda)].clone()
    }

    /// Divide the `m_ν` coefficients of each row by `(1-t)^{ℓ(ν)}`.
    fn strip_one_minus_t(&self, rows: &[SymFunc], what: &str) -> Result<PartitionMatrix, SymFuncError> {
        let mut entries = Vec::with_capacity(rows.len());
        for (r, f) in rows.iter().enumerate() {
            let mut row = Vec::with_capacity(self.parts.len());
            for (c, nu) in f.coeffs.iter().zip(&self.parts) {
                let label = format!("{what}_{} at m_{nu}", self.parts[r]);
                let poly = c
                    .as_laurent()
                    .ok_or_else(|| SymFuncError::NonPolynomialResult(label.clone()))?;
                let q = exact_div(&poly, &one_minus_t_pow(nu.len()))
                    .map_err(|_| SymFuncError::NotDivisible(label))?;
                row.push(QTFraction::from(q));
            }
            entries.push(row);
        }
        Ok(LabeledMatrix::from_entries(self.parts.clone(), self.parts.clone(), entries))
    }

    /// `S_λ = Σ_ν L_{λν}(t) (1-t)^{ℓ(ν)} m_ν`; rows `λ`, columns `ν`.
    pub fn l_matrix(&self) -> Result<&PartitionMatrix, SymFuncError> {
        self.l
            .get_or_init(|| self.strip_one_minus_t(self.big_schur_all(), "S"))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// `J_μ = Σ_ν a_{μν}(q, t) (1-t)^{ℓ(ν)} m_ν`; rows `μ`, columns `ν`.
    pub fn a_matrix(&self) -> Result<&PartitionMatrix, SymFuncError> {
        self.a
            .get_or_init(|| {
                let js = self
                    .parts
                    .iter()
                    .map(|mu| self.macdonald_j(mu))
                    .collect::<Result<Vec<_>, _>>()?;
                self.strip_one_minus_t(&js, "J")
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    /// `J_μ = Σ_λ K_{λμ}(q, t) S_λ`; rows `λ`, columns `μ`.
    pub fn k_matrix(&self) -> Result<&PartitionMatrix, SymFuncError> {
        self.k
            .get_or_init(|| {
                let js = self
                    .parts
                    .iter()
                    .map(|mu| self.macdonald_j(mu).map(|j| j.coeffs))
                    .collect::<Result<Vec<_>, _>>()?;
                let jmat = LabeledMatrix::from_entries(self.parts.clone(), self.parts.clone(), js);
                let smat = LabeledMatrix::from_entries(
                    self.parts.clone(),
                    self.parts.clone(),
                    self.big_schur_all().iter().map(|s| s.coeffs.clone()).collect(),
                );
                // Jmat = Kᵗ · Smat
                let kt = jmat.mul(&smat.inverse()?);
                let k = kt.transpose();
                for (i, row) in k.entries().iter().enumerate() {
                    for (j, e) in row.iter().enumerate() {
                        if !e.as_laurent().is_some_and(|p| p.is_polynomial()) {
                            return Err(SymFuncError::NonPolynomialResult(format!(
                                "K_{},{}",
                                self.parts[i], self.parts[j]
                            )));
                        }
                    }
                }
                Ok(k)
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    /// `F = K(0, 1)^{-1}`, so that `m_π = Σ_λ F_{πλ} s_λ`.
    pub fn f_matrix(&self) -> Result<&PartitionMatrix, SymFuncError> {
        self.f
            .get_or_init(|| Ok(self.k_matrix_at_0_1()?.inverse()?))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// `K(0, 1)`, which is the Kostka matrix.
    pub fn k_matrix_at_0_1(&self) -> Result<PartitionMatrix, SymFuncError> {
        let k = self.k_matrix()?;
        let (zero, one) = (QTFraction::zero(), QTFraction::one());
        let mut out = k.clone();
        for i in 0..self.parts.len() {
            for j in 0..self.parts.len() {
                out.set(i, j, substitute_fraction(k.get(i, j), &zero, &one)?);
            }
        }
        Ok(out)
    }

    /// `t^{n(μ)} K_{λμ}(q, t^{-1})`, rows `λ`, columns `μ`: the Schur
    /// coefficients of `H̃_μ`.
    pub fn modified_schur_matrix(&self) -> Result<PartitionMatrix, SymFuncError> {
        let k = self.k_matrix()?;
        let mut out = k.clone();
        for i in 0..self.parts.len() {
            for (j, mu) in self.parts.iter().enumerate() {
                let v = k
                    .get(i, j)
                    .substitute_monomial((1, 0), (0, -1))
                    .num()
                    .shift(0, mu.n_stat() as i32);
                if !v.is_polynomial() {
                    return Err(SymFuncError::NonPolynomialResult(format!("H~_{mu} at s_{}", self.parts[i])));
                }
                out.set(i, j, QTFraction::from(v));
            }
        }
        Ok(out)
    }

    /// `H̃_μ[X; q, t]` in the Schur basis.
    pub fn modified_h(&self, mu: &Partition) -> Result<SymFunc, SymFuncError> {
        let m = self.modified_schur_matrix()?;
        let j = index_of(self.n, mu);
        let coeffs = (0..self.parts.len()).map(|i| m.get(i, j).clone()).collect();
        Ok(SymFunc::from_coeffs(Basis::Schur, self.n, coeffs))
    }

    /// `t^{n(μ)} J_μ[X / (1 - t^{-1}); q, t^{-1}]` in the Schur basis, built
    /// from `J_μ` by plethysm alone; it should equal [`Self::modified_h`].
    pub fn modified_h_by_plethysm(&self, mu: &Partition) -> Result<SymFunc, SymFuncError> {
        let j = self.macdonald_j(mu)?.map(|c| c.substitute_monomial((1, 0), (0, -1)));
        let one = QTLaurent::one();
        let factor = QTFraction::new(one.clone(), &one - &QTLaurent::t_pow(-1))?;
        let h = self
            .plethysm_scale(&j, &factor)?
            .scale(&QTFraction::from(QTLaurent::t_pow(mu.n_stat() as i32)));
        self.convert(&h, Basis::Schur)
    }

    /// `H̃_μ = Σ_π b_{μπ}(q, t) m_π`; rows `μ`, columns `π`.
    pub fn b_matrix(&self) -> Result<&PartitionMatrix, SymFuncError> {
        self.b
            .get_or_init(|| {
                let hs = self.modified_schur_matrix()?;
                let kostka = self.k_matrix_at_0_1()?;
                let b = hs.transpose().mul(&kostka);
                for (i, row) in b.entries().iter().enumerate() {
                    for (j, e) in row.iter().enumerate() {
                        if !e.as_laurent().is_some_and(|p| p.is_polynomial()) {
                            return Err(SymFuncError::NonPolynomialResult(format!(
                                "b_{},{}",
                                self.parts[i], self.parts[j]
                            )));
                        }
                    }
                }
                Ok(b)
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    /// The plethysm matrix `R` and its twisted form `E·R`.
    pub fn r_matrices(&self) -> Result<&RMatrices, SymFuncError> {
        self.r
            .get_or_init(|| {
                let one = QTLaurent::one();
                let factor = QTFraction::new(one.clone(), &one - &QTLaurent::q_pow(-1))?;
                let rows = self
                    .parts
                    .iter()
                    .map(|nu| {
                        self.plethysm_scale(&SymFunc::basis_element(Basis::Monomial, nu), &factor)
                            .map(|f| f.coeffs)
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                let untwisted = LabeledMatrix::from_entries(self.parts.clone(), self.parts.clone(), rows);
                let e = LabeledMatrix::diagonal(
                    self.parts.clone(),
                    self.parts
                        .iter()
                        .map(|nu| QTFraction::from((&one - &QTLaurent::q_pow(-1)).pow(nu.len() as u32)))
                        .collect(),
                );
                let twisted = e.mul(&untwisted);
                Ok(RMatrices { untwisted, twisted })
            })
            .as_ref()
            .map_err(Clone::clone)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactring::parse_fraction;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn f(s: &str) -> QTFraction {
        parse_fraction(s).unwrap()
    }

    fn ctx(n: usize) -> SymContext {
        SymContext::new(n).unwrap()
    }

    #[test]
    fn schur_to_monomial() {
        let c = ctx(3);
        let s = c.convert(&SymFunc::basis_element(Basis::Schur, &part("2,1")), Basis::Monomial).unwrap();
        assert_eq!(s.to_string(), "1 * m[2,1] + 2 * m[1,1,1]");
        let c = ctx(2);
        let p = c.convert(&SymFunc::basis_element(Basis::PowerSum, &part("2")), Basis::Monomial).unwrap();
        assert_eq!(p.to_string(), "1 * m[2]");
    }

    #[test]
    fn round_trips() {
        for n in 1..=5 {
            let c = ctx(n);
            for lam in partitions_of(n) {
                for basis in [Basis::Monomial, Basis::Schur, Basis::PowerSum] {
                    let e = SymFunc::basis_element(basis, &lam);
                    for other in [Basis::Monomial, Basis::Schur, Basis::PowerSum] {
                        let back = c.convert(&c.convert(&e, other).unwrap(), basis).unwrap();
                        assert_eq!(back, e);
                    }
                }
            }
        }
        assert_eq!(SymContext::new(MAX_DEGREE + 1).err(), Some(SymFuncError::UnsupportedDegree(MAX_DEGREE + 1)));
    }

    #[test]
    fn inner_products() {
        let c = ctx(2);
        let p2 = SymFunc::basis_element(Basis::PowerSum, &part("2"));
        let p11 = SymFunc::basis_element(Basis::PowerSum, &part("1,1"));
        assert_eq!(c.inner_qt(&p2, &p2).unwrap(), f("2*(1 - q^2)/(1 - t^2)"));
        assert!(c.inner_qt(&p2, &p11).unwrap().is_zero());
        assert_eq!(
            c.inner_qt(&p2, &SymFunc::basis_element(Basis::PowerSum, &part("3"))).err(),
            Some(SymFuncError::DegreeMismatch(2, 3))
        );
        for n in 1..=4 {
            let c = ctx(n);
            let ms: Vec<SymFunc> = partitions_of(n).iter().map(|l| SymFunc::basis_element(Basis::Monomial, l)).collect();
            for a in &ms {
                for b in &ms {
                    assert_eq!(c.inner_qt(a, b).unwrap(), c.inner_qt(b, a).unwrap());
                }
            }
        }
    }

    #[test]
    fn integral_forms_match_tables() {
        let c = ctx(2);
        let j = c.macdonald_j(&part("2")).unwrap();
        assert_eq!(j.coeff(&part("2")), f("(1 - q*t)*(1 - t)"));
        assert_eq!(j.coeff(&part("1,1")), f("(1 + q)*(1 - t)^2"));
        let c = ctx(3);
        let j = c.macdonald_j(&part("1^3")).unwrap();
        assert_eq!(j.coeff(&part("1^3")), f("(1 + t)*(1 + t + t^2)*(1 - t)^3"));
        assert!(j.coeff(&part("3")).is_zero());
        let j = c.macdonald_j(&part("2,1")).unwrap();
        assert!(j.coeff(&part("3")).is_zero());
        assert_eq!(j.coeff(&part("2,1")), f("(1 - q*t^2)*(1 - t)^2"));
        assert_eq!(j.coeff(&part("1^3")), f("(2 + q + t + 2*q*t)*(1 - t)^3"));
    }

    #[test]
    fn macdonald_polynomials_are_orthogonal() {
        for n in 1..=4 {
            let c = ctx(n);
            let ps: Vec<SymFunc> = partitions_of(n).iter().map(|m| c.macdonald_p(m).unwrap()).collect();
            for (i, a) in ps.iter().enumerate() {
                for b in &ps[i + 1..] {
                    assert!(c.inner_qt(a, b).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn big_schur_functions() {
        let c = ctx(1);
        assert_eq!(c.big_schur(&part("1")).to_string(), "(-t + 1) * m[1]");
        let c = ctx(3);
        let s = c.big_schur(&part("2,1"));
        assert_eq!(s.coeff(&part("3")), f("-t*(1 - t)"));
        assert_eq!(s.coeff(&part("2,1")), f("(1 - t)^3"));
        assert_eq!(s.coeff(&part("1^3")), f("2*(1 - t)^3"));
        for n in 1..=4 {
            let c = ctx(n);
            for lam in partitions_of(n) {
                let at_zero = c.big_schur(&lam).map(|x| {
                    crate::exactring::substitute_fraction(x, &QTLaurent::q().into(), &QTFraction::zero()).unwrap()
                });
                let s = c.convert(&SymFunc::basis_element(Basis::Schur, &lam), Basis::Monomial).unwrap();
                assert_eq!(at_zero, s);
            }
        }
    }

    fn strings(m: &PartitionMatrix) -> Vec<Vec<String>> {
        m.entries().iter().map(|r| r.iter().map(|e| e.to_string()).collect()).collect()
    }

    #[test]
    fn transition_matrices_small() {
        let c = ctx(2);
        assert_eq!(strings(c.k_matrix().unwrap()), [["1", "t"], ["q", "1"]]);
        let c = ctx(3);
        let l = c.l_matrix().unwrap();
        assert_eq!(strings(l)[2], ["t^2", "-t", "1"]);
        let a = c.a_matrix().unwrap();
        assert_eq!(*a.get(0, 0), f("(1 - q*t)*(1 - q^2*t)"));
        assert_eq!(*a.get(0, 1), f("(1 - q*t)*(1 + q + q^2)"));
        assert_eq!(*a.get(0, 2), f("(1 + q)*(1 + q + q^2)"));
        let b = c.b_matrix().unwrap();
        assert_eq!(strings(b)[1], ["1", "q + t + 1", "q*t + 2*q + 2*t + 1"]);
    }

    #[test]
    fn modified_macdonald() {
        let c = ctx(3);
        let h = c.modified_h(&part("2,1")).unwrap();
        assert_eq!(h.to_string(), "1 * s[3] + (q + t) * s[2,1] + q*t * s[1,1,1]");
        for n in 1..=4 {
            let c = ctx(n);
            let h = c.modified_h(&Partition::column(n)).unwrap();
            let top = (n * (n - 1) / 2) as i32;
            assert_eq!(h.coeff(&Partition::column(n)), QTFraction::from(QTLaurent::t_pow(top)));
        }
    }

    #[test]
    fn modified_by_plethysm() {
        for n in 1..=4 {
            let c = ctx(n);
            for mu in partitions_of(n) {
                assert_eq!(c.modified_h_by_plethysm(&mu).unwrap(), c.modified_h(&mu).unwrap(), "{mu}");
            }
        }
    }

    #[test]
    fn plethysm_scaling() {
        let c = ctx(2);
        let p2 = SymFunc::basis_element(Basis::PowerSum, &part("2"));
        let scaled = c.plethysm_scale(&p2, &f("1 - t")).unwrap();
        assert_eq!(scaled.coeff(&part("2")), f("1 - t^2"));
        let c1 = ctx(1);
        let s1 = SymFunc::basis_element(Basis::Schur, &part("1"));
        let m = c1.convert(&c1.plethysm_scale(&s1, &f("1 - t")).unwrap(), Basis::Monomial).unwrap();
        assert_eq!(m, c1.big_schur(&part("1")));
        assert!(c.plethysm_scale(&p2, &QTFraction::zero()).is_err());
        for n in 1..=4 {
            let c = ctx(n);
            for lam in partitions_of(n) {
                let e = SymFunc::basis_element(Basis::Monomial, &lam);
                let there = c.plethysm_scale(&e, &f("1 - t")).unwrap();
                assert_eq!(c.plethysm_scale(&there, &f("1/(1 - t)")).unwrap(), e);
            }
        }
    }

    #[test]
    fn r_matrix_small() {
        let c = ctx(2);
        let r = c.r_matrices().unwrap();
        assert_eq!(*r.untwisted.get(0, 0), f("q^2/(q^2 - 1)"));
        assert!(r.untwisted.get(0, 1).is_zero());
        assert_eq!(*r.untwisted.get(1, 0), f("q^2/((q - 1)^2*(q + 1))"));
        assert_eq!(*r.untwisted.get(1, 1), f("q^2/(q - 1)^2"));
        assert_eq!(strings(&r.twisted), [["(q)/(q + 1)", "0"], ["(1)/(q + 1)", "1"]]);
    }

    #[test]
    fn kostka_inverse() {
        for n in 1..=6 {
            let c = ctx(n);
            let k = LabeledMatrix::from_entries(c.parts.clone(), c.parts.clone(), c.s_to_m.clone());
            let inv = LabeledMatrix::from_entries(c.parts.clone(), c.parts.clone(), c.m_to_s.clone());
            assert!(inv.mul(&k).is_identity());
        }
    }
}
