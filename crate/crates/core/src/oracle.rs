//! Brute-force point counts over a prime field `F_p`.
//!
//! Everything here enumerates `GL_n(F_p)`, its flag variety, or a Bruhat
//! cell directly and is meant to be checked against the symbolic counts in
//! [`crate::counts`]. Nothing in this module depends on the Hecke algebra or
//! on symmetric functions.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::context::Context;
use crate::counts;
use crate::partitions::{partitions_of, Composition, Partition};
use crate::symgroup::{all_permutations, Permutation};
use crate::{exactring::QTLaurent, Error as CrateError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("modulus {0} is not a prime")]
    NotPrime(u32),
    #[error("n={n}, p={p} is too large to enumerate")]
    ScaleExceeded { n: usize, p: u32 },
    #[error("matrix is singular")]
    Singular,
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("{0} is not divisible by {1}")]
    NotDivisible(u64, u64),
}

/// Square matrix over `F_p`, row-major, entries in `[0, p)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpMatrix {
    p: u32,
    n: usize,
    entries: Vec<u32>,
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn inv_mod(a: u32, p: u32) -> u32 {
    // p is prime, so a^(p-2) is the inverse
    let (mut base, mut exp, mut acc) = (a as u64 % p as u64, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        exp >>= 1;
    }
    acc as u32
}

impl FpMatrix {
    pub fn new(p: u32, rows: &[Vec<i64>]) -> Result<Self, OracleError> {
        if !is_prime(p) {
            return Err(OracleError::NotPrime(p));
        }
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(OracleError::DimensionMismatch(row.len(), n));
            }
            entries.extend(row.iter().map(|&x| x.rem_euclid(p as i64) as u32));
        }
        Ok(Self { p, n, entries })
    }

    pub fn identity(n: usize, p: u32) -> Self {
        let mut m = Self::zero(n, p);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    fn zero(n: usize, p: u32) -> Self {
        Self {
            p,
            n,
            entries: vec![0; n * n],
        }
    }

    /// Permutation matrix with `1` at row `w(j)`, column `j`.
    pub fn permutation(w: &Permutation, p: u32) -> Self {
        let n = w.degree();
        let mut m = Self::zero(n, p);
        for j in 1..=n {
            m.set(w.image(j) - 1, j - 1, 1);
        }
        m
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Zero-based entry access.
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.n + j]
    }

    fn set(&mut self, i: usize, j: usize, v: u32) {
        self.entries[i * self.n + j] = v % self.p;
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.entries.chunks(self.n).map(<[u32]>::to_vec).collect()
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!((self.n, self.p), (other.n, other.p), "shape mismatch");
        let (n, p) = (self.n, self.p as u64);
        let mut out = Self::zero(self.n, self.p);
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0u64;
                for k in 0..n {
                    acc += self.get(i, k) as u64 * other.get(k, j) as u64;
                }
                out.entries[i * n + j] = (acc % p) as u32;
            }
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let p = self.p;
        Self {
            p,
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| (a + p - b) % p)
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::identity(self.n, self.p), |acc, _| acc.mul(self))
    }

    pub fn rank(&self) -> usize {
        rank_of(self.rows(), self.p)
    }

    pub fn is_invertible(&self) -> bool {
        self.rank() == self.n
    }

    pub fn inverse(&self) -> Result<Self, OracleError> {
        let (n, p) = (self.n, self.p as u64);
        let mut a: Vec<Vec<u64>> = (0..n)
            .map(|i| {
                let mut row: Vec<u64> = (0..n).map(|j| self.get(i, j) as u64).collect();
                row.extend((0..n).map(|j| u64::from(i == j)));
                row
            })
            .collect();
        for c in 0..n {
            let piv = (c..n).find(|&r| a[r][c] != 0).ok_or(OracleError::Singular)?;
            a.swap(c, piv);
            let inv = inv_mod(a[c][c] as u32, self.p) as u64;
            for x in a[c].iter_mut() {
                *x = *x * inv % p;
            }
            for r in 0..n {
                if r != c && a[r][c] != 0 {
                    let f = a[r][c];
                    for k in 0..2 * n {
                        a[r][k] = (a[r][k] + (p - f) * a[c][k]) % p;
                    }
                }
            }
        }
        Ok(Self {
            p: self.p,
            n,
            entries: a.iter().flat_map(|row| row[n..].iter().map(|&x| x as u32)).collect(),
        })
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == 0))
    }

    /// Whether the entries below the diagonal blocks of sizes `pi` vanish.
    pub fn in_parabolic(&self, pi: &Composition) -> bool {
        let mut block = Vec::with_capacity(self.n);
        for (b, &part) in pi.parts().iter().enumerate() {
            block.extend(std::iter::repeat_n(b, part));
        }
        (0..self.n).all(|i| (0..self.n).all(|j| block[i] <= block[j] || self.get(i, j) == 0))
    }

    /// Jordan type of a unipotent matrix, or `None` if it is not unipotent.
    pub fn unipotent_type(&self) -> Option<Partition> {
        let x = self.sub(&Self::identity(self.n, self.p));
        // ranks of (g-1)^k; the number of blocks of size >= k is r_{k-1} - r_k
        let mut ranks = vec![self.n];
        let mut power = Self::identity(self.n, self.p);
        for _ in 0..self.n {
            power = power.mul(&x);
            ranks.push(power.rank());
        }
        if ranks[self.n] != 0 {
            return None;
        }
        let at_least: Vec<usize> = (1..=self.n).map(|k| ranks[k - 1] - ranks[k]).collect();
        let mut parts = Vec::new();
        for k in 1..=self.n {
            let next = at_least.get(k).copied().unwrap_or(0);
            parts.extend(std::iter::repeat_n(k, at_least[k - 1] - next));
        }
        Some(Partition::from_unsorted(parts))
    }
}

impl std::fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "F{}{:?}", self.p, self.rows())
    }
}

fn rank_of(mut rows: Vec<Vec<u32>>, p: u32) -> usize {
    let pp = p as u64;
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = inv_mod(rows[rank][c], p) as u64;
        for r in rank + 1..rows.len() {
            let f = rows[r][c] as u64 * inv % pp;
            if f != 0 {
                for k in c..cols {
                    rows[r][k] = ((rows[r][k] as u64 + (pp - f) * rows[rank][k] as u64) % pp) as u32;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// The permutation `w` with `g ∈ BwB`, `B` the upper triangular matrices.
///
/// Reads the rank of every bottom-left submatrix; both left and right
/// multiplication by `B` leave these ranks alone.
pub fn bruhat_word(g: &FpMatrix) -> Result<Permutation, OracleError> {
    let n = g.n;
    if !g.is_invertible() {
        return Err(OracleError::Singular);
    }
    // r[i][j]: rank of rows i..n, columns 0..j (zero-based, half-open)
    let mut r = vec![vec![0usize; n + 1]; n + 1];
    for i in 0..n {
        for j in 1..=n {
            let sub: Vec<Vec<u32>> = (i..n).map(|a| (0..j).map(|b| g.get(a, b)).collect()).collect();
            r[i][j] = rank_of(sub, g.p);
        }
    }
    let mut images = vec![0; n];
    for i in 0..n {
        for j in 1..=n {
            let d = r[i][j] + r[i + 1][j - 1] - r[i + 1][j] - r[i][j - 1];
            if d == 1 {
                images[j - 1] = i + 1;
            }
        }
    }
    Permutation::from_images(images).map_err(|_| OracleError::Singular)
}

/// Canonical representative of the coset `gB`.
///
/// Column `j` is reduced against the earlier columns so that it vanishes on
/// their pivot rows, then scaled so its last nonzero entry is `1`.
pub fn flag_canonical(g: &FpMatrix) -> Result<FpMatrix, OracleError> {
    let (n, p) = (g.n, g.p as u64);
    let mut cols: Vec<Vec<u64>> = (0..n).map(|j| (0..n).map(|i| g.get(i, j) as u64).collect()).collect();
    let mut pivots: Vec<usize> = Vec::with_capacity(n);
    for j in 0..n {
        let mut order: Vec<usize> = (0..j).collect();
        order.sort_by_key(|&i| std::cmp::Reverse(pivots[i]));
        for i in order {
            let f = cols[j][pivots[i]];
            if f != 0 {
                for r in 0..n {
                    cols[j][r] = (cols[j][r] + (p - f) * cols[i][r]) % p;
                }
            }
        }
        let piv = (0..n).rev().find(|&r| cols[j][r] != 0).ok_or(OracleError::Singular)?;
        let inv = inv_mod(cols[j][piv] as u32, g.p) as u64;
        for x in cols[j].iter_mut() {
            *x = *x * inv % p;
        }
        pivots.push(piv);
    }
    let mut out = FpMatrix::zero(n, g.p);
    for (j, col) in cols.iter().enumerate() {
        for (i, &x) in col.iter().enumerate() {
            out.set(i, j, x as u32);
        }
    }
    Ok(out)
}

/// Flags of `F_p^n` are enumerated for these `(n, p)` only.
pub fn check_scale(n: usize, p: u32) -> Result<(), OracleError> {
    if !is_prime(p) {
        return Err(OracleError::NotPrime(p));
    }
    let ok = match n {
        0 => false,
        1 | 2 => p <= 13,
        3 => p <= 5,
        4 => p <= 3,
        _ => false,
    };
    if ok {
        Ok(())
    } else {
        Err(OracleError::ScaleExceeded { n, p })
    }
}

/// Whole-group enumeration is limited further.
pub fn check_group_scale(n: usize, p: u32) -> Result<(), OracleError> {
    check_scale(n, p)?;
    if n <= 2 && p <= 5 || n == 3 && p <= 3 {
        Ok(())
    } else {
        Err(OracleError::ScaleExceeded { n, p })
    }
}

/// One representative per coset `gB`, listed cell by cell: in the cell of
/// `w`, column `j` has its pivot `1` in row `w(j)` and free entries in the
/// rows above it not used by earlier pivots.
pub fn enumerate_flags(n: usize, p: u32) -> Result<Vec<FpMatrix>, OracleError> {
    check_scale(n, p)?;
    let mut flags = Vec::new();
    for w in all_permutations(n) {
        let mut free = Vec::new();
        for j in 1..=n {
            for r in 1..w.image(j) {
                if (1..j).all(|i| w.image(i) != r) {
                    free.push((r - 1, j - 1));
                }
            }
        }
        let base = FpMatrix::permutation(&w, p);
        let total = (p as usize).pow(free.len() as u32);
        for mut code in 0..total {
            let mut m = base.clone();
            for &(r, c) in &free {
                m.set(r, c, (code % p as usize) as u32);
                code /= p as usize;
            }
            flags.push(m);
        }
    }
    Ok(flags)
}

/// Every invertible `n × n` matrix over `F_p`.
pub fn enumerate_group(n: usize, p: u32) -> Result<Vec<FpMatrix>, OracleError> {
    check_group_scale(n, p)?;
    let cells = n * n;
    let total = (p as usize).pow(cells as u32);
    let mut out = Vec::new();
    for mut code in 0..total {
        let mut m = FpMatrix::zero(n, p);
        for k in 0..cells {
            m.entries[k] = (code % p as usize) as u32;
            code /= p as usize;
        }
        if m.is_invertible() {
            out.push(m);
        }
    }
    Ok(out)
}

/// Upper unitriangular Jordan matrix with block sizes `mu`.
pub fn jordan_unipotent(mu: &Partition, p: u32) -> FpMatrix {
    let n = mu.size();
    let mut m = FpMatrix::identity(n, p);
    let mut start = 0;
    for &part in mu.parts() {
        for k in start..start + part - 1 {
            m.set(k, k + 1, 1);
        }
        start += part;
    }
    m
}

/// `y^{-1} g y` for every flag `y`.
fn conjugates(g: &FpMatrix) -> Result<Vec<FpMatrix>, OracleError> {
    enumerate_flags(g.n, g.p)?
        .iter()
        .map(|y| Ok(y.inverse()?.mul(g).mul(y)))
        .collect()
}

/// `#{yB : y^{-1} g y ∈ BwB}`.
pub fn lusztig_count_of(g: &FpMatrix, w: &Permutation) -> Result<u64, OracleError> {
    if w.degree() != g.n {
        return Err(OracleError::DimensionMismatch(w.degree(), g.n));
    }
    let mut count = 0;
    for c in conjugates(g)? {
        if bruhat_word(&c)? == *w {
            count += 1;
        }
    }
    Ok(count)
}

/// `lusztig_count_of` for every `w` at once.
pub fn lusztig_histogram(g: &FpMatrix) -> Result<BTreeMap<Permutation, u64>, OracleError> {
    let mut out: BTreeMap<Permutation, u64> = all_permutations(g.n).into_iter().map(|w| (w, 0)).collect();
    for c in conjugates(g)? {
        *out.entry(bruhat_word(&c)?).or_default() += 1;
    }
    Ok(out)
}

pub fn oracle_lusztig(mu: &Partition, w: &Permutation, p: u32) -> Result<u64, OracleError> {
    lusztig_count_of(&jordan_unipotent(mu, p), w)
}

/// `W_π` evaluated at `q = p`.
fn poincare_at(pi: &Composition, p: u32) -> u64 {
    let q_int = |k: usize| (0..k as u32).map(|e| (p as u64).pow(e)).sum::<u64>();
    pi.parts()
        .iter()
        .map(|&k| (1..=k).map(q_int).product::<u64>())
        .product()
}

/// `#{yP_π : y^{-1} g y ∈ P_π}`, counted on full flags: each partial flag
/// is refined by exactly `W_π(p)` of them.
pub fn springer_count_of(g: &FpMatrix, pi: &Composition) -> Result<u64, OracleError> {
    if pi.size() != g.n {
        return Err(OracleError::DimensionMismatch(pi.size(), g.n));
    }
    let full = conjugates(g)?.iter().filter(|c| c.in_parabolic(pi)).count() as u64;
    let fiber = poincare_at(pi, g.p);
    if !full.is_multiple_of(fiber) {
        return Err(OracleError::NotDivisible(full, fiber));
    }
    Ok(full / fiber)
}

pub fn oracle_springer(mu: &Partition, pi: &Composition, p: u32) -> Result<u64, OracleError> {
    springer_count_of(&jordan_unipotent(mu, p), pi)
}

/// Both sides of `#Y_{BwB}(u^{-1}) = |G/B| / |C_u| · #(C_u ∩ Bw^{-1}B)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassIntersection {
    pub n: usize,
    pub p: u32,
    pub mu: String,
    pub w: String,
    pub flags: u64,
    pub class_size: u64,
    pub intersection: u64,
    pub lusztig_inverse: u64,
}

impl ClassIntersection {
    pub fn holds(&self) -> bool {
        self.lusztig_inverse * self.class_size == self.flags * self.intersection
    }
}

/// Checks the class-intersection identity for every `μ ⊢ n` and `w ∈ S_n`
/// by enumerating the whole group once.
pub fn oracle_class_intersection(n: usize, p: u32) -> Result<Vec<ClassIntersection>, OracleError> {
    let group = enumerate_group(n, p)?;
    let flags = enumerate_flags(n, p)?.len() as u64;
    let mut typed: Vec<(Partition, Permutation)> = Vec::new();
    for g in &group {
        if let Some(mu) = g.unipotent_type() {
            typed.push((mu, bruhat_word(g)?));
        }
    }
    let mut out = Vec::new();
    for mu in partitions_of(n) {
        let u = jordan_unipotent(&mu, p);
        let u_inv = u.inverse()?;
        let class_size = typed.iter().filter(|(m, _)| *m == mu).count() as u64;
        for w in all_permutations(n) {
            let w_inv = w.inverse();
            let intersection = typed.iter().filter(|(m, v)| *m == mu && *v == w_inv).count() as u64;
            out.push(ClassIntersection {
                n,
                p,
                mu: mu.to_string(),
                w: w.word_label(),
                flags,
                class_size,
                intersection,
                lusztig_inverse: lusztig_count_of(&u_inv, &w)?,
            });
        }
    }
    Ok(out)
}

/// A brute-force count next to the polynomial it should match.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleRecord {
    pub n: usize,
    pub p: u32,
    pub mu: String,
    pub w_or_pi: String,
    pub oracle_count: u64,
    pub polynomial_value: String,
    #[serde(rename = "match")]
    pub matches: bool,
}

fn value_at(f: &QTLaurent, p: u32) -> Result<num_rational::BigRational, CrateError> {
    f.eval_q(p as i64)
        .ok_or_else(|| CrateError::InternalMismatch(format!("cannot evaluate {f} at q={p}")))
}

fn record(n: usize, p: u32, mu: &Partition, label: String, count: u64, f: &QTLaurent) -> Result<OracleRecord, CrateError> {
    let value = value_at(f, p)?;
    Ok(OracleRecord {
        n,
        p,
        mu: mu.to_string(),
        w_or_pi: label,
        oracle_count: count,
        matches: value == num_rational::BigRational::from_integer(count.into()),
        polynomial_value: value.to_string(),
    })
}

/// Every `(μ, w)` Lusztig count against `lusztig_count_w` at `q = p`.
pub fn compare_lusztig(ctx: &Context, p: u32) -> Result<Vec<OracleRecord>, CrateError> {
    let n = ctx.n();
    check_scale(n, p)?;
    let mut out = Vec::new();
    for mu in partitions_of(n) {
        let histogram = lusztig_histogram(&jordan_unipotent(&mu, p))?;
        for w in ctx.permutations()? {
            let count = histogram[w];
            let f = counts::lusztig_count_w(ctx, &mu, w)?;
            out.push(record(n, p, &mu, w.word_label(), count, &f)?);
        }
    }
    Ok(out)
}

/// Springer counts for each `π` in `pis` against `springer_count` at `q = p`.
pub fn compare_springer(ctx: &Context, p: u32, pis: &[Composition]) -> Result<Vec<OracleRecord>, CrateError> {
    let n = ctx.n();
    check_scale(n, p)?;
    let mut out = Vec::new();
    for mu in partitions_of(n) {
        for pi in pis {
            let count = oracle_springer(&mu, pi, p)?;
            let f = counts::springer_count(ctx, &mu, pi)?;
            out.push(record(n, p, &mu, pi.to_string(), count, &f)?);
        }
    }
    Ok(out)
}
