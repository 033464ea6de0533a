//! The Iwahori-Hecke algebra of `S_n` over `Q(q)`, the expansion matrix of
//! Geck-Rouquier coefficients, the contraction matrix and the central and
//! parabolic elements built from them.
//!
//! Multiplication by a generator follows
//! `T_w T_{s_i} = T_{w s_i}` if `ℓ(w s_i) > ℓ(w)`, and
//! `T_w T_{s_i} = (q-1) T_w + q T_{w s_i}` otherwise.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use thiserror::Error;

use crate::context::Context;
use crate::counts;
use crate::Error as CrateError;
use crate::exactring::{q_factorial, QTFraction, QTLaurent};
use crate::matrix::{LabeledMatrix, MixedMatrix};
use crate::partitions::{partitions_of, Composition, Partition};
use crate::symgroup::{canonical_permutations, in_young_subgroup, min_class_rep, poincare, young_subgroup, Permutation, Side};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeckeError {
    #[error("operands live in H(S_{0}) and H(S_{1})")]
    RankMismatch(usize, usize),
    #[error("two derivations disagree at {0}")]
    InconsistentPropagation(String),
    #[error("no rule reaches {0}")]
    IncompletePropagation(String),
}

/// A finite combination `Σ c_w T_w` with nonzero fraction coefficients.
#[derive(Clone, PartialEq)]
pub struct HeckeElement {
    n: usize,
    coeffs: BTreeMap<Permutation, QTFraction>,
}

fn q_minus_one() -> QTFraction {
    QTFraction::from(&QTLaurent::q() - &QTLaurent::one())
}

impl HeckeElement {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    /// `T_w`.
    pub fn basis(w: &Permutation) -> Self {
        let mut h = Self::zero(w.degree());
        h.add_term(w.clone(), QTFraction::one());
        h
    }

    /// `T_1`.
    pub fn one(n: usize) -> Self {
        Self::basis(&Permutation::identity(n))
    }

    pub fn generator(n: usize, i: usize) -> Result<Self, crate::symgroup::SymGroupError> {
        Ok(Self::basis(&Permutation::simple(n, i)?))
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn add_term(&mut self, w: Permutation, c: QTFraction) {
        assert_eq!(w.degree(), self.n, "permutation degree");
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&w) {
            Some(old) => {
                let sum = &*old + &c;
                if sum.is_zero() {
                    self.coeffs.remove(&w);
                } else {
                    *old = sum;
                }
            }
            None => {
                self.coeffs.insert(w, c);
            }
        }
    }

    pub fn coeff(&self, w: &Permutation) -> QTFraction {
        self.coeffs.get(w).cloned().unwrap_or_else(QTFraction::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &QTFraction)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &QTFraction) -> Self {
        let mut out = Self::zero(self.n);
        for (w, a) in &self.coeffs {
            out.add_term(w.clone(), a * c);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self, HeckeError> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (w, c) in &other.coeffs {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, HeckeError> {
        self.add(&other.scale(&QTFraction::integer(-1)))
    }

    fn check_rank(&self, other: &Self) -> Result<(), HeckeError> {
        if self.n != other.n {
            return Err(HeckeError::RankMismatch(self.n, other.n));
        }
        Ok(())
    }

    /// `self · T_{s_i}` or `T_{s_i} · self`.
    pub fn mul_generator(&self, i: usize, side: Side) -> Self {
        let q = QTFraction::from(QTLaurent::q());
        let qm1 = q_minus_one();
        let mut out = Self::zero(self.n);
        for (w, c) in &self.coeffs {
            let (ws, delta) = w.apply_simple(i, side).expect("generator index in range");
            if delta > 0 {
                out.add_term(ws, c.clone());
            } else {
                out.add_term(w.clone(), c * &qm1);
                out.add_term(ws, c * &q);
            }
        }
        out
    }

    /// The product, expanding the right factor along reduced words.
    pub fn multiply(&self, other: &Self) -> Result<Self, HeckeError> {
        self.check_rank(other)?;
        let mut out = Self::zero(self.n);
        for (v, c) in &other.coeffs {
            let mut acc = self.clone();
            for i in v.reduced_word() {
                acc = acc.mul_generator(i, Side::Right);
            }
            for (w, a) in acc.coeffs {
                out.add_term(w, &a * c);
            }
        }
        Ok(out)
    }

    /// Whether the element commutes with every `T_{s_i}`.
    pub fn is_central(&self) -> bool {
        (1..self.n).all(|i| self.mul_generator(i, Side::Right) == self.mul_generator(i, Side::Left))
    }
}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut terms: Vec<(&Permutation, &QTFraction)> = self.coeffs.iter().collect();
        terms.sort_by(|a, b| b.0.length().cmp(&a.0.length()).then(a.0.cmp(b.0)));
        let parts: Vec<String> = terms
            .into_iter()
            .map(|(w, c)| {
                let c = match c.as_laurent() {
                    Some(p) if p.len() > 1 => format!("({p})"),
                    _ => c.to_string(),
                };
                format!("{c} * T[{}]", w.word_label())
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HeckeElement({self})")
    }
}

/// Values on `S_n` satisfying the class-function recursion
///
/// * `f(s_i w) = f(w s_i)` when `ℓ(s_i w) = ℓ(w s_i) = ℓ(w) + 1`,
/// * `f(s_i w s_i) = q f(w) + (q-1) f(w s_i)` when `ℓ(s_i w s_i) = ℓ(w) + 2`,
///
/// determined by `seed` on the minimal-length elements of each class.
/// Each permutation carries a vector of values (one per row). Returns
/// values in [`canonical_permutations`] order.
pub fn propagate(
    n: usize,
    seed: &dyn Fn(&Partition) -> Vec<QTFraction>,
) -> Result<(Vec<Permutation>, Vec<Vec<QTFraction>>), HeckeError> {
    let perms = canonical_permutations(n);
    let index: HashMap<Permutation, usize> =
        perms.iter().enumerate().map(|(k, w)| (w.clone(), k)).collect();
    let mut values: Vec<Option<Vec<QTFraction>>> = vec![None; perms.len()];
    let q = QTFraction::from(QTLaurent::q());
    let qm1 = q_minus_one();
    let seeds: HashMap<Partition, Vec<QTFraction>> =
        partitions_of(n).into_iter().map(|p| (p.clone(), seed(&p))).collect();

    let max_len = n * n.saturating_sub(1) / 2;
    for len in 0..=max_len {
        let layer: Vec<usize> = (0..perms.len()).filter(|&k| perms[k].length() == len).collect();
        for &k in &layer {
            let x = &perms[k];
            let class = x.cycle_type();
            let mut derived: Option<Vec<QTFraction>> = None;
            let mut offer = |v: Vec<QTFraction>| -> Result<(), HeckeError> {
                match &derived {
                    Some(old) if *old != v => Err(HeckeError::InconsistentPropagation(x.word_label())),
                    Some(_) => Ok(()),
                    None => {
                        derived = Some(v);
                        Ok(())
                    }
                }
            };
            if len == n - class.len() {
                offer(seeds[&class].clone())?;
            }
            for i in 1..n {
                let (sx, _) = x.apply_simple(i, Side::Left).unwrap();
                let (w, _) = sx.apply_simple(i, Side::Right).unwrap();
                if len >= 2 && w.length() == len - 2 {
                    let ws = w.apply_simple(i, Side::Right).unwrap().0;
                    let a = values[index[&w]].as_ref().expect("shorter element assigned");
                    let b = values[index[&ws]].as_ref().expect("shorter element assigned");
                    offer(a.iter().zip(b).map(|(a, b)| &(&q * a) + &(&qm1 * b)).collect())?;
                }
            }
            values[k] = derived;
        }
        // cyclic shifts within the layer
        loop {
            let mut changed = false;
            for &k in &layer {
                let x = &perms[k];
                for i in 1..n {
                    let z = x
                        .apply_simple(i, Side::Left)
                        .unwrap()
                        .0
                        .apply_simple(i, Side::Right)
                        .unwrap()
                        .0;
                    if !x.is_left_descent(i) || z.length() != len || z == *x {
                        continue;
                    }
                    let kz = index[&z];
                    match (&values[k], &values[kz]) {
                        (Some(a), Some(b)) if a != b => {
                            return Err(HeckeError::InconsistentPropagation(x.word_label()))
                        }
                        (None, Some(b)) => {
                            values[k] = Some(b.clone());
                            changed = true;
                        }
                        (Some(a), None) => {
                            values[kz] = Some(a.clone());
                            changed = true;
                        }
                        _ => {}
                    }
                }
            }
            if !changed {
                break;
            }
        }
        if let Some(&k) = layer.iter().find(|&&k| values[k].is_none()) {
            return Err(HeckeError::IncompletePropagation(perms[k].word_label()));
        }
    }
    Ok((perms, values.into_iter().map(|v| v.unwrap()).collect()))
}

/// The expansion matrix `κ = (κ_{ν,w})`: rows are classes in partition
/// order, columns permutations in canonical order.
pub fn expansion_matrix(n: usize) -> Result<MixedMatrix, HeckeError> {
    let classes = partitions_of(n);
    let seed = |nu: &Partition| {
        classes
            .iter()
            .map(|c| if c == nu { QTFraction::one() } else { QTFraction::zero() })
            .collect()
    };
    let (perms, values) = propagate(n, &seed)?;
    let entries = (0..classes.len())
        .map(|r| values.iter().map(|v| v[r].clone()).collect())
        .collect();
    Ok(LabeledMatrix::from_entries(classes, perms, entries))
}

/// Every place where a row of `m` (indexed by permutations in its columns)
/// violates one of the three defining rules; empty when all hold.
pub fn rule_violations<R: Clone + PartialEq>(m: &LabeledMatrix<R, Permutation>) -> Vec<String> {
    let perms = m.cols();
    let Some(n) = perms.first().map(|w| w.degree()) else {
        return Vec::new();
    };
    let index: HashMap<&Permutation, usize> = perms.iter().enumerate().map(|(k, w)| (w, k)).collect();
    let q = QTFraction::from(QTLaurent::q());
    let qm1 = q_minus_one();
    let mut out = Vec::new();
    for (r, row) in m.entries().iter().enumerate() {
        for w in perms {
            for i in 1..n {
                let (sw, dl) = w.apply_simple(i, Side::Left).unwrap();
                let (ws, dr) = w.apply_simple(i, Side::Right).unwrap();
                if dl > 0 && dr > 0 && row[index[&sw]] != row[index[&ws]] {
                    out.push(format!("row {r}: shift rule at {} with s{i}", w.word_label()));
                }
                let (sws, _) = sw.apply_simple(i, Side::Right).unwrap();
                if sws.length() == w.length() + 2 {
                    let expect = &(&q * &row[index[w]]) + &(&qm1 * &row[index[&ws]]);
                    if row[index[&sws]] != expect {
                        out.push(format!("row {r}: conjugation rule at {} with s{i}", w.word_label()));
                    }
                }
            }
        }
    }
    out
}

/// `C_{w,π} = 1` iff `w ∈ W_π`; rows in canonical permutation order.
pub fn contraction_matrix(n: usize, cols: &[Composition]) -> LabeledMatrix<Permutation, Composition> {
    LabeledMatrix::from_fn(canonical_permutations(n), cols.to_vec(), |w, pi| {
        if in_young_subgroup(w, pi).expect("composition of n") {
            QTFraction::one()
        } else {
            QTFraction::zero()
        }
    })
}

/// [`contraction_matrix`] with the partitions of `n` as columns.
pub fn contraction_matrix_partitions(n: usize) -> LabeledMatrix<Permutation, Composition> {
    let cols: Vec<Composition> = partitions_of(n).iter().map(Partition::as_composition).collect();
    contraction_matrix(n, &cols)
}

/// `Σ_w c_w q^{-ℓ(w)} T_{w^{-1}}` for a row `c` indexed by permutations.
pub fn from_rescaled_row(perms: &[Permutation], row: &[QTFraction]) -> HeckeElement {
    let n = perms.first().map_or(0, |w| w.degree());
    let mut h = HeckeElement::zero(n);
    for (w, c) in perms.iter().zip(row) {
        let scale = QTFraction::from(QTLaurent::q_pow(-(w.length() as i32)));
        h.add_term(w.inverse(), c * &scale);
    }
    h
}

/// The Geck-Rouquier element `κ_ν = Σ_w κ_{ν,w} q^{-ℓ(w)} T_{w^{-1}}`.
pub fn geck_rouquier(kappa: &MixedMatrix, nu: &Partition) -> HeckeElement {
    let r = kappa.row_index(nu).expect("class of the right size");
    from_rescaled_row(kappa.cols(), &kappa.entries()[r])
}

/// `Σ_ν c_ν κ_ν`.
pub fn combine_geck_rouquier(kappa: &MixedMatrix, coeffs: &[QTFraction]) -> HeckeElement {
    let row: Vec<QTFraction> = (0..kappa.cols().len())
        .map(|j| {
            coeffs
                .iter()
                .enumerate()
                .fold(QTFraction::zero(), |acc, (r, c)| &acc + &(c * kappa.get(r, j)))
        })
        .collect();
    from_rescaled_row(kappa.cols(), &row)
}

/// Coordinates `c_ν` of a central element in the basis `κ_ν`, read off the
/// coefficients of `T_{γ_ν^{-1}}`; `None` if `Σ c_ν κ_ν` does not give `h` back.
pub fn kappa_coordinates(kappa: &MixedMatrix, h: &HeckeElement) -> Option<Vec<QTFraction>> {
    let coeffs: Vec<QTFraction> = kappa
        .rows()
        .iter()
        .map(|nu| {
            let gamma = min_class_rep(nu);
            let scale = QTFraction::from(QTLaurent::q_pow(gamma.length() as i32));
            &h.coeff(&gamma.inverse()) * &scale
        })
        .collect();
    (combine_geck_rouquier(kappa, &coeffs) == *h).then_some(coeffs)
}

/// `1_{P_π} = W_π(q)^{-1} Σ_{w ∈ W_π} T_w`.
pub fn parabolic_idempotent(pi: &Composition) -> HeckeElement {
    let scale = QTFraction::one() / QTFraction::from(poincare(pi));
    let mut h = HeckeElement::zero(pi.size());
    for w in young_subgroup(pi) {
        h.add_term(w, scale.clone());
    }
    h
}

/// The minimal central idempotent
/// `z_λ = χ^λ_G(1) / [n]! · Σ_ν χ^λ_H(T_{γ_ν}) κ_ν`.
pub fn central_idempotent(ctx: &Context, lambda: &Partition) -> Result<HeckeElement, CrateError> {
    let n = ctx.n();
    let chi_g = counts::chi_g(ctx)?;
    let chi_h = counts::chi_h(ctx)?;
    let r = chi_g
        .row_index(lambda)
        .ok_or_else(|| CrateError::Unsupported(format!("{lambda} is not a partition of {n}")))?;
    let degree = chi_g.entry(lambda, &Partition::column(n)).unwrap();
    let scale = degree / &QTFraction::from(q_factorial(n as u32));
    let coeffs: Vec<QTFraction> = chi_h.entries()[r].iter().map(|c| c * &scale).collect();
    Ok(combine_geck_rouquier(ctx.kappa()?, &coeffs))
}

/// `A_μ = Σ_ν A_{μν} κ_ν` with `A_{μν}` the Lusztig variety counts.
pub fn central_a(ctx: &Context, mu: &Partition) -> Result<HeckeElement, CrateError> {
    let a = counts::lusztig(ctx)?;
    let r = a
        .row_index(mu)
        .ok_or_else(|| CrateError::Unsupported(format!("{mu} is not a partition of {}", ctx.n())))?;
    Ok(combine_geck_rouquier(ctx.kappa()?, &a.entries()[r]))
}
