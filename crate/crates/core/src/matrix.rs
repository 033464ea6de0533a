//! Exact matrices with labeled rows and columns.

use std::fmt;

use thiserror::Error;

use crate::exactring::{QTFraction, QTLaurent};
use crate::partitions::{Composition, Partition};
use crate::symgroup::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("inner labels do not match")]
    LabelMismatch,
    #[error("matrix is not square")]
    NotSquare,
    #[error("singular system")]
    SingularSystem,
}

/// A dense matrix of fractions whose rows and columns carry labels.
#[derive(Clone, PartialEq)]
pub struct LabeledMatrix<R, C> {
    rows: Vec<R>,
    cols: Vec<C>,
    entries: Vec<Vec<QTFraction>>,
}

/// Rows and columns indexed by partitions of `n` in canonical order.
pub type PartitionMatrix = LabeledMatrix<Partition, Partition>;
/// Rows indexed by partitions, columns by permutations.
pub type MixedMatrix = LabeledMatrix<Partition, Permutation>;

impl<R: Clone + PartialEq, C: Clone + PartialEq> LabeledMatrix<R, C> {
    pub fn zeros(rows: Vec<R>, cols: Vec<C>) -> Self {
        let entries = vec![vec![QTFraction::zero(); cols.len()]; rows.len()];
        Self { rows, cols, entries }
    }

    pub fn from_fn(rows: Vec<R>, cols: Vec<C>, mut f: impl FnMut(&R, &C) -> QTFraction) -> Self {
        let entries = rows
            .iter()
            .map(|r| cols.iter().map(|c| f(r, c)).collect())
            .collect();
        Self { rows, cols, entries }
    }

    /// Panics if the shape does not match the labels.
    pub fn from_entries(rows: Vec<R>, cols: Vec<C>, entries: Vec<Vec<QTFraction>>) -> Self {
        assert_eq!(entries.len(), rows.len());
        assert!(entries.iter().all(|r| r.len() == cols.len()));
        Self { rows, cols, entries }
    }

    pub fn rows(&self) -> &[R] {
        &self.rows
    }

    pub fn cols(&self) -> &[C] {
        &self.cols
    }

    pub fn entries(&self) -> &[Vec<QTFraction>] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &QTFraction {
        &self.entries[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: QTFraction) {
        self.entries[i][j] = v;
    }

    pub fn row_index(&self, r: &R) -> Option<usize> {
        self.rows.iter().position(|x| x == r)
    }

    pub fn col_index(&self, c: &C) -> Option<usize> {
        self.cols.iter().position(|x| x == c)
    }

    /// Entry by labels.
    pub fn entry(&self, r: &R, c: &C) -> Option<&QTFraction> {
        Some(&self.entries[self.row_index(r)?][self.col_index(c)?])
    }

    pub fn transpose(&self) -> LabeledMatrix<C, R> {
        LabeledMatrix {
            rows: self.cols.clone(),
            cols: self.rows.clone(),
            entries: (0..self.cols.len())
                .map(|j| (0..self.rows.len()).map(|i| self.entries[i][j].clone()).collect())
                .collect(),
        }
    }

    pub fn map(&self, mut f: impl FnMut(&QTFraction) -> QTFraction) -> Self {
        Self {
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            entries: self
                .entries
                .iter()
                .map(|r| r.iter().map(&mut f).collect())
                .collect(),
        }
    }

    pub fn relabel<R2, C2>(&self, rows: Vec<R2>, cols: Vec<C2>) -> LabeledMatrix<R2, C2> {
        assert_eq!(rows.len(), self.rows.len());
        assert_eq!(cols.len(), self.cols.len());
        LabeledMatrix {
            rows,
            cols,
            entries: self.entries.clone(),
        }
    }

    pub fn try_mul<K: Clone + PartialEq>(
        &self,
        rhs: &LabeledMatrix<C, K>,
    ) -> Result<LabeledMatrix<R, K>, MatrixError> {
        if self.cols != rhs.rows {
            return Err(MatrixError::LabelMismatch);
        }
        let mut out = LabeledMatrix::zeros(self.rows.clone(), rhs.cols.clone());
        for i in 0..self.rows.len() {
            for k in 0..self.cols.len() {
                let a = &self.entries[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols.len() {
                    let b = &rhs.entries[k][j];
                    if b.is_zero() {
                        continue;
                    }
                    out.entries[i][j] = &out.entries[i][j] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    /// Panics on mismatched inner labels; see [`LabeledMatrix::try_mul`].
    pub fn mul<K: Clone + PartialEq>(&self, rhs: &LabeledMatrix<C, K>) -> LabeledMatrix<R, K> {
        self.try_mul(rhs).expect("inner labels must agree")
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(|e| e.is_zero())
    }

    /// Every entry is a Laurent polynomial.
    pub fn is_laurent(&self) -> bool {
        self.entries.iter().flatten().all(|e| e.as_laurent().is_some())
    }

    /// Entries as Laurent polynomials, if they all are.
    pub fn laurent_entries(&self) -> Option<Vec<Vec<QTLaurent>>> {
        self.entries
            .iter()
            .map(|r| r.iter().map(|e| e.as_laurent()).collect())
            .collect()
    }

    /// Coordinates of the entries where `self` and `other` differ.
    pub fn differences(&self, other: &Self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.rows.len().min(other.rows.len()) {
            for j in 0..self.cols.len().min(other.cols.len()) {
                if self.entries[i][j] != other.entries[i][j] {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

impl<R: Clone + PartialEq> LabeledMatrix<R, R> {
    pub fn identity(labels: Vec<R>) -> Self {
        Self::diagonal(labels.clone(), vec![QTFraction::one(); labels.len()])
    }

    pub fn diagonal(labels: Vec<R>, diag: Vec<QTFraction>) -> Self {
        assert_eq!(labels.len(), diag.len());
        let mut m = Self::zeros(labels.clone(), labels);
        for (i, d) in diag.into_iter().enumerate() {
            m.entries[i][i] = d;
        }
        m
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().enumerate().all(|(i, r)| {
            r.iter()
                .enumerate()
                .all(|(j, e)| if i == j { e.is_one() } else { e.is_zero() })
        })
    }

    /// Inverse by Gauss-Jordan elimination over `Q(q, t)`.
    pub fn inverse(&self) -> Result<Self, MatrixError> {
        let n = self.rows.len();
        if self.cols.len() != n {
            return Err(MatrixError::NotSquare);
        }
        let mut a = self.entries.clone();
        let mut inv = Self::identity(self.rows.clone()).entries;
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[r][col].is_zero())
                .ok_or(MatrixError::SingularSystem)?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p = a[col][col].recip().map_err(|_| MatrixError::SingularSystem)?;
            if !p.is_one() {
                for j in 0..n {
                    a[col][j] = &a[col][j] * &p;
                    inv[col][j] = &inv[col][j] * &p;
                }
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                for j in 0..n {
                    if !a[col][j].is_zero() {
                        a[r][j] = &a[r][j] - &(&f * &a[col][j]);
                    }
                    if !inv[col][j].is_zero() {
                        inv[r][j] = &inv[r][j] - &(&f * &inv[col][j]);
                    }
                }
            }
        }
        Ok(Self {
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            entries: inv,
        })
    }
}

/// Text label of a row or column index.
pub trait Label {
    fn label(&self) -> String;
}

impl Label for Partition {
    fn label(&self) -> String {
        self.to_string()
    }
}

impl Label for Composition {
    fn label(&self) -> String {
        self.to_string()
    }
}

impl Label for Permutation {
    fn label(&self) -> String {
        self.word_label()
    }
}

impl Label for usize {
    fn label(&self) -> String {
        self.to_string()
    }
}

impl Label for String {
    fn label(&self) -> String {
        self.clone()
    }
}

impl<R: Label, C: Label> LabeledMatrix<R, C> {
    pub fn row_labels(&self) -> Vec<String> {
        self.rows.iter().map(Label::label).collect()
    }

    pub fn col_labels(&self) -> Vec<String> {
        self.cols.iter().map(Label::label).collect()
    }

    /// Entries printed with the exact-ring grammar.
    pub fn entry_strings(&self) -> Vec<Vec<String>> {
        self.entries
            .iter()
            .map(|r| r.iter().map(|e| e.to_string()).collect())
            .collect()
    }
}

impl<R: Label, C: Label> fmt::Debug for LabeledMatrix<R, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}]", self.col_labels().join(" | "))?;
        for (label, row) in self.row_labels().iter().zip(self.entry_strings()) {
            writeln!(f, "{label}: {}", row.join(" | "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactring::parse_fraction;

    fn m(rows: &[&[&str]]) -> LabeledMatrix<usize, usize> {
        let entries: Vec<Vec<QTFraction>> = rows
            .iter()
            .map(|r| r.iter().map(|s| parse_fraction(s).unwrap()).collect())
            .collect();
        let (nr, nc) = (entries.len(), entries[0].len());
        LabeledMatrix::from_entries((0..nr).collect(), (0..nc).collect(), entries)
    }

    #[test]
    fn inverse_round_trip() {
        let a = m(&[&["1", "t"], &["q", "1"]]);
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_identity());
        assert!(inv.mul(&a).is_identity());
        assert_eq!(*inv.get(0, 0), parse_fraction("1/(1 - q*t)").unwrap());
    }

    #[test]
    fn singular_is_reported() {
        let a = m(&[&["1", "q"], &["1", "q"]]);
        assert_eq!(a.inverse(), Err(MatrixError::SingularSystem));
    }

    #[test]
    fn pivoting_and_shapes() {
        let a = m(&[&["0", "1"], &["1", "0"]]);
        assert_eq!(a.inverse().unwrap(), a);
        let b = m(&[&["1", "2", "3"]]);
        assert_eq!(b.inverse(), Err(MatrixError::NotSquare));
        assert_eq!(b.transpose().mul(&b).rows().len(), 3);
        assert!(b.try_mul(&b).is_err());
    }
}
