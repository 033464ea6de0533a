//! The symmetric group `S_n` as a Coxeter group.
//!
//! Permutations are stored in one-line notation with values `1..=n`.
//! Products compose as functions, `(uv)(j) = u(v(j))`, so `s1 s2` is
//! `[2, 3, 1]`. Left multiplication by `s_i` swaps the values `i, i+1`;
//! right multiplication swaps the positions.

use std::fmt;

use thiserror::Error;

use crate::exactring::QTLaurent;
use crate::partitions::{partitions_of, Composition, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymGroupError {
    #[error("generator index {0} out of range for S_{1}")]
    IndexOutOfRange(usize, usize),
    #[error("not a permutation: {0:?}")]
    NotAPermutation(Vec<usize>),
    #[error("composition {0:?} does not sum to {1}")]
    BadComposition(Vec<usize>, usize),
    #[error("cannot parse permutation: {0}")]
    Parse(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (1..=n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, SymGroupError> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(SymGroupError::NotAPermutation(images));
            }
            seen[v] = true;
        }
        Ok(Self { images })
    }

    /// The simple reflection `s_i` in `S_n`.
    pub fn simple(n: usize, i: usize) -> Result<Self, SymGroupError> {
        Self::identity(n).apply_simple(i, Side::Right).map(|(w, _)| w)
    }

    /// The product `s_{w[0]} s_{w[1]} ...` in `S_n`.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Self, SymGroupError> {
        let mut w = Self::identity(n);
        for &i in word {
            w = w.apply_simple(i, Side::Right)?.0;
        }
        Ok(w)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `w(j)` for `1 <= j <= n`.
    pub fn image(&self, j: usize) -> usize {
        self.images[j - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Self {
            images: other.images.iter().map(|&v| self.images[v - 1]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.degree()];
        for (k, &v) in self.images.iter().enumerate() {
            images[v - 1] = k + 1;
        }
        Self { images }
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.images;
        (0..w.len())
            .map(|a| (a + 1..w.len()).filter(|&b| w[a] > w[b]).count())
            .sum()
    }

    fn check_index(&self, i: usize) -> Result<(), SymGroupError> {
        if i == 0 || i >= self.degree() {
            return Err(SymGroupError::IndexOutOfRange(i, self.degree()));
        }
        Ok(())
    }

    /// Whether `ℓ(s_i w) < ℓ(w)`.
    pub fn is_left_descent(&self, i: usize) -> bool {
        let pos = |v: usize| self.images.iter().position(|&x| x == v).unwrap();
        pos(i) > pos(i + 1)
    }

    /// Whether `ℓ(w s_i) < ℓ(w)`.
    pub fn is_right_descent(&self, i: usize) -> bool {
        self.images[i - 1] > self.images[i]
    }

    /// `s_i w` or `w s_i` together with the change in length.
    pub fn apply_simple(&self, i: usize, side: Side) -> Result<(Self, i32), SymGroupError> {
        self.check_index(i)?;
        let mut images = self.images.clone();
        let delta = match side {
            Side::Left => {
                let delta = if self.is_left_descent(i) { -1 } else { 1 };
                for v in images.iter_mut() {
                    if *v == i {
                        *v = i + 1;
                    } else if *v == i + 1 {
                        *v = i;
                    }
                }
                delta
            }
            Side::Right => {
                let delta = if self.is_right_descent(i) { -1 } else { 1 };
                images.swap(i - 1, i);
                delta
            }
        };
        Ok((Self { images }, delta))
    }

    /// Cycle lengths, sorted decreasingly.
    pub fn cycle_type(&self) -> Partition {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                k = self.images[k] - 1;
                len += 1;
            }
            lens.push(len);
        }
        Partition::from_unsorted(lens)
    }

    /// Lexicographically least reduced word, peeling the smallest left
    /// descent first.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::with_capacity(self.length());
        while let Some(i) = (1..w.degree()).find(|&i| w.is_left_descent(i)) {
            word.push(i);
            w = w.apply_simple(i, Side::Left).unwrap().0;
        }
        word
    }

    /// Generator form such as `s1 s2`; the identity prints as `1`.
    pub fn word_label(&self) -> String {
        let word = self.reduced_word();
        if word.is_empty() {
            return "1".to_string();
        }
        word.iter()
            .map(|i| format!("s{i}"))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Parse a generator word (`"s1 s2 s1"`, `"s1s2"`, `"1"`) or one-line
    /// notation (`"2 3 1"`) for an element of `S_n`.
    pub fn parse(text: &str, n: usize) -> Result<Self, SymGroupError> {
        let text = text.trim();
        let bad = || SymGroupError::Parse(text.to_string());
        if text.contains('s') {
            let mut word = Vec::new();
            for tok in text.split(|c: char| c == 's' || c.is_whitespace() || c == '*') {
                if tok.is_empty() {
                    continue;
                }
                word.push(tok.parse::<usize>().map_err(|_| bad())?);
            }
            return Self::from_word(n, &word);
        }
        if text == "1" || text.is_empty() {
            return Ok(Self::identity(n));
        }
        let images = text
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>, _>>()?;
        if images.len() != n {
            return Err(bad());
        }
        Self::from_images(images)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.word_label())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images)
    }
}

/// All of `S_n` in lexicographic order of one-line notation.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
        let n = used.len();
        if cur.len() == n {
            out.push(Permutation { images: cur.clone() });
            return;
        }
        for v in 1..=n {
            if !used[v - 1] {
                used[v - 1] = true;
                cur.push(v);
                rec(cur, used, out);
                cur.pop();
                used[v - 1] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// `S_n` in the column order of permutation-indexed matrices: grouped by
/// cycle type in partition order, then by decreasing length, then by
/// one-line notation.
pub fn canonical_permutations(n: usize) -> Vec<Permutation> {
    let classes = partitions_of(n);
    let mut perms: Vec<(usize, usize, Permutation)> = all_permutations(n)
        .into_iter()
        .map(|w| {
            let class = classes.iter().position(|p| *p == w.cycle_type()).unwrap();
            (class, w.length(), w)
        })
        .collect();
    perms.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)).then(a.2.cmp(&b.2)));
    perms.into_iter().map(|(_, _, w)| w).collect()
}

/// The minimal-length class representative `γ_ν`: one cycle
/// `s_a s_{a+1} ... s_{a+ν_j-2}` per part, on consecutive positions.
pub fn min_class_rep(nu: &Partition) -> Permutation {
    let mut word = Vec::new();
    let mut a = 1;
    for &part in nu.parts() {
        word.extend(a..a + part - 1);
        a += part;
    }
    Permutation::from_word(nu.size(), &word).expect("indices in range")
}

fn check_composition(pi: &Composition, n: usize) -> Result<(), SymGroupError> {
    if pi.size() != n {
        return Err(SymGroupError::BadComposition(pi.parts().to_vec(), n));
    }
    Ok(())
}

/// Whether `w` preserves each block of consecutive positions of `π`.
pub fn in_young_subgroup(w: &Permutation, pi: &Composition) -> Result<bool, SymGroupError> {
    check_composition(pi, w.degree())?;
    let mut start = 1;
    for &part in pi.parts() {
        let block = start..start + part;
        if !block.clone().all(|j| block.contains(&w.image(j))) {
            return Ok(false);
        }
        start += part;
    }
    Ok(true)
}

/// All elements of `W_π = S_{π_1} × ... × S_{π_ℓ}`.
pub fn young_subgroup(pi: &Composition) -> Vec<Permutation> {
    let n = pi.size();
    let mut out = vec![Permutation::identity(n)];
    let mut start = 0;
    for &part in pi.parts() {
        let local = all_permutations(part);
        out = out
            .iter()
            .flat_map(|w| {
                local.iter().map(move |u| {
                    let mut images = w.images.clone();
                    for (k, &v) in u.images.iter().enumerate() {
                        images[start + k] = start + v;
                    }
                    Permutation { images }
                })
            })
            .collect();
        start += part;
    }
    out.sort();
    out
}

/// `W_π(q) = Σ_{w ∈ W_π} q^{ℓ(w)}`.
pub fn poincare(pi: &Composition) -> QTLaurent {
    let mut acc = QTLaurent::zero();
    for w in young_subgroup(pi) {
        acc += QTLaurent::q_pow(w.length() as i32);
    }
    acc
}
