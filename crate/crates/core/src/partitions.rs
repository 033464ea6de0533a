//! Integer partitions and compositions, diagram statistics, dominance and
//! Kostka numbers.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("cell ({0}, {1}) lies outside the diagram")]
    CellOutOfRange(usize, usize),
    #[error("partitions of different sizes: {0} and {1}")]
    SizeMismatch(usize, usize),
    #[error("invalid partition or composition: {0}")]
    Invalid(String),
}

/// A partition: weakly decreasing positive parts.
///
/// The derived order is ascending lexicographic on the parts; the canonical
/// matrix order used throughout the crate is the reverse of it (see
/// [`partitions_of`]).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

/// An ordered sequence of positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::Invalid(format!("{parts:?}")));
        }
        Ok(Self(parts))
    }

    /// Sorts the parts; zero parts are dropped.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self(parts)
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        Self(vec![n])
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Self(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of parts, `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `n(λ) = Σ (i-1) λ_i`.
    pub fn n_stat(&self) -> usize {
        self.0.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    pub fn conjugate(&self) -> Self {
        let width = self.0.first().copied().unwrap_or(0);
        Self(
            (0..width)
                .map(|j| self.0.iter().filter(|&&p| p > j).count())
                .collect(),
        )
    }

    /// Dominance order on partitions of equal size (false if sizes differ).
    pub fn dominates(&self, other: &Self) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let (mut a, mut b) = (0usize, 0usize);
        for i in 0..self.len().max(other.len()) {
            a += self.0.get(i).copied().unwrap_or(0);
            b += other.0.get(i).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }

    pub fn contains_cell(&self, (i, j): (usize, usize)) -> bool {
        self.0.get(i).is_some_and(|&p| j < p)
    }

    /// Cells `(row, column)`, zero-based, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (0..p).map(move |j| (i, j)))
    }

    /// Cells strictly to the right of `cell` in its row.
    pub fn arm(&self, cell: (usize, usize)) -> Result<usize, PartitionError> {
        if !self.contains_cell(cell) {
            return Err(PartitionError::CellOutOfRange(cell.0, cell.1));
        }
        Ok(self.0[cell.0] - cell.1 - 1)
    }

    /// Cells strictly below `cell` in its column.
    pub fn leg(&self, cell: (usize, usize)) -> Result<usize, PartitionError> {
        if !self.contains_cell(cell) {
            return Err(PartitionError::CellOutOfRange(cell.0, cell.1));
        }
        Ok(self.0.iter().skip(cell.0 + 1).filter(|&&p| p > cell.1).count())
    }

    /// Multiplicity `m_i` of each part size `i`, as `(i, m_i)` pairs.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `z_λ = Π i^{m_i} m_i!`, the centralizer order of a permutation of
    /// cycle type `λ`.
    pub fn z_coefficient(&self) -> u64 {
        self.multiplicities()
            .into_iter()
            .map(|(i, m)| (i as u64).pow(m as u32) * (1..=m as u64).product::<u64>())
            .product()
    }

    pub fn as_composition(&self) -> Composition {
        Composition(self.0.clone())
    }

    /// Compact label such as `(21)` or `(1^3)`.
    pub fn compact_label(&self) -> String {
        let mut s = String::from("(");
        for (v, m) in self.multiplicities() {
            if m > 1 {
                s.push_str(&format!("{v}^{m}"));
            } else {
                s.push_str(&v.to_string());
            }
        }
        s.push(')');
        s
    }
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(PartitionError::Invalid(format!("{parts:?}")));
        }
        Ok(Self(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn sorted(&self) -> Partition {
        Partition::from_unsorted(self.0.clone())
    }
}

impl From<Partition> for Composition {
    fn from(p: Partition) -> Self {
        Composition(p.0)
    }
}

/// All partitions of `n` in descending lexicographic order.
///
/// This order is the row/column order of every partition-indexed matrix.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All compositions of `n`, in reverse lexicographic order.
pub fn compositions_of(n: usize) -> Vec<Composition> {
    fn rec(rem: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if rem == 0 {
            out.push(Composition(cur.clone()));
            return;
        }
        for p in (1..=rem).rev() {
            cur.push(p);
            rec(rem - p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, &mut Vec::new(), &mut out);
    }
    out
}

/// Number of semistandard tableaux of shape `shape` and content `content`.
///
/// Entries are peeled off largest first: the cells holding the largest
/// entry form a horizontal strip, which is removed recursively.
pub fn kostka(shape: &Partition, content: &Partition) -> Result<u64, PartitionError> {
    kostka_content(shape, content.parts())
}

/// Kostka number for an arbitrary (not necessarily sorted) content vector.
pub fn kostka_content(shape: &Partition, content: &[usize]) -> Result<u64, PartitionError> {
    let total: usize = content.iter().sum();
    if shape.size() != total {
        return Err(PartitionError::SizeMismatch(shape.size(), total));
    }
    let mut memo = HashMap::new();
    Ok(count_strips(shape.parts().to_vec(), content, &mut memo))
}

fn count_strips(
    shape: Vec<usize>,
    content: &[usize],
    memo: &mut HashMap<(Vec<usize>, usize), u64>,
) -> u64 {
    let Some((&last, rest)) = content.split_last() else {
        return u64::from(shape.is_empty());
    };
    if shape.len() > content.len() {
        return 0;
    }
    let key = (shape.clone(), content.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    // Choose how many cells to remove from each row: row i may lose at most
    // shape[i] - shape[i+1] cells (horizontal strip).
    let mut total = 0;
    let mut removal = vec![0usize; shape.len()];
    fn go(
        i: usize,
        left: usize,
        shape: &[usize],
        removal: &mut Vec<usize>,
        rest: &[usize],
        memo: &mut HashMap<(Vec<usize>, usize), u64>,
        total: &mut u64,
    ) {
        if i == shape.len() {
            if left == 0 {
                let mut inner: Vec<usize> =
                    shape.iter().zip(removal.iter()).map(|(s, r)| s - r).collect();
                while inner.last() == Some(&0) {
                    inner.pop();
                }
                *total += count_strips(inner, rest, memo);
            }
            return;
        }
        let below = shape.get(i + 1).copied().unwrap_or(0);
        let cap = (shape[i] - below).min(left);
        for r in 0..=cap {
            removal[i] = r;
            go(i + 1, left - r, shape, removal, rest, memo, total);
        }
        removal[i] = 0;
    }
    go(0, last, &shape, &mut removal, rest, memo, &mut total);
    memo.insert(key, total);
    total
}

fn parse_parts(s: &str) -> Result<Vec<usize>, PartitionError> {
    let bad = || PartitionError::Invalid(s.to_string());
    let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
    let mut parts = Vec::new();
    for tok in trimmed.split(|c: char| c == ',' || c.is_whitespace()) {
        if tok.is_empty() {
            continue;
        }
        if let Some((v, m)) = tok.split_once('^') {
            let v: usize = v.parse().map_err(|_| bad())?;
            let m: usize = m.parse().map_err(|_| bad())?;
            parts.extend(std::iter::repeat_n(v, m));
        } else {
            parts.push(tok.parse().map_err(|_| bad())?);
        }
    }
    if parts.is_empty() {
        return Err(bad());
    }
    Ok(parts)
}

impl FromStr for Partition {
    type Err = PartitionError;

    /// Accepts `"2,1"`, `"1^3"`, `"2,1^2"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Partition::new(parse_parts(s)?)
    }
}

impl FromStr for Composition {
    type Err = PartitionError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Composition::new(parse_parts(s)?)
    }
}

fn join(parts: &[usize]) -> String {
    parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", join(&self.0))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.0))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", join(&self.0))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn enumeration_order() {
        assert_eq!(partitions_of(3), vec![p("3"), p("2,1"), p("1^3")]);
        assert_eq!(partitions_of(1), vec![p("1")]);
        assert_eq!(partitions_of(5).len(), 7);
        let counts: Vec<usize> = (1..=8).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(compositions_of(4).len(), 8);
    }

    #[test]
    fn statistics() {
        assert_eq!(p("3").n_stat(), 0);
        assert_eq!(p("1^3").n_stat(), 3);
        assert_eq!(p("2,1").n_stat(), 1);
        assert_eq!(p("3").conjugate(), p("1^3"));
        assert_eq!(p("4,2,1").conjugate(), p("3,2,1,1"));
        assert!(p("3").dominates(&p("2,1")) && p("2,1").dominates(&p("1^3")));
        assert!(!p("3,1,1,1").dominates(&p("2,2,2")) && !p("2,2,2").dominates(&p("3,1,1,1")));
        assert_eq!(p("2,1,1").z_coefficient(), 4);
        assert_eq!(p("2,1,1").compact_label(), "(21^2)");
    }

    #[test]
    fn arm_and_leg() {
        let l = p("2");
        assert_eq!((l.arm((0, 0)).unwrap(), l.leg((0, 0)).unwrap()), (1, 0));
        assert_eq!((l.arm((0, 1)).unwrap(), l.leg((0, 1)).unwrap()), (0, 0));
        let m = p("3,1");
        assert_eq!(m.leg((0, 0)).unwrap(), 1);
        assert_eq!(m.arm((1, 1)), Err(PartitionError::CellOutOfRange(1, 1)));
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka(&p("2,1"), &p("1^3")).unwrap(), 2);
        assert_eq!(kostka(&p("1^3"), &p("3")).unwrap(), 0);
        for l in partitions_of(5) {
            assert_eq!(kostka(&l, &l).unwrap(), 1);
        }
        assert_eq!(kostka(&p("3,2"), &p("2,2,1")).unwrap(), 2);
        assert_eq!(kostka(&p("2,1"), &p("2")), Err(PartitionError::SizeMismatch(3, 2)));
    }

    #[test]
    fn kostka_dimensions_match_hook_length() {
        // K_{λ,1^n} is the number of standard tableaux.
        for l in partitions_of(6) {
            let n = l.size() as u64;
            let hooks: u64 = l
                .cells()
                .map(|c| (l.arm(c).unwrap() + l.leg(c).unwrap() + 1) as u64)
                .product();
            let fact: u64 = (1..=n).product();
            assert_eq!(kostka(&l, &Partition::column(6)).unwrap(), fact / hooks);
        }
    }

    #[test]
    fn kostka_unitriangular_in_dominance() {
        for n in 1..=6 {
            for l in partitions_of(n) {
                for m in partitions_of(n) {
                    let k = kostka(&l, &m).unwrap();
                    if k != 0 {
                        assert!(l.dominates(&m), "{l:?} {m:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn conjugate_statistics() {
        let binom2 = |x: usize| x * x.saturating_sub(1) / 2;
        for n in 1..=8 {
            for l in partitions_of(n) {
                assert_eq!(l.conjugate().conjugate(), l);
                assert_eq!(l.conjugate().n_stat(), l.parts().iter().map(|&x| binom2(x)).sum::<usize>());
            }
        }
    }

    #[test]
    fn dominance_is_a_partial_order() {
        for n in 1..=6 {
            let ps = partitions_of(n);
            for a in &ps {
                assert!(a.dominates(a));
                for b in &ps {
                    if a != b {
                        assert!(!(a.dominates(b) && b.dominates(a)));
                    }
                    for c in &ps {
                        if a.dominates(b) && b.dominates(c) {
                            assert!(a.dominates(c));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn parsing() {
        assert_eq!(p("2,1^2"), Partition::new(vec![2, 1, 1]).unwrap());
        assert!("1,2".parse::<Partition>().is_err());
        assert_eq!("1,2".parse::<Composition>().unwrap().sorted(), p("2,1"));
        assert!("".parse::<Partition>().is_err());
        assert_eq!(p("2,1").to_string(), "2,1");
    }
}
