//! Per-degree cache of every table the crate computes.
//!
//! A [`Context`] owns the symmetric-function data for one `n` and fills in
//! the Hecke and counting tables on first request. Nothing is global; two
//! contexts for the same `n` share nothing.

use std::sync::OnceLock;

use crate::matrix::{LabeledMatrix, MixedMatrix, PartitionMatrix};
use crate::partitions::{partitions_of, Composition, Partition};
use crate::symfunc::SymContext;
use crate::symgroup::Permutation;
use crate::Error;

pub(crate) type Cached<T> = OnceLock<Result<T, Error>>;

pub struct Context {
    n: usize,
    sym: SymContext,
    pub(crate) kappa: Cached<MixedMatrix>,
    pub(crate) chi_g: Cached<PartitionMatrix>,
    pub(crate) chi_h: Cached<PartitionMatrix>,
    pub(crate) lusztig: Cached<PartitionMatrix>,
    pub(crate) lusztig_w: Cached<MixedMatrix>,
    pub(crate) springer: Cached<LabeledMatrix<Partition, Composition>>,
    pub(crate) mkcd: Cached<PartitionMatrix>,
    pub(crate) affine: Cached<PartitionMatrix>,
}

impl Context {
    pub fn new(n: usize) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::Unsupported("n must be positive".into()));
        }
        Ok(Self {
            n,
            sym: SymContext::new(n)?,
            kappa: OnceLock::new(),
            chi_g: OnceLock::new(),
            chi_h: OnceLock::new(),
            lusztig: OnceLock::new(),
            lusztig_w: OnceLock::new(),
            springer: OnceLock::new(),
            mkcd: OnceLock::new(),
            affine: OnceLock::new(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sym(&self) -> &SymContext {
        &self.sym
    }

    pub fn partitions(&self) -> Vec<Partition> {
        partitions_of(self.n)
    }

    /// The expansion matrix `κ`.
    pub fn kappa(&self) -> Result<&MixedMatrix, Error> {
        get(&self.kappa, || Ok(crate::hecke::expansion_matrix(self.n)?))
    }

    /// Column labels of permutation-indexed tables.
    pub fn permutations(&self) -> Result<&[Permutation], Error> {
        Ok(self.kappa()?.cols())
    }
}

pub(crate) fn get<T>(cell: &Cached<T>, f: impl FnOnce() -> Result<T, Error>) -> Result<&T, Error> {
    cell.get_or_init(f).as_ref().map_err(Clone::clone)
}
