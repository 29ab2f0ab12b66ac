use std::fmt;

use serde::{Deserialize, Serialize};

use super::hermite::{hermite_basis, pivot_columns, solve_in_echelon};
use super::matrix::IntMatrix;
use crate::error::{Error, Result};

/// A subgroup of `Z^n`, stored by its canonical Hermite basis.
///
/// Equality and hashing go through the basis, so two modules compare equal
/// exactly when they are the same subgroup.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticeModule {
    ambient_rank: usize,
    basis: IntMatrix,
}

impl LatticeModule {
    pub fn zero(ambient_rank: usize) -> Self {
        LatticeModule { ambient_rank, basis: IntMatrix::zeros(0, ambient_rank) }
    }

    pub fn full(ambient_rank: usize) -> Self {
        LatticeModule { ambient_rank, basis: IntMatrix::identity(ambient_rank) }
    }

    /// Canonical module spanned by the rows of `rows`.
    pub fn canonicalize(rows: &IntMatrix, ambient_rank: usize) -> Result<Self> {
        if rows.cols() != ambient_rank {
            return Err(Error::DimensionMismatch { expected: ambient_rank, found: rows.cols() });
        }
        Ok(LatticeModule { ambient_rank, basis: hermite_basis(rows)? })
    }

    pub fn from_generators<R: AsRef<[i64]>>(ambient_rank: usize, gens: &[R]) -> Result<Self> {
        Self::canonicalize(&IntMatrix::from_rows(ambient_rank, gens)?, ambient_rank)
    }

    /// Span of `self` together with extra generators.
    pub fn join<R: AsRef<[i64]>>(&self, extra: &[R]) -> Result<Self> {
        let n = self.ambient_rank;
        let mut data = Vec::with_capacity((self.rank() + extra.len()) * n);
        data.extend_from_slice(self.basis.as_flat());
        for v in extra {
            let v = v.as_ref();
            if v.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: v.len() });
            }
            data.extend_from_slice(v);
        }
        let rows = IntMatrix::from_flat(self.rank() + extra.len(), n, data)?;
        Ok(LatticeModule { ambient_rank: n, basis: hermite_basis(&rows)? })
    }

    #[inline]
    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    #[inline]
    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    /// Canonical key used for deduplication.
    #[inline]
    pub fn key(&self) -> &[i64] {
        self.basis.as_flat()
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        if v.len() != self.ambient_rank {
            return false;
        }
        let mut rest = v.to_vec();
        let mut cursor = 0usize;
        for row in self.basis.row_iter() {
            let pc = row.iter().position(|&x| x != 0).expect("zero row in basis");
            if rest[cursor..pc].iter().any(|&x| x != 0) {
                return false;
            }
            let p = row[pc];
            if rest[pc] % p != 0 {
                return false;
            }
            let q = rest[pc] / p;
            if q != 0 {
                for (r, &b) in rest.iter_mut().zip(row) {
                    // overflow here means v is far outside anything we build
                    match q.checked_mul(b).and_then(|m| r.checked_sub(m)) {
                        Some(x) => *r = x,
                        None => return false,
                    }
                }
            }
            cursor = pc + 1;
        }
        rest.iter().all(|&x| x == 0)
    }

    pub fn contains_module(&self, other: &LatticeModule) -> bool {
        other.basis.row_iter().all(|r| self.contains(r))
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the module.
    pub fn coordinates(&self, v: &[i64]) -> Result<Option<Vec<i64>>> {
        if v.len() != self.ambient_rank {
            return Err(Error::DimensionMismatch { expected: self.ambient_rank, found: v.len() });
        }
        let pivots = pivot_columns(&self.basis);
        match solve_in_echelon(&self.basis, &pivots, v) {
            Err(Error::NoIntegerSolution) => Ok(None),
            other => other,
        }
    }

    /// Whether `g` (acting on column vectors) maps the module into itself.
    pub fn is_stable_under(&self, g: &IntMatrix) -> Result<bool> {
        for row in self.basis.row_iter() {
            if !self.contains(&g.apply(row)?) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Image of the module under `g` acting on column vectors.
    pub fn image(&self, g: &IntMatrix) -> Result<LatticeModule> {
        let imgs = self.basis.row_iter().map(|r| g.apply(r)).collect::<Result<Vec<_>>>()?;
        LatticeModule::from_generators(self.ambient_rank, &imgs)
    }
}

impl fmt::Debug for LatticeModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LatticeModule(n={}, {:?})", self.ambient_rank, self.basis)
    }
}
