//! Smith decomposition of a sublattice and the structure of its quotient.

use super::matrix::IntMatrix;
use super::module::LatticeModule;
use crate::error::{Error, Result};

/// `basis * col = U * diag(d)` with `col` unimodular and `col_inv` its inverse.
#[derive(Clone, Debug)]
struct SmithData {
    diag: Vec<i64>,
    col: IntMatrix,
    col_inv: IntMatrix,
}

fn smith(basis: &IntMatrix) -> Result<SmithData> {
    let r = basis.rows();
    let n = basis.cols();
    let mut w = basis.clone();
    let mut col = IntMatrix::identity(n);
    let mut col_inv = IntMatrix::identity(n);

    // col_j -= q * col_t, mirrored on the inverse as row_t += q * row_j
    let col_op = |w: &mut IntMatrix,
                  col: &mut IntMatrix,
                  col_inv: &mut IntMatrix,
                  dst: usize,
                  src: usize,
                  q: i64|
     -> Result<()> {
        w.col_sub(dst, src, q)?;
        col.col_sub(dst, src, q)?;
        col_inv.row_sub(src, dst, q.checked_neg().ok_or(Error::Overflow("smith"))?)
    };

    for t in 0..r {
        loop {
            let mut best: Option<(usize, usize, i64)> = None;
            for i in t..r {
                for j in t..n {
                    let v = w.get(i, j);
                    if v != 0 {
                        let a = v.checked_abs().ok_or(Error::Overflow("smith pivot"))?;
                        if best.map_or(true, |(_, _, b)| a < b) {
                            best = Some((i, j, a));
                        }
                    }
                }
            }
            let Some((bi, bj, _)) = best else {
                // rows of a Hermite basis are independent
                return Err(Error::DimensionMismatch { expected: r, found: t });
            };
            w.swap_rows(t, bi);
            if bj != t {
                w.swap_cols(t, bj);
                col.swap_cols(t, bj);
                col_inv.swap_rows(t, bj);
            }
            let p = w.get(t, t);
            let mut clean = true;
            for i in t + 1..r {
                let v = w.get(i, t);
                if v != 0 {
                    w.row_sub(i, t, v / p)?;
                    clean &= w.get(i, t) == 0;
                }
            }
            for j in t + 1..n {
                let v = w.get(t, j);
                if v != 0 {
                    col_op(&mut w, &mut col, &mut col_inv, j, t, v / p)?;
                    clean &= w.get(t, j) == 0;
                }
            }
            if !clean {
                continue;
            }
            let bad = (t + 1..r).find(|&i| (t + 1..n).any(|j| w.get(i, j) % p != 0));
            match bad {
                Some(i) => w.row_sub(t, i, -1)?,
                None => break,
            }
        }
        if w.get(t, t) < 0 {
            w.negate_row(t)?;
        }
    }
    Ok(SmithData { diag: (0..r).map(|i| w.get(i, i)).collect(), col, col_inv })
}

/// The quotient `Z^n / N`, split into torsion and free parts.
///
/// Coordinates: `x = m * projection`. The first `rank(N)` coordinates are
/// taken modulo the diagonal entries of the Smith form (only those with
/// `d >= 2` carry torsion); the remaining `free_rank` coordinates describe
/// the free part `Z^n / sat(N)`. Rows of `lift_basis` are the corresponding
/// representatives in `Z^n`.
#[derive(Clone, Debug)]
pub struct QuotientStructure {
    ambient_rank: usize,
    module_rank: usize,
    diag: Vec<i64>,
    projection: IntMatrix,
    lift_basis: IntMatrix,
}

/// Action of a stabilizing element on the two parts of the quotient.
#[derive(Clone, Debug)]
pub struct QuotientAction {
    /// Action on `sat(N)` in the lifted torsion coordinates (row convention).
    pub torsion: IntMatrix,
    /// Action on the free part `Z^n / sat(N)` (row convention).
    pub free: IntMatrix,
}

impl QuotientStructure {
    pub fn free_rank(&self) -> usize {
        self.ambient_rank - self.module_rank
    }

    pub fn invariant_factors(&self) -> Vec<i64> {
        self.diag.iter().copied().filter(|&d| d >= 2).collect()
    }

    pub fn torsion_order(&self) -> u64 {
        self.diag.iter().map(|&d| d as u64).product()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.diag.iter().all(|&d| d == 1)
    }

    pub fn projection(&self) -> &IntMatrix {
        &self.projection
    }

    pub fn lift_basis(&self) -> &IntMatrix {
        &self.lift_basis
    }

    fn torsion_indices(&self) -> Vec<usize> {
        (0..self.module_rank).filter(|&i| self.diag[i] >= 2).collect()
    }

    /// Torsion coordinates (one per invariant factor, reduced) and free
    /// coordinates of `m`.
    pub fn project(&self, m: &[i64]) -> Result<(Vec<i64>, Vec<i64>)> {
        let x = self.projection.transpose().apply(m)?;
        let torsion = self.torsion_indices().iter().map(|&i| x[i].rem_euclid(self.diag[i])).collect();
        Ok((torsion, x[self.module_rank..].to_vec()))
    }

    /// Representative in `Z^n` of the given torsion and free coordinates.
    pub fn lift(&self, torsion: &[i64], free: &[i64]) -> Result<Vec<i64>> {
        let tidx = self.torsion_indices();
        if torsion.len() != tidx.len() {
            return Err(Error::DimensionMismatch { expected: tidx.len(), found: torsion.len() });
        }
        if free.len() != self.free_rank() {
            return Err(Error::DimensionMismatch { expected: self.free_rank(), found: free.len() });
        }
        let mut x = vec![0i64; self.ambient_rank];
        for (&i, &t) in tidx.iter().zip(torsion) {
            x[i] = t;
        }
        x[self.module_rank..].copy_from_slice(free);
        self.lift_basis.transpose().apply(&x)
    }

    /// Basis of the saturation `(N (x) Q) ∩ Z^n`.
    pub fn saturation(&self) -> Result<LatticeModule> {
        let rows: Vec<&[i64]> = (0..self.module_rank).map(|i| self.lift_basis.row(i)).collect();
        LatticeModule::from_generators(self.ambient_rank, &rows)
    }

    /// Action of `g` (column convention on `Z^n`) in quotient coordinates.
    pub fn action(&self, g: &IntMatrix) -> Result<QuotientAction> {
        // x -> x * (lift * g^T * projection)
        let a = self.lift_basis.mul(&g.transpose())?.mul(&self.projection)?;
        let r = self.module_rank;
        let n = self.ambient_rank;
        for i in 0..r {
            if (r..n).any(|j| a.get(i, j) != 0) {
                return Err(Error::NotStable);
            }
        }
        let t: Vec<usize> = (0..r).collect();
        let f: Vec<usize> = (r..n).collect();
        Ok(QuotientAction { torsion: a.submatrix(&t, &t), free: a.submatrix(&f, &f) })
    }
}

pub fn smith_quotient(module: &LatticeModule) -> Result<QuotientStructure> {
    let SmithData { diag, col, col_inv } = smith(module.basis())?;
    Ok(QuotientStructure {
        ambient_rank: module.ambient_rank(),
        module_rank: module.rank(),
        diag,
        projection: col,
        lift_basis: col_inv,
    })
}

pub fn saturate(module: &LatticeModule) -> Result<LatticeModule> {
    smith_quotient(module)?.saturation()
}

pub fn is_saturated(module: &LatticeModule) -> Result<bool> {
    Ok(smith_quotient(module)?.is_torsion_free())
}
