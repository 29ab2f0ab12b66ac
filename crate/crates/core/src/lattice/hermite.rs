//! Row-style Hermite normal form over the integers.
//!
//! The canonical form has positive pivots in strictly increasing columns,
//! zeros below each pivot, and entries above each pivot reduced into
//! `[0, pivot)`. Two generating sets span the same lattice iff their
//! canonical forms coincide.

use super::matrix::IntMatrix;
use crate::error::{Error, Result};

/// Reduces `m` in place. Only the first `pivot_cols` columns are used for
/// pivoting; the remaining columns ride along, which lets callers recover
/// the unimodular transform by appending an identity block.
///
/// Returns the pivot columns. Rows `pivots.len()..` are zero on the pivot
/// columns afterwards.
pub(crate) fn reduce_in_place(m: &mut IntMatrix, pivot_cols: usize) -> Result<Vec<usize>> {
    let nrows = m.rows();
    let mut pivots = Vec::new();
    let mut top = 0usize;
    for col in 0..pivot_cols {
        if top == nrows {
            break;
        }
        loop {
            let mut best: Option<(usize, i64)> = None;
            for r in top..nrows {
                let v = m.get(r, col);
                if v != 0 {
                    let a = v.checked_abs().ok_or(Error::Overflow("hermite pivot"))?;
                    if best.map_or(true, |(_, b)| a < b) {
                        best = Some((r, a));
                    }
                }
            }
            let Some((br, _)) = best else { break };
            m.swap_rows(top, br);
            let p = m.get(top, col);
            let mut clean = true;
            for r in top + 1..nrows {
                let v = m.get(r, col);
                if v != 0 {
                    m.row_sub(r, top, v / p)?;
                    if m.get(r, col) != 0 {
                        clean = false;
                    }
                }
            }
            if clean {
                break;
            }
        }
        if m.get(top, col) == 0 {
            continue;
        }
        if m.get(top, col) < 0 {
            m.negate_row(top)?;
        }
        let p = m.get(top, col);
        for r in 0..top {
            let q = m.get(r, col).div_euclid(p);
            m.row_sub(r, top, q)?;
        }
        pivots.push(col);
        top += 1;
    }
    Ok(pivots)
}

/// Canonical Hermite basis of the row span of `rows`.
pub fn hermite_basis(rows: &IntMatrix) -> Result<IntMatrix> {
    let mut m = rows.clone();
    let n = m.cols();
    let pivots = reduce_in_place(&mut m, n)?;
    let data = m.as_flat()[..pivots.len() * n].to_vec();
    IntMatrix::from_flat(pivots.len(), n, data)
}

/// Basis of the left integer kernel `{x : x * a = 0}`, in Hermite form.
pub fn left_kernel(a: &IntMatrix) -> Result<IntMatrix> {
    let (r, c) = (a.rows(), a.cols());
    let mut aug = IntMatrix::zeros(r, c + r);
    for i in 0..r {
        for j in 0..c {
            aug.set(i, j, a.get(i, j));
        }
        aug.set(i, c + i, 1);
    }
    let pivots = reduce_in_place(&mut aug, c)?;
    let kernel: Vec<Vec<i64>> =
        (pivots.len()..r).map(|i| aug.row(i)[c..].to_vec()).collect();
    hermite_basis(&IntMatrix::from_rows(r, &kernel)?)
}

/// Pivot column of each row of a matrix already in echelon form.
pub(crate) fn pivot_columns(basis: &IntMatrix) -> Vec<usize> {
    basis
        .row_iter()
        .map(|row| row.iter().position(|&v| v != 0).expect("zero row in echelon basis"))
        .collect()
}

/// Coefficients `x` with `x * basis = v` for an echelon `basis`, or `None`
/// when `v` is outside the rational span. A rational but non-integral
/// solution is reported as an error.
pub(crate) fn solve_in_echelon(
    basis: &IntMatrix,
    pivots: &[usize],
    v: &[i64],
) -> Result<Option<Vec<i64>>> {
    let mut rest = v.to_vec();
    let mut coeffs = Vec::with_capacity(pivots.len());
    let mut cursor = 0usize;
    for (i, &pc) in pivots.iter().enumerate() {
        if rest[cursor..pc].iter().any(|&x| x != 0) {
            return Ok(None);
        }
        let p = basis.get(i, pc);
        let x = rest[pc];
        if x % p != 0 {
            return Err(Error::NoIntegerSolution);
        }
        let q = x / p;
        super::matrix::axpy_sub(&mut rest, q, basis.row(i))?;
        coeffs.push(q);
        cursor = pc + 1;
    }
    if rest.iter().any(|&x| x != 0) {
        return Ok(None);
    }
    Ok(Some(coeffs))
}
