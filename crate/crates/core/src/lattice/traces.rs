use super::hermite::{hermite_basis, left_kernel, pivot_columns, solve_in_echelon};
use super::matrix::IntMatrix;
use super::module::LatticeModule;
use super::smith::{saturate, QuotientStructure};
use crate::error::{Error, Result};

/// Torsion groups larger than this are handled by the kernel computation
/// instead of enumeration.
pub const DEFAULT_ENUMERATION_LIMIT: u64 = 1_000_000;

/// Trace of `g` restricted to the `g`-stable module `module`.
///
/// Solves `g * b_i = sum_j x_ij b_j` over the saturation and returns the
/// trace of `x`. The saturation has the same rational span, hence the same
/// trace, and keeps the solve unimodular.
pub fn restrict_trace(g: &IntMatrix, module: &LatticeModule) -> Result<i64> {
    if !module.is_stable_under(g)? {
        return Err(Error::NotStable);
    }
    let sat = saturate(module)?;
    let basis = sat.basis();
    let pivots = pivot_columns(basis);
    let mut trace = 0i64;
    for (i, row) in basis.row_iter().enumerate() {
        let img = g.apply(row)?;
        let x = solve_in_echelon(basis, &pivots, &img)?.ok_or(Error::NotStable)?;
        trace += x[i];
    }
    Ok(trace)
}

/// Traces of `g` on the exterior powers `Λ^0 .. Λ^n` from the power sums
/// `p_k = Tr(g^k)`, `k = 1..n`, via Newton's identities.
pub fn exterior_traces(power_sums: &[i64], n: usize) -> Result<Vec<i64>> {
    if power_sums.len() < n {
        return Err(Error::DimensionMismatch { expected: n, found: power_sums.len() });
    }
    let mut e: Vec<i128> = Vec::with_capacity(n + 1);
    e.push(1);
    for k in 1..=n {
        let mut acc: i128 = 0;
        for i in 1..=k {
            let term = e[k - i] * power_sums[i - 1] as i128;
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        if acc % k as i128 != 0 {
            return Err(Error::NonIntegralResult(k));
        }
        e.push(acc / k as i128);
    }
    e.into_iter()
        .map(|v| i64::try_from(v).map_err(|_| Error::Overflow("exterior traces")))
        .collect()
}

/// Traces of the complete homogeneous (symmetric) powers `Sym^0 .. Sym^m`
/// from the power sums `p_k`, `k = 1..m`.
pub fn symmetric_traces(power_sums: &[i128], m: usize) -> Result<Vec<i128>> {
    if power_sums.len() < m {
        return Err(Error::DimensionMismatch { expected: m, found: power_sums.len() });
    }
    let mut h: Vec<i128> = Vec::with_capacity(m + 1);
    h.push(1);
    for k in 1..=m {
        let mut acc: i128 = 0;
        for i in 1..=k {
            acc = acc
                .checked_add(h[k - i].checked_mul(power_sums[i - 1]).ok_or(Error::Overflow("symmetric traces"))?)
                .ok_or(Error::Overflow("symmetric traces"))?;
        }
        if acc % k as i128 != 0 {
            return Err(Error::NonIntegralResult(k));
        }
        h.push(acc / k as i128);
    }
    Ok(h)
}

/// `Tr(a^k)` for `k = 1..=count`.
pub fn power_traces(a: &IntMatrix, count: usize) -> Result<Vec<i64>> {
    let mut out = Vec::with_capacity(count);
    let mut p = IntMatrix::identity(a.rows());
    for _ in 0..count {
        p = p.mul(a)?;
        out.push(p.trace());
    }
    Ok(out)
}

/// Number of elements of the torsion part of `Z^n / N` fixed by `g`.
pub fn torsion_fixed_count(g: &IntMatrix, quotient: &QuotientStructure) -> Result<u64> {
    torsion_fixed_count_with_limit(g, quotient, DEFAULT_ENUMERATION_LIMIT)
}

pub fn torsion_fixed_count_with_limit(
    g: &IntMatrix,
    quotient: &QuotientStructure,
    enumeration_limit: u64,
) -> Result<u64> {
    let order = quotient.torsion_order();
    if order == 1 {
        // still validates stability
        quotient.action(g)?;
        return Ok(1);
    }
    if order <= enumeration_limit {
        count_by_enumeration(g, quotient)
    } else {
        count_by_kernel(g, quotient)
    }
}

/// Lifts every torsion element to `Z^n`, applies `g` and projects back.
fn count_by_enumeration(g: &IntMatrix, quotient: &QuotientStructure) -> Result<u64> {
    quotient.action(g)?;
    let factors = quotient.invariant_factors();
    let free = vec![0i64; quotient.free_rank()];
    let mut coords = vec![0i64; factors.len()];
    let mut fixed = 0u64;
    loop {
        let lifted = quotient.lift(&coords, &free)?;
        let (image, _) = quotient.project(&g.apply(&lifted)?)?;
        if image == coords {
            fixed += 1;
        }
        // odometer over prod Z/d_i
        let mut i = 0;
        loop {
            if i == coords.len() {
                return Ok(fixed);
            }
            coords[i] += 1;
            if coords[i] < factors[i] {
                break;
            }
            coords[i] = 0;
            i += 1;
        }
    }
}

/// Counts `ker(g - 1)` on `⊕ Z/d_i` as `[K : D]` where
/// `K = {x : x (A - I) ∈ D}` and `D = ⊕ d_i Z`.
fn count_by_kernel(g: &IntMatrix, quotient: &QuotientStructure) -> Result<u64> {
    let action = quotient.action(g)?;
    // divisibility order puts the unit factors first, so the invariant
    // factors sit on the trailing torsion coordinates
    let diag = quotient.invariant_factors();
    let r = action.torsion.rows();
    let idx: Vec<usize> = (r - diag.len()..r).collect();
    let k = idx.len();
    let mut c = action.torsion.submatrix(&idx, &idx);
    for i in 0..k {
        c.set(i, i, c.get(i, i) - 1);
    }
    // rows (x, y) with x C - y D = 0
    let mut stacked = IntMatrix::zeros(2 * k, k);
    for i in 0..k {
        for j in 0..k {
            stacked.set(i, j, c.get(i, j));
        }
        stacked.set(k + i, i, -diag[i]);
    }
    let ker = left_kernel(&stacked)?;
    let xs: Vec<Vec<i64>> = ker.row_iter().map(|r| r[..k].to_vec()).collect();
    let kb = hermite_basis(&IntMatrix::from_rows(k, &xs)?)?;
    if kb.rows() != k {
        return Err(Error::DimensionMismatch { expected: k, found: kb.rows() });
    }
    let det_k: u64 = (0..k).map(|i| kb.get(i, i) as u64).product();
    let det_d: u64 = diag.iter().map(|&d| d as u64).product();
    Ok(det_d / det_k)
}
