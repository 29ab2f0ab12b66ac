//! Burnside–Dixon: characters as common eigenvectors of the class matrices,
//! computed over a prime field and lifted to the integers.

use rayon::prelude::*;

use super::{class_entries, CharacterTable, GroupInfo, Irreducible};
use crate::error::{Error, Result};
use crate::weyl::{ConjugacyClasses, WeylGroup};

/// Largest group handled without an explicit opt-in (covers E6).
pub const DEFAULT_DIXON_BUDGET: usize = 100_000;

const MAX_PRIME_ATTEMPTS: usize = 8;

fn mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, a, p);
        }
        a = mul(a, a, p);
        e >>= 1;
    }
    r
}

fn inv(a: u64, p: u64) -> u64 {
    pow(a, p - 2, p)
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Primes `p ≡ 1 (mod exponent)` with `p > 2√|W|`, in increasing order.
/// The congruence puts all character values in `F_p`; the bound makes
/// degrees and values recoverable from their residues.
fn admissible_primes(exponent: u64, order: u64) -> impl Iterator<Item = u64> {
    let bound = 2 * ((order as f64).sqrt().ceil() as u64);
    (1..).map(move |j| j * exponent + 1).filter(move |&p| p > bound && is_prime(p))
}

/// `a[i][j][k] = #{(x, y) ∈ C_i × C_j : x y = z_k}` for class
/// representatives `z_k`, flattened as `(i * r + j) * r + k`.
///
/// Uses `x = u⁻¹`, `y = u z_k` over all `u`, and that every class of a Weyl
/// group is closed under inversion.
fn class_constants(group: &WeylGroup, classes: &ConjugacyClasses) -> Vec<u64> {
    let r = classes.len();
    let per_k: Vec<Vec<u64>> = classes
        .representatives()
        .par_iter()
        .map(|&z| {
            let mut counts = vec![0u64; r * r];
            for u in 0..group.order() {
                let i = classes.class_of(u);
                let j = classes.class_of(group.mul_index(u, z));
                counts[i * r + j] += 1;
            }
            counts
        })
        .collect();
    let mut a = vec![0u64; r * r * r];
    for (k, counts) in per_k.iter().enumerate() {
        for ij in 0..r * r {
            a[ij * r + k] = counts[ij];
        }
    }
    a
}

/// Brings `vectors` to reduced form: vector `l` is 1 at `pivots[l]` and every
/// other vector is 0 there.
fn reduce_basis(mut vectors: Vec<Vec<u64>>, p: u64) -> (Vec<Vec<u64>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut out: Vec<Vec<u64>> = Vec::new();
    for mut v in vectors.drain(..) {
        for (b, &pc) in out.iter().zip(&pivots) {
            let c = v[pc];
            if c != 0 {
                for (x, &y) in v.iter_mut().zip(b) {
                    *x = (*x + p - mul(c, y, p)) % p;
                }
            }
        }
        let Some(pc) = v.iter().position(|&x| x != 0) else { continue };
        let s = inv(v[pc], p);
        for x in v.iter_mut() {
            *x = mul(*x, s, p);
        }
        for b in out.iter_mut() {
            let c = b[pc];
            if c != 0 {
                for (x, &y) in b.iter_mut().zip(&v) {
                    *x = (*x + p - mul(c, y, p)) % p;
                }
            }
        }
        out.push(v);
        pivots.push(pc);
    }
    (out, pivots)
}

/// Null space of the square matrix `m` (row-major) over `F_p`.
fn kernel(m: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let n = m.len();
    let mut a = m.to_vec();
    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(pr) = (row..n).find(|&r| a[r][col] != 0) else { continue };
        a.swap(row, pr);
        let s = inv(a[row][col], p);
        for x in a[row].iter_mut() {
            *x = mul(*x, s, p);
        }
        for r in 0..n {
            if r != row && a[r][col] != 0 {
                let c = a[r][col];
                let src = a[row].clone();
                for (x, y) in a[r].iter_mut().zip(src) {
                    *x = (*x + p - mul(c, y, p)) % p;
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
    }
    (0..n)
        .filter(|c| !pivot_cols.contains(c))
        .map(|free| {
            let mut v = vec![0u64; n];
            v[free] = 1;
            for (r, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = (p - a[r][free]) % p;
            }
            v
        })
        .collect()
}

/// Characteristic polynomial `det(t - x)` by Faddeev–LeVerrier, ascending
/// coefficients. Requires `p > dim`.
fn char_poly(x: &[Vec<u64>], p: u64) -> Vec<u64> {
    let n = x.len();
    let mut c = vec![0u64; n + 1];
    c[n] = 1;
    let mut m = vec![vec![0u64; n]; n];
    for k in 1..=n {
        // m <- x m + c_{n-k+1} I
        let mut next = vec![vec![0u64; n]; n];
        for i in 0..n {
            for l in 0..n {
                let a = x[i][l];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    next[i][j] = (next[i][j] + mul(a, m[l][j], p)) % p;
                }
            }
            next[i][i] = (next[i][i] + c[n - k + 1]) % p;
        }
        m = next;
        let mut tr = 0;
        for i in 0..n {
            for l in 0..n {
                tr = (tr + mul(x[i][l], m[l][i], p)) % p;
            }
        }
        c[n - k] = mul((p - tr) % p, inv(k as u64, p), p);
    }
    c
}

fn eval(poly: &[u64], t: u64, p: u64) -> u64 {
    poly.iter().rev().fold(0, |acc, &c| (mul(acc, t, p) + c) % p)
}

/// Splits `F_p^r` into the common eigenlines of the class matrices.
fn common_eigenvectors(a: &[u64], r: usize, p: u64) -> Result<Vec<Vec<u64>>> {
    let unit = |i: usize| (0..r).map(|j| u64::from(i == j)).collect::<Vec<_>>();
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..r).map(unit).collect()];
    for i in 1..r {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let m_i = |v: &[u64]| -> Vec<u64> {
            (0..r)
                .map(|j| (0..r).fold(0, |acc, k| (acc + mul(a[(i * r + j) * r + k] % p, v[k], p)) % p))
                .collect()
        };
        let mut next = Vec::new();
        for space in spaces {
            if space.len() == 1 {
                next.push(space);
                continue;
            }
            let (basis, pivots) = reduce_basis(space, p);
            let images: Vec<Vec<u64>> = basis.iter().map(|v| m_i(v)).collect();
            let d = basis.len();
            // images[j] = Σ_l x[l][j] basis[l]
            let x: Vec<Vec<u64>> = (0..d).map(|l| (0..d).map(|j| images[j][pivots[l]]).collect()).collect();
            let cp = char_poly(&x, p);
            let mut found = 0;
            for lambda in 0..p {
                if eval(&cp, lambda, p) != 0 {
                    continue;
                }
                let shifted: Vec<Vec<u64>> = (0..d)
                    .map(|l| (0..d).map(|j| if l == j { (x[l][j] + p - lambda) % p } else { x[l][j] }).collect())
                    .collect();
                let ker = kernel(&shifted, p);
                found += ker.len();
                let sub: Vec<Vec<u64>> = ker
                    .iter()
                    .map(|kv| {
                        (0..r).map(|c| kv.iter().zip(&basis).fold(0, |s, (&w, b)| (s + mul(w, b[c], p)) % p))
                            .collect()
                    })
                    .collect();
                next.push(sub);
            }
            if found != d {
                return Err(Error::LiftFailure(p));
            }
        }
        spaces = next;
    }
    if spaces.iter().any(|s| s.len() != 1) {
        return Err(Error::LiftFailure(p));
    }
    Ok(spaces.into_iter().map(|mut s| s.remove(0)).collect())
}

fn lift(x: u64, p: u64) -> i64 {
    if x > p / 2 {
        x as i64 - p as i64
    } else {
        x as i64
    }
}

/// Dixon's algorithm with a fixed prime; fails with `LiftFailure` if the
/// prime does not separate the characters or the lifted table is invalid.
pub fn dixon_table_with_prime(
    group: &WeylGroup,
    classes: &ConjugacyClasses,
    constants: Option<&[u64]>,
    p: u64,
) -> Result<CharacterTable> {
    let r = classes.len();
    let order = group.order() as u64;
    let owned;
    let a = match constants {
        Some(a) => a,
        None => {
            owned = class_constants(group, classes);
            &owned
        }
    };
    let sizes = classes.sizes();
    if sizes[0] != 1 {
        return Err(Error::Internal("identity class must come first".into()));
    }
    let vectors = common_eigenvectors(a, r, p)?;
    let max_degree = (order as f64).sqrt() as u64;
    let mut irreducibles = Vec::with_capacity(r);
    for v in vectors {
        let s0 = inv(v[0], p);
        let omega: Vec<u64> = v.iter().map(|&x| mul(x, s0, p)).collect();
        // Σ_k ω_k ω_k' / |C_k| = |W| / χ(1)², using real classes
        let s = omega.iter().zip(sizes).fold(0, |acc, (&w, &c)| (acc + mul(mul(w, w, p), inv(c as u64 % p, p), p)) % p);
        if s == 0 {
            return Err(Error::LiftFailure(p));
        }
        let d2 = mul(order % p, inv(s, p), p);
        let degree = (1..=max_degree).find(|&d| mul(d, d, p) == d2).ok_or(Error::LiftFailure(p))?;
        let values = omega
            .iter()
            .zip(sizes)
            .map(|(&w, &c)| lift(mul(mul(w, degree, p), inv(c as u64 % p, p), p), p))
            .collect();
        irreducibles.push(Irreducible { name: String::new(), values });
    }
    irreducibles.sort_by(|a, b| a.values[0].cmp(&b.values[0]).then_with(|| b.values.cmp(&a.values)));
    for (k, chi) in irreducibles.iter_mut().enumerate() {
        chi.name = format!("X.{}", k + 1);
    }
    let table = CharacterTable {
        group: GroupInfo {
            type_label: group.cartan_type().to_string(),
            rank: group.rank(),
            order: group.order(),
        },
        classes: class_entries(classes),
        irreducibles,
    };
    match table.check_orthogonality() {
        Ok(()) => Ok(table),
        Err(Error::Orthogonality(_)) => Err(Error::LiftFailure(p)),
        Err(e) => Err(e),
    }
}

/// The complete character table of `group`, with provisional names `X.k`
/// ordered by degree.
pub fn dixon_table(group: &WeylGroup, classes: &ConjugacyClasses, budget: usize) -> Result<CharacterTable> {
    if group.order() > budget {
        return Err(Error::SizeBudget { order: group.order(), budget });
    }
    let exponent = classes.invariants().iter().fold(1u64, |l, inv| {
        let o = inv.order as u64;
        l / gcd(l, o) * o
    });
    let a = class_constants(group, classes);
    let mut last = 0;
    for p in admissible_primes(exponent, group.order() as u64).take(MAX_PRIME_ATTEMPTS) {
        match dixon_table_with_prime(group, classes, Some(&a), p) {
            Err(Error::LiftFailure(q)) => last = q,
            other => return other,
        }
    }
    Err(Error::LiftFailure(last))
}
