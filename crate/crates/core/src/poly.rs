//! Dense integer polynomials in one variable `t`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `Σ c_i t^i`, stored in ascending order with trailing zeros trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Poly {
    coeffs: Vec<i64>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: i64) -> Self {
        Poly::new(vec![c])
    }

    pub fn monomial(c: i64, k: usize) -> Self {
        let mut v = vec![0; k + 1];
        v[k] = c;
        Poly::new(v)
    }

    /// `(1 + t)^n`.
    pub fn one_plus_t_pow(n: usize) -> Self {
        let mut c = vec![1i64; n + 1];
        for k in 1..n {
            c[k] = c[k - 1] * (n - k + 1) as i64 / k as i64;
        }
        Poly::new(c)
    }

    /// `∏ (1 + a_i t)`.
    pub fn linear_product(roots: impl IntoIterator<Item = i64>) -> Result<Self> {
        roots.into_iter().try_fold(Poly::constant(1), |acc, a| acc.checked_mul(&Poly::new(vec![1, a])))
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Coefficients padded with zeros to length `len`.
    pub fn padded(&self, len: usize) -> Vec<i64> {
        let mut v = self.coeffs.clone();
        if v.len() < len {
            v.resize(len, 0);
        }
        v
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        let len = self.coeffs.len().max(other.coeffs.len());
        let v = (0..len)
            .map(|i| self.coeff(i).checked_add(other.coeff(i)).ok_or(Error::Overflow("polynomial sum")))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::new(v))
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero());
        }
        let mut v = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                let p = a.checked_mul(b).ok_or(Error::Overflow("polynomial product"))?;
                v[i + j] = v[i + j].checked_add(p).ok_or(Error::Overflow("polynomial product"))?;
            }
        }
        Ok(Poly::new(v))
    }

    pub fn checked_scale(&self, c: i64) -> Result<Poly> {
        let v = self
            .coeffs
            .iter()
            .map(|&a| a.checked_mul(c).ok_or(Error::Overflow("polynomial scale")))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::new(v))
    }

    /// Multiplies by `c · t^k`.
    pub fn shift_scale(&self, c: i64, k: usize) -> Result<Poly> {
        let mut v = vec![0i64; k];
        for &a in &self.coeffs {
            v.push(a.checked_mul(c).ok_or(Error::Overflow("polynomial scale"))?);
        }
        Ok(Poly::new(v))
    }

    pub fn eval(&self, t: i64) -> i128 {
        self.coeffs.iter().rev().fold(0i128, |acc, &c| acc * t as i128 + c as i128)
    }

    /// `t^{2n} p(1/t)`; fails if a negative power of `t` would survive.
    pub fn compactly_supported(&self, n: usize) -> Result<Poly> {
        let top = 2 * n;
        if self.coeffs.len() > top + 1 {
            return Err(Error::NonPolynomialResult);
        }
        let mut v = vec![0i64; top + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            v[top - i] = c;
        }
        Ok(Poly::new(v))
    }

    /// Descending LaTeX form, e.g. `19 t^{2} + 8 t + 1`.
    pub fn to_latex(&self) -> String {
        self.render(|k| match k {
            0 => String::new(),
            1 => " t".to_string(),
            _ => format!(" t^{{{k}}}"),
        })
    }

    fn render(&self, power: impl Fn(usize) -> String) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let first = out.is_empty();
            let sign = match (first, c < 0) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            out.push_str(sign);
            let a = c.unsigned_abs();
            let p = power(k);
            if a != 1 || k == 0 {
                out.push_str(&a.to_string());
                out.push_str(&p);
            } else {
                out.push_str(p.trim_start());
            }
        }
        out
    }
}

/// Descending plain form, e.g. `19t^2 + 8t + 1`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.render(|k| match k {
            0 => String::new(),
            1 => "t".to_string(),
            _ => format!("t^{k}"),
        });
        f.write_str(&s)
    }
}
