//! Closed forms for type `A_n`, used to cross-check the general pipeline.

use super::CharacterTable;
use crate::error::Result;
use crate::poly::Poly;

fn factorial(n: usize) -> i64 {
    (1..=n as i64).product()
}

fn is_identity(cycle_type: &[usize]) -> bool {
    cycle_type.iter().all(|&c| c == 1)
}

fn is_transposition(cycle_type: &[usize]) -> bool {
    cycle_type.iter().filter(|&&c| c == 2).count() == 1 && cycle_type.iter().all(|&c| c <= 2)
}

/// `∏_{i=1}^n (1 + (i+1) t)`.
pub fn an_poincare(n: usize) -> Result<Poly> {
    Poly::linear_product((1..=n).map(|i| i as i64 + 1))
}

/// Arnold's `∏_{i=1}^n (1 + i t)` for the hyperplane complement.
pub fn arnold_poincare(n: usize) -> Result<Poly> {
    Poly::linear_product((1..=n).map(|i| i as i64))
}

/// `P(T_Φ, 1)(g)` for `g ∈ S_{n+1}` of the given cycle type.
pub fn an_total_character(n: usize, cycle_type: &[usize]) -> i64 {
    if is_identity(cycle_type) {
        factorial(n + 2) / 2
    } else if is_transposition(cycle_type) {
        factorial(n)
    } else {
        0
    }
}

/// `Ind_{⟨s⟩}^{S_{n+1}} Triv` for a transposition `s`.
pub fn an_induced_character(n: usize, cycle_type: &[usize]) -> i64 {
    if is_identity(cycle_type) {
        factorial(n + 1) / 2
    } else if is_transposition(cycle_type) {
        // |C(s)| · |s^W ∩ ⟨s⟩| / |⟨s⟩| = 2 (n-1)! / 2
        factorial(n - 1)
    } else {
        0
    }
}

/// Multiplicities of the irreducibles of `table` in `Reg + n·Ind`, i.e.
/// `χ(1) + n (χ(1) + χ(s)) / 2`. `cycle_types` gives the cycle type of each
/// column of `table`.
pub fn an_total_decomposition(n: usize, table: &CharacterTable, cycle_types: &[Vec<usize>]) -> Vec<i64> {
    let s = cycle_types.iter().position(|c| is_transposition(c)).expect("a transposition class");
    table
        .irreducibles
        .iter()
        .map(|chi| chi.values[0] + n as i64 * (chi.values[0] + chi.values[s]) / 2)
        .collect()
}
