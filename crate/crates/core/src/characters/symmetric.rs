//! Characters of symmetric groups by the Murnaghan–Nakayama rule.

use super::{class_entries, CharacterTable, ClassEntry, GroupInfo, Irreducible};
use crate::error::{Error, Result};
use crate::lattice::{power_traces, IntMatrix};
use crate::roots::{Family, RootSystem};
use crate::weyl::{ConjugacyClasses, WeylGroup};

/// Largest symmetric group whose table is built on request.
pub const MAX_SYMMETRIC_DEGREE: usize = 12;

/// Partitions of `m` in decreasing lexicographic order, `[m]` first.
pub fn partitions(m: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(m, m, &mut Vec::new(), &mut out);
    out
}

/// `χ^λ(μ)`: strip rim hooks of lengths `μ_1, μ_2, …` from `λ`, working
/// with beta-numbers so that removing a hook moves one bead down.
pub fn symmetric_character(lambda: &[usize], mu: &[usize]) -> i64 {
    let Some((&h, rest)) = mu.split_first() else {
        return i64::from(lambda.iter().all(|&p| p == 0));
    };
    let k = lambda.len();
    let beta: Vec<usize> = lambda.iter().enumerate().map(|(i, &p)| p + k - 1 - i).collect();
    let mut total = 0;
    for (i, &b) in beta.iter().enumerate() {
        if b < h || beta.contains(&(b - h)) {
            continue;
        }
        let target = b - h;
        let crossed = beta.iter().filter(|&&c| target < c && c < b).count();
        let mut next = beta.clone();
        next[i] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let shape: Vec<usize> =
            next.iter().enumerate().map(|(j, &c)| c - (k - 1 - j)).filter(|&p| p > 0).collect();
        let sign = if crossed % 2 == 0 { 1 } else { -1 };
        total += sign * symmetric_character(&shape, rest);
    }
    total
}

fn partition_name(p: &[usize]) -> String {
    let parts: Vec<String> = p.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(","))
}

fn centralizer_order(mu: &[usize]) -> u128 {
    let mut z: u128 = 1;
    let mut i = 0;
    while i < mu.len() {
        let j = i + mu[i..].iter().take_while(|&&x| x == mu[i]).count();
        let mult = (j - i) as u128;
        z *= (mu[i] as u128).pow(mult as u32) * (1..=mult).product::<u128>();
        i = j;
    }
    z
}

/// The character table of `S_m`, classes indexed by cycle type.
pub fn symmetric_group_table(m: usize) -> Result<CharacterTable> {
    let order: u128 = (1..=m as u128).product();
    if m > MAX_SYMMETRIC_DEGREE {
        return Err(Error::SizeBudget { order: usize::try_from(order).unwrap_or(usize::MAX), budget: MAX_SYMMETRIC_DEGREE });
    }
    // identity class first
    let mut classes = partitions(m);
    classes.reverse();
    let entries = classes
        .iter()
        .map(|mu| ClassEntry {
            label: format!("cycles{}", partition_name(mu)),
            size: (order / centralizer_order(mu)) as usize,
            invariants: None,
        })
        .collect();
    let irreducibles = partitions(m)
        .iter()
        .map(|la| Irreducible {
            name: partition_name(la),
            values: classes.iter().map(|mu| symmetric_character(la, mu)).collect(),
        })
        .collect();
    let table = CharacterTable {
        group: GroupInfo { type_label: format!("S{m}"), rank: m.saturating_sub(1), order: order as usize },
        classes: entries,
        irreducibles,
    };
    table.check_orthogonality()?;
    Ok(table)
}

/// Cycle type of the permutation of `n + 1` letters acting on the root
/// lattice of `A_n` as `g`: the permutation character is `Tr(g^k) + 1`, and
/// Möbius inversion over divisors recovers the cycle counts.
pub fn cycle_type_of_class(g: &IntMatrix) -> Result<Vec<usize>> {
    let m = g.rows() + 1;
    let fix: Vec<i64> = power_traces(g, m)?.iter().map(|t| t + 1).collect();
    let mobius = |mut k: usize| -> i64 {
        let mut r = 1;
        let mut p = 2;
        while p * p <= k {
            if k % p == 0 {
                k /= p;
                if k % p == 0 {
                    return 0;
                }
                r = -r;
            }
            p += 1;
        }
        if k > 1 {
            r = -r;
        }
        r
    };
    let mut parts = Vec::new();
    for d in 1..=m {
        let s: i64 = (1..=d).filter(|e| d % e == 0).map(|e| mobius(d / e) * fix[e - 1]).sum();
        if s % d as i64 != 0 || s < 0 {
            return Err(Error::Internal("inconsistent permutation character".into()));
        }
        parts.extend(std::iter::repeat(d).take((s / d as i64) as usize));
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    if parts.iter().sum::<usize>() != m {
        return Err(Error::Internal("cycle type does not partition n + 1".into()));
    }
    Ok(parts)
}

/// The character table of `W(A_n) = S_{n+1}` on the computed classes, with
/// irreducibles named by partitions.
pub fn type_a_table(rs: &RootSystem, group: &WeylGroup, classes: &ConjugacyClasses) -> Result<CharacterTable> {
    if rs.cartan_type().family != Family::A {
        return Err(Error::InvalidType(format!("{} is not of type A", rs.cartan_type())));
    }
    let m = rs.rank() + 1;
    if m > MAX_SYMMETRIC_DEGREE {
        return Err(Error::SizeBudget { order: group.order(), budget: MAX_SYMMETRIC_DEGREE });
    }
    let cycle_types = classes
        .representatives()
        .iter()
        .map(|&r| cycle_type_of_class(&group.element(r)))
        .collect::<Result<Vec<_>>>()?;
    let irreducibles = partitions(m)
        .iter()
        .map(|la| Irreducible {
            name: partition_name(la),
            values: cycle_types.iter().map(|mu| symmetric_character(la, mu)).collect(),
        })
        .collect();
    let table = CharacterTable {
        group: GroupInfo { type_label: rs.cartan_type().to_string(), rank: rs.rank(), order: group.order() },
        classes: class_entries(classes),
        irreducibles,
    };
    table.check_orthogonality()?;
    Ok(table)
}
