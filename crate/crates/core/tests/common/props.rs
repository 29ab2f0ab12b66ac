//! Randomized property checks, runnable with any case count.

#![allow(dead_code)]

use std::sync::OnceLock;

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};
use toric_core::characters::{decompose, weyl_character_table, CharacterTable, DEFAULT_DIXON_BUDGET};
use toric_core::cohomology::{complement_poincare, ClassPolynomial};
use toric_core::lattice::{
    exterior_traces, is_saturated, saturate, smith_quotient, symmetric_traces, IntMatrix, LatticeModule,
};
use toric_core::poset::{custom_poset, CustomArrangement, DEFAULT_NODE_BUDGET};
use toric_core::weyl::DEFAULT_GROUP_BUDGET;
use toric_core::{Error, Poly, RootSystem, WeylGroup};

use super::{brute_force_poincare, complete_symmetric, elementary_symmetric, rank_and_minor_gcd};

pub fn runner(cases: u32, deterministic: bool) -> TestRunner {
    let config = Config { cases, failure_persistence: None, ..Config::default() };
    if deterministic {
        TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
    } else {
        TestRunner::new(config)
    }
}

fn run<S: Strategy>(
    name: &str,
    cases: u32,
    deterministic: bool,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    runner(cases, deterministic).run(&strategy, test).map_err(|e| format!("{name}: {e}"))
}

fn lift<T>(r: toric_core::Result<T>) -> Result<T, TestCaseError> {
    r.map_err(|e| TestCaseError::fail(e.to_string()))
}

fn generators(max_rank: usize, max_rows: usize, bound: i64) -> impl Strategy<Value = (usize, Vec<Vec<i64>>)> {
    (1..=max_rank).prop_flat_map(move |n| (Just(n), prop::collection::vec(prop::collection::vec(-bound..=bound, n), 1..=max_rows)))
}

/// Elementary row operation: `(i, j, c, kind)`.
type RowOp = (usize, usize, i64, u8);

fn apply_ops(rows: &mut [Vec<i64>], ops: &[RowOp]) {
    let k = rows.len();
    for &(i, j, c, kind) in ops {
        let (i, j) = (i % k, j % k);
        match kind % 3 {
            0 if i != j => {
                let src = rows[j].clone();
                for (x, y) in rows[i].iter_mut().zip(src) {
                    *x += c * y;
                }
            }
            1 => rows.swap(i, j),
            2 => rows[i].iter_mut().for_each(|x| *x = -*x),
            _ => {}
        }
    }
}

pub fn hermite_canonicity(cases: u32, deterministic: bool) -> Result<(), String> {
    let ops = prop::collection::vec((0usize..8, 0usize..8, -3i64..=3, 0u8..3), 0..10);
    run("hermite canonicity", cases, deterministic, (generators(4, 5, 6), ops), |((n, rows), ops)| {
        let a = lift(LatticeModule::from_generators(n, &rows))?;
        let mut mixed = rows.clone();
        apply_ops(&mut mixed, &ops);
        let b = lift(LatticeModule::from_generators(n, &mixed))?;
        prop_assert_eq!(a.key(), b.key());
        for r in &rows {
            prop_assert!(a.contains(r));
        }
        prop_assert_eq!(a.rank(), rank_and_minor_gcd(&rows, n).0);
        Ok(())
    })
}

pub fn saturation_idempotence(cases: u32, deterministic: bool) -> Result<(), String> {
    run("saturation idempotence", cases, deterministic, generators(4, 4, 6), |(n, rows)| {
        let m = lift(LatticeModule::from_generators(n, &rows))?;
        let s = lift(saturate(&m))?;
        let ss = lift(saturate(&s))?;
        prop_assert_eq!(s.key(), ss.key());
        prop_assert!(lift(is_saturated(&s))?);
        prop_assert!(s.contains_module(&m));
        prop_assert_eq!(s.rank(), m.rank());
        // [Sat(N) : N] is the gcd of the maximal minors of a basis of N
        let basis: Vec<Vec<i64>> = m.basis().row_iter().map(|r| r.to_vec()).collect();
        let q = lift(smith_quotient(&m))?;
        prop_assert_eq!(q.torsion_order() as i128, rank_and_minor_gcd(&basis, n).1);
        prop_assert_eq!(lift(is_saturated(&m))?, q.torsion_order() == 1);
        Ok(())
    })
}

pub fn smith_chain(cases: u32, deterministic: bool) -> Result<(), String> {
    run("Smith divisibility chain", cases, deterministic, generators(5, 6, 9), |(n, rows)| {
        let m = lift(LatticeModule::from_generators(n, &rows))?;
        let q = lift(smith_quotient(&m))?;
        let d = q.invariant_factors();
        for w in d.windows(2) {
            prop_assert!(w[0] != 0 && w[1] % w[0] == 0, "{:?}", d);
        }
        prop_assert_eq!(d.iter().map(|&x| x as u64).product::<u64>(), q.torsion_order());
        prop_assert_eq!(q.free_rank(), n - m.rank());
        Ok(())
    })
}

pub fn newton_girard(cases: u32, deterministic: bool) -> Result<(), String> {
    let diag = prop::collection::vec(-3i64..=3, 1..=6);
    run("Newton-Girard vs binomials", cases, deterministic, diag, |a| {
        let n = a.len();
        let m = 6;
        let p: Vec<i64> = (1..=m.max(n) as u32).map(|k| a.iter().map(|x| x.pow(k)).sum()).collect();
        let e = lift(exterior_traces(&p, n))?;
        for (k, &ek) in e.iter().enumerate() {
            prop_assert_eq!(ek, elementary_symmetric(&a, k));
        }
        let p128: Vec<i128> = p.iter().map(|&x| x as i128).collect();
        let h = lift(symmetric_traces(&p128, m))?;
        for (k, &hk) in h.iter().enumerate() {
            prop_assert_eq!(hk, complete_symmetric(&a, k));
        }
        // for the identity these are binomial coefficients
        let ones = vec![n as i64; n];
        prop_assert_eq!(lift(exterior_traces(&ones, n))?, super::binomials(n));
        Ok(())
    })
}

fn arrangement(max_rank: usize, max_vectors: usize) -> impl Strategy<Value = CustomArrangement> {
    (2..=max_rank)
        .prop_flat_map(move |n| (Just(n), prop::collection::vec(prop::collection::vec(-3i64..=3, n), 1..=max_vectors)))
        .prop_filter_map("zero vector", |(n, vs)| {
            if vs.iter().any(|v| v.iter().all(|&x| x == 0)) {
                None
            } else {
                CustomArrangement::new(n, vs).ok()
            }
        })
}

pub fn mobius_zero_sum(cases: u32, deterministic: bool) -> Result<(), String> {
    run("Möbius zero-sum", cases, deterministic, (arrangement(3, 7), any::<bool>()), |(arr, linear)| {
        let p = lift(custom_poset(&arr, linear, DEFAULT_NODE_BUDGET))?;
        for y in 0..p.len() {
            if p.nodes()[y].rank == 0 {
                prop_assert_eq!(p.nodes()[y].mobius, 1);
                continue;
            }
            let s: i64 = (0..p.len()).filter(|&z| p.le(y, z)).map(|z| p.nodes()[z].mobius).sum();
            prop_assert_eq!(s, 0, "node {}", y);
        }
        Ok(())
    })
}

pub fn brute_force_poset(cases: u32, deterministic: bool) -> Result<(), String> {
    run("brute-force poset oracle", cases, deterministic, arrangement(3, 9), |arr| {
        let p = lift(custom_poset(&arr, false, DEFAULT_NODE_BUDGET))?;
        let poly = lift(complement_poincare(&p, &IntMatrix::identity(arr.rank)))?;
        prop_assert_eq!(poly.padded(arr.rank + 1), brute_force_poincare(arr.rank, &arr.vectors));
        // nodes are exactly the distinct spans of subsets
        let k = arr.vectors.len();
        let mut spans = std::collections::BTreeSet::new();
        for mask in 0u32..(1 << k) {
            let rows: Vec<&Vec<i64>> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| &arr.vectors[i]).collect();
            spans.insert(lift(LatticeModule::from_generators(arr.rank, &rows))?.key().to_vec());
        }
        prop_assert_eq!(spans.len(), p.len());
        Ok(())
    })
}

const TABLE_TYPES: [&str; 9] = ["A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2", "F4"];

struct Fixture {
    table: CharacterTable,
    classes: ClassPolynomial,
}

fn fixtures() -> &'static Vec<Fixture> {
    static CELL: OnceLock<Vec<Fixture>> = OnceLock::new();
    CELL.get_or_init(|| {
        TABLE_TYPES
            .iter()
            .map(|t| {
                let rs = RootSystem::from_label(t, None).unwrap();
                let g = WeylGroup::enumerate(&rs, DEFAULT_GROUP_BUDGET).unwrap();
                let cc = g.conjugacy_classes(&rs).unwrap();
                let table = weyl_character_table(&rs, &g, &cc, DEFAULT_DIXON_BUDGET).unwrap().table;
                let classes =
                    toric_core::cohomology::equivariant_table(&rs, &g, &cc, DEFAULT_NODE_BUDGET).unwrap();
                Fixture { table, classes }
            })
            .collect()
    })
}

pub fn character_orthogonality(cases: u32, deterministic: bool) -> Result<(), String> {
    let fx = fixtures();
    run("character orthogonality", cases, deterministic, (0..fx.len(), any::<u16>(), any::<u16>()), |(t, i, j)| {
        let table = &fx[t].table;
        let r = table.irreducibles.len();
        let (i, j) = (i as usize % r, j as usize % r);
        let expect = if i == j { table.order() as i128 } else { 0 };
        prop_assert_eq!(table.weighted_product(&table.irreducibles[i].values, &table.irreducibles[j].values), expect);
        let col: i128 = table.irreducibles.iter().map(|c| c.values[i] as i128 * c.values[j] as i128).sum();
        let expect = if i == j { (table.order() / table.classes[i].size) as i128 } else { 0 };
        prop_assert_eq!(col, expect);
        Ok(())
    })
}

pub fn nonnegative_multiplicities(cases: u32, deterministic: bool) -> Result<(), String> {
    let fx = fixtures();
    let coeffs = prop::collection::vec(0i64..4, 25);
    run("nonnegative integral multiplicities", cases, deterministic, (0..fx.len(), coeffs, 0usize..5), |(t, c, degree)| {
        let f = &fx[t];
        let r = f.table.irreducibles.len();
        // the real cohomology decomposes nonnegatively and recovers Betti numbers
        let d = lift(decompose(&f.classes, &f.table))?;
        let i = degree.min(f.classes.rank);
        prop_assert!(d.rows[i].iter().all(|&m| m >= 0));
        let betti: i64 = d.rows[i].iter().zip(f.table.degrees()).map(|(m, d)| m * d).sum();
        prop_assert_eq!(betti, f.classes.polys[0].coeff(i));
        // a random genuine character decomposes to its coefficients
        let values: Vec<i64> =
            (0..r).map(|k| (0..r).map(|x| c[x] * f.table.irreducibles[x].values[k]).sum()).collect();
        let synthetic = ClassPolynomial {
            rank: 0,
            polys: values.iter().map(|&v| Poly::constant(v)).collect(),
            ..f.classes.clone()
        };
        let d = lift(decompose(&synthetic, &f.table))?;
        prop_assert_eq!(&d.rows[0], &c[..r].to_vec());
        // and a virtual one with a negative coefficient is rejected
        if let Some(k) = (0..r).find(|&k| c[k] > 0) {
            let bad: Vec<i64> = values.iter().enumerate().map(|(x, v)| v - 2 * c[k] * f.table.irreducibles[k].values[x]).collect();
            let synthetic = ClassPolynomial { polys: bad.iter().map(|&v| Poly::constant(v)).collect(), ..synthetic };
            let negative = matches!(decompose(&synthetic, &f.table), Err(Error::NegativeMultiplicity { .. }));
            prop_assert!(negative);
        }
        Ok(())
    })
}

fn pools() -> &'static (rayon::ThreadPool, rayon::ThreadPool) {
    static CELL: OnceLock<(rayon::ThreadPool, rayon::ThreadPool)> = OnceLock::new();
    CELL.get_or_init(|| {
        let one = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let many = rayon::ThreadPoolBuilder::new().num_threads(4).build().unwrap();
        (one, many)
    })
}

fn poset_bytes(arr: &CustomArrangement, linear: bool) -> toric_core::Result<String> {
    let p = custom_poset(arr, linear, DEFAULT_NODE_BUDGET)?;
    let poly = complement_poincare(&p, &IntMatrix::identity(arr.rank))?;
    Ok(format!("{}\n{}", serde_json::to_string(&p.export()?)?, poly))
}

pub fn thread_determinism(cases: u32, deterministic: bool) -> Result<(), String> {
    let (one, many) = pools();
    run("byte determinism across thread counts", cases, deterministic, (arrangement(3, 7), any::<bool>()), |(arr, linear)| {
        let a = lift(one.install(|| poset_bytes(&arr, linear)))?;
        let b = lift(many.install(|| poset_bytes(&arr, linear)))?;
        prop_assert_eq!(a, b);
        Ok(())
    })
}

/// Every suite, in the order listed in the acceptance criteria.
pub const SUITES: [(&str, fn(u32, bool) -> Result<(), String>); 9] = [
    ("hermite canonicity", hermite_canonicity),
    ("saturation idempotence", saturation_idempotence),
    ("Smith divisibility chain", smith_chain),
    ("Newton-Girard vs binomials", newton_girard),
    ("Möbius zero-sum", mobius_zero_sum),
    ("brute-force poset oracle", brute_force_poset),
    ("character orthogonality", character_orthogonality),
    ("nonnegative integral multiplicities", nonnegative_multiplicities),
    ("byte determinism", thread_determinism),
];
