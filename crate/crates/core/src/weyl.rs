//! Weyl groups as explicit sets of integer matrices.
//!
//! Elements act on column vectors of simple-root coefficients. Every column
//! of an element is a root, so entries are tiny and stored as `i8`.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{exterior_traces, power_traces, IntMatrix};
use crate::roots::{CartanType, RootSystem};

/// Largest group enumerated without an explicit opt-in (covers E6).
pub const DEFAULT_GROUP_BUDGET: usize = 100_000;
/// Budget used with the large-memory opt-in (covers E7).
pub const LARGE_GROUP_BUDGET: usize = 3_000_000;

const CACHE_MAGIC: &[u8; 8] = b"TORICWG1";

/// The Weyl group, stored as a sorted flat array of `rank × rank` blocks.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    cartan_type: CartanType,
    rank: usize,
    elements: Vec<i8>,
    generators: Vec<IntMatrix>,
}

fn to_i8(m: &IntMatrix) -> Result<Vec<i8>> {
    m.as_flat()
        .iter()
        .map(|&x| i8::try_from(x).map_err(|_| Error::Overflow("Weyl element entry")))
        .collect()
}

fn to_matrix(n: usize, e: &[i8]) -> IntMatrix {
    IntMatrix::from_flat(n, n, e.iter().map(|&x| x as i64).collect()).expect("block size")
}

/// Sorts the `stride`-sized blocks of `flat` and removes duplicates.
fn sort_blocks(flat: &[i8], stride: usize) -> Vec<i8> {
    let mut idx: Vec<usize> = (0..flat.len() / stride).collect();
    let block = |i: usize| &flat[i * stride..(i + 1) * stride];
    idx.par_sort_unstable_by(|&a, &b| block(a).cmp(block(b)));
    idx.dedup_by(|a, b| block(*a) == block(*b));
    let mut out = Vec::with_capacity(idx.len() * stride);
    for i in idx {
        out.extend_from_slice(block(i));
    }
    out
}

fn contains_block(sorted: &[i8], stride: usize, e: &[i8]) -> bool {
    find_block(sorted, stride, e).is_some()
}

fn find_block(sorted: &[i8], stride: usize, e: &[i8]) -> Option<usize> {
    let count = sorted.len() / stride;
    let (mut lo, mut hi) = (0usize, count);
    while lo < hi {
        let mid = (lo + hi) / 2;
        match sorted[mid * stride..(mid + 1) * stride].cmp(e) {
            std::cmp::Ordering::Less => lo = mid + 1,
            std::cmp::Ordering::Greater => hi = mid,
            std::cmp::Ordering::Equal => return Some(mid),
        }
    }
    None
}

/// `s_i · w`: only row `i` changes, `row_i -= Σ_j A_ij row_j`.
fn left_simple(cartan: &IntMatrix, n: usize, i: usize, w: &[i8], out: &mut [i8]) {
    out.copy_from_slice(w);
    for c in 0..n {
        let mut v = w[i * n + c] as i64;
        for j in 0..n {
            v -= cartan.get(i, j) * w[j * n + c] as i64;
        }
        out[i * n + c] = v as i8;
    }
}

/// `w · s_i`: column `k` loses `A_ik` times column `i`.
fn right_simple(cartan: &IntMatrix, n: usize, i: usize, w: &[i8], out: &mut [i8]) {
    out.copy_from_slice(w);
    for k in 0..n {
        let a = cartan.get(i, k);
        if a == 0 {
            continue;
        }
        for r in 0..n {
            out[r * n + k] = (w[r * n + k] as i64 - a * w[r * n + i] as i64) as i8;
        }
    }
}

impl WeylGroup {
    /// Breadth-first closure by word length: the elements of length `k + 1`
    /// are the products `s · w` with `w` of length `k`, minus those of
    /// length `k - 1`.
    pub fn enumerate(rs: &RootSystem, budget: usize) -> Result<Self> {
        let ct = rs.cartan_type();
        let expected = ct.weyl_order();
        if expected > budget as u128 {
            return Err(Error::MemoryBudgetExceeded {
                order: usize::try_from(expected).unwrap_or(usize::MAX),
                budget,
            });
        }
        let n = rs.rank();
        let stride = n * n;
        let cartan = rs.cartan().clone();
        let identity = to_i8(&IntMatrix::identity(n))?;
        let mut layers: Vec<Vec<i8>> = vec![identity.clone()];
        let mut prev: Vec<i8> = Vec::new();
        let mut cur = identity;
        let mut total = 1usize;
        loop {
            let candidates: Vec<i8> = cur
                .par_chunks(stride)
                .flat_map_iter(|w| {
                    let cartan = &cartan;
                    (0..n).flat_map(move |i| {
                        let mut out = vec![0i8; stride];
                        left_simple(cartan, n, i, w, &mut out);
                        out
                    })
                })
                .collect();
            let sorted = sort_blocks(&candidates, stride);
            let next: Vec<i8> = sorted
                .chunks(stride)
                .filter(|e| !contains_block(&prev, stride, e))
                .flatten()
                .copied()
                .collect();
            if next.is_empty() {
                break;
            }
            total += next.len() / stride;
            if total > budget {
                return Err(Error::MemoryBudgetExceeded { order: total, budget });
            }
            layers.push(next.clone());
            prev = std::mem::replace(&mut cur, next);
        }
        let all: Vec<i8> = layers.concat();
        let elements = sort_blocks(&all, stride);
        let group = WeylGroup { cartan_type: ct, rank: n, elements, generators: rs.simple_reflections() };
        if group.order() as u128 != expected {
            return Err(Error::InvalidType(format!(
                "{ct}: enumerated {} elements, expected {expected}",
                group.order()
            )));
        }
        Ok(group)
    }

    /// Loads the group from `dir` if a matching cache file exists, otherwise
    /// enumerates it and writes the cache.
    pub fn enumerate_cached(rs: &RootSystem, budget: usize, dir: &Path) -> Result<Self> {
        let path = dir.join(format!("weyl-{}-v{}.bin", rs.cartan_type(), env!("CARGO_PKG_VERSION")));
        if let Ok(g) = Self::load(&path, rs) {
            return Ok(g);
        }
        let g = Self::enumerate(rs, budget)?;
        std::fs::create_dir_all(dir)?;
        g.save(&path)?;
        Ok(g)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let tmp = path.with_extension("tmp");
        {
            let mut f = std::io::BufWriter::new(std::fs::File::create(&tmp)?);
            f.write_all(CACHE_MAGIC)?;
            f.write_all(&(self.rank as u64).to_le_bytes())?;
            f.write_all(&(self.order() as u64).to_le_bytes())?;
            let bytes: Vec<u8> = self.elements.iter().map(|&x| x as u8).collect();
            f.write_all(&bytes)?;
            f.flush()?;
        }
        std::fs::rename(tmp, path)?;
        Ok(())
    }

    /// Reads a cache file, checking its size, sortedness, identity and
    /// closure under the generators.
    pub fn load(path: &Path, rs: &RootSystem) -> Result<Self> {
        let mut buf = Vec::new();
        std::fs::File::open(path)?.read_to_end(&mut buf)?;
        let bad = |m: &str| Error::Schema(format!("{}: {m}", path.display()));
        if buf.len() < 24 || &buf[..8] != CACHE_MAGIC {
            return Err(bad("not a group cache"));
        }
        let rank = u64::from_le_bytes(buf[8..16].try_into().unwrap()) as usize;
        let order = u64::from_le_bytes(buf[16..24].try_into().unwrap()) as usize;
        let stride = rank * rank;
        if rank != rs.rank() || order as u128 != rs.cartan_type().weyl_order() || buf.len() != 24 + order * stride {
            return Err(bad("size mismatch"));
        }
        let elements: Vec<i8> = buf[24..].iter().map(|&x| x as i8).collect();
        let group = WeylGroup {
            cartan_type: rs.cartan_type(),
            rank,
            elements,
            generators: rs.simple_reflections(),
        };
        let sorted = group.elements.chunks(stride).zip(group.elements.chunks(stride).skip(1)).all(|(a, b)| a < b);
        if !sorted || group.identity_index().is_none() {
            return Err(bad("corrupted element list"));
        }
        let closed = (0..order).into_par_iter().all(|i| {
            let mut out = vec![0i8; stride];
            (0..rank).all(|s| {
                left_simple(rs.cartan(), rank, s, group.element_slice(i), &mut out);
                group.index_of_slice(&out).is_some()
            })
        });
        if !closed {
            return Err(bad("not closed under generators"));
        }
        Ok(group)
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.elements.len() / (self.rank * self.rank)
    }

    pub fn generators(&self) -> &[IntMatrix] {
        &self.generators
    }

    pub fn element_slice(&self, i: usize) -> &[i8] {
        let s = self.rank * self.rank;
        &self.elements[i * s..(i + 1) * s]
    }

    pub fn element(&self, i: usize) -> IntMatrix {
        to_matrix(self.rank, self.element_slice(i))
    }

    pub fn index_of_slice(&self, e: &[i8]) -> Option<usize> {
        find_block(&self.elements, self.rank * self.rank, e)
    }

    pub fn index_of(&self, m: &IntMatrix) -> Option<usize> {
        self.index_of_slice(&to_i8(m).ok()?)
    }

    pub fn identity_index(&self) -> Option<usize> {
        self.index_of(&IntMatrix::identity(self.rank))
    }

    /// Index of the product `a · b`.
    pub fn mul_index(&self, a: usize, b: usize) -> usize {
        let n = self.rank;
        let (x, y) = (self.element_slice(a), self.element_slice(b));
        let mut out = vec![0i8; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut v = 0i64;
                for k in 0..n {
                    v += x[i * n + k] as i64 * y[k * n + j] as i64;
                }
                out[i * n + j] = v as i8;
            }
        }
        self.index_of_slice(&out).expect("group is closed under products")
    }

    /// The unique element sending every positive root to a negative one.
    pub fn longest_element(&self, rs: &RootSystem) -> Option<usize> {
        (0..self.order()).find(|&i| {
            let g = self.element(i);
            rs.positive_roots().iter().all(|r| g.apply(r).map_or(false, |v| v.iter().all(|&c| c <= 0)))
        })
    }

    pub fn conjugacy_classes(&self, rs: &RootSystem) -> Result<ConjugacyClasses> {
        ConjugacyClasses::compute(self, rs)
    }
}

/// Invariants of a conjugacy class used for labels and for aligning
/// externally supplied character tables.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ClassInvariants {
    pub order: usize,
    /// Coefficients of `det(t - g)`, leading coefficient first.
    pub char_poly: Vec<i64>,
    /// Cycle lengths of `g` on the lines through positive roots, ascending.
    pub line_cycles: Vec<usize>,
    /// Cycle lengths on the lines through short positive roots (empty when
    /// all roots have the same length).
    pub short_line_cycles: Vec<usize>,
    /// Cycle lengths on the short roots, signed (empty when all roots have
    /// the same length). Separates reflections in short and long roots.
    pub short_root_cycles: Vec<usize>,
    /// Cycle lengths of `g` on all roots, ascending.
    pub root_cycles: Vec<usize>,
    pub size: usize,
}

impl ClassInvariants {
    pub fn of(g: &IntMatrix, rs: &RootSystem, size: usize) -> Result<Self> {
        let n = g.rows();
        let p = power_traces(g, n)?;
        let e = exterior_traces(&p, n)?;
        let char_poly = e.iter().enumerate().map(|(k, &c)| if k % 2 == 0 { c } else { -c }).collect();
        let roots = rs.roots();
        let root_cycles = cycle_type(&orbits_on_vectors(g, &roots)?);
        let lines = line_orbits(g, rs)?;
        let line_cycles = cycle_type(&lines);
        let pos = rs.positive_roots();
        let norms: Vec<i64> = pos.iter().map(|r| rs.inner(r, r)).collect();
        let shortest = norms.iter().copied().min().unwrap_or(0);
        let (short_line_cycles, short_root_cycles) = if norms.iter().all(|&x| x == shortest) {
            (Vec::new(), Vec::new())
        } else {
            let short: Vec<Vec<usize>> = lines.into_iter().filter(|o| norms[o[0]] == shortest).collect();
            let short_roots: Vec<Vec<i64>> = roots.iter().filter(|r| rs.inner(r, r) == shortest).cloned().collect();
            (cycle_type(&short), cycle_type(&orbits_on_vectors(g, &short_roots)?))
        };
        let order = element_order(g)?;
        Ok(ClassInvariants { order, char_poly, line_cycles, short_line_cycles, short_root_cycles, root_cycles, size })
    }

    pub fn label(&self) -> String {
        fn cycles(v: &[usize]) -> String {
            let mut counts: Vec<(usize, usize)> = Vec::new();
            for &c in v {
                match counts.last_mut() {
                    Some((l, k)) if *l == c => *k += 1,
                    _ => counts.push((c, 1)),
                }
            }
            counts.iter().map(|(l, k)| format!("{l}^{k}")).collect::<Vec<_>>().join(".")
        }
        let mut s = String::new();
        let cp: Vec<String> = self.char_poly.iter().map(|c| c.to_string()).collect();
        write!(
            s,
            "o{} cp({}) lines({}) short({}) sroots({}) roots({}) #{}",
            self.order,
            cp.join(","),
            cycles(&self.line_cycles),
            cycles(&self.short_line_cycles),
            cycles(&self.short_root_cycles),
            cycles(&self.root_cycles),
            self.size
        )
        .unwrap();
        s
    }
}

/// `⟨g⟩`-orbits on the lines `{±α}` through positive roots, as lists of
/// positive-root indices.
pub fn line_orbits(g: &IntMatrix, rs: &RootSystem) -> Result<Vec<Vec<usize>>> {
    let pos = rs.positive_roots();
    let mut line_of: HashMap<Vec<i64>, usize> = HashMap::with_capacity(2 * pos.len());
    for (i, r) in pos.iter().enumerate() {
        line_of.insert(r.clone(), i);
        line_of.insert(r.iter().map(|x| -x).collect(), i);
    }
    let perm = pos
        .iter()
        .map(|r| line_of.get(&g.apply(r)?).copied().ok_or(Error::NotStable))
        .collect::<Result<Vec<_>>>()?;
    let mut seen = vec![false; perm.len()];
    let mut orbits = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            orbit.push(i);
            i = perm[i];
        }
        orbits.push(orbit);
    }
    Ok(orbits)
}

fn cycle_type(orbits: &[Vec<usize>]) -> Vec<usize> {
    let mut v: Vec<usize> = orbits.iter().map(|o| o.len()).collect();
    v.sort_unstable();
    v
}

pub fn element_order(g: &IntMatrix) -> Result<usize> {
    let mut p = g.clone();
    let mut k = 1;
    while !p.is_identity() {
        p = p.mul(g)?;
        k += 1;
        if k > 1000 {
            return Err(Error::InvalidType("element of infinite order".into()));
        }
    }
    Ok(k)
}

/// Partition of `vectors` (assumed `g`-stable) into `⟨g⟩`-orbits, as index
/// lists. Members are listed in iteration order starting from the
/// lexicographically smallest vector; orbits are ordered by that vector.
pub fn orbits_on_vectors(g: &IntMatrix, vectors: &[Vec<i64>]) -> Result<Vec<Vec<usize>>> {
    let index: HashMap<&[i64], usize> = vectors.iter().enumerate().map(|(i, v)| (v.as_slice(), i)).collect();
    let mut order: Vec<usize> = (0..vectors.len()).collect();
    order.sort_by(|&a, &b| vectors[a].cmp(&vectors[b]));
    let mut seen = vec![false; vectors.len()];
    let mut orbits = Vec::new();
    for start in order {
        if seen[start] {
            continue;
        }
        let mut orbit = vec![start];
        seen[start] = true;
        let mut v = g.apply(&vectors[start])?;
        loop {
            let i = *index.get(v.as_slice()).ok_or(Error::NotStable)?;
            if i == start {
                break;
            }
            if seen[i] {
                return Err(Error::NotStable);
            }
            seen[i] = true;
            orbit.push(i);
            v = g.apply(&v)?;
        }
        orbits.push(orbit);
    }
    Ok(orbits)
}

/// `⟨g⟩`-orbits on the full root set `Φ` (positive roots first, then their
/// negatives, as in [`RootSystem::roots`]).
pub fn orbits_on_roots(g: &IntMatrix, rs: &RootSystem) -> Result<Vec<Vec<usize>>> {
    orbits_on_vectors(g, &rs.roots())
}

#[derive(Clone, Debug)]
pub struct ConjugacyClasses {
    representatives: Vec<usize>,
    sizes: Vec<usize>,
    class_of: Vec<u32>,
    invariants: Vec<ClassInvariants>,
}

impl ConjugacyClasses {
    fn compute(group: &WeylGroup, rs: &RootSystem) -> Result<Self> {
        let n = group.rank();
        let stride = n * n;
        let order = group.order();
        let cartan = rs.cartan();
        const UNSET: u32 = u32::MAX;
        let mut class_of = vec![UNSET; order];
        let mut reps = Vec::new();
        let mut sizes = Vec::new();
        let mut tmp = vec![0i8; stride];
        let mut out = vec![0i8; stride];
        for start in 0..order {
            if class_of[start] != UNSET {
                continue;
            }
            let id = reps.len() as u32;
            reps.push(start);
            class_of[start] = id;
            let mut stack = vec![start];
            let mut size = 1usize;
            while let Some(x) = stack.pop() {
                for s in 0..n {
                    left_simple(cartan, n, s, group.element_slice(x), &mut tmp);
                    right_simple(cartan, n, s, &tmp, &mut out);
                    let y = group.index_of_slice(&out).ok_or(Error::NotStable)?;
                    if class_of[y] == UNSET {
                        class_of[y] = id;
                        size += 1;
                        stack.push(y);
                    }
                }
            }
            sizes.push(size);
        }
        let invariants = reps
            .par_iter()
            .zip(sizes.par_iter())
            .map(|(&r, &size)| ClassInvariants::of(&group.element(r), rs, size))
            .collect::<Result<Vec<_>>>()?;
        // canonical order: element order, then smallest member
        let mut perm: Vec<usize> = (0..reps.len()).collect();
        perm.sort_by_key(|&c| (invariants[c].order, reps[c]));
        let mut rename = vec![0u32; reps.len()];
        for (new, &old) in perm.iter().enumerate() {
            rename[old] = new as u32;
        }
        for c in class_of.iter_mut() {
            *c = rename[*c as usize];
        }
        Ok(ConjugacyClasses {
            representatives: perm.iter().map(|&c| reps[c]).collect(),
            sizes: perm.iter().map(|&c| sizes[c]).collect(),
            class_of,
            invariants: perm.iter().map(|&c| invariants[c].clone()).collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    /// Element index of each class representative.
    pub fn representatives(&self) -> &[usize] {
        &self.representatives
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn class_of(&self, element: usize) -> usize {
        self.class_of[element] as usize
    }

    pub fn invariants(&self) -> &[ClassInvariants] {
        &self.invariants
    }

    /// Invariant labels, unique within the group. Classes with identical
    /// invariants (in type `D_{2k}`, pairs exchanged by a diagram
    /// automorphism) get suffixes `/1`, `/2` in class order.
    pub fn labels(&self) -> Vec<String> {
        let base: Vec<String> = self.invariants.iter().map(|i| i.label()).collect();
        let mut seen: HashMap<&str, usize> = HashMap::new();
        base.iter()
            .map(|l| {
                let dup = base.iter().filter(|m| *m == l).count() > 1;
                let k = seen.entry(l.as_str()).or_insert(0);
                *k += 1;
                if dup {
                    format!("{l}/{k}")
                } else {
                    l.clone()
                }
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(label: &str) -> (RootSystem, WeylGroup) {
        let rs = RootSystem::from_label(label, None).unwrap();
        let g = WeylGroup::enumerate(&rs, DEFAULT_GROUP_BUDGET).unwrap();
        (rs, g)
    }

    #[test]
    fn small_orders() {
        assert_eq!(group("A2").1.order(), 6);
        assert_eq!(group("A3").1.order(), 24);
        assert_eq!(group("B3").1.order(), 48);
        assert_eq!(group("G2").1.order(), 12);
        assert_eq!(group("F4").1.order(), 1152);
    }

    #[test]
    fn a2_classes() {
        let (rs, g) = group("A2");
        let cc = g.conjugacy_classes(&rs).unwrap();
        assert_eq!(cc.sizes(), &[1, 3, 2]);
        assert_eq!(cc.invariants()[0].order, 1);
        assert_eq!(cc.invariants()[2].order, 3);
    }

    #[test]
    fn class_counts() {
        for (label, count) in [("G2", 6), ("F4", 25), ("B3", 10), ("D4", 13), ("A4", 7)] {
            let (rs, g) = group(label);
            let cc = g.conjugacy_classes(&rs).unwrap();
            assert_eq!(cc.len(), count, "{label}");
            assert_eq!(cc.sizes().iter().sum::<usize>(), g.order());
        }
    }

    #[test]
    fn labels_are_unique() {
        for label in ["G2", "F4", "B3", "B4", "C3", "D4", "D5", "A4"] {
            let (rs, g) = group(label);
            let cc = g.conjugacy_classes(&rs).unwrap();
            let mut labels = cc.labels();
            labels.sort();
            labels.dedup();
            assert_eq!(labels.len(), cc.len(), "{label}");
        }
        // reflections in short and long roots of G2 are told apart
        let (rs, g) = group("G2");
        let raw: Vec<String> = g.conjugacy_classes(&rs).unwrap().invariants().iter().map(|i| i.label()).collect();
        assert!(raw.iter().all(|l| !l.contains('/')));
        assert_eq!(raw.len(), 6);
    }

    #[test]
    fn invariants_constant_on_classes() {
        let (rs, g) = group("B3");
        let cc = g.conjugacy_classes(&rs).unwrap();
        for i in 0..g.order() {
            let c = cc.class_of(i);
            let inv = ClassInvariants::of(&g.element(i), &rs, cc.sizes()[c]).unwrap();
            assert_eq!(inv, cc.invariants()[c]);
        }
    }

    #[test]
    fn elements_preserve_roots() {
        let (rs, g) = group("G2");
        let roots: std::collections::HashSet<Vec<i64>> = rs.roots().into_iter().collect();
        for i in 0..g.order() {
            let m = g.element(i);
            for r in &roots {
                assert!(roots.contains(&m.apply(r).unwrap()));
            }
        }
    }

    #[test]
    fn a2_orbits() {
        let (rs, g) = group("A2");
        let id = g.identity_index().unwrap();
        assert_eq!(orbits_on_roots(&g.element(id), &rs).unwrap().len(), 6);
        let s = &rs.simple_reflections()[0];
        let orbits = orbits_on_roots(s, &rs).unwrap();
        let mut sizes: Vec<usize> = orbits.iter().map(|o| o.len()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![2, 2, 2]);
        let roots = rs.roots();
        let fixed_pair = orbits.iter().find(|o| roots[o[0]] == roots[o[1]].iter().map(|x| -x).collect::<Vec<_>>());
        assert!(fixed_pair.is_some());
        let cox = s.mul(&rs.simple_reflections()[1]).unwrap();
        let orbits = orbits_on_roots(&cox, &rs).unwrap();
        assert_eq!(orbits.iter().map(|o| o.len()).collect::<Vec<_>>(), vec![3, 3]);
    }

    #[test]
    fn budget_enforced() {
        let rs = RootSystem::from_label("E6", None).unwrap();
        assert!(matches!(WeylGroup::enumerate(&rs, 1000), Err(Error::MemoryBudgetExceeded { .. })));
    }

    #[test]
    fn cache_round_trip() {
        let (rs, g) = group("F4");
        let dir = std::env::temp_dir().join(format!("toric-weyl-test-{}", std::process::id()));
        let loaded = WeylGroup::enumerate_cached(&rs, DEFAULT_GROUP_BUDGET, &dir).unwrap();
        assert_eq!(loaded.elements, g.elements);
        let again = WeylGroup::enumerate_cached(&rs, DEFAULT_GROUP_BUDGET, &dir).unwrap();
        assert_eq!(again.elements, g.elements);
        std::fs::remove_dir_all(dir).unwrap();
    }

    #[test]
    fn longest_element_of_g2_is_central() {
        let (rs, g) = group("G2");
        let w0 = g.element(g.longest_element(&rs).unwrap());
        assert_eq!(w0.as_flat(), &[-1, 0, 0, -1]);
    }
}
