//! Crystallographic root systems in simple-root coordinates.
//!
//! Every vector here is an integer coefficient vector over the simple roots.
//! The Gram matrix of the simple roots is scaled so that short roots have
//! squared length 2; only ratios enter the reflection formula.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::IntMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

/// A validated (family, rank) pair such as `E6` or `A3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 3,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !ok {
            return Err(Error::InvalidType(format!("{}{}", family.letter(), rank)));
        }
        Ok(CartanType { family, rank })
    }

    /// Parses `"A"` with an explicit rank, or a combined label like `"E6"`.
    pub fn parse(label: &str, rank: Option<usize>) -> Result<Self> {
        let label = label.trim();
        let mut chars = label.chars();
        let family = chars
            .next()
            .and_then(Family::from_letter)
            .ok_or_else(|| Error::InvalidType(label.to_string()))?;
        let digits: String = chars.collect();
        let embedded = if digits.is_empty() {
            None
        } else {
            Some(digits.parse::<usize>().map_err(|_| Error::InvalidType(label.to_string()))?)
        };
        let rank = match (embedded, rank, family) {
            (Some(a), Some(b), _) if a != b => {
                return Err(Error::InvalidType(format!("{label} with rank {b}")))
            }
            (Some(a), _, _) | (None, Some(a), _) => a,
            (None, None, Family::F) => 4,
            (None, None, Family::G) => 2,
            (None, None, _) => return Err(Error::InvalidType(format!("{label} needs a rank"))),
        };
        CartanType::new(family, rank)
    }

    /// Order of the Weyl group from the classification.
    pub fn weyl_order(&self) -> u128 {
        let fact = |k: usize| (1..=k as u128).product::<u128>();
        let n = self.rank;
        match (self.family, n) {
            (Family::A, _) => fact(n + 1),
            (Family::B | Family::C, _) => (1u128 << n) * fact(n),
            (Family::D, _) => (1u128 << (n - 1)) * fact(n),
            (Family::E, 6) => 51_840,
            (Family::E, 7) => 2_903_040,
            (Family::E, 8) => 696_729_600,
            (Family::F, _) => 1_152,
            (Family::G, _) => 12,
            _ => unreachable!("validated in CartanType::new"),
        }
    }

    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match (self.family, n) {
            (Family::A, _) => n * (n + 1) / 2,
            (Family::B | Family::C, _) => n * n,
            (Family::D, _) => n * (n - 1),
            (Family::E, 6) => 36,
            (Family::E, 7) => 63,
            (Family::E, 8) => 120,
            (Family::F, _) => 24,
            (Family::G, _) => 6,
            _ => unreachable!("validated in CartanType::new"),
        }
    }

    /// Squared lengths of the simple roots and the Dynkin edges (0-based),
    /// following Bourbaki's numbering.
    fn diagram(&self) -> (Vec<i64>, Vec<(usize, usize)>) {
        let n = self.rank;
        let chain = |k: usize| (0..k.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>();
        match self.family {
            Family::A => (vec![2; n], chain(n)),
            Family::B => {
                let mut len = vec![4; n];
                len[n - 1] = 2;
                (len, chain(n))
            }
            Family::C => {
                let mut len = vec![2; n];
                len[n - 1] = 4;
                (len, chain(n))
            }
            Family::D => {
                let mut edges = chain(n - 1);
                edges.push((n - 3, n - 1));
                (vec![2; n], edges)
            }
            Family::E => {
                let mut edges = vec![(0, 2), (1, 3)];
                edges.extend((2..n - 1).map(|i| (i, i + 1)));
                (vec![2; n], edges)
            }
            Family::F => (vec![4, 4, 2, 2], chain(4)),
            Family::G => (vec![2, 6], vec![(0, 1)]),
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CartanType::parse(s, None)
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    cartan_type: CartanType,
    cartan: IntMatrix,
    gram: IntMatrix,
    positive_roots: Vec<Vec<i64>>,
}

impl RootSystem {
    pub fn build(cartan_type: CartanType) -> Result<Self> {
        let n = cartan_type.rank;
        let (lengths, edges) = cartan_type.diagram();
        let mut gram = IntMatrix::zeros(n, n);
        for i in 0..n {
            gram.set(i, i, lengths[i]);
        }
        for &(i, j) in &edges {
            let v = -lengths[i].max(lengths[j]) / 2;
            gram.set(i, j, v);
            gram.set(j, i, v);
        }
        let mut cartan = IntMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                cartan.set(i, j, 2 * gram.get(i, j) / gram.get(i, i));
            }
        }
        let mut rs = RootSystem { cartan_type, cartan, gram, positive_roots: Vec::new() };
        rs.positive_roots = rs.close_positive_roots()?;
        Ok(rs)
    }

    pub fn from_label(label: &str, rank: Option<usize>) -> Result<Self> {
        Self::build(CartanType::parse(label, rank)?)
    }

    fn close_positive_roots(&self) -> Result<Vec<Vec<i64>>> {
        let n = self.rank();
        let reflections = self.simple_reflections();
        let simple: Vec<Vec<i64>> = (0..n).map(|i| unit(n, i)).collect();
        let mut seen: HashSet<Vec<i64>> = simple.iter().cloned().collect();
        let mut queue: VecDeque<Vec<i64>> = simple.into_iter().collect();
        while let Some(root) = queue.pop_front() {
            for (i, s) in reflections.iter().enumerate() {
                if root == unit(n, i) {
                    continue;
                }
                let img = s.apply(&root)?;
                if img.iter().all(|&c| c >= 0) && seen.insert(img.clone()) {
                    queue.push_back(img);
                }
            }
        }
        let mut roots: Vec<Vec<i64>> = seen.into_iter().collect();
        roots.sort_by(|a, b| height(a).cmp(&height(b)).then_with(|| b.cmp(a)));
        Ok(roots)
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank
    }

    /// `cartan[i][j] = 2 (β_i·β_j) / (β_i·β_i)`.
    pub fn cartan(&self) -> &IntMatrix {
        &self.cartan
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    /// Positive roots ordered by height.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// All roots: the positive roots followed by their negatives.
    pub fn roots(&self) -> Vec<Vec<i64>> {
        let neg = self.positive_roots.iter().map(|r| r.iter().map(|x| -x).collect());
        self.positive_roots.iter().cloned().chain(neg).collect()
    }

    pub fn inner(&self, a: &[i64], b: &[i64]) -> i64 {
        let gb = self.gram.apply(b).expect("dimension checked by caller");
        a.iter().zip(&gb).map(|(x, y)| x * y).sum()
    }

    /// `s_i(v) = v - <v, β_i^∨> β_i` as a matrix acting on coefficient columns.
    pub fn simple_reflections(&self) -> Vec<IntMatrix> {
        let n = self.rank();
        (0..n)
            .map(|i| {
                let mut s = IntMatrix::identity(n);
                for j in 0..n {
                    s.set(i, j, s.get(i, j) - self.cartan.get(i, j));
                }
                s
            })
            .collect()
    }

    /// Reflection in the hyperplane orthogonal to `alpha`.
    pub fn reflection(&self, alpha: &[i64]) -> Result<IntMatrix> {
        let n = self.rank();
        if alpha.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: alpha.len() });
        }
        let norm = self.inner(alpha, alpha);
        let mut r = IntMatrix::identity(n);
        for j in 0..n {
            // column j is r(β_j)
            let coroot_pairing = 2 * self.inner(alpha, &unit(n, j));
            if coroot_pairing % norm != 0 {
                return Err(Error::InvalidType("non-crystallographic pairing".into()));
            }
            let c = coroot_pairing / norm;
            for i in 0..n {
                r.set(i, j, r.get(i, j) - c * alpha[i]);
            }
        }
        Ok(r)
    }

    /// Whether the fixed torus of `r_α` equals the hypertorus `χ(α) = 1`,
    /// i.e. whether `2(α·v)/(α·α)` takes the value 1 on the root lattice.
    pub fn reflection_torus_coincides(&self, alpha: &[i64]) -> bool {
        let n = self.rank();
        let norm = self.inner(alpha, alpha);
        let g = (0..n)
            .map(|j| 2 * self.inner(alpha, &unit(n, j)) / norm)
            .fold(0i64, gcd);
        g == 1
    }

    /// Whether `v` is a root (of either sign).
    pub fn is_root(&self, v: &[i64]) -> bool {
        let neg: Vec<i64> = v.iter().map(|x| -x).collect();
        self.positive_roots.iter().any(|r| r.as_slice() == v || *r == neg)
    }
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

fn height(v: &[i64]) -> i64 {
    v.iter().sum()
}

pub(crate) fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_types() -> Vec<CartanType> {
        let mut v = Vec::new();
        for n in 1..=6 {
            v.push(CartanType::new(Family::A, n).unwrap());
        }
        for n in 2..=5 {
            v.push(CartanType::new(Family::B, n).unwrap());
        }
        for n in 3..=5 {
            v.push(CartanType::new(Family::C, n).unwrap());
        }
        for n in 4..=6 {
            v.push(CartanType::new(Family::D, n).unwrap());
        }
        for s in ["E6", "E7", "E8", "F4", "G2"] {
            v.push(s.parse().unwrap());
        }
        v
    }

    #[test]
    fn a2_roots() {
        let rs = RootSystem::from_label("A", Some(2)).unwrap();
        let mut pos = rs.positive_roots().to_vec();
        pos.sort();
        assert_eq!(pos, vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn root_counts_match_classification() {
        for ct in all_types() {
            let rs = RootSystem::build(ct).unwrap();
            assert_eq!(rs.positive_roots().len(), ct.positive_root_count(), "{ct}");
            assert_eq!(rs.roots().len(), 2 * ct.positive_root_count());
        }
        assert_eq!(RootSystem::from_label("E7", None).unwrap().positive_roots().len(), 63);
        assert_eq!(RootSystem::from_label("G2", None).unwrap().positive_roots().len(), 6);
    }

    #[test]
    fn gram_is_positive_definite() {
        fn det(m: &[Vec<i128>]) -> i128 {
            // Bareiss fraction-free elimination
            let n = m.len();
            let mut a = m.to_vec();
            let mut prev = 1i128;
            let mut sign = 1i128;
            for k in 0..n {
                if a[k][k] == 0 {
                    let Some(p) = (k + 1..n).find(|&i| a[i][k] != 0) else { return 0 };
                    a.swap(k, p);
                    sign = -sign;
                }
                for i in k + 1..n {
                    for j in k + 1..n {
                        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
                    }
                }
                prev = a[k][k];
            }
            sign * a[n - 1][n - 1]
        }
        for ct in all_types() {
            let rs = RootSystem::build(ct).unwrap();
            for k in 1..=rs.rank() {
                let minor: Vec<Vec<i128>> =
                    (0..k).map(|i| (0..k).map(|j| rs.gram().get(i, j) as i128).collect()).collect();
                assert!(det(&minor) > 0, "{ct} minor {k}");
            }
        }
    }

    #[test]
    fn simple_reflections_are_involutions_preserving_roots() {
        for ct in all_types() {
            let rs = RootSystem::build(ct).unwrap();
            let roots: HashSet<Vec<i64>> = rs.roots().into_iter().collect();
            for s in rs.simple_reflections() {
                assert!(s.mul(&s).unwrap().is_identity());
                for r in &roots {
                    assert!(roots.contains(&s.apply(r).unwrap()), "{ct}");
                }
            }
        }
    }

    #[test]
    fn a2_first_reflection() {
        let rs = RootSystem::from_label("A2", None).unwrap();
        let s = &rs.simple_reflections()[0];
        assert_eq!(s.apply(&[1, 0]).unwrap(), vec![-1, 0]);
        assert_eq!(s.apply(&[0, 1]).unwrap(), vec![1, 1]);
    }

    #[test]
    fn root_reflections_match_simple_ones() {
        let rs = RootSystem::from_label("F4", None).unwrap();
        let simple = rs.simple_reflections();
        for (i, s) in simple.iter().enumerate() {
            assert_eq!(&rs.reflection(&unit(4, i)).unwrap(), s);
        }
        for r in rs.positive_roots() {
            let m = rs.reflection(r).unwrap();
            let neg: Vec<i64> = r.iter().map(|x| -x).collect();
            assert_eq!(m.apply(r).unwrap(), neg);
        }
    }

    #[test]
    fn positive_roots_have_uniform_sign() {
        for ct in all_types() {
            let rs = RootSystem::build(ct).unwrap();
            for r in rs.positive_roots() {
                assert!(r.iter().all(|&c| c >= 0) && r.iter().any(|&c| c > 0));
            }
        }
    }

    #[test]
    fn torus_coincidence() {
        for n in 2..=5 {
            let rs = RootSystem::from_label("A", Some(n)).unwrap();
            assert!(rs.roots().iter().all(|r| rs.reflection_torus_coincides(r)));
        }
        // B2 in Bourbaki order: β1 = e1 - e2 (long), β2 = e2 (short)
        let b2 = RootSystem::from_label("B2", None).unwrap();
        let short_e2 = [0, 1];
        let short_e1 = [1, 1];
        assert!(!b2.reflection_torus_coincides(&short_e2));
        assert!(!b2.reflection_torus_coincides(&short_e1));
        // long roots: e1 - e2 pairs to (2, -1) and e1 + e2 = β1 + 2β2 pairs to (0, 1)
        assert!(b2.reflection_torus_coincides(&[1, 0]));
        assert!(b2.reflection_torus_coincides(&[1, 2]));
    }

    #[test]
    fn parse_rejects_invalid() {
        assert!(CartanType::parse("B", Some(1)).is_err());
        assert!(CartanType::parse("E", Some(5)).is_err());
        assert!(CartanType::parse("X3", None).is_err());
        assert!(CartanType::parse("A", None).is_err());
        assert!(CartanType::parse("E6", Some(7)).is_err());
        assert_eq!(CartanType::parse("g", None).unwrap().to_string(), "G2");
    }
}
