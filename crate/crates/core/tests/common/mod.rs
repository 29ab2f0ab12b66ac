//! Independent reference computations shared by the integration tests.
//! Nothing here goes through the poset or Möbius machinery of the crate.

#![allow(dead_code)]

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn bareiss_det(mut a: Vec<Vec<i128>>) -> i128 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
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

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Rank of the span of `rows` and the gcd of its maximal nonzero minors,
/// which is the index of the span in its saturation.
pub fn rank_and_minor_gcd(rows: &[Vec<i64>], n: usize) -> (usize, i128) {
    for r in (1..=rows.len().min(n)).rev() {
        let mut g = 0;
        for rs in subsets(rows.len(), r) {
            for cs in subsets(n, r) {
                let m: Vec<Vec<i128>> = rs.iter().map(|&i| cs.iter().map(|&j| rows[i][j] as i128).collect()).collect();
                g = gcd(g, bareiss_det(m));
            }
        }
        if g != 0 {
            return (r, g);
        }
    }
    (0, 1)
}

/// Poincaré polynomial of the complement of the hypertori `χ^v = 1` in
/// `(C*)^n` by inclusion–exclusion over all subsets `S`: the intersection
/// has `m(S)` components, each a torus of dimension `n - rank S`.
pub fn brute_force_poincare(n: usize, vectors: &[Vec<i64>]) -> Vec<i64> {
    let mut p = vec![0i64; n + 1];
    let k = vectors.len();
    assert!(k <= 20);
    for mask in 0u32..(1 << k) {
        let rows: Vec<Vec<i64>> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| vectors[i].clone()).collect();
        let (r, m) = rank_and_minor_gcd(&rows, n);
        let sign = if rows.len() % 2 == 0 { 1 } else { -1 };
        // (-1)^{|S|} m(S) (-t)^r (1+t)^{n-r}
        let coef = sign * m as i64 * if r % 2 == 0 { 1 } else { -1 };
        for (j, b) in binomials(n - r).into_iter().enumerate() {
            p[r + j] += coef * b;
        }
    }
    p
}

pub fn binomials(n: usize) -> Vec<i64> {
    let mut row = vec![1i64];
    for _ in 0..n {
        let mut next = vec![1i64; row.len() + 1];
        for i in 1..row.len() {
            next[i] = row[i - 1] + row[i];
        }
        row = next;
    }
    row
}

/// `∏ (1 + a_i t)`.
pub fn linear_product(a: &[i64]) -> Vec<i64> {
    a.iter().fold(vec![1i64], |p, &x| {
        let mut q = vec![0i64; p.len() + 1];
        for (i, &c) in p.iter().enumerate() {
            q[i] += c;
            q[i + 1] += c * x;
        }
        q
    })
}

/// Degrees of the basic invariants, by type.
pub fn invariant_degrees(label: &str) -> Vec<u128> {
    let family = &label[..1];
    let n: u128 = label[1..].parse().unwrap();
    match family {
        "A" => (2..=n + 1).collect(),
        "B" | "C" => (1..=n).map(|i| 2 * i).collect(),
        "D" => (1..n).map(|i| 2 * i).chain([n]).collect(),
        "E" => match n {
            6 => vec![2, 5, 6, 8, 9, 12],
            7 => vec![2, 6, 8, 10, 12, 14, 18],
            _ => vec![2, 8, 12, 14, 18, 20, 24, 30],
        },
        "F" => vec![2, 6, 8, 12],
        _ => vec![2, 6],
    }
}

pub fn elementary_symmetric(a: &[i64], k: usize) -> i64 {
    subsets(a.len(), k).iter().map(|s| s.iter().map(|&i| a[i]).product::<i64>()).sum()
}

/// `h_k(a)` by summing over multisets.
pub fn complete_symmetric(a: &[i64], k: usize) -> i128 {
    fn go(a: &[i64], start: usize, k: usize, acc: i128) -> i128 {
        if k == 0 {
            return acc;
        }
        (start..a.len()).map(|i| go(a, i, k - 1, acc * a[i] as i128)).sum()
    }
    go(a, 0, k, 1)
}

/// Published decomposition tables, as (name, multiplicities by degree).
pub fn g2_table() -> Vec<(&'static str, Vec<i64>)> {
    vec![
        ("phi_{1}^{0}", vec![1, 2, 2]),
        ("phi_{1}^{6}", vec![0, 0, 1]),
        ("phi_{1,1}^{3}", vec![0, 0, 1]),
        ("phi_{1,2}^{3}", vec![0, 0, 1]),
        ("phi_{2}^{1}", vec![0, 1, 3]),
        ("phi_{2}^{2}", vec![0, 2, 4]),
    ]
}

pub fn f4_table() -> Vec<(&'static str, Vec<i64>)> {
    vec![
        ("phi_{1}^{0}", vec![1, 2, 2, 3, 3]),
        ("phi_{1}^{24}", vec![0, 0, 0, 0, 1]),
        ("phi_{1,1}^{12}", vec![0, 0, 0, 1, 2]),
        ("phi_{1,2}^{12}", vec![0, 0, 0, 2, 3]),
        ("phi_{2,1}^{16}", vec![0, 0, 0, 1, 3]),
        ("phi_{2,2}^{4}", vec![0, 1, 3, 6, 6]),
        ("phi_{2,2}^{16}", vec![0, 0, 0, 2, 4]),
        ("phi_{2,1}^{4}", vec![0, 1, 3, 5, 5]),
        ("phi_{4}^{1}", vec![0, 1, 2, 3, 6]),
        ("phi_{4,2}^{7}", vec![0, 0, 0, 3, 7]),
        ("phi_{4,1}^{7}", vec![0, 0, 0, 2, 6]),
        ("phi_{4}^{13}", vec![0, 0, 0, 1, 5]),
        ("phi_{4}^{8}", vec![0, 0, 2, 8, 10]),
        ("phi_{6,2}^{6}", vec![0, 0, 1, 7, 12]),
        ("phi_{6,1}^{6}", vec![0, 0, 1, 9, 14]),
        ("phi_{8,1}^{3}", vec![0, 0, 2, 7, 13]),
        ("phi_{8,2}^{9}", vec![0, 0, 0, 5, 13]),
        ("phi_{8,2}^{3}", vec![0, 0, 2, 8, 14]),
        ("phi_{8,1}^{9}", vec![0, 0, 0, 4, 12]),
        ("phi_{9}^{10}", vec![0, 0, 0, 7, 16]),
        ("phi_{9,1}^{6}", vec![0, 0, 3, 12, 18]),
        ("phi_{9,2}^{6}", vec![0, 0, 4, 15, 20]),
        ("phi_{9}^{2}", vec![0, 2, 9, 20, 22]),
        ("phi_{12}^{4}", vec![0, 0, 3, 16, 25]),
        ("phi_{16}^{5}", vec![0, 0, 2, 12, 26]),
    ]
}

pub const A2EX: [[i64; 2]; 4] = [[1, 0], [2, 1], [1, 2], [0, 1]];

pub fn e6_table() -> Vec<(&'static str, Vec<i64>)> {
    vec![
        ("phi_{1}^{0}", vec![1, 1, 0, 0, 0, 1, 2]),
        ("phi_{1}^{36}", vec![0, 0, 0, 0, 0, 0, 1]),
        ("phi_{6}^{25}", vec![0, 0, 0, 0, 0, 4, 6]),
        ("phi_{6}^{1}", vec![0, 1, 1, 1, 5, 10, 8]),
        ("phi_{10}^{9}", vec![0, 0, 0, 1, 7, 12, 12]),
        ("phi_{15}^{17}", vec![0, 0, 0, 0, 4, 15, 16]),
        ("phi_{15}^{16}", vec![0, 0, 0, 0, 3, 14, 18]),
        ("phi_{15}^{5}", vec![0, 0, 1, 5, 12, 20, 17]),
        ("phi_{15}^{4}", vec![0, 1, 2, 4, 10, 19, 19]),
        ("phi_{20}^{20}", vec![0, 0, 0, 0, 2, 17, 21]),
        ("phi_{20}^{2}", vec![0, 1, 3, 6, 15, 30, 25]),
        ("phi_{20}^{10}", vec![0, 0, 0, 2, 11, 24, 23]),
        ("phi_{24}^{12}", vec![0, 0, 0, 1, 10, 26, 27]),
        ("phi_{24}^{6}", vec![0, 0, 0, 4, 16, 31, 29]),
        ("phi_{30}^{15}", vec![0, 0, 0, 0, 9, 30, 33]),
        ("phi_{30}^{3}", vec![0, 0, 2, 9, 24, 41, 36]),
        ("phi_{60}^{11}", vec![0, 0, 0, 3, 23, 68, 66]),
        ("phi_{60}^{5}", vec![0, 0, 2, 11, 38, 80, 69]),
        ("phi_{60}^{8}", vec![0, 0, 1, 6, 30, 74, 69]),
        ("phi_{64}^{13}", vec![0, 0, 0, 1, 21, 69, 69]),
        ("phi_{64}^{4}", vec![0, 0, 3, 14, 45, 88, 74]),
        ("phi_{80}^{7}", vec![0, 0, 0, 9, 45, 99, 91]),
        ("phi_{81}^{6}", vec![0, 0, 2, 14, 50, 103, 92]),
        ("phi_{81}^{10}", vec![0, 0, 0, 5, 36, 94, 90]),
        ("phi_{90}^{8}", vec![0, 0, 0, 10, 50, 111, 101]),
    ]
}
pub fn e7_table() -> Vec<(&'static str, Vec<i64>)> {
    vec![
        ("phi_{1}^{0}", vec![1, 1, 0, 0, 0, 0, 2, 2]),
        ("phi_{1}^{63}", vec![0, 0, 0, 0, 0, 0, 0, 1]),
        ("phi_{7}^{46}", vec![0, 0, 0, 0, 0, 0, 4, 8]),
        ("phi_{7}^{1}", vec![0, 1, 1, 0, 1, 3, 9, 10]),
        ("phi_{15}^{7}", vec![0, 0, 0, 1, 4, 7, 14, 21]),
        ("phi_{15}^{28}", vec![0, 0, 0, 0, 0, 3, 18, 19]),
        ("phi_{21}^{36}", vec![0, 0, 0, 0, 0, 2, 19, 25]),
        ("phi_{21}^{3}", vec![0, 0, 1, 2, 3, 11, 26, 30]),
        ("phi_{21}^{33}", vec![0, 0, 0, 0, 0, 2, 16, 23]),
        ("phi_{21}^{6}", vec![0, 0, 1, 3, 7, 17, 34, 34]),
        ("phi_{27}^{2}", vec![0, 1, 2, 3, 8, 25, 50, 43]),
        ("phi_{27}^{37}", vec![0, 0, 0, 0, 0, 1, 16, 30]),
        ("phi_{35}^{31}", vec![0, 0, 0, 0, 0, 3, 23, 43]),
        ("phi_{35}^{4}", vec![0, 1, 2, 3, 9, 30, 63, 52]),
        ("phi_{35}^{22}", vec![0, 0, 0, 0, 2, 16, 45, 47]),
        ("phi_{35}^{13}", vec![0, 0, 0, 1, 4, 14, 36, 44]),
        ("phi_{56}^{30}", vec![0, 0, 0, 0, 0, 11, 53, 74]),
        ("phi_{56}^{3}", vec![0, 0, 1, 3, 9, 30, 70, 71]),
        ("phi_{70}^{18}", vec![0, 0, 0, 0, 5, 30, 86, 101]),
        ("phi_{70}^{9}", vec![0, 0, 0, 1, 6, 30, 80, 85]),
        ("phi_{84}^{12}", vec![0, 0, 0, 1, 9, 50, 127, 117]),
        ("phi_{84}^{15}", vec![0, 0, 0, 0, 5, 27, 78, 108]),
        ("phi_{105}^{5}", vec![0, 0, 1, 4, 15, 53, 122, 134]),
        ("phi_{105}^{26}", vec![0, 0, 0, 0, 1, 29, 113, 137]),
        ("phi_{105}^{12}", vec![0, 0, 0, 2, 14, 63, 154, 147]),
        ("phi_{105}^{6}", vec![0, 0, 1, 7, 27, 78, 160, 159]),
        ("phi_{105}^{15}", vec![0, 0, 0, 0, 5, 34, 101, 133]),
        ("phi_{105}^{21}", vec![0, 0, 0, 0, 1, 20, 94, 124]),
        ("phi_{120}^{4}", vec![0, 0, 2, 9, 33, 99, 194, 185]),
        ("phi_{120}^{25}", vec![0, 0, 0, 0, 0, 19, 99, 136]),
        ("phi_{168}^{6}", vec![0, 0, 1, 7, 36, 128, 267, 249]),
        ("phi_{168}^{21}", vec![0, 0, 0, 0, 2, 35, 145, 200]),
        ("phi_{189}^{22}", vec![0, 0, 0, 0, 5, 61, 215, 255]),
        ("phi_{189}^{20}", vec![0, 0, 0, 0, 7, 73, 233, 251]),
        ("phi_{189}^{5}", vec![0, 0, 1, 6, 25, 90, 216, 239]),
        ("phi_{189}^{7}", vec![0, 0, 0, 4, 23, 86, 205, 243]),
        ("phi_{189}^{17}", vec![0, 0, 0, 0, 6, 55, 182, 226]),
        ("phi_{189}^{10}", vec![0, 0, 0, 5, 33, 125, 277, 276]),
        ("phi_{210}^{10}", vec![0, 0, 0, 4, 32, 128, 295, 307]),
        ("phi_{210}^{6}", vec![0, 0, 2, 13, 51, 157, 326, 313]),
        ("phi_{210}^{13}", vec![0, 0, 0, 0, 9, 68, 214, 253]),
        ("phi_{210}^{21}", vec![0, 0, 0, 0, 2, 45, 185, 248]),
        ("phi_{216}^{16}", vec![0, 0, 0, 1, 13, 99, 287, 296]),
        ("phi_{216}^{9}", vec![0, 0, 0, 3, 21, 87, 224, 275]),
        ("phi_{280}^{8}", vec![0, 0, 2, 9, 47, 191, 427, 404]),
        ("phi_{280}^{17}", vec![0, 0, 0, 0, 7, 73, 257, 343]),
        ("phi_{280}^{18}", vec![0, 0, 0, 0, 19, 126, 351, 388]),
        ("phi_{280}^{9}", vec![0, 0, 0, 4, 28, 121, 306, 345]),
        ("phi_{315}^{16}", vec![0, 0, 0, 0, 21, 141, 393, 441]),
        ("phi_{315}^{7}", vec![0, 0, 0, 4, 31, 136, 347, 385]),
        ("phi_{336}^{14}", vec![0, 0, 0, 2, 33, 179, 456, 468]),
        ("phi_{336}^{11}", vec![0, 0, 0, 2, 26, 128, 344, 416]),
        ("phi_{378}^{14}", vec![0, 0, 0, 2, 33, 188, 498, 533]),
        ("phi_{378}^{9}", vec![0, 0, 0, 2, 28, 150, 405, 467]),
        ("phi_{405}^{15}", vec![0, 0, 0, 0, 12, 118, 397, 480]),
        ("phi_{405}^{8}", vec![0, 0, 0, 11, 73, 268, 588, 598]),
        ("phi_{420}^{10}", vec![0, 0, 0, 7, 61, 258, 598, 602]),
        ("phi_{420}^{13}", vec![0, 0, 0, 0, 20, 139, 417, 510]),
        ("phi_{512}^{12}", vec![0, 0, 0, 6, 61, 290, 710, 731]),
        ("phi_{512}^{11}", vec![0, 0, 0, 2, 29, 180, 524, 627]),
    ]
}

pub mod props;
