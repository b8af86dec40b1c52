//! Small dense integer linear algebra on rows of `i64`.

use alloc::vec;
use alloc::vec::Vec;

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Determinant by fraction-free elimination.
pub fn det(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(i, k);
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

pub fn rank(rows: &[Vec<i64>], cols: usize) -> usize {
    let mut a: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, p);
        for i in 0..a.len() {
            if i != r && a[i][c] != 0 {
                let (f, g) = (a[i][c], a[r][c]);
                for j in 0..cols {
                    a[i][j] = a[i][j] * g - a[r][j] * f;
                }
                let content = a[i].iter().fold(0i128, |acc, &x| gcd128(acc, x));
                if content > 1 {
                    for x in a[i].iter_mut() {
                        *x /= content;
                    }
                }
            }
        }
        r += 1;
        if r == a.len() {
            break;
        }
    }
    r
}

fn gcd128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn gcd(a: i64, b: i64) -> i64 {
    gcd128(a as i128, b as i128) as i64
}

fn minor(m: &[Vec<i64>], skip_row: Option<usize>, skip_col: usize) -> Vec<Vec<i64>> {
    m.iter()
        .enumerate()
        .filter(|(i, _)| Some(*i) != skip_row)
        .map(|(_, r)| {
            r.iter()
                .enumerate()
                .filter(|(j, _)| *j != skip_col)
                .map(|(_, &x)| x)
                .collect()
        })
        .collect()
}

/// Primitive generator of the kernel of `k-1` rows in `Z^k` (generalized
/// cross product), or `None` if the rows are dependent.
pub fn primitive_normal(rows: &[Vec<i64>], k: usize) -> Option<Vec<i64>> {
    debug_assert_eq!(rows.len() + 1, k);
    let mut v: Vec<i64> = (0..k)
        .map(|j| {
            let d = det(&minor(rows, None, j)) as i64;
            if j % 2 == 0 {
                d
            } else {
                -d
            }
        })
        .collect();
    let g = v.iter().fold(0, |acc, &x| gcd(acc, x));
    if g == 0 {
        return None;
    }
    for x in v.iter_mut() {
        *x /= g;
    }
    Some(v)
}

/// Inverse of a unimodular square matrix (adjugate over the determinant).
pub fn inverse_unimodular(m: &[Vec<i64>]) -> Option<Vec<Vec<i64>>> {
    let n = m.len();
    let d = det(m);
    if d != 1 && d != -1 {
        return None;
    }
    let mut inv = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let c = det(&minor(m, Some(j), i));
            let c = if (i + j) % 2 == 0 { c } else { -c };
            inv[i][j] = (c * d) as i64;
        }
    }
    Some(inv)
}

/// All size-`r` subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(r);
    fn rec(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < r - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, r, cur, out);
            cur.pop();
        }
    }
    rec(0, n, r, &mut cur, &mut out);
    out
}

/// Integer solution `m` of `rows * m = v` for a square nonsingular system, if
/// one exists (Cramer's rule).
pub fn solve_integer(rows: &[Vec<i64>], v: &[i64]) -> Option<Vec<i64>> {
    let n = rows.len();
    let d = det(rows);
    if d == 0 {
        return None;
    }
    let mut out = Vec::with_capacity(n);
    for j in 0..n {
        let replaced: Vec<Vec<i64>> = rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut r = r.clone();
                r[j] = v[i];
                r
            })
            .collect();
        let dj = det(&replaced);
        if dj % d != 0 {
            return None;
        }
        out.push((dj / d) as i64);
    }
    Some(out)
}
