//! Small exact linear algebra over `Z` and `Q`.
//!
//! Matrices here are tiny (at most rank 8 for root data, at most a dozen rows
//! for torus weight matrices), so everything is dense `Vec<Vec<_>>`.

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

pub type Rational = Ratio<i64>;
pub type IntMatrix = Vec<Vec<i64>>;
pub type RatMatrix = Vec<Vec<Rational>>;

pub fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

pub fn transpose<T: Clone>(m: &[Vec<T>]) -> Vec<Vec<T>> {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len())
        .map(|j| m.iter().map(|row| row[j].clone()).collect())
        .collect()
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn det(m: &[Vec<i64>]) -> i64 {
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
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            let Some(swap) = (k + 1..n).find(|&i| a[i][k] != 0) else {
                return 0;
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    (sign * a[n - 1][n - 1]) as i64
}

/// Exact inverse over `Q`; `None` for singular input.
pub fn inverse(m: &[Vec<i64>]) -> Option<RatMatrix> {
    let n = m.len();
    let mut a: RatMatrix = m
        .iter()
        .map(|r| r.iter().map(|&x| Rational::from_integer(x)).collect())
        .collect();
    let mut inv: RatMatrix = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col];
        for j in 0..n {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for j in 0..n {
                    let t = a[col][j] * f;
                    a[r][j] -= t;
                    let t = inv[col][j] * f;
                    inv[r][j] -= t;
                }
            }
        }
    }
    Some(inv)
}

pub fn mat_vec(m: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

pub fn rat_mat_vec(m: &[Vec<Rational>], v: &[Rational]) -> Vec<Rational> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
        })
        .collect()
}

pub fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> IntMatrix {
    let inner = b.len();
    let cols = if inner == 0 { 0 } else { b[0].len() };
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).map(|k| row[k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

/// A diagonalization `L · A · R = diag(d)` with `L`, `R` unimodular.
///
/// Only `L` is recorded: the quotient `Z^rows / A·Z^cols` is isomorphic to
/// `⊕ Z/d_i` (with `d_i = 0` for `i >= cols` or zero pivots), and `L` maps a
/// vector to coordinates in which that decomposition is diagonal.
#[derive(Debug, Clone)]
pub struct Diagonalization {
    /// One entry per row; rows past the rank carry 0.
    pub diag: Vec<i64>,
    pub left: IntMatrix,
}

pub fn diagonalize(a: &[Vec<i64>]) -> Diagonalization {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut m: IntMatrix = a.to_vec();
    let mut left = identity(rows);
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry in the trailing block becomes the pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if m[i][j] != 0
                    && best.map_or(true, |(bi, bj)| m[i][j].abs() < m[bi][bj].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        m.swap(t, pi);
        left.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        let mut clean = true;
        for i in t + 1..rows {
            let q = Integer::div_floor(&m[i][t], &m[t][t]);
            if q != 0 {
                for j in 0..cols {
                    m[i][j] -= q * m[t][j];
                }
                for j in 0..rows {
                    left[i][j] -= q * left[t][j];
                }
            }
            if m[i][t] != 0 {
                clean = false;
            }
        }
        for j in t + 1..cols {
            let q = Integer::div_floor(&m[t][j], &m[t][t]);
            if q != 0 {
                for row in m.iter_mut() {
                    row[j] -= q * row[t];
                }
            }
            if m[t][j] != 0 {
                clean = false;
            }
        }
        if clean {
            t += 1;
        }
    }
    let diag = (0..rows)
        .map(|i| if i < cols { m[i][i].abs() } else { 0 })
        .collect();
    Diagonalization { diag, left }
}

pub fn gcd(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

pub fn is_integral(x: &Rational) -> bool {
    x.is_integer()
}

/// Fractional part in `[0, 1)`.
pub fn frac(x: &Rational) -> Rational {
    x - x.floor()
}

pub fn abs(x: &Rational) -> Rational {
    x.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let m = vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]];
        assert_eq!(det(&m), 4);
        let singular = vec![vec![1, 2], vec![2, 4]];
        assert_eq!(det(&singular), 0);
        let needs_swap = vec![vec![0, 1], vec![1, 0]];
        assert_eq!(det(&needs_swap), -1);
    }

    #[test]
    fn inverse_roundtrip() {
        let m = vec![vec![2, -1], vec![-3, 2]];
        let inv = inverse(&m).unwrap();
        assert_eq!(inv[0][0], Rational::from_integer(2));
        assert_eq!(inv[1][0], Rational::from_integer(3));
        assert!(inverse(&[vec![1, 1], vec![1, 1]]).is_none());
    }

    #[test]
    fn diagonalization_quotient_order() {
        // Z^2 / <(2,0),(0,3)> has order 6; the row vector (1,1) generates it.
        let a = vec![vec![2, 0], vec![0, 3]];
        let d = diagonalize(&a);
        let order: i64 = d.diag.iter().product();
        assert_eq!(order, 6);
        // Extra rows become free directions.
        let tall = vec![vec![1], vec![1], vec![-1]];
        let d = diagonalize(&tall);
        assert_eq!(d.diag, vec![1, 0, 0]);
        assert_eq!(det(&d.left).abs(), 1);
    }
}
