//! Small exact linear algebra over the integers and rationals.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::scalar::{clear_denominators, Scalar};

/// Determinant by fraction-free (Bareiss) elimination.
pub fn det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = !sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

pub fn det3(rows: [&[BigInt]; 3], cols: [usize; 3]) -> BigInt {
    let e = |r: usize, c: usize| &rows[r][cols[c]];
    e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0))
        + e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0))
}

pub fn det4(rows: [&[BigInt]; 4]) -> BigInt {
    det(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
}

/// Rank by fraction-free elimination.
pub fn rank(m: &[Vec<BigInt>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let rows = a.len();
    if rows == 0 {
        return 0;
    }
    let cols = a[0].len();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            if a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone();
            let piv = a[r][c].clone();
            for j in c..cols {
                a[i][j] = &a[i][j] * &piv - &a[r][j] * &f;
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// Basis of the right null space of a rational matrix, each vector scaled to
/// integers.
pub fn nullspace(m: &[Vec<Scalar>], cols: usize) -> Vec<Vec<BigInt>> {
    let mut a: Vec<Vec<Scalar>> = m.to_vec();
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for j in 0..cols {
            a[r][j] = &a[r][j] * &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..cols {
                    let v = &a[r][j] * &f;
                    a[i][j] -= v;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![Scalar::zero(); cols];
            v[fc] = Scalar::one();
            for (pr, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[pr][fc].clone();
            }
            clear_denominators(&v)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn im(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn determinants() {
        assert_eq!(det(&im(&[&[2, 0], &[0, 3]])), BigInt::from(6));
        assert_eq!(det(&im(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        let m = im(&[&[1, 0, 0, 0], &[1, 1, 0, 0], &[1, 0, 1, 0], &[1, 1, 1, 1]]);
        assert_eq!(det(&m), BigInt::from(1));
        let m = im(&[&[1, 0, 0, 0], &[1, 1, 0, 1], &[1, 0, 1, 1], &[1, 1, 1, 2]]);
        assert_eq!(det(&m), BigInt::zero());
    }

    #[test]
    fn ranks() {
        assert_eq!(rank(&im(&[&[1, 2, 3], &[2, 4, 6]])), 1);
        assert_eq!(rank(&im(&[&[1, 2, 3], &[0, 1, 0], &[1, 3, 3]])), 2);
        assert_eq!(rank(&im(&[&[0, 0], &[0, 0]])), 0);
    }

    #[test]
    fn nullspaces() {
        let m = vec![vec![int(1), int(1), int(0)], vec![int(0), int(1), int(1)]];
        let ns = nullspace(&m, 3);
        assert_eq!(ns.len(), 1);
        assert_eq!(ns[0], vec![BigInt::from(1), BigInt::from(-1), BigInt::from(1)]);
    }
}
