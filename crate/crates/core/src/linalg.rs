//! Fraction-free elimination over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Determinant of a square integer matrix by Bareiss elimination.
pub fn bareiss_determinant(matrix: &[Vec<BigInt>]) -> BigInt {
    let n = matrix.len();
    if n == 0 {
        return BigInt::one();
    }
    assert!(matrix.iter().all(|r| r.len() == n), "matrix must be square");
    let mut m: Vec<Vec<BigInt>> = matrix.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Rank and pivot positions of an integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankProfile {
    pub rank: usize,
    /// Original row index of the `k`-th pivot.
    pub pivot_rows: Vec<usize>,
    /// Column of the `k`-th pivot, increasing.
    pub pivot_cols: Vec<usize>,
}

/// Fraction-free Gaussian elimination, choosing in each column the
/// remaining row of largest absolute value. The first `k` pivot rows and
/// columns always span a nonsingular `k × k` submatrix.
pub fn integer_rank_profile(matrix: &[Vec<BigInt>], cols: usize) -> RankProfile {
    let mut m: Vec<Vec<BigInt>> = matrix.to_vec();
    let mut rows: Vec<usize> = (0..m.len()).collect();
    let mut profile = RankProfile {
        rank: 0,
        pivot_rows: Vec::new(),
        pivot_cols: Vec::new(),
    };
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len())
            .filter(|&i| !m[i][c].is_zero())
            .max_by(|&x, &y| m[x][c].abs().cmp(&m[y][c].abs()).then(y.cmp(&x)))
        else {
            continue;
        };
        m.swap(r, p);
        rows.swap(r, p);
        for i in r + 1..m.len() {
            for j in c + 1..cols {
                let v = &m[i][j] * &m[r][c] - &m[i][c] * &m[r][j];
                m[i][j] = v / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        profile.pivot_rows.push(rows[r]);
        profile.pivot_cols.push(c);
        profile.rank += 1;
        r += 1;
    }
    profile
}

/// Scales each row of a rational matrix by the lcm of its denominators.
pub fn clear_denominators(rows: &[Vec<BigRational>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    /// Permutation expansion.
    fn leibniz(a: &[Vec<BigInt>]) -> BigInt {
        fn rec(a: &[Vec<BigInt>], row: usize, used: &mut Vec<bool>, sign: i64) -> BigInt {
            if row == a.len() {
                return BigInt::from(sign);
            }
            let mut total = BigInt::zero();
            let mut inversions_before = 0;
            for c in 0..a.len() {
                if used[c] {
                    continue;
                }
                // inversions contributed by placing c: number of unused columns smaller than c
                let s = if inversions_before % 2 == 0 {
                    sign
                } else {
                    -sign
                };
                used[c] = true;
                total += &a[row][c] * rec(a, row + 1, used, s);
                used[c] = false;
                inversions_before += 1;
            }
            total
        }
        rec(a, 0, &mut vec![false; a.len()], 1)
    }

    #[test]
    fn determinants() {
        assert_eq!(
            bareiss_determinant(&m(&[&[10, 6], &[15, 10]])),
            BigInt::from(10)
        );
        assert_eq!(
            bareiss_determinant(&m(&[&[10, 3], &[21, 10]])),
            BigInt::from(37)
        );
        assert_eq!(
            bareiss_determinant(&m(&[&[0, 1], &[1, 0]])),
            BigInt::from(-1)
        );
        assert_eq!(bareiss_determinant(&m(&[&[1, 2], &[2, 4]])), BigInt::zero());
        assert_eq!(bareiss_determinant(&[]), BigInt::one());
        let a = m(&[&[2, -1, 0, 3], &[0, 0, 5, 1], &[7, 2, -3, 0], &[1, 1, 1, 1]]);
        assert_eq!(bareiss_determinant(&a), leibniz(&a));
    }

    #[test]
    fn rank_profiles() {
        assert_eq!(integer_rank_profile(&m(&[&[0, 0], &[0, 0]]), 2).rank, 0);
        let outer = m(&[&[2, 4, 6], &[-1, -2, -3]]);
        assert_eq!(integer_rank_profile(&outer, 3).rank, 1);
        let a = m(&[&[0, 1, 2, 3], &[0, 2, 4, 7], &[1, 1, 1, 1]]);
        let p = integer_rank_profile(&a, 4);
        assert_eq!(p.rank, 3);
        for k in 1..=p.rank {
            let sub: Vec<Vec<BigInt>> = p.pivot_rows[..k]
                .iter()
                .map(|&r| p.pivot_cols[..k].iter().map(|&c| a[r][c].clone()).collect())
                .collect();
            assert!(!bareiss_determinant(&sub).is_zero());
        }
    }
}
