//! Determinants over the integers and over prime fields.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Fraction-free (Bareiss) elimination.
pub fn det_bigint(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, swap);
            sign = -sign;
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
    if sign < 0 {
        -d
    } else {
        d
    }
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a % p, p - 2, p)
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    r
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

/// Gaussian elimination over `F_p`; entries must already be reduced.
/// The matrix is consumed as scratch space.
pub fn det_mod(a: &mut [Vec<u64>], p: u64) -> u64 {
    let n = a.len();
    let mut det = 1 % p;
    for c in 0..n {
        let Some(piv) = (c..n).find(|&r| a[r][c] != 0) else {
            return 0;
        };
        if piv != c {
            a.swap(piv, c);
            det = (p - det) % p;
        }
        let d = a[c][c];
        det = mul_mod(det, d, p);
        let inv = inv_mod(d, p);
        for r in c + 1..n {
            let f = mul_mod(a[r][c], inv, p);
            if f == 0 {
                continue;
            }
            for k in c..n {
                let sub = mul_mod(f, a[c][k], p);
                a[r][k] = (a[r][k] + p - sub) % p;
            }
        }
    }
    det
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn bareiss_small() {
        assert_eq!(det_bigint(m(&[&[2, 1], &[1, 3]])), BigInt::from(5));
        assert_eq!(det_bigint(m(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(det_bigint(m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]])), BigInt::from(-3));
        assert_eq!(det_bigint(m(&[&[1, 2], &[2, 4]])), BigInt::zero());
    }

    #[test]
    fn mod_p_agrees_with_integers() {
        let a = [[3i64, -1, 4, 1], [5, 9, -2, 6], [5, 3, 5, -8], [9, 7, 9, 3]];
        let exact = det_bigint(a.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect());
        for p in [2u64, 3, 5, 7, 101] {
            let mut am: Vec<Vec<u64>> =
                a.iter().map(|r| r.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect()).collect();
            let want: i64 = (exact.clone() % p as i64).try_into().unwrap();
            assert_eq!(det_mod(&mut am, p), want.rem_euclid(p as i64) as u64, "p={p}");
        }
    }

    #[test]
    fn primes() {
        let ps: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(ps, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }
}
