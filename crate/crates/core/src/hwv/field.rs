use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `2^31 - 1`.
pub const DEFAULT_PRIME: u64 = 2_147_483_647;
/// `2^61 - 1`, for confirmation runs.
pub const LARGE_PRIME: u64 = 2_305_843_009_213_693_951;

/// Arithmetic modulo a prime `p < 2^63`. Elements are plain `u64` values in
/// `0..p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeField {
    p: u64,
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField { p: DEFAULT_PRIME }
    }
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= 1 << 63 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    /// A field large enough to have `m` distinct coordinates.
    pub fn for_dimension(p: u64, m: usize) -> Result<Self> {
        let f = Self::new(p)?;
        if p <= m as u64 {
            return Err(Error::InvalidParameters(format!("prime {p} must exceed m = {m}")));
        }
        Ok(f)
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((u128::from(a) * u128::from(b)) % u128::from(self.p)) as u64
    }

    pub fn pow(&self, mut base: u64, mut e: u64) -> u64 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `a` must be nonzero.
    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(a % self.p != 0);
        self.pow(a, self.p - 2)
    }

    pub fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    /// Determinant of a square matrix by elimination; consumes the rows.
    pub fn det(&self, mut rows: Vec<Vec<u64>>) -> u64 {
        let s = rows.len();
        let mut det = 1u64;
        for c in 0..s {
            let Some(pivot) = (c..s).find(|&r| rows[r][c] != 0) else {
                return 0;
            };
            if pivot != c {
                rows.swap(pivot, c);
                det = self.neg(det);
            }
            det = self.mul(det, rows[c][c]);
            let inv = self.inv(rows[c][c]);
            for r in c + 1..s {
                if rows[r][c] == 0 {
                    continue;
                }
                let factor = self.mul(rows[r][c], inv);
                for k in c..s {
                    let t = self.mul(factor, rows[c][k]);
                    rows[r][k] = self.sub(rows[r][k], t);
                }
            }
        }
        det
    }

    /// Rank of a matrix by elimination.
    pub fn rank(&self, mut rows: Vec<Vec<u64>>) -> usize {
        let cols = rows.first().map_or(0, Vec::len);
        let mut rank = 0;
        for c in 0..cols {
            let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
                continue;
            };
            rows.swap(pivot, rank);
            let inv = self.inv(rows[rank][c]);
            for r in 0..rows.len() {
                if r == rank || rows[r][c] == 0 {
                    continue;
                }
                let factor = self.mul(rows[r][c], inv);
                for k in c..cols {
                    let t = self.mul(factor, rows[rank][k]);
                    rows[r][k] = self.sub(rows[r][k], t);
                }
            }
            rank += 1;
        }
        rank
    }
}

/// Deterministic Miller–Rabin for 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n % b == 0 {
            return n == b;
        }
    }
    let mul = |a: u64, b: u64| ((u128::from(a) * u128::from(b)) % u128::from(n)) as u64;
    let pow = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(acc, b);
            }
            b = mul(b, b);
            e >>= 1;
        }
        acc
    };
    let s = (n - 1).trailing_zeros();
    let odd = (n - 1) >> s;
    'bases: for &a in &BASES {
        let mut x = pow(a, odd);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul(x, x);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_prime(DEFAULT_PRIME));
        assert!(is_prime(LARGE_PRIME));
        assert!(is_prime(2) && is_prime(97));
        assert!(!is_prime(1) && !is_prime(91) && !is_prime(3_215_031_751));
        let sieve: Vec<u64> = (2..2000u64).filter(|n| (2..*n).take_while(|d| d * d <= *n).all(|d| n % d != 0)).collect();
        assert_eq!(sieve, (2..2000u64).filter(|&n| is_prime(n)).collect::<Vec<_>>());
        assert_eq!(PrimeField::new(100), Err(Error::NotPrime(100)));
        assert!(PrimeField::for_dimension(3, 3).is_err());
    }

    #[test]
    fn arithmetic() {
        let f = PrimeField::new(101).unwrap();
        assert_eq!(f.mul(f.inv(37), 37), 1);
        assert_eq!(f.sub(3, 5), 99);
        assert_eq!(f.from_i64(-1), 100);
        let big = PrimeField::new(LARGE_PRIME).unwrap();
        let a = LARGE_PRIME - 2;
        assert_eq!(big.mul(a, big.inv(a)), 1);
    }

    #[test]
    fn det_and_rank() {
        let f = PrimeField::new(101).unwrap();
        assert_eq!(f.det(vec![vec![1, 2], vec![3, 4]]), f.from_i64(-2));
        assert_eq!(f.det(vec![vec![0, 1], vec![1, 0]]), 100);
        assert_eq!(f.det(vec![vec![2, 4], vec![1, 2]]), 0);
        assert_eq!(f.rank(vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]), 2);
        assert_eq!(f.rank(vec![vec![0, 0], vec![0, 0]]), 0);
        assert_eq!(f.rank(Vec::new()), 0);
    }
}
