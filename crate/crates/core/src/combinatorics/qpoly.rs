use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Polynomial in `q` with arbitrary precision integer coefficients.
/// `coeffs[i]` is the coefficient of `q^i`; the leading coefficient is
/// nonzero unless the polynomial is zero (empty vector).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPolynomial {
    coeffs: Vec<BigInt>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        QPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    /// `c * q^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c.into();
        Self::from_coeffs(coeffs)
    }

    /// `q^k`.
    pub fn q_pow(k: usize) -> Self {
        Self::monomial(1, k)
    }

    /// `1 - q^k`.
    pub fn one_minus_q_pow(k: usize) -> Self {
        Self::one() - Self::q_pow(k)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^k`; zero outside the support. Negative `k` is
    /// accepted so callers can shift exponents freely.
    pub fn coeff(&self, k: i64) -> BigInt {
        if k < 0 {
            return BigInt::zero();
        }
        self.coeffs.get(k as usize).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient_sum(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        QPolynomial { coeffs }
    }

    /// Long division over the integers. Fails when a quotient coefficient
    /// would not be integral.
    pub fn div_rem(&self, divisor: &QPolynomial) -> Result<(QPolynomial, QPolynomial)> {
        let Some(dd) = divisor.degree() else {
            return Err(Error::InvalidParameters("division by the zero polynomial".into()));
        };
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &q * c;
            }
            quot[i] = q;
        }
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Division that must leave no remainder.
    pub fn div_exact(&self, divisor: &QPolynomial) -> Result<QPolynomial> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::InexactDivision);
        }
        Ok(q)
    }

    /// In-place division by `1 - q^k` when it is known to be exact.
    fn div_one_minus_q_pow(&mut self, k: usize) -> Result<()> {
        // Series inverse: c'[t] = c[t] + c'[t-k]; exact iff the tail vanishes.
        let n = self.coeffs.len();
        for t in k..n {
            let prev = self.coeffs[t - k].clone();
            self.coeffs[t] += prev;
        }
        let keep = n.saturating_sub(k);
        if self.coeffs[keep..].iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision);
        }
        self.coeffs.truncate(keep);
        *self = Self::from_coeffs(std::mem::take(&mut self.coeffs));
        Ok(())
    }

    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(ToPrimitive::to_i64).collect()
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (k, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{a}q")?,
                (_, true) => write!(f, "q^{k}")?,
                (_, false) => write!(f, "{a}q^{k}")?,
            }
        }
        Ok(())
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;

    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.coeff(i as i64) + rhs.coeff(i as i64))
            .collect();
        QPolynomial::from_coeffs(coeffs)
    }
}

impl Sub for &QPolynomial {
    type Output = QPolynomial;

    fn sub(self, rhs: &QPolynomial) -> QPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.coeff(i as i64) - rhs.coeff(i as i64))
            .collect();
        QPolynomial::from_coeffs(coeffs)
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;

    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPolynomial::from_coeffs(coeffs)
    }
}

impl Neg for &QPolynomial {
    type Output = QPolynomial;

    fn neg(self) -> QPolynomial {
        QPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for QPolynomial {
            type Output = QPolynomial;
            fn $m(self, rhs: QPolynomial) -> QPolynomial { (&self).$m(&rhs) }
        }
        impl $tr<&QPolynomial> for QPolynomial {
            type Output = QPolynomial;
            fn $m(self, rhs: &QPolynomial) -> QPolynomial { (&self).$m(rhs) }
        }
        impl $tr<QPolynomial> for &QPolynomial {
            type Output = QPolynomial;
            fn $m(self, rhs: QPolynomial) -> QPolynomial { self.$m(&rhs) }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for QPolynomial {
    type Output = QPolynomial;

    fn neg(self) -> QPolynomial {
        -&self
    }
}

/// Generating polynomial of partitions fitting inside an `a x b` box, i.e.
/// the Gaussian binomial `binom(a+b, a)_q`.
pub fn q_binomial(a: u32, b: u32) -> QPolynomial {
    let (small, large) = if a <= b { (a, b) } else { (b, a) };
    let mut acc = QPolynomial::one();
    for i in 1..=small as usize {
        acc = &acc * &QPolynomial::one_minus_q_pow(large as usize + i);
        acc.div_one_minus_q_pow(i)
            .expect("partial Gaussian products are polynomials");
    }
    acc
}

/// `binom(top, bottom)_q`, zero when `bottom` is out of range.
pub fn gaussian(top: i64, bottom: i64) -> QPolynomial {
    if bottom < 0 || top < 0 || bottom > top {
        return QPolynomial::zero();
    }
    q_binomial(bottom as u32, (top - bottom) as u32)
}

/// `p_r(a, b)`: the number of partitions of `r` fitting inside an `a x b`
/// rectangle.
pub fn rect_partition_count(r: u64, a: u32, b: u32) -> BigUint {
    if r > u64::from(a) * u64::from(b) {
        return BigUint::zero();
    }
    q_binomial(a, b)
        .coeff(r as i64)
        .to_biguint()
        .expect("partition counts are nonnegative")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::binomial;

    /// Counts partitions of `r` with at most `rows` parts each at most `cols`
    /// by plain recursion over the largest part.
    fn box_count(r: u32, rows: u32, cols: u32) -> u64 {
        if r == 0 {
            return 1;
        }
        if rows == 0 || cols == 0 {
            return 0;
        }
        (1..=cols.min(r)).map(|first| box_count(r - first, rows - 1, first)).sum()
    }

    #[test]
    fn small_examples() {
        assert_eq!(q_binomial(1, 1), QPolynomial::from_i64s(&[1, 1]));
        assert_eq!(q_binomial(0, 5), QPolynomial::one());
        assert_eq!(q_binomial(9, 6).coeff(26), BigInt::from(227));
        assert_eq!(rect_partition_count(27, 9, 6), BigUint::from(227u32));
        assert_eq!(rect_partition_count(26, 9, 6), BigUint::from(227u32));
        assert_eq!(rect_partition_count(0, 5, 7), BigUint::one());
        assert_eq!(rect_partition_count(3, 2, 2), BigUint::one());
        assert_eq!(rect_partition_count(5, 2, 2), BigUint::zero());
    }

    #[test]
    fn coefficients_match_box_enumeration() {
        for a in 0..8u32 {
            for b in 0..8u32 {
                let g = q_binomial(a, b);
                assert_eq!(g.degree().unwrap(), (a * b) as usize);
                for r in 0..=a * b {
                    assert_eq!(g.coeff(i64::from(r)), BigInt::from(box_count(r, a, b)), "p_{r}({a},{b})");
                }
            }
        }
    }

    #[test]
    fn sum_symmetry_palindrome() {
        for a in 0..=12u32 {
            for b in 0..=12u32 {
                let g = q_binomial(a, b);
                assert!(g.is_palindromic());
                assert_eq!(
                    g.coefficient_sum(),
                    BigInt::from(binomial(u64::from(a + b), u64::from(a)))
                );
                if a <= 10 && b <= 10 {
                    assert_eq!(g, q_binomial(b, a));
                }
            }
        }
    }

    #[test]
    fn pascal_recurrence() {
        for a in 1..=8u32 {
            for b in 1..=8u32 {
                let lhs = q_binomial(a, b);
                let rhs = &q_binomial(a, b - 1) + &q_binomial(a - 1, b).shift(b as usize);
                assert_eq!(lhs, rhs, "a={a} b={b}");
            }
        }
    }

    #[test]
    fn division() {
        let p = &QPolynomial::from_i64s(&[1, 2, 1]) * &QPolynomial::from_i64s(&[3, 0, -1]);
        assert_eq!(p.div_exact(&QPolynomial::from_i64s(&[1, 1])).unwrap(), &QPolynomial::from_i64s(&[1, 1]) * &QPolynomial::from_i64s(&[3, 0, -1]));
        assert_eq!(
            QPolynomial::from_i64s(&[1, 0, 1]).div_exact(&QPolynomial::from_i64s(&[1, 1])),
            Err(Error::InexactDivision)
        );
        assert_eq!(
            QPolynomial::from_i64s(&[1, 1]).div_exact(&QPolynomial::from_i64s(&[0, 2])),
            Err(Error::InexactDivision)
        );
        let (q, r) = QPolynomial::from_i64s(&[1, 0, 1]).div_rem(&QPolynomial::from_i64s(&[1, 1])).unwrap();
        assert_eq!(q, QPolynomial::from_i64s(&[-1, 1]));
        assert_eq!(r, QPolynomial::from_i64s(&[2]));
    }

    #[test]
    fn display() {
        assert_eq!(QPolynomial::from_i64s(&[1, -1, 0, 2]).to_string(), "1 - q + 2q^3");
        assert_eq!(QPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn gaussian_out_of_range() {
        assert!(gaussian(3, 4).is_zero());
        assert!(gaussian(3, -1).is_zero());
        assert_eq!(gaussian(4, 2), q_binomial(2, 2));
    }
}
