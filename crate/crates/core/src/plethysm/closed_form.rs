//! Generating-function formulas for three-row shapes `(L, r, 2)`.
//!
//! Every `c_nu` with `l(nu) <= 3` and `nu_3 <= 2` is a coefficient of a short
//! product of Gaussian binomials. With `B_j = binom(n+d-j, n)_q` and
//! `[a]_q = 1 + q + ... + q^(a-1)`:
//!
//! * `c_(L,k,0)` is `[q^k] B_0`,
//! * `c_(L,k,1)` is `[q^k] [n]_q B_1`,
//! * `c_(L,k,2)` is `[q^k] ([n]_{q^2} B_2 + [n-1]_q B_1 + q binom(n,2)_q B_2)`.
//!
//! The first summand of the last line comes from one composition `(n-1-s, s, 1)`
//! taken twice, which contributes `q^(2s)`; hence `[n]_{q^2}` rather than `[n]_q`.

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

use crate::combinatorics::{gaussian, QPolynomial};
use crate::error::{Error, Result};

/// Third entry of `nu` in `c_(L,k,j)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ThirdRow {
    Zero,
    One,
    Two,
}

/// `[a]_q = 1 + q + ... + q^(a-1)`.
fn q_integer(a: u32) -> QPolynomial {
    gaussian(i64::from(a), 1)
}

/// `1 + q^2 + ... + q^(2(a-1))`.
fn q_integer_squared(a: u32) -> QPolynomial {
    let mut coeffs = vec![BigInt::zero(); (2 * a as usize).saturating_sub(1)];
    for s in 0..a as usize {
        coeffs[2 * s] = BigInt::from(1);
    }
    QPolynomial::from_coeffs(coeffs)
}

fn b(j: u32, d: u32, n: u32) -> QPolynomial {
    gaussian(i64::from(n) + i64::from(d) - i64::from(j), i64::from(n))
}

fn generating_function(third: ThirdRow, d: u32, n: u32) -> QPolynomial {
    match third {
        ThirdRow::Zero => b(0, d, n),
        ThirdRow::One => q_integer(n) * b(1, d, n),
        ThirdRow::Two => {
            let b2 = b(2, d, n);
            let pair = gaussian(i64::from(n), 2).shift(1);
            q_integer_squared(n) * &b2 + q_integer(n.saturating_sub(1)) * b(1, d, n) + pair * b2
        }
    }
}

/// `c_(L,k,j)(d, n)` with `L = dn - k - j`, from the generating functions.
pub fn closed_form_c(third: ThirdRow, k: u32, d: u32, n: u32) -> BigUint {
    let c = generating_function(third, d, n).coeff(i64::from(k));
    c.to_biguint().expect("generating functions have nonnegative coefficients")
}

fn check_lr2(l: u32, r: u32, d: u32, n: u32) -> Result<()> {
    if l < r || r < 2 {
        return Err(Error::InvalidParameters(format!("({l},{r},2) is not a partition")));
    }
    if u64::from(l) + u64::from(r) + 2 != u64::from(d) * u64::from(n) {
        return Err(Error::InvalidParameters(format!("({l},{r},2) is not a partition of {d}*{n}")));
    }
    Ok(())
}

/// `a_(L,r,2)(d[n])` as the coefficient of `q^(r+1)` in
/// `(q - q^2) F_2 + (q^2 - 1) F_1 + (1 - q) F_0`, where `F_j` generates
/// `c_(.,.,j)`; this is the six-term determinant expansion with all shifts
/// folded into one exponent.
pub fn closed_form_pleth_lr2(l: u32, r: u32, d: u32, n: u32) -> Result<BigUint> {
    check_lr2(l, r, d, n)?;
    let f2 = generating_function(ThirdRow::Two, d, n);
    let f1 = generating_function(ThirdRow::One, d, n);
    let f0 = generating_function(ThirdRow::Zero, d, n);
    let total = QPolynomial::from_i64s(&[0, 1, -1]) * f2
        + QPolynomial::from_i64s(&[-1, 0, 1]) * f1
        + QPolynomial::from_i64s(&[1, -1]) * f0;
    let c = total.coeff(i64::from(r) + 1);
    if c.is_negative() {
        return Err(Error::Internal(format!("negative coefficient {c} for ({l},{r},2)")));
    }
    Ok(c.magnitude().clone())
}

/// `a_(L,r,2)(d[n]) - a_(L,r,2)(n[d])` as the coefficient of `q^r` in
/// `binom(n+d-2, n-1)_q (q^n - q^d) (1 - q^(d-1)) (1 - q^(n-1)) / ((1 - q^d)(1 - q^n))`.
/// The division is carried out exactly and must leave no remainder.
pub fn pleth_difference_lr2(l: u32, r: u32, d: u32, n: u32) -> Result<BigInt> {
    check_lr2(l, r, d, n)?;
    if d == 0 || n == 0 {
        return Err(Error::InvalidParameters("d and n must be positive".into()));
    }
    let (du, nu) = (d as usize, n as usize);
    let numerator = gaussian(i64::from(n) + i64::from(d) - 2, i64::from(n) - 1)
        * (QPolynomial::q_pow(nu) - QPolynomial::q_pow(du))
        * QPolynomial::one_minus_q_pow(du - 1)
        * QPolynomial::one_minus_q_pow(nu - 1);
    let denominator = QPolynomial::one_minus_q_pow(du) * QPolynomial::one_minus_q_pow(nu);
    let quotient = numerator.div_exact(&denominator).map_err(|_| {
        Error::Internal(format!("difference generating function for d={d}, n={n} is not a polynomial"))
    })?;
    Ok(quotient.coeff(i64::from(r)))
}

/// Value of `a_lambda((n+1)[n]) - a_lambda(n[n+1])` for `lambda = (n^2+n-2-r, r, 2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FoulkesDelta {
    /// `r < n`.
    Zero,
    /// `r = n`.
    One,
    /// `r > n` with a strictly positive difference.
    Positive(BigUint),
    /// `r > n` where the difference of rectangle counts vanishes.
    Exception,
}

impl FoulkesDelta {
    pub fn value(&self) -> BigUint {
        match self {
            FoulkesDelta::Zero | FoulkesDelta::Exception => BigUint::zero(),
            FoulkesDelta::One => BigUint::from(1u32),
            FoulkesDelta::Positive(v) => v.clone(),
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            FoulkesDelta::Zero => "zero",
            FoulkesDelta::One => "one",
            FoulkesDelta::Positive(_) => "positive",
            FoulkesDelta::Exception => "exception",
        }
    }
}

/// Classifies the difference for `d = n + 1`. For `r > n` the value is
/// `p_(k+1)(n+1, n-2) - p_k(n+1, n-2)` with `k = r - n - 1`, positive for
/// `n >= 7` apart from `r = n + 1` (where it is `p_1 - p_0 = 0`),
/// `(8, 35)` and `(9, 44)`. A vanishing value with `n >= 7` is labelled an
/// exception; below that zeros are expected.
pub fn foulkes_delta_case(n: u32, r: u32) -> Result<FoulkesDelta> {
    if n < 2 {
        return Err(Error::InvalidParameters(format!("n = {n} must be at least 2")));
    }
    let size = u64::from(n) * u64::from(n) + u64::from(n);
    if r < 2 || 2 * u64::from(r) + 2 > size {
        return Err(Error::InvalidParameters(format!(
            "(n^2+n-2-r, r, 2) is not a partition for n = {n}, r = {r}"
        )));
    }
    if r < n {
        return Ok(FoulkesDelta::Zero);
    }
    if r == n {
        return Ok(FoulkesDelta::One);
    }
    let k = i64::from(r - n - 1);
    let box_gf = gaussian(2 * i64::from(n) - 1, i64::from(n) + 1);
    let diff = box_gf.coeff(k + 1) - box_gf.coeff(k);
    if diff.is_negative() {
        return Err(Error::Internal(format!("rectangle counts decrease at n = {n}, k = {k}")));
    }
    if diff.is_zero() && n >= 7 {
        Ok(FoulkesDelta::Exception)
    } else if diff.is_zero() {
        Ok(FoulkesDelta::Zero)
    } else {
        Ok(FoulkesDelta::Positive(diff.magnitude().clone()))
    }
}
