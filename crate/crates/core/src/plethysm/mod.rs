//! Plethysm coefficients `a_lambda(d[n])`, the multiplicity of `s_lambda` in
//! `h_d[h_n]`.
//!
//! The main route expands the Jacobi–Trudi determinant against `h_d[h_n]`,
//! which reduces everything to monomial coefficients `c_nu(d, n)`: the number
//! of multisets of `d` weak compositions of `n` (with `l(nu)` entries) summing
//! to `nu`. Those are read off a dense counting table.

mod brute;
mod closed_form;
mod table;
mod vanishing;

use ahash::AHashMap;
use itertools::Itertools;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::combinatorics::Partition;
use crate::error::{Error, Result};

pub use brute::{plethysm_bruteforce, plethysm_bruteforce_with_budget, DEFAULT_MULTISET_BUDGET};
pub use closed_form::{closed_form_c, closed_form_pleth_lr2, foulkes_delta_case, pleth_difference_lr2, FoulkesDelta, ThirdRow};
pub use table::DEFAULT_CELL_BUDGET;
pub use vanishing::{bar_vanishes, excluded_bars};

use table::CountTable;

/// Largest number of rows accepted by the determinant expansion; the number
/// of terms grows like `l!`.
pub const MAX_ROWS: usize = 9;

/// `c_nu(d, n)`: coefficient of `x^nu` in `h_d[h_n]`.
pub fn monomial_coefficient(nu: &Partition, d: u32, n: u32) -> Result<BigUint> {
    monomial_coefficient_with_budget(nu, d, n, DEFAULT_CELL_BUDGET)
}

pub fn monomial_coefficient_with_budget(nu: &Partition, d: u32, n: u32, cell_budget: u64) -> Result<BigUint> {
    if let Some(v) = degenerate_count(nu.parts(), d, n) {
        return Ok(v);
    }
    let table = CountTable::build(nu.parts(), n, cell_budget)?;
    Ok(table.get(nu.parts()))
}

/// Cases where every composition has size zero or the target is empty; the
/// table relies on `n > 0` to pin down the multiset size.
fn degenerate_count(nu: &[u32], d: u32, n: u32) -> Option<BigUint> {
    let size: u64 = nu.iter().map(|&v| u64::from(v)).sum();
    if n == 0 || d == 0 || nu.is_empty() {
        return Some(if size == 0 { BigUint::one() } else { BigUint::zero() });
    }
    if size != u64::from(d) * u64::from(n) {
        return Some(BigUint::zero());
    }
    None
}

/// Signed Jacobi–Trudi expansion of `s_lambda` in the `h` basis: entries
/// `nu = lambda + pi - id` (sorted decreasingly, all entries nonnegative)
/// with their summed signs. Vectors keep `l(lambda)` entries.
pub(crate) fn jacobi_trudi_terms(lambda: &Partition) -> Result<Vec<(Vec<u32>, i64)>> {
    let l = lambda.length();
    if l > MAX_ROWS {
        return Err(Error::BudgetExceeded(format!(
            "{lambda} has {l} rows; the determinant expansion supports at most {MAX_ROWS}"
        )));
    }
    let mut acc: AHashMap<Vec<u32>, i64> = AHashMap::new();
    for perm in (0..l).permutations(l) {
        let mut nu = Vec::with_capacity(l);
        let mut ok = true;
        for (i, &p) in perm.iter().enumerate() {
            let v = i64::from(lambda.part(i)) + p as i64 - i as i64;
            if v < 0 {
                ok = false;
                break;
            }
            nu.push(v as u32);
        }
        if !ok {
            continue;
        }
        nu.sort_unstable_by(|a, b| b.cmp(a));
        *acc.entry(nu).or_default() += permutation_sign(&perm);
    }
    let mut terms: Vec<_> = acc.into_iter().filter(|(_, s)| *s != 0).collect();
    terms.sort();
    Ok(terms)
}

fn permutation_sign(perm: &[usize]) -> i64 {
    let inversions = (0..perm.len())
        .flat_map(|i| (i + 1..perm.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| perm[i] > perm[j])
        .count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Combines signed terms with a lookup for `c_nu`; the result must be a
/// nonnegative multiplicity.
pub(crate) fn signed_sum(
    terms: &[(Vec<u32>, i64)],
    mut lookup: impl FnMut(&[u32]) -> Result<BigUint>,
) -> Result<BigUint> {
    let mut total = BigInt::zero();
    for (nu, sign) in terms {
        total += BigInt::from(lookup(nu)?) * *sign;
    }
    if total.is_negative() {
        return Err(Error::Internal(format!("negative plethysm coefficient {total}")));
    }
    Ok(total.magnitude().clone())
}

/// `a_lambda(d[n])` via the Jacobi–Trudi expansion and a counting table.
pub fn plethysm(lambda: &Partition, d: u32, n: u32) -> Result<BigUint> {
    plethysm_with_budget(lambda, d, n, DEFAULT_CELL_BUDGET)
}

pub fn plethysm_with_budget(lambda: &Partition, d: u32, n: u32, cell_budget: u64) -> Result<BigUint> {
    if lambda.size() != u64::from(d) * u64::from(n) {
        return Ok(BigUint::zero());
    }
    if lambda.is_empty() {
        return Ok(BigUint::one());
    }
    if n == 0 || d == 0 {
        return Ok(BigUint::zero());
    }
    let terms = jacobi_trudi_terms(lambda)?;
    if terms.is_empty() {
        return Ok(BigUint::zero());
    }
    let l = lambda.length();
    let bounds: Vec<u32> = (0..l)
        .map(|i| terms.iter().map(|(nu, _)| nu[i]).max().unwrap_or(0))
        .collect();
    let table = CountTable::build(&bounds, n, cell_budget)?;
    signed_sum(&terms, |nu| Ok(table.get(nu)))
}
