use ahash::AHashMap;
use num_bigint::BigUint;

use super::{jacobi_trudi_terms, signed_sum};
use crate::combinatorics::{binomial, compositions, Partition};
use crate::error::{Error, Result};

/// Default cap on the number of multisets expanded by the brute-force route.
pub const DEFAULT_MULTISET_BUDGET: u64 = 20_000_000;

/// `a_lambda(d[n])` by literally expanding `h_d` on the degree-`n` monomials
/// in `vars` variables and reading monomial coefficients from the expansion.
/// Independent of the counting table; used as an oracle.
pub fn plethysm_bruteforce(lambda: &Partition, d: u32, n: u32, vars: usize) -> Result<BigUint> {
    plethysm_bruteforce_with_budget(lambda, d, n, vars, DEFAULT_MULTISET_BUDGET)
}

pub fn plethysm_bruteforce_with_budget(lambda: &Partition, d: u32, n: u32, vars: usize, budget: u64) -> Result<BigUint> {
    if vars < lambda.length() {
        return Err(Error::InvalidParameters(format!(
            "{vars} variables cannot see {lambda}"
        )));
    }
    if lambda.size() != u64::from(d) * u64::from(n) {
        return Ok(BigUint::default());
    }
    let monomials: Vec<Vec<u32>> = compositions(n, vars).into_iter().map(|c| c.entries().to_vec()).collect();
    let count = binomial(monomials.len() as u64 + u64::from(d) - 1, u64::from(d));
    if count > BigUint::from(budget) {
        return Err(Error::BudgetExceeded(format!(
            "expanding h_{d} on {} monomials needs {count} multisets, budget is {budget}",
            monomials.len()
        )));
    }
    let mut expansion: AHashMap<Vec<u32>, u64> = AHashMap::new();
    let mut exponent = vec![0u32; vars];
    expand(&monomials, 0, d, &mut exponent, &mut expansion);

    let terms = jacobi_trudi_terms(lambda)?;
    signed_sum(&terms, |nu| {
        let mut key = nu.to_vec();
        key.resize(vars, 0);
        Ok(BigUint::from(expansion.get(&key).copied().unwrap_or(0)))
    })
}

/// Visits every multiset of `left` monomials drawn from `monomials[start..]`,
/// tallying the resulting exponent vectors. Only weakly decreasing exponents
/// are stored since the determinant terms are sorted.
fn expand(monomials: &[Vec<u32>], start: usize, left: u32, exponent: &mut Vec<u32>, out: &mut AHashMap<Vec<u32>, u64>) {
    if left == 0 {
        if exponent.windows(2).all(|w| w[0] >= w[1]) {
            *out.entry(exponent.clone()).or_default() += 1;
        }
        return;
    }
    for (i, m) in monomials.iter().enumerate().skip(start) {
        for (e, x) in exponent.iter_mut().zip(m) {
            *e += x;
        }
        expand(monomials, i, left - 1, exponent, out);
        for (e, x) in exponent.iter_mut().zip(m) {
            *e -= x;
        }
    }
}
