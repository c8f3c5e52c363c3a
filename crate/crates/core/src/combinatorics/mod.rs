mod composition;
mod partition;
mod qpoly;

use num_bigint::BigUint;
use num_traits::One;

pub use composition::{compositions, Composition};
pub use partition::Partition;
pub use qpoly::{gaussian, q_binomial, rect_partition_count, QPolynomial};

/// Ordinary binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::default();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `C(n, k)` in machine integers; `None` on overflow.
pub fn binomial_u128(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..u128::from(k) {
        acc = acc.checked_mul(u128::from(n) - i)? / (i + 1);
    }
    Some(acc)
}
