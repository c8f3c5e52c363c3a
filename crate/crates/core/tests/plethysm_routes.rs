use num_bigint::{BigInt, BigUint};
use pleth_core::combinatorics::{rect_partition_count, Partition};
use pleth_core::plethysm::*;
use pleth_core::semigroup::enumerate_m_partitions;
use proptest::prelude::*;

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

#[test]
fn published_values() {
    assert_eq!(plethysm(&p(&[34, 6, 2]), 7, 6).unwrap(), big(8));
    assert_eq!(plethysm(&p(&[34, 6, 2]), 6, 7).unwrap(), big(7));
    assert_eq!(plethysm(&p(&[47, 7, 2]), 8, 7).unwrap(), big(11));
    assert_eq!(plethysm(&p(&[47, 7, 2]), 7, 8).unwrap(), big(10));
    assert_eq!(plethysm(&p(&[14, 14, 13, 13]), 6, 9).unwrap(), big(0));
}

/// `a_lambda(d[n])` from `h_d = sum_mu p_mu / z_mu` and `p_k[h_n] = h_n(x^k)`,
/// expanded as truncated polynomials in `l(lambda)` variables modulo a prime.
/// Shares nothing with the counting table. Valid while the true value is
/// below `PRIME / 2`.
fn power_sum_route(lambda: &Partition, d: u32, n: u32) -> i64 {
    const PRIME: u64 = 2_147_483_647;
    let l = lambda.length();
    let perms: Vec<Vec<usize>> = itertools::Itertools::permutations(0..l, l).collect();
    let mut terms = Vec::new();
    for perm in &perms {
        let nu: Option<Vec<u32>> = (0..l)
            .map(|i| u32::try_from(i64::from(lambda.part(i)) + perm[i] as i64 - i as i64).ok())
            .collect();
        let Some(mut nu) = nu else { continue };
        nu.sort_unstable_by(|a, b| b.cmp(a));
        let inv = (0..l).flat_map(|i| (i + 1..l).map(move |j| (i, j))).filter(|&(i, j)| perm[i] > perm[j]).count();
        terms.push((nu, if inv % 2 == 0 { 1i64 } else { -1 }));
    }
    let bounds: Vec<usize> = (0..l).map(|i| terms.iter().map(|t| t.0[i] as usize).max().unwrap()).collect();
    let mut strides = vec![1usize; l];
    for i in (0..l - 1).rev() {
        strides[i] = strides[i + 1] * (bounds[i + 1] + 1);
    }
    let len = strides[0] * (bounds[0] + 1);
    let index = |v: &[usize]| v.iter().zip(&strides).map(|(a, b)| a * b).sum::<usize>();
    let cells: Vec<Vec<usize>> = (0..len)
        .map(|mut lin| strides.iter().map(|s| { let c = lin / s; lin %= s; c }).collect())
        .collect();
    let monomials: Vec<Vec<usize>> = pleth_core::combinatorics::compositions(n, l)
        .into_iter()
        .map(|c| c.entries().iter().map(|&e| e as usize).collect())
        .collect();
    let factorial = |k: u64| (1..=k).product::<u64>();
    let mut acc = vec![0u64; len];
    for mu in pleth_core::semigroup::enumerate_m_partitions(u64::from(d), d as usize) {
        let mut poly = vec![0u64; len];
        poly[0] = 1;
        for &k in mu.parts() {
            let mut next = vec![0u64; len];
            for (lin, cell) in cells.iter().enumerate() {
                if poly[lin] == 0 {
                    continue;
                }
                for a in &monomials {
                    let target: Vec<usize> = cell.iter().zip(a).map(|(c, x)| c + k as usize * x).collect();
                    if target.iter().zip(&bounds).all(|(t, b)| t <= b) {
                        let t = index(&target);
                        next[t] = (next[t] + poly[lin]) % PRIME;
                    }
                }
            }
            poly = next;
        }
        let mut z = 1u64;
        for (&k, m) in mu.parts().iter().copied().fold(std::collections::BTreeMap::new(), |mut m, k| {
            *m.entry(k).or_insert(0u64) += 1;
            m
        }).iter() {
            z *= u64::from(k).pow(*m as u32) * factorial(*m);
        }
        let weight = factorial(u64::from(d)) / z % PRIME;
        for (a, v) in acc.iter_mut().zip(&poly) {
            *a = (*a + weight * v) % PRIME;
        }
    }
    let mut total: i64 = 0;
    for (nu, sign) in &terms {
        let v: Vec<usize> = nu.iter().map(|&x| x as usize).collect();
        total = (total + sign * acc[index(&v)] as i64).rem_euclid(PRIME as i64);
    }
    let mut inv = 1u64;
    let (mut base, mut e) = (factorial(u64::from(d)) % PRIME, PRIME - 2);
    while e > 0 {
        if e & 1 == 1 {
            inv = inv * base % PRIME;
        }
        base = base * base % PRIME;
        e >>= 1;
    }
    let v = (total as u64 * inv % PRIME) as i64;
    if v > (PRIME / 2) as i64 { v - PRIME as i64 } else { v }
}

#[test]
fn occurrence_table_last_row_recomputed() {
    let lambda = p(&[14, 14, 13, 13]);
    assert_eq!(power_sum_route(&lambda, 9, 6), 19);
    assert_eq!(power_sum_route(&lambda, 6, 9), 0);
    assert_eq!(plethysm(&lambda, 9, 6).unwrap(), big(19));
}

#[test]
fn power_sum_route_agrees() {
    for (lambda, d, n) in [(p(&[34, 6, 2]), 7, 6), (p(&[34, 6, 2]), 6, 7), (p(&[7, 3, 2]), 4, 3), (p(&[12, 9, 9]), 6, 5)] {
        assert_eq!(BigUint::from(power_sum_route(&lambda, d, n) as u64), plethysm(&lambda, d, n).unwrap(), "{lambda}");
    }
    for d in 2..=4u32 {
        for n in 2..=4u32 {
            for lambda in enumerate_m_partitions(u64::from(d * n), 4) {
                assert_eq!(BigUint::from(power_sum_route(&lambda, d, n) as u64), plethysm(&lambda, d, n).unwrap(), "{lambda}");
            }
        }
    }
}

#[test]
fn single_row_coefficients() {
    for d in 1..6u32 {
        for n in 1..6u32 {
            assert_eq!(monomial_coefficient(&p(&[d * n]), d, n).unwrap(), big(1));
            assert_eq!(plethysm(&p(&[n]), 1, n).unwrap(), big(1));
            for k in 0..=(d * n) / 2 {
                let nu = p(&[d * n - k, k]);
                assert_eq!(
                    monomial_coefficient(&nu, d, n).unwrap(),
                    rect_partition_count(u64::from(k), n, d),
                    "c_{nu}({d},{n})"
                );
            }
        }
    }
}

#[test]
fn table_route_matches_expansion() {
    for d in 2..=4u32 {
        for n in 2..=4u32 {
            for lambda in enumerate_m_partitions(u64::from(d * n), 4) {
                let vars = lambda.length().max(1);
                let a = plethysm(&lambda, d, n).unwrap();
                let b = plethysm_bruteforce(&lambda, d, n, vars).unwrap();
                assert_eq!(a, b, "{lambda} d={d} n={n}");
            }
        }
    }
    for d in 2..=5u32 {
        for n in 2..=5u32 {
            for lambda in enumerate_m_partitions(u64::from(d * n), 3) {
                let a = plethysm(&lambda, d, n).unwrap();
                let b = plethysm_bruteforce(&lambda, d, n, 3).unwrap();
                assert_eq!(a, b, "{lambda} d={d} n={n}");
            }
        }
    }
}

#[test]
fn monomial_coefficients_against_closed_forms() {
    for d in 2..=5u32 {
        for n in 2..=5u32 {
            for k in 0..=d * n {
                for (j, third) in [(0, ThirdRow::Zero), (1, ThirdRow::One), (2, ThirdRow::Two)] {
                    let Some(l) = (d * n).checked_sub(k + j) else { continue };
                    let nu = Partition::from_unsorted(vec![l, k, j]);
                    assert_eq!(
                        closed_form_c(third, k, d, n),
                        monomial_coefficient(&nu, d, n).unwrap(),
                        "({l},{k},{j}) d={d} n={n}"
                    );
                }
            }
        }
    }
}

#[test]
fn three_row_closed_form_and_difference() {
    for d in 2..=6u32 {
        for n in 2..=6u32 {
            for r in 2..=d * n {
                let Some(l) = (d * n).checked_sub(r + 2) else { continue };
                if l < r {
                    continue;
                }
                let lambda = p(&[l, r, 2]);
                let forward = plethysm(&lambda, d, n).unwrap();
                let backward = plethysm(&lambda, n, d).unwrap();
                assert_eq!(closed_form_pleth_lr2(l, r, d, n).unwrap(), forward, "{lambda} d={d} n={n}");
                assert_eq!(
                    pleth_difference_lr2(l, r, d, n).unwrap(),
                    BigInt::from(forward) - BigInt::from(backward),
                    "{lambda} d={d} n={n}"
                );
            }
        }
    }
    assert_eq!(closed_form_pleth_lr2(34, 6, 7, 6).unwrap(), big(8));
    assert_eq!(closed_form_pleth_lr2(47, 7, 8, 7).unwrap(), big(11));
    assert_eq!(pleth_difference_lr2(35, 35, 9, 8).unwrap(), BigInt::from(0));
}

#[test]
fn brill_family_difference() {
    for n in 2..=7u32 {
        let lambda = p(&[n * n - 2, n, 2]);
        let a = BigInt::from(plethysm(&lambda, n + 1, n).unwrap());
        let b = BigInt::from(plethysm(&lambda, n, n + 1).unwrap());
        assert_eq!(a - b, BigInt::from(1), "n={n}");
        assert_eq!(pleth_difference_lr2(n * n - 2, n, n + 1, n).unwrap(), BigInt::from(1));
    }
}

#[test]
fn foulkes_delta_agrees_with_difference() {
    for n in 2..=9u32 {
        let size = n * n + n;
        for r in 2..=(size - 2) / 2 {
            let case = foulkes_delta_case(n, r).unwrap();
            let l = size - 2 - r;
            let diff = pleth_difference_lr2(l, r, n + 1, n).unwrap();
            assert_eq!(BigInt::from(case.value()), diff, "n={n} r={r}");
        }
    }
    assert_eq!(rect_partition_count(26, 9, 6), big(227));
    assert_eq!(rect_partition_count(27, 9, 6), big(227));
    assert_eq!(foulkes_delta_case(8, 35).unwrap(), FoulkesDelta::Exception);
    let mut exceptions = Vec::new();
    for n in 2..=9u32 {
        for r in 2..=(n * n + n - 2) / 2 {
            if foulkes_delta_case(n, r).unwrap() == FoulkesDelta::Exception {
                exceptions.push((n, r));
            }
        }
    }
    // r = n + 1 always gives p_1 - p_0 = 0
    assert_eq!(exceptions, [(7, 8), (8, 9), (8, 35), (9, 10), (9, 44)]);
}

#[test]
fn hermite_reciprocity() {
    for d in 1..=6u32 {
        for n in 1..=6u32 {
            for lambda in enumerate_m_partitions(u64::from(d * n), 2) {
                assert_eq!(plethysm(&lambda, d, n).unwrap(), plethysm(&lambda, n, d).unwrap(), "{lambda}");
            }
        }
    }
}

#[test]
fn foulkes_inequality_small() {
    for d in 3..=5u32 {
        for n in 2..d {
            for lambda in enumerate_m_partitions(u64::from(d * n), 3) {
                assert!(plethysm(&lambda, n, d).unwrap() <= plethysm(&lambda, d, n).unwrap(), "{lambda}");
            }
        }
    }
}

#[test]
fn excluded_bars_vanish() {
    for d in 1..=10u32 {
        for lambda in enumerate_m_partitions(u64::from(6 * d), 3) {
            if bar_vanishes(&lambda, 6).unwrap() {
                assert_eq!(plethysm(&lambda, d, 6).unwrap(), big(0), "{lambda}");
            }
        }
    }
    for d in 1..=5u32 {
        for lambda in enumerate_m_partitions(u64::from(7 * d), 4) {
            if bar_vanishes(&lambda, 7).unwrap() {
                assert_eq!(plethysm(&lambda, d, 7).unwrap(), big(0), "{lambda}");
            }
        }
    }
}

fn small_partition() -> impl Strategy<Value = (Partition, u32, u32)> {
    (1..=4u32, 1..=4u32, proptest::collection::vec(0..20u32, 1..=4)).prop_map(|(d, n, raw)| {
        // Spread d*n boxes across rows proportionally to the random weights.
        let total = d * n;
        let weight: u32 = raw.iter().sum::<u32>().max(1);
        let mut parts: Vec<u32> = raw.iter().map(|w| w * total / weight).collect();
        let missing = total - parts.iter().sum::<u32>();
        parts[0] += missing;
        (Partition::from_unsorted(parts), d, n)
    })
}

proptest! {
    #[test]
    fn nonnegative_and_padding_invariant((lambda, d, n) in small_partition()) {
        let a = plethysm(&lambda, d, n).unwrap();
        let mut padded = lambda.parts().to_vec();
        padded.extend([0, 0]);
        prop_assert_eq!(&a, &plethysm(&Partition::new(padded).unwrap(), d, n).unwrap());
        let vars = lambda.length().max(1);
        prop_assert_eq!(a, plethysm_bruteforce(&lambda, d, n, vars).unwrap());
    }
}
