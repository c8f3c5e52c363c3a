use crate::combinatorics::Partition;
use crate::error::{Error, Result};

const BARS_6: &[&[u32]] = &[&[3, 3], &[3, 1], &[2, 1], &[1, 1], &[1]];

const BARS_7: &[&[u32]] = &[
    &[1],
    &[1, 1],
    &[1, 1, 1],
    &[2, 1],
    &[2, 1, 1],
    &[2, 2, 1],
    &[3, 1],
    &[3, 1, 1],
    &[3, 2, 1],
    &[3, 3],
    &[3, 3, 1],
    &[3, 3, 2],
    &[3, 3, 3],
    &[4, 1, 1],
    &[4, 3, 3],
    &[5, 1, 1],
    &[5, 5, 5],
    &[6, 1, 1],
];

/// Shapes `lambda-bar` (first row removed) that force `a_lambda(d[n]) = 0`
/// for 3-partitions (`n = 6`) and 4-partitions (`n = 7`). Only these two
/// inner degrees are tabulated.
pub fn excluded_bars(n: u32) -> Result<Vec<Partition>> {
    let table = match n {
        6 => BARS_6,
        7 => BARS_7,
        _ => return Err(Error::UnsupportedDegree(n)),
    };
    Ok(table
        .iter()
        .map(|p| Partition::new(p.to_vec()).expect("tabulated bars are partitions"))
        .collect())
}

/// Whether `lambda-bar` is one of the tabulated shapes for `n`.
pub fn bar_vanishes(lambda: &Partition, n: u32) -> Result<bool> {
    let bar = lambda.bar();
    Ok(excluded_bars(n)?.contains(&bar))
}
