use num_bigint::BigUint;
use num_traits::{CheckedAdd, One, Zero};

use crate::combinatorics::compositions;
use crate::error::{Error, Result};

/// Default cap on the number of cells of a counting table.
pub const DEFAULT_CELL_BUDGET: u64 = 16_000_000;

/// Dense table of `c_v(., n)` for every vector `v` inside a box.
///
/// `cells[v]` counts multisets of weak compositions of `n` summing to `v`.
/// Since every composition has size `n`, the multiset size is `|v| / n`, so
/// one table answers `c_nu(d, n)` for every `nu` in the box at once.
pub(crate) struct CountTable {
    bounds: Vec<u32>,
    strides: Vec<usize>,
    cells: Cells,
}

enum Cells {
    Small(Vec<u128>),
    Big(Vec<BigUint>),
}

impl CountTable {
    /// Builds the table over the box `0 <= v_i <= bounds[i]`; requires `n > 0`.
    pub(crate) fn build(bounds: &[u32], n: u32, cell_budget: u64) -> Result<Self> {
        debug_assert!(n > 0);
        let mut cells: u64 = 1;
        for &b in bounds {
            cells = cells.saturating_mul(u64::from(b) + 1);
        }
        if cells > cell_budget {
            return Err(Error::BudgetExceeded(format!(
                "counting table needs {cells} cells, budget is {cell_budget}"
            )));
        }
        let l = bounds.len();
        let mut strides = vec![1usize; l];
        for i in (0..l.saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * (bounds[i + 1] as usize + 1);
        }
        let items: Vec<Vec<u32>> = compositions(n, l)
            .into_iter()
            .map(|c| c.entries().to_vec())
            .filter(|a| a.iter().zip(bounds).all(|(x, b)| x <= b))
            .collect();
        let cells = match fill::<u128>(bounds, &strides, &items, cells as usize) {
            Some(v) => Cells::Small(v),
            None => Cells::Big(fill::<BigUint>(bounds, &strides, &items, cells as usize).expect("big integers never overflow")),
        };
        Ok(CountTable {
            bounds: bounds.to_vec(),
            strides,
            cells,
        })
    }

    /// Count for `v`; zero outside the box.
    pub(crate) fn get(&self, v: &[u32]) -> BigUint {
        debug_assert_eq!(v.len(), self.bounds.len());
        if v.iter().zip(&self.bounds).any(|(x, b)| x > b) {
            return BigUint::zero();
        }
        let idx: usize = v.iter().zip(&self.strides).map(|(&x, &s)| x as usize * s).sum();
        match &self.cells {
            Cells::Small(c) => BigUint::from(c[idx]),
            Cells::Big(c) => c[idx].clone(),
        }
    }
}

/// Unbounded-knapsack fill: items are added one at a time and each cell
/// `v >= a` picks up `dp[v - a]` in increasing index order, which counts
/// multisets. Returns `None` if `T` overflows.
fn fill<T: Clone + Zero + One + CheckedAdd>(bounds: &[u32], strides: &[usize], items: &[Vec<u32>], len: usize) -> Option<Vec<T>> {
    let mut dp = vec![T::zero(); len];
    dp[0] = T::one();
    let l = bounds.len();
    let mut cur = vec![0u32; l];
    for a in items {
        let offset: usize = a.iter().zip(strides).map(|(&x, &s)| x as usize * s).sum();
        if offset == 0 {
            continue;
        }
        cur.copy_from_slice(a);
        let mut lin = offset;
        'walk: loop {
            let next = dp[lin].checked_add(&dp[lin - offset])?;
            dp[lin] = next;
            // Advance to the next cell of the sub-box `v >= a` (last index fastest).
            let mut i = l;
            loop {
                if i == 0 {
                    break 'walk;
                }
                i -= 1;
                if cur[i] < bounds[i] {
                    cur[i] += 1;
                    lin += strides[i];
                    break;
                }
                lin -= (cur[i] - a[i]) as usize * strides[i];
                cur[i] = a[i];
            }
        }
    }
    Some(dp)
}
