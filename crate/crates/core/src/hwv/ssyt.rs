use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::tableau::Tableau;
use crate::combinatorics::Partition;
use crate::error::{Error, Result};

/// Row-by-row backtracking over semistandard fillings of `shape` in which
/// every label `1..=d` occurs exactly `n` times.
struct Filler<'a> {
    shape: &'a Partition,
    heights: Vec<usize>,
    d: u32,
    n: u32,
    rows: Vec<Vec<u32>>,
    counts: Vec<u32>,
    nodes: u64,
}

impl<'a> Filler<'a> {
    fn new(shape: &'a Partition, d: u32, n: u32) -> Result<Self> {
        if shape.size() != u64::from(d) * u64::from(n) {
            return Err(Error::Dimension(format!("{shape} is not a partition of {d}*{n}")));
        }
        Ok(Filler {
            shape,
            heights: shape.transpose().parts().iter().map(|&h| h as usize).collect(),
            d,
            n,
            rows: shape.parts().iter().map(|&l| vec![0; l as usize]).collect(),
            counts: vec![0; d as usize + 1],
            nodes: 0,
        })
    }

    fn candidates(&self, i: usize, j: usize) -> std::ops::RangeInclusive<u32> {
        let left = if j > 0 { self.rows[i][j - 1] } else { 1 };
        let above = if i > 0 { self.rows[i - 1][j] + 1 } else { 1 };
        // Boxes below need strictly larger labels.
        let top = self.d.saturating_sub((self.heights[j] - 1 - i) as u32);
        left.max(above)..=top
    }

    /// Visits complete fillings; `pick` may reorder the candidate labels.
    /// Stops when `visit` returns false or the node budget runs out.
    fn run(
        &mut self,
        pos: usize,
        pick: &mut impl FnMut(Vec<u32>) -> Vec<u32>,
        visit: &mut impl FnMut(&[Vec<u32>]) -> bool,
        budget: u64,
    ) -> bool {
        let (i, j) = match self.cell(pos) {
            Some(c) => c,
            None => return visit(&self.rows),
        };
        self.nodes += 1;
        if self.nodes > budget {
            return false;
        }
        let options: Vec<u32> = self.candidates(i, j).filter(|&v| self.counts[v as usize] < self.n).collect();
        for v in pick(options) {
            self.rows[i][j] = v;
            self.counts[v as usize] += 1;
            let go_on = self.run(pos + 1, pick, visit, budget);
            self.counts[v as usize] -= 1;
            if !go_on {
                return false;
            }
        }
        true
    }

    fn cell(&self, mut pos: usize) -> Option<(usize, usize)> {
        for (i, &len) in self.shape.parts().iter().enumerate() {
            if pos < len as usize {
                return Some((i, pos));
            }
            pos -= len as usize;
        }
        None
    }
}

/// All semistandard tableaux of `shape` with content `n` of each label
/// `1..=d`, in lexicographic order of their row words; at most `limit`.
pub fn enumerate_ssyt(shape: &Partition, d: u32, n: u32, limit: Option<usize>) -> Result<Vec<Tableau>> {
    let mut filler = Filler::new(shape, d, n)?;
    let mut out = Vec::new();
    let cap = limit.unwrap_or(usize::MAX);
    if cap == 0 {
        return Ok(out);
    }
    filler.run(
        0,
        &mut |v| v,
        &mut |rows| {
            out.push(Tableau::from_rows(rows.to_vec()).expect("filled shape is valid"));
            out.len() < cap
        },
        u64::MAX,
    );
    Ok(out)
}

/// Up to `count` distinct semistandard tableaux drawn by randomized
/// backtracking from `seed`; the same seed gives the same list.
pub fn sample_ssyt(shape: &Partition, d: u32, n: u32, count: usize, seed: u64) -> Result<Vec<Tableau>> {
    const NODE_BUDGET: u64 = 200_000;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut found = BTreeSet::new();
    let mut order = Vec::new();
    for _ in 0..count.saturating_mul(20) {
        if found.len() >= count {
            break;
        }
        let mut filler = Filler::new(shape, d, n)?;
        let mut hit = None;
        filler.run(
            0,
            &mut |mut v| {
                v.shuffle(&mut rng);
                v
            },
            &mut |rows| {
                hit = Some(rows.to_vec());
                false
            },
            NODE_BUDGET,
        );
        if let Some(rows) = hit {
            if found.insert(rows.clone()) {
                order.push(Tableau::from_rows(rows).expect("filled shape is valid"));
            }
        } else if filler.nodes <= NODE_BUDGET {
            // Exhausted without a hit: there are no tableaux at all.
            break;
        }
    }
    Ok(order)
}
