use ahash::AHashSet;
use serde::Serialize;

use super::enumerate_m_partitions;
use super::family::GeneratorFamily;
use crate::combinatorics::Partition;
use crate::error::{Error, Result};

/// Decomposes partitions over one family, remembering residuals that are
/// known not to decompose. Results do not depend on the memo contents.
pub struct Decomposer<'a> {
    fam: &'a GeneratorFamily,
    order: Vec<Partition>,
    failed: AHashSet<Partition>,
}

impl<'a> Decomposer<'a> {
    pub fn new(fam: &'a GeneratorFamily) -> Self {
        let mut order = fam.generators.clone();
        order.sort_by(|a, b| b.size().cmp(&a.size()).then_with(|| b.cmp(a)));
        Decomposer {
            fam,
            order,
            failed: AHashSet::new(),
        }
    }

    /// A multiset of generators summing to `lambda`, or `None`.
    pub fn decompose(&mut self, lambda: &Partition) -> Result<Option<Vec<Partition>>> {
        let Some(mut d) = self.fam.degree_of(lambda).filter(|_| lambda.is_m_partition(self.fam.m)) else {
            return Err(Error::InvalidParameters(format!(
                "{lambda} is not a {}-partition of a multiple of {}",
                self.fam.m, self.fam.n
            )));
        };
        // Peel off reduction generators while the degree is large, keeping
        // the chain so a failed search can fall back to earlier residuals.
        let mut chain = vec![(lambda.clone(), Vec::<Partition>::new())];
        while d > self.fam.base_search_bound {
            let (current, used) = chain.last().expect("chain is never empty");
            let Some((next, g, next_d)) = self.reduce_once(current, d) else { break };
            let mut used = used.clone();
            used.push(g);
            chain.push((next, used));
            d = next_d;
        }
        for (residual, used) in chain.into_iter().rev() {
            if let Some(mut rest) = self.search(&residual) {
                rest.extend(used);
                rest.sort_by(|a, b| b.cmp(a));
                return Ok(Some(rest));
            }
        }
        Ok(None)
    }

    fn reduce_once(&self, lambda: &Partition, d: u32) -> Option<(Partition, Partition, u32)> {
        let counts = lambda.column_counts();
        self.fam.reductions.iter().find_map(|r| {
            let c = counts.get(r.column_height.checked_sub(1)?).copied().unwrap_or(0);
            let step = self.fam.degree_of(&r.generator)?;
            let next_d = d.checked_sub(step)?;
            if c < r.min_columns || next_d < self.fam.stable_from {
                return None;
            }
            Some((lambda.checked_sub(&r.generator)?, r.generator.clone(), next_d))
        })
    }

    fn search(&mut self, residual: &Partition) -> Option<Vec<Partition>> {
        if residual.is_empty() {
            return Some(Vec::new());
        }
        if self.failed.contains(residual) || self.fam.is_excluded(residual) {
            return None;
        }
        for i in 0..self.order.len() {
            if self.order[i].size() > residual.size() {
                continue;
            }
            let Some(rest) = residual.checked_sub(&self.order[i]) else { continue };
            if let Some(mut found) = self.search(&rest) {
                found.push(self.order[i].clone());
                return Some(found);
            }
        }
        self.failed.insert(residual.clone());
        None
    }
}

/// One-shot convenience wrapper around [`Decomposer`].
pub fn decompose(lambda: &Partition, fam: &GeneratorFamily) -> Result<Option<Vec<Partition>>> {
    Decomposer::new(fam).decompose(lambda)
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepRow {
    pub d: u32,
    pub partitions: usize,
    pub decomposable: usize,
    pub excluded: usize,
    /// Decomposable with an excluded bar; contradicts the vanishing table.
    pub excluded_but_decomposable: Vec<Partition>,
    /// Not decomposable although the bar is not excluded.
    pub allowed_but_not_decomposable: Vec<Partition>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub family: String,
    pub rows: Vec<SweepRow>,
}

impl SweepReport {
    /// Whether "decomposes iff the bar is not excluded" held throughout.
    pub fn is_exact(&self) -> bool {
        self.rows
            .iter()
            .all(|r| r.excluded_but_decomposable.is_empty() && r.allowed_but_not_decomposable.is_empty())
    }
}

/// Decomposes every m-partition of `n * d` for `d = 1..=max_degree` and
/// records where decomposability and bar exclusion disagree.
pub fn completeness_sweep(fam: &GeneratorFamily, max_degree: u32) -> Result<SweepReport> {
    let mut dec = Decomposer::new(fam);
    let mut rows = Vec::new();
    for d in 1..=max_degree {
        let mut row = SweepRow {
            d,
            partitions: 0,
            decomposable: 0,
            excluded: 0,
            excluded_but_decomposable: Vec::new(),
            allowed_but_not_decomposable: Vec::new(),
        };
        for lambda in enumerate_m_partitions(u64::from(fam.n) * u64::from(d), fam.m) {
            row.partitions += 1;
            let excluded = fam.is_excluded(&lambda);
            let found = dec.decompose(&lambda)?;
            if let Some(parts) = &found {
                check_sum(&lambda, parts, fam)?;
                row.decomposable += 1;
            }
            row.excluded += usize::from(excluded);
            match (found.is_some(), excluded) {
                (true, true) => row.excluded_but_decomposable.push(lambda),
                (false, false) => row.allowed_but_not_decomposable.push(lambda),
                _ => {}
            }
        }
        rows.push(row);
    }
    Ok(SweepReport {
        family: fam.family.clone(),
        rows,
    })
}

fn check_sum(lambda: &Partition, parts: &[Partition], fam: &GeneratorFamily) -> Result<()> {
    let total = parts.iter().fold(Partition::empty(), |acc, p| acc.add(p));
    if &total != lambda || parts.iter().any(|p| !fam.generators.contains(p)) {
        return Err(Error::Internal(format!("decomposition of {lambda} does not add up")));
    }
    Ok(())
}
