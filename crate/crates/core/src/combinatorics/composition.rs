use serde::{Deserialize, Serialize};

/// A weak composition: a fixed-length vector of nonnegative entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn total(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// All weak compositions of `total` into exactly `parts` entries.
///
/// Order is lexicographic descending: the largest first coordinate comes
/// first, ties broken the same way on the remaining coordinates. For
/// `(1, 2)` this yields `[(1,0), (0,1)]`.
pub fn compositions(total: u32, parts: usize) -> Vec<Composition> {
    let mut out = Vec::new();
    if parts == 0 {
        if total == 0 {
            out.push(Composition(Vec::new()));
        }
        return out;
    }
    let mut current = vec![0u32; parts];
    fill(&mut current, 0, total, &mut out);
    out
}

fn fill(current: &mut [u32], pos: usize, remaining: u32, out: &mut Vec<Composition>) {
    if pos + 1 == current.len() {
        current[pos] = remaining;
        out.push(Composition(current.to_vec()));
        return;
    }
    for v in (0..=remaining).rev() {
        current[pos] = v;
        fill(current, pos + 1, remaining - v, out);
    }
}
