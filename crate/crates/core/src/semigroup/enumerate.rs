use crate::combinatorics::Partition;

/// All partitions of `total` with at most `m` parts, in reverse
/// lexicographic order: `(4), (3,1), (2,2)` for `(4, 2)`.
pub fn enumerate_m_partitions(total: u64, m: usize) -> MPartitions {
    let total = u32::try_from(total).expect("partition size fits in u32");
    let current = if m == 0 {
        (total == 0).then(Vec::new)
    } else {
        let mut first = vec![0u32; m];
        first[0] = total;
        Some(first)
    };
    MPartitions { current }
}

/// Iterator returned by [`enumerate_m_partitions`].
pub struct MPartitions {
    current: Option<Vec<u32>>,
}

impl Iterator for MPartitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let out = self.current.take()?;
        self.current = successor(&out);
        Some(Partition::new(out).expect("generated sequences are weakly decreasing"))
    }
}

/// Next partition in reverse lexicographic order: lower the rightmost part
/// that can be lowered by one and refill everything after it greedily.
fn successor(a: &[u32]) -> Option<Vec<u32>> {
    let m = a.len();
    let mut tail: u64 = 0;
    for i in (0..m).rev() {
        if a[i] > 0 {
            let cap = a[i] - 1;
            let room = (m - 1 - i) as u64 * u64::from(cap);
            if tail < room {
                let mut next = a[..i].to_vec();
                next.push(cap);
                let mut left = tail + 1;
                for _ in i + 1..m {
                    let v = left.min(u64::from(cap));
                    next.push(v as u32);
                    left -= v;
                }
                return Some(next);
            }
        }
        tail += u64::from(a[i]);
    }
    None
}
