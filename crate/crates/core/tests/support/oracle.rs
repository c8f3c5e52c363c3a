//! Independent reference evaluation shared by test targets.

use std::collections::BTreeSet;

use itertools::Itertools;
use pleth_core::combinatorics::Partition;
use pleth_core::hwv::{tableau_from_permutation, LinearForm, PrimeField, Tableau};

fn leibniz(field: &PrimeField, rows: &[Vec<u64>]) -> u64 {
    let h = rows.len();
    let mut total = 0;
    for perm in (0..h).permutations(h) {
        let inversions = (0..h).flat_map(|i| (i + 1..h).map(move |j| (i, j))).filter(|&(i, j)| perm[i] > perm[j]).count();
        let mut term = 1;
        for (r, &c) in perm.iter().enumerate() {
            term = field.mul(term, rows[r][c]);
        }
        total = if inversions % 2 == 0 { field.add(total, term) } else { field.sub(total, term) };
    }
    total
}

/// Expands `(l_1 ... l_n)^{(x) d}` into its `(n!)^d` rank-one terms
/// `(l_s1(1) (x) ... ) (x) ...` and contracts each with the tableau's column
/// antisymmetrizers, writing every determinant out by the Leibniz formula.
/// Box `b` with label `i` reads tensor slot `j`, where `b` is the `j`-th box
/// labeled `i` in column order.
pub fn tensor_oracle(field: &PrimeField, t: &Tableau, forms: &[LinearForm]) -> u64 {
    let n = forms.len();
    let d = t.max_label() as usize;
    let columns = t.columns();
    let mut seen = vec![0usize; d + 1];
    let slots: Vec<Vec<(usize, usize)>> = columns
        .iter()
        .map(|col| {
            col.iter()
                .map(|&v| {
                    let s = seen[v as usize];
                    seen[v as usize] += 1;
                    (v as usize - 1, s)
                })
                .collect()
        })
        .collect();
    let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    let mut total = 0;
    for sigma in (0..d).map(|_| perms.iter()).multi_cartesian_product() {
        let mut term = 1;
        for col in &slots {
            let h = col.len();
            let rows: Vec<Vec<u64>> = col.iter().map(|&(label, slot)| forms[sigma[label][slot]].coords()[..h].to_vec()).collect();
            term = field.mul(term, leibniz(field, &rows));
            if term == 0 {
                break;
            }
        }
        total = field.add(total, term);
    }
    if d == 0 {
        return 1;
    }
    total
}

/// Every distinct filling with the right content, via random permutations.
pub fn fillings(shape: &Partition, n: u32) -> Vec<Tableau> {
    let size = shape.size() as usize;
    let mut out = BTreeSet::new();
    for perm in (1..=size).permutations(size) {
        out.insert(tableau_from_permutation(shape, &perm, n).unwrap().rows().to_vec());
    }
    out.into_iter().map(|r| Tableau::from_rows(r).unwrap()).collect()
}
