//! Evaluation at a power sum `l_1^n + ... + l_k^n`.
//!
//! Each summand `l_t^n` is a rank-one symmetric tensor, so expanding the
//! `d`-fold product assigns one form `f(i)` to every label `i`; a box labeled
//! `i` then always carries `l_f(i)`. The value is the sum over all `k^d`
//! maps `f` of the product of column determinants, normalizing constants
//! dropped.

use ahash::AHashMap;

use super::chow::{column_det, validate};
use super::field::PrimeField;
use super::point::{LinearForm, PowPoint};
use super::tableau::Tableau;
use crate::error::Result;

pub fn eval_pow(field: &PrimeField, t: &Tableau, pt: &PowPoint, n: u32) -> Result<u64> {
    let d = validate(t, &pt.forms, n as usize)? as usize;
    if pt.forms.is_empty() {
        return Ok(if d == 0 { 1 } else { 0 });
    }
    // Identical columns contribute the same determinant; group them and
    // attach each group to its largest label, the moment it is determined.
    let mut groups: AHashMap<Vec<usize>, u64> = AHashMap::new();
    for col in t.columns() {
        *groups.entry(col.iter().map(|&v| v as usize - 1).collect()).or_default() += 1;
    }
    let mut by_last: Vec<Vec<(Vec<usize>, u64)>> = vec![Vec::new(); d];
    for (labels, mult) in groups {
        let last = *labels.iter().max().expect("columns are nonempty");
        by_last[last].push((labels, mult));
    }
    for g in &mut by_last {
        g.sort();
    }
    let mut assignment = vec![0usize; d];
    Ok(walk(field, &pt.forms, &by_last, &mut assignment, 0, 1))
}

fn walk(
    field: &PrimeField,
    forms: &[LinearForm],
    by_last: &[Vec<(Vec<usize>, u64)>],
    assignment: &mut [usize],
    label: usize,
    acc: u64,
) -> u64 {
    if label == assignment.len() {
        return acc;
    }
    let mut total = 0;
    for form in 0..forms.len() {
        assignment[label] = form;
        let mut value = acc;
        for (labels, mult) in &by_last[label] {
            if value == 0 {
                break;
            }
            let picked: Vec<&LinearForm> = labels.iter().map(|&l| &forms[assignment[l]]).collect();
            let det = column_det(field, &picked).expect("heights checked against m");
            value = field.mul(value, field.pow(det, *mult));
        }
        if value != 0 {
            total = field.add(total, walk(field, forms, by_last, assignment, label + 1, value));
        }
    }
    total
}
