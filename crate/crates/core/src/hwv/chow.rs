//! Evaluation of the highest weight vector function of a tableau at a point
//! `l_1 ... l_n` of the Chow variety.
//!
//! A placement puts one of the `n` forms on every box; it is proper when, for
//! each label, the boxes carrying that label receive every form exactly once.
//! The function value is the sum over proper placements of the product over
//! columns of the determinant of the placed forms (first `h` coordinates for
//! a column of height `h`). Global normalizing constants are dropped.
//!
//! The sum is computed column by column. Two partial placements that used
//! the same sets of forms for every label have identical futures, so the DP
//! state after `k` columns is the tuple of per-label used-form sets and only
//! the states of one column are kept at a time.

use std::hash::Hash;

use ahash::AHashMap;

use super::field::PrimeField;
use super::point::{ChowPoint, LinearForm};
use super::tableau::Tableau;
use crate::error::{Error, Result};

/// Determinant of the `s x s` matrix formed by the first `s` coordinates of
/// `s` forms.
pub fn column_det(field: &PrimeField, forms: &[&LinearForm]) -> Result<u64> {
    let s = forms.len();
    if let Some(f) = forms.iter().find(|f| f.dim() < s) {
        return Err(Error::Dimension(format!("{s} forms but a form has only {} coordinates", f.dim())));
    }
    let rows = forms.iter().map(|f| f.coords()[..s].to_vec()).collect();
    Ok(field.det(rows))
}

/// Whether partial placements that already make a column determinant vanish
/// are dropped early. Both settings give the same value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pruning {
    Pruned,
    Unpruned,
}

/// Per-label used-form sets; bit `label * n + form`.
trait PlacementKey: Clone + Eq + Hash {
    fn empty(bits: usize) -> Self;
    fn has(&self, bit: usize) -> bool;
    fn set(&mut self, bit: usize);
    fn clear(&mut self, bit: usize);
}

impl PlacementKey for u128 {
    fn empty(_: usize) -> Self {
        0
    }
    fn has(&self, bit: usize) -> bool {
        self >> bit & 1 == 1
    }
    fn set(&mut self, bit: usize) {
        *self |= 1 << bit;
    }
    fn clear(&mut self, bit: usize) {
        *self &= !(1 << bit);
    }
}

impl PlacementKey for Box<[u64]> {
    fn empty(bits: usize) -> Self {
        vec![0u64; bits.div_ceil(64)].into_boxed_slice()
    }
    fn has(&self, bit: usize) -> bool {
        self[bit / 64] >> (bit % 64) & 1 == 1
    }
    fn set(&mut self, bit: usize) {
        self[bit / 64] |= 1 << (bit % 64);
    }
    fn clear(&mut self, bit: usize) {
        self[bit / 64] &= !(1 << (bit % 64));
    }
}

/// Column determinants for every ordered tuple of form indices, tabulated
/// per column height when small enough.
struct DetTable<'a> {
    field: &'a PrimeField,
    forms: &'a [LinearForm],
    tables: AHashMap<usize, Vec<u64>>,
}

const MAX_TABLE: usize = 1 << 20;

impl<'a> DetTable<'a> {
    fn new(field: &'a PrimeField, forms: &'a [LinearForm], heights: impl Iterator<Item = usize>) -> Self {
        let n = forms.len();
        let mut tables = AHashMap::new();
        for h in heights {
            if tables.contains_key(&h) {
                continue;
            }
            let Some(size) = n.checked_pow(h as u32).filter(|&s| s <= MAX_TABLE) else { continue };
            let mut t = vec![0u64; size];
            let mut idx = vec![0usize; h];
            for (lin, slot) in t.iter_mut().enumerate() {
                let mut rest = lin;
                for x in idx.iter_mut() {
                    *x = rest % n;
                    rest /= n;
                }
                let picked: Vec<&LinearForm> = idx.iter().map(|&i| &forms[i]).collect();
                *slot = column_det(field, &picked).expect("heights checked against m");
            }
            tables.insert(h, t);
        }
        DetTable { field, forms, tables }
    }

    fn get(&self, idx: &[usize]) -> u64 {
        let n = self.forms.len();
        match self.tables.get(&idx.len()) {
            Some(t) => t[idx.iter().rev().fold(0, |acc, &i| acc * n + i)],
            None => {
                let picked: Vec<&LinearForm> = idx.iter().map(|&i| &self.forms[i]).collect();
                column_det(self.field, &picked).expect("heights checked against m")
            }
        }
    }
}

/// Checks the tableau against the point and returns `(d, n)`.
pub(crate) fn validate(t: &Tableau, forms: &[LinearForm], n: usize) -> Result<u32> {
    let m = forms.first().map(LinearForm::dim).unwrap_or(0);
    if forms.iter().any(|f| f.dim() != m) {
        return Err(Error::Dimension("forms of different lengths".into()));
    }
    if t.shape().length() > m {
        return Err(Error::Shape(format!("{} has more than m = {m} rows", t.shape())));
    }
    t.check_content(n as u32)
}

/// Value at a Chow point, with pruning.
pub fn eval_chow(field: &PrimeField, t: &Tableau, pt: &ChowPoint) -> Result<u64> {
    eval_chow_with(field, t, pt, Pruning::Pruned)
}

pub fn eval_chow_with(field: &PrimeField, t: &Tableau, pt: &ChowPoint, pruning: Pruning) -> Result<u64> {
    let n = pt.forms.len();
    let d = validate(t, &pt.forms, n)? as usize;
    let bits = d * n;
    if bits <= 128 {
        Ok(run::<u128>(field, t, &pt.forms, bits, pruning))
    } else {
        Ok(run::<Box<[u64]>>(field, t, &pt.forms, bits, pruning))
    }
}

fn run<K: PlacementKey>(field: &PrimeField, t: &Tableau, forms: &[LinearForm], bits: usize, pruning: Pruning) -> u64 {
    let n = forms.len();
    let columns = t.columns();
    let dets = DetTable::new(field, forms, columns.iter().map(Vec::len));
    let mut current: AHashMap<K, u64> = AHashMap::new();
    current.insert(K::empty(bits), 1);
    let mut chosen = Vec::new();
    for col in &columns {
        let labels: Vec<usize> = col.iter().map(|&v| v as usize - 1).collect();
        let mut next: AHashMap<K, u64> = AHashMap::with_capacity(current.len());
        for (state, acc) in current {
            let mut key = state;
            extend(field, &dets, &labels, n, pruning, &mut key, &mut chosen, acc, &mut next);
        }
        if pruning == Pruning::Pruned {
            next.retain(|_, v| *v != 0);
        }
        current = next;
    }
    current.values().fold(0, |acc, &v| field.add(acc, v))
}

/// Assigns forms to the boxes of one column, recursing box by box.
#[allow(clippy::too_many_arguments)]
fn extend<K: PlacementKey>(
    field: &PrimeField,
    dets: &DetTable<'_>,
    labels: &[usize],
    n: usize,
    pruning: Pruning,
    key: &mut K,
    chosen: &mut Vec<usize>,
    acc: u64,
    out: &mut AHashMap<K, u64>,
) {
    let r = chosen.len();
    if r == labels.len() {
        let det = dets.get(chosen);
        let value = field.mul(acc, det);
        if pruning == Pruning::Pruned && value == 0 {
            return;
        }
        let slot = out.entry(key.clone()).or_insert(0);
        *slot = field.add(*slot, value);
        return;
    }
    for form in 0..n {
        let bit = labels[r] * n + form;
        if key.has(bit) {
            continue;
        }
        if pruning == Pruning::Pruned && chosen.contains(&form) {
            continue;
        }
        key.set(bit);
        chosen.push(form);
        extend(field, dets, labels, n, pruning, key, chosen, acc, out);
        chosen.pop();
        key.clear(bit);
    }
}
