use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::chow::eval_chow;
use super::field::PrimeField;
use super::point::{derive_seed, random_chow_point, random_pow_point, ChowPoint, PowPoint};
use super::pow::eval_pow;
use super::tableau::Tableau;
use crate::error::{Error, Result};

/// Evaluations whose zero result is retried with fresh points.
pub const DEFAULT_RETRIES: u32 = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum PointKind {
    Chow,
    Pow { k: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Point {
    Chow(ChowPoint),
    Pow(PowPoint),
}

/// `count` points of the given kind; point `j` is drawn from
/// `derive_seed(seed, j)`, so the list does not depend on scheduling.
pub fn random_points(field: &PrimeField, kind: PointKind, m: usize, n: u32, count: usize, seed: u64) -> Vec<Point> {
    (0..count)
        .map(|j| {
            let s = derive_seed(seed, j as u64);
            match kind {
                PointKind::Chow => Point::Chow(random_chow_point(field, m, n as usize, s)),
                PointKind::Pow { k } => Point::Pow(random_pow_point(field, m, k, s)),
            }
        })
        .collect()
}

pub fn evaluate(field: &PrimeField, t: &Tableau, point: &Point, n: u32) -> Result<u64> {
    match point {
        Point::Chow(p) => {
            if p.forms.len() != n as usize {
                return Err(Error::Dimension(format!("Chow point has {} forms, n = {n}", p.forms.len())));
            }
            eval_chow(field, t, p)
        }
        Point::Pow(p) => eval_pow(field, t, p, n),
    }
}

/// Entry `(i, j)` is tableau `i` evaluated at point `j`. Entries are
/// computed in parallel on the current rayon pool.
pub fn evaluation_matrix(field: &PrimeField, tableaux: &[Tableau], points: &[Point], n: u32) -> Result<Vec<Vec<u64>>> {
    if let Some(first) = tableaux.first() {
        if tableaux.iter().any(|t| t.shape() != first.shape()) {
            return Err(Error::Dimension("tableaux of different shapes".into()));
        }
    }
    let cells: Vec<(usize, usize)> = (0..tableaux.len())
        .flat_map(|i| (0..points.len()).map(move |j| (i, j)))
        .collect();
    let values = cells
        .par_iter()
        .map(|&(i, j)| evaluate(field, &tableaux[i], &points[j], n))
        .collect::<Result<Vec<u64>>>()?;
    Ok(values.chunks(points.len().max(1)).map(<[u64]>::to_vec).take(tableaux.len()).collect())
}

pub fn rank(field: &PrimeField, matrix: &[Vec<u64>]) -> usize {
    field.rank(matrix.to_vec())
}

/// A rank computed at reproducible random points. The rank of the matrix
/// modulo `prime` is a lower bound for the dimension spanned by the
/// functions over the rationals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankCertificate {
    pub rank: usize,
    pub tableaux: usize,
    pub points: usize,
    pub point_kind: PointKind,
    pub seed: u64,
    /// Seed of the attempt that produced `rank`.
    pub attempt_seed: u64,
    pub prime: u64,
    /// Additional attempts made after the first.
    pub retries: u32,
}

impl RankCertificate {
    pub fn is_full(&self) -> bool {
        self.rank == self.tableaux.min(self.points)
    }
}

/// Seed of attempt `a`: the master seed itself first, then fresh derived
/// seeds.
pub fn attempt_seed(seed: u64, attempt: u32) -> u64 {
    if attempt == 0 {
        seed
    } else {
        derive_seed(seed ^ 0x0005_EED0_FA77_E4D7_u64, u64::from(attempt))
    }
}

/// Evaluates `tableaux` at `points` random points, retrying with fresh
/// points up to `max_retries` times until the matrix has full rank. Reports
/// the best rank observed.
#[allow(clippy::too_many_arguments)]
pub fn certified_rank(
    field: &PrimeField,
    tableaux: &[Tableau],
    kind: PointKind,
    m: usize,
    n: u32,
    points: usize,
    seed: u64,
    max_retries: u32,
) -> Result<RankCertificate> {
    let target = tableaux.len().min(points);
    let mut best: Option<RankCertificate> = None;
    for attempt in 0..=max_retries {
        let s = attempt_seed(seed, attempt);
        let pts = random_points(field, kind, m, n, points, s);
        let matrix = evaluation_matrix(field, tableaux, &pts, n)?;
        let r = rank(field, &matrix);
        if best.as_ref().is_none_or(|b| r > b.rank) {
            best = Some(RankCertificate {
                rank: r,
                tableaux: tableaux.len(),
                points,
                point_kind: kind,
                seed,
                attempt_seed: s,
                prime: field.modulus(),
                retries: attempt,
            });
        }
        if r == target {
            break;
        }
    }
    let mut cert = best.expect("at least one attempt runs");
    if !cert.is_full() {
        cert.retries = max_retries;
    }
    Ok(cert)
}
