//! Highest weight vector functions indexed by tableaux, evaluated over a
//! prime field at points of the Chow variety and of power-sum varieties.

mod chow;
mod field;
mod fixtures;
mod point;
mod pow;
mod rank;
mod ssyt;
mod tableau;

pub use chow::{column_det, eval_chow, eval_chow_with, Pruning};
pub use fixtures::{load_tableaux_fixture, load_witnesses, FIXTURE_IDS};
pub use field::{is_prime, PrimeField, DEFAULT_PRIME, LARGE_PRIME};
pub use point::{derive_seed, random_chow_point, random_pow_point, ChowPoint, LinearForm, PowPoint};
pub use pow::eval_pow;
pub use rank::{
    attempt_seed, certified_rank, evaluate, evaluation_matrix, rank, random_points, Point, PointKind, RankCertificate,
    DEFAULT_RETRIES,
};
pub use ssyt::{enumerate_ssyt, sample_ssyt};
pub use tableau::{parse_compact_tableaux, parse_json_tableaux, parse_tableaux, tableau_from_permutation, Tableau};
