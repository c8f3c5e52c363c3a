//! Multiplicity and occurrence obstructions: the power-sum multiplicity
//! (exact by plethysm when `k >= d`, otherwise a rank lower bound) against the
//! Chow upper bound `a_lambda(n[d])`.

use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::hwv::{
    attempt_seed, certified_rank, derive_seed, enumerate_ssyt, eval_chow, random_chow_point, PointKind, PrimeField,
    RankCertificate, Tableau, DEFAULT_PRIME, DEFAULT_RETRIES,
};
use crate::plethysm::plethysm;
use crate::semigroup::GeneratorFamily;

/// Big integers are written as decimal strings.
fn decimal<S: Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn parts<S: Serializer>(p: &Partition, s: S) -> std::result::Result<S::Ok, S::Error> {
    p.parts().serialize(s)
}

/// Randomized evaluation settings.
#[derive(Clone, Debug)]
pub struct EvalOptions {
    pub prime: u64,
    pub seed: u64,
    pub retries: u32,
    /// Number of semistandard tableaux tried when no basis is supplied.
    pub ssyt_limit: usize,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions {
            prime: DEFAULT_PRIME,
            seed: 1,
            retries: DEFAULT_RETRIES,
            ssyt_limit: 64,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Exactness {
    Exact,
    LowerBound,
}

#[derive(Clone, Debug, Serialize)]
pub struct PowMultiplicity {
    #[serde(serialize_with = "decimal")]
    pub value: BigUint,
    pub kind: Exactness,
    /// `a_lambda(d[n])`, an upper bound for every `k`.
    #[serde(serialize_with = "decimal")]
    pub plethysm: BigUint,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<RankCertificate>,
}

fn check_lambda(lambda: &Partition, m: usize, n: u32, d: u32) -> Result<()> {
    if lambda.size() != u64::from(d) * u64::from(n) {
        return Err(Error::InvalidParameters(format!("{lambda} is not a partition of {d}*{n}")));
    }
    if !lambda.is_m_partition(m) {
        return Err(Error::InvalidParameters(format!("{lambda} has more than m = {m} rows")));
    }
    Ok(())
}

/// Multiplicity of `lambda` in the degree-`d` part of the coordinate ring of
/// sums of `k` `n`-th powers of linear forms in `m` variables. Exact when
/// `k >= d`; otherwise the rank of an evaluation matrix at random points,
/// promoted to exact when it reaches the plethysm ceiling.
pub fn pow_multiplicity(
    lambda: &Partition,
    m: usize,
    n: u32,
    d: u32,
    k: usize,
    tableaux: Option<&[Tableau]>,
    opts: &EvalOptions,
) -> Result<PowMultiplicity> {
    check_lambda(lambda, m, n, d)?;
    let ceiling = plethysm(lambda, d, n)?;
    if k >= d as usize {
        return Ok(PowMultiplicity {
            value: ceiling.clone(),
            kind: Exactness::Exact,
            plethysm: ceiling,
            certificate: None,
        });
    }
    let owned;
    let basis = match tableaux {
        Some(t) => t,
        None => {
            owned = enumerate_ssyt(lambda, d, n, Some(opts.ssyt_limit))?;
            &owned
        }
    };
    if ceiling.is_zero() || basis.is_empty() {
        return Ok(PowMultiplicity {
            value: BigUint::zero(),
            kind: if ceiling.is_zero() { Exactness::Exact } else { Exactness::LowerBound },
            plethysm: ceiling,
            certificate: None,
        });
    }
    let field = PrimeField::for_dimension(opts.prime, m)?;
    let cert = certified_rank(&field, basis, PointKind::Pow { k }, m, n, basis.len(), opts.seed, opts.retries)?;
    let value = BigUint::from(cert.rank);
    if value > ceiling {
        return Err(Error::Internal(format!("rank {value} exceeds plethysm coefficient {ceiling}")));
    }
    Ok(PowMultiplicity {
        kind: if value == ceiling { Exactness::Exact } else { Exactness::LowerBound },
        value,
        plethysm: ceiling,
        certificate: Some(cert),
    })
}

/// `a_lambda(n[d])`, an upper bound for the multiplicity of `lambda` in the
/// degree-`d` coordinate ring of the Chow variety of products of `n` linear
/// forms in `m` variables. Requires `n >= m`.
pub fn chow_upper_bound(lambda: &Partition, m: usize, n: u32, d: u32) -> Result<BigUint> {
    if (n as usize) < m {
        return Err(Error::Hypothesis(format!("the Chow bound needs n >= m, got n = {n}, m = {m}")));
    }
    check_lambda(lambda, m, n, d)?;
    plethysm(lambda, n, d)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundBasis {
    /// `n >= m`: the orbit-closure comparison.
    Lemma,
    /// `n < m`: restricting a degree-`d` polynomial to products
    /// `l_1 ... l_n` gives a symmetric multihomogeneous function of the
    /// `l_i`, which embeds the coordinate ring in `Sym^n(Sym^d)`.
    Embedding,
}

#[derive(Clone, Debug, Serialize)]
pub struct ChowUpperBound {
    #[serde(serialize_with = "decimal")]
    pub value: BigUint,
    pub basis: BoundBasis,
}

/// The bound `a_lambda(n[d])` for any `n`, tagged with the argument that
/// justifies it.
pub fn chow_upper_bound_certified(lambda: &Partition, m: usize, n: u32, d: u32) -> Result<ChowUpperBound> {
    check_lambda(lambda, m, n, d)?;
    let basis = if n as usize >= m { BoundBasis::Lemma } else { BoundBasis::Embedding };
    Ok(ChowUpperBound {
        value: plethysm(lambda, n, d)?,
        basis,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LowerBasis {
    /// At most two rows with positive plethysm coefficient: binary forms
    /// always factor, and positivity is inherited by adding zero rows.
    FewRows,
    /// Rank of Chow evaluations of the given tableaux.
    Rank,
}

#[derive(Clone, Debug, Serialize)]
pub struct ChowLowerBound {
    pub value: usize,
    pub basis: LowerBasis,
    pub witnesses: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<RankCertificate>,
}

/// A certified lower bound for the Chow multiplicity of `lambda`.
pub fn chow_mult_lower_bound(
    lambda: &Partition,
    m: usize,
    n: u32,
    d: u32,
    tableaux: &[Tableau],
    opts: &EvalOptions,
) -> Result<ChowLowerBound> {
    check_lambda(lambda, m, n, d)?;
    if lambda.length() <= 2 && !plethysm(lambda, d, n)?.is_zero() {
        return Ok(ChowLowerBound {
            value: 1,
            basis: LowerBasis::FewRows,
            witnesses: Vec::new(),
            certificate: None,
        });
    }
    if tableaux.is_empty() {
        return Ok(ChowLowerBound {
            value: 0,
            basis: LowerBasis::Rank,
            witnesses: Vec::new(),
            certificate: None,
        });
    }
    let field = PrimeField::for_dimension(opts.prime, m)?;
    let cert = certified_rank(&field, tableaux, PointKind::Chow, m, n, tableaux.len(), opts.seed, opts.retries)?;
    Ok(ChowLowerBound {
        value: cert.rank,
        basis: LowerBasis::Rank,
        witnesses: tableaux.iter().map(Tableau::to_compact).collect(),
        certificate: Some(cert),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    MultiplicityObstruction,
    OccurrenceObstruction,
    None,
    Inconclusive,
}

impl Verdict {
    pub fn is_obstruction(self) -> bool {
        matches!(self, Verdict::MultiplicityObstruction | Verdict::OccurrenceObstruction)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Parameters {
    pub m: usize,
    pub n: u32,
    pub k: usize,
    pub d: u32,
    #[serde(serialize_with = "parts")]
    pub lambda: Partition,
}

#[derive(Clone, Debug, Serialize)]
pub struct ObstructionReport {
    pub schema: &'static str,
    pub check: &'static str,
    pub parameters: Parameters,
    pub pow_multiplicity: PowMultiplicity,
    pub chow_upper_bound: ChowUpperBound,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chow_lower_bound: Option<ChowLowerBound>,
    /// Lower and upper Chow bounds coincide.
    pub chow_exact: bool,
    pub verdict: Verdict,
}

impl ObstructionReport {
    fn new(
        check: &'static str,
        parameters: Parameters,
        pow: PowMultiplicity,
        upper: ChowUpperBound,
        lower: Option<ChowLowerBound>,
    ) -> Self {
        let chow_exact = lower.as_ref().is_some_and(|l| BigUint::from(l.value) == upper.value);
        let verdict = if upper.value < pow.value {
            if check == "occurrence" && upper.value.is_zero() {
                Verdict::OccurrenceObstruction
            } else {
                Verdict::MultiplicityObstruction
            }
        } else if pow.kind == Exactness::Exact && lower.as_ref().is_some_and(|l| BigUint::from(l.value) >= pow.value) {
            Verdict::None
        } else {
            Verdict::Inconclusive
        };
        ObstructionReport {
            schema: "1",
            check,
            parameters,
            pow_multiplicity: pow,
            chow_upper_bound: upper,
            chow_lower_bound: lower,
            chow_exact,
            verdict,
        }
    }
}

/// Compares the power-sum multiplicity with the Chow upper bound.
pub fn multiplicity_obstruction_check(
    m: usize,
    n: u32,
    k: usize,
    d: u32,
    lambda: &Partition,
    pow_tableaux: Option<&[Tableau]>,
    opts: &EvalOptions,
) -> Result<ObstructionReport> {
    let pow = pow_multiplicity(lambda, m, n, d, k, pow_tableaux, opts)?;
    let upper = chow_upper_bound_certified(lambda, m, n, d)?;
    let params = Parameters {
        m,
        n,
        k,
        d,
        lambda: lambda.clone(),
    };
    Ok(ObstructionReport::new("multiplicity", params, pow, upper, None))
}

/// Occurrence obstruction: the Chow upper bound vanishes while the
/// power-sum multiplicity is positive.
pub fn occurrence_obstruction_check(
    m: usize,
    n: u32,
    d: u32,
    lambda: &Partition,
    k: usize,
    opts: &EvalOptions,
) -> Result<ObstructionReport> {
    let pow = pow_multiplicity(lambda, m, n, d, k, None, opts)?;
    let upper = chow_upper_bound_certified(lambda, m, n, d)?;
    let params = Parameters {
        m,
        n,
        k,
        d,
        lambda: lambda.clone(),
    };
    Ok(ObstructionReport::new("occurrence", params, pow, upper, None))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Coverage {
    FewRows,
    Witness,
    Skipped,
    Uncovered,
}

#[derive(Clone, Debug, Serialize)]
pub struct PipelineRow {
    #[serde(serialize_with = "parts")]
    pub generator: Partition,
    pub d: u32,
    pub coverage: Coverage,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub attempt_seed: Option<u64>,
    #[serde(serialize_with = "decimal")]
    pub cache_size: BigUint,
}

#[derive(Clone, Debug, Serialize)]
pub struct PipelineReport {
    pub schema: &'static str,
    pub family: String,
    pub seed: u64,
    pub prime: u64,
    pub retries: u32,
    pub rows: Vec<PipelineRow>,
    pub uncovered: usize,
    pub skipped: usize,
}

/// Limits for the no-occurrence pipeline.
#[derive(Clone, Debug)]
pub struct PipelineLimits {
    /// Generators of larger degree are skipped.
    pub max_degree: Option<u32>,
    /// Witnesses whose placement-state count exceeds this are skipped.
    pub max_cache_size: Option<BigUint>,
}

/// Certifies a positive Chow multiplicity for every generator: short
/// generators by the few-rows argument, the rest by a nonzero evaluation of
/// their witness tableau at a random Chow point. Work is ordered by
/// increasing cache size; the report keeps the family's generator order.
pub fn no_occurrence_pipeline(
    fam: &GeneratorFamily,
    witnesses: &[Tableau],
    limits: &PipelineLimits,
    opts: &EvalOptions,
) -> Result<PipelineReport> {
    let field = PrimeField::for_dimension(opts.prime, fam.m)?;
    let mut jobs: Vec<(usize, &Partition, Option<&Tableau>, BigUint)> = fam
        .generators
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let w = witnesses.iter().find(|t| t.shape() == g);
            let size = w.map(|t| t.cache_size(fam.n)).unwrap_or_default();
            (i, g, w, size)
        })
        .collect();
    jobs.sort_by(|a, b| a.3.cmp(&b.3).then(a.0.cmp(&b.0)));
    let mut rows = jobs
        .into_par_iter()
        .map(|(i, g, w, cache_size)| -> Result<(usize, PipelineRow)> {
            let d = fam.degree_of(g).expect("validated on load");
            let mut row = PipelineRow {
                generator: g.clone(),
                d,
                coverage: Coverage::Uncovered,
                witness: w.map(Tableau::to_compact),
                attempt_seed: None,
                cache_size: cache_size.clone(),
            };
            if g.length() <= 2 {
                row.coverage = if plethysm(g, d, fam.n)?.is_zero() {
                    Coverage::Uncovered
                } else {
                    Coverage::FewRows
                };
                return Ok((i, row));
            }
            let too_big = limits.max_degree.is_some_and(|m| d > m)
                || limits.max_cache_size.as_ref().is_some_and(|m| &cache_size > m);
            if too_big {
                row.coverage = Coverage::Skipped;
                return Ok((i, row));
            }
            let Some(t) = w else { return Ok((i, row)) };
            let seed = derive_seed(opts.seed, i as u64);
            for attempt in 0..=opts.retries {
                let s = attempt_seed(seed, attempt);
                let pt = random_chow_point(&field, fam.m, fam.n as usize, s);
                if eval_chow(&field, t, &pt)? != 0 {
                    row.coverage = Coverage::Witness;
                    row.attempt_seed = Some(s);
                    break;
                }
            }
            Ok((i, row))
        })
        .collect::<Result<Vec<_>>>()?;
    rows.sort_by_key(|(i, _)| *i);
    let rows: Vec<PipelineRow> = rows.into_iter().map(|(_, r)| r).collect();
    Ok(PipelineReport {
        schema: "1",
        family: fam.family.clone(),
        seed: opts.seed,
        prime: opts.prime,
        retries: opts.retries,
        uncovered: rows.iter().filter(|r| r.coverage == Coverage::Uncovered).count(),
        skipped: rows.iter().filter(|r| r.coverage == Coverage::Skipped).count(),
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    #[test]
    fn strict_upper_bound_requires_n_at_least_m() {
        assert!(matches!(chow_upper_bound(&partition![2, 2, 2], 3, 2, 3), Err(Error::Hypothesis(_))));
        assert_eq!(chow_upper_bound(&partition![7, 3, 2], 3, 3, 4).unwrap(), BigUint::zero());
        assert_eq!(chow_upper_bound(&partition![11, 9, 8], 3, 4, 7).unwrap(), BigUint::zero());
        let b = chow_upper_bound_certified(&partition![2, 2, 2], 3, 2, 3).unwrap();
        assert_eq!((b.value, b.basis), (BigUint::zero(), BoundBasis::Embedding));
    }

    #[test]
    fn exact_power_sum_multiplicity() {
        let v = pow_multiplicity(&partition![34, 6, 2], 3, 6, 7, 7, None, &EvalOptions::default()).unwrap();
        assert_eq!(v.value, BigUint::from(8u32));
        assert_eq!(v.kind, Exactness::Exact);
    }

    #[test]
    fn few_rows_lower_bound() {
        let lb = chow_mult_lower_bound(&partition![8, 4], 3, 6, 2, &[], &EvalOptions::default()).unwrap();
        assert_eq!((lb.value, lb.basis), (1, LowerBasis::FewRows));
    }

    #[test]
    fn occurrence_first_row() {
        let r = occurrence_obstruction_check(3, 2, 3, &partition![2, 2, 2], 3, &EvalOptions::default()).unwrap();
        assert_eq!(r.verdict, Verdict::OccurrenceObstruction);
        let r = multiplicity_obstruction_check(3, 2, 3, 3, &partition![2, 2, 2], None, &EvalOptions::default()).unwrap();
        assert_eq!(r.verdict, Verdict::MultiplicityObstruction);
        assert!(r.chow_upper_bound.value.is_zero());
    }
}
