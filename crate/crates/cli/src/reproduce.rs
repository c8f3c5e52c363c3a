//! Reproduction runs. Each returns a serializable report and whether the
//! outcome is the expected one.

use num_bigint::{BigInt, BigUint};
use pleth_core::hwv::{load_tableaux_fixture, load_witnesses};
use pleth_core::obstructions::{
    multiplicity_obstruction_check, no_occurrence_pipeline, occurrence_obstruction_check, EvalOptions,
    ObstructionReport, PipelineLimits, PipelineReport, Verdict,
};
use pleth_core::plethysm::{foulkes_delta_case, plethysm};
use pleth_core::semigroup::load_family;
use pleth_core::{Partition, Result};
use serde::Serialize;

fn dec<S: serde::Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn dec_int<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn parts<S: serde::Serializer>(p: &Partition, s: S) -> std::result::Result<S::Ok, S::Error> {
    p.parts().serialize(s)
}

pub const TARGETS: &[&str] = &["thm-main-2a", "thm-main-2b", "occurrence-table", "cor-key", "pipeline-3x6"];

/// Power-sum rank against the Chow bound for `(34,6,2)`, `Pow_{3,4}^6`, degree 7.
pub fn thm_main_2a(opts: &EvalOptions) -> Result<(ObstructionReport, bool)> {
    let basis = load_tableaux_fixture("tableaux_34_6_2")?;
    let r = multiplicity_obstruction_check(3, 6, 4, 7, &Partition::new(vec![34, 6, 2])?, Some(&basis), opts)?;
    let ok = r.verdict == Verdict::MultiplicityObstruction;
    Ok((r, ok))
}

/// Same for `(47,7,2)`, `Pow_{3,4}^7`, degree 8.
pub fn thm_main_2b(opts: &EvalOptions) -> Result<(ObstructionReport, bool)> {
    let basis = load_tableaux_fixture("tableaux_47_7_2")?;
    let r = multiplicity_obstruction_check(3, 7, 4, 8, &Partition::new(vec![47, 7, 2])?, Some(&basis), opts)?;
    let ok = r.verdict == Verdict::MultiplicityObstruction;
    Ok((r, ok))
}

/// `(m, n, lambda, d, tabulated a_lambda(d[n]))`.
pub const OCCURRENCE_ROWS: &[(usize, u32, &[u32], u32, u32)] = &[
    (3, 2, &[2, 2, 2], 3, 1),
    (3, 3, &[7, 3, 2], 4, 1),
    (3, 4, &[11, 9, 8], 7, 1),
    (3, 5, &[12, 9, 9], 6, 1),
    (4, 6, &[14, 14, 13, 13], 9, 11),
];

#[derive(Clone, Debug, Serialize)]
pub struct OccurrenceRow {
    pub tabulated: u32,
    pub matches_tabulated: bool,
    pub report: ObstructionReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct OccurrenceTable {
    pub schema: &'static str,
    pub rows: Vec<OccurrenceRow>,
    pub all_obstructions: bool,
    pub all_match_tabulated: bool,
}

/// Exit status follows the verdicts; disagreements with the tabulated
/// coefficients are reported per row.
pub fn occurrence_table(opts: &EvalOptions) -> Result<(OccurrenceTable, bool)> {
    let mut rows = Vec::new();
    for &(m, n, lambda, d, tabulated) in OCCURRENCE_ROWS {
        let report = occurrence_obstruction_check(m, n, d, &Partition::new(lambda.to_vec())?, d as usize, opts)?;
        rows.push(OccurrenceRow {
            tabulated,
            matches_tabulated: report.pow_multiplicity.value == BigUint::from(tabulated)
                && report.chow_upper_bound.value == BigUint::from(0u32),
            report,
        });
    }
    let all_obstructions = rows.iter().all(|r| r.report.verdict == Verdict::OccurrenceObstruction);
    let all_match_tabulated = rows.iter().all(|r| r.matches_tabulated);
    let table = OccurrenceTable {
        schema: "1",
        rows,
        all_obstructions,
        all_match_tabulated,
    };
    Ok((table, all_obstructions))
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilyRow {
    pub n: u32,
    #[serde(serialize_with = "parts")]
    pub lambda: Partition,
    #[serde(serialize_with = "dec")]
    pub pow_side: BigUint,
    #[serde(serialize_with = "dec")]
    pub chow_side: BigUint,
    #[serde(serialize_with = "dec_int")]
    pub difference: BigInt,
    pub delta_case: &'static str,
}

#[derive(Clone, Debug, Serialize)]
pub struct DeltaRow {
    pub n: u32,
    pub r: u32,
    pub case: &'static str,
    #[serde(serialize_with = "dec")]
    pub value: BigUint,
}

#[derive(Clone, Debug, Serialize)]
pub struct CorKey {
    pub schema: &'static str,
    pub family: Vec<FamilyRow>,
    pub deltas: Vec<DeltaRow>,
    pub exceptions: Vec<(u32, u32)>,
}

/// The `(n^2-2, n, 2)` family for `n = 2..=family_max` by the general
/// plethysm route, and the case split of
/// `a_(L,r,2)(n+1[n]) - a_(L,r,2)(n[n+1])` for `n = 2..=delta_max`.
pub fn cor_key(family_max: u32, delta_max: u32) -> Result<(CorKey, bool)> {
    let mut ok = true;
    let mut family = Vec::new();
    for n in 2..=family_max {
        let lambda = Partition::new(vec![n * n - 2, n, 2])?;
        let pow_side = plethysm(&lambda, n + 1, n)?;
        let chow_side = plethysm(&lambda, n, n + 1)?;
        let difference = BigInt::from(pow_side.clone()) - BigInt::from(chow_side.clone());
        let case = foulkes_delta_case(n, n)?;
        ok &= difference == BigInt::from(1) && case.label() == "one";
        family.push(FamilyRow {
            n,
            lambda,
            pow_side,
            chow_side,
            difference,
            delta_case: case.label(),
        });
    }
    let mut deltas = Vec::new();
    let mut exceptions = Vec::new();
    for n in 2..=delta_max {
        for r in 2..=(n * n + n - 2) / 2 {
            let case = foulkes_delta_case(n, r)?;
            if case.label() == "exception" {
                exceptions.push((n, r));
            }
            deltas.push(DeltaRow {
                n,
                r,
                case: case.label(),
                value: case.value(),
            });
        }
    }
    let report = CorKey {
        schema: "1",
        family,
        deltas,
        exceptions,
    };
    Ok((report, ok))
}

/// Positivity certificates for the generators of the `3x6` family.
pub fn pipeline_3x6(max_degree: Option<u32>, opts: &EvalOptions) -> Result<(PipelineReport, bool)> {
    let fam = load_family("3x6")?;
    let witnesses = load_witnesses("3x6")?;
    let limits = PipelineLimits {
        max_degree,
        max_cache_size: None,
    };
    let report = no_occurrence_pipeline(&fam, &witnesses, &limits, opts)?;
    let ok = report.uncovered == 0;
    Ok((report, ok))
}
