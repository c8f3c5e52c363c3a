use num_bigint::BigUint;
use pleth_core::hwv::{enumerate_ssyt, load_tableaux_fixture, load_witnesses, parse_compact_tableaux};
use pleth_core::obstructions::*;
use pleth_core::plethysm::{foulkes_delta_case, plethysm};
use pleth_core::semigroup::{enumerate_m_partitions, load_family};
use pleth_core::Partition;
use proptest::prelude::*;

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn big(v: u32) -> BigUint {
    BigUint::from(v)
}

#[test]
fn bundled_bases_reach_the_plethysm_ceiling() {
    let opts = EvalOptions::default();
    let basis = load_tableaux_fixture("tableaux_34_6_2").unwrap();
    let v = pow_multiplicity(&p(&[34, 6, 2]), 3, 6, 7, 4, Some(&basis), &opts).unwrap();
    assert_eq!((v.value.clone(), v.kind), (big(8), Exactness::Exact));
    assert_eq!(v.certificate.unwrap().rank, 8);
    let r = multiplicity_obstruction_check(3, 6, 4, 7, &p(&[34, 6, 2]), Some(&basis), &opts).unwrap();
    assert_eq!(r.verdict, Verdict::MultiplicityObstruction);
    assert_eq!(r.chow_upper_bound.value, big(7));
}

#[test]
fn brill_family_is_an_obstruction() {
    let opts = EvalOptions::default();
    for n in 2..=6u32 {
        let lambda = p(&[n * n - 2, n, 2]);
        let r = multiplicity_obstruction_check(3, n, (n + 1) as usize, n + 1, &lambda, None, &opts).unwrap();
        assert_eq!(r.verdict, Verdict::MultiplicityObstruction, "n={n}");
        assert_eq!(r.pow_multiplicity.value.clone() - r.chow_upper_bound.value.clone(), big(1));
        assert_eq!(foulkes_delta_case(n, n).unwrap().label(), "one");
        let basis = if n < 3 { BoundBasis::Embedding } else { BoundBasis::Lemma };
        assert_eq!(r.chow_upper_bound.basis, basis);
    }
}

#[test]
fn occurrence_rows() {
    let opts = EvalOptions::default();
    for (m, n, lambda, d, pow) in [
        (3, 2, p(&[2, 2, 2]), 3, 1u32),
        (3, 3, p(&[7, 3, 2]), 4, 1),
        (3, 4, p(&[11, 9, 8]), 7, 1),
        (3, 5, p(&[12, 9, 9]), 6, 1),
        (4, 6, p(&[14, 14, 13, 13]), 9, 19),
    ] {
        let r = occurrence_obstruction_check(m, n, d, &lambda, d as usize, &opts).unwrap();
        assert_eq!(r.verdict, Verdict::OccurrenceObstruction, "{lambda}");
        assert_eq!(r.pow_multiplicity.value, big(pow));
        assert_eq!(r.chow_upper_bound.value, big(0));
    }
    let r = occurrence_obstruction_check(3, 6, 7, &p(&[34, 6, 2]), 7, &opts).unwrap();
    assert_eq!(r.verdict, Verdict::MultiplicityObstruction);
}

#[test]
fn witness_lower_bounds() {
    let opts = EvalOptions::default();
    let six = parse_compact_tableaux("1^6").unwrap();
    let lb = chow_mult_lower_bound(&p(&[6]), 3, 6, 1, &six, &opts).unwrap();
    assert_eq!(lb.value, 1);
    assert_eq!(lb.basis, LowerBasis::FewRows);
    let witnesses = load_witnesses("3x6").unwrap();
    let w: Vec<_> = witnesses.iter().filter(|t| *t.shape() == p(&[6, 6, 6])).cloned().collect();
    let lb = chow_mult_lower_bound(&p(&[6, 6, 6]), 3, 6, 3, &w, &opts).unwrap();
    assert_eq!((lb.value, lb.basis), (1, LowerBasis::Rank));
    let lb = chow_mult_lower_bound(&p(&[8, 4]), 3, 6, 2, &[], &opts).unwrap();
    assert_eq!(lb.basis, LowerBasis::FewRows);
}

#[test]
fn sandwich_on_small_instances() {
    let opts = EvalOptions::default();
    for (d, n) in [(2u32, 3u32), (3, 3), (2, 4), (3, 4)] {
        for lambda in enumerate_m_partitions(u64::from(d * n), 3) {
            if lambda.length() < 3 {
                continue;
            }
            let upper = chow_upper_bound(&lambda, 3, n, d).unwrap();
            let tableaux = enumerate_ssyt(&lambda, d, n, Some(24)).unwrap();
            let lower = chow_mult_lower_bound(&lambda, 3, n, d, &tableaux, &opts).unwrap();
            assert!(BigUint::from(lower.value) <= upper, "{lambda} d={d} n={n}");
            let pow = pow_multiplicity(&lambda, 3, n, d, 2, None, &opts).unwrap();
            assert!(pow.value <= plethysm(&lambda, d, n).unwrap());
        }
    }
}

#[test]
fn pipeline_low_degree() {
    let fam = load_family("3x6").unwrap();
    let witnesses = load_witnesses("3x6").unwrap();
    let limits = PipelineLimits {
        max_degree: Some(3),
        max_cache_size: None,
    };
    let report = no_occurrence_pipeline(&fam, &witnesses, &limits, &EvalOptions::default()).unwrap();
    assert_eq!(report.uncovered, 0);
    assert_eq!(report.rows.len(), fam.generators.len());
    for row in &report.rows {
        match row.coverage {
            Coverage::FewRows => assert!(row.generator.length() <= 2),
            Coverage::Witness => assert!(row.d <= 3 && row.attempt_seed.is_some()),
            Coverage::Skipped => assert!(row.d > 3),
            Coverage::Uncovered => unreachable!(),
        }
    }
    let without = no_occurrence_pipeline(&fam, &[], &limits, &EvalOptions::default()).unwrap();
    assert_eq!(without.uncovered, report.rows.iter().filter(|r| r.coverage == Coverage::Witness).count());
}

#[test]
fn report_json_shape() {
    let r = occurrence_obstruction_check(3, 3, 4, &p(&[7, 3, 2]), 4, &EvalOptions::default()).unwrap();
    let v = serde_json::to_value(&r).unwrap();
    assert_eq!(v["schema"], "1");
    assert_eq!(v["verdict"], "occurrence-obstruction");
    assert_eq!(v["pow_multiplicity"]["value"], "1");
    assert_eq!(v["parameters"]["lambda"], serde_json::json!([7, 3, 2]));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn rank_never_exceeds_plethysm(seed in any::<u64>(), d in 2u32..=3, n in 2u32..=3, k in 1usize..=2) {
        let opts = EvalOptions { seed, ..EvalOptions::default() };
        for lambda in enumerate_m_partitions(u64::from(d * n), 3) {
            let v = pow_multiplicity(&lambda, 3, n, d, k, None, &opts).unwrap();
            prop_assert!(v.value <= v.plethysm);
        }
    }
}
