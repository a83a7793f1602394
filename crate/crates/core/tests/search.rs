mod common;

use std::io::Cursor;

use common::rng;
use proptest::prelude::*;
use rand::Rng;
use zeta2_hyperlab::exec::Execution;
use zeta2_hyperlab::search::{
    classify, grid_search, ratio_key, read_records, write_records, Classification, F32Ties, RatioKey, RelationRecord,
    SearchSpec, Template,
};
use zeta2_hyperlab::thomae_group::phi_related;
use zeta2_hyperlab::zeta2_exact::{eval_3f2_exact, eval_integral_exact, integral_form};
use zeta2_hyperlab::{Error, F32Params, IntegralParams, Rational, Zeta2Number};

const GOLDEN_GRID_1: &str = include_str!("golden/integral_grid_1.tsv");

fn value(template: Template, t: &[i64; 5]) -> Zeta2Number {
    match template {
        Template::Integral => eval_integral_exact(IntegralParams::from_array(t.map(|v| v as u32))),
        Template::F32 => eval_3f2_exact(&F32Params::from_ints(t[0], t[1], t[2], t[3], t[4])).unwrap(),
    }
}

fn integral(template: Template, t: &[i64; 5]) -> IntegralParams {
    match template {
        Template::Integral => IntegralParams::from_array(t.map(|v| v as u32)),
        Template::F32 => integral_form(&F32Params::from_ints(t[0], t[1], t[2], t[3], t[4])).unwrap().params,
    }
}

/// Each record states an exact identity, and an exotic record is never
/// explained by the larger group.
fn check_records(records: &[RelationRecord]) {
    for r in records {
        let (vp, vq) = (value(r.template, &r.p), value(r.template, &r.q));
        assert_eq!(vp, vq.scale(&r.ratio), "{r}");
        if r.class == Classification::Exotic {
            assert!(!phi_related(integral(r.template, &r.p), integral(r.template, &r.q)), "{r}");
        }
    }
}

#[test]
fn bucketing_is_sound_on_random_pairs() {
    let mut g = rng(3);
    let mut proportional = 0;
    for _ in 0..1000 {
        let mut draw = || IntegralParams::from_array([(); 5].map(|_| g.gen_range(0..=4u32)));
        let (p, q) = (draw(), draw());
        let (vp, vq) = (eval_integral_exact(p), eval_integral_exact(q));
        let same = ratio_key(&vp) == ratio_key(&vq);
        match (vp.is_rational(), vq.is_rational()) {
            (false, false) => {
                assert_eq!(same, vp.ratio_to(&vq).is_some(), "{p} {q}");
                proportional += usize::from(same);
            }
            (true, true) => assert_eq!(ratio_key(&vp), RatioKey::Rational),
            _ => assert!(!same, "{p} {q}"),
        }
    }
    assert!(proportional > 0, "no proportional pair sampled");
}

#[test]
fn unit_cube_golden() {
    let out = grid_search(&SearchSpec::integral(1)).unwrap();
    let mut text = Vec::new();
    write_records(&out.records, &mut text).unwrap();
    assert_eq!(String::from_utf8(text).unwrap(), GOLDEN_GRID_1);
    assert!(out.records.iter().all(|r| r.class != Classification::Exotic));
    check_records(&out.records);
    assert_eq!(read_records(Cursor::new(GOLDEN_GRID_1)).unwrap(), out.records);

    // brute force over all ordered pairs, without the bucketing
    let tuples = SearchSpec::integral(1).tuples();
    let mut pairs = Vec::new();
    for (n, p) in tuples.iter().enumerate() {
        for q in &tuples[n + 1..] {
            let (vp, vq) = (value(Template::Integral, p), value(Template::Integral, q));
            if !vp.is_rational() && !vq.is_rational() {
                if let Some(c) = vp.ratio_to(&vq) {
                    pairs.push((*p, *q, c));
                }
            }
        }
    }
    let mut found: Vec<_> = out.records.iter().map(|r| (r.p, r.q, r.ratio.clone())).collect();
    found.sort();
    pairs.sort();
    assert_eq!(found, pairs);
}

#[test]
fn parallel_and_sequential_agree() {
    let mut spec = SearchSpec::integral(2);
    spec.include_rational = true;
    let par = grid_search(&SearchSpec { execution: Execution::Parallel, ..spec.clone() }).unwrap();
    let seq = grid_search(&SearchSpec { execution: Execution::Sequential, ..spec }).unwrap();
    assert_eq!(par, seq);
    check_records(&par.records);

    let mut f = SearchSpec::f32([4, 4, 4, 5, 8]);
    f.ties = F32Ties { d_from_a: Some(1), e_from_bc: false };
    let par = grid_search(&SearchSpec { execution: Execution::Parallel, ..f.clone() }).unwrap();
    let seq = grid_search(&SearchSpec { execution: Execution::Sequential, ..f }).unwrap();
    assert_eq!(par, seq);
    check_records(&par.records);
}

#[test]
fn records_come_in_a_stable_order() {
    let out = grid_search(&SearchSpec::integral(2)).unwrap();
    let again = grid_search(&SearchSpec::integral(2)).unwrap();
    assert_eq!(out, again);
    for r in &out.records {
        assert!(r.p < r.q, "{r}");
        assert_ne!(r.class, Classification::RationalPair);
    }
}

#[test]
fn budget_truncates() {
    let mut spec = SearchSpec::integral(2);
    let full = grid_search(&spec).unwrap();
    spec.pair_budget = Some(10);
    let cut = grid_search(&spec).unwrap();
    assert!(cut.truncated && !full.truncated);
    assert_eq!(cut.records[..], full.records[..10]);
}

#[test]
fn rational_pairs_are_never_exotic() {
    let mut spec = SearchSpec::integral(2);
    spec.include_rational = true;
    let out = grid_search(&spec).unwrap();
    let rational: Vec<_> = out.records.iter().filter(|r| r.class == Classification::RationalPair).collect();
    assert!(!rational.is_empty());
    for r in rational {
        assert!(value(r.template, &r.p).is_rational());
        assert_eq!(classify(r.clone()).unwrap().class, Classification::RationalPair);
    }
}

#[test]
fn bad_specs_and_files_are_rejected() {
    let mut spec = SearchSpec::integral(2);
    spec.lo[0] = 3;
    assert!(matches!(grid_search(&spec), Err(Error::Domain(_))));
    let mut spec = SearchSpec::integral(2);
    spec.ties.e_from_bc = true;
    assert!(matches!(grid_search(&spec), Err(Error::Domain(_))));
    let bad = "#zeta2-hyperlab v1\nREL\tintegral\t[1,1,1,1]\t[3,1,1,2,0]\t1/1\texotic\n";
    assert!(matches!(read_records(Cursor::new(bad)), Err(Error::Format { line: 2, .. })));
    let bad = "REL\tintegral\t[1,1,1,1,1]\t[3,1,1,2,0]\t0/1\texotic\n";
    assert!(matches!(read_records(Cursor::new(bad)), Err(Error::Format { line: 1, .. })));
}

fn record() -> impl Strategy<Value = RelationRecord> {
    let tuple = || prop::array::uniform5(0i64..=20);
    let class = prop_oneof![
        Just(Classification::Exotic),
        Just(Classification::PhiExplained),
        Just(Classification::TExplained),
        Just(Classification::RationalPair),
    ];
    let template = prop_oneof![Just(Template::Integral), Just(Template::F32)];
    (template, tuple(), tuple(), -500i64..500, 1i64..500, class).prop_filter_map(
        "nonzero ratio",
        |(template, p, q, n, d, class)| {
            (n != 0).then(|| RelationRecord { template, p, q, ratio: Rational::frac(n, d), class })
        },
    )
}

proptest! {
    #[test]
    fn records_round_trip(records in prop::collection::vec(record(), 0..20)) {
        let mut buf = Vec::new();
        write_records(&records, &mut buf).unwrap();
        prop_assert_eq!(read_records(Cursor::new(buf)).unwrap(), records);
    }
}
