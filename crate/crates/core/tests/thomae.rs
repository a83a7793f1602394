mod common;

use std::collections::BTreeSet;

use common::PRECISION;
use proptest::prelude::*;
use zeta2_hyperlab::hyper_numeric::{eval_pfq, zeta2_to_numeric};
use zeta2_hyperlab::thomae_group::{
    orbit, orbit_ratio, phi_related, t_images, t_related, thomae_step, x_of_f32, x_of_integral,
};
use zeta2_hyperlab::zeta2_exact::eval_3f2_exact;
use zeta2_hyperlab::{F32Params, IntegralParams, PfqSpec};

fn canonical_set(arrays: &[&str]) -> BTreeSet<F32Params> {
    arrays.iter().map(|s| s.parse::<F32Params>().unwrap().canonical()).collect()
}

fn evaluable_orbit(p: [u32; 5]) -> BTreeSet<F32Params> {
    orbit(&x_of_integral(IntegralParams::from_array(p)), true)
        .into_iter()
        .filter(|m| m.evaluable)
        .map(|m| m.params)
        .collect()
}

#[test]
fn orbit_listings() {
    let cases: [([u32; 5], &[&str]); 4] = [
        ([1, 1, 1, 1, 1], &["[2,2,2;4,4]"]),
        ([3, 1, 1, 2, 0], &["[4,3,3;6,5]", "[2,1,3;4,5]", "[3,2,3;6,4]", "[1,1,2;4,4]", "[2,4,2;5,5]"]),
        ([3, 1, 3, 1, 0], &["[4,2,5;6,6]", "[1,2,2;6,3]", "[1,4,4;5,6]", "[1,1,1;3,5]"]),
        ([3, 2, 1, 2, 0], &["[4,3,4;7,5]", "[2,1,4;5,5]", "[1,1,3;4,5]", "[3,3,3;4,7]"]),
    ];
    for (p, expected) in cases {
        assert_eq!(evaluable_orbit(p), canonical_set(expected), "I{p:?}");
    }
}

#[test]
fn ordered_orbit_covers_the_deduplicated_one() {
    let x = x_of_integral(IntegralParams::new(3, 1, 1, 2, 0));
    let ordered = orbit(&x, false);
    let dedup = orbit(&x, true);
    let canon: BTreeSet<_> = ordered.iter().map(|m| m.params.canonical()).collect();
    assert_eq!(canon, dedup.iter().map(|m| m.params.clone()).collect());
    assert!(ordered.len() <= 120 && dedup.len() <= 10);
    assert!(ordered.windows(2).all(|w| w[0] < w[1]));
}

fn small_f32() -> impl Strategy<Value = F32Params> {
    prop::array::uniform5(1i64..=6)
        .prop_map(|t| F32Params::from_ints(t[0], t[1], t[2], t[3], t[4]))
        .prop_filter("convergent", |f| f.excess().is_positive())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn orbit_is_closed(f in small_f32()) {
        let o: Vec<_> = orbit(&x_of_f32(&f), true).into_iter().map(|m| m.params).collect();
        prop_assert!(o.contains(&f.canonical()));
        for g in &o {
            let o2: Vec<_> = orbit(&x_of_f32(g), true).into_iter().map(|m| m.params).collect();
            prop_assert_eq!(&o2, &o);
        }
    }

    /// Every convergent member is a known multiple of the starting series.
    #[test]
    fn orbit_ratios_hold(f in small_f32()) {
        let base = eval_pfq(&PfqSpec::from(&f), PRECISION).unwrap();
        for m in orbit(&x_of_f32(&f), true).into_iter().filter(|m| m.evaluable) {
            let Ok(ratio) = orbit_ratio(&f, &m.params) else { continue };
            let other = match eval_3f2_exact(&m.params) {
                Ok(v) => zeta2_to_numeric(&v, PRECISION),
                Err(_) => eval_pfq(&PfqSpec::from(&m.params), PRECISION).unwrap(),
            };
            let d = base.sub(&other.scale(&ratio));
            prop_assert!(d.estimate.abs() <= d.error_bound, "{} vs {} ratio {}", f, m.params, ratio);
        }
    }

    #[test]
    fn thomae_step_preserves_value(f in small_f32()) {
        let (g, c) = thomae_step(&f).unwrap();
        // the image converges only when e > a
        prop_assume!(g.excess().is_positive());
        let lhs = eval_pfq(&PfqSpec::from(&f), PRECISION).unwrap();
        let rhs = eval_pfq(&PfqSpec::from(&g), PRECISION).unwrap().scale(&c);
        let d = lhs.sub(&rhs);
        prop_assert!(d.estimate.abs() <= d.error_bound);
    }

    #[test]
    fn t_is_a_subgroup_of_phi(p in prop::array::uniform5(0u32..=6), q in prop::array::uniform5(0u32..=6)) {
        let (p, q) = (IntegralParams::from_array(p), IntegralParams::from_array(q));
        prop_assert!(t_related(p, p));
        prop_assert_eq!(t_related(p, q), t_related(q, p));
        prop_assert_eq!(t_images(p).len(), 10);
        for img in t_images(p) {
            prop_assert!(phi_related(p, img));
            prop_assert!(t_images(img).contains(&p));
        }
        if t_related(p, q) {
            prop_assert!(phi_related(p, q));
        }
    }
}
