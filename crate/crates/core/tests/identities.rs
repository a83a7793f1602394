mod common;

use std::cmp::Ordering;

use common::{asg, is_rejection, positive_rational, rng, sample_assignment, PRECISION};
use rand::Rng;
use zeta2_hyperlab::hyper_numeric::{cmp_zeta2, eval_pfq};
use zeta2_hyperlab::identities::{
    catalogue, family_a, family_b, lookup, verify, verify_exact, verify_family, Assignment, Mode, Value, Verdict,
};
use zeta2_hyperlab::thomae_group::{phi_related, t_related};
use zeta2_hyperlab::zeta2_exact::eval_integral_exact;
use zeta2_hyperlab::{NumericValue, Rational};

/// Verifies up to `want` admissible random instances of `id`, giving up
/// after `tries` samples; returns how many passed.
fn sweep(id: &str, want: usize, tries: usize, seed: u64) -> usize {
    let entry = lookup(id).unwrap();
    let mut r = rng(seed);
    let mut passes = 0;
    for _ in 0..tries {
        if passes == want {
            break;
        }
        let a = sample_assignment(entry, &mut r);
        match verify(id, &a, PRECISION) {
            Ok(rep) => {
                assert!(rep.passed(), "{}", rep.render());
                passes += 1;
            }
            Err(e) => assert!(is_rejection(&e), "{id} at {a:?}: {e}"),
        }
    }
    passes
}

#[test]
fn random_instances_of_every_parametric_entry() {
    for (n, entry) in catalogue().iter().enumerate().filter(|(_, e)| !e.free_params.is_empty()) {
        let passes = sweep(entry.id, 20, 400, 0x5eed + n as u64);
        assert!(passes >= 20, "{}: only {passes} admissible instances", entry.id);
    }
}

#[test]
fn fixed_entries_pass_exactly() {
    for entry in catalogue().iter().filter(|e| e.free_params.is_empty()) {
        let rep = verify_exact(entry.id, &Assignment::new()).unwrap();
        assert_eq!(rep.verdict, Verdict::Pass, "{}", rep.render());
    }
}

#[test]
fn exotique_is_exotique2_on_the_diagonal() {
    let mut r = rng(7);
    let mut shared = 0;
    while shared < 20 {
        let alpha = positive_rational(&mut r, 5, 3);
        let beta = positive_rational(&mut r, 5, 3);
        let gamma = &alpha + &beta;
        let two: Assignment = [("alpha".to_string(), alpha), ("beta".to_string(), beta)].into();
        let mut three = two.clone();
        three.insert("gamma".into(), gamma);

        let a = lookup("exotique").unwrap().instantiate(&two);
        let b = lookup("exotique2").unwrap().instantiate(&three);
        let (Ok(a), Ok(b)) = (a, b) else { continue };
        assert_eq!(a.lhs, b.lhs);
        assert_eq!(a.terms, b.terms);
        assert_eq!(a.terms[0].0, Rational::from(2));
        let ra = verify("exotique", &two, PRECISION).unwrap();
        let rb = verify("exotique2", &three, PRECISION).unwrap();
        assert!(ra.passed() && rb.passed());
        assert_eq!(ra.lhs_value, rb.lhs_value);
        shared += 1;
    }
}

fn numeric(v: &Value) -> NumericValue {
    match v {
        Value::Numeric(n) => n.clone(),
        Value::Exact(z) => zeta2_hyperlab::hyper_numeric::zeta2_to_numeric(z, PRECISION),
    }
}

/// Transforming both sides of an exotique2 instance through the
/// T3240 entry keeps the relation: the rewritten right sides stand in the
/// same ratio as the original series.
#[test]
fn t3240_chains_with_exotique2() {
    let mut r = rng(11);
    let mut done = 0;
    let mut tries = 0;
    while done < 10 {
        tries += 1;
        assert!(tries < 500, "too few admissible chains");
        let alpha = Rational::from(r.gen_range(1..=4i64));
        let beta = positive_rational(&mut r, 4, 3);
        let gamma = positive_rational(&mut r, 6, 4);
        let a = Rational::from(2) * &alpha + &beta + Rational::one();
        let first: Assignment =
            [("a", a.clone()), ("b", &alpha + Rational::one()), ("c", &beta + Rational::one()), ("d", gamma.clone())]
                .into_iter()
                .map(|(k, v)| (k.to_string(), v))
                .collect();
        let second: Assignment = [("a", a), ("b", alpha.clone()), ("c", beta.clone()), ("d", gamma.clone())]
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect();
        let e2: Assignment =
            [("alpha", alpha), ("beta", beta), ("gamma", gamma)].into_iter().map(|(k, v)| (k.to_string(), v)).collect();

        let (Ok(r1), Ok(r2), Ok(re)) = (
            verify("T3240", &first, PRECISION),
            verify("T3240", &second, PRECISION),
            verify("exotique2", &e2, PRECISION),
        ) else {
            continue;
        };
        assert!(r1.passed() && r2.passed() && re.passed());
        // the T3240 left sides are exactly the exotique2 series
        let inst = lookup("exotique2").unwrap().instantiate(&e2).unwrap();
        assert_eq!(lookup("T3240").unwrap().instantiate(&first).unwrap().lhs, inst.lhs);
        assert_eq!(lookup("T3240").unwrap().instantiate(&second).unwrap().lhs, inst.terms[0].1.clone().unwrap());
        let c = re.prefactor.clone().unwrap();
        let diff = numeric(&r1.rhs_value).sub(&numeric(&r2.rhs_value).scale(&c));
        assert!(diff.estimate.abs() <= diff.error_bound, "chain breaks at {e2:?}");
        done += 1;
    }
}

#[test]
fn families_hold_and_escape_both_groups() {
    for alpha in 1..=12 {
        let pair = family_a(alpha).unwrap();
        assert!(!t_related(pair.lhs, pair.rhs) && !phi_related(pair.lhs, pair.rhs));
        let rep = verify_family(&pair);
        assert_eq!(rep.verdict, Verdict::Pass, "{}", rep.render());
    }
    for alpha in 2..=10 {
        let pair = family_b(alpha).unwrap();
        assert!(!t_related(pair.lhs, pair.rhs) && !phi_related(pair.lhs, pair.rhs));
        let rep = verify_family(&pair);
        assert_eq!(rep.verdict, Verdict::Pass, "{}", rep.render());
    }
    assert!(family_a(0).is_err());
    assert!(family_b(1).is_err());
}

#[test]
fn family_values_shrink_with_alpha() {
    let a: Vec<_> = (1..=12).map(|n| eval_integral_exact(family_a(n).unwrap().lhs)).collect();
    for w in a.windows(2) {
        assert_eq!(cmp_zeta2(&w[1], &w[0]), Ordering::Less, "{} !< {}", w[1], w[0]);
    }
    let b: Vec<_> = (2..=10).map(|n| eval_integral_exact(family_b(n).unwrap().lhs)).collect();
    for w in b.windows(2) {
        assert_eq!(cmp_zeta2(&w[1], &w[0]), Ordering::Less, "{} !< {}", w[1], w[0]);
    }
}

#[test]
fn numeric_and_exact_modes_agree_on_examples() {
    for entry in catalogue() {
        let a = entry.example_assignment();
        let Ok(ex) = verify_exact(entry.id, &a) else { continue };
        let nu = zeta2_hyperlab::identities::verify_numeric(entry.id, &a, PRECISION).unwrap();
        assert_eq!(ex.mode, Mode::Exact);
        assert!(nu.passed(), "{}", nu.render());
        let Value::Exact(l) = &ex.lhs_value else { unreachable!() };
        let l = zeta2_hyperlab::hyper_numeric::zeta2_to_numeric(l, PRECISION);
        let Value::Numeric(n) = &nu.lhs_value else { unreachable!() };
        let d = l.sub(n);
        assert!(d.estimate.abs() <= d.error_bound, "{}", entry.id);
    }
}

#[test]
fn zero_coefficient_does_not_excuse_a_divergent_series() {
    // e - a = -1 kills the gamma quotient, but the rewritten series diverges
    let a = asg(&[("a", "4"), ("b", "3/2"), ("c", "1"), ("d", "6"), ("e", "3")]);
    assert!(verify("thomae1", &a, PRECISION).is_err());
    let a = asg(&[("A1", "3"), ("A2", "1"), ("A3", "3"), ("B1", "1"), ("B2", "6"), ("z", "-1")]);
    assert!(verify("C55", &a, PRECISION).is_err());
}

#[test]
fn eval_pfq_is_deterministic() {
    let s = lookup("b10").unwrap().instantiate(&lookup("b10").unwrap().example_assignment()).unwrap().lhs;
    assert_eq!(eval_pfq(&s, PRECISION).unwrap(), eval_pfq(&s, PRECISION).unwrap());
}
