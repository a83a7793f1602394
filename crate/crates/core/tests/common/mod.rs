#![allow(dead_code)]

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use zeta2_hyperlab::identities::{Assignment, IdentityEntry};
use zeta2_hyperlab::{Error, F32Params, Rational};

pub const PRECISION: u32 = 128;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(s: &str) -> Rational {
    s.parse().unwrap_or_else(|e| panic!("{s}: {e}"))
}

/// A positive rational with denominator in `1..=max_den` and value in
/// `(0, max]`.
pub fn positive_rational(rng: &mut ChaCha8Rng, max: i64, max_den: i64) -> Rational {
    let d = rng.gen_range(1..=max_den);
    let n = rng.gen_range(1..=max * d);
    Rational::frac(n, d)
}

/// Half the time a small integer, otherwise a fraction with denominator
/// at most 4; integer-restricted parameters always get integers. A series
/// argument `z` is drawn from `[-1, 1]`, with 1 favoured.
pub fn sample_assignment(entry: &IdentityEntry, rng: &mut ChaCha8Rng) -> Assignment {
    entry
        .free_params
        .iter()
        .map(|&p| {
            let v = if p == "z" {
                if rng.gen_bool(0.5) {
                    Rational::one()
                } else {
                    let d = rng.gen_range(1..=4i64);
                    let n = rng.gen_range(1..=d);
                    Rational::frac(if rng.gen_bool(0.5) { n } else { -n }, d)
                }
            } else if entry.integer_params.contains(&p) || rng.gen_bool(0.5) {
                Rational::from(rng.gen_range(1..=6i64))
            } else {
                positive_rational(rng, 6, 4)
            };
            (p.to_string(), v)
        })
        .collect()
}

/// Errors that only say the sampled point is outside the identity's domain.
pub fn is_rejection(e: &Error) -> bool {
    matches!(
        e,
        Error::Domain(_)
            | Error::Restriction(_)
            | Error::InadmissibleInstance(_)
            | Error::InvalidSeries(_)
            | Error::DivergentSeries(_)
            | Error::Arith(_)
    )
}

/// Random convergent 3F2 with integer parameters in `1..=max` that maps to
/// an integral.
pub fn random_integral_3f2(rng: &mut ChaCha8Rng, max: i64) -> F32Params {
    loop {
        let t: Vec<i64> = (0..5).map(|_| rng.gen_range(1..=max)).collect();
        let f = F32Params::from_ints(t[0], t[1], t[2], t[3], t[4]);
        if f.excess().is_positive() && zeta2_hyperlab::zeta2_exact::integral_form(&f).is_ok() {
            return f;
        }
    }
}

pub fn asg(pairs: &[(&str, &str)]) -> Assignment {
    pairs.iter().map(|(k, v)| (k.to_string(), q(v))).collect()
}
