//! Exact rational scalars, the ring Q + Q*zeta(2), and the combinatorial
//! helpers (Pochhammer symbols, harmonic numbers, factorials, binomials).

mod rational;
mod zeta2_number;

pub use rational::Rational;
pub use zeta2_number::Zeta2Number;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    /// A reciprocal Pochhammer factor vanished, i.e. Gamma has a pole.
    #[error("pole: Pochhammer symbol ({x})_{n} is undefined")]
    Pole { x: Rational, n: i64 },
    #[error("cannot parse {0:?} as a rational number")]
    Parse(String),
    /// The arguments cannot be paired with integer differences, so the
    /// quotient is not a finite product.
    #[error("gamma quotient {0} is not reducible to Pochhammer symbols")]
    GammaNotReducible(String),
}

/// Rising factorial `(x)_n`, extended to negative `n` as
/// `Gamma(x+n)/Gamma(x) = 1/((x-1)(x-2)...(x+n))`.
pub fn pochhammer(x: &Rational, n: i64) -> Result<Rational, ArithError> {
    if n >= 0 {
        let mut acc = Rational::one();
        let mut f = x.clone();
        for _ in 0..n {
            acc *= &f;
            f += Rational::one();
        }
        return Ok(acc);
    }
    let mut den = Rational::one();
    for t in 1..=(-n) {
        let f = x - Rational::from(t);
        if f.is_zero() {
            return Err(ArithError::Pole { x: x.clone(), n });
        }
        den *= f;
    }
    den.recip()
}

/// `sum_{t=1}^{m} 1/t^p`.
pub fn harmonic(m: u64, p: u32) -> Rational {
    // Sum over a common denominator, reducing once at the end.
    let mut num = BigInt::zero();
    let mut den = BigInt::one();
    for t in 1..=m {
        let tp = BigInt::from(t).pow(p);
        num = num * &tp + &den;
        den *= tp;
    }
    Rational::new(num, den).expect("denominator is a product of positive integers")
}

pub fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, t| acc * t)
}

/// `C(n, k)`, zero when `k < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for t in 0..k {
        acc = acc * (n - t) / (t + 1);
    }
    acc
}

/// `prod Gamma(num) / prod Gamma(den)` for argument lists that pair up
/// with integer differences, as a product of Pochhammer symbols.
///
/// Equal arguments cancel first; the remaining pairing is searched over all
/// matchings, preferring one without poles.
pub fn gamma_ratio(num: &[Rational], den: &[Rational]) -> Result<Rational, ArithError> {
    let describe = || {
        let j = |v: &[Rational]| v.iter().map(|r| format!("Gamma({r})")).collect::<Vec<_>>().join("*");
        format!("{}/{}", j(num), j(den))
    };
    let mut num: Vec<Rational> = num.to_vec();
    let mut rest: Vec<Rational> = Vec::with_capacity(den.len());
    for d in den {
        if let Some(pos) = num.iter().position(|n| n == d) {
            num.swap_remove(pos);
        } else {
            rest.push(d.clone());
        }
    }
    let den = rest;
    if num.len() != den.len() {
        return Err(ArithError::GammaNotReducible(describe()));
    }
    let mut last_err = None;
    for perm in itertools::Itertools::permutations(0..den.len(), den.len()) {
        let mut acc = Rational::one();
        let mut ok = true;
        for (a, &pi) in num.iter().zip(&perm) {
            let b = &den[pi];
            let Some(n) = (a - b).to_i64() else {
                ok = false;
                break;
            };
            // Gamma(a)/Gamma(b) = (b)_{a-b}
            match pochhammer(b, n) {
                Ok(v) => acc *= v,
                Err(e) => {
                    last_err = Some(e);
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            return Ok(acc);
        }
    }
    Err(last_err.unwrap_or_else(|| ArithError::GammaNotReducible(describe())))
}

/// `n!` as a rational.
pub fn factorial_q(n: u64) -> Rational {
    Rational::from_integer(factorial(n))
}
