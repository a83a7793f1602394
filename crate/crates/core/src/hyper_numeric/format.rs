//! Decimal rendering of certified values.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::NumericValue;
use crate::exact_arith::Rational;

fn pow10(e: i64) -> Rational {
    let p = BigInt::from(10).pow(e.unsigned_abs() as u32);
    if e >= 0 {
        Rational::from_integer(p)
    } else {
        Rational::new(1, p).unwrap()
    }
}

/// `floor(log10(x))` for `x > 0`.
fn log10_floor(x: &Rational) -> i64 {
    let approx = (x.numer().bits() as f64 - x.denom().bits() as f64) * std::f64::consts::LOG10_2;
    let mut e = approx.floor() as i64;
    while pow10(e) > *x {
        e -= 1;
    }
    while pow10(e + 1) <= *x {
        e += 1;
    }
    e
}

/// `x` rounded to `digits` decimals, and the rounding error.
fn fixed_decimal(x: &Rational, digits: usize) -> (String, Rational) {
    let scale = pow10(digits as i64);
    let scaled = x * &scale;
    let two = BigInt::from(2);
    let n: BigInt = (scaled.numer() * &two + scaled.denom()).div_floor(&(scaled.denom() * &two));
    let err = (Rational::from_integer(n.clone()) / &scale - x).abs();
    let neg = n.is_negative();
    let digits_str = n.abs().to_string();
    let padded = format!("{:0>width$}", digits_str, width = digits + 1);
    let (int_part, frac_part) = padded.split_at(padded.len() - digits);
    let mut s = String::new();
    if neg {
        s.push('-');
    }
    s.push_str(int_part);
    if digits > 0 {
        s.push('.');
        s.push_str(frac_part);
    }
    (s, err)
}

/// Two significant digits, rounded up: `1.5e-39`.
pub(crate) fn sci_up(b: &Rational) -> String {
    if b.is_zero() {
        return "0".to_string();
    }
    let e = log10_floor(b);
    let m = (b / pow10(e - 1)).ceil();
    let (m, e) = if m >= BigInt::from(100) { (BigInt::from(10), e + 1) } else { (m, e) };
    let (hi, lo) = m.div_rem(&BigInt::from(10));
    format!("{hi}.{lo}e{e}")
}

fn terminates_in(x: &Rational, max_digits: usize) -> Option<usize> {
    let mut d = x.denom().clone();
    let mut k = 0;
    for p in [2u32, 5] {
        let p = BigInt::from(p);
        let mut c = 0;
        while (&d % &p).is_zero() {
            d /= &p;
            c += 1;
        }
        k = k.max(c);
    }
    (d.is_one() && k <= max_digits).then_some(k)
}

pub(super) fn render(v: &NumericValue) -> String {
    const EXACT_DIGITS: usize = 40;
    if v.error_bound.is_zero() {
        if let Some(d) = terminates_in(&v.estimate, EXACT_DIGITS) {
            return format!("{} ± 0", fixed_decimal(&v.estimate, d).0);
        }
    }
    let digits =
        if v.error_bound.is_zero() { EXACT_DIGITS } else { (2 - log10_floor(&v.error_bound)).clamp(1, 400) as usize };
    let (s, err) = fixed_decimal(&v.estimate, digits);
    format!("{s} ± {}", sci_up(&(&v.error_bound + err)))
}
