//! Exact evaluation of the integrals
//! `I(h,i,j,k,l) = \int\int x^h (1-x)^i y^k (1-y)^j / (1-xy)^{i+j-l+1} dx dy`
//! and of the 3F2 series they encode, as elements of Q + Q*zeta(2).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exact_arith::{binomial, factorial, factorial_q, harmonic, pochhammer, Rational, Zeta2Number};
use crate::thomae_group::F32Params;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct IntegralParams {
    pub h: u32,
    pub i: u32,
    pub j: u32,
    pub k: u32,
    pub l: u32,
}

impl IntegralParams {
    pub const fn new(h: u32, i: u32, j: u32, k: u32, l: u32) -> Self {
        IntegralParams { h, i, j, k, l }
    }

    pub fn from_array(a: [u32; 5]) -> Self {
        IntegralParams::new(a[0], a[1], a[2], a[3], a[4])
    }

    pub fn to_array(self) -> [u32; 5] {
        [self.h, self.i, self.j, self.k, self.l]
    }

    /// `i + j - l`, the exponent excess of the kernel.
    pub fn excess(self) -> i64 {
        self.i as i64 + self.j as i64 - self.l as i64
    }

    /// The ten elements of the set P: the five pair sums minus the
    /// opposite entry, and the entries themselves.
    pub fn p_set(self) -> [i64; 10] {
        let [h, i, j, k, l] = self.to_array().map(i64::from);
        [j + k - h, k + l - i, l + h - j, h + i - k, i + j - l, h, i, j, k, l]
    }
}

impl fmt::Display for IntegralParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{},{})", self.h, self.i, self.j, self.k, self.l)
    }
}

impl FromStr for IntegralParams {
    type Err = Error;

    /// Parses `(h,i,j,k,l)`, `[h,i,j,k,l]` or a bare comma list.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        let parts: Vec<u32> = inner
            .split(',')
            .map(|t| t.trim().parse::<u32>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::Domain(format!("cannot parse {s:?} as h,i,j,k,l")))?;
        let arr: [u32; 5] = parts.try_into().map_err(|_| Error::Domain(format!("{s:?} needs five entries")))?;
        Ok(IntegralParams::from_array(arr))
    }
}

/// Partial-fraction decomposition of the summand: pole `m` maps to
/// `(A_m, B_m)` meaning `A_m/(n+m) + B_m/(n+m)^2`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct PFDecomp {
    pub terms: BTreeMap<u64, (Rational, Rational)>,
}

impl PFDecomp {
    /// Evaluates the decomposition at `n`.
    pub fn eval(&self, n: u64) -> Rational {
        self.terms
            .iter()
            .map(|(&m, (a, b))| {
                let d = Rational::from(n + m);
                a.checked_div(&d).unwrap() + b.checked_div(&(&d * &d)).unwrap()
            })
            .sum()
    }
}

fn require_excess(p: IntegralParams) -> Result<u64> {
    let m0 = p.excess();
    if m0 < 0 {
        return Err(Error::Domain(format!("i + j - l < 0 for I{p}")));
    }
    Ok(m0 as u64)
}

fn leading_constant(p: IntegralParams, m0: u64) -> Rational {
    Rational::from_integer(factorial(p.i as u64) * factorial(p.j as u64)) / Rational::from_integer(factorial(m0))
}

/// The n-th term of the series expansion of `I(h,i,j,k,l)`:
/// `i! j!/(i+j-l)! * (n+1)_{i+j-l} / ((n+h+1)_{i+1} (n+k+1)_{j+1})`.
pub fn summand(p: IntegralParams, n: u64) -> Result<Rational> {
    let m0 = require_excess(p)?;
    let num = pochhammer(&Rational::from(n + 1), m0 as i64)?;
    let d1 = pochhammer(&Rational::from(n + p.h as u64 + 1), p.i as i64 + 1)?;
    let d2 = pochhammer(&Rational::from(n + p.k as u64 + 1), p.j as i64 + 1)?;
    Ok(leading_constant(p, m0) * num / (d1 * d2))
}

/// Residue computation on the summand. Numerator factors `(n+t)` cancel
/// matching denominator factors first; at each remaining pole `m` of order
/// `e`, with `g(n) = (n+m)^e * summand(n)`, the coefficients are
/// `g(-m)` and, for double poles, `A_m = g'(-m)` via the log-derivative.
pub fn partial_fractions(p: IntegralParams) -> Result<PFDecomp> {
    let m0 = require_excess(p)?;
    let top = (p.h + p.i).max(p.k + p.j) as u64 + 1;
    let mut mult: BTreeMap<u64, u32> = BTreeMap::new();
    for t in (p.h as u64 + 1)..=(p.h + p.i) as u64 + 1 {
        *mult.entry(t).or_default() += 1;
    }
    for t in (p.k as u64 + 1)..=(p.k + p.j) as u64 + 1 {
        *mult.entry(t).or_default() += 1;
    }
    let mut numer: Vec<u64> = Vec::new();
    for t in 1..=m0 {
        match mult.get_mut(&t) {
            Some(e) if *e > 0 => *e -= 1,
            _ => numer.push(t),
        }
    }
    mult.retain(|_, e| *e > 0);
    debug_assert!(mult.keys().all(|&m| m <= top));

    let c = leading_constant(p, m0);
    let mut terms = BTreeMap::new();
    for (&m, &e) in &mult {
        // g(-m) and (log g)'(-m)
        let mut g = c.clone();
        let mut dlog = Rational::zero();
        for &t in &numer {
            let f = Rational::from(t as i64 - m as i64);
            dlog += f.recip()?;
            g *= f;
        }
        for (&t, &et) in &mult {
            if t == m {
                continue;
            }
            let f = Rational::from(t as i64 - m as i64);
            let fe = f.pow(et as i32)?;
            g = g.checked_div(&fe)?;
            dlog -= Rational::from(et) * f.recip()?;
        }
        let (a, b) = if e == 2 { (&g * &dlog, g) } else { (g, Rational::zero()) };
        if !(a.is_zero() && b.is_zero()) {
            terms.insert(m, (a, b));
        }
    }
    Ok(PFDecomp { terms })
}

/// Sums `sum_{n>=0} [A_m/(n+m) + B_m/(n+m)^2]`, which requires `sum A_m = 0`.
pub fn pf_to_value(d: &PFDecomp) -> Result<Zeta2Number> {
    let sum_a: Rational = d.terms.values().map(|(a, _)| a).sum();
    if !sum_a.is_zero() {
        return Err(Error::Convergence(sum_a));
    }
    let mut r = Rational::zero();
    let mut z = Rational::zero();
    for (&m, (a, b)) in &d.terms {
        if !a.is_zero() {
            r -= a * harmonic(m - 1, 1);
        }
        if !b.is_zero() {
            r -= b * harmonic(m - 1, 2);
            z += b;
        }
    }
    Ok(Zeta2Number::new(r, z))
}

/// `I(h,i,j,k,l)` exactly.
pub fn eval_integral_exact(p: IntegralParams) -> Zeta2Number {
    if p.excess() >= 0 {
        let d = partial_fractions(p).expect("excess checked");
        return pf_to_value(&d).expect("summand has degree difference >= 2");
    }
    // Polynomial integrand: expand (1-xy)^e, e = l-i-j-1 >= 0, and integrate
    // termwise with beta integrals.
    let e = -p.excess() - 1;
    let (h, i, j, k) = (p.h as u64, p.i as u64, p.j as u64, p.k as u64);
    let fi = factorial_q(i);
    let fj = factorial_q(j);
    let mut total = Rational::zero();
    for r in 0..=e as u64 {
        let bx = factorial_q(h + r) * &fi / factorial_q(h + r + i + 1);
        let by = factorial_q(k + r) * &fj / factorial_q(k + r + j + 1);
        let term = Rational::from_integer(binomial(e, r as i64)) * bx * by;
        if r % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    Zeta2Number::rational(total)
}

/// Closed-form coefficient of zeta(2) in `I(h,i,j,k,l)`:
/// `(-1)^{h+i+j+k+l} sum_s C(i,s-h) C(j,s-k) C(s,i+j-l)`.
pub fn zeta2_coefficient(p: IntegralParams) -> Rational {
    let [h, i, j, k, l] = p.to_array().map(i64::from);
    let lo = h.max(k).max(i + j - l);
    let hi = (h + i).min(k + j);
    let mut acc = num_bigint::BigInt::from(0);
    for s in lo..=hi {
        acc += binomial(i, s - h) * binomial(j, s - k) * binomial(s, i + j - l);
    }
    if (h + i + j + k + l) % 2 == 1 {
        acc = -acc;
    }
    Rational::from_integer(acc)
}

/// Rationality criterion: `I` is irrational iff the five combinations
/// `j+k-h, k+l-i, l+h-j, h+i-k, i+j-l` are all non-negative.
pub fn is_irrational(p: IntegralParams) -> bool {
    p.p_set()[..5].iter().all(|&v| v >= 0)
}

/// `B(h,i,j,k,l) = I(h,i,j,k,l)/(h! i! j! k! l!)`.
pub fn b_value(p: IntegralParams) -> Zeta2Number {
    let den: Rational = p.to_array().iter().map(|&v| factorial_q(v as u64)).product();
    eval_integral_exact(p).checked_div_scalar(&den).expect("factorials are positive")
}

/// One way of reading a 3F2 as an integral: the integral parameters and
/// the rational factor `(h+i+1)!(k+j+1)!/(h! i! j! k!)` with
/// `3F2 = factor * I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralForm {
    pub params: IntegralParams,
    pub factor: Rational,
}

fn positive_ints(f: &F32Params) -> Option<([i64; 3], [i64; 2])> {
    let to = |r: &Rational| r.to_i64().filter(|&v| v >= 1);
    let u = [to(&f.upper[0])?, to(&f.upper[1])?, to(&f.upper[2])?];
    let d = [to(&f.lower[0])?, to(&f.lower[1])?];
    Some((u, d))
}

const UPPER_ORDERS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
const LOWER_ORDERS: [[usize; 2]; 2] = [[0, 1], [1, 0]];

/// All valid integral readings of a 3F2, in the fixed search order.
pub fn integral_forms(f: &F32Params) -> Vec<IntegralForm> {
    let Some((u, d)) = positive_ints(f) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    for uo in UPPER_ORDERS {
        for lo in LOWER_ORDERS {
            let (a, b, c) = (u[uo[0]], u[uo[1]], u[uo[2]]);
            let (dd, e) = (d[lo[0]], d[lo[1]]);
            if dd < a + 1 || e < b + 1 || dd + e < a + b + c + 1 {
                continue;
            }
            let p = IntegralParams::new(
                (a - 1) as u32,
                (dd - a - 1) as u32,
                (e - b - 1) as u32,
                (b - 1) as u32,
                (dd + e - a - b - c - 1) as u32,
            );
            let (h, i, j, k) = (p.h as u64, p.i as u64, p.j as u64, p.k as u64);
            let factor = factorial_q(h + i + 1) * factorial_q(k + j + 1)
                / (factorial_q(h) * factorial_q(i) * factorial_q(j) * factorial_q(k));
            out.push(IntegralForm { params: p, factor });
        }
    }
    out
}

/// The first valid integral reading of a 3F2.
pub fn integral_form(f: &F32Params) -> Result<IntegralForm> {
    integral_forms(f).into_iter().next().ok_or_else(|| Error::Unmappable(f.to_string()))
}

/// `3F2[a,b,c;d,e](1)` exactly, for series of integral type.
pub fn eval_3f2_exact(f: &F32Params) -> Result<Zeta2Number> {
    let form = integral_form(f)?;
    Ok(eval_integral_exact(form.params).scale(&form.factor))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn z2(r: &str, z: &str) -> Zeta2Number {
        Zeta2Number::new(q(r), q(z))
    }

    const P11111: IntegralParams = IntegralParams::new(1, 1, 1, 1, 1);

    #[test]
    fn summand_examples() {
        assert_eq!(summand(P11111, 0).unwrap(), q("1/36"));
        assert_eq!(summand(P11111, 1).unwrap(), q("1/72"));
        assert_eq!(summand(IntegralParams::default(), 0).unwrap(), q("1"));
        assert!(summand(IntegralParams::new(1, 1, 1, 1, 3), 0).is_err());
    }

    #[test]
    fn partial_fraction_examples() {
        let d = partial_fractions(IntegralParams::default()).unwrap();
        assert_eq!(d.terms.into_iter().collect::<Vec<_>>(), vec![(1, (q("0"), q("1")))]);
        let d = partial_fractions(P11111).unwrap();
        assert_eq!(d.terms.into_iter().collect::<Vec<_>>(), vec![(2, (q("3"), q("-1"))), (3, (q("-3"), q("-2")))]);
        let d = partial_fractions(IntegralParams::new(1, 0, 0, 0, 0)).unwrap();
        assert_eq!(d.terms.into_iter().collect::<Vec<_>>(), vec![(1, (q("1"), q("0"))), (2, (q("-1"), q("0")))]);
    }

    #[test]
    fn pf_to_value_examples() {
        let mk =
            |v: Vec<(u64, &str, &str)>| PFDecomp { terms: v.into_iter().map(|(m, a, b)| (m, (q(a), q(b)))).collect() };
        assert_eq!(pf_to_value(&mk(vec![(1, "0", "1")])).unwrap(), z2("0", "1"));
        assert_eq!(pf_to_value(&mk(vec![(2, "3", "-1"), (3, "-3", "-2")])).unwrap(), z2("5", "-3"));
        assert_eq!(pf_to_value(&mk(vec![(1, "1", "0"), (2, "-1", "0")])).unwrap(), z2("1", "0"));
        assert!(matches!(pf_to_value(&mk(vec![(1, "1", "0")])), Err(Error::Convergence(_))));
    }

    #[test]
    fn integral_examples() {
        assert_eq!(eval_integral_exact(P11111), z2("5", "-3"));
        assert_eq!(eval_integral_exact(IntegralParams::new(3, 1, 2, 1, 1)), z2("-59/12", "3"));
        assert_eq!(eval_integral_exact(IntegralParams::new(1, 1, 1, 1, 3)), z2("1/36", "0"));
        assert_eq!(eval_integral_exact(IntegralParams::default()), z2("0", "1"));
    }

    #[test]
    fn coefficient_and_rationality_examples() {
        assert_eq!(zeta2_coefficient(P11111), q("-3"));
        assert_eq!(zeta2_coefficient(IntegralParams::new(3, 1, 1, 2, 0)), q("-3"));
        assert_eq!(zeta2_coefficient(IntegralParams::new(1, 1, 1, 1, 3)), q("0"));
        assert!(is_irrational(P11111));
        assert!(!is_irrational(IntegralParams::new(1, 1, 1, 1, 3)));
        assert!(is_irrational(IntegralParams::new(3, 1, 1, 2, 0)));
    }

    #[test]
    fn b_value_examples() {
        assert_eq!(b_value(P11111), z2("5", "-3"));
        let twelfth = z2("5/12", "-1/4");
        assert_eq!(b_value(IntegralParams::new(3, 1, 1, 2, 0)), twelfth);
        assert_eq!(b_value(IntegralParams::new(2, 0, 2, 1, 2)), twelfth);
    }

    #[test]
    fn eval_3f2_examples() {
        let f = |s: &str| s.parse::<F32Params>().unwrap();
        assert_eq!(eval_3f2_exact(&f("[2,2,2;4,4]")).unwrap(), z2("180", "-108"));
        assert_eq!(eval_3f2_exact(&f("[1,1,1;2,2]")).unwrap(), z2("0", "1"));
        let a = eval_3f2_exact(&f("[4,2,5;6,6]")).unwrap();
        let b = eval_3f2_exact(&f("[4,3,4;7,5]")).unwrap();
        assert_eq!(a.ratio_to(&b), Some(q("5/9")));
        assert!(matches!(eval_3f2_exact(&f("[1,1,1;1,1]")), Err(Error::Unmappable(_))));
        assert!(matches!(eval_3f2_exact(&f("[1/2,1,1;2,2]")), Err(Error::Unmappable(_))));
    }

    #[test]
    fn params_parse() {
        assert_eq!("(3,1,1,2,0)".parse::<IntegralParams>().unwrap(), IntegralParams::new(3, 1, 1, 2, 0));
        assert_eq!("[3, 1,1,2,0]".parse::<IntegralParams>().unwrap().to_string(), "(3,1,1,2,0)");
        assert!("(1,2,3)".parse::<IntegralParams>().is_err());
    }
}
