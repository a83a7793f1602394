//! Rigorous numeric evaluation of `pFq(z)` for real rational parameters and
//! `|z| <= 1`, returning an estimate together with a proven error bound.
//!
//! Partial sums are carried in fixed point with tracked rounding error.
//! For `|z| < 1` the tail is dominated by a geometric series. At `z = +-1`
//! the tail is first approximated by `t_N R(N)`, where `R` is a truncated
//! asymptotic antidifference, and the remainder `sum t_k E(k)` is bounded by
//! comparison with `Gamma(k)/Gamma(k+gamma)`. Every inequality the bound
//! relies on is certified as a polynomial inequality on `[N, inf)`.

mod format;
pub(crate) use format::sci_up;
mod poly;

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact_arith::{Rational, Zeta2Number};
use crate::thomae_group::F32Params;
use poly::Poly;

/// A real number known to lie in `[estimate - error_bound, estimate + error_bound]`.
#[derive(Clone, PartialEq, Eq)]
pub struct NumericValue {
    pub estimate: Rational,
    pub error_bound: Rational,
}

impl NumericValue {
    pub fn exact(v: Rational) -> Self {
        NumericValue { estimate: v, error_bound: Rational::zero() }
    }

    pub fn lower(&self) -> Rational {
        &self.estimate - &self.error_bound
    }

    pub fn upper(&self) -> Rational {
        &self.estimate + &self.error_bound
    }

    pub fn contains(&self, x: &Rational) -> bool {
        (&self.estimate - x).abs() <= self.error_bound
    }

    pub fn scale(&self, c: &Rational) -> Self {
        NumericValue { estimate: &self.estimate * c, error_bound: &self.error_bound * c.abs() }
    }

    pub fn add(&self, other: &NumericValue) -> Self {
        NumericValue { estimate: &self.estimate + &other.estimate, error_bound: &self.error_bound + &other.error_bound }
    }

    pub fn sub(&self, other: &NumericValue) -> Self {
        NumericValue { estimate: &self.estimate - &other.estimate, error_bound: &self.error_bound + &other.error_bound }
    }

    /// Decimal rendering `estimate ± bound`; the printed bound also covers
    /// the rounding of the printed estimate.
    pub fn render(&self) -> String {
        format::render(self)
    }
}

impl fmt::Display for NumericValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for NumericValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumericValue({} ± {})", self.estimate, self.error_bound)
    }
}

/// `pFq[upper; lower](argument)` with `upper.len() == lower.len() + 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PfqSpec {
    pub upper: Vec<Rational>,
    pub lower: Vec<Rational>,
    pub argument: Rational,
}

impl PfqSpec {
    pub fn new(upper: Vec<Rational>, lower: Vec<Rational>, argument: Rational) -> Self {
        PfqSpec { upper, lower, argument }
    }

    /// The series at argument 1.
    pub fn unit(upper: Vec<Rational>, lower: Vec<Rational>) -> Self {
        PfqSpec::new(upper, lower, Rational::one())
    }

    /// Parameter excess `sum(lower) - sum(upper)`.
    pub fn excess(&self) -> Rational {
        let l: Rational = self.lower.iter().sum();
        let u: Rational = self.upper.iter().sum();
        l - u
    }

    /// Term ratio `t_{k+1}/t_k`.
    fn ratio(&self, k: u64) -> Rational {
        let k = Rational::from(k);
        let num: Rational = self.upper.iter().map(|a| a + &k).product();
        let den: Rational = self.lower.iter().map(|b| b + &k).product::<Rational>() * (&k + Rational::one());
        &self.argument * num / den
    }

    fn max_abs_param(&self) -> Rational {
        self.upper.iter().chain(&self.lower).map(Rational::abs).max().unwrap_or_default()
    }

    fn validate(&self) -> Result<()> {
        if self.upper.len() != self.lower.len() + 1 {
            return Err(Error::InvalidSeries(format!(
                "{} upper and {} lower parameters; expected one more upper than lower",
                self.upper.len(),
                self.lower.len()
            )));
        }
        if let Some(b) = self.lower.iter().find(|b| b.is_nonpositive_integer()) {
            return Err(Error::InvalidSeries(format!("lower parameter {b} is a non-positive integer")));
        }
        if self.argument.abs() > Rational::one() {
            return Err(Error::InvalidSeries(format!("|z| = |{}| > 1", self.argument)));
        }
        Ok(())
    }

    /// Index of the last nonzero term when some upper parameter is a
    /// non-positive integer.
    fn terminating_index(&self) -> Option<u64> {
        self.upper.iter().filter(|a| a.is_nonpositive_integer()).filter_map(|a| (-a).to_i64()).map(|m| m as u64).min()
    }
}

impl From<&F32Params> for PfqSpec {
    fn from(f: &F32Params) -> Self {
        PfqSpec::unit(f.upper.to_vec(), f.lower.to_vec())
    }
}

impl fmt::Display for PfqSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let j = |v: &[Rational]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        write!(f, "{}F{}[{};{}]({})", self.upper.len(), self.lower.len(), j(&self.upper), j(&self.lower), self.argument)
    }
}

const GEOMETRIC_BUDGET: u64 = 1 << 17;
const ACCEL_BUDGET: u64 = 1 << 14;
const ACCEL_START: u64 = 24;
const ACCEL_ORDERS: [usize; 4] = [10, 20, 30, 40];
const GAMMA_FRACTIONS: [(i64, i64); 3] = [(7, 8), (3, 4), (1, 2)];

fn pow2(e: i64) -> Rational {
    if e >= 0 {
        Rational::from_integer(BigInt::one() << e as usize)
    } else {
        Rational::new(1, BigInt::one() << (-e) as usize).unwrap()
    }
}

/// `pFq` to within `2^-precision`, with a proven error bound.
///
/// Converged results carry `error_bound = 2^-(precision+1)` (exactly zero
/// for terminating series), so the bound never grows with the precision.
pub fn eval_pfq(spec: &PfqSpec, precision: u32) -> Result<NumericValue> {
    spec.validate()?;
    if let Some(m) = spec.terminating_index() {
        let mut t = Rational::one();
        let mut s = Rational::zero();
        for k in 0..=m {
            s += &t;
            t *= spec.ratio(k);
        }
        return Ok(NumericValue::exact(s));
    }
    let z = &spec.argument;
    if z.is_zero() {
        return Ok(NumericValue::exact(Rational::one()));
    }
    if z.abs() < Rational::one() {
        return geometric(spec, precision);
    }
    let sigma = spec.excess();
    if z.is_positive() && !sigma.is_positive() {
        return Err(Error::DivergentSeries(format!("{spec}: parameter excess {sigma} <= 0 at z = 1")));
    }
    if z.is_negative() && sigma <= Rational::from(-1) {
        return Err(Error::DivergentSeries(format!("{spec}: parameter excess {sigma} <= -1 at z = -1")));
    }
    accelerated(spec, precision)
}

fn round_div(a: &BigInt, d: &BigInt) -> BigInt {
    let two = BigInt::from(2);
    (a * &two + d).div_floor(&(d * &two))
}

fn ceil_div(a: &BigInt, d: &BigInt) -> BigInt {
    -((-a).div_floor(d))
}

/// Fixed-point partial sums `sum_{j<k} t_j` scaled by `2^bits`, with the
/// accumulated rounding error tracked in units of `2^-bits`.
struct Partial<'a> {
    spec: &'a PfqSpec,
    bits: u32,
    k: u64,
    term: BigInt,
    term_err: BigInt,
    sum: BigInt,
    sum_err: BigInt,
}

impl<'a> Partial<'a> {
    fn new(spec: &'a PfqSpec, bits: u32) -> Self {
        Partial {
            spec,
            bits,
            k: 0,
            term: BigInt::one() << bits as usize,
            term_err: BigInt::zero(),
            sum: BigInt::zero(),
            sum_err: BigInt::zero(),
        }
    }

    fn step(&mut self) {
        self.sum += &self.term;
        self.sum_err += &self.term_err;
        let r = self.spec.ratio(self.k);
        self.term = round_div(&(&self.term * r.numer()), r.denom());
        self.term_err = ceil_div(&(&self.term_err * r.numer().abs()), r.denom()) + 1;
        self.k += 1;
    }

    fn advance_to(&mut self, n: u64) {
        while self.k < n {
            self.step();
        }
    }

    fn unscale(&self, v: &BigInt) -> Rational {
        Rational::new(v.clone(), BigInt::one() << self.bits as usize).unwrap()
    }

    fn sum_value(&self) -> Rational {
        self.unscale(&self.sum)
    }

    fn term_value(&self) -> Rational {
        self.unscale(&self.term)
    }

    fn term_abs_upper(&self) -> Rational {
        self.unscale(&(self.term.abs() + &self.term_err))
    }

    fn sum_error(&self) -> Rational {
        self.unscale(&self.sum_err)
    }

    fn term_error(&self) -> Rational {
        self.unscale(&self.term_err)
    }

    /// Whether `|t_k| * factor <= 2^-exp` is certain.
    fn term_times_le(&self, factor: &Rational, exp: u32) -> bool {
        let lhs = ((self.term.abs() + &self.term_err) * factor.numer()) << exp as usize;
        let rhs = factor.denom() << self.bits as usize;
        lhs <= rhs
    }
}

/// Rounds the estimate to a `2^-(precision+3)` grid and settles the bound.
/// Returns `None` when the accumulated bound exceeds `2^-(precision+1)`.
fn finish(estimate: &Rational, bound: &Rational, precision: u32) -> (NumericValue, bool) {
    let grid = precision as i64 + 3;
    let scaled = estimate * pow2(grid);
    let n = round_div(scaled.numer(), scaled.denom());
    let est = Rational::from_integer(n) * pow2(-grid);
    let total = bound + pow2(-grid - 1);
    if total <= pow2(-(precision as i64) - 1) {
        (NumericValue { estimate: est, error_bound: pow2(-(precision as i64) - 1) }, true)
    } else {
        let g = pow2(precision as i64 + 20);
        let up = (&total * &g).ceil();
        (NumericValue { estimate: est, error_bound: Rational::from_integer(up) / g }, false)
    }
}

/// First index from which every Pochhammer factor is positive.
fn safe_start(spec: &PfqSpec) -> u64 {
    let m = spec.max_abs_param().ceil();
    u64::try_from(m).unwrap_or(u64::MAX / 4) + 1
}

fn geometric(spec: &PfqSpec, precision: u32) -> Result<NumericValue> {
    let absz = spec.argument.abs();
    let rho = (Rational::one() + &absz) * Rational::frac(1, 2);
    let p = Poly::from_offsets(&spec.upper);
    let q = &Poly::from_offsets(&spec.lower) * &Poly::linear(Rational::one());
    // rho Q(k) - |z| P(k) >= 0 on [n0, inf) gives |t_{k+1}/t_k| <= rho there.
    let g = &q.scale(&rho) - &p.scale(&absz);
    let mut n0 = safe_start(spec);
    while !g.positive_from(n0, false) {
        n0 *= 2;
        if n0 > GEOMETRIC_BUDGET {
            return Err(Error::BudgetExceeded { best: None });
        }
    }
    let inv = (Rational::one() - &rho).recip()?;
    let target_exp = precision + 3;
    let mut bits = precision + 40;
    loop {
        let mut s = Partial::new(spec, bits);
        s.advance_to(n0);
        let mut converged = true;
        while !s.term_times_le(&inv, target_exp) {
            if s.k >= GEOMETRIC_BUDGET {
                converged = false;
                break;
            }
            s.step();
        }
        let fixed = s.sum_error();
        if converged && fixed > pow2(-(target_exp as i64) - 1) && bits < precision + 4096 {
            bits += 64 + fixed.numer().bits() as u32;
            continue;
        }
        let tail = s.term_abs_upper() * &inv;
        let (v, ok) = finish(&s.sum_value(), &(tail + fixed), precision);
        return if ok && converged { Ok(v) } else { Err(Error::BudgetExceeded { best: Some(Box::new(v)) }) };
    }
}

/// Power series in `u` truncated after `u^k`.
fn series_mul(a: &[Rational], b: &[Rational], k: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); k + 1];
    for (i, x) in a.iter().enumerate().take(k + 1) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(k + 1 - i) {
            out[i + j] += x * y;
        }
    }
    out
}

fn series_div(a: &[Rational], b: &[Rational], k: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); k + 1];
    for n in 0..=k {
        let mut v = a.get(n).cloned().unwrap_or_default();
        for (i, o) in out.iter().enumerate().take(n) {
            if let Some(bj) = b.get(n - i) {
                v -= o * bj;
            }
        }
        out[n] = v / &b[0];
    }
    out
}

/// `prod (1 + a u)` as a polynomial in `u`.
fn reversed_offsets(offsets: &[Rational]) -> Vec<Rational> {
    let mut c = Poly::from_offsets(offsets).coeffs().to_vec();
    c.reverse();
    c
}

/// The correction `R(k) = N_R(k)/k^M` and the certificates built from it.
struct Accelerator {
    order: u32,
    n_r: Poly,
    num_e: Poly,
    q: Poly,
    /// `s * numE` with `s` making the leading coefficient positive.
    signed_e: Poly,
    /// `(gamma, L_gamma)` with `L_gamma >= 0` on `[N, inf)` certifying
    /// `|w_{k+1}/w_k| <= k/(k+gamma)`.
    lemma: Vec<(Rational, Poly)>,
}

impl Accelerator {
    fn build(spec: &PfqSpec, order: usize) -> Option<Accelerator> {
        let z = &spec.argument;
        let e: i64 = if z.is_positive() { 1 } else { 0 };
        let kmax = order + e as usize;
        // rho(u) = t_{k+1}/t_k / z at k = 1/u
        let mut den = reversed_offsets(&spec.lower);
        den = series_mul(&den, &[Rational::one(), Rational::one()], kmax);
        let rho = series_div(&reversed_offsets(&spec.upper), &den, kmax);
        // rho(u) (1+u)^(e-m), stepping m by dividing through by (1+u)
        let mut prod = if e == 1 { series_mul(&rho, &[Rational::one(), Rational::one()], kmax) } else { rho };
        let mut d: Vec<Vec<Rational>> = Vec::with_capacity(order + 1);
        for m in 0..=order {
            if m > 0 {
                for idx in 1..prod.len() {
                    let prev = prod[idx - 1].clone();
                    prod[idx] -= prev;
                }
            }
            let mut dm = vec![Rational::zero(); kmax + 1];
            for (idx, v) in prod.iter().enumerate() {
                if idx + m > kmax {
                    break;
                }
                let one = if idx == 0 { Rational::one() } else { Rational::zero() };
                dm[idx + m] = one - z * v;
            }
            d.push(dm);
        }
        let mut c: Vec<Rational> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let idx = n + e as usize;
            let mut v = if n == 0 { Rational::one() } else { Rational::zero() };
            for (m, cm) in c.iter().enumerate() {
                v -= cm * &d[m][idx];
            }
            let diag = &d[n][idx];
            if diag.is_zero() {
                return None;
            }
            c.push(v / diag);
        }
        let mut n_r = vec![Rational::zero(); order + e as usize + 1];
        for (m, cm) in c.into_iter().enumerate() {
            n_r[e as usize + order - m] = cm;
        }
        let n_r = Poly::new(n_r);

        let p = Poly::from_offsets(&spec.upper);
        let q = &Poly::from_offsets(&spec.lower) * &Poly::linear(Rational::one());
        let x_m = Poly::monomial(order);
        let x1_m = Poly::linear(Rational::one()).pow(order as u32);
        let one = Rational::one();
        let num_e = &(&(&(&q * &x_m) * &x1_m) - &(&(&n_r * &x1_m) * &q)) + &(&(&p.scale(z) * &n_r.shift(&one)) * &x_m);

        let mut acc = Accelerator {
            order: order as u32,
            n_r,
            num_e: num_e.clone(),
            q: q.clone(),
            signed_e: Poly::default(),
            lemma: Vec::new(),
        };
        let Some(lead) = num_e.leading() else {
            return Some(acc);
        };
        let s = Rational::from(lead.signum());
        let se = num_e.scale(&s);
        let delta = q.degree().unwrap() as i64 + 2 * order as i64 - se.degree().unwrap() as i64;
        let base = spec.excess() + Rational::from(delta);
        if !base.is_positive() {
            return None;
        }
        let absz = z.abs();
        let left = &(&(&q.shift(&one) * &se) * &Poly::linear(Rational::from(2)).pow(order as u32)) * &Poly::monomial(1);
        let right_common = &(&p.scale(&absz) * &se.shift(&one)) * &x_m;
        for (fnum, fden) in GAMMA_FRACTIONS {
            let gamma = Rational::one() + &base * Rational::frac(fnum, fden);
            let right = &right_common * &Poly::linear(gamma.clone());
            acc.lemma.push((gamma, &left - &right));
        }
        acc.signed_e = se;
        Some(acc)
    }

    /// `(estimate, tail bound, rounding error)` for the series truncated at
    /// the current index of `s`, if the certificates hold from there.
    fn bound_at(&self, s: &Partial<'_>) -> Option<(Rational, Rational, Rational)> {
        let n = s.k;
        let nq = Rational::from(n);
        let r_n = self.n_r.eval(&nq) / nq.pow(self.order as i32).ok()?;
        let estimate = s.sum_value() + s.term_value() * &r_n;
        let fixed = s.sum_error() + s.term_error() * r_n.abs();
        if self.num_e.is_zero() {
            return Some((estimate, Rational::zero(), fixed));
        }
        if !self.signed_e.positive_from(n, true) {
            return None;
        }
        let (gamma, _) = self.lemma.iter().find(|(_, l)| l.positive_from(n, false))?;
        let n1 = &nq + Rational::one();
        let den_e = self.q.eval(&nq) * nq.pow(self.order as i32).ok()? * n1.pow(self.order as i32).ok()?;
        let e_n = self.num_e.eval(&nq).abs() / den_e;
        let factor = (&nq + gamma - Rational::one()) / (gamma - Rational::one());
        let tail = s.term_abs_upper() * e_n * factor;
        Some((estimate, tail, fixed))
    }
}

fn accelerated(spec: &PfqSpec, precision: u32) -> Result<NumericValue> {
    let target = pow2(-(precision as i64) - 3);
    let start = ACCEL_START.max(2 * safe_start(spec));
    let mut accels: Vec<Option<Option<Accelerator>>> = (0..ACCEL_ORDERS.len()).map(|_| None).collect();
    let mut bits = precision + 48;
    loop {
        let mut s = Partial::new(spec, bits);
        let mut best: Option<(Rational, Rational, Rational)> = None;
        let mut n = start;
        'outer: while n <= ACCEL_BUDGET {
            s.advance_to(n);
            for (slot, &order) in accels.iter_mut().zip(&ACCEL_ORDERS) {
                let acc = slot.get_or_insert_with(|| Accelerator::build(spec, order));
                let Some(acc) = acc else { continue };
                let Some((est, tail, fixed)) = acc.bound_at(&s) else { continue };
                let better = best.as_ref().is_none_or(|(_, t, f)| &tail + &fixed < t + f);
                let done = tail <= target;
                if better {
                    best = Some((est, tail, fixed));
                }
                if done {
                    break 'outer;
                }
            }
            n *= 2;
        }
        let Some((est, tail, fixed)) = best else {
            return Err(Error::BudgetExceeded { best: None });
        };
        if fixed > pow2(-(precision as i64) - 5) && bits < precision + 4096 {
            bits += 64 + fixed.numer().bits() as u32;
            continue;
        }
        let (v, ok) = finish(&est, &(tail + fixed), precision);
        return if ok { Ok(v) } else { Err(Error::BudgetExceeded { best: Some(Box::new(v)) }) };
    }
}

/// Partial sum of `zeta(2) = 3 sum_{k>=1} 1/(k^2 C(2k,k))` with a tail
/// bound below `2^-bits`. Successive terms shrink by more than 4, so the
/// tail after term `K` is at most `4/3` of term `K+1`.
fn zeta2_bracket(bits: u32) -> (Rational, Rational) {
    let target = pow2(-(bits as i64));
    let mut sum = Rational::zero();
    let mut k: i64 = 1;
    // 3/(k^2 C(2k,k)), starting at k = 1
    let mut t = Rational::frac(3, 2);
    loop {
        sum += &t;
        t = t * Rational::from(k * k) / Rational::from((2 * k + 1) * (2 * k + 2));
        k += 1;
        let tail = &t * Rational::frac(4, 3);
        if tail <= target {
            return (sum, tail);
        }
    }
}

/// `r + z*zeta(2)` to within `2^-precision`.
pub fn zeta2_to_numeric(v: &Zeta2Number, precision: u32) -> NumericValue {
    if v.z.is_zero() {
        return NumericValue::exact(v.r.clone());
    }
    let zbits = v.z.abs().ceil().bits() as u32;
    let (s, tail) = zeta2_bracket(precision + 4 + zbits);
    let est = &v.r + &v.z * s;
    let bound = v.z.abs() * tail;
    finish(&est, &bound, precision).0
}

/// Exact sign of `r + z*zeta(2)`, by refining until the interval excludes 0.
pub fn sign(v: &Zeta2Number) -> Ordering {
    if v.z.is_zero() {
        return v.r.cmp(&Rational::zero());
    }
    let mut precision = 64;
    loop {
        let n = zeta2_to_numeric(v, precision);
        if n.estimate.abs() > n.error_bound {
            return n.estimate.cmp(&Rational::zero());
        }
        precision *= 2;
    }
}

/// Exact ordering of two elements of Q + Q*zeta(2).
pub fn cmp_zeta2(a: &Zeta2Number, b: &Zeta2Number) -> Ordering {
    sign(&(a - b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn qs(v: &[&str]) -> Vec<Rational> {
        v.iter().map(|s| q(s)).collect()
    }

    fn zeta2_ref() -> NumericValue {
        zeta2_to_numeric(&Zeta2Number::zeta2(), 200)
    }

    fn overlaps(a: &NumericValue, b: &NumericValue) -> bool {
        (&a.estimate - &b.estimate).abs() <= &a.error_bound + &b.error_bound
    }

    #[test]
    fn telescoping_2f1() {
        let v = eval_pfq(&PfqSpec::unit(qs(&["1", "1"]), qs(&["3"])), 128).unwrap();
        assert!(v.contains(&q("2")), "{v:?}");
        assert!(v.error_bound <= pow2(-128));
    }

    #[test]
    fn zeta2_as_3f2() {
        let v = eval_pfq(&PfqSpec::unit(qs(&["1", "1", "1"]), qs(&["2", "2"])), 128).unwrap();
        assert!(overlaps(&v, &zeta2_ref()));
        assert!(v.render().starts_with("1.6449340668"), "{}", v.render());
    }

    #[test]
    fn gauss_4_over_pi() {
        // 2F1[1/2,1/2;2](1) = 4/pi
        let v = eval_pfq(&PfqSpec::unit(qs(&["1/2", "1/2"]), qs(&["2"])), 128).unwrap();
        assert!(v.render().starts_with("1.2732395447"), "{}", v.render());
    }

    #[test]
    fn alternating_and_geometric() {
        // 2F1[1,1;2](-1) = ln 2, 2F1[1,1;2](1/2) = 2 ln 2
        let ln2 = eval_pfq(&PfqSpec::new(qs(&["1", "1"]), qs(&["2"]), q("-1")), 128).unwrap();
        let two_ln2 = eval_pfq(&PfqSpec::new(qs(&["1", "1"]), qs(&["2"]), q("1/2")), 128).unwrap();
        assert!(overlaps(&ln2.scale(&q("2")), &two_ln2));
        assert!(ln2.render().starts_with("0.6931471805599453"), "{}", ln2.render());
        // 1F0[1;](1/3) = 3/2
        let g = eval_pfq(&PfqSpec::new(qs(&["1"]), vec![], q("1/3")), 128).unwrap();
        assert!(g.contains(&q("3/2")));
    }

    #[test]
    fn terminating_series_are_exact() {
        // Chu-Vandermonde: 2F1[-3, 2; 5](1) = (3)_3/(5)_3 = 60/210
        let v = eval_pfq(&PfqSpec::unit(qs(&["-3", "2"]), qs(&["5"])), 64).unwrap();
        assert_eq!(v, NumericValue::exact(q("2/7")));
    }

    #[test]
    fn invalid_and_divergent() {
        assert!(matches!(eval_pfq(&PfqSpec::unit(qs(&["1", "1"]), qs(&["2"])), 64), Err(Error::DivergentSeries(_))));
        assert!(matches!(eval_pfq(&PfqSpec::unit(qs(&["1", "1"]), qs(&["-2"])), 64), Err(Error::InvalidSeries(_))));
        assert!(matches!(
            eval_pfq(&PfqSpec::new(qs(&["1", "1"]), qs(&["3"]), q("3/2")), 64),
            Err(Error::InvalidSeries(_))
        ));
        assert!(matches!(eval_pfq(&PfqSpec::unit(qs(&["1"]), qs(&["2"])), 64), Err(Error::InvalidSeries(_))));
    }

    #[test]
    fn small_excess_converges() {
        // 3F2[1,1,1;2,17/8] has excess 1/8
        let v = eval_pfq(&PfqSpec::unit(qs(&["1", "1", "1"]), qs(&["2", "17/8"])), 128).unwrap();
        assert!(v.error_bound <= pow2(-128));
    }

    #[test]
    fn zeta2_numeric() {
        let v = zeta2_to_numeric(&Zeta2Number::new(q("5"), q("-3")), 128);
        assert!(v.render().starts_with("0.06519779945"), "{}", v.render());
        assert_eq!(zeta2_to_numeric(&Zeta2Number::rational(q("1")), 128), NumericValue::exact(q("1")));
        assert!(zeta2_ref().render().starts_with("1.6449340668482264364724151666"));
    }

    #[test]
    fn exact_sign() {
        assert_eq!(sign(&Zeta2Number::new(q("5"), q("-3"))), Ordering::Greater);
        assert_eq!(sign(&Zeta2Number::new(q("-59/12"), q("3"))), Ordering::Greater);
        // 1.6449... vs 1.6449 and 1.645
        assert_eq!(sign(&Zeta2Number::new(q("-16449/10000"), q("1"))), Ordering::Greater);
        assert_eq!(sign(&Zeta2Number::new(q("-1645/1000"), q("1"))), Ordering::Less);
        assert_eq!(sign(&Zeta2Number::zero()), Ordering::Equal);
    }
}
