//! Dense univariate polynomials over the rationals, just enough for the
//! tail-bound certificates.

use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exact_arith::Rational;

/// Coefficients in ascending order; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub(crate) struct Poly(Vec<Rational>);

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    /// `x + a`.
    pub fn linear(a: Rational) -> Self {
        Poly::new(vec![a, Rational::one()])
    }

    /// `x^n`.
    pub fn monomial(n: usize) -> Self {
        let mut v = vec![Rational::zero(); n + 1];
        v[n] = Rational::one();
        Poly(v)
    }

    /// `prod (x + a)` over `offsets`.
    pub fn from_offsets<'a>(offsets: impl IntoIterator<Item = &'a Rational>) -> Self {
        offsets.into_iter().fold(Poly::constant(Rational::one()), |acc, a| &acc * &Poly::linear(a.clone()))
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree, with the zero polynomial at `None`.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.0.last()
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        Poly::new(self.0.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, n: u32) -> Poly {
        (0..n).fold(Poly::constant(Rational::one()), |acc, _| &acc * self)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.0.iter().rev().fold(Rational::zero(), |acc, a| acc * x + a)
    }

    /// `p(x + c)`, done as an integer Taylor shift of
    /// `d^deg p(y/d)` by `n` for `c = n/d`.
    pub fn shift(&self, c: &Rational) -> Poly {
        let Some(deg) = self.degree() else {
            return Poly::default();
        };
        let (l, a) = self.integer_multiple();
        let (n, d) = (c.numer(), c.denom());
        let mut d_pow = vec![BigInt::one(); deg + 1];
        for i in 1..=deg {
            d_pow[i] = &d_pow[i - 1] * d;
        }
        let mut b: Vec<BigInt> = a.iter().enumerate().map(|(i, ai)| ai * &d_pow[deg - i]).collect();
        taylor_shift(&mut b, n);
        let scale = &l * &d_pow[deg];
        Poly::new(
            b.into_iter().enumerate().map(|(j, e)| Rational::new(e * &d_pow[j], scale.clone()).unwrap()).collect(),
        )
    }

    /// `(l, a)` with `a` the integer coefficients of `l * self`, `l > 0`.
    fn integer_multiple(&self) -> (BigInt, Vec<BigInt>) {
        let l = self.0.iter().fold(BigInt::one(), |acc, a| acc.lcm(a.denom()));
        let a = self.0.iter().map(|a| a.numer() * (&l / a.denom())).collect();
        (l, a)
    }

    /// Certifies `p(x) > 0` for all real `x >= n` (or `>= 0` when
    /// `strict` is false) by checking that every coefficient of `p(x+n)` is
    /// non-negative. Sufficient, not necessary.
    pub fn positive_from(&self, n: u64, strict: bool) -> bool {
        let (_, mut a) = self.integer_multiple();
        if a.is_empty() {
            return !strict;
        }
        taylor_shift(&mut a, &BigInt::from(n));
        if a.iter().any(Signed::is_negative) {
            return false;
        }
        !strict || a[0].is_positive()
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.0.len().max(rhs.0.len());
        let zero = Rational::zero();
        Poly::new((0..n).map(|i| self.0.get(i).unwrap_or(&zero) + rhs.0.get(i).unwrap_or(&zero)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.0.len().max(rhs.0.len());
        let zero = Rational::zero();
        Poly::new((0..n).map(|i| self.0.get(i).unwrap_or(&zero) - rhs.0.get(i).unwrap_or(&zero)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    /// Multiplies integer multiples and divides once per coefficient.
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::default();
        }
        let (la, a) = self.integer_multiple();
        let (lb, b) = rhs.integer_multiple();
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        let l = la * lb;
        Poly::new(out.into_iter().map(|c| Rational::new(c, l.clone()).unwrap()).collect())
    }
}

/// In place, `a(x) <- a(x + c)`.
fn taylor_shift(a: &mut [BigInt], c: &BigInt) {
    let len = a.len();
    for i in 0..len {
        for j in (i..len.saturating_sub(1)).rev() {
            let t = &a[j + 1] * c;
            a[j] += t;
        }
    }
}
