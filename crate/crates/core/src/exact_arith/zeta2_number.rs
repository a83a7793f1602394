use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{ArithError, Rational};

/// The exact number `r + z*zeta(2)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Zeta2Number {
    pub r: Rational,
    pub z: Rational,
}

impl Zeta2Number {
    pub fn new(r: Rational, z: Rational) -> Self {
        Zeta2Number { r, z }
    }

    pub fn rational(r: Rational) -> Self {
        Zeta2Number { r, z: Rational::zero() }
    }

    pub fn zeta2() -> Self {
        Zeta2Number { r: Rational::zero(), z: Rational::one() }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.r.is_zero() && self.z.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.z.is_zero()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Zeta2Number { r: &self.r * c, z: &self.z * c }
    }

    pub fn checked_div_scalar(&self, c: &Rational) -> Result<Self, ArithError> {
        let inv = c.recip()?;
        Ok(self.scale(&inv))
    }

    /// The rational `q` with `self = q * other`, if one exists.
    ///
    /// Since zeta(2) is irrational, a rational multiple must match both
    /// components with the same factor.
    pub fn ratio_to(&self, other: &Zeta2Number) -> Option<Rational> {
        let q = if !other.z.is_zero() {
            self.z.checked_div(&other.z).ok()?
        } else if !other.r.is_zero() {
            self.r.checked_div(&other.r).ok()?
        } else {
            return None;
        };
        (other.scale(&q) == *self).then_some(q)
    }
}

impl fmt::Display for Zeta2Number {
    /// Renders `R + Z*zeta2`, omitting zero parts and unit coefficients:
    /// `5 - 3*zeta2`, `1/36`, `zeta2`, `-zeta2`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let zterm = |z: &Rational| -> String {
            if z.is_one() {
                "zeta2".to_string()
            } else {
                format!("{z}*zeta2")
            }
        };
        match (self.r.is_zero(), self.z.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", self.r),
            (true, false) if self.z.is_negative() => write!(f, "-{}", zterm(&self.z.abs())),
            (true, false) => write!(f, "{}", zterm(&self.z)),
            (false, false) => {
                let sign = if self.z.is_negative() { '-' } else { '+' };
                write!(f, "{} {} {}", self.r, sign, zterm(&self.z.abs()))
            }
        }
    }
}

impl fmt::Debug for Zeta2Number {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Zeta2Number({self})")
    }
}

impl Add for Zeta2Number {
    type Output = Zeta2Number;
    fn add(self, rhs: Zeta2Number) -> Zeta2Number {
        Zeta2Number { r: self.r + rhs.r, z: self.z + rhs.z }
    }
}

impl<'a> Add<&'a Zeta2Number> for &'a Zeta2Number {
    type Output = Zeta2Number;
    fn add(self, rhs: &'a Zeta2Number) -> Zeta2Number {
        Zeta2Number { r: &self.r + &rhs.r, z: &self.z + &rhs.z }
    }
}

impl Sub for Zeta2Number {
    type Output = Zeta2Number;
    fn sub(self, rhs: Zeta2Number) -> Zeta2Number {
        Zeta2Number { r: self.r - rhs.r, z: self.z - rhs.z }
    }
}

impl<'a> Sub<&'a Zeta2Number> for &'a Zeta2Number {
    type Output = Zeta2Number;
    fn sub(self, rhs: &'a Zeta2Number) -> Zeta2Number {
        Zeta2Number { r: &self.r - &rhs.r, z: &self.z - &rhs.z }
    }
}

impl Neg for Zeta2Number {
    type Output = Zeta2Number;
    fn neg(self) -> Zeta2Number {
        Zeta2Number { r: -self.r, z: -self.z }
    }
}

impl Mul<&Rational> for &Zeta2Number {
    type Output = Zeta2Number;
    fn mul(self, c: &Rational) -> Zeta2Number {
        self.scale(c)
    }
}

impl Mul<Rational> for Zeta2Number {
    type Output = Zeta2Number;
    fn mul(self, c: Rational) -> Zeta2Number {
        Zeta2Number { r: self.r * &c, z: self.z * c }
    }
}

impl From<Rational> for Zeta2Number {
    fn from(r: Rational) -> Self {
        Zeta2Number::rational(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2(r: &str, z: &str) -> Zeta2Number {
        Zeta2Number::new(r.parse().unwrap(), z.parse().unwrap())
    }

    #[test]
    fn rendering_grammar() {
        assert_eq!(z2("5", "-3").to_string(), "5 - 3*zeta2");
        assert_eq!(z2("1/36", "0").to_string(), "1/36");
        assert_eq!(z2("0", "1").to_string(), "zeta2");
        assert_eq!(z2("0", "-1").to_string(), "-zeta2");
        assert_eq!(z2("0", "0").to_string(), "0");
        assert_eq!(z2("-59/12", "3").to_string(), "-59/12 + 3*zeta2");
        assert_eq!(z2("0", "3/4").to_string(), "3/4*zeta2");
        assert_eq!(z2("0", "-3/4").to_string(), "-3/4*zeta2");
        assert_eq!(z2("2", "1").to_string(), "2 + zeta2");
    }

    #[test]
    fn componentwise_ops() {
        let a = z2("5", "-3");
        let b = z2("1/2", "1");
        assert_eq!(&a + &b, z2("11/2", "-2"));
        assert_eq!(&a - &b, z2("9/2", "-4"));
        assert_eq!(a.scale(&"36".parse().unwrap()), z2("180", "-108"));
        assert_eq!(-a, z2("-5", "3"));
    }

    #[test]
    fn ratio_to() {
        let a = z2("5", "-3");
        assert_eq!(z2("180", "-108").ratio_to(&a), Some("36".parse().unwrap()));
        assert_eq!(z2("5", "-2").ratio_to(&a), None);
        assert_eq!(z2("1/2", "0").ratio_to(&z2("3", "0")), Some("1/6".parse().unwrap()));
        assert_eq!(a.ratio_to(&Zeta2Number::zero()), None);
    }
}
