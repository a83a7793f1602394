//! The S5 symmetry of 3F2 series at 1: x-coordinates, Thomae orbits,
//! the groups T and Phi on integral parameters, and exact ratios between
//! orbit members.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::exact_arith::{gamma_ratio, pochhammer, Rational};
use crate::zeta2_exact::IntegralParams;

/// Parameters of `3F2[a,b,c;d,e](1)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F32Params {
    pub upper: [Rational; 3],
    pub lower: [Rational; 2],
}

impl F32Params {
    pub fn new(upper: [Rational; 3], lower: [Rational; 2]) -> Self {
        F32Params { upper, lower }
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64, e: i64) -> Self {
        F32Params::new([a.into(), b.into(), c.into()], [d.into(), e.into()])
    }

    /// Representative under the trivial symmetries: uppers and lowers
    /// sorted ascending.
    pub fn canonical(&self) -> Self {
        let mut c = self.clone();
        c.upper.sort();
        c.lower.sort();
        c
    }

    /// `d + e - a - b - c`.
    pub fn excess(&self) -> Rational {
        let [a, b, c] = &self.upper;
        let [d, e] = &self.lower;
        d + e - a - b - c
    }

    pub fn to_vec(&self) -> Vec<Rational> {
        self.upper.iter().chain(&self.lower).cloned().collect()
    }
}

impl fmt::Display for F32Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.upper;
        let [d, e] = &self.lower;
        write!(f, "[{a},{b},{c};{d},{e}]")
    }
}

impl fmt::Debug for F32Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for F32Params {
    type Err = Error;

    /// Parses `[a,b,c;d,e]`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Domain(format!("cannot parse {s:?} as [a,b,c;d,e]"));
        let inner = s.trim().strip_prefix('[').and_then(|t| t.strip_suffix(']')).ok_or_else(bad)?;
        let (u, l) = inner.split_once(';').ok_or_else(bad)?;
        let parse = |part: &str| -> Result<Vec<Rational>> {
            part.split(',').map(|t| t.trim().parse::<Rational>().map_err(|_| bad())).collect()
        };
        let upper: [Rational; 3] = parse(u)?.try_into().map_err(|_| bad())?;
        let lower: [Rational; 2] = parse(l)?.try_into().map_err(|_| bad())?;
        Ok(F32Params { upper, lower })
    }
}

/// The five symmetric coordinates `x1..x5`; `s = x1+x2+x3-x4-x5`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct XParams {
    pub x: [Rational; 5],
}

impl XParams {
    pub fn s(&self) -> Rational {
        let [x1, x2, x3, x4, x5] = &self.x;
        x1 + x2 + x3 - x4 - x5
    }

    /// `2x`, convenient for integer-valued display.
    pub fn doubled(&self) -> [Rational; 5] {
        self.x.clone().map(|v| v * Rational::from(2))
    }
}

/// `2x1=d+e-b-c, 2x2=d+e-c-a, 2x3=d+e-a-b, 2x4=d, 2x5=e`, so that
/// `s = d+e-a-b-c`.
pub fn x_of_f32(f: &F32Params) -> XParams {
    let [a, b, c] = &f.upper;
    let [d, e] = &f.lower;
    let half = Rational::frac(1, 2);
    let de = d + e;
    XParams { x: [(&de - b - c) * &half, (&de - c - a) * &half, (&de - a - b) * &half, d * &half, e * &half] }
}

/// `2x = (l+h+2, k+l+2, i+j+2, h+i+2, j+k+2)`.
pub fn x_of_integral(p: IntegralParams) -> XParams {
    let IntegralParams { h, i, j, k, l } = p;
    let two_x = [l + h + 2, k + l + 2, i + j + 2, h + i + 2, j + k + 2];
    XParams { x: two_x.map(|v| Rational::new(v, 2).unwrap()) }
}

#[derive(Clone, PartialEq, Eq, Debug, PartialOrd, Ord)]
pub struct OrbitMember {
    pub params: F32Params,
    /// False when a lower parameter or the excess `s` is non-positive, so
    /// the series does not converge at 1.
    pub evaluable: bool,
}

fn orbit_member(x: &[&Rational]) -> F32Params {
    let s = x[0] + x[1] + x[2] - x[3] - x[4];
    let two = Rational::from(2);
    F32Params { upper: [&two * x[0] - &s, &two * x[1] - &s, &two * x[2] - &s], lower: [&two * x[3], &two * x[4]] }
}

fn is_evaluable(f: &F32Params) -> bool {
    f.lower.iter().all(Rational::is_positive) && f.excess().is_positive()
}

/// The Thomae orbit of `x`: for every permutation `rho` of the
/// coordinates, `[2x_r1 - s_r, 2x_r2 - s_r, 2x_r3 - s_r; 2x_r4, 2x_r5]`.
///
/// Without `dedup` the distinct ordered arrays are returned; with it,
/// one sorted representative per trivial-symmetry class. Either way the
/// list is sorted.
pub fn orbit(x: &XParams, dedup: bool) -> Vec<OrbitMember> {
    let mut seen: BTreeSet<F32Params> = BTreeSet::new();
    for perm in x.x.iter().permutations(5) {
        let f = orbit_member(&perm);
        seen.insert(if dedup { f.canonical() } else { f });
    }
    seen.into_iter().map(|params| OrbitMember { evaluable: is_evaluable(&params), params }).collect()
}

/// The ten position permutations of `T = <(h k)(i j), (h i j k l)>`.
pub fn t_group() -> &'static [[usize; 5]; 10] {
    // The dihedral group of the pentagon h-i-j-k-l: five rotations and
    // five reflections.
    static T: [[usize; 5]; 10] = {
        let mut out = [[0usize; 5]; 10];
        let mut r = 0;
        while r < 5 {
            let mut t = 0;
            while t < 5 {
                out[r][t] = (t + r) % 5;
                // reflection through the axis fixing vertex l, then rotated
                out[5 + r][t] = ((8 - t) % 5 + r) % 5;
                t += 1;
            }
            r += 1;
        }
        out
    };
    &T
}

/// All images of `p` under the group T (with repetitions when `p` has
/// symmetric entries).
pub fn t_images(p: IntegralParams) -> Vec<IntegralParams> {
    let a = p.to_array();
    t_group().iter().map(|g| IntegralParams::from_array(g.map(|t| a[t]))).collect()
}

pub fn t_related(p: IntegralParams, q: IntegralParams) -> bool {
    t_images(p).contains(&q)
}

/// The sorted multiset `{h+i, i+j, j+k, k+l, l+h}`.
pub fn pair_sums(p: IntegralParams) -> [u32; 5] {
    let IntegralParams { h, i, j, k, l } = p;
    let mut v = [h + i, i + j, j + k, k + l, l + h];
    v.sort_unstable();
    v
}

pub fn phi_related(p: IntegralParams, q: IntegralParams) -> bool {
    pair_sums(p) == pair_sums(q)
}

/// One Thomae transformation:
/// `3F2[a,b,c;d,e] = (e-a)_a/(d+e-a-b-c)_a * 3F2[a,d-b,d-c;d,d+e-b-c]`,
/// valid with an exact prefactor when `a` is a positive integer.
pub fn thomae_step(f: &F32Params) -> Result<(F32Params, Rational)> {
    let [a, b, c] = &f.upper;
    let [d, e] = &f.lower;
    let n = a
        .to_i64()
        .filter(|&n| n >= 1)
        .ok_or_else(|| Error::Restriction(format!("first upper parameter {a} of {f} is not a positive integer")))?;
    let s = f.excess();
    let num = pochhammer(&(e - a), n)?;
    let den = pochhammer(&s, n)?;
    let prefactor =
        num.checked_div(&den).map_err(|_| Error::Arith(crate::exact_arith::ArithError::Pole { x: s.clone(), n }))?;
    let g = F32Params::new([a.clone(), d - b, d - c], [d.clone(), d + e - b - c]);
    Ok((g, prefactor))
}

/// `F(f)/F(g)` for two members of one Thomae orbit, from the invariance of
/// `F/(Gamma(s) Gamma(d) Gamma(e))`.
pub fn orbit_ratio(f: &F32Params, g: &F32Params) -> Result<Rational> {
    let target = g.canonical();
    let in_orbit = orbit(&x_of_f32(f), true).iter().any(|m| m.params == target);
    if !in_orbit {
        return Err(Error::NotInOrbit(g.to_string(), f.to_string()));
    }
    let args = |h: &F32Params| [h.excess(), h.lower[0].clone(), h.lower[1].clone()];
    gamma_ratio(&args(f), &args(g)).map_err(|e| Error::Restriction(e.to_string()))
}
