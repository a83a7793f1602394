//! Catalogue of two-term and remainder-term identities between
//! hypergeometric series, with exact and certified-numeric verification,
//! Sato's six integral relations and the two infinite counter-example
//! families.

mod catalogue;
pub mod expr;

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::exact_arith::{gamma_ratio, ArithError, Rational, Zeta2Number};
use crate::hyper_numeric::{self, eval_pfq, NumericValue, PfqSpec};
use crate::thomae_group::{phi_related, t_related, F32Params};
use crate::zeta2_exact::{eval_3f2_exact, eval_integral_exact, IntegralParams};

pub use expr::{Assignment, Expr};

/// Parameters and argument of one hypergeometric series, as expressions.
#[derive(Clone, Debug)]
pub struct SeriesTemplate {
    pub upper: Vec<Expr>,
    pub lower: Vec<Expr>,
    pub argument: Expr,
}

/// `prod Gamma(num) / prod Gamma(den)`.
#[derive(Clone, Debug)]
pub struct GammaTemplate {
    pub num: Vec<Expr>,
    pub den: Vec<Expr>,
}

/// `coefficient * gamma * series`, with absent factors read as 1.
#[derive(Clone, Debug)]
pub struct Term {
    pub coefficient: Expr,
    pub gamma: Option<GammaTemplate>,
    pub series: Option<SeriesTemplate>,
}

#[derive(Clone, Debug)]
pub enum Constraint {
    /// Real part strictly positive.
    Positive(Expr),
    NotNonPositiveInteger(Expr),
}

/// `lhs = sum(rhs)`, valid whenever the constraints hold.
#[derive(Clone, Debug)]
pub struct IdentityEntry {
    pub id: &'static str,
    pub free_params: Vec<&'static str>,
    pub lhs: SeriesTemplate,
    pub rhs: Vec<Term>,
    pub constraints: Vec<Constraint>,
    /// Parameters that must be integers so that every gamma quotient
    /// reduces to Pochhammer symbols.
    pub integer_params: Vec<&'static str>,
    /// An admissible instance, used for documentation and smoke tests.
    pub example: Vec<(&'static str, &'static str)>,
}

impl IdentityEntry {
    /// Coefficient of the first right-hand term.
    pub fn prefactor(&self) -> &Expr {
        &self.rhs[0].coefficient
    }

    /// Terms after the first; empty for two-term identities.
    pub fn remainder(&self) -> &[Term] {
        &self.rhs[1..]
    }

    pub fn example_assignment(&self) -> Assignment {
        self.example.iter().map(|(k, v)| (k.to_string(), v.parse().expect("catalogue example"))).collect()
    }

    /// Concrete series and exact coefficients at `asg`.
    pub fn instantiate(&self, asg: &Assignment) -> Result<Instance> {
        for k in asg.keys() {
            if !self.free_params.contains(&k.as_str()) {
                return Err(Error::Assignment(format!("{} has no parameter {k}", self.id)));
            }
        }
        if let Some(p) = self.free_params.iter().find(|p| !asg.contains_key(**p)) {
            return Err(Error::Assignment(format!("{} needs a value for {p}", self.id)));
        }
        for p in &self.integer_params {
            if !asg[*p].is_integer() {
                return Err(Error::Restriction(format!(
                    "{} needs integral {p} for exact gamma quotients, got {}",
                    self.id, asg[*p]
                )));
            }
        }
        for c in &self.constraints {
            match c {
                Constraint::Positive(x) => {
                    let v = x.eval(asg)?;
                    if !v.is_positive() {
                        return Err(Error::Domain(format!("{}: need {x} > 0, got {v}", self.id)));
                    }
                }
                Constraint::NotNonPositiveInteger(x) => {
                    let v = x.eval(asg)?;
                    if v.is_nonpositive_integer() {
                        return Err(Error::Domain(format!("{}: {x} = {v} is a non-positive integer", self.id)));
                    }
                }
            }
        }
        let lhs = instantiate_series(&self.lhs, asg)?;
        let mut terms = Vec::with_capacity(self.rhs.len());
        for t in &self.rhs {
            let mut coefficient = t.coefficient.eval(asg)?;
            if let (Some(g), false) = (&t.gamma, coefficient.is_zero()) {
                let num = eval_all(&g.num, asg)?;
                let den = eval_all(&g.den, asg)?;
                let q = gamma_ratio(&num, &den).map_err(|e| match e {
                    ArithError::GammaNotReducible(m) => Error::Restriction(m),
                    other => Error::Domain(format!("{}: gamma quotient: {other}", self.id)),
                })?;
                coefficient *= q;
            }
            let series = match &t.series {
                Some(s) => Some(instantiate_series(s, asg)?),
                None => None,
            };
            terms.push((coefficient, series));
        }
        Ok(Instance { lhs, terms })
    }
}

fn eval_all(v: &[Expr], asg: &Assignment) -> Result<Vec<Rational>> {
    v.iter().map(|x| x.eval(asg)).collect()
}

/// A series whose sum is meaningless at this point makes the instance
/// inadmissible even when its coefficient vanishes.
fn instantiate_series(s: &SeriesTemplate, asg: &Assignment) -> Result<PfqSpec> {
    let spec = PfqSpec::new(eval_all(&s.upper, asg)?, eval_all(&s.lower, asg)?, s.argument.eval(asg)?);
    if let Some(b) = spec.lower.iter().find(|b| b.is_nonpositive_integer()) {
        return Err(Error::Domain(format!("{spec}: lower parameter {b} is a non-positive integer")));
    }
    if spec.upper.iter().any(Rational::is_nonpositive_integer) {
        return Ok(spec);
    }
    let z = spec.argument.abs();
    let divergent = if z.is_one() {
        let floor = if spec.argument.is_one() { Rational::zero() } else { Rational::from(-1) };
        spec.excess() <= floor
    } else {
        z > Rational::one()
    };
    if divergent {
        return Err(Error::DivergentSeries(format!("{spec}: parameter excess {}", spec.excess())));
    }
    Ok(spec)
}

/// An identity with every parameter fixed: `lhs = sum coef * series`,
/// a missing series standing for 1.
#[derive(Clone, Debug)]
pub struct Instance {
    pub lhs: PfqSpec,
    pub terms: Vec<(Rational, Option<PfqSpec>)>,
}

/// The full catalogue, built once.
pub fn catalogue() -> &'static [IdentityEntry] {
    static CAT: OnceLock<Vec<IdentityEntry>> = OnceLock::new();
    CAT.get_or_init(catalogue::build)
}

pub fn lookup(id: &str) -> Result<&'static IdentityEntry> {
    catalogue().iter().find(|e| e.id == id).ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exact,
    Numeric,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Exact => "exact",
            Mode::Numeric => "numeric",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    /// Values agree but a Thomae-type symmetry accounts for it.
    Explained,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Explained => "explained",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Exact(Zeta2Number),
    Numeric(NumericValue),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Exact(z) => write!(f, "{z}"),
            Value::Numeric(v) => write!(f, "{v}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub id: String,
    pub assignment: String,
    pub mode: Mode,
    pub lhs_value: Value,
    pub rhs_value: Value,
    /// Coefficient of the first right-hand term, when there is one.
    pub prefactor: Option<Rational>,
    pub verdict: Verdict,
    /// `lhs - rhs`; exactly zero on an exact pass.
    pub difference: Value,
    /// Combined error bound of the two sides (zero in exact mode).
    pub bound: Rational,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// `|lhs - rhs|` as a rational upper bound.
    pub fn slack(&self) -> Rational {
        match &self.difference {
            Value::Exact(z) if z.is_zero() => Rational::zero(),
            Value::Exact(z) => {
                let bound = hyper_numeric::zeta2_to_numeric(z, 64);
                bound.estimate.abs() + bound.error_bound
            }
            Value::Numeric(v) => v.estimate.abs(),
        }
    }

    /// `VERIFY <id> <assignment> <mode> <verdict> <slack>`.
    pub fn render(&self) -> String {
        let slack = match &self.difference {
            Value::Exact(z) => z.to_string().replace(' ', ""),
            Value::Numeric(v) => {
                format!("{}<={}", hyper_numeric::sci_up(&v.estimate.abs()), hyper_numeric::sci_up(&self.bound))
            }
        };
        let asg = if self.assignment.is_empty() { "-" } else { &self.assignment };
        format!("VERIFY {} {} {} {} {}", self.id, asg, self.mode, self.verdict, slack)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

fn render_assignment(entry: &IdentityEntry, asg: &Assignment) -> String {
    entry.free_params.iter().map(|p| format!("{p}={}", asg[*p])).collect::<Vec<_>>().join(",")
}

/// Drops upper/lower pairs that are equal; they cancel termwise.
fn cancel_pairs(spec: &PfqSpec) -> PfqSpec {
    let mut upper = spec.upper.clone();
    let mut lower = Vec::with_capacity(spec.lower.len());
    for b in &spec.lower {
        match upper.iter().position(|a| a == b) {
            Some(i) => {
                upper.remove(i);
            }
            None => lower.push(b.clone()),
        }
    }
    PfqSpec::new(upper, lower, spec.argument.clone())
}

fn positive_ints(v: &[Rational]) -> Option<Vec<i64>> {
    v.iter().map(|x| x.to_i64().filter(|&n| n > 0 && x.is_integer())).collect()
}

/// Exact value of a series at argument 1 through the integral dictionary,
/// or by direct summation when it terminates.
pub fn exact_series(spec: &PfqSpec) -> Result<Zeta2Number> {
    let inadmissible = || Error::InadmissibleInstance(format!("{spec} has no exact evaluation path"));
    let s = cancel_pairs(spec);
    if s.upper.iter().any(Rational::is_nonpositive_integer) {
        // terminating: the numeric evaluator sums it exactly
        let v = eval_pfq(&s, 32)?;
        debug_assert!(v.error_bound.is_zero());
        return Ok(Zeta2Number::rational(v.estimate));
    }
    if !s.argument.is_one() {
        return Err(inadmissible());
    }
    if !s.excess().is_positive() {
        return Err(Error::DivergentSeries(format!("{spec}: parameter excess {} <= 0", s.excess())));
    }
    match (s.upper.len(), s.lower.len()) {
        (0, 0) => Err(inadmissible()),
        (3, 2) => {
            let f = F32Params::new(
                [s.upper[0].clone(), s.upper[1].clone(), s.upper[2].clone()],
                [s.lower[0].clone(), s.lower[1].clone()],
            );
            eval_3f2_exact(&f).map_err(|_| inadmissible())
        }
        (2, 1) => {
            // 2F1[a,b;c] = 3F2[a,b,x;c,x]; x = max(a,b)+1 always maps when c > a+b
            let (u, l) =
                (positive_ints(&s.upper).ok_or_else(inadmissible)?, positive_ints(&s.lower).ok_or_else(inadmissible)?);
            let x = u[0].max(u[1]) + 1;
            let f = F32Params::from_ints(u[0], u[1], x, l[0], x);
            eval_3f2_exact(&f).map_err(|_| inadmissible())
        }
        _ => Err(inadmissible()),
    }
}

fn terms_exact(inst: &Instance) -> Result<(Zeta2Number, Zeta2Number)> {
    let lhs = exact_series(&inst.lhs)?;
    let mut rhs = Zeta2Number::zero();
    for (c, s) in &inst.terms {
        if c.is_zero() {
            continue;
        }
        let v = match s {
            Some(s) => exact_series(s)?,
            None => Zeta2Number::rational(Rational::one()),
        };
        rhs = rhs + v.scale(c);
    }
    Ok((lhs, rhs))
}

/// Exact verification: every series must have an exact evaluation.
pub fn verify_exact(id: &str, asg: &Assignment) -> Result<VerificationReport> {
    let entry = lookup(id)?;
    let inst = entry.instantiate(asg)?;
    let (lhs, rhs) = terms_exact(&inst)?;
    let difference = &lhs - &rhs;
    Ok(VerificationReport {
        id: entry.id.to_string(),
        assignment: render_assignment(entry, asg),
        mode: Mode::Exact,
        verdict: if difference.is_zero() { Verdict::Pass } else { Verdict::Fail },
        prefactor: inst.terms.first().map(|t| t.0.clone()),
        lhs_value: Value::Exact(lhs),
        rhs_value: Value::Exact(rhs),
        difference: Value::Exact(difference),
        bound: Rational::zero(),
    })
}

/// Certified numeric verification at `precision` bits per series.
pub fn verify_numeric(id: &str, asg: &Assignment, precision: u32) -> Result<VerificationReport> {
    let entry = lookup(id)?;
    let inst = entry.instantiate(asg)?;
    let lhs = eval_pfq(&cancel_pairs(&inst.lhs), precision)?;
    let mut rhs = NumericValue::exact(Rational::zero());
    for (c, s) in &inst.terms {
        if c.is_zero() {
            continue;
        }
        let v = match s {
            Some(s) => eval_pfq(&cancel_pairs(s), precision)?,
            None => NumericValue::exact(Rational::one()),
        };
        rhs = rhs.add(&v.scale(c));
    }
    let difference = lhs.sub(&rhs);
    let bound = difference.error_bound.clone();
    Ok(VerificationReport {
        id: entry.id.to_string(),
        assignment: render_assignment(entry, asg),
        mode: Mode::Numeric,
        verdict: if difference.estimate.abs() <= bound { Verdict::Pass } else { Verdict::Fail },
        prefactor: inst.terms.first().map(|t| t.0.clone()),
        lhs_value: Value::Numeric(lhs),
        rhs_value: Value::Numeric(rhs),
        difference: Value::Numeric(difference),
        bound,
    })
}

/// Exact when every series allows it, numeric otherwise.
pub fn verify(id: &str, asg: &Assignment, precision: u32) -> Result<VerificationReport> {
    match verify_exact(id, asg) {
        Err(Error::InadmissibleInstance(_)) => verify_numeric(id, asg, precision),
        other => other,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyTag {
    A,
    B,
    Sato(u8),
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyTag::A => f.write_str("A"),
            FamilyTag::B => f.write_str("B"),
            FamilyTag::Sato(n) => write!(f, "sato{n}"),
        }
    }
}

/// `I(lhs) = factor * I(rhs)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CounterexamplePair {
    pub lhs: IntegralParams,
    pub rhs: IntegralParams,
    pub factor: Rational,
    pub tag: FamilyTag,
}

/// `I(2a-1,2a-1,a,2a-1,a) = I(2a+1,2a-1,a,2a,a-1)` for `a >= 1`.
pub fn family_a(alpha: u32) -> Result<CounterexamplePair> {
    if alpha == 0 {
        return Err(Error::Domain("family A needs alpha >= 1".into()));
    }
    let a = alpha;
    Ok(CounterexamplePair {
        lhs: IntegralParams::new(2 * a - 1, 2 * a - 1, a, 2 * a - 1, a),
        rhs: IntegralParams::new(2 * a + 1, 2 * a - 1, a, 2 * a, a - 1),
        factor: Rational::one(),
        tag: FamilyTag::A,
    })
}

/// `I(a^2-1,a-1,a^2-a+1,a-1,0) = (a-1) I(a^2-1,a,a^2-a-1,a,0)` for `a >= 2`.
pub fn family_b(alpha: u32) -> Result<CounterexamplePair> {
    if alpha < 2 {
        return Err(Error::Domain("family B needs alpha >= 2".into()));
    }
    let a = alpha;
    Ok(CounterexamplePair {
        lhs: IntegralParams::new(a * a - 1, a - 1, a * a - a + 1, a - 1, 0),
        rhs: IntegralParams::new(a * a - 1, a, a * a - a - 1, a, 0),
        factor: Rational::from(a - 1),
        tag: FamilyTag::B,
    })
}

/// Exact equality with the factor, then the two symmetry tests: a pass
/// needs the pair to be related by neither `T` nor `Phi`.
pub fn verify_family(pair: &CounterexamplePair) -> VerificationReport {
    let lhs = eval_integral_exact(pair.lhs);
    let rhs = eval_integral_exact(pair.rhs);
    let difference = &lhs - &rhs.scale(&pair.factor);
    let verdict = if !difference.is_zero() {
        Verdict::Fail
    } else if t_related(pair.lhs, pair.rhs) || phi_related(pair.lhs, pair.rhs) {
        Verdict::Explained
    } else {
        Verdict::Pass
    };
    VerificationReport {
        id: format!("family-{}", pair.tag),
        assignment: format!("p={},q={},factor={}", pair.lhs, pair.rhs, pair.factor),
        mode: Mode::Exact,
        lhs_value: Value::Exact(lhs),
        rhs_value: Value::Exact(rhs),
        prefactor: Some(pair.factor.clone()),
        verdict,
        difference: Value::Exact(difference),
        bound: Rational::zero(),
    }
}

/// Sato's six relations `I(p) = value = factor * I(q)`.
pub fn sato_pairs() -> Vec<(CounterexamplePair, Zeta2Number)> {
    let z = |r: &str, c: i64| Zeta2Number::new(r.parse().unwrap(), Rational::from(c));
    let p = IntegralParams::new;
    [
        (1, p(1, 1, 1, 1, 1), p(3, 1, 1, 2, 0), 1, z("5", -3)),
        (2, p(3, 1, 2, 2, 1), p(4, 2, 2, 3, 0), 1, z("79/4", -12)),
        (3, p(3, 1, 3, 1, 0), p(3, 2, 1, 2, 0), 1, z("-29/18", 1)),
        (4, p(3, 1, 2, 1, 1), p(3, 3, 1, 3, 0), 1, z("-59/12", 3)),
        (5, p(3, 2, 2, 2, 1), p(5, 1, 3, 2, 1), 1, z("-148/9", 10)),
        (6, p(3, 0, 3, 1, 1), p(3, 3, 1, 2, 1), 9, z("-59/4", 9)),
    ]
    .into_iter()
    .map(|(n, lhs, rhs, f, v)| (CounterexamplePair { lhs, rhs, factor: Rational::from(f), tag: FamilyTag::Sato(n) }, v))
    .collect()
}

/// Six exact reports; each passes when the left integral has the listed
/// value and equals the factor times the right integral.
pub fn sato_suite() -> Vec<VerificationReport> {
    sato_pairs()
        .into_iter()
        .map(|(pair, expected)| {
            let lhs = eval_integral_exact(pair.lhs);
            let rhs = eval_integral_exact(pair.rhs);
            let difference = &lhs - &rhs.scale(&pair.factor);
            let ok = difference.is_zero() && lhs == expected;
            VerificationReport {
                id: pair.tag.to_string(),
                assignment: format!("p={},q={},factor={},value={}", pair.lhs, pair.rhs, pair.factor, expected)
                    .replace(' ', ""),
                mode: Mode::Exact,
                lhs_value: Value::Exact(lhs),
                rhs_value: Value::Exact(rhs),
                prefactor: Some(pair.factor),
                verdict: if ok { Verdict::Pass } else { Verdict::Fail },
                difference: Value::Exact(difference),
                bound: Rational::zero(),
            }
        })
        .collect()
}
