//! Exact grid search for rational-multiple relations.
//!
//! Every admissible tuple of a grid is evaluated exactly as `r + z*zeta2`.
//! For `z != 0` the key `r/z` is invariant under rational scaling and, since
//! zeta2 is irrational, two values are rational multiples of each other
//! exactly when their keys agree. Tuples are bucketed by key and every pair
//! inside a bucket is reported with its exact ratio and a classification
//! against the symmetry groups.

use std::collections::BTreeMap;
use std::fmt;
use std::io::{BufRead, Write};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exact_arith::{Rational, Zeta2Number};
use crate::exec::{map_ordered, Execution};
use crate::thomae_group::{phi_related, t_related, F32Params};
use crate::zeta2_exact::{eval_3f2_exact, eval_integral_exact, integral_form, IntegralParams};

pub const RECORDS_HEADER: &str = "#zeta2-hyperlab v1";

/// Bucket key of a value.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RatioKey {
    /// `z = 0`.
    Rational,
    /// `r / z`.
    Irrational(Rational),
}

pub fn ratio_key(v: &Zeta2Number) -> RatioKey {
    if v.z.is_zero() {
        RatioKey::Rational
    } else {
        RatioKey::Irrational(&v.r / &v.z)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Template {
    /// `(h,i,j,k,l)` of `I(h,i,j,k,l)`.
    Integral,
    /// `(a,b,c,d,e)` of `3F2[a,b,c;d,e](1)`.
    F32,
}

impl fmt::Display for Template {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Template::Integral => "integral",
            Template::F32 => "3f2",
        })
    }
}

impl FromStr for Template {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "integral" => Ok(Template::Integral),
            "3f2" => Ok(Template::F32),
            _ => Err(Error::Domain(format!("unknown template {s:?}; expected integral or 3f2"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Classification {
    PhiExplained,
    TExplained,
    Exotic,
    RationalPair,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Classification::PhiExplained => "phi_explained",
            Classification::TExplained => "t_explained",
            Classification::Exotic => "exotic",
            Classification::RationalPair => "rational_pair",
        })
    }
}

impl FromStr for Classification {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "phi_explained" => Classification::PhiExplained,
            "t_explained" => Classification::TExplained,
            "exotic" => Classification::Exotic,
            "rational_pair" => Classification::RationalPair,
            _ => return Err(Error::Domain(format!("unknown classification {s:?}"))),
        })
    }
}

/// `value(p) = ratio * value(q)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RelationRecord {
    pub template: Template,
    pub p: [i64; 5],
    pub q: [i64; 5],
    pub ratio: Rational,
    pub class: Classification,
}

fn render_tuple(t: &[i64; 5]) -> String {
    format!("[{}]", t.iter().map(i64::to_string).collect::<Vec<_>>().join(","))
}

impl fmt::Display for RelationRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "REL\t{}\t{}\t{}\t{}/{}\t{}",
            self.template,
            render_tuple(&self.p),
            render_tuple(&self.q),
            self.ratio.numer(),
            self.ratio.denom(),
            self.class
        )
    }
}

/// Extra relations imposed on a 3F2 grid.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct F32Ties {
    /// `d = a + k`.
    pub d_from_a: Option<i64>,
    /// `e = b + c`.
    pub e_from_bc: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchSpec {
    pub template: Template,
    /// Inclusive bounds per coordinate.
    pub lo: [i64; 5],
    pub hi: [i64; 5],
    pub ties: F32Ties,
    /// Stop after this many records.
    pub pair_budget: Option<usize>,
    /// Also report pairs of rational-valued tuples.
    pub include_rational: bool,
    pub execution: Execution,
}

impl SearchSpec {
    /// `I(h,i,j,k,l)` over `[0, max]^5`.
    pub fn integral(max: i64) -> Self {
        SearchSpec {
            template: Template::Integral,
            lo: [0; 5],
            hi: [max; 5],
            ties: F32Ties::default(),
            pair_budget: None,
            include_rational: false,
            execution: Execution::default(),
        }
    }

    /// `3F2[a,b,c;d,e]` over `[1, max]` per coordinate.
    pub fn f32(max: [i64; 5]) -> Self {
        SearchSpec { template: Template::F32, lo: [1; 5], hi: max, ..SearchSpec::integral(0) }
    }

    fn validate(&self) -> Result<()> {
        let floor = match self.template {
            Template::Integral => 0,
            Template::F32 => 1,
        };
        for c in 0..5 {
            if self.lo[c] < floor || self.lo[c] > self.hi[c] {
                return Err(Error::Domain(format!(
                    "coordinate {c}: range [{}, {}] is empty or below {floor}",
                    self.lo[c], self.hi[c]
                )));
            }
        }
        if self.template == Template::Integral && (self.ties.d_from_a.is_some() || self.ties.e_from_bc) {
            return Err(Error::Domain("parameter ties only apply to the 3f2 template".into()));
        }
        Ok(())
    }

    /// Grid tuples in lexicographic order, ties applied and ranges
    /// respected.
    pub fn tuples(&self) -> Vec<[i64; 5]> {
        let mut out = Vec::new();
        let r = |c: usize| self.lo[c]..=self.hi[c];
        for a in r(0) {
            for b in r(1) {
                for c in r(2) {
                    let ds: Vec<i64> = match self.ties.d_from_a {
                        Some(k) => vec![a + k],
                        None => r(3).collect(),
                    };
                    let es: Vec<i64> = if self.ties.e_from_bc { vec![b + c] } else { r(4).collect() };
                    for &d in &ds {
                        for &e in &es {
                            if (self.lo[3]..=self.hi[3]).contains(&d) && (self.lo[4]..=self.hi[4]).contains(&e) {
                                out.push([a, b, c, d, e]);
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

fn as_integral(t: &[i64; 5]) -> IntegralParams {
    IntegralParams::new(t[0] as u32, t[1] as u32, t[2] as u32, t[3] as u32, t[4] as u32)
}

fn as_f32(t: &[i64; 5]) -> F32Params {
    F32Params::from_ints(t[0], t[1], t[2], t[3], t[4])
}

/// Exact value, or `None` when the tuple is not admissible.
fn evaluate(template: Template, t: &[i64; 5]) -> Option<Zeta2Number> {
    match template {
        Template::Integral => Some(eval_integral_exact(as_integral(t))),
        Template::F32 => {
            let f = as_f32(t);
            if !f.excess().is_positive() {
                return None;
            }
            eval_3f2_exact(&f).ok()
        }
    }
}

/// Integral parameters standing for a tuple.
fn integral_of(template: Template, t: &[i64; 5]) -> Result<IntegralParams> {
    match template {
        Template::Integral => Ok(as_integral(t)),
        Template::F32 => Ok(integral_form(&as_f32(t))?.params),
    }
}

/// Sets the class of an irrational record from the symmetry tests;
/// rational pairs are left alone.
pub fn classify(mut rec: RelationRecord) -> Result<RelationRecord> {
    if rec.class == Classification::RationalPair {
        return Ok(rec);
    }
    let p = integral_of(rec.template, &rec.p)?;
    let q = integral_of(rec.template, &rec.q)?;
    rec.class = if t_related(p, q) {
        Classification::TExplained
    } else if phi_related(p, q) {
        Classification::PhiExplained
    } else {
        Classification::Exotic
    };
    Ok(rec)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchOutcome {
    pub records: Vec<RelationRecord>,
    /// Tuples evaluated after admissibility and deduplication.
    pub evaluated: usize,
    /// Set when the pair budget cut the output short.
    pub truncated: bool,
}

pub fn grid_search(spec: &SearchSpec) -> Result<SearchOutcome> {
    spec.validate()?;
    let tuples = spec.tuples();
    let values = map_ordered(&tuples, spec.execution, |t| evaluate(spec.template, t));

    // 3F2 tuples equal up to the trivial symmetries are the same series;
    // keep the first in grid order
    let mut seen = std::collections::HashSet::new();
    let mut buckets: BTreeMap<RatioKey, Vec<([i64; 5], Zeta2Number)>> = BTreeMap::new();
    let mut evaluated = 0;
    for (t, v) in tuples.into_iter().zip(values) {
        let Some(v) = v else { continue };
        if spec.template == Template::F32 && !seen.insert(as_f32(&t).canonical()) {
            continue;
        }
        evaluated += 1;
        let key = ratio_key(&v);
        if key == RatioKey::Rational && !spec.include_rational {
            continue;
        }
        buckets.entry(key).or_default().push((t, v));
    }

    let mut candidates = Vec::new();
    for (key, members) in &buckets {
        for (i, (p, vp)) in members.iter().enumerate() {
            for (q, vq) in &members[i + 1..] {
                let (ratio, class) = match key {
                    RatioKey::Irrational(_) => (&vp.z / &vq.z, Classification::Exotic),
                    RatioKey::Rational => (&vp.r / &vq.r, Classification::RationalPair),
                };
                candidates.push(RelationRecord { template: spec.template, p: *p, q: *q, ratio, class });
            }
        }
    }
    let truncated = spec.pair_budget.is_some_and(|b| candidates.len() > b);
    if let Some(b) = spec.pair_budget {
        candidates.truncate(b);
    }
    let records = map_ordered(&candidates, spec.execution, |r| classify(r.clone()));
    Ok(SearchOutcome { records: records.into_iter().collect::<Result<_>>()?, evaluated, truncated })
}

pub fn write_records<W: Write>(records: &[RelationRecord], mut out: W) -> Result<()> {
    writeln!(out, "{RECORDS_HEADER}")?;
    for r in records {
        writeln!(out, "{r}")?;
    }
    Ok(())
}

fn parse_tuple(s: &str) -> std::result::Result<[i64; 5], String> {
    let inner =
        s.strip_prefix('[').and_then(|t| t.strip_suffix(']')).ok_or_else(|| format!("tuple {s:?} is not bracketed"))?;
    let v: Vec<i64> = inner
        .split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|_| format!("bad integer {x:?} in {s:?}")))
        .collect::<std::result::Result<_, _>>()?;
    v.try_into().map_err(|v: Vec<i64>| format!("tuple {s:?} has {} entries, expected 5", v.len()))
}

fn parse_record(line: &str) -> std::result::Result<RelationRecord, String> {
    let f: Vec<&str> = line.split('\t').collect();
    if f.len() != 6 || f[0] != "REL" {
        return Err(format!("expected 6 tab-separated fields starting with REL, got {}", f.len()));
    }
    let ratio: Rational = f[4].parse().map_err(|_| format!("bad ratio {:?}", f[4]))?;
    if ratio.is_zero() {
        return Err("ratio is zero".into());
    }
    Ok(RelationRecord {
        template: f[1].parse().map_err(|e: Error| e.to_string())?,
        p: parse_tuple(f[2])?,
        q: parse_tuple(f[3])?,
        ratio,
        class: f[5].parse().map_err(|e: Error| e.to_string())?,
    })
}

/// Inverse of [`write_records`]; `#` lines and blank lines are skipped.
pub fn read_records<R: BufRead>(input: R) -> Result<Vec<RelationRecord>> {
    let mut out = Vec::new();
    for (n, line) in input.lines().enumerate() {
        let line = line?;
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        out.push(parse_record(&line).map_err(|msg| Error::Format { line: n + 1, msg })?);
    }
    Ok(out)
}
