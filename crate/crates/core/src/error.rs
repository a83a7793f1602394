use thiserror::Error;

use crate::exact_arith::ArithError;
use crate::hyper_numeric::NumericValue;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("partial fractions do not sum to a convergent series (sum of A_m = {0})")]
    Convergence(crate::exact_arith::Rational),
    #[error("series {0} does not map to an integral I(h,i,j,k,l)")]
    Unmappable(String),
    #[error("restriction: {0}")]
    Restriction(String),
    #[error("{0} is not in the Thomae orbit of {1}")]
    NotInOrbit(String, String),
    #[error("divergent series: {0}")]
    DivergentSeries(String),
    #[error("term budget exhausted{}", match best { Some(v) => format!("; best value {v}"), None => String::new() })]
    BudgetExceeded { best: Option<Box<NumericValue>> },
    #[error("invalid series: {0}")]
    InvalidSeries(String),
    #[error("inadmissible instance: {0}")]
    InadmissibleInstance(String),
    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),
    #[error("bad assignment: {0}")]
    Assignment(String),
    #[error("line {line}: {msg}")]
    Format { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
