//! Exact and certified-numeric computation with 3F2 series at unit argument
//! and the integrals `I(h,i,j,k,l)` whose values lie in Q + Q*zeta(2).

pub mod error;
pub mod exact_arith;
pub mod exec;
pub mod hyper_numeric;
pub mod identities;
pub mod search;
pub mod thomae_group;
pub mod zeta2_exact;

pub use error::{Error, Result};
pub use exact_arith::{Rational, Zeta2Number};
pub use hyper_numeric::{NumericValue, PfqSpec};
pub use thomae_group::{F32Params, XParams};
pub use zeta2_exact::IntegralParams;
