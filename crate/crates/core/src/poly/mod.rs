//! Exact sparse multivariate polynomials over the rationals.
//!
//! A [`Poly`] carries its variable list and the monomial order its terms are
//! sorted by. Arithmetic between polynomials requires both to agree; changing
//! the order is always an explicit [`Poly::with_order`] call.

mod mono;
mod order;
mod parse;
#[allow(clippy::module_inception)]
pub(crate) mod poly;
mod vars;

pub use mono::{Exps, Mono};
pub use order::MonomialOrder;
pub use parse::parse_polynomial;
pub use poly::Poly;
pub use vars::VarList;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

/// Exact rational scalar. Always normalized: positive denominator, reduced.
pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Renders a rational as `p/q`, or `p` when the denominator is one.
pub fn fmt_rat(r: &Rat) -> String {
    r.to_string()
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d == BigInt::from(0) {
                return None;
            }
            Some(Rat::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(Rat::from_integer),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("variable lists or monomial orders differ")]
    VariableMismatch,
    #[error("negative exponent {0}")]
    NegativeExponent(i64),
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("variable list is empty")]
    EmptyVariableList,
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("invalid variable name `{0}`")]
    InvalidVariableName(String),
    #[error("variable index {0} out of range")]
    VariableOutOfRange(usize),
    #[error("exponent overflow")]
    ExponentOverflow,
}
