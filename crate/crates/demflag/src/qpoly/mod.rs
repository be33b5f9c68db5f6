//! Exact arithmetic: Laurent polynomials in `q`, truncated `x`-series over
//! them, and integer polynomials and rational functions in `x`.

mod laurent;
mod special;
mod xpoly;
mod xseries;

pub use laurent::QPoly;
pub use special::{q_binomial, q_pochhammer, res2};
pub use xpoly::{ratfun_expand, RatFunX, XPoly};
pub use xseries::{xs_inverse, XSeries};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QPolyError {
    #[error("constant term is not a unit (must be ±q^e)")]
    NonUnitConstantTerm,
    #[error("division is not exact in Z[q, 1/q]")]
    InexactDivision,
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse polynomial {0:?}")]
    Parse(String),
}
