//! Exact coefficient arithmetic: Laurent polynomials in q, the rational
//! function field ℚ(q), specializations, and denominator-support analysis.
//!
//! Everything lives in ℚ(q); no coefficient in the BMW relations, the
//! R-matrix or the structure constants needs q^{1/2}.

mod laurent;
mod ratfunc;
mod support;

pub use laurent::LaurentPoly;
pub use ratfunc::ScalarQ;
pub use support::{support_in_s, DenominatorSupport};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("division by zero scalar")]
    DivisionByZero,
    #[error("pole at q = 1")]
    PoleAtOne,
    #[error("pole at q = {0}")]
    Pole(String),
    #[error("cannot parse scalar: {0}")]
    Parse(String),
}
