//! Exact polynomial arithmetic over the integers.

mod binom;
mod bivariate;
mod laurent;

pub(crate) use binom::binom_nat;
pub use binom::{binomial, gauss_binomial};
pub use bivariate::BiPoly;
pub use laurent::LaurentPoly;

use crate::error::Result;
use num_bigint::BigInt;

/// Exact quotient of two Laurent polynomials.
pub fn exact_divide(num: &LaurentPoly, den: &LaurentPoly) -> Result<LaurentPoly> {
    num.exact_divide(den)
}

/// Sum of the coefficients.
pub fn eval_at_one(p: &LaurentPoly) -> BigInt {
    p.eval_at_one()
}
