//! Exact arithmetic: rationals, `Q(i)`, Laurent polynomials and dense linear
//! algebra over `Q(i)`.

mod gaussian;
mod laurent;
mod matrix;
mod qnum;

pub use gaussian::{GaussianRational, Rational};
pub use laurent::LaurentPoly;
pub use matrix::QMatrix;
pub use qnum::{gauss_binomial, gauss_binomial_poly, i_pow, qint, qint_poly};
