//! Exact scalars: rationals, Laurent polynomials in `q`, rational functions in
//! `q`, and polynomials in `n` with Laurent coefficients.

mod laurent;
mod npoly;
mod rational;
pub(crate) mod ratfunc;

pub use laurent::LaurentScalar;
pub use npoly::{interpolate, NPolynomial};
pub use ratfunc::RationalFunction;
pub use rational::Rational;

/// Specialization at `q = 1`.
pub fn laurent_eval_q1(a: &LaurentScalar) -> Rational {
    a.eval_q1()
}

pub fn is_q_symmetric(a: &LaurentScalar) -> bool {
    a.is_q_symmetric()
}
