//! Exact arithmetic substrate: rationals, univariate series and sparse
//! truncated multivariate polynomials.

mod linsolve;
mod multipoly;
mod rational;
mod unipoly;

pub use linsolve::solve_linear;
pub use multipoly::{Monomial, MultiPoly};
pub use rational::Rational;
pub use unipoly::UniPoly;

/// `n choose k` as an exact rational (zero when `k > n`).
pub fn binomial(n: i64, k: i64) -> Rational {
    if k < 0 || (n >= 0 && k > n) {
        return Rational::zero();
    }
    let mut acc = Rational::one();
    for i in 0..k {
        acc = (acc * Rational::from(n - i)).div_int(i + 1).expect("nonzero");
    }
    acc
}

/// `k!` as an exact rational.
pub fn factorial(k: u32) -> Rational {
    (1..=k as i64).map(Rational::from).product()
}
