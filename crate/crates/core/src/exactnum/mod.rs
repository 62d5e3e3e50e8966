//! Exact arithmetic substrate: rationals, dense polynomials, truncated power
//! series and Newton-basis conversion.

mod poly;
mod rational;
mod series;

pub use poly::{from_newton, newton_coefficients, poly_mul, poly_root_product, Poly};
pub use rational::{rat, Rational};
pub use series::{series_compose, series_exp, TruncatedSeries};
