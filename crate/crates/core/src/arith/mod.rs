//! Exact univariate arithmetic: integer/rational polynomials, factorial
//! bases, rational generating functions, and quasi-polynomial interpolation.

mod basis;
mod poly;
mod quasi;
mod series;

pub use basis::{
    falling_factorial, from_basis, from_basis_int, shifted_double_falling, to_basis, FactorialBasis,
};
pub use poly::{IntPolynomial, RatPolynomial};
pub use quasi::{quasi_interpolate, QuasiPolynomial};
pub use series::{gf_series, RationalGF};

use num_bigint::BigInt;

/// Exact evaluation of an integer polynomial at an integer argument.
pub fn poly_eval(p: &IntPolynomial, u: &BigInt) -> BigInt {
    p.eval(u)
}

/// `n!` as a big integer.
pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, i| acc * BigInt::from(i))
}

/// Binomial coefficient `C(n, k)` as a big integer; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}
