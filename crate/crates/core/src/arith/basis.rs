//! Factorial-type bases for the polynomial ring and exact conversion
//! between them and the monomial basis.
//!
//! Two bases appear throughout: the falling factorials
//! `(t)_j = t(t-1)...(t-j+1)` and the shifted double falling factorials
//! `<t-1>_j = (t-1)(t-3)...(t-2j+1)`. Both are monic of degree `j`, so the
//! change of basis is a triangular system solvable exactly.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::poly::{IntPolynomial, RatPolynomial};

/// Which factorial basis an expansion refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorialBasis {
    /// `(t)_j = t(t-1)...(t-j+1)`
    Falling,
    /// `<t-1>_j = (t-1)(t-3)...(t-2j+1)`
    ShiftedDoubleFalling,
}

impl FactorialBasis {
    /// The degree-`j` basis element; index 0 is the constant 1.
    pub fn element(self, j: usize) -> IntPolynomial {
        match self {
            FactorialBasis::Falling => falling_factorial(j),
            FactorialBasis::ShiftedDoubleFalling => shifted_double_falling(j),
        }
    }
}

/// The falling factorial `(t)_j`, monic of degree `j`; `j = 0` gives 1.
pub fn falling_factorial(j: usize) -> IntPolynomial {
    let mut p = IntPolynomial::one();
    for i in 0..j {
        p = &p * &IntPolynomial::from_i64(&[-(i as i64), 1]);
    }
    p
}

/// The shifted double falling factorial `(t-1)(t-3)...(t-2j+1)`,
/// monic of degree `j`.
pub fn shifted_double_falling(j: usize) -> IntPolynomial {
    let mut p = IntPolynomial::one();
    for i in 0..j {
        p = &p * &IntPolynomial::from_i64(&[-(2 * i as i64 + 1), 1]);
    }
    p
}

/// Expands `p` over the given basis: returns `c_0..c_deg` with
/// `p = sum c_j * basis_j`. Exact; round-trips with [`from_basis`].
pub fn to_basis(p: &IntPolynomial, basis: FactorialBasis) -> Vec<BigRational> {
    let Some(deg) = p.degree() else {
        return Vec::new();
    };
    let mut rem = p.to_rational();
    let mut coeffs = vec![BigRational::zero(); deg + 1];
    // Basis elements are monic, so peel off leading coefficients top-down.
    for j in (0..=deg).rev() {
        let c = rem.coeff(j);
        if !c.is_zero() {
            rem = &rem - &basis.element(j).to_rational().scale(&c);
        }
        coeffs[j] = c;
    }
    debug_assert!(rem.is_zero());
    coeffs
}

/// Assembles `sum coeffs[j] * basis_j` in the monomial basis.
pub fn from_basis(coeffs: &[BigRational], basis: FactorialBasis) -> RatPolynomial {
    let mut out = RatPolynomial::zero();
    for (j, c) in coeffs.iter().enumerate() {
        if !c.is_zero() {
            out = &out + &basis.element(j).to_rational().scale(c);
        }
    }
    out
}

/// Integer-coefficient variant of [`from_basis`], for expansions that are
/// known to stay integral.
pub fn from_basis_int(coeffs: &[BigInt], basis: FactorialBasis) -> IntPolynomial {
    let rat: Vec<BigRational> = coeffs
        .iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect();
    from_basis(&rat, basis)
        .to_integer()
        .expect("integer combination of integer polynomials")
}
