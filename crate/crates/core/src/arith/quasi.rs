//! Quasi-polynomials: one rational polynomial per residue class modulo a
//! period, recovered exactly from integer value sequences.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::RatPolynomial;
use crate::error::{Error, Result};

/// A function on positive integers that restricts to a polynomial on each
/// residue class modulo `period`. `parts[r]` governs arguments `u` with
/// `u = r (mod period)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiPolynomial {
    period: usize,
    parts: Vec<RatPolynomial>,
    degree: usize,
}

impl QuasiPolynomial {
    pub fn new(parts: Vec<RatPolynomial>) -> Self {
        assert!(!parts.is_empty());
        let degree = parts
            .iter()
            .filter_map(RatPolynomial::degree)
            .max()
            .unwrap_or(0);
        Self {
            period: parts.len(),
            parts,
            degree,
        }
    }

    pub fn period(&self) -> usize {
        self.period
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn parts(&self) -> &[RatPolynomial] {
        &self.parts
    }

    pub fn part(&self, residue: usize) -> &RatPolynomial {
        &self.parts[residue % self.period]
    }

    /// Exact evaluation at a positive integer argument.
    pub fn eval(&self, u: u64) -> BigRational {
        assert!(u >= 1, "quasi-polynomial arguments start at 1");
        let r = (u % self.period as u64) as usize;
        self.parts[r].eval_integer(&BigInt::from(u))
    }

    /// Evaluation for arguments where the value is known to be an integer
    /// (lattice-point counts). Panics if the value is not integral.
    pub fn eval_integer(&self, u: u64) -> BigInt {
        let v = self.eval(u);
        assert!(v.is_integer(), "quasi-polynomial value not integral at {u}");
        v.to_integer()
    }
}

impl fmt::Display for QuasiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, part) in self.parts.iter().enumerate() {
            if r > 0 {
                writeln!(f)?;
            }
            write!(f, "t = {} (mod {}): {}", r, self.period, part)?;
        }
        Ok(())
    }
}

/// Exact Lagrange interpolation through integer points `(x_i, y_i)`.
fn lagrange(points: &[(i64, BigInt)]) -> RatPolynomial {
    let mut acc = RatPolynomial::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut term = RatPolynomial::new(vec![BigRational::from_integer(yi.clone())]);
        let mut denom = BigRational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let linear = RatPolynomial::new(vec![
                BigRational::from_integer(BigInt::from(-*xj)),
                BigRational::one(),
            ]);
            term = &term * &linear;
            denom *= BigRational::from_integer(BigInt::from(xi - xj));
        }
        acc = &acc + &term.scale(&denom.recip());
    }
    acc
}

/// Recovers a quasi-polynomial of period `m` and degree at most `degree`
/// from consecutive values `coeffs[i]` at arguments `offset + i`.
///
/// Each residue class is interpolated through its first `degree + 1`
/// values; every remaining value in the class must then agree with the
/// interpolant, otherwise the claimed period or degree is wrong and
/// `SurplusMismatch` is returned.
pub fn quasi_interpolate(
    coeffs: &[BigInt],
    m: usize,
    degree: usize,
    offset: usize,
) -> Result<QuasiPolynomial> {
    assert!(m >= 1, "period must be positive");
    assert!(offset >= 1, "arguments start at a positive offset");
    let mut classes: Vec<Vec<(i64, BigInt)>> = vec![Vec::new(); m];
    for (i, v) in coeffs.iter().enumerate() {
        let arg = offset + i;
        classes[arg % m].push((arg as i64, v.clone()));
    }
    let mut parts = Vec::with_capacity(m);
    for (residue, class) in classes.into_iter().enumerate() {
        if class.len() < degree + 1 {
            return Err(Error::InsufficientValues {
                residue,
                period: m,
                got: class.len(),
                need: degree + 1,
            });
        }
        let (base, surplus) = class.split_at(degree + 1);
        let part = lagrange(base);
        for (arg, value) in surplus {
            let predicted = part.eval_integer(&BigInt::from(*arg));
            if predicted != BigRational::from_integer(value.clone()) {
                return Err(Error::SurplusMismatch {
                    argument: *arg,
                    expected: predicted.to_string(),
                    found: value.to_string(),
                });
            }
        }
        parts.push(part);
    }
    Ok(QuasiPolynomial::new(parts))
}
