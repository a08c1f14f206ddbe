//! Dense univariate polynomials with exact integer or rational coefficients.
//!
//! Coefficients are stored in ascending degree order with no trailing zeros,
//! so the zero polynomial is the empty coefficient vector and `degree` is
//! `len - 1` otherwise. All arithmetic is exact; nothing here ever rounds.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Polynomial in one variable `t` with arbitrary-precision integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

/// Polynomial in one variable `t` with arbitrary-precision rational
/// coefficients (always kept in lowest terms by `BigRational` itself).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RatPolynomial {
    coeffs: Vec<BigRational>,
}

fn trim<T: Zero>(coeffs: &mut Vec<T>) {
    while coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        trim(&mut coeffs);
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `c * t^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Monic product of linear factors `(t - r)` over the given roots.
    pub fn from_roots(roots: &[i64]) -> Self {
        let mut p = Self::one();
        for &r in roots {
            p = &p * &Self::from_i64(&[-r, 1]);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(BigInt::is_one)
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, u: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * u + c;
        }
        acc
    }

    pub fn eval_i64(&self, u: i64) -> BigInt {
        self.eval(&BigInt::from(u))
    }

    pub fn to_rational(&self) -> RatPolynomial {
        RatPolynomial::new(
            self.coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }
}

impl RatPolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        trim(&mut coeffs);
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn eval(&self, u: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * u + c;
        }
        acc
    }

    pub fn eval_integer(&self, u: &BigInt) -> BigRational {
        self.eval(&BigRational::from_integer(u.clone()))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Converts back to integer coefficients if every coefficient is integral.
    pub fn to_integer(&self) -> Option<IntPolynomial> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            if !c.is_integer() {
                return None;
            }
            out.push(c.to_integer());
        }
        Some(IntPolynomial::new(out))
    }

    /// Exact polynomial division with remainder: `self = q * d + r`,
    /// `deg r < deg d`. Panics on a zero divisor.
    pub fn divmod(&self, d: &RatPolynomial) -> (RatPolynomial, RatPolynomial) {
        let dd = d.degree().expect("division by the zero polynomial");
        let dlead = d.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let q = rem.last().unwrap() / &dlead;
            for i in 0..=dd {
                let sub = &q * &d.coeffs[i];
                rem[k + i] -= sub;
            }
            debug_assert!(rem.last().unwrap().is_zero());
            rem.pop();
            quot[k] = q;
        }
        (RatPolynomial::new(quot), RatPolynomial::new(rem))
    }
}

macro_rules! poly_ops {
    ($ty:ident, $coef:ty) => {
        impl Add for &$ty {
            type Output = $ty;
            fn add(self, rhs: &$ty) -> $ty {
                let n = self.coeffs.len().max(rhs.coeffs.len());
                let mut out = Vec::with_capacity(n);
                for i in 0..n {
                    out.push(self.coeff(i) + rhs.coeff(i));
                }
                $ty::new(out)
            }
        }
        impl Sub for &$ty {
            type Output = $ty;
            fn sub(self, rhs: &$ty) -> $ty {
                let n = self.coeffs.len().max(rhs.coeffs.len());
                let mut out = Vec::with_capacity(n);
                for i in 0..n {
                    out.push(self.coeff(i) - rhs.coeff(i));
                }
                $ty::new(out)
            }
        }
        impl Mul for &$ty {
            type Output = $ty;
            fn mul(self, rhs: &$ty) -> $ty {
                if self.is_zero() || rhs.is_zero() {
                    return $ty::zero();
                }
                let mut out = vec![<$coef>::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
                for (i, a) in self.coeffs.iter().enumerate() {
                    for (j, b) in rhs.coeffs.iter().enumerate() {
                        out[i + j] += a * b;
                    }
                }
                $ty::new(out)
            }
        }
        impl Neg for &$ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                $ty::new(self.coeffs.iter().map(|c| -c).collect())
            }
        }
    };
}

poly_ops!(IntPolynomial, BigInt);
poly_ops!(RatPolynomial, BigRational);

// Text form: highest degree first, explicit signs, e.g. "t^2 - 4t + 3".
fn fmt_terms<C, M, N>(f: &mut fmt::Formatter<'_>, coeffs: &[C], is_neg: N, mag: M) -> fmt::Result
where
    C: Zero,
    N: Fn(&C) -> bool,
    M: Fn(&C) -> String,
{
    if coeffs.is_empty() {
        return write!(f, "0");
    }
    let mut first = true;
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = is_neg(c);
        if first {
            if neg {
                write!(f, "-")?;
            }
            first = false;
        } else if neg {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        let m = mag(c);
        match k {
            0 => write!(f, "{m}")?,
            _ => {
                if m != "1" {
                    write!(f, "{m}")?;
                }
                if k == 1 {
                    write!(f, "t")?;
                } else {
                    write!(f, "t^{k}")?;
                }
            }
        }
    }
    Ok(())
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(
            f,
            &self.coeffs,
            |c: &BigInt| c.is_negative(),
            |c| c.magnitude().to_string(),
        )
    }
}

impl fmt::Display for RatPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(
            f,
            &self.coeffs,
            |c: &BigRational| c.is_negative(),
            |c| {
                let a = c.abs();
                if a.is_integer() {
                    a.numer().to_string()
                } else {
                    format!("({}/{})", a.numer(), a.denom())
                }
            },
        )
    }
}
