//! Rational generating functions with denominators that are products of
//! `(1 - z^c)` factors, and their exact truncated power-series expansion.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::poly::IntPolynomial;

/// A generating function `numerator / prod (1 - z^c)^multiplicity`.
///
/// The denominator is nonzero at `z = 0` by construction, so the Maclaurin
/// expansion exists and has integer coefficients whenever the numerator does.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalGF {
    numerator: IntPolynomial,
    /// Map `c -> multiplicity` for the factors `(1 - z^c)^multiplicity`.
    denominator_factors: BTreeMap<usize, usize>,
}

impl RationalGF {
    /// Builds a generating function from a numerator and a list of factor
    /// exponents `c` (repetition encodes multiplicity). Zero exponents are
    /// rejected by panic since `(1 - z^0) = 0`.
    pub fn new(numerator: IntPolynomial, factors: &[usize]) -> Self {
        let mut denominator_factors = BTreeMap::new();
        for &c in factors {
            assert!(c > 0, "denominator factor exponent must be positive");
            *denominator_factors.entry(c).or_insert(0) += 1;
        }
        Self {
            numerator,
            denominator_factors,
        }
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.numerator
    }

    /// Factors as sorted `(c, multiplicity)` pairs.
    pub fn factors(&self) -> Vec<(usize, usize)> {
        self.denominator_factors
            .iter()
            .map(|(&c, &m)| (c, m))
            .collect()
    }

    pub fn same_denominator(&self, other: &RationalGF) -> bool {
        self.denominator_factors == other.denominator_factors
    }

    /// Coefficients of `z^0 .. z^N` of the Maclaurin expansion, exactly.
    ///
    /// Multiplying a truncated series by `1/(1 - z^c)` is a running sum with
    /// stride `c`, so the whole expansion is a few linear passes.
    pub fn series(&self, n: usize) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); n + 1];
        for (k, c) in self.numerator.coeffs().iter().enumerate() {
            if k > n {
                break;
            }
            out[k] = c.clone();
        }
        for (&c, &mult) in &self.denominator_factors {
            for _ in 0..mult {
                for i in c..=n {
                    let prev = out[i - c].clone();
                    out[i] += prev;
                }
            }
        }
        out
    }
}

impl fmt::Display for RationalGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .numerator
            .coeffs()
            .iter()
            .filter(|c| !c.is_zero())
            .count();
        let num = self.numerator.to_string().replace('t', "z");
        if terms <= 1 {
            write!(f, "{num}")?;
        } else {
            write!(f, "({num})")?;
        }
        if self.denominator_factors.is_empty() {
            return Ok(());
        }
        write!(f, "/(")?;
        for (&c, &m) in &self.denominator_factors {
            let base = if c == 1 {
                "(1-z)".to_string()
            } else {
                format!("(1-z^{c})")
            };
            if m == 1 {
                write!(f, "{base}")?;
            } else {
                write!(f, "{base}^{m}")?;
            }
        }
        write!(f, ")")
    }
}

/// Truncated expansion of `g`, coefficients of `z^0 .. z^N`.
pub fn gf_series(g: &RationalGF, n: usize) -> Vec<BigInt> {
    g.series(n)
}
