//! Bounded Stirling numbers, the falling-factorial expansion of k-equal
//! characteristic polynomials, exact divisibility checks, and the
//! nonnegative basis expansions for embedded arrangements.

use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::arith::{binomial, from_basis_int, to_basis, FactorialBasis, IntPolynomial};
use crate::arrangement::{embedded_in_a, embedded_in_b, Arrangement};
use crate::error::{Error, Result};
use crate::lattice::char_poly;

/// Counts of set partitions with bounded block size: entry `(n, j)` is the
/// number of partitions of an n-element set into j blocks, each of size at
/// most `k`.
///
/// Rows are filled lazily behind a mutex, so a shared table is safe to
/// query from any thread.
#[derive(Debug)]
pub struct StirlingTable {
    k: usize,
    rows: Mutex<Vec<Vec<BigInt>>>,
}

impl StirlingTable {
    pub fn new(k: usize) -> Self {
        assert!(k >= 1, "block-size bound must be at least 1");
        Self {
            k,
            rows: Mutex::new(vec![vec![BigInt::from(1)]]),
        }
    }

    pub fn block_bound(&self) -> usize {
        self.k
    }

    /// `S_k(n, j)`, computed by classifying the block containing the last
    /// element: a block of size i uses `C(n-1, i-1)` companions and leaves
    /// `S_k(n-i, j-1)` ways for the rest.
    pub fn value(&self, n: usize, j: usize) -> BigInt {
        let mut rows = self.rows.lock().expect("table lock");
        while rows.len() <= n {
            let m = rows.len();
            let mut row = vec![BigInt::zero(); m + 1];
            for (j, slot) in row.iter_mut().enumerate().skip(1) {
                let mut total = BigInt::zero();
                for i in 1..=self.k.min(m) {
                    let prev = rows[m - i].get(j - 1).cloned().unwrap_or_else(BigInt::zero);
                    if !prev.is_zero() {
                        total += binomial(m - 1, i - 1) * prev;
                    }
                }
                *slot = total;
            }
            rows.push(row);
        }
        rows[n].get(j).cloned().unwrap_or_else(BigInt::zero)
    }
}

/// One-shot `S_k(n, j)`.
pub fn stirling_bounded(k: usize, n: usize, j: usize) -> BigInt {
    StirlingTable::new(k).value(n, j)
}

/// The expansion `sum_j S_{k-1}(n, j) (t)_j`, which must equal the
/// characteristic polynomial of the k-equal arrangement.
pub fn keq_charpoly_expansion(n: usize, k: usize) -> Result<IntPolynomial> {
    if !(2..=n).contains(&k) {
        return Err(Error::BadParams(format!(
            "need 2 <= k <= n, got n = {n}, k = {k}"
        )));
    }
    let table = StirlingTable::new(k - 1);
    let coeffs: Vec<BigInt> = (0..=n).map(|j| table.value(n, j)).collect();
    Ok(from_basis_int(&coeffs, FactorialBasis::Falling))
}

/// True iff `d` divides `p` exactly (zero remainder over Q).
pub fn check_divisibility(p: &IntPolynomial, d: &IntPolynomial) -> bool {
    assert!(!d.is_zero(), "division by the zero polynomial");
    let (_, rem) = p.to_rational().divmod(&d.to_rational());
    rem.is_zero()
}

/// Which hosting family a corollary expansion refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExpansionFamily {
    /// Embedded in the braid arrangement; falling-factorial basis,
    /// nonnegativity asserted for indices `0..=n`.
    AEmbedded,
    /// Embedded in the full signed arrangement; shifted double falling
    /// basis, nonnegativity asserted for indices `1..=n`.
    BEmbedded,
}

/// Expansion of an embedded arrangement's characteristic polynomial in its
/// family basis, together with the zero-index divisibility witness.
#[derive(Debug, Clone)]
pub struct CorollaryReport {
    pub family: ExpansionFamily,
    /// Basis coefficients, index 0 through the ambient dimension.
    pub coeffs: Vec<BigInt>,
    /// Largest index in the asserted range with zero coefficient, if any.
    pub zero_index: Option<usize>,
    /// Whether the basis element of index `zero_index + 1` divides chi;
    /// `None` when no coefficient in range vanishes (the clause is vacuous).
    pub divisibility: Option<bool>,
}

/// Expands `char_poly(a)` over the family basis and checks the
/// nonnegativity and divisibility structure.
pub fn corollary_expansion(a: &Arrangement, family: ExpansionFamily) -> Result<CorollaryReport> {
    let (embedded, basis, low_index, host) = match family {
        ExpansionFamily::AEmbedded => (
            embedded_in_a(a)?,
            FactorialBasis::Falling,
            0usize,
            "the braid arrangement",
        ),
        ExpansionFamily::BEmbedded => (
            embedded_in_b(a)?,
            FactorialBasis::ShiftedDoubleFalling,
            1usize,
            "the full signed arrangement",
        ),
    };
    if !embedded {
        return Err(Error::NotEmbedded { host });
    }
    let n = a.ambient_dim();
    let chi = char_poly(a)?;
    let rat = to_basis(&chi, basis);
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for (j, c) in rat.iter().enumerate() {
        // Monic integer basis elements keep an integer polynomial integral.
        assert!(c.is_integer(), "basis expansion left the integers");
        coeffs[j] = c.to_integer();
    }
    for (j, c) in coeffs.iter().enumerate().skip(low_index) {
        if c.is_negative() {
            return Err(Error::NegativeCoefficient {
                index: j,
                value: c.to_string(),
            });
        }
    }
    let zero_index = (low_index..=n).rev().find(|&j| coeffs[j].is_zero());
    let divisibility = zero_index.map(|m| check_divisibility(&chi, &basis.element(m + 1)));
    Ok(CorollaryReport {
        family,
        coeffs,
        zero_index,
        divisibility,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::falling_factorial;
    use crate::arrangement::{build_k_equal, build_type_a, build_type_b};

    #[test]
    fn singleton_blocks_only() {
        let t = StirlingTable::new(1);
        for n in 0..6 {
            for j in 0..=n + 1 {
                let expected = if j == n { 1 } else { 0 };
                assert_eq!(t.value(n, j), BigInt::from(expected));
            }
        }
    }

    #[test]
    fn pair_blocks() {
        assert_eq!(stirling_bounded(2, 4, 2), BigInt::from(3));
        // S_2(4, 3): one pair and two singletons.
        assert_eq!(stirling_bounded(2, 4, 3), BigInt::from(6));
        assert_eq!(stirling_bounded(2, 3, 2), BigInt::from(3));
    }

    #[test]
    fn unbounded_matches_stirling_numbers() {
        // With k >= n the bound is inactive: ordinary Stirling numbers of
        // the second kind, here S(5, j) = 1, 15, 25, 10, 1.
        for (j, expected) in [(1, 1), (2, 15), (3, 25), (4, 10), (5, 1)] {
            assert_eq!(stirling_bounded(5, 5, j), BigInt::from(expected));
            assert_eq!(stirling_bounded(9, 5, j), BigInt::from(expected));
        }
    }

    #[test]
    fn vanishing_below_block_floor() {
        // j blocks of size <= k cover at most jk elements.
        for k in 1..5usize {
            for n in 0..9usize {
                for j in 0..=n {
                    if j * k < n {
                        assert!(stirling_bounded(k, n, j).is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn expansion_matches_lattice() {
        assert_eq!(
            keq_charpoly_expansion(3, 3).unwrap(),
            IntPolynomial::from_i64(&[0, -1, 0, 1])
        );
        assert_eq!(keq_charpoly_expansion(2, 2).unwrap(), falling_factorial(2));
        assert_eq!(
            keq_charpoly_expansion(4, 3).unwrap(),
            char_poly(&build_k_equal(4, 3).unwrap()).unwrap()
        );
    }

    #[test]
    fn divisibility_checks() {
        let chi43 = keq_charpoly_expansion(4, 3).unwrap();
        assert!(check_divisibility(&chi43, &falling_factorial(2)));
        assert!(check_divisibility(
            &falling_factorial(5),
            &falling_factorial(3)
        ));
        assert!(!check_divisibility(
            &IntPolynomial::from_i64(&[1, 0, 1]),
            &IntPolynomial::from_i64(&[0, 1])
        ));
    }

    #[test]
    fn corollary_a_embedded() {
        let a33 = build_k_equal(3, 3).unwrap();
        let report = corollary_expansion(&a33, ExpansionFamily::AEmbedded).unwrap();
        let expected: Vec<BigInt> = [0, 0, 3, 1].iter().map(|&c| BigInt::from(c)).collect();
        assert_eq!(report.coeffs, expected);
        assert_eq!(report.zero_index, Some(1));
        assert_eq!(report.divisibility, Some(true));
    }

    #[test]
    fn corollary_b_embedded() {
        let b2 = build_type_b(2).unwrap();
        let report = corollary_expansion(&b2, ExpansionFamily::BEmbedded).unwrap();
        let expected: Vec<BigInt> = [0, 0, 1].iter().map(|&c| BigInt::from(c)).collect();
        assert_eq!(report.coeffs, expected);
        assert_eq!(report.zero_index, Some(1));
        assert_eq!(report.divisibility, Some(true));
    }

    #[test]
    fn corollary_plain_braid() {
        let a2 = build_type_a(2).unwrap();
        let report = corollary_expansion(&a2, ExpansionFamily::AEmbedded).unwrap();
        let expected: Vec<BigInt> = [0, 0, 1].iter().map(|&c| BigInt::from(c)).collect();
        assert_eq!(report.coeffs, expected);
        assert_eq!(report.zero_index, Some(1));
        assert_eq!(report.divisibility, Some(true));
    }

    #[test]
    fn corollary_rejects_non_embedded() {
        let b2 = build_type_b(2).unwrap();
        assert!(matches!(
            corollary_expansion(&b2, ExpansionFamily::AEmbedded),
            Err(Error::NotEmbedded { .. })
        ));
    }

    #[test]
    fn zero_set_is_a_prefix() {
        for n in 2..=6 {
            for k in 2..=n {
                let a = build_k_equal(n, k).unwrap();
                let report = corollary_expansion(&a, ExpansionFamily::AEmbedded).unwrap();
                let zero_js: Vec<usize> = (0..=n).filter(|&j| report.coeffs[j].is_zero()).collect();
                // Zeros form a prefix 0..m of the index range.
                assert_eq!(zero_js, (0..zero_js.len()).collect::<Vec<_>>());
            }
        }
    }
}
