//! Exact linear algebra over the rationals for subspaces of R^n presented
//! by integer constraint rows (linear functionals required to vanish).
//!
//! A [`Subspace`] stores a canonical constraint matrix: the reduced row
//! echelon form of the input rows, rescaled so every row is a primitive
//! integer vector with positive pivot entry. Two subspaces are equal as
//! point sets iff their canonical matrices are identical, which makes the
//! canonical form hashable and usable for deduplication.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Raw integer constraint rows in a common ambient dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstraintMatrix {
    pub ambient_dim: usize,
    pub rows: Vec<Vec<BigInt>>,
}

impl ConstraintMatrix {
    pub fn new(ambient_dim: usize, rows: Vec<Vec<BigInt>>) -> Self {
        Self { ambient_dim, rows }
    }

    pub fn from_i64(ambient_dim: usize, rows: &[Vec<i64>]) -> Self {
        Self {
            ambient_dim,
            rows: rows
                .iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        }
    }
}

/// A linear subspace of R^n in canonical constraint form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    canon: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

impl Subspace {
    /// The full space R^n (no constraints).
    pub fn full_space(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            canon: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Dimension as a point set: ambient dimension minus constraint rank.
    pub fn dim(&self) -> usize {
        self.ambient_dim - self.canon.len()
    }

    pub fn codim(&self) -> usize {
        self.canon.len()
    }

    pub fn is_full_space(&self) -> bool {
        self.canon.is_empty()
    }

    /// Canonical constraint rows (primitive integer vectors, RREF shape).
    pub fn canon_rows(&self) -> &[Vec<BigInt>] {
        &self.canon
    }
}

fn is_zero_row(row: &[BigInt]) -> bool {
    row.iter().all(Zero::is_zero)
}

/// Divides a row by the gcd of its entries and fixes the sign of the first
/// nonzero entry to be positive. The row must be nonzero.
fn make_primitive(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in row.iter() {
        g = g.gcd(x);
    }
    let lead_negative = row
        .iter()
        .find(|x| !x.is_zero())
        .map(Signed::is_negative)
        .unwrap_or(false);
    if lead_negative {
        g = -g;
    }
    for x in row.iter_mut() {
        *x = &*x / &g;
    }
}

/// Reduced row echelon form over Q, returned as primitive integer rows with
/// positive pivots plus the pivot column of each row.
fn rref_canonical(ambient_dim: usize, rows: &[Vec<BigInt>]) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect()
        })
        .collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ambient_dim {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][col].clone().recip();
        for x in m[rank].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i != rank && !m[i][col].is_zero() {
                let factor = m[i][col].clone();
                for j in 0..ambient_dim {
                    let sub = &factor * &m[rank][j];
                    m[i][j] -= sub;
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    m.truncate(rank);
    let canon = m
        .into_iter()
        .map(|row| {
            // Clear denominators, then reduce to a primitive vector. The
            // pivot entry was +1, so it stays positive.
            let mut lcm = BigInt::one();
            for x in &row {
                lcm = lcm.lcm(x.denom());
            }
            let mut int_row: Vec<BigInt> = row
                .iter()
                .map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer())
                .collect();
            make_primitive(&mut int_row);
            int_row
        })
        .collect();
    (canon, pivots)
}

/// Canonicalizes raw constraint rows into a [`Subspace`].
///
/// Dependent and duplicate rows are absorbed by the elimination; an
/// all-zero row is rejected as malformed input.
pub fn canonicalize(raw: &ConstraintMatrix) -> Result<Subspace> {
    assert!(raw.ambient_dim >= 1, "ambient dimension must be positive");
    for (index, row) in raw.rows.iter().enumerate() {
        assert_eq!(row.len(), raw.ambient_dim, "row length != ambient dim");
        if is_zero_row(row) {
            return Err(Error::ZeroRow { index });
        }
    }
    let (canon, pivots) = rref_canonical(raw.ambient_dim, &raw.rows);
    Ok(Subspace {
        ambient_dim: raw.ambient_dim,
        canon,
        pivots,
    })
}

fn check_dims(a: &Subspace, b: &Subspace) -> Result<()> {
    if a.ambient_dim != b.ambient_dim {
        return Err(Error::DimensionMismatch {
            left: a.ambient_dim,
            right: b.ambient_dim,
        });
    }
    Ok(())
}

/// Intersection of two subspaces: stack the constraints and re-canonicalize.
pub fn intersect(u: &Subspace, v: &Subspace) -> Result<Subspace> {
    check_dims(u, v)?;
    let mut rows = u.canon.clone();
    rows.extend(v.canon.iter().cloned());
    let (canon, pivots) = rref_canonical(u.ambient_dim, &rows);
    Ok(Subspace {
        ambient_dim: u.ambient_dim,
        canon,
        pivots,
    })
}

/// Reduces `row` against the canonical rows of `v` (fraction-free) and
/// returns the residual.
fn reduce_against(row: &[BigInt], v: &Subspace) -> Vec<BigInt> {
    let mut r = row.to_vec();
    for (w, &col) in v.canon.iter().zip(&v.pivots) {
        if r[col].is_zero() {
            continue;
        }
        let pivot = w[col].clone();
        let coef = r[col].clone();
        for j in 0..r.len() {
            r[j] = &r[j] * &pivot - &coef * &w[j];
        }
    }
    r
}

/// True iff `V` is contained in `U` as point sets, i.e. every constraint of
/// `U` already holds on `V` (each row of `U` lies in `V`'s row space).
pub fn contains(u: &Subspace, v: &Subspace) -> Result<bool> {
    check_dims(u, v)?;
    if u.codim() > v.codim() {
        return Ok(false);
    }
    Ok(u.canon
        .iter()
        .all(|row| is_zero_row(&reduce_against(row, v))))
}

/// True iff the integer point `v` satisfies every constraint of `U`.
pub fn point_in(u: &Subspace, v: &[BigInt]) -> Result<bool> {
    if v.len() != u.ambient_dim {
        return Err(Error::DimensionMismatch {
            left: u.ambient_dim,
            right: v.len(),
        });
    }
    Ok(u.canon.iter().all(|row| {
        row.iter()
            .zip(v)
            .fold(BigInt::zero(), |acc, (a, b)| acc + a * b)
            .is_zero()
    }))
}

/// Deterministic trial-division primality test for small moduli.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Rank of the canonical constraint rows over the field with `p` elements,
/// computed by a fresh elimination mod p.
pub fn reduce_mod_p(u: &Subspace, p: u64) -> Result<usize> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let pb = BigInt::from(p);
    let mut m: Vec<Vec<u64>> = u
        .canon
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| {
                    let r = x.mod_floor(&pb);
                    u64::try_from(&r).expect("residue fits in u64")
                })
                .collect()
        })
        .collect();
    let mut rank = 0;
    for col in 0..u.ambient_dim {
        let Some(piv) = (rank..m.len()).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = mod_inverse(m[rank][col], p);
        for x in m[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for i in 0..m.len() {
            if i != rank && m[i][col] != 0 {
                let f = m[i][col];
                for j in 0..u.ambient_dim {
                    m[i][j] = (m[i][j] + (p - f) * m[rank][j]) % p;
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    Ok(rank)
}

/// True iff the vector `v` (entries mod p) lies on the reduction of `U`
/// over the field with `p` elements.
pub fn point_in_mod_p(u: &Subspace, v: &[u64], p: u64) -> bool {
    let pb = BigInt::from(p);
    u.canon.iter().all(|row| {
        row.iter().zip(v).fold(0u64, |acc, (a, &b)| {
            let a = u64::try_from(&a.mod_floor(&pb)).expect("residue fits in u64");
            (acc + a * b) % p
        }) == 0
    })
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat inverse; p is prime and a != 0 mod p.
    let mut result = 1u64;
    let mut base = a % p;
    let mut exp = p - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    result
}

/// Solves `sum x_j * cols[j] = target` exactly, where the columns are
/// linearly independent vectors over Q. Returns `None` if the system is
/// inconsistent (target outside the column span).
pub fn solve_in_span(
    cols: &[Vec<BigRational>],
    target: &[BigRational],
) -> Option<Vec<BigRational>> {
    let n = cols.len();
    let d = target.len();
    let mut m: Vec<Vec<BigRational>> = (0..d)
        .map(|i| {
            let mut row: Vec<BigRational> = cols.iter().map(|c| c[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut rank = 0;
    for col in 0..n {
        let Some(p) = (rank..d).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][col].clone().recip();
        for x in m[rank].iter_mut() {
            *x *= &inv;
        }
        for i in 0..d {
            if i != rank && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for j in 0..=n {
                    let sub = &f * &m[rank][j];
                    m[i][j] -= sub;
                }
            }
        }
        pivot_cols.push(col);
        rank += 1;
    }
    assert_eq!(rank, n, "columns must be linearly independent");
    // Inconsistent iff some residual row has zero coefficients but a
    // nonzero right-hand side.
    for row in m.iter().skip(rank) {
        if !row[n].is_zero() {
            return None;
        }
    }
    let mut x = vec![BigRational::zero(); n];
    for (r, &col) in pivot_cols.iter().enumerate() {
        x[col] = m[r][n].clone();
    }
    Some(x)
}
