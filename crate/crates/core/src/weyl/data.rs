//! Coordinate realizations of the finite crystallographic root systems,
//! following the standard models: the braid family in the sum-zero
//! hyperplane of R^(n+1), the signed families in R^n, G2 in the sum-zero
//! hyperplane of R^3, F4 in R^4, and E6/E7 as subsystems of E8 in R^8.
//!
//! Everything is exact: coordinates are rationals (half-integers at worst).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::solve_in_span;

use super::WeylType;

pub type Vector = Vec<BigRational>;

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn vec_i(entries: &[i64]) -> Vector {
    entries.iter().map(|&x| rat(x)).collect()
}

fn vec_half(entries: &[i64]) -> Vector {
    entries
        .iter()
        .map(|&x| BigRational::new(BigInt::from(x), BigInt::from(2)))
        .collect()
}

fn unit_diff(dim: usize, i: usize, j: usize) -> Vector {
    let mut v = vec![rat(0); dim];
    v[i] = rat(1);
    v[j] = rat(-1);
    v
}

fn unit_sum(dim: usize, i: usize, j: usize) -> Vector {
    let mut v = vec![rat(0); dim];
    v[i] = rat(1);
    v[j] = rat(1);
    v
}

fn unit(dim: usize, i: usize, scale: i64) -> Vector {
    let mut v = vec![rat(0); dim];
    v[i] = rat(scale);
    v
}

fn negate(v: &Vector) -> Vector {
    v.iter().map(|x| -x).collect()
}

fn with_negatives(positives: Vec<Vector>) -> Vec<Vector> {
    let mut all = Vec::with_capacity(2 * positives.len());
    for v in positives {
        all.push(negate(&v));
        all.push(v);
    }
    all
}

fn type_a(rank: usize) -> (Vec<Vector>, Vec<Vector>) {
    let dim = rank + 1;
    let simple = (0..rank).map(|i| unit_diff(dim, i, i + 1)).collect();
    let mut positives = Vec::new();
    for i in 0..dim {
        for j in i + 1..dim {
            positives.push(unit_diff(dim, i, j));
        }
    }
    (simple, with_negatives(positives))
}

fn type_bcd(kind: WeylType, n: usize) -> (Vec<Vector>, Vec<Vector>) {
    let mut simple: Vec<Vector> = (0..n - 1).map(|i| unit_diff(n, i, i + 1)).collect();
    let mut positives = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            positives.push(unit_diff(n, i, j));
            positives.push(unit_sum(n, i, j));
        }
    }
    match kind {
        WeylType::B => {
            simple.push(unit(n, n - 1, 1));
            for i in 0..n {
                positives.push(unit(n, i, 1));
            }
        }
        WeylType::C => {
            simple.push(unit(n, n - 1, 2));
            for i in 0..n {
                positives.push(unit(n, i, 2));
            }
        }
        WeylType::D => {
            simple.push(unit_sum(n, n - 2, n - 1));
        }
        _ => unreachable!(),
    }
    (simple, with_negatives(positives))
}

fn g2() -> (Vec<Vector>, Vec<Vector>) {
    let simple = vec![vec_i(&[1, -1, 0]), vec_i(&[-2, 1, 1])];
    let positives = vec![
        vec_i(&[1, -1, 0]),
        vec_i(&[-2, 1, 1]),
        vec_i(&[-1, 0, 1]),
        vec_i(&[0, -1, 1]),
        vec_i(&[1, -2, 1]),
        vec_i(&[-1, -1, 2]),
    ];
    (simple, with_negatives(positives))
}

fn f4() -> (Vec<Vector>, Vec<Vector>) {
    let simple = vec![
        unit_diff(4, 1, 2),
        unit_diff(4, 2, 3),
        unit(4, 3, 1),
        vec_half(&[1, -1, -1, -1]),
    ];
    let mut roots = Vec::new();
    for i in 0..4 {
        roots.push(unit(4, i, 1));
        roots.push(unit(4, i, -1));
        for j in i + 1..4 {
            roots.push(unit_diff(4, i, j));
            roots.push(negate(&unit_diff(4, i, j)));
            roots.push(unit_sum(4, i, j));
            roots.push(negate(&unit_sum(4, i, j)));
        }
    }
    for mask in 0..16u32 {
        let entries: Vec<i64> = (0..4)
            .map(|b| if mask >> b & 1 == 1 { -1 } else { 1 })
            .collect();
        roots.push(vec_half(&entries));
    }
    (simple, roots)
}

fn e8() -> (Vec<Vector>, Vec<Vector>) {
    let simple = vec![
        vec_half(&[1, -1, -1, -1, -1, -1, -1, 1]),
        unit_sum(8, 0, 1),
        unit_diff(8, 1, 0),
        unit_diff(8, 2, 1),
        unit_diff(8, 3, 2),
        unit_diff(8, 4, 3),
        unit_diff(8, 5, 4),
        unit_diff(8, 6, 5),
    ];
    let mut roots = Vec::new();
    for i in 0..8 {
        for j in i + 1..8 {
            roots.push(unit_diff(8, i, j));
            roots.push(negate(&unit_diff(8, i, j)));
            roots.push(unit_sum(8, i, j));
            roots.push(negate(&unit_sum(8, i, j)));
        }
    }
    for mask in 0..256u32 {
        if mask.count_ones() % 2 == 0 {
            let entries: Vec<i64> = (0..8)
                .map(|b| if mask >> b & 1 == 1 { -1 } else { 1 })
                .collect();
            roots.push(vec_half(&entries));
        }
    }
    (simple, roots)
}

/// E7 and E6 are the subsystems of E8 spanned by the first 7 (resp. 6)
/// simple roots: keep the roots whose trailing simple-root coefficients
/// vanish.
fn e_subsystem(keep: usize) -> (Vec<Vector>, Vec<Vector>) {
    let (simple8, roots8) = e8();
    let roots = roots8
        .into_iter()
        .filter(|root| {
            let coeffs = solve_in_span(&simple8, root).expect("root lies in the span");
            coeffs[keep..].iter().all(Zero::is_zero)
        })
        .collect();
    (simple8[..keep].to_vec(), roots)
}

/// Simple roots and the full root set for a type/rank pair.
pub fn realization(weyl_type: WeylType, rank: usize) -> Result<(Vec<Vector>, Vec<Vector>)> {
    let bad = || Error::BadType(format!("{weyl_type:?} has no rank-{rank} realization"));
    match weyl_type {
        WeylType::A => (rank >= 1).then(|| type_a(rank)).ok_or_else(bad),
        WeylType::B | WeylType::C => (rank >= 2)
            .then(|| type_bcd(weyl_type, rank))
            .ok_or_else(bad),
        WeylType::D => (rank >= 3)
            .then(|| type_bcd(weyl_type, rank))
            .ok_or_else(bad),
        WeylType::E6 => (rank == 6).then(|| e_subsystem(6)).ok_or_else(bad),
        WeylType::E7 => (rank == 7).then(|| e_subsystem(7)).ok_or_else(bad),
        WeylType::E8 => (rank == 8).then(e8).ok_or_else(bad),
        WeylType::F4 => (rank == 4).then(f4).ok_or_else(bad),
        WeylType::G2 => (rank == 2).then(g2).ok_or_else(bad),
    }
}

/// Highest-root coefficients from the classification, as a sorted multiset.
pub fn table_highest_coeffs(weyl_type: WeylType, rank: usize) -> Vec<u64> {
    let mut c: Vec<u64> = match weyl_type {
        WeylType::A => vec![1; rank],
        WeylType::B | WeylType::C => {
            let mut v = vec![2; rank - 1];
            v.push(1);
            v
        }
        WeylType::D => {
            let mut v = vec![1, 1, 1];
            v.extend(std::iter::repeat_n(2, rank - 3));
            v
        }
        WeylType::E6 => vec![1, 1, 2, 2, 2, 3],
        WeylType::E7 => vec![1, 2, 2, 2, 3, 3, 4],
        WeylType::E8 => vec![2, 2, 3, 3, 4, 4, 5, 6],
        WeylType::F4 => vec![2, 2, 3, 4],
        WeylType::G2 => vec![2, 3],
    };
    c.sort_unstable();
    c
}

/// Exponents of the Weyl group (the integer roots of its characteristic
/// polynomial), from the classification.
pub fn table_exponents(weyl_type: WeylType, rank: usize) -> Vec<u64> {
    let mut e: Vec<u64> = match weyl_type {
        WeylType::A => (1..=rank as u64).collect(),
        WeylType::B | WeylType::C => (0..rank as u64).map(|i| 2 * i + 1).collect(),
        WeylType::D => {
            let mut v: Vec<u64> = (0..rank as u64 - 1).map(|i| 2 * i + 1).collect();
            v.push(rank as u64 - 1);
            v
        }
        WeylType::E6 => vec![1, 4, 5, 7, 8, 11],
        WeylType::E7 => vec![1, 5, 7, 9, 11, 13, 17],
        WeylType::E8 => vec![1, 7, 11, 13, 17, 19, 23, 29],
        WeylType::F4 => vec![1, 5, 7, 11],
        WeylType::G2 => vec![1, 5],
    };
    e.sort_unstable();
    e
}
