//! Brute-force lattice-point oracles: points of the centered cube
//! `[-s, s]^n` off an arrangement, points of `F_p^n` off an arrangement,
//! and the decomposition of the cube count by minimal Weyl-lattice flat.
//!
//! These are deliberately exhaustive enumerations. Their whole value is
//! independence from the Möbius-function pipeline they are used to check.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::arrangement::{build_type_a, build_type_b, embedded_in, Arrangement};
use crate::error::{Error, Result};
use crate::lattice::{build_poset, IntersectionPoset};
use crate::linalg::{contains, intersect, is_prime, point_in, reduce_mod_p, Subspace};

/// Default cap on the number of candidate points an oracle will visit.
pub const DEFAULT_POINT_LIMIT: u128 = 1_000_000_000;

/// Half-side `s` of the centered cube `[-s, s]^n`; the side length
/// `t = 2s + 1` is always odd and positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CubeSpec {
    s: u64,
}

impl CubeSpec {
    pub fn new(s: u64) -> Self {
        Self { s }
    }

    pub fn s(&self) -> u64 {
        self.s
    }

    pub fn t(&self) -> u64 {
        2 * self.s + 1
    }
}

fn check_scale(base: u64, n: usize, limit: u128) -> Result<()> {
    let mut points: u128 = 1;
    for _ in 0..n {
        points = points
            .checked_mul(base as u128)
            .filter(|&p| p <= limit)
            .ok_or(Error::ScaleError {
                points: u128::MAX,
                limit,
            })?;
    }
    if points > limit {
        return Err(Error::ScaleError { points, limit });
    }
    Ok(())
}

/// Members as plain machine-integer rows, when the canonical rows are small
/// enough that exact i128 dot products cannot overflow.
fn small_rows(a: &Arrangement, coord_bound: u64) -> Option<Vec<Vec<Vec<i128>>>> {
    const ENTRY_CAP: i128 = 1 << 40;
    if coord_bound > (1 << 40) || a.ambient_dim() > 32 {
        return None;
    }
    a.members()
        .iter()
        .map(|m| {
            m.canon_rows()
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|x| {
                            let v = x.to_i128()?;
                            (v.abs() <= ENTRY_CAP).then_some(v)
                        })
                        .collect()
                })
                .collect()
        })
        .collect()
}

fn on_member_i128(rows: &[Vec<i128>], coords: &[i64]) -> bool {
    rows.iter().all(|row| {
        row.iter()
            .zip(coords)
            .map(|(a, &b)| a * b as i128)
            .sum::<i128>()
            == 0
    })
}

/// Serial odometer over `coords[from..]` in `[-s, s]`, invoking `f` for
/// every completed coordinate vector.
fn odometer<F: FnMut(&[i64])>(coords: &mut [i64], from: usize, s: i64, f: &mut F) {
    if from == coords.len() {
        f(coords);
        return;
    }
    for v in -s..=s {
        coords[from] = v;
        odometer(coords, from + 1, s, f);
    }
}

/// Number of integer points of `[-s, s]^n` lying on no member of `a`.
pub fn count_cube(a: &Arrangement, spec: &CubeSpec) -> Result<BigInt> {
    count_cube_limited(a, spec, DEFAULT_POINT_LIMIT)
}

/// [`count_cube`] with an explicit candidate-point guardrail.
pub fn count_cube_limited(a: &Arrangement, spec: &CubeSpec, limit: u128) -> Result<BigInt> {
    let n = a.ambient_dim();
    check_scale(spec.t(), n, limit)?;
    let s = spec.s() as i64;
    if let Some(members) = small_rows(a, spec.s()) {
        // Parallel over slabs of the first coordinate; the total is a sum
        // of per-slab counts, so scheduling cannot change the result.
        let total: u64 = (-s..=s)
            .into_par_iter()
            .map(|x0| {
                let mut coords = vec![0i64; n];
                coords[0] = x0;
                let mut found = 0u64;
                odometer(&mut coords, 1, s, &mut |c| {
                    if !members.iter().any(|rows| on_member_i128(rows, c)) {
                        found += 1;
                    }
                });
                found
            })
            .sum();
        return Ok(BigInt::from(total));
    }
    // Fallback for arrangements with huge coefficients: exact big-integer
    // dot products, serial.
    let mut total = BigInt::zero();
    let mut coords = vec![0i64; n];
    odometer(&mut coords, 0, s, &mut |c| {
        let v: Vec<BigInt> = c.iter().map(|&x| BigInt::from(x)).collect();
        let on_any = a
            .members()
            .iter()
            .any(|m| point_in(m, &v).expect("dimensions match"));
        if !on_any {
            total += 1;
        }
    });
    Ok(total)
}

/// Number of vectors of `F_p^n` lying on no member of `a`.
///
/// Before counting, every element of the intersection poset must keep its
/// constraint rank mod p; a rank drop means the mod-p lattice differs from
/// the rational one and the count is rejected as unreliable.
pub fn count_ffield(a: &Arrangement, p: u64) -> Result<BigInt> {
    count_ffield_limited(a, p, DEFAULT_POINT_LIMIT)
}

/// [`count_ffield`] with an explicit candidate-point guardrail.
pub fn count_ffield_limited(a: &Arrangement, p: u64, limit: u128) -> Result<BigInt> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let poset = build_poset(a)?;
    for x in poset.elements() {
        let rank = reduce_mod_p(x, p)?;
        if rank < x.codim() {
            return Err(Error::PrimeTooSmall {
                p,
                expected_rank: x.codim(),
                got_rank: rank,
            });
        }
    }
    let n = a.ambient_dim();
    check_scale(p, n, limit)?;
    let pb = BigInt::from(p);
    let members: Vec<Vec<Vec<u64>>> = a
        .members()
        .iter()
        .map(|m| {
            m.canon_rows()
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|x| u64::try_from(&x.mod_floor(&pb)).expect("residue fits"))
                        .collect()
                })
                .collect()
        })
        .collect();
    let total: u64 = (0..p)
        .into_par_iter()
        .map(|v0| {
            let mut coords = vec![0u64; n];
            coords[0] = v0;
            let mut found = 0u64;
            ffield_odometer(&mut coords, 1, p, &mut |c| {
                let on_any = members.iter().any(|rows| {
                    rows.iter().all(|row| {
                        row.iter()
                            .zip(c)
                            .fold(0u64, |acc, (a, &b)| (acc + a * b) % p)
                            == 0
                    })
                });
                if !on_any {
                    found += 1;
                }
            });
            found
        })
        .sum();
    Ok(BigInt::from(total))
}

fn ffield_odometer<F: FnMut(&[u64])>(coords: &mut [u64], from: usize, p: u64, f: &mut F) {
    if from == coords.len() {
        f(coords);
        return;
    }
    for v in 0..p {
        coords[from] = v;
        ffield_odometer(coords, from + 1, p, f);
    }
}

/// Which Weyl lattice the decomposition classifies against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EmbedFamily {
    /// Flats of the braid arrangement lattice; class sizes are falling
    /// factorials of the flat dimension.
    TypeA,
    /// Flats of the full signed arrangement lattice; class sizes are
    /// shifted double falling factorials.
    TypeB,
}

/// One class of the cube decomposition: a host-lattice flat not contained
/// in any member, with the number of counted points whose minimal host
/// flat it is.
#[derive(Debug, Clone)]
pub struct CubeClass {
    pub element: usize,
    pub dim: usize,
    pub count: BigInt,
}

/// Result of [`decompose_cube`]: the host Weyl lattice and the admissible
/// classes (zero-count classes included).
#[derive(Debug)]
pub struct CubeDecomposition {
    pub host: IntersectionPoset,
    pub classes: Vec<CubeClass>,
}

impl CubeDecomposition {
    pub fn total(&self) -> BigInt {
        self.classes.iter().map(|c| &c.count).sum()
    }
}

/// Partitions the points of `[-s, s]^n` off the arrangement by the minimal
/// host-lattice flat containing each point.
///
/// The host is the braid or full signed arrangement of the same ambient
/// dimension, and `a` must be embedded in it. Classes are exactly the host
/// flats not contained in any member of `a`.
pub fn decompose_cube(
    a: &Arrangement,
    spec: &CubeSpec,
    family: EmbedFamily,
) -> Result<CubeDecomposition> {
    let n = a.ambient_dim();
    let (host, host_name) = match family {
        EmbedFamily::TypeA => (build_type_a(n)?, "the braid arrangement"),
        EmbedFamily::TypeB => (build_type_b(n)?, "the full signed arrangement"),
    };
    if !embedded_in(a, &host)? {
        return Err(Error::NotEmbedded { host: host_name });
    }
    check_scale(spec.t(), n, DEFAULT_POINT_LIMIT)?;
    let poset = build_poset(&host)?;
    let admissible: Vec<bool> = poset
        .elements()
        .iter()
        .map(|x| {
            a.members()
                .iter()
                .all(|k| !contains(k, x).expect("dimensions match"))
        })
        .collect();
    let mut counts = vec![BigInt::zero(); poset.len()];
    let s = spec.s() as i64;
    let mut coords = vec![0i64; n];
    odometer(&mut coords, 0, s, &mut |c| {
        let v: Vec<BigInt> = c.iter().map(|&x| BigInt::from(x)).collect();
        if a.members()
            .iter()
            .any(|m| point_in(m, &v).expect("dimensions match"))
        {
            return;
        }
        let mut flat = Subspace::full_space(n);
        for h in host.members() {
            if point_in(h, &v).expect("dimensions match") {
                flat = intersect(&flat, h).expect("dimensions match");
            }
        }
        let idx = poset.find(&flat).expect("closure contains minimal flat");
        debug_assert!(admissible[idx]);
        counts[idx] += 1;
    });
    let classes = (0..poset.len())
        .filter(|&i| admissible[i])
        .map(|i| CubeClass {
            element: i,
            dim: poset.element(i).dim(),
            count: counts[i].clone(),
        })
        .collect();
    Ok(CubeDecomposition {
        host: poset,
        classes,
    })
}
