//! Root systems of the finite Weyl groups, the Ehrhart quasi-polynomial of
//! the fundamental alcove, and verification of the identity
//! `n! * (prod c_i) * psi(t) = prod (t - e_i)` for arguments prime to the
//! highest-root coefficients, both symbolically and (at low rank) by direct
//! coweight-lattice enumeration.

mod data;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{
    factorial, gf_series, quasi_interpolate, IntPolynomial, QuasiPolynomial, RationalGF,
};
use crate::arrangement::chi_type_d_closed;
use crate::error::{Error, Result};
use crate::linalg::solve_in_span;

pub use data::Vector;

/// The nine classification rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WeylType {
    A,
    B,
    C,
    D,
    E6,
    E7,
    E8,
    F4,
    G2,
}

impl WeylType {
    pub fn parse(s: &str) -> Option<Self> {
        match s.to_ascii_uppercase().as_str() {
            "A" => Some(Self::A),
            "B" => Some(Self::B),
            "C" => Some(Self::C),
            "D" => Some(Self::D),
            "E6" => Some(Self::E6),
            "E7" => Some(Self::E7),
            "E8" => Some(Self::E8),
            "F4" => Some(Self::F4),
            "G2" => Some(Self::G2),
            _ => None,
        }
    }

    /// Fixed rank for the exceptional types.
    pub fn fixed_rank(self) -> Option<usize> {
        match self {
            Self::E6 => Some(6),
            Self::E7 => Some(7),
            Self::E8 => Some(8),
            Self::F4 => Some(4),
            Self::G2 => Some(2),
            _ => None,
        }
    }
}

/// An irreducible root system with its derived constants.
///
/// Everything downstream works in dual coordinates `y_i = (sigma_i, x)`,
/// where a root `lambda = sum c_i(lambda) sigma_i` pairs with `x` as
/// `(lambda, x) = sum c_i(lambda) y_i`; a coweight-lattice point is exactly
/// an integer vector `y`. The integer coefficient vectors of the positive
/// roots are therefore all the enumeration ever needs.
#[derive(Debug, Clone)]
pub struct RootSystem {
    weyl_type: WeylType,
    rank: usize,
    simple_roots: Vec<Vector>,
    all_roots: Vec<Vector>,
    positive_coeffs: Vec<Vec<BigInt>>,
    highest_coeffs: Vec<BigInt>,
    exponents: Vec<u64>,
    weyl_order: BigInt,
    index_f: BigInt,
}

/// Builds the root system for a type/rank pair and checks its structure:
/// every root must be an all-nonnegative or all-nonpositive integer
/// combination of the simple roots, the componentwise maximum of the
/// coefficient vectors must itself be a root, and its coefficients must
/// reproduce the classification table.
pub fn root_system(weyl_type: WeylType, rank: usize) -> Result<RootSystem> {
    let (simple_roots, all_roots) = data::realization(weyl_type, rank)?;
    let mut positive_coeffs = Vec::with_capacity(all_roots.len() / 2);
    for root in &all_roots {
        let solution =
            solve_in_span(&simple_roots, root).expect("every root lies in the simple-root span");
        let mut coeffs = Vec::with_capacity(rank);
        let mut nonneg = true;
        let mut nonpos = true;
        for c in solution {
            assert!(c.is_integer(), "root coefficient not an integer");
            let c = c.to_integer();
            nonneg &= !c.is_negative();
            nonpos &= !c.is_positive();
            coeffs.push(c);
        }
        assert!(nonneg || nonpos, "root coefficients of mixed sign");
        if nonneg {
            positive_coeffs.push(coeffs);
        }
    }
    assert_eq!(positive_coeffs.len() * 2, all_roots.len());

    let highest_coeffs: Vec<BigInt> = (0..rank)
        .map(|i| {
            positive_coeffs
                .iter()
                .map(|c| c[i].clone())
                .max()
                .expect("nonempty root system")
        })
        .collect();
    assert!(
        positive_coeffs.contains(&highest_coeffs),
        "componentwise maximum is not itself a root"
    );
    let mut recomputed: Vec<u64> = highest_coeffs
        .iter()
        .map(|c| c.to_u64().expect("small coefficient"))
        .collect();
    recomputed.sort_unstable();
    assert_eq!(
        recomputed,
        data::table_highest_coeffs(weyl_type, rank),
        "highest-root coefficients disagree with the table"
    );

    let exponents = data::table_exponents(weyl_type, rank);
    let weyl_order: BigInt = exponents.iter().map(|&e| BigInt::from(e + 1)).product();
    let denom = factorial(rank) * product(&highest_coeffs);
    let (index_f, rem) = weyl_order.div_rem(&denom);
    assert!(rem.is_zero(), "index of connection is not an integer");
    assert!(index_f.is_positive());

    Ok(RootSystem {
        weyl_type,
        rank,
        simple_roots,
        all_roots,
        positive_coeffs,
        highest_coeffs,
        exponents,
        weyl_order,
        index_f,
    })
}

fn product(values: &[BigInt]) -> BigInt {
    values.iter().product()
}

impl RootSystem {
    pub fn weyl_type(&self) -> WeylType {
        self.weyl_type
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn label(&self) -> String {
        match self.weyl_type.fixed_rank() {
            Some(_) => format!("{:?}", self.weyl_type),
            None => format!("{:?}{}", self.weyl_type, self.rank),
        }
    }

    pub fn simple_roots(&self) -> &[Vector] {
        &self.simple_roots
    }

    pub fn all_roots(&self) -> &[Vector] {
        &self.all_roots
    }

    /// Coefficient vectors of the positive roots over the simple roots.
    pub fn positive_coeffs(&self) -> &[Vec<BigInt>] {
        &self.positive_coeffs
    }

    /// Coefficients of the highest root, in simple-root order.
    pub fn highest_coeffs(&self) -> &[BigInt] {
        &self.highest_coeffs
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    pub fn weyl_order(&self) -> &BigInt {
        &self.weyl_order
    }

    /// Index of connection `|W| / (n! * c_1 ... c_n)`.
    pub fn index_f(&self) -> &BigInt {
        &self.index_f
    }

    /// Quasi-period: lcm of 1 and the highest-root coefficients.
    pub fn quasi_period(&self) -> usize {
        self.highest_coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c))
            .to_usize()
            .expect("small period")
    }

    /// True iff `t` is coprime to every highest-root coefficient.
    pub fn admissible(&self, t: u64) -> bool {
        let t = BigInt::from(t);
        self.highest_coeffs.iter().all(|c| t.gcd(c).is_one())
    }

    /// Generating function `z^(1 + sum c_i) / ((1-z) prod (1-z^{c_i}))` of
    /// the alcove point counts per chamber.
    pub fn gamma_gf(&self) -> RationalGF {
        let shift: usize = 1 + self
            .highest_coeffs
            .iter()
            .map(|c| c.to_usize().expect("small coefficient"))
            .sum::<usize>();
        let mut factors = vec![1usize];
        factors.extend(
            self.highest_coeffs
                .iter()
                .map(|c| c.to_usize().expect("small coefficient")),
        );
        RationalGF::new(IntPolynomial::monomial(BigInt::one(), shift), &factors)
    }

    /// Ehrhart quasi-polynomial of the open fundamental alcove simplex:
    /// counts positive integer vectors with `sum c_i y_i < t`.
    ///
    /// The series is expanded far enough that every residue class has a
    /// surplus value beyond the interpolation points, so a wrong period or
    /// degree cannot slip through.
    pub fn ehrhart_psi(&self) -> Result<QuasiPolynomial> {
        let m = self.quasi_period();
        let len = 1 + m * (self.rank + 2);
        let series = gf_series(&self.gamma_gf(), len);
        let psi = quasi_interpolate(&series[1..], m, self.rank, 1)?;
        debug_assert_eq!(psi.degree(), self.rank);
        Ok(psi)
    }

    /// `prod (t - e_i)` over the exponents: the known characteristic
    /// polynomial of the reflection arrangement.
    pub fn known_charpoly(&self) -> IntPolynomial {
        let roots: Vec<i64> = self.exponents.iter().map(|&e| e as i64).collect();
        IntPolynomial::from_roots(&roots)
    }

    /// Checks `n! * (prod c_i) * psi(t) = prod (t - e_i)` for every
    /// admissible `t <= t_max`, reading `psi` off the series expansion.
    pub fn verify_theorem(&self, t_max: u64) -> Result<WeylVerification> {
        let m = self.quasi_period();
        let min = (m * (self.rank + 2)) as u64;
        if t_max < min {
            return Err(Error::BadParams(format!(
                "t_max {t_max} below the minimum {min} for {}",
                self.label()
            )));
        }
        let series = gf_series(&self.gamma_gf(), t_max as usize);
        let factor = factorial(self.rank) * product(&self.highest_coeffs);
        let chi = self.known_charpoly();
        let mut checked = vec![0usize; m];
        for t in 1..=t_max {
            if !self.admissible(t) {
                continue;
            }
            let lhs = &factor * &series[t as usize];
            let rhs = chi.eval(&BigInt::from(t));
            if lhs != rhs {
                return Err(Error::VerificationFailure {
                    instance: format!("{} at t = {t}", self.label()),
                    lhs: lhs.to_string(),
                    rhs: rhs.to_string(),
                });
            }
            checked[(t % m as u64) as usize] += 1;
        }
        Ok(WeylVerification {
            label: self.label(),
            period: m,
            t_max,
            classes: checked
                .into_iter()
                .enumerate()
                .filter(|&(_, count)| count > 0)
                .map(|(residue, count)| ClassReport { residue, count })
                .collect(),
        })
    }

    /// Counts coweight-lattice points inside the open region
    /// `(alpha, x) < t` for all roots, excluding every reflecting wall,
    /// by exhaustive enumeration in dual coordinates.
    pub fn alcove_count(&self, t: u64) -> Result<AlcoveCount> {
        let count = count_off_walls(self.rank, &self.positive_coeffs, t)?;
        Ok(AlcoveCount { t, count })
    }
}

/// Per-residue-class summary of a theorem verification run.
#[derive(Debug, Clone)]
pub struct WeylVerification {
    pub label: String,
    pub period: usize,
    pub t_max: u64,
    pub classes: Vec<ClassReport>,
}

/// One admissible congruence class and how many arguments were checked.
#[derive(Debug, Clone, Copy)]
pub struct ClassReport {
    pub residue: usize,
    pub count: usize,
}

/// An alcove-region point count at parameter `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlcoveCount {
    pub t: u64,
    pub count: BigInt,
}

const MAX_ALCOVE_RANK: usize = 3;

/// Shared enumeration: integer vectors `y` with `|<c(lambda), y>|` in
/// `[1, t-1]` for every positive-root coefficient vector. The simple roots
/// themselves bound each coordinate by `t - 1`, so a box search is exact.
fn count_off_walls(rank: usize, positive_coeffs: &[Vec<BigInt>], t: u64) -> Result<BigInt> {
    if rank > MAX_ALCOVE_RANK {
        return Err(Error::RankTooLarge {
            rank,
            max: MAX_ALCOVE_RANK,
        });
    }
    if t == 0 {
        return Err(Error::BadParams("alcove parameter t must be >= 1".into()));
    }
    let t = t as i64;
    let functionals: Vec<Vec<i64>> = positive_coeffs
        .iter()
        .map(|c| {
            c.iter()
                .map(|x| x.to_i64().expect("small coefficient"))
                .collect()
        })
        .collect();
    let bound = t - 1;
    let mut count = 0u64;
    let mut y = vec![0i64; rank];
    fn walk(
        y: &mut Vec<i64>,
        depth: usize,
        bound: i64,
        t: i64,
        functionals: &[Vec<i64>],
        count: &mut u64,
    ) {
        if depth == y.len() {
            let ok = functionals.iter().all(|c| {
                let v: i64 = c.iter().zip(y.iter()).map(|(a, b)| a * b).sum();
                v != 0 && v.abs() < t
            });
            if ok {
                *count += 1;
            }
            return;
        }
        for v in -bound..=bound {
            y[depth] = v;
            walk(y, depth + 1, bound, t, functionals, count);
        }
    }
    walk(&mut y, 0, bound, t, &functionals, &mut count);
    Ok(BigInt::from(count))
}

/// A product of irreducible root systems. The characteristic polynomial,
/// the index of connection, and the alcove counts all factor over the
/// components; the alcove count is nevertheless enumerated directly on the
/// block-diagonal coefficient vectors so the factorization is testable.
#[derive(Debug, Clone)]
pub struct ProductSystem {
    components: Vec<RootSystem>,
}

impl ProductSystem {
    pub fn new(components: Vec<RootSystem>) -> Self {
        assert!(!components.is_empty());
        Self { components }
    }

    pub fn components(&self) -> &[RootSystem] {
        &self.components
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(RootSystem::rank).sum()
    }

    pub fn index_f(&self) -> BigInt {
        self.components
            .iter()
            .map(|c| c.index_f().clone())
            .product()
    }

    pub fn known_charpoly(&self) -> IntPolynomial {
        self.components
            .iter()
            .fold(IntPolynomial::one(), |acc, c| &acc * &c.known_charpoly())
    }

    pub fn admissible(&self, t: u64) -> bool {
        self.components.iter().all(|c| c.admissible(t))
    }

    pub fn alcove_count(&self, t: u64) -> Result<AlcoveCount> {
        let rank = self.rank();
        let mut functionals = Vec::new();
        let mut offset = 0;
        for component in &self.components {
            for coeffs in component.positive_coeffs() {
                let mut row = vec![BigInt::zero(); rank];
                row[offset..offset + component.rank()].clone_from_slice(coeffs);
                functionals.push(row);
            }
            offset += component.rank();
        }
        let count = count_off_walls(rank, &functionals, t)?;
        Ok(AlcoveCount { t, count })
    }
}

/// Checks the even-argument identity
/// `2^(n-1) n! psi_B(t) = chi_D(t - 1)` relating the type-B alcove
/// quasi-polynomial at even `t` to the type-D characteristic polynomial.
pub fn coincidence_even_d(n: usize, t_even: u64) -> Result<bool> {
    if n < 2 {
        return Err(Error::BadParams(format!(
            "coincidence check needs n >= 2, got {n}"
        )));
    }
    if t_even == 0 || t_even % 2 != 0 {
        return Err(Error::BadParams(format!(
            "coincidence check needs a positive even t, got {t_even}"
        )));
    }
    let b = root_system(WeylType::B, n)?;
    let psi = b.ehrhart_psi()?;
    let scale = BigRational::from_integer(BigInt::from(2).pow(n as u32 - 1) * factorial(n));
    let lhs = psi.eval(t_even) * scale;
    let rhs = chi_type_d_closed(n).eval(&BigInt::from(t_even - 1));
    Ok(lhs == BigRational::from_integer(rhs))
}
