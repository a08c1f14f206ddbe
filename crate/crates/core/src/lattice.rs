//! The intersection poset of an arrangement, its Möbius function, and the
//! characteristic polynomial.
//!
//! Elements are all intersections of members, ordered by reverse inclusion:
//! `X <= Y` iff `Y` is a subset of `X`. The minimum is the full ambient
//! space; the Möbius function is computed by its defining recurrence
//! `sum_{Y <= X} mu(Y) = delta(0̂, X)`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::IntPolynomial;
use crate::arrangement::Arrangement;
use crate::error::Result;
use crate::linalg::{contains, intersect, Subspace};

/// Intersection poset with materialized order relation and Möbius values.
///
/// Elements are sorted by codimension (ties broken by canonical rows), so
/// element 0 is the full space and index order is a linear extension of
/// the poset order.
#[derive(Debug, Clone)]
pub struct IntersectionPoset {
    ambient_dim: usize,
    elements: Vec<Subspace>,
    index: HashMap<Subspace, usize>,
    leq: Vec<bool>,
    mobius: Vec<BigInt>,
}

impl IntersectionPoset {
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Subspace] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Subspace {
        &self.elements[i]
    }

    pub fn find(&self, s: &Subspace) -> Option<usize> {
        self.index.get(s).copied()
    }

    /// Poset order: `x <= y` iff element y is a subset of element x.
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.elements.len() + y]
    }

    pub fn mobius(&self, x: usize) -> &BigInt {
        &self.mobius[x]
    }

    pub fn mobius_values(&self) -> &[BigInt] {
        &self.mobius
    }

    /// Checks `sum_{Y <= X} mu(Y) = delta(0̂, X)` at every element.
    pub fn verify_mobius_recurrence(&self) -> bool {
        let n = self.elements.len();
        (0..n).all(|x| {
            let total: BigInt = (0..n)
                .filter(|&y| self.leq(y, x))
                .map(|y| &self.mobius[y])
                .sum();
            if x == 0 {
                total.is_one()
            } else {
                total.is_zero()
            }
        })
    }

    /// `sum mu(X) t^(dim X)` over all elements.
    pub fn characteristic_polynomial(&self) -> IntPolynomial {
        let mut coeffs = vec![BigInt::zero(); self.ambient_dim + 1];
        for (x, s) in self.elements.iter().enumerate() {
            coeffs[s.dim()] += &self.mobius[x];
        }
        IntPolynomial::new(coeffs)
    }

    /// Covering pairs `(x, y)` with `x < y` and nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.elements.len();
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if x == y || !self.leq(x, y) {
                    continue;
                }
                let between = (0..n).any(|z| z != x && z != y && self.leq(x, z) && self.leq(z, y));
                if !between {
                    out.push((x, y));
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> PosetJson {
        PosetJson {
            ambient_dim: self.ambient_dim,
            elements: self
                .elements
                .iter()
                .map(|s| PosetElementJson {
                    rows: s
                        .canon_rows()
                        .iter()
                        .map(|r| r.iter().map(BigInt::to_string).collect())
                        .collect(),
                    dim: s.dim(),
                })
                .collect(),
            covers: self.covers().iter().map(|&(x, y)| [x, y]).collect(),
            mobius: self.mobius.iter().map(BigInt::to_string).collect(),
        }
    }
}

/// JSON form of a poset: canonical rows and dimension per element, the
/// cover relation, and the Möbius values (as decimal strings).
#[derive(Debug, Clone, Serialize)]
pub struct PosetJson {
    pub ambient_dim: usize,
    pub elements: Vec<PosetElementJson>,
    pub covers: Vec<[usize; 2]>,
    pub mobius: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PosetElementJson {
    pub rows: Vec<Vec<String>>,
    pub dim: usize,
}

/// Closes the arrangement under intersection and materializes the poset.
///
/// New elements are produced by intersecting frontier elements against the
/// atoms only; that reaches the same closure as all-pairs intersection
/// because every element is an intersection of atoms.
pub fn build_poset(a: &Arrangement) -> Result<IntersectionPoset> {
    let n = a.ambient_dim();
    let mut elements = vec![Subspace::full_space(n)];
    let mut index: HashMap<Subspace, usize> = HashMap::new();
    index.insert(elements[0].clone(), 0);
    let mut frontier: Vec<usize> = Vec::new();
    for m in a.members() {
        if !index.contains_key(m) {
            index.insert(m.clone(), elements.len());
            frontier.push(elements.len());
            elements.push(m.clone());
        }
    }
    while let Some(x) = frontier.pop() {
        for atom in a.members() {
            let y = intersect(&elements[x], atom)?;
            if !index.contains_key(&y) {
                index.insert(y.clone(), elements.len());
                frontier.push(elements.len());
                elements.push(y);
            }
        }
    }

    elements.sort_by(|a, b| {
        a.codim()
            .cmp(&b.codim())
            .then_with(|| a.canon_rows().cmp(b.canon_rows()))
    });
    let index: HashMap<Subspace, usize> = elements
        .iter()
        .enumerate()
        .map(|(i, s)| (s.clone(), i))
        .collect();

    let count = elements.len();
    let mut leq = vec![false; count * count];
    for x in 0..count {
        for y in 0..count {
            if x == y {
                leq[x * count + y] = true;
            } else if elements[x].codim() < elements[y].codim() {
                leq[x * count + y] = contains(&elements[x], &elements[y])?;
            }
        }
    }

    // Defining recurrence in index order (a linear extension).
    let mut mobius = vec![BigInt::zero(); count];
    mobius[0] = BigInt::one();
    for x in 1..count {
        let below: BigInt = (0..x)
            .filter(|&y| leq[y * count + x])
            .map(|y| &mobius[y])
            .sum();
        mobius[x] = -below;
    }

    Ok(IntersectionPoset {
        ambient_dim: n,
        elements,
        index,
        leq,
        mobius,
    })
}

/// Characteristic polynomial of an arrangement via its intersection poset.
pub fn char_poly(a: &Arrangement) -> Result<IntPolynomial> {
    Ok(build_poset(a)?.characteristic_polynomial())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{
        build_custom, build_k_equal, build_type_a, build_type_b, build_type_d, chi_type_a_closed,
        chi_type_b_closed, chi_type_d_closed,
    };

    #[test]
    fn empty_arrangement_poset() {
        let a = build_custom(2, &[]).unwrap();
        let p = build_poset(&a).unwrap();
        assert_eq!(p.len(), 1);
        assert!(p.mobius(0).is_one());
        assert_eq!(
            p.characteristic_polynomial(),
            IntPolynomial::from_i64(&[0, 0, 1])
        );
    }

    #[test]
    fn b2_poset_geometry() {
        let p = build_poset(&build_type_b(2).unwrap()).unwrap();
        // Full plane, four lines, and the origin.
        assert_eq!(p.len(), 6);
        let dims: Vec<usize> = p.elements().iter().map(Subspace::dim).collect();
        assert_eq!(dims, vec![2, 1, 1, 1, 1, 0]);
        assert_eq!(p.mobius(5), &BigInt::from(3));
        assert!(p.verify_mobius_recurrence());
        assert_eq!(
            p.characteristic_polynomial(),
            IntPolynomial::from_i64(&[3, -4, 1])
        );
    }

    #[test]
    fn a3_is_partition_lattice() {
        let p = build_poset(&build_type_a(3).unwrap()).unwrap();
        assert_eq!(p.len(), 5);
        let line = p.elements().last().unwrap();
        assert_eq!(line.dim(), 1);
        assert_eq!(p.mobius(4), &BigInt::from(2));
        assert_eq!(p.characteristic_polynomial(), chi_type_a_closed(3));
    }

    #[test]
    fn single_hyperplane_mobius() {
        let a = build_custom(2, &[vec![vec![1, -1]]]).unwrap();
        let p = build_poset(&a).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.mobius(1), &BigInt::from(-1));
    }

    #[test]
    fn closed_forms_match_lattice() {
        for n in 2..=4 {
            assert_eq!(
                char_poly(&build_type_a(n).unwrap()).unwrap(),
                chi_type_a_closed(n)
            );
            assert_eq!(
                char_poly(&build_type_b(n).unwrap()).unwrap(),
                chi_type_b_closed(n)
            );
            assert_eq!(
                char_poly(&build_type_d(n).unwrap()).unwrap(),
                chi_type_d_closed(n)
            );
        }
    }

    #[test]
    fn k_equal_char_poly() {
        assert_eq!(
            char_poly(&build_k_equal(3, 3).unwrap()).unwrap(),
            IntPolynomial::from_i64(&[0, -1, 0, 1])
        );
        // chi(A_{4,3}) = t^4 - 4t^2 + 3t from a 6-element lattice.
        assert_eq!(
            char_poly(&build_k_equal(4, 3).unwrap()).unwrap(),
            IntPolynomial::from_i64(&[0, 3, -4, 0, 1])
        );
    }

    #[test]
    fn monic_of_ambient_degree() {
        for a in [
            build_type_b(3).unwrap(),
            build_k_equal(4, 3).unwrap(),
            build_custom(3, &[]).unwrap(),
        ] {
            let chi = char_poly(&a).unwrap();
            assert_eq!(chi.degree(), Some(a.ambient_dim()));
            assert!(chi.is_monic());
        }
    }

    #[test]
    fn hyperplane_chi_alternates_in_sign() {
        for n in 2..=4 {
            for chi in [
                char_poly(&build_type_a(n).unwrap()).unwrap(),
                char_poly(&build_type_b(n).unwrap()).unwrap(),
                char_poly(&build_type_d(n).unwrap()).unwrap(),
            ] {
                for (k, c) in chi.coeffs().iter().enumerate() {
                    let expected = if (n - k) % 2 == 0 { 1 } else { -1 };
                    assert!(
                        c.is_zero() || c.sign() == BigInt::from(expected).sign(),
                        "coeff of t^{k} breaks the sign pattern"
                    );
                }
            }
        }
    }

    #[test]
    fn covers_of_b2() {
        let p = build_poset(&build_type_b(2).unwrap()).unwrap();
        let covers = p.covers();
        // Hasse diagram: plane under each line, each line under the origin.
        assert_eq!(covers.len(), 8);
        assert!(covers
            .iter()
            .all(|&(x, y)| { p.element(x).codim() + 1 == p.element(y).codim() }));
    }

    #[test]
    fn poset_json_shape() {
        let p = build_poset(&build_type_a(3).unwrap()).unwrap();
        let json = serde_json::to_value(p.to_json()).unwrap();
        assert_eq!(json["elements"].as_array().unwrap().len(), 5);
        assert_eq!(json["mobius"][0], "1");
    }
}
