//! Subspace arrangements: the classical reflection families, their k-equal
//! generalizations, and arbitrary custom arrangements, all normalized to a
//! common convention (members canonical, deduplicated, containment-free).

use std::collections::HashSet;

use itertools::Itertools;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::arith::{falling_factorial, shifted_double_falling, IntPolynomial};
use crate::error::{Error, Result};
use crate::linalg::{canonicalize, contains, intersect, ConstraintMatrix, Subspace};

/// A finite set of proper linear subspaces of R^n.
///
/// Members are deduplicated by canonical form, and no member contains
/// another: when one member is a subset of another the smaller subspace is
/// redundant (it changes neither the union nor the intersection lattice)
/// and is dropped at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrangement {
    ambient_dim: usize,
    members: Vec<Subspace>,
    name: Option<String>,
}

impl Arrangement {
    /// Normalizes a list of subspaces into an arrangement.
    pub fn from_subspaces(
        ambient_dim: usize,
        subspaces: Vec<Subspace>,
        name: Option<String>,
    ) -> Result<Self> {
        let mut members: Vec<Subspace> = Vec::new();
        let mut seen = HashSet::new();
        for (index, s) in subspaces.into_iter().enumerate() {
            if s.ambient_dim() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    left: ambient_dim,
                    right: s.ambient_dim(),
                });
            }
            if s.is_full_space() {
                return Err(Error::NotProper { index });
            }
            if seen.insert(s.clone()) {
                members.push(s);
            }
        }
        // Drop members contained in another member.
        let mut keep = vec![true; members.len()];
        for i in 0..members.len() {
            for j in 0..members.len() {
                if i != j && keep[i] && contains(&members[j], &members[i])? {
                    keep[i] = false;
                    break;
                }
            }
        }
        let members = members
            .into_iter()
            .zip(keep)
            .filter_map(|(m, k)| k.then_some(m))
            .collect();
        Ok(Self {
            ambient_dim,
            members,
            name,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn members(&self) -> &[Subspace] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }
}

fn hyperplane(n: usize, entries: &[(usize, i64)]) -> Subspace {
    let mut row = vec![0i64; n];
    for &(i, c) in entries {
        row[i] = c;
    }
    canonicalize(&ConstraintMatrix::from_i64(n, &[row])).expect("nonzero row")
}

/// The braid arrangement: hyperplanes `x_i = x_j` in R^n.
pub fn build_type_a(n: usize) -> Result<Arrangement> {
    if n < 2 {
        return Err(Error::BadRank {
            what: "type A arrangement",
            got: n,
            need: "n >= 2",
        });
    }
    let members = (0..n)
        .tuple_combinations()
        .map(|(i, j)| hyperplane(n, &[(i, 1), (j, -1)]))
        .collect();
    Arrangement::from_subspaces(n, members, Some(format!("A_{n}")))
}

/// Hyperplanes `x_i = x_j` and `x_i = -x_j` in R^n.
pub fn build_type_d(n: usize) -> Result<Arrangement> {
    if n < 2 {
        return Err(Error::BadRank {
            what: "type D arrangement",
            got: n,
            need: "n >= 2",
        });
    }
    let mut members = Vec::new();
    for (i, j) in (0..n).tuple_combinations() {
        members.push(hyperplane(n, &[(i, 1), (j, -1)]));
        members.push(hyperplane(n, &[(i, 1), (j, 1)]));
    }
    Arrangement::from_subspaces(n, members, Some(format!("D_{n}")))
}

/// The full signed arrangement: type D plus the coordinate hyperplanes.
pub fn build_type_b(n: usize) -> Result<Arrangement> {
    let d = build_type_d(n)?;
    let mut members = d.members().to_vec();
    for i in 0..n {
        members.push(hyperplane(n, &[(i, 1)]));
    }
    Arrangement::from_subspaces(n, members, Some(format!("B_{n}")))
}

fn check_k_range(n: usize, k: usize) -> Result<()> {
    if !(2..=n).contains(&k) {
        return Err(Error::BadParams(format!(
            "need 2 <= k <= n, got n = {n}, k = {k}"
        )));
    }
    Ok(())
}

/// Subspace where the coordinates indexed by `index_set` are all equal,
/// with the given signs: `signs[a] * x[index_set[a]]` all coincide.
fn signed_equal_subspace(n: usize, index_set: &[usize], signs: &[i64]) -> Subspace {
    let rows: Vec<Vec<i64>> = index_set
        .windows(2)
        .zip(signs.windows(2))
        .map(|(idx, sg)| {
            let mut row = vec![0i64; n];
            row[idx[0]] = sg[0];
            row[idx[1]] = -sg[1];
            row
        })
        .collect();
    canonicalize(&ConstraintMatrix::from_i64(n, &rows)).expect("nonzero rows")
}

/// The k-equal arrangement: subspaces `x_i = x_j = ... = x_l` over all
/// index sets of size k.
pub fn build_k_equal(n: usize, k: usize) -> Result<Arrangement> {
    check_k_range(n, k)?;
    let signs = vec![1i64; k];
    let members = (0..n)
        .combinations(k)
        .map(|idx| signed_equal_subspace(n, &idx, &signs))
        .collect();
    Arrangement::from_subspaces(n, members, Some(format!("A_{{{n},{k}}}")))
}

/// The signed k-equal arrangement: all sign patterns of each k-subset.
/// Opposite global signs give the same subspace; deduplication leaves
/// `C(n,k) * 2^(k-1)` members.
pub fn build_dnk(n: usize, k: usize) -> Result<Arrangement> {
    check_k_range(n, k)?;
    let mut members = Vec::new();
    for idx in (0..n).combinations(k) {
        for mask in 0..(1u32 << k) {
            let signs: Vec<i64> = (0..k)
                .map(|a| if mask >> a & 1 == 1 { -1 } else { 1 })
                .collect();
            members.push(signed_equal_subspace(n, &idx, &signs));
        }
    }
    Arrangement::from_subspaces(n, members, Some(format!("D_{{{n},{k}}}")))
}

/// The signed k-equal arrangement together with the subspaces
/// `x_J = 0` over all index sets J of size h.
pub fn build_bnkh(n: usize, k: usize, h: usize) -> Result<Arrangement> {
    check_k_range(n, k)?;
    if !(1..=n).contains(&h) {
        return Err(Error::BadParams(format!(
            "need 1 <= h <= n, got n = {n}, h = {h}"
        )));
    }
    let mut members = build_dnk(n, k)?.members().to_vec();
    for idx in (0..n).combinations(h) {
        let rows: Vec<Vec<i64>> = idx
            .iter()
            .map(|&i| {
                let mut row = vec![0i64; n];
                row[i] = 1;
                row
            })
            .collect();
        members.push(canonicalize(&ConstraintMatrix::from_i64(n, &rows)).expect("nonzero rows"));
    }
    Arrangement::from_subspaces(n, members, Some(format!("B_{{{n},{k},{h}}}")))
}

/// Arrangement from raw constraint systems, one per subspace.
pub fn build_custom(n: usize, systems: &[Vec<Vec<i64>>]) -> Result<Arrangement> {
    let mut members = Vec::new();
    for (index, rows) in systems.iter().enumerate() {
        let s = canonicalize(&ConstraintMatrix::from_i64(n, rows))?;
        if s.is_full_space() {
            return Err(Error::NotProper { index });
        }
        members.push(s);
    }
    Arrangement::from_subspaces(n, members, None)
}

/// True iff every member of `sub` is an intersection of members of `host`:
/// gather the host members containing X, intersect them, compare with X.
pub fn embedded_in(sub: &Arrangement, host: &Arrangement) -> Result<bool> {
    for x in sub.members() {
        let mut meet = Subspace::full_space(host.ambient_dim());
        for h in host.members() {
            if contains(h, x)? {
                meet = intersect(&meet, h)?;
            }
        }
        if &meet != x {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff the arrangement is embedded in the full signed arrangement.
pub fn embedded_in_b(a: &Arrangement) -> Result<bool> {
    embedded_in(a, &build_type_b(a.ambient_dim())?)
}

/// True iff the arrangement is embedded in the braid arrangement.
pub fn embedded_in_a(a: &Arrangement) -> Result<bool> {
    embedded_in(a, &build_type_a(a.ambient_dim())?)
}

/// Closed form `t(t-1)...(t-n+1)` for the braid arrangement.
pub fn chi_type_a_closed(n: usize) -> IntPolynomial {
    falling_factorial(n)
}

/// Closed form `(t-1)(t-3)...(t-2n+1)` for the full signed arrangement.
pub fn chi_type_b_closed(n: usize) -> IntPolynomial {
    shifted_double_falling(n)
}

/// Closed form `(t-1)(t-3)...(t-2n+3)(t-n+1)` for the type D arrangement.
pub fn chi_type_d_closed(n: usize) -> IntPolynomial {
    let mut p = IntPolynomial::one();
    for i in 1..n {
        p = &p * &IntPolynomial::from_i64(&[-(2 * i as i64 - 1), 1]);
    }
    &p * &IntPolynomial::from_i64(&[-(n as i64 - 1), 1])
}

/// JSON description of an arrangement: either a named family with
/// parameters or an explicit list of constraint systems.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ArrangementSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ambient_dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub named: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<NamedParams>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subspaces: Option<Vec<Vec<Vec<i64>>>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NamedParams {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<usize>,
}

impl ArrangementSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::BadSpec(e.to_string()))
    }

    /// Builds the described arrangement.
    pub fn build(&self) -> Result<Arrangement> {
        match (&self.named, &self.subspaces) {
            (Some(name), None) => {
                let params = self
                    .params
                    .as_ref()
                    .ok_or_else(|| Error::BadSpec("named arrangement needs params".into()))?;
                if let Some(ad) = self.ambient_dim {
                    if ad != params.n {
                        return Err(Error::BadSpec(format!(
                            "ambient_dim {ad} disagrees with params.n {}",
                            params.n
                        )));
                    }
                }
                let n = params.n;
                let need_k = || {
                    params
                        .k
                        .ok_or_else(|| Error::BadSpec(format!("{name} needs params.k")))
                };
                match name.as_str() {
                    "A" => build_type_a(n),
                    "B" => build_type_b(n),
                    "D" => build_type_d(n),
                    "Ank" => build_k_equal(n, need_k()?),
                    "Dnk" => build_dnk(n, need_k()?),
                    "Bnkh" => {
                        let h = params
                            .h
                            .ok_or_else(|| Error::BadSpec("Bnkh needs params.h".into()))?;
                        build_bnkh(n, need_k()?, h)
                    }
                    other => Err(Error::BadSpec(format!("unknown named arrangement {other}"))),
                }
            }
            (None, Some(systems)) => {
                let n = self
                    .ambient_dim
                    .ok_or_else(|| Error::BadSpec("custom arrangement needs ambient_dim".into()))?;
                build_custom(n, systems)
            }
            _ => Err(Error::BadSpec(
                "give exactly one of `named` or `subspaces`".into(),
            )),
        }
    }
}

/// Number of members each named builder must produce (before any pruning,
/// which none of the named families with h < k trigger).
pub fn expected_member_count(name: &str, n: usize, k: usize, h: usize) -> usize {
    let c = |n: usize, k: usize| -> usize {
        num_integer::binomial(BigInt::from(n), BigInt::from(k))
            .try_into()
            .expect("desk-scale binomial")
    };
    match name {
        "A" => n * (n - 1) / 2,
        "D" => n * (n - 1),
        "B" => n * n,
        "Ank" => c(n, k),
        "Dnk" => c(n, k) << (k - 1),
        "Bnkh" => c(n, k) * (1 << (k - 1)) + c(n, h),
        _ => panic!("unknown family {name}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn type_a_counts_and_members() {
        assert_eq!(build_type_a(2).unwrap().len(), 1);
        assert_eq!(build_type_a(4).unwrap().len(), 6);
        let a3 = build_type_a(3).unwrap();
        assert_eq!(a3.len(), 3);
        for m in a3.members() {
            assert_eq!(m.dim(), 2);
        }
        assert!(build_type_a(1).is_err());
    }

    #[test]
    fn type_b_and_d_counts() {
        assert_eq!(build_type_b(2).unwrap().len(), 4);
        assert_eq!(build_type_d(2).unwrap().len(), 2);
        assert_eq!(build_type_b(3).unwrap().len(), 9);
        for n in 2..=8 {
            assert_eq!(build_type_b(n).unwrap().len(), n * n);
            assert_eq!(build_type_d(n).unwrap().len(), n * (n - 1));
        }
    }

    #[test]
    fn nesting_of_families() {
        for n in 2..=5 {
            let a: HashSet<_> = build_type_a(n).unwrap().members().iter().cloned().collect();
            let d: HashSet<_> = build_type_d(n).unwrap().members().iter().cloned().collect();
            let b: HashSet<_> = build_type_b(n).unwrap().members().iter().cloned().collect();
            assert!(a.is_subset(&d));
            assert!(d.is_subset(&b));
        }
    }

    #[test]
    fn k_equal_members() {
        let a33 = build_k_equal(3, 3).unwrap();
        assert_eq!(a33.len(), 1);
        assert_eq!(a33.members()[0].dim(), 1);

        let a43 = build_k_equal(4, 3).unwrap();
        assert_eq!(a43.len(), 4);
        for m in a43.members() {
            assert_eq!(m.dim(), 2);
        }
        for n in 2..=8 {
            for k in 2..=n {
                assert_eq!(
                    build_k_equal(n, k).unwrap().len(),
                    expected_member_count("Ank", n, k, 0)
                );
            }
        }
        assert!(build_k_equal(3, 4).is_err());
        assert!(build_k_equal(3, 1).is_err());
    }

    #[test]
    fn dnk_members() {
        let d22: HashSet<_> = build_dnk(2, 2).unwrap().members().iter().cloned().collect();
        let d2: HashSet<_> = build_type_d(2).unwrap().members().iter().cloned().collect();
        assert_eq!(d22, d2);
        for n in 2..=8 {
            for k in 2..=n {
                let built = build_dnk(n, k).unwrap();
                assert_eq!(built.len(), expected_member_count("Dnk", n, k, 0));
                for m in built.members() {
                    assert_eq!(m.dim(), n - k + 1);
                }
            }
        }
    }

    #[test]
    fn bnkh_members() {
        for n in 2..=6 {
            for k in 2..=n {
                for h in 1..k {
                    let built = build_bnkh(n, k, h).unwrap();
                    assert_eq!(built.len(), expected_member_count("Bnkh", n, k, h));
                }
                // h = k: every x_J = 0 with |J| = k sits inside a signed
                // k-equal subspace and is pruned away.
                let built = build_bnkh(n, k, k).unwrap();
                assert_eq!(built.len(), expected_member_count("Dnk", n, k, 0));
            }
        }
        // Spot checks at the top of the supported range.
        for (n, k, h) in [(8, 4, 2), (8, 8, 1), (7, 3, 2)] {
            let built = build_bnkh(n, k, h).unwrap();
            assert_eq!(built.len(), expected_member_count("Bnkh", n, k, h));
        }
        assert_eq!(
            build_bnkh(8, 4, 4).unwrap().len(),
            expected_member_count("Dnk", 8, 4, 0)
        );
        // h > k: every zero-set subspace contains a k-subset of its
        // indices, so all of them are pruned.
        assert_eq!(
            build_bnkh(4, 2, 3).unwrap().len(),
            expected_member_count("Dnk", 4, 2, 0)
        );
    }

    #[test]
    fn custom_pruning_and_errors() {
        // The origin {x1 = x2 = 0} is inside the line {x1 = 0}; only the
        // line survives.
        let a = build_custom(2, &[vec![vec![1, 0], vec![0, 1]], vec![vec![1, 0]]]).unwrap();
        assert_eq!(a.len(), 1);
        assert_eq!(a.members()[0].dim(), 1);

        let empty = build_custom(2, &[]).unwrap();
        assert!(empty.is_empty());

        assert!(matches!(
            build_custom(2, &[vec![vec![0, 0]]]),
            Err(Error::ZeroRow { .. })
        ));
        // No rows at all canonicalizes to the full plane: not proper.
        assert!(matches!(
            build_custom(2, &[vec![]]),
            Err(Error::NotProper { .. })
        ));
    }

    #[test]
    fn embedding_tests() {
        for (n, k) in [(3, 2), (3, 3), (4, 3)] {
            assert!(embedded_in_b(&build_k_equal(n, k).unwrap()).unwrap());
            assert!(embedded_in_a(&build_k_equal(n, k).unwrap()).unwrap());
        }
        assert!(embedded_in_b(&build_type_b(3).unwrap()).unwrap());
        assert!(embedded_in_b(&build_dnk(3, 2).unwrap()).unwrap());
        let skew = build_custom(2, &[vec![vec![1, -2]]]).unwrap();
        assert!(!embedded_in_b(&skew).unwrap());
    }

    #[test]
    fn named_spec_round_trip() {
        let spec = ArrangementSpec::from_json(r#"{"named":"B","params":{"n":2}}"#).unwrap();
        assert_eq!(spec.build().unwrap().len(), 4);
        let spec =
            ArrangementSpec::from_json(r#"{"named":"Bnkh","params":{"n":4,"k":3,"h":2}}"#).unwrap();
        assert_eq!(spec.build().unwrap().len(), 22);
        let spec =
            ArrangementSpec::from_json(r#"{"ambient_dim":2,"subspaces":[[[1,-1]],[[1,1]]]}"#)
                .unwrap();
        assert_eq!(spec.build().unwrap().len(), 2);
        assert!(
            ArrangementSpec::from_json(r#"{"named":"Q","params":{"n":2}}"#)
                .unwrap()
                .build()
                .is_err()
        );
        assert!(
            ArrangementSpec::from_json(r#"{"ambient_dim":3,"named":"B","params":{"n":2}}"#)
                .unwrap()
                .build()
                .is_err()
        );
    }

    #[test]
    fn closed_form_d2_is_square() {
        assert_eq!(chi_type_d_closed(2), IntPolynomial::from_i64(&[1, -2, 1]));
        assert_eq!(chi_type_d_closed(3), IntPolynomial::from_roots(&[1, 2, 3]));
    }
}
