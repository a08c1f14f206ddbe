//! Acceptance suite: the end-to-end identities the library exists to
//! uphold, one test per criterion, each printing a single PASS/FAIL line
//! (run with `--nocapture` to see them).

mod common;

use num_bigint::BigInt;
use num_traits::Zero;

use chi_core::arith::{falling_factorial, shifted_double_falling};
use chi_core::arrangement::{
    build_bnkh, build_dnk, build_k_equal, build_type_a, build_type_b, build_type_d,
    chi_type_a_closed, chi_type_b_closed, chi_type_d_closed, embedded_in_a, embedded_in_b,
    Arrangement,
};
use chi_core::counting::{count_cube, count_ffield, CubeSpec};
use chi_core::expansions::{
    check_divisibility, corollary_expansion, keq_charpoly_expansion, stirling_bounded,
    ExpansionFamily,
};
use chi_core::lattice::{build_poset, char_poly};
use chi_core::weyl::{coincidence_even_d, root_system, WeylType};

fn criterion(number: u32, name: &str, body: impl FnOnce() -> Result<String, String>) {
    match body() {
        Ok(detail) => println!("criterion {number:2} ({name}): PASS - {detail}"),
        Err(msg) => {
            println!("criterion {number:2} ({name}): FAIL - {msg}");
            panic!("criterion {number} ({name}) failed: {msg}");
        }
    }
}

/// The arrangement grid shared by the cube and finite-field suites.
fn theorem_suite() -> Vec<Arrangement> {
    let mut set = Vec::new();
    for n in 2..=5 {
        set.push(build_type_a(n).unwrap());
    }
    for n in 2..=4 {
        set.push(build_type_b(n).unwrap());
        set.push(build_type_d(n).unwrap());
    }
    for n in 2..=6 {
        for k in 2..=n {
            set.push(build_k_equal(n, k).unwrap());
        }
    }
    for n in 2..=4 {
        for k in 2..=n {
            set.push(build_dnk(n, k).unwrap());
            for h in 1..=k {
                set.push(build_bnkh(n, k, h).unwrap());
            }
        }
    }
    set
}

#[test]
fn criterion_01_worked_example() {
    criterion(1, "signed-plane worked example", || {
        let b2 = build_type_b(2).map_err(|e| e.to_string())?;
        let chi = char_poly(&b2).map_err(|e| e.to_string())?;
        let expected = chi_type_b_closed(2);
        if chi != expected {
            return Err(format!("chi(B_2) = {chi}, expected {expected}"));
        }
        let count = count_cube(&b2, &CubeSpec::new(2)).map_err(|e| e.to_string())?;
        let at_five = chi.eval_i64(5);
        if count != BigInt::from(8) || at_five != BigInt::from(8) {
            return Err(format!("count = {count}, chi(5) = {at_five}, expected 8"));
        }
        Ok(format!("chi = {chi}, chi(5) = count = {count}"))
    });
}

#[test]
fn criterion_02_cube_identity_suite() {
    criterion(2, "cube-count identity", || {
        let mut checks = 0;
        for a in theorem_suite() {
            let chi = char_poly(&a).map_err(|e| e.to_string())?;
            for s in 0..=3u64 {
                let spec = CubeSpec::new(s);
                let count = count_cube(&a, &spec).map_err(|e| e.to_string())?;
                let value = chi.eval_i64(spec.t() as i64);
                if count != value {
                    return Err(format!(
                        "{}: s = {s}: count {count} != chi({}) = {value}",
                        a.name().unwrap_or("custom"),
                        spec.t()
                    ));
                }
                checks += 1;
            }
        }
        Ok(format!("{checks} identities exact"))
    });
}

#[test]
fn criterion_03_closed_forms() {
    criterion(3, "classical closed forms", || {
        for n in 2..=5 {
            let a = char_poly(&build_type_a(n).unwrap()).map_err(|e| e.to_string())?;
            if a != chi_type_a_closed(n) {
                return Err(format!("chi(A_{n}) = {a}"));
            }
            let b = char_poly(&build_type_b(n).unwrap()).map_err(|e| e.to_string())?;
            if b != chi_type_b_closed(n) {
                return Err(format!("chi(B_{n}) = {b}"));
            }
            let d = char_poly(&build_type_d(n).unwrap()).map_err(|e| e.to_string())?;
            if d != chi_type_d_closed(n) {
                return Err(format!("chi(D_{n}) = {d}"));
            }
        }
        Ok("falling, shifted double falling, and type-D products all match, n <= 5".into())
    });
}

#[test]
fn criterion_04_finite_field_suite() {
    criterion(4, "finite-field identity", || {
        let mut checks = 0;
        for a in theorem_suite() {
            let chi = char_poly(&a).map_err(|e| e.to_string())?;
            for p in [5u64, 7, 11, 13] {
                if (p as u128).pow(a.ambient_dim() as u32) > 100_000_000 {
                    continue;
                }
                let count = count_ffield(&a, p).map_err(|e| e.to_string())?;
                let value = chi.eval_i64(p as i64);
                if count != value {
                    return Err(format!(
                        "{}: p = {p}: count {count} != chi(p) = {value}",
                        a.name().unwrap_or("custom")
                    ));
                }
                checks += 1;
            }
        }
        Ok(format!("{checks} identities exact"))
    });
}

fn all_table_rows() -> Vec<(WeylType, usize)> {
    let mut rows = Vec::new();
    for n in 1..=8 {
        rows.push((WeylType::A, n));
    }
    for n in 2..=8 {
        rows.push((WeylType::B, n));
        rows.push((WeylType::C, n));
    }
    for n in 3..=8 {
        rows.push((WeylType::D, n));
    }
    rows.extend([
        (WeylType::E6, 6),
        (WeylType::E7, 7),
        (WeylType::E8, 8),
        (WeylType::F4, 4),
        (WeylType::G2, 2),
    ]);
    rows
}

#[test]
fn criterion_05_weyl_theorem_symbolic() {
    criterion(5, "alcove identity, symbolic", || {
        let mut total = 0;
        for (ty, rank) in all_table_rows() {
            let r = root_system(ty, rank).map_err(|e| e.to_string())?;
            let report = r.verify_theorem(600).map_err(|e| e.to_string())?;
            total += report.classes.iter().map(|c| c.count).sum::<usize>();
        }
        Ok(format!(
            "{total} admissible arguments across 33 systems, t <= 600"
        ))
    });
}

#[test]
fn criterion_06_weyl_theorem_geometric() {
    criterion(6, "alcove identity, enumerated", || {
        let rows = [
            (WeylType::A, 1),
            (WeylType::A, 2),
            (WeylType::A, 3),
            (WeylType::B, 2),
            (WeylType::B, 3),
            (WeylType::C, 3),
            (WeylType::G2, 2),
        ];
        for (ty, rank) in rows {
            let r = root_system(ty, rank).map_err(|e| e.to_string())?;
            for t in [1u64, 2, 5, 7] {
                if !r.admissible(t) {
                    continue;
                }
                let counted = r.alcove_count(t).map_err(|e| e.to_string())?.count;
                let predicted = r.index_f() * r.known_charpoly().eval_i64(t as i64);
                if counted != predicted {
                    return Err(format!(
                        "{}: t = {t}: enumerated {counted} != f * chi = {predicted}",
                        r.label()
                    ));
                }
                if t == 1 && !counted.is_zero() {
                    return Err(format!("{}: t = 1 must count zero points", r.label()));
                }
            }
        }
        Ok("seven low-rank systems at admissible t in {1, 2, 5, 7}".into())
    });
}

#[test]
fn criterion_07_even_coincidence() {
    criterion(7, "even-argument type-D coincidence", || {
        let mut checks = 0;
        for n in 2..=6 {
            for t in (2..=100u64).step_by(2) {
                if !coincidence_even_d(n, t).map_err(|e| e.to_string())? {
                    return Err(format!("fails at n = {n}, t = {t}"));
                }
                checks += 1;
            }
        }
        Ok(format!("{checks} even arguments, 2 <= n <= 6"))
    });
}

#[test]
fn criterion_08_expansion_and_divisibility() {
    criterion(8, "k-equal expansion and divisibility", || {
        for n in 2..=7usize {
            for k in 2..=n {
                let expanded = keq_charpoly_expansion(n, k).map_err(|e| e.to_string())?;
                let from_lattice =
                    char_poly(&build_k_equal(n, k).unwrap()).map_err(|e| e.to_string())?;
                if expanded != from_lattice {
                    return Err(format!(
                        "n = {n}, k = {k}: expansion {expanded} != lattice {from_lattice}"
                    ));
                }
                let floor = n.div_ceil(k - 1);
                if !check_divisibility(&from_lattice, &falling_factorial(floor)) {
                    return Err(format!("n = {n}, k = {k}: (t)_{floor} does not divide chi"));
                }
            }
        }
        Ok("expansion equals lattice and the factorial floor divides, 2 <= k <= n <= 7".into())
    });
}

#[test]
fn criterion_09_corollary_structure() {
    criterion(9, "basis nonnegativity and Moebius recurrence", || {
        let mut expansions = 0;
        for a in theorem_suite() {
            let poset = build_poset(&a).map_err(|e| e.to_string())?;
            if !poset.verify_mobius_recurrence() {
                return Err(format!(
                    "{}: Moebius recurrence broken",
                    a.name().unwrap_or("custom")
                ));
            }
            let mut families = vec![(ExpansionFamily::BEmbedded, 1usize)];
            if embedded_in_a(&a).map_err(|e| e.to_string())? {
                families.push((ExpansionFamily::AEmbedded, 0));
            }
            if !embedded_in_b(&a).map_err(|e| e.to_string())? {
                return Err(format!(
                    "{}: not embedded in the signed arrangement",
                    a.name().unwrap_or("custom")
                ));
            }
            for (family, low) in families {
                let report = corollary_expansion(&a, family).map_err(|e| e.to_string())?;
                let n = a.ambient_dim();
                // Zero coefficients form a prefix of the asserted range.
                let zeros: Vec<usize> = (low..=n).filter(|&j| report.coeffs[j].is_zero()).collect();
                let prefix: Vec<usize> = (low..low + zeros.len()).collect();
                if zeros != prefix {
                    return Err(format!(
                        "{}: zero set {zeros:?} is not a prefix",
                        a.name().unwrap_or("custom")
                    ));
                }
                match (report.zero_index, report.divisibility) {
                    (Some(_), Some(true)) | (None, None) => {}
                    other => {
                        return Err(format!(
                            "{}: witness pair {other:?}",
                            a.name().unwrap_or("custom")
                        ))
                    }
                }
                expansions += 1;
            }
        }
        Ok(format!(
            "{expansions} expansions nonnegative with prefix zeros; every poset recurrence exact"
        ))
    });
}

#[test]
fn criterion_10_oracle_independence() {
    criterion(10, "oracle independence", || {
        for n in 0..=8usize {
            for k in 1..=8usize {
                for j in 0..=n {
                    let fast = stirling_bounded(k, n, j);
                    let slow = common::enumerate_bounded_partitions(n, k, j);
                    if fast != BigInt::from(slow) {
                        return Err(format!(
                            "S_{k}({n},{j}): recurrence {fast} != enumeration {slow}"
                        ));
                    }
                }
            }
        }
        let small: Vec<Arrangement> = vec![
            build_type_a(3).unwrap(),
            build_type_b(3).unwrap(),
            build_type_d(3).unwrap(),
            build_type_b(2).unwrap(),
            build_k_equal(3, 2).unwrap(),
            build_k_equal(3, 3).unwrap(),
            build_dnk(3, 2).unwrap(),
            build_dnk(3, 3).unwrap(),
            build_bnkh(3, 2, 1).unwrap(),
            build_bnkh(3, 3, 2).unwrap(),
        ];
        for a in &small {
            let fast: std::collections::HashSet<_> = build_poset(a)
                .map_err(|e| e.to_string())?
                .elements()
                .iter()
                .cloned()
                .collect();
            let slow = common::all_pairs_closure(a);
            if fast != slow {
                return Err(format!(
                    "{}: worklist closure has {} elements, all-pairs has {}",
                    a.name().unwrap_or("custom"),
                    fast.len(),
                    slow.len()
                ));
            }
        }
        Ok("bounded Stirling recurrence and worklist closure match brute force".into())
    });
}

/// Cross-checks used by several criteria: falling-factorial class sizes of
/// the cube decomposition agree with the corollary coefficients.
#[test]
fn decomposition_matches_corollary_coefficients() {
    use chi_core::counting::{decompose_cube, EmbedFamily};
    for (a, family, basis_family) in [
        (
            build_k_equal(4, 3).unwrap(),
            EmbedFamily::TypeA,
            ExpansionFamily::AEmbedded,
        ),
        (
            build_k_equal(3, 3).unwrap(),
            EmbedFamily::TypeA,
            ExpansionFamily::AEmbedded,
        ),
        (
            build_dnk(3, 2).unwrap(),
            EmbedFamily::TypeB,
            ExpansionFamily::BEmbedded,
        ),
    ] {
        let spec = CubeSpec::new(2);
        let d = decompose_cube(&a, &spec, family).unwrap();
        assert_eq!(d.total(), count_cube(&a, &spec).unwrap());
        let report = corollary_expansion(&a, basis_family).unwrap();
        // The number of admissible flats of each dimension is the basis
        // coefficient, and each class has the factorial-product size.
        let t = BigInt::from(spec.t());
        let mut by_dim = vec![BigInt::zero(); a.ambient_dim() + 1];
        for class in &d.classes {
            by_dim[class.dim] += 1;
            let unit = match family {
                EmbedFamily::TypeA => falling_factorial(class.dim).eval(&t),
                EmbedFamily::TypeB => shifted_double_falling(class.dim).eval(&t),
            };
            assert_eq!(class.count, unit, "class of dim {}", class.dim);
        }
        let low = match basis_family {
            ExpansionFamily::AEmbedded => 0,
            ExpansionFamily::BEmbedded => 1,
        };
        for j in low..=a.ambient_dim() {
            assert_eq!(by_dim[j], report.coeffs[j], "flat count of dim {j}");
        }
    }
}
