//! Independent oracles used by the integration suites. These deliberately
//! share no code with the implementation paths they check.

use std::collections::HashSet;

use chi_core::arrangement::Arrangement;
use chi_core::linalg::{intersect, Subspace};

/// Counts partitions of an n-element set into exactly `j` blocks, each of
/// size at most `k`, by exhaustive enumeration of restricted growth
/// assignments.
pub fn enumerate_bounded_partitions(n: usize, k: usize, j: usize) -> u64 {
    fn recurse(remaining: usize, sizes: &mut Vec<usize>, k: usize, j: usize) -> u64 {
        if remaining == 0 {
            return u64::from(sizes.len() == j);
        }
        let mut total = 0;
        for b in 0..sizes.len() {
            if sizes[b] < k {
                sizes[b] += 1;
                total += recurse(remaining - 1, sizes, k, j);
                sizes[b] -= 1;
            }
        }
        if sizes.len() < j {
            sizes.push(1);
            total += recurse(remaining - 1, sizes, k, j);
            sizes.pop();
        }
        total
    }
    if n == 0 {
        return u64::from(j == 0);
    }
    recurse(n, &mut Vec::new(), k, j)
}

/// Closure of an arrangement under intersection computed the slow way:
/// intersect all pairs of known elements until nothing new appears.
pub fn all_pairs_closure(a: &Arrangement) -> HashSet<Subspace> {
    let mut set: HashSet<Subspace> = HashSet::new();
    set.insert(Subspace::full_space(a.ambient_dim()));
    set.extend(a.members().iter().cloned());
    loop {
        let snapshot: Vec<Subspace> = set.iter().cloned().collect();
        let before = set.len();
        for x in &snapshot {
            for y in &snapshot {
                set.insert(intersect(x, y).expect("same ambient dimension"));
            }
        }
        if set.len() == before {
            return set;
        }
    }
}
