//! Minimal non-negative solutions of homogeneous integer systems
//! (Contejean–Devie completion).

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// The Hilbert basis of `{z ∈ ℕ^q : a z = 0}`, where `a` has `q` columns.
/// Output is sorted.
pub fn hilbert_basis(a: &[Vec<BigInt>], q: usize) -> Vec<Vec<u64>> {
    let cols: Vec<Vec<BigInt>> = (0..q).map(|j| a.iter().map(|row| row[j].clone()).collect()).collect();
    let dot = |u: &[BigInt], v: &[BigInt]| -> BigInt { u.iter().zip(v).map(|(x, y)| x * y).sum() };

    let mut basis: Vec<Vec<u64>> = Vec::new();
    let mut frontier: Vec<(Vec<u64>, Vec<BigInt>)> = (0..q)
        .map(|j| {
            let mut e = vec![0u64; q];
            e[j] = 1;
            (e, cols[j].clone())
        })
        .collect();
    while !frontier.is_empty() {
        let mut pending = Vec::new();
        for (t, at) in frontier {
            if at.iter().all(Zero::is_zero) {
                basis.push(t);
            } else {
                pending.push((t, at));
            }
        }
        let mut seen: HashSet<Vec<u64>> = HashSet::new();
        let mut next = Vec::new();
        for (t, at) in &pending {
            for (j, col) in cols.iter().enumerate() {
                if !dot(at, col).is_negative() {
                    continue;
                }
                let mut s = t.clone();
                s[j] += 1;
                if basis.iter().any(|b| dominates(&s, b)) || !seen.insert(s.clone()) {
                    continue;
                }
                let as_: Vec<BigInt> = at.iter().zip(col).map(|(x, y)| x + y).collect();
                next.push((s, as_));
            }
        }
        frontier = next;
    }
    basis.sort();
    basis.dedup();
    basis
}

fn dominates(s: &[u64], b: &[u64]) -> bool {
    s.iter().zip(b).all(|(x, y)| x >= y)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect()
    }

    #[test]
    fn single_equation() {
        // x + y - 2z = 0: (2,0,1), (1,1,1), (0,2,1)
        let b = hilbert_basis(&m(&[&[1, 1, -2]]), 3);
        assert_eq!(b, vec![vec![0, 2, 1], vec![1, 1, 1], vec![2, 0, 1]]);
    }

    #[test]
    fn no_rows_gives_unit_vectors() {
        let b = hilbert_basis(&[], 2);
        assert_eq!(b, vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn no_nontrivial_solutions() {
        assert!(hilbert_basis(&m(&[&[1, 2]]), 2).is_empty());
    }

    #[test]
    fn basis_elements_are_minimal_solutions() {
        let a = m(&[&[3, -2, 0, -1], &[0, 1, -1, 0]]);
        let b = hilbert_basis(&a, 4);
        assert!(!b.is_empty());
        for v in &b {
            for row in &a {
                let s: BigInt = row.iter().zip(v).map(|(x, &y)| x * BigInt::from(y)).sum();
                assert!(s.is_zero());
            }
            assert!(!b.iter().any(|w| w != v && dominates(v, w)));
        }
    }
}
