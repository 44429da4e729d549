//! Integer lattice helpers built on the Smith normal form: solving linear
//! systems over ℤ, integer kernels, and presentations ℤ^n / R in
//! invariant-factor form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::fgab::FgAbGroup;
use super::matrix::IntMatrix;
use super::snf::smith_normal_form;

/// Some integer `x` with `a * x == b`, if one exists.
pub fn solve(a: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(a.rows(), b.len());
    let s = smith_normal_form(a);
    let ub = s.u.mul_vec(b);
    let mut y = vec![BigInt::zero(); a.cols()];
    for (i, ubi) in ub.iter().enumerate() {
        if i < s.rank {
            let d = s.d.get(i, i);
            if !ubi.is_multiple_of(d) {
                return None;
            }
            y[i] = ubi / d;
        } else if !ubi.is_zero() {
            return None;
        }
    }
    Some(s.v.mul_vec(&y))
}

/// Basis of the integer kernel `{x : a * x == 0}` as columns.
pub fn kernel_basis(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    let s = smith_normal_form(a);
    (s.rank..a.cols()).map(|j| s.v.column(j)).collect()
}

/// A group ℤ^n / R brought to invariant-factor form.
///
/// `to_canon` maps ℤ^n onto canonical coordinates (torsion rows still need
/// reduction), `from_canon` is a set-theoretic section of it.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub group: FgAbGroup,
    pub to_canon: IntMatrix,
    pub from_canon: IntMatrix,
}

/// Canonical form of ℤ^n modulo the column span of `relations` (n × s).
pub fn present(n: usize, relations: &IntMatrix) -> Presentation {
    assert_eq!(relations.rows(), n);
    let s = smith_normal_form(relations);
    let mut free = Vec::new();
    let mut tors = Vec::new();
    let mut factors = Vec::new();
    for i in 0..n {
        if i < s.rank {
            let d = s.d.get(i, i);
            if !d.is_one() {
                tors.push(i);
                factors.push(d.clone());
            }
        } else {
            free.push(i);
        }
    }
    let order: Vec<usize> = free.iter().chain(tors.iter()).copied().collect();
    let group = FgAbGroup::normal(free.len(), factors);
    let mut to_canon = s.u.select_rows(&order);
    for (k, d) in group.torsion().iter().enumerate() {
        to_canon.reduce_row_mod(group.rank() + k, d);
    }
    let from_canon = s.u_inv.select_columns(&order);
    Presentation { group, to_canon, from_canon }
}

/// Basis (as columns) of the lattice spanned by the given vectors in ℤ^n.
pub fn lattice_basis(n: usize, gens: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    if gens.is_empty() {
        return Vec::new();
    }
    let m = IntMatrix::from_columns(n, gens);
    let s = smith_normal_form(&m);
    (0..s.rank)
        .map(|i| {
            let d = s.d.get(i, i);
            s.u_inv.column(i).into_iter().map(|x| x * d).collect()
        })
        .collect()
}

/// Coordinates of `v` in the lattice basis `basis`, if `v` lies in its span.
pub fn lattice_coordinates(n: usize, basis: &[Vec<BigInt>], v: &[BigInt]) -> Option<Vec<BigInt>> {
    if basis.is_empty() {
        return if v.iter().all(Zero::is_zero) { Some(Vec::new()) } else { None };
    }
    solve(&IntMatrix::from_columns(n, basis), v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn solve_and_fail() {
        let a = IntMatrix::from_i64(&[&[2, 4]]);
        assert!(solve(&a, &v(&[3])).is_none());
        let x = solve(&a, &v(&[6])).unwrap();
        assert_eq!(a.mul_vec(&x), v(&[6]));
    }

    #[test]
    fn kernel_of_row() {
        let a = IntMatrix::from_i64(&[&[0, 1]]);
        let k = kernel_basis(&a);
        assert_eq!(k.len(), 1);
        assert!(k[0][1].is_zero());
        assert!(k[0][0] == BigInt::from(1) || k[0][0] == BigInt::from(-1));
    }

    #[test]
    fn presentation_of_z2_mod_2e1() {
        let p = present(2, &IntMatrix::from_i64(&[&[2], &[0]]));
        assert_eq!(p.group, FgAbGroup::normal(1, vec![BigInt::from(2)]));
        let img = p.to_canon.mul_vec(&v(&[1, 0]));
        assert_eq!(p.group.reduce(img), v(&[0, 1]));
    }

    #[test]
    fn presentation_merges_coprime_torsion() {
        let p = present(2, &IntMatrix::from_i64(&[&[2, 0], &[0, 3]]));
        assert_eq!(p.group, FgAbGroup::normal(0, vec![BigInt::from(6)]));
    }
}
