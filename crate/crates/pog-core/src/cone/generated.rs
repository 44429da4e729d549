//! Membership in a finitely generated submonoid of ℤ^r ⊕ T.
//!
//! Generators whose negatives lie in the monoid are detected by a lineality
//! test on the free parts. Modulo the subgroup they generate the remaining
//! generators span a pointed monoid, so an integral functional `ℓ` with
//! `ℓ(b) ≥ 1` on every remaining generator bounds the number of summands in
//! any expression of a query `y` by `ℓ(y)`.

use std::collections::{HashMap, VecDeque};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::lp::{find_nonnegative, integral_multiple, rational};
use crate::group::{lattice::solve, quotient, FgAbGroup, GroupElement, GroupHom, GroupObject, IntMatrix, Subgroup};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Decision {
    /// Non-negative coefficients, one per generator.
    In(Vec<BigInt>),
    /// No expression uses more than `bound` non-unit generators, and none
    /// within that budget reaches the query.
    Out(BigInt),
}

#[derive(Debug)]
pub(crate) struct GeneratedCone {
    ambient: GroupObject,
    gens: Vec<Vec<BigInt>>,
    /// For each unit generator `g_i`, coefficients expressing `-g_i`.
    negations: Vec<Option<Vec<BigInt>>>,
    units: Subgroup,
    unit_idx: Vec<usize>,
    nonunit_idx: Vec<usize>,
    /// Projection onto the ambient group modulo the units.
    proj: GroupHom,
    reduced: Vec<Vec<BigInt>>,
    ell: Vec<BigInt>,
    independent: bool,
}

impl GeneratedCone {
    pub fn new(ambient: GroupObject, gens: Vec<Vec<BigInt>>) -> Self {
        let g = ambient.as_fgab().expect("abelian backend").clone();
        let gens: Vec<Vec<BigInt>> = gens.into_iter().map(|v| g.reduce(v)).collect();
        let negations: Vec<Option<Vec<BigInt>>> = (0..gens.len()).map(|i| negation(&g, &gens, i)).collect();
        let unit_idx: Vec<usize> = (0..gens.len()).filter(|&i| negations[i].is_some()).collect();
        let nonunit_idx: Vec<usize> = (0..gens.len()).filter(|&i| negations[i].is_none()).collect();
        let units = Subgroup::new(ambient.clone(), unit_idx.iter().map(|&i| GroupElement::Ab(gens[i].clone())).collect());
        let (q, proj) = quotient(&ambient, &units).expect("abelian quotient");
        let qg = q.as_fgab().expect("abelian").clone();
        let reduced: Vec<Vec<BigInt>> =
            nonunit_idx.iter().map(|&i| proj.apply(&GroupElement::Ab(gens[i].clone())).as_coords().to_vec()).collect();
        let ell = bounding_functional(&qg, &reduced);
        let independent = {
            let cols: Vec<Vec<BigInt>> = reduced.iter().map(|b| b[..qg.rank()].to_vec()).collect();
            cols.is_empty() || crate::group::smith_normal_form(&IntMatrix::from_columns(qg.rank(), &cols)).rank == cols.len()
        };
        GeneratedCone { ambient, gens, negations, units, unit_idx, nonunit_idx, proj, reduced, ell, independent }
    }

    pub fn generators(&self) -> &[Vec<BigInt>] {
        &self.gens
    }

    pub fn units(&self) -> &Subgroup {
        &self.units
    }

    #[cfg(test)]
    pub fn unit_generators(&self) -> &[usize] {
        &self.unit_idx
    }

    pub fn is_group(&self) -> bool {
        self.nonunit_idx.is_empty()
    }

    fn fgab(&self) -> &FgAbGroup {
        self.ambient.as_fgab().expect("abelian")
    }

    pub fn decide(&self, x: &[BigInt]) -> Decision {
        let g = self.fgab();
        let x = g.reduce(x.to_vec());
        let y = self.proj.apply(&GroupElement::Ab(x.clone())).as_coords().to_vec();
        let q = self.proj.codomain().as_fgab().expect("abelian");
        let bound: BigInt = self.ell.iter().zip(&y[..q.rank()]).map(|(a, b)| a * b).sum();
        let counts = if self.nonunit_idx.is_empty() {
            y.iter().all(Zero::is_zero).then(Vec::new)
        } else if bound.is_negative() {
            None
        } else if self.independent {
            self.solve_independent(q, &y)
        } else {
            self.search(q, &y, &bound)
        };
        let Some(counts) = counts else {
            return Decision::Out(bound.max(BigInt::zero()));
        };
        Decision::In(self.lift(&x, &counts))
    }

    /// Unique candidate when the reduced free parts are independent.
    fn solve_independent(&self, q: &FgAbGroup, y: &[BigInt]) -> Option<Vec<BigInt>> {
        let r = q.rank();
        let cols: Vec<Vec<BigInt>> = self.reduced.iter().map(|b| b[..r].to_vec()).collect();
        let n = solve(&IntMatrix::from_columns(r, &cols), &y[..r])?;
        if n.iter().any(Signed::is_negative) {
            return None;
        }
        let mut acc = q.zero();
        for (c, b) in n.iter().zip(&self.reduced) {
            acc = q.add(&acc, &q.scale(b, c));
        }
        (acc == y).then_some(n)
    }

    /// Breadth-first search over partial sums with `ℓ(s) ≤ ℓ(y)`.
    fn search(&self, q: &FgAbGroup, y: &[BigInt], bound: &BigInt) -> Option<Vec<BigInt>> {
        let r = q.rank();
        let ell = |v: &[BigInt]| -> BigInt { self.ell.iter().zip(&v[..r]).map(|(a, b)| a * b).sum() };
        let start = q.zero();
        let mut parent: HashMap<Vec<BigInt>, Option<(Vec<BigInt>, usize)>> = HashMap::new();
        parent.insert(start.clone(), None);
        let mut queue = VecDeque::from([start]);
        let mut found = None;
        while let Some(s) = queue.pop_front() {
            if s.as_slice() == y {
                found = Some(s);
                break;
            }
            for (j, b) in self.reduced.iter().enumerate() {
                let t = q.add(&s, b);
                if &ell(&t) > bound || parent.contains_key(&t) {
                    continue;
                }
                parent.insert(t.clone(), Some((s.clone(), j)));
                queue.push_back(t);
            }
        }
        let mut cur = found?;
        let mut counts = vec![BigInt::zero(); self.reduced.len()];
        while let Some(Some((prev, j))) = parent.get(&cur) {
            counts[*j] += 1;
            cur = prev.clone();
        }
        Some(counts)
    }

    /// Full coefficient vector from counts on the non-unit generators.
    fn lift(&self, x: &[BigInt], counts: &[BigInt]) -> Vec<BigInt> {
        let g = self.fgab();
        let mut coeffs = vec![BigInt::zero(); self.gens.len()];
        let mut rest = x.to_vec();
        for (c, &i) in counts.iter().zip(&self.nonunit_idx) {
            coeffs[i] += c;
            rest = g.sub(&rest, &g.scale(&self.gens[i], c));
        }
        if !self.unit_idx.is_empty() {
            let cols: Vec<Vec<BigInt>> = self.unit_idx.iter().map(|&i| self.gens[i].clone()).collect();
            let m = IntMatrix::from_columns(g.dim(), &cols).hstack(&g.relation_matrix());
            let mu = solve(&m, &rest).expect("remainder lies in the unit subgroup");
            for (k, &i) in self.unit_idx.iter().enumerate() {
                let c = &mu[k];
                if c.is_positive() {
                    coeffs[i] += c;
                } else if c.is_negative() {
                    let neg = self.negations[i].as_ref().expect("unit generator");
                    for (dst, e) in coeffs.iter_mut().zip(neg) {
                        *dst += e * -c;
                    }
                }
            }
        } else {
            debug_assert!(rest.iter().all(Zero::is_zero));
        }
        coeffs
    }

    #[cfg(test)]
    pub fn recombine(&self, coeffs: &[BigInt]) -> Vec<BigInt> {
        let g = self.fgab();
        let mut acc = g.zero();
        for (c, v) in coeffs.iter().zip(&self.gens) {
            acc = g.add(&acc, &g.scale(v, c));
        }
        acc
    }
}

/// Coefficients `c ≥ 0` with `Σ c_j g_j = -g_i`, if `g_i` is a unit.
fn negation(g: &FgAbGroup, gens: &[Vec<BigInt>], i: usize) -> Option<Vec<BigInt>> {
    let r = g.rank();
    let m = gens.len();
    let mut a: Vec<Vec<BigRational>> = (0..r).map(|row| gens.iter().map(|v| rational(&v[row])).collect()).collect();
    let mut pin = vec![BigRational::zero(); m];
    pin[i] = BigRational::one();
    a.push(pin);
    let mut b = vec![BigRational::zero(); r];
    b.push(BigRational::one());
    let lambda = find_nonnegative(&a, &b)?;
    // Σ λ_j g_j is torsion, so the exponent kills it.
    let d = g.exponent();
    let mut c: Vec<BigInt> = integral_multiple(&lambda).into_iter().map(|v| v * &d).collect();
    c[i] -= 1;
    debug_assert!(!c[i].is_negative());
    Some(c)
}

/// Integral `ℓ` on the free coordinates with `ℓ(b) ≥ 1` for every `b`.
fn bounding_functional(q: &FgAbGroup, reduced: &[Vec<BigInt>]) -> Vec<BigInt> {
    let r = q.rank();
    if reduced.is_empty() {
        return vec![BigInt::zero(); r];
    }
    // variables: ℓ⁺ (r), ℓ⁻ (r), slack (one per generator)
    let k = reduced.len();
    let mut a = Vec::with_capacity(k);
    for (j, b) in reduced.iter().enumerate() {
        let mut row = vec![BigRational::zero(); 2 * r + k];
        for i in 0..r {
            row[i] = rational(&b[i]);
            row[r + i] = -rational(&b[i]);
        }
        row[2 * r + j] = -BigRational::one();
        a.push(row);
    }
    let sol = find_nonnegative(&a, &vec![BigRational::one(); k]).expect("reduced monoid is pointed");
    let ell: Vec<BigRational> = (0..r).map(|i| &sol[i] - &sol[r + i]).collect();
    integral_multiple(&ell)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cone(rank: usize, torsion: &[u64], gens: &[&[i64]]) -> GeneratedCone {
        let g = FgAbGroup::new(rank, torsion.iter().map(|&d| BigInt::from(d)).collect()).unwrap();
        GeneratedCone::new(g.into(), gens.iter().map(|v| v.iter().map(|&x| BigInt::from(x)).collect()).collect())
    }

    fn v(x: &[i64]) -> Vec<BigInt> {
        x.iter().map(|&c| BigInt::from(c)).collect()
    }

    fn check_in(c: &GeneratedCone, x: &[i64]) {
        match c.decide(&v(x)) {
            Decision::In(coeffs) => {
                assert!(coeffs.iter().all(|c| !c.is_negative()));
                assert_eq!(c.recombine(&coeffs), c.fgab().reduce(v(x)));
            }
            Decision::Out(_) => panic!("{x:?} should be in the cone"),
        }
    }

    #[test]
    fn naturals() {
        let c = cone(1, &[], &[&[1]]);
        check_in(&c, &[5]);
        assert!(matches!(c.decide(&v(&[-1])), Decision::Out(_)));
        assert!(c.units().is_trivial());
    }

    #[test]
    fn mixed_signs_keep_second_coordinate_nonnegative() {
        let c = cone(2, &[], &[&[2, 0], &[-1, 0], &[0, 1]]);
        assert!(matches!(c.decide(&v(&[0, -1])), Decision::Out(_)));
        check_in(&c, &[-7, 3]);
        assert_eq!(c.unit_generators(), &[0, 1]);
    }

    #[test]
    fn whole_plane() {
        let c = cone(2, &[], &[&[1, 0], &[0, 1], &[-1, -1]]);
        assert!(c.is_group());
        check_in(&c, &[-3, 5]);
    }

    #[test]
    fn dependent_generators_use_search() {
        let c = cone(2, &[], &[&[1, 0], &[1, 1], &[1, 2]]);
        assert!(!c.independent);
        check_in(&c, &[3, 4]);
        assert!(matches!(c.decide(&v(&[1, 3])), Decision::Out(_)));
        assert!(matches!(c.decide(&v(&[0, 1])), Decision::Out(_)));
    }

    #[test]
    fn torsion_generators_are_units() {
        let c = cone(1, &[4], &[&[0, 2], &[1, 1]]);
        assert_eq!(c.unit_generators(), &[0]);
        check_in(&c, &[0, 2]);
        check_in(&c, &[3, 1]);
        check_in(&c, &[3, 3]);
        assert!(matches!(c.decide(&v(&[3, 0])), Decision::Out(_)));
        assert!(matches!(c.decide(&v(&[0, 1])), Decision::Out(_)));
    }

    #[test]
    fn torsion_reachable_only_through_free_part() {
        // ⟨(1,1)⟩ in ℤ ⊕ ℤ/2: (2,0) is in, (2,1) is not
        let c = cone(1, &[2], &[&[1, 1]]);
        check_in(&c, &[2, 0]);
        assert!(matches!(c.decide(&v(&[2, 1])), Decision::Out(_)));
    }
}
