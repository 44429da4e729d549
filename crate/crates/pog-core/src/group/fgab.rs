use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;
use super::snf::smith_normal_form;
use super::GroupError;

/// ℤ^r ⊕ ℤ/d_1 ⊕ … ⊕ ℤ/d_k with d_1 | d_2 | … and every d_i ≥ 2.
///
/// Elements are coordinate vectors of length `r + k`; the last `k`
/// coordinates are residues kept in `[0, d_i)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FgAbGroup {
    rank: usize,
    torsion: Vec<BigInt>,
}

impl FgAbGroup {
    /// Validates and normalizes arbitrary positive torsion orders.
    pub fn new(rank: usize, factors: Vec<BigInt>) -> Result<Self, GroupError> {
        if let Some(bad) = factors.iter().find(|d| !d.is_positive()) {
            return Err(GroupError::BadInvariantFactors(format!("non-positive factor {bad}")));
        }
        let chain = factors.windows(2).all(|w| w[1].is_multiple_of(&w[0]));
        if chain && factors.iter().all(|d| d > &BigInt::one()) {
            return Ok(FgAbGroup { rank, torsion: factors });
        }
        let k = factors.len();
        let mut diag = IntMatrix::zeros(k, k);
        for (i, d) in factors.into_iter().enumerate() {
            diag.set(i, i, d);
        }
        let snf = smith_normal_form(&diag);
        let torsion = snf.diagonal().into_iter().filter(|d| d > &BigInt::one()).collect();
        Ok(FgAbGroup { rank, torsion })
    }

    /// Trusted constructor for factors already in normal form.
    pub(crate) fn normal(rank: usize, torsion: Vec<BigInt>) -> Self {
        debug_assert!(torsion.iter().all(|d| d > &BigInt::one()));
        debug_assert!(torsion.windows(2).all(|w| w[1].is_multiple_of(&w[0])));
        FgAbGroup { rank, torsion }
    }

    pub fn free(rank: usize) -> Self {
        FgAbGroup { rank, torsion: Vec::new() }
    }

    pub fn cyclic(n: u64) -> Self {
        Self::new(0, vec![BigInt::from(n)]).expect("positive order")
    }

    pub fn trivial() -> Self {
        Self::free(0)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    /// Number of coordinates.
    pub fn dim(&self) -> usize {
        self.rank + self.torsion.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.dim() == 0
    }

    /// Order when finite.
    pub fn order(&self) -> Option<BigInt> {
        (self.rank == 0).then(|| self.torsion.iter().product())
    }

    /// Exponent of the torsion subgroup (1 when torsion-free).
    pub fn exponent(&self) -> BigInt {
        self.torsion.last().cloned().unwrap_or_else(BigInt::one)
    }

    pub fn zero(&self) -> Vec<BigInt> {
        vec![BigInt::zero(); self.dim()]
    }

    pub fn basis(&self, i: usize) -> Vec<BigInt> {
        let mut e = self.zero();
        e[i] = BigInt::one();
        self.reduce(e)
    }

    pub fn reduce(&self, mut x: Vec<BigInt>) -> Vec<BigInt> {
        assert_eq!(x.len(), self.dim(), "element has wrong length");
        for (k, d) in self.torsion.iter().enumerate() {
            let c = &mut x[self.rank + k];
            *c = c.mod_floor(d);
        }
        x
    }

    pub fn is_reduced(&self, x: &[BigInt]) -> bool {
        x.len() == self.dim()
            && self
                .torsion
                .iter()
                .enumerate()
                .all(|(k, d)| !x[self.rank + k].is_negative() && &x[self.rank + k] < d)
    }

    pub fn add(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        self.reduce(a.iter().zip(b).map(|(x, y)| x + y).collect())
    }

    pub fn sub(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        self.reduce(a.iter().zip(b).map(|(x, y)| x - y).collect())
    }

    pub fn neg(&self, a: &[BigInt]) -> Vec<BigInt> {
        self.reduce(a.iter().map(|x| -x).collect())
    }

    pub fn scale(&self, a: &[BigInt], n: &BigInt) -> Vec<BigInt> {
        self.reduce(a.iter().map(|x| x * n).collect())
    }

    /// Order of an element, `None` if infinite.
    pub fn element_order(&self, x: &[BigInt]) -> Option<BigInt> {
        if x[..self.rank].iter().any(|c| !c.is_zero()) {
            return None;
        }
        let mut ord = BigInt::one();
        for (k, d) in self.torsion.iter().enumerate() {
            let c = &x[self.rank + k];
            ord = ord.lcm(&(d / c.gcd(d)));
        }
        Some(ord)
    }

    /// Columns `d_i e_{r+i}`: the relations defining the torsion part.
    pub fn relation_columns(&self) -> Vec<Vec<BigInt>> {
        self.torsion
            .iter()
            .enumerate()
            .map(|(k, d)| {
                let mut c = vec![BigInt::zero(); self.dim()];
                c[self.rank + k] = d.clone();
                c
            })
            .collect()
    }

    pub fn relation_matrix(&self) -> IntMatrix {
        IntMatrix::from_columns(self.dim(), &self.relation_columns())
    }

    /// All elements whose free coordinates lie in `[-w, w]`, torsion
    /// coordinates ranging over all residues; lexicographic order.
    pub fn window(&self, w: u32) -> Vec<Vec<BigInt>> {
        let mut ranges: Vec<Vec<BigInt>> = Vec::new();
        let w = i64::from(w);
        for _ in 0..self.rank {
            ranges.push((-w..=w).map(BigInt::from).collect());
        }
        for d in &self.torsion {
            let mut r = Vec::new();
            let mut c = BigInt::zero();
            while &c < d {
                r.push(c.clone());
                c += 1;
            }
            ranges.push(r);
        }
        let mut out = vec![Vec::new()];
        for r in ranges {
            let mut next = Vec::with_capacity(out.len() * r.len());
            for prefix in &out {
                for c in &r {
                    let mut p = prefix.clone();
                    p.push(c.clone());
                    next.push(p);
                }
            }
            out = next;
        }
        out
    }
}

impl fmt::Display for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in &self.torsion {
            parts.push(format!("Z/{d}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" x "))
        }
    }
}

impl fmt::Debug for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FgAb({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_factors() {
        let g = FgAbGroup::new(0, vec![BigInt::from(4), BigInt::from(2)]).unwrap();
        assert_eq!(g.torsion(), &[BigInt::from(2), BigInt::from(4)]);
        let h = FgAbGroup::new(1, vec![BigInt::from(2), BigInt::from(3)]).unwrap();
        assert_eq!(h.torsion(), &[BigInt::from(6)]);
        assert_eq!(h.to_string(), "Z x Z/6");
    }

    #[test]
    fn rejects_nonpositive() {
        assert!(FgAbGroup::new(0, vec![BigInt::from(0)]).is_err());
        assert!(FgAbGroup::new(0, vec![BigInt::from(-3)]).is_err());
    }

    #[test]
    fn drops_unit_factors() {
        let g = FgAbGroup::new(2, vec![BigInt::from(1)]).unwrap();
        assert_eq!(g, FgAbGroup::free(2));
    }

    #[test]
    fn element_orders() {
        let g = FgAbGroup::new(0, vec![BigInt::from(2), BigInt::from(4)]).unwrap();
        let x = vec![BigInt::from(1), BigInt::from(2)];
        assert_eq!(g.element_order(&x), Some(BigInt::from(2)));
        assert_eq!(g.window(3).len(), 8);
    }
}
