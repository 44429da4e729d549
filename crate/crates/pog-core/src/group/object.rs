use std::collections::VecDeque;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::fgab::FgAbGroup;
use super::finite::FiniteGroup;
use super::lattice::present;
use super::matrix::IntMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Backend {
    Finite,
    FgAb,
}

/// A group on one of the two exact backends.
#[derive(Clone, Debug)]
pub enum GroupObject {
    Finite(Arc<FiniteGroup>),
    FgAb(FgAbGroup),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupElement {
    Finite(usize),
    Ab(Vec<BigInt>),
}

impl GroupElement {
    pub fn ab(coords: &[i64]) -> Self {
        GroupElement::Ab(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn as_index(&self) -> usize {
        match self {
            GroupElement::Finite(i) => *i,
            GroupElement::Ab(_) => panic!("expected a finite-backend element"),
        }
    }

    pub fn as_coords(&self) -> &[BigInt] {
        match self {
            GroupElement::Ab(v) => v,
            GroupElement::Finite(_) => panic!("expected an abelian-backend element"),
        }
    }
}

impl PartialEq for GroupObject {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (GroupObject::Finite(a), GroupObject::Finite(b)) => Arc::ptr_eq(a, b) || a == b,
            (GroupObject::FgAb(a), GroupObject::FgAb(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for GroupObject {}

impl From<FiniteGroup> for GroupObject {
    fn from(g: FiniteGroup) -> Self {
        GroupObject::Finite(Arc::new(g))
    }
}

impl From<FgAbGroup> for GroupObject {
    fn from(g: FgAbGroup) -> Self {
        GroupObject::FgAb(g)
    }
}

impl GroupObject {
    pub fn backend(&self) -> Backend {
        match self {
            GroupObject::Finite(_) => Backend::Finite,
            GroupObject::FgAb(_) => Backend::FgAb,
        }
    }

    pub fn as_finite(&self) -> Option<&FiniteGroup> {
        match self {
            GroupObject::Finite(g) => Some(g),
            GroupObject::FgAb(_) => None,
        }
    }

    pub fn as_fgab(&self) -> Option<&FgAbGroup> {
        match self {
            GroupObject::FgAb(g) => Some(g),
            GroupObject::Finite(_) => None,
        }
    }

    /// The trivial group on the same backend.
    pub fn trivial_like(&self) -> GroupObject {
        match self {
            GroupObject::Finite(_) => FiniteGroup::cyclic(1).into(),
            GroupObject::FgAb(_) => FgAbGroup::trivial().into(),
        }
    }

    pub fn identity(&self) -> GroupElement {
        match self {
            GroupObject::Finite(g) => GroupElement::Finite(g.identity()),
            GroupObject::FgAb(g) => GroupElement::Ab(g.zero()),
        }
    }

    pub fn is_identity(&self, x: &GroupElement) -> bool {
        *x == self.identity()
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        match (self, a, b) {
            (GroupObject::Finite(g), GroupElement::Finite(x), GroupElement::Finite(y)) => GroupElement::Finite(g.op(*x, *y)),
            (GroupObject::FgAb(g), GroupElement::Ab(x), GroupElement::Ab(y)) => GroupElement::Ab(g.add(x, y)),
            _ => panic!("element backend does not match group"),
        }
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        match (self, a) {
            (GroupObject::Finite(g), GroupElement::Finite(x)) => GroupElement::Finite(g.inv(*x)),
            (GroupObject::FgAb(g), GroupElement::Ab(x)) => GroupElement::Ab(g.neg(x)),
            _ => panic!("element backend does not match group"),
        }
    }

    /// `a - b`, i.e. `a + (-b)`.
    pub fn sub(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.add(a, &self.neg(b))
    }

    /// `n · a`.
    pub fn scale(&self, a: &GroupElement, n: &BigInt) -> GroupElement {
        match (self, a) {
            (GroupObject::Finite(g), GroupElement::Finite(x)) => {
                let ord = BigInt::from(g.element_order(*x));
                let k = n.mod_floor(&ord).to_i64().expect("order fits");
                GroupElement::Finite(g.power(*x, k))
            }
            (GroupObject::FgAb(g), GroupElement::Ab(x)) => GroupElement::Ab(g.scale(x, n)),
            _ => panic!("element backend does not match group"),
        }
    }

    /// `g + x - g`
    pub fn conjugate(&self, g: &GroupElement, x: &GroupElement) -> GroupElement {
        self.sub(&self.add(g, x), g)
    }

    /// Whether `x` is a well-formed element of this group.
    pub fn contains(&self, x: &GroupElement) -> bool {
        match (self, x) {
            (GroupObject::Finite(g), GroupElement::Finite(i)) => *i < g.order(),
            (GroupObject::FgAb(g), GroupElement::Ab(v)) => g.is_reduced(v),
            _ => false,
        }
    }

    pub fn normalize(&self, x: GroupElement) -> GroupElement {
        match (self, x) {
            (GroupObject::FgAb(g), GroupElement::Ab(v)) => GroupElement::Ab(g.reduce(v)),
            (_, x) => x,
        }
    }

    pub fn is_abelian(&self) -> bool {
        match self {
            GroupObject::Finite(g) => g.is_abelian(),
            GroupObject::FgAb(_) => true,
        }
    }

    pub fn is_finite(&self) -> bool {
        match self {
            GroupObject::Finite(_) => true,
            GroupObject::FgAb(g) => g.rank() == 0,
        }
    }

    pub fn is_trivial(&self) -> bool {
        match self {
            GroupObject::Finite(g) => g.order() == 1,
            GroupObject::FgAb(g) => g.is_trivial(),
        }
    }

    pub fn order(&self) -> Option<BigInt> {
        match self {
            GroupObject::Finite(g) => Some(BigInt::from(g.order())),
            GroupObject::FgAb(g) => g.order(),
        }
    }

    pub fn element_order(&self, x: &GroupElement) -> Option<BigInt> {
        match (self, x) {
            (GroupObject::Finite(g), GroupElement::Finite(i)) => Some(BigInt::from(g.element_order(*i))),
            (GroupObject::FgAb(g), GroupElement::Ab(v)) => g.element_order(v),
            _ => panic!("element backend does not match group"),
        }
    }

    /// Every element, for finite groups on either backend.
    pub fn elements(&self) -> Option<Vec<GroupElement>> {
        match self {
            GroupObject::Finite(g) => Some((0..g.order()).map(GroupElement::Finite).collect()),
            GroupObject::FgAb(g) if g.rank() == 0 => Some(g.window(0).into_iter().map(GroupElement::Ab).collect()),
            GroupObject::FgAb(_) => None,
        }
    }

    /// Finite sample: all elements (finite backend) or the coordinate
    /// window `[-w, w]` on free coordinates.
    pub fn window(&self, w: u32) -> Vec<GroupElement> {
        match self {
            GroupObject::Finite(g) => (0..g.order()).map(GroupElement::Finite).collect(),
            GroupObject::FgAb(g) => g.window(w).into_iter().map(GroupElement::Ab).collect(),
        }
    }

    /// A generating set: greedy on the finite backend, the standard basis
    /// on the abelian one.
    pub fn generators(&self) -> Vec<GroupElement> {
        match self {
            GroupObject::Finite(g) => g.generating_set().into_iter().map(GroupElement::Finite).collect(),
            GroupObject::FgAb(g) => (0..g.dim()).map(|i| GroupElement::Ab(g.basis(i))).collect(),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            GroupObject::Finite(g) => g.describe(),
            GroupObject::FgAb(g) => g.to_string(),
        }
    }

    pub fn format_element(&self, x: &GroupElement) -> String {
        match (self, x) {
            (GroupObject::Finite(g), GroupElement::Finite(i)) => g.name(*i).to_string(),
            (_, GroupElement::Ab(v)) => {
                let parts: Vec<String> = v.iter().map(|c| c.to_string()).collect();
                format!("({})", parts.join(","))
            }
            _ => format!("{x:?}"),
        }
    }

    /// Invariant-factor form of a finite-backend abelian group, with the
    /// image of each element by index.
    pub fn finite_to_fgab(&self) -> Option<(FgAbGroup, Vec<GroupElement>)> {
        match self {
            GroupObject::Finite(g) if g.is_abelian() => {
                let (h, images) = abelian_presentation(g);
                Some((h, images.into_iter().map(GroupElement::Ab).collect()))
            }
            _ => None,
        }
    }
}

impl fmt::Display for GroupObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.describe())
    }
}

/// Invariant-factor form of a finite abelian group and the canonical
/// coordinates of each of its elements (by index).
pub fn abelian_presentation(g: &FiniteGroup) -> (FgAbGroup, Vec<Vec<BigInt>>) {
    debug_assert!(g.is_abelian());
    let gens = g.generating_set();
    let k = gens.len();
    // word for each element, by breadth-first search over generators
    let mut words: Vec<Option<Vec<BigInt>>> = vec![None; g.order()];
    words[g.identity()] = Some(vec![BigInt::zero(); k]);
    let mut queue = VecDeque::from([g.identity()]);
    while let Some(x) = queue.pop_front() {
        for (i, &s) in gens.iter().enumerate() {
            let y = g.op(x, s);
            if words[y].is_none() {
                let mut w = words[x].clone().expect("visited");
                w[i] += 1;
                words[y] = Some(w);
                queue.push_back(y);
            }
        }
    }
    // relations: every coefficient vector in the box of orders summing to 0
    let orders: Vec<usize> = gens.iter().map(|&s| g.element_order(s)).collect();
    let mut relations: Vec<Vec<BigInt>> = Vec::new();
    for (i, &o) in orders.iter().enumerate() {
        let mut r = vec![BigInt::zero(); k];
        r[i] = BigInt::from(o);
        relations.push(r);
    }
    let mut counter = vec![0usize; k];
    'outer: loop {
        let mut acc = g.identity();
        for (i, &c) in counter.iter().enumerate() {
            acc = g.op(acc, g.power(gens[i], c as i64));
        }
        if acc == g.identity() && counter.iter().any(|&c| c > 0) {
            relations.push(counter.iter().map(|&c| BigInt::from(c)).collect());
        }
        for i in 0..k {
            counter[i] += 1;
            if counter[i] < orders[i] {
                continue 'outer;
            }
            counter[i] = 0;
        }
        break;
    }
    let rel = IntMatrix::from_columns(k, &relations);
    let p = present(k, &rel);
    let coords = words
        .into_iter()
        .map(|w| p.group.reduce(p.to_canon.mul_vec(&w.expect("every element reached"))))
        .collect();
    (p.group, coords)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn klein_and_z6_presentations() {
        let v4 = FiniteGroup::cyclic(2).product(&FiniteGroup::cyclic(2));
        let (h, coords) = abelian_presentation(&v4);
        assert_eq!(h.to_string(), "Z/2 x Z/2");
        let mut sorted = coords.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 4);
        let z6 = FiniteGroup::cyclic(2).product(&FiniteGroup::cyclic(3));
        assert_eq!(abelian_presentation(&z6).0.to_string(), "Z/6");
    }

    #[test]
    fn presentation_is_additive() {
        let g = FiniteGroup::cyclic(4).product(&FiniteGroup::cyclic(2));
        let (h, coords) = abelian_presentation(&g);
        for a in 0..g.order() {
            for b in 0..g.order() {
                assert_eq!(h.add(&coords[a], &coords[b]), coords[g.op(a, b)]);
            }
        }
    }
}
