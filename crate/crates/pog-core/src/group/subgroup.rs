use num_bigint::BigInt;

use super::hom::{quotient, realize_fgab_subgroup, GroupHom};
use super::lattice::{kernel_basis, solve};
use super::matrix::IntMatrix;
use super::object::{GroupElement, GroupObject};

/// A subgroup given by generators; on the finite backend the element set is
/// materialized as well.
#[derive(Clone, Debug)]
pub struct Subgroup {
    ambient: GroupObject,
    gens: Vec<GroupElement>,
    mask: Option<Vec<bool>>,
}

impl Subgroup {
    pub fn new(ambient: GroupObject, gens: Vec<GroupElement>) -> Self {
        let gens: Vec<GroupElement> = gens.into_iter().filter(|x| !ambient.is_identity(x)).collect();
        let mask = ambient.as_finite().map(|g| {
            let idx: Vec<usize> = gens.iter().map(GroupElement::as_index).collect();
            g.closure(&idx)
        });
        Subgroup { ambient, gens, mask }
    }

    /// Finite backend only; `mask` must describe a subgroup.
    pub fn from_mask(ambient: GroupObject, mask: Vec<bool>) -> Self {
        let g = ambient.as_finite().expect("element sets need a finite group");
        debug_assert!(g.is_subgroup(&mask));
        let mut gens = Vec::new();
        let mut reached = g.closure(&[]);
        for (i, &inside) in mask.iter().enumerate() {
            if inside && !reached[i] {
                gens.push(i);
                reached = g.closure(&gens);
            }
        }
        Subgroup { ambient, gens: gens.into_iter().map(GroupElement::Finite).collect(), mask: Some(mask) }
    }

    pub fn trivial(ambient: GroupObject) -> Self {
        Self::new(ambient, Vec::new())
    }

    pub fn whole(ambient: GroupObject) -> Self {
        let gens = ambient.generators();
        Self::new(ambient, gens)
    }

    pub fn ambient(&self) -> &GroupObject {
        &self.ambient
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.gens
    }

    pub fn mask(&self) -> Option<&[bool]> {
        self.mask.as_deref()
    }

    /// Elements, finite backend only.
    pub fn elements(&self) -> Option<Vec<GroupElement>> {
        self.mask.as_ref().map(|m| {
            m.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| GroupElement::Finite(i)).collect()
        })
    }

    pub fn contains(&self, x: &GroupElement) -> bool {
        match (&self.mask, &self.ambient) {
            (Some(m), _) => m[x.as_index()],
            (None, GroupObject::FgAb(a)) => {
                let cols: Vec<Vec<BigInt>> = self.gens.iter().map(|g| g.as_coords().to_vec()).collect();
                let m = IntMatrix::from_columns(a.dim(), &cols).hstack(&a.relation_matrix());
                solve(&m, x.as_coords()).is_some()
            }
            _ => unreachable!(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_whole(&self) -> bool {
        self.ambient.generators().iter().all(|g| self.contains(g))
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    pub fn equals(&self, other: &Subgroup) -> bool {
        self.ambient == other.ambient && self.is_subgroup_of(other) && other.is_subgroup_of(self)
    }

    pub fn is_normal(&self) -> bool {
        match (&self.ambient, &self.mask) {
            (GroupObject::Finite(g), Some(m)) => g.is_normal(m),
            _ => true,
        }
    }

    /// Order when finite.
    pub fn order(&self) -> Option<BigInt> {
        match &self.mask {
            Some(m) => Some(BigInt::from(m.iter().filter(|&&b| b).count())),
            None => self.realize().0.order(),
        }
    }

    /// The subgroup as a group of its own, with its inclusion.
    pub fn realize(&self) -> (GroupObject, GroupHom) {
        if self.is_whole() {
            return (self.ambient.clone(), GroupHom::identity(&self.ambient));
        }
        match &self.ambient {
            GroupObject::Finite(g) => {
                let (sub, emb) = g.subgroup(self.mask.as_ref().expect("finite"));
                let sub: GroupObject = sub.into();
                (sub.clone(), GroupHom::table_unchecked(sub, self.ambient.clone(), emb))
            }
            GroupObject::FgAb(_) => {
                let gens: Vec<Vec<BigInt>> = self.gens.iter().map(|g| g.as_coords().to_vec()).collect();
                realize_fgab_subgroup(&self.ambient, &gens)
            }
        }
    }

    pub fn intersect(&self, other: &Subgroup) -> Subgroup {
        assert!(self.ambient == other.ambient);
        match &self.ambient {
            GroupObject::Finite(_) => {
                let (a, b) = (self.mask.as_ref().expect("finite"), other.mask.as_ref().expect("finite"));
                Subgroup::from_mask(self.ambient.clone(), a.iter().zip(b).map(|(x, y)| *x && *y).collect())
            }
            GroupObject::FgAb(g) => {
                let h: Vec<Vec<BigInt>> = self.gens.iter().map(|x| x.as_coords().to_vec()).collect();
                let k: Vec<Vec<BigInt>> = other.gens.iter().map(|x| x.as_coords().iter().map(|c| -c).collect()).collect();
                let n = g.dim();
                let hm = IntMatrix::from_columns(n, &h);
                let m = hm.hstack(&IntMatrix::from_columns(n, &k)).hstack(&g.relation_matrix());
                let gens = kernel_basis(&m)
                    .into_iter()
                    .map(|v| GroupElement::Ab(g.reduce(hm.mul_vec(&v[..h.len()]))))
                    .collect();
                Subgroup::new(self.ambient.clone(), gens)
            }
        }
    }

    /// `f(self)` as a subgroup of the codomain.
    pub fn image(&self, f: &GroupHom) -> Subgroup {
        assert!(f.domain() == &self.ambient);
        Subgroup::new(f.codomain().clone(), self.gens.iter().map(|x| f.apply(x)).collect())
    }

    /// `f⁻¹(self)` as a subgroup of the domain.
    pub fn preimage(&self, f: &GroupHom) -> Subgroup {
        assert!(f.codomain() == &self.ambient);
        match f.domain() {
            GroupObject::Finite(g) => {
                let mask = (0..g.order()).map(|i| self.contains(&f.apply(&GroupElement::Finite(i)))).collect();
                Subgroup::from_mask(f.domain().clone(), mask)
            }
            GroupObject::FgAb(_) => {
                let (_, q) = quotient(&self.ambient, self).expect("abelian quotient");
                GroupHom::compose(&q, f).kernel_subgroup()
            }
        }
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}
