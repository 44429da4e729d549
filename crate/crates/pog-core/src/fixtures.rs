//! Small named objects and morphisms used across tests and the CLI corpus.

use crate::cone::Cone;
use crate::group::{FgAbGroup, FiniteGroup, GroupElement, GroupHom, GroupObject, IntMatrix};
use crate::preord::{POGMorphism, PreorderedGroup};

pub fn free(rank: usize) -> GroupObject {
    FgAbGroup::free(rank).into()
}

pub fn cyclic_ab(n: u64) -> GroupObject {
    FgAbGroup::cyclic(n).into()
}

pub fn cyclic(n: usize) -> GroupObject {
    FiniteGroup::cyclic(n).into()
}

pub fn ab(v: &[i64]) -> GroupElement {
    GroupElement::ab(v)
}

pub fn generated(rank: usize, gens: &[&[i64]]) -> PreorderedGroup {
    let g = free(rank);
    let cone = Cone::generated(g.clone(), gens.iter().map(|v| ab(v)).collect());
    PreorderedGroup::new(g, cone).expect("generated cones satisfy the axioms")
}

/// `(ℤ, ℕ)`.
pub fn naturals() -> PreorderedGroup {
    generated(1, &[&[1]])
}

/// `(ℤ², ℤ × ℕ)`.
pub fn half_plane() -> PreorderedGroup {
    generated(2, &[&[1, 0], &[-1, 0], &[0, 1]])
}

/// A finite-backend object with the cone given by element indices.
pub fn finite(g: FiniteGroup, cone: &[usize]) -> PreorderedGroup {
    let g: GroupObject = g.into();
    let elems: Vec<GroupElement> = cone.iter().map(|&i| GroupElement::Finite(i)).collect();
    PreorderedGroup::new(g.clone(), Cone::explicit(g, &elems)).expect("valid cone")
}

/// `(ℤ/4, {0, 2})` on the finite backend.
pub fn z4_half() -> PreorderedGroup {
    finite(FiniteGroup::cyclic(4), &[0, 2])
}

pub fn matrix_map(dom: &PreorderedGroup, cod: &PreorderedGroup, rows: &[&[i64]]) -> POGMorphism {
    let map = GroupHom::from_matrix(dom.group().clone(), cod.group().clone(), IntMatrix::from_i64(rows)).expect("valid matrix");
    POGMorphism::new(map, dom, cod).expect("cone preserving")
}

pub fn table_map(dom: &PreorderedGroup, cod: &PreorderedGroup, table: &[usize]) -> POGMorphism {
    let map = GroupHom::from_table(dom.group().clone(), cod.group().clone(), table.to_vec()).expect("valid table");
    POGMorphism::new(map, dom, cod).expect("cone preserving")
}

/// Reduction mod 2 from `(ℤ, ℕ)` to `(ℤ/2, ℤ/2)`.
pub fn mod2() -> POGMorphism {
    matrix_map(&naturals(), &PreorderedGroup::total(cyclic_ab(2)), &[&[1]])
}

/// `(x, y) ↦ y` from `(ℤ², ℤ × ℕ)` to `(ℤ, ℕ)`.
pub fn second_projection() -> POGMorphism {
    matrix_map(&half_plane(), &naturals(), &[&[0, 1]])
}
