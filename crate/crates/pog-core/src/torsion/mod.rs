//! The torsion theory of total and partially ordered groups, and the
//! pretorsion theory of protomodular and partially ordered groups.

use thiserror::Error;

use crate::cone::Cone;
use crate::group::{GroupHom, GroupObject};
use crate::oracle::{self, Budget, UniversalPropertyQuery};
use crate::preord::{
    factor_through_epi, is_short_exact, quotient_object, POGMorphism, PreorderedGroup, SequenceCertificate, SequenceKind,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TorsionError {
    #[error("source is not total")]
    NotTotal,
    #[error("target is not partially ordered")]
    NotPartiallyOrdered,
    #[error("hom-set is infinite and no enumeration bound was given")]
    EnumerationUnbounded,
    #[error("sequences are not comparable: {0}")]
    NotComparable(String),
}

/// A canonical sequence `T(P) → P → F(P)` with its certificate.
#[derive(Clone, Debug)]
pub struct TorsionDecomposition {
    pub object: PreorderedGroup,
    pub torsion_part: PreorderedGroup,
    pub torsion_free: PreorderedGroup,
    /// `T(P) → P`.
    pub counit: POGMorphism,
    /// `P → F(P)`.
    pub unit: POGMorphism,
    pub certificate: SequenceCertificate,
}

/// `(G/N_G, P_G/N_G)` with the unit.
pub fn torsion_free_part(p: &PreorderedGroup) -> (PreorderedGroup, POGMorphism) {
    quotient_object(p, &p.units())
}

pub fn torsion_sequence(p: &PreorderedGroup) -> TorsionDecomposition {
    let (n, inc) = p.units().realize();
    let torsion_part = PreorderedGroup::total(n);
    let counit = POGMorphism::new(inc, &torsion_part, p).expect("units are positive");
    let (torsion_free, unit) = torsion_free_part(p);
    assert!(torsion_free.classify().partially_ordered, "quotient by the units is reduced");
    let certificate = is_short_exact(&counit, &unit);
    TorsionDecomposition { object: p.clone(), torsion_part, torsion_free, counit, unit, certificate }
}

/// `F(m)`.
pub fn reflect_f(m: &POGMorphism) -> POGMorphism {
    let (fa, qa) = torsion_free_part(m.domain());
    let (fb, qb) = torsion_free_part(m.codomain());
    let map = factor_through_epi(qa.map(), &GroupHom::compose(qb.map(), m.map())).expect("units map to units");
    POGMorphism::new(map, &fa, &fb).expect("induced map preserves cones")
}

/// `T(m)`: the restriction to the unit groups.
pub fn coreflect_t(m: &POGMorphism) -> POGMorphism {
    let ta = torsion_sequence(m.domain());
    let tb = torsion_sequence(m.codomain());
    let along = GroupHom::compose(m.map(), ta.counit.map());
    let map = along.corestrict(tb.counit.map()).expect("units map to units");
    POGMorphism::new(map, &ta.torsion_part, &tb.torsion_part).expect("total cones")
}

#[derive(Clone, Debug)]
pub struct HomZeroReport {
    pub holds: bool,
    pub found: usize,
    /// Matrix-entry bound used on the abelian backend.
    pub bound: Option<u32>,
    pub exhaustive: bool,
    pub counterexample: Option<POGMorphism>,
}

/// Enumerates `Hom(src, dst)` and checks that only the zero morphism exists.
pub fn hom_torsion_to_free_is_zero(
    src: &PreorderedGroup,
    dst: &PreorderedGroup,
    bound: Option<u32>,
) -> Result<HomZeroReport, TorsionError> {
    if !src.classify().total {
        return Err(TorsionError::NotTotal);
    }
    if !dst.classify().partially_ordered {
        return Err(TorsionError::NotPartiallyOrdered);
    }
    let finite = src.group().as_finite().is_some();
    let trivial_hom_set = src.is_zero() || dst.is_zero();
    let bound = match (finite || trivial_hom_set, bound) {
        (true, _) => None,
        (false, None) => return Err(TorsionError::EnumerationUnbounded),
        (false, Some(b)) => Some(b),
    };
    let all = oracle::enumerate_pog_morphisms(src, dst, bound.unwrap_or(0));
    let counterexample = all.iter().find(|m| !m.is_zero()).cloned();
    Ok(HomZeroReport {
        holds: counterexample.is_none(),
        found: all.len(),
        bound,
        exhaustive: bound.is_none(),
        counterexample,
    })
}

/// Comparison isomorphisms between two torsion sequences over one object.
#[derive(Clone, Debug)]
pub struct ComparisonIsos {
    /// `T′ → T(P)`.
    pub t: POGMorphism,
    /// `F(P) → F′`.
    pub f: POGMorphism,
}

impl ComparisonIsos {
    pub fn both_iso(&self) -> bool {
        self.t.is_iso() && self.f.is_iso()
    }
}

pub fn uniqueness_check(p: &PreorderedGroup, alt: &SequenceCertificate) -> Result<ComparisonIsos, TorsionError> {
    let reject = |why: &str| Err(TorsionError::NotComparable(why.into()));
    if alt.kind != SequenceKind::ShortExact || !alt.holds() || !alt.recheck() {
        return reject("alternative sequence is not short exact");
    }
    if alt.k.codomain().group() != p.group() || !alt.k.codomain().cone().same_as(p.cone()) {
        return reject("alternative sequence is over another object");
    }
    if !alt.k.domain().classify().total {
        return reject("kernel is not total");
    }
    if !alt.f.codomain().classify().partially_ordered {
        return reject("cokernel is not partially ordered");
    }
    let canon = torsion_sequence(p);
    let t_map = alt.k.map().corestrict(canon.counit.map()).expect("total subobjects lie in the units");
    let t = POGMorphism::new(t_map, alt.k.domain(), &canon.torsion_part).expect("total cones");
    let Some(f_map) = factor_through_epi(canon.unit.map(), alt.f.map()) else {
        return reject("cokernel map does not kill the units");
    };
    let f = POGMorphism::new(f_map, &canon.torsion_free, alt.f.codomain()).expect("image cones");
    let isos = ComparisonIsos { t, f };
    if !isos.both_iso() {
        return reject("comparison maps are not isomorphisms");
    }
    Ok(isos)
}

/// The canonical sequence with both outer groups relabeled by reversing
/// their element order. Finite backend only.
pub fn relabeled_sequence(dec: &TorsionDecomposition) -> Option<SequenceCertificate> {
    let relabel = |obj: &PreorderedGroup| -> Option<(PreorderedGroup, GroupHom)> {
        let g = obj.group().as_finite()?;
        let n = g.order();
        let perm: Vec<usize> = (0..n).rev().collect();
        let copy: GroupObject = g.permuted(&perm).into();
        let to_orig = GroupHom::from_table(copy.clone(), obj.group().clone(), perm.clone()).ok()?;
        let cone = Cone::preimage(&to_orig, obj.cone()).ok()?;
        Some((PreorderedGroup::new(copy, cone).ok()?, to_orig))
    };
    let (t2, to_t) = relabel(&dec.torsion_part)?;
    let (f2, to_f) = relabel(&dec.torsion_free)?;
    let k = POGMorphism::new(GroupHom::compose(dec.counit.map(), &to_t), &t2, &dec.object).ok()?;
    let from_f = to_f.inverse()?;
    let f = POGMorphism::new(GroupHom::compose(&from_f, dec.unit.map()), &dec.object, &f2).ok()?;
    Some(is_short_exact(&k, &f))
}

#[derive(Clone, Debug)]
pub struct ZTrivialReport {
    pub holds: bool,
    /// `A → (f(G), {0}) → B` when the cone map is zero.
    pub factorization: Option<(POGMorphism, POGMorphism)>,
}

/// Whether `m` factors through a discrete object.
pub fn is_z_trivial(m: &POGMorphism) -> ZTrivialReport {
    let kills_cone = m.domain().cone().generators().iter().all(|p| m.codomain().group().is_identity(&m.map().apply(p)));
    if !kills_cone {
        return ZTrivialReport { holds: false, factorization: None };
    }
    let (img, inc) = m.map().image().realize();
    let mid = PreorderedGroup::discrete(img);
    let first = m.map().corestrict(&inc).expect("image contains the image");
    let first = POGMorphism::new(first, m.domain(), &mid).expect("cone goes to zero");
    let second = POGMorphism::new(inc, &mid, m.codomain()).expect("discrete source");
    ZTrivialReport { holds: true, factorization: Some((first, second)) }
}

/// Checks `k`, `f` form a short Z-preexact sequence against the default
/// oracle budget.
pub fn z_preexact_certificate(k: &POGMorphism, f: &POGMorphism) -> SequenceCertificate {
    let budget = Budget::default_for(k.domain().group());
    let composable = k.map().codomain() == f.map().domain();
    let composite = composable && is_z_trivial(&POGMorphism::compose(f, k)).holds;
    let prekernel = composable && oracle::verify_universal_property(&UniversalPropertyQuery::ZPrekernel { f, k }, &budget).holds;
    let precokernel =
        composable && oracle::verify_universal_property(&UniversalPropertyQuery::ZPrecokernel { k, q: f }, &budget).holds;
    SequenceCertificate {
        kind: SequenceKind::ZPreexact,
        k: k.clone(),
        f: f.clone(),
        checks: vec![("composite_z_trivial", composite), ("z_prekernel", prekernel), ("z_precokernel", precokernel)],
    }
}

/// `(G, N_G) → (G, P_G) → (G/N_G, P_G/N_G)`.
pub fn pretorsion_sequence(p: &PreorderedGroup) -> TorsionDecomposition {
    let (torsion_part, counit) = proto_coreflect(p);
    let (torsion_free, unit) = torsion_free_part(p);
    let certificate = z_preexact_certificate(&counit, &unit);
    TorsionDecomposition { object: p.clone(), torsion_part, torsion_free, counit, unit, certificate }
}

/// `(G, M_G)` with unit `(1_G, j)`.
pub fn proto_reflect(p: &PreorderedGroup) -> (PreorderedGroup, POGMorphism) {
    let cone = Cone::from_subgroup(&p.cone().generated_subgroup());
    let e = PreorderedGroup::new(p.group().clone(), cone).expect("subgroup cones are valid");
    let unit = POGMorphism::new(GroupHom::identity(p.group()), p, &e).expect("P lies in M");
    (e, unit)
}

/// `(G, N_G)` with counit `(1_G, i)`.
pub fn proto_coreflect(p: &PreorderedGroup) -> (PreorderedGroup, POGMorphism) {
    let cone = Cone::from_subgroup(&p.units());
    let t = PreorderedGroup::new(p.group().clone(), cone).expect("subgroup cones are valid");
    let counit = POGMorphism::new(GroupHom::identity(p.group()), &t, p).expect("N lies in P");
    (t, counit)
}

#[cfg(test)]
mod tests;
