//! Preordered groups `(G, P)` and their morphisms: limits, cokernels,
//! coequalizers and the normal epi/mono classification.

use std::fmt;

use thiserror::Error;

use crate::cone::{check_cone_axioms, Cone, ConeAxiomReport, ConeError, MembershipVerdict};
use crate::group::{self, GroupElement, GroupError, GroupHom, GroupObject, Subgroup};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PreordError {
    #[error("cone axioms fail: {0:?}")]
    ConeAxiomViolation(ConeAxiomReport),
    #[error("cone not preserved at generator {0}")]
    ConeNotPreserved(String),
    #[error("group mismatch: {0}")]
    GroupMismatch(String),
    #[error("image is not a normal subgroup")]
    ImageNotNormal,
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Cone(#[from] ConeError),
}

/// A group with a validated positive cone.
#[derive(Clone)]
pub struct PreorderedGroup {
    group: GroupObject,
    cone: Cone,
}

impl fmt::Debug for PreorderedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {:?})", self.group, self.cone)
    }
}

/// Non-exclusive classification flags.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Classification {
    pub total: bool,
    pub protomodular: bool,
    pub partially_ordered: bool,
    pub discrete: bool,
}

impl PreorderedGroup {
    pub fn new(group: GroupObject, cone: Cone) -> Result<Self, PreordError> {
        if cone.group() != &group {
            return Err(PreordError::GroupMismatch(format!("cone lives on {}, not {}", cone.group(), group)));
        }
        let report = check_cone_axioms(&cone);
        if !report.passed() {
            return Err(PreordError::ConeAxiomViolation(report));
        }
        Ok(PreorderedGroup { group, cone })
    }

    /// Trusted constructor for cones built from valid cones.
    pub(crate) fn from_parts(group: GroupObject, cone: Cone) -> Self {
        debug_assert!(cone.group() == &group);
        PreorderedGroup { group, cone }
    }

    pub fn total(group: GroupObject) -> Self {
        Self::from_parts(group.clone(), Cone::total(group))
    }

    pub fn discrete(group: GroupObject) -> Self {
        Self::from_parts(group.clone(), Cone::trivial(group))
    }

    /// The zero object on the backend of `like`.
    pub fn zero_like(like: &GroupObject) -> Self {
        Self::discrete(like.trivial_like())
    }

    pub fn group(&self) -> &GroupObject {
        &self.group
    }

    pub fn cone(&self) -> &Cone {
        &self.cone
    }

    pub fn units(&self) -> Subgroup {
        self.cone.units()
    }

    pub fn classify(&self) -> Classification {
        let units = self.cone.units();
        let discrete = self.cone.is_trivial();
        Classification {
            total: self.cone.is_total(),
            protomodular: self.cone.is_group(),
            partially_ordered: units.is_trivial(),
            discrete,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.group.is_trivial()
    }

    pub fn describe(&self) -> String {
        match self.cone.size() {
            Some(n) => format!("({}, cone of size {n})", self.group.describe()),
            None => {
                let gens: Vec<String> = self.cone.generators().iter().map(|x| self.group.format_element(x)).collect();
                format!("({}, <{}>)", self.group.describe(), gens.join(", "))
            }
        }
    }
}

/// A group homomorphism carrying the positive cone into the positive cone,
/// with one membership verdict per domain-cone generator.
#[derive(Clone)]
pub struct POGMorphism {
    dom: PreorderedGroup,
    cod: PreorderedGroup,
    map: GroupHom,
    certificate: Vec<(GroupElement, MembershipVerdict)>,
}

impl fmt::Debug for POGMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.dom.describe(), self.cod.describe())
    }
}

impl POGMorphism {
    pub fn new(map: GroupHom, dom: &PreorderedGroup, cod: &PreorderedGroup) -> Result<Self, PreordError> {
        if map.domain() != dom.group() || map.codomain() != cod.group() {
            return Err(PreordError::GroupMismatch("map does not match the objects".into()));
        }
        let mut certificate = Vec::new();
        for p in dom.cone.generators() {
            let image = map.apply(&p);
            let v = cod.cone.contains(&image);
            if !v.is_in() {
                return Err(PreordError::ConeNotPreserved(dom.group.format_element(&p)));
            }
            certificate.push((p, v));
        }
        Ok(POGMorphism { dom: dom.clone(), cod: cod.clone(), map, certificate })
    }

    /// For maps that preserve cones by construction.
    pub(crate) fn built(map: GroupHom, dom: &PreorderedGroup, cod: &PreorderedGroup) -> Self {
        Self::new(map, dom, cod).expect("constructed map preserves cones")
    }

    pub fn identity(p: &PreorderedGroup) -> Self {
        Self::built(GroupHom::identity(&p.group), p, p)
    }

    pub fn zero(dom: &PreorderedGroup, cod: &PreorderedGroup) -> Self {
        Self::built(GroupHom::zero(&dom.group, &cod.group), dom, cod)
    }

    pub fn compose(g: &POGMorphism, f: &POGMorphism) -> POGMorphism {
        Self::built(GroupHom::compose(&g.map, &f.map), &f.dom, &g.cod)
    }

    pub fn domain(&self) -> &PreorderedGroup {
        &self.dom
    }

    pub fn codomain(&self) -> &PreorderedGroup {
        &self.cod
    }

    pub fn map(&self) -> &GroupHom {
        &self.map
    }

    pub fn certificate(&self) -> &[(GroupElement, MembershipVerdict)] {
        &self.certificate
    }

    /// Re-verifies every stored verdict.
    pub fn recheck(&self) -> bool {
        self.certificate.iter().all(|(p, v)| {
            let image = self.map.apply(p);
            self.cod.cone.verify_witness(&image, v)
        })
    }

    pub fn is_zero(&self) -> bool {
        self.map.is_zero()
    }

    pub fn is_identity(&self) -> bool {
        self.map.is_identity()
    }

    /// Same underlying group map between the same groups.
    pub fn same_as(&self, other: &POGMorphism) -> bool {
        self.map == other.map
    }

    /// Whether the cone map is surjective onto the codomain cone.
    pub fn cone_surjective(&self) -> bool {
        self.cone_lift_failure().is_none()
    }

    /// A codomain-cone generator with no positive preimage.
    fn cone_lift_failure(&self) -> Option<GroupElement> {
        if !self.map.is_surjective() {
            return self.cod.cone.generators().into_iter().find(|y| self.map.preimage(y).is_none());
        }
        let image = Cone::image(&self.map, &self.dom.cone).expect("surjective");
        self.cod.cone.generators().into_iter().find(|y| !image.has(y))
    }

    /// A domain element outside the cone whose image is positive.
    fn reflection_failure(&self) -> Option<GroupElement> {
        let pre = Cone::preimage(&self.map, &self.cod.cone).expect("matching groups");
        pre.generators().into_iter().find(|x| !self.dom.cone.has(x))
    }

    pub fn is_iso(&self) -> bool {
        self.map.is_bijective() && self.cone_surjective()
    }

    pub fn inverse(&self) -> Option<POGMorphism> {
        if !self.is_iso() {
            return None;
        }
        let inv = self.map.inverse()?;
        Some(Self::built(inv, &self.cod, &self.dom))
    }
}

/// Mono/epi/normal classification with witnesses on failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismClassReport {
    pub mono: bool,
    pub epi: bool,
    pub normal_mono: bool,
    pub normal_epi: bool,
    pub effective_descent: bool,
    /// Non-zero kernel element when not mono.
    pub kernel_witness: Option<GroupElement>,
    /// Codomain element outside the image when not epi.
    pub image_witness: Option<GroupElement>,
    /// Positive codomain element with no positive preimage.
    pub cone_lift_witness: Option<GroupElement>,
    /// Non-positive domain element with positive image.
    pub reflection_witness: Option<GroupElement>,
}

pub fn morphism_class(m: &POGMorphism) -> MorphismClassReport {
    let kernel = m.map.kernel_subgroup();
    let mono = kernel.is_trivial();
    let image_witness = m.cod.group.generators().into_iter().find(|y| m.map.preimage(y).is_none());
    let epi = image_witness.is_none();
    let cone_lift_witness = if epi { m.cone_lift_failure() } else { None };
    let normal_epi = epi && cone_lift_witness.is_none();
    let reflection_witness = if mono { m.reflection_failure() } else { None };
    let normal_mono = mono && m.map.image().is_normal() && reflection_witness.is_none();
    MorphismClassReport {
        mono,
        epi,
        normal_mono,
        normal_epi,
        effective_descent: normal_epi,
        kernel_witness: kernel.generators().first().cloned(),
        image_witness,
        cone_lift_witness,
        reflection_witness,
    }
}

/// Kernel with the cone `K ∩ P`.
pub fn pog_kernel(m: &POGMorphism) -> (PreorderedGroup, POGMorphism) {
    let (k, inc) = m.map.kernel();
    let cone = Cone::preimage(&inc, &m.dom.cone).expect("matching groups");
    let obj = PreorderedGroup::from_parts(k, cone);
    let inc = POGMorphism::built(inc, &obj, &m.dom);
    (obj, inc)
}

/// Cokernel: quotient by the normal closure of the image, with image cone.
pub fn pog_cokernel(m: &POGMorphism) -> Result<(PreorderedGroup, POGMorphism), PreordError> {
    let image = m.map.image();
    if !image.is_normal() {
        return Err(PreordError::ImageNotNormal);
    }
    Ok(quotient_object(&m.cod, &image))
}

/// The map `d` with `d ∘ q = h` for surjective `q`, when `h` is constant
/// on the fibres of `q`.
pub fn factor_through_epi(q: &GroupHom, h: &GroupHom) -> Option<GroupHom> {
    let images: Option<Vec<GroupElement>> =
        q.codomain().generators().iter().map(|y| q.preimage(y).map(|x| h.apply(&x))).collect();
    let d = GroupHom::from_generator_images(q.codomain().clone(), h.codomain().clone(), &images?).ok()?;
    (GroupHom::compose(&d, q) == *h).then_some(d)
}

/// `(G/N, q(P))` with its projection.
pub fn quotient_object(p: &PreorderedGroup, n: &Subgroup) -> (PreorderedGroup, POGMorphism) {
    let (q, proj) = group::quotient(&p.group, n).expect("normal subgroup");
    let cone = Cone::image(&proj, &p.cone).expect("projection is surjective");
    let obj = PreorderedGroup::from_parts(q, cone);
    let proj = POGMorphism::built(proj, p, &obj);
    (obj, proj)
}

#[derive(Clone, Debug)]
pub struct PogProduct {
    pub object: PreorderedGroup,
    pub p1: POGMorphism,
    pub p2: POGMorphism,
    group: group::GroupProduct,
}

impl PogProduct {
    pub fn mediate(&self, f: &POGMorphism, g: &POGMorphism) -> POGMorphism {
        let map = GroupHom::add(
            &GroupHom::compose(&self.group.i1, &f.map),
            &GroupHom::compose(&self.group.i2, &g.map),
        );
        POGMorphism::built(map, &f.dom, &self.object)
    }
}

pub fn pog_product(a: &PreorderedGroup, b: &PreorderedGroup) -> Result<PogProduct, PreordError> {
    let prod = group::product(&a.group, &b.group)?;
    let cone = Cone::product(&a.cone, &b.cone, &prod)?;
    let object = PreorderedGroup::from_parts(prod.object.clone(), cone);
    let p1 = POGMorphism::built(prod.p1.clone(), &object, a);
    let p2 = POGMorphism::built(prod.p2.clone(), &object, b);
    Ok(PogProduct { object, p1, p2, group: prod })
}

#[derive(Clone, Debug)]
pub struct PogPullback {
    pub object: PreorderedGroup,
    pub p1: POGMorphism,
    pub p2: POGMorphism,
    group: group::GroupPullback,
}

impl PogPullback {
    /// The mediating morphism for `f ∘ alpha = g ∘ gamma`.
    pub fn mediate(&self, alpha: &POGMorphism, gamma: &POGMorphism) -> Option<POGMorphism> {
        let map = self.group.mediate(&alpha.map, &gamma.map)?;
        POGMorphism::new(map, &alpha.dom, &self.object).ok()
    }

    pub fn group_pullback(&self) -> &group::GroupPullback {
        &self.group
    }
}

pub fn pog_pullback(f: &POGMorphism, g: &POGMorphism) -> Result<PogPullback, PreordError> {
    let pb = group::pullback(&f.map, &g.map)?;
    let cone = Cone::pullback(&f.dom.cone, &g.dom.cone, &pb)?;
    let object = PreorderedGroup::from_parts(pb.object.clone(), cone);
    let p1 = POGMorphism::built(pb.p1.clone(), &object, &f.dom);
    let p2 = POGMorphism::built(pb.p2.clone(), &object, &g.dom);
    Ok(PogPullback { object, p1, p2, group: pb })
}

pub fn pog_equalizer(f: &POGMorphism, g: &POGMorphism) -> Result<(PreorderedGroup, POGMorphism), PreordError> {
    if f.map.domain() != g.map.domain() || f.map.codomain() != g.map.codomain() {
        return Err(PreordError::GroupMismatch("maps are not parallel".into()));
    }
    let (e, inc) = group::equalizer(&f.map, &g.map);
    let cone = Cone::preimage(&inc, &f.dom.cone)?;
    let obj = PreorderedGroup::from_parts(e, cone);
    let inc = POGMorphism::built(inc, &obj, &f.dom);
    Ok((obj, inc))
}

pub fn pog_coequalizer(f: &POGMorphism, g: &POGMorphism) -> Result<(PreorderedGroup, POGMorphism), PreordError> {
    if f.map.domain() != g.map.domain() || f.map.codomain() != g.map.codomain() {
        return Err(PreordError::GroupMismatch("maps are not parallel".into()));
    }
    let (q, proj) = group::coequalizer(&f.map, &g.map);
    let cone = Cone::image(&proj, &f.cod.cone)?;
    let obj = PreorderedGroup::from_parts(q, cone);
    let proj = POGMorphism::built(proj, &f.cod, &obj);
    Ok((obj, proj))
}

/// Limit request for [`pog_limit`].
#[derive(Clone, Copy, Debug)]
pub enum LimitRequest<'a> {
    Product(&'a PreorderedGroup, &'a PreorderedGroup),
    Pullback(&'a POGMorphism, &'a POGMorphism),
    Equalizer(&'a POGMorphism, &'a POGMorphism),
}

/// A limit object with its projections (one for an equalizer).
#[derive(Clone, Debug)]
pub struct Limit {
    pub object: PreorderedGroup,
    pub projections: Vec<POGMorphism>,
}

pub fn pog_limit(req: LimitRequest<'_>) -> Result<Limit, PreordError> {
    match req {
        LimitRequest::Product(a, b) => {
            let p = pog_product(a, b)?;
            Ok(Limit { object: p.object, projections: vec![p.p1, p.p2] })
        }
        LimitRequest::Pullback(f, g) => {
            let p = pog_pullback(f, g)?;
            Ok(Limit { object: p.object, projections: vec![p.p1, p.p2] })
        }
        LimitRequest::Equalizer(f, g) => {
            let (object, e) = pog_equalizer(f, g)?;
            Ok(Limit { object, projections: vec![e] })
        }
    }
}

/// Whether the square `top: A → B`, `left: A → C`, `right: B → D`,
/// `bottom: C → D` (commuting) is a pullback.
pub fn is_pullback_square(top: &POGMorphism, left: &POGMorphism, right: &POGMorphism, bottom: &POGMorphism) -> bool {
    let commutes = GroupHom::compose(&right.map, &top.map) == GroupHom::compose(&bottom.map, &left.map);
    if !commutes {
        return false;
    }
    let Ok(pb) = pog_pullback(right, bottom) else {
        return false;
    };
    pb.mediate(top, left).is_some_and(|c| c.is_iso())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SequenceKind {
    ShortExact,
    ZPreexact,
}

/// A checked sequence `K → A → Q` with the outcome of each check.
#[derive(Clone, Debug)]
pub struct SequenceCertificate {
    pub kind: SequenceKind,
    pub k: POGMorphism,
    pub f: POGMorphism,
    pub checks: Vec<(&'static str, bool)>,
}

impl SequenceCertificate {
    pub fn holds(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }

    /// Recomputes every check from the stored arrows.
    pub fn recheck(&self) -> bool {
        let fresh = match self.kind {
            SequenceKind::ShortExact => is_short_exact(&self.k, &self.f),
            SequenceKind::ZPreexact => crate::torsion::z_preexact_certificate(&self.k, &self.f),
        };
        fresh.checks == self.checks
    }
}

/// Short exactness: exact at group level, the kernel square is a pullback
/// and the cone map of `f` is surjective.
pub fn is_short_exact(k: &POGMorphism, f: &POGMorphism) -> SequenceCertificate {
    let composable = k.map.codomain() == f.map.domain();
    let composite_zero = composable && GroupHom::compose(&f.map, &k.map).is_zero();
    let kc = morphism_class(k);
    let fc = morphism_class(f);
    let exact_middle = composite_zero && f.map.kernel_subgroup().equals(&k.map.image());
    SequenceCertificate {
        kind: SequenceKind::ShortExact,
        k: k.clone(),
        f: f.clone(),
        checks: vec![
            ("composite_zero", composite_zero),
            ("kernel_injective", kc.mono),
            ("exact_in_middle", exact_middle),
            ("quotient_surjective", fc.epi),
            ("kernel_square_pullback", kc.normal_mono),
            ("cone_map_surjective", fc.normal_epi),
        ],
    }
}

#[cfg(test)]
mod tests;
