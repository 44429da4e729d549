use super::*;
use crate::fixtures::*;
use crate::group::FgAbGroup;

#[test]
fn torsion_sequence_examples() {
    let t = torsion_sequence(&naturals());
    assert!(t.torsion_part.is_zero());
    assert!(t.unit.is_iso());
    assert!(t.certificate.holds());

    let t = torsion_sequence(&z4_half());
    assert_eq!(t.torsion_part.group().order(), Some(2.into()));
    assert!(t.torsion_part.classify().total);
    assert_eq!(t.torsion_free.group().order(), Some(2.into()));
    assert_eq!(t.torsion_free.cone().size(), Some(1));
    assert!(t.certificate.holds() && t.certificate.recheck());

    let t = torsion_sequence(&generated(2, &[&[1, 0], &[0, 1], &[-1, -1]]));
    assert!(t.torsion_part.classify().total);
    assert_eq!(t.torsion_part.group(), &free(2));
    assert!(t.torsion_free.is_zero());
}

#[test]
fn reflect_examples() {
    let n = naturals();
    assert!(reflect_f(&POGMorphism::identity(&n)).is_identity());
    let f = reflect_f(&mod2());
    assert!(f.is_zero() && f.codomain().is_zero());
    assert!(f.domain().cone().same_as(n.cone()));
    let z = PreorderedGroup::total(free(1));
    let f = reflect_f(&matrix_map(&z, &z, &[&[2]]));
    assert!(f.domain().is_zero() && f.codomain().is_zero());
}

#[test]
fn coreflect_examples() {
    let t = coreflect_t(&mod2());
    assert!(t.domain().is_zero());
    assert_eq!(t.codomain().group().order(), Some(2.into()));
    assert!(coreflect_t(&POGMorphism::identity(&naturals())).is_identity());
    let total = PreorderedGroup::total(cyclic(4));
    let t = coreflect_t(&table_map(&z4_half(), &total, &[0, 1, 2, 3]));
    assert!(t.map().is_injective());
    assert_eq!(t.domain().group().order(), Some(2.into()));
    assert_eq!(t.codomain().group().order(), Some(4.into()));
}

#[test]
fn hom_torsion_to_free() {
    let total = PreorderedGroup::total(cyclic(4));
    let discrete = PreorderedGroup::discrete(cyclic(4));
    let r = hom_torsion_to_free_is_zero(&total, &discrete, None).unwrap();
    assert!(r.holds && r.exhaustive);
    assert_eq!(r.found, 1);

    let z = PreorderedGroup::total(free(1));
    let r = hom_torsion_to_free_is_zero(&z, &naturals(), Some(10)).unwrap();
    assert!(r.holds && !r.exhaustive);
    assert_eq!(r.bound, Some(10));
    assert_eq!(r.found, 1);
    assert_eq!(hom_torsion_to_free_is_zero(&z, &naturals(), None).unwrap_err(), TorsionError::EnumerationUnbounded);

    let zero = PreorderedGroup::zero_like(&free(1));
    assert!(hom_torsion_to_free_is_zero(&zero, &naturals(), None).unwrap().holds);
    assert_eq!(hom_torsion_to_free_is_zero(&naturals(), &naturals(), None).unwrap_err(), TorsionError::NotTotal);
}

#[test]
fn uniqueness_examples() {
    let p = z4_half();
    let canon = torsion_sequence(&p);
    let isos = uniqueness_check(&p, &canon.certificate).unwrap();
    assert!(isos.t.is_identity() && isos.f.is_identity());

    let alt = relabeled_sequence(&canon).unwrap();
    let isos = uniqueness_check(&p, &alt).unwrap();
    assert!(isos.both_iso());
    assert!(!isos.t.is_identity());

    // a short exact sequence whose kernel is not total
    let f = mod2();
    let (_, k) = crate::preord::pog_kernel(&f);
    let alt = is_short_exact(&k, &f);
    assert!(alt.holds());
    assert!(matches!(uniqueness_check(&naturals(), &alt), Err(TorsionError::NotComparable(_))));
}

#[test]
fn z_trivial_examples() {
    let n = naturals();
    assert!(is_z_trivial(&POGMorphism::zero(&n, &n)).holds);
    let total = PreorderedGroup::total(cyclic(4));
    let target = PreorderedGroup::discrete(cyclic(2));
    let m = table_map(&total, &target, &[0, 0, 0, 0]);
    let r = is_z_trivial(&m);
    let (a, b) = r.factorization.unwrap();
    assert!(a.codomain().classify().discrete);
    assert!(POGMorphism::compose(&b, &a).same_as(&m));
    assert!(!is_z_trivial(&POGMorphism::identity(&n)).holds);
}

#[test]
fn pretorsion_examples() {
    let t = pretorsion_sequence(&z4_half());
    assert!(t.torsion_part.cone().same_as(z4_half().cone()));
    assert_eq!(t.torsion_free.cone().size(), Some(1));
    assert!(t.certificate.holds());
    assert!(t.certificate.recheck());

    let t = pretorsion_sequence(&naturals());
    assert!(t.torsion_part.classify().discrete);
    assert!(t.unit.is_iso());
    assert!(t.certificate.holds());

    let t = pretorsion_sequence(&PreorderedGroup::total(free(1)));
    assert!(t.torsion_part.classify().total);
    assert!(t.torsion_free.is_zero());
    assert!(t.certificate.holds());
}

#[test]
fn proto_reflect_examples() {
    let (e, unit) = proto_reflect(&naturals());
    assert!(e.classify().total);
    assert!(unit.map().is_identity());
    let d = PreorderedGroup::discrete(free(1));
    assert!(proto_reflect(&d).0.classify().discrete);
    assert!(proto_reflect(&generated(2, &[&[1, 0], &[1, 1]])).0.classify().total);
}

#[test]
fn proto_coreflect_examples() {
    assert!(proto_coreflect(&naturals()).0.classify().discrete);
    assert!(proto_coreflect(&z4_half()).0.cone().same_as(z4_half().cone()));
    let (t, counit) = proto_coreflect(&generated(2, &[&[2, 0], &[-1, 0], &[0, 1]]));
    assert!(t.cone().has(&ab(&[5, 0])) && t.cone().has(&ab(&[-3, 0])));
    assert!(!t.cone().has(&ab(&[0, 1])));
    assert!(counit.map().is_identity());
}

#[test]
fn reflection_units_are_normal_epis() {
    for p in [naturals(), z4_half(), half_plane(), PreorderedGroup::total(FgAbGroup::cyclic(6).into())] {
        let t = torsion_sequence(&p);
        assert!(crate::preord::morphism_class(&t.unit).normal_epi);
        assert!(crate::preord::morphism_class(&t.counit).normal_mono);
        let (ff, _) = torsion_free_part(&t.torsion_free);
        assert_eq!(ff.group().describe(), t.torsion_free.group().describe());
    }
}
