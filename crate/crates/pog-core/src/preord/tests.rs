use super::*;
use crate::cone::ConeAxiomReport;
use crate::fixtures::*;
use crate::group::FiniteGroup;

#[test]
fn make_pog_examples() {
    assert!(naturals().classify().partially_ordered);
    let s3 = FiniteGroup::dihedral(3);
    let r = s3.index_of("r").unwrap();
    let g: GroupObject = s3.into();
    let bad = Cone::explicit(g.clone(), &[GroupElement::Finite(0), GroupElement::Finite(r)]);
    assert_eq!(
        PreorderedGroup::new(g, bad).unwrap_err(),
        PreordError::ConeAxiomViolation(ConeAxiomReport::NotClosed(GroupElement::Finite(r), GroupElement::Finite(r)))
    );
    let _ = z4_half();
}

#[test]
fn classify_examples() {
    let c = naturals().classify();
    assert_eq!(c, Classification { partially_ordered: true, ..Default::default() });
    let c = PreorderedGroup::total(free(1)).classify();
    assert!(c.total && c.protomodular && !c.partially_ordered && !c.discrete);
    let c = z4_half().classify();
    assert!(c.protomodular && !c.partially_ordered && !c.total);
    let c = PreorderedGroup::discrete(free(2)).classify();
    assert!(c.discrete && c.protomodular && c.partially_ordered);
}

#[test]
fn morphism_construction() {
    let n = naturals();
    assert!(POGMorphism::identity(&n).recheck());
    let total = PreorderedGroup::total(free(1));
    let err = POGMorphism::new(GroupHom::identity(&free(1)), &total, &n).unwrap_err();
    assert_eq!(err, PreordError::ConeNotPreserved("(-1)".into()));
    assert!(mod2().recheck());
}

#[test]
fn kernel_examples() {
    let (k, inc) = pog_kernel(&mod2());
    assert!(k.classify().partially_ordered);
    assert!(inc.codomain().cone().has(&inc.map().apply(&k.cone().generators()[0])));
    let img: Vec<_> = k.cone().generators().iter().map(|x| inc.map().apply(x)).collect();
    assert_eq!(img, vec![ab(&[2])]);

    let (k, _) = pog_kernel(&POGMorphism::identity(&naturals()));
    assert!(k.is_zero());

    let (k, inc) = pog_kernel(&second_projection());
    assert!(k.classify().total);
    assert_eq!(inc.map().image(), crate::group::Subgroup::new(free(2), vec![ab(&[1, 0])]));
    assert!(morphism_class(&inc).normal_mono);
}

#[test]
fn cokernel_examples() {
    let (_, inc) = pog_kernel(&mod2());
    let (q, proj) = pog_cokernel(&inc).unwrap();
    assert_eq!(q.group().order(), Some(2.into()));
    assert!(q.classify().total);
    assert!(morphism_class(&proj).normal_epi);

    let x = naturals();
    let zero = POGMorphism::zero(&PreorderedGroup::zero_like(x.group()), &x);
    let (q, proj) = pog_cokernel(&zero).unwrap();
    assert!(proj.is_iso());
    assert!(q.cone().same_as(x.cone()));

    let z2 = PreorderedGroup::total(cyclic(2));
    let inc = table_map(&z2, &z4_half(), &[0, 2]);
    let (q, _) = pog_cokernel(&inc).unwrap();
    assert_eq!(q.group().order(), Some(2.into()));
    assert!(q.classify().discrete);
}

#[test]
fn cokernel_rejects_non_normal_image() {
    let s3 = FiniteGroup::dihedral(3);
    let s = s3.index_of("s").unwrap();
    let sub = PreorderedGroup::discrete(cyclic(2));
    let target = PreorderedGroup::discrete(s3.into());
    let inc = table_map(&sub, &target, &[0, s]);
    assert_eq!(pog_cokernel(&inc).unwrap_err(), PreordError::ImageNotNormal);
}

#[test]
fn limit_examples() {
    let n = naturals();
    let p = pog_product(&n, &n).unwrap();
    assert!(p.object.classify().partially_ordered);
    assert!(p.object.cone().has(&ab(&[2, 3])));
    assert!(!p.object.cone().has(&ab(&[-1, 3])));
    assert!(p.mediate(&POGMorphism::identity(&n), &POGMorphism::identity(&n)).recheck());

    let neg = matrix_map(&PreorderedGroup::total(free(1)), &PreorderedGroup::total(free(1)), &[&[-1]]);
    let id = POGMorphism::identity(&PreorderedGroup::total(free(1)));
    let (e, _) = pog_equalizer(&id, &neg).unwrap();
    assert!(e.is_zero());

    let f = mod2();
    let pb = pog_pullback(&f, &f).unwrap();
    let x = pb.group_pullback().pair(&ab(&[1]), &ab(&[3])).unwrap();
    assert!(pb.object.cone().has(&x));
    assert!(pb.group_pullback().pair(&ab(&[1]), &ab(&[2])).is_none());
    let y = pb.group_pullback().pair(&ab(&[-1]), &ab(&[1])).unwrap();
    assert!(!pb.object.cone().has(&y));
}

#[test]
fn coequalizer_examples() {
    let n = naturals();
    let id = POGMorphism::identity(&n);
    let (q, _) = pog_coequalizer(&id, &id).unwrap();
    assert!(q.cone().same_as(n.cone()));

    let zero = POGMorphism::zero(&n, &n);
    let double = matrix_map(&n, &n, &[&[2]]);
    let (q, proj) = pog_coequalizer(&zero, &double).unwrap();
    assert_eq!(q.group().order(), Some(2.into()));
    assert!(q.classify().total);
    assert!(morphism_class(&proj).normal_epi);

    let (q, proj) = pog_coequalizer(&zero, &zero).unwrap();
    assert!(proj.is_iso());
    assert!(q.cone().same_as(n.cone()));
}

#[test]
fn class_examples() {
    let c = morphism_class(&mod2());
    assert!(c.normal_epi && c.effective_descent && !c.mono);

    let (_, inc) = pog_kernel(&mod2());
    let c = morphism_class(&inc);
    assert!(c.normal_mono && !c.epi);

    let d = PreorderedGroup::discrete(free(1));
    let m = POGMorphism::new(GroupHom::identity(&free(1)), &d, &naturals()).unwrap();
    let c = morphism_class(&m);
    assert!(c.mono && !c.normal_mono);
    assert_eq!(c.reflection_witness, Some(ab(&[1])));
    assert!(c.epi && !c.normal_epi);
}

#[test]
fn short_exact_examples() {
    let f = mod2();
    let (_, k) = pog_kernel(&f);
    let cert = is_short_exact(&k, &f);
    assert!(cert.holds());
    assert!(cert.recheck());

    let d = PreorderedGroup::discrete(free(1));
    let k = POGMorphism::new(GroupHom::identity(&free(1)), &d, &naturals()).unwrap();
    let f = POGMorphism::zero(&naturals(), &PreorderedGroup::zero_like(&free(1)));
    let cert = is_short_exact(&k, &f);
    assert!(!cert.holds());
    assert!(cert.checks.contains(&("kernel_square_pullback", false)));

    let x = z4_half();
    let k = POGMorphism::zero(&PreorderedGroup::zero_like(x.group()), &x);
    assert!(is_short_exact(&k, &POGMorphism::identity(&x)).holds());
}

#[test]
fn pullback_square_detection() {
    let f = mod2();
    let pb = pog_pullback(&f, &f).unwrap();
    assert!(is_pullback_square(&pb.p1, &pb.p2, &f, &f));
    let n = naturals();
    let id = POGMorphism::identity(&n);
    assert!(!is_pullback_square(&id, &id, &f, &f));
}
