use super::*;
use crate::fixtures::*;
use crate::preord::morphism_class;

fn el(n: i64, g: GroupElement) -> VirtualElement {
    (BigInt::from(n), g)
}

#[test]
fn cover_predicate() {
    let p = PreorderedGroup::total(cyclic_ab(2));
    let v = VirtualPOG::new(&p);
    assert!(v.positive(&el(1, ab(&[1]))));
    assert!(!v.positive(&el(0, ab(&[1]))));
    assert!(!v.positive(&el(-1, ab(&[0]))));
    assert!(v.positive(&el(0, ab(&[0]))));
}

#[test]
fn cover_is_reduced_on_window() {
    let cover = canonical_cover(&PreorderedGroup::total(cyclic_ab(2)));
    let x = el(1, ab(&[0]));
    assert!(cover.object.positive(&x));
    assert!(!cover.object.positive(&cover.object.neg(&x)));
    let scan = cover.object.scan(8);
    assert!(scan.clean());
    assert!(scan.positives > 0);
}

#[test]
fn cover_projection_is_normal_epi() {
    let n = naturals();
    let cover = canonical_cover(&n);
    assert_eq!(cover.lift_positive(&ab(&[7])), Some(el(1, ab(&[7]))));
    assert_eq!(cover.lift_positive(&ab(&[-7])), None);
    assert!(cover.certify(4).normal_epi());
    let (g, proj) = cover.realization.as_ref().unwrap();
    assert_eq!(g.describe(), "Z^2");
    assert!(proj.is_surjective());

    let s3 = crate::fixtures::finite(crate::group::FiniteGroup::dihedral(3), &[0, 1, 2]);
    let cover = canonical_cover(&s3);
    assert!(cover.realization.is_none());
    let c = cover.certify(2);
    assert!(c.normal_epi() && c.scan.clean());
}

#[test]
fn kernel_pair_examples() {
    let n = naturals();
    let eq = kernel_pair(&POGMorphism::identity(&n));
    assert!(eq.verify().iter().all(|(_, ok)| *ok));
    assert!(eq.r1.is_iso());

    let f = mod2();
    let eq = kernel_pair(&f);
    assert!(eq.verify().iter().all(|(_, ok)| *ok));
    let pair = |a, b| crate::group::pullback(f.map(), f.map()).unwrap().pair(&ab(&[a]), &ab(&[b]));
    assert!(pair(1, 2).is_none());
    assert!(eq.carrier.cone().has(&pair(1, 3).unwrap()));
    assert!(!eq.carrier.cone().has(&pair(-1, 3).unwrap()));

    let zero = POGMorphism::zero(&n, &PreorderedGroup::zero_like(n.group()));
    let eq = kernel_pair(&zero);
    assert_eq!(eq.carrier.group().describe(), "Z^2");
    assert!(eq.carrier.classify().partially_ordered);
    assert!(eq.verify().iter().all(|(_, ok)| *ok));
}

#[test]
fn discrete_fibration_examples() {
    let f = mod2();
    let eq = kernel_pair(&f);
    let id1 = POGMorphism::identity(&eq.carrier);
    let id0 = POGMorphism::identity(f.domain());
    assert!(is_discrete_fibration(&id1, &id0, &eq, &eq).holds());

    // kernel pair of a pullback of mod-2 along itself, over the kernel pair of mod-2
    let pb = crate::preord::pog_pullback(&f, &f).unwrap();
    let eq_top = kernel_pair(&pb.p2);
    let through = |r: &POGMorphism| POGMorphism::compose(&pb.p1, r);
    let f1 = pog_pullback(&f, &f).unwrap().mediate(&through(&eq_top.r1), &through(&eq_top.r2)).unwrap();
    let f1 = POGMorphism::new(f1.map().clone(), &eq_top.carrier, &eq.carrier).unwrap();
    let r = is_discrete_fibration(&f1, &pb.p1, &eq_top, &eq);
    assert!(r.holds(), "{r:?}");

    let n = naturals();
    let eq_zero = kernel_pair(&POGMorphism::zero(&n, &PreorderedGroup::zero_like(n.group())));
    let eq_id = kernel_pair(&POGMorphism::identity(&n));
    let collapse = POGMorphism::compose(&eq_id.delta, &eq_zero.r1);
    let r = is_discrete_fibration(&collapse, &POGMorphism::identity(&n), &eq_zero, &eq_id);
    assert!(!r.holds());
}

#[test]
fn covering_examples() {
    assert!(is_covering(&mod2()));
    assert!(!is_covering(&second_projection()));
    assert!(is_covering(&POGMorphism::identity(&naturals())));
}

#[test]
fn covering_along_examples() {
    let f = mod2();
    let cover = canonical_cover(f.codomain());
    assert!(is_covering_along_cover(&f, &cover));
    let id = POGMorphism::identity(&naturals());
    assert!(is_covering_along(&id, &POGMorphism::identity(&naturals())));
    assert!(is_covering_along(&id, &mod2_domain_cover()));
    let p = second_projection();
    assert!(!is_covering_along(&p, &POGMorphism::identity(p.codomain())));
    assert!(!is_covering_along_cover(&p, &canonical_cover(p.codomain())));
}

/// `(ℤ², ℕ × ℕ) → (ℤ, ℕ)`, a normal epi with reduced domain.
fn mod2_domain_cover() -> POGMorphism {
    let src = generated(2, &[&[1, 0], &[0, 1]]);
    let m = matrix_map(&src, &naturals(), &[&[1, 0]]);
    assert!(morphism_class(&m).normal_epi);
    m
}
