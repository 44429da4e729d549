//! Worked examples with values re-derived independently of the library.

use num_bigint::BigInt;

use pog_core::cone::{is_special_schreier, Cone};
use pog_core::descent::{canonical_cover, is_covering, kernel_pair};
use pog_core::factor::{em_factor, in_class, ml_factor, ClassKind};
use pog_core::fixtures::*;
use pog_core::group::{quotient, smith_normal_form, FiniteGroup, GroupElement, IntMatrix, Subgroup};
use pog_core::oracle::{enumerate_cones, enumerate_pog_morphisms};
use pog_core::preord::{
    is_short_exact, morphism_class, pog_coequalizer, pog_cokernel, pog_equalizer, pog_kernel, pog_pullback,
    POGMorphism, PreorderedGroup,
};
use pog_core::torsion::{proto_coreflect, proto_reflect, torsion_sequence};

fn coords(x: &GroupElement) -> Vec<i64> {
    x.as_coords().iter().map(|c| i64::try_from(c).unwrap()).collect()
}

/// `(2ℤ, 2ℕ) → (ℤ, ℕ)` as a map out of `(ℤ, ℕ)`.
fn doubling() -> POGMorphism {
    matrix_map(&naturals(), &naturals(), &[&[2]])
}

#[test]
fn smith_form_of_two_by_two() {
    let m = IntMatrix::from_i64(&[&[2, 4], &[6, 8]]);
    let s = smith_normal_form(&m);
    assert_eq!(s.diagonal(), vec![BigInt::from(2), BigInt::from(4)]);
    // |det| is preserved: |2*8 - 4*6| = 8 = 2 * 4
    assert_eq!(m.determinant().magnitude(), BigInt::from(8).magnitude());
    assert!(s.u.is_unimodular() && s.v.is_unimodular());
}

#[test]
fn quotients() {
    let z4 = cyclic(4);
    let (q, _) = quotient(&z4, &Subgroup::new(z4.clone(), vec![GroupElement::Finite(2)])).unwrap();
    assert_eq!(q.order(), Some(BigInt::from(2)));
    let (q, proj) = quotient(&free(2), &Subgroup::new(free(2), vec![ab(&[2, 0])])).unwrap();
    assert_eq!(q.describe(), "Z x Z/2");
    assert!(proj.is_surjective());
    assert!(proj.apply(&ab(&[2, 0])) == q.identity());
    assert!(proj.apply(&ab(&[1, 0])) != q.identity());
}

#[test]
fn out_of_half_plane_variant() {
    let c = Cone::generated(free(2), vec![ab(&[2, 0]), ab(&[-1, 0]), ab(&[0, 1])]);
    // every combination has non-negative second coordinate
    for x in -4..=4 {
        assert!(!c.has(&ab(&[x, -1])));
        assert!(c.has(&ab(&[x, 1])));
    }
    assert!(c.units().equals(&Subgroup::new(free(2), vec![ab(&[1, 0])])));
}

#[test]
fn preimage_of_zero_under_parity_is_even_naturals() {
    let f = mod2();
    let zero = Cone::trivial(f.codomain().group().clone());
    let pre = Cone::preimage(f.map(), &zero).unwrap();
    let evens = Cone::meet(naturals().cone(), &pre.generated_subgroup()).unwrap();
    for n in -6..=6 {
        assert_eq!(evens.has(&ab(&[n])), n >= 0 && n % 2 == 0, "{n}");
    }
}

#[test]
fn special_schreier_cases() {
    let total = PreorderedGroup::total(cyclic(4));
    let t = torsion_sequence(&total);
    assert!(is_special_schreier(total.cone(), t.unit.map(), 8).holds);
    let q = torsion_sequence(&z4_half());
    let r = is_special_schreier(z4_half().cone(), q.unit.map(), 8);
    assert!(r.holds && r.exhaustive);
    let r = is_special_schreier(naturals().cone(), mod2().map(), 8);
    assert!(!r.holds);
}

#[test]
fn kernels_and_cokernels() {
    let (k, inc) = pog_kernel(&mod2());
    assert!(k.classify().partially_ordered);
    assert_eq!(coords(&inc.map().apply(&ab(&[1]))).iter().map(|c| c.abs()).collect::<Vec<_>>(), vec![2]);

    let (k, inc) = pog_kernel(&second_projection());
    assert!(k.classify().total);
    assert_eq!(coords(&inc.map().apply(&k.group().generators()[0]))[1], 0);

    let (c, q) = pog_cokernel(&doubling()).unwrap();
    assert_eq!(c.group().order(), Some(BigInt::from(2)));
    assert!(c.classify().total);
    assert!(morphism_class(&q).normal_epi);

    let t = torsion_sequence(&z4_half());
    let (c, _) = pog_cokernel(&t.counit).unwrap();
    assert_eq!(c.group().order(), Some(BigInt::from(2)));
    assert!(c.classify().discrete);
}

#[test]
fn finite_limits() {
    let n = naturals();
    let neg = PreorderedGroup::discrete(free(1));
    let id = POGMorphism::identity(&neg);
    let minus = matrix_map(&neg, &neg, &[&[-1]]);
    let (e, _) = pog_equalizer(&id, &minus).unwrap();
    assert!(e.group().is_trivial());

    let f = mod2();
    let pb = pog_pullback(&f, &f).unwrap();
    let g = pb.group_pullback();
    for x in -3i64..=3 {
        for y in -3i64..=3 {
            match g.pair(&ab(&[x]), &ab(&[y])) {
                Some(p) => {
                    assert_eq!((x - y) % 2, 0);
                    assert_eq!(pb.object.cone().has(&p), x >= 0 && y >= 0);
                }
                None => assert_ne!((x - y) % 2, 0),
            }
        }
    }

    let zero = POGMorphism::zero(&n, &n);
    let (c, _) = pog_coequalizer(&zero, &doubling()).unwrap();
    assert_eq!(c.group().order(), Some(BigInt::from(2)));
    assert!(c.classify().total);
}

#[test]
fn morphism_classes() {
    assert!(morphism_class(&mod2()).normal_epi);
    assert!(morphism_class(&doubling()).normal_mono);
    let discrete = PreorderedGroup::discrete(free(1));
    let inc = matrix_map(&discrete, &naturals(), &[&[1]]);
    let c = morphism_class(&inc);
    assert!(c.mono && !c.normal_mono);

    assert!(is_short_exact(&doubling(), &mod2()).holds());
    let zero = PreorderedGroup::zero_like(&free(1));
    let to_zero = POGMorphism::zero(&naturals(), &zero);
    assert!(!is_short_exact(&inc, &to_zero).holds());
}

#[test]
fn torsion_and_protomodular_parts() {
    let t = torsion_sequence(&generated(2, &[&[1, 0], &[0, 1], &[-1, -1]]));
    assert!(t.torsion_part.classify().total && t.torsion_free.is_zero());

    let (e, _) = proto_reflect(&naturals());
    assert!(e.classify().total);
    let (e, _) = proto_reflect(&generated(2, &[&[1, 0], &[1, 1]]));
    assert!(e.cone().has(&ab(&[0, 1])) && e.cone().has(&ab(&[0, -1])));
    let (n, _) = proto_coreflect(&generated(2, &[&[2, 0], &[-1, 0], &[0, 1]]));
    assert!(n.cone().has(&ab(&[1, 0])) && !n.cone().has(&ab(&[0, 1])));
}

#[test]
fn factorizations_of_parity() {
    let f = mod2();
    let r = em_factor(&f);
    assert_eq!(r.mid.group().describe(), "Z x Z/2");
    let r = ml_factor(&f);
    assert!(r.e.is_identity() && r.m.same_as(&f));
    let p = second_projection();
    let r = ml_factor(&p);
    assert!(r.e.same_as(&p) && r.m.is_identity());
    assert!(in_class(&p, ClassKind::Eprime).holds && in_class(&p, ClassKind::E).holds);
    assert!(in_class(&f, ClassKind::Mstar).holds && !in_class(&f, ClassKind::M).holds);
}

#[test]
fn coverings_and_kernel_pairs() {
    assert!(is_covering(&mod2()));
    assert!(!is_covering(&second_projection()));
    let eq = kernel_pair(&mod2());
    assert!(eq.verify().iter().all(|(_, ok)| *ok));
    let cover = canonical_cover(&naturals());
    let scan = cover.object.scan(8);
    assert!(scan.clean());
    assert!(!cover.object.positive(&(BigInt::from(-1), ab(&[0]))));
}

#[test]
fn enumeration_counts() {
    let count = |g: FiniteGroup| enumerate_cones(&g.into()).unwrap().len();
    assert_eq!(count(FiniteGroup::cyclic(4)), 3);
    assert_eq!(count(FiniteGroup::dihedral(3)), 3);
    let total = PreorderedGroup::total(cyclic(4));
    let discrete = PreorderedGroup::discrete(cyclic(4));
    assert_eq!(enumerate_pog_morphisms(&total, &discrete, 0).len(), 1);
    let d2 = PreorderedGroup::discrete(cyclic(2));
    assert_eq!(enumerate_pog_morphisms(&d2, &PreorderedGroup::total(cyclic(2)), 0).len(), 2);
}
