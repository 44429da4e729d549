use super::*;
use crate::fixtures::*;
use crate::group::FiniteGroup;
use crate::preord::{pog_coequalizer, pog_cokernel, pog_equalizer, pog_kernel, pog_product, pog_pullback};
use crate::torsion::{proto_reflect, torsion_sequence};

fn sizes(g: FiniteGroup) -> Vec<usize> {
    enumerate_cones(&g.into()).unwrap().iter().map(|c| c.size().unwrap()).collect()
}

#[test]
fn cone_enumeration() {
    assert_eq!(sizes(FiniteGroup::cyclic(4)), vec![1, 2, 4]);
    assert_eq!(sizes(FiniteGroup::dihedral(3)), vec![1, 3, 6]);
    assert_eq!(sizes(FiniteGroup::cyclic(1)), vec![1]);
    assert!(enumerate_cones(&free(1)).is_none());
}

#[test]
fn cones_are_normal_subgroups() {
    for (_, g) in finite_corpus_groups() {
        let obj: GroupObject = g.clone().into();
        let cones = enumerate_cones(&obj).unwrap();
        let normal = (0u64..1 << g.order())
            .map(|bits| (0..g.order()).map(|i| bits >> i & 1 == 1).collect::<Vec<bool>>())
            .filter(|m| g.is_subgroup(m) && g.is_normal(m))
            .count();
        assert_eq!(cones.len(), normal);
        assert!(cones.iter().all(|c| crate::cone::check_cone_axioms(c).passed() && c.is_group()));
        let again = enumerate_cones(&obj).unwrap();
        assert!(cones.iter().zip(&again).all(|(a, b)| a.mask() == b.mask()));
    }
}

#[test]
fn morphism_enumeration() {
    let total = PreorderedGroup::total(cyclic(4));
    let discrete = PreorderedGroup::discrete(cyclic(4));
    assert_eq!(enumerate_pog_morphisms(&total, &discrete, 0).len(), 1);
    let d2 = PreorderedGroup::discrete(cyclic(2));
    let t2 = PreorderedGroup::total(cyclic(2));
    assert_eq!(enumerate_pog_morphisms(&d2, &t2, 0).len(), 2);
    let p = z4_half();
    assert!(enumerate_pog_morphisms(&p, &p, 0).iter().any(|m| m.is_identity()));

    let n = naturals();
    let ms = enumerate_pog_morphisms(&n, &n, 3);
    assert_eq!(ms.len(), 4);
    let to_z2 = enumerate_pog_morphisms(&n, &PreorderedGroup::total(cyclic_ab(2)), 3);
    assert_eq!(to_z2.len(), 2);
}

#[test]
fn universal_property_examples() {
    let budget = Budget::finite(4);
    let z2 = PreorderedGroup::discrete(cyclic(2));
    let f = table_map(&z4_half(), &z2, &[0, 1, 0, 1]);
    let (_, k) = pog_kernel(&f);
    let r = verify_universal_property(&UniversalPropertyQuery::Kernel { f: &f, k: &k }, &budget);
    assert!(r.holds && r.tested > 0 && r.bound.is_none());

    let (_, inc) = pog_kernel(&f);
    let (_, q) = pog_cokernel(&inc).unwrap();
    assert!(verify_universal_property(&UniversalPropertyQuery::Cokernel { f: &inc, q: &q }, &budget).holds);
    // onto a total target the cone map {0,2} -> Z/2 misses 1
    let wrong = table_map(&z4_half(), &PreorderedGroup::total(cyclic(2)), &[0, 1, 0, 1]);
    let r = verify_universal_property(&UniversalPropertyQuery::Cokernel { f: &inc, q: &wrong }, &budget);
    assert!(!r.holds && r.counterexample.is_some());

    let t = torsion_sequence(&z4_half());
    let q = UniversalPropertyQuery::ReflectionUnit { unit: &t.unit, class: TargetClass::PartiallyOrdered };
    assert!(verify_universal_property(&q, &budget).holds);
    let q = UniversalPropertyQuery::CoreflectionCounit { counit: &t.counit, class: TargetClass::Total };
    assert!(verify_universal_property(&q, &budget).holds);
}

#[test]
fn limits_pass_their_queries() {
    let budget = Budget::finite(4);
    let a = z4_half();
    let b = PreorderedGroup::total(cyclic(2));
    let p = pog_product(&a, &b).unwrap();
    assert!(verify_universal_property(&UniversalPropertyQuery::Product { p1: &p.p1, p2: &p.p2 }, &budget).holds);

    let f = table_map(&a, &b, &[0, 1, 0, 1]);
    let pb = pog_pullback(&f, &f).unwrap();
    let q = UniversalPropertyQuery::Pullback { f: &f, g: &f, p1: &pb.p1, p2: &pb.p2 };
    assert!(verify_universal_property(&q, &budget).holds);

    let z = table_map(&a, &b, &[0, 0, 0, 0]);
    let (_, e) = pog_equalizer(&f, &z).unwrap();
    assert!(verify_universal_property(&UniversalPropertyQuery::Equalizer { f: &f, g: &z, e: &e }, &budget).holds);
    let double = table_map(&a, &a, &[0, 2, 0, 2]);
    let id = crate::preord::POGMorphism::identity(&a);
    let (_, q) = pog_coequalizer(&id, &double).unwrap();
    let query = UniversalPropertyQuery::Coequalizer { f: &id, g: &double, q: &q };
    assert!(verify_universal_property(&query, &budget).holds);
}

#[test]
fn abelian_queries_are_bounded() {
    let budget = Budget::fgab(1);
    let n = naturals();
    let (e, unit) = proto_reflect(&n);
    assert!(e.classify().protomodular);
    let q = UniversalPropertyQuery::ReflectionUnit { unit: &unit, class: TargetClass::Protomodular };
    let r = verify_universal_property(&q, &budget);
    assert!(r.holds);
    assert_eq!(r.bound, Some(1));
}

#[test]
fn law_search() {
    assert_eq!(search_counterexample("mono-iff-trivial-kernel", 6).unwrap(), None);
    assert_eq!(search_counterexample("eprime-subset-e", 6).unwrap(), None);
    let w = search_counterexample("every-morphism-is-covering", 4).unwrap().unwrap();
    assert!(w.description.starts_with("(Z/2, {0,1}) -> "), "{}", w.description);
    assert_eq!(
        search_counterexample("no-such-law", 4).unwrap_err(),
        OracleError::UnknownLaw("no-such-law".into())
    );
}

#[test]
fn every_registered_law_holds_up_to_order_six() {
    for law in LAWS.iter().filter(|l| !l.deliberately_false) {
        assert_eq!(search_counterexample(law.id, 6).unwrap(), None, "{}", law.id);
    }
}
