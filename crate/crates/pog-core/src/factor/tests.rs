use super::*;
use crate::fixtures::*;

fn classes(m: &POGMorphism) -> [bool; 4] {
    [ClassKind::E, ClassKind::M, ClassKind::Eprime, ClassKind::Mstar].map(|c| in_class(m, c).holds)
}

#[test]
fn class_examples() {
    let p = second_projection();
    assert!(in_class(&p, ClassKind::Eprime).holds);
    assert!(in_class(&p, ClassKind::E).holds);

    let f = mod2();
    assert!(in_class(&f, ClassKind::Mstar).holds);
    assert!(!in_class(&f, ClassKind::M).holds);

    assert_eq!(classes(&POGMorphism::identity(&naturals())), [true; 4]);
    assert_eq!(classes(&POGMorphism::identity(&z4_half())), [true; 4]);
}

#[test]
fn e_conditions_agree_with_reflection() {
    for m in [mod2(), second_projection(), POGMorphism::identity(&z4_half())] {
        let by_conditions = e_conditions(&m).iter().all(|&c| c);
        assert_eq!(by_conditions, in_class(&m, ClassKind::E).holds);
    }
    // units of ℤ/2 pull back to all of ℤ
    assert_eq!(e_conditions(&mod2()), [false, true, true]);
}

#[test]
fn em_factor_examples() {
    let f = mod2();
    let r = em_factor(&f);
    assert!(r.recomposes_to(&f) && r.certified());
    assert_eq!(r.mid.group().describe(), "Z x Z/2");
    assert!(!r.mid.classify().partially_ordered);
    let x = r.e.map().apply(&ab(&[3]));
    assert_eq!(r.m.map().apply(&x), ab(&[1]));

    let id = POGMorphism::identity(&naturals());
    let r = em_factor(&id);
    assert!(r.e.is_iso() && r.recomposes_to(&id));

    let p = second_projection();
    let r = em_factor(&p);
    assert!(r.m.is_iso() && r.recomposes_to(&p) && r.certified());
}

#[test]
fn ml_factor_examples() {
    let f = mod2();
    let r = ml_factor(&f);
    assert!(r.e.is_identity() && r.recomposes_to(&f) && r.certified());

    let p = second_projection();
    let r = ml_factor(&p);
    assert!(r.m.is_iso() && r.recomposes_to(&p) && r.certified());

    let id = POGMorphism::identity(&z4_half());
    let r = ml_factor(&id);
    assert!(r.e.map().is_surjective() && r.certified());
    assert!(ml_factor(&POGMorphism::identity(&naturals())).e.is_identity());
}

#[test]
fn orthogonality_examples() {
    let f = mod2();
    let r = ml_factor(&f);
    let o = check_orthogonality(&r.e, &r.m, &r.e, &r.m).unwrap();
    assert!(o.holds && o.diagonal.unwrap().is_identity());

    let n = naturals();
    let id = POGMorphism::identity(&n);
    let o = check_orthogonality(&id, &f, &id, &f).unwrap();
    assert!(o.holds);

    // e kills 2 but a does not, so no diagonal exists
    let z4 = PreorderedGroup::total(cyclic(4));
    let z2 = PreorderedGroup::total(cyclic(2));
    let e = table_map(&z4, &z2, &[0, 1, 0, 1]);
    let a = POGMorphism::identity(&z4);
    let m = table_map(&z4, &PreorderedGroup::total(cyclic(1)), &[0, 0, 0, 0]);
    let b = table_map(&z2, m.codomain(), &[0, 0]);
    let o = check_orthogonality(&e, &m, &a, &b).unwrap();
    assert!(!o.holds && o.diagonal.is_none());

    assert_eq!(check_orthogonality(&e, &m, &b, &a).unwrap_err(), FactorError::NotACommutingSquare);
}

#[test]
fn orthogonality_by_enumeration() {
    let z2 = PreorderedGroup::discrete(cyclic(2));
    let z4 = PreorderedGroup::discrete(cyclic(4));
    let zero = PreorderedGroup::discrete(cyclic(1));
    let e = table_map(&z2, &z4, &[0, 2]);
    let m = POGMorphism::zero(&z4, &zero);
    let a = POGMorphism::zero(&z2, &z4);
    let b = POGMorphism::zero(&z4, &zero);
    let o = check_orthogonality(&e, &m, &a, &b).unwrap();
    assert_eq!(o.diagonals, 2);
    assert!(!o.holds);

    let ez = matrix_map(&PreorderedGroup::discrete(free(1)), &PreorderedGroup::discrete(free(1)), &[&[2]]);
    let id = POGMorphism::identity(ez.domain());
    assert_eq!(check_orthogonality(&ez, &id, &ez, &id).unwrap_err(), FactorError::Unsupported);
}

#[test]
fn stable_units_examples() {
    let b = PreorderedGroup::total(free(1));
    let (fb, _) = torsion_free_part(&b);
    let g = POGMorphism::zero(&naturals(), &fb);
    let r = check_stable_units_instance(&b, &g).unwrap();
    assert!(r.holds);
    assert!(!r.pullback.classify().partially_ordered);

    let n = naturals();
    let (fb, _) = torsion_free_part(&n);
    assert!(check_stable_units_instance(&n, &POGMorphism::identity(&fb)).unwrap().holds);

    let b = z4_half();
    let (fb, _) = torsion_free_part(&b);
    let r = check_stable_units_instance(&b, &POGMorphism::identity(&fb)).unwrap();
    assert!(r.holds);
    assert_eq!(r.pullback.group().order(), Some(4.into()));

    assert_eq!(check_stable_units_instance(&b, &POGMorphism::identity(&n)).unwrap_err(), FactorError::NotOverReflection);
}

#[test]
fn lemma_m_examples() {
    let t = crate::torsion::torsion_sequence(&z4_half());
    let (k, f) = (&t.counit, &t.unit);
    let ida = POGMorphism::identity(k.domain());
    let idb = POGMorphism::identity(f.domain());
    let idc = POGMorphism::identity(f.codomain());
    let d = ExtensionMap { rows: [(k, f), (k, f)], a: &ida, b: &idb, c: &idc };
    assert!(lemma_m_instance(&d, 8).unwrap().holds);

    let z = PreorderedGroup::total(free(1));
    let t = crate::torsion::torsion_sequence(&z);
    let (k, f) = (&t.counit, &t.unit);
    let neg_k = matrix_map(k.domain(), k.domain(), &[&[-1]]);
    let neg = matrix_map(&z, &z, &[&[-1]]);
    let c = POGMorphism::identity(f.codomain());
    let d = ExtensionMap { rows: [(k, f), (k, f)], a: &neg_k, b: &neg, c: &c };
    let r = lemma_m_instance(&d, 8).unwrap();
    assert!(r.holds && !r.schreier[0].exhaustive);

    let zero_k = POGMorphism::zero(k.domain(), k.domain());
    let zero = POGMorphism::zero(&z, &z);
    let d = ExtensionMap { rows: [(k, f), (k, f)], a: &zero_k, b: &zero, c: &c };
    assert_eq!(lemma_m_instance(&d, 8).unwrap_err(), FactorError::KernelMapNotIso);
}

#[test]
fn lemma_m_rejects_non_schreier_rows() {
    let f = mod2();
    let (_, k) = crate::preord::pog_kernel(&f);
    let ida = POGMorphism::identity(k.domain());
    let idb = POGMorphism::identity(f.domain());
    let idc = POGMorphism::identity(f.codomain());
    let d = ExtensionMap { rows: [(&k, &f), (&k, &f)], a: &ida, b: &idb, c: &idc };
    assert_eq!(lemma_m_instance(&d, 4).unwrap_err(), FactorError::RowsNotSchreier(0));
}
