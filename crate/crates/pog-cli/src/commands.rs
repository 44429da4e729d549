//! Command implementations. Each returns a JSON body and whether the
//! checked property held.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use pog_core::cone::{is_special_schreier, Cone};
use pog_core::descent::{canonical_cover, is_covering, is_covering_along};
use pog_core::factor::{
    check_orthogonality, check_stable_units_instance, em_factor, in_class, ml_factor, ClassKind, FactorError,
    FactorizationResult,
};
use pog_core::group::{GroupElement, GroupObject};
use pog_core::oracle::{
    enumerate_cones, enumerate_pog_morphisms, search_counterexample, verify_universal_property, Budget, TargetClass,
    UniversalPropertyQuery as Q, UpReport, LAWS,
};
use pog_core::preord::{
    is_short_exact, pog_coequalizer, pog_cokernel, pog_equalizer, pog_kernel, pog_product, pog_pullback,
    Classification, POGMorphism, PreordError, PreorderedGroup, SequenceCertificate,
};
use pog_core::torsion::{
    pretorsion_sequence, proto_reflect, reflect_f, torsion_sequence, z_preexact_certificate,
};

use crate::workspace::{InputError, Workspace};

pub struct Report {
    pub body: Value,
    pub ok: bool,
}

impl Report {
    fn new(body: Value, ok: bool) -> Self {
        Report { body, ok }
    }
}

pub type Outcome = Result<Report, InputError>;

fn big(x: &BigInt) -> Value {
    x.to_i64().map_or_else(|| Value::String(x.to_string()), Value::from)
}

pub fn element(g: &GroupObject, x: &GroupElement) -> Value {
    match (g, x) {
        (GroupObject::Finite(f), GroupElement::Finite(i)) => Value::String(f.name(*i).to_string()),
        (_, GroupElement::Ab(c)) => Value::Array(c.iter().map(big).collect()),
        (_, x) => Value::String(format!("{x:?}")),
    }
}

pub fn cone(c: &Cone) -> Value {
    let g = c.group();
    match c.elements() {
        Some(elems) => json!({ "elements": elems.iter().map(|x| element(g, x)).collect::<Vec<_>>(), "size": elems.len() }),
        None => json!({ "generators": c.generators().iter().map(|x| element(g, x)).collect::<Vec<_>>() }),
    }
}

pub fn object(p: &PreorderedGroup) -> Value {
    json!({
        "group": p.group().describe(),
        "order": p.group().order().as_ref().map_or(Value::Null, big),
        "cone": cone(p.cone()),
    })
}

fn classification(c: Classification) -> Value {
    json!({
        "total": c.total,
        "protomodular": c.protomodular,
        "partially_ordered": c.partially_ordered,
        "discrete": c.discrete,
    })
}

pub fn map(m: &POGMorphism) -> Value {
    let h = m.map();
    match (h.table(), h.matrix()) {
        (Some(t), _) => {
            let cod = h.codomain();
            let names: Vec<Value> = t.iter().map(|&i| element(cod, &GroupElement::Finite(i))).collect();
            json!({ "table": names })
        }
        (_, Some(mat)) => json!({ "matrix": (0..mat.rows()).map(|i| mat.row(i).iter().map(big).collect::<Vec<_>>()).collect::<Vec<_>>() }),
        _ => Value::Null,
    }
}

fn morphism(m: &POGMorphism) -> Value {
    json!({ "from": object(m.domain()), "to": object(m.codomain()), "map": map(m) })
}

fn checks(c: &SequenceCertificate) -> Value {
    Value::Object(c.checks.iter().map(|(k, v)| (k.to_string(), Value::Bool(*v))).collect())
}

fn up(r: &UpReport) -> Value {
    json!({
        "holds": r.holds,
        "tested": r.tested,
        "bound": r.bound,
        "counterexample": r.counterexample,
    })
}

fn same_backend(a: &GroupObject, b: &GroupObject) -> Result<(), InputError> {
    if a.backend() == b.backend() {
        Ok(())
    } else {
        Err(InputError::Usage("arguments live on different group backends".into()))
    }
}

fn composable(k: &POGMorphism, f: &POGMorphism) -> Result<(), InputError> {
    if k.map().codomain() == f.map().domain() {
        Ok(())
    } else {
        Err(InputError::Usage("morphisms are not composable".into()))
    }
}

fn factor_error(e: FactorError) -> InputError {
    InputError::Usage(e.to_string())
}

pub fn validate(ws: &Workspace) -> Outcome {
    Ok(Report::new(
        json!({
            "valid": true,
            "counts": {
                "groups": ws.groups.len(),
                "cones": ws.cones.len(),
                "objects": ws.objects.len(),
                "morphisms": ws.morphisms.len(),
            },
        }),
        true,
    ))
}

pub fn classify(p: &PreorderedGroup) -> Outcome {
    Ok(Report::new(json!({ "object": object(p), "classification": classification(p.classify()) }), true))
}

pub fn torsion(p: &PreorderedGroup) -> Outcome {
    let t = torsion_sequence(p);
    let part = match t.torsion_part.group().order() {
        Some(n) => json!({ "order": big(&n) }),
        None => json!({ "order": null, "group": t.torsion_part.group().describe() }),
    };
    let mut free = json!({
        "group": t.torsion_free.group().describe(),
        "cone_size": t.torsion_free.cone().size(),
    });
    if t.torsion_free.cone().size().is_none() {
        free["cone"] = cone(t.torsion_free.cone());
    }
    let exact = t.certificate.holds();
    Ok(Report::new(
        json!({
            "torsion_part": part,
            "torsion_free": free,
            "short_exact": exact,
            "certificate": checks(&t.certificate),
        }),
        exact,
    ))
}

pub fn pretorsion(p: &PreorderedGroup) -> Outcome {
    let t = pretorsion_sequence(p);
    let holds = t.certificate.holds();
    Ok(Report::new(
        json!({
            "prekernel": object(&t.torsion_part),
            "precokernel": object(&t.torsion_free),
            "z_preexact": holds,
            "certificate": checks(&t.certificate),
        }),
        holds,
    ))
}

pub fn reflect(m: &POGMorphism) -> Outcome {
    let f = reflect_f(m);
    Ok(Report::new(json!({ "reflection": morphism(&f), "iso": f.is_iso(), "zero": f.is_zero() }), true))
}

pub fn proto_reflect_cmd(p: &PreorderedGroup) -> Outcome {
    let (e, _) = proto_reflect(p);
    Ok(Report::new(json!({ "reflection": object(&e), "protomodular": e.classify().protomodular }), true))
}

fn label(part: &POGMorphism, whole: &POGMorphism) -> Value {
    if part.is_identity() {
        "identity".into()
    } else if part.same_as(whole) {
        "f".into()
    } else {
        morphism(part)
    }
}

fn class_name(c: ClassKind) -> &'static str {
    match c {
        ClassKind::E => "E",
        ClassKind::M => "M",
        ClassKind::Eprime => "Eprime",
        ClassKind::Mstar => "Mstar",
    }
}

pub fn factor(f: &POGMorphism, monotone_light: bool) -> Outcome {
    let r: FactorizationResult = if monotone_light { ml_factor(f) } else { em_factor(f) };
    let ok = r.recomposes_to(f) && r.certified();
    let body = if monotone_light {
        json!({
            "e_prime": label(&r.e, f),
            "m_star": label(&r.m, f),
            "covering": is_covering(&r.m),
            "middle": object(&r.mid),
            "certified": ok,
        })
    } else {
        json!({
            "e": label(&r.e, f),
            "m": label(&r.m, f),
            "middle": object(&r.mid),
            "certified": ok,
        })
    };
    Ok(Report::new(body, ok))
}

pub fn class(m: &POGMorphism, c: ClassKind) -> Outcome {
    let r = in_class(m, c);
    Ok(Report::new(json!({ "class": class_name(c), "holds": r.holds, "witness": r.witness }), r.holds))
}

pub fn covering(m: &POGMorphism, along: Option<&POGMorphism>) -> Outcome {
    let c = is_covering(m);
    let mut body = json!({ "covering": c, "kernel": object(&pog_kernel(m).0) });
    let mut ok = c;
    if let Some(p) = along {
        same_backend(m.codomain().group(), p.codomain().group())?;
        if p.map().codomain() != m.map().codomain() {
            return Err(InputError::Usage("the cover must land in the codomain".into()));
        }
        let a = is_covering_along(m, p);
        body["trivial_along"] = a.into();
        ok &= a;
    }
    Ok(Report::new(body, ok))
}

pub fn cover(p: &PreorderedGroup, window: u32) -> Outcome {
    let c = canonical_cover(p);
    let cert = c.certify(window);
    let s = &cert.scan;
    let ok = cert.normal_epi() && s.clean();
    Ok(Report::new(
        json!({
            "normal_epi": cert.normal_epi(),
            "group_surjective": cert.group_surjective,
            "cone_surjective": cert.cone_surjective,
            "realization": c.realization.as_ref().map(|(g, _)| g.describe()),
            "scan": {
                "window": s.window,
                "positives": s.positives,
                "submonoid_violations": s.submonoid_violations,
                "conjugation_violations": s.conjugation_violations,
                "reducedness_violations": s.reducedness_violations,
                "first_violation": s.first_violation,
            },
        }),
        ok,
    ))
}

pub fn kernel(m: &POGMorphism) -> Outcome {
    let (k, inc) = pog_kernel(m);
    Ok(Report::new(json!({ "kernel": object(&k), "inclusion": map(&inc) }), true))
}

fn failed(e: PreordError) -> Report {
    Report::new(json!({ "error": e.to_string() }), false)
}

pub fn cokernel(m: &POGMorphism) -> Outcome {
    Ok(match pog_cokernel(m) {
        Ok((c, q)) => Report::new(json!({ "cokernel": object(&c), "projection": map(&q) }), true),
        Err(e) => failed(e),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum LimitKind {
    Product,
    Pullback,
    Equalizer,
    Coequalizer,
}

pub fn limit(ws: &Workspace, kind: LimitKind, a: &str, b: &str) -> Outcome {
    let result = match kind {
        LimitKind::Product => {
            let (x, y) = (ws.object(a)?, ws.object(b)?);
            same_backend(x.group(), y.group())?;
            pog_product(x, y).map(|p| (p.object, vec![p.p1, p.p2]))
        }
        LimitKind::Pullback => {
            let (f, g) = (ws.morphism(a)?, ws.morphism(b)?);
            if f.map().codomain() != g.map().codomain() {
                return Err(InputError::Usage("pullback needs a common codomain".into()));
            }
            pog_pullback(f, g).map(|p| (p.object, vec![p.p1, p.p2]))
        }
        LimitKind::Equalizer | LimitKind::Coequalizer => {
            let (f, g) = (ws.morphism(a)?, ws.morphism(b)?);
            if f.map().domain() != g.map().domain() || f.map().codomain() != g.map().codomain() {
                return Err(InputError::Usage("parallel morphisms required".into()));
            }
            let r = if kind == LimitKind::Equalizer { pog_equalizer(f, g) } else { pog_coequalizer(f, g) };
            r.map(|(o, m)| (o, vec![m]))
        }
    };
    Ok(match result {
        Ok((o, maps)) => Report::new(json!({ "object": object(&o), "maps": maps.iter().map(map).collect::<Vec<_>>() }), true),
        Err(e) => failed(e),
    })
}

pub fn sequence_check(k: &POGMorphism, f: &POGMorphism, z: bool) -> Outcome {
    composable(k, f)?;
    let c = if z { z_preexact_certificate(k, f) } else { is_short_exact(k, f) };
    let kind = if z { "z_preexact" } else { "short_exact" };
    Ok(Report::new(json!({ "kind": kind, "holds": c.holds(), "checks": checks(&c) }), c.holds()))
}

pub fn stable_units(b: &PreorderedGroup, g: &POGMorphism) -> Outcome {
    same_backend(b.group(), g.codomain().group())?;
    let r = check_stable_units_instance(b, g).map_err(factor_error)?;
    Ok(Report::new(json!({ "holds": r.holds, "pullback": object(&r.pullback), "reflected": object(&r.reflected) }), r.holds))
}

pub fn orthogonal(e: &POGMorphism, m: &POGMorphism, a: &POGMorphism, b: &POGMorphism) -> Outcome {
    let r = check_orthogonality(e, m, a, b).map_err(factor_error)?;
    Ok(Report::new(
        json!({ "holds": r.holds, "diagonals": r.diagonals, "diagonal": r.diagonal.as_ref().map(map) }),
        r.holds,
    ))
}

/// Special Schreier check on a morphism's cone map.
pub fn schreier(m: &POGMorphism, window: u32) -> Outcome {
    let r = is_special_schreier(m.domain().cone(), m.map(), window);
    // the counterexample lives in the kernel pair; report it as a pair
    let pb = pog_core::group::pullback(m.map(), m.map()).map_err(|e| InputError::Usage(e.to_string()))?;
    let dom = m.map().domain();
    let counterexample =
        r.counterexample.as_ref().map(|x| json!([element(dom, &pb.p1.apply(x)), element(dom, &pb.p2.apply(x))]));
    Ok(Report::new(
        json!({
            "holds": r.holds,
            "split": r.split,
            "exhaustive": r.exhaustive,
            "window": r.window,
            "checked": r.checked,
            "counterexample": counterexample,
        }),
        r.holds,
    ))
}

pub fn enumerate_cones_cmd(g: &GroupObject) -> Outcome {
    let cones = enumerate_cones(g).ok_or_else(|| InputError::Usage("cone enumeration needs a finite group".into()))?;
    Ok(Report::new(json!({ "count": cones.len(), "cones": cones.iter().map(cone).collect::<Vec<_>>() }), true))
}

pub fn enumerate_morphisms(p: &PreorderedGroup, q: &PreorderedGroup, bound: u32) -> Outcome {
    same_backend(p.group(), q.group())?;
    let ms = enumerate_pog_morphisms(p, q, bound);
    let exhaustive = p.group().is_finite();
    Ok(Report::new(
        json!({
            "count": ms.len(),
            "exhaustive": exhaustive,
            "bound": (!exhaustive).then_some(bound),
            "morphisms": ms.iter().map(map).collect::<Vec<_>>(),
        }),
        true,
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum OracleKind {
    Kernel,
    Cokernel,
    Product,
    Pullback,
    Equalizer,
    Coequalizer,
    /// The torsion-free reflection unit of an object.
    Reflection,
    /// The torsion coreflection counit of an object.
    Coreflection,
    /// The protomodular reflection unit of an object.
    ProtoReflection,
    /// Both Z-pre-universal properties of an object's pretorsion sequence.
    Pretorsion,
}

fn budget_for(g: &GroupObject, max_order: usize, bound: u32) -> Budget {
    if g.is_finite() && g.as_finite().is_some() {
        Budget::finite(max_order)
    } else {
        Budget::fgab(bound)
    }
}

pub fn oracle(ws: &Workspace, kind: OracleKind, names: &[String], max_order: usize, bound: u32) -> Outcome {
    let arity = match kind {
        OracleKind::Product | OracleKind::Pullback | OracleKind::Equalizer | OracleKind::Coequalizer => 2,
        _ => 1,
    };
    if names.len() != arity {
        return Err(InputError::Usage(format!("expected {arity} name(s), got {}", names.len())));
    }
    let (n0, n1) = (&names[0], names.get(1));
    let mut reports: Map<String, Value> = Map::new();
    let mut run = |key: &str, q: Q<'_>, g: &GroupObject| {
        let r = verify_universal_property(&q, &budget_for(g, max_order, bound));
        reports.insert(key.into(), up(&r));
        r.holds
    };
    let ok = match kind {
        OracleKind::Kernel => {
            let f = ws.morphism(n0)?;
            let (_, k) = pog_kernel(f);
            run("kernel", Q::Kernel { f, k: &k }, f.map().domain())
        }
        OracleKind::Cokernel => {
            let f = ws.morphism(n0)?;
            match pog_cokernel(f) {
                Ok((_, q)) => run("cokernel", Q::Cokernel { f, q: &q }, f.map().domain()),
                Err(e) => return Ok(failed(e)),
            }
        }
        OracleKind::Product => {
            let (a, b) = (ws.object(n0)?, ws.object(n1.expect("arity"))?);
            same_backend(a.group(), b.group())?;
            match pog_product(a, b) {
                Ok(p) => run("product", Q::Product { p1: &p.p1, p2: &p.p2 }, a.group()),
                Err(e) => return Ok(failed(e)),
            }
        }
        OracleKind::Pullback => {
            let (f, g) = (ws.morphism(n0)?, ws.morphism(n1.expect("arity"))?);
            if f.map().codomain() != g.map().codomain() {
                return Err(InputError::Usage("pullback needs a common codomain".into()));
            }
            match pog_pullback(f, g) {
                Ok(p) => run("pullback", Q::Pullback { f, g, p1: &p.p1, p2: &p.p2 }, f.map().domain()),
                Err(e) => return Ok(failed(e)),
            }
        }
        OracleKind::Equalizer | OracleKind::Coequalizer => {
            let (f, g) = (ws.morphism(n0)?, ws.morphism(n1.expect("arity"))?);
            if f.map().domain() != g.map().domain() || f.map().codomain() != g.map().codomain() {
                return Err(InputError::Usage("parallel morphisms required".into()));
            }
            if kind == OracleKind::Equalizer {
                match pog_equalizer(f, g) {
                    Ok((_, e)) => run("equalizer", Q::Equalizer { f, g, e: &e }, f.map().domain()),
                    Err(e) => return Ok(failed(e)),
                }
            } else {
                match pog_coequalizer(f, g) {
                    Ok((_, q)) => run("coequalizer", Q::Coequalizer { f, g, q: &q }, f.map().domain()),
                    Err(e) => return Ok(failed(e)),
                }
            }
        }
        OracleKind::Reflection | OracleKind::Coreflection => {
            let p = ws.object(n0)?;
            let t = torsion_sequence(p);
            if kind == OracleKind::Reflection {
                let q = Q::ReflectionUnit { unit: &t.unit, class: TargetClass::PartiallyOrdered };
                run("reflection_unit", q, p.group())
            } else {
                let q = Q::CoreflectionCounit { counit: &t.counit, class: TargetClass::Total };
                run("coreflection_counit", q, p.group())
            }
        }
        OracleKind::ProtoReflection => {
            let p = ws.object(n0)?;
            let (_, unit) = proto_reflect(p);
            run("reflection_unit", Q::ReflectionUnit { unit: &unit, class: TargetClass::Protomodular }, p.group())
        }
        OracleKind::Pretorsion => {
            let p = ws.object(n0)?;
            let t = pretorsion_sequence(p);
            let a = run("z_prekernel", Q::ZPrekernel { f: &t.unit, k: &t.counit }, p.group());
            let b = run("z_precokernel", Q::ZPrecokernel { k: &t.counit, q: &t.unit }, p.group());
            a && b
        }
    };
    let mut body = Value::Object(reports);
    body["holds"] = ok.into();
    Ok(Report::new(body, ok))
}

pub fn search(law: Option<&str>, max_order: usize) -> Outcome {
    let ids: Vec<&str> = match law {
        Some(id) => vec![id],
        None => LAWS.iter().map(|l| l.id).collect(),
    };
    let mut results = Map::new();
    let mut ok = true;
    for id in ids {
        let w = search_counterexample(id, max_order).map_err(|e| InputError::Usage(e.to_string()))?;
        let entry = LAWS.iter().find(|l| l.id == id).expect("registered");
        ok &= w.is_none();
        results.insert(
            id.into(),
            json!({
                "statement": entry.statement,
                "deliberately_false": entry.deliberately_false,
                "witness": w.map(|w| w.description),
            }),
        );
    }
    Ok(Report::new(json!({ "max_order": max_order, "laws": results }), ok))
}
