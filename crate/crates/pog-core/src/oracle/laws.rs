use thiserror::Error;

use crate::descent::is_covering;
use crate::factor::{check_stable_units_instance, in_class, ml_factor, ClassKind};
use crate::preord::{
    is_pullback_square, is_short_exact, morphism_class, pog_cokernel, pog_kernel, POGMorphism, PreorderedGroup,
};
use crate::torsion::{is_z_trivial, pretorsion_sequence, reflect_f, torsion_free_part, torsion_sequence};

use super::{enumerate_pog_morphisms, finite_corpus, CorpusObject};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("unknown law {0:?}")]
    UnknownLaw(String),
}

/// A registered law checked over every finite corpus object or morphism.
pub struct Law {
    pub id: &'static str,
    pub statement: &'static str,
    /// Registered to exercise the search; a witness is expected.
    pub deliberately_false: bool,
    check: fn(&Scope) -> Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawWitness {
    pub law: &'static str,
    pub description: String,
}

/// Finite corpus objects up to an order bound, smallest first, and every
/// morphism between them.
struct Scope {
    objects: Vec<CorpusObject>,
    morphisms: Vec<(String, POGMorphism)>,
}

impl Scope {
    fn new(max_order: usize) -> Self {
        let mut objects: Vec<CorpusObject> = finite_corpus()
            .into_iter()
            .filter(|c| c.object.group().as_finite().is_some_and(|g| g.order() <= max_order))
            .collect();
        objects.sort_by_key(|c| c.object.group().as_finite().map(|g| g.order()));
        let mut morphisms = Vec::new();
        for a in &objects {
            for b in &objects {
                for m in enumerate_pog_morphisms(&a.object, &b.object, 0) {
                    let table = m.map().table().expect("finite").to_vec();
                    morphisms.push((format!("{} -> {} {:?}", a.name, b.name, table), m));
                }
            }
        }
        morphisms.sort_by_key(|(_, m)| size(m.domain()) + size(m.codomain()));
        Scope { objects, morphisms }
    }

    fn first_object(&self, bad: impl Fn(&PreorderedGroup) -> bool) -> Option<String> {
        self.objects.iter().find(|c| bad(&c.object)).map(|c| c.name.clone())
    }

    fn first_morphism(&self, bad: impl Fn(&POGMorphism) -> bool) -> Option<String> {
        self.morphisms.iter().find(|(_, m)| bad(m)).map(|(name, _)| name.clone())
    }
}

fn size(p: &PreorderedGroup) -> usize {
    p.group().as_finite().map_or(0, |g| g.order())
}

fn hom_torsion_to_free_zero(s: &Scope) -> Option<String> {
    s.first_morphism(|m| m.domain().classify().total && m.codomain().classify().partially_ordered && !m.is_zero())
}

fn torsion_sequence_exact(s: &Scope) -> Option<String> {
    s.first_object(|p| {
        let t = torsion_sequence(p);
        !(t.certificate.holds() && t.torsion_part.classify().total && t.torsion_free.classify().partially_ordered)
    })
}

fn mono_iff_trivial_kernel(s: &Scope) -> Option<String> {
    s.first_morphism(|m| morphism_class(m).mono != pog_kernel(m).0.is_zero())
}

/// For the map of torsion sequences induced by `φ`, `F(φ)` is mono iff
/// the left square is a pullback.
fn pullback_iff_mono(s: &Scope) -> Option<String> {
    s.first_morphism(|m| {
        let ta = torsion_sequence(m.domain());
        let tb = torsion_sequence(m.codomain());
        let t = crate::torsion::coreflect_t(m);
        let left = is_pullback_square(&t, &ta.counit, &tb.counit, m);
        let right_mono = morphism_class(&reflect_f(m)).mono;
        left != right_mono
    })
}

fn kernel_is_pullback(s: &Scope) -> Option<String> {
    s.first_morphism(|m| {
        let (k, inc) = pog_kernel(m);
        let zero = PreorderedGroup::zero_like(k.group());
        let to_zero = POGMorphism::zero(&k, &zero);
        let from_zero = POGMorphism::zero(&zero, m.codomain());
        !is_pullback_square(&inc, &to_zero, m, &from_zero)
    })
}

fn cokernel_surjective(s: &Scope) -> Option<String> {
    s.first_morphism(|m| match pog_cokernel(m) {
        Ok((_, q)) => !morphism_class(&q).normal_epi,
        Err(_) => false,
    })
}

fn short_exact_characterization(s: &Scope) -> Option<String> {
    s.first_morphism(|m| {
        let (_, k) = pog_kernel(m);
        is_short_exact(&k, m).holds() != morphism_class(m).normal_epi
    })
}

fn eprime_subset_e(s: &Scope) -> Option<String> {
    s.first_morphism(|m| in_class(m, ClassKind::Eprime).holds && !in_class(m, ClassKind::E).holds)
}

fn m_subset_mstar(s: &Scope) -> Option<String> {
    s.first_morphism(|m| in_class(m, ClassKind::M).holds && !in_class(m, ClassKind::Mstar).holds)
}

fn ml_factorization(s: &Scope) -> Option<String> {
    s.first_morphism(|m| {
        let r = ml_factor(m);
        !(r.recomposes_to(m) && r.certified())
    })
}

fn stable_units(s: &Scope) -> Option<String> {
    for b in &s.objects {
        let (fb, _) = torsion_free_part(&b.object);
        for c in &s.objects {
            for g in enumerate_pog_morphisms(&c.object, &fb, 0) {
                let ok = check_stable_units_instance(&b.object, &g).is_ok_and(|r| r.holds);
                if !ok {
                    return Some(format!("B = {}, C = {}, g = {:?}", b.name, c.name, g.map().table()));
                }
            }
        }
    }
    None
}

fn pretorsion_composite_z_trivial(s: &Scope) -> Option<String> {
    s.first_object(|p| {
        let t = pretorsion_sequence(p);
        !is_z_trivial(&POGMorphism::compose(&t.unit, &t.counit)).holds
    })
}

fn pretorsion_universal(s: &Scope) -> Option<String> {
    s.first_object(|p| !pretorsion_sequence(p).certificate.holds())
}

fn covering_iff_mstar(s: &Scope) -> Option<String> {
    s.first_morphism(|m| is_covering(m) != in_class(m, ClassKind::Mstar).holds)
}

fn every_morphism_is_covering(s: &Scope) -> Option<String> {
    s.first_morphism(|m| !is_covering(m))
}

pub static LAWS: &[Law] = &[
    Law {
        id: "hom-torsion-to-free-zero",
        statement: "every morphism from a total object to a partially ordered one is zero",
        deliberately_false: false,
        check: hom_torsion_to_free_zero,
    },
    Law {
        id: "torsion-sequence-exact",
        statement: "T(P) -> P -> F(P) is short exact with total kernel and partially ordered cokernel",
        deliberately_false: false,
        check: torsion_sequence_exact,
    },
    Law {
        id: "mono-iff-trivial-kernel",
        statement: "a morphism is mono iff its kernel is zero",
        deliberately_false: false,
        check: mono_iff_trivial_kernel,
    },
    Law {
        id: "pullback-iff-mono",
        statement: "in a map of torsion sequences the left square is a pullback iff the right map is mono",
        deliberately_false: false,
        check: pullback_iff_mono,
    },
    Law {
        id: "kernel-is-pullback",
        statement: "the kernel square over the zero object is a pullback",
        deliberately_false: false,
        check: kernel_is_pullback,
    },
    Law {
        id: "cokernel-surjective",
        statement: "cokernel projections are surjective on cones",
        deliberately_false: false,
        check: cokernel_surjective,
    },
    Law {
        id: "short-exact-characterization",
        statement: "ker f -> A -> B is short exact iff f is a normal epimorphism",
        deliberately_false: false,
        check: short_exact_characterization,
    },
    Law {
        id: "eprime-subset-e",
        statement: "E' is contained in E",
        deliberately_false: false,
        check: eprime_subset_e,
    },
    Law {
        id: "m-subset-mstar",
        statement: "M is contained in M*",
        deliberately_false: false,
        check: m_subset_mstar,
    },
    Law {
        id: "ml-factorization",
        statement: "the (E', M*) factorization recomposes with certified classes",
        deliberately_false: false,
        check: ml_factorization,
    },
    Law {
        id: "stable-units",
        statement: "the reflector preserves pullbacks along units",
        deliberately_false: false,
        check: stable_units,
    },
    Law {
        id: "pretorsion-composite-z-trivial",
        statement: "(G, N) -> (G, P) -> F(P) composes to a Z-trivial morphism",
        deliberately_false: false,
        check: pretorsion_composite_z_trivial,
    },
    Law {
        id: "pretorsion-universal",
        statement: "the pretorsion sequence satisfies the Z-prekernel and Z-precokernel properties",
        deliberately_false: false,
        check: pretorsion_universal,
    },
    Law {
        id: "covering-iff-mstar",
        statement: "coverings are exactly the M* morphisms",
        deliberately_false: false,
        check: covering_iff_mstar,
    },
    Law {
        id: "every-morphism-is-covering",
        statement: "every morphism is a covering",
        deliberately_false: true,
        check: every_morphism_is_covering,
    },
];

/// Scans every finite corpus object or morphism with groups of order at
/// most `max_order`, returning the first failure.
pub fn search_counterexample(law: &str, max_order: usize) -> Result<Option<LawWitness>, OracleError> {
    let entry = LAWS.iter().find(|l| l.id == law).ok_or_else(|| OracleError::UnknownLaw(law.to_string()))?;
    let scope = Scope::new(max_order);
    Ok((entry.check)(&scope).map(|description| LawWitness { law: entry.id, description }))
}
