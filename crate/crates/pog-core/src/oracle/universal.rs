use std::collections::HashMap;

use crate::group::{GroupHom, GroupObject, IntMatrix};
use crate::preord::{POGMorphism, PreorderedGroup};

use super::{enumerate_pog_morphisms, fgab_corpus, finite_corpus};

/// Which test objects a reflection or coreflection quantifies over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TargetClass {
    Total,
    Protomodular,
    PartiallyOrdered,
}

impl TargetClass {
    pub fn admits(self, p: &PreorderedGroup) -> bool {
        let c = p.classify();
        match self {
            TargetClass::Total => c.total,
            TargetClass::Protomodular => c.protomodular,
            TargetClass::PartiallyOrdered => c.partially_ordered,
        }
    }
}

/// A candidate (co)limit or (co)reflection to test against all morphisms
/// from or to the budget's test objects.
#[derive(Clone, Copy, Debug)]
pub enum UniversalPropertyQuery<'a> {
    Kernel { f: &'a POGMorphism, k: &'a POGMorphism },
    Cokernel { f: &'a POGMorphism, q: &'a POGMorphism },
    Product { p1: &'a POGMorphism, p2: &'a POGMorphism },
    Pullback { f: &'a POGMorphism, g: &'a POGMorphism, p1: &'a POGMorphism, p2: &'a POGMorphism },
    Equalizer { f: &'a POGMorphism, g: &'a POGMorphism, e: &'a POGMorphism },
    Coequalizer { f: &'a POGMorphism, g: &'a POGMorphism, q: &'a POGMorphism },
    ZPrekernel { f: &'a POGMorphism, k: &'a POGMorphism },
    ZPrecokernel { k: &'a POGMorphism, q: &'a POGMorphism },
    ReflectionUnit { unit: &'a POGMorphism, class: TargetClass },
    CoreflectionCounit { counit: &'a POGMorphism, class: TargetClass },
}

/// Test objects and enumeration bounds. On the abelian backend test
/// morphisms have entries in `[-bound, bound]` and candidate mediators in
/// `[-mediator_bound, mediator_bound]`.
#[derive(Clone, Debug)]
pub struct Budget {
    pub test_objects: Vec<PreorderedGroup>,
    pub bound: u32,
    pub mediator_bound: u32,
}

impl Budget {
    /// Finite corpus objects of order at most `max_order`.
    pub fn finite(max_order: usize) -> Self {
        let test_objects = finite_corpus()
            .into_iter()
            .map(|c| c.object)
            .filter(|p| p.group().as_finite().is_some_and(|g| g.order() <= max_order))
            .collect();
        Budget { test_objects, bound: 0, mediator_bound: 0 }
    }

    /// Rank-one abelian corpus objects with small bounds.
    pub fn fgab(bound: u32) -> Self {
        let test_objects = fgab_corpus()
            .into_iter()
            .map(|c| c.object)
            .filter(|p| p.group().as_fgab().is_some_and(|g| g.dim() <= 1))
            .collect();
        Budget { test_objects, bound, mediator_bound: 3 * bound + 1 }
    }

    pub fn default_for(g: &GroupObject) -> Self {
        match g {
            GroupObject::Finite(_) => Self::finite(4),
            GroupObject::FgAb(_) => Self::fgab(1),
        }
    }

    fn objects_like<'a>(&'a self, g: &'a GroupObject) -> impl Iterator<Item = &'a PreorderedGroup> + 'a {
        self.test_objects.iter().filter(move |p| p.group().backend() == g.backend())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UpReport {
    pub holds: bool,
    /// Number of test morphisms whose factorization was checked.
    pub tested: usize,
    /// Abelian-backend entry bound, if any enumeration was bounded.
    pub bound: Option<u32>,
    pub counterexample: Option<String>,
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum Key {
    Table(Vec<usize>),
    Matrix(IntMatrix),
}

fn key(h: &GroupHom) -> Key {
    match h.table() {
        Some(t) => Key::Table(t.to_vec()),
        None => Key::Matrix(h.matrix().expect("matrix backend").clone()),
    }
}

fn comp(g: &GroupHom, f: &GroupHom) -> GroupHom {
    GroupHom::compose(g, f)
}

fn kills_cone(m: &GroupHom, dom: &PreorderedGroup) -> bool {
    dom.cone().generators().iter().all(|p| m.codomain().is_identity(&m.apply(p)))
}

struct Checker<'a> {
    budget: &'a Budget,
    tested: usize,
    bounded: bool,
}

impl Checker<'_> {
    fn fail(&self, why: String) -> UpReport {
        self.report(Some(why))
    }

    fn report(&self, counterexample: Option<String>) -> UpReport {
        UpReport {
            holds: counterexample.is_none(),
            tested: self.tested,
            bound: self.bounded.then_some(self.budget.bound),
            counterexample,
        }
    }

    fn homs(&mut self, x: &PreorderedGroup, y: &PreorderedGroup, mediator: bool) -> Vec<POGMorphism> {
        if x.group().as_fgab().is_some() {
            self.bounded = true;
        }
        let b = if mediator { self.budget.mediator_bound } else { self.budget.bound };
        enumerate_pog_morphisms(x, y, b)
    }

    /// Every compatible tuple of maps `X → legs[i].codomain` factors
    /// through `legs` exactly once.
    fn into_limit(
        &mut self,
        lim: &PreorderedGroup,
        legs: &[&POGMorphism],
        admit: impl Fn(&PreorderedGroup) -> bool,
        compatible: impl Fn(&[&POGMorphism]) -> bool,
    ) -> Option<String> {
        let objects: Vec<PreorderedGroup> = self.budget.objects_like(lim.group()).filter(|x| admit(x)).cloned().collect();
        for x in &objects {
            let mut counts: HashMap<Vec<Key>, usize> = HashMap::new();
            for phi in self.homs(x, lim, true) {
                let k: Vec<Key> = legs.iter().map(|l| key(&comp(l.map(), phi.map()))).collect();
                *counts.entry(k).or_default() += 1;
            }
            let per_leg: Vec<Vec<POGMorphism>> = legs.iter().map(|l| self.homs(x, l.codomain(), false)).collect();
            let mut tuples: Vec<Vec<&POGMorphism>> = vec![Vec::new()];
            for options in &per_leg {
                tuples = tuples
                    .into_iter()
                    .flat_map(|t| {
                        options.iter().map(move |o| {
                            let mut t = t.clone();
                            t.push(o);
                            t
                        })
                    })
                    .collect();
            }
            for t in tuples.into_iter().filter(|t| compatible(t)) {
                self.tested += 1;
                let k: Vec<Key> = t.iter().map(|a| key(a.map())).collect();
                let n = counts.get(&k).copied().unwrap_or(0);
                if n != 1 {
                    return Some(format!("{} mediators from {}", n, x.describe()));
                }
            }
        }
        None
    }

    /// Every compatible map `q.domain → Y` factors through `q` exactly once.
    fn out_of_colimit(
        &mut self,
        q: &POGMorphism,
        admit: impl Fn(&PreorderedGroup) -> bool,
        compatible: impl Fn(&POGMorphism) -> bool,
    ) -> Option<String> {
        let objects: Vec<PreorderedGroup> =
            self.budget.objects_like(q.codomain().group()).filter(|y| admit(y)).cloned().collect();
        for y in &objects {
            let mut counts: HashMap<Key, usize> = HashMap::new();
            for phi in self.homs(q.codomain(), y, true) {
                *counts.entry(key(&comp(phi.map(), q.map()))).or_default() += 1;
            }
            for beta in self.homs(q.domain(), y, false) {
                if !compatible(&beta) {
                    continue;
                }
                self.tested += 1;
                let n = counts.get(&key(beta.map())).copied().unwrap_or(0);
                if n != 1 {
                    return Some(format!("{} mediators to {}", n, y.describe()));
                }
            }
        }
        None
    }
}

/// Checks existence and uniqueness of mediating morphisms for every test
/// morphism drawn from the budget.
pub fn verify_universal_property(q: &UniversalPropertyQuery<'_>, budget: &Budget) -> UpReport {
    let mut c = Checker { budget, tested: 0, bounded: false };
    let any = |_: &PreorderedGroup| true;
    let outcome = match *q {
        UniversalPropertyQuery::Kernel { f, k } => {
            if !comp(f.map(), k.map()).is_zero() {
                return c.fail("f ∘ k is not zero".into());
            }
            c.into_limit(k.domain(), &[k], any, |t| comp(f.map(), t[0].map()).is_zero())
        }
        UniversalPropertyQuery::Cokernel { f, q } => {
            if !comp(q.map(), f.map()).is_zero() {
                return c.fail("q ∘ f is not zero".into());
            }
            c.out_of_colimit(q, any, |b| comp(b.map(), f.map()).is_zero())
        }
        UniversalPropertyQuery::Product { p1, p2 } => c.into_limit(p1.domain(), &[p1, p2], any, |_| true),
        UniversalPropertyQuery::Pullback { f, g, p1, p2 } => {
            if comp(f.map(), p1.map()) != comp(g.map(), p2.map()) {
                return c.fail("square does not commute".into());
            }
            c.into_limit(p1.domain(), &[p1, p2], any, |t| comp(f.map(), t[0].map()) == comp(g.map(), t[1].map()))
        }
        UniversalPropertyQuery::Equalizer { f, g, e } => {
            if comp(f.map(), e.map()) != comp(g.map(), e.map()) {
                return c.fail("f ∘ e ≠ g ∘ e".into());
            }
            c.into_limit(e.domain(), &[e], any, |t| comp(f.map(), t[0].map()) == comp(g.map(), t[0].map()))
        }
        UniversalPropertyQuery::Coequalizer { f, g, q } => {
            if comp(q.map(), f.map()) != comp(q.map(), g.map()) {
                return c.fail("q ∘ f ≠ q ∘ g".into());
            }
            c.out_of_colimit(q, any, |b| comp(b.map(), f.map()) == comp(b.map(), g.map()))
        }
        UniversalPropertyQuery::ZPrekernel { f, k } => {
            if !kills_cone(&comp(f.map(), k.map()), k.domain()) {
                return c.fail("f ∘ k is not Z-trivial".into());
            }
            c.into_limit(k.domain(), &[k], any, |t| kills_cone(&comp(f.map(), t[0].map()), t[0].domain()))
        }
        UniversalPropertyQuery::ZPrecokernel { k, q } => {
            if !kills_cone(&comp(q.map(), k.map()), k.domain()) {
                return c.fail("q ∘ k is not Z-trivial".into());
            }
            c.out_of_colimit(q, any, |b| kills_cone(&comp(b.map(), k.map()), k.domain()))
        }
        UniversalPropertyQuery::ReflectionUnit { unit, class } => {
            if !class.admits(unit.codomain()) {
                return c.fail("reflection lies outside the class".into());
            }
            c.out_of_colimit(unit, |y| class.admits(y), |_| true)
        }
        UniversalPropertyQuery::CoreflectionCounit { counit, class } => {
            if !class.admits(counit.domain()) {
                return c.fail("coreflection lies outside the class".into());
            }
            c.into_limit(counit.domain(), &[counit], |x| class.admits(x), |_| true)
        }
    };
    c.report(outcome)
}
