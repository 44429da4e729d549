//! The canonical cover by `ℤ × G`, kernel pairs as internal equivalence
//! relations, discrete fibrations and coverings.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::factor::{in_class, ClassKind};
use crate::group::{self, FgAbGroup, GroupElement, GroupHom, GroupObject};
use crate::preord::{is_pullback_square, pog_kernel, pog_pullback, POGMorphism, PogPullback, PreorderedGroup};

/// `ℤ × G` with positives `{(n, g) : n ≥ 1, g ∈ P} ∪ {(0, 0)}`, kept as a
/// predicate since the cone is not finitely generated.
#[derive(Clone, Debug)]
pub struct VirtualPOG {
    base: PreorderedGroup,
}

pub type VirtualElement = (BigInt, GroupElement);

/// Violations found by a window scan; all empty for a valid cone.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WindowScan {
    pub window: u32,
    pub positives: usize,
    pub submonoid_violations: usize,
    pub conjugation_violations: usize,
    pub reducedness_violations: usize,
    pub first_violation: Option<String>,
}

impl WindowScan {
    pub fn clean(&self) -> bool {
        self.submonoid_violations + self.conjugation_violations + self.reducedness_violations == 0
    }
}

impl VirtualPOG {
    pub fn new(base: &PreorderedGroup) -> Self {
        VirtualPOG { base: base.clone() }
    }

    pub fn base(&self) -> &PreorderedGroup {
        &self.base
    }

    pub fn positive(&self, x: &VirtualElement) -> bool {
        let (n, g) = x;
        if n.is_zero() {
            self.base.group().is_identity(g)
        } else {
            n.is_positive() && self.base.cone().has(g)
        }
    }

    pub fn add(&self, a: &VirtualElement, b: &VirtualElement) -> VirtualElement {
        (&a.0 + &b.0, self.base.group().add(&a.1, &b.1))
    }

    pub fn neg(&self, a: &VirtualElement) -> VirtualElement {
        (-&a.0, self.base.group().neg(&a.1))
    }

    pub fn is_zero(&self, a: &VirtualElement) -> bool {
        a.0.is_zero() && self.base.group().is_identity(&a.1)
    }

    /// Elements with `|n| ≤ w` and group part in the window of radius `w`.
    pub fn window(&self, w: u32) -> Vec<VirtualElement> {
        let gs = self.base.group().window(w);
        let w = i64::from(w);
        (-w..=w).flat_map(|n| gs.iter().map(move |g| (BigInt::from(n), g.clone()))).collect()
    }

    /// Checks closure under addition and conjugation and reducedness on the
    /// positives of the window, with cone membership of `G` precomputed on
    /// the doubled window.
    pub fn scan(&self, w: u32) -> WindowScan {
        let g = self.base.group();
        let cone: HashSet<GroupElement> = g.window(2 * w).into_iter().filter(|x| self.base.cone().has(x)).collect();
        let positive = |x: &VirtualElement| {
            if x.0.is_zero() {
                g.is_identity(&x.1)
            } else {
                x.0.is_positive() && cone.contains(&x.1)
            }
        };
        let positives: Vec<VirtualElement> = self.window(w).into_iter().filter(|x| positive(x)).collect();
        let mut scan = WindowScan { window: w, positives: positives.len(), ..Default::default() };
        let note = |scan: &mut WindowScan, what: String| {
            if scan.first_violation.is_none() {
                scan.first_violation = Some(what);
            }
        };
        for a in &positives {
            for b in &positives {
                if !positive(&self.add(a, b)) {
                    scan.submonoid_violations += 1;
                    note(&mut scan, format!("{a:?} + {b:?}"));
                }
            }
            if !self.is_zero(a) && positive(&self.neg(a)) {
                scan.reducedness_violations += 1;
                note(&mut scan, format!("unit {a:?}"));
            }
        }
        if !g.is_abelian() {
            for a in &positives {
                for h in g.window(w) {
                    let c = (a.0.clone(), g.conjugate(&h, &a.1));
                    if !positive(&c) {
                        scan.conjugation_violations += 1;
                        note(&mut scan, format!("{h:?} conjugating {a:?}"));
                    }
                }
            }
        }
        scan
    }
}

/// The projection `(n, g) ↦ g` of the cover.
#[derive(Clone, Debug)]
pub struct Cover {
    pub object: VirtualPOG,
    /// `ℤ × G` as an abelian group with its projection, when `G` is abelian
    /// on the matrix backend.
    pub realization: Option<(GroupObject, GroupHom)>,
}

#[derive(Clone, Debug)]
pub struct CoverCertificate {
    pub group_surjective: bool,
    pub cone_surjective: bool,
    pub scan: WindowScan,
}

impl CoverCertificate {
    pub fn normal_epi(&self) -> bool {
        self.group_surjective && self.cone_surjective
    }
}

impl Cover {
    pub fn project(&self, x: &VirtualElement) -> GroupElement {
        x.1.clone()
    }

    /// A positive preimage of a positive element.
    pub fn lift_positive(&self, y: &GroupElement) -> Option<VirtualElement> {
        let base = self.object.base();
        if base.group().is_identity(y) {
            return Some((BigInt::zero(), y.clone()));
        }
        base.cone().has(y).then(|| (BigInt::one(), y.clone()))
    }

    /// Lifts group and cone generators and scans the window.
    pub fn certify(&self, w: u32) -> CoverCertificate {
        let base = self.object.base();
        let group_surjective = base.group().generators().iter().all(|y| self.project(&(BigInt::zero(), y.clone())) == *y);
        let cone_surjective = base.cone().generators().iter().all(|y| {
            self.lift_positive(y).is_some_and(|x| self.object.positive(&x) && self.project(&x) == *y)
        });
        CoverCertificate { group_surjective, cone_surjective, scan: self.object.scan(w) }
    }
}

pub fn canonical_cover(p: &PreorderedGroup) -> Cover {
    let realization = match p.group() {
        GroupObject::FgAb(_) => {
            let z: GroupObject = FgAbGroup::free(1).into();
            let prod = group::product(&z, p.group()).expect("same backend");
            Some((prod.object, prod.p2))
        }
        GroupObject::Finite(_) => None,
    };
    Cover { object: VirtualPOG::new(p), realization }
}

/// Kernel pair `R ⇉ A` with its reflexivity, symmetry and transitivity.
#[derive(Clone, Debug)]
pub struct InternalEquivRelation {
    pub carrier: PreorderedGroup,
    pub r1: POGMorphism,
    pub r2: POGMorphism,
    pub delta: POGMorphism,
    pub sigma: POGMorphism,
    pub tau: POGMorphism,
    /// `R ×_A R` over `r2`, `r1`, the domain of `tau`.
    pub composable: PogPullback,
}

impl InternalEquivRelation {
    /// The reflexivity, symmetry and transitivity identities and joint
    /// monicity of `(r1, r2)`.
    pub fn verify(&self) -> Vec<(&'static str, bool)> {
        let c = |g: &POGMorphism, f: &POGMorphism| GroupHom::compose(g.map(), f.map());
        let id = GroupHom::identity(self.delta.domain().group());
        let (q1, q2) = (&self.composable.p1, &self.composable.p2);
        let jointly_monic = self.r1.map().kernel_subgroup().intersect(&self.r2.map().kernel_subgroup()).is_trivial();
        vec![
            ("jointly_monic", jointly_monic),
            ("reflexive", c(&self.r1, &self.delta) == id && c(&self.r2, &self.delta) == id),
            ("symmetric", c(&self.r1, &self.sigma) == *self.r2.map() && c(&self.r2, &self.sigma) == *self.r1.map()),
            ("transitive", c(&self.r1, &self.tau) == c(&self.r1, q1) && c(&self.r2, &self.tau) == c(&self.r2, q2)),
        ]
    }
}

pub fn kernel_pair(f: &POGMorphism) -> InternalEquivRelation {
    let pb = pog_pullback(f, f).expect("same backend");
    let a = f.domain();
    let id = POGMorphism::identity(a);
    let delta = pb.mediate(&id, &id).expect("diagonal");
    let sigma = pb.mediate(&pb.p2, &pb.p1).expect("swap");
    let composable = pog_pullback(&pb.p2, &pb.p1).expect("same backend");
    let left = POGMorphism::compose(&pb.p1, &composable.p1);
    let right = POGMorphism::compose(&pb.p2, &composable.p2);
    let tau = pb.mediate(&left, &right).expect("composite");
    InternalEquivRelation { carrier: pb.object.clone(), r1: pb.p1.clone(), r2: pb.p2.clone(), delta, sigma, tau, composable }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FibrationReport {
    pub commutes: bool,
    pub pullback: bool,
}

impl FibrationReport {
    pub fn holds(&self) -> bool {
        self.commutes && self.pullback
    }
}

/// Whether `(f1, f0): R → R′` is a discrete fibration of relations.
pub fn is_discrete_fibration(
    f1: &POGMorphism,
    f0: &POGMorphism,
    r: &InternalEquivRelation,
    r_prime: &InternalEquivRelation,
) -> FibrationReport {
    let c = |g: &POGMorphism, f: &POGMorphism| GroupHom::compose(g.map(), f.map());
    let typed = f1.map().domain() == r.carrier.group() && f1.map().codomain() == r_prime.carrier.group();
    let commutes = typed
        && c(&r_prime.r1, f1) == c(f0, &r.r1)
        && c(&r_prime.r2, f1) == c(f0, &r.r2);
    let pullback = commutes && is_pullback_square(f1, &r.r2, &r_prime.r2, f0);
    FibrationReport { commutes, pullback }
}

/// A covering is a morphism with partially ordered kernel.
pub fn is_covering(m: &POGMorphism) -> bool {
    let (k, _) = pog_kernel(m);
    let covering = k.classify().partially_ordered;
    debug_assert_eq!(covering, in_class(m, ClassKind::Mstar).holds);
    covering
}

/// Whether the pullback of `m` along the normal epimorphism `p` lies in M.
pub fn is_covering_along(m: &POGMorphism, p: &POGMorphism) -> bool {
    let pb = pog_pullback(m, p).expect("same backend");
    in_class(&pb.p2, ClassKind::M).holds
}

/// Pullback along the canonical cover. The cover is reduced, so the units
/// of the pullback are the units of `m`'s domain in its kernel.
pub fn is_covering_along_cover(m: &POGMorphism, cover: &Cover) -> bool {
    assert!(cover.object.base().group() == m.codomain().group(), "cover of another object");
    m.domain().units().intersect(&m.map().kernel_subgroup()).is_trivial()
}

#[cfg(test)]
mod tests;
