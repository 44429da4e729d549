use crate::group::{pullback, GroupElement, GroupHom};

use super::Cone;

/// Result of a Schreier check. On the abelian backend only the window of
/// domain elements with coordinates in `[-W, W]` is examined, and
/// `exhaustive` is false.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchreierReport {
    pub holds: bool,
    pub exhaustive: bool,
    pub window: Option<u32>,
    pub checked: usize,
    /// A domain element `a` whose kernel part `a - s(p(a))` is not positive.
    pub counterexample: Option<GroupElement>,
    /// Whether `p ∘ s` is the identity.
    pub split: bool,
}

/// Whether the point `p: R → A` with section `s` is a Schreier point of
/// monoids, `dom` being the cone on the group of `R`.
pub fn is_schreier_point(dom: &Cone, p: &GroupHom, s: &GroupHom, window: u32) -> SchreierReport {
    let g = dom.group();
    let finite = g.is_finite() && g.as_finite().is_some();
    let split = GroupHom::compose(p, s).is_identity();
    let mut report = SchreierReport {
        holds: split,
        exhaustive: finite,
        window: (!finite).then_some(window),
        checked: 0,
        counterexample: None,
        split,
    };
    if !split {
        return report;
    }
    let candidates = match dom.elements() {
        Some(e) => e,
        None => g.window(window).into_iter().filter(|a| dom.has(a)).collect(),
    };
    for a in candidates {
        report.checked += 1;
        // the kernel part is forced by cancellation; only positivity can fail
        let x = g.sub(&a, &s.apply(&p.apply(&a)));
        if !dom.has(&x) {
            report.holds = false;
            report.counterexample = Some(a);
            break;
        }
    }
    report
}

/// Whether the cone map `f: P_A → P_B` is special Schreier: its kernel pair
/// with first projection and diagonal is a Schreier point.
pub fn is_special_schreier(dom: &Cone, f: &GroupHom, window: u32) -> SchreierReport {
    let pb = pullback(f, f).expect("same backend");
    let pair_cone = Cone::pullback(dom, dom, &pb).expect("matching groups");
    let id = GroupHom::identity(f.domain());
    let diagonal = pb.mediate(&id, &id).expect("diagonal exists");
    is_schreier_point(&pair_cone, &pb.p1, &diagonal, window)
}
