//! The classes E, M, E′, M* and the two factorization systems.

use thiserror::Error;

use crate::cone::{is_special_schreier, Cone, SchreierReport};
use crate::group::{GroupElement, GroupHom, Subgroup};
use crate::oracle::enumerate_pog_morphisms;
use crate::preord::{
    factor_through_epi, is_pullback_square, morphism_class, pog_kernel, pog_pullback, quotient_object, POGMorphism,
    PreorderedGroup,
};
use crate::torsion::{coreflect_t, reflect_f, torsion_free_part};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FactorError {
    #[error("square does not commute")]
    NotACommutingSquare,
    #[error("orthogonality for a non-surjective left map on the abelian backend is not decided")]
    Unsupported,
    #[error("row {0} is not a special Schreier extension")]
    RowsNotSchreier(usize),
    #[error("kernel comparison is not an isomorphism")]
    KernelMapNotIso,
    #[error("codomain of g is not the torsion-free part of B")]
    NotOverReflection,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassKind {
    E,
    M,
    Eprime,
    Mstar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassReport {
    pub class: ClassKind,
    pub holds: bool,
    pub witness: Option<String>,
}

pub fn in_class(m: &POGMorphism, class: ClassKind) -> ClassReport {
    let (holds, witness) = match class {
        ClassKind::E => {
            let f = reflect_f(m);
            let iso = f.is_iso();
            (iso, (!iso).then(|| "F(f) is not an isomorphism".to_string()))
        }
        ClassKind::M => {
            let t = coreflect_t(m);
            let iso = t.map().is_bijective();
            (iso, (!iso).then(|| "restriction to the units is not bijective".to_string()))
        }
        ClassKind::Eprime => {
            let c = morphism_class(m);
            let (k, _) = pog_kernel(m);
            match (c.normal_epi, k.classify().total) {
                (true, true) => (true, None),
                (false, _) => (false, Some("not a normal epimorphism".into())),
                (true, false) => (false, Some("kernel is not total".into())),
            }
        }
        ClassKind::Mstar => {
            let (k, _) = pog_kernel(m);
            let po = k.classify().partially_ordered;
            let witness = k.units().generators().first().map(|x| format!("kernel unit {}", k.group().format_element(x)));
            (po, if po { None } else { witness })
        }
    };
    ClassReport { class, holds, witness }
}

/// Membership in E through the three elementwise conditions: units pull
/// back to units, `f` is onto modulo `N_H`, and the cone is onto modulo
/// `N_H`.
pub fn e_conditions(m: &POGMorphism) -> [bool; 3] {
    let g = m.domain();
    let h = m.codomain();
    let f = m.map();
    let nh = h.units();
    let a = nh.preimage(f).equals(&g.units());
    let mut spanning: Vec<GroupElement> = f.image().generators().to_vec();
    spanning.extend(nh.generators().iter().cloned());
    let b = Subgroup::new(h.group().clone(), spanning).is_whole();
    let c = match (g.cone().elements(), h.cone().elements()) {
        (Some(pg), Some(ph)) => {
            let hg = h.group();
            ph.iter().all(|y| pg.iter().any(|x| nh.contains(&hg.sub(y, &f.apply(x)))))
        }
        _ => {
            let mut gens: Vec<GroupElement> = g.cone().generators().iter().map(|x| f.apply(x)).collect();
            for n in nh.generators() {
                gens.push(n.clone());
                gens.push(h.group().neg(n));
            }
            let reach = Cone::generated(h.group().clone(), gens);
            h.cone().generators().iter().all(|y| reach.has(y))
        }
    };
    [a, b, c]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorizationSystem {
    EM,
    MonotoneLight,
}

#[derive(Clone, Debug)]
pub struct FactorizationResult {
    pub system: FactorizationSystem,
    pub mid: PreorderedGroup,
    pub e: POGMorphism,
    pub m: POGMorphism,
    pub e_class: ClassReport,
    pub m_class: ClassReport,
}

impl FactorizationResult {
    pub fn recomposes_to(&self, f: &POGMorphism) -> bool {
        POGMorphism::compose(&self.m, &self.e).same_as(f)
    }

    pub fn certified(&self) -> bool {
        self.e_class.holds && self.m_class.holds
    }
}

/// `f = m ∘ e` with `mid = B ×_{F(B)} F(A)`.
pub fn em_factor(f: &POGMorphism) -> FactorizationResult {
    let (_, eta_a) = torsion_free_part(f.domain());
    let (_, eta_b) = torsion_free_part(f.codomain());
    let ff = reflect_f(f);
    let pb = pog_pullback(&eta_b, &ff).expect("same backend");
    let e = pb.mediate(f, &eta_a).expect("naturality square commutes");
    let m = pb.p1.clone();
    FactorizationResult {
        system: FactorizationSystem::EM,
        mid: pb.object.clone(),
        e_class: in_class(&e, ClassKind::E),
        m_class: in_class(&m, ClassKind::M),
        e,
        m,
    }
}

/// `f = m* ∘ e′` with `e′` the quotient by the units of the kernel.
pub fn ml_factor(f: &POGMorphism) -> FactorizationResult {
    let (k, inc) = pog_kernel(f);
    let nk = k.units().image(inc.map());
    let (mid, e) = quotient_object(f.domain(), &nk);
    let map = factor_through_epi(e.map(), f.map()).expect("f kills the kernel units");
    let m = POGMorphism::new(map, &mid, f.codomain()).expect("image cone maps into the codomain cone");
    FactorizationResult {
        system: FactorizationSystem::MonotoneLight,
        mid,
        e_class: in_class(&e, ClassKind::Eprime),
        m_class: in_class(&m, ClassKind::Mstar),
        e,
        m,
    }
}

#[derive(Clone, Debug)]
pub struct OrthogonalityReport {
    pub holds: bool,
    /// Number of diagonals found (at most one when `e` is surjective).
    pub diagonals: usize,
    pub diagonal: Option<POGMorphism>,
}

/// Unique diagonal filler for the square `m ∘ a = b ∘ e`.
pub fn check_orthogonality(
    e: &POGMorphism,
    m: &POGMorphism,
    a: &POGMorphism,
    b: &POGMorphism,
) -> Result<OrthogonalityReport, FactorError> {
    let typed = a.map().domain() == e.map().domain()
        && a.map().codomain() == m.map().domain()
        && b.map().domain() == e.map().codomain()
        && b.map().codomain() == m.map().codomain();
    if !typed || GroupHom::compose(m.map(), a.map()) != GroupHom::compose(b.map(), e.map()) {
        return Err(FactorError::NotACommutingSquare);
    }
    let fills = |d: &POGMorphism| {
        GroupHom::compose(d.map(), e.map()) == *a.map() && GroupHom::compose(m.map(), d.map()) == *b.map()
    };
    if e.map().is_surjective() {
        let diagonal = factor_through_epi(e.map(), a.map())
            .and_then(|d| POGMorphism::new(d, e.codomain(), m.domain()).ok())
            .filter(fills);
        return Ok(OrthogonalityReport { holds: diagonal.is_some(), diagonals: usize::from(diagonal.is_some()), diagonal });
    }
    if e.codomain().group().as_finite().is_none() {
        return Err(FactorError::Unsupported);
    }
    let found: Vec<POGMorphism> =
        enumerate_pog_morphisms(e.codomain(), m.domain(), 0).into_iter().filter(|d| fills(d)).collect();
    Ok(OrthogonalityReport { holds: found.len() == 1, diagonals: found.len(), diagonal: found.into_iter().next() })
}

#[derive(Clone, Debug)]
pub struct StableUnitsReport {
    pub holds: bool,
    pub pullback: PreorderedGroup,
    pub reflected: PreorderedGroup,
}

/// Reflects the pullback of `η_B` along `g` and checks the reflected
/// square is again a pullback.
pub fn check_stable_units_instance(b: &PreorderedGroup, g: &POGMorphism) -> Result<StableUnitsReport, FactorError> {
    let (fb, eta) = torsion_free_part(b);
    if g.codomain().group() != fb.group() || !g.codomain().cone().same_as(fb.cone()) {
        return Err(FactorError::NotOverReflection);
    }
    let g = POGMorphism::new(g.map().clone(), g.domain(), &fb).expect("same cone");
    let pb = pog_pullback(&eta, &g).expect("same backend");
    let top = reflect_f(&pb.p1);
    let left = reflect_f(&pb.p2);
    let right = reflect_f(&eta);
    let bottom = reflect_f(&g);
    let holds = is_pullback_square(&top, &left, &right, &bottom);
    Ok(StableUnitsReport { holds, pullback: pb.object.clone(), reflected: top.domain().clone() })
}

/// A map of extensions `K_i → A_i → B_i` given by `(a, b, c)`.
#[derive(Clone, Copy, Debug)]
pub struct ExtensionMap<'a> {
    pub rows: [(&'a POGMorphism, &'a POGMorphism); 2],
    pub a: &'a POGMorphism,
    pub b: &'a POGMorphism,
    pub c: &'a POGMorphism,
}

#[derive(Clone, Debug)]
pub struct LemmaMReport {
    pub holds: bool,
    pub schreier: [SchreierReport; 2],
}

/// For two special Schreier rows and an isomorphism on kernels, checks
/// the right-hand square is a pullback.
pub fn lemma_m_instance(d: &ExtensionMap<'_>, window: u32) -> Result<LemmaMReport, FactorError> {
    let [(k1, f1), (k2, f2)] = d.rows;
    let left = GroupHom::compose(d.b.map(), k1.map()) == GroupHom::compose(k2.map(), d.a.map());
    let right = GroupHom::compose(f2.map(), d.b.map()) == GroupHom::compose(d.c.map(), f1.map());
    if !left || !right {
        return Err(FactorError::NotACommutingSquare);
    }
    let s1 = is_special_schreier(f1.domain().cone(), f1.map(), window);
    let s2 = is_special_schreier(f2.domain().cone(), f2.map(), window);
    for (i, s) in [&s1, &s2].into_iter().enumerate() {
        if !s.holds {
            return Err(FactorError::RowsNotSchreier(i));
        }
    }
    if !d.a.is_iso() {
        return Err(FactorError::KernelMapNotIso);
    }
    let holds = is_pullback_square(d.b, f1, f2, d.c);
    Ok(LemmaMReport { holds, schreier: [s1, s2] })
}

#[cfg(test)]
mod tests;
