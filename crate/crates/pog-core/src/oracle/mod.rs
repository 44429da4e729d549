//! Brute-force ground truth: cone and morphism enumeration, universal
//! property checks by exhaustive search, and a registry of laws.

mod corpus;
mod laws;
mod universal;

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::cone::Cone;
use crate::group::{GroupElement, GroupHom, GroupObject, IntMatrix};
use crate::preord::{POGMorphism, PreorderedGroup};

pub use corpus::{corpus, fgab_corpus, finite_corpus, finite_corpus_groups, CorpusObject};
pub use laws::{search_counterexample, Law, LawWitness, OracleError, LAWS};
pub use universal::{verify_universal_property, Budget, TargetClass, UniversalPropertyQuery, UpReport};

/// Default matrix-entry bound for abelian-backend enumeration.
pub const DEFAULT_HOM_BOUND: u32 = 10;

/// All cones of a finite-backend group, ordered by size and then by the
/// sorted element list. `None` on the abelian backend.
pub fn enumerate_cones(g: &GroupObject) -> Option<Vec<Cone>> {
    let fg = g.as_finite()?;
    let n = fg.order();
    let e = fg.identity();
    let others: Vec<usize> = (0..n).filter(|&x| x != e).collect();
    let mut found: Vec<Vec<usize>> = Vec::new();
    for bits in 0u64..(1u64 << others.len()) {
        let mut mask = vec![false; n];
        mask[e] = true;
        for (i, &x) in others.iter().enumerate() {
            if bits >> i & 1 == 1 {
                mask[x] = true;
            }
        }
        let closed = (0..n).all(|a| !mask[a] || (0..n).all(|b| !mask[b] || mask[fg.op(a, b)]));
        let conj = (0..n).all(|x| !mask[x] || (0..n).all(|h| mask[fg.conjugate(h, x)]));
        if closed && conj {
            found.push((0..n).filter(|&x| mask[x]).collect());
        }
    }
    found.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let cones = found
        .into_iter()
        .map(|s| {
            let elems: Vec<GroupElement> = s.into_iter().map(GroupElement::Finite).collect();
            Cone::explicit(g.clone(), &elems)
        })
        .collect();
    Some(cones)
}

/// Every cone-preserving morphism `p → q`: complete on the finite backend,
/// and on the abelian backend complete among matrices whose free-row
/// entries lie in `[-bound, bound]`.
pub fn enumerate_pog_morphisms(p: &PreorderedGroup, q: &PreorderedGroup, bound: u32) -> Vec<POGMorphism> {
    match (p.group(), q.group()) {
        (GroupObject::Finite(x), GroupObject::Finite(y)) => x
            .homomorphisms(y)
            .into_iter()
            .filter_map(|t| {
                let h = GroupHom::from_table(p.group().clone(), q.group().clone(), t).expect("enumerated homomorphism");
                POGMorphism::new(h, p, q).ok()
            })
            .collect(),
        (GroupObject::FgAb(_), GroupObject::FgAb(_)) => enumerate_matrices(p, q, bound),
        _ => Vec::new(),
    }
}

/// Column-by-column search; a cone generator is checked as soon as every
/// column in its support is fixed.
fn enumerate_matrices(p: &PreorderedGroup, q: &PreorderedGroup, bound: u32) -> Vec<POGMorphism> {
    let a = p.group().as_fgab().expect("abelian");
    let b = q.group().as_fgab().expect("abelian");
    let n = a.dim();
    let window = b.window(bound);
    let candidates: Vec<Vec<Vec<BigInt>>> = (0..n)
        .map(|j| {
            if j < a.rank() {
                return window.clone();
            }
            let d = &a.torsion()[j - a.rank()];
            window.iter().filter(|v| b.scale(v, d).iter().all(|c| c == &BigInt::from(0))).cloned().collect()
        })
        .collect();
    let gens: Vec<Vec<BigInt>> = p.cone().generators().iter().map(|g| g.as_coords().to_vec()).collect();
    let mut due: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, g) in gens.iter().enumerate() {
        if let Some(last) = g.iter().rposition(|c| c != &BigInt::from(0)) {
            due[last].push(i);
        }
    }
    let mut search = MatrixSearch {
        b,
        cone: q.cone(),
        gens: &gens,
        due: &due,
        candidates: &candidates,
        cache: HashMap::new(),
        columns: Vec::new(),
        out: Vec::new(),
    };
    search.run(0);
    search
        .out
        .into_iter()
        .filter_map(|cols| {
            let m = IntMatrix::from_columns(b.dim(), &cols);
            let h = GroupHom::from_matrix(p.group().clone(), q.group().clone(), m).ok()?;
            POGMorphism::new(h, p, q).ok()
        })
        .collect()
}

struct MatrixSearch<'a> {
    b: &'a crate::group::FgAbGroup,
    cone: &'a Cone,
    gens: &'a [Vec<BigInt>],
    due: &'a [Vec<usize>],
    candidates: &'a [Vec<Vec<BigInt>>],
    cache: HashMap<Vec<BigInt>, bool>,
    columns: Vec<Vec<BigInt>>,
    out: Vec<Vec<Vec<BigInt>>>,
}

impl MatrixSearch<'_> {
    fn run(&mut self, j: usize) {
        if j == self.candidates.len() {
            self.out.push(self.columns.clone());
            return;
        }
        let (candidates, due) = (self.candidates, self.due);
        for c in &candidates[j] {
            self.columns.push(c.clone());
            if due[j].iter().all(|&i| self.image_positive(i)) {
                self.run(j + 1);
            }
            self.columns.pop();
        }
    }

    fn image_positive(&mut self, i: usize) -> bool {
        let mut y = self.b.zero();
        for (c, col) in self.gens[i].iter().zip(&self.columns) {
            y = self.b.add(&y, &self.b.scale(col, c));
        }
        if let Some(&v) = self.cache.get(&y) {
            return v;
        }
        let v = self.cone.has(&GroupElement::Ab(y.clone()));
        self.cache.insert(y, v);
        v
    }
}

#[cfg(test)]
mod tests;
