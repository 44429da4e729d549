use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use super::fgab::FgAbGroup;
use super::finite::FiniteGroup;
use super::lattice::{kernel_basis, lattice_basis, lattice_coordinates, present, solve};
use super::matrix::IntMatrix;
use super::object::{GroupElement, GroupObject};
use super::subgroup::Subgroup;
use super::GroupError;

#[derive(Clone, Debug, PartialEq, Eq)]
enum HomData {
    /// Image index of every element.
    Table(Arc<Vec<usize>>),
    /// Column `j` is the image of the `j`-th standard generator.
    Matrix(IntMatrix),
}

/// A group homomorphism between two groups on the same backend.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    domain: GroupObject,
    codomain: GroupObject,
    data: HomData,
}

impl GroupHom {
    /// Finite backend: `table[i]` is the image of element `i`.
    pub fn from_table(domain: GroupObject, codomain: GroupObject, table: Vec<usize>) -> Result<Self, GroupError> {
        let (Some(g), Some(h)) = (domain.as_finite(), codomain.as_finite()) else {
            return Err(GroupError::BackendMismatch("element tables need finite groups".into()));
        };
        if table.len() != g.order() || table.iter().any(|&x| x >= h.order()) {
            return Err(GroupError::DimensionMismatch("map table has wrong shape".into()));
        }
        for a in 0..g.order() {
            for b in 0..g.order() {
                if table[g.op(a, b)] != h.op(table[a], table[b]) {
                    return Err(GroupError::NotAHomomorphism(format!(
                        "f({} + {}) != f({}) + f({})",
                        g.name(a),
                        g.name(b),
                        g.name(a),
                        g.name(b)
                    )));
                }
            }
        }
        Ok(Self::table_unchecked(domain, codomain, table))
    }

    pub(crate) fn table_unchecked(domain: GroupObject, codomain: GroupObject, table: Vec<usize>) -> Self {
        GroupHom { domain, codomain, data: HomData::Table(Arc::new(table)) }
    }

    /// Abelian backend: `m` has one column per domain coordinate, expressed
    /// in codomain coordinates.
    pub fn from_matrix(domain: GroupObject, codomain: GroupObject, m: IntMatrix) -> Result<Self, GroupError> {
        let (Some(a), Some(b)) = (domain.as_fgab(), codomain.as_fgab()) else {
            return Err(GroupError::BackendMismatch("matrices need abelian-backend groups".into()));
        };
        if m.rows() != b.dim() || m.cols() != a.dim() {
            return Err(GroupError::DimensionMismatch(format!(
                "expected {}x{} matrix, got {}x{}",
                b.dim(),
                a.dim(),
                m.rows(),
                m.cols()
            )));
        }
        for (k, d) in a.torsion().iter().enumerate() {
            let col = m.column(a.rank() + k);
            if !b.scale(&col, d).iter().all(Zero::is_zero) {
                return Err(GroupError::NotAHomomorphism(format!(
                    "generator {} has order {d} but its image does not",
                    a.rank() + k
                )));
            }
        }
        Ok(Self::matrix_unchecked(domain, codomain, m))
    }

    pub(crate) fn matrix_unchecked(domain: GroupObject, codomain: GroupObject, mut m: IntMatrix) -> Self {
        let b = codomain.as_fgab().expect("abelian codomain");
        for (k, d) in b.torsion().iter().enumerate() {
            m.reduce_row_mod(b.rank() + k, d);
        }
        GroupHom { domain, codomain, data: HomData::Matrix(m) }
    }

    /// Homomorphism determined by images of [`GroupObject::generators`].
    pub fn from_generator_images(domain: GroupObject, codomain: GroupObject, images: &[GroupElement]) -> Result<Self, GroupError> {
        match (&domain, &codomain) {
            (GroupObject::Finite(g), GroupObject::Finite(h)) => {
                let gens = g.generating_set();
                let imgs: Vec<usize> = images.iter().map(GroupElement::as_index).collect();
                if imgs.len() != gens.len() {
                    return Err(GroupError::DimensionMismatch("wrong number of generator images".into()));
                }
                let table = g
                    .extend_hom(h, &gens, &imgs)
                    .ok_or_else(|| GroupError::NotAHomomorphism("generator images are inconsistent".into()))?;
                Ok(Self::table_unchecked(domain.clone(), codomain.clone(), table))
            }
            (GroupObject::FgAb(_), GroupObject::FgAb(b)) => {
                let cols: Vec<Vec<BigInt>> = images.iter().map(|x| x.as_coords().to_vec()).collect();
                Self::from_matrix(domain.clone(), codomain.clone(), IntMatrix::from_columns(b.dim(), &cols))
            }
            _ => Err(GroupError::BackendMismatch("homomorphisms stay on one backend".into())),
        }
    }

    pub fn identity(g: &GroupObject) -> Self {
        match g {
            GroupObject::Finite(f) => Self::table_unchecked(g.clone(), g.clone(), (0..f.order()).collect()),
            GroupObject::FgAb(a) => Self::matrix_unchecked(g.clone(), g.clone(), IntMatrix::identity(a.dim())),
        }
    }

    pub fn zero(domain: &GroupObject, codomain: &GroupObject) -> Self {
        match (domain, codomain) {
            (GroupObject::Finite(g), GroupObject::Finite(h)) => {
                Self::table_unchecked(domain.clone(), codomain.clone(), vec![h.identity(); g.order()])
            }
            (GroupObject::FgAb(a), GroupObject::FgAb(b)) => {
                Self::matrix_unchecked(domain.clone(), codomain.clone(), IntMatrix::zeros(b.dim(), a.dim()))
            }
            _ => panic!("zero map across backends"),
        }
    }

    pub fn domain(&self) -> &GroupObject {
        &self.domain
    }

    pub fn codomain(&self) -> &GroupObject {
        &self.codomain
    }

    pub fn table(&self) -> Option<&[usize]> {
        match &self.data {
            HomData::Table(t) => Some(t),
            HomData::Matrix(_) => None,
        }
    }

    pub fn matrix(&self) -> Option<&IntMatrix> {
        match &self.data {
            HomData::Matrix(m) => Some(m),
            HomData::Table(_) => None,
        }
    }

    pub fn apply(&self, x: &GroupElement) -> GroupElement {
        match (&self.data, x) {
            (HomData::Table(t), GroupElement::Finite(i)) => GroupElement::Finite(t[*i]),
            (HomData::Matrix(m), GroupElement::Ab(v)) => {
                let b = self.codomain.as_fgab().expect("abelian codomain");
                GroupElement::Ab(b.reduce(m.mul_vec(v)))
            }
            _ => panic!("element backend does not match homomorphism"),
        }
    }

    /// `g ∘ f`
    pub fn compose(g: &GroupHom, f: &GroupHom) -> GroupHom {
        assert!(f.codomain == g.domain, "composing non-composable maps");
        match (&g.data, &f.data) {
            (HomData::Table(tg), HomData::Table(tf)) => {
                Self::table_unchecked(f.domain.clone(), g.codomain.clone(), tf.iter().map(|&x| tg[x]).collect())
            }
            (HomData::Matrix(mg), HomData::Matrix(mf)) => {
                Self::matrix_unchecked(f.domain.clone(), g.codomain.clone(), mg.mul(mf))
            }
            _ => unreachable!("equal groups share a backend"),
        }
    }

    /// Pointwise sum `f + g` (abelian codomain).
    pub fn add(f: &GroupHom, g: &GroupHom) -> GroupHom {
        assert!(f.domain == g.domain && f.codomain == g.codomain);
        match (&f.data, &g.data) {
            (HomData::Matrix(a), HomData::Matrix(b)) => {
                let mut m = a.clone();
                for i in 0..m.rows() {
                    for j in 0..m.cols() {
                        m.set(i, j, a.get(i, j) + b.get(i, j));
                    }
                }
                Self::matrix_unchecked(f.domain.clone(), f.codomain.clone(), m)
            }
            (HomData::Table(a), HomData::Table(b)) => {
                let h = f.codomain.as_finite().expect("finite");
                Self::table_unchecked(f.domain.clone(), f.codomain.clone(), a.iter().zip(b.iter()).map(|(&x, &y)| h.op(x, y)).collect())
            }
            _ => unreachable!(),
        }
    }

    /// Pointwise negation (abelian codomain).
    pub fn negate(&self) -> GroupHom {
        match &self.data {
            HomData::Matrix(a) => {
                let mut m = a.clone();
                for i in 0..m.rows() {
                    for j in 0..m.cols() {
                        m.set(i, j, -a.get(i, j).clone());
                    }
                }
                Self::matrix_unchecked(self.domain.clone(), self.codomain.clone(), m)
            }
            HomData::Table(t) => {
                let h = self.codomain.as_finite().expect("finite");
                Self::table_unchecked(self.domain.clone(), self.codomain.clone(), t.iter().map(|&x| h.inv(x)).collect())
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.data {
            HomData::Table(t) => {
                let h = self.codomain.as_finite().expect("finite");
                t.iter().all(|&x| x == h.identity())
            }
            HomData::Matrix(m) => m.is_zero(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.domain == self.codomain && *self == Self::identity(&self.domain)
    }

    /// Images of the domain's [`GroupObject::generators`].
    pub fn generator_images(&self) -> Vec<GroupElement> {
        self.domain.generators().iter().map(|x| self.apply(x)).collect()
    }

    pub fn image(&self) -> Subgroup {
        Subgroup::new(self.codomain.clone(), self.generator_images())
    }

    /// Kernel subgroup of the domain.
    pub fn kernel_subgroup(&self) -> Subgroup {
        match (&self.data, &self.domain) {
            (HomData::Table(t), GroupObject::Finite(g)) => {
                let h = self.codomain.as_finite().expect("finite");
                let mask: Vec<bool> = t.iter().map(|&x| x == h.identity()).collect();
                debug_assert!(g.is_subgroup(&mask));
                Subgroup::from_mask(self.domain.clone(), mask)
            }
            (HomData::Matrix(m), GroupObject::FgAb(a)) => {
                let b = self.codomain.as_fgab().expect("abelian");
                let full = m.hstack(&negated(&b.relation_matrix()));
                let gens = kernel_basis(&full)
                    .into_iter()
                    .map(|v| GroupElement::Ab(a.reduce(v[..a.dim()].to_vec())))
                    .filter(|x| !x.as_coords().iter().all(Zero::is_zero))
                    .collect();
                Subgroup::new(self.domain.clone(), gens)
            }
            _ => unreachable!(),
        }
    }

    /// Kernel as a group together with its injection.
    pub fn kernel(&self) -> (GroupObject, GroupHom) {
        self.kernel_subgroup().realize()
    }

    pub fn is_injective(&self) -> bool {
        match &self.data {
            HomData::Table(t) => {
                let h = self.codomain.as_finite().expect("finite");
                let mut seen = vec![false; h.order()];
                t.iter().all(|&x| !std::mem::replace(&mut seen[x], true))
            }
            HomData::Matrix(_) => self.kernel_subgroup().is_trivial(),
        }
    }

    pub fn is_surjective(&self) -> bool {
        match &self.data {
            HomData::Table(t) => {
                let h = self.codomain.as_finite().expect("finite");
                let mut hit = vec![false; h.order()];
                for &x in t.iter() {
                    hit[x] = true;
                }
                hit.into_iter().all(|b| b)
            }
            HomData::Matrix(_) => self.image().is_whole(),
        }
    }

    pub fn is_bijective(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    /// Some `x` with `f(x) = y`.
    pub fn preimage(&self, y: &GroupElement) -> Option<GroupElement> {
        match (&self.data, y) {
            (HomData::Table(t), GroupElement::Finite(j)) => t.iter().position(|x| x == j).map(GroupElement::Finite),
            (HomData::Matrix(m), GroupElement::Ab(v)) => {
                let a = self.domain.as_fgab().expect("abelian");
                let b = self.codomain.as_fgab().expect("abelian");
                let full = m.hstack(&b.relation_matrix());
                solve(&full, v).map(|x| GroupElement::Ab(a.reduce(x[..a.dim()].to_vec())))
            }
            _ => panic!("element backend does not match homomorphism"),
        }
    }

    /// Inverse of a bijective homomorphism.
    pub fn inverse(&self) -> Option<GroupHom> {
        if !self.is_bijective() {
            return None;
        }
        match &self.data {
            HomData::Table(t) => {
                let mut inv = vec![0; t.len()];
                for (i, &x) in t.iter().enumerate() {
                    inv[x] = i;
                }
                Some(Self::table_unchecked(self.codomain.clone(), self.domain.clone(), inv))
            }
            HomData::Matrix(_) => {
                let images: Vec<GroupElement> =
                    self.codomain.generators().iter().map(|y| self.preimage(y).expect("surjective")).collect();
                Self::from_generator_images(self.codomain.clone(), self.domain.clone(), &images).ok()
            }
        }
    }

    /// Restricts to a subgroup of the domain given by its inclusion.
    pub fn restrict(&self, inclusion: &GroupHom) -> GroupHom {
        Self::compose(self, inclusion)
    }

    /// Corestricts through an injective `inclusion` whose image contains
    /// the image of `self`.
    pub fn corestrict(&self, inclusion: &GroupHom) -> Option<GroupHom> {
        let images: Option<Vec<GroupElement>> =
            self.generator_images().iter().map(|y| inclusion.preimage(y)).collect();
        Self::from_generator_images(self.domain.clone(), inclusion.domain.clone(), &images?).ok()
    }
}

fn negated(m: &IntMatrix) -> IntMatrix {
    let mut out = m.clone();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            out.set(i, j, -m.get(i, j).clone());
        }
    }
    out
}

/// Realizes the subgroup of an abelian group generated by `gens` as a
/// group in normal form with its inclusion.
pub(crate) fn realize_fgab_subgroup(ambient: &GroupObject, gens: &[Vec<BigInt>]) -> (GroupObject, GroupHom) {
    let a = ambient.as_fgab().expect("abelian");
    let n = a.dim();
    let rel = a.relation_columns();
    let mut all: Vec<Vec<BigInt>> = gens.to_vec();
    all.extend(rel.iter().cloned());
    let basis = lattice_basis(n, &all);
    let rho = basis.len();
    let coords: Vec<Vec<BigInt>> = rel
        .iter()
        .map(|r| lattice_coordinates(n, &basis, r).expect("relations lie in the lattice"))
        .collect();
    let p = present(rho, &IntMatrix::from_columns(rho, &coords));
    let b = if rho == 0 { IntMatrix::zeros(n, 0) } else { IntMatrix::from_columns(n, &basis) };
    let inc = b.mul(&p.from_canon);
    let sub: GroupObject = p.group.into();
    let map = GroupHom::matrix_unchecked(sub.clone(), ambient.clone(), inc);
    (sub, map)
}

/// Quotient by a (normal) subgroup, with its projection.
pub fn quotient(g: &GroupObject, n: &Subgroup) -> Result<(GroupObject, GroupHom), GroupError> {
    assert!(n.ambient() == g, "subgroup of another group");
    match g {
        GroupObject::Finite(fg) => {
            let (q, proj) = fg.quotient(n.mask().expect("finite subgroup"))?;
            let q: GroupObject = q.into();
            Ok((q.clone(), GroupHom::table_unchecked(g.clone(), q, proj)))
        }
        GroupObject::FgAb(a) => {
            if n.is_trivial() {
                return Ok((g.clone(), GroupHom::identity(g)));
            }
            let mut rel = a.relation_columns();
            rel.extend(n.generators().iter().map(|x| x.as_coords().to_vec()));
            let p = present(a.dim(), &IntMatrix::from_columns(a.dim(), &rel));
            let q: GroupObject = p.group.into();
            Ok((q.clone(), GroupHom::matrix_unchecked(g.clone(), q, p.to_canon)))
        }
    }
}

/// A binary product with projections and injections.
#[derive(Clone, Debug)]
pub struct GroupProduct {
    pub object: GroupObject,
    pub p1: GroupHom,
    pub p2: GroupHom,
    pub i1: GroupHom,
    pub i2: GroupHom,
}

pub fn product(a: &GroupObject, b: &GroupObject) -> Result<GroupProduct, GroupError> {
    match (a, b) {
        (GroupObject::Finite(x), GroupObject::Finite(y)) => {
            let obj: GroupObject = x.product(y).into();
            let m = y.order();
            let n = x.order() * m;
            let p1 = GroupHom::table_unchecked(obj.clone(), a.clone(), (0..n).map(|i| i / m).collect());
            let p2 = GroupHom::table_unchecked(obj.clone(), b.clone(), (0..n).map(|i| i % m).collect());
            let i1 = GroupHom::table_unchecked(a.clone(), obj.clone(), (0..x.order()).map(|i| i * m + y.identity()).collect());
            let i2 = GroupHom::table_unchecked(b.clone(), obj.clone(), (0..m).map(|j| x.identity() * m + j).collect());
            Ok(GroupProduct { object: obj, p1, p2, i1, i2 })
        }
        (GroupObject::FgAb(x), GroupObject::FgAb(y)) => Ok(fgab_product(a, x, b, y)),
        _ => Err(GroupError::BackendMismatch("product across backends".into())),
    }
}

fn fgab_product(a: &GroupObject, x: &FgAbGroup, b: &GroupObject, y: &FgAbGroup) -> GroupProduct {
    let (na, nb) = (x.dim(), y.dim());
    let rel = x.relation_matrix().block_diag(&y.relation_matrix());
    let rel = if rel.cols() == 0 { IntMatrix::zeros(na + nb, 0) } else { rel };
    // keep the obvious coordinates when nothing needs merging
    let (group, to_canon, from_canon) = if simple_concat(x, y) {
        let g = FgAbGroup::normal(x.rank() + y.rank(), x.torsion().iter().chain(y.torsion()).cloned().collect());
        let perm = concat_permutation(x, y);
        let mut to = IntMatrix::zeros(na + nb, na + nb);
        for (canon, &orig) in perm.iter().enumerate() {
            to.set(canon, orig, BigInt::from(1));
        }
        let from = to.transpose();
        (g, to, from)
    } else {
        let p = present(na + nb, &rel);
        (p.group, p.to_canon, p.from_canon)
    };
    let obj: GroupObject = group.into();
    let rows_a: Vec<usize> = (0..na).collect();
    let rows_b: Vec<usize> = (na..na + nb).collect();
    let p1 = GroupHom::matrix_unchecked(obj.clone(), a.clone(), from_canon.select_rows(&rows_a));
    let p2 = GroupHom::matrix_unchecked(obj.clone(), b.clone(), from_canon.select_rows(&rows_b));
    let i1 = GroupHom::matrix_unchecked(a.clone(), obj.clone(), to_canon.select_columns(&rows_a));
    let i2 = GroupHom::matrix_unchecked(b.clone(), obj.clone(), to_canon.select_columns(&rows_b));
    GroupProduct { object: obj, p1, p2, i1, i2 }
}

/// Whether the torsion lists can simply be concatenated in normal form.
fn simple_concat(x: &FgAbGroup, y: &FgAbGroup) -> bool {
    let t: Vec<&BigInt> = x.torsion().iter().chain(y.torsion()).collect();
    t.windows(2).all(|w| (w[1] % w[0]).is_zero())
}

/// Position in ℤ^(na+nb) of each canonical coordinate of the concatenation:
/// free parts first, then torsion parts.
fn concat_permutation(x: &FgAbGroup, y: &FgAbGroup) -> Vec<usize> {
    let na = x.dim();
    let mut perm: Vec<usize> = (0..x.rank()).collect();
    perm.extend(na..na + y.rank());
    perm.extend(x.rank()..na);
    perm.extend(na + y.rank()..na + y.dim());
    perm
}

/// Pullback `A ×_B C` of a cospan with its two projections.
#[derive(Clone, Debug)]
pub struct GroupPullback {
    pub object: GroupObject,
    pub p1: GroupHom,
    pub p2: GroupHom,
    pair_index: Option<Arc<HashMap<(usize, usize), usize>>>,
}

pub fn pullback(f: &GroupHom, g: &GroupHom) -> Result<GroupPullback, GroupError> {
    if f.codomain() != g.codomain() {
        return Err(GroupError::DimensionMismatch("pullback of maps with different codomains".into()));
    }
    match (f.domain(), g.domain()) {
        (GroupObject::Finite(a), GroupObject::Finite(c)) => {
            let mut pairs = Vec::new();
            for x in 0..a.order() {
                for y in 0..c.order() {
                    if f.apply(&GroupElement::Finite(x)) == g.apply(&GroupElement::Finite(y)) {
                        pairs.push((x, y));
                    }
                }
            }
            let index: HashMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
            let names = pairs.iter().map(|&(x, y)| format!("({},{})", a.name(x), c.name(y))).collect();
            let table = pairs
                .iter()
                .map(|&(x1, y1)| pairs.iter().map(|&(x2, y2)| index[&(a.op(x1, x2), c.op(y1, y2))]).collect())
                .collect();
            let obj: GroupObject = FiniteGroup::from_table_unchecked(names, table).into();
            let p1 = GroupHom::table_unchecked(obj.clone(), f.domain().clone(), pairs.iter().map(|p| p.0).collect());
            let p2 = GroupHom::table_unchecked(obj.clone(), g.domain().clone(), pairs.iter().map(|p| p.1).collect());
            Ok(GroupPullback { object: obj, p1, p2, pair_index: Some(Arc::new(index)) })
        }
        (GroupObject::FgAb(_), GroupObject::FgAb(_)) => {
            let prod = product(f.domain(), g.domain())?;
            let diff = GroupHom::add(
                &GroupHom::compose(f, &prod.p1),
                &GroupHom::compose(g, &prod.p2).negate(),
            );
            let (k, inc) = diff.kernel();
            let p1 = GroupHom::compose(&prod.p1, &inc);
            let p2 = GroupHom::compose(&prod.p2, &inc);
            Ok(GroupPullback { object: k, p1, p2, pair_index: None })
        }
        _ => Err(GroupError::BackendMismatch("pullback across backends".into())),
    }
}

impl GroupPullback {
    /// The element with projections `(a, c)`, if it lies in the pullback.
    pub fn pair(&self, a: &GroupElement, c: &GroupElement) -> Option<GroupElement> {
        match &self.pair_index {
            Some(index) => index.get(&(a.as_index(), c.as_index())).map(|&i| GroupElement::Finite(i)),
            None => joint_preimage(&[&self.p1, &self.p2], &[a.clone(), c.clone()]),
        }
    }

    /// The mediating map `X → P` for `α: X → A`, `γ: X → C`.
    pub fn mediate(&self, alpha: &GroupHom, gamma: &GroupHom) -> Option<GroupHom> {
        let gens = alpha.domain().generators();
        let images: Option<Vec<GroupElement>> =
            gens.iter().map(|x| self.pair(&alpha.apply(x), &gamma.apply(x))).collect();
        GroupHom::from_generator_images(alpha.domain().clone(), self.object.clone(), &images?).ok()
    }
}

/// Some `x` with `maps[i](x) = targets[i]` for all `i` (common domain).
pub fn joint_preimage(maps: &[&GroupHom], targets: &[GroupElement]) -> Option<GroupElement> {
    let dom = maps[0].domain();
    match dom {
        GroupObject::Finite(g) => (0..g.order())
            .map(GroupElement::Finite)
            .find(|x| maps.iter().zip(targets).all(|(m, t)| m.apply(x) == *t)),
        GroupObject::FgAb(a) => {
            let mut rows: Vec<Vec<BigInt>> = Vec::new();
            let mut rhs: Vec<BigInt> = Vec::new();
            let mut rel_blocks: Vec<IntMatrix> = Vec::new();
            for (m, t) in maps.iter().zip(targets) {
                let mat = m.matrix().expect("abelian");
                for i in 0..mat.rows() {
                    rows.push(mat.row(i));
                }
                rhs.extend(t.as_coords().iter().cloned());
                rel_blocks.push(m.codomain().as_fgab().expect("abelian").relation_matrix());
            }
            let stacked = IntMatrix::from_rows_checked(rows, a.dim());
            let mut rel = IntMatrix::zeros(0, 0);
            for b in &rel_blocks {
                rel = rel.block_diag(b);
            }
            let full = stacked.hstack(&rel);
            solve(&full, &rhs).map(|x| GroupElement::Ab(a.reduce(x[..a.dim()].to_vec())))
        }
    }
}

/// Equalizer subgroup `{x : f(x) = g(x)}` realized with its inclusion.
pub fn equalizer(f: &GroupHom, g: &GroupHom) -> (GroupObject, GroupHom) {
    assert!(f.domain() == g.domain() && f.codomain() == g.codomain());
    match f.domain() {
        GroupObject::Finite(_) => {
            let elems = f.domain().elements().expect("finite");
            let mask: Vec<bool> = elems.iter().map(|x| f.apply(x) == g.apply(x)).collect();
            Subgroup::from_mask(f.domain().clone(), mask).realize()
        }
        GroupObject::FgAb(_) => GroupHom::add(f, &g.negate()).kernel(),
    }
}

/// Coequalizer `B → B / N`, `N` the normal closure of `{f(x) - g(x)}`.
pub fn coequalizer(f: &GroupHom, g: &GroupHom) -> (GroupObject, GroupHom) {
    assert!(f.domain() == g.domain() && f.codomain() == g.codomain());
    let cod = f.codomain();
    let diffs: Vec<GroupElement> = f
        .domain()
        .generators()
        .iter()
        .map(|x| cod.sub(&f.apply(x), &g.apply(x)))
        .collect();
    let n = match cod {
        GroupObject::Finite(h) => {
            let idx: Vec<usize> = diffs.iter().map(GroupElement::as_index).collect();
            Subgroup::from_mask(cod.clone(), h.normal_closure(&idx))
        }
        GroupObject::FgAb(_) => Subgroup::new(cod.clone(), diffs),
    };
    quotient(cod, &n).expect("normal closure is normal")
}

impl IntMatrix {
    pub(crate) fn from_rows_checked(rows: Vec<Vec<BigInt>>, cols: usize) -> IntMatrix {
        if rows.is_empty() {
            return IntMatrix::zeros(0, cols);
        }
        IntMatrix::from_rows(rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> GroupObject {
        FgAbGroup::free(1).into()
    }

    fn z2() -> GroupObject {
        FgAbGroup::cyclic(2).into()
    }

    fn mod2() -> GroupHom {
        GroupHom::from_matrix(z(), z2(), IntMatrix::from_i64(&[&[1]])).unwrap()
    }

    #[test]
    fn mod2_kernel_is_even_integers() {
        let (k, inc) = mod2().kernel();
        assert_eq!(k, z());
        let img = inc.apply(&GroupElement::ab(&[1]));
        assert!(img == GroupElement::ab(&[2]) || img == GroupElement::ab(&[-2]));
    }

    #[test]
    fn identity_kernel_trivial() {
        let z4: GroupObject = FgAbGroup::cyclic(4).into();
        let (k, _) = GroupHom::identity(&z4).kernel();
        assert!(k.is_trivial());
        let f4: GroupObject = FiniteGroup::cyclic(4).into();
        let (k, _) = GroupHom::identity(&f4).kernel();
        assert!(k.is_trivial());
    }

    #[test]
    fn projection_kernel() {
        let z2g: GroupObject = FgAbGroup::free(2).into();
        let p = GroupHom::from_matrix(z2g.clone(), z(), IntMatrix::from_i64(&[&[0, 1]])).unwrap();
        let (k, inc) = p.kernel();
        assert_eq!(k, z());
        let img = inc.apply(&GroupElement::ab(&[1]));
        assert!(img == GroupElement::ab(&[1, 0]) || img == GroupElement::ab(&[-1, 0]));
    }

    #[test]
    fn torsion_compatibility_enforced() {
        let z4: GroupObject = FgAbGroup::cyclic(4).into();
        assert!(GroupHom::from_matrix(z2(), z(), IntMatrix::from_i64(&[&[1]])).is_err());
        assert!(GroupHom::from_matrix(z2(), z4.clone(), IntMatrix::from_i64(&[&[2]])).is_ok());
        assert!(GroupHom::from_matrix(z2(), z4, IntMatrix::from_i64(&[&[1]])).is_err());
    }

    #[test]
    fn quotients() {
        let s = Subgroup::new(z(), vec![GroupElement::ab(&[2])]);
        let (q, proj) = quotient(&z(), &s).unwrap();
        assert_eq!(q, z2());
        assert_eq!(proj.apply(&GroupElement::ab(&[3])), GroupElement::ab(&[1]));

        let z2g: GroupObject = FgAbGroup::free(2).into();
        let s = Subgroup::new(z2g.clone(), vec![GroupElement::ab(&[2, 0])]);
        let (q, _) = quotient(&z2g, &s).unwrap();
        assert_eq!(q.describe(), "Z x Z/2");

        let f4: GroupObject = FiniteGroup::cyclic(4).into();
        let s = Subgroup::new(f4.clone(), vec![GroupElement::Finite(2)]);
        let (q, _) = quotient(&f4, &s).unwrap();
        assert_eq!(q.order(), Some(BigInt::from(2)));
    }

    #[test]
    fn pullbacks() {
        let triv: GroupObject = FgAbGroup::trivial().into();
        let zero = GroupHom::zero(&z(), &triv);
        let pb = pullback(&zero, &zero).unwrap();
        assert_eq!(pb.object.describe(), "Z^2");

        let pb = pullback(&mod2(), &mod2()).unwrap();
        assert_eq!(pb.object.describe(), "Z^2");
        for x in pb.object.window(3) {
            let (a, c) = (pb.p1.apply(&x), pb.p2.apply(&x));
            assert_eq!(mod2().apply(&a), mod2().apply(&c));
        }
        let odd = pb.pair(&GroupElement::ab(&[1]), &GroupElement::ab(&[3])).unwrap();
        assert_eq!(pb.p2.apply(&odd), GroupElement::ab(&[3]));
        assert!(pb.pair(&GroupElement::ab(&[1]), &GroupElement::ab(&[2])).is_none());

        let pb = pullback(&GroupHom::identity(&z2()), &mod2()).unwrap();
        assert_eq!(pb.object, z());
    }

    #[test]
    fn product_merges_coprime_torsion() {
        let z3: GroupObject = FgAbGroup::cyclic(3).into();
        let p = product(&z2(), &z3).unwrap();
        assert_eq!(p.object.describe(), "Z/6");
        let x = p.i1.apply(&GroupElement::ab(&[1]));
        assert_eq!(p.p1.apply(&x), GroupElement::ab(&[1]));
        assert_eq!(p.p2.apply(&x), GroupElement::ab(&[0]));
    }

    #[test]
    fn inverse_of_negation() {
        let neg = GroupHom::identity(&z()).negate();
        let inv = neg.inverse().unwrap();
        assert!(GroupHom::compose(&inv, &neg).is_identity());
    }
}
