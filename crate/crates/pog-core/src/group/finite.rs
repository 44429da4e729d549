use std::collections::VecDeque;

use super::GroupError;

/// A finite group given by its Cayley table. The operation is written
/// additively (`a + b = table[a][b]`) even when it is not commutative.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteGroup {
    names: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
}

impl FiniteGroup {
    /// Validates a Cayley table: closure, identity, inverses, associativity.
    pub fn new(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let n = names.len();
        if n == 0 {
            return Err(GroupError::NotAGroup("empty element list".into()));
        }
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(GroupError::NotAGroup(format!("table is not {n}x{n}")));
        }
        if let Some((i, j)) = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).find(|&(i, j)| table[i][j] >= n) {
            return Err(GroupError::NotAGroup(format!("entry ({i},{j}) out of range")));
        }
        for w in 0..n {
            for k in 0..w {
                if names[w] == names[k] {
                    return Err(GroupError::NotAGroup(format!("duplicate element name {}", names[w])));
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| GroupError::NotAGroup("no identity element".into()))?;
        let mut inverses = vec![usize::MAX; n];
        for a in 0..n {
            match (0..n).find(|&b| table[a][b] == identity && table[b][a] == identity) {
                Some(b) => inverses[a] = b,
                None => return Err(GroupError::NotAGroup(format!("{} has no inverse", names[a]))),
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(GroupError::NotAGroup(format!(
                            "associativity fails for ({}, {}, {})",
                            names[a], names[b], names[c]
                        )));
                    }
                }
            }
        }
        Ok(FiniteGroup { names, table, identity, inverses })
    }

    /// Builds from a table known to be a group table.
    pub(crate) fn from_table_unchecked(names: Vec<String>, table: Vec<Vec<usize>>) -> Self {
        let n = names.len();
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x))
            .expect("group table without identity");
        let inverses = (0..n)
            .map(|a| (0..n).find(|&b| table[a][b] == identity).expect("missing inverse"))
            .collect();
        FiniteGroup { names, table, identity, inverses }
    }

    pub fn cyclic(n: usize) -> Self {
        let names = (0..n).map(|i| i.to_string()).collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::from_table_unchecked(names, table)
    }

    /// Dihedral group of order `2n`; elements `s^a r^b` at index `a*n + b`.
    pub fn dihedral(n: usize) -> Self {
        let name = |a: usize, b: usize| -> String {
            let r = match b {
                0 => String::new(),
                1 => "r".to_string(),
                _ => format!("r{b}"),
            };
            match (a, b) {
                (0, 0) => "e".to_string(),
                (0, _) => r,
                _ => format!("s{r}"),
            }
        };
        let mut names = Vec::new();
        for a in 0..2 {
            for b in 0..n {
                names.push(name(a, b));
            }
        }
        let mut table = vec![vec![0; 2 * n]; 2 * n];
        for a in 0..2 {
            for b in 0..n {
                for c in 0..2 {
                    for d in 0..n {
                        // (s^a r^b)(s^c r^d) = s^(a+c) r^((-1)^c b + d)
                        let rb = if c == 0 { b } else { (n - b) % n };
                        let e = (a + c) % 2;
                        let f = (rb + d) % n;
                        table[a * n + b][c * n + d] = e * n + f;
                    }
                }
            }
        }
        Self::from_table_unchecked(names, table)
    }

    /// Quaternion group: index `2u + s` encodes `(-1)^s` times unit `u ∈ {1,i,j,k}`.
    pub fn quaternion() -> Self {
        let units = ["1", "i", "j", "k"];
        // product of units as (sign, unit)
        let mul = |u: usize, v: usize| -> (usize, usize) {
            match (u, v) {
                (0, w) | (w, 0) => (0, w),
                (a, b) if a == b => (1, 0),
                (1, 2) => (0, 3),
                (2, 3) => (0, 1),
                (3, 1) => (0, 2),
                (2, 1) => (1, 3),
                (3, 2) => (1, 1),
                (1, 3) => (1, 2),
                _ => unreachable!(),
            }
        };
        let mut names = Vec::new();
        for u in units {
            names.push(u.to_string());
            names.push(format!("-{u}"));
        }
        let mut table = vec![vec![0; 8]; 8];
        for x in 0..8 {
            for y in 0..8 {
                let (s, w) = mul(x / 2, y / 2);
                let sign = (x % 2 + y % 2 + s) % 2;
                table[x][y] = 2 * w + sign;
            }
        }
        Self::from_table_unchecked(names, table)
    }

    /// Direct product; element `(a, b)` sits at index `a * |other| + b`.
    pub fn product(&self, other: &FiniteGroup) -> Self {
        let m = other.order();
        let mut names = Vec::new();
        for a in &self.names {
            for b in &other.names {
                names.push(format!("({a},{b})"));
            }
        }
        let n = self.order() * m;
        let mut table = vec![vec![0; n]; n];
        for x in 0..n {
            for y in 0..n {
                table[x][y] = self.op(x / m, y / m) * m + other.op(x % m, y % m);
            }
        }
        Self::from_table_unchecked(names, table)
    }

    /// Isomorphic copy whose element `i` is element `perm[i]` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let n = self.order();
        assert_eq!(perm.len(), n);
        let mut pos = vec![0; n];
        for (i, &p) in perm.iter().enumerate() {
            pos[p] = i;
        }
        let names = perm.iter().map(|&p| format!("{}'", self.names[p])).collect();
        let table = (0..n).map(|i| (0..n).map(|j| pos[self.op(perm[i], perm[j])]).collect()).collect();
        Self::from_table_unchecked(names, table)
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `g + x - g`
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.op(self.op(g, x), self.inv(g))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| (0..a).all(|b| self.op(a, b) == self.op(b, a)))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != self.identity {
            x = self.op(x, a);
            k += 1;
        }
        k
    }

    /// `n · a` for any integer `n`.
    pub fn power(&self, a: usize, n: i64) -> usize {
        let ord = self.element_order(a) as i64;
        let k = n.rem_euclid(ord);
        let mut x = self.identity;
        for _ in 0..k {
            x = self.op(x, a);
        }
        x
    }

    /// Membership mask of the subgroup generated by `gens`.
    pub fn closure(&self, gens: &[usize]) -> Vec<bool> {
        let mut mask = vec![false; self.order()];
        mask[self.identity] = true;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                for y in [self.op(x, g), self.op(x, self.inv(g))] {
                    if !mask[y] {
                        mask[y] = true;
                        queue.push_back(y);
                    }
                }
            }
        }
        mask
    }

    /// Membership mask of the normal closure of `gens`.
    pub fn normal_closure(&self, gens: &[usize]) -> Vec<bool> {
        let mut conj: Vec<usize> = Vec::new();
        for &x in gens {
            for g in 0..self.order() {
                conj.push(self.conjugate(g, x));
            }
        }
        conj.sort_unstable();
        conj.dedup();
        self.closure(&conj)
    }

    pub fn is_subgroup(&self, mask: &[bool]) -> bool {
        mask[self.identity]
            && (0..self.order()).all(|a| !mask[a] || (mask[self.inv(a)] && (0..self.order()).all(|b| !mask[b] || mask[self.op(a, b)])))
    }

    pub fn is_normal(&self, mask: &[bool]) -> bool {
        (0..self.order()).all(|x| !mask[x] || (0..self.order()).all(|g| mask[self.conjugate(g, x)]))
    }

    /// Greedy generating set: walk elements in index order, keep each one
    /// not already generated.
    pub fn generating_set(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut mask = self.closure(&gens);
        for x in 0..self.order() {
            if !mask[x] {
                gens.push(x);
                mask = self.closure(&gens);
            }
        }
        gens
    }

    /// The subgroup with membership `mask` as a group, plus its embedding.
    pub fn subgroup(&self, mask: &[bool]) -> (FiniteGroup, Vec<usize>) {
        let elems: Vec<usize> = (0..self.order()).filter(|&x| mask[x]).collect();
        let mut pos = vec![usize::MAX; self.order()];
        for (i, &x) in elems.iter().enumerate() {
            pos[x] = i;
        }
        let names = elems.iter().map(|&x| self.names[x].clone()).collect();
        let table = elems.iter().map(|&a| elems.iter().map(|&b| pos[self.op(a, b)]).collect()).collect();
        (Self::from_table_unchecked(names, table), elems)
    }

    /// Quotient by the normal subgroup `mask`; cosets ordered by their
    /// smallest element, named `[rep]`.
    pub fn quotient(&self, mask: &[bool]) -> Result<(FiniteGroup, Vec<usize>), GroupError> {
        if !self.is_subgroup(mask) {
            return Err(GroupError::NotASubgroup);
        }
        if !self.is_normal(mask) {
            return Err(GroupError::NotNormal);
        }
        let n = self.order();
        let mut coset = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for x in 0..n {
            if coset[x] != usize::MAX {
                continue;
            }
            let c = reps.len();
            reps.push(x);
            for k in (0..n).filter(|&k| mask[k]) {
                coset[self.op(x, k)] = c;
            }
        }
        let names = reps.iter().map(|&r| format!("[{}]", self.names[r])).collect();
        let table = reps.iter().map(|&a| reps.iter().map(|&b| coset[self.op(a, b)]).collect()).collect();
        Ok((Self::from_table_unchecked(names, table), coset))
    }

    /// Extends an assignment of generator images to a homomorphism into
    /// `target`, or `None` when the assignment is inconsistent.
    pub fn extend_hom(&self, target: &FiniteGroup, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
        let n = self.order();
        let mut map = vec![usize::MAX; n];
        map[self.identity] = target.identity;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for (&g, &h) in gens.iter().zip(images) {
                let y = self.op(x, g);
                let fy = target.op(map[x], h);
                if map[y] == usize::MAX {
                    map[y] = fy;
                    queue.push_back(y);
                } else if map[y] != fy {
                    return None;
                }
            }
        }
        if map.contains(&usize::MAX) {
            return None;
        }
        let ok = (0..n).all(|a| (0..n).all(|b| map[self.op(a, b)] == target.op(map[a], map[b])));
        ok.then_some(map)
    }

    /// All homomorphisms into `target`, ordered lexicographically by the
    /// images of [`Self::generating_set`].
    pub fn homomorphisms(&self, target: &FiniteGroup) -> Vec<Vec<usize>> {
        let gens = self.generating_set();
        let candidates: Vec<Vec<usize>> = gens
            .iter()
            .map(|&g| {
                let o = self.element_order(g);
                (0..target.order()).filter(|&h| o % target.element_order(h) == 0).collect()
            })
            .collect();
        let mut out = Vec::new();
        let mut images = vec![0; gens.len()];
        self.hom_search(target, &gens, &candidates, 0, &mut images, &mut out);
        out
    }

    fn hom_search(
        &self,
        target: &FiniteGroup,
        gens: &[usize],
        candidates: &[Vec<usize>],
        depth: usize,
        images: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if depth == gens.len() {
            if let Some(map) = self.extend_hom(target, gens, images) {
                out.push(map);
            }
            return;
        }
        for &c in &candidates[depth] {
            images[depth] = c;
            self.hom_search(target, gens, candidates, depth + 1, images, out);
        }
    }

    /// Short isomorphism-type label.
    pub fn describe(&self) -> String {
        let n = self.order();
        if n == 1 {
            return "0".into();
        }
        if self.is_abelian() {
            return super::object::abelian_presentation(self).0.to_string();
        }
        match (n, (0..n).filter(|&x| self.element_order(x) == 2).count()) {
            (6, _) => "S3".into(),
            (8, 5) => "D4".into(),
            (8, 1) => "Q8".into(),
            _ => format!("nonabelian group of order {n}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_associative() {
        // latin square with identity 0 but not associative
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let names = (0..5).map(|i| i.to_string()).collect();
        let err = FiniteGroup::new(names, t).unwrap_err();
        assert!(matches!(err, GroupError::NotAGroup(msg) if msg.contains("associativity")));
    }

    #[test]
    fn standard_groups_validate() {
        for g in [FiniteGroup::cyclic(4), FiniteGroup::dihedral(3), FiniteGroup::dihedral(4), FiniteGroup::quaternion()] {
            let again = FiniteGroup::new(g.names().to_vec(), g.table().to_vec()).unwrap();
            assert_eq!(again, g);
        }
        assert_eq!(FiniteGroup::dihedral(4).describe(), "D4");
        assert_eq!(FiniteGroup::quaternion().describe(), "Q8");
        assert_eq!(FiniteGroup::dihedral(3).describe(), "S3");
    }

    #[test]
    fn quotient_of_z4() {
        let g = FiniteGroup::cyclic(4);
        let mask = g.closure(&[2]);
        let (q, proj) = g.quotient(&mask).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(proj, vec![0, 1, 0, 1]);
        assert_eq!(q.describe(), "Z/2");
    }

    #[test]
    fn s3_rotation_subset_not_normal_closure() {
        let s3 = FiniteGroup::dihedral(3);
        let s = s3.index_of("s").unwrap();
        let mask = s3.closure(&[s]);
        assert!(!s3.is_normal(&mask));
        assert!(matches!(s3.quotient(&mask), Err(GroupError::NotNormal)));
        assert_eq!(s3.normal_closure(&[s]).iter().filter(|&&b| b).count(), 6);
    }

    #[test]
    fn hom_counts() {
        let z4 = FiniteGroup::cyclic(4);
        let z2 = FiniteGroup::cyclic(2);
        assert_eq!(z4.homomorphisms(&z4).len(), 4);
        assert_eq!(z4.homomorphisms(&z2).len(), 2);
        let s3 = FiniteGroup::dihedral(3);
        assert_eq!(s3.homomorphisms(&s3).len(), 10);
    }
}
