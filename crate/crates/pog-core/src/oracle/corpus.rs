use crate::cone::Cone;
use crate::fixtures::generated;
use crate::group::{FgAbGroup, FiniteGroup, GroupObject};
use crate::preord::PreorderedGroup;

use super::enumerate_cones;

#[derive(Clone, Debug)]
pub struct CorpusObject {
    pub name: String,
    pub object: PreorderedGroup,
}

pub fn finite_corpus_groups() -> Vec<(String, FiniteGroup)> {
    let z2 = FiniteGroup::cyclic(2);
    vec![
        ("Z/2".into(), z2.clone()),
        ("Z/3".into(), FiniteGroup::cyclic(3)),
        ("Z/4".into(), FiniteGroup::cyclic(4)),
        ("Z/2xZ/2".into(), z2.product(&z2)),
        ("S3".into(), FiniteGroup::dihedral(3)),
        ("D4".into(), FiniteGroup::dihedral(4)),
        ("Q8".into(), FiniteGroup::quaternion()),
        ("Z/6".into(), FiniteGroup::cyclic(6)),
    ]
}

/// Every corpus group with every cone, groups in corpus order.
pub fn finite_corpus() -> Vec<CorpusObject> {
    let mut out = Vec::new();
    for (name, g) in finite_corpus_groups() {
        let obj: GroupObject = g.clone().into();
        for cone in enumerate_cones(&obj).expect("finite") {
            let elems: Vec<&str> = cone.elements().expect("finite").iter().map(|x| g.name(x.as_index())).collect();
            out.push(CorpusObject {
                name: format!("({name}, {{{}}})", elems.join(",")),
                object: PreorderedGroup::new(obj.clone(), cone).expect("enumerated cones are valid"),
            });
        }
    }
    out
}

pub fn fgab_corpus() -> Vec<CorpusObject> {
    let z: GroupObject = FgAbGroup::free(1).into();
    let entries = vec![
        ("(Z,N)", generated(1, &[&[1]])),
        ("(Z,Z)", PreorderedGroup::total(z.clone())),
        ("(Z,0)", PreorderedGroup::new(z.clone(), Cone::trivial(z)).expect("trivial cone")),
        ("(Z^2,N^2)", generated(2, &[&[1, 0], &[0, 1]])),
        ("(Z^2,<(1,0),(1,1)>)", generated(2, &[&[1, 0], &[1, 1]])),
        ("(Z^2,<(1,0),(0,1),(-1,-1)>)", generated(2, &[&[1, 0], &[0, 1], &[-1, -1]])),
        ("(Z^2,<(2,0),(-1,0),(0,1)>)", generated(2, &[&[2, 0], &[-1, 0], &[0, 1]])),
        ("(Z^2,ZxN)", generated(2, &[&[1, 0], &[-1, 0], &[0, 1]])),
    ];
    entries.into_iter().map(|(name, object)| CorpusObject { name: name.into(), object }).collect()
}

pub fn corpus() -> Vec<CorpusObject> {
    let mut all = finite_corpus();
    all.extend(fgab_corpus());
    all
}
