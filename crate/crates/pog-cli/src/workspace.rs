//! The JSON workspace document: named groups, cones, objects and morphisms.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde_json::{Map, Value};
use thiserror::Error;

use pog_core::cone::Cone;
use pog_core::group::{FgAbGroup, FiniteGroup, GroupElement, GroupHom, GroupObject, IntMatrix};
use pog_core::oracle::{fgab_corpus, finite_corpus};
use pog_core::preord::{POGMorphism, PreorderedGroup};

#[derive(Debug, Error)]
pub enum InputError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("{kind} {name:?}: {message}")]
    Validation { kind: &'static str, name: String, message: String },
    #[error("unknown {kind} {name:?}")]
    Unknown { kind: &'static str, name: String },
    #[error("{0}")]
    Usage(String),
}

impl InputError {
    fn invalid(kind: &'static str, name: &str, message: impl ToString) -> Self {
        InputError::Validation { kind, name: name.to_string(), message: message.to_string() }
    }
}

#[derive(Debug, Default)]
pub struct Workspace {
    pub groups: BTreeMap<String, GroupObject>,
    pub cones: BTreeMap<String, Cone>,
    pub objects: BTreeMap<String, PreorderedGroup>,
    pub morphisms: BTreeMap<String, POGMorphism>,
}

impl Workspace {
    pub fn object(&self, name: &str) -> Result<&PreorderedGroup, InputError> {
        self.objects.get(name).ok_or_else(|| InputError::Unknown { kind: "object", name: name.into() })
    }

    pub fn morphism(&self, name: &str) -> Result<&POGMorphism, InputError> {
        self.morphisms.get(name).ok_or_else(|| InputError::Unknown { kind: "morphism", name: name.into() })
    }

    pub fn group(&self, name: &str) -> Result<&GroupObject, InputError> {
        self.groups.get(name).ok_or_else(|| InputError::Unknown { kind: "group", name: name.into() })
    }

    /// Every corpus object under its corpus name, with its group under the
    /// group's description.
    pub fn corpus() -> Self {
        let mut ws = Workspace::default();
        for c in finite_corpus().into_iter().chain(fgab_corpus()) {
            let g = c.object.group().clone();
            ws.groups.entry(g.describe()).or_insert(g);
            ws.cones.insert(c.name.clone(), c.object.cone().clone());
            ws.objects.insert(c.name, c.object);
        }
        ws
    }
}

fn section<'a>(doc: &'a Map<String, Value>, key: &str) -> Result<Option<&'a Map<String, Value>>, InputError> {
    match doc.get(key) {
        None => Ok(None),
        Some(Value::Object(m)) => Ok(Some(m)),
        Some(_) => Err(InputError::Usage(format!("top-level {key:?} must be an object"))),
    }
}

fn field<'a>(kind: &'static str, name: &str, v: &'a Value, key: &str) -> Result<&'a Value, InputError> {
    v.get(key).ok_or_else(|| InputError::invalid(kind, name, format!("missing {key:?}")))
}

fn string<'a>(kind: &'static str, name: &str, v: &'a Value, key: &str) -> Result<&'a str, InputError> {
    field(kind, name, v, key)?.as_str().ok_or_else(|| InputError::invalid(kind, name, format!("{key:?} must be a string")))
}

fn int(kind: &'static str, name: &str, v: &Value) -> Result<BigInt, InputError> {
    match v {
        Value::Number(n) if n.is_i64() => Ok(BigInt::from(n.as_i64().unwrap_or_default())),
        Value::Number(n) if n.is_u64() => Ok(BigInt::from(n.as_u64().unwrap_or_default())),
        _ => Err(InputError::invalid(kind, name, format!("expected an integer, found {v}"))),
    }
}

fn array<'a>(kind: &'static str, name: &str, v: &'a Value) -> Result<&'a Vec<Value>, InputError> {
    v.as_array().ok_or_else(|| InputError::invalid(kind, name, format!("expected an array, found {v}")))
}

fn int_vec(kind: &'static str, name: &str, v: &Value) -> Result<Vec<BigInt>, InputError> {
    array(kind, name, v)?.iter().map(|x| int(kind, name, x)).collect()
}

fn int_rows(kind: &'static str, name: &str, v: &Value) -> Result<Vec<Vec<BigInt>>, InputError> {
    array(kind, name, v)?.iter().map(|r| int_vec(kind, name, r)).collect()
}

fn index(kind: &'static str, name: &str, v: &Value) -> Result<usize, InputError> {
    v.as_u64()
        .and_then(|x| usize::try_from(x).ok())
        .ok_or_else(|| InputError::invalid(kind, name, format!("expected an index, found {v}")))
}

pub fn parse_workspace(text: &str) -> Result<Workspace, InputError> {
    let doc: Value = serde_json::from_str(text)
        .map_err(|e| InputError::Parse { line: e.line(), column: e.column(), message: e.to_string() })?;
    let doc = doc.as_object().ok_or_else(|| InputError::Usage("workspace must be a JSON object".into()))?;
    let mut ws = Workspace::default();

    for (name, v) in section(doc, "groups")?.into_iter().flatten() {
        ws.groups.insert(name.clone(), parse_group(name, v)?);
    }
    for (name, v) in section(doc, "cones")?.into_iter().flatten() {
        let cone = parse_cone(&ws, name, v)?;
        ws.cones.insert(name.clone(), cone);
    }
    for (name, v) in section(doc, "objects")?.into_iter().flatten() {
        let group = ws.group(string("object", name, v, "group")?)?.clone();
        let cone_name = string("object", name, v, "cone")?;
        let cone = ws.cones.get(cone_name).ok_or_else(|| InputError::Unknown { kind: "cone", name: cone_name.into() })?;
        let obj = PreorderedGroup::new(group, cone.clone()).map_err(|e| InputError::invalid("object", name, e))?;
        ws.objects.insert(name.clone(), obj);
    }
    for (name, v) in section(doc, "morphisms")?.into_iter().flatten() {
        let m = parse_morphism(&ws, name, v)?;
        ws.morphisms.insert(name.clone(), m);
    }
    Ok(ws)
}

fn parse_group(name: &str, v: &Value) -> Result<GroupObject, InputError> {
    const K: &str = "group";
    match string(K, name, v, "kind")? {
        "finite" => {
            let names = array(K, name, field(K, name, v, "elements")?)?
                .iter()
                .map(|x| x.as_str().map(String::from).ok_or_else(|| InputError::invalid(K, name, "element names must be strings")))
                .collect::<Result<Vec<_>, _>>()?;
            let table = array(K, name, field(K, name, v, "table")?)?
                .iter()
                .map(|row| array(K, name, row)?.iter().map(|x| index(K, name, x)).collect())
                .collect::<Result<Vec<Vec<usize>>, _>>()?;
            Ok(FiniteGroup::new(names, table).map_err(|e| InputError::invalid(K, name, e))?.into())
        }
        "fgab" => {
            let rank = index(K, name, field(K, name, v, "rank")?)?;
            let torsion = match v.get("torsion") {
                Some(t) => int_vec(K, name, t)?,
                None => Vec::new(),
            };
            if let Some(d) = torsion.iter().find(|d| **d < BigInt::from(2)) {
                return Err(InputError::invalid(K, name, format!("torsion order {d} is below 2")));
            }
            Ok(FgAbGroup::new(rank, torsion).map_err(|e| InputError::invalid(K, name, e))?.into())
        }
        other => Err(InputError::invalid(K, name, format!("unknown kind {other:?}"))),
    }
}

/// Reduces raw coordinates into an element, checking the length.
fn ab_element(g: &FgAbGroup, kind: &'static str, name: &str, coords: Vec<BigInt>) -> Result<GroupElement, InputError> {
    if coords.len() != g.dim() {
        return Err(InputError::invalid(kind, name, format!("vector of length {} for a group of dimension {}", coords.len(), g.dim())));
    }
    Ok(GroupElement::Ab(g.reduce(coords)))
}

fn parse_cone(ws: &Workspace, name: &str, v: &Value) -> Result<Cone, InputError> {
    const K: &str = "cone";
    let group = ws.group(string(K, name, v, "group")?)?.clone();
    match (v.get("elements"), v.get("generators"), &group) {
        (Some(e), None, GroupObject::Finite(g)) => {
            let elems = array(K, name, e)?
                .iter()
                .map(|x| {
                    let s = x.as_str().ok_or_else(|| InputError::invalid(K, name, "element names must be strings"))?;
                    g.index_of(s)
                        .map(GroupElement::Finite)
                        .ok_or_else(|| InputError::invalid(K, name, format!("unknown element {s:?}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Cone::explicit(group.clone(), &elems))
        }
        (None, Some(gens), GroupObject::FgAb(g)) => {
            let gens = int_rows(K, name, gens)?
                .into_iter()
                .map(|c| ab_element(g, K, name, c))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Cone::generated(group.clone(), gens))
        }
        (Some(_), Some(_), _) => Err(InputError::invalid(K, name, "give either \"elements\" or \"generators\"")),
        (None, None, _) => Err(InputError::invalid(K, name, "missing \"elements\" or \"generators\"")),
        (Some(_), None, _) => Err(InputError::invalid(K, name, "\"elements\" needs a finite group")),
        (None, Some(_), _) => Err(InputError::invalid(K, name, "\"generators\" needs an fgab group")),
    }
}

/// A plain row matrix, or blocks `free` (r'×r), `mixed` (t'×r) and
/// `torsion` (t'×t) assembled as `[[free, 0], [mixed, torsion]]`.
fn parse_matrix(name: &str, v: &Value, dom: &FgAbGroup, cod: &FgAbGroup) -> Result<IntMatrix, InputError> {
    const K: &str = "morphism";
    let (rows, cols) = (cod.dim(), dom.dim());
    if v.is_array() {
        let m = int_rows(K, name, v)?;
        if m.len() != rows || m.iter().any(|r| r.len() != cols) {
            return Err(InputError::invalid(K, name, format!("matrix must be {rows}x{cols}")));
        }
        return Ok(if rows == 0 || cols == 0 { IntMatrix::zeros(rows, cols) } else { IntMatrix::from_rows(m) });
    }
    let (r, t) = (dom.rank(), dom.torsion().len());
    let (r2, t2) = (cod.rank(), cod.torsion().len());
    let mut out = IntMatrix::zeros(rows, cols);
    for (key, row0, col0, h, w) in [("free", 0, 0, r2, r), ("mixed", r2, 0, t2, r), ("torsion", r2, r, t2, t)] {
        let Some(block) = v.get(key) else { continue };
        let b = int_rows(K, name, block)?;
        if b.len() != h || b.iter().any(|row| row.len() != w) {
            return Err(InputError::invalid(K, name, format!("block {key:?} must be {h}x{w}")));
        }
        for (i, row) in b.into_iter().enumerate() {
            for (j, x) in row.into_iter().enumerate() {
                out.set(row0 + i, col0 + j, x);
            }
        }
    }
    Ok(out)
}

fn parse_morphism(ws: &Workspace, name: &str, v: &Value) -> Result<POGMorphism, InputError> {
    const K: &str = "morphism";
    let dom = ws.object(string(K, name, v, "from")?)?;
    let cod = ws.object(string(K, name, v, "to")?)?;
    let map = match (v.get("map"), v.get("matrix"), dom.group(), cod.group()) {
        (Some(t), None, GroupObject::Finite(_), GroupObject::Finite(_)) => {
            let table = array(K, name, t)?.iter().map(|x| index(K, name, x)).collect::<Result<Vec<_>, _>>()?;
            GroupHom::from_table(dom.group().clone(), cod.group().clone(), table)
        }
        (None, Some(m), GroupObject::FgAb(a), GroupObject::FgAb(b)) => {
            let m = parse_matrix(name, m, a, b)?;
            GroupHom::from_matrix(dom.group().clone(), cod.group().clone(), m)
        }
        (None, None, _, _) => return Err(InputError::invalid(K, name, "missing \"map\" or \"matrix\"")),
        _ => return Err(InputError::invalid(K, name, "\"map\" joins finite groups, \"matrix\" joins fgab groups")),
    }
    .map_err(|e| InputError::invalid(K, name, e))?;
    POGMorphism::new(map, dom, cod).map_err(|e| InputError::invalid(K, name, e))
}
