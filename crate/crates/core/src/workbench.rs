//! File ingestion and emission: the JSON forms of lattices, quantaloids,
//! categories, distributors, metric spaces and preorders, plus input
//! sniffing for the CLI. Emitted documents re-load to equal values.

use crate::error::{Error, Result};
use crate::hausdorff::HausdorffCat;
use crate::lattice::SupLattice;
use crate::qcat::{Distributor, QCategory};
use crate::quantaloid::{Quantaloid, Value};
use serde_json::{json, Map, Value as Json};
use std::sync::Arc;

fn as_object<'j>(j: &'j Json, what: &str) -> Result<&'j Map<String, Json>> {
    j.as_object().ok_or_else(|| Error::parse(format!("{what}: expected a JSON object")))
}

fn as_array<'j>(j: &'j Json, what: &str) -> Result<&'j Vec<Json>> {
    j.as_array().ok_or_else(|| Error::parse(format!("{what}: expected a JSON array")))
}

fn as_str<'j>(j: &'j Json, what: &str) -> Result<&'j str> {
    j.as_str().ok_or_else(|| Error::parse(format!("{what}: expected a JSON string")))
}

fn field<'j>(obj: &'j Map<String, Json>, key: &str, what: &str) -> Result<&'j Json> {
    obj.get(key).ok_or_else(|| Error::parse(format!("{what}: missing field {key:?}")))
}

fn string_list(j: &Json, what: &str) -> Result<Vec<String>> {
    as_array(j, what)?.iter().map(|s| Ok(as_str(s, what)?.to_string())).collect()
}

fn check_id(id: &str) -> Result<()> {
    if id.contains('|') {
        return Err(Error::parse(format!("id {id:?} may not contain '|'")));
    }
    Ok(())
}

/// A hom value from JSON: a string in the quantaloid's value syntax, or a
/// bare number (kept exact by the arbitrary-precision parser).
pub fn value_from_json(q: &Quantaloid, src: usize, dst: usize, j: &Json) -> Result<Value> {
    match j {
        Json::String(s) => q.parse_value(src, dst, s),
        Json::Number(n) => q.parse_value(src, dst, &n.to_string()),
        _ => Err(Error::parse("hom value: expected a string or number")),
    }
}

pub fn lattice_from_json(j: &Json) -> Result<SupLattice> {
    let obj = as_object(j, "lattice")?;
    let elements = string_list(field(obj, "elements", "lattice")?, "lattice elements")?;
    for e in &elements {
        check_id(e)?;
    }
    let mut pairs = Vec::new();
    for pair in as_array(field(obj, "leq", "lattice")?, "lattice leq")? {
        let pair = as_array(pair, "lattice leq pair")?;
        if pair.len() != 2 {
            return Err(Error::parse("lattice leq pair must have two entries"));
        }
        pairs.push((
            as_str(&pair[0], "lattice leq")?.to_string(),
            as_str(&pair[1], "lattice leq")?.to_string(),
        ));
    }
    SupLattice::from_pairs(elements, &pairs)
}

pub fn lattice_to_json(l: &SupLattice) -> Json {
    let mut pairs = Vec::new();
    for a in 0..l.len() {
        for b in 0..l.len() {
            if a != b && l.leq(a, b) {
                pairs.push(json!([l.id_of(a), l.id_of(b)]));
            }
        }
    }
    json!({ "elements": l.elements(), "leq": pairs })
}

/// Loads a quantaloid and rejects any axiom violation.
pub fn quantaloid_from_json(j: &Json) -> Result<Arc<Quantaloid>> {
    let q = quantaloid_from_json_unvalidated(j)?;
    let violations = q.validate();
    if !violations.is_empty() {
        return Err(Error::invalid("quantaloid", violations[0].0.clone()));
    }
    Ok(q)
}

/// Loads a quantaloid after shape checks only, so `validate` can report the
/// full violation list of a deliberately broken table.
pub fn quantaloid_from_json_unvalidated(j: &Json) -> Result<Arc<Quantaloid>> {
    if let Json::String(name) = j {
        return Ok(Arc::new(Quantaloid::builtin(name)?));
    }
    let obj = as_object(j, "quantaloid")?;
    let objects = string_list(field(obj, "objects", "quantaloid")?, "quantaloid objects")?;
    for o in &objects {
        check_id(o)?;
    }
    let index = |id: &str| -> Result<usize> {
        objects
            .iter()
            .position(|o| o == id)
            .ok_or_else(|| Error::parse(format!("quantaloid: unknown object {id:?}")))
    };
    let mut homs = std::collections::BTreeMap::new();
    for (key, lattice) in as_object(field(obj, "homs", "quantaloid")?, "homs")? {
        let (x, y) = key
            .split_once('|')
            .ok_or_else(|| Error::parse(format!("hom key {key:?} is not 'X|Y'")))?;
        homs.insert((index(x)?, index(y)?), lattice_from_json(lattice)?);
    }
    let mut compose = std::collections::BTreeMap::new();
    for (key, table) in as_object(field(obj, "compose", "quantaloid")?, "compose")? {
        let parts: Vec<&str> = key.split('|').collect();
        if parts.len() != 3 {
            return Err(Error::parse(format!("compose key {key:?} is not 'X|Y|Z'")));
        }
        let (x, y, z) = (index(parts[0])?, index(parts[1])?, index(parts[2])?);
        let hom_yz = homs.get(&(y, z)).ok_or_else(|| Error::parse(format!("compose {key:?}: hom missing")))?;
        let hom_xy = homs.get(&(x, y)).ok_or_else(|| Error::parse(format!("compose {key:?}: hom missing")))?;
        let hom_xz = homs.get(&(x, z)).ok_or_else(|| Error::parse(format!("compose {key:?}: hom missing")))?;
        let mut table_ix = vec![vec![usize::MAX; hom_xy.len()]; hom_yz.len()];
        for entry in as_array(table, "compose table")? {
            let entry = as_array(entry, "compose entry")?;
            if entry.len() != 3 {
                return Err(Error::parse("compose entry must be [g, f, result]"));
            }
            let g = hom_yz.index_of(as_str(&entry[0], "compose g")?)?;
            let f = hom_xy.index_of(as_str(&entry[1], "compose f")?)?;
            let r = hom_xz.index_of(as_str(&entry[2], "compose result")?)?;
            table_ix[g][f] = r;
        }
        if table_ix.iter().flatten().any(|&r| r == usize::MAX) {
            return Err(Error::parse(format!("compose table {key:?} does not cover every pair")));
        }
        compose.insert((x, y, z), table_ix);
    }
    let identities_obj = as_object(field(obj, "identities", "quantaloid")?, "identities")?;
    let mut identities = vec![usize::MAX; objects.len()];
    for (name, elem) in identities_obj {
        let x = index(name)?;
        let hom_xx = homs
            .get(&(x, x))
            .ok_or_else(|| Error::parse(format!("identity of {name:?}: hom missing")))?;
        identities[x] = hom_xx.index_of(as_str(elem, "identity element")?)?;
    }
    if identities.contains(&usize::MAX) {
        return Err(Error::parse("an identity is missing for some object"));
    }
    let name = obj.get("name").and_then(|n| n.as_str()).unwrap_or("table");
    Ok(Arc::new(Quantaloid::table(name, objects, homs, compose, identities)?))
}

pub fn quantaloid_to_json(q: &Quantaloid) -> Json {
    if !q.enumerable() {
        return json!("lawvere");
    }
    if q.name() == "bool" || q.name().starts_with("chain:") {
        return json!(q.name());
    }
    let objects = q.objects();
    let mut homs = Map::new();
    let mut compose = Map::new();
    let mut identities = Map::new();
    for x in 0..objects.len() {
        for y in 0..objects.len() {
            let lat = q.hom_lattice(x, y).expect("enumerable");
            homs.insert(format!("{}|{}", objects[x], objects[y]), lattice_to_json(lat));
            for z in 0..objects.len() {
                let lat_yz = q.hom_lattice(y, z).unwrap();
                let lat_xy = q.hom_lattice(x, y).unwrap();
                let lat_xz = q.hom_lattice(x, z).unwrap();
                let mut entries = Vec::new();
                for g in 0..lat_yz.len() {
                    for f in 0..lat_xy.len() {
                        let r = q
                            .compose_values(x, y, z, &Value::Elem(g), &Value::Elem(f))
                            .expect("table compose");
                        let Value::Elem(r) = r else { unreachable!() };
                        entries.push(json!([lat_yz.id_of(g), lat_xy.id_of(f), lat_xz.id_of(r)]));
                    }
                }
                compose.insert(
                    format!("{}|{}|{}", objects[x], objects[y], objects[z]),
                    Json::Array(entries),
                );
            }
        }
        let id = q.identity_value(x);
        identities.insert(objects[x].clone(), json!(q.render_value(x, x, &id)));
    }
    json!({
        "name": q.name(),
        "objects": objects,
        "homs": homs,
        "compose": compose,
        "identities": identities,
    })
}

pub fn category_from_json(j: &Json) -> Result<Arc<QCategory>> {
    let obj = as_object(j, "category")?;
    let q = quantaloid_from_json(field(obj, "quantaloid", "category")?)?;
    let objects = string_list(field(obj, "objects", "category")?, "category objects")?;
    for o in &objects {
        check_id(o)?;
    }
    let types: Vec<usize> = match obj.get("types") {
        Some(t) => {
            let tmap = as_object(t, "types")?;
            objects
                .iter()
                .map(|o| {
                    let ty = tmap
                        .get(o)
                        .ok_or_else(|| Error::parse(format!("types: missing type of {o:?}")))?;
                    q.object_index(as_str(ty, "type")?)
                })
                .collect::<Result<_>>()?
        }
        None if q.object_count() == 1 => vec![0; objects.len()],
        None => return Err(Error::parse("category: types required for multi-object quantaloids")),
    };
    let hom_obj = as_object(field(obj, "hom", "category")?, "hom")?;
    let pos = |id: &str| -> Result<usize> {
        objects
            .iter()
            .position(|o| o == id)
            .ok_or_else(|| Error::parse(format!("hom key references unknown object {id:?}")))
    };
    let mut hom: Vec<Vec<Option<Value>>> = vec![vec![None; objects.len()]; objects.len()];
    for (key, v) in hom_obj {
        let (a1, a0) = key
            .split_once('|')
            .ok_or_else(|| Error::parse(format!("hom key {key:?} is not \"a'|a\"")))?;
        let (i, j_) = (pos(a1)?, pos(a0)?);
        hom[i][j_] = Some(value_from_json(&q, types[j_], types[i], v)?);
    }
    let hom: Vec<Vec<Value>> = hom
        .into_iter()
        .enumerate()
        .map(|(i, row)| {
            row.into_iter()
                .enumerate()
                .map(|(j_, v)| {
                    v.ok_or_else(|| {
                        Error::parse(format!("hom: missing entry {}|{}", objects[i], objects[j_]))
                    })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    Ok(Arc::new(QCategory::new(q, objects, types, hom)?))
}

pub fn category_to_json(cat: &QCategory) -> Json {
    let q = cat.quantaloid();
    let mut hom = Map::new();
    for a1 in 0..cat.len() {
        for a0 in 0..cat.len() {
            hom.insert(
                format!("{}|{}", cat.object_id(a1), cat.object_id(a0)),
                json!(q.render_value(cat.type_of(a0), cat.type_of(a1), cat.hom_value(a1, a0))),
            );
        }
    }
    let mut types = Map::new();
    for a in 0..cat.len() {
        types.insert(cat.object_id(a).to_string(), json!(q.object_id(cat.type_of(a))));
    }
    json!({
        "quantaloid": quantaloid_to_json(q),
        "objects": cat.object_ids(),
        "types": types,
        "hom": hom,
    })
}

pub fn distributor_from_json(j: &Json) -> Result<Distributor> {
    let obj = as_object(j, "distributor")?;
    let dom = category_from_json(field(obj, "dom", "distributor")?)?;
    let cod = category_from_json(field(obj, "cod", "distributor")?)?;
    if dom.quantaloid() != cod.quantaloid() {
        return Err(Error::TypeMismatch("distributor ends over different quantaloids".into()));
    }
    // share one quantaloid instance so arrows compose
    let q = dom.quantaloid().clone();
    let cod = Arc::new(QCategory::new(
        q,
        cod.object_ids().to_vec(),
        cod.types().to_vec(),
        (0..cod.len())
            .map(|b| (0..cod.len()).map(|a| cod.hom_value(b, a).clone()).collect())
            .collect(),
    )?);
    let matrix_obj = as_object(field(obj, "matrix", "distributor")?, "matrix")?;
    let mut matrix: Vec<Vec<Option<Value>>> = vec![vec![None; dom.len()]; cod.len()];
    for (key, v) in matrix_obj {
        let (b, a) = key
            .split_once('|')
            .ok_or_else(|| Error::parse(format!("matrix key {key:?} is not 'b|a'")))?;
        let bi = cod.object_index(b)?;
        let ai = dom.object_index(a)?;
        matrix[bi][ai] = Some(value_from_json(
            dom.quantaloid(),
            dom.type_of(ai),
            cod.type_of(bi),
            v,
        )?);
    }
    let matrix: Vec<Vec<Value>> = matrix
        .into_iter()
        .enumerate()
        .map(|(b, row)| {
            row.into_iter()
                .enumerate()
                .map(|(a, v)| {
                    v.ok_or_else(|| {
                        Error::parse(format!(
                            "matrix: missing entry {}|{}",
                            cod.object_id(b),
                            dom.object_id(a)
                        ))
                    })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    Distributor::new(dom, cod, matrix)
}

pub fn distributor_to_json(d: &Distributor) -> Json {
    let q = d.dom().quantaloid();
    let mut matrix = Map::new();
    for b in 0..d.cod().len() {
        for a in 0..d.dom().len() {
            matrix.insert(
                format!("{}|{}", d.cod().object_id(b), d.dom().object_id(a)),
                json!(q.render_value(d.dom().type_of(a), d.cod().type_of(b), d.value(b, a))),
            );
        }
    }
    json!({
        "dom": category_to_json(d.dom()),
        "cod": category_to_json(d.cod()),
        "matrix": matrix,
    })
}

/// Validation profile for metric space files.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MetricProfile {
    /// Triangle inequality enforced at load.
    Metric,
    /// Any matrix of extended nonnegative rationals.
    Generalized,
}

/// Loads a metric space file into a category over the Lawvere quantale. The
/// hom orientation makes the composition axiom the triangle inequality.
pub fn load_metric_space(j: &Json, default_profile: MetricProfile) -> Result<Arc<QCategory>> {
    let obj = as_object(j, "metric space")?;
    let points = string_list(field(obj, "points", "metric space")?, "points")?;
    for p in &points {
        check_id(p)?;
    }
    let profile = match obj.get("profile") {
        Some(p) => match as_str(p, "profile")? {
            "metric" => MetricProfile::Metric,
            "generalized" => MetricProfile::Generalized,
            other => return Err(Error::parse(format!("unknown profile {other:?}"))),
        },
        None => default_profile,
    };
    let q = Arc::new(Quantaloid::lawvere());
    let rows = as_array(field(obj, "distances", "metric space")?, "distances")?;
    if rows.len() != points.len() {
        return Err(Error::parse("distances: one row per point required"));
    }
    let mut hom = Vec::with_capacity(points.len());
    for row in rows {
        let row = as_array(row, "distances row")?;
        if row.len() != points.len() {
            return Err(Error::parse("distances: matrix is not square"));
        }
        hom.push(
            row.iter()
                .map(|v| value_from_json(&q, 0, 0, v))
                .collect::<Result<Vec<_>>>()?,
        );
    }
    if profile == MetricProfile::Metric {
        let get = |i: usize, j_: usize| match &hom[i][j_] {
            Value::Ext(r) => r.clone(),
            Value::Elem(_) => unreachable!("lawvere values"),
        };
        let n = points.len();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if get(x, z) > get(x, y).add(&get(y, z)) {
                        return Err(Error::TriangleViolation {
                            x: points[x].clone(),
                            y: points[y].clone(),
                            z: points[z].clone(),
                        });
                    }
                }
            }
        }
    }
    Ok(Arc::new(QCategory::new(q, points, vec![0; hom.len()], hom)?))
}

/// Loads a preorder file into a category over the Boolean quantale.
/// Reflexive pairs may be omitted; transitivity is validated, not repaired.
pub fn load_preorder(j: &Json) -> Result<Arc<QCategory>> {
    let obj = as_object(j, "preorder")?;
    let elements = string_list(field(obj, "elements", "preorder")?, "elements")?;
    for e in &elements {
        check_id(e)?;
    }
    let n = elements.len();
    let pos = |id: &str| -> Result<usize> {
        elements
            .iter()
            .position(|e| e == id)
            .ok_or_else(|| Error::parse(format!("preorder: unknown element {id:?}")))
    };
    let mut rel = vec![vec![false; n]; n];
    for (i, row) in rel.iter_mut().enumerate() {
        row[i] = true;
    }
    for pair in as_array(field(obj, "leq", "preorder")?, "leq")? {
        let pair = as_array(pair, "leq pair")?;
        if pair.len() != 2 {
            return Err(Error::parse("leq pair must have two entries"));
        }
        rel[pos(as_str(&pair[0], "leq")?)?][pos(as_str(&pair[1], "leq")?)?] = true;
    }
    for i in 0..n {
        for j_ in 0..n {
            for k in 0..n {
                if rel[i][j_] && rel[j_][k] && !rel[i][k] {
                    return Err(Error::invalid(
                        "preorder",
                        format!(
                            "transitivity fails: {} <= {} <= {} but not {} <= {}",
                            elements[i], elements[j_], elements[k], elements[i], elements[k]
                        ),
                    ));
                }
            }
        }
    }
    let q = Arc::new(Quantaloid::boolean());
    let hom = (0..n)
        .map(|i| (0..n).map(|j_| Value::Elem(usize::from(rel[i][j_]))).collect())
        .collect();
    Ok(Arc::new(QCategory::new(q, elements, vec![0; n], hom)?))
}

pub fn preorder_to_json(cat: &QCategory) -> Json {
    let mut pairs = Vec::new();
    for a1 in 0..cat.len() {
        for a0 in 0..cat.len() {
            if a1 != a0 && *cat.hom_value(a1, a0) == Value::Elem(1) {
                pairs.push(json!([cat.object_id(a1), cat.object_id(a0)]));
            }
        }
    }
    json!({ "elements": cat.object_ids(), "leq": pairs })
}

/// The Hausdorff category with its generator index, for `hcat` output.
pub fn hausdorff_to_json(h: &HausdorffCat) -> Json {
    let mut index = Map::new();
    for (i, gens) in h.generators.iter().enumerate() {
        let names: Vec<&str> = gens.iter().map(|&a| h.pcat().base().object_id(a)).collect();
        index.insert(h.cat().object_id(i).to_string(), json!(names));
    }
    json!({
        "category": category_to_json(h.cat()),
        "index": index,
    })
}

/// What kind of document a JSON file contains, for `validate` and loaders.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputKind {
    Lattice,
    Quantaloid,
    Category,
    Distributor,
    MetricSpace,
    Preorder,
}

/// Sniffs the document kind from an explicit `kind` field or the key shape.
pub fn sniff_kind(j: &Json) -> Result<InputKind> {
    let obj = as_object(j, "input")?;
    if let Some(kind) = obj.get("kind") {
        return match as_str(kind, "kind")? {
            "lattice" => Ok(InputKind::Lattice),
            "quantaloid" => Ok(InputKind::Quantaloid),
            "category" => Ok(InputKind::Category),
            "distributor" => Ok(InputKind::Distributor),
            "metric" | "metric-space" => Ok(InputKind::MetricSpace),
            "preorder" => Ok(InputKind::Preorder),
            other => Err(Error::parse(format!("unknown kind {other:?}"))),
        };
    }
    if obj.contains_key("points") && obj.contains_key("distances") {
        return Ok(InputKind::MetricSpace);
    }
    if obj.contains_key("dom") && obj.contains_key("cod") && obj.contains_key("matrix") {
        return Ok(InputKind::Distributor);
    }
    if obj.contains_key("homs") && obj.contains_key("compose") {
        return Ok(InputKind::Quantaloid);
    }
    if obj.contains_key("objects") && obj.contains_key("hom") {
        return Ok(InputKind::Category);
    }
    if obj.contains_key("elements") && obj.contains_key("leq") {
        return Ok(InputKind::Preorder);
    }
    Err(Error::parse("cannot determine input kind; add a \"kind\" field"))
}

/// Loads any category-like input (category, metric space, preorder) for the
/// commands that want a Q-category.
pub fn load_category_like(j: &Json, profile: MetricProfile) -> Result<Arc<QCategory>> {
    match sniff_kind(j)? {
        InputKind::Category => category_from_json(j),
        InputKind::MetricSpace => load_metric_space(j, profile),
        InputKind::Preorder => load_preorder(j),
        other => Err(Error::parse(format!("expected a category-like input, found {other:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Json {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn metric_space_loads_and_round_trips() {
        let j = parse(
            r#"{"points": ["0", "1", "4"],
                "distances": [[0, 1, 4], [1, 0, 3], [4, 3, 0]]}"#,
        );
        let cat = load_metric_space(&j, MetricProfile::Metric).unwrap();
        assert!(cat.validate().is_empty());
        let emitted = category_to_json(&cat);
        let back = category_from_json(&emitted).unwrap();
        assert_eq!(*cat, *back);
    }

    #[test]
    fn decimal_distances_parse_exactly() {
        let j = parse(r#"{"points": ["a", "b"], "distances": [[0, 0.1], ["1/10", "0"]]}"#);
        let cat = load_metric_space(&j, MetricProfile::Metric).unwrap();
        assert_eq!(cat.hom_value(0, 1), cat.hom_value(1, 0));
    }

    #[test]
    fn triangle_violation_names_the_triple() {
        let j = parse(
            r#"{"points": ["x", "y", "z"],
                "distances": [[0, 1, 10], [1, 0, 1], [10, 1, 0]]}"#,
        );
        match load_metric_space(&j, MetricProfile::Metric) {
            Err(Error::TriangleViolation { x, y, z }) => {
                assert_eq!((x.as_str(), y.as_str(), z.as_str()), ("x", "y", "z"));
            }
            other => panic!("expected TriangleViolation, got {other:?}"),
        }
        // same file passes under the generalized profile
        assert!(load_metric_space(&j, MetricProfile::Generalized).is_ok());
    }

    #[test]
    fn preorder_loads_and_validates_transitivity() {
        let chain = parse(r#"{"elements": ["a", "b", "c"], "leq": [["a","b"],["b","c"],["a","c"]]}"#);
        let cat = load_preorder(&chain).unwrap();
        assert!(cat.validate().is_empty());
        let hole = parse(r#"{"elements": ["a", "b", "c"], "leq": [["a","b"],["b","c"]]}"#);
        assert!(load_preorder(&hole).is_err());
        // cycles are legitimate preorders
        let cycle = parse(r#"{"elements": ["a", "b"], "leq": [["a","b"],["b","a"]]}"#);
        assert!(load_preorder(&cycle).is_ok());
    }

    #[test]
    fn table_quantaloid_round_trips() {
        let q = Quantaloid::boolean();
        let j = quantaloid_to_json(&q);
        let back = quantaloid_from_json(&j).unwrap();
        assert_eq!(q, *back);
        // a non-builtin: serialize fully and reload
        let chain = Quantaloid::chain(3);
        let mut j = quantaloid_to_json(&chain);
        // force the table form by renaming
        if let Json::String(_) = j {
            j = {
                let renamed = Quantaloid::one_object_table(
                    "mychain",
                    crate::lattice::SupLattice::chain(vec!["0".into(), "1".into(), "2".into()]),
                    vec![vec![0, 0, 0], vec![0, 1, 1], vec![0, 1, 2]],
                    2,
                )
                .unwrap();
                quantaloid_to_json(&renamed)
            };
        }
        let back = quantaloid_from_json(&j).unwrap();
        assert!(back.validate().is_empty());
    }

    #[test]
    fn invalid_quantaloid_table_is_rejected_by_the_loader() {
        let j = parse(
            r#"{"objects": ["X"],
                "homs": {"X|X": {"elements": ["0", "1"], "leq": [["0", "1"]]}},
                "compose": {"X|X|X": [["0","0","0"],["0","1","1"],["1","0","1"],["1","1","1"]]},
                "identities": {"X": "0"}}"#,
        );
        // compose = or with identity bottom breaks the unit law
        assert!(quantaloid_from_json(&j).is_err());
    }

    #[test]
    fn distributor_round_trips() {
        let j = parse(
            r#"{"dom": {"quantaloid": "bool", "objects": ["a"], "hom": {"a|a": "true"}},
                "cod": {"quantaloid": "bool", "objects": ["b"], "hom": {"b|b": "true"}},
                "matrix": {"b|a": "true"}}"#,
        );
        let d = distributor_from_json(&j).unwrap();
        assert!(d.validate().is_empty());
        let emitted = distributor_to_json(&d);
        let back = distributor_from_json(&emitted).unwrap();
        assert_eq!(d, back);
    }

    #[test]
    fn sniffing_recognizes_the_shapes() {
        let m = parse(r#"{"points": [], "distances": []}"#);
        assert_eq!(sniff_kind(&m).unwrap(), InputKind::MetricSpace);
        let p = parse(r#"{"elements": [], "leq": []}"#);
        assert_eq!(sniff_kind(&p).unwrap(), InputKind::Preorder);
        let l = parse(r#"{"kind": "lattice", "elements": [], "leq": []}"#);
        assert_eq!(sniff_kind(&l).unwrap(), InputKind::Lattice);
        let c = parse(r#"{"quantaloid": "bool", "objects": [], "hom": {}}"#);
        assert_eq!(sniff_kind(&c).unwrap(), InputKind::Category);
    }

    #[test]
    fn ids_with_separator_are_rejected() {
        let j = parse(r#"{"points": ["a|b"], "distances": [[0]]}"#);
        assert!(load_metric_space(&j, MetricProfile::Metric).is_err());
    }
}
