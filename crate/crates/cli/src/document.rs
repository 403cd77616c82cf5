//! JSON documents for set functions and weighted spaces.
//!
//! Set-function document:
//!
//! ```json
//! { "ground_set": ["1", "2"], "values": { "": "0", "1": "3", "2": "2", "1,2": "4" } }
//! ```
//!
//! Weighted-space document: `{ "ground_set": [...], "nu": [...], "density": [...] }`.
//! Every number is a rational string.

use std::fmt;

use chainrep::scalar::{format_scalar, zero, ScalarParseError};
use chainrep::setfn::table_order;
use chainrep::{parse_scalar, DiscreteMeasure, GroundSet, Scalar, SetFunction, SubsetRef, WeightedSpace};
use serde::de::{MapAccess, Visitor};
use serde::{Deserialize, Deserializer};
use serde_json::{Map, Value};

#[derive(Debug, thiserror::Error)]
pub enum DocumentError {
    #[error("{0}")]
    Json(#[from] serde_json::Error),
    #[error("ground_set: {0}")]
    Ground(chainrep::Error),
    #[error("values key `{key}`: {message}")]
    Key { key: String, message: String },
    #[error("values key `{key}`: {source}")]
    Value { key: String, source: ScalarParseError },
    #[error("values: missing key `{0}`")]
    Missing(String),
    #[error("{field}[{index}]: {source}")]
    Entry { field: &'static str, index: usize, source: ScalarParseError },
    #[error("{field}: {source}")]
    Field { field: &'static str, source: chainrep::Error },
}

/// Map entries in document order, duplicates kept so they can be reported.
struct Entries(Vec<(String, String)>);

impl<'de> Deserialize<'de> for Entries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct EntriesVisitor;

        impl<'de> Visitor<'de> for EntriesVisitor {
            type Value = Entries;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an object mapping subset keys to rational strings")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<Entries, A::Error> {
                let mut out = Vec::new();
                while let Some(entry) = map.next_entry::<String, String>()? {
                    out.push(entry);
                }
                Ok(Entries(out))
            }
        }

        deserializer.deserialize_map(EntriesVisitor)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSetFunction {
    ground_set: Vec<String>,
    values: Entries,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawWeighted {
    ground_set: Vec<String>,
    nu: Vec<String>,
    density: Vec<String>,
}

/// Canonical key of a subset: labels in ground-set order, comma-joined.
pub fn subset_key(ground: &GroundSet, set: SubsetRef) -> String {
    set.elements().map(|e| ground.label(e)).collect::<Vec<_>>().join(",")
}

/// Parses a key; labels may appear in any order.
pub fn parse_subset_key(ground: &GroundSet, key: &str) -> Result<SubsetRef, DocumentError> {
    let fail = |message: String| DocumentError::Key { key: key.to_owned(), message };
    if key.is_empty() {
        return Ok(SubsetRef(0));
    }
    let mut set = SubsetRef(0);
    for label in key.split(',') {
        let e = ground.index_of(label).ok_or_else(|| fail(format!("unknown label `{label}`")))?;
        if set.contains(e) {
            return Err(fail(format!("label `{label}` repeated")));
        }
        set = set.with(e);
    }
    Ok(set)
}

fn ground_set(labels: Vec<String>) -> Result<GroundSet, DocumentError> {
    GroundSet::new(labels).map_err(DocumentError::Ground)
}

pub fn parse_set_function(text: &str) -> Result<SetFunction, DocumentError> {
    let raw: RawSetFunction = serde_json::from_str(text)?;
    let ground = ground_set(raw.ground_set)?;
    let mut values: Vec<Option<Scalar>> = vec![None; ground.lattice_size()];
    let mut seen_as: Vec<Option<String>> = vec![None; ground.lattice_size()];
    for (key, text) in raw.values.0 {
        let set = parse_subset_key(&ground, &key)?;
        if let Some(previous) = &seen_as[set.index()] {
            return Err(DocumentError::Key { key, message: format!("same subset as key `{previous}`") });
        }
        let value = parse_scalar(&text).map_err(|source| DocumentError::Value { key: key.clone(), source })?;
        if set.is_empty() && value != zero() {
            return Err(DocumentError::Key { key, message: "value of the empty set must be 0".to_owned() });
        }
        values[set.index()] = Some(value);
        seen_as[set.index()] = Some(key);
    }
    let mut dense = Vec::with_capacity(values.len());
    for (bits, value) in values.into_iter().enumerate() {
        match value {
            Some(x) => dense.push(x),
            None => return Err(DocumentError::Missing(subset_key(&ground, SubsetRef(bits as u32)))),
        }
    }
    Ok(SetFunction::new(ground, dense).expect("dense table with v(∅) = 0"))
}

/// Canonical document: keys in table order (cardinality, then lexicographic).
pub fn set_function_value(v: &SetFunction) -> Value {
    let ground = v.ground();
    let mut values = Map::new();
    for set in table_order(v.m()) {
        values.insert(subset_key(ground, set), Value::String(format_scalar(v.get(set))));
    }
    let mut doc = Map::new();
    doc.insert("ground_set".to_owned(), labels_value(ground));
    doc.insert("values".to_owned(), Value::Object(values));
    Value::Object(doc)
}

pub fn render_set_function(v: &SetFunction) -> String {
    let mut text = serde_json::to_string_pretty(&set_function_value(v)).expect("serialisable");
    text.push('\n');
    text
}

fn labels_value(ground: &GroundSet) -> Value {
    Value::Array(ground.labels().iter().cloned().map(Value::String).collect())
}

fn scalar_list(field: &'static str, items: &[String]) -> Result<Vec<Scalar>, DocumentError> {
    items
        .iter()
        .enumerate()
        .map(|(index, s)| parse_scalar(s).map_err(|source| DocumentError::Entry { field, index, source }))
        .collect()
}

pub fn parse_weighted(text: &str) -> Result<WeightedSpace, DocumentError> {
    let raw: RawWeighted = serde_json::from_str(text)?;
    let ground = ground_set(raw.ground_set)?;
    let nu = scalar_list("nu", &raw.nu)?;
    let density = scalar_list("density", &raw.density)?;
    let nu = DiscreteMeasure::new(ground, nu).map_err(|source| DocumentError::Field { field: "nu", source })?;
    WeightedSpace::new(nu, density).map_err(|source| DocumentError::Field { field: "density", source })
}

pub fn weighted_value(w: &WeightedSpace) -> Value {
    let list = |xs: &[Scalar]| Value::Array(xs.iter().map(|x| Value::String(format_scalar(x))).collect());
    let mut doc = Map::new();
    doc.insert("ground_set".to_owned(), labels_value(w.ground()));
    doc.insert("nu".to_owned(), list(w.nu().weights()));
    doc.insert("density".to_owned(), list(w.density()));
    Value::Object(doc)
}
