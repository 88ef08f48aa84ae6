//! Versioned JSON documents for embeddings, polytopes and move sets.
//!
//! Serialization is canonical: object keys are sorted, point lists are
//! sorted, and the layout is fixed, so equal values give identical bytes.

use std::collections::BTreeMap;

use fdim_core::{Embedding, LatticePolytope, Limits, Method, MoveSet, Point};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{CliError, Result};
use crate::graph_io::{check_version, LabeledGraph};
use crate::VERSION;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EmbeddingDocument {
    pub dimension: usize,
    pub method: String,
    /// Positive representatives.
    pub moves: Vec<Vec<i64>>,
    /// Generators of the polytope.
    pub polytope: Vec<Vec<i64>>,
    pub version: String,
    pub vertex_map: BTreeMap<String, Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolytopeDocument {
    pub dimension: usize,
    pub generators: Vec<Vec<i64>>,
    pub version: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MovesDocument {
    pub dimension: usize,
    /// One vector per `±` pair; either sign is accepted on input.
    pub moves: Vec<Vec<i64>>,
    pub version: String,
}

fn rows(points: &[Point]) -> Vec<Vec<i64>> {
    points.iter().map(|p| p.0.clone()).collect()
}

fn points(dim: usize, rows: &[Vec<i64>], what: &str) -> Result<Vec<Point>> {
    rows.iter()
        .map(|r| {
            if r.len() != dim {
                return Err(CliError::Invalid(format!("{what} {r:?} does not have dimension {dim}")));
            }
            Ok(Point(r.clone()))
        })
        .collect()
}

impl EmbeddingDocument {
    pub fn new(e: &Embedding, g: &LabeledGraph) -> Self {
        let vertex_map = g.labels.iter().cloned().zip(e.vertex_map.iter().map(|p| p.0.clone())).collect();
        EmbeddingDocument {
            dimension: e.dimension(),
            method: e.method.to_string(),
            moves: rows(e.moves.positive()),
            polytope: rows(e.polytope.generators()),
            version: VERSION.into(),
            vertex_map,
        }
    }

    /// Rebuilds the embedding for `g` and checks it completely.
    pub fn to_embedding(&self, g: &LabeledGraph, limits: &Limits) -> Result<Embedding> {
        check_version(&self.version)?;
        let method: Method = self.method.parse()?;
        let d = self.dimension;
        let polytope = LatticePolytope::new(d, points(d, &self.polytope, "generator")?)?;
        let moves = MoveSet::from_representatives(d, points(d, &self.moves, "move")?).map_err(fdim_core::Error::from)?;
        for label in self.vertex_map.keys() {
            if g.index_of(label).is_none() {
                return Err(CliError::Failed(format!("document maps node {label:?}, which the graph does not have")));
            }
        }
        let mut vertex_map = Vec::with_capacity(g.labels.len());
        for label in &g.labels {
            let row = self.vertex_map.get(label).ok_or_else(|| CliError::Failed(format!("node {label:?} has no point")))?;
            vertex_map.push(points(d, std::slice::from_ref(row), "point")?.remove(0));
        }
        Embedding::new(g.graph.clone(), polytope, moves, vertex_map, method, limits).map_err(|e| match e {
            fdim_core::Error::Verification(m) => CliError::Failed(m),
            fdim_core::Error::SizeMismatch { expected, found } => {
                CliError::Failed(format!("polytope has {found} lattice points for {expected} nodes"))
            }
            other => other.into(),
        })
    }
}

impl PolytopeDocument {
    pub fn new(p: &LatticePolytope) -> Self {
        PolytopeDocument { dimension: p.ambient_dim(), generators: rows(p.generators()), version: VERSION.into() }
    }

    pub fn to_polytope(&self) -> Result<LatticePolytope> {
        check_version(&self.version)?;
        Ok(LatticePolytope::new(self.dimension, points(self.dimension, &self.generators, "generator")?)?)
    }
}

impl MovesDocument {
    pub fn new(m: &MoveSet) -> Self {
        MovesDocument { dimension: m.ambient_dim(), moves: rows(m.positive()), version: VERSION.into() }
    }

    pub fn to_moves(&self) -> Result<MoveSet> {
        check_version(&self.version)?;
        let pts = points(self.dimension, &self.moves, "move")?;
        Ok(MoveSet::from_representatives(self.dimension, pts).map_err(fdim_core::Error::from)?)
    }
}

/// Canonical text for any serializable document.
pub fn to_canonical<T: Serialize>(doc: &T) -> Result<String> {
    let value = serde_json::to_value(doc)?;
    let mut out = String::new();
    write_value(&value, 0, &mut out);
    out.push('\n');
    Ok(out)
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(|i| !i.is_array() && !i.is_object()),
        Value::Object(_) => false,
        _ => true,
    }
}

// Nested containers go one entry per line; flat arrays stay on one line.
fn write_value(v: &Value, indent: usize, out: &mut String) {
    let pad = |n: usize| "  ".repeat(n);
    match v {
        _ if is_flat(v) => out.push_str(&v.to_string()),
        Value::Array(items) if items.is_empty() => out.push_str("[]"),
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, item) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_value(item, indent + 1, out);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Object(map) => {
            out.push_str("{\n");
            for (i, (k, item)) in map.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_value(item, indent + 1, out);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        _ => unreachable!(),
    }
}
