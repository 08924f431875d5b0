//! File formats: JSON algebra input and DOT diagram output.
//!
//! Input carries only names and an order (or a poset to take up-sets of);
//! operation tables are always recomputed and validated, never trusted.

use serde::Deserialize;
use std::path::Path;
use std::sync::Arc;

use crate::algebra::{FinitePoset, FiniteHeytingAlgebra};
use crate::error::{Error, Result};

/// Version tag stamped into every report this tool emits.
pub const SCHEMA_VERSION: &str = "km-forge/1";

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraFile {
    elements: Option<Vec<String>>,
    leq: Option<Vec<Vec<bool>>>,
    poset: Option<PosetFile>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PosetFile {
    points: usize,
    leq: Vec<Vec<bool>>,
}

fn flatten_order(n: usize, rows: &[Vec<bool>], what: &str) -> Result<Vec<bool>> {
    if rows.len() != n {
        return Err(Error::Format(format!(
            "{what} has {} order rows, expected {n}",
            rows.len()
        )));
    }
    let mut flat = Vec::with_capacity(n * n);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(Error::Format(format!(
                "{what} order row {i} has {} entries, expected {n}",
                row.len()
            )));
        }
        flat.extend_from_slice(row);
    }
    Ok(flat)
}

/// Parses either input form and rebuilds the algebra from the order alone.
pub fn algebra_from_json(text: &str) -> Result<Arc<FiniteHeytingAlgebra>> {
    let file: AlgebraFile =
        serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    match (file.elements, file.leq, file.poset) {
        (Some(names), Some(rows), None) => {
            let n = names.len();
            let flat = flatten_order(n, &rows, "algebra")?;
            Ok(Arc::new(FiniteHeytingAlgebra::from_order(n, flat, Some(names))?))
        }
        (None, None, Some(p)) => {
            let flat = flatten_order(p.points, &p.leq, "poset")?;
            FiniteHeytingAlgebra::from_poset(&FinitePoset::new(p.points, flat)?)
        }
        _ => Err(Error::Format(
            "expected either {elements, leq} or {poset}".into(),
        )),
    }
}

/// Reads and parses an algebra file.
pub fn load_algebra(path: impl AsRef<Path>) -> Result<Arc<FiniteHeytingAlgebra>> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    algebra_from_json(&text)
}

/// Hasse diagram of the order in DOT form: one node per element, one edge
/// per covering pair, drawn upward. With a table of least dense elements,
/// each node is annotated with its image.
pub fn export_dot(h: &FiniteHeytingAlgebra, delta: Option<&[usize]>) -> String {
    let mut out = String::from("digraph order {\n  rankdir=BT;\n  node [shape=box];\n");
    for x in 0..h.size() {
        let label = match delta {
            Some(d) => format!("{}\\nd={}", h.name_of(x), h.name_of(d[x])),
            None => h.name_of(x).to_string(),
        };
        out.push_str(&format!("  n{x} [label=\"{}\"];\n", label.replace('"', "\\\"")));
    }
    for (lo, hi) in h.covers() {
        out.push_str(&format!("  n{lo} -> n{hi};\n"));
    }
    out.push_str("}\n");
    out
}
