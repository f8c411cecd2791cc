//! File formats: algebras, modules and hull files.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::Algebra;
use crate::error::{AspecError, Result};
use crate::hull::{DeformationMap, MatricPresentation};
use crate::linalg::Matrix;
use crate::module::ModuleRep;
use crate::scalar::Scalar;

/// `{ "dim", "basis", "unit", "table": [[i, j, k, "p/q"], ...] }`; absent
/// table entries are zero.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlgebraJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub dim: usize,
    pub basis: Vec<String>,
    pub unit: Vec<Scalar>,
    pub table: Vec<(usize, usize, usize, Scalar)>,
}

impl From<&Algebra> for AlgebraJson {
    fn from(a: &Algebra) -> Self {
        let n = a.dim();
        let mut table = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for (k, c) in a.basis_product(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        table.push((i, j, k, c.clone()));
                    }
                }
            }
        }
        AlgebraJson {
            name: Some(a.name().to_string()),
            dim: n,
            basis: a.labels().to_vec(),
            unit: a.unit().clone(),
            table,
        }
    }
}

impl AlgebraJson {
    /// Builds the algebra without checking the axioms.
    pub fn to_algebra(&self, fallback_name: &str) -> Result<Algebra> {
        if self.basis.len() != self.dim || self.unit.len() != self.dim {
            return Err(AspecError::Parse(format!(
                "dim {} does not match basis ({}) or unit ({})",
                self.dim,
                self.basis.len(),
                self.unit.len()
            )));
        }
        let labels: Vec<&str> = self.basis.iter().map(String::as_str).collect();
        let name = self.name.as_deref().unwrap_or(fallback_name);
        Algebra::from_entries(name, &labels, &self.table, self.unit.clone())
    }
}

pub fn matrix_rows(m: &Matrix) -> Vec<Vec<Scalar>> {
    m.to_rows()
}

fn matrix_from_rows(rows: &[Vec<Scalar>], dim: usize) -> Result<Matrix> {
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        return Err(AspecError::Parse(format!("expected a {dim}x{dim} action matrix")));
    }
    Ok(Matrix::from_rows(rows.to_vec(), dim))
}

/// `{ "algebra", "dim", "action": { basis_label: rows } }`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModuleJson {
    pub algebra: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub dim: usize,
    pub action: BTreeMap<String, Vec<Vec<Scalar>>>,
}

impl From<&ModuleRep> for ModuleJson {
    fn from(m: &ModuleRep) -> Self {
        let a = m.parent();
        ModuleJson {
            algebra: a.name().to_string(),
            label: Some(m.label().to_string()),
            dim: m.dim(),
            action: a
                .labels()
                .iter()
                .zip(m.action())
                .map(|(l, x)| (l.clone(), matrix_rows(x)))
                .collect(),
        }
    }
}

impl ModuleJson {
    pub fn to_module(&self, a: &Arc<Algebra>) -> Result<ModuleRep> {
        let action = a
            .labels()
            .iter()
            .map(|l| {
                let rows = self
                    .action
                    .get(l)
                    .ok_or_else(|| AspecError::Parse(format!("module has no action for {l:?}")))?;
                matrix_from_rows(rows, self.dim)
            })
            .collect::<Result<Vec<_>>>()?;
        if let Some(extra) = self.action.keys().find(|k| a.label_index(k).is_none()) {
            return Err(AspecError::Parse(format!("unknown basis label {extra:?}")));
        }
        let label = self.label.clone().unwrap_or_else(|| "M".into());
        ModuleRep::new(a.clone(), label, self.dim, action)
    }
}

/// Inputs recorded in a hull file, enough to recompute it exactly.
#[derive(Clone, Debug, Deserialize)]
pub struct HullInput {
    pub algebra: AlgebraJson,
    pub modules: Vec<ModuleJson>,
    pub order: usize,
    pub requested_order: usize,
    #[serde(default)]
    pub degree_dims: Vec<usize>,
}

impl HullInput {
    pub fn parse(v: &Value) -> Result<Self> {
        serde_json::from_value(v.clone()).map_err(|e| AspecError::Parse(format!("hull file: {e}")))
    }
}

/// Generators, relations in word form, per-degree dimensions and the
/// nonzero `ρ` coefficients on basis words.
pub fn hull_json(a: &Algebra, family: &[ModuleRep], h: &MatricPresentation, map: &DeformationMap) -> Value {
    let generators: Vec<Value> = h
        .arrows
        .iter()
        .map(|t| json!({ "label": t.label(), "source": t.source + 1, "target": t.target + 1 }))
        .collect();
    let relations: Vec<Value> = h
        .relations
        .iter()
        .map(|r| {
            let terms: Vec<Value> = r
                .terms
                .iter()
                .map(|(w, c)| json!({ "word": h.word_label(*w), "coefficient": c }))
                .collect();
            json!({ "degree": r.degree, "terms": terms })
        })
        .collect();
    let basis = h.basis_words();
    let normalized = map.normalized(h);
    let mut rho = serde_json::Map::new();
    for (k, label) in a.labels().iter().enumerate() {
        let mut entries = serde_json::Map::new();
        for (pos, &w) in basis.iter().enumerate() {
            let m = &normalized[k][pos];
            if !m.is_zero() {
                entries.insert(h.word_label(w), json!(matrix_rows(m)));
            }
        }
        rho.insert(label.clone(), Value::Object(entries));
    }
    json!({
        "algebra": AlgebraJson::from(a),
        "modules": family.iter().map(ModuleJson::from).collect::<Vec<_>>(),
        "order": h.order,
        "requested_order": h.requested_order,
        "stabilized": h.stabilized,
        "generators": generators,
        "relations": relations,
        "degree_dims": h.degree_dims(),
        "basis": basis.iter().map(|&w| h.word_label(w)).collect::<Vec<_>>(),
        "rho": Value::Object(rho),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::hull::hull;
    use crate::module::simple_modules;

    #[test]
    fn algebra_round_trip() {
        for (name, a) in fixtures::catalog() {
            let j = AlgebraJson::from(&a);
            let text = serde_json::to_string(&j).unwrap();
            let back: AlgebraJson = serde_json::from_str(&text).unwrap();
            assert_eq!(back.to_algebra(name).unwrap(), a);
        }
    }

    #[test]
    fn table_entries_are_quadruples() {
        let j = serde_json::to_value(AlgebraJson::from(&fixtures::dual())).unwrap();
        assert_eq!(j["table"][0], json!([0, 0, 0, "1"]));
        assert_eq!(j["unit"], json!(["1", "0"]));
    }

    #[test]
    fn module_round_trip_and_hull_file() {
        let a = Arc::new(fixtures::ut2());
        let simples = simple_modules(&a).unwrap();
        for s in &simples {
            let j = ModuleJson::from(s);
            assert_eq!(&j.to_module(&a).unwrap(), s);
        }
        let (h, map) = hull(&a, &simples, 2).unwrap();
        let v = hull_json(&a, &simples, &h, &map);
        assert_eq!(v["generators"].as_array().unwrap().len(), 1);
        let input = HullInput::parse(&v).unwrap();
        assert_eq!(input.modules.len(), 2);
        assert_eq!(input.degree_dims, h.degree_dims());
    }
}
