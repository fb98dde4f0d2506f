//! JSON input and output. Rationals serialize as plain integers when
//! integral and as `"p/q"` strings otherwise; root sets round-trip
//! through the same schema the CLI accepts.

use crate::arrangement::{validate_root_set, ArrangementError, ChamberGraph, RootSet};
use crate::axioms::AxiomReport;
use crate::exact::{Covector, Int, Rational};
use crate::scheme::{CartanScheme, VerificationReport};
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid rational value {0:?}")]
    BadRational(String),
    #[error(transparent)]
    Arrangement(#[from] ArrangementError),
}

pub fn rational_to_value(r: &Rational) -> Value {
    if r.is_integer() {
        if let Some(n) = r.numer().to_i64() {
            return json!(n);
        }
    }
    json!(format!("{}", r))
}

pub fn rational_from_value(v: &Value) -> Result<Rational, IoError> {
    match v {
        Value::Number(n) => {
            let i = n
                .as_i64()
                .ok_or_else(|| IoError::BadRational(n.to_string()))?;
            Ok(Rational::from(Int::from(i)))
        }
        Value::String(s) => {
            let bad = || IoError::BadRational(s.clone());
            match s.split_once('/') {
                Some((p, q)) => {
                    let p = Int::from_str(p.trim()).map_err(|_| bad())?;
                    let q = Int::from_str(q.trim()).map_err(|_| bad())?;
                    if q == Int::from(0) {
                        return Err(bad());
                    }
                    Ok(Rational::new(p, q))
                }
                None => {
                    let p = Int::from_str(s.trim()).map_err(|_| bad())?;
                    Ok(Rational::from(p))
                }
            }
        }
        other => Err(IoError::BadRational(other.to_string())),
    }
}

fn int_to_value(i: &Int) -> Value {
    match i.to_i64() {
        Some(n) => json!(n),
        None => json!(i.to_string()),
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct RootSetJson {
    rank: usize,
    positive_roots: Vec<Vec<Value>>,
}

pub fn root_set_to_json(roots: &RootSet) -> Value {
    serde_json::to_value(RootSetJson {
        rank: roots.rank(),
        positive_roots: roots
            .positive_roots()
            .iter()
            .map(|r| r.coords().iter().map(rational_to_value).collect())
            .collect(),
    })
    .expect("serializable")
}

pub fn root_set_from_json(text: &str) -> Result<RootSet, IoError> {
    let raw: RootSetJson = serde_json::from_str(text)?;
    let roots: Vec<Covector> = raw
        .positive_roots
        .iter()
        .map(|row| {
            row.iter()
                .map(rational_from_value)
                .collect::<Result<Vec<_>, _>>()
                .map(Covector::new)
        })
        .collect::<Result<_, _>>()?;
    Ok(validate_root_set(raw.rank, roots)?)
}

pub fn chamber_graph_to_json(roots: &RootSet, graph: &ChamberGraph) -> Value {
    let chambers: Vec<Value> = graph
        .chambers
        .iter()
        .map(|c| {
            json!({
                "id": c.id,
                "signs": c.sign_string(),
                "basis": c.walls.iter().map(|w| w.display_index()).collect::<Vec<i64>>(),
            })
        })
        .collect();
    let edges: Vec<Value> = graph
        .edges()
        .iter()
        .map(|&(a, b, root)| json!({"chambers": [a, b], "root": root + 1}))
        .collect();
    json!({
        "rank": roots.rank(),
        "n_positive_roots": roots.len(),
        "n_chambers": graph.len(),
        "chambers": chambers,
        "edges": edges,
    })
}

pub fn axiom_report_to_json(report: &AxiomReport) -> Value {
    let witnesses: Vec<Value> = report
        .witnesses
        .iter()
        .map(|w| {
            json!({
                "chamber": w.chamber_id,
                "sign_vector": w.sign_vector,
                "root": w.root.coords().iter().map(rational_to_value).collect::<Vec<_>>(),
                "coefficients": w.coefficients.as_ref().map(|cs| {
                    cs.iter().map(rational_to_value).collect::<Vec<_>>()
                }),
            })
        })
        .collect();
    json!({
        "axiom": report.axiom.letter(),
        "passed": report.passed,
        "witnesses": witnesses,
    })
}

pub fn scheme_to_json(scheme: &CartanScheme, verified: &BTreeMap<String, bool>) -> Value {
    let objects: Vec<Value> = scheme
        .objects
        .iter()
        .map(|o| {
            json!({
                "id": o.id,
                "chamber": o.chamber,
                "cartan": o.cartan.entries.iter()
                    .map(|row| row.iter().map(int_to_value).collect::<Vec<_>>())
                    .collect::<Vec<_>>(),
                "roots": o.roots.iter()
                    .map(|v| v.iter().map(int_to_value).collect::<Vec<_>>())
                    .collect::<Vec<_>>(),
            })
        })
        .collect();
    let reflections: BTreeMap<String, Vec<usize>> = scheme
        .reflections
        .iter()
        .enumerate()
        .map(|(i, perm)| ((i + 1).to_string(), perm.clone()))
        .collect();
    json!({
        "rank": scheme.rank,
        "base_chamber": scheme.base_chamber,
        "n_objects": scheme.len(),
        "objects": objects,
        "reflections": reflections,
        "verified": verified,
    })
}

pub fn verification_flags(
    axioms: &VerificationReport,
    root_system: &VerificationReport,
    connected: bool,
    simply_connected: bool,
) -> BTreeMap<String, bool> {
    let mut flags = BTreeMap::new();
    for check in axioms.checks.iter().chain(&root_system.checks) {
        flags.insert(check.name.clone(), check.passed);
    }
    flags.insert("connected".to_string(), connected);
    flags.insert("simply_connected".to_string(), simply_connected);
    flags
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, ratio};

    #[test]
    fn rational_round_trip() {
        for r in [rat(3), rat(-2), ratio(1, 2), ratio(-7, 3)] {
            let v = rational_to_value(&r);
            assert_eq!(rational_from_value(&v).unwrap(), r);
        }
    }

    #[test]
    fn integral_rational_is_plain_number() {
        assert_eq!(rational_to_value(&rat(5)), json!(5));
        assert_eq!(rational_to_value(&ratio(1, 2)), json!("1/2"));
    }

    #[test]
    fn root_set_round_trip() {
        let text = r#"{"rank": 2, "positive_roots": [[1,0],[0,1],["1/2","1/3"]]}"#;
        let roots = root_set_from_json(text).unwrap();
        assert_eq!(roots.len(), 3);
        let back = root_set_to_json(&roots).to_string();
        let again = root_set_from_json(&back).unwrap();
        assert_eq!(roots, again);
    }

    #[test]
    fn invalid_rational_rejected() {
        let text = r#"{"rank": 1, "positive_roots": [["1/0"]]}"#;
        assert!(matches!(
            root_set_from_json(text),
            Err(IoError::BadRational(_))
        ));
    }

    #[test]
    fn validation_errors_propagate() {
        let text = r#"{"rank": 2, "positive_roots": [[1,0],[2,0]]}"#;
        assert!(matches!(
            root_set_from_json(text),
            Err(IoError::Arrangement(ArrangementError::ParallelRoots(0, 1)))
        ));
    }
}
