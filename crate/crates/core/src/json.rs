//! Versioned JSON wire formats.
//!
//! Every top-level document carries `schema_version` and `kind`. Ordinals are
//! written as canonical expression strings in `w` syntax. The schemas live in
//! `docs/schemas/`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::derivation::{Derivation, Evidence, PartitionStatement, Rule};
use crate::interval::IntervalSet;
use crate::ordinal::Ordinal;
use crate::partition::{
    ColoringRule, FinOrdSet, PairColoring, PartitionError, RuleColoring, TableColoring,
};

pub const SCHEMA_VERSION: u64 = 1;

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("malformed document: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("unsupported schema_version {0:?}, expected {SCHEMA_VERSION}")]
    SchemaVersion(Option<u64>),
    #[error("expected a {expected} document, found {found:?}")]
    Kind {
        expected: &'static str,
        found: Option<String>,
    },
    #[error("invalid coloring: {0}")]
    Coloring(#[from] PartitionError),
    #[error("unknown rule {0:?}")]
    UnknownRule(String),
    #[error("rule {0} requires a beta parameter")]
    MissingBeta(&'static str),
}

/// Wraps `body` (an object) with `schema_version` and `kind`.
pub fn document(kind: &str, body: Value) -> Value {
    let mut map = Map::new();
    map.insert("schema_version".into(), json!(SCHEMA_VERSION));
    map.insert("kind".into(), json!(kind));
    if let Value::Object(fields) = body {
        map.extend(fields);
    }
    Value::Object(map)
}

/// Parses `text` and checks its version and kind.
pub fn read_document(text: &str, kind: &'static str) -> Result<Value, JsonError> {
    let value: Value = serde_json::from_str(text)?;
    let version = value.get("schema_version").and_then(Value::as_u64);
    if version != Some(SCHEMA_VERSION) {
        return Err(JsonError::SchemaVersion(version));
    }
    let found = value.get("kind").and_then(Value::as_str);
    if found != Some(kind) {
        return Err(JsonError::Kind {
            expected: kind,
            found: found.map(str::to_string),
        });
    }
    Ok(value)
}

pub fn ordinal_value(x: &Ordinal) -> Value {
    let terms: Vec<Value> = x
        .terms()
        .iter()
        .map(|t| {
            json!({
                "exponent": t.exponent().to_string(),
                "coefficient": t.coefficient().to_string(),
            })
        })
        .collect();
    json!({ "canonical": x.to_string(), "terms": terms })
}

pub fn interval_set_value(s: &IntervalSet) -> Value {
    let intervals: Vec<Value> = s
        .intervals()
        .iter()
        .map(|i| json!({ "lo": i.lo.to_string(), "hi": i.hi.to_string() }))
        .collect();
    json!({
        "text": s.to_string(),
        "intervals": intervals,
        "order_type": s.order_type().to_string(),
    })
}

pub fn fin_set_value(s: &FinOrdSet) -> Value {
    json!(s
        .elements()
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>())
}

#[derive(Debug, Serialize, Deserialize)]
struct PairWire {
    x: Ordinal,
    y: Ordinal,
    color: usize,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(tag = "form", rename_all = "snake_case")]
enum ColoringWire {
    Table {
        colors: usize,
        ground: Vec<Ordinal>,
        pairs: Vec<PairWire>,
    },
    Rule {
        bound: Ordinal,
        rule: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        split: Option<Ordinal>,
    },
}

pub fn coloring_value(c: &PairColoring) -> Value {
    let wire = match c {
        PairColoring::Table(t) => ColoringWire::Table {
            colors: t.colors(),
            ground: t.ground().elements().to_vec(),
            pairs: t
                .pairs()
                .map(|(x, y, color)| PairWire {
                    x: x.clone(),
                    y: y.clone(),
                    color,
                })
                .collect(),
        },
        PairColoring::Rule(r) => match &r.rule {
            ColoringRule::CodeOrder => ColoringWire::Rule {
                bound: r.bound.clone(),
                rule: "sierpinski".into(),
                split: None,
            },
            ColoringRule::Split { split } => ColoringWire::Rule {
                bound: r.bound.clone(),
                rule: "decomposable".into(),
                split: Some(split.clone()),
            },
        },
    };
    serde_json::to_value(wire).expect("coloring serializes")
}

/// Reads a coloring from a document or a bare coloring object.
pub fn coloring_from_value(v: &Value) -> Result<PairColoring, JsonError> {
    let wire: ColoringWire = serde_json::from_value(v.clone())?;
    match wire {
        ColoringWire::Table {
            colors,
            ground,
            pairs,
        } => {
            let ground = FinOrdSet::new(ground)?;
            let t = TableColoring::from_pairs(
                ground,
                colors,
                pairs.into_iter().map(|p| (p.x, p.y, p.color)),
            )?;
            Ok(PairColoring::Table(t))
        }
        ColoringWire::Rule { bound, rule, split } => {
            let rule = match (rule.as_str(), split) {
                ("sierpinski", None) => ColoringRule::CodeOrder,
                ("decomposable", Some(split)) => ColoringRule::Split { split },
                _ => return Err(JsonError::UnknownRule(rule)),
            };
            Ok(PairColoring::Rule(RuleColoring { bound, rule }))
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct StatementWire {
    source: Ordinal,
    goals: [Ordinal; 2],
}

#[derive(Debug, Serialize, Deserialize)]
struct EvidenceWire {
    condition: String,
    values: BTreeMap<String, Ordinal>,
    ok: bool,
}

#[derive(Debug, Serialize, Deserialize)]
struct NodeWire {
    rule: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    beta: Option<Ordinal>,
    conclusion: StatementWire,
    evidence: Vec<EvidenceWire>,
    premises: Vec<NodeWire>,
}

fn statement_wire(s: &PartitionStatement) -> StatementWire {
    StatementWire {
        source: s.source.clone(),
        goals: s.goals.clone(),
    }
}

pub fn statement_value(s: &PartitionStatement) -> Value {
    let mut v = serde_json::to_value(statement_wire(s)).expect("statement serializes");
    v["text"] = json!(s.to_string());
    v
}

fn node_wire(d: &Derivation) -> NodeWire {
    NodeWire {
        rule: d.rule.name().to_string(),
        beta: match &d.rule {
            Rule::EmStep { beta } => Some(beta.clone()),
            _ => None,
        },
        conclusion: statement_wire(&d.conclusion),
        evidence: d
            .evidence
            .iter()
            .map(|e| EvidenceWire {
                condition: e.condition.clone(),
                values: e.values.clone(),
                ok: e.ok,
            })
            .collect(),
        premises: d.premises.iter().map(node_wire).collect(),
    }
}

fn node_from_wire(w: NodeWire) -> Result<Derivation, JsonError> {
    let rule = match w.rule.as_str() {
        "degenerate" => Rule::Degenerate,
        "trivial_pair" => Rule::TrivialPair,
        "swap" => Rule::Swap,
        "monotone" => Rule::Monotone,
        "em_step" => Rule::EmStep {
            beta: w.beta.ok_or(JsonError::MissingBeta("em_step"))?,
        },
        _ => return Err(JsonError::UnknownRule(w.rule)),
    };
    let [g0, g1] = w.conclusion.goals;
    Ok(Derivation {
        conclusion: PartitionStatement::new(w.conclusion.source, g0, g1),
        rule,
        premises: w
            .premises
            .into_iter()
            .map(node_from_wire)
            .collect::<Result<_, _>>()?,
        evidence: w
            .evidence
            .into_iter()
            .map(|e| Evidence {
                condition: e.condition,
                values: e.values,
                ok: e.ok,
            })
            .collect(),
    })
}

pub fn derivation_value(d: &Derivation) -> Value {
    serde_json::to_value(node_wire(d)).expect("derivation serializes")
}

pub fn derivation_from_value(v: &Value) -> Result<Derivation, JsonError> {
    let wire: NodeWire = serde_json::from_value(v.clone())?;
    node_from_wire(wire)
}

/// A complete derivation document.
pub fn derivation_document(d: &Derivation) -> Value {
    document(
        "derivation",
        json!({
            "statement": statement_value(&d.conclusion),
            "depth": d.depth(),
            "nodes": d.node_count(),
            "derivation": derivation_value(d),
        }),
    )
}

pub fn read_derivation(text: &str) -> Result<Derivation, JsonError> {
    let doc = read_document(text, "derivation")?;
    derivation_from_value(&doc["derivation"])
}

pub fn coloring_document(c: &PairColoring) -> Value {
    document("coloring", json!({ "coloring": coloring_value(c) }))
}

pub fn read_coloring(text: &str) -> Result<PairColoring, JsonError> {
    let doc = read_document(text, "coloring")?;
    coloring_from_value(&doc["coloring"])
}
