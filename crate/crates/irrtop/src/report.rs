//! Structured reports. Every command produces one JSON object with sorted
//! keys; the human format is rendered from that object.

use serde_json::{json, Map, Value};

use irrtop_core::topology::{ClosedSetFamily, Difference, SymbolicSpace};
use irrtop_core::{Ideal, Matrix, PointSet, Subspace};

pub const FORMAT: &str = "irrtop/1";

pub fn envelope(command: &str, seed: u64, input: Option<String>, args: Map<String, Value>, result: Value) -> Value {
    let mut top = Map::new();
    top.insert("format".into(), json!(FORMAT));
    top.insert("command".into(), json!(command));
    top.insert("seed".into(), json!(seed));
    if let Some(text) = input {
        top.insert("input".into(), json!(text));
    }
    if !args.is_empty() {
        top.insert("args".into(), Value::Object(args));
    }
    top.insert("result".into(), result);
    Value::Object(top)
}

pub fn points(s: PointSet) -> Value {
    json!(s.iter().collect::<Vec<_>>())
}

pub fn point_sets(sets: &[PointSet]) -> Value {
    Value::Array(sets.iter().map(|&s| points(s)).collect())
}

pub fn subspace(s: &Subspace) -> Value {
    json!({
        "dim": s.dim(),
        "basis": s.vectors().map(<[u32]>::to_vec).collect::<Vec<_>>(),
    })
}

pub fn ideal(i: &Ideal) -> Value {
    subspace(&i.space)
}

pub fn matrix(m: &Matrix) -> Value {
    json!(m.row_vecs().map(<[u32]>::to_vec).collect::<Vec<_>>())
}

fn difference(d: Difference) -> Value {
    match d {
        Difference::Finite(s) => json!({ "finite": points(s) }),
        Difference::Infinite => json!("infinite"),
    }
}

/// Full description of a symbolic space, enough to rebuild it.
pub fn symbolic_space(s: &SymbolicSpace) -> Value {
    let m = s.member_count();
    let table = |f: &dyn Fn(usize, usize) -> Value| -> Value {
        Value::Array((0..m).map(|a| Value::Array((0..m).map(|b| f(a, b)).collect())).collect())
    };
    let cardinality = match s.cardinality() {
        irrtop_core::topology::Cardinality::Finite(n) => json!(n),
        irrtop_core::topology::Cardinality::CountablyInfinite => json!("countably-infinite"),
    };
    json!({
        "cardinality": cardinality,
        "members": s.members(),
        "points": s.points(),
        "contains": (0..m).map(|c| points(s.points_in(c))).collect::<Vec<_>>(),
        "difference": table(&|a, b| difference(s.difference(a, b))),
        "union": table(&|a, b| json!(s.union(a, b))),
        "intersection": table(&|a, b| json!(s.intersection(a, b))),
    })
}

/// Canonical pretty JSON: keys are sorted because the map type is ordered.
pub fn to_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(if *b { "yes".into() } else { "no".into() }),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.iter().all(|x| x.is_number()) => Some(format!(
            "[{}]",
            a.iter().map(Value::to_string).collect::<Vec<_>>().join(" ")
        )),
        _ => None,
    }
}

fn render(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match scalar(x) {
                    Some(s) if !s.contains('\n') => out.push_str(&format!("{pad}{k}: {s}\n")),
                    Some(s) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        for line in s.lines() {
                            out.push_str(&format!("{pad}  {line}\n"));
                        }
                    }
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render(x, indent + 1, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            if items.is_empty() {
                out.push_str(&format!("{pad}(none)\n"));
            }
            for x in items {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        render(x, indent + 1, out);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap_or_default())),
    }
}

/// Indented plain-text rendering of a report.
pub fn to_human(v: &Value) -> String {
    let mut out = String::new();
    if let Some(cmd) = v.get("command").and_then(Value::as_str) {
        out.push_str(&format!("irrtop {cmd}\n"));
    }
    if let Some(result) = v.get("result") {
        render(result, 0, &mut out);
    }
    if let Some(t) = v.get("timing") {
        out.push_str("timing:\n");
        render(t, 1, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys_come_out_sorted() {
        let v = envelope("irr", 3, None, Map::new(), json!({"zeta": 1, "alpha": [1, 2]}));
        let text = to_json(&v);
        let a = text.find("\"alpha\"").unwrap();
        let z = text.find("\"zeta\"").unwrap();
        assert!(a < z);
        assert!(text.find("\"command\"").unwrap() < text.find("\"format\"").unwrap());
    }

    #[test]
    fn human_rendering() {
        let v = envelope("kappa", 0, None, Map::new(), json!({"kappa": 4, "ok": true, "v": [1, 0]}));
        assert_eq!(to_human(&v), "irrtop kappa\nkappa: 4\nok: yes\nv: [1 0]\n");
    }
}
