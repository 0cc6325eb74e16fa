//! Reports shared by the table and JSON renderers.

use std::fmt::Write as _;

use parhom_core::exactalg::{ExactMatrix, HomologySummary, Ring};
use serde::{Deserialize, Serialize};
use serde_json::Value;

/// One homology group in one degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    pub degree: usize,
    pub betti: usize,
    pub torsion: Vec<u64>,
    /// `partial` or `global`.
    pub side: String,
}

/// A labelled value. `label` is what the table prints in front of the value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Fact {
    pub key: String,
    pub label: String,
    pub value: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub group_order: usize,
    pub ring: String,
    /// `ok`, or `mismatch` when the two sides of a comparison differ.
    pub status: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub facts: Vec<Fact>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub rows: Vec<Row>,
}

impl Report {
    pub fn new(command: &str, group_order: usize, ring: Ring) -> Self {
        Report {
            command: command.to_string(),
            group_order,
            ring: ring.to_string(),
            status: "ok".to_string(),
            facts: Vec::new(),
            rows: Vec::new(),
        }
    }

    pub fn fact(&mut self, key: &str, label: &str, value: impl Into<Value>) {
        self.facts.push(Fact { key: key.to_string(), label: label.to_string(), value: value.into() });
    }

    pub fn rows_from(&mut self, side: &str, hs: &[HomologySummary]) {
        for (degree, h) in hs.iter().enumerate() {
            let torsion =
                h.torsion.iter().map(|t| u64::try_from(t).expect("torsion coefficients fit in 64 bits")).collect();
            self.rows.push(Row { degree, betti: h.betti, torsion, side: side.to_string() });
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        for f in &self.facts {
            match &f.value {
                Value::Array(rows) if rows.iter().all(Value::is_array) && !rows.is_empty() => {
                    let _ = writeln!(out, "{}", f.label);
                    for r in rows {
                        let _ = writeln!(out, "  [{}]", join(r.as_array().expect("array")));
                    }
                }
                v => {
                    let _ = writeln!(out, "{} {}", f.label, scalar_text(v));
                }
            }
        }
        if !self.rows.is_empty() {
            let sides = self.sides();
            let mut header = format!("{:<8}", "degree");
            for s in &sides {
                let _ = write!(header, "{:<20}", s);
            }
            let _ = writeln!(out, "{}", header.trim_end());
            let top = self.rows.iter().map(|r| r.degree).max().unwrap_or(0);
            for d in 0..=top {
                let mut line = format!("{:<8}", d);
                for s in &sides {
                    let cell = self
                        .rows
                        .iter()
                        .find(|r| r.degree == d && &r.side == s)
                        .map(|r| render_group(&self.ring, r.betti, &r.torsion))
                        .unwrap_or_else(|| "-".to_string());
                    let _ = write!(line, "{:<20}", cell);
                }
                let _ = writeln!(out, "{}", line.trim_end());
            }
        }
        let _ = writeln!(out, "status {}", self.status);
        out
    }

    fn sides(&self) -> Vec<String> {
        let mut sides: Vec<String> = Vec::new();
        for r in &self.rows {
            if !sides.contains(&r.side) {
                sides.push(r.side.clone());
            }
        }
        sides
    }
}

/// `Z^2 + Z/2`, `GF3`, `0`, as printed in the table.
pub fn render_group(ring: &str, betti: usize, torsion: &[u64]) -> String {
    let mut parts = Vec::new();
    match betti {
        0 => {}
        1 => parts.push(ring.to_string()),
        b => parts.push(format!("{}^{}", ring, b)),
    }
    parts.extend(torsion.iter().map(|t| format!("Z/{}", t)));
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(xs) if xs.is_empty() => "none".to_string(),
        Value::Array(xs) => format!("({})", join(xs)),
        other => other.to_string(),
    }
}

fn join(xs: &[Value]) -> String {
    xs.iter().map(scalar_text).collect::<Vec<_>>().join(", ")
}

/// A matrix as an array of rows of exact entries.
pub fn matrix_value(m: &ExactMatrix) -> Value {
    let r = m.ring();
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array((0..m.cols()).map(|j| Value::String(r.format(m.get(i, j)))).collect()))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn groups_render() {
        assert_eq!(render_group("Z", 2, &[2]), "Z^2 + Z/2");
        assert_eq!(render_group("Z", 0, &[]), "0");
        assert_eq!(render_group("GF3", 1, &[]), "GF3");
    }

    #[test]
    fn json_round_trip() {
        let mut r = Report::new("homology", 2, Ring::Integers);
        r.fact("rank", "rank", 3);
        r.rows.push(Row { degree: 1, betti: 0, torsion: vec![2], side: "partial".into() });
        let back: Report = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
    }
}
