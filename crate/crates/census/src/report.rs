use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde_json::{json, Map, Value};

/// Tabular output with a summary block and itemized exclusions.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Report {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Value>>,
    pub summary: BTreeMap<String, Value>,
    pub exclusions: Vec<(String, String)>,
    /// Number of failed reference checks; drives the exit status.
    pub failed_checks: usize,
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

impl Report {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Report {
            columns,
            ..Default::default()
        }
    }

    pub fn push_row(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) {
        self.summary.insert(key.to_string(), value.into());
    }

    pub fn exclude(&mut self, key: impl Into<String>, reason: impl Into<String>) {
        self.exclusions.push((key.into(), reason.into()));
    }

    /// Rows, a blank line, `# summary` as `key,value` lines, a blank line and
    /// `# exclusions` as `key,reason` lines. LF endings throughout.
    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(cell).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out.push_str("\n# summary\n");
        for (k, v) in &self.summary {
            let _ = writeln!(out, "{k},{}", cell(v));
        }
        out.push_str("\n# exclusions\n");
        for (k, reason) in &self.exclusions {
            let _ = writeln!(out, "{k},{reason}");
        }
        out
    }

    /// Pretty JSON with lexicographically sorted object keys.
    pub fn to_json(&self) -> String {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| {
                let obj: Map<String, Value> = self.columns.iter().map(|c| c.to_string()).zip(r.iter().cloned()).collect();
                Value::Object(obj)
            })
            .collect();
        let exclusions: Vec<Value> = self
            .exclusions
            .iter()
            .map(|(k, r)| json!({ "key": k, "reason": r }))
            .collect();
        let doc = json!({
            "columns": self.columns,
            "rows": rows,
            "summary": self.summary,
            "exclusions": exclusions,
        });
        let mut s = serde_json::to_string_pretty(&doc).expect("JSON values serialize");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_layout() {
        let mut r = Report::new(vec!["a", "b"]);
        r.push_row(vec![json!(1), json!("x")]);
        r.set("rows", 1);
        r.exclude("t0=1", "bad reduction");
        assert_eq!(r.to_csv(), "a,b\n1,x\n\n# summary\nrows,1\n\n# exclusions\nt0=1,bad reduction\n");
        assert!(!r.to_csv().contains('\r'));
    }

    #[test]
    fn json_keys_sorted() {
        let mut r = Report::new(vec!["z", "a"]);
        r.push_row(vec![json!(1), json!(2)]);
        let s = r.to_json();
        let rows = &s[s.find("\"rows\"").unwrap()..];
        assert!(rows.find("\"a\"").unwrap() < rows.find("\"z\"").unwrap());
        assert!(s.find("\"columns\"").unwrap() < s.find("\"summary\"").unwrap());
    }
}
