//! Machine-readable run reports. One result block per task, in declaration
//! order; errors are recorded per block and never abort siblings. The JSON
//! layout is versioned through `schema`; CSV is fixed to the columns
//! task,series,index,value,certified for external plotting.

use serde::Serialize;

pub const SCHEMA: &str = "homolocal.report/1";

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub results: Vec<TaskResult>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TaskResult {
    pub task: String,
    pub kind: String,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "serde_json::Value::is_null")]
    pub data: serde_json::Value,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub series: Vec<SeriesBlock>,
}

impl TaskResult {
    pub fn failed(task: &str, kind: &str, error: String) -> TaskResult {
        TaskResult {
            task: task.to_string(),
            kind: kind.to_string(),
            ok: false,
            error: Some(error),
            data: serde_json::Value::Null,
            series: Vec::new(),
        }
    }
}

/// A coefficient sequence with per-index certification, indexed from
/// `start`.
#[derive(Debug, Clone, Serialize)]
pub struct SeriesBlock {
    pub name: String,
    pub start: i64,
    pub values: Vec<i64>,
    pub certified: Vec<bool>,
}

impl SeriesBlock {
    pub fn new(name: &str, start: i64, values: Vec<i64>, certified: Vec<bool>) -> SeriesBlock {
        assert_eq!(values.len(), certified.len(), "one flag per value");
        SeriesBlock { name: name.to_string(), start, values, certified }
    }

    pub fn uniform(name: &str, start: i64, values: Vec<i64>, certified: bool) -> SeriesBlock {
        let flags = vec![certified; values.len()];
        SeriesBlock::new(name, start, values, flags)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Table,
}

impl Report {
    pub fn any_error(&self) -> bool {
        self.results.iter().any(|r| !r.ok)
    }

    pub fn emit(&self, format: Format) -> String {
        match format {
            Format::Json => self.emit_json(),
            Format::Csv => self.emit_csv(),
            Format::Table => self.emit_table(),
        }
    }

    pub fn emit_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report is always serializable");
        s.push('\n');
        s
    }

    pub fn emit_csv(&self) -> String {
        let mut out = String::from("task,series,index,value,certified\n");
        for r in &self.results {
            for s in &r.series {
                for (k, (&v, &c)) in s.values.iter().zip(&s.certified).enumerate() {
                    out.push_str(&format!(
                        "{},{},{},{},{}\n",
                        r.task,
                        s.name,
                        s.start + k as i64,
                        v,
                        c
                    ));
                }
            }
        }
        out
    }

    pub fn emit_table(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            out.push_str(&format!("== {} ({})\n", r.task, r.kind));
            if let Some(err) = &r.error {
                out.push_str(&format!("  error: {err}\n"));
                continue;
            }
            if let serde_json::Value::Object(map) = &r.data {
                for (k, v) in map {
                    out.push_str(&format!("  {k}: {}\n", compact(v)));
                }
            }
            for s in &r.series {
                let vals: Vec<String> = s.values.iter().map(|v| v.to_string()).collect();
                let tag = if s.certified.iter().all(|&c| c) {
                    "certified"
                } else {
                    "partly uncertified"
                };
                out.push_str(&format!(
                    "  {} (from n={}): {}  [{}]\n",
                    s.name,
                    s.start,
                    vals.join(" "),
                    tag
                ));
            }
        }
        if self.results.is_empty() {
            out.push_str("(no tasks)\n");
        }
        out
    }
}

fn compact(v: &serde_json::Value) -> String {
    serde_json::to_string(v).expect("value is always serializable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn sample() -> Report {
        Report {
            schema: SCHEMA,
            results: vec![
                TaskResult {
                    task: "betti".into(),
                    kind: "betti".into(),
                    ok: true,
                    error: None,
                    data: json!({"projective_dimension": null}),
                    series: vec![SeriesBlock::uniform("betti", 0, vec![1, 2, 3], true)],
                },
                TaskResult::failed("bad", "hilbert", "window exceeded".into()),
            ],
        }
    }

    #[test]
    fn csv_has_fixed_columns_and_one_row_per_coefficient() {
        let csv = sample().emit_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "task,series,index,value,certified");
        assert_eq!(lines[1], "betti,betti,0,1,true");
        assert_eq!(lines.len(), 4);
    }

    #[test]
    fn json_round_trips_and_is_deterministic() {
        let a = sample().emit_json();
        let b = sample().emit_json();
        assert_eq!(a, b);
        let v: serde_json::Value = serde_json::from_str(&a).unwrap();
        assert_eq!(v["schema"], SCHEMA);
        assert_eq!(v["results"][1]["ok"], false);
    }

    #[test]
    fn empty_report_is_valid_in_every_format() {
        let r = Report { schema: SCHEMA, results: vec![] };
        assert!(serde_json::from_str::<serde_json::Value>(&r.emit_json()).is_ok());
        assert_eq!(r.emit_csv(), "task,series,index,value,certified\n");
        assert_eq!(r.emit_table(), "(no tasks)\n");
    }
}
