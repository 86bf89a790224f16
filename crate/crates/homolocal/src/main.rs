use clap::{Parser, Subcommand, ValueEnum};
use homolocal::input::{parse_workspace, TaskSpec, Value, Workspace};
use homolocal::report::{Format, Report};
use homolocal::tasks::{explain, known_kinds, run_workspace};
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "homolocal",
    version,
    about = "Exact homological invariants of truncated graded rings over prime fields"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Parse a workspace file and execute its tasks
    Run {
        file: PathBuf,
        /// Output format
        #[arg(long, value_enum, default_value_t = FormatArg::Table)]
        format: FormatArg,
        /// Worker threads (default: one per core)
        #[arg(long)]
        jobs: Option<usize>,
        /// Result cache directory; opaque content-addressed files, safe to delete
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Run the criterion tasks of a file and print one verdict line each
    Check {
        file: PathBuf,
        /// Worker threads (default: one per core)
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Describe a task kind: what it computes and which settings it takes
    Explain { task: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Table,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
            FormatArg::Table => Format::Table,
        }
    }
}

const EXIT_TASK_ERROR: u8 = 1;
const EXIT_LOAD_ERROR: u8 = 2;

fn main() -> ExitCode {
    match Cli::parse().cmd {
        Cmd::Run { file, format, jobs, cache } => run_cmd(&file, format.into(), jobs, cache),
        Cmd::Check { file, jobs } => check_cmd(&file, jobs),
        Cmd::Explain { task } => explain_cmd(&task),
    }
}

fn load(path: &Path) -> Result<(String, Workspace), String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let ws = parse_workspace(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    Ok((text, ws))
}

fn run_cmd(file: &Path, format: Format, jobs: Option<usize>, cache: Option<PathBuf>) -> ExitCode {
    let (text, ws) = match load(file) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_LOAD_ERROR);
        }
    };
    let key = cache.as_deref().map(|dir| cache_path(dir, &text, format));
    if let Some(path) = &key {
        if let Some((status, output)) = cache_read(path) {
            print!("{output}");
            return ExitCode::from(status);
        }
    }
    let report = run_workspace(&ws, jobs);
    let output = report.emit(format);
    print!("{output}");
    let status = if report.any_error() { EXIT_TASK_ERROR } else { 0 };
    if let Some(path) = &key {
        cache_write(path, status, &output);
    }
    ExitCode::from(status)
}

/// Criterion task kinds: what `check` keeps from a workspace.
const CHECK_KINDS: &[&str] = &[
    "kunz_regularity",
    "ci_curvature",
    "frobenius_closed_form",
    "socle_extremality",
    "bass_equality",
    "ab_depth",
    "peskine_szpiro",
    "check_suite",
];

fn check_cmd(file: &Path, jobs: Option<usize>) -> ExitCode {
    let (_, mut ws) = match load(file) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_LOAD_ERROR);
        }
    };
    ws.tasks.retain(|t| CHECK_KINDS.contains(&t.kind.as_str()));
    if ws.tasks.is_empty() {
        // no criterion tasks in the file: run the full suite on every ring
        for (name, _) in &ws.rings {
            let mut args = BTreeMap::new();
            args.insert("ring".to_string(), Value::Name(name.clone()));
            ws.tasks.push(TaskSpec {
                kind: "check_suite".to_string(),
                label: format!("check_suite({name})"),
                line: 0,
                args,
            });
        }
    }
    let report = run_workspace(&ws, jobs);
    print!("{}", render_check(&report));
    if report.any_error() {
        ExitCode::from(EXIT_TASK_ERROR)
    } else {
        ExitCode::SUCCESS
    }
}

fn render_check(report: &Report) -> String {
    let mut out = String::new();
    for r in &report.results {
        out.push_str(&format!("== {}\n", r.task));
        if let Some(err) = &r.error {
            out.push_str(&format!("  error: {err}\n"));
            continue;
        }
        if let Some(verdicts) = r.data.get("verdicts").and_then(|v| v.as_array()) {
            for v in verdicts {
                out.push_str(&format!(
                    "  {}: {}\n",
                    v["name"].as_str().unwrap_or("?"),
                    v["verdict"].as_str().unwrap_or("?")
                ));
            }
            if let Some(skipped) = r.data.get("skipped").and_then(|v| v.as_array()) {
                for s in skipped {
                    out.push_str(&format!(
                        "  {}: skipped ({})\n",
                        s["name"].as_str().unwrap_or("?"),
                        s["reason"].as_str().unwrap_or("?")
                    ));
                }
            }
        } else {
            out.push_str(&format!(
                "  {}: {}\n",
                r.data["name"].as_str().unwrap_or(&r.kind),
                r.data["verdict"].as_str().unwrap_or("?")
            ));
        }
    }
    if report.results.is_empty() {
        out.push_str("(no criterion tasks)\n");
    }
    out
}

fn explain_cmd(task: &str) -> ExitCode {
    match explain(task) {
        Some(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        None => {
            eprintln!("error: unknown task kind `{task}`");
            eprintln!("known kinds: {}", known_kinds().join(", "));
            ExitCode::from(EXIT_LOAD_ERROR)
        }
    }
}

fn fnv64(bytes: &[u8], seed: u64) -> u64 {
    let mut h = seed ^ 0xcbf29ce484222325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

fn cache_path(dir: &Path, text: &str, format: Format) -> PathBuf {
    let tag = match format {
        Format::Json => "json",
        Format::Csv => "csv",
        Format::Table => "table",
    };
    let h = fnv64(text.as_bytes(), fnv64(tag.as_bytes(), 0));
    dir.join(format!("{h:016x}.{tag}"))
}

/// Cached entries hold the exit status on the first line, then the exact
/// bytes that were printed. Any read problem is treated as a miss.
fn cache_read(path: &Path) -> Option<(u8, String)> {
    let raw = std::fs::read_to_string(path).ok()?;
    let (head, rest) = raw.split_once('\n')?;
    let status: u8 = head.strip_prefix("status:")?.parse().ok()?;
    Some((status, rest.to_string()))
}

fn cache_write(path: &Path, status: u8, output: &str) {
    if let Some(dir) = path.parent() {
        if std::fs::create_dir_all(dir).is_err() {
            return;
        }
    }
    let _ = std::fs::write(path, format!("status:{status}\n{output}"));
}
