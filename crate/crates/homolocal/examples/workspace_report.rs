//! Running a declarative workspace file through the task layer.
//!
//! The same engine behind the `homolocal` binary is callable as a library:
//! parse a workspace, run its tasks (in parallel if asked), and serialize
//! the report. The file format declares rings, modules, maps and tasks;
//! see fibonacci.hl next to this example.

use homolocal::input::parse_workspace;
use homolocal::report::Format;
use homolocal::tasks::run_workspace;

fn main() {
    let text = include_str!("fibonacci.hl");
    let ws = match parse_workspace(text) {
        Ok(ws) => ws,
        Err(e) => {
            eprintln!("load error: {e}");
            std::process::exit(2);
        }
    };
    println!(
        "loaded {} rings, {} modules, {} tasks",
        ws.rings.len(),
        ws.modules.len(),
        ws.tasks.len()
    );

    let report = run_workspace(&ws, None);
    print!("{}", report.emit(Format::Table));

    // the JSON form is byte-stable across runs; pipe it wherever
    let json = report.emit(Format::Json);
    println!("json report: {} bytes", json.len());
    std::process::exit(if report.any_error() { 1 } else { 0 });
}
