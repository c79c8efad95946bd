//! Runs the verification suite over the embedded corpus, or over the
//! `*.g4m` files of a directory.
//!
//! ```text
//! cargo run --release --example verify_fixtures -- crates/core/fixtures
//! ```

use std::path::PathBuf;

use hullforge::cli::verify_paper;

fn main() {
    let dir = std::env::args().nth(1).map(PathBuf::from);
    let report = verify_paper(dir.as_deref()).expect("fixture directory readable");
    for line in report.failures() {
        println!("{line}");
    }
    let sections = ["fixture", "table1", "table2", "table6"];
    for s in sections {
        let lines: Vec<_> = report.lines.iter().filter(|l| l.section == s).collect();
        let ok = lines.iter().filter(|l| l.passed).count();
        println!("{s:<8} {ok}/{}", lines.len());
    }
    std::process::exit(if report.passed() { 0 } else { 1 });
}
