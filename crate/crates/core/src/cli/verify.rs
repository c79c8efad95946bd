use std::fmt;
use std::io::Write;
use std::path::Path;

use super::CliError;
use crate::bounds::{griesmer_max_d, table2_cells};
use crate::construct::{code_from_multiplicity, Fixture, FixtureCorpus};
use crate::eaqecc::{table6_cells, table6_entry, TABLE6_ERRATA};
use crate::hull::hull_dimension;
use crate::search::table1_vectors;

/// One named check of the verification suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckLine {
    pub section: &'static str,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CheckLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} {} {}: {}", self.section, self.name, self.detail)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub lines: Vec<CheckLine>,
}

impl VerifyReport {
    pub fn failures(&self) -> impl Iterator<Item = &CheckLine> {
        self.lines.iter().filter(|l| !l.passed)
    }

    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }

    fn push(
        &mut self,
        section: &'static str,
        name: impl Into<String>,
        passed: bool,
        detail: impl Into<String>,
    ) {
        self.lines.push(CheckLine {
            section,
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }
}

/// Compares a fixture's code with its claimed length, dimension, distance
/// and hull dimension. `Ok` carries the observed `[n, k, d]` summary.
pub fn verify_fixture(f: &Fixture) -> Result<String, String> {
    let code = f.code();
    let d = code.min_distance().map_err(|e| e.to_string())?;
    let hull = hull_dimension(&code);
    let seen = format!(
        "[{},{},{}] hull {}",
        code.length(),
        code.dimension(),
        d,
        hull
    );
    let claimed = (f.claimed_n, f.claimed_k, f.claimed_d, f.claimed_hull_dim);
    if (code.length(), code.dimension(), d, hull) == claimed {
        Ok(seen)
    } else {
        Err(format!(
            "claimed [{},{},{}] hull {}, found {seen}",
            claimed.0, claimed.1, claimed.2, claimed.3
        ))
    }
}

fn fixture_checks(report: &mut VerifyReport, dir: Option<&Path>) -> Result<(), CliError> {
    let mut check = |name: &str, result: Result<String, String>| match result {
        Ok(s) => report.push("fixture", name, true, s),
        Err(s) => report.push("fixture", name, false, s),
    };
    match dir {
        None => {
            let corpora = [FixtureCorpus::builtin(), FixtureCorpus::witnesses()];
            for f in corpora.iter().flat_map(|c| c.fixtures()) {
                check(&f.name, verify_fixture(f));
            }
        }
        Some(dir) => {
            let mut paths: Vec<_> = std::fs::read_dir(dir)?
                .filter_map(Result::ok)
                .map(|e| e.path())
                .filter(|p| p.is_file() && p.extension().is_some_and(|x| x == "g4m"))
                .collect();
            paths.sort();
            if paths.is_empty() {
                return Err(CliError::Usage(format!(
                    "no .g4m files in {}",
                    dir.display()
                )));
            }
            for path in paths {
                let name = path
                    .file_stem()
                    .and_then(|s| s.to_str())
                    .unwrap_or_default()
                    .to_string();
                let text = std::fs::read_to_string(&path)?;
                let result = Fixture::from_text(&name, &text)
                    .map_err(|e| e.to_string())
                    .and_then(|f| verify_fixture(&f));
                check(&name, result);
            }
        }
    }
    Ok(())
}

fn table1_checks(report: &mut VerifyReport) {
    for s in 1..=3 {
        let dims: Vec<Option<usize>> = table1_vectors(s)
            .iter()
            .map(|m| code_from_multiplicity(m).ok().map(|c| hull_dimension(&c)))
            .collect();
        let ok = dims.iter().all(|&h| h == Some(0) || h == Some(2));
        report.push(
            "table1",
            format!("s={s}"),
            ok,
            format!("hull dimensions {dims:?}"),
        );
    }
}

fn table2_checks(report: &mut VerifyReport) {
    let cells: Vec<(usize, usize)> = table2_cells(5).collect();
    let bad: Vec<usize> = cells
        .iter()
        .filter(|&&(n, d)| griesmer_max_d(n, 3) != d)
        .map(|&(n, _)| n)
        .collect();
    let detail = if bad.is_empty() {
        format!("{} cells match", cells.len())
    } else {
        format!("mismatch at n = {bad:?}")
    };
    report.push("table2", "griesmer k=3", bad.is_empty(), detail);
}

fn table6_checks(report: &mut VerifyReport) {
    for (n, k, printed) in table6_cells() {
        let erratum = TABLE6_ERRATA
            .iter()
            .find(|(cell, _)| *cell == (n, k))
            .map(|&(_, fixed)| fixed);
        let expected = erratum.unwrap_or(printed);
        let name = format!("({n},{k})");
        match table6_entry(n, k) {
            Ok(got) if got == expected => {
                let note = if erratum.is_some() {
                    format!(" (printed [{};{}] is an erratum)", printed.0, printed.1)
                } else {
                    String::new()
                };
                report.push("table6", name, true, format!("[{};{}]{note}", got.0, got.1));
            }
            Ok(got) => report.push(
                "table6",
                name,
                false,
                format!(
                    "expected [{};{}], derived [{};{}]",
                    expected.0, expected.1, got.0, got.1
                ),
            ),
            Err(e) => report.push("table6", name, false, e.to_string()),
        }
    }
}

/// Runs the fixture corpus (embedded, or every `*.g4m` in `dir`) and the
/// reproducible table checks.
pub fn verify_paper(dir: Option<&Path>) -> Result<VerifyReport, CliError> {
    let mut report = VerifyReport::default();
    fixture_checks(&mut report, dir)?;
    table1_checks(&mut report);
    table2_checks(&mut report);
    table6_checks(&mut report);
    Ok(report)
}

pub(super) fn cmd_verify(dir: Option<&Path>, out: &mut Vec<u8>) -> Result<(), CliError> {
    let report = verify_paper(dir)?;
    for line in &report.lines {
        writeln!(out, "{line}")?;
    }
    let failed: Vec<String> = report
        .failures()
        .map(|l| format!("{} {}", l.section, l.name))
        .collect();
    writeln!(
        out,
        "{} checks, {} failed",
        report.lines.len(),
        failed.len()
    )?;
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::Mismatch(failed.join(", ")))
    }
}
