use std::io::Write;
use std::path::Path;

use super::cache::{CacheEntry, DhCache};
use super::CliError;
use crate::bounds::BoundsReport;
use crate::code::LinearCode;
use crate::matrix_file::write_matrix;
use crate::search::{
    certify_nonexistence, exhaustive_dh, random_search, Certification, SearchError,
};

fn write_witness(out: &mut Vec<u8>, code: &LinearCode) -> Result<(), CliError> {
    out.write_all(write_matrix(code.generator()).as_bytes())?;
    Ok(())
}

pub(super) fn cmd_search(
    n: usize,
    k: usize,
    target_d: Option<usize>,
    seed: u64,
    budget: u64,
    cache: Option<&Path>,
    out: &mut Vec<u8>,
) -> Result<(), CliError> {
    if k == 0 || k > n {
        return Err(SearchError::InvalidParameters { n, k }.into());
    }
    let mut found: Option<(LinearCode, usize, &str)> = None;
    if k <= 3 {
        match target_d {
            Some(d) => match certify_nonexistence(n, k, d)? {
                Certification::Certificate(c) => {
                    writeln!(out, "# no hull-1 [{n}, {k}, >={d}] code exists")?;
                    writeln!(out, "# pruning bounds: {:?}", c.pruning_bounds)?;
                    writeln!(out, "# lengths checked: {:?}", c.lengths_checked)?;
                    if let Some(len) = c.closed_by_bound_at {
                        writeln!(out, "# closed by distance bounds at length {len}")?;
                    }
                    writeln!(out, "# vectors examined: {}", c.vectors_examined)?;
                }
                Certification::CounterexampleFound(code) => {
                    let got = code.min_distance()?;
                    writeln!(out, "# counterexample: hull-1 [{n}, {k}, {got}] code")?;
                    write_witness(out, &code)?;
                    found = Some((code, got, "exhaustive"));
                }
            },
            None => {
                let outcome = exhaustive_dh(n, k)?;
                writeln!(out, "# {outcome}")?;
                if let Some(w) = outcome.witness {
                    write_witness(out, &w)?;
                    found = Some((w, outcome.best_d, "exhaustive"));
                }
            }
        }
    } else {
        let target = target_d.unwrap_or_else(|| BoundsReport::new(n, k).best());
        let outcome = random_search(n, k, target, seed, budget);
        writeln!(
            out,
            "# {outcome}, target = {target}, seed = {seed}, budget = {budget}"
        )?;
        match outcome.witness {
            Some(w) => {
                write_witness(out, &w)?;
                found = Some((w, outcome.best_d, "witness"));
            }
            None => writeln!(out, "# no hull-1 witness reached d >= {target}")?,
        }
    }
    if let (Some(path), Some((code, d, method))) = (cache, found) {
        let mut c = DhCache::load(path)?;
        c.insert(CacheEntry::new(&code, d, method));
        c.save(path)?;
    }
    Ok(())
}
