use std::io::Write;
use std::path::Path;

use rayon::prelude::*;
use serde::Serialize;

use super::cache::{CacheEntry, DhCache};
use super::CliError;
use crate::bounds::{dh_closed_form, table5_lookup, DhValue};
use crate::construct::FixtureCorpus;
use crate::hull::hull_dimension;
use crate::search::exhaustive_dh;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Formula,
    Exhaustive,
    Witness,
    Bound,
    Paper,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TableCell {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub hull_dim: usize,
    pub method: Method,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TableOptions {
    pub max_n: usize,
    /// Restrict to one dimension.
    pub k: Option<usize>,
    /// Settle cells with `k ≤ 3` and `n` up to this length by exhaustive
    /// search instead of the closed forms.
    pub exhaustive_up_to: Option<usize>,
}

fn cell(n: usize, k: usize, d: usize, method: Method) -> TableCell {
    TableCell {
        n,
        k,
        d,
        hull_dim: 1,
        method,
    }
}

/// A verified witness distance from the embedded corpus.
fn corpus_witness(n: usize, k: usize) -> Option<usize> {
    let code = FixtureCorpus::witnesses().find(n, k)?.code();
    (hull_dimension(&code) == 1).then_some(())?;
    code.min_distance().ok()
}

fn resolve(
    n: usize,
    k: usize,
    options: &TableOptions,
    cache: &DhCache,
) -> (Option<TableCell>, Option<CacheEntry>) {
    let cached = cache.best(n, k).map(|e| e.d);
    if k <= 3 && options.exhaustive_up_to.is_some_and(|m| n <= m) {
        if let Ok(o) = exhaustive_dh(n, k) {
            let entry = o
                .witness
                .as_ref()
                .map(|w| CacheEntry::new(w, o.best_d, "exhaustive"));
            return (Some(cell(n, k, o.best_d, Method::Exhaustive)), entry);
        }
    }
    match dh_closed_form(n, k) {
        Some(DhValue::Exact(d)) => (Some(cell(n, k, d, Method::Formula)), None),
        Some(DhValue::LowerBound(lb)) => match cached.filter(|&d| d > lb) {
            Some(d) => (Some(cell(n, k, d, Method::Witness)), None),
            None => (Some(cell(n, k, lb, Method::Bound)), None),
        },
        None => {
            if let Some(d) = corpus_witness(n, k) {
                (Some(cell(n, k, d, Method::Witness)), None)
            } else if let Some(d) = cached {
                (Some(cell(n, k, d, Method::Witness)), None)
            } else if let Ok(d) = table5_lookup(n, k) {
                (Some(cell(n, k, d, Method::Paper)), None)
            } else {
                (None, None)
            }
        }
    }
}

/// Regenerates every covered cell with `2 ≤ n ≤ max_n`, `1 ≤ k < n`, in row
/// order. Cells with no formula, witness or printed value are omitted.
/// New exhaustive witnesses are added to `cache`.
pub fn regenerate_table(options: &TableOptions, cache: &mut DhCache) -> Vec<TableCell> {
    let pairs: Vec<(usize, usize)> = (2..=options.max_n)
        .flat_map(|n| (1..n).map(move |k| (n, k)))
        .filter(|&(_, k)| options.k.is_none_or(|want| want == k))
        .collect();
    let shared: &DhCache = cache;
    let resolved: Vec<_> = pairs
        .par_iter()
        .map(|&(n, k)| resolve(n, k, options, shared))
        .collect();
    let mut cells = Vec::new();
    for (c, entry) in resolved {
        cells.extend(c);
        if let Some(e) = entry {
            cache.insert(e);
        }
    }
    cells
}

fn to_csv(cells: &[TableCell]) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for c in cells {
        w.serialize(c)
            .map_err(|e| CliError::Serialize(e.to_string()))?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| CliError::Serialize(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Serialize(e.to_string()))
}

pub(super) fn cmd_table(
    options: &TableOptions,
    dir: Option<&Path>,
    out: &mut Vec<u8>,
) -> Result<(), CliError> {
    let cache_path = dir.map(|d| d.join("dh_cache.json"));
    let mut cache = match &cache_path {
        Some(p) => DhCache::load(p)?,
        None => DhCache::default(),
    };
    let cells = regenerate_table(options, &mut cache);
    let csv = to_csv(&cells)?;
    match dir {
        Some(d) => {
            std::fs::create_dir_all(d)?;
            let json = serde_json::to_string_pretty(&cells)
                .map_err(|e| CliError::Serialize(e.to_string()))?;
            std::fs::write(d.join("dh_table.json"), json + "\n")?;
            std::fs::write(d.join("dh_table.csv"), &csv)?;
            if let Some(p) = &cache_path {
                cache.save(p)?;
            }
            writeln!(out, "wrote {} cells to {}", cells.len(), d.display())?;
            if cache.dropped > 0 {
                writeln!(
                    out,
                    "dropped {} cache entries that failed verification",
                    cache.dropped
                )?;
            }
        }
        None => out.write_all(csv.as_bytes())?,
    }
    Ok(())
}
