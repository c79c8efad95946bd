use std::io::Write;
use std::path::Path;

use clap::ValueEnum;
use serde::Serialize;

use super::CliError;
use crate::code::{CodeError, LinearCode};
use crate::eaqecc::{derive_pair_capped, EaqeccParams};
use crate::hull::hull_report;
use crate::matrix_file::{parse_matrix, Alphabet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

/// Everything `analyze` reports about a code. Distances beyond the
/// enumeration cap are `None`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisRecord {
    pub n: usize,
    pub k: usize,
    pub d: Option<usize>,
    pub dual_d: Option<usize>,
    pub hull_dim: usize,
    pub class: String,
    pub weights: Option<Vec<u64>>,
    pub eaqecc: Option<[EaqeccParams; 2]>,
}

fn capped<T>(r: Result<T, CodeError>) -> Result<Option<T>, CodeError> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(CodeError::BudgetExceeded { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

pub fn analyze(
    code: &LinearCode,
    with_eaqecc: bool,
    cap: usize,
) -> Result<AnalysisRecord, CodeError> {
    let report = hull_report(code);
    let weights = capped(code.weight_distribution_capped(cap))?;
    let d = weights.as_ref().and_then(|w| w.min_distance());
    let dual = code.hermitian_dual();
    let dual_d = if dual.dimension() == 0 {
        None
    } else {
        capped(dual.min_distance_capped(cap))?
    };
    let eaqecc = if with_eaqecc && report.hull_dim == 1 && d.is_some() && dual_d.is_some() {
        derive_pair_capped(code, cap).ok().map(|(a, b)| [a, b])
    } else {
        None
    };
    Ok(AnalysisRecord {
        n: code.length(),
        k: code.dimension(),
        d,
        dual_d,
        hull_dim: report.hull_dim,
        class: report.class.to_string(),
        weights: weights.map(|w| w.counts().to_vec()),
        eaqecc,
    })
}

fn opt(v: Option<usize>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

fn render_text(r: &AnalysisRecord, with_eaqecc: bool) -> String {
    let mut s = format!("[{}, {}, {}] code over GF(4)\n", r.n, r.k, opt(r.d));
    s += &format!("dual distance: {}\n", opt(r.dual_d));
    s += &format!("hull dimension: {} ({})\n", r.hull_dim, r.class);
    match &r.weights {
        Some(w) => {
            let terms: Vec<String> = w
                .iter()
                .enumerate()
                .filter(|(_, &a)| a > 0)
                .map(|(i, a)| format!("A{i}={a}"))
                .collect();
            s += &format!("weights: {}\n", terms.join(" "));
        }
        None => s += "weights: not computed (dimension cap)\n",
    }
    if with_eaqecc {
        match &r.eaqecc {
            Some([a, b]) => s += &format!("eaqecc: {a} {b}\n"),
            None => s += "eaqecc: none (needs hull dimension 1 and both distances)\n",
        }
    }
    s
}

#[derive(Serialize)]
struct CsvRow {
    n: usize,
    k: usize,
    d: Option<usize>,
    dual_d: Option<usize>,
    hull_dim: usize,
    class: String,
    weights: String,
    eaqecc: String,
}

fn render_csv(r: &AnalysisRecord) -> Result<String, CliError> {
    let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
    let row = CsvRow {
        n: r.n,
        k: r.k,
        d: r.d,
        dual_d: r.dual_d,
        hull_dim: r.hull_dim,
        class: r.class.clone(),
        weights: r.weights.as_deref().map(join).unwrap_or_default(),
        eaqecc: r
            .eaqecc
            .map(|[a, b]| format!("{a} {b}"))
            .unwrap_or_default(),
    };
    let mut w = csv::Writer::from_writer(Vec::new());
    w.serialize(row)
        .map_err(|e| CliError::Serialize(e.to_string()))?;
    let bytes = w
        .into_inner()
        .map_err(|e| CliError::Serialize(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Serialize(e.to_string()))
}

pub(super) fn cmd_analyze(
    path: &Path,
    format: OutputFormat,
    with_eaqecc: bool,
    digits: bool,
    cap: usize,
    out: &mut Vec<u8>,
) -> Result<(), CliError> {
    let text = std::fs::read_to_string(path)?;
    let alphabet = if digits {
        Alphabet::Digits
    } else {
        Alphabet::Letters
    };
    let matrix = parse_matrix(&text, alphabet).map_err(|source| CliError::Parse {
        path: path.display().to_string(),
        source,
    })?;
    let code = LinearCode::from_generator(&matrix)?;
    let record = analyze(&code, with_eaqecc, cap)?;
    let rendered = match format {
        OutputFormat::Text => render_text(&record, with_eaqecc),
        OutputFormat::Json => {
            let mut s =
                serde_json::to_string(&record).map_err(|e| CliError::Serialize(e.to_string()))?;
            s.push('\n');
            s
        }
        OutputFormat::Csv => render_csv(&record)?,
    };
    out.write_all(rendered.as_bytes())?;
    Ok(())
}
