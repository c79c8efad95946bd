//! Hull dimension, class, distances and weight distribution of a generator
//! matrix file, or of a few stored codes when no file is given.
//!
//! ```text
//! cargo run --example hull_analysis -- 'fixtures/G_[9,4,5].g4m'
//! ```

use hullforge::construct::fixture;
use hullforge::hull::hull_report;
use hullforge::matrix_file::{parse_matrix, write_matrix, Alphabet};
use hullforge::LinearCode;

fn describe(label: &str, code: &LinearCode) {
    let report = hull_report(code);
    let wd = code
        .weight_distribution()
        .expect("dimension within the cap");
    let dual = code.hermitian_dual();
    let dual_d = (dual.dimension() > 0)
        .then(|| dual.min_distance().ok())
        .flatten();
    println!(
        "{label}: [{}, {}, {}]",
        code.length(),
        code.dimension(),
        wd.min_distance().unwrap_or(0)
    );
    println!(
        "  class {} (hull dimension {})",
        report.class, report.hull_dim
    );
    println!(
        "  dual distance {}",
        dual_d.map_or("-".into(), |d| d.to_string())
    );
    let terms: Vec<String> = wd
        .counts()
        .iter()
        .enumerate()
        .filter(|(_, &a)| a > 0)
        .map(|(w, a)| format!("A{w}={a}"))
        .collect();
    println!("  {}", terms.join(" "));
    if report.hull_dim > 0 {
        print!("  hull basis\n{}", write_matrix(&report.hull_basis));
    }
}

fn main() {
    if let Some(path) = std::env::args().nth(1) {
        let text = std::fs::read_to_string(&path).expect("readable file");
        let g = parse_matrix(&text, Alphabet::Letters).unwrap_or_else(|e| panic!("{path}: {e}"));
        describe(
            &path,
            &LinearCode::from_generator(&g).expect("nonzero matrix"),
        );
        return;
    }
    for name in ["G_[4,3,2]", "G_[9,4,5]", "G_[13,3,9]"] {
        describe(name, &fixture(name).unwrap().code());
    }
    describe("F_4^3", &LinearCode::full_space(3));
}
