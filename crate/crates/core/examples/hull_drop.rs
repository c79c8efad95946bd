//! Puncturing or shortening on a coordinate of a hull information set lowers
//! the hull dimension by exactly one. Starting from a self-orthogonal code
//! this walks the hull down to one.

use hullforge::gf4linalg::Gf4Matrix;
use hullforge::hull::{hull_dimension, hull_report};
use hullforge::LinearCode;

fn main() {
    // the hexacode, a Hermitian self-dual [6,3,4] code
    let g = Gf4Matrix::from_symbol_rows(&["1 0 0 1 w w", "0 1 0 w 1 w", "0 0 1 w w 1"]).unwrap();
    let mut code = LinearCode::from_generator(&g).unwrap();
    println!(
        "start: [{}, {}], hull {}",
        code.length(),
        code.dimension(),
        hull_dimension(&code)
    );
    while hull_dimension(&code) > 1 {
        let report = hull_report(&code);
        let coord = report.information_set()[0];
        let shortened = code.shorten(&[coord]).unwrap();
        let punctured = code.puncture(&[coord]).unwrap();
        println!(
            "coordinate {coord}: punctured [{}, {}] hull {}, shortened [{}, {}] hull {}",
            punctured.length(),
            punctured.dimension(),
            hull_dimension(&punctured),
            shortened.length(),
            shortened.dimension(),
            hull_dimension(&shortened)
        );
        code = punctured;
    }
    println!(
        "end: [{}, {}, {}] with hull 1",
        code.length(),
        code.dimension(),
        code.min_distance().unwrap()
    );
}
