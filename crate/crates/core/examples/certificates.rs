//! Nonexistence certificates for hull-1 [n, 3, d] codes, and a
//! counterexample where a code does exist.
//!
//! ```text
//! cargo run --release --example certificates -- 37 3 28
//! ```

use hullforge::search::{certify_nonexistence, Certification};

fn report(n: usize, k: usize, d: usize) {
    match certify_nonexistence(n, k, d) {
        Ok(Certification::Certificate(c)) => println!(
            "[{n},{k},{d}]: none. bounds {:?}, lengths {:?}, closed at {:?}, {} vectors",
            c.pruning_bounds, c.lengths_checked, c.closed_by_bound_at, c.vectors_examined
        ),
        Ok(Certification::CounterexampleFound(code)) => {
            println!(
                "[{n},{k},{d}]: exists, d = {}",
                code.min_distance().unwrap()
            )
        }
        Err(e) => println!("[{n},{k},{d}]: {e}"),
    }
}

fn main() {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    if let [n, k, d] = args[..] {
        report(n, k, d);
        return;
    }
    for (n, d) in [(16, 12), (20, 15), (21, 16), (12, 8), (10, 7)] {
        report(n, 3, d);
    }
    report(10, 2, 8);
}
