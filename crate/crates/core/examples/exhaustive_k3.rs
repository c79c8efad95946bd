//! Exact D₄ᴴ(n, 3, 1) for small lengths by exhausting multiplicity vectors,
//! compared against the published [n, 3] table.
//!
//! ```text
//! cargo run --release --example exhaustive_k3 -- 22
//! ```

use std::time::Instant;

use hullforge::bounds::TABLE3;
use hullforge::search::exhaustive_dh;

fn main() {
    let max_n: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(16);
    println!(
        "{:>3} {:>4} {:>6} {:>12} {:>9}",
        "n", "D", "table", "explored", "seconds"
    );
    for n in 4..=max_n {
        let start = Instant::now();
        let outcome = exhaustive_dh(n, 3).expect("k = 3 is supported");
        let printed = TABLE3.iter().find(|r| r.n == n).map(|r| r.dh);
        println!(
            "{n:>3} {:>4} {:>6} {:>12} {:>9.3}",
            outcome.best_d,
            printed.map_or("-".to_string(), |d| d.to_string()),
            outcome.explored,
            start.elapsed().as_secs_f64()
        );
    }
}
