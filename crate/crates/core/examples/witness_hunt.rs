//! Seeded random search for hull-1 witnesses of the n ≤ 12 table cells with
//! k ≥ 4, optionally saving each witness as a `.g4m` file.
//!
//! ```text
//! cargo run --release --example witness_hunt -- [budget] [seed] [out-dir]
//! ```

use std::path::PathBuf;
use std::time::Instant;

use hullforge::bounds::table5_cells;
use hullforge::hull::hull_dimension;
use hullforge::matrix_file::write_matrix;
use hullforge::search::random_search;

fn main() {
    let mut args = std::env::args().skip(1);
    let budget: u64 = args.next().and_then(|a| a.parse().ok()).unwrap_or(200_000);
    let seed: u64 = args.next().and_then(|a| a.parse().ok()).unwrap_or(1);
    let out: Option<PathBuf> = args.next().map(PathBuf::from);

    let mut misses = Vec::new();
    for (n, k, d) in table5_cells().filter(|&(_, k, _)| k >= 4) {
        let start = Instant::now();
        let outcome = random_search(n, k, d, seed, budget);
        let secs = start.elapsed().as_secs_f64();
        match &outcome.witness {
            Some(w) => {
                let verified = hull_dimension(w) == 1 && w.min_distance().ok() == Some(d);
                println!(
                    "[{n},{k},{d}] found after {} candidates ({secs:.2}s), verified: {verified}",
                    outcome.explored
                );
                if let Some(dir) = &out {
                    let text = format!(
                        "# hull-1 [{n},{k},{d}] witness, random_search seed {seed}\n{}",
                        write_matrix(w.generator())
                    );
                    std::fs::write(dir.join(format!("W_[{n},{k},{d}].g4m")), text)
                        .expect("write witness");
                }
            }
            None => {
                println!(
                    "[{n},{k},{d}] missed: best d = {} after {} candidates ({secs:.2}s)",
                    outcome.best_d, outcome.explored
                );
                misses.push((n, k, d));
            }
        }
    }
    println!("{} cells missed: {misses:?}", misses.len());
}
