//! Seeded randomized search for a hull-1 [n, k, d] code.
//!
//! ```text
//! cargo run --release --example random_search -- 10 5 5 7 200000
//! ```
//!
//! Arguments are `n k d seed budget`. The same seed and budget give the same
//! witness whatever the thread count.

use std::time::Instant;

use hullforge::hull::hull_dimension;
use hullforge::matrix_file::write_matrix;
use hullforge::search::random_search;

fn main() {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("integer argument"))
        .collect();
    let get = |i: usize, default: u64| args.get(i).copied().unwrap_or(default);
    let (n, k, d) = (get(0, 9) as usize, get(1, 5) as usize, get(2, 4) as usize);
    let (seed, budget) = (get(3, 1), get(4, 200_000));

    let start = Instant::now();
    let outcome = random_search(n, k, d, seed, budget);
    println!("{outcome} in {:.2}s", start.elapsed().as_secs_f64());
    match outcome.witness {
        Some(w) => {
            assert_eq!(hull_dimension(&w), 1);
            print!("{}", write_matrix(w.generator()));
        }
        None => println!("no witness with d >= {d}"),
    }
}
