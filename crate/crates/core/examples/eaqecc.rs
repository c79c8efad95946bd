//! Entanglement-assisted quantum codes from hull-1 quaternary codes: the
//! n ≤ 12 grid, the k = 2 family and a comparison with known codes.

use hullforge::construct::fixture;
use hullforge::eaqecc::{
    corollary_family, derive_pair, known_k2_report, table6_entry, table6_literal, KNOWN_CITATION,
    TABLE6_BOLD,
};

fn main() {
    let code = fixture("G_[12,3,8]").unwrap().code();
    let (a, b) = derive_pair(&code).unwrap();
    println!("G_[12,3,8] gives {a} and {b}\n");

    println!("[d;c] for n <= 12 (bold cells marked !, printed differences marked ?)");
    for n in 2..=12 {
        let row: Vec<String> = (0..=n - 2)
            .map(|k| {
                let (d, c) = table6_entry(n, k).unwrap();
                let bold = if TABLE6_BOLD.contains(&(n, k)) {
                    "!"
                } else {
                    " "
                };
                let typo = if table6_literal(n, k).unwrap() != (d, c) {
                    "?"
                } else {
                    " "
                };
                format!("{:>10}", format!("[{d};{c}]{bold}{typo}"))
            })
            .collect();
        println!("{n:>3}{}", row.join(""));
    }

    println!("\n[[n,2,d;n-4]] for n = 21s + t, s = 1");
    for t in 0..=20 {
        let e = corollary_family(1, t).unwrap();
        let note = if e.bound_derived {
            " (distance from the lower bound)"
        } else {
            ""
        };
        println!("  {}{note}", e.params);
    }

    println!("\ncompared with known codes ({KNOWN_CITATION})");
    for r in known_k2_report().unwrap() {
        println!("  {r}");
    }
}
