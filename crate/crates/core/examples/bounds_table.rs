//! Griesmer and sphere-packing limits next to D₄ᴴ(n, k, 1) for n ≤ 12,
//! printed as a triangle. Cells come from the closed forms where one applies
//! and from the stored table otherwise (marked with `*`).

use hullforge::bounds::{dh_closed_form, table5_lookup, BoundsReport};

fn main() {
    println!("D4H(n,k,1), n <= 12");
    for n in 2..=12 {
        let row: Vec<String> = (1..n)
            .map(|k| match dh_closed_form(n, k) {
                Some(v) => format!("{:>3}", v.to_string()),
                None => format!("{:>2}*", table5_lookup(n, k).unwrap()),
            })
            .collect();
        println!("{n:>3} | {}", row.join(" "));
    }

    println!("\nupper bounds for k = 3");
    println!("{:>3} {:>9} {:>7} {:>6}", "n", "Griesmer", "sphere", "D4H");
    for n in (4..=60).step_by(4) {
        let b = BoundsReport::new(n, 3);
        let dh = dh_closed_form(n, 3).unwrap();
        println!(
            "{n:>3} {:>9} {:>7} {:>6}",
            b.griesmer_max_d,
            b.sphere_packing_max_d,
            dh.to_string()
        );
    }
}
