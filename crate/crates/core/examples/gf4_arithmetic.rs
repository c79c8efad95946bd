//! GF(4) tables and the linear algebra behind hull computations.

use hullforge::gf4linalg::{Gf4, Gf4Matrix};

fn main() {
    println!(
        "  + | {}",
        Gf4::ALL.map(|x| x.symbol().to_string()).join(" ")
    );
    for a in Gf4::ALL {
        println!(
            "  {} | {}",
            a.symbol(),
            Gf4::ALL.map(|b| (a + b).symbol().to_string()).join(" ")
        );
    }
    println!(
        "  * | {}",
        Gf4::ALL.map(|x| x.symbol().to_string()).join(" ")
    );
    for a in Gf4::ALL {
        println!(
            "  {} | {}",
            a.symbol(),
            Gf4::ALL.map(|b| (a * b).symbol().to_string()).join(" ")
        );
    }
    for a in Gf4::NONZERO {
        println!(
            "  {}: conjugate {}, inverse {}",
            a.symbol(),
            a.conj().symbol(),
            a.inv().unwrap().symbol()
        );
    }

    let g = Gf4Matrix::from_symbol_rows(&["1 0 w W 1", "0 1 1 w W", "1 1 W 1 w"]).unwrap();
    let (r, pivots) = g.rref();
    println!("\nrank {} with pivots {pivots:?}", g.rank());
    for row in r.row_iter() {
        println!(
            "  {}",
            row.iter()
                .map(|x| x.symbol().to_string())
                .collect::<Vec<_>>()
                .join(" ")
        );
    }
    let gram = g.hermitian_gram();
    println!(
        "Gram rank {}, kernel dimension {}",
        gram.rank(),
        gram.kernel().rows()
    );
}
