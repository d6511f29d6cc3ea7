// Regenerates the three tables of (N_n, D_n) as printed by `pellred table`.
//
//     cargo run --example tables

use pellred::cli::emit_table;
use pellred::polyring::parse_poly;

fn main() {
    for (alpha, z, n_max) in [("x^4-1", "x^2", 5), ("x^4+2", "x^2", 6), ("x^2+3", "x", 5)] {
        let alpha = parse_poly(alpha).unwrap();
        let z = parse_poly(z).unwrap();
        println!("alpha = {alpha}, z = {z}");
        print!("{}", emit_table(&alpha, &z, n_max, false));
        println!();
    }
}
