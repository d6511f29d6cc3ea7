// Degree-m circulant Pell equations from generalized Rédei polynomials.
//
//     cargo run --example higher_degree

use pellred::pellm::{classify_m, divisibility_probe, solve_m, verify_m};
use pellred::polyring::parse_poly;

fn main() {
    let f = parse_poly("x").unwrap();

    // The cubic case: P1^3 + R P2^3 + R^2 P3^3 - 3 R P1 P2 P3 = 1.
    for n in 1..=4 {
        let sol = solve_m(&f, -1, 3, n).unwrap();
        assert!(verify_m(&sol));
        let sols: Vec<String> = sol.sols.iter().map(ToString::to_string).collect();
        println!(
            "m = 3, r = -1, n = {n}: R = {}, P = ({})",
            sol.twist,
            sols.join(", ")
        );
    }

    for (m, r) in [(2, 1), (3, 1), (3, 3), (3, -3), (5, 5), (4, 4)] {
        let n = m as u32;
        let predicted = classify_m(r, m, n).unwrap();
        let sol = solve_m(&f, r, m, n).unwrap();
        assert!(verify_m(&sol));
        println!(
            "m = {m}, r = {r:>2}, n = {n}: predicted {predicted}, integral {}, raw det {}",
            sol.integral, sol.raw_norm
        );
    }

    match solve_m(&f, 2, 3, 1) {
        Err(e) => println!("m = 3, r = 2, n = 1: {e}"),
        Ok(_) => unreachable!(),
    }

    let report = divisibility_probe(&f, 3, 12).unwrap();
    println!(
        "3^floor(n/3) | A_n for n <= 12: {} ({} checks)",
        report.success(),
        report.checked
    );
}
