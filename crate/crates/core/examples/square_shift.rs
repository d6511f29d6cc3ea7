// P^2 - f Q^2 = 1 when f + 1 is a perfect square.
//
//     cargo run --example square_shift

use pellred::pell2::{solve_square_shift, verify};
use pellred::polyring::{parse_poly, poly_sqrt};

fn main() {
    let f = parse_poly("x^4+2x^3+x^2-1").unwrap();
    let g = poly_sqrt(&(&f + &parse_poly("1").unwrap())).unwrap();
    println!("f = {f}, sqrt(f + 1) = {g}");
    for n in 1..=4 {
        let sol = solve_square_shift(&f, n).unwrap();
        assert!(verify(&sol.p, &sol.q, &f));
        println!("n = {n}: P = {}, Q = {}", sol.p, sol.q);
    }
    assert!(solve_square_shift(&parse_poly("x^2+3").unwrap(), 1).is_none());
}
