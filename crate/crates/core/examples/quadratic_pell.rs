// Normalized solutions of P^2 - (f^2 + d) Q^2 = 1 and the integrality classes.
//
//     cargo run --example quadratic_pell

use pellred::pell2::{classify, solve, verify, PellProblem};
use pellred::polyring::parse_poly;

fn main() {
    let problem = PellProblem::new(parse_poly("x^2").unwrap(), 2).unwrap();
    println!("D = {}", problem.radicand());
    for n in [2, 4, 6] {
        let sol = solve(&problem, n).unwrap();
        assert!(verify(&sol.p, &sol.q, problem.radicand()));
        println!("n = {n}: P = {}, Q = {}", sol.p, sol.q);
    }

    for d in -6..=6 {
        if d == 0 {
            continue;
        }
        println!("classify({d:>2}) = {}", classify(d).unwrap().tag);
    }

    // Rational solutions still satisfy the equation exactly.
    let problem = PellProblem::new(parse_poly("x").unwrap(), 3).unwrap();
    let sol = solve(&problem, 2).unwrap();
    assert!(verify(&sol.p, &sol.q, problem.radicand()) && !sol.integral);
    println!("f = x, d = 3, n = 2: P = {}, Q = {}", sol.p, sol.q);

    // A common factor in f can make a NONE class integral anyway.
    let problem = PellProblem::new(parse_poly("3x").unwrap(), 3).unwrap();
    let sol = solve(&problem, 2).unwrap();
    assert!(sol.integral && verify(&sol.p, &sol.q, problem.radicand()));
    println!("f = 3x, d = 3, n = 2: P = {}, Q = {}", sol.p, sol.q);
}
