// The explicit two-term recurrences for D = x^2 + d against the Rédei solutions.
//
//     cargo run --example nathanson

use pellred::pell2::{nathanson, solve, PellProblem};
use pellred::polyring::parse_poly;

fn main() {
    let x = parse_poly("x").unwrap();
    for d in [-1, 1, 2, -2] {
        let problem = PellProblem::new(x.clone(), d).unwrap();
        println!("d = {d}");
        for n in 1..=3 {
            let (a, b) = nathanson(d, n).unwrap();
            // d = -1 advances one Rédei index per step; the others advance two.
            let index = if d == -1 { n } else { 2 * n };
            let sol = solve(&problem, index).unwrap();
            let same = a == sol.p && b == sol.q;
            let flipped = a == -&sol.p && b == -&sol.q;
            assert!(same || flipped);
            println!(
                "  A_{n} = {a}, B_{n} = {b} ({})",
                if same { "same" } else { "negated" }
            );
        }
    }
}
