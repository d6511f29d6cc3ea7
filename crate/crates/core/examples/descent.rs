// Walks a Rédei pair down to (1, 0) and recovers the index of a solution.
//
//     cargo run --example descent

use pellred::pell2::{descend, identify_solution, solve, PellProblem};
use pellred::polyring::parse_poly;
use pellred::redei::redei_recurrence;

fn main() {
    let f = parse_poly("x^3+x").unwrap();
    let d = 2;
    let alpha = &(&f * &f) + &parse_poly("2").unwrap();

    let top = redei_recurrence(&alpha, &f, 6);
    let mut cur = (top.rational.to_rat(), top.radical.to_rat());
    for n in (1..=6).rev() {
        println!(
            "n = {n}: deg P = {:?}, deg Q = {:?}",
            cur.0.degree(),
            cur.1.degree()
        );
        cur = descend(&cur.0, &cur.1, &f, d, n).unwrap();
    }
    println!("n = 0: P = {}, Q = {}", cur.0, cur.1);

    let problem = PellProblem::new(f.clone(), d).unwrap();
    for n in [0, 2, 4, 8] {
        let (p, q) = solve(&problem, n).unwrap().to_integral().unwrap();
        let index = identify_solution(&p, &q, &f, d).unwrap();
        println!("identify(solve(f, {d}, {n})) = {index:?}");
        assert_eq!(index, Some(n));
    }
}
