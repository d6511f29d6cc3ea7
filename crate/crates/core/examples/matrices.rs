// Polynomial matrices: powers, determinants and characteristic polynomials.
//
//     cargo run --example matrices

use pellred::pellm::{step_matrix, twist_for};
use pellred::polymat::build_circulant;
use pellred::polyring::parse_poly;
use pellred::redei::redei_step_matrix;

fn main() {
    let alpha = parse_poly("x^4+2").unwrap();
    let z = parse_poly("x^2").unwrap();
    let m = redei_step_matrix(&alpha, &z);
    let cube = m.mat_pow(3);
    println!(
        "[[z, alpha], [1, z]]^3 first column: ({}, {})",
        cube.get(0, 0),
        cube.get(1, 0)
    );
    println!("det = {}", cube.det());
    let cp: Vec<String> = m.char_poly().iter().map(ToString::to_string).collect();
    println!("char poly coefficients in t (ascending): {cp:?}");

    let f = parse_poly("x").unwrap();
    let step = step_matrix(&f, &twist_for(&f, 3, 3), 3).unwrap();
    let cp: Vec<String> = step.char_poly().iter().map(ToString::to_string).collect();
    println!("m = 3, r = 3 char poly (ascending): {cp:?}");

    // A 5x5 determinant goes through fraction-free elimination.
    let big = step_matrix(&parse_poly("x+1").unwrap(), &parse_poly("x^2").unwrap(), 5).unwrap();
    assert_eq!(big.det_bareiss(), big.det_cofactor());
    println!("5x5 det = {}", big.det());

    let p = parse_poly("x^2+1").unwrap();
    let q = parse_poly("x").unwrap();
    let r = parse_poly("x^2+2").unwrap();
    let c = build_circulant(&[p, q, parse_poly("0").unwrap()], &r).unwrap();
    println!("3x3 circulant det = {}", c.det());
}
