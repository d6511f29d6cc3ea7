// Parsing, formatting, JSON and square roots of integer polynomials.
//
//     cargo run --example polynomials

use pellred::polyring::{parse_poly, poly_sqrt, IntPoly, RatPoly};

fn main() {
    let p = parse_poly(" 3 + x^2 - 2x^2 + 4x^6 ").unwrap();
    println!("canonical: {p}");

    let sq = &p * &p;
    println!("square: {sq}");
    println!("sqrt: {}", poly_sqrt(&sq).unwrap());
    assert!(poly_sqrt(&parse_poly("x^2+1").unwrap()).is_none());

    let json = serde_json::to_string(&p).unwrap();
    println!("json: {json}");
    let back: IntPoly = serde_json::from_str(&json).unwrap();
    assert_eq!(back, p);

    let half = p.scale(&num_rational::BigRational::new(1.into(), 2.into()));
    let json = serde_json::to_string(&half).unwrap();
    println!("rational: {half}, json: {json}");
    let back: RatPoly = serde_json::from_str(&json).unwrap();
    assert_eq!(back, half);

    match parse_poly("x^^2") {
        Err(e) => println!("error: {e}"),
        Ok(_) => unreachable!(),
    }
}
