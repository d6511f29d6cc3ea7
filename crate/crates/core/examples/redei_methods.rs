// The three constructions of (N_n, D_n) agree, and the norm identity holds.
//
//     cargo run --example redei_methods

use pellred::polyring::parse_poly;
use pellred::redei::{backward_step, redei_closed_form, redei_matrix, redei_recurrence};

fn main() {
    let alpha = parse_poly("x^3-2x+5").unwrap();
    let z = parse_poly("3x^2+1").unwrap();
    for n in [0, 1, 5, 12] {
        let rec = redei_recurrence(&alpha, &z, n);
        assert_eq!(rec, redei_matrix(&alpha, &z, n));
        assert_eq!(rec, redei_closed_form(&alpha, &z, n));
        assert!(rec.norm_identity_holds());
        println!(
            "n = {n:>2}: deg N = {:?}, deg D = {:?}",
            rec.rational.degree(),
            rec.radical.degree()
        );
    }

    // Stepping back from index 12 to 11 with the inverse matrix.
    let top = redei_recurrence(&alpha, &z, 12);
    let (n11, d11) =
        backward_step(&top.rational.to_rat(), &top.radical.to_rat(), &alpha, &z).unwrap();
    let expected = redei_recurrence(&alpha, &z, 11);
    assert_eq!(
        (n11, d11),
        (expected.rational.to_rat(), expected.radical.to_rat())
    );
    println!("backward step 12 -> 11 ok");
}
