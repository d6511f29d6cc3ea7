mod common;

use num_bigint::BigInt;
use proptest::prelude::*;

use common::{nonzero_ds, p};
use pellred::pellm::gen_redei;
use pellred::polyring::{Degree, IntPoly};
use pellred::redei::{
    backward_step, redei_closed_form, redei_matrix, redei_recurrence, RedeiSequence,
};

fn poly(max_deg: usize, bound: i64) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-bound..=bound, 1..=max_deg + 1).prop_map(|c| IntPoly::from_i64s(&c))
}

fn nonconstant(max_deg: usize, bound: i64) -> impl Strategy<Value = IntPoly> {
    poly(max_deg, bound).prop_filter("nonconstant", |f| {
        f.degree().finite().is_some_and(|k| k >= 1)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn three_constructions_agree(alpha in poly(4, 10), z in poly(4, 10), n in 0u32..=30) {
        let rec = redei_recurrence(&alpha, &z, n);
        prop_assert_eq!(&rec, &redei_matrix(&alpha, &z, n));
        prop_assert_eq!(&rec, &redei_closed_form(&alpha, &z, n));
        prop_assert!(rec.norm_identity_holds());
    }

    #[test]
    fn backward_step_inverts(alpha in poly(4, 10), z in poly(4, 10)) {
        let pairs: Vec<_> = RedeiSequence::new(&alpha, &z).take(21).collect();
        prop_assume!(!(&(&z * &z) - &alpha).is_zero());
        for n in 1..=20 {
            let (nn, dn) = &pairs[n];
            let back = backward_step(&nn.to_rat(), &dn.to_rat(), &alpha, &z).unwrap();
            prop_assert_eq!(back, (pairs[n - 1].0.to_rat(), pairs[n - 1].1.to_rat()));
        }
    }

    #[test]
    fn degree_law(f in nonconstant(4, 5), d in prop::sample::select(nonzero_ds(-6, 6).collect::<Vec<_>>())) {
        let m = f.degree().finite().unwrap();
        let alpha = &(&f * &f) + &IntPoly::constant(d.into());
        for (n, (nn, dn)) in RedeiSequence::new(&alpha, &f).enumerate().take(21) {
            prop_assert_eq!(nn.degree(), Degree::Finite(n * m));
            if n >= 1 {
                prop_assert_eq!(dn.degree(), Degree::Finite((n - 1) * m));
            }
        }
    }

    #[test]
    fn divisibility_for_two(f in poly(4, 5), d in prop::sample::select(vec![2i64, -2])) {
        let alpha = &(&f * &f) + &IntPoly::constant(d.into());
        for (n, (nn, dn)) in RedeiSequence::new(&alpha, &f).enumerate().take(21) {
            let k = num_traits::pow(BigInt::from(d), n / 2);
            prop_assert!(nn.divisible_by(&k) && dn.divisible_by(&k), "n = {}", n);
        }
    }

    #[test]
    fn degree_two_circulant_reduces(z in poly(3, 5), alpha in poly(3, 5), n in 0u32..=20) {
        let v = gen_redei(&z, &alpha, 2, n).unwrap();
        let pair = redei_recurrence(&alpha, &z, n);
        prop_assert_eq!(v.coords, vec![pair.rational, pair.radical]);
    }
}

#[test]
fn three_does_not_divide_n2() {
    for f in [p("x"), p("x^2"), p("x^3+x"), p("2x-1")] {
        let alpha = &(&f * &f) + &p("3");
        let n2 = redei_recurrence(&alpha, &f, 2).rational;
        assert_eq!(n2, &(&f * &f).scale_by(&BigInt::from(2)) + &p("3"));
        assert!(!n2.divisible_by(&BigInt::from(3)), "f = {f}");
    }
}

#[test]
fn first_table_is_already_a_solution() {
    let (alpha, z) = (p("x^4-1"), p("x^2"));
    for n in 0..=10 {
        let pair = redei_closed_form(&alpha, &z, n);
        let lhs = &(&pair.rational * &pair.rational) - &(&alpha * &(&pair.radical * &pair.radical));
        assert!(lhs.is_one(), "n = {n}");
    }
}
