//! Acceptance suite. Each criterion prints one PASS/FAIL line; run with
//! `cargo test --test acceptance -- --nocapture` to see them all.

mod common;

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use common::{nonzero_ds, p, random_poly, rng};
use pellred::pell2::{classify, descend, identify_solution, nathanson, solve, verify, PellProblem};
use pellred::pellm::{
    classify_m, divisibility_probe, gen_redei, gen_redei_oracle, solve_m, step_matrix, twist_for,
    verify_m,
};
use pellred::polymat::build_circulant;
use pellred::polyring::{IntPoly, RatPoly};
use pellred::redei::{
    redei_closed_form, redei_matrix, redei_recurrence, redei_step_matrix, RedeiSequence,
};

/// All comparisons are exact; the only tolerance is zero.
const TOLERANCE: u32 = 0;

const SWEEP_SEED: u64 = 0x5eed_2024;
const SWEEP_SAMPLES: usize = 200;
const SWEEP_MAX_DEG: usize = 4;
const SWEEP_BOUND: i64 = 5;
const SWEEP_N_MAX: u32 = 20;

type Verdict = Result<String, String>;
type Criterion = (u32, &'static str, fn() -> Verdict);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn sweep_polys() -> Vec<IntPoly> {
    let mut r = rng(SWEEP_SEED);
    (0..SWEEP_SAMPLES)
        .map(|_| random_poly(&mut r, SWEEP_MAX_DEG, SWEEP_BOUND))
        .collect()
}

/// `(d, n)` pairs of the sweep: every nonzero `d` in `[-6, 6]` with even
/// `1 <= n <= 20`, plus every `1 <= n <= 20` for `d = -1`. Index 0 is the
/// trivial pair `(1, 0)`, integral for every `d`, and is left out.
fn sweep_cases() -> Vec<(i64, u32)> {
    let mut cases = Vec::new();
    for d in nonzero_ds(-6, 6) {
        for n in 1..=SWEEP_N_MAX {
            if n % 2 == 0 || d == -1 {
                cases.push((d, n));
            }
        }
    }
    cases
}

fn criterion_1() -> Verdict {
    let tables = [
        ("x^4-1", "x^2", 5, include_str!("fixtures/table1.txt")),
        ("x^4+2", "x^2", 6, include_str!("fixtures/table2.txt")),
        ("x^2+3", "x", 5, include_str!("fixtures/table3.txt")),
    ];
    for (alpha, z, n_max, fixture) in tables {
        let out = Command::new(env!("CARGO_BIN_EXE_pellred"))
            .args([
                "table",
                "--alpha",
                alpha,
                "--z",
                z,
                "--n-max",
                &n_max.to_string(),
            ])
            .output()
            .map_err(|e| e.to_string())?;
        check(out.status.success(), || {
            format!("table {alpha} exited {}", out.status)
        })?;
        let stdout = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
        check(stdout == fixture, || {
            format!("alpha={alpha} z={z}: got\n{stdout}expected\n{fixture}")
        })?;
    }
    Ok("tables 1-3 byte-identical to fixtures".into())
}

fn criterion_2() -> Verdict {
    let problem = PellProblem::new(p("x^2"), 2).unwrap();
    let expected = [
        (2, "-x^4-1", "-x^2"),
        (4, "2x^8+4x^4+1", "2x^6+2x^2"),
        (6, "-4x^12-12x^8-9x^4-1", "-4x^10-8x^6-3x^2"),
    ];
    for (n, ep, eq) in expected {
        let sol = solve(&problem, n).map_err(|e| e.to_string())?;
        check(sol.p == p(ep).to_rat() && sol.q == p(eq).to_rat(), || {
            format!("n={n}: got ({}, {})", sol.p, sol.q)
        })?;
    }
    Ok("f=x^2, d=2, n=2,4,6 exact".into())
}

fn criterion_3() -> Verdict {
    let mut checked = 0usize;
    for f in sweep_polys() {
        for (d, n) in sweep_cases() {
            let problem = PellProblem::new(f.clone(), d).unwrap();
            let sol = solve(&problem, n).map_err(|e| format!("f={f} d={d} n={n}: {e}"))?;
            check(verify(&sol.p, &sol.q, problem.radicand()), || {
                format!("verify failed for f={f} d={d} n={n}")
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} solutions verified"))
}

fn content(f: &IntPoly) -> BigInt {
    f.coeffs().iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn criterion_4() -> Verdict {
    let mut checked = 0usize;
    let mut mismatches: Vec<(IntPoly, i64, u32, bool)> = Vec::new();
    for f in sweep_polys() {
        for (d, n) in sweep_cases() {
            let problem = PellProblem::new(f.clone(), d).unwrap();
            let sol = solve(&problem, n).unwrap();
            let predicted = classify(d).unwrap().predicts_integral(n);
            if sol.integral != predicted {
                mismatches.push((f.clone(), d, n, sol.integral));
            }
            checked += 1;
        }
    }
    let witness_fs = [p("x"), p("x^2"), p("x^3+x"), p("2x^2-x+3")];
    let mut witness_hits = Vec::new();
    for f in &witness_fs {
        for d in [3, -3, 4, 5] {
            let problem = PellProblem::new(f.clone(), d).unwrap();
            for n in 1..=SWEEP_N_MAX {
                if let Ok(sol) = solve(&problem, n) {
                    if sol.integral {
                        witness_hits.push(format!("f={f} d={d} n={n}"));
                    }
                }
            }
        }
    }
    // The sweep's own f for d in {3, -3, 4, 5}.
    let mut sweep_hits = 0usize;
    for f in sweep_polys() {
        for d in [3, -3, 4, 5] {
            let problem = PellProblem::new(f.clone(), d).unwrap();
            for n in 1..=SWEEP_N_MAX {
                if solve(&problem, n).is_ok_and(|s| s.integral) {
                    sweep_hits += 1;
                }
            }
        }
    }

    if mismatches.is_empty() && witness_hits.is_empty() && sweep_hits == 0 {
        return Ok(format!("{checked} integral flags match classify(d)"));
    }
    let mut primitive_by_d: BTreeMap<i64, usize> = BTreeMap::new();
    for (f, d, ..) in &mismatches {
        if f.degree().finite().is_some_and(|k| k >= 1) && content(f).is_one() {
            *primitive_by_d.entry(*d).or_default() += 1;
        }
    }
    let sample: Vec<String> = mismatches
        .iter()
        .take(4)
        .map(|(f, d, n, integral)| format!("f={f} d={d} n={n} integral={integral}"))
        .collect();
    Err(format!(
        "{} of {checked} flags disagree with classify(d); primitive nonconstant f by d: \
         {primitive_by_d:?}; {sweep_hits} integral hits for d in {{3,-3,4,5}}; \
         fixed witnesses integral: {witness_hits:?}; e.g. {}",
        mismatches.len(),
        sample.join("; "),
    ))
}

fn criterion_5() -> Verdict {
    let mut r = rng(0xc0ffee);
    for _ in 0..100 {
        let alpha = random_poly(&mut r, 4, 5);
        let z = random_poly(&mut r, 4, 5);
        for n in 0..=30 {
            let a = redei_recurrence(&alpha, &z, n);
            let b = redei_matrix(&alpha, &z, n);
            let c = redei_closed_form(&alpha, &z, n);
            check(a == b && b == c, || format!("alpha={alpha} z={z} n={n}"))?;
        }
    }
    for m in 2..=4 {
        for _ in 0..10 {
            let alpha = random_poly(&mut r, 3, 5);
            let z = random_poly(&mut r, 3, 5);
            for n in 0..=15 {
                let a = gen_redei(&z, &alpha, m, n).unwrap();
                let b = gen_redei_oracle(&z, &alpha, m, n).unwrap();
                check(a == b, || format!("m={m} alpha={alpha} z={z} n={n}"))?;
            }
        }
    }
    Ok("100 (alpha, z) x n<=30 three-way; m=2..4 x n<=15 two-way".into())
}

fn criterion_6() -> Verdict {
    let fs = [p("x"), p("x^2"), p("x^3+x")];
    let mut steps = 0usize;
    for f in &fs {
        for d in nonzero_ds(-6, 6) {
            let alpha = f * f + IntPoly::constant(d.into());
            let pairs: Vec<(IntPoly, IntPoly)> = RedeiSequence::new(&alpha, f).take(21).collect();
            for n in 1..=20u32 {
                let (pn, qn) = &pairs[n as usize];
                let (pp, qq) = &pairs[n as usize - 1];
                let (p1, q1) = descend(&pn.to_rat(), &qn.to_rat(), f, d, n)
                    .map_err(|e| format!("f={f} d={d} n={n}: {e}"))?;
                check(p1 == pp.to_rat() && q1 == qq.to_rat(), || {
                    format!("descend f={f} d={d} n={n} gave ({p1}, {q1})")
                })?;
                check(
                    p1.degree() < pn.degree() && q1.degree() < qn.degree(),
                    || format!("no degree drop f={f} d={d} n={n}"),
                )?;
                steps += 1;
            }
        }
    }
    let mut identified = 0usize;
    for f in &fs {
        for d in [-1, 1, 2, -2] {
            let problem = PellProblem::new(f.clone(), d).unwrap();
            for n in (0..=12).filter(|n| d == -1 || n % 2 == 0) {
                let (sp, sq) = solve(&problem, n).unwrap().to_integral().unwrap();
                let got = identify_solution(&sp, &sq, f, d).map_err(|e| e.to_string())?;
                check(got == Some(n), || {
                    format!("identify f={f} d={d} n={n} gave {got:?}")
                })?;
                identified += 1;
            }
        }
    }
    Ok(format!(
        "{steps} descent steps, {identified} indices recovered"
    ))
}

fn criterion_7() -> Verdict {
    let x = p("x");
    for n in 0..=15 {
        let (a, b) = nathanson(-1, n).unwrap();
        let pair = redei_recurrence(&p("x^2-1"), &x, n);
        check(
            a == pair.rational.to_rat() && b == pair.radical.to_rat(),
            || format!("d=-1 n={n}"),
        )?;
    }
    let mut signs = Vec::new();
    for d in [1, 2, -2] {
        let problem = PellProblem::new(x.clone(), d).unwrap();
        let (a1, _) = nathanson(d, 1).unwrap();
        let s1 = solve(&problem, 2).unwrap();
        let sign = if a1 == s1.p {
            BigRational::one()
        } else if a1 == -&s1.p {
            -BigRational::one()
        } else {
            return Err(format!("d={d}: A_1={a1} is not +-{}", s1.p));
        };
        for n in 0..=15u32 {
            let (a, b) = nathanson(d, n).unwrap();
            let sol = solve(&problem, 2 * n).unwrap();
            let s = num_traits::pow(sign.clone(), n as usize);
            check(a == sol.p.scale_by(&s) && b == sol.q.scale_by(&s), || {
                format!("d={d} n={n}: ({a}, {b}) vs ({}, {})", sol.p, sol.q)
            })?;
        }
        signs.push(format!(
            "d={d}:{}",
            if sign.is_positive() { "+" } else { "-" }
        ));
    }
    Ok(format!(
        "d=-1 exact; (A_n, B_n) = sign^n solve(x, d, 2n) with {}",
        signs.join(" ")
    ))
}

fn criterion_8() -> Verdict {
    let mut r = rng(0xde7);
    for m in 2..=5usize {
        for _ in 0..50 {
            let z = random_poly(&mut r, 3, 5);
            let alpha = random_poly(&mut r, 3, 5);
            let step = step_matrix(&z, &alpha, m).unwrap();
            let sign = if m % 2 == 1 {
                BigInt::one()
            } else {
                -BigInt::one()
            };
            let base = z.pow(m as u32) + alpha.scale_by(&sign);
            for n in 0..=8 {
                let det = step.mat_pow(n).det();
                check(det == base.pow(n), || {
                    format!("m={m} z={z} alpha={alpha} n={n}")
                })?;
            }
        }
    }
    for _ in 0..50 {
        let (pp, qq, dd) = (
            random_poly(&mut r, 4, 9),
            random_poly(&mut r, 4, 9),
            random_poly(&mut r, 4, 9),
        );
        let det = build_circulant(&[pp.clone(), qq.clone()], &dd)
            .unwrap()
            .det();
        check(det == &pp * &pp - &dd * &(&qq * &qq), || {
            format!("P={pp} Q={qq} D={dd}")
        })?;
    }
    Ok("m=2..5, n<=8, 50 (z, alpha) each; 2x2 circulant is P^2-DQ^2".into())
}

fn criterion_9() -> Verdict {
    let mut predicted = 0usize;
    for f in [p("x"), p("x^2+1")] {
        for m in [2usize, 3, 5] {
            let mi = m as i64;
            for r in [-1, 1, mi, -mi] {
                for n in 0..=2 * m as u32 {
                    if !classify_m(r, m, n).unwrap() {
                        continue;
                    }
                    let sol = solve_m(&f, r, m, n)
                        .map_err(|e| format!("f={f} m={m} r={r} n={n}: {e}"))?;
                    check(sol.integral, || {
                        format!("not integral: f={f} m={m} r={r} n={n}")
                    })?;
                    check(verify_m(&sol), || {
                        format!("det != 1: f={f} m={m} r={r} n={n}")
                    })?;
                    predicted += 1;
                }
            }
        }
    }
    for f in [p("x"), p("x^2+1")] {
        let report = divisibility_probe(&f, 3, 12).unwrap();
        check(report.success(), || {
            format!("probe f={f}: {:?}", report.first_violation)
        })?;
    }
    Ok(format!(
        "{predicted} predicted-integral solutions; m=3 probe to n=12 clean"
    ))
}

fn criterion_10() -> Verdict {
    let mut r = rng(0xc4a2);
    for _ in 0..20 {
        let alpha = random_poly(&mut r, 4, 5);
        let z = random_poly(&mut r, 4, 5);
        let cp = redei_step_matrix(&alpha, &z).char_poly();
        let expected = vec![
            (&z * &z - &alpha).to_rat(),
            z.scale_by(&BigInt::from(-2)).to_rat(),
            RatPoly::one(),
        ];
        check(cp == expected, || format!("2x2 alpha={alpha} z={z}"))?;
    }
    for f in [p("x"), p("x^2+1"), p("3x^3-2x+5")] {
        for r in [3i64, -3] {
            let m = 3usize;
            let cp = step_matrix(&f, &twist_for(&f, r, m), m)
                .unwrap()
                .char_poly();
            // t^m + sum_{i=1}^{m-1} (-1)^i C(m,i) t^(m-i) f^i, constant -r.
            let mut expected = vec![RatPoly::zero(); m + 1];
            expected[m] = RatPoly::one();
            let binom = [1i64, 3, 3, 1];
            for i in 1..m {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                expected[m - i] = f
                    .pow(i as u32)
                    .scale_by(&BigInt::from(sign * binom[i]))
                    .to_rat();
            }
            expected[0] = IntPoly::constant(BigInt::from(-r)).to_rat();
            check(cp == expected, || format!("m=3 f={f} r={r}: {cp:?}"))?;
        }
    }
    Ok("2x2 and m=3 characteristic polynomials coefficient-exact".into())
}

#[test]
fn acceptance() {
    assert_eq!(TOLERANCE, 0);
    let criteria: [Criterion; 10] = [
        (1, "table reproduction", criterion_1),
        (2, "normalized solutions f=x^2 d=2", criterion_2),
        (3, "Pell identity sweep", criterion_3),
        (4, "integrality classification", criterion_4),
        (5, "cross-method oracles", criterion_5),
        (6, "descent and completeness", criterion_6),
        (7, "Nathanson equivalence", criterion_7),
        (8, "degree-m determinant identity", criterion_8),
        (9, "degree-m integrality cases", criterion_9),
        (10, "characteristic polynomials", criterion_10),
    ];
    let mut failed = Vec::new();
    for (id, name, run) in criteria {
        let start = Instant::now();
        let verdict =
            catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".to_string()));
        let secs = start.elapsed().as_secs_f64();
        match verdict {
            Ok(detail) => println!("PASS criterion {id:>2} {name} ({secs:.2}s): {detail}"),
            Err(detail) => {
                println!("FAIL criterion {id:>2} {name} ({secs:.2}s): {detail}");
                failed.push(id);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
