//! Polynomial Pell equations `P² − (f² + d) Q² = 1`.
//!
//! With `α = f² + d` and `z = f` the Rédei norm is `(z² − α)^n = (−d)^n`, so
//! dividing `(N_n, D_n)` by `(−d)^(n/2)` produces a solution over `Q[x]`.
//! [`classify`] says for which `d` and `n` that solution lies in `Z[x]`,
//! [`descend`] is the degree-lowering inverse step, and
//! [`identify_solution`] walks an integral solution back down to `(±1, 0)`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::polyring::{div_exact_int, poly_sqrt, Degree, IntPoly, RatPoly};
use crate::redei::redei_recurrence;

/// The equation `P² − (f² + d) Q² = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PellProblem {
    f: IntPoly,
    d: i64,
    radicand: IntPoly,
}

impl PellProblem {
    pub fn new(f: IntPoly, d: i64) -> Result<Self> {
        if d == 0 {
            return Err(Error::ZeroD);
        }
        let radicand = &(&f * &f) + &IntPoly::constant(d.into());
        Ok(PellProblem { f, d, radicand })
    }

    pub fn f(&self) -> &IntPoly {
        &self.f
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    /// `D = f² + d`.
    pub fn radicand(&self) -> &IntPoly {
        &self.radicand
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PellSolution {
    pub p: RatPoly,
    pub q: RatPoly,
    /// Index of the Rédei pair the solution came from.
    pub index: u32,
    pub integral: bool,
    /// The scalar divided out of the Rédei pair.
    pub normalizer: BigRational,
}

impl PellSolution {
    /// `(P, Q)` in `Z[x]`, or [`Error::NotIntegral`].
    pub fn to_integral(&self) -> Result<(IntPoly, IntPoly)> {
        Ok((div_exact_int(&self.p)?, div_exact_int(&self.q)?))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IntegralityTag {
    /// Integral for every index.
    AllN,
    /// Integral for even indices only.
    EvenN,
    /// Never integral.
    Never,
}

impl fmt::Display for IntegralityTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IntegralityTag::AllN => "ALL_N",
            IntegralityTag::EvenN => "EVEN_N",
            IntegralityTag::Never => "NONE",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IntegralityClass {
    pub tag: IntegralityTag,
    pub d: i64,
}

impl IntegralityClass {
    pub fn predicts_integral(&self, n: u32) -> bool {
        match self.tag {
            IntegralityTag::AllN => true,
            IntegralityTag::EvenN => n.is_multiple_of(2),
            IntegralityTag::Never => false,
        }
    }
}

pub fn classify(d: i64) -> Result<IntegralityClass> {
    let tag = match d {
        0 => return Err(Error::ZeroD),
        -1 => IntegralityTag::AllN,
        1 | 2 | -2 => IntegralityTag::EvenN,
        _ => IntegralityTag::Never,
    };
    Ok(IntegralityClass { tag, d })
}

/// `(−d)^(n/2)` when it is rational: always for even `n`, and for odd `n`
/// only when `−d` is a perfect square `k²`, in which case it is `k^n`.
///
/// The odd-index case with `d ≠ −1` goes beyond the `d = ±1, ±2` family
/// and is kept because it is exact at no extra cost.
pub fn normalizer(d: i64, n: u32) -> Result<BigRational> {
    if d == 0 {
        return Err(Error::ZeroD);
    }
    let neg_d = -BigInt::from(d);
    if n.is_multiple_of(2) {
        return Ok(BigRational::from_integer(num_traits::pow(
            neg_d,
            (n / 2) as usize,
        )));
    }
    if neg_d.is_positive() {
        let k = neg_d.sqrt();
        if &k * &k == neg_d {
            return Ok(BigRational::from_integer(num_traits::pow(k, n as usize)));
        }
    }
    Err(Error::OddIndexUndefined { d, n })
}

/// Normalized Rédei solution of index `n`; `P² − D Q² = 1` holds exactly.
pub fn solve(problem: &PellProblem, n: u32) -> Result<PellSolution> {
    let s = normalizer(problem.d, n)?;
    let pair = redei_recurrence(&problem.radicand, &problem.f, n);
    let inv = s.recip();
    let p = pair.rational.scale(&inv);
    let q = pair.radical.scale(&inv);
    let integral = p.is_integral() && q.is_integral();
    Ok(PellSolution {
        p,
        q,
        index: n,
        integral,
        normalizer: s,
    })
}

/// `P² − D Q²` as a rational constant, or `None` if it is not constant.
fn pell_norm(p: &RatPoly, q: &RatPoly, radicand: &IntPoly) -> Option<BigRational> {
    // Clear denominators so the check runs over Z[x].
    let l = p.denominator_lcm().lcm(&q.denominator_lcm());
    let scale = BigRational::from_integer(l.clone());
    let p = div_exact_int(&p.scale_by(&scale)).expect("denominators cleared");
    let q = div_exact_int(&q.scale_by(&scale)).expect("denominators cleared");
    let lhs = &(&p * &p) - &(radicand * &(&q * &q));
    match lhs.degree() {
        Degree::NegInf => Some(BigRational::zero()),
        Degree::Finite(0) => Some(BigRational::new(lhs.coeff(0), &l * &l)),
        Degree::Finite(_) => None,
    }
}

/// Exact check of `P² − D Q² = 1`.
pub fn verify(p: &RatPoly, q: &RatPoly, radicand: &IntPoly) -> bool {
    pell_norm(p, q, radicand).is_some_and(|v| v.is_one())
}

/// One application of `(P, Q) ↦ ((−f P + D Q)/d, (P − f Q)/d)`; divides the
/// norm by `−d`.
fn descent_step(p: &RatPoly, q: &RatPoly, f: &RatPoly, d: i64) -> (RatPoly, RatPoly) {
    let radicand = &(f * f) + &RatPoly::constant(BigRational::from_integer(d.into()));
    let inv_d = BigRational::new(BigInt::one(), d.into());
    let p_next = (&(&radicand * q) - &(f * p)).scale_by(&inv_d);
    let q_next = (p - &(f * q)).scale_by(&inv_d);
    (p_next, q_next)
}

fn has_positive_lead(p: &RatPoly) -> bool {
    p.leading_coeff().is_some_and(Signed::is_positive)
}

fn degree_is(p: &RatPoly, k: usize) -> bool {
    p.degree() == Degree::Finite(k)
}

/// Lowers a solution of `P² − (f² + d) Q² = (−d)^n` to one of norm
/// `(−d)^(n−1)` with strictly smaller degrees.
///
/// Requires `deg f = m ≥ 1`, `deg P = n m`, `deg Q = (n − 1) m` and positive
/// leading coefficients on `f`, `P` and `Q`; sign normalization is the
/// caller's job.
pub fn descend(
    p: &RatPoly,
    q: &RatPoly,
    f: &IntPoly,
    d: i64,
    n: u32,
) -> Result<(RatPoly, RatPoly)> {
    if d == 0 {
        return Err(Error::ZeroD);
    }
    let violated = |msg: &str| Err(Error::PreconditionViolated(msg.to_string()));
    if n == 0 {
        return violated("index must be positive");
    }
    let m = match f.degree() {
        Degree::Finite(m) if m >= 1 => m,
        _ => return violated("f must be nonconstant"),
    };
    let f = f.to_rat();
    if !has_positive_lead(&f) || !has_positive_lead(p) || !has_positive_lead(q) {
        return violated("leading coefficients of f, P, Q must be positive");
    }
    let n_us = n as usize;
    if !degree_is(p, n_us * m) || !degree_is(q, (n_us - 1) * m) {
        return violated("expected deg P = n deg f and deg Q = (n - 1) deg f");
    }
    let radicand = &(&f * &f) + &RatPoly::constant(BigRational::from_integer(d.into()));
    let expected = normalizer(d, 2 * n)?;
    let radicand_int = div_exact_int(&radicand).expect("integer radicand");
    if pell_norm(p, q, &radicand_int) != Some(expected) {
        return violated("P^2 - (f^2 + d) Q^2 != (-d)^n");
    }
    let (p_next, q_next) = descent_step(p, q, &f, d);
    debug_assert!(p_next.degree() < p.degree() && q_next.degree() < q.degree());
    Ok((p_next, q_next))
}

/// Recovers the Rédei index of an integral solution of
/// `P² − (f² + d) Q² = 1`, or `None` if descent does not end at `(±1, 0)`.
///
/// The solution is rescaled to norm level `(−d)^n`, where `n = deg P / deg f`,
/// and then descended one index at a time, matching signs at every step.
/// When `(−d)^(n/2)` is irrational the descent stays at norm level 1 and
/// takes two steps at a time, multiplying by `d` after each pair.
pub fn identify_solution(p: &IntPoly, q: &IntPoly, f: &IntPoly, d: i64) -> Result<Option<u32>> {
    let problem = PellProblem::new(f.clone(), d)?;
    let (p, q) = (p.to_rat(), q.to_rat());
    if !verify(&p, &q, problem.radicand()) {
        return Err(Error::NotASolution);
    }
    if q.is_zero() {
        return Ok(Some(0));
    }
    let f = f.with_positive_lead();
    let m = match f.degree() {
        Degree::Finite(m) if m >= 1 => m,
        _ => return Ok(None),
    };
    let deg_p = p.degree().finite().expect("nonzero");
    if deg_p % m != 0 {
        return Ok(None);
    }
    let n = (deg_p / m) as u32;

    match normalizer(d, n) {
        Ok(s) => {
            let mut cur = (p.scale_by(&s), q.scale_by(&s));
            for k in (1..=n).rev() {
                let (cp, cq) = (cur.0.with_positive_lead(), cur.1.with_positive_lead());
                if !cp.is_integral() || !cq.is_integral() {
                    return Ok(None);
                }
                match descend(&cp, &cq, &f, d, k) {
                    Ok(next) => cur = next,
                    Err(Error::PreconditionViolated(_)) => return Ok(None),
                    Err(e) => return Err(e),
                }
            }
            Ok(ends_at_unit(&cur.0, &cur.1).then_some(n))
        }
        Err(Error::OddIndexUndefined { .. }) => {
            let f = f.to_rat();
            let d_rat = BigRational::from_integer(d.into());
            let mut cur = (p, q);
            let mut k = n as usize;
            while k >= 2 {
                let (cp, cq) = (cur.0.with_positive_lead(), cur.1.with_positive_lead());
                if !cp.is_integral()
                    || !cq.is_integral()
                    || !degree_is(&cp, k * m)
                    || !degree_is(&cq, (k - 1) * m)
                {
                    return Ok(None);
                }
                let (p1, q1) = descent_step(&cp, &cq, &f, d);
                let (p1, q1) = (p1.with_positive_lead(), q1.with_positive_lead());
                let (p2, q2) = descent_step(&p1, &q1, &f, d);
                cur = (p2.scale_by(&d_rat), q2.scale_by(&d_rat));
                k -= 2;
            }
            Ok((k == 0 && ends_at_unit(&cur.0, &cur.1)).then_some(n))
        }
        Err(e) => Err(e),
    }
}

fn ends_at_unit(p: &RatPoly, q: &RatPoly) -> bool {
    q.is_zero() && p.is_constant() && p.coeff(0).abs().is_one()
}

/// Solutions of `P² − f Q² = 1` when `f + 1 = g²` in `Z[x]`: the Rédei pair
/// with `α = f` and `z = g` has norm `(g² − f)^n = 1`.
pub fn solve_square_shift(f: &IntPoly, n: u32) -> Option<PellSolution> {
    let g = poly_sqrt(&(f + &IntPoly::one()))?;
    let pair = redei_recurrence(f, &g, n);
    Some(PellSolution {
        p: pair.rational.to_rat(),
        q: pair.radical.to_rat(),
        index: n,
        integral: true,
        normalizer: BigRational::one(),
    })
}

/// Explicit solutions of `P² − (x² + d) Q² = 1` by two-term recurrences.
///
/// For `d ∈ {1, ±2}`:
/// `A_n = (2x²/d + 1) A_{n−1} + (2x/d)(x² + d) B_{n−1}`,
/// `B_n = (2x/d) A_{n−1} + (2x²/d + 1) B_{n−1}`.
/// For `d = −1`: `A_n = x A_{n−1} + (x² − 1) B_{n−1}`, `B_n = A_{n−1} + x B_{n−1}`.
/// Both start from `(A_0, B_0) = (1, 0)`.
pub fn nathanson(d: i64, n: u32) -> Result<(RatPoly, RatPoly)> {
    let x = RatPoly::x();
    let c = |v: i64| RatPoly::constant(BigRational::from_integer(v.into()));
    let (aa, ab, ba, bb) = match d {
        1 | 2 | -2 => {
            let two_over_d = RatPoly::constant(BigRational::new(2.into(), d.into()));
            let diag = &(&two_over_d * &(&x * &x)) + &c(1);
            let off_a = &(&two_over_d * &x) * &(&(&x * &x) + &c(d));
            let off_b = &two_over_d * &x;
            (diag.clone(), off_a, off_b, diag)
        }
        -1 => (x.clone(), &(&x * &x) - &c(1), c(1), x.clone()),
        _ => return Err(Error::UnsupportedD(d)),
    };
    let mut a = RatPoly::one();
    let mut b = RatPoly::zero();
    for _ in 0..n {
        let next_a = &(&aa * &a) + &(&ab * &b);
        let next_b = &(&ba * &a) + &(&bb * &b);
        a = next_a;
        b = next_b;
    }
    Ok((a, b))
}
