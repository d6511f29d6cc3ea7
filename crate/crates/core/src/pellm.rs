//! Degree-`m` analogue: generalized Rédei polynomials `A_n^(0..m)`, the
//! coefficients of `(z + α^(1/m))^n` on the basis `1, α^(1/m), ..., α^((m−1)/m)`,
//! and solutions of `det P = 1` for the `R`-twisted circulant `P`.
//!
//! With `z = f` and `α = (−f)^m + r` the determinant of the circulant built
//! from `A_n` is `((−1)^(m−1) r)^n`. Dividing by its `m`-th root, when that
//! root is rational, gives a solution with determinant exactly 1.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::polymat::{build_circulant, PolyMatrix};
use crate::polyring::{IntPoly, RatPoly};
use crate::redei::binomial_row;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenRedeiVec {
    pub m: usize,
    pub index: u32,
    pub z: IntPoly,
    pub alpha: IntPoly,
    /// `A^(0), ..., A^(m−1)`.
    pub coords: Vec<IntPoly>,
}

impl GenRedeiVec {
    /// Determinant of the circulant built from `coords` with `R = α`.
    pub fn circulant_det(&self) -> IntPoly {
        build_circulant(&self.coords, &self.alpha)
            .expect("m >= 2")
            .det()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PellMSolution {
    pub m: usize,
    pub index: u32,
    /// `R = (−f)^m + r`.
    pub twist: IntPoly,
    pub sols: Vec<RatPoly>,
    pub integral: bool,
    /// Circulant determinant before normalization, `((−1)^(m−1) r)^n`.
    pub raw_norm: BigInt,
    pub normalizer: BigRational,
}

fn check_m(m: usize) -> Result<()> {
    if m < 2 {
        return Err(Error::DegreeTooSmall(m));
    }
    Ok(())
}

/// The `m×m` matrix with `z` on the diagonal, 1 on the subdiagonal and `α`
/// in the top-right corner. Multiplying by it advances `A_n` to `A_{n+1}`.
pub fn step_matrix(z: &IntPoly, alpha: &IntPoly, m: usize) -> Result<PolyMatrix<BigInt>> {
    check_m(m)?;
    Ok(PolyMatrix::from_fn(m, |i, j| {
        if i == j {
            z.clone()
        } else if i == j + 1 {
            IntPoly::one()
        } else if i == 0 && j == m - 1 {
            alpha.clone()
        } else {
            IntPoly::zero()
        }
    }))
}

/// First column of `M^n` for the step matrix `M`.
pub fn gen_redei(z: &IntPoly, alpha: &IntPoly, m: usize, n: u32) -> Result<GenRedeiVec> {
    let power = step_matrix(z, alpha, m)?.mat_pow(n);
    Ok(GenRedeiVec {
        m,
        index: n,
        z: z.clone(),
        alpha: alpha.clone(),
        coords: power.column(0),
    })
}

/// Expands `(z + y)^n` binomially and reduces `y^m → α`, collecting terms by
/// the residue of the `y` exponent. Shares no code with [`gen_redei`].
pub fn gen_redei_oracle(z: &IntPoly, alpha: &IntPoly, m: usize, n: u32) -> Result<GenRedeiVec> {
    check_m(m)?;
    let n_us = n as usize;
    let binom = binomial_row(n);
    let z_pows: Vec<IntPoly> = std::iter::successors(Some(IntPoly::one()), |p| Some(p * z))
        .take(n_us + 1)
        .collect();
    let alpha_pows: Vec<IntPoly> = std::iter::successors(Some(IntPoly::one()), |p| Some(p * alpha))
        .take(n_us / m + 1)
        .collect();
    let mut coords = vec![IntPoly::zero(); m];
    for j in 0..=n_us {
        let term = (&z_pows[n_us - j] * &alpha_pows[j / m]).scale_by(&binom[j]);
        coords[j % m] = &coords[j % m] + &term;
    }
    Ok(GenRedeiVec {
        m,
        index: n,
        z: z.clone(),
        alpha: alpha.clone(),
        coords,
    })
}

/// `(−f)^m + r`.
pub fn twist_for(f: &IntPoly, r: i64, m: usize) -> IntPoly {
    &(-f).pow(m as u32) + &IntPoly::constant(r.into())
}

/// `(−1)^(m−1) r`, the determinant of the step matrix when `z = f` and
/// `α = (−f)^m + r`.
pub fn norm_base(r: i64, m: usize) -> i64 {
    if m % 2 == 1 {
        r
    } else {
        -r
    }
}

/// Exact integer `m`-th root of `b`, if any.
fn exact_root(b: &BigInt, m: usize) -> Option<BigInt> {
    let m32 = m as u32;
    if b.is_negative() {
        if m.is_multiple_of(2) {
            return None;
        }
        return exact_root(&-b, m).map(|k| -k);
    }
    let k = b.nth_root(m32);
    (num_traits::pow(k.clone(), m) == *b).then_some(k)
}

/// `b^(n/m)` when it is rational, else `None`.
fn rational_power(b: i64, m: usize, n: u32) -> Option<BigRational> {
    let b = BigInt::from(b);
    if let Some(root) = exact_root(&b, m) {
        return Some(BigRational::from_integer(num_traits::pow(root, n as usize)));
    }
    (n as usize)
        .is_multiple_of(m)
        .then(|| BigRational::from_integer(num_traits::pow(b, n as usize / m)))
}

/// Normalized solution of `det P = 1` with `R = (−f)^m + r`.
pub fn solve_m(f: &IntPoly, r: i64, m: usize, n: u32) -> Result<PellMSolution> {
    check_m(m)?;
    if r == 0 {
        return Err(Error::ZeroR);
    }
    let base = norm_base(r, m);
    let normalizer =
        rational_power(base, m, n).ok_or(Error::IrrationalNormalizer { base, m, n })?;
    let twist = twist_for(f, r, m);
    let vec = gen_redei(f, &twist, m, n)?;
    let inv = normalizer.recip();
    let sols: Vec<RatPoly> = vec.coords.iter().map(|a| a.scale(&inv)).collect();
    let integral = sols.iter().all(RatPoly::is_integral);
    Ok(PellMSolution {
        m,
        index: n,
        twist,
        sols,
        integral,
        raw_norm: num_traits::pow(BigInt::from(base), n as usize),
        normalizer,
    })
}

pub fn is_prime(m: usize) -> bool {
    m >= 2
        && (2..)
            .take_while(|k| k * k <= m)
            .all(|k| !m.is_multiple_of(k))
}

/// Predicted integrality: `r = −1` for every `n`; `r = 1` when `m | n`;
/// `r = ±m` with `m` prime when `m | n`.
pub fn classify_m(r: i64, m: usize, n: u32) -> Result<bool> {
    check_m(m)?;
    if r == 0 {
        return Err(Error::ZeroR);
    }
    let divides = (n as usize).is_multiple_of(m);
    Ok(
        r == -1
            || (r == 1 && divides)
            || (r.unsigned_abs() as usize == m && is_prime(m) && divides),
    )
}

/// `det(build_circulant(sols, R)) == 1`.
pub fn verify_m(sol: &PellMSolution) -> bool {
    if sol.sols.len() != sol.m {
        return false;
    }
    match build_circulant(&sol.sols, &sol.twist.to_rat()) {
        Ok(c) => c.det().is_one(),
        Err(_) => false,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisibilityViolation {
    pub r: i64,
    pub index: u32,
    pub component: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisibilityReport {
    pub m: usize,
    pub n_max: u32,
    /// Number of `(r, n, component)` triples checked.
    pub checked: usize,
    pub first_violation: Option<DivisibilityViolation>,
}

impl DivisibilityReport {
    pub fn success(&self) -> bool {
        self.first_violation.is_none()
    }
}

/// For `r = ±m` checks that `m^⌊n/m⌋` divides every coefficient of every
/// `A_n^(i)` with `n ≤ n_max`.
pub fn divisibility_probe(f: &IntPoly, m: usize, n_max: u32) -> Result<DivisibilityReport> {
    if !is_prime(m) {
        return Err(Error::NotPrime(m));
    }
    let m_big = BigInt::from(m);
    let mut checked = 0;
    for r in [m as i64, -(m as i64)] {
        let step = step_matrix(f, &twist_for(f, r, m), m)?;
        let mut coords = vec![IntPoly::zero(); m];
        coords[0] = IntPoly::one();
        for n in 0..=n_max {
            let modulus = num_traits::pow(m_big.clone(), n as usize / m);
            for (i, a) in coords.iter().enumerate() {
                checked += 1;
                if !a.divisible_by(&modulus) {
                    return Ok(DivisibilityReport {
                        m,
                        n_max,
                        checked,
                        first_violation: Some(DivisibilityViolation {
                            r,
                            index: n,
                            component: i,
                        }),
                    });
                }
            }
            coords = step.apply(&coords)?;
        }
    }
    Ok(DivisibilityReport {
        m,
        n_max,
        checked,
        first_violation: None,
    })
}
