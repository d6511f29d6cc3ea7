//! Rédei polynomials `N_n(α, z)` and `D_n(α, z)`, the coefficients in
//! `(z + √α)^n = N_n + D_n √α`.
//!
//! Three independent constructions are provided: the two-term linear
//! recurrence (the production path), powers of the 2×2 matrix
//! `[[z, α], [1, z]]`, and the closed binomial sums. Each returns a
//! [`RedeiPair`] whose norm `N² − α D² = (z² − α)^n` can be checked with
//! [`RedeiPair::norm_identity_holds`].
//!
//! Coefficients grow exponentially in `n`; no cap is imposed.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::polymat::PolyMatrix;
use crate::polyring::{IntPoly, RatPoly};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RedeiPair {
    pub index: u32,
    pub alpha: IntPoly,
    pub z: IntPoly,
    /// `N_n`, the rational part.
    pub rational: IntPoly,
    /// `D_n`, the coefficient of `√α`.
    pub radical: IntPoly,
}

impl RedeiPair {
    /// `N² − α D² == (z² − α)^n`, checked exactly.
    pub fn norm_identity_holds(&self) -> bool {
        let lhs =
            &(&self.rational * &self.rational) - &(&self.alpha * &(&self.radical * &self.radical));
        lhs == norm_base(&self.alpha, &self.z).pow(self.index)
    }
}

/// `z² − α`, the constant term of the characteristic polynomial
/// `t² − 2zt + (z² − α)`.
pub fn norm_base(alpha: &IntPoly, z: &IntPoly) -> IntPoly {
    &(z * z) - alpha
}

/// The 2×2 matrix whose `n`-th power has first column `(N_n, D_n)`.
pub fn redei_step_matrix(alpha: &IntPoly, z: &IntPoly) -> PolyMatrix<BigInt> {
    PolyMatrix::from_rows(vec![
        vec![z.clone(), alpha.clone()],
        vec![IntPoly::one(), z.clone()],
    ])
    .expect("2x2")
}

/// Iterator over `(N_k, D_k)` for `k = 0, 1, 2, ...` driven by the
/// recurrence `X_k = 2z X_{k-1} − (z² − α) X_{k-2}`.
#[derive(Debug, Clone)]
pub struct RedeiSequence {
    two_z: IntPoly,
    base: IntPoly,
    prev: (IntPoly, IntPoly),
    cur: (IntPoly, IntPoly),
}

impl RedeiSequence {
    pub fn new(alpha: &IntPoly, z: &IntPoly) -> Self {
        RedeiSequence {
            two_z: z.scale_by(&BigInt::from(2)),
            base: norm_base(alpha, z),
            prev: (IntPoly::one(), IntPoly::zero()),
            cur: (z.clone(), IntPoly::one()),
        }
    }
}

impl Iterator for RedeiSequence {
    type Item = (IntPoly, IntPoly);

    fn next(&mut self) -> Option<Self::Item> {
        let next = (
            &(&self.two_z * &self.cur.0) - &(&self.base * &self.prev.0),
            &(&self.two_z * &self.cur.1) - &(&self.base * &self.prev.1),
        );
        let out = std::mem::replace(&mut self.prev, std::mem::replace(&mut self.cur, next));
        Some(out)
    }
}

pub fn redei_recurrence(alpha: &IntPoly, z: &IntPoly, n: u32) -> RedeiPair {
    let (rational, radical) = RedeiSequence::new(alpha, z)
        .nth(n as usize)
        .expect("infinite sequence");
    RedeiPair {
        index: n,
        alpha: alpha.clone(),
        z: z.clone(),
        rational,
        radical,
    }
}

pub fn redei_matrix(alpha: &IntPoly, z: &IntPoly, n: u32) -> RedeiPair {
    let power = redei_step_matrix(alpha, z).mat_pow(n);
    RedeiPair {
        index: n,
        alpha: alpha.clone(),
        z: z.clone(),
        rational: power.get(0, 0).clone(),
        radical: power.get(1, 0).clone(),
    }
}

/// `N_n = Σ C(n, 2k) α^k z^(n−2k)`, `D_n = Σ C(n, 2k+1) α^k z^(n−2k−1)`.
pub fn redei_closed_form(alpha: &IntPoly, z: &IntPoly, n: u32) -> RedeiPair {
    let n_us = n as usize;
    let z_pows: Vec<IntPoly> = std::iter::successors(Some(IntPoly::one()), |p| Some(p * z))
        .take(n_us + 1)
        .collect();
    let binom = binomial_row(n);
    let mut rational = IntPoly::zero();
    let mut radical = IntPoly::zero();
    let mut alpha_pow = IntPoly::one();
    for k in 0..=n_us / 2 {
        rational = &rational + &(&alpha_pow * &z_pows[n_us - 2 * k]).scale_by(&binom[2 * k]);
        if 2 * k < n_us {
            radical =
                &radical + &(&alpha_pow * &z_pows[n_us - 2 * k - 1]).scale_by(&binom[2 * k + 1]);
        }
        alpha_pow = &alpha_pow * alpha;
    }
    RedeiPair {
        index: n,
        alpha: alpha.clone(),
        z: z.clone(),
        rational,
        radical,
    }
}

/// `C(n, 0), ..., C(n, n)`.
pub(crate) fn binomial_row(n: u32) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for k in 0..n {
        let next = &row[k as usize] * BigInt::from(n - k) / BigInt::from(k + 1);
        row.push(next);
    }
    row
}

/// Applies the inverse of the step matrix, `(N_n, D_n) ↦ (N_{n−1}, D_{n−1})`:
///
/// ```text
/// N_{n−1} = (z N_n − α D_n) / (z² − α)
/// D_{n−1} = (z D_n − N_n) / (z² − α)
/// ```
///
/// The quotients are computed over `Q[x]` and must be exact.
pub fn backward_step(
    rational: &RatPoly,
    radical: &RatPoly,
    alpha: &IntPoly,
    z: &IntPoly,
) -> Result<(RatPoly, RatPoly)> {
    let base = norm_base(alpha, z).to_rat();
    if base.is_zero() {
        return Err(Error::PreconditionViolated(
            "step matrix is singular (z^2 = alpha)".into(),
        ));
    }
    let (alpha, z) = (alpha.to_rat(), z.to_rat());
    let num_n = &(&z * rational) - &(&alpha * radical);
    let num_d = &(&z * radical) - rational;
    let inexact = || Error::PreconditionViolated("backward step is not exact".into());
    Ok((
        num_n.div_exact(&base).ok_or_else(inexact)?,
        num_d.div_exact(&base).ok_or_else(inexact)?,
    ))
}
