//! Dense univariate polynomials over exact coefficient rings.
//!
//! `Poly<T>` stores coefficients in ascending order of exponent and is kept
//! in canonical form: the highest stored coefficient is nonzero, and the zero
//! polynomial has no coefficients at all. Every constructor and every
//! arithmetic operation re-establishes that form, so structural equality is
//! polynomial equality.
//!
//! Two instantiations are used throughout the crate: [`IntPoly`] over
//! arbitrary-precision integers and [`RatPoly`] over reduced rationals.

mod json;
mod text;

use std::fmt::{Debug, Display};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use json::PolyJson;
pub use text::parse_poly;

/// Coefficient ring for [`Poly`].
pub trait Coeff:
    Clone
    + Eq
    + Debug
    + Display
    + Zero
    + One
    + Signed
    + Neg<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
{
    fn mul_ref(&self, other: &Self) -> Self;

    /// `self / divisor` when the quotient lies in the ring.
    fn div_exact(&self, divisor: &Self) -> Option<Self>;

    fn from_bigint(n: BigInt) -> Self;

    fn to_rational(&self) -> BigRational;
}

impl Coeff for BigInt {
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    fn from_bigint(n: BigInt) -> Self {
        n
    }

    fn to_rational(&self) -> BigRational {
        BigRational::from_integer(self.clone())
    }
}

impl Coeff for BigRational {
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        (!divisor.is_zero()).then(|| self / divisor)
    }

    fn from_bigint(n: BigInt) -> Self {
        BigRational::from_integer(n)
    }

    fn to_rational(&self) -> BigRational {
        self.clone()
    }
}

/// Degree of a polynomial. The zero polynomial has degree `NegInf`, which
/// orders below every finite degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInf,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInf => None,
            Degree::Finite(k) => Some(k),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

pub type IntPoly = Poly<BigInt>;
pub type RatPoly = Poly<BigRational>;

impl<T: Coeff> Poly<T> {
    /// Builds a polynomial from ascending coefficients, trimming high zeros.
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(T::one(), 1)
    }

    pub fn monomial(c: T, exponent: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); exponent + 1];
        coeffs[exponent] = c;
        Poly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| T::from_bigint(c.into())).collect())
    }

    /// Ascending coefficients; empty for the zero polynomial.
    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `x^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInf,
            len => Degree::Finite(len - 1),
        }
    }

    pub fn leading_coeff(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn scale_by(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|a| a.mul_ref(c)).collect())
    }

    /// Flips the sign if needed so the leading coefficient is positive.
    pub fn with_positive_lead(&self) -> Self {
        match self.leading_coeff() {
            Some(lc) if lc.is_negative() => -self,
            _ => self.clone(),
        }
    }

    pub fn pow(&self, exponent: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = exponent;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn eval(&self, at: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(at);
            acc += c;
        }
        acc
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder or a coefficient division is not exact in `T`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let lead = divisor.leading_coeff()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() - 1 < dd {
            return None;
        }
        let mut quot = vec![T::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let q = top.div_exact(lead)?;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                let t = q.mul_ref(c);
                rem[k + i] -= &t;
            }
            quot[k] = q;
        }
        rem.iter().all(Zero::is_zero).then(|| Self::new(quot))
    }

    pub fn to_rat(&self) -> RatPoly {
        Poly::new(self.coeffs.iter().map(Coeff::to_rational).collect())
    }

    /// Multiplies every coefficient by the rational `c`.
    pub fn scale(&self, c: &BigRational) -> RatPoly {
        self.to_rat().scale_by(c)
    }

    fn add_impl(&self, other: &Self, negate_other: bool) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for k in 0..len {
            let mut c = self.coeffs.get(k).cloned().unwrap_or_else(T::zero);
            if let Some(b) = other.coeffs.get(k) {
                if negate_other {
                    c -= b;
                } else {
                    c += b;
                }
            }
            out.push(c);
        }
        Self::new(out)
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &a.mul_ref(b);
            }
        }
        Self::new(out)
    }
}

impl IntPoly {
    /// Gcd of the coefficients, nonnegative; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// True when every coefficient is divisible by `k`.
    pub fn divisible_by(&self, k: &BigInt) -> bool {
        self.coeffs.iter().all(|c| c.is_multiple_of(k))
    }
}

impl RatPoly {
    /// True iff every coefficient has denominator 1.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Positive lcm of all coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }
}

/// Converts an integral rational polynomial to an integer one, failing with
/// [`Error::NotIntegral`] if any coefficient has a nontrivial denominator.
pub fn div_exact_int(p: &RatPoly) -> Result<IntPoly> {
    if !p.is_integral() {
        return Err(Error::NotIntegral);
    }
    Ok(Poly::new(p.coeffs.iter().map(|c| c.to_integer()).collect()))
}

/// `outer(inner(x))` by Horner's rule over the polynomial ring.
pub fn compose<T: Coeff>(outer: &Poly<T>, inner: &Poly<T>) -> Poly<T> {
    let mut acc = Poly::zero();
    for c in outer.coeffs.iter().rev() {
        acc = &(&acc * inner) + &Poly::constant(c.clone());
    }
    acc
}

/// Integer polynomial square root with positive leading coefficient, if one
/// exists in `Z[x]`.
pub fn poly_sqrt(p: &IntPoly) -> Option<IntPoly> {
    let top = match p.degree() {
        Degree::NegInf => return Some(IntPoly::zero()),
        Degree::Finite(k) => k,
    };
    if top % 2 == 1 {
        return None;
    }
    let lead = p.leading_coeff()?;
    if lead.is_negative() {
        return None;
    }
    let s = lead.sqrt();
    if &(&s * &s) != lead {
        return None;
    }
    let half = top / 2;
    let two_s = &s * 2;
    let mut root = vec![BigInt::zero(); half + 1];
    root[half] = s;
    // Coefficient of x^(top - j) in root^2 determines root[half - j].
    for j in 1..=half {
        let target = top - j;
        let mut acc = BigInt::zero();
        for i in (half - j + 1)..=half {
            let l = target - i;
            if l > half - j && l <= half {
                acc += &root[i] * &root[l];
            }
        }
        root[half - j] = (p.coeff(target) - acc).div_exact(&two_s)?;
    }
    let root = IntPoly::new(root);
    (&root * &root == *p).then_some(root)
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl<T: Coeff> $trait<&Poly<T>> for &Poly<T> {
            type Output = Poly<T>;
            fn $method(self, rhs: &Poly<T>) -> Poly<T> {
                let f: fn(&Poly<T>, &Poly<T>) -> Poly<T> = $body;
                f(self, rhs)
            }
        }
        impl<T: Coeff> $trait<Poly<T>> for Poly<T> {
            type Output = Poly<T>;
            fn $method(self, rhs: Poly<T>) -> Poly<T> {
                (&self).$method(&rhs)
            }
        }
        impl<T: Coeff> $trait<&Poly<T>> for Poly<T> {
            type Output = Poly<T>;
            fn $method(self, rhs: &Poly<T>) -> Poly<T> {
                (&self).$method(rhs)
            }
        }
        impl<T: Coeff> $trait<Poly<T>> for &Poly<T> {
            type Output = Poly<T>;
            fn $method(self, rhs: Poly<T>) -> Poly<T> {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.add_impl(b, false));
forward_binop!(Sub, sub, |a, b| a.add_impl(b, true));
forward_binop!(Mul, mul, |a, b| a.mul_impl(b));

impl<T: Coeff> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<T: Coeff> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        -&self
    }
}

impl<T: Coeff> Zero for Poly<T> {
    fn zero() -> Self {
        Poly::zero()
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Coeff> One for Poly<T> {
    fn one() -> Self {
        Poly::one()
    }
}

impl<T: Coeff> From<T> for Poly<T> {
    fn from(c: T) -> Self {
        Poly::constant(c)
    }
}

impl From<&IntPoly> for RatPoly {
    fn from(p: &IntPoly) -> Self {
        p.to_rat()
    }
}
