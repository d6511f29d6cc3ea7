//! Square matrices with polynomial entries.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::polyring::{Coeff, Poly, RatPoly};

#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix<T> {
    dim: usize,
    entries: Vec<Poly<T>>,
}

impl<T: Coeff> std::fmt::Debug for PolyMatrix<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list()
            .entries(self.entries.chunks(self.dim))
            .finish()
    }
}

impl<T: Coeff> PolyMatrix<T> {
    /// Builds a matrix from rows. All rows must have length `rows.len() >= 1`.
    pub fn from_rows(rows: Vec<Vec<Poly<T>>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: 0,
            });
        }
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(PolyMatrix { dim, entries })
    }

    pub fn from_fn(dim: usize, mut entry: impl FnMut(usize, usize) -> Poly<T>) -> Self {
        assert!(dim >= 1, "matrix dimension must be positive");
        let entries = (0..dim * dim).map(|k| entry(k / dim, k % dim)).collect();
        PolyMatrix { dim, entries }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |i, j| if i == j { Poly::one() } else { Poly::zero() })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &Poly<T> {
        &self.entries[row * self.dim + col]
    }

    pub fn column(&self, col: usize) -> Vec<Poly<T>> {
        (0..self.dim).map(|i| self.get(i, col).clone()).collect()
    }

    pub fn rows(&self) -> Vec<Vec<Poly<T>>> {
        self.entries.chunks(self.dim).map(<[_]>::to_vec).collect()
    }

    pub fn map<U: Coeff>(&self, f: impl Fn(&Poly<T>) -> Poly<U>) -> PolyMatrix<U> {
        PolyMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn mat_mul(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        let n = self.dim;
        Ok(Self::from_fn(n, |i, j| {
            (0..n).fold(Poly::zero(), |acc, k| {
                acc + self.get(i, k) * other.get(k, j)
            })
        }))
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Poly<T>]) -> Result<Vec<Poly<T>>> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            });
        }
        Ok((0..self.dim)
            .map(|i| {
                v.iter()
                    .enumerate()
                    .fold(Poly::zero(), |acc, (k, x)| acc + self.get(i, k) * x)
            })
            .collect())
    }

    /// `self^n` by binary exponentiation; `self^0` is the identity.
    pub fn mat_pow(&self, n: u32) -> Self {
        let mut result = Self::identity(self.dim);
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mat_mul(&base).expect("same dimension");
            }
            e >>= 1;
            if e > 0 {
                base = base.mat_mul(&base).expect("same dimension");
            }
        }
        result
    }

    /// Exact determinant. Cofactor expansion for `dim <= 3`, fraction-free
    /// Bareiss elimination above that.
    pub fn det(&self) -> Poly<T> {
        if self.dim <= 3 {
            self.det_cofactor()
        } else {
            self.det_bareiss()
        }
    }

    /// Laplace expansion along the first row.
    pub fn det_cofactor(&self) -> Poly<T> {
        let idx: Vec<usize> = (0..self.dim).collect();
        self.minor_det(&idx, 0)
    }

    fn minor_det(&self, cols: &[usize], row: usize) -> Poly<T> {
        if cols.len() == 1 {
            return self.get(row, cols[0]).clone();
        }
        let mut acc = Poly::zero();
        for (k, &c) in cols.iter().enumerate() {
            let entry = self.get(row, c);
            if entry.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = entry * self.minor_det(&rest, row + 1);
            acc = if k % 2 == 0 { acc + term } else { acc - term };
        }
        acc
    }

    /// Fraction-free Gaussian elimination. Every division is exact in the
    /// polynomial ring, so the routine never leaves `Poly<T>`.
    pub fn det_bareiss(&self) -> Poly<T> {
        let n = self.dim;
        let mut a = self.rows();
        let mut prev = Poly::<T>::one();
        let mut negate = false;
        for k in 0..n.saturating_sub(1) {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        negate = !negate;
                    }
                    None => return Poly::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
                }
                a[i][k] = Poly::zero();
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        if negate {
            -d
        } else {
            d
        }
    }

    /// Coefficients of `det(t I - self)` as polynomials in `x`, ascending in
    /// `t`. The determinant is evaluated at `t = 0..=dim` and interpolated.
    pub fn char_poly(&self) -> Vec<RatPoly> {
        let n = self.dim;
        let nodes: Vec<i64> = (0..=n as i64).collect();
        let values: Vec<RatPoly> = nodes
            .iter()
            .map(|&t| {
                let t = Poly::constant(T::from_bigint(BigInt::from(t)));
                let shifted = Self::from_fn(n, |i, j| {
                    let e = -self.get(i, j);
                    if i == j {
                        e + &t
                    } else {
                        e
                    }
                });
                shifted.det().to_rat()
            })
            .collect();

        let mut out = vec![RatPoly::zero(); n + 1];
        for (i, &ti) in nodes.iter().enumerate() {
            // Lagrange basis polynomial in t, ascending coefficients.
            let mut basis = vec![BigRational::one()];
            let mut denom = BigRational::one();
            for (j, &tj) in nodes.iter().enumerate() {
                if i == j {
                    continue;
                }
                let mut next = vec![BigRational::zero(); basis.len() + 1];
                for (k, b) in basis.iter().enumerate() {
                    next[k + 1] += b;
                    next[k] -= b * BigRational::from_integer(tj.into());
                }
                basis = next;
                denom *= BigRational::from_integer((ti - tj).into());
            }
            for (k, b) in basis.iter().enumerate() {
                out[k] = &out[k] + &values[i].scale_by(&(b / &denom));
            }
        }
        out
    }
}

/// The `R`-twisted circulant built from `sols = (P_1, ..., P_m)`:
/// entry `(i, j)` is `sols[(i - j) mod m]`, multiplied by `r` above the
/// diagonal. For `m = 2` this is `[[P, R Q], [Q, P]]`.
pub fn build_circulant<T: Coeff>(sols: &[Poly<T>], r: &Poly<T>) -> Result<PolyMatrix<T>> {
    let m = sols.len();
    if m < 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: m,
        });
    }
    Ok(PolyMatrix::from_fn(m, |i, j| {
        let p = &sols[(i + m - j) % m];
        if j > i {
            r * p
        } else {
            p.clone()
        }
    }))
}
