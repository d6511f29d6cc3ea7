//! JSON form: `{"coeffs": ["...", ...], "den": ["...", ...]}`.
//!
//! Coefficients are decimal strings in ascending order so that arbitrary
//! precision survives any JSON reader. `den` is present only for rational
//! polynomials with a nontrivial denominator.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{div_exact_int, IntPoly, Poly, RatPoly};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub coeffs: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub den: Option<Vec<String>>,
}

impl From<&IntPoly> for PolyJson {
    fn from(p: &IntPoly) -> Self {
        PolyJson {
            coeffs: p.coeffs().iter().map(ToString::to_string).collect(),
            den: None,
        }
    }
}

impl From<&RatPoly> for PolyJson {
    fn from(p: &RatPoly) -> Self {
        let coeffs = p.coeffs().iter().map(|c| c.numer().to_string()).collect();
        let den =
            (!p.is_integral()).then(|| p.coeffs().iter().map(|c| c.denom().to_string()).collect());
        PolyJson { coeffs, den }
    }
}

fn big(s: &str) -> Result<BigInt> {
    s.parse()
        .map_err(|_| Error::Json(format!("not a decimal integer: {s:?}")))
}

impl PolyJson {
    pub fn to_rat_poly(&self) -> Result<RatPoly> {
        let coeffs = match &self.den {
            None => self
                .coeffs
                .iter()
                .map(|c| big(c).map(BigRational::from_integer))
                .collect::<Result<Vec<_>>>()?,
            Some(den) => {
                if den.len() != self.coeffs.len() {
                    return Err(Error::Json(format!(
                        "{} coefficients but {} denominators",
                        self.coeffs.len(),
                        den.len()
                    )));
                }
                self.coeffs
                    .iter()
                    .zip(den)
                    .map(|(n, d)| {
                        let d = big(d)?;
                        if d == BigInt::from(0) {
                            return Err(Error::Json("zero denominator".into()));
                        }
                        Ok(BigRational::new(big(n)?, d))
                    })
                    .collect::<Result<Vec<_>>>()?
            }
        };
        Ok(Poly::new(coeffs))
    }

    pub fn to_int_poly(&self) -> Result<IntPoly> {
        match &self.den {
            None => Ok(Poly::new(
                self.coeffs.iter().map(|c| big(c)).collect::<Result<_>>()?,
            )),
            Some(_) => div_exact_int(&self.to_rat_poly()?),
        }
    }
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson::from(self).serialize(s)
    }
}

impl Serialize for RatPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        PolyJson::deserialize(d)?
            .to_int_poly()
            .map_err(serde::de::Error::custom)
    }
}

impl<'de> Deserialize<'de> for RatPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        PolyJson::deserialize(d)?
            .to_rat_poly()
            .map_err(serde::de::Error::custom)
    }
}
