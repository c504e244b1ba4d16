//! Scalars of a quadratic number field ℚ(√d).

use super::PolyError;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

pub(crate) fn is_squarefree(n: i64) -> bool {
    let n = n.abs();
    let mut p = 2i64;
    while p * p <= n {
        if n % (p * p) == 0 {
            return false;
        }
        p += 1;
    }
    true
}

pub(crate) fn check_discriminant(d: i64) -> Result<(), PolyError> {
    if d == 0 || d == 1 || !is_squarefree(d) {
        return Err(PolyError::BadFieldDiscriminant(d));
    }
    Ok(())
}

/// An element `a + b√d` of the quadratic field ℚ(√d), with `d` a
/// squarefree integer other than 0 and 1 (negative `d` gives an
/// imaginary quadratic field). Arithmetic is exact; mixing elements of
/// different fields is an error.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuadExt {
    d: i64,
    a: BigRational,
    b: BigRational,
}

impl QuadExt {
    pub fn new(d: i64, a: BigRational, b: BigRational) -> Result<Self, PolyError> {
        check_discriminant(d)?;
        Ok(QuadExt { d, a, b })
    }

    /// Convenience constructor from integer parts.
    pub fn from_ints(d: i64, a: i64, b: i64) -> Result<Self, PolyError> {
        QuadExt::new(
            d,
            BigRational::from_integer(BigInt::from(a)),
            BigRational::from_integer(BigInt::from(b)),
        )
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn sqrt_part(&self) -> &BigRational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// The Galois conjugate `a - b√d`.
    pub fn conjugate(&self) -> QuadExt {
        QuadExt {
            d: self.d,
            a: self.a.clone(),
            b: -self.b.clone(),
        }
    }

    /// The field norm `a² - d·b²`, the product with the conjugate.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - BigRational::from_integer(BigInt::from(self.d)) * &self.b * &self.b
    }

    fn same_field(&self, rhs: &QuadExt) -> Result<(), PolyError> {
        if self.d != rhs.d {
            return Err(PolyError::DifferentFields(self.d, rhs.d));
        }
        Ok(())
    }

    pub fn add(&self, rhs: &QuadExt) -> Result<QuadExt, PolyError> {
        self.same_field(rhs)?;
        Ok(QuadExt {
            d: self.d,
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        })
    }

    pub fn sub(&self, rhs: &QuadExt) -> Result<QuadExt, PolyError> {
        self.same_field(rhs)?;
        Ok(QuadExt {
            d: self.d,
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        })
    }

    pub fn neg(&self) -> QuadExt {
        QuadExt {
            d: self.d,
            a: -self.a.clone(),
            b: -self.b.clone(),
        }
    }

    pub fn mul(&self, rhs: &QuadExt) -> Result<QuadExt, PolyError> {
        self.same_field(rhs)?;
        let d = BigRational::from_integer(BigInt::from(self.d));
        Ok(QuadExt {
            d: self.d,
            a: &self.a * &rhs.a + &d * &self.b * &rhs.b,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
        })
    }

    /// Multiplicative inverse via the norm: `1/(a+b√d) = (a-b√d)/N`.
    pub fn recip(&self) -> Result<QuadExt, PolyError> {
        if self.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let n = self.norm();
        let conj = self.conjugate();
        Ok(QuadExt {
            d: self.d,
            a: conj.a / n.clone(),
            b: conj.b / n,
        })
    }

    pub fn div(&self, rhs: &QuadExt) -> Result<QuadExt, PolyError> {
        self.mul(&rhs.recip()?)
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        if !self.a.is_zero() {
            write!(f, "{}", self.a)?;
            first = false;
        }
        if !self.b.is_zero() {
            if first {
                if self.b.is_negative() {
                    write!(f, "-")?;
                }
            } else if self.b.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = self.b.abs();
            if abs.is_one() {
                write!(f, "sqrt({})", self.d)?;
            } else {
                write!(f, "{abs}*sqrt({})", self.d)?;
            }
        }
        Ok(())
    }
}

/// Parses `"p/q"` or `"p"` into an exact rational.
pub(crate) fn parse_rational(s: &str) -> Result<BigRational, PolyError> {
    let bad = || PolyError::BadRational(s.to_string());
    let (numer, denom) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let numer: BigInt = numer.trim().parse().map_err(|_| bad())?;
    let denom: BigInt = match denom {
        Some(d) => d.trim().parse().map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(numer, denom))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(d: i64, a: i64, b: i64) -> QuadExt {
        QuadExt::from_ints(d, a, b).unwrap()
    }

    #[test]
    fn discriminants_are_validated() {
        assert!(QuadExt::from_ints(0, 1, 1).is_err());
        assert!(QuadExt::from_ints(1, 1, 1).is_err());
        assert!(QuadExt::from_ints(12, 1, 1).is_err());
        assert!(QuadExt::from_ints(-4, 1, 1).is_err());
        assert!(QuadExt::from_ints(-1, 1, 1).is_ok());
        assert!(QuadExt::from_ints(3, 1, 1).is_ok());
        assert!(QuadExt::from_ints(-6, 1, 1).is_ok());
    }

    #[test]
    fn field_arithmetic() {
        let x = q(3, 3, 2);
        let y = q(3, 1, -1);
        assert_eq!(x.add(&y).unwrap(), q(3, 4, 1));
        assert_eq!(x.sub(&y).unwrap(), q(3, 2, 3));
        // (3 + 2√3)(1 - √3) = 3 - 3√3 + 2√3 - 6 = -3 - √3
        assert_eq!(x.mul(&y).unwrap(), q(3, -3, -1));
        assert_eq!(x.mul(&x.recip().unwrap()).unwrap(), q(3, 1, 0));
        assert_eq!(x.div(&x).unwrap(), q(3, 1, 0));
        assert!(q(3, 0, 0).recip().is_err());
        assert_eq!(x.mul(&x.conjugate()).unwrap(), q(3, -3, 0));
        assert_eq!(x.norm(), BigRational::from_integer(BigInt::from(-3)));
    }

    #[test]
    fn mixing_fields_is_rejected() {
        let x = q(3, 1, 1);
        let y = q(5, 1, 1);
        assert_eq!(x.add(&y), Err(PolyError::DifferentFields(3, 5)));
        assert_eq!(x.mul(&y), Err(PolyError::DifferentFields(3, 5)));
    }

    #[test]
    fn conjugation_is_an_involution_and_automorphism() {
        let x = q(3, 3, 2);
        let y = q(3, -1, 5);
        assert_eq!(x.conjugate().conjugate(), x);
        assert_eq!(
            x.mul(&y).unwrap().conjugate(),
            x.conjugate().mul(&y.conjugate()).unwrap()
        );
        assert_eq!(q(3, 3, 2).conjugate(), q(3, 3, -2));
    }

    #[test]
    fn display_formats() {
        assert_eq!(q(3, 3, 2).to_string(), "3 + 2*sqrt(3)");
        assert_eq!(q(3, 3, -2).to_string(), "3 - 2*sqrt(3)");
        assert_eq!(q(3, 0, -1).to_string(), "-sqrt(3)");
        assert_eq!(q(3, 0, 0).to_string(), "0");
        assert_eq!(
            QuadExt::new(
                5,
                BigRational::new(BigInt::from(1), BigInt::from(2)),
                BigRational::zero()
            )
            .unwrap()
            .to_string(),
            "1/2"
        );
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("3/4").unwrap(), BigRational::new(3.into(), 4.into()));
        assert_eq!(parse_rational("-7").unwrap(), BigRational::from_integer((-7).into()));
        assert_eq!(parse_rational("6/4").unwrap(), BigRational::new(3.into(), 2.into()));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("").is_err());
    }
}
