//! The quartic family `f^s = c·r^s` and its critical-value identity.
//!
//! The base cubic is `c(x,y) = y²x - (y+1)³` and the moving line is
//! `r^s(x,y) = s²(2s-3)·y + x - 3s²`. Specializing the parameter to the
//! conjugate values `s = 3 ± 2√3` produces the pair `f^+`, `f^-` over
//! ℚ(√3) whose discriminant curves are Galois conjugates of each other.

use super::mpoly::{Coeff, CoeffField, MPoly};
use super::scalar::QuadExt;
use super::PolyError;
use num_bigint::BigInt;
use num_rational::BigRational;

/// Parameter slot of [`family_builder`]: a formal variable, a rational
/// value, or an element of a quadratic field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FamilyParam {
    Symbolic,
    Rational(BigRational),
    Quadratic(QuadExt),
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `c(x,y) = y²x - (y+1)³` over the given variables and field.
fn base_cubic(vars: &[&str], field: CoeffField) -> Result<MPoly, PolyError> {
    let x = MPoly::var(vars, field, "x")?;
    let y = MPoly::var(vars, field, "y")?;
    let one = MPoly::one(vars, field)?;
    y.pow(2)?.mul(&x)?.sub(&y.add(&one)?.pow(3)?)
}

/// Builds `f^s = c·r^s` with `s` either formal (variables `s, x, y`
/// over ℚ) or a concrete scalar (variables `x, y`).
pub fn family_builder(s: &FamilyParam) -> Result<MPoly, PolyError> {
    match s {
        FamilyParam::Symbolic => {
            let vars = ["s", "x", "y"];
            let field = CoeffField::Rational;
            let sv = MPoly::var(&vars, field, "s")?;
            let x = MPoly::var(&vars, field, "x")?;
            let y = MPoly::var(&vars, field, "y")?;
            // s²(2s-3) = 2s³ - 3s².
            let slope = sv
                .pow(3)?
                .scale(&int(2))
                .sub(&sv.pow(2)?.scale(&int(3)))?;
            let shift = sv.pow(2)?.scale(&int(-3));
            let line = slope.mul(&y)?.add(&x)?.add(&shift)?;
            base_cubic(&vars, field)?.mul(&line)
        }
        FamilyParam::Rational(q) => {
            let slope = q * q * (q * &int(2) - int(3));
            let shift = -(q * q * int(3));
            concrete_family(
                CoeffField::Rational,
                Coeff::from_rational(slope),
                Coeff::from_rational(shift),
            )
        }
        FamilyParam::Quadratic(q) => {
            let two_s_minus_3 = q
                .add(q)?
                .sub(&QuadExt::new(q.d(), int(3), BigRational::from_integer(0.into()))?)?;
            let slope = q.mul(q)?.mul(&two_s_minus_3)?;
            let shift = q.mul(q)?.neg().mul(&QuadExt::new(
                q.d(),
                int(3),
                BigRational::from_integer(0.into()),
            )?)?;
            concrete_family(
                CoeffField::Quadratic { d: q.d() },
                Coeff::new(slope.rational_part().clone(), slope.sqrt_part().clone()),
                Coeff::new(shift.rational_part().clone(), shift.sqrt_part().clone()),
            )
        }
    }
}

fn concrete_family(field: CoeffField, slope: Coeff, shift: Coeff) -> Result<MPoly, PolyError> {
    let vars = ["x", "y"];
    let x = MPoly::var(&vars, field, "x")?;
    let y = MPoly::var(&vars, field, "y")?;
    let line = y
        .scale_coeff(&slope)?
        .add(&x)?
        .add(&MPoly::constant(&vars, field, shift)?)?;
    base_cubic(&vars, field)?.mul(&line)
}

/// Checks the closed form of the discriminant of the family's
/// critical-value quadratic
/// `(256s²+256s+64)t² + (-1647s⁴-1836s³+2430s²+2916s+729)t + 2916s⁶`:
/// compares its `b² - 4ac` with `-2187(s-1)²(s²-6s-3)²(5s+3)²` up to a
/// rational scalar, and returns the outcome together with the
/// leading-coefficient ratio that scalar would have to be.
///
/// The comparison genuinely fails: `b² - 4ac` factors as
/// `-2187(s-1)(5s+3)³(s²-6s-3)²`, so the two sides differ by the
/// non-constant factor `(5s+3)/(s-1)`. Both sides still share the roots
/// `s = 1`, `s = -3/5`, and `s = 3 ± 2√3`; in particular the double
/// factor `(s²-6s-3)²` is present on both, so the two critical values
/// of the quartic really do collide at the conjugate parameter pair.
pub fn family_discriminant_identity() -> Result<(bool, BigRational), PolyError> {
    let vars = ["s"];
    let field = CoeffField::Rational;
    let s = MPoly::var(&vars, field, "s")?;
    let one = MPoly::one(&vars, field)?;

    let a = s
        .pow(2)?
        .scale(&int(256))
        .add(&s.scale(&int(256)))?
        .add(&one.scale(&int(64)))?;
    let b = s
        .pow(4)?
        .scale(&int(-1647))
        .add(&s.pow(3)?.scale(&int(-1836)))?
        .add(&s.pow(2)?.scale(&int(2430)))?
        .add(&s.scale(&int(2916)))?
        .add(&one.scale(&int(729)))?;
    let c = s.pow(6)?.scale(&int(2916));

    let lhs = b.pow(2)?.sub(&a.mul(&c)?.scale(&int(4)))?;

    let s_minus_1 = s.sub(&one)?;
    let quad = s
        .pow(2)?
        .sub(&s.scale(&int(6)))?
        .sub(&one.scale(&int(3)))?;
    let five_s_3 = s.scale(&int(5)).add(&one.scale(&int(3)))?;
    let rhs = s_minus_1
        .pow(2)?
        .mul(&quad.pow(2)?)?
        .mul(&five_s_3.pow(2)?)?
        .scale(&int(-2187));

    let lead = |p: &MPoly| -> Result<BigRational, PolyError> {
        Ok(p.leading_coeff_in("s")?.constant_coeff().a)
    };
    let scalar = lead(&lhs)? / lead(&rhs)?;
    let holds = lhs == rhs.scale(&scalar);
    Ok((holds, scalar))
}
