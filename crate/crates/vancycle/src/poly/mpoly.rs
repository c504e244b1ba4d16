//! Sparse multivariate polynomials with exact coefficients.

use super::scalar::{check_discriminant, parse_rational};
use super::PolyError;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// Coefficient `a + b√d`, where `d` is carried by the polynomial's
/// field tag. Rational-field polynomials keep `b = 0` throughout.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Coeff {
    pub a: BigRational,
    pub b: BigRational,
}

impl Coeff {
    pub fn zero() -> Self {
        Coeff {
            a: BigRational::zero(),
            b: BigRational::zero(),
        }
    }

    pub fn one() -> Self {
        Coeff {
            a: BigRational::one(),
            b: BigRational::zero(),
        }
    }

    pub fn from_rational(a: BigRational) -> Self {
        Coeff {
            a,
            b: BigRational::zero(),
        }
    }

    pub fn from_int(a: i64) -> Self {
        Coeff::from_rational(BigRational::from_integer(BigInt::from(a)))
    }

    pub fn new(a: BigRational, b: BigRational) -> Self {
        Coeff { a, b }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    pub fn conjugate(&self) -> Coeff {
        Coeff {
            a: self.a.clone(),
            b: -self.b.clone(),
        }
    }

    pub(crate) fn add(&self, rhs: &Coeff) -> Coeff {
        Coeff {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }

    pub(crate) fn neg(&self) -> Coeff {
        Coeff {
            a: -self.a.clone(),
            b: -self.b.clone(),
        }
    }

    pub(crate) fn mul(&self, rhs: &Coeff, d: i64) -> Coeff {
        let d = BigRational::from_integer(BigInt::from(d));
        Coeff {
            a: &self.a * &rhs.a + d * &self.b * &rhs.b,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
        }
    }

    pub(crate) fn div(&self, rhs: &Coeff, d: i64) -> Result<Coeff, PolyError> {
        if rhs.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let dr = BigRational::from_integer(BigInt::from(d));
        let norm = &rhs.a * &rhs.a - dr * &rhs.b * &rhs.b;
        if norm.is_zero() {
            // Impossible for squarefree d, kept as a guard.
            return Err(PolyError::DivisionByZero);
        }
        let prod = self.mul(&rhs.conjugate(), d);
        Ok(Coeff {
            a: prod.a / norm.clone(),
            b: prod.b / norm,
        })
    }

    fn scale(&self, r: &BigRational) -> Coeff {
        Coeff {
            a: &self.a * r,
            b: &self.b * r,
        }
    }
}

/// Coefficient domain of a polynomial: the rationals, or a quadratic
/// extension ℚ(√d).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CoeffField {
    Rational,
    Quadratic { d: i64 },
}

impl CoeffField {
    pub fn validate(self) -> Result<(), PolyError> {
        match self {
            CoeffField::Rational => Ok(()),
            CoeffField::Quadratic { d } => check_discriminant(d),
        }
    }

    /// The d to use in coefficient arithmetic; 0 for the rationals,
    /// where all √d parts are zero anyway.
    pub fn d_value(self) -> i64 {
        match self {
            CoeffField::Rational => 0,
            CoeffField::Quadratic { d } => d,
        }
    }

    fn check_coeff(self, c: &Coeff) -> Result<(), PolyError> {
        if self == CoeffField::Rational && !c.b.is_zero() {
            return Err(PolyError::NotRational);
        }
        Ok(())
    }
}

/// Exponent vector aligned with a polynomial's variable list, ordered
/// graded-lexicographically (total degree first, then lexicographic).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A sparse multivariate polynomial over ℚ or ℚ(√d) with an explicit,
/// ordered variable list. All operations are exact; binary operations
/// require identical variable lists and fields.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "MPolyWire", into = "MPolyWire")]
pub struct MPoly {
    vars: Vec<String>,
    field: CoeffField,
    terms: BTreeMap<Monomial, Coeff>,
}

fn check_vars(vars: &[&str]) -> Result<Vec<String>, PolyError> {
    for (i, v) in vars.iter().enumerate() {
        if vars[..i].contains(v) {
            return Err(PolyError::DuplicateVariable(v.to_string()));
        }
    }
    Ok(vars.iter().map(|v| v.to_string()).collect())
}

impl MPoly {
    pub fn zero(vars: &[&str], field: CoeffField) -> Result<Self, PolyError> {
        field.validate()?;
        Ok(MPoly {
            vars: check_vars(vars)?,
            field,
            terms: BTreeMap::new(),
        })
    }

    pub fn constant(vars: &[&str], field: CoeffField, c: Coeff) -> Result<Self, PolyError> {
        let mut p = MPoly::zero(vars, field)?;
        field.check_coeff(&c)?;
        p.add_term(vec![0; p.vars.len()], c);
        Ok(p)
    }

    pub fn one(vars: &[&str], field: CoeffField) -> Result<Self, PolyError> {
        MPoly::constant(vars, field, Coeff::one())
    }

    /// The variable `name` as a polynomial.
    pub fn var(vars: &[&str], field: CoeffField, name: &str) -> Result<Self, PolyError> {
        let mut p = MPoly::zero(vars, field)?;
        let idx = p.var_index(name)?;
        let mut exps = vec![0; p.vars.len()];
        exps[idx] = 1;
        p.add_term(exps, Coeff::one());
        Ok(p)
    }

    pub fn from_terms<I>(vars: &[&str], field: CoeffField, terms: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (Vec<u32>, Coeff)>,
    {
        let mut p = MPoly::zero(vars, field)?;
        for (exps, c) in terms {
            if exps.len() != p.vars.len() {
                return Err(PolyError::MonomialLength(exps.len(), p.vars.len()));
            }
            field.check_coeff(&c)?;
            p.add_term(exps, c);
        }
        Ok(p)
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn field(&self) -> CoeffField {
        self.field
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.total_degree() == 0)
    }

    /// The coefficient of the constant monomial (zero if absent).
    pub fn constant_coeff(&self) -> Coeff {
        self.terms
            .get(&Monomial(vec![0; self.vars.len()]))
            .cloned()
            .unwrap_or_else(Coeff::zero)
    }

    /// The graded-lex largest term.
    pub fn leading_term(&self) -> Option<(&Monomial, &Coeff)> {
        self.terms.iter().next_back()
    }

    fn var_index(&self, name: &str) -> Result<usize, PolyError> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))
    }

    fn add_term(&mut self, exps: Vec<u32>, c: Coeff) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(Monomial(exps)) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                let sum = slot.get().add(&c);
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    fn compatible(&self, rhs: &MPoly) -> Result<(), PolyError> {
        if self.vars != rhs.vars {
            return Err(PolyError::VariableMismatch {
                expected: self.vars.clone(),
                found: rhs.vars.clone(),
            });
        }
        if self.field != rhs.field {
            return Err(PolyError::FieldMismatch);
        }
        Ok(())
    }

    pub fn add(&self, rhs: &MPoly) -> Result<MPoly, PolyError> {
        self.compatible(rhs)?;
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.0.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &MPoly) -> Result<MPoly, PolyError> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> MPoly {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = c.neg();
        }
        out
    }

    pub fn mul(&self, rhs: &MPoly) -> Result<MPoly, PolyError> {
        self.compatible(rhs)?;
        let d = self.field.d_value();
        let mut out = MPoly {
            vars: self.vars.clone(),
            field: self.field,
            terms: BTreeMap::new(),
        };
        for (lm, lc) in &self.terms {
            for (rm, rc) in &rhs.terms {
                let exps = lm.0.iter().zip(&rm.0).map(|(x, y)| x + y).collect();
                out.add_term(exps, lc.mul(rc, d));
            }
        }
        Ok(out)
    }

    /// Multiplication by a rational scalar (valid in every field).
    pub fn scale(&self, r: &BigRational) -> MPoly {
        let mut out = MPoly {
            vars: self.vars.clone(),
            field: self.field,
            terms: BTreeMap::new(),
        };
        if r.is_zero() {
            return out;
        }
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), c.scale(r));
        }
        out
    }

    /// Multiplication by a field constant.
    pub fn scale_coeff(&self, c: &Coeff) -> Result<MPoly, PolyError> {
        self.field.check_coeff(c)?;
        let d = self.field.d_value();
        let mut out = MPoly {
            vars: self.vars.clone(),
            field: self.field,
            terms: BTreeMap::new(),
        };
        if c.is_zero() {
            return Ok(out);
        }
        for (m, tc) in &self.terms {
            out.terms.insert(m.clone(), tc.mul(c, d));
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Result<MPoly, PolyError> {
        let mut out = MPoly::one(
            &self.vars.iter().map(String::as_str).collect::<Vec<_>>(),
            self.field,
        )?;
        for _ in 0..e {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// Degree in one variable; -1 for the zero polynomial.
    pub fn degree(&self, var: &str) -> Result<i64, PolyError> {
        let idx = self.var_index(var)?;
        Ok(self
            .terms
            .keys()
            .map(|m| i64::from(m.0[idx]))
            .max()
            .unwrap_or(-1))
    }

    /// Total degree; -1 for the zero polynomial.
    pub fn total_degree(&self) -> i64 {
        self.terms
            .keys()
            .map(|m| i64::from(m.total_degree()))
            .max()
            .unwrap_or(-1)
    }

    /// The coefficient of `var^power` as a polynomial in the same
    /// variables, with the exponent of `var` set to zero.
    pub fn coeff_of(&self, var: &str, power: u32) -> Result<MPoly, PolyError> {
        let idx = self.var_index(var)?;
        let mut out = MPoly {
            vars: self.vars.clone(),
            field: self.field,
            terms: BTreeMap::new(),
        };
        for (m, c) in &self.terms {
            if m.0[idx] == power {
                let mut exps = m.0.clone();
                exps[idx] = 0;
                out.terms.insert(Monomial(exps), c.clone());
            }
        }
        Ok(out)
    }

    /// The coefficient of the highest power of `var` (zero polynomial
    /// for zero input).
    pub fn leading_coeff_in(&self, var: &str) -> Result<MPoly, PolyError> {
        let deg = self.degree(var)?;
        if deg < 0 {
            return self.coeff_of(var, 0);
        }
        self.coeff_of(var, deg as u32)
    }

    pub fn partial_derivative(&self, var: &str) -> Result<MPoly, PolyError> {
        let idx = self.var_index(var)?;
        let mut out = MPoly {
            vars: self.vars.clone(),
            field: self.field,
            terms: BTreeMap::new(),
        };
        for (m, c) in &self.terms {
            let e = m.0[idx];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[idx] = e - 1;
            out.add_term(exps, c.scale(&BigRational::from_integer(BigInt::from(e))));
        }
        Ok(out)
    }

    /// Substitutes a polynomial (over the same variables and field) for
    /// a variable. Handles coordinate changes like `x ↦ x + λy`.
    pub fn substitute(&self, var: &str, replacement: &MPoly) -> Result<MPoly, PolyError> {
        self.compatible(replacement)?;
        let idx = self.var_index(var)?;
        let vars: Vec<&str> = self.vars.iter().map(String::as_str).collect();
        let max_e = self.terms.keys().map(|m| m.0[idx]).max().unwrap_or(0);
        let mut powers = Vec::with_capacity(max_e as usize + 1);
        powers.push(MPoly::one(&vars, self.field)?);
        for e in 1..=max_e {
            powers.push(powers[e as usize - 1].mul(replacement)?);
        }
        let mut out = MPoly::zero(&vars, self.field)?;
        for (m, c) in &self.terms {
            let e = m.0[idx];
            let mut exps = m.0.clone();
            exps[idx] = 0;
            let base = MPoly::from_terms(&vars, self.field, [(exps, c.clone())])?;
            out = out.add(&base.mul(&powers[e as usize])?)?;
        }
        Ok(out)
    }

    /// Applies the Galois conjugation b ↦ -b to every coefficient. On a
    /// rational-field polynomial this is the identity.
    pub fn galois_conjugate(&self) -> MPoly {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = c.conjugate();
        }
        out
    }

    /// Exact division: returns `q` with `self = q·divisor`, or an error
    /// if no such polynomial exists.
    pub fn exact_div(&self, divisor: &MPoly) -> Result<MPoly, PolyError> {
        self.compatible(divisor)?;
        if divisor.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let d = self.field.d_value();
        let vars: Vec<&str> = self.vars.iter().map(String::as_str).collect();
        let (dm, dc) = divisor.leading_term().map(|(m, c)| (m.0.clone(), c.clone())).unwrap();
        let mut q = MPoly::zero(&vars, self.field)?;
        let mut r = self.clone();
        while let Some((rm, rc)) = r.leading_term() {
            // Exactness forces the leading term of the divisor to divide
            // the leading term of every intermediate remainder.
            let mut exps = Vec::with_capacity(rm.0.len());
            for (x, y) in rm.0.iter().zip(&dm) {
                if x < y {
                    return Err(PolyError::NotDivisible);
                }
                exps.push(x - y);
            }
            let c = rc.div(&dc, d)?;
            let t = MPoly::from_terms(&vars, self.field, [(exps, c)])?;
            q = q.add(&t)?;
            r = r.sub(&t.mul(divisor)?)?;
        }
        Ok(q)
    }

    /// Re-expresses the polynomial over a larger (or reordered) variable
    /// list; every current variable must appear in the new list.
    pub fn embed(&self, new_vars: &[&str]) -> Result<MPoly, PolyError> {
        let vars = check_vars(new_vars)?;
        let mut map = Vec::with_capacity(self.vars.len());
        for v in &self.vars {
            let idx = vars
                .iter()
                .position(|n| n == v)
                .ok_or_else(|| PolyError::UnknownVariable(v.clone()))?;
            map.push(idx);
        }
        let mut out = MPoly {
            vars,
            field: self.field,
            terms: BTreeMap::new(),
        };
        for (m, c) in &self.terms {
            let mut exps = vec![0; out.vars.len()];
            for (old, &new) in map.iter().enumerate() {
                exps[new] = m.0[old];
            }
            out.terms.insert(Monomial(exps), c.clone());
        }
        Ok(out)
    }

    /// Drops a variable the polynomial no longer uses.
    pub fn without_var(&self, var: &str) -> Result<MPoly, PolyError> {
        let idx = self.var_index(var)?;
        if self.terms.keys().any(|m| m.0[idx] > 0) {
            return Err(PolyError::VariableInUse(var.to_string()));
        }
        let mut vars = self.vars.clone();
        vars.remove(idx);
        let mut out = MPoly {
            vars,
            field: self.field,
            terms: BTreeMap::new(),
        };
        for (m, c) in &self.terms {
            let mut exps = m.0.clone();
            exps.remove(idx);
            out.terms.insert(Monomial(exps), c.clone());
        }
        Ok(out)
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let d = self.field.d_value();
        for (pos, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.a.is_negative() || (c.a.is_zero() && c.b.is_negative());
            if pos == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let c = if negative { c.neg() } else { c.clone() };
            let mono: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        self.vars[i].clone()
                    } else {
                        format!("{}^{}", self.vars[i], e)
                    }
                })
                .collect();
            let coeff = if c.b.is_zero() {
                if c.is_one() && !mono.is_empty() {
                    String::new()
                } else {
                    c.a.to_string()
                }
            } else if c.a.is_zero() {
                if c.b.is_one() {
                    format!("sqrt({d})")
                } else if c.b.is_negative() {
                    format!("({}*sqrt({d}))", c.b)
                } else {
                    format!("{}*sqrt({d})", c.b)
                }
            } else {
                let sign = if c.b.is_negative() { '-' } else { '+' };
                let abs = c.b.abs();
                if abs.is_one() {
                    format!("({} {sign} sqrt({d}))", c.a)
                } else {
                    format!("({} {sign} {abs}*sqrt({d}))", c.a)
                }
            };
            match (coeff.is_empty(), mono.is_empty()) {
                (true, _) => write!(f, "{}", mono.join("*"))?,
                (false, true) => write!(f, "{coeff}")?,
                (false, false) => write!(f, "{coeff}*{}", mono.join("*"))?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct MPolyWire {
    vars: Vec<String>,
    field: FieldWire,
    terms: Vec<TermWire>,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
enum FieldWire {
    Rational,
    Quadext { d: i64 },
}

#[derive(Serialize, Deserialize)]
struct TermWire {
    coeff: [String; 2],
    monomial: Vec<u32>,
}

impl From<MPoly> for MPolyWire {
    fn from(p: MPoly) -> MPolyWire {
        MPolyWire {
            vars: p.vars.clone(),
            field: match p.field {
                CoeffField::Rational => FieldWire::Rational,
                CoeffField::Quadratic { d } => FieldWire::Quadext { d },
            },
            terms: p
                .terms
                .iter()
                .rev()
                .map(|(m, c)| TermWire {
                    coeff: [c.a.to_string(), c.b.to_string()],
                    monomial: m.0.clone(),
                })
                .collect(),
        }
    }
}

impl TryFrom<MPolyWire> for MPoly {
    type Error = PolyError;

    fn try_from(wire: MPolyWire) -> Result<MPoly, PolyError> {
        let field = match wire.field {
            FieldWire::Rational => CoeffField::Rational,
            FieldWire::Quadext { d } => CoeffField::Quadratic { d },
        };
        let vars: Vec<&str> = wire.vars.iter().map(String::as_str).collect();
        let terms = wire
            .terms
            .into_iter()
            .map(|t| {
                let a = parse_rational(&t.coeff[0])?;
                let b = parse_rational(&t.coeff[1])?;
                Ok((t.monomial, Coeff::new(a, b)))
            })
            .collect::<Result<Vec<_>, PolyError>>()?;
        MPoly::from_terms(&vars, field, terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: CoeffField = CoeffField::Rational;
    const Q3: CoeffField = CoeffField::Quadratic { d: 3 };

    fn qc(a: i64, b: i64) -> Coeff {
        Coeff::new(
            BigRational::from_integer(a.into()),
            BigRational::from_integer(b.into()),
        )
    }

    fn xv() -> MPoly {
        MPoly::var(&["x", "y"], Q, "x").unwrap()
    }

    fn yv() -> MPoly {
        MPoly::var(&["x", "y"], Q, "y").unwrap()
    }

    fn int(n: i64) -> MPoly {
        MPoly::constant(&["x", "y"], Q, Coeff::from_int(n)).unwrap()
    }

    #[test]
    fn construction_drops_zero_terms_and_merges_duplicates() {
        let p = MPoly::from_terms(
            &["x", "y"],
            Q,
            [
                (vec![1, 0], Coeff::from_int(2)),
                (vec![1, 0], Coeff::from_int(-2)),
                (vec![0, 1], Coeff::from_int(0)),
                (vec![0, 2], Coeff::from_int(3)),
            ],
        )
        .unwrap();
        assert_eq!(p.term_count(), 1);
        assert_eq!(p.to_string(), "3*y^2");
        assert!(MPoly::zero(&["x", "x"], Q).is_err());
        assert!(MPoly::from_terms(&["x"], Q, [(vec![1, 2], Coeff::one())]).is_err());
        assert!(MPoly::constant(&["x"], Q, qc(1, 1)).is_err());
        assert!(MPoly::zero(&["x"], CoeffField::Quadratic { d: 12 }).is_err());
    }

    #[test]
    fn graded_lex_ordering() {
        // x^2*y beats x*y^2 at equal total degree, and both beat x^2.
        let p = xv()
            .pow(2)
            .unwrap()
            .mul(&yv())
            .unwrap()
            .add(&xv().mul(&yv().pow(2).unwrap()).unwrap())
            .unwrap()
            .add(&xv().pow(2).unwrap())
            .unwrap();
        assert_eq!(p.to_string(), "x^2*y + x*y^2 + x^2");
        assert_eq!(p.leading_term().unwrap().0.exponents(), &[2, 1]);
        assert_eq!(p.total_degree(), 3);
    }

    #[test]
    fn ring_arithmetic() {
        let sum = xv().add(&yv()).unwrap();
        assert_eq!(sum.pow(2).unwrap().to_string(), "x^2 + 2*x*y + y^2");
        let cube = yv().add(&int(1)).unwrap().pow(3).unwrap();
        assert_eq!(cube.to_string(), "y^3 + 3*y^2 + 3*y + 1");
        assert!(sum.sub(&sum).unwrap().is_zero());
        assert_eq!(sum.neg().to_string(), "-x - y");
        assert_eq!(
            sum.scale(&BigRational::new(1.into(), 2.into())).to_string(),
            "1/2*x + 1/2*y"
        );
        let other_vars = MPoly::var(&["x", "z"], Q, "x").unwrap();
        assert!(matches!(
            sum.add(&other_vars),
            Err(PolyError::VariableMismatch { .. })
        ));
        let other_field = MPoly::var(&["x", "y"], Q3, "x").unwrap();
        assert_eq!(sum.mul(&other_field), Err(PolyError::FieldMismatch));
    }

    #[test]
    fn derivative_of_the_cubic() {
        // d/dy of y²x − (y+1)³ is 2yx − 3(y+1)².
        let f = yv()
            .pow(2)
            .unwrap()
            .mul(&xv())
            .unwrap()
            .sub(&yv().add(&int(1)).unwrap().pow(3).unwrap())
            .unwrap();
        let df = f.partial_derivative("y").unwrap();
        let expected = int(2)
            .mul(&yv())
            .unwrap()
            .mul(&xv())
            .unwrap()
            .sub(&int(3).mul(&yv().add(&int(1)).unwrap().pow(2).unwrap()).unwrap())
            .unwrap();
        assert_eq!(df, expected);
        assert_eq!(df.to_string(), "2*x*y - 3*y^2 - 6*y - 3");
    }

    #[test]
    fn substitution() {
        let f = yv().pow(2).unwrap().mul(&xv()).unwrap();
        assert_eq!(f.substitute("x", &xv()).unwrap(), f);
        // x ↦ x + 2y sends y²x to y²x + 2y³.
        let shear = xv().add(&int(2).mul(&yv()).unwrap()).unwrap();
        let g = f.substitute("x", &shear).unwrap();
        assert_eq!(g.to_string(), "x*y^2 + 2*y^3");
        assert!(f.substitute("t", &shear).is_err());
    }

    #[test]
    fn galois_conjugation_is_a_ring_automorphism() {
        let s = MPoly::constant(&["x"], Q3, qc(3, 2)).unwrap();
        assert_eq!(s.galois_conjugate().to_string(), "(3 - 2*sqrt(3))");
        let x = MPoly::var(&["x"], Q3, "x").unwrap();
        let p = x.scale_coeff(&qc(1, 1)).unwrap().add(&s).unwrap();
        let q = x.pow(2).unwrap().sub(&s).unwrap();
        assert_eq!(
            p.mul(&q).unwrap().galois_conjugate(),
            p.galois_conjugate().mul(&q.galois_conjugate()).unwrap()
        );
        assert_eq!(p.galois_conjugate().galois_conjugate(), p);
        // On rational coefficients it is the identity.
        let r = xv().add(&int(7)).unwrap();
        assert_eq!(r.galois_conjugate(), r);
    }

    #[test]
    fn exact_division() {
        let diff_sq = xv().pow(2).unwrap().sub(&yv().pow(2).unwrap()).unwrap();
        let q = diff_sq.exact_div(&xv().sub(&yv()).unwrap()).unwrap();
        assert_eq!(q.to_string(), "x + y");
        let sum_sq = xv().pow(2).unwrap().add(&yv().pow(2).unwrap()).unwrap();
        assert_eq!(
            sum_sq.exact_div(&xv().sub(&yv()).unwrap()),
            Err(PolyError::NotDivisible)
        );
        assert_eq!(diff_sq.exact_div(&int(0)), Err(PolyError::DivisionByZero));
        assert!(int(0).exact_div(&xv()).unwrap().is_zero());
        // Division in ℚ(√3): (x² - 3) = (x - √3)(x + √3).
        let x3 = MPoly::var(&["x"], Q3, "x").unwrap();
        let root = MPoly::constant(&["x"], Q3, qc(0, 1)).unwrap();
        let prod = x3.sub(&root).unwrap().mul(&x3.add(&root).unwrap()).unwrap();
        assert_eq!(prod.to_string(), "x^2 - 3");
        assert_eq!(prod.exact_div(&x3.sub(&root).unwrap()).unwrap(), x3.add(&root).unwrap());
    }

    #[test]
    fn degrees_and_coefficient_extraction() {
        let f = yv()
            .pow(2)
            .unwrap()
            .mul(&xv())
            .unwrap()
            .sub(&yv().add(&int(1)).unwrap().pow(3).unwrap())
            .unwrap();
        assert_eq!(f.degree("y").unwrap(), 3);
        assert_eq!(f.degree("x").unwrap(), 1);
        assert_eq!(MPoly::zero(&["x"], Q).unwrap().degree("x").unwrap(), -1);
        assert_eq!(f.coeff_of("y", 2).unwrap().to_string(), "x - 3");
        assert_eq!(f.leading_coeff_in("y").unwrap().to_string(), "-1");
        assert_eq!(f.coeff_of("y", 5).unwrap().to_string(), "0");
    }

    #[test]
    fn embedding_and_projection() {
        let f = xv().mul(&yv()).unwrap();
        let g = f.embed(&["t", "x", "y"]).unwrap();
        assert_eq!(g.vars(), &["t", "x", "y"]);
        assert_eq!(g.degree("t").unwrap(), 0);
        assert_eq!(g.to_string(), "x*y");
        assert_eq!(g.without_var("t").unwrap(), f);
        assert_eq!(
            g.without_var("x"),
            Err(PolyError::VariableInUse("x".to_string()))
        );
        assert!(f.embed(&["x", "z"]).is_err());
    }

    #[test]
    fn display_with_quadratic_coefficients() {
        let x = MPoly::var(&["x"], Q3, "x").unwrap();
        let c1 = x.scale_coeff(&qc(3, -2)).unwrap();
        let c2 = MPoly::constant(&["x"], Q3, qc(0, -1)).unwrap();
        let p = c1.add(&c2).unwrap();
        assert_eq!(p.to_string(), "(3 - 2*sqrt(3))*x - sqrt(3)");
        assert_eq!(MPoly::zero(&["x"], Q3).unwrap().to_string(), "0");
    }

    #[test]
    fn wire_round_trip() {
        let f = yv()
            .pow(2)
            .unwrap()
            .mul(&xv())
            .unwrap()
            .sub(&yv().add(&int(1)).unwrap().pow(3).unwrap())
            .unwrap();
        let json = serde_json::to_string(&f).unwrap();
        let back: MPoly = serde_json::from_str(&json).unwrap();
        assert_eq!(back, f);
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["field"]["type"], "rational");
        assert_eq!(v["terms"][0]["coeff"][0], "1");
        assert_eq!(v["terms"][0]["monomial"], serde_json::json!([1, 2]));
    }

    #[test]
    fn wire_validation() {
        let bad_second: Result<MPoly, _> = serde_json::from_str(
            r#"{"vars":["x"],"field":{"type":"rational"},"terms":[{"coeff":["1","1"],"monomial":[1]}]}"#,
        );
        assert!(bad_second.is_err());
        let bad_len: Result<MPoly, _> = serde_json::from_str(
            r#"{"vars":["x"],"field":{"type":"rational"},"terms":[{"coeff":["1","0"],"monomial":[1,2]}]}"#,
        );
        assert!(bad_len.is_err());
        let bad_d: Result<MPoly, _> = serde_json::from_str(
            r#"{"vars":["x"],"field":{"type":"quadext","d":12},"terms":[]}"#,
        );
        assert!(bad_d.is_err());
        let merged: MPoly = serde_json::from_str(
            r#"{"vars":["x"],"field":{"type":"quadext","d":3},"terms":[{"coeff":["1","1/2"],"monomial":[1]},{"coeff":["-1","1/2"],"monomial":[1]}]}"#,
        )
        .unwrap();
        assert_eq!(merged.to_string(), "sqrt(3)*x");
    }
}
