//! Exact intertwiner obstruction between tuples of integer matrices.
//!
//! Given pairs `(A_1, B_1), …, (A_t, B_t)` of `n×n` integer matrices,
//! the conjugation space is the rational vector space of all `P` with
//! `P·B_m = A_m·P` for every `m`; for two pairs of `6×6` matrices that
//! is a linear system of 72 equations in 36 unknowns. A simultaneous
//! conjugation must be an invertible element of this space, so if the
//! space is zero, or the determinant of its general element vanishes
//! identically as a polynomial in the coordinates, no conjugation exists
//! and the tuples are certifiably inequivalent. Otherwise a deterministic
//! grid search produces an explicit invertible intertwiner; the matrices
//! are then simultaneously conjugate, which settles nothing about the
//! finer geometric question, so the verdict stays inconclusive.
//!
//! All arithmetic is exact over arbitrary-precision rationals.

use crate::monodromy::SquareIntMatrix;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ObstructionError {
    #[error("no matrix pairs given")]
    NoPairs,
    #[error("pair {pair}, side {side}: matrix is {got}x{got}, expected {n}x{n}")]
    ShapeMismatch {
        pair: usize,
        side: char,
        got: usize,
        n: usize,
    },
    #[error("parametric determinant supports n <= 8, got n = {0}")]
    TooLarge(usize),
    #[error("the zero space has no general element")]
    EmptyBasis,
    #[error("parameter count mismatch: {0} vs {1}")]
    ParamMismatch(usize, usize),
    #[error("witness search exhausted its grid, which contradicts nonvanishing")]
    SearchExhausted,
}

fn rat(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// A dense matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            entries: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn from_int(m: &SquareIntMatrix) -> Self {
        let n = m.n();
        let mut out = RatMatrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                out.set(r, c, rat(m.get(r, c)));
            }
        }
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry at 0-based row `r`, column `c`.
    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigRational) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, rhs.rows, "inner dimensions must agree");
        let mut out = RatMatrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for c in 0..rhs.cols {
                let mut acc = BigRational::zero();
                for x in 0..self.cols {
                    acc += self.get(r, x) * rhs.get(x, c);
                }
                out.set(r, c, acc);
            }
        }
        out
    }

    pub fn scaled(&self, f: &BigRational) -> RatMatrix {
        let mut out = self.clone();
        for e in &mut out.entries {
            *e *= f;
        }
        out
    }

    pub fn add(&self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for (e, r) in out.entries.iter_mut().zip(&rhs.entries) {
            *e += r;
        }
        out
    }

    pub fn row_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c).to_string()).collect())
            .collect()
    }
}

impl Serialize for RatMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let rows = self.row_strings();
        let mut seq = serializer.serialize_seq(Some(rows.len()))?;
        for row in rows {
            seq.serialize_element(&row)?;
        }
        seq.end()
    }
}

/// A polynomial with rational coefficients in parameters `a1, …, ad`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParamPoly {
    nparams: usize,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

impl ParamPoly {
    pub fn zero(nparams: usize) -> Self {
        ParamPoly {
            nparams,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nparams: usize, c: BigRational) -> Self {
        let mut p = ParamPoly::zero(nparams);
        if !c.is_zero() {
            p.terms.insert(vec![0; nparams], c);
        }
        p
    }

    /// The 1-based parameter `a{m}` as a polynomial.
    pub fn param(nparams: usize, m: usize) -> Self {
        assert!(m >= 1 && m <= nparams, "parameter index out of range");
        let mut exps = vec![0; nparams];
        exps[m - 1] = 1;
        let mut p = ParamPoly::zero(nparams);
        p.terms.insert(exps, BigRational::one());
        p
    }

    pub fn nparams(&self) -> usize {
        self.nparams
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn insert(&mut self, exps: Vec<u32>, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn add(&self, rhs: &ParamPoly) -> Result<ParamPoly, ObstructionError> {
        if self.nparams != rhs.nparams {
            return Err(ObstructionError::ParamMismatch(self.nparams, rhs.nparams));
        }
        let mut out = self.clone();
        for (exps, c) in &rhs.terms {
            out.insert(exps.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &ParamPoly) -> Result<ParamPoly, ObstructionError> {
        self.add(&rhs.scaled(&-BigRational::one()))
    }

    pub fn mul(&self, rhs: &ParamPoly) -> Result<ParamPoly, ObstructionError> {
        if self.nparams != rhs.nparams {
            return Err(ObstructionError::ParamMismatch(self.nparams, rhs.nparams));
        }
        let mut out = ParamPoly::zero(self.nparams);
        for (le, lc) in &self.terms {
            for (re, rc) in &rhs.terms {
                let exps = le.iter().zip(re).map(|(a, b)| a + b).collect();
                out.insert(exps, lc * rc);
            }
        }
        Ok(out)
    }

    pub fn scaled(&self, f: &BigRational) -> ParamPoly {
        let mut out = ParamPoly::zero(self.nparams);
        if f.is_zero() {
            return out;
        }
        for (exps, c) in &self.terms {
            out.terms.insert(exps.clone(), c * f);
        }
        out
    }

    /// Largest exponent any single parameter reaches.
    pub fn max_single_degree(&self) -> u32 {
        self.terms
            .keys()
            .flat_map(|exps| exps.iter().copied())
            .max()
            .unwrap_or(0)
    }

    pub fn eval(&self, params: &[BigRational]) -> Result<BigRational, ObstructionError> {
        if params.len() != self.nparams {
            return Err(ObstructionError::ParamMismatch(params.len(), self.nparams));
        }
        let mut acc = BigRational::zero();
        for (exps, c) in &self.terms {
            let mut term = c.clone();
            for (p, &e) in params.iter().zip(exps) {
                for _ in 0..e {
                    term *= p;
                }
            }
            acc += term;
        }
        Ok(acc)
    }
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().collect();
        keys.sort_by(|a, b| {
            let (sa, sb) = (a.iter().sum::<u32>(), b.iter().sum::<u32>());
            sb.cmp(&sa).then_with(|| b.cmp(a))
        });
        for (pos, exps) in keys.iter().enumerate() {
            let c = &self.terms[*exps];
            if pos == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono: Vec<String> = exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        format!("a{}", i + 1)
                    } else {
                        format!("a{}^{}", i + 1, e)
                    }
                })
                .collect();
            let abs = c.abs();
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{abs}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl Serialize for ParamPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Reduced row echelon form in place; returns the pivot columns.
fn rref(mat: &mut [Vec<BigRational>]) -> Vec<usize> {
    let rows = mat.len();
    let cols = if rows == 0 { 0 } else { mat[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !mat[i][c].is_zero()) else {
            continue;
        };
        mat.swap(r, p);
        let inv = mat[r][c].clone();
        for cell in &mut mat[r][c..cols] {
            *cell = &*cell / &inv;
        }
        let pivot_row = mat[r].clone();
        for (i, row) in mat.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let factor = row[c].clone();
                for (cell, p) in row[c..cols].iter_mut().zip(&pivot_row[c..cols]) {
                    *cell = &*cell - &factor * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn check_pairs(pairs: &[(SquareIntMatrix, SquareIntMatrix)]) -> Result<usize, ObstructionError> {
    let Some(first) = pairs.first() else {
        return Err(ObstructionError::NoPairs);
    };
    let n = first.0.n();
    for (idx, (a, b)) in pairs.iter().enumerate() {
        if a.n() != n {
            return Err(ObstructionError::ShapeMismatch {
                pair: idx + 1,
                side: 'A',
                got: a.n(),
                n,
            });
        }
        if b.n() != n {
            return Err(ObstructionError::ShapeMismatch {
                pair: idx + 1,
                side: 'B',
                got: b.n(),
                n,
            });
        }
    }
    Ok(n)
}

/// Solves `P·B_m = A_m·P` for all pairs simultaneously and returns a
/// canonical basis of the rational solution space. The unknown `P[u][v]`
/// is flattened to coordinate `u·n + v`; the basis comes from the reduced
/// row echelon form with free coordinates in ascending order, so it is
/// deterministic.
pub fn conjugation_space(
    pairs: &[(SquareIntMatrix, SquareIntMatrix)],
) -> Result<Vec<RatMatrix>, ObstructionError> {
    let n = check_pairs(pairs)?;
    let unknowns = n * n;
    let mut system: Vec<Vec<BigRational>> = Vec::with_capacity(pairs.len() * unknowns);
    for (a, b) in pairs {
        for r in 0..n {
            for c in 0..n {
                // (P·B - A·P)[r][c] = sum_v P[r][v] B[v][c] - sum_u A[r][u] P[u][c]
                let mut row = vec![BigRational::zero(); unknowns];
                for v in 0..n {
                    row[r * n + v] += rat(b.get(v, c));
                }
                for u in 0..n {
                    row[u * n + c] -= rat(a.get(r, u));
                }
                system.push(row);
            }
        }
    }
    let pivots = rref(&mut system);
    let free: Vec<usize> = (0..unknowns).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &f in &free {
        let mut x = vec![BigRational::zero(); unknowns];
        x[f] = BigRational::one();
        for (pivot_row, &pivot_col) in pivots.iter().enumerate() {
            x[pivot_col] = -system[pivot_row][f].clone();
        }
        let mut m = RatMatrix::zeros(n, n);
        for u in 0..n {
            for v in 0..n {
                m.set(u, v, x[u * n + v].clone());
            }
        }
        basis.push(m);
    }
    Ok(basis)
}

/// The general element `a1·P_1 + … + ad·P_d` of the span of `basis`, as a
/// matrix of linear polynomials in the parameters.
pub fn general_element(basis: &[RatMatrix]) -> Result<Vec<Vec<ParamPoly>>, ObstructionError> {
    let d = basis.len();
    if d == 0 {
        return Err(ObstructionError::EmptyBasis);
    }
    let (rows, cols) = (basis[0].rows(), basis[0].cols());
    let mut out = vec![vec![ParamPoly::zero(d); cols]; rows];
    for (m, mat) in basis.iter().enumerate() {
        for (r, row) in out.iter_mut().enumerate() {
            for (c, cell) in row.iter_mut().enumerate() {
                let term = ParamPoly::param(d, m + 1).scaled(mat.get(r, c));
                *cell = cell.add(&term)?;
            }
        }
    }
    Ok(out)
}

/// Determinant of a matrix of parameter polynomials, by cofactor
/// expansion along the first row. Guarded to `n <= 8`.
pub fn parametric_det(m: &[Vec<ParamPoly>]) -> Result<ParamPoly, ObstructionError> {
    let n = m.len();
    if n > 8 {
        return Err(ObstructionError::TooLarge(n));
    }
    let nparams = m
        .first()
        .and_then(|row| row.first())
        .map_or(0, ParamPoly::nparams);
    for row in m {
        if row.len() != n {
            return Err(ObstructionError::ParamMismatch(row.len(), n));
        }
    }
    det_rec(m, nparams)
}

fn det_rec(m: &[Vec<ParamPoly>], nparams: usize) -> Result<ParamPoly, ObstructionError> {
    let n = m.len();
    if n == 0 {
        return Ok(ParamPoly::constant(nparams, BigRational::one()));
    }
    if n == 1 {
        return Ok(m[0][0].clone());
    }
    let mut acc = ParamPoly::zero(nparams);
    for c in 0..n {
        if m[0][c].is_zero() {
            continue;
        }
        let minor: Vec<Vec<ParamPoly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(x, _)| x != c)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let mut term = m[0][c].mul(&det_rec(&minor, nparams)?)?;
        if c % 2 == 1 {
            term = term.scaled(&-BigRational::one());
        }
        acc = acc.add(&term)?;
    }
    Ok(acc)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Obstructed,
    Inconclusive,
}

/// An explicit invertible intertwiner: the grid point and the matrix it
/// produces.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Witness {
    pub params: Vec<String>,
    pub matrix: RatMatrix,
}

/// Full outcome of the obstruction computation.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ObstructionReport {
    pub n: usize,
    pub dimension: usize,
    pub basis: Vec<RatMatrix>,
    pub det_poly: Option<ParamPoly>,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
}

/// Enumerates grid points of the given dimension with coordinates in
/// `0..=cap`, ordered by total sum and then lexicographically descending,
/// so early coordinates are favored and sparse diagonal-style points come
/// first within each level.
fn grid_points(d: usize, cap: u32) -> impl Iterator<Item = Vec<u32>> {
    let max_sum = cap * d as u32;
    (0..=max_sum).flat_map(move |sum| level_points(d, cap, sum))
}

fn level_points(d: usize, cap: u32, sum: u32) -> Vec<Vec<u32>> {
    if d == 0 {
        return if sum == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    let hi = cap.min(sum);
    for first in (0..=hi).rev() {
        for mut rest in level_points(d - 1, cap, sum - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Runs the whole obstruction computation: solves the intertwiner system,
/// takes the determinant of the general element, and either certifies the
/// obstruction or exhibits an invertible intertwiner found on a small
/// deterministic grid.
pub fn equivalence_verdict(
    pairs: &[(SquareIntMatrix, SquareIntMatrix)],
) -> Result<ObstructionReport, ObstructionError> {
    let n = check_pairs(pairs)?;
    let basis = conjugation_space(pairs)?;
    let dimension = basis.len();
    if dimension == 0 {
        return Ok(ObstructionReport {
            n,
            dimension,
            basis,
            det_poly: None,
            verdict: Verdict::Obstructed,
            witness: None,
        });
    }
    let general = general_element(&basis)?;
    let det = parametric_det(&general)?;
    if det.is_zero() {
        return Ok(ObstructionReport {
            n,
            dimension,
            basis,
            det_poly: Some(det),
            verdict: Verdict::Obstructed,
            witness: None,
        });
    }
    // A nonzero polynomial whose degree in each variable is at most `cap`
    // cannot vanish on all of {0..=cap}^d, so this search terminates.
    let cap = det.max_single_degree().max(1);
    for point in grid_points(dimension, cap) {
        let params: Vec<BigRational> = point.iter().map(|&x| rat(i64::from(x))).collect();
        let value = det.eval(&params)?;
        if value.is_zero() {
            continue;
        }
        let mut matrix = RatMatrix::zeros(n, n);
        for (p, b) in params.iter().zip(&basis) {
            matrix = matrix.add(&b.scaled(p));
        }
        let witness = Witness {
            params: params.iter().map(ToString::to_string).collect(),
            matrix,
        };
        return Ok(ObstructionReport {
            n,
            dimension,
            basis,
            det_poly: Some(det),
            verdict: Verdict::Inconclusive,
            witness: Some(witness),
        });
    }
    Err(ObstructionError::SearchExhausted)
}
