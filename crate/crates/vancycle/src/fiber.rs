//! The combinatorial model of the regular fiber.
//!
//! The fiber of an `N`-sheeted projection, punctured over `k` branch
//! points, deformation-retracts onto a CW-complex whose 1-cells are
//! indexed by pairs (branch point `i`, sheet `l`). When every branch
//! point has transposition monodromy `(a_i, b_i)`, the relations collapse
//! first homology onto one free generator per branch point; we fix
//! `e_i = (i, a_i)` with `a_i` the smaller sheet of the transposition,
//! so a reduced class is a plain integer vector ([`ChainClass`]).
//!
//! [`lift`] threads a word in the fiber: walking the letters leftmost
//! first, a letter with index `i` contributes `+e_i` when the running
//! sheet is `a_i`, `-e_i` when it is `b_i`, and nothing otherwise, and
//! then moves the sheet across the transposition. The letter's exponent
//! never matters: the reduced class of a 1-cell traversed backwards
//! equals the class of the cell itself, because the relations identify
//! `(i, a_i) + (i, b_i)` with zero.

use crate::braid::{FreeWord, Letter, Permutation};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FiberError {
    #[error("sheet count must be at least 2, got {0}")]
    TooFewSheets(usize),
    #[error("transposition #{index} = ({a}, {b}) is not an ordered pair of sheets in 1..={sheets}")]
    BadTransposition {
        index: usize,
        a: usize,
        b: usize,
        sheets: usize,
    },
    #[error("word uses {word} generators but the sheet monodromy has {model}")]
    GeneratorMismatch { word: usize, model: usize },
    #[error("sheet {sheet} out of range 1..={sheets}")]
    SheetOutOfRange { sheet: usize, sheets: usize },
    #[error("generator index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
}

/// The classical monodromy of the fiber projection: for each of the `k`
/// branch points, the transposition `(a_i, b_i)` of the `N` sheets,
/// stored with `a_i < b_i`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SheetMonodromy {
    sheets: usize,
    transpositions: Vec<(usize, usize)>,
}

impl SheetMonodromy {
    /// Validates that every pair is an ordered transposition of sheets.
    pub fn new(
        sheets: usize,
        transpositions: Vec<(usize, usize)>,
    ) -> Result<Self, FiberError> {
        if sheets < 2 {
            return Err(FiberError::TooFewSheets(sheets));
        }
        for (idx, &(a, b)) in transpositions.iter().enumerate() {
            if a == 0 || b == 0 || a >= b || b > sheets {
                return Err(FiberError::BadTransposition {
                    index: idx + 1,
                    a,
                    b,
                    sheets,
                });
            }
        }
        Ok(SheetMonodromy {
            sheets,
            transpositions,
        })
    }

    pub fn sheets(&self) -> usize {
        self.sheets
    }

    /// Number of branch points (free-group generators).
    pub fn k(&self) -> usize {
        self.transpositions.len()
    }

    /// The transposition of the 1-based branch point `i`.
    pub fn transposition(&self, i: usize) -> Result<(usize, usize), FiberError> {
        self.transpositions
            .get(i - 1)
            .copied()
            .ok_or(FiberError::IndexOutOfRange {
                index: i,
                max: self.k(),
            })
    }

    pub fn transpositions(&self) -> &[(usize, usize)] {
        &self.transpositions
    }

    /// Whether the transpositions generate a transitive action on the
    /// sheets, i.e. whether the fiber is connected.
    pub fn is_transitive(&self) -> bool {
        let mut reach = vec![false; self.sheets + 1];
        reach[1] = true;
        let mut stack = vec![1];
        while let Some(s) = stack.pop() {
            for &(a, b) in &self.transpositions {
                let t = if s == a {
                    b
                } else if s == b {
                    a
                } else {
                    continue;
                };
                if !reach[t] {
                    reach[t] = true;
                    stack.push(t);
                }
            }
        }
        reach[1..].iter().all(|&r| r)
    }

    /// Rank of the cycle group of the model, `k - (N - 1)`. The formula
    /// counts a connected fiber; for an intransitive action it is only a
    /// lower-bound bookkeeping number and [`is_transitive`](Self::is_transitive)
    /// should be consulted.
    pub fn cycle_rank(&self) -> i64 {
        self.k() as i64 - (self.sheets as i64 - 1)
    }
}

/// A first homology class of the fiber model in the canonical basis
/// `e_1..e_k`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ChainClass {
    coeffs: Vec<i64>,
}

impl ChainClass {
    pub fn zero(k: usize) -> Self {
        ChainClass {
            coeffs: vec![0; k],
        }
    }

    pub fn from_coeffs(coeffs: Vec<i64>) -> Self {
        ChainClass { coeffs }
    }

    pub fn k(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Coefficient of `e_i`, 1-based.
    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs[i - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn scaled(&self, n: i64) -> Self {
        ChainClass {
            coeffs: self.coeffs.iter().map(|&c| c * n).collect(),
        }
    }
}

impl Add for &ChainClass {
    type Output = ChainClass;
    fn add(self, rhs: &ChainClass) -> ChainClass {
        assert_eq!(self.k(), rhs.k(), "chain length mismatch");
        ChainClass {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(&x, &y)| x + y)
                .collect(),
        }
    }
}

impl Sub for &ChainClass {
    type Output = ChainClass;
    fn sub(self, rhs: &ChainClass) -> ChainClass {
        assert_eq!(self.k(), rhs.k(), "chain length mismatch");
        ChainClass {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(&x, &y)| x - y)
                .collect(),
        }
    }
}

impl Neg for &ChainClass {
    type Output = ChainClass;
    fn neg(self) -> ChainClass {
        ChainClass {
            coeffs: self.coeffs.iter().map(|&c| -c).collect(),
        }
    }
}

impl fmt::Display for ChainClass {
    /// Sparse rendering in basis order, e.g. `e2 - e7 + 2 e9`; the zero
    /// class prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (idx, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mag = c.abs();
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mag != 1 {
                write!(f, "{mag} ")?;
            }
            write!(f, "e{}", idx + 1)?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Outcome of threading a word through the fiber from a start sheet.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LiftResult {
    pub chain: ChainClass,
    pub end_sheet: usize,
}

fn check_word(m: &SheetMonodromy, w: &FreeWord) -> Result<(), FiberError> {
    if w.k() != m.k() {
        return Err(FiberError::GeneratorMismatch {
            word: w.k(),
            model: m.k(),
        });
    }
    Ok(())
}

fn check_sheet(m: &SheetMonodromy, l: usize) -> Result<(), FiberError> {
    if l == 0 || l > m.sheets() {
        return Err(FiberError::SheetOutOfRange {
            sheet: l,
            sheets: m.sheets(),
        });
    }
    Ok(())
}

/// The permutation of the sheets induced by a free word: the composition
/// of the letters' transpositions, leftmost letter first. Exponents are
/// ignored (transpositions are involutions).
pub fn word_permutation(m: &SheetMonodromy, w: &FreeWord) -> Result<Permutation, FiberError> {
    check_word(m, w)?;
    let mut p = Permutation::identity(m.sheets());
    for &Letter(g, _) in w.letters() {
        let (a, b) = m.transposition(g)?;
        p.post_swap(a, b);
    }
    Ok(p)
}

/// Threads a word through the fiber starting on sheet `l` and returns the
/// accumulated reduced 1-chain together with the final sheet.
pub fn lift(m: &SheetMonodromy, w: &FreeWord, l: usize) -> Result<LiftResult, FiberError> {
    check_word(m, w)?;
    check_sheet(m, l)?;
    let mut chain = vec![0i64; m.k()];
    let mut sheet = l;
    for &Letter(g, _) in w.letters() {
        let (a, b) = m.transposition(g)?;
        if sheet == a {
            chain[g - 1] += 1;
            sheet = b;
        } else if sheet == b {
            chain[g - 1] -= 1;
            sheet = a;
        }
    }
    Ok(LiftResult {
        chain: ChainClass::from_coeffs(chain),
        end_sheet: sheet,
    })
}

/// Whether the lift of `w` starting on sheet `l` closes up, i.e. whether
/// the word's sheet permutation fixes `l`.
pub fn is_cycle(m: &SheetMonodromy, w: &FreeWord, l: usize) -> Result<bool, FiberError> {
    check_sheet(m, l)?;
    Ok(word_permutation(m, w)?.apply(l) == l)
}

/// Boundary of the 1-cell (branch point `i`, sheet `l`) as a 0-chain over
/// the sheets (index `s-1` holds the coefficient of sheet `s`): it is
/// `[b_i] - [a_i]` from sheet `a_i`, `[a_i] - [b_i]` from sheet `b_i`,
/// and zero from any sheet the transposition does not move.
pub fn boundary1(m: &SheetMonodromy, i: usize, l: usize) -> Result<Vec<i64>, FiberError> {
    check_sheet(m, l)?;
    let (a, b) = m.transposition(i)?;
    let mut chain = vec![0i64; m.sheets()];
    if l == a {
        chain[b - 1] += 1;
        chain[a - 1] -= 1;
    } else if l == b {
        chain[a - 1] += 1;
        chain[b - 1] -= 1;
    }
    Ok(chain)
}
