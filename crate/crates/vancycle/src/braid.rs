//! Free group and braid group words, and the Hurwitz action.
//!
//! Free words live in the free group on generators `u_1..u_k` (meridians of
//! the punctured disk); braid words live in the braid group on `k` strands
//! with Artin generators `s_1..s_{k-1}`. The braid group acts on the free
//! group on the right by the Hurwitz rules; the action is faithful, which
//! turns the braid word problem into a free-word comparison
//! ([`braids_equal`]). No Garside or other normal form machinery is used.

use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

/// One letter of a word: 1-based generator index and exponent.
///
/// Serializes as a two-element array `[index, exponent]` with exponent
/// restricted to `+1` or `-1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Letter(pub usize, pub i8);

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WordError {
    #[error("generator index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("exponent {0} must be +1 or -1")]
    BadExponent(i8),
    #[error("strand count mismatch: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error("word needs at least one generator, got k = 0")]
    NoGenerators,
    #[error("normalization index {s} out of range 1..={max}")]
    NormalizationRange { s: usize, max: usize },
    #[error("centralizer generators are defined for k >= 3, got k = {0}")]
    TooFewStrands(usize),
    #[error("normalized conjugator for j = {j} failed the equality check; this is a bug")]
    NormalizationCheck { j: usize },
}

fn check_letters(letters: &[Letter], max_index: usize) -> Result<(), WordError> {
    for &Letter(g, e) in letters {
        if g == 0 || g > max_index {
            return Err(WordError::IndexOutOfRange {
                index: g,
                max: max_index,
            });
        }
        if e != 1 && e != -1 {
            return Err(WordError::BadExponent(e));
        }
    }
    Ok(())
}

fn push_reduced(out: &mut Vec<Letter>, l: Letter) {
    if let Some(&Letter(g, e)) = out.last() {
        if g == l.0 && e == -l.1 {
            out.pop();
            return;
        }
    }
    out.push(l);
}

/// A freely reduced word in the free group on `u_1..u_k`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FreeWord {
    k: usize,
    letters: Vec<Letter>,
}

impl FreeWord {
    /// Builds a word from raw letters, freely reducing adjacent inverse
    /// pairs. Fails on out-of-range indices or exponents other than `±1`.
    pub fn new(k: usize, letters: impl IntoIterator<Item = Letter>) -> Result<Self, WordError> {
        if k == 0 {
            return Err(WordError::NoGenerators);
        }
        let raw: Vec<Letter> = letters.into_iter().collect();
        check_letters(&raw, k)?;
        let mut reduced = Vec::with_capacity(raw.len());
        for l in raw {
            push_reduced(&mut reduced, l);
        }
        Ok(FreeWord {
            k,
            letters: reduced,
        })
    }

    /// The empty word.
    pub fn identity(k: usize) -> Self {
        FreeWord {
            k,
            letters: Vec::new(),
        }
    }

    /// The single generator `u_g`.
    pub fn generator(k: usize, g: usize) -> Result<Self, WordError> {
        FreeWord::new(k, [Letter(g, 1)])
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Letters reversed, exponents flipped.
    pub fn invert(&self) -> Self {
        FreeWord {
            k: self.k,
            letters: self
                .letters
                .iter()
                .rev()
                .map(|&Letter(g, e)| Letter(g, -e))
                .collect(),
        }
    }

    /// Concatenation `self · other`, reduced at the seam.
    pub fn concat(&self, other: &FreeWord) -> Result<Self, WordError> {
        if self.k != other.k {
            return Err(WordError::StrandMismatch(self.k, other.k));
        }
        let mut letters = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut letters, l);
        }
        Ok(FreeWord {
            k: self.k,
            letters,
        })
    }

    /// The Hurwitz right action of a braid word, applied letter by letter
    /// in sequence order (leftmost letter acts first).
    ///
    /// The generator `s_i` substitutes `u_i ↦ u_{i+1}` and
    /// `u_{i+1} ↦ u_{i+1}·u_i·u_{i+1}^{-1}`; its inverse substitutes
    /// `u_{i+1} ↦ u_i` and `u_i ↦ u_i^{-1}·u_{i+1}·u_i`. All other
    /// generators are fixed. The result is kept freely reduced after every
    /// substitution step.
    pub fn hurwitz_act(&self, b: &BraidWord) -> Result<FreeWord, WordError> {
        if self.k != b.k {
            return Err(WordError::StrandMismatch(self.k, b.k));
        }
        let mut letters = self.letters.clone();
        for &Letter(i, e) in &b.letters {
            letters = apply_braid_letter(&letters, i, e);
        }
        Ok(FreeWord {
            k: self.k,
            letters,
        })
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_word(f, &self.letters, "u")
    }
}

fn write_word(f: &mut fmt::Formatter<'_>, letters: &[Letter], sym: &str) -> fmt::Result {
    if letters.is_empty() {
        return write!(f, "1");
    }
    for (pos, &Letter(g, e)) in letters.iter().enumerate() {
        if pos > 0 {
            write!(f, " ")?;
        }
        if e == 1 {
            write!(f, "{sym}{g}")?;
        } else {
            write!(f, "{sym}{g}^-1")?;
        }
    }
    Ok(())
}

fn apply_braid_letter(word: &[Letter], i: usize, sign: i8) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::with_capacity(word.len() + 4);
    for &Letter(g, e) in word {
        if sign == 1 {
            if g == i {
                push_reduced(&mut out, Letter(i + 1, e));
            } else if g == i + 1 {
                push_reduced(&mut out, Letter(i + 1, 1));
                push_reduced(&mut out, Letter(i, e));
                push_reduced(&mut out, Letter(i + 1, -1));
            } else {
                push_reduced(&mut out, Letter(g, e));
            }
        } else if g == i + 1 {
            push_reduced(&mut out, Letter(i, e));
        } else if g == i {
            push_reduced(&mut out, Letter(i, -1));
            push_reduced(&mut out, Letter(i + 1, e));
            push_reduced(&mut out, Letter(i, 1));
        } else {
            push_reduced(&mut out, Letter(g, e));
        }
    }
    out
}

/// A word in the braid group on `k` strands, generators `s_1..s_{k-1}`.
///
/// No canonical form is kept; group equality is decided by
/// [`braids_equal`] through the faithful Hurwitz action.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BraidWord {
    k: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    /// Builds a braid word. Letters are kept verbatim (no reduction);
    /// indices must lie in `1..=k-1` and exponents must be `±1`.
    pub fn new(k: usize, letters: impl IntoIterator<Item = Letter>) -> Result<Self, WordError> {
        if k < 2 {
            return Err(WordError::NoGenerators);
        }
        let letters: Vec<Letter> = letters.into_iter().collect();
        check_letters(&letters, k - 1)?;
        Ok(BraidWord { k, letters })
    }

    /// The empty braid word.
    pub fn identity(k: usize) -> Self {
        BraidWord {
            k,
            letters: Vec::new(),
        }
    }

    /// The single Artin generator `s_j`.
    pub fn generator(k: usize, j: usize) -> Result<Self, WordError> {
        BraidWord::new(k, [Letter(j, 1)])
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Letters reversed, exponents flipped.
    pub fn invert(&self) -> Self {
        BraidWord {
            k: self.k,
            letters: self
                .letters
                .iter()
                .rev()
                .map(|&Letter(g, e)| Letter(g, -e))
                .collect(),
        }
    }

    /// Concatenation `self · other` (self acts first under the Hurwitz
    /// action).
    pub fn concat(&self, other: &BraidWord) -> Result<Self, WordError> {
        if self.k != other.k {
            return Err(WordError::StrandMismatch(self.k, other.k));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            k: self.k,
            letters,
        })
    }

    /// Image under the canonical projection to the symmetric group:
    /// the composition of the adjacent transpositions `(j, j+1)`, leftmost
    /// letter applied first.
    pub fn permutation(&self) -> Permutation {
        let mut p = Permutation::identity(self.k);
        for &Letter(j, _) in &self.letters {
            p.post_swap(j, j + 1);
        }
        p
    }

    /// The images of all `k` free generators under the Hurwitz action.
    /// This tabulates the Artin automorphism; since the action is
    /// faithful, the table determines the braid.
    pub fn artin_image(&self) -> Vec<FreeWord> {
        (1..=self.k)
            .map(|g| {
                FreeWord::generator(self.k, g)
                    .expect("generator index is in range")
                    .hurwitz_act(self)
                    .expect("strand counts match by construction")
            })
            .collect()
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_word(f, &self.letters, "s")
    }
}

/// A permutation of `{1..n}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// Builds a permutation from 1-based images. Fails unless the images
    /// are a bijection of `{1..n}`.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x == 0 || x > n || seen[x - 1] {
                return None;
            }
            seen[x - 1] = true;
        }
        Some(Permutation { images })
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    /// Post-composes with the transposition `(a, b)`: the new permutation
    /// is "`self`, then swap `a` and `b`".
    pub fn post_swap(&mut self, a: usize, b: usize) {
        for x in &mut self.images {
            if *x == a {
                *x = b;
            } else if *x == b {
                *x = a;
            }
        }
    }

    /// Composition "`self` first, then `other`".
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self.images.iter().map(|&x| other.apply(x)).collect(),
        }
    }

    /// If the permutation is a transposition, returns the swapped pair
    /// `(a, b)` with `a < b`.
    pub fn as_transposition(&self) -> Option<(usize, usize)> {
        let moved: Vec<usize> = (1..=self.n()).filter(|&x| self.apply(x) != x).collect();
        match moved.as_slice() {
            [a, b] if self.apply(*a) == *b && self.apply(*b) == *a => Some((*a, *b)),
            _ => None,
        }
    }
}

/// Decides braid group equality through the faithful Hurwitz action:
/// two words are equal iff they induce the same automorphism of the free
/// group, i.e. the same image on every generator.
pub fn braids_equal(b1: &BraidWord, b2: &BraidWord) -> Result<bool, WordError> {
    if b1.k != b2.k {
        return Err(WordError::StrandMismatch(b1.k, b2.k));
    }
    Ok(b1.artin_image() == b2.artin_image())
}

/// The normalization braid `α_s = (s_2 s_1)(s_3 s_2)…(s_s s_{s-1})`,
/// which satisfies `u_1^{α_s} = u_s` and `u_2^{α_s} = u_{s+1}`, so that
/// `s_s` is the conjugate of `s_1` by `α_s`. By convention `α_1` is the
/// empty word (`s_1` needs no normalization).
pub fn alpha_braid(s: usize, k: usize) -> Result<BraidWord, WordError> {
    if s == 0 || s > k.saturating_sub(1) {
        return Err(WordError::NormalizationRange {
            s,
            max: k.saturating_sub(1),
        });
    }
    let mut letters = Vec::with_capacity(2 * s.saturating_sub(1));
    for m in 2..=s {
        letters.push(Letter(m, 1));
        letters.push(Letter(m - 1, 1));
    }
    BraidWord::new(k, letters)
}

/// Rewrites a conjugating word for `s_j` into one for `s_1`: returns
/// `c = α_j · w` (action order: `α_j` acts first), so conjugating `s_1`
/// by `c` gives the same braid as conjugating `s_j` by `w`. The identity
/// is verified internally through [`braids_equal`]; a verification
/// failure signals a bug, not bad input.
pub fn normalize_conjugator(j: usize, w: &BraidWord) -> Result<BraidWord, WordError> {
    let c = alpha_braid(j, w.k)?.concat(w)?;
    let lhs = conjugated_braid(1, &c)?;
    let rhs = conjugated_braid(j, w)?;
    if !braids_equal(&lhs, &rhs)? {
        return Err(WordError::NormalizationCheck { j });
    }
    Ok(c)
}

/// The conjugate of `s_j` by `w` as a braid word: `w^{-1} · s_j · w`
/// in action order (`w^{-1}` acts first).
pub fn conjugated_braid(j: usize, w: &BraidWord) -> Result<BraidWord, WordError> {
    if j == 0 || j > w.k - 1 {
        return Err(WordError::IndexOutOfRange {
            index: j,
            max: w.k - 1,
        });
    }
    let mut letters = w.invert().letters;
    letters.push(Letter(j, 1));
    letters.extend_from_slice(&w.letters);
    BraidWord::new(w.k, letters)
}

/// Generators of the centralizer of `s_1` in the braid group on `k ≥ 3`
/// strands: `s_2·s_1²·s_2` together with every `s_j` for `j ≠ 2`.
pub fn centralizer_gens(k: usize) -> Result<Vec<BraidWord>, WordError> {
    if k < 3 {
        return Err(WordError::TooFewStrands(k));
    }
    let mut gens = vec![BraidWord::new(
        k,
        [Letter(2, 1), Letter(1, 1), Letter(1, 1), Letter(2, 1)],
    )?];
    for j in 1..k {
        if j != 2 {
            gens.push(BraidWord::generator(k, j)?);
        }
    }
    Ok(gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fw(k: usize, letters: &[(usize, i8)]) -> FreeWord {
        FreeWord::new(k, letters.iter().map(|&(g, e)| Letter(g, e))).unwrap()
    }

    fn bw(k: usize, letters: &[(usize, i8)]) -> BraidWord {
        BraidWord::new(k, letters.iter().map(|&(g, e)| Letter(g, e))).unwrap()
    }

    #[test]
    fn free_reduction_cancels_adjacent_inverses() {
        assert!(fw(3, &[(1, 1), (1, -1)]).is_empty());
        let untouched = fw(9, &[(7, 1), (2, 1), (7, -1)]);
        assert_eq!(untouched.letters().len(), 3);
        assert_eq!(
            fw(3, &[(3, 1), (1, 1), (1, -1), (3, 1)]),
            fw(3, &[(3, 1), (3, 1)])
        );
    }

    #[test]
    fn free_reduction_rejects_bad_letters() {
        assert_eq!(
            FreeWord::new(3, [Letter(4, 1)]),
            Err(WordError::IndexOutOfRange { index: 4, max: 3 })
        );
        assert_eq!(
            FreeWord::new(3, [Letter(1, 2)]),
            Err(WordError::BadExponent(2))
        );
    }

    #[test]
    fn invert_reverses_and_flips() {
        assert_eq!(
            bw(4, &[(2, 1), (1, -1)]).invert(),
            bw(4, &[(1, 1), (2, -1)])
        );
        assert!(BraidWord::identity(4).invert().is_empty());
        assert_eq!(
            fw(9, &[(7, 1), (2, 1)]).invert(),
            fw(9, &[(2, -1), (7, -1)])
        );
    }

    #[test]
    fn hurwitz_generator_rules() {
        let k = 3;
        let s1 = bw(k, &[(1, 1)]);
        assert_eq!(fw(k, &[(1, 1)]).hurwitz_act(&s1).unwrap(), fw(k, &[(2, 1)]));
        let s1_inv = bw(k, &[(1, -1)]);
        assert_eq!(
            fw(k, &[(2, 1)]).hurwitz_act(&s1_inv).unwrap(),
            fw(k, &[(1, 1)])
        );
        let s2 = bw(9, &[(2, 1)]);
        assert_eq!(fw(9, &[(5, 1)]).hurwitz_act(&s2).unwrap(), fw(9, &[(5, 1)]));
    }

    #[test]
    fn hurwitz_long_conjugator_example() {
        // u_8 under s_7 s_6^-1 s_5^-1 s_4^-1 s_3^-1 s_2^-1 s_3^-1 s_7^-1
        // lands on u_7 u_2 u_7^-1.
        let b = bw(
            9,
            &[
                (7, 1),
                (6, -1),
                (5, -1),
                (4, -1),
                (3, -1),
                (2, -1),
                (3, -1),
                (7, -1),
            ],
        );
        assert_eq!(
            fw(9, &[(8, 1)]).hurwitz_act(&b).unwrap(),
            fw(9, &[(7, 1), (2, 1), (7, -1)])
        );
    }

    #[test]
    fn hurwitz_requires_matching_strand_counts() {
        let w = fw(3, &[(1, 1)]);
        let b = BraidWord::identity(4);
        assert_eq!(w.hurwitz_act(&b), Err(WordError::StrandMismatch(3, 4)));
    }

    #[test]
    fn artin_image_tabulates_the_action() {
        let id = BraidWord::identity(5);
        let gens: Vec<FreeWord> = (1..=5).map(|g| FreeWord::generator(5, g).unwrap()).collect();
        assert_eq!(id.artin_image(), gens);

        let s1 = bw(2, &[(1, 1)]);
        assert_eq!(
            s1.artin_image(),
            vec![fw(2, &[(2, 1)]), fw(2, &[(2, 1), (1, 1), (2, -1)])]
        );

        let round_trip = bw(6, &[(1, 1), (1, -1)]);
        assert_eq!(round_trip.artin_image(), BraidWord::identity(6).artin_image());
    }

    #[test]
    fn braid_equality_knows_the_relations() {
        assert!(braids_equal(&bw(4, &[(1, 1), (3, 1)]), &bw(4, &[(3, 1), (1, 1)])).unwrap());
        assert!(braids_equal(
            &bw(3, &[(1, 1), (2, 1), (1, 1)]),
            &bw(3, &[(2, 1), (1, 1), (2, 1)])
        )
        .unwrap());
        assert!(!braids_equal(&bw(3, &[(1, 1)]), &bw(3, &[(2, 1)])).unwrap());
        assert!(braids_equal(&bw(3, &[(1, 1)]), &bw(4, &[(1, 1)])).is_err());
    }

    #[test]
    fn alpha_braid_words() {
        assert_eq!(alpha_braid(2, 9).unwrap(), bw(9, &[(2, 1), (1, 1)]));
        assert!(alpha_braid(1, 9).unwrap().is_empty());
        assert_eq!(
            alpha_braid(3, 9).unwrap(),
            bw(9, &[(2, 1), (1, 1), (3, 1), (2, 1)])
        );
        assert!(alpha_braid(9, 9).is_err());
        assert!(alpha_braid(0, 9).is_err());
    }

    #[test]
    fn alpha_braid_sends_the_first_two_generators_up() {
        for k in [3, 5, 9] {
            for s in 2..k {
                let a = alpha_braid(s, k).unwrap();
                assert_eq!(
                    FreeWord::generator(k, 1).unwrap().hurwitz_act(&a).unwrap(),
                    FreeWord::generator(k, s).unwrap(),
                    "u_1^alpha_{s} with k={k}"
                );
                assert_eq!(
                    FreeWord::generator(k, 2).unwrap().hurwitz_act(&a).unwrap(),
                    FreeWord::generator(k, s + 1).unwrap(),
                    "u_2^alpha_{s} with k={k}"
                );
            }
        }
    }

    #[test]
    fn normalize_conjugator_examples() {
        let w = bw(5, &[(3, -1), (2, 1)]);
        assert_eq!(normalize_conjugator(1, &w).unwrap(), w);

        let c = normalize_conjugator(2, &BraidWord::identity(5)).unwrap();
        assert_eq!(c, bw(5, &[(2, 1), (1, 1)]));

        let c = normalize_conjugator(2, &bw(5, &[(1, -1)])).unwrap();
        assert!(braids_equal(&c, &bw(5, &[(2, 1)])).unwrap());
    }

    #[test]
    fn conjugated_braid_examples() {
        assert_eq!(
            conjugated_braid(2, &bw(9, &[(1, -1)])).unwrap(),
            bw(9, &[(1, 1), (2, 1), (1, -1)])
        );
        assert_eq!(
            conjugated_braid(1, &BraidWord::identity(9)).unwrap(),
            bw(9, &[(1, 1)])
        );
        assert_eq!(
            conjugated_braid(7, &BraidWord::identity(9)).unwrap(),
            bw(9, &[(7, 1)])
        );
        assert!(conjugated_braid(9, &BraidWord::identity(9)).is_err());
    }

    #[test]
    fn braid_permutation_composes_leftmost_first() {
        let p = bw(3, &[(1, 1)]).permutation();
        assert_eq!(p.images(), &[2, 1, 3]);
        assert!(bw(3, &[(1, 1), (1, 1)]).permutation().is_identity());
        // s_1 then s_2: 1 -> 2 -> 3, 2 -> 1, 3 -> 2.
        let p = bw(3, &[(1, 1), (2, 1)]).permutation();
        assert_eq!(p.images(), &[3, 1, 2]);
    }

    #[test]
    fn permutation_transposition_detection() {
        let p = bw(4, &[(2, 1)]).permutation();
        assert_eq!(p.as_transposition(), Some((2, 3)));
        assert_eq!(Permutation::identity(4).as_transposition(), None);
        let three_cycle = bw(3, &[(1, 1), (2, 1)]).permutation();
        assert_eq!(three_cycle.as_transposition(), None);
    }

    #[test]
    fn centralizer_generators_commute_with_s1() {
        assert!(centralizer_gens(2).is_err());
        let gens3 = centralizer_gens(3).unwrap();
        assert_eq!(
            gens3,
            vec![bw(3, &[(2, 1), (1, 1), (1, 1), (2, 1)]), bw(3, &[(1, 1)])]
        );
        let gens4 = centralizer_gens(4).unwrap();
        assert_eq!(gens4.len(), 3);
        assert_eq!(gens4[2], bw(4, &[(3, 1)]));
        for k in [3, 4, 7] {
            let s1 = BraidWord::generator(k, 1).unwrap();
            for z in centralizer_gens(k).unwrap() {
                assert!(
                    braids_equal(&z.concat(&s1).unwrap(), &s1.concat(&z).unwrap()).unwrap(),
                    "generator {z} of the centralizer must commute with s_1"
                );
            }
        }
    }

    #[test]
    fn display_is_compact() {
        assert_eq!(fw(9, &[(7, 1), (2, 1), (7, -1)]).to_string(), "u7 u2 u7^-1");
        assert_eq!(BraidWord::identity(3).to_string(), "1");
        assert_eq!(bw(3, &[(2, 1), (1, -1)]).to_string(), "s2 s1^-1");
    }
}
