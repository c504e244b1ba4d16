//! The intertwiner obstruction on the two pinned operator pairs: the
//! solution space of `P·B = A·P` is two-dimensional, contains the pinned
//! rank-one family, and consists entirely of singular matrices.

mod common;

use common::{rows, H0_MINUS, H0_PLUS, H1_MINUS, H1_PLUS};
use num_rational::BigRational;
use num_traits::{One, Zero};
use vancycle::{
    conjugation_space, equivalence_verdict, general_element, parametric_det, RatMatrix,
    SquareIntMatrix, Verdict,
};

fn pinned_pairs() -> Vec<(SquareIntMatrix, SquareIntMatrix)> {
    let m = |t: &[[i64; 6]; 6]| SquareIntMatrix::from_rows(rows(t)).unwrap();
    vec![
        (m(&H0_PLUS), m(&H0_MINUS)),
        (m(&H1_PLUS), m(&H1_MINUS)),
    ]
}

/// The intertwiner family printed for these operators: rows are spanned
/// by two parameters `a`, `b`, and columns 1, 2, 5 vanish.
fn p_ab(a: i64, b: i64) -> SquareIntMatrix {
    let r = |x: i64| [0, 0, x, x, 0, x];
    SquareIntMatrix::from_rows(vec![
        r(a).to_vec(),
        r(-a).to_vec(),
        r(a + b).to_vec(),
        r(b).to_vec(),
        r(-b).to_vec(),
        r(a + b).to_vec(),
    ])
    .unwrap()
}

fn flatten(m: &RatMatrix) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(m.rows() * m.cols());
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            out.push(m.get(r, c).clone());
        }
    }
    out
}

/// Exact rank of a column-major list of rational vectors.
fn rank(columns: &[Vec<BigRational>]) -> usize {
    if columns.is_empty() {
        return 0;
    }
    let rows = columns[0].len();
    let mut m: Vec<Vec<BigRational>> = (0..rows)
        .map(|r| columns.iter().map(|c| c[r].clone()).collect())
        .collect();
    let mut rank = 0;
    for col in 0..columns.len() {
        let Some(pivot) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = m[rank][col].clone();
        for x in &mut m[rank] {
            *x /= inv.clone();
        }
        let pivot_row = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let f = row[col].clone();
                for (cell, p) in row.iter_mut().zip(&pivot_row) {
                    *cell -= f.clone() * p.clone();
                }
            }
        }
        rank += 1;
    }
    rank
}

#[test]
fn solution_space_has_dimension_two() {
    let basis = conjugation_space(&pinned_pairs()).unwrap();
    assert_eq!(basis.len(), 2);
}

#[test]
fn pinned_family_solves_the_system_and_spans() {
    let pairs = pinned_pairs();
    let basis = conjugation_space(&pairs).unwrap();
    let base_cols: Vec<Vec<BigRational>> = basis.iter().map(flatten).collect();
    assert_eq!(rank(&base_cols), 2);
    for (a, b) in [(1, 0), (0, 1), (2, 3)] {
        let p = RatMatrix::from_int(&p_ab(a, b));
        for (lhs, rhs) in &pairs {
            let left = p.mul(&RatMatrix::from_int(rhs));
            let right = RatMatrix::from_int(lhs).mul(&p);
            assert_eq!(left, right, "P({a},{b}) fails the intertwiner equation");
        }
        let mut cols = base_cols.clone();
        cols.push(flatten(&p));
        assert_eq!(rank(&cols), 2, "P({a},{b}) falls outside the computed span");
    }
}

#[test]
fn every_intertwiner_is_singular() {
    let basis = conjugation_space(&pinned_pairs()).unwrap();
    let det = parametric_det(&general_element(&basis).unwrap()).unwrap();
    assert!(det.is_zero());
    let one = BigRational::one();
    assert_eq!(
        det.eval(&[one.clone(), one]).unwrap(),
        BigRational::zero()
    );
}

#[test]
fn verdict_is_obstructed_with_full_report() {
    let report = equivalence_verdict(&pinned_pairs()).unwrap();
    assert_eq!(report.n, 6);
    assert_eq!(report.dimension, 2);
    assert_eq!(report.basis.len(), 2);
    assert!(report.det_poly.as_ref().is_some_and(|d| d.is_zero()));
    assert_eq!(report.verdict, Verdict::Obstructed);
    assert!(report.witness.is_none());
}

#[test]
fn pinned_family_members_have_zero_determinant() {
    for (a, b) in [(1, 0), (0, 1), (5, -7)] {
        assert_eq!(p_ab(a, b).det().unwrap(), 0);
    }
}
