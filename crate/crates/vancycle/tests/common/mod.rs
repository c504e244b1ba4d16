//! Shared fixtures: the two bundled 9-branch-point datasets and the
//! matrices they must reproduce.

// Each integration test binary compiles this module separately and uses
// its own subset of the fixtures.
#![allow(dead_code)]

use vancycle::{BraidEntry, BraidWord, Letter, MorseData, SheetMonodromy};

pub const I_FPLUS: [[i64; 6]; 6] = [
    [0, 0, -1, 1, 1, 1],
    [0, 0, -1, 0, 0, 1],
    [1, 1, 0, 0, 0, 0],
    [-1, 0, 0, 0, 1, 1],
    [-1, 0, 0, -1, 0, 1],
    [-1, -1, 0, -1, -1, 0],
];

pub const I_FMINUS: [[i64; 6]; 6] = [
    [0, 0, -1, 1, 0, 0],
    [0, 0, 0, -1, -2, -1],
    [1, 0, 0, 0, 0, 0],
    [-1, 1, 0, 0, 1, 1],
    [0, 2, 0, -1, 0, 1],
    [0, 1, 0, -1, -1, 0],
];

pub const H0_PLUS: [[i64; 6]; 6] = [
    [1, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0],
    [-1, -1, 1, 0, 0, 0],
    [0, 0, 0, 0, -1, 0],
    [0, -1, 0, 0, 0, -1],
    [1, 1, 0, 1, 1, 1],
];

pub const H1_PLUS: [[i64; 6]; 6] = [
    [1, 0, 1, -1, -1, -1],
    [0, 1, 1, 0, 0, -1],
    [0, 0, 1, 0, 0, 0],
    [0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 1],
];

pub const H0_MINUS: [[i64; 6]; 6] = [
    [1, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0],
    [-1, 0, 1, 0, 0, 0],
    [1, 1, 0, 0, -1, 0],
    [0, -1, 0, 0, 0, -1],
    [0, -1, 0, 1, 1, 1],
];

pub const H1_MINUS: [[i64; 6]; 6] = [
    [1, 0, 1, -1, 0, 0],
    [0, 1, 0, 1, 2, 1],
    [0, 0, 1, 0, 0, 0],
    [0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 1],
];

fn entry(k: usize, j: usize, letters: &[(usize, i8)]) -> BraidEntry {
    let conjugator = BraidWord::new(k, letters.iter().map(|&(g, e)| Letter(g, e)))
        .expect("fixture conjugator");
    BraidEntry { j, conjugator }
}

fn dataset(
    sheets: usize,
    cmon: &[(usize, usize)],
    braids: &[(usize, &[(usize, i8)])],
) -> MorseData {
    let k = cmon.len();
    let model = SheetMonodromy::new(sheets, cmon.to_vec()).expect("fixture sheet monodromy");
    let entries = braids.iter().map(|&(j, w)| entry(k, j, w)).collect();
    MorseData::new(
        model,
        entries,
        vec![vec![1, 2], vec![3, 4, 5, 6]],
        Some(vec!["t1".to_string(), "t0".to_string()]),
    )
    .expect("fixture dataset")
}

/// Morsification data of the first bundled curve: 9 branch points on 4
/// sheets, 6 critical values in clusters {1,2} and {3,4,5,6}.
pub fn fplus() -> MorseData {
    dataset(
        4,
        &[
            (1, 3),
            (2, 3),
            (1, 3),
            (1, 2),
            (1, 4),
            (1, 4),
            (1, 3),
            (2, 3),
            (1, 2),
        ],
        &[
            (2, &[(1, -1)]),
            (2, &[(3, -1)]),
            (
                8,
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
            ),
            (
                5,
                &[
                    (6, 1),
                    (4, -1),
                    (3, -1),
                    (4, 1),
                    (7, 1),
                    (6, -1),
                    (2, -1),
                    (3, 1),
                    (1, -1),
                    (2, 1),
                    (5, -1),
                    (4, -1),
                    (3, -1),
                    (2, -1),
                    (3, -1),
                    (7, -1),
                ],
            ),
            (
                5,
                &[
                    (6, 1),
                    (4, 1),
                    (7, 1),
                    (6, -1),
                    (3, 1),
                    (2, 1),
                    (5, -1),
                    (4, -1),
                    (3, -1),
                    (2, -1),
                    (3, -1),
                    (7, -1),
                ],
            ),
            (
                6,
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
            ),
        ],
    )
}

/// Morsification data of the second bundled curve, the Galois conjugate
/// of the first.
pub fn fminus() -> MorseData {
    dataset(
        4,
        &[
            (3, 4),
            (3, 4),
            (1, 2),
            (2, 4),
            (3, 4),
            (2, 4),
            (1, 4),
            (1, 4),
            (2, 3),
        ],
        &[
            (2, &[(3, 1), (5, 1), (4, 1), (6, 1), (3, 1)]),
            (
                8,
                &[
                    (7, -1),
                    (8, 1),
                    (7, 1),
                    (6, 1),
                    (7, -1),
                    (5, 1),
                    (4, 1),
                    (5, 1),
                    (6, 1),
                    (3, 1),
                ],
            ),
            (1, &[]),
            (4, &[(5, 1), (6, 1), (3, 1)]),
            (4, &[(5, -1), (6, -1), (5, -1), (3, 1), (3, 1)]),
            (7, &[]),
        ],
    )
}

pub fn rows(m: &[[i64; 6]; 6]) -> Vec<Vec<i64>> {
    m.iter().map(|r| r.to_vec()).collect()
}
