//! JSON envelopes for command output and the operator-pairs input file.

use serde::{Deserialize, Serialize};
use vancycle::{Letter, SquareIntMatrix, VanishingBasis};

#[derive(Serialize)]
pub struct ErrorReport {
    pub error: String,
}

#[derive(Serialize)]
pub struct CycleList {
    pub cycles: Vec<CycleWire>,
}

#[derive(Serialize)]
pub struct CycleWire {
    pub index: usize,
    pub transposition: (usize, usize),
    pub path: Vec<Letter>,
    pub delta: Vec<i64>,
}

#[derive(Serialize)]
pub struct MatrixReport {
    pub matrix: SquareIntMatrix,
}

#[derive(Serialize)]
pub struct IndexedMatrix {
    pub index: usize,
    pub matrix: SquareIntMatrix,
}

#[derive(Serialize)]
pub struct OperatorList {
    pub operators: Vec<IndexedMatrix>,
}

#[derive(Serialize)]
pub struct ComposedCluster {
    pub index: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub cycles: Vec<usize>,
    pub block_shape: bool,
    pub matrix: SquareIntMatrix,
}

#[derive(Serialize)]
pub struct ClusterList {
    pub clusters: Vec<ComposedCluster>,
}

/// Input for `obstruct -i`: a list of operator pairs `(A, B)` to
/// intertwine simultaneously, `P·B = A·P`.
#[derive(Serialize, Deserialize)]
pub struct PairsFile {
    pub pairs: Vec<PairWire>,
}

#[derive(Serialize, Deserialize)]
pub struct PairWire {
    pub plus: SquareIntMatrix,
    pub minus: SquareIntMatrix,
}

#[derive(Serialize)]
pub struct FamilyCheck {
    pub holds: bool,
    pub scalar: String,
}

pub fn cycles(basis: &VanishingBasis) -> Vec<CycleWire> {
    basis
        .cycles()
        .iter()
        .enumerate()
        .map(|(idx, cycle)| CycleWire {
            index: idx + 1,
            transposition: cycle.transposition,
            path: cycle.path.letters().to_vec(),
            delta: cycle.delta.coeffs().to_vec(),
        })
        .collect()
}
