//! The vanishing-cycle pipeline.
//!
//! Input is a [`MorseData`]: branch-point count `k`, the sheet monodromy
//! of the fiber projection, and one entry `(j_i, conjugator_i)` per
//! critical value describing the braid monodromy loop
//! `∇(γ_i) = conjugator_i^{-1} · s_{j_i} · conjugator_i`, plus a grouping
//! of the critical values into consecutive clusters.
//!
//! For each entry the engine computes the conjugated meridians
//! `u = u_{j_i}^{β_i}` and `v = u_{j_i+1}^{β_i}`, reads the transposition
//! `(a_i, b_i)` off `u`, lifts the vanishing path `v·u` starting on sheet
//! `a_i`, and obtains the vanishing cycle `Δ_i`. Acting on the stored
//! vanishing paths by the braid loops and lifting again yields the
//! Picard-Lefschetz images `Δ_s - n·Δ_i`, hence intersection numbers,
//! operator matrices (column convention), cluster compositions, and the
//! monodromy at infinity.
//!
//! All functions are pure over immutable data, so independent `(s, i)`
//! computations can run concurrently without synchronization.

use crate::braid::{conjugated_braid, BraidWord, FreeWord, Letter, WordError};
use crate::fiber::{lift, word_permutation, ChainClass, FiberError, SheetMonodromy};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MonodromyError {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Fiber(#[from] FiberError),
    #[error("invalid dataset: {0}")]
    Invalid(String),
    #[error("entry {entry}: the conjugated meridian does not act as a transposition")]
    NotTransposition { entry: usize },
    #[error("entry {entry}: the vanishing path does not close at its start sheet")]
    PathNotClosed { entry: usize },
    #[error("entry {entry}: the vanishing cycle is homologically zero")]
    ZeroCycle { entry: usize },
    #[error("transformed path of cycle {s} under loop {i} does not close at its start sheet")]
    TransformedNotClosed { s: usize, i: usize },
    #[error("image of cycle {s} under loop {i} is not on the line delta_{s} - n*delta_{i}")]
    NotOnAffineLine { s: usize, i: usize },
    #[error("cycle index {index} out of range 1..={max}")]
    CycleIndexRange { index: usize, max: usize },
    #[error("cluster index {index} out of range 1..={max}")]
    ClusterIndexRange { index: usize, max: usize },
    #[error("matrix dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("integer overflow in matrix arithmetic")]
    Overflow,
}

/// One critical value of the Morse function: the braid monodromy loop is
/// the conjugate of `s_j` by the conjugator (conjugator acts first after
/// inversion, i.e. the loop is `conjugator^{-1} · s_j · conjugator`).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BraidEntry {
    pub j: usize,
    pub conjugator: BraidWord,
}

/// Serialized form of [`MorseData`].
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MorseDataWire {
    pub k: usize,
    pub sheets: usize,
    pub classical_monodromy: Vec<(usize, usize)>,
    pub braids: Vec<BraidEntryWire>,
    pub clusters: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BraidEntryWire {
    pub j: usize,
    pub conjugator: Vec<Letter>,
}

/// Validated input data for the pipeline.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MorseData {
    sheets: SheetMonodromy,
    braids: Vec<BraidEntry>,
    clusters: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

/// Outcome of validating a dataset. `fatal` violations stop the pipeline;
/// `warnings` do not.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ValidationReport {
    /// Number of braid entries (critical values).
    pub mu: usize,
    /// `k - (N - 1)`, the rank of the cycle group of a connected fiber.
    pub cycle_rank: i64,
    pub transitive: bool,
    /// Computed transposition `(a_i, b_i)` per entry; `None` where the
    /// entry is broken.
    pub transpositions: Vec<Option<(usize, usize)>>,
    pub fatal: Vec<String>,
    pub warnings: Vec<String>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.fatal.is_empty()
    }
}

/// Checks a raw dataset: index ranges, the transposition property of
/// every conjugated meridian, transitivity of the sheet action, and
/// cluster consistency. Collects all violations instead of stopping at
/// the first.
pub fn validate(wire: &MorseDataWire) -> ValidationReport {
    let mut fatal = Vec::new();
    let mut warnings = Vec::new();
    let mu = wire.braids.len();

    if wire.k == 0 {
        fatal.push("k must be positive".to_string());
    }
    if wire.classical_monodromy.len() != wire.k {
        fatal.push(format!(
            "classical_monodromy lists {} transpositions, expected k = {}",
            wire.classical_monodromy.len(),
            wire.k
        ));
    }

    let model = match SheetMonodromy::new(wire.sheets, wire.classical_monodromy.clone()) {
        Ok(m) => Some(m),
        Err(e) => {
            fatal.push(e.to_string());
            None
        }
    };

    let mut entries: Vec<Option<BraidEntry>> = Vec::with_capacity(mu);
    for (idx, raw) in wire.braids.iter().enumerate() {
        let i = idx + 1;
        if raw.j == 0 || raw.j + 1 > wire.k {
            fatal.push(format!(
                "entry {i}: j = {} out of range 1..={}",
                raw.j,
                wire.k.saturating_sub(1)
            ));
            entries.push(None);
            continue;
        }
        match BraidWord::new(wire.k, raw.conjugator.iter().copied()) {
            Ok(conjugator) => entries.push(Some(BraidEntry {
                j: raw.j,
                conjugator,
            })),
            Err(e) => {
                fatal.push(format!("entry {i}: conjugator: {e}"));
                entries.push(None);
            }
        }
    }

    let mut transpositions: Vec<Option<(usize, usize)>> = vec![None; mu];
    if let Some(model) = &model {
        if model.k() == wire.k {
            for (idx, entry) in entries.iter().enumerate() {
                let Some(entry) = entry else { continue };
                let i = idx + 1;
                match conjugated_meridian_transposition(model, entry) {
                    Ok(Some(t)) => transpositions[idx] = Some(t),
                    Ok(None) => fatal.push(format!(
                        "entry {i}: the conjugated meridian does not act as a transposition"
                    )),
                    Err(e) => fatal.push(format!("entry {i}: {e}")),
                }
            }
            if !model.is_transitive() {
                warnings
                    .push("sheet action is not transitive (disconnected fiber)".to_string());
            }
            if mu as i64 != model.cycle_rank() {
                warnings.push(format!(
                    "dataset has {} braid entries but the cycle rank is {}",
                    mu,
                    model.cycle_rank()
                ));
            }
        }
    }

    let flattened: Vec<usize> = wire.clusters.iter().flatten().copied().collect();
    if flattened != (1..=mu).collect::<Vec<usize>>() {
        fatal.push(format!(
            "clusters must partition 1..={mu} into consecutive blocks in order"
        ));
    }
    if let Some(labels) = &wire.labels {
        if labels.len() != wire.clusters.len() {
            fatal.push(format!(
                "{} labels for {} clusters",
                labels.len(),
                wire.clusters.len()
            ));
        }
    }

    let cycle_rank = model.as_ref().map_or(0, SheetMonodromy::cycle_rank);
    let transitive = model.as_ref().is_some_and(SheetMonodromy::is_transitive);
    ValidationReport {
        mu,
        cycle_rank,
        transitive,
        transpositions,
        fatal,
        warnings,
    }
}

fn conjugated_meridian_transposition(
    model: &SheetMonodromy,
    entry: &BraidEntry,
) -> Result<Option<(usize, usize)>, MonodromyError> {
    let k = model.k();
    let u = FreeWord::generator(k, entry.j)?.hurwitz_act(&entry.conjugator)?;
    Ok(word_permutation(model, &u)?.as_transposition())
}

impl MorseData {
    /// Builds and fully validates a dataset from typed parts.
    pub fn new(
        sheets: SheetMonodromy,
        braids: Vec<BraidEntry>,
        clusters: Vec<Vec<usize>>,
        labels: Option<Vec<String>>,
    ) -> Result<Self, MonodromyError> {
        let wire = MorseDataWire {
            k: sheets.k(),
            sheets: sheets.sheets(),
            classical_monodromy: sheets.transpositions().to_vec(),
            braids: braids
                .iter()
                .map(|entry| BraidEntryWire {
                    j: entry.j,
                    conjugator: entry.conjugator.letters().to_vec(),
                })
                .collect(),
            clusters: clusters.clone(),
            labels: labels.clone(),
        };
        let report = validate(&wire);
        if !report.is_valid() {
            return Err(MonodromyError::Invalid(report.fatal.join("; ")));
        }
        Ok(MorseData {
            sheets,
            braids,
            clusters,
            labels,
        })
    }

    pub fn sheets(&self) -> &SheetMonodromy {
        &self.sheets
    }

    pub fn braids(&self) -> &[BraidEntry] {
        &self.braids
    }

    pub fn clusters(&self) -> &[Vec<usize>] {
        &self.clusters
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn k(&self) -> usize {
        self.sheets.k()
    }

    /// Number of critical values (vanishing cycles).
    pub fn mu(&self) -> usize {
        self.braids.len()
    }

    pub fn to_wire(&self) -> MorseDataWire {
        MorseDataWire {
            k: self.k(),
            sheets: self.sheets.sheets(),
            classical_monodromy: self.sheets.transpositions().to_vec(),
            braids: self
                .braids
                .iter()
                .map(|entry| BraidEntryWire {
                    j: entry.j,
                    conjugator: entry.conjugator.letters().to_vec(),
                })
                .collect(),
            clusters: self.clusters.clone(),
            labels: self.labels.clone(),
        }
    }
}

impl TryFrom<MorseDataWire> for MorseData {
    type Error = MonodromyError;

    fn try_from(wire: MorseDataWire) -> Result<Self, MonodromyError> {
        let report = validate(&wire);
        if !report.is_valid() {
            return Err(MonodromyError::Invalid(report.fatal.join("; ")));
        }
        let sheets = SheetMonodromy::new(wire.sheets, wire.classical_monodromy)?;
        let braids = wire
            .braids
            .into_iter()
            .map(|raw| {
                Ok(BraidEntry {
                    j: raw.j,
                    conjugator: BraidWord::new(wire.k, raw.conjugator)?,
                })
            })
            .collect::<Result<Vec<_>, MonodromyError>>()?;
        Ok(MorseData {
            sheets,
            braids,
            clusters: wire.clusters,
            labels: wire.labels,
        })
    }
}

/// One vanishing cycle: the reduced homology class, the sheet
/// transposition of its meridian, and the stored vanishing path.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VanishingCycle {
    pub delta: ChainClass,
    pub transposition: (usize, usize),
    pub path: FreeWord,
}

/// The distinguished basis of vanishing cycles of a dataset.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VanishingBasis {
    cycles: Vec<VanishingCycle>,
}

impl VanishingBasis {
    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn cycles(&self) -> &[VanishingCycle] {
        &self.cycles
    }

    /// The 1-based `i`-th cycle.
    pub fn cycle(&self, i: usize) -> Result<&VanishingCycle, MonodromyError> {
        if i == 0 || i > self.cycles.len() {
            return Err(MonodromyError::CycleIndexRange {
                index: i,
                max: self.cycles.len(),
            });
        }
        Ok(&self.cycles[i - 1])
    }
}

fn vanishing_cycle_at(d: &MorseData, idx: usize) -> Result<VanishingCycle, MonodromyError> {
    let entry = &d.braids[idx];
    let i = idx + 1;
    let k = d.k();
    let u = FreeWord::generator(k, entry.j)?.hurwitz_act(&entry.conjugator)?;
    let v = FreeWord::generator(k, entry.j + 1)?.hurwitz_act(&entry.conjugator)?;
    let (a, b) = word_permutation(d.sheets(), &u)?
        .as_transposition()
        .ok_or(MonodromyError::NotTransposition { entry: i })?;
    // The vanishing path is v·u with v traversed first.
    let path = v.concat(&u)?;
    let res = lift(d.sheets(), &path, a)?;
    if res.end_sheet != a {
        return Err(MonodromyError::PathNotClosed { entry: i });
    }
    if res.chain.is_zero() {
        return Err(MonodromyError::ZeroCycle { entry: i });
    }
    Ok(VanishingCycle {
        delta: res.chain,
        transposition: (a, b),
        path,
    })
}

/// The vanishing cycle of the 1-based entry `i`.
pub fn vanishing_cycle(d: &MorseData, i: usize) -> Result<VanishingCycle, MonodromyError> {
    if i == 0 || i > d.mu() {
        return Err(MonodromyError::CycleIndexRange {
            index: i,
            max: d.mu(),
        });
    }
    vanishing_cycle_at(d, i - 1)
}

/// All vanishing cycles in basis order.
pub fn vanishing_basis(d: &MorseData) -> Result<VanishingBasis, MonodromyError> {
    let cycles = (0..d.mu())
        .map(|idx| vanishing_cycle_at(d, idx))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(VanishingBasis { cycles })
}

fn loop_braid(d: &MorseData, i: usize) -> Result<BraidWord, MonodromyError> {
    let entry = &d.braids[i - 1];
    Ok(conjugated_braid(entry.j, &entry.conjugator)?)
}

/// Solves `image = delta_s - n·delta_i` for the unique integer `n`.
fn solve_line(
    delta_s: &ChainClass,
    delta_i: &ChainClass,
    image: &ChainClass,
    s: usize,
    i: usize,
) -> Result<i64, MonodromyError> {
    let diff = delta_s - image;
    if diff.is_zero() {
        return Ok(0);
    }
    let pivot = delta_i.coeffs().iter().position(|&c| c != 0);
    let Some(g) = pivot else {
        return Err(MonodromyError::NotOnAffineLine { s, i });
    };
    let num = diff.coeffs()[g];
    let den = delta_i.coeffs()[g];
    if num % den != 0 {
        return Err(MonodromyError::NotOnAffineLine { s, i });
    }
    let n = num / den;
    if diff != delta_i.scaled(n) {
        return Err(MonodromyError::NotOnAffineLine { s, i });
    }
    Ok(n)
}

fn pl_image_with(
    d: &MorseData,
    basis: &VanishingBasis,
    s: usize,
    i: usize,
) -> Result<(ChainClass, i64), MonodromyError> {
    let source = basis.cycle(s)?;
    let acting = basis.cycle(i)?;
    let transformed = source.path.hurwitz_act(&loop_braid(d, i)?)?;
    let a_s = source.transposition.0;
    let res = lift(d.sheets(), &transformed, a_s)?;
    if res.end_sheet != a_s {
        return Err(MonodromyError::TransformedNotClosed { s, i });
    }
    let n = solve_line(&source.delta, &acting.delta, &res.chain, s, i)?;
    Ok((res.chain, n))
}

/// The Picard-Lefschetz image of the `s`-th vanishing cycle under the
/// monodromy of the `i`-th critical value (both 1-based). The result is
/// guaranteed to equal `Δ_s - n·Δ_i` for an integer `n`; inputs that
/// break the guarantee are rejected.
pub fn pl_image(d: &MorseData, s: usize, i: usize) -> Result<ChainClass, MonodromyError> {
    let basis = vanishing_basis(d)?;
    Ok(pl_image_with(d, &basis, s, i)?.0)
}

/// The intersection number `(Δ_s, Δ_i)`: the unique integer `n` with
/// `pl_image(s, i) = Δ_s - n·Δ_i`, solved exactly over the integers.
pub fn intersection_number(d: &MorseData, s: usize, i: usize) -> Result<i64, MonodromyError> {
    let basis = vanishing_basis(d)?;
    Ok(pl_image_with(d, &basis, s, i)?.1)
}

/// A square matrix of exact integers, row-major.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<i64>>", into = "Vec<Vec<i64>>")]
pub struct SquareIntMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl SquareIntMatrix {
    pub fn identity(n: usize) -> Self {
        let mut m = SquareIntMatrix {
            n,
            entries: vec![0; n * n],
        };
        for i in 0..n {
            m.entries[i * n + i] = 1;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self, MonodromyError> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in &rows {
            if row.len() != n {
                return Err(MonodromyError::DimensionMismatch(row.len(), n));
            }
            entries.extend_from_slice(row);
        }
        Ok(SquareIntMatrix { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry at 0-based row `r`, column `c`.
    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.entries[r * self.n + c]
    }

    fn set(&mut self, r: usize, c: usize, v: i64) {
        self.entries[r * self.n + c] = v;
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|r| self.entries[r * self.n..(r + 1) * self.n].to_vec())
            .collect()
    }

    /// Matrix product `self · rhs` with overflow checking.
    pub fn mul(&self, rhs: &SquareIntMatrix) -> Result<SquareIntMatrix, MonodromyError> {
        if self.n != rhs.n {
            return Err(MonodromyError::DimensionMismatch(self.n, rhs.n));
        }
        let n = self.n;
        let mut out = SquareIntMatrix {
            n,
            entries: vec![0; n * n],
        };
        for r in 0..n {
            for c in 0..n {
                let mut acc: i64 = 0;
                for x in 0..n {
                    let prod = self
                        .get(r, x)
                        .checked_mul(rhs.get(x, c))
                        .ok_or(MonodromyError::Overflow)?;
                    acc = acc.checked_add(prod).ok_or(MonodromyError::Overflow)?;
                }
                out.set(r, c, acc);
            }
        }
        Ok(out)
    }

    /// Exact determinant by fraction-free elimination.
    pub fn det(&self) -> Result<i64, MonodromyError> {
        let n = self.n;
        if n == 0 {
            return Ok(1);
        }
        let mut m: Vec<i128> = self.entries.iter().map(|&x| x as i128).collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for p in 0..n - 1 {
            if m[p * n + p] == 0 {
                let swap = (p + 1..n).find(|&r| m[r * n + p] != 0);
                let Some(r) = swap else { return Ok(0) };
                for c in 0..n {
                    m.swap(p * n + c, r * n + c);
                }
                sign = -sign;
            }
            for r in p + 1..n {
                for c in p + 1..n {
                    let num = m[r * n + c]
                        .checked_mul(m[p * n + p])
                        .and_then(|x| x.checked_sub(m[r * n + p].checked_mul(m[p * n + c])?))
                        .ok_or(MonodromyError::Overflow)?;
                    m[r * n + c] = num / prev;
                }
                m[r * n + p] = 0;
            }
            prev = m[p * n + p];
        }
        let det = sign * m[(n - 1) * n + (n - 1)];
        i64::try_from(det).map_err(|_| MonodromyError::Overflow)
    }
}

impl TryFrom<Vec<Vec<i64>>> for SquareIntMatrix {
    type Error = String;
    fn try_from(rows: Vec<Vec<i64>>) -> Result<Self, String> {
        SquareIntMatrix::from_rows(rows).map_err(|e| e.to_string())
    }
}

impl From<SquareIntMatrix> for Vec<Vec<i64>> {
    fn from(m: SquareIntMatrix) -> Vec<Vec<i64>> {
        m.rows()
    }
}

/// The full intersection matrix: the entry in row `j`, column `i`
/// (1-based) is `(Δ_i, Δ_j)`. It has zero diagonal and is antisymmetric.
pub fn intersection_matrix(d: &MorseData) -> Result<SquareIntMatrix, MonodromyError> {
    let basis = vanishing_basis(d)?;
    let mu = basis.len();
    let mut m = SquareIntMatrix {
        n: mu,
        entries: vec![0; mu * mu],
    };
    for row in 1..=mu {
        for col in 1..=mu {
            // (delta_col, delta_row) is the n of the image of cycle `col`
            // under the loop of `row`.
            let (_, n) = pl_image_with(d, &basis, col, row)?;
            m.set(row - 1, col - 1, n);
        }
    }
    Ok(m)
}

/// The Picard-Lefschetz operator of the 1-based critical value `i` in the
/// distinguished basis, column convention: column `s` holds the
/// coordinates of `pl_image(s, i)`, i.e. `M_i = I - e_i ⊗ (row i of the
/// intersection matrix)`. Its determinant is 1.
pub fn pl_matrix(d: &MorseData, i: usize) -> Result<SquareIntMatrix, MonodromyError> {
    let inter = intersection_matrix(d)?;
    pl_matrix_from(&inter, i)
}

fn pl_matrix_from(inter: &SquareIntMatrix, i: usize) -> Result<SquareIntMatrix, MonodromyError> {
    let mu = inter.n();
    if i == 0 || i > mu {
        return Err(MonodromyError::CycleIndexRange { index: i, max: mu });
    }
    let mut m = SquareIntMatrix::identity(mu);
    for col in 0..mu {
        let id = i64::from(i - 1 == col);
        m.set(i - 1, col, id - inter.get(i - 1, col));
    }
    Ok(m)
}

/// The homological monodromy of the 1-based cluster `c`: the product
/// `M_{i_1}·M_{i_2}·…·M_{i_m}` over the cluster's entries in increasing
/// order (column-vector convention).
pub fn compose_cluster(d: &MorseData, c: usize) -> Result<SquareIntMatrix, MonodromyError> {
    if c == 0 || c > d.clusters.len() {
        return Err(MonodromyError::ClusterIndexRange {
            index: c,
            max: d.clusters.len(),
        });
    }
    let inter = intersection_matrix(d)?;
    let mut acc = SquareIntMatrix::identity(d.mu());
    for &i in &d.clusters[c - 1] {
        acc = acc.mul(&pl_matrix_from(&inter, i)?)?;
    }
    Ok(acc)
}

/// The monodromy at infinity: the ordered product `M_1·M_2·…·M_μ` of all
/// Picard-Lefschetz operators (equivalently, of the cluster compositions
/// in order).
pub fn monodromy_at_infinity(d: &MorseData) -> Result<SquareIntMatrix, MonodromyError> {
    let inter = intersection_matrix(d)?;
    let mut acc = SquareIntMatrix::identity(d.mu());
    for i in 1..=d.mu() {
        acc = acc.mul(&pl_matrix_from(&inter, i)?)?;
    }
    Ok(acc)
}

/// Checks the block shape of a composed operator: every row outside the
/// 1-based cluster `c` must agree with the identity matrix.
pub fn block_check(
    m: &SquareIntMatrix,
    clusters: &[Vec<usize>],
    c: usize,
) -> Result<bool, MonodromyError> {
    if c == 0 || c > clusters.len() {
        return Err(MonodromyError::ClusterIndexRange {
            index: c,
            max: clusters.len(),
        });
    }
    let active = &clusters[c - 1];
    for row in 1..=m.n() {
        if active.contains(&row) {
            continue;
        }
        for col in 1..=m.n() {
            let expected = i64::from(row == col);
            if m.get(row - 1, col - 1) != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The stabilizer shortcut: if the braid loop of `i` fixes the vanishing
/// path of `s` as a reduced word, the intersection number is 0 with no
/// lifting needed; otherwise nothing is concluded.
pub fn stabilizer_shortcut(
    d: &MorseData,
    s: usize,
    i: usize,
) -> Result<Option<i64>, MonodromyError> {
    let basis = vanishing_basis(d)?;
    let source = basis.cycle(s)?;
    if i == 0 || i > d.mu() {
        return Err(MonodromyError::CycleIndexRange {
            index: i,
            max: d.mu(),
        });
    }
    let transformed = source.path.hurwitz_act(&loop_braid(d, i)?)?;
    Ok((transformed == source.path).then_some(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wire(
        k: usize,
        sheets: usize,
        cmon: &[(usize, usize)],
        braids: &[(usize, &[(usize, i8)])],
        clusters: &[&[usize]],
    ) -> MorseDataWire {
        MorseDataWire {
            k,
            sheets,
            classical_monodromy: cmon.to_vec(),
            braids: braids
                .iter()
                .map(|&(j, conj)| BraidEntryWire {
                    j,
                    conjugator: conj.iter().map(|&(g, e)| Letter(g, e)).collect(),
                })
                .collect(),
            clusters: clusters.iter().map(|c| c.to_vec()).collect(),
            labels: None,
        }
    }

    /// Minimal one-node dataset: two branch points of a double cover,
    /// one critical value.
    fn single_node() -> MorseData {
        MorseData::try_from(wire(
            2,
            2,
            &[(1, 2), (1, 2)],
            &[(1, &[])],
            &[&[1]],
        ))
        .unwrap()
    }

    #[test]
    fn validation_accepts_the_node() {
        let report = validate(&single_node().to_wire());
        assert!(report.is_valid());
        assert_eq!(report.mu, 1);
        assert_eq!(report.cycle_rank, 1);
        assert_eq!(report.transpositions, vec![Some((1, 2))]);
        assert!(report.warnings.is_empty());
    }

    #[test]
    fn validation_collects_fatal_violations() {
        let w = wire(2, 2, &[(1, 2), (1, 2)], &[(2, &[]), (1, &[(5, 1)])], &[]);
        let report = validate(&w);
        assert!(!report.is_valid());
        assert_eq!(report.fatal.len(), 3);
        assert!(report.fatal[0].contains("j = 2 out of range"));
        assert!(report.fatal[1].contains("conjugator"));
        assert!(report.fatal[2].contains("clusters"));
        assert!(MorseData::try_from(w).is_err());
    }

    #[test]
    fn validation_warns_on_disconnected_fiber() {
        let w = wire(2, 4, &[(1, 2), (3, 4)], &[], &[]);
        let report = validate(&w);
        assert!(report.is_valid());
        assert!(!report.transitive);
        assert!(report.warnings.iter().any(|m| m.contains("not transitive")));
    }

    #[test]
    fn node_vanishing_cycle() {
        let d = single_node();
        let c = vanishing_cycle(&d, 1).unwrap();
        assert_eq!(c.transposition, (1, 2));
        assert_eq!(c.delta.coeffs(), &[-1, 1]);
        assert_eq!(c.path.to_string(), "u2 u1");
        assert!(vanishing_cycle(&d, 2).is_err());
    }

    #[test]
    fn node_pipeline_matrices() {
        let d = single_node();
        let inter = intersection_matrix(&d).unwrap();
        assert_eq!(inter.rows(), vec![vec![0]]);
        assert_eq!(pl_matrix(&d, 1).unwrap().rows(), vec![vec![1]]);
        assert_eq!(compose_cluster(&d, 1).unwrap().rows(), vec![vec![1]]);
        assert_eq!(monodromy_at_infinity(&d).unwrap().rows(), vec![vec![1]]);
        assert_eq!(intersection_number(&d, 1, 1).unwrap(), 0);
        assert_eq!(stabilizer_shortcut(&d, 1, 1).unwrap(), Some(0));
    }

    #[test]
    fn empty_dataset_gives_identity_monodromy() {
        let d = MorseData::try_from(wire(2, 2, &[(1, 2), (1, 2)], &[], &[])).unwrap();
        assert_eq!(d.mu(), 0);
        assert!(vanishing_basis(&d).unwrap().is_empty());
        let m = monodromy_at_infinity(&d).unwrap();
        assert_eq!(m.n(), 0);
    }

    #[test]
    fn mismatched_meridians_are_rejected() {
        // m(u) = (1,2) but m(v) = (1,3): the vanishing path cannot close.
        let w = wire(2, 3, &[(1, 2), (1, 3)], &[(1, &[])], &[&[1]]);
        let d = MorseData::try_from(w).unwrap();
        assert_eq!(
            vanishing_cycle(&d, 1),
            Err(MonodromyError::PathNotClosed { entry: 1 })
        );
    }

    #[test]
    fn matrix_arithmetic() {
        let a = SquareIntMatrix::from_rows(vec![vec![1, 2], vec![0, 1]]).unwrap();
        let b = SquareIntMatrix::from_rows(vec![vec![1, 0], vec![3, 1]]).unwrap();
        assert_eq!(a.mul(&b).unwrap().rows(), vec![vec![7, 2], vec![3, 1]]);
        assert_eq!(a.det().unwrap(), 1);
        let c = SquareIntMatrix::from_rows(vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(c.det().unwrap(), -1);
        let d = SquareIntMatrix::from_rows(vec![
            vec![2, 0, 1],
            vec![1, 1, 0],
            vec![0, 3, 1],
        ])
        .unwrap();
        assert_eq!(d.det().unwrap(), 5);
        assert_eq!(SquareIntMatrix::identity(0).det().unwrap(), 1);
    }

    #[test]
    fn matrix_serde_round_trip() {
        let m = SquareIntMatrix::from_rows(vec![vec![0, -1], vec![1, 0]]).unwrap();
        let json = serde_json::to_string(&m).unwrap();
        assert_eq!(json, "[[0,-1],[1,0]]");
        let back: SquareIntMatrix = serde_json::from_str(&json).unwrap();
        assert_eq!(back, m);
        assert!(serde_json::from_str::<SquareIntMatrix>("[[1,2],[3]]").is_err());
    }

    #[test]
    fn block_check_identity_is_always_true() {
        let id = SquareIntMatrix::identity(4);
        let clusters = vec![vec![1, 2], vec![3, 4]];
        assert!(block_check(&id, &clusters, 1).unwrap());
        assert!(block_check(&id, &clusters, 2).unwrap());
        assert!(block_check(&id, &clusters, 3).is_err());
    }
}
