//! Plain-text layouts: aligned matrix tables with cluster separators,
//! chain and cycle listings, validation and obstruction reports.

use vancycle::{ObstructionReport, SquareIntMatrix, ValidationReport, VanishingBasis, Verdict};

use crate::wire::{ComposedCluster, IndexedMatrix};

/// Right-aligned table. `cuts` lists 0-based positions (exclusive) where
/// group separators go; they apply to columns always and to rows when the
/// table is square.
fn table(cells: &[Vec<String>], cuts: &[usize]) -> String {
    let ncols = cells.iter().map(Vec::len).max().unwrap_or(0);
    let mut widths = vec![0usize; ncols];
    for row in cells {
        for (c, cell) in row.iter().enumerate() {
            widths[c] = widths[c].max(cell.len());
        }
    }
    let square = cells.len() == ncols;
    let mut out = String::new();
    for (r, row) in cells.iter().enumerate() {
        if square && r > 0 && cuts.contains(&r) {
            for (c, w) in widths.iter().enumerate() {
                if c > 0 {
                    out.push('-');
                }
                if cuts.contains(&c) {
                    out.push_str("+-");
                }
                out.push_str(&"-".repeat(*w));
            }
            out.push('\n');
        }
        for (c, cell) in row.iter().enumerate() {
            if c > 0 {
                out.push(' ');
            }
            if cuts.contains(&c) {
                out.push_str("| ");
            }
            out.push_str(&format!("{cell:>width$}", width = widths[c]));
        }
        out.push('\n');
    }
    out
}

fn int_cells(m: &SquareIntMatrix) -> Vec<Vec<String>> {
    m.rows()
        .iter()
        .map(|row| row.iter().map(ToString::to_string).collect())
        .collect()
}

pub fn matrix(m: &SquareIntMatrix, cuts: &[usize]) -> String {
    table(&int_cells(m), cuts)
}

/// A chain as a signed sum of edge classes, `-e1 + e3`.
pub fn chain(coeffs: &[i64]) -> String {
    let mut out = String::new();
    for (idx, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        if out.is_empty() {
            if c < 0 {
                out.push('-');
            }
        } else if c < 0 {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let a = c.unsigned_abs();
        if a != 1 {
            out.push_str(&format!("{a}*"));
        }
        out.push_str(&format!("e{}", idx + 1));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn validation(report: &ValidationReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("critical values  {}\n", report.mu));
    out.push_str(&format!("cycle rank       {}\n", report.cycle_rank));
    out.push_str(&format!(
        "transitive       {}\n",
        if report.transitive { "yes" } else { "no" }
    ));
    let seen: Vec<String> = report
        .transpositions
        .iter()
        .map(|t| match t {
            Some((a, b)) => format!("({a},{b})"),
            None => "-".to_string(),
        })
        .collect();
    out.push_str(&format!("transpositions   {}\n", seen.join(" ")));
    out.push_str(&format!(
        "status           {}\n",
        if report.is_valid() { "ok" } else { "INVALID" }
    ));
    if !report.fatal.is_empty() {
        out.push_str("fatal:\n");
        for item in &report.fatal {
            out.push_str(&format!("  - {item}\n"));
        }
    }
    if !report.warnings.is_empty() {
        out.push_str("warnings:\n");
        for item in &report.warnings {
            out.push_str(&format!("  - {item}\n"));
        }
    }
    out
}

pub fn cycles(basis: &VanishingBasis) -> String {
    let mut out = String::new();
    for (idx, cycle) in basis.cycles().iter().enumerate() {
        if idx > 0 {
            out.push('\n');
        }
        let (a, b) = cycle.transposition;
        out.push_str(&format!("Delta_{}  transposition ({a},{b})\n", idx + 1));
        out.push_str(&format!("  chain  {}\n", chain(cycle.delta.coeffs())));
        out.push_str(&format!("  path   {}\n", cycle.path));
    }
    out
}

pub fn operators(operators: &[IndexedMatrix], cuts: &[usize]) -> String {
    let mut out = String::new();
    for (pos, op) in operators.iter().enumerate() {
        if pos > 0 {
            out.push('\n');
        }
        out.push_str(&format!("M_{}\n", op.index));
        out.push_str(&matrix(&op.matrix, cuts));
    }
    out
}

pub fn compositions(clusters: &[ComposedCluster], cuts: &[usize]) -> String {
    let mut out = String::new();
    for (pos, cluster) in clusters.iter().enumerate() {
        if pos > 0 {
            out.push('\n');
        }
        out.push_str(&format!("cluster {}", cluster.index));
        if let Some(label) = &cluster.label {
            out.push_str(&format!(" ({label})"));
        }
        let ids: Vec<String> = cluster.cycles.iter().map(ToString::to_string).collect();
        out.push_str(&format!("  cycles {}", ids.join(" ")));
        out.push_str(if cluster.block_shape {
            "  block ok\n"
        } else {
            "  BLOCK VIOLATION\n"
        });
        out.push_str(&matrix(&cluster.matrix, cuts));
    }
    out
}

pub fn obstruction(report: &ObstructionReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("size       {}\n", report.n));
    out.push_str(&format!("dimension  {}\n", report.dimension));
    out.push_str(&format!(
        "det        {}\n",
        match &report.det_poly {
            Some(p) => p.to_string(),
            None => "-".to_string(),
        }
    ));
    out.push_str(&format!(
        "verdict    {}\n",
        match report.verdict {
            Verdict::Obstructed => "obstructed",
            Verdict::Inconclusive => "inconclusive",
        }
    ));
    for (idx, basis) in report.basis.iter().enumerate() {
        out.push_str(&format!("\nbasis {}\n", idx + 1));
        out.push_str(&table(&basis.row_strings(), &[]));
    }
    if let Some(witness) = &report.witness {
        let assignments: Vec<String> = witness
            .params
            .iter()
            .enumerate()
            .map(|(i, v)| format!("a{} = {v}", i + 1))
            .collect();
        out.push_str(&format!("\nwitness at {}\n", assignments.join(", ")));
        out.push_str(&table(&witness.matrix.row_strings(), &[]));
    }
    out
}

pub fn family_check(holds: bool, scalar: &str) -> String {
    format!(
        "identity holds  {}\nleading ratio   {scalar}\n",
        if holds { "yes" } else { "no" }
    )
}
