//! The shading table of matroid h-vectors (rows `n`, columns `h_2` from
//! `C(n-1,2)` down to `0`), the partition table, and an independent
//! generator that shades the table by cone (down) and partial-star
//! (diagonal) moves.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::classification::{is_matroid_hvector, MembershipMode};
use crate::complex::HVector;
use crate::numbers::binomial;
use crate::partition::{partitions_of, Partition};

fn top(n: usize) -> i64 {
    binomial(n as u64 - 1, 2) as i64
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table1Cell {
    pub h2: i64,
    pub matroid: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table1Row {
    pub n: usize,
    pub cells: Vec<Table1Cell>,
}

impl Table1Row {
    pub fn shaded(&self) -> Vec<i64> {
        self.cells.iter().filter(|c| c.matroid).map(|c| c.h2).collect()
    }

    pub fn unshaded(&self) -> Vec<i64> {
        self.cells.iter().filter(|c| !c.matroid).map(|c| c.h2).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table1 {
    pub rows: Vec<Table1Row>,
}

impl Table1 {
    fn from_predicate(max_n: usize, mut shaded: impl FnMut(usize, i64) -> bool) -> Self {
        let rows = (2..=max_n)
            .map(|n| Table1Row {
                n,
                cells: (0..=top(n)).rev().map(|h2| Table1Cell { h2, matroid: shaded(n, h2) }).collect(),
            })
            .collect();
        Table1 { rows }
    }

    pub fn row(&self, n: usize) -> Option<&Table1Row> {
        self.rows.iter().find(|r| r.n == n)
    }

    /// One row per line, `*` marking matroid h-vectors.
    pub fn to_text(&self) -> String {
        let mut out = String::from(" n | h2\n");
        for row in &self.rows {
            let cells: Vec<String> =
                row.cells.iter().map(|c| format!("{}{}", c.h2, if c.matroid { "*" } else { "" })).collect();
            writeln!(out, "{:>2} | {}", row.n, cells.join(" ")).unwrap();
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,h1,h2,matroid\n");
        for row in &self.rows {
            for c in &row.cells {
                writeln!(out, "{},{},{},{}", row.n, row.n - 2, c.h2, c.matroid).unwrap();
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("table serialises")
    }
}

/// Shading by closed-form membership, rows `2..=max_n`.
pub fn table1(max_n: usize) -> Table1 {
    Table1::from_predicate(max_n, |n, h2| {
        let h = HVector::new(vec![1, n as i64 - 2, h2]).expect("h_0 = 1");
        is_matroid_hvector(&h, MembershipMode::Closed).expect("well-formed").is_matroid
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum MoveKind {
    Empty,
    /// The `0` of every row: cones over independent sets.
    Zeros,
    /// Repeated straight-down moves (`C_1`) until nothing changes.
    DownClosure,
    /// Partial-star arcs from the cell `(n, h2)`.
    Diagonal {
        n: usize,
        h2: i64,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MoveStep {
    pub kind: MoveKind,
    /// Newly shaded `(n, h2)` cells.
    pub added: Vec<(usize, i64)>,
    /// Full shading after this step.
    pub table: Table1,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MoveTrace {
    pub steps: Vec<MoveStep>,
}

impl MoveTrace {
    pub fn final_table(&self) -> &Table1 {
        &self.steps.last().expect("trace always has steps").table
    }
}

/// Shade rows `2..=max_n` using only moves on the table. The first step
/// shades nothing (the empty table); then zeros; then the down closure;
/// then, scanning rows top to bottom and each row left to right, every
/// cell that is `0` or sits directly below a shaded cell starts diagonal
/// arcs. Steps that add nothing are not recorded. Scans and down closures
/// repeat until the shading is stable.
pub fn shade_by_moves(max_n: usize) -> MoveTrace {
    let mut shaded: BTreeSet<(usize, i64)> = BTreeSet::new();
    let snapshot = |s: &BTreeSet<(usize, i64)>| Table1::from_predicate(max_n, |n, h2| s.contains(&(n, h2)));
    let mut steps = vec![MoveStep { kind: MoveKind::Empty, added: Vec::new(), table: snapshot(&shaded) }];

    let zeros: Vec<(usize, i64)> = (2..=max_n).map(|n| (n, 0)).collect();
    shaded.extend(zeros.iter().copied());
    steps.push(MoveStep { kind: MoveKind::Zeros, added: zeros, table: snapshot(&shaded) });

    let down_closure = |s: &mut BTreeSet<(usize, i64)>| -> Vec<(usize, i64)> {
        let mut added = Vec::new();
        for n in 2..max_n {
            let row: Vec<i64> = s.range((n, i64::MIN)..=(n, i64::MAX)).map(|&(_, h2)| h2).collect();
            for h2 in row {
                // (1, m, h2) -> (1, m+1, h2+m+1) with m = n-2
                let below = (n + 1, h2 + n as i64 - 1);
                if s.insert(below) {
                    added.push(below);
                }
            }
        }
        added.sort();
        added
    };

    let added = down_closure(&mut shaded);
    steps.push(MoveStep { kind: MoveKind::DownClosure, added, table: snapshot(&shaded) });

    loop {
        let mut changed = false;
        for n in 2..max_n {
            for h2 in (0..=top(n)).rev() {
                let startable =
                    shaded.contains(&(n, h2)) && (h2 == 0 || (n > 2 && shaded.contains(&(n - 1, h2 - (n as i64 - 2)))));
                if !startable {
                    continue;
                }
                // S^k adds k vertices and k·m edges: (1, m, h2) -> (1, m+k, h2 + k·m)
                let m = n as i64 - 2;
                let mut added = Vec::new();
                for k in 1..=(max_n - n) {
                    let cell = (n + k, h2 + k as i64 * m);
                    if shaded.insert(cell) {
                        added.push(cell);
                    }
                }
                if !added.is_empty() {
                    changed = true;
                    steps.push(MoveStep { kind: MoveKind::Diagonal { n, h2 }, added, table: snapshot(&shaded) });
                }
            }
        }
        let added = down_closure(&mut shaded);
        if !added.is_empty() {
            changed = true;
            steps.push(MoveStep { kind: MoveKind::DownClosure, added, table: snapshot(&shaded) });
        }
        if !changed {
            break;
        }
    }
    MoveTrace { steps }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table2Cell {
    pub h2: i64,
    /// Reverse-lexicographic; empty for non-matroid h-vectors.
    pub partitions: Vec<Partition>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table2Row {
    pub n: usize,
    pub cells: Vec<Table2Cell>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table2 {
    pub rows: Vec<Table2Row>,
}

/// For each row `n` and each `h_2`, the partitions `λ ⊢ n` with `ℓ(λ) ≥ 2`
/// whose class has that h-vector.
pub fn table2(max_n: usize) -> Table2 {
    let rows = (2..=max_n)
        .map(|n| {
            let t = top(n);
            let mut cells: Vec<Table2Cell> =
                (0..=t).rev().map(|h2| Table2Cell { h2, partitions: Vec::new() }).collect();
            for lam in partitions_of(n).filter(|l| l.len() >= 2) {
                let h2 = t - lam.weight2() as i64;
                cells[(t - h2) as usize].partitions.push(lam);
            }
            Table2Row { n, cells }
        })
        .collect();
    Table2 { rows }
}

impl Table2 {
    /// Cells separated by ` | `, shared cells by ` / `, empty cells `--`.
    pub fn to_text(&self) -> String {
        let mut out = String::from(" n | partitions by h2, descending\n");
        for row in &self.rows {
            let cells: Vec<String> = row
                .cells
                .iter()
                .map(|c| {
                    if c.partitions.is_empty() {
                        "--".to_string()
                    } else {
                        c.partitions.iter().map(Partition::compact).collect::<Vec<_>>().join(" / ")
                    }
                })
                .collect();
            writeln!(out, "{:>2} | {}", row.n, cells.join(" | ")).unwrap();
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,h1,h2,partitions\n");
        for row in &self.rows {
            for c in &row.cells {
                let parts: Vec<String> = c.partitions.iter().map(|p| p.to_string()).collect();
                writeln!(out, "{},{},{},{}", row.n, row.n - 2, c.h2, parts.join(";")).unwrap();
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("table serialises")
    }
}
