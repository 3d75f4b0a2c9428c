// SPDX-License-Identifier: Apache-2.0

use std::time::Duration;

use maxclique::{max_clique_exact, CliqueError, CliqueResult, Graph, SearchBounds};

use crate::report::{secs, Table};

/// One solver run of an upper-bound sweep.
#[derive(Debug, Clone)]
pub struct SweepRow {
    pub ub: usize,
    pub outcome: Result<CliqueResult, CliqueError>,
}

/// Runs the exact solver once per upper bound. Invalid bounds are recorded
/// in their row and the sweep goes on.
pub fn ub_sweep(g: &Graph, ub_values: &[usize], threads: usize, time_limit: Option<Duration>) -> Vec<SweepRow> {
    ub_values
        .iter()
        .map(|&ub| SweepRow {
            ub,
            outcome: SearchBounds::new(0, Some(ub))
                .map(|b| max_clique_exact(g, &b.with_time_limit(time_limit), threads)),
        })
        .collect()
}

/// `ceil(f * omega)` for `f = 0.1, 0.2, ..., 1.0`, deduplicated.
pub fn fraction_ladder(omega: usize) -> Vec<usize> {
    let mut ubs: Vec<usize> = (1..=10).map(|tenth| (tenth * omega).div_ceil(10).max(1)).collect();
    ubs.dedup();
    ubs
}

pub fn sweep_table(rows: &[SweepRow], omega: Option<usize>) -> Table {
    let mut t = Table::new(["ub", "ub_fraction", "size", "status", "steps", "wall_time", "error"]);
    for row in rows {
        let fraction = omega.map_or(String::new(), |w| format!("{:.4}", row.ub as f64 / w.max(1) as f64));
        let cells = match &row.outcome {
            Ok(r) => vec![
                row.ub.to_string(),
                fraction,
                r.size.to_string(),
                r.status.as_str().to_owned(),
                r.steps.to_string(),
                secs(r.wall_time),
                String::new(),
            ],
            Err(e) => vec![
                row.ub.to_string(),
                fraction,
                String::new(),
                "error".to_owned(),
                String::new(),
                String::new(),
                crate::report::cell(&e.to_string()),
            ],
        };
        t.push(cells);
    }
    t
}
