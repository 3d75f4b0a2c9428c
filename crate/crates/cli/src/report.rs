// SPDX-License-Identifier: Apache-2.0

use std::io::{self, Write};
use std::time::Duration;

/// A header plus rows, rendered as CSV or as an aligned text table.
#[derive(Debug, Clone, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Self {
        Table {
            header: header.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn write(&self, out: &mut dyn Write, pretty: bool) -> io::Result<()> {
        if pretty {
            self.write_pretty(out)
        } else {
            self.write_csv(out)
        }
    }

    pub fn write_csv(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(out, "{}", self.header.join(","))?;
        for row in &self.rows {
            writeln!(out, "{}", row.join(","))?;
        }
        Ok(())
    }

    /// One `key value` line per column for a single row, aligned columns
    /// otherwise.
    pub fn write_pretty(&self, out: &mut dyn Write) -> io::Result<()> {
        if let [row] = self.rows.as_slice() {
            let width = self.header.iter().map(|h| h.len()).max().unwrap_or(0);
            for (h, v) in self.header.iter().zip(row) {
                writeln!(out, "{h:<width$}  {v}")?;
            }
            return Ok(());
        }
        let mut widths: Vec<usize> = self.header.iter().map(|h| h.len()).collect();
        for row in &self.rows {
            for (w, v) in widths.iter_mut().zip(row) {
                *w = (*w).max(v.len());
            }
        }
        let line = |cells: &[String]| {
            cells
                .iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{c:>w$}"))
                .collect::<Vec<_>>()
                .join("  ")
        };
        writeln!(out, "{}", line(&self.header))?;
        for row in &self.rows {
            writeln!(out, "{}", line(row))?;
        }
        Ok(())
    }
}

pub fn secs(d: Duration) -> String {
    format!("{:.6}", d.as_secs_f64())
}

/// CSV-safe cell.
pub fn cell(s: &str) -> String {
    s.replace([',', '\n', '\r'], "_")
}
