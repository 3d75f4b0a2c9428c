// SPDX-License-Identifier: Apache-2.0

//! Line-oriented edge-list readers.
//!
//! Data lines carry at least two tokens separated by whitespace and/or
//! commas. Lines whose first non-blank character is `#` or `%` are comments.
//! Any token past the ones a reader needs (weights, extra attributes) is
//! ignored.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::io::BufRead;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: expected at least {expected} tokens, found {found}")]
    TooFewTokens { line: usize, expected: usize, found: usize },
    #[error("line {line}: invalid timestamp {token:?}")]
    BadTimestamp { line: usize, token: String },
    #[error("line {line}: invalid column index {column}")]
    BadColumn { line: usize, column: usize },
    #[error("too many distinct vertex labels (limit is {})", u32::MAX)]
    TooManyVertices,
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Edge-list dialect.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Dialect {
    /// Matrix Market when the first line is a `%%MatrixMarket` banner,
    /// plain otherwise.
    #[default]
    Auto,
    /// One edge per data line.
    Plain,
    /// Coordinate Matrix Market: the first data line is the size header and
    /// is skipped.
    MatrixMarket,
}

/// Compare two labels numerically when both are integers, lexically
/// otherwise. Integers sort before non-integers.
pub fn label_cmp(a: &str, b: &str) -> Ordering {
    match (a.parse::<i128>(), b.parse::<i128>()) {
        (Ok(x), Ok(y)) => x.cmp(&y).then_with(|| a.cmp(b)),
        (Ok(_), Err(_)) => Ordering::Less,
        (Err(_), Ok(_)) => Ordering::Greater,
        (Err(_), Err(_)) => a.cmp(b),
    }
}

/// Maps arbitrary string labels to dense ids in first-seen order.
#[derive(Debug, Default, Clone)]
pub struct Interner {
    ids: HashMap<String, u32>,
    labels: Vec<String>,
}

impl Interner {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn intern(&mut self, label: &str) -> Result<u32, ParseError> {
        if let Some(&id) = self.ids.get(label) {
            return Ok(id);
        }
        let id = u32::try_from(self.labels.len()).map_err(|_| ParseError::TooManyVertices)?;
        self.ids.insert(label.to_owned(), id);
        self.labels.push(label.to_owned());
        Ok(id)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn into_labels(self) -> Vec<String> {
        self.labels
    }
}

/// Sorts `labels` with [`label_cmp`] and returns `(sorted_labels, remap)`
/// where `remap[old_id]` is the id of that label in sorted order.
pub(crate) fn sort_labels(labels: Vec<String>) -> (Vec<String>, Vec<u32>) {
    let mut order: Vec<u32> = (0..labels.len() as u32).collect();
    order.sort_by(|&a, &b| label_cmp(&labels[a as usize], &labels[b as usize]));
    let mut remap = vec![0u32; labels.len()];
    for (new, &old) in order.iter().enumerate() {
        remap[old as usize] = new as u32;
    }
    let mut slots: Vec<Option<String>> = labels.into_iter().map(Some).collect();
    let sorted = order
        .iter()
        .map(|&old| slots[old as usize].take().expect("each label moved once"))
        .collect();
    (sorted, remap)
}

pub(crate) fn split_tokens(line: &str) -> impl Iterator<Item = &str> {
    line.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
}

pub(crate) fn is_comment_or_blank(line: &str) -> bool {
    let t = line.trim_start();
    t.is_empty() || t.starts_with('#') || t.starts_with('%')
}

/// Edges exactly as parsed: input order and multiplicity are preserved.
///
/// Endpoints are interned label ids; `labels[id]` recovers the text.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EdgeList {
    pub labels: Vec<String>,
    pub edges: Vec<(u32, u32)>,
    pub directed: bool,
}

impl EdgeList {
    /// Builds an edge list from label pairs.
    pub fn from_pairs<S: AsRef<str>>(pairs: &[(S, S)], directed: bool) -> Self {
        let mut interner = Interner::new();
        let edges = pairs
            .iter()
            .map(|(a, b)| {
                (
                    interner.intern(a.as_ref()).expect("label count fits in u32"),
                    interner.intern(b.as_ref()).expect("label count fits in u32"),
                )
            })
            .collect();
        EdgeList {
            labels: interner.into_labels(),
            edges,
            directed,
        }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn label_pairs(&self) -> impl Iterator<Item = (&str, &str)> + '_ {
        self.edges
            .iter()
            .map(|&(a, b)| (self.labels[a as usize].as_str(), self.labels[b as usize].as_str()))
    }
}

/// Reads an edge list. Tokens after the second on each line are discarded.
pub fn parse_edge_list<R: BufRead>(reader: R, dialect: Dialect, directed: bool) -> Result<EdgeList, ParseError> {
    let mut interner = Interner::new();
    let mut edges = Vec::new();
    let mut skip_header = dialect == Dialect::MatrixMarket;
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        if idx == 0 && dialect == Dialect::Auto && line.starts_with("%%MatrixMarket") {
            skip_header = true;
        }
        if is_comment_or_blank(&line) {
            continue;
        }
        if skip_header {
            skip_header = false;
            continue;
        }
        let mut tokens = split_tokens(&line);
        match (tokens.next(), tokens.next()) {
            (Some(a), Some(b)) => {
                let u = interner.intern(a)?;
                let v = interner.intern(b)?;
                edges.push((u, v));
            }
            (first, _) => {
                return Err(ParseError::TooFewTokens {
                    line: lineno,
                    expected: 2,
                    found: usize::from(first.is_some()),
                })
            }
        }
    }
    Ok(EdgeList {
        labels: interner.into_labels(),
        edges,
        directed,
    })
}

pub fn parse_edge_list_str(text: &str, directed: bool) -> Result<EdgeList, ParseError> {
    parse_edge_list(text.as_bytes(), Dialect::Auto, directed)
}
