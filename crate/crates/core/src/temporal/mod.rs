// SPDX-License-Identifier: Apache-2.0

//! Timestamped contact networks and their largest temporal strong components.
//!
//! A temporal path follows contacts in strictly increasing time. Two vertices
//! are strongly connected when temporal paths run both ways, and the largest
//! set of pairwise strongly connected vertices is a maximum clique of the
//! strong reachability graph.

mod reach;
mod tscc;

use std::io::BufRead;

use crate::graph::{Graph, VertexId};
use crate::parse::{is_comment_or_blank, sort_labels, split_tokens, Interner, ParseError};

pub use reach::{reach, strong_reachability, ReachabilityGraph};
pub use tscc::{max_tscc, TsccResult};

/// A contact from `source` to `target` at `time`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TemporalEdge {
    pub source: VertexId,
    pub target: VertexId,
    pub time: f64,
}

/// Contacts sorted by ascending time. Self-loops are never stored.
///
/// When `directed` is false every contact also runs from `target` to
/// `source` at the same instant.
#[derive(Debug, Clone, PartialEq)]
pub struct TemporalGraph {
    labels: Vec<String>,
    edges: Vec<TemporalEdge>,
    directed: bool,
}

impl TemporalGraph {
    /// # Panics
    /// If an endpoint is out of range or a time is not finite.
    pub fn new(labels: Vec<String>, edges: impl IntoIterator<Item = TemporalEdge>, directed: bool) -> Self {
        let n = labels.len();
        let mut edges: Vec<TemporalEdge> = edges
            .into_iter()
            .filter(|e| e.source != e.target)
            .inspect(|e| {
                assert!(
                    (e.source as usize) < n && (e.target as usize) < n,
                    "endpoint out of range"
                );
                assert!(e.time.is_finite(), "non-finite timestamp");
            })
            .collect();
        edges.sort_by(|a, b| a.time.total_cmp(&b.time));
        TemporalGraph {
            labels,
            edges,
            directed,
        }
    }

    /// Vertices labelled `0..n`.
    pub fn from_contacts(n: usize, contacts: &[(VertexId, VertexId, f64)], directed: bool) -> Self {
        let labels = (0..n).map(|i| i.to_string()).collect();
        let edges = contacts
            .iter()
            .map(|&(source, target, time)| TemporalEdge { source, target, time });
        Self::new(labels, edges, directed)
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    /// Stored contacts (one per input line for undirected data).
    pub fn edges(&self) -> &[TemporalEdge] {
        &self.edges
    }

    pub fn directed(&self) -> bool {
        self.directed
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v as usize]
    }

    /// Directed arcs `(from, to, time)`, both directions for undirected
    /// contacts, in ascending time.
    pub fn arcs(&self) -> impl Iterator<Item = (VertexId, VertexId, f64)> + '_ {
        let both = !self.directed;
        self.edges.iter().flat_map(move |e| {
            let fwd = std::iter::once((e.source, e.target, e.time));
            let back = both.then_some((e.target, e.source, e.time));
            fwd.chain(back)
        })
    }

    /// The graph of contacts with time and direction dropped.
    pub fn static_graph(&self) -> Graph {
        Graph::from_edges_with_labels(
            self.labels.clone(),
            self.edges.iter().map(|e| (e.source, e.target)).collect::<Vec<_>>(),
        )
    }
}

/// Zero-based token positions of a temporal edge-list line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TemporalColumns {
    pub source: usize,
    pub target: usize,
    pub time: usize,
}

impl Default for TemporalColumns {
    fn default() -> Self {
        TemporalColumns {
            source: 0,
            target: 1,
            time: 2,
        }
    }
}

impl TemporalColumns {
    /// `time source target`, the layout of the SocioPatterns contact lists.
    pub fn time_first() -> Self {
        TemporalColumns {
            source: 1,
            target: 2,
            time: 0,
        }
    }

    fn width(&self) -> usize {
        self.source.max(self.target).max(self.time) + 1
    }

    fn distinct(&self) -> bool {
        self.source != self.target && self.source != self.time && self.target != self.time
    }
}

/// Reads `source target time` lines. See [`parse_temporal_edge_list_with`].
pub fn parse_temporal_edge_list<R: BufRead>(reader: R, directed: bool) -> Result<TemporalGraph, ParseError> {
    parse_temporal_edge_list_with(reader, directed, TemporalColumns::default())
}

/// Reads a temporal edge list with the given column layout. Comment syntax
/// matches the static reader; tokens outside the layout are ignored.
pub fn parse_temporal_edge_list_with<R: BufRead>(
    reader: R,
    directed: bool,
    columns: TemporalColumns,
) -> Result<TemporalGraph, ParseError> {
    if !columns.distinct() {
        return Err(ParseError::BadColumn {
            line: 0,
            column: columns.time,
        });
    }
    let width = columns.width();
    let mut interner = Interner::new();
    let mut raw = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        if is_comment_or_blank(&line) {
            continue;
        }
        let tokens: Vec<&str> = split_tokens(&line).collect();
        if tokens.len() < width {
            return Err(ParseError::TooFewTokens {
                line: idx + 1,
                expected: width,
                found: tokens.len(),
            });
        }
        let token = tokens[columns.time];
        let time: f64 = token
            .parse()
            .ok()
            .filter(|t: &f64| t.is_finite())
            .ok_or_else(|| ParseError::BadTimestamp {
                line: idx + 1,
                token: token.to_owned(),
            })?;
        let u = interner.intern(tokens[columns.source])?;
        let v = interner.intern(tokens[columns.target])?;
        raw.push((u, v, time));
    }
    let (labels, remap) = sort_labels(interner.into_labels());
    let edges = raw.into_iter().map(|(u, v, time)| TemporalEdge {
        source: remap[u as usize],
        target: remap[v as usize],
        time,
    });
    Ok(TemporalGraph::new(labels, edges, directed))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_contacts() {
        let tg = parse_temporal_edge_list("a b 1\nb c 2\n".as_bytes(), true).unwrap();
        assert_eq!(tg.n(), 3);
        assert_eq!(tg.edges().len(), 2);
        assert_eq!(tg.arcs().count(), 2);
    }

    #[test]
    fn self_loop_dropped() {
        let tg = parse_temporal_edge_list("a a 5\n".as_bytes(), false).unwrap();
        assert_eq!(tg.edges().len(), 0);
        assert_eq!(tg.n(), 1);
    }

    #[test]
    fn undirected_contacts_expand_to_two_arcs() {
        let tg = parse_temporal_edge_list("1,2,10\n".as_bytes(), false).unwrap();
        let arcs: Vec<_> = tg.arcs().collect();
        assert_eq!(arcs, [(0, 1, 10.0), (1, 0, 10.0)]);
    }

    #[test]
    fn sorted_by_time() {
        let tg = parse_temporal_edge_list("% c\nx y 3.5\ny z 1e0\n# c\nz x 2\n".as_bytes(), true).unwrap();
        let times: Vec<f64> = tg.edges().iter().map(|e| e.time).collect();
        assert_eq!(times, [1.0, 2.0, 3.5]);
    }

    #[test]
    fn bad_timestamp() {
        let err = parse_temporal_edge_list("a b 1\na b noon\n".as_bytes(), true).unwrap_err();
        assert!(matches!(err, ParseError::BadTimestamp { line: 2, .. }), "{err:?}");
        let err = parse_temporal_edge_list("a b nan\n".as_bytes(), true).unwrap_err();
        assert!(matches!(err, ParseError::BadTimestamp { line: 1, .. }));
    }

    #[test]
    fn missing_timestamp() {
        let err = parse_temporal_edge_list("a b\n".as_bytes(), true).unwrap_err();
        assert!(matches!(
            err,
            ParseError::TooFewTokens {
                line: 1,
                expected: 3,
                found: 2
            }
        ));
    }

    #[test]
    fn custom_columns() {
        let cols = TemporalColumns {
            time: 3,
            ..TemporalColumns::default()
        };
        let tg = parse_temporal_edge_list_with("a b 1 100\nb c 1 50\n".as_bytes(), true, cols).unwrap();
        assert_eq!(tg.edges()[0].time, 50.0);

        let tg = parse_temporal_edge_list_with("20 7 9\n".as_bytes(), true, TemporalColumns::time_first()).unwrap();
        assert_eq!(tg.edges()[0].time, 20.0);
        assert_eq!(tg.labels(), ["7", "9"]);

        let clash = TemporalColumns {
            time: 1,
            ..TemporalColumns::default()
        };
        assert!(parse_temporal_edge_list_with("a b 1\n".as_bytes(), true, clash).is_err());
    }
}
