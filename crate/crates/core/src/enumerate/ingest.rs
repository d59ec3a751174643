//! Reading external graph6 corpora.
//!
//! Isomorph-freeness of an ingested corpus is the supplier's responsibility;
//! nothing here deduplicates.

use std::io::BufRead;

use serde::{Deserialize, Serialize};

use super::Filters;
use crate::graph::{parse_graph6, Graph, GraphOptions};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IngestError {
    /// 1-based line number.
    pub line: usize,
    pub message: String,
}

/// One item per nonblank line: the parsed graph, or an error record for that
/// line. Graphs rejected by `filters` are skipped; reading continues past bad
/// lines.
pub fn ingest_graph6<R: BufRead>(
    reader: R,
    filters: Filters,
    opts: GraphOptions,
) -> impl Iterator<Item = Result<Graph, IngestError>> {
    reader.lines().enumerate().filter_map(move |(i, line)| {
        let line = match line {
            Ok(l) => l,
            Err(e) => return Some(Err(IngestError { line: i + 1, message: e.to_string() })),
        };
        let text = line.trim();
        if text.is_empty() {
            return None;
        }
        match parse_graph6(text, &opts) {
            Ok(g) if filters.accepts(&g) => Some(Ok(g)),
            Ok(_) => None,
            Err(e) => Some(Err(IngestError { line: i + 1, message: e.to_string() })),
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::gen_n;
    use crate::graph::emit_graph6;

    #[test]
    fn reads_good_lines_and_reports_bad_ones() {
        let mut text = String::new();
        for i in 1..=4 {
            text.push_str(&emit_graph6(&gen_n(i).unwrap().graph));
            text.push('\n');
        }
        text.push_str("garbage\n\n");
        text.push_str(&emit_graph6(&gen_n(1).unwrap().graph));
        let items: Vec<_> =
            ingest_graph6(text.as_bytes(), Filters::default(), GraphOptions::default()).collect();
        assert_eq!(items.len(), 6);
        assert_eq!(items.iter().filter(|r| r.is_ok()).count(), 5);
        assert_eq!(items[4].as_ref().unwrap_err().line, 5);
    }
}
