use super::{Graph, GraphError};
use crate::vertex_set::MAX_VERTICES;

/// Parses whitespace-separated `u v` pairs, one per line.
///
/// Blank lines and lines starting with `#` are skipped. The vertex count is
/// one more than the largest id that appears.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut edges = Vec::new();
    let mut max_id: Option<usize> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fail = |reason: String| GraphError::EdgeList {
            line: line_no,
            reason,
        };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(fail(format!("expected two vertex ids, found {}", tokens.len())));
        }
        let mut ids = [0usize; 2];
        for (slot, tok) in ids.iter_mut().zip(&tokens) {
            if tok.starts_with('-') {
                return Err(fail(format!("negative vertex id {tok}")));
            }
            *slot = tok
                .parse::<usize>()
                .map_err(|_| fail(format!("invalid vertex id {tok:?}")))?;
            if *slot >= MAX_VERTICES {
                return Err(fail(format!("vertex id {slot} exceeds capacity {MAX_VERTICES}")));
            }
        }
        let [u, v] = ids;
        if u == v {
            return Err(fail(format!("self-loop at vertex {u}")));
        }
        max_id = Some(max_id.map_or(u.max(v), |m| m.max(u).max(v)));
        edges.push((u, v));
    }
    let n = max_id.map(|m| m + 1).ok_or(GraphError::Empty)?;
    Graph::from_edges(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_examples() {
        assert_eq!(parse_edge_list("0 1\n1 2").unwrap(), Graph::path(3));
        assert_eq!(parse_edge_list("0 1\n1 0").unwrap(), Graph::complete(2));
        let g = parse_edge_list("0 2").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.degree(1), 0);
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = parse_edge_list("# triangle\n\n0 1\n1 2\n 2 0 \n").unwrap();
        assert_eq!(g, Graph::complete(3));
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(
            parse_edge_list("0 1\n-1 2"),
            Err(GraphError::EdgeList {
                line: 2,
                reason: "negative vertex id -1".into()
            })
        );
        assert!(matches!(
            parse_edge_list("0 1\n\n3 3"),
            Err(GraphError::EdgeList { line: 3, .. })
        ));
        assert!(matches!(
            parse_edge_list("0 1 2"),
            Err(GraphError::EdgeList { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("0 x"),
            Err(GraphError::EdgeList { line: 1, .. })
        ));
        assert_eq!(parse_edge_list("\n# nothing\n"), Err(GraphError::Empty));
    }
}
