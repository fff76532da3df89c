//! Plain-text edge lists.
//!
//! ```text
//! # comment
//! vertex z
//! a b
//! ```

use super::{Digraph, DigraphError};

pub fn parse_digraph(text: &str) -> Result<Digraph, DigraphError> {
    let mut g = Digraph::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens.as_slice() {
            ["vertex", name] => {
                g.add_vertex(name);
            }
            ["vertex", ..] => {
                return Err(DigraphError::Parse { line, message: "expected `vertex <name>`".into() });
            }
            [u, v] => {
                if u == v {
                    return Err(DigraphError::Loop(u.to_string()));
                }
                g.add_named_edge(u, v)?;
            }
            _ => {
                return Err(DigraphError::Parse { line, message: format!("expected `<u> <v>`, got `{content}`") });
            }
        }
    }
    Ok(g)
}

/// Every vertex as a `vertex` line (fixing the order), then every edge.
pub fn serialize(g: &Digraph) -> String {
    let mut out = String::new();
    for name in g.names() {
        out.push_str("vertex ");
        out.push_str(name);
        out.push('\n');
    }
    for (u, v) in g.edges() {
        out.push_str(g.name(u));
        out.push(' ');
        out.push_str(g.name(v));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{gen_family, Family};

    #[test]
    fn basic_documents() {
        let g = parse_digraph("a b\nb c").unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (3, 2));
        assert!(matches!(parse_digraph("a a"), Err(DigraphError::Loop(_))));
        let g = parse_digraph("# comment\nvertex z\na b").unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (3, 1));
        for name in ["a", "b", "z"] {
            assert!(g.vertex(name).is_ok());
        }
    }

    #[test]
    fn malformed_lines_report_numbers() {
        assert_eq!(
            parse_digraph("a b\n\nx y z").unwrap_err(),
            DigraphError::Parse { line: 3, message: "expected `<u> <v>`, got `x y z`".into() }
        );
        assert!(matches!(parse_digraph("vertex"), Err(DigraphError::Parse { line: 1, .. })));
        assert!(matches!(parse_digraph("lonely"), Err(DigraphError::Parse { line: 1, .. })));
    }

    #[test]
    fn duplicate_edges_are_idempotent() {
        let g = parse_digraph("a b\na b\n").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn round_trip() {
        for t in 2..5 {
            let g = gen_family(Family::Euler, t).unwrap();
            assert_eq!(parse_digraph(&serialize(&g)).unwrap(), g);
        }
        let mut g = Digraph::new();
        g.add_vertex("iso");
        g.add_named_edge("q", "p").unwrap();
        assert_eq!(parse_digraph(&serialize(&g)).unwrap(), g);
    }
}
