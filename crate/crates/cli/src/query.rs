use hashlist_core::VertexId;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Query {
    /// `C x y`: is `(x, y)` an edge?
    Contains(VertexId, VertexId),
    /// `N x`: out-neighbors of `x`.
    Neighbors(VertexId),
}

/// A query with the 1-based line it came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LocatedQuery {
    pub line: usize,
    pub query: Query,
}

/// Parses a query file. Blank lines and `#` comments produce no query and
/// no result line. Errors are `(line, message)`.
pub fn parse_queries(text: &str) -> Result<Vec<LocatedQuery>, (usize, String)> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let text = raw.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = text.split_whitespace().collect();
        let vertex = |s: &str| -> Result<VertexId, (usize, String)> {
            s.parse()
                .map_err(|e| (line, format!("bad vertex `{s}`: {e}")))
        };
        let query = match fields[..] {
            ["C", x, y] => Query::Contains(vertex(x)?, vertex(y)?),
            ["N", x] => Query::Neighbors(vertex(x)?),
            _ => return Err((line, format!("expected `C x y` or `N x`, got `{text}`"))),
        };
        out.push(LocatedQuery { line, query });
    }
    Ok(out)
}
