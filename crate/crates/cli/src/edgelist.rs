use hashlist_core::{VertexId, Weight};

/// Parsed edge list: an `n m` header, then up to `m` lines of `x y [weight]`.
/// Lines whose first non-blank character is `#` and blank lines are skipped.
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeList {
    pub n: u32,
    pub m: usize,
    pub edges: Vec<(VertexId, VertexId, Option<Weight>)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EdgeListError {
    Syntax { line: usize, msg: String },
    Range { line: usize, vertex: u64, n: u32 },
}

impl EdgeList {
    pub fn has_weights(&self) -> bool {
        self.edges.iter().any(|e| e.2.is_some())
    }

    pub fn parse(text: &str) -> Result<EdgeList, EdgeListError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let syntax = |line: usize, msg: String| EdgeListError::Syntax { line, msg };
        let (hline, header) = lines
            .next()
            .ok_or_else(|| syntax(1, "missing `n m` header".into()))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        let [n, m] = fields[..] else {
            return Err(syntax(
                hline,
                format!("header must be `n m`, got `{header}`"),
            ));
        };
        let n: u32 = n
            .parse()
            .map_err(|e| syntax(hline, format!("bad vertex count `{n}`: {e}")))?;
        let m: usize = m
            .parse()
            .map_err(|e| syntax(hline, format!("bad edge count `{m}`: {e}")))?;
        if n == 0 {
            return Err(syntax(hline, "vertex count must be positive".into()));
        }

        let mut edges = Vec::with_capacity(m);
        for (line, text) in lines {
            if edges.len() == m {
                return Err(syntax(
                    line,
                    format!("more than the {m} edge lines the header declares"),
                ));
            }
            let fields: Vec<&str> = text.split_whitespace().collect();
            let (xs, ys, ws) = match fields[..] {
                [x, y] => (x, y, None),
                [x, y, w] => (x, y, Some(w)),
                _ => {
                    return Err(syntax(
                        line,
                        format!("expected `x y [weight]`, got `{text}`"),
                    ))
                }
            };
            let vertex = |s: &str| -> Result<VertexId, EdgeListError> {
                let v: u64 = s
                    .parse()
                    .map_err(|e| syntax(line, format!("bad vertex `{s}`: {e}")))?;
                if v >= u64::from(n) {
                    return Err(EdgeListError::Range { line, vertex: v, n });
                }
                Ok(v as VertexId)
            };
            let (x, y) = (vertex(xs)?, vertex(ys)?);
            let w = ws
                .map(|w| {
                    w.parse::<Weight>()
                        .map_err(|e| syntax(line, format!("bad weight `{w}`: {e}")))
                })
                .transpose()?;
            edges.push((x, y, w));
        }
        Ok(EdgeList { n, m, edges })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_weights() {
        let g = EdgeList::parse("# demo\n3 3\n0 1\n\n# mid\n1 2 2.5\n0 1\n").unwrap();
        assert_eq!(g.n, 3);
        assert_eq!(g.m, 3);
        assert_eq!(g.edges, vec![(0, 1, None), (1, 2, Some(2.5)), (0, 1, None)]);
        assert!(g.has_weights());
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = |s: &str| EdgeList::parse(s).unwrap_err();
        assert!(matches!(err(""), EdgeListError::Syntax { line: 1, .. }));
        assert!(matches!(err("3\n"), EdgeListError::Syntax { line: 1, .. }));
        assert!(matches!(
            err("0 1\n"),
            EdgeListError::Syntax { line: 1, .. }
        ));
        assert!(matches!(
            err("3 2\n0 1\n# c\n0 x\n"),
            EdgeListError::Syntax { line: 4, .. }
        ));
        assert!(matches!(
            err("3 1\n0 1\n1 2\n"),
            EdgeListError::Syntax { line: 3, .. }
        ));
        assert!(matches!(
            err("3 1\n0 1 2 3\n"),
            EdgeListError::Syntax { line: 2, .. }
        ));
        assert!(matches!(
            err("3 1\n0 1 heavy\n"),
            EdgeListError::Syntax { line: 2, .. }
        ));
        assert!(matches!(
            err("3 1\n-1 1\n"),
            EdgeListError::Syntax { line: 2, .. }
        ));
        assert_eq!(
            err("3 1\n0 3\n"),
            EdgeListError::Range {
                line: 2,
                vertex: 3,
                n: 3
            }
        );
        assert_eq!(
            err("3 1\n99999999999 0\n"),
            EdgeListError::Range {
                line: 2,
                vertex: 99_999_999_999,
                n: 3
            }
        );
    }
}
