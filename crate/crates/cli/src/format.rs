//! The `.smg` semigraph format and the `.qmat` matrix format.
//!
//! ```text
//! # five-edge example
//! n 9
//! e 1 2 3 4 5
//! e 1 6 8
//! ```
//!
//! Vertex labels are 1-based. A `.qmat` file has an `n <count>` header and
//! `n` rows of `n` entries; entries are non-negative integers, `1/4`, `1/2`,
//! `0.25` or `0.5`. `#` starts a comment in both formats.

use semigraph::{MatrixError, QScalar, Semigraph, SemigraphError, SymMatrix};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}{}: {message}", col.map(|c| format!(", column {c}")).unwrap_or_default())]
    Syntax {
        line: usize,
        col: Option<usize>,
        message: String,
    },
    #[error("line {line}: vertex {label} is out of range 1..={n}")]
    VertexOutOfRange { line: usize, label: usize, n: usize },
    #[error("{}: {source}", describe_lines(lines))]
    Structure {
        lines: Vec<usize>,
        source: SemigraphError,
    },
    #[error("line {line}, column {col}: {token:?} is not a legal entry (0, 1/4, 1/2 or a positive integer)")]
    IllegalEntry {
        line: usize,
        col: usize,
        token: String,
    },
    #[error("entry ({row}, {col}) is {upper} but ({col}, {row}) is {lower}")]
    AsymmetricInput {
        row: usize,
        col: usize,
        upper: QScalar,
        lower: QScalar,
    },
    #[error("diagonal entry ({index}, {index}) is {value}, expected 0")]
    NonzeroDiagonal { index: usize, value: QScalar },
}

impl FormatError {
    /// Syntax problems are usage errors; the rest describe invalid content.
    pub fn is_syntax(&self) -> bool {
        matches!(self, FormatError::Syntax { .. })
    }
}

fn describe_lines(lines: &[usize]) -> String {
    match lines {
        [] => "input".to_string(),
        [one] => format!("line {one}"),
        many => {
            let s: Vec<String> = many.iter().map(|l| l.to_string()).collect();
            format!("lines {}", s.join(" and "))
        }
    }
}

fn syntax(line: usize, col: Option<usize>, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        col,
        message: message.into(),
    }
}

/// Non-comment, non-blank lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn parse_header<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
) -> Result<(usize, usize), FormatError> {
    let Some((line, text)) = lines.next() else {
        return Err(syntax(1, None, "missing `n <count>` header"));
    };
    let mut tokens = text.split_whitespace();
    if tokens.next() != Some("n") {
        return Err(syntax(line, Some(1), "expected `n <count>` header"));
    }
    let count = tokens
        .next()
        .and_then(|t| t.parse::<usize>().ok())
        .filter(|&c| c >= 1)
        .ok_or_else(|| syntax(line, Some(2), "vertex count must be a positive integer"))?;
    if tokens.next().is_some() {
        return Err(syntax(line, Some(3), "unexpected token after vertex count"));
    }
    Ok((line, count))
}

pub fn parse_smg(text: &str) -> Result<Semigraph, FormatError> {
    let mut lines = content_lines(text);
    let (_, n) = parse_header(&mut lines)?;
    let mut edges = Vec::new();
    let mut edge_lines = Vec::new();
    for (line, content) in lines {
        let mut tokens = content.split_whitespace();
        match tokens.next() {
            Some("e") => {}
            Some("n") => return Err(syntax(line, Some(1), "repeated `n` header")),
            Some(other) => {
                return Err(syntax(
                    line,
                    Some(1),
                    format!("expected `e`, found {other:?}"),
                ))
            }
            None => unreachable!("blank lines are skipped"),
        }
        let mut edge = Vec::new();
        for (k, tok) in tokens.enumerate() {
            let label = tok
                .parse::<usize>()
                .ok()
                .filter(|&v| v >= 1)
                .ok_or_else(|| {
                    syntax(
                        line,
                        Some(k + 2),
                        format!("{tok:?} is not a vertex label (1, 2, ...)"),
                    )
                })?;
            if label > n {
                return Err(FormatError::VertexOutOfRange { line, label, n });
            }
            edge.push(label - 1);
        }
        edges.push(edge);
        edge_lines.push(line);
    }
    Semigraph::new(n, edges).map_err(|source| FormatError::Structure {
        lines: source
            .edge_positions()
            .into_iter()
            .map(|e| edge_lines[e])
            .collect(),
        source,
    })
}

/// Canonical text: edges in canonical orientation, sorted.
pub fn emit_smg(g: &Semigraph) -> String {
    let mut out = format!("n {}\n", g.vertex_count());
    for e in g.edges() {
        let labels: Vec<String> = e.vertices().iter().map(|v| (v + 1).to_string()).collect();
        out.push_str(&format!("e {}\n", labels.join(" ")));
    }
    out
}

/// An exact non-negative rational from `a`, `a/b` or a decimal `a.b`.
fn parse_number(tok: &str) -> Option<(i64, i64)> {
    if let Some((a, b)) = tok.split_once('/') {
        let (a, b) = (a.parse::<i64>().ok()?, b.parse::<i64>().ok()?);
        return (b != 0).then_some((a, b));
    }
    if let Some((int, frac)) = tok.split_once('.') {
        if frac.is_empty() || frac.len() > 12 || !frac.bytes().all(|c| c.is_ascii_digit()) {
            return None;
        }
        let negative = int.starts_with('-');
        let int = if int.is_empty() || int == "-" {
            0
        } else {
            int.parse::<i64>().ok()?
        };
        let den = 10i64.pow(frac.len() as u32);
        let f = frac.parse::<i64>().ok()?;
        let num = int.abs().checked_mul(den)?.checked_add(f)?;
        return Some((if negative { -num } else { num }, den));
    }
    tok.parse::<i64>().ok().map(|a| (a, 1))
}

fn parse_entry(tok: &str, line: usize, col: usize) -> Result<QScalar, FormatError> {
    let (num, den) = parse_number(tok)
        .ok_or_else(|| syntax(line, Some(col), format!("{tok:?} is not a number")))?;
    let illegal = || FormatError::IllegalEntry {
        line,
        col,
        token: tok.to_string(),
    };
    let scaled = num.checked_mul(4).ok_or_else(illegal)?;
    if scaled % den != 0 {
        return Err(illegal());
    }
    let q = QScalar::from_quarters(scaled / den);
    if q.is_adjacency_value() {
        Ok(q)
    } else {
        Err(illegal())
    }
}

pub fn parse_qmat(text: &str) -> Result<SymMatrix, FormatError> {
    let mut lines = content_lines(text);
    let (header_line, n) = parse_header(&mut lines)?;
    let mut rows = Vec::with_capacity(n);
    let mut last_line = header_line;
    for (line, content) in lines {
        if rows.len() == n {
            return Err(syntax(line, None, format!("more than {n} rows")));
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.len() != n {
            return Err(syntax(
                line,
                None,
                format!("expected {n} entries, found {}", tokens.len()),
            ));
        }
        let row = tokens
            .iter()
            .enumerate()
            .map(|(k, tok)| parse_entry(tok, line, k + 1))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
        last_line = line;
    }
    if rows.len() < n {
        return Err(syntax(
            last_line,
            None,
            format!("expected {n} rows, found {}", rows.len()),
        ));
    }
    SymMatrix::from_rows(&rows).map_err(|e| match e {
        MatrixError::Asymmetric {
            row,
            col,
            upper,
            lower,
        } => FormatError::AsymmetricInput {
            row: row + 1,
            col: col + 1,
            upper,
            lower,
        },
        MatrixError::NonzeroDiagonal { index } => FormatError::NonzeroDiagonal {
            index: index + 1,
            value: rows[index][index],
        },
        other => syntax(header_line, None, other.to_string()),
    })
}

/// Integers print plainly and fractions as `1/4`, `1/2` (or `-3/4` in excess matrices).
pub fn emit_qmat(m: &SymMatrix) -> String {
    let mut out = format!("n {}\n", m.dim());
    for row in m.rows() {
        let cells: Vec<String> = row.iter().map(|q| q.to_string()).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}
