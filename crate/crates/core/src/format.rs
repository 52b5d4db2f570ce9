//! Text format for point sets and generator matrices.
//!
//! The first significant line is the header `q n`; each following line holds
//! one word as `n` space-separated decimal symbols in `[0, q-1]`. Blank lines
//! and lines starting with `#` are ignored, and both LF and CRLF line endings
//! are accepted. Generator matrix files use the same layout (by convention
//! with a `# generator` comment); the interpretation is chosen by the caller,
//! never sniffed from the content.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::field::{make_field, GeneratorMatrix};
use crate::space::{PointSet, SpaceParams, Word};

struct RawTable {
    q: u32,
    n: usize,
    rows: Vec<Vec<u32>>,
}

fn parse_raw(text: &str) -> Result<RawTable> {
    let mut header: Option<(u32, usize)> = None;
    let mut rows = Vec::new();
    for (idx, raw_line) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw_line.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match header {
            None => {
                if tokens.len() != 2 {
                    return Err(Error::Parse {
                        line,
                        message: format!("expected header `q n`, found {} token(s)", tokens.len()),
                    });
                }
                let q: u32 = tokens[0].parse().map_err(|_| Error::Parse {
                    line,
                    message: format!("invalid alphabet size `{}`", tokens[0]),
                })?;
                let n: usize = tokens[1].parse().map_err(|_| Error::Parse {
                    line,
                    message: format!("invalid word length `{}`", tokens[1]),
                })?;
                if q < 2 {
                    return Err(Error::Parse {
                        line,
                        message: format!("alphabet size must be at least 2, got {q}"),
                    });
                }
                if n == 0 {
                    return Err(Error::Parse {
                        line,
                        message: "word length must be at least 1".into(),
                    });
                }
                header = Some((q, n));
            }
            Some((q, n)) => {
                if tokens.len() != n {
                    return Err(Error::Parse {
                        line,
                        message: format!("expected {n} symbols, found {}", tokens.len()),
                    });
                }
                let mut row = Vec::with_capacity(n);
                for tok in tokens {
                    let s: u32 = tok.parse().map_err(|_| Error::Parse {
                        line,
                        message: format!("invalid symbol `{tok}`"),
                    })?;
                    if s >= q {
                        return Err(Error::Parse {
                            line,
                            message: format!("symbol {s} out of range for alphabet size {q}"),
                        });
                    }
                    row.push(s);
                }
                rows.push(row);
            }
        }
    }
    let (q, n) = header.ok_or(Error::Parse {
        line: 1,
        message: "missing `q n` header".into(),
    })?;
    Ok(RawTable { q, n, rows })
}

pub fn parse_point_set(text: &str) -> Result<PointSet> {
    let raw = parse_raw(text)?;
    let params = SpaceParams::new(raw.q, raw.n)?;
    PointSet::new(params, raw.rows.into_iter().map(Word::new).collect())
}

pub fn point_set_to_string(s: &PointSet) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", s.q(), s.n());
    for row in s.rows() {
        let _ = writeln!(out, "{row}");
    }
    out
}

pub fn parse_generator_matrix(text: &str) -> Result<GeneratorMatrix> {
    let raw = parse_raw(text)?;
    let field = make_field(raw.q)?;
    GeneratorMatrix::new(field, raw.n, raw.rows.into_iter().map(Word::new).collect())
}

pub fn generator_matrix_to_string(g: &GeneratorMatrix) -> String {
    let mut out = String::from("# generator\n");
    let _ = writeln!(out, "{} {}", g.field().q(), g.n());
    for row in g.rows() {
        let _ = writeln!(out, "{row}");
    }
    out
}
