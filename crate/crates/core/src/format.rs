//! Line-based algebra file format.
//!
//! ```text
//! # comment
//! field = F5
//! dim = 3
//! bracket 1 1 = 3:1
//! bracket 1 2 = 3:1 + 2:-1/2
//! ```
//!
//! `field` and `dim` must precede every `bracket` line. Indices are 1-based;
//! a bracket line lists `k:c` terms meaning `c·e_k`. Unlisted brackets are zero.

use std::collections::HashSet;
use std::fmt::Write as _;

use num_bigint::BigInt;
use thiserror::Error;

use crate::algebra::Algebra;
use crate::field::{FieldSpec, Scalar};

/// Largest accepted `dim`; the structure tensor has `dim^3` entries.
pub const MAX_DIM: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("bad field: {0}")]
    BadField(String),
    #[error("index {index} out of range 1..={dim}")]
    BadIndex { index: String, dim: usize },
    #[error("bad coefficient {0:?}")]
    BadCoefficient(String),
    #[error("duplicate entry for bracket {i} {j} component {k}")]
    DuplicateEntry { i: usize, j: usize, k: usize },
    #[error("missing `{0}` declaration")]
    Missing(&'static str),
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    err(line, ParseErrorKind::Syntax(msg.into()))
}

pub fn parse_algebra_file(text: &str) -> Result<Algebra, ParseError> {
    let mut field: Option<FieldSpec> = None;
    let mut dim: Option<usize> = None;
    let mut alg: Option<Algebra> = None;
    let mut seen: HashSet<(usize, usize, usize)> = HashSet::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (lhs, rhs) = content
            .split_once('=')
            .ok_or_else(|| syntax(line, "expected `key = value`"))?;
        let head: Vec<&str> = lhs.split_whitespace().collect();
        let rhs = rhs.trim();
        match head.as_slice() {
            ["field"] => {
                if field.is_some() {
                    return Err(syntax(line, "field declared twice"));
                }
                let f = rhs
                    .parse::<FieldSpec>()
                    .map_err(|e| err(line, ParseErrorKind::BadField(e.to_string())))?;
                field = Some(f);
            }
            ["dim"] => {
                if dim.is_some() {
                    return Err(syntax(line, "dim declared twice"));
                }
                let n: usize = rhs
                    .parse()
                    .map_err(|_| syntax(line, format!("bad dimension {rhs:?}")))?;
                if n == 0 || n > MAX_DIM {
                    return Err(syntax(line, format!("dimension must be in 1..={MAX_DIM}")));
                }
                dim = Some(n);
            }
            ["bracket", i, j] => {
                let (Some(f), Some(n)) = (field, dim) else {
                    return Err(syntax(line, "field and dim must precede bracket lines"));
                };
                let alg = alg.get_or_insert_with(|| Algebra::abelian(f, n));
                let i = parse_index(i, n, line)?;
                let j = parse_index(j, n, line)?;
                if rhs.is_empty() {
                    return Err(syntax(line, "empty bracket value"));
                }
                for term in rhs.split('+') {
                    let (k, c) = term
                        .trim()
                        .split_once(':')
                        .ok_or_else(|| syntax(line, format!("expected `k:c`, got {:?}", term.trim())))?;
                    let k = parse_index(k.trim(), n, line)?;
                    let c = parse_coefficient(c.trim(), f)
                        .ok_or_else(|| err(line, ParseErrorKind::BadCoefficient(c.trim().to_string())))?;
                    if !seen.insert((i, j, k)) {
                        return Err(err(
                            line,
                            ParseErrorKind::DuplicateEntry {
                                i: i + 1,
                                j: j + 1,
                                k: k + 1,
                            },
                        ));
                    }
                    alg.set_constant(i, j, k, c).expect("index and field checked");
                }
            }
            _ => return Err(syntax(line, format!("unknown statement {:?}", lhs.trim()))),
        }
    }

    let eof = last_line + 1;
    let f = field.ok_or_else(|| err(eof, ParseErrorKind::Missing("field")))?;
    let n = dim.ok_or_else(|| err(eof, ParseErrorKind::Missing("dim")))?;
    Ok(alg.unwrap_or_else(|| Algebra::abelian(f, n)))
}

fn parse_index(tok: &str, dim: usize, line: usize) -> Result<usize, ParseError> {
    let bad = || {
        err(
            line,
            ParseErrorKind::BadIndex {
                index: tok.to_string(),
                dim,
            },
        )
    };
    if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    match tok.parse::<usize>() {
        Ok(i) if (1..=dim).contains(&i) => Ok(i - 1),
        _ => Err(bad()),
    }
}

/// `num` or `num/den` with an optional leading `-` on either part.
fn parse_coefficient(tok: &str, field: FieldSpec) -> Option<Scalar> {
    let int = |s: &str| -> Option<BigInt> {
        let digits = s.strip_prefix('-').unwrap_or(s);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        s.parse().ok()
    };
    let (num, den) = match tok.split_once('/') {
        Some((n, d)) => (int(n)?, int(d)?),
        None => (int(tok)?, BigInt::from(1)),
    };
    field.from_ratio(&num, &den).ok()
}

/// Canonical text form: `field`, `dim`, then one `bracket` line per nonzero
/// `[e_i, e_j]` in `(i, j)` order with terms in increasing `k`.
pub fn render_algebra_file(alg: &Algebra) -> String {
    let n = alg.dim();
    let mut out = format!("field = {}\ndim = {}\n", alg.field(), n);
    for i in 0..n {
        for j in 0..n {
            let terms: Vec<String> = (0..n)
                .filter(|&k| !alg.constant(i, j, k).is_zero())
                .map(|k| format!("{}:{}", k + 1, alg.constant(i, j, k)))
                .collect();
            if !terms.is_empty() {
                let _ = writeln!(out, "bracket {} {} = {}", i + 1, j + 1, terms.join(" + "));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    const LEI3_F5: &str = "field = F5\ndim = 3\nbracket 1 1 = 3:1\nbracket 1 2 = 3:1\n";

    #[test]
    fn canonical_lei3_file() {
        let f5 = FieldSpec::prime(5).unwrap();
        let alg = parse_algebra_file(LEI3_F5).unwrap();
        assert_eq!(alg, catalog::lei3(f5));
        assert_eq!(render_algebra_file(&alg), LEI3_F5);
    }

    #[test]
    fn abelian_without_brackets() {
        let alg = parse_algebra_file("field = Q\ndim = 1\n").unwrap();
        assert_eq!(alg, Algebra::abelian(FieldSpec::Rationals, 1));
    }

    #[test]
    fn comments_blank_lines_and_rationals() {
        let text = "# header\n\nfield = Q  # rationals\ndim = 2\nbracket 1 2 = 2:-3/6 + 1:4\n";
        let alg = parse_algebra_file(text).unwrap();
        assert_eq!(alg.constant(0, 1, 1).to_string(), "-1/2");
        assert_eq!(alg.constant(0, 1, 0).to_string(), "4");
        assert_eq!(
            render_algebra_file(&alg),
            "field = Q\ndim = 2\nbracket 1 2 = 1:4 + 2:-1/2\n"
        );
    }

    #[test]
    fn bad_index_reports_line() {
        let text = "field = F5\ndim = 3\nbracket 1 4 = 1:1\n";
        let e = parse_algebra_file(text).unwrap_err();
        assert_eq!(e.line, 3);
        assert!(matches!(e.kind, ParseErrorKind::BadIndex { .. }));
        let e = parse_algebra_file("field = F5\ndim = 3\nbracket 1 1 = 0:1\n").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::BadIndex { .. }));
    }

    #[test]
    fn duplicates_rejected() {
        let text = "field = F5\ndim = 3\nbracket 1 1 = 3:1\nbracket 1 1 = 3:2\n";
        let e = parse_algebra_file(text).unwrap_err();
        assert_eq!(
            e,
            ParseError {
                line: 4,
                kind: ParseErrorKind::DuplicateEntry { i: 1, j: 1, k: 3 }
            }
        );
        let same_line = "field = F5\ndim = 3\nbracket 1 1 = 3:1 + 3:1\n";
        assert!(matches!(
            parse_algebra_file(same_line).unwrap_err().kind,
            ParseErrorKind::DuplicateEntry { .. }
        ));
    }

    #[test]
    fn field_errors() {
        let e = parse_algebra_file("field = F4\ndim = 3\n").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::BadField(_)));
        let e = parse_algebra_file("field = R\n").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::BadField(_)));
        let e = parse_algebra_file("field = F5\ndim = 2\nbracket 1 1 = 1:1/5\n").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::BadCoefficient(_)));
    }

    #[test]
    fn structural_errors() {
        for text in [
            "dim = 3\n",
            "field = Q\n",
            "bracket 1 1 = 1:1\nfield = Q\ndim = 1\n",
            "field = Q\ndim = 0\n",
            "field = Q\ndim = 1\ndim = 1\n",
            "field = Q\ndim = 2\nbracket 1 1 =\n",
            "field = Q\ndim = 2\nbracket 1 1 = 1\n",
            "field = Q\ndim = 2\nfoo = bar\n",
            "field Q\n",
        ] {
            assert!(parse_algebra_file(text).is_err(), "{text:?}");
        }
    }
}
