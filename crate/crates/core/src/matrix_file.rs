//! Plain-text matrix files (`.g4m`).
//!
//! ```text
//! # comment lines start with '#'
//! 5 2
//! 1 0 1 1 1
//! 0 1 1 w W
//! ```
//!
//! The header is `n k` (columns, then rows), followed by exactly `k` rows of
//! exactly `n` whitespace-separated symbols from `{0, 1, w, W}` where `W`
//! is ω². With the numeric alphabet the symbols are `{0, 1, 2, 3}`. The
//! canonical form written by [`write_matrix`] uses single spaces and LF line
//! endings and has no comments.

use thiserror::Error;

use crate::gf4linalg::{Gf4, Gf4Matrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    /// 1-based line number.
    pub line: usize,
    /// 1-based character column.
    pub column: usize,
    pub message: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Alphabet {
    /// `0 1 w W`
    #[default]
    Letters,
    /// `0 1 2 3`
    Digits,
}

/// Splits a line into `(1-based column, token)` pairs.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, (byte_pos, ch)) in line.char_indices().enumerate() {
        if ch.is_whitespace() {
            if let Some((col, b)) = start.take() {
                out.push((col, &line[b..byte_pos]));
            }
        } else if start.is_none() {
            start = Some((i + 1, byte_pos));
        }
    }
    if let Some((col, b)) = start {
        out.push((col, &line[b..]));
    }
    out.into_iter()
}

pub fn parse_matrix(text: &str, alphabet: Alphabet) -> Result<Gf4Matrix, ParseError> {
    let digits = alphabet == Alphabet::Digits;
    let mut lines = text
        .split('\n')
        .enumerate()
        .map(|(i, l)| (i + 1, l.strip_suffix('\r').unwrap_or(l)))
        .filter(|(_, l)| !l.trim_start().starts_with('#') && !l.trim().is_empty());

    let (header_line, header) = lines.next().ok_or(ParseError {
        line: 1,
        column: 1,
        message: "missing 'n k' header".into(),
    })?;
    let head: Vec<(usize, &str)> = tokens(header).collect();
    if head.len() != 2 {
        return Err(ParseError {
            line: header_line,
            column: 1,
            message: format!("header must be 'n k', found {} fields", head.len()),
        });
    }
    let parse_count = |(col, tok): (usize, &str)| {
        tok.parse::<usize>().map_err(|_| ParseError {
            line: header_line,
            column: col,
            message: format!("'{tok}' is not a nonnegative integer"),
        })
    };
    let n = parse_count(head[0])?;
    let k = parse_count(head[1])?;

    let mut rows = Vec::with_capacity(k);
    let mut last_line = header_line;
    for (line_no, line) in lines {
        last_line = line_no;
        if rows.len() == k {
            return Err(ParseError {
                line: line_no,
                column: 1,
                message: format!("more than {k} rows"),
            });
        }
        let mut row = Vec::with_capacity(n);
        for (col, tok) in tokens(line) {
            let mut chars = tok.chars();
            let sym = match (chars.next(), chars.next()) {
                (Some(c), None) => Gf4::from_symbol(c, digits),
                _ => None,
            };
            let Some(x) = sym else {
                return Err(ParseError {
                    line: line_no,
                    column: col,
                    message: format!("illegal symbol '{tok}'"),
                });
            };
            if row.len() == n {
                return Err(ParseError {
                    line: line_no,
                    column: col,
                    message: format!("row has more than {n} symbols"),
                });
            }
            row.push(x);
        }
        if row.len() != n {
            return Err(ParseError {
                line: line_no,
                column: line.chars().count() + 1,
                message: format!("row has {} symbols, expected {n}", row.len()),
            });
        }
        rows.push(row);
    }
    if rows.len() != k {
        return Err(ParseError {
            line: last_line + 1,
            column: 1,
            message: format!("found {} rows, expected {k}", rows.len()),
        });
    }
    Ok(Gf4Matrix::from_rows(n, rows).expect("row lengths checked"))
}

/// Canonical text form: `n k` header, one line per row, single spaces, LF.
pub fn write_matrix(m: &Gf4Matrix) -> String {
    let mut s = format!("{} {}\n", m.cols(), m.rows());
    for row in m.row_iter() {
        let line: Vec<String> = row.iter().map(|x| x.symbol().to_string()).collect();
        s.push_str(&line.join(" "));
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_with_comments() {
        let text = "# simplex S_2\n5 2\n1 0 1 1 1\n# between rows\n0 1 1 w W\n";
        let m = parse_matrix(text, Alphabet::Letters).unwrap();
        assert_eq!((m.rows(), m.cols()), (2, 5));
        assert_eq!(m.get(1, 4), Gf4::OMEGA2);
    }

    #[test]
    fn digits_alphabet() {
        let m = parse_matrix("3 1\n0 2 3\n", Alphabet::Digits).unwrap();
        assert_eq!(m.row(0), &[Gf4::ZERO, Gf4::OMEGA, Gf4::OMEGA2]);
        assert!(parse_matrix("3 1\n0 w W\n", Alphabet::Digits).is_err());
    }

    #[test]
    fn reports_illegal_symbol_position() {
        let err = parse_matrix("3 2\n1 0 1\n0 x 1\n", Alphabet::Letters).unwrap_err();
        assert_eq!((err.line, err.column), (3, 3));
        assert!(err.message.contains("'x'"));
    }

    #[test]
    fn shape_errors() {
        let short_row = parse_matrix("3 1\n1 0\n", Alphabet::Letters).unwrap_err();
        assert_eq!(short_row.line, 2);
        let long_row = parse_matrix("2 1\n1 0 1\n", Alphabet::Letters).unwrap_err();
        assert_eq!((long_row.line, long_row.column), (2, 5));
        let missing = parse_matrix("2 2\n1 0\n", Alphabet::Letters).unwrap_err();
        assert_eq!(missing.line, 3);
        let extra = parse_matrix("2 1\n1 0\n0 1\n", Alphabet::Letters).unwrap_err();
        assert_eq!(extra.line, 3);
        let header = parse_matrix("2\n1 0\n", Alphabet::Letters).unwrap_err();
        assert_eq!(header.line, 1);
        assert!(parse_matrix("", Alphabet::Letters).is_err());
        assert!(parse_matrix("a 1\n", Alphabet::Letters).is_err());
    }

    proptest! {
        #[test]
        fn canonical_text_round_trips(rows in 1usize..5, cols in 1usize..9, bits in proptest::collection::vec(0u8..4, 40)) {
            let data: Vec<Vec<Gf4>> = (0..rows)
                .map(|r| (0..cols).map(|c| Gf4::from_bits(bits[(r * cols + c) % bits.len()])).collect())
                .collect();
            let m = Gf4Matrix::from_rows(cols, data).unwrap();
            let text = write_matrix(&m);
            let parsed = parse_matrix(&text, Alphabet::Letters).unwrap();
            prop_assert_eq!(&parsed, &m);
            prop_assert_eq!(write_matrix(&parsed), text);
        }
    }
}
