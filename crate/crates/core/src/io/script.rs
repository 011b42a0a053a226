//! Sequence scripts: `grid p q` followed by `fork t k` lines.

use crate::construction::{CzedliSchmidtSequence, ForkSite};
use crate::error::ParseError;
use crate::io::tokens::{content, end_column, number, tokens};

/// Parses a script; blank lines and `#` comments are ignored.
pub fn parse_sequence(text: &str) -> Result<CzedliSchmidtSequence, ParseError> {
    let mut seq: Option<CzedliSchmidtSequence> = None;
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let toks = tokens(content(raw));
        let Some(head) = toks.first() else { continue };
        let args = &toks[1..];
        let expect_two = |args: &[crate::io::tokens::Token]| -> Result<(usize, usize), ParseError> {
            match args {
                [a, b] => Ok((number(a, line, "a number")?, number(b, line, "a number")?)),
                [_, _, extra, ..] => Err(ParseError::new(
                    line,
                    extra.column,
                    "unexpected trailing input",
                )),
                _ => Err(ParseError::new(
                    line,
                    end_column(raw),
                    format!("`{}` takes two numbers", head.text),
                )),
            }
        };
        match head.text {
            "grid" => {
                if seq.is_some() {
                    return Err(ParseError::new(line, head.column, "second `grid` line"));
                }
                let (p, q) = expect_two(args)?;
                seq = Some(CzedliSchmidtSequence::grid(p, q));
            }
            "fork" => {
                let Some(s) = seq.as_mut() else {
                    return Err(ParseError::new(line, head.column, "`fork` before `grid`"));
                };
                let (t, k) = expect_two(args)?;
                s.forks.push(ForkSite { t, k });
            }
            other => {
                return Err(ParseError::new(
                    line,
                    head.column,
                    format!("unknown directive `{other}`"),
                ))
            }
        }
    }
    seq.ok_or_else(|| ParseError::new(last_line.max(1), 1, "missing `grid` line"))
}

pub fn serialize_sequence(seq: &CzedliSchmidtSequence) -> String {
    let mut s = format!("grid {} {}\n", seq.p, seq.q);
    for f in &seq.forks {
        s.push_str(&format!("fork {} {}\n", f.t, f.k));
    }
    s
}

/// Single-line form, `grid p q; fork t k; …`, used in listings.
pub fn sequence_one_line(seq: &CzedliSchmidtSequence) -> String {
    serialize_sequence(seq).trim_end().replace('\n', "; ")
}

/// Inverse of [`sequence_one_line`].
pub fn parse_sequence_one_line(text: &str) -> Result<CzedliSchmidtSequence, ParseError> {
    parse_sequence(
        &text
            .split(';')
            .map(str::trim)
            .collect::<Vec<_>>()
            .join("\n"),
    )
}
