use crate::error::ParseError;

/// A whitespace-separated word with its 1-based column.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Token<'a> {
    pub text: &'a str,
    pub column: usize,
}

pub(crate) fn tokens(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line
        .char_indices()
        .chain(std::iter::once((line.len(), ' ')))
    {
        match (c.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push(Token {
                    text: &line[s..i],
                    column: line[..s].chars().count() + 1,
                });
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    out
}

/// Strips a `#` comment.
pub(crate) fn content(line: &str) -> &str {
    line.split('#').next().unwrap_or("")
}

pub(crate) fn number(tok: &Token, line: usize, what: &str) -> Result<usize, ParseError> {
    tok.text.parse().map_err(|_| {
        ParseError::new(
            line,
            tok.column,
            format!("expected {what}, found `{}`", tok.text),
        )
    })
}

pub(crate) fn end_column(line: &str) -> usize {
    line.chars().count() + 1
}
