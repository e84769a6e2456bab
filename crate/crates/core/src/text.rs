//! Shared helpers for the line-oriented text formats.

use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct FormatError {
    pub line: usize,
    pub message: String,
}

impl FormatError {
    pub fn new(line: usize, message: impl Into<String>) -> FormatError {
        FormatError { line, message: message.into() }
    }
}

/// Non-blank lines with `#` comments removed, paired with 1-based line numbers.
pub fn content_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let line = raw.split('#').next().unwrap_or("").trim();
            (!line.is_empty()).then_some((i + 1, line))
        })
        .collect()
}

/// Splits a header line `<keyword> <arg>...` and checks the keyword.
pub fn expect_keyword<'a>(
    line: (usize, &'a str),
    keyword: &str,
) -> Result<Vec<&'a str>, FormatError> {
    let mut toks = line.1.split_whitespace();
    match toks.next() {
        Some(k) if k == keyword => Ok(toks.collect()),
        Some(k) => Err(FormatError::new(line.0, format!("expected `{keyword}`, found `{k}`"))),
        None => Err(FormatError::new(line.0, format!("expected `{keyword}`"))),
    }
}

/// Checks the final `end` line and that nothing follows it.
pub fn expect_end(lines: &[(usize, &str)], at: usize) -> Result<(), FormatError> {
    match lines.get(at) {
        Some(&(_, "end")) => match lines.get(at + 1) {
            None => Ok(()),
            Some(&(n, _)) => Err(FormatError::new(n, "content after `end`")),
        },
        Some(&(n, l)) => Err(FormatError::new(n, format!("unexpected `{l}`"))),
        None => Err(FormatError::new(lines.last().map_or(1, |l| l.0), "missing `end`")),
    }
}
