//! The `.lpd` text format for structures and transversal files.
//!
//! ```text
//! # comment lines start with '#'
//! elements 4
//! labels a b c d          (optional)
//! units 0 3
//! alpha 0:0 1:0 2:3 3:3   (optional, together with beta)
//! beta 0:0 1:3 2:0 3:3
//! inv 0:0 1:2 2:1 3:3     (optional; likewise linv, rinv)
//! triples
//! 0 0 0
//! ...
//! end
//! ```

mod lpd;
mod transversal;

pub use lpd::{parse, print};
pub use transversal::{parse_transversal, print_transversal};

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("{}", Semantic { line: *line, msg })]
    Semantic { line: Option<usize>, msg: String },
}

struct Semantic<'a> {
    line: Option<usize>,
    msg: &'a str,
}

impl fmt::Display for Semantic<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(l) => write!(f, "line {l}: {}", self.msg),
            None => f.write_str(self.msg),
        }
    }
}

impl ParseError {
    /// The 1-based line the diagnostic points at, when known.
    pub fn line(&self) -> Option<usize> {
        match self {
            ParseError::Syntax { line, .. } => Some(*line),
            ParseError::Semantic { line, .. } => *line,
        }
    }
}

/// One whitespace-separated word with its 1-based column.
#[derive(Debug, Clone, Copy)]
struct Token<'a> {
    col: usize,
    text: &'a str,
}

/// Non-comment, non-blank lines as (line number, tokens).
fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<Token<'_>>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let trimmed = line.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            return None;
        }
        let mut tokens = Vec::new();
        let mut start: Option<usize> = None;
        let mut col = 0;
        let mut begin_col = 0;
        for (byte, ch) in line.char_indices() {
            col += 1;
            if ch.is_whitespace() {
                if let Some(s) = start.take() {
                    tokens.push(Token { col: begin_col, text: &line[s..byte] });
                }
            } else if start.is_none() {
                start = Some(byte);
                begin_col = col;
            }
        }
        if let Some(s) = start {
            tokens.push(Token { col: begin_col, text: &line[s..] });
        }
        Some((i + 1, tokens))
    })
}

fn syntax(line: usize, col: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, col, msg: msg.into() }
}

fn semantic(line: Option<usize>, msg: impl Into<String>) -> ParseError {
    ParseError::Semantic { line, msg: msg.into() }
}

fn parse_usize(line: usize, tok: Token<'_>) -> Result<usize, ParseError> {
    if tok.text.is_empty() || !tok.text.bytes().all(|b| b.is_ascii_digit()) {
        return Err(syntax(line, tok.col, format!("expected a decimal index, found {:?}", tok.text)));
    }
    tok.text.parse().map_err(|_| syntax(line, tok.col, format!("index {:?} is too large", tok.text)))
}

fn parse_index(line: usize, tok: Token<'_>, n: usize) -> Result<usize, ParseError> {
    let i = parse_usize(line, tok)?;
    if i >= n {
        return Err(semantic(Some(line), format!("index {i} out of range for {n} elements (column {})", tok.col)));
    }
    Ok(i)
}

/// Parses `i:j` pairs into a partial map.
fn parse_pairs(line: usize, key: &str, tokens: &[Token<'_>], n: usize) -> Result<Vec<Option<usize>>, ParseError> {
    let mut map = vec![None; n];
    for &tok in tokens {
        let Some((a, b)) = tok.text.split_once(':') else {
            return Err(syntax(line, tok.col, format!("expected i:j in {key}, found {:?}", tok.text)));
        };
        let i = parse_index(line, Token { col: tok.col, text: a }, n)?;
        let j = parse_index(line, Token { col: tok.col + a.chars().count() + 1, text: b }, n)?;
        if map[i].replace(j).is_some() {
            return Err(semantic(Some(line), format!("{key} maps {i} twice")));
        }
    }
    Ok(map)
}

fn write_pairs(out: &mut String, key: &str, map: &[crate::ElementId]) {
    out.push_str(key);
    for (i, j) in map.iter().enumerate() {
        out.push_str(&format!(" {i}:{j}"));
    }
    out.push('\n');
}
