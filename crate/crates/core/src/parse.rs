//! Shared tokenizer for the scalar and element grammars.

use std::fmt;

use num_bigint::BigInt;

/// Error raised by the scalar/element/word parsers, carrying the byte
/// position and the offending token text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub found: String,
    pub expected: String,
}

impl ParseError {
    pub(crate) fn new(pos: usize, found: impl Into<String>, expected: impl Into<String>) -> Self {
        ParseError {
            pos,
            found: found.into(),
            expected: expected.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at position {}: found {}, expected {}",
            self.pos, self.found, self.expected
        )
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Tok {
    Int(BigInt),
    /// The scalar indeterminate `q`.
    Q,
    /// A maximal run of word letters, e.g. `xxy`.
    Letters(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    pub(crate) fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("'{n}'"),
            Tok::Q => "'q'".into(),
            Tok::Letters(s) => format!("'{s}'"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::End => "end of input".into(),
        }
    }
}

pub(crate) struct Lexer {
    toks: Vec<(usize, Tok)>,
    idx: usize,
}

impl Lexer {
    pub(crate) fn new(input: &str) -> Result<Self, ParseError> {
        let bytes = input.as_bytes();
        let mut toks = Vec::new();
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i];
            match c {
                b' ' | b'\t' | b'\n' | b'\r' => i += 1,
                b'+' => {
                    toks.push((i, Tok::Plus));
                    i += 1;
                }
                b'-' => {
                    toks.push((i, Tok::Minus));
                    i += 1;
                }
                b'*' => {
                    toks.push((i, Tok::Star));
                    i += 1;
                }
                b'^' => {
                    toks.push((i, Tok::Caret));
                    i += 1;
                }
                b'(' => {
                    toks.push((i, Tok::LParen));
                    i += 1;
                }
                b')' => {
                    toks.push((i, Tok::RParen));
                    i += 1;
                }
                b'0'..=b'9' => {
                    let start = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    let n: BigInt = input[start..i].parse().expect("digit run parses as integer");
                    toks.push((start, Tok::Int(n)));
                }
                b'a'..=b'z' => {
                    let start = i;
                    while i < bytes.len() && bytes[i].is_ascii_lowercase() {
                        i += 1;
                    }
                    let run = &input[start..i];
                    if run == "q" {
                        toks.push((start, Tok::Q));
                    } else if run.bytes().all(|b| b == b'x' || b == b'y') {
                        toks.push((start, Tok::Letters(run.to_string())));
                    } else {
                        return Err(ParseError::new(
                            start,
                            format!("'{run}'"),
                            "'q' or a word over {x, y}",
                        ));
                    }
                }
                _ => {
                    return Err(ParseError::new(
                        i,
                        format!("'{}'", &input[i..i + 1]),
                        "a term",
                    ));
                }
            }
        }
        toks.push((input.len(), Tok::End));
        Ok(Lexer { toks, idx: 0 })
    }

    pub(crate) fn peek(&self) -> &Tok {
        &self.toks[self.idx].1
    }

    pub(crate) fn pos(&self) -> usize {
        self.toks[self.idx].0
    }

    pub(crate) fn bump(&mut self) -> Tok {
        let t = self.toks[self.idx].1.clone();
        if self.idx + 1 < self.toks.len() {
            self.idx += 1;
        }
        t
    }

    pub(crate) fn expect(&mut self, want: &Tok, expected: &str) -> Result<(), ParseError> {
        if self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(self.unexpected(expected))
        }
    }

    pub(crate) fn unexpected(&self, expected: &str) -> ParseError {
        ParseError::new(self.pos(), self.peek().describe(), expected)
    }
}
