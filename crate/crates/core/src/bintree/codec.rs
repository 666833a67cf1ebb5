//! Text encoding for trees.
//!
//! ```text
//! tree    ::= 'Z(' payload ')' | 'S(' payload ')' | 'B(' tree ',' tree ')'
//! payload ::= '*' | integer | '"' chars '"' | '[' payload (',' payload)* ']' | tree
//! ```
//!
//! No whitespace is emitted or accepted. Inside strings only `"` and `\` are
//! escaped (as `\"` and `\\`). The empty sequence is written `[]`.

use super::Tree;
use crate::error::{Error, Result};

/// Payload types with a text form.
pub trait TextCodec: Sized {
    fn write_text(&self, out: &mut String);
    fn read_text(p: &mut Parser<'_>) -> Result<Self>;
}

/// Encodes a tree as text.
pub fn encode<P: TextCodec>(t: &Tree<P>) -> String {
    let mut out = String::new();
    t.write_text(&mut out);
    out
}

/// Decodes a complete text into a tree; trailing input is an error.
pub fn decode<P: TextCodec>(text: &str) -> Result<Tree<P>> {
    let mut p = Parser::new(text);
    let t = Tree::read_text(&mut p)?;
    p.finish()?;
    Ok(t)
}

/// Byte cursor over the input text.
#[derive(Debug)]
pub struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    pub fn new(src: &'a str) -> Self {
        Parser { src, pos: 0 }
    }

    pub fn pos(&self) -> usize {
        self.pos
    }

    pub fn peek(&self) -> Option<u8> {
        self.src.as_bytes().get(self.pos).copied()
    }

    pub fn error<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::ParseError { pos: self.pos, msg: msg.into() })
    }

    pub fn expect(&mut self, byte: u8) -> Result<()> {
        match self.peek() {
            Some(b) if b == byte => {
                self.pos += 1;
                Ok(())
            }
            Some(b) => self.error(format!("expected '{}', found '{}'", byte as char, b as char)),
            None => self.error(format!("expected '{}', found end of input", byte as char)),
        }
    }

    pub fn finish(&self) -> Result<()> {
        if self.pos == self.src.len() {
            Ok(())
        } else {
            self.error("trailing input")
        }
    }

    fn read_integer(&mut self, allow_negative: bool) -> Result<&'a str> {
        let start = self.pos;
        if allow_negative && self.peek() == Some(b'-') {
            self.pos += 1;
        }
        let digits = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if self.pos == digits {
            return self.error("expected decimal digits");
        }
        Ok(&self.src[start..self.pos])
    }

    fn read_string(&mut self) -> Result<String> {
        self.expect(b'"')?;
        let mut out = String::new();
        let mut chars = self.src[self.pos..].char_indices();
        loop {
            let Some((off, c)) = chars.next() else {
                self.pos = self.src.len();
                return self.error("unterminated string");
            };
            match c {
                '"' => {
                    self.pos += off + 1;
                    return Ok(out);
                }
                '\\' => match chars.next() {
                    Some((_, e @ ('"' | '\\'))) => out.push(e),
                    Some((off2, _)) => {
                        self.pos += off2;
                        return self.error("invalid escape");
                    }
                    None => {
                        self.pos = self.src.len();
                        return self.error("unterminated escape");
                    }
                },
                c => out.push(c),
            }
        }
    }
}

impl TextCodec for () {
    fn write_text(&self, out: &mut String) {
        out.push('*');
    }

    fn read_text(p: &mut Parser<'_>) -> Result<Self> {
        p.expect(b'*')
    }
}

macro_rules! int_codec {
    ($($t:ty => $neg:expr),*) => {$(
        impl TextCodec for $t {
            fn write_text(&self, out: &mut String) {
                out.push_str(&self.to_string());
            }

            fn read_text(p: &mut Parser<'_>) -> Result<Self> {
                let start = p.pos();
                let digits = p.read_integer($neg)?;
                digits.parse().map_err(|_| Error::ParseError {
                    pos: start,
                    msg: format!("integer out of range for {}", stringify!($t)),
                })
            }
        }
    )*};
}

int_codec!(i32 => true, i64 => true, u32 => false, u64 => false, usize => false);

impl TextCodec for String {
    fn write_text(&self, out: &mut String) {
        out.push('"');
        for c in self.chars() {
            if c == '"' || c == '\\' {
                out.push('\\');
            }
            out.push(c);
        }
        out.push('"');
    }

    fn read_text(p: &mut Parser<'_>) -> Result<Self> {
        p.read_string()
    }
}

impl<T: TextCodec> TextCodec for Vec<T> {
    fn write_text(&self, out: &mut String) {
        out.push('[');
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            x.write_text(out);
        }
        out.push(']');
    }

    fn read_text(p: &mut Parser<'_>) -> Result<Self> {
        p.expect(b'[')?;
        let mut out = Vec::new();
        if p.peek() == Some(b']') {
            p.expect(b']')?;
            return Ok(out);
        }
        loop {
            out.push(T::read_text(p)?);
            match p.peek() {
                Some(b',') => p.expect(b',')?,
                _ => {
                    p.expect(b']')?;
                    return Ok(out);
                }
            }
        }
    }
}

impl<T: TextCodec> TextCodec for Tree<T> {
    fn write_text(&self, out: &mut String) {
        match self {
            Tree::TipZ(x) => {
                out.push_str("Z(");
                x.write_text(out);
            }
            Tree::TipS(x) => {
                out.push_str("S(");
                x.write_text(out);
            }
            Tree::Bin(l, r) => {
                out.push_str("B(");
                l.write_text(out);
                out.push(',');
                r.write_text(out);
            }
        }
        out.push(')');
    }

    fn read_text(p: &mut Parser<'_>) -> Result<Self> {
        let tag = p.peek();
        let t = match tag {
            Some(b'Z') | Some(b'S') => {
                p.expect(tag.unwrap())?;
                p.expect(b'(')?;
                let x = T::read_text(p)?;
                if tag == Some(b'Z') { Tree::TipZ(x) } else { Tree::TipS(x) }
            }
            Some(b'B') => {
                p.expect(b'B')?;
                p.expect(b'(')?;
                let l = Self::read_text(p)?;
                p.expect(b',')?;
                Tree::bin(l, Self::read_text(p)?)
            }
            _ => return p.error("expected 'Z', 'S' or 'B'"),
        };
        p.expect(b')')?;
        Ok(t)
    }
}
