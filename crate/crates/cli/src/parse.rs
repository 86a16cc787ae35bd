//! Recursive-descent parser for the expression language.
//!
//! ```text
//! expr  := qset | call | NAT
//! call  := IDENT '(' [expr {',' expr}] ')'
//! qset  := '[' [elem {',' elem}] ']'
//! elem  := 'M' STRING | 'm' IDENT [':' NAT] | qset
//! ```

use std::fmt;

use crate::ast::{Elem, Expr};

/// Position-annotated parse failure. Lines and columns start at 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub expected: Vec<&'static str>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: expected ", self.line, self.column)?;
        for (i, e) in self.expected.iter().enumerate() {
            if i > 0 {
                f.write_str(if i + 1 == self.expected.len() { " or " } else { ", " })?;
            }
            f.write_str(e)?;
        }
        write!(f, ", found {}", self.found)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    LBracket,
    RBracket,
    LParen,
    RParen,
    Comma,
    Colon,
    Str(String),
    Nat(u64),
    Ident(String),
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::LBracket => "`[`".into(),
            Tok::RBracket => "`]`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Colon => "`:`".into(),
            Tok::Str(s) => format!("string {s:?}"),
            Tok::Nat(n) => format!("number {n}"),
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Eof => "end of input".into(),
        }
    }
}

struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(src: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    let (mut line, mut column) = (1, 1);
    let error = |line, column, expected, found: String| ParseError {
        line,
        column,
        expected,
        found,
    };
    while let Some(&c) = chars.peek() {
        let (l, col) = (line, column);
        let advance = |c: char, line: &mut usize, column: &mut usize| {
            if c == '\n' {
                *line += 1;
                *column = 1;
            } else {
                *column += 1;
            }
        };
        if c.is_whitespace() {
            chars.next();
            advance(c, &mut line, &mut column);
            continue;
        }
        let tok = match c {
            '[' | ']' | '(' | ')' | ',' | ':' => {
                chars.next();
                advance(c, &mut line, &mut column);
                match c {
                    '[' => Tok::LBracket,
                    ']' => Tok::RBracket,
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    ',' => Tok::Comma,
                    _ => Tok::Colon,
                }
            }
            '"' => {
                chars.next();
                advance(c, &mut line, &mut column);
                let mut s = String::new();
                loop {
                    match chars.next() {
                        None => {
                            return Err(error(line, column, vec!["`\"`"], "end of input".into()));
                        }
                        Some('"') => {
                            column += 1;
                            break;
                        }
                        Some('\\') => {
                            column += 1;
                            match chars.next() {
                                Some(e @ ('"' | '\\')) => {
                                    column += 1;
                                    s.push(e);
                                }
                                other => {
                                    let found = other.map_or("end of input".into(), |c| format!("`{c}`"));
                                    return Err(error(line, column, vec!["`\"`", "`\\`"], found));
                                }
                            }
                        }
                        Some(ch) => {
                            advance(ch, &mut line, &mut column);
                            s.push(ch);
                        }
                    }
                }
                Tok::Str(s)
            }
            '0'..='9' => {
                let mut digits = String::new();
                while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    digits.push(d);
                    chars.next();
                    column += 1;
                }
                match digits.parse() {
                    Ok(n) => Tok::Nat(n),
                    Err(_) => return Err(error(l, col, vec!["NAT below 2^64"], digits)),
                }
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut ident = String::new();
                while let Some(&d) = chars.peek().filter(|d| d.is_ascii_alphanumeric() || **d == '_') {
                    ident.push(d);
                    chars.next();
                    column += 1;
                }
                Tok::Ident(ident)
            }
            other => return Err(error(l, col, vec!["expression"], format!("`{other}`"))),
        };
        out.push(Spanned {
            tok,
            line: l,
            column: col,
        });
    }
    out.push(Spanned {
        tok: Tok::Eof,
        line,
        column,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn fail<T>(&self, expected: Vec<&'static str>) -> Result<T, ParseError> {
        let s = &self.toks[self.pos];
        Err(ParseError {
            line: s.line,
            column: s.column,
            expected,
            found: s.tok.describe(),
        })
    }

    fn expect(&mut self, tok: Tok, name: &'static str) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            self.fail(vec![name])
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        match self.peek().clone() {
            Tok::LBracket => Ok(Expr::Qset(self.qset()?)),
            Tok::Nat(n) => {
                self.bump();
                Ok(Expr::Nat(n))
            }
            Tok::Ident(name) => {
                self.bump();
                self.expect(Tok::LParen, "`(`")?;
                let mut args = Vec::new();
                if *self.peek() != Tok::RParen {
                    args.push(self.expr()?);
                    while *self.peek() == Tok::Comma {
                        self.bump();
                        args.push(self.expr()?);
                    }
                }
                if *self.peek() != Tok::RParen {
                    return self.fail(vec!["`,`", "`)`"]);
                }
                self.bump();
                Ok(Expr::Call(name, args))
            }
            _ => self.fail(vec!["`[`", "NAT", "IDENT"]),
        }
    }

    fn qset(&mut self) -> Result<Vec<Elem>, ParseError> {
        self.expect(Tok::LBracket, "`[`")?;
        let mut elems = Vec::new();
        if *self.peek() == Tok::RBracket {
            self.bump();
            return Ok(elems);
        }
        loop {
            elems.push(self.elem()?);
            match self.peek() {
                Tok::Comma => {
                    self.bump();
                }
                Tok::RBracket => {
                    self.bump();
                    return Ok(elems);
                }
                _ => return self.fail(vec!["`,`", "`]`"]),
            }
        }
    }

    fn elem(&mut self) -> Result<Elem, ParseError> {
        match self.peek().clone() {
            Tok::LBracket => Ok(Elem::Qset(self.qset()?)),
            Tok::Ident(k) if k == "M" => {
                self.bump();
                let Tok::Str(s) = self.peek().clone() else {
                    return self.fail(vec!["STRING"]);
                };
                self.bump();
                Ok(Elem::MAtom(s))
            }
            Tok::Ident(k) if k == "m" => {
                self.bump();
                let Tok::Ident(species) = self.peek().clone() else {
                    return self.fail(vec!["IDENT"]);
                };
                self.bump();
                let mut count = 1;
                if *self.peek() == Tok::Colon {
                    self.bump();
                    let Tok::Nat(n) = *self.peek() else {
                        return self.fail(vec!["NAT"]);
                    };
                    self.bump();
                    count = n;
                }
                Ok(Elem::MOcc { species, count })
            }
            _ => self.fail(vec!["`M`", "`m`", "`[`"]),
        }
    }
}

pub fn parse(src: &str) -> Result<Expr, ParseError> {
    let mut p = Parser {
        toks: lex(src)?,
        pos: 0,
    };
    let e = p.expr()?;
    if *p.peek() != Tok::Eof {
        return p.fail(vec!["end of input"]);
    }
    Ok(e)
}
