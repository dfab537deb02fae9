//! Expression grammar for the identity checker.
//!
//! ```text
//! expr   := term (('+'|'-') term)* ;
//! term   := factor (('*'|'^'|'|') factor)* ;
//! factor := '-' factor | atom ;
//! atom   := NUMBER | 'i' | GEN | '(' expr ')'
//!         | '{' expr ',' expr '}' | '[' expr ',' expr ']'
//!         | 'exp' '(' expr ')' ;
//! GEN    := ('e'|'theta'|'d') DIGITS ;
//! NUMBER := DIGITS ('.' DIGITS)? 'i'? ;
//! ```
//!
//! `*`, `^` and `|` (geometric product, wedge, left contraction) share
//! one precedence level and associate to the left; parenthesize anything
//! you would otherwise have to think about. Whitespace is insignificant.
//! Errors carry the 1-based character offset of the offending input.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
#[error("parse error at position {pos}: {message}")]
pub struct ParseError {
    /// 1-based character offset into the source string.
    pub pos: usize,
    pub message: String,
}

impl ParseError {
    fn new(pos: usize, message: impl Into<String>) -> Self {
        Self {
            pos,
            message: message.into(),
        }
    }

    /// Shift the reported offset, for sources embedded in larger input.
    pub fn offset_by(mut self, chars: usize) -> Self {
        self.pos += chars;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenKind {
    /// Clifford generator `e<k>`.
    E,
    /// Fermionic variable `theta<k>` (matrix backend only).
    Theta,
    /// Fermionic derivative `d<k>` (matrix backend only).
    D,
}

impl GenKind {
    pub fn name(&self) -> &'static str {
        match self {
            GenKind::E => "e",
            GenKind::Theta => "theta",
            GenKind::D => "d",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    /// `*`
    Geometric,
    /// `^`
    Wedge,
    /// `|`
    ContractLeft,
}

impl BinOp {
    fn symbol(&self) -> char {
        match self {
            BinOp::Add => '+',
            BinOp::Sub => '-',
            BinOp::Geometric => '*',
            BinOp::Wedge => '^',
            BinOp::ContractLeft => '|',
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Number { value: f64, imaginary: bool },
    ImaginaryUnit,
    Gen { kind: GenKind, index: usize },
    Neg(Box<Expr>),
    Binary { op: BinOp, lhs: Box<Expr>, rhs: Box<Expr> },
    Commutator { lhs: Box<Expr>, rhs: Box<Expr> },
    Anticommutator { lhs: Box<Expr>, rhs: Box<Expr> },
    Exp(Box<Expr>),
    Group(Box<Expr>),
}

/// Printing inverts parsing: `parse(&e.to_string())` rebuilds `e` for
/// any tree the parser produces.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Number { value, imaginary } => {
                if *imaginary {
                    write!(f, "{value}i")
                } else {
                    write!(f, "{value}")
                }
            }
            Expr::ImaginaryUnit => f.write_str("i"),
            Expr::Gen { kind, index } => write!(f, "{}{index}", kind.name()),
            Expr::Neg(inner) => write!(f, "-{inner}"),
            Expr::Binary { op, lhs, rhs } => write!(f, "{lhs}{}{rhs}", op.symbol()),
            Expr::Commutator { lhs, rhs } => write!(f, "[{lhs},{rhs}]"),
            Expr::Anticommutator { lhs, rhs } => write!(f, "{{{lhs},{rhs}}}"),
            Expr::Exp(inner) => write!(f, "exp({inner})"),
            Expr::Group(inner) => write!(f, "({inner})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Plus,
    Minus,
    Star,
    Caret,
    Pipe,
    LParen,
    RParen,
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    Comma,
    Number { value: f64, imaginary: bool },
    Gen { kind: GenKind, index: usize },
    Exp,
    ImaginaryUnit,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Caret => "'^'".into(),
            Tok::Pipe => "'|'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::LBrace => "'{'".into(),
            Tok::RBrace => "'}'".into(),
            Tok::LBracket => "'['".into(),
            Tok::RBracket => "']'".into(),
            Tok::Comma => "','".into(),
            Tok::Number { value, .. } => format!("number '{value}'"),
            Tok::Gen { kind, index } => format!("'{}{}'", kind.name(), index),
            Tok::Exp => "'exp'".into(),
            Tok::ImaginaryUnit => "'i'".into(),
        }
    }
}

struct Spanned {
    tok: Tok,
    /// 1-based character offset of the token's first character.
    pos: usize,
}

fn lex(src: &str) -> Result<Vec<Spanned>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0usize;
    while i < chars.len() {
        let c = chars[i];
        let pos = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let simple = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '^' => Some(Tok::Caret),
            '|' => Some(Tok::Pipe),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            '{' => Some(Tok::LBrace),
            '}' => Some(Tok::RBrace),
            '[' => Some(Tok::LBracket),
            ']' => Some(Tok::RBracket),
            ',' => Some(Tok::Comma),
            _ => None,
        };
        if let Some(tok) = simple {
            out.push(Spanned { tok, pos });
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if i < chars.len() && chars[i] == '.' {
                if i + 1 >= chars.len() || !chars[i + 1].is_ascii_digit() {
                    return Err(ParseError::new(i + 2, "expected digits after '.'"));
                }
                i += 1;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
            }
            let text: String = chars[start..i].iter().collect();
            let value: f64 = text
                .parse()
                .map_err(|_| ParseError::new(pos, format!("invalid number '{text}'")))?;
            let imaginary = i < chars.len() && chars[i] == 'i';
            if imaginary {
                i += 1;
            }
            out.push(Spanned {
                tok: Tok::Number { value, imaginary },
                pos,
            });
            continue;
        }
        if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphabetic() {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            let digit_start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[digit_start..i].iter().collect();
            let kind = match word.as_str() {
                "e" => Some(GenKind::E),
                "theta" => Some(GenKind::Theta),
                "d" => Some(GenKind::D),
                _ => None,
            };
            let tok = match (kind, digits.is_empty()) {
                (Some(kind), false) => {
                    let index: usize = digits.parse().map_err(|_| {
                        ParseError::new(pos, format!("invalid generator index '{digits}'"))
                    })?;
                    Tok::Gen { kind, index }
                }
                (None, true) if word == "exp" => Tok::Exp,
                (None, true) if word == "i" => Tok::ImaginaryUnit,
                _ => {
                    return Err(ParseError::new(
                        pos,
                        format!("unknown token '{word}{digits}'"),
                    ));
                }
            };
            out.push(Spanned { tok, pos });
            continue;
        }
        return Err(ParseError::new(pos, format!("unknown token '{c}'")));
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Spanned>,
    cursor: usize,
    end_pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.cursor).map(|s| &s.tok)
    }

    fn pos(&self) -> usize {
        self.tokens
            .get(self.cursor)
            .map_or(self.end_pos, |s| s.pos)
    }

    fn advance(&mut self) -> Option<Tok> {
        let tok = self.tokens.get(self.cursor).map(|s| s.tok.clone());
        if tok.is_some() {
            self.cursor += 1;
        }
        tok
    }

    fn expect(&mut self, want: Tok) -> Result<(), ParseError> {
        match self.peek() {
            Some(tok) if *tok == want => {
                self.cursor += 1;
                Ok(())
            }
            Some(tok) => Err(ParseError::new(
                self.pos(),
                format!("expected {}, found {}", want.describe(), tok.describe()),
            )),
            None => Err(ParseError::new(
                self.end_pos,
                format!("expected {}, found end of input", want.describe()),
            )),
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek() {
                Some(Tok::Plus) => BinOp::Add,
                Some(Tok::Minus) => BinOp::Sub,
                _ => break,
            };
            self.cursor += 1;
            let rhs = self.term()?;
            lhs = Expr::Binary {
                op,
                lhs: Box::new(lhs),
                rhs: Box::new(rhs),
            };
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        loop {
            let op = match self.peek() {
                Some(Tok::Star) => BinOp::Geometric,
                Some(Tok::Caret) => BinOp::Wedge,
                Some(Tok::Pipe) => BinOp::ContractLeft,
                _ => break,
            };
            self.cursor += 1;
            let rhs = self.factor()?;
            lhs = Expr::Binary {
                op,
                lhs: Box::new(lhs),
                rhs: Box::new(rhs),
            };
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        if matches!(self.peek(), Some(Tok::Minus)) {
            self.cursor += 1;
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let pos = self.pos();
        match self.advance() {
            Some(Tok::Number { value, imaginary }) => Ok(Expr::Number { value, imaginary }),
            Some(Tok::ImaginaryUnit) => Ok(Expr::ImaginaryUnit),
            Some(Tok::Gen { kind, index }) => {
                if index == 0 {
                    return Err(ParseError::new(
                        pos,
                        format!("generator index must be at least 1 in '{}0'", kind.name()),
                    ));
                }
                Ok(Expr::Gen { kind, index })
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(Expr::Group(Box::new(inner)))
            }
            Some(Tok::LBrace) => {
                let lhs = self.expr()?;
                self.expect(Tok::Comma)?;
                let rhs = self.expr()?;
                self.expect(Tok::RBrace)?;
                Ok(Expr::Anticommutator {
                    lhs: Box::new(lhs),
                    rhs: Box::new(rhs),
                })
            }
            Some(Tok::LBracket) => {
                let lhs = self.expr()?;
                self.expect(Tok::Comma)?;
                let rhs = self.expr()?;
                self.expect(Tok::RBracket)?;
                Ok(Expr::Commutator {
                    lhs: Box::new(lhs),
                    rhs: Box::new(rhs),
                })
            }
            Some(Tok::Exp) => {
                self.expect(Tok::LParen)?;
                let inner = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(Expr::Exp(Box::new(inner)))
            }
            Some(tok) => Err(ParseError::new(
                pos,
                format!("expected an expression, found {}", tok.describe()),
            )),
            None => Err(ParseError::new(
                self.end_pos,
                "expected an expression, found end of input",
            )),
        }
    }
}

/// Parse a complete expression; trailing input is an error.
pub fn parse(src: &str) -> Result<Expr, ParseError> {
    let tokens = lex(src)?;
    let end_pos = src.chars().count() + 1;
    let mut parser = Parser {
        tokens,
        cursor: 0,
        end_pos,
    };
    let expr = parser.expr()?;
    if let Some(tok) = parser.peek() {
        return Err(ParseError::new(
            parser.pos(),
            format!("unexpected {} after expression", tok.describe()),
        ));
    }
    Ok(expr)
}
