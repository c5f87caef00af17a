//! Recursive-descent parser for the identity language.
//!
//! ```text
//! identity := expr '=' expr
//! expr     := term (('+' | '-') term)*
//! term     := '-' term | NUMBER ['/' NUMBER] '*' term | '0' | factor
//! factor   := VAR | MAP '(' expr ')' | 'Y' '(' expr ';' expr ')'
//!           | 'J' '(' expr ',' expr ',' expr ')' | '[' expr ',' expr ']' | '(' expr ')'
//! ```
//!
//! Sorts are inferred bottom-up while parsing, so a sort clash is reported at
//! the column of the offending operand.

use std::collections::BTreeSet;
use std::fmt;

use crate::exact::{parse_rational, Rational};
use crate::identity::ast::{Identity, LExpr, MExpr, MapName, Var};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ParseErrorKind {
    Syntax { expected: Vec<String>, found: String },
    Sort { message: String },
}

/// A syntax or sort error; `column` is 1-based and counts characters.
#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
pub struct ParseError {
    pub line: Option<usize>,
    pub column: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    pub fn is_sort_error(&self) -> bool {
        matches!(self.kind, ParseErrorKind::Sort { .. })
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(line) = self.line {
            write!(f, "line {line}, ")?;
        }
        match &self.kind {
            ParseErrorKind::Syntax { expected, found } => write!(
                f,
                "syntax error at column {}: expected {}, found {found}",
                self.column,
                expected.join(" or ")
            ),
            ParseErrorKind::Sort { message } => write!(f, "sort error at column {}: {message}", self.column),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
enum Tok {
    Ident(String),
    Num(String),
    Sym(char),
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) | Tok::Num(s) => write!(f, "{s:?}"),
            Tok::Sym(c) => write!(f, "'{c}'"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_alphabetic() {
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), start + 1));
        } else if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            out.push((Tok::Num(chars[start..i].iter().collect()), start + 1));
        } else if "[](),;=+-*/".contains(c) {
            out.push((Tok::Sym(c), start + 1));
            i += 1;
        } else {
            return Err(ParseError {
                line: None,
                column: start + 1,
                kind: ParseErrorKind::Syntax {
                    expected: vec!["a token".into()],
                    found: format!("{c:?}"),
                },
            });
        }
    }
    out.push((Tok::End, chars.len() + 1));
    Ok(out)
}

const TERM_START: &[&str] = &[
    "variable", "number", "'-'", "'['", "'('", "S", "T", "P", "Sp", "Tp", "Pp", "Y", "J",
];

enum Sorted {
    M(MExpr),
    L(LExpr),
    Zero,
}

impl Sorted {
    fn sort_name(&self) -> &'static str {
        match self {
            Sorted::M(_) => "an M-expression",
            Sorted::L(_) => "an L-expression",
            Sorted::Zero => "zero",
        }
    }
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

type PResult<T> = Result<T, ParseError>;

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn column(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn syntax<T>(&self, expected: &[&str]) -> PResult<T> {
        Err(ParseError {
            line: None,
            column: self.column(),
            kind: ParseErrorKind::Syntax {
                expected: expected.iter().map(|s| s.to_string()).collect(),
                found: self.peek().to_string(),
            },
        })
    }

    fn expect(&mut self, c: char) -> PResult<()> {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            Ok(())
        } else {
            self.syntax(&[&format!("'{c}'")])
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn identity(&mut self, text: &str) -> PResult<Identity> {
        let lhs_col = self.column();
        let lhs = self.expr()?;
        let lhs = side(lhs, lhs_col)?;
        self.expect('=')?;
        let rhs_col = self.column();
        let rhs = self.expr()?;
        let rhs = side(rhs, rhs_col)?;
        if *self.peek() != Tok::End {
            return self.syntax(&["'+'", "'-'", "end of input"]);
        }
        let mut vars = BTreeSet::new();
        lhs.collect_vars(&mut vars);
        rhs.collect_vars(&mut vars);
        Ok(Identity {
            lhs,
            rhs,
            vars: vars.into_iter().collect(),
            text: text.trim().to_string(),
        })
    }

    fn expr(&mut self) -> PResult<Sorted> {
        let mut acc = self.term()?;
        loop {
            let negate = match self.peek() {
                Tok::Sym('+') => false,
                Tok::Sym('-') => true,
                _ => return Ok(acc),
            };
            self.bump();
            let col = self.column();
            let mut term = self.term()?;
            if negate {
                term = neg(term);
            }
            acc = add(acc, term, col)?;
        }
    }

    fn term(&mut self) -> PResult<Sorted> {
        match self.peek().clone() {
            Tok::Sym('-') => {
                self.bump();
                Ok(neg(self.term()?))
            }
            Tok::Num(digits) => {
                let col = self.column();
                self.bump();
                let mut text = digits;
                if self.eat('/') {
                    match self.bump() {
                        Tok::Num(d) => text = format!("{text}/{d}"),
                        _ => {
                            self.pos -= 1;
                            return self.syntax(&["number"]);
                        }
                    }
                }
                let k = parse_rational(&text).map_err(|e| ParseError {
                    line: None,
                    column: col,
                    kind: ParseErrorKind::Syntax {
                        expected: vec!["rational coefficient".into()],
                        found: e.to_string(),
                    },
                })?;
                if self.eat('*') {
                    Ok(scale(k, self.term()?))
                } else if k.is_zero() {
                    Ok(Sorted::Zero)
                } else {
                    self.syntax(&["'*'"])
                }
            }
            _ => self.factor(),
        }
    }

    fn m_arg(&mut self, what: &str) -> PResult<MExpr> {
        let col = self.column();
        match self.expr()? {
            Sorted::M(m) => Ok(m),
            Sorted::Zero => Ok(MExpr::Zero),
            Sorted::L(_) => Err(sort_error(col, format!("argument of {what} must be an M-expression, found an L-expression"))),
        }
    }

    fn factor(&mut self) -> PResult<Sorted> {
        match self.peek().clone() {
            Tok::Ident(name) => {
                if let Some(v) = Var::from_name(&name) {
                    self.bump();
                    return Ok(Sorted::M(MExpr::Var(v)));
                }
                if let Some(map) = MapName::from_name(&name) {
                    self.bump();
                    self.expect('(')?;
                    let arg = self.m_arg(&name)?;
                    self.expect(')')?;
                    return Ok(Sorted::L(LExpr::Apply(map, Box::new(arg))));
                }
                match name.as_str() {
                    "Y" => {
                        self.bump();
                        self.expect('(')?;
                        let a = self.m_arg("Y")?;
                        self.expect(';')?;
                        let b = self.m_arg("Y")?;
                        self.expect(')')?;
                        Ok(Sorted::L(LExpr::Yamagutian(Box::new(a), Box::new(b))))
                    }
                    "J" => {
                        self.bump();
                        self.expect('(')?;
                        let a = self.m_arg("J")?;
                        self.expect(',')?;
                        let b = self.m_arg("J")?;
                        self.expect(',')?;
                        let c = self.m_arg("J")?;
                        self.expect(')')?;
                        Ok(Sorted::M(MExpr::Jacobian(Box::new([a, b, c]))))
                    }
                    _ => self.syntax(TERM_START),
                }
            }
            Tok::Sym('[') => {
                self.bump();
                let a = self.expr()?;
                self.expect(',')?;
                let col = self.column();
                let b = self.expr()?;
                self.expect(']')?;
                bracket(a, b, col)
            }
            Tok::Sym('(') => {
                self.bump();
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            _ => self.syntax(TERM_START),
        }
    }
}

fn sort_error(column: usize, message: String) -> ParseError {
    ParseError {
        line: None,
        column,
        kind: ParseErrorKind::Sort { message },
    }
}

fn side(e: Sorted, col: usize) -> PResult<LExpr> {
    match e {
        Sorted::L(l) => Ok(l),
        Sorted::Zero => Ok(LExpr::Zero),
        Sorted::M(_) => Err(sort_error(col, "both sides of an identity must be L-expressions".into())),
    }
}

fn neg(e: Sorted) -> Sorted {
    match e {
        Sorted::M(m) => Sorted::M(MExpr::Neg(Box::new(m))),
        Sorted::L(l) => Sorted::L(LExpr::Neg(Box::new(l))),
        Sorted::Zero => Sorted::Zero,
    }
}

fn scale(k: Rational, e: Sorted) -> Sorted {
    match e {
        Sorted::M(m) => Sorted::M(MExpr::Scale(k, Box::new(m))),
        Sorted::L(l) => Sorted::L(LExpr::Scale(k, Box::new(l))),
        Sorted::Zero => Sorted::Zero,
    }
}

fn add(a: Sorted, b: Sorted, col: usize) -> PResult<Sorted> {
    Ok(match (a, b) {
        (x, Sorted::Zero) | (Sorted::Zero, x) => x,
        (Sorted::M(x), Sorted::M(y)) => Sorted::M(match x {
            MExpr::Sum(mut terms) => {
                terms.push(y);
                MExpr::Sum(terms)
            }
            x => MExpr::Sum(vec![x, y]),
        }),
        (Sorted::L(x), Sorted::L(y)) => Sorted::L(match x {
            LExpr::Sum(mut terms) => {
                terms.push(y);
                LExpr::Sum(terms)
            }
            x => LExpr::Sum(vec![x, y]),
        }),
        (a, b) => {
            return Err(sort_error(
                col,
                format!("cannot add {} to {}", b.sort_name(), a.sort_name()),
            ))
        }
    })
}

fn bracket(a: Sorted, b: Sorted, col: usize) -> PResult<Sorted> {
    Ok(match (a, b) {
        (Sorted::Zero, _) | (_, Sorted::Zero) => Sorted::Zero,
        (Sorted::M(x), Sorted::M(y)) => Sorted::M(MExpr::Bracket(Box::new(x), Box::new(y))),
        (Sorted::L(x), Sorted::L(y)) => Sorted::L(LExpr::Bracket(Box::new(x), Box::new(y))),
        (a, b) => {
            return Err(sort_error(
                col,
                format!("cannot bracket {} with {}", a.sort_name(), b.sort_name()),
            ))
        }
    })
}

/// Parses one identity `lhs = rhs`.
pub fn parse_identity(text: &str) -> Result<Identity, ParseError> {
    let mut p = Parser { toks: lex(text)?, pos: 0 };
    p.identity(text)
}

/// Parses one identity per line; blank lines and `#` comments are skipped.
pub fn parse_identity_file(text: &str) -> Result<Vec<Identity>, ParseError> {
    let mut out = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        out.push(parse_identity(line).map_err(|e| ParseError { line: Some(n + 1), ..e })?);
    }
    Ok(out)
}
