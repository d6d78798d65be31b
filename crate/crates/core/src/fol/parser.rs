use thiserror::Error;

use super::{rename_shadowed, Formula, Quantifier, Term};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("sentence has unbound variables: {}", .0.join(", "))]
    Unbound(Vec<String>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(i64),
    Forall,
    Exists,
    Dot,
    Comma,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Star,
    Caret,
    Minus,
    Eq,
    Neq,
    Bang,
    Amp,
    Pipe,
    Arrow,
    DoubleArrow,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Int(n) => format!("integer `{n}`"),
            Tok::End => "end of input".into(),
            Tok::Forall => "`forall`".into(),
            Tok::Exists => "`exists`".into(),
            other => format!("`{}`", other.symbol()),
        }
    }

    fn symbol(&self) -> &'static str {
        match self {
            Tok::Dot => ".",
            Tok::Comma => ",",
            Tok::LParen => "(",
            Tok::RParen => ")",
            Tok::LBracket => "[",
            Tok::RBracket => "]",
            Tok::Star => "*",
            Tok::Caret => "^",
            Tok::Minus => "-",
            Tok::Eq => "=",
            Tok::Neq => "!=",
            Tok::Bang => "!",
            Tok::Amp => "&",
            Tok::Pipe => "|",
            Tok::Arrow => "->",
            Tok::DoubleArrow => "<->",
            _ => "?",
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Pos {
    line: usize,
    column: usize,
}

fn syntax(pos: Pos, message: impl Into<String>) -> ParseError {
    ParseError::Syntax { line: pos.line, column: pos.column, message: message.into() }
}

fn lex(text: &str) -> Result<Vec<(Tok, Pos)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, column: col };
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        let start = i;
        let tok = if c.is_ascii_lowercase() {
            while i < chars.len()
                && (chars[i].is_ascii_lowercase() || chars[i].is_ascii_digit() || chars[i] == '_')
            {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            match word.as_str() {
                "forall" => Tok::Forall,
                "exists" => Tok::Exists,
                _ => Tok::Ident(word),
            }
        } else if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            Tok::Int(digits.parse().map_err(|_| syntax(pos, "integer literal too large"))?)
        } else {
            let two: String = chars[i..(i + 2).min(chars.len())].iter().collect();
            let three: String = chars[i..(i + 3).min(chars.len())].iter().collect();
            let (tok, len) = if three == "<->" {
                (Tok::DoubleArrow, 3)
            } else if two == "->" {
                (Tok::Arrow, 2)
            } else if two == "!=" {
                (Tok::Neq, 2)
            } else {
                let t = match c {
                    '.' => Tok::Dot,
                    ',' => Tok::Comma,
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    '[' => Tok::LBracket,
                    ']' => Tok::RBracket,
                    '*' => Tok::Star,
                    '^' => Tok::Caret,
                    '-' => Tok::Minus,
                    '=' => Tok::Eq,
                    '!' => Tok::Bang,
                    '&' => Tok::Amp,
                    '|' => Tok::Pipe,
                    _ => return Err(syntax(pos, format!("unexpected character `{c}`"))),
                };
                (t, 1)
            };
            i += len;
            tok
        };
        col += i - start;
        out.push((tok, pos));
    }
    out.push((Tok::End, Pos { line, column: col }));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

type PResult<T> = Result<T, ParseError>;

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == tok {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: Tok) -> PResult<()> {
        if self.eat(&tok) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("`{}`", tok.symbol())))
        }
    }

    fn unexpected(&self, wanted: &str) -> ParseError {
        syntax(self.pos(), format!("expected {wanted}, found {}", self.peek().describe()))
    }

    fn iff(&mut self) -> PResult<Formula> {
        let mut lhs = self.implies()?;
        while self.eat(&Tok::DoubleArrow) {
            lhs = lhs.iff(self.implies()?);
        }
        Ok(lhs)
    }

    fn implies(&mut self) -> PResult<Formula> {
        let lhs = self.or()?;
        if self.eat(&Tok::Arrow) {
            Ok(lhs.implies(self.implies()?))
        } else {
            Ok(lhs)
        }
    }

    fn or(&mut self) -> PResult<Formula> {
        let mut lhs = self.and()?;
        while self.eat(&Tok::Pipe) {
            lhs = lhs.or(self.and()?);
        }
        Ok(lhs)
    }

    fn and(&mut self) -> PResult<Formula> {
        let mut lhs = self.unary()?;
        while self.eat(&Tok::Amp) {
            lhs = lhs.and(self.unary()?);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> PResult<Formula> {
        match self.peek() {
            Tok::Bang => {
                self.bump();
                Ok(self.unary()?.not())
            }
            Tok::Forall | Tok::Exists => {
                let q = if self.bump() == Tok::Forall { Quantifier::Forall } else { Quantifier::Exists };
                let mut vars = vec![self.variable()?];
                while self.eat(&Tok::Comma) {
                    vars.push(self.variable()?);
                }
                self.expect(Tok::Dot)?;
                let body = self.iff()?;
                Ok(Formula::Quant(q, vars, Box::new(body)))
            }
            Tok::LParen => {
                // Either a parenthesized term starting an atom, or a
                // parenthesized formula.
                let start = self.at;
                match self.atom() {
                    Ok(f) => Ok(f),
                    Err(atom_err) => {
                        let atom_reach = self.at;
                        self.at = start;
                        self.bump();
                        let inner = self.iff().and_then(|f| self.expect(Tok::RParen).map(|_| f));
                        match inner {
                            Ok(f) => Ok(f),
                            Err(e) if self.at >= atom_reach => Err(e),
                            Err(_) => Err(atom_err),
                        }
                    }
                }
            }
            _ => self.atom(),
        }
    }

    fn variable(&mut self) -> PResult<String> {
        match self.peek().clone() {
            Tok::Ident(v) => {
                self.bump();
                Ok(v)
            }
            _ => Err(self.unexpected("a variable name")),
        }
    }

    fn atom(&mut self) -> PResult<Formula> {
        let lhs = self.term()?;
        if self.eat(&Tok::Eq) {
            Ok(Formula::eq(lhs, self.term()?))
        } else if self.eat(&Tok::Neq) {
            Ok(Formula::neq(lhs, self.term()?))
        } else {
            Err(self.unexpected("`=` or `!=`"))
        }
    }

    fn term(&mut self) -> PResult<Term> {
        let mut lhs = self.power()?;
        while self.eat(&Tok::Star) {
            lhs = lhs.mul(self.power()?);
        }
        Ok(lhs)
    }

    fn power(&mut self) -> PResult<Term> {
        let base = self.primary()?;
        if !self.eat(&Tok::Caret) {
            return Ok(base);
        }
        let negative = self.eat(&Tok::Minus);
        match *self.peek() {
            Tok::Int(n) => {
                self.bump();
                Ok(base.pow(if negative { -n } else { n }))
            }
            _ => Err(self.unexpected("an integer exponent")),
        }
    }

    fn primary(&mut self) -> PResult<Term> {
        let pos = self.pos();
        if matches!(self.peek(), Tok::Int(_) | Tok::Ident(_) | Tok::LParen | Tok::LBracket) {
            return self.primary_unchecked(pos);
        }
        Err(self.unexpected("a term"))
    }

    fn primary_unchecked(&mut self, pos: Pos) -> PResult<Term> {
        match self.bump() {
            Tok::Int(1) => Ok(Term::One),
            Tok::Int(n) => Err(syntax(pos, format!("`{n}` is not a term; the only constant is `1`"))),
            Tok::Ident(v) => Ok(Term::Var(v)),
            Tok::LParen => {
                let t = self.term()?;
                self.expect(Tok::RParen)?;
                Ok(t)
            }
            Tok::LBracket => {
                let a = self.term()?;
                self.expect(Tok::Comma)?;
                let b = self.term()?;
                self.expect(Tok::RBracket)?;
                Ok(a.comm(b))
            }
            _ => unreachable!("checked by primary"),
        }
    }
}

/// Parses a formula. Binders that shadow an enclosing binder of the same
/// name are renamed, so bound names are unique along every path.
pub fn parse(text: &str) -> Result<Formula, ParseError> {
    let mut p = Parser { toks: lex(text)?, at: 0 };
    let f = p.iff()?;
    if *p.peek() != Tok::End {
        return Err(p.unexpected("end of input"));
    }
    Ok(rename_shadowed(&f))
}

/// Parses a formula and requires it to be closed.
pub fn parse_sentence(text: &str) -> Result<Formula, ParseError> {
    let f = parse(text)?;
    let free = f.free_vars();
    if free.is_empty() {
        Ok(f)
    } else {
        Err(ParseError::Unbound(free.into_iter().collect()))
    }
}

/// Parses a term on its own.
pub fn parse_term(text: &str) -> Result<Term, ParseError> {
    let mut p = Parser { toks: lex(text)?, at: 0 };
    let t = p.term()?;
    if *p.peek() != Tok::End {
        return Err(p.unexpected("end of input"));
    }
    Ok(t)
}
