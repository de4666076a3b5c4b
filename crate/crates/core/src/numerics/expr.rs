//! A small expression language evaluated in interval arithmetic.
//!
//! Grammar, loosest binding first:
//!
//! ```text
//! expr  = term (('+' | '-') term)*
//! term  = unary (('*' | '/') unary)*
//! unary = '-' unary | power
//! power = atom ('^' unary)?
//! atom  = number | name | name '(' expr ')' | '(' expr ')'
//! ```
//!
//! The Unicode minus sign and the multiplication signs `·` and `×` are
//! accepted as aliases.

use std::collections::HashMap;
use std::fmt;

use super::{lambert_w0, DirectedReal};
use crate::error::{domain, Error, Result};

pub type Env = HashMap<String, DirectedReal>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Func {
    Sqrt,
    Log,
    Exp,
    Sin,
    Cos,
    Tan,
    Cot,
    Cosh,
    W0,
}

impl Func {
    fn from_name(name: &str) -> Option<Func> {
        Some(match name {
            "sqrt" => Func::Sqrt,
            "log" | "ln" => Func::Log,
            "exp" => Func::Exp,
            "sin" => Func::Sin,
            "cos" => Func::Cos,
            "tan" => Func::Tan,
            "cot" => Func::Cot,
            "cosh" => Func::Cosh,
            "w0" | "W0" | "lambertw" => Func::W0,
            _ => return None,
        })
    }

    fn name(self) -> &'static str {
        match self {
            Func::Sqrt => "sqrt",
            Func::Log => "log",
            Func::Exp => "exp",
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Tan => "tan",
            Func::Cot => "cot",
            Func::Cosh => "cosh",
            Func::W0 => "w0",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(String),
    Pi,
    E,
    Var(String),
    Neg(Box<Expr>),
    Bin(BinOp, Box<Expr>, Box<Expr>),
    Call(Func, Box<Expr>),
}

impl Expr {
    pub fn parse(src: &str) -> Result<Expr> {
        let tokens = lex(src)?;
        let mut p = Parser { tokens, pos: 0 };
        let e = p.expr()?;
        if let Some(t) = p.tokens.get(p.pos) {
            return Err(Error::Parse {
                pos: t.pos,
                message: format!("unexpected {:?}", t.kind),
            });
        }
        Ok(e)
    }

    /// Names of free variables, sorted and deduplicated.
    pub fn free_vars(&self) -> Vec<String> {
        fn walk(e: &Expr, out: &mut Vec<String>) {
            match e {
                Expr::Var(v) => out.push(v.clone()),
                Expr::Neg(a) | Expr::Call(_, a) => walk(a, out),
                Expr::Bin(_, a, b) => {
                    walk(a, out);
                    walk(b, out);
                }
                _ => {}
            }
        }
        let mut v = Vec::new();
        walk(self, &mut v);
        v.sort();
        v.dedup();
        v
    }

    fn int_literal(&self) -> Option<i64> {
        match self {
            Expr::Num(s) => s.parse::<i64>().ok(),
            Expr::Neg(a) => a.int_literal().map(|n| -n),
            _ => None,
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(s) => write!(f, "{s}"),
            Expr::Pi => write!(f, "pi"),
            Expr::E => write!(f, "e"),
            Expr::Var(v) => write!(f, "{v}"),
            Expr::Neg(a) => write!(f, "-({a})"),
            Expr::Call(func, a) => write!(f, "{}({a})", func.name()),
            Expr::Bin(op, a, b) => {
                let sym = match op {
                    BinOp::Add => "+",
                    BinOp::Sub => "-",
                    BinOp::Mul => "*",
                    BinOp::Div => "/",
                    BinOp::Pow => "^",
                };
                write!(f, "({a} {sym} {b})")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Op(char),
    LParen,
    RParen,
}

#[derive(Clone, Debug)]
struct Token {
    kind: Tok,
    pos: usize,
}

fn lex(src: &str) -> Result<Vec<Token>> {
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        match c {
            c if c.is_whitespace() => i += 1,
            '0'..='9' | '.' => {
                let mut s = String::new();
                while i < chars.len() && (chars[i].1.is_ascii_digit() || chars[i].1 == '.') {
                    s.push(chars[i].1);
                    i += 1;
                }
                // An exponent marker only counts when a digit (after an optional sign) follows.
                if i < chars.len() && matches!(chars[i].1, 'e' | 'E') {
                    let mut j = i + 1;
                    if j < chars.len() && matches!(chars[j].1, '+' | '-') {
                        j += 1;
                    }
                    if j < chars.len() && chars[j].1.is_ascii_digit() {
                        s.push('e');
                        for &(_, ch) in &chars[i + 1..j] {
                            s.push(ch);
                        }
                        i = j;
                        while i < chars.len() && chars[i].1.is_ascii_digit() {
                            s.push(chars[i].1);
                            i += 1;
                        }
                    }
                }
                out.push(Token {
                    kind: Tok::Num(s),
                    pos,
                });
            }
            c if c.is_alphabetic() || c == '_' => {
                let mut s = String::new();
                while i < chars.len() && (chars[i].1.is_alphanumeric() || chars[i].1 == '_') {
                    s.push(chars[i].1);
                    i += 1;
                }
                out.push(Token {
                    kind: Tok::Ident(s),
                    pos,
                });
            }
            '+' | '-' | '*' | '/' | '^' | '\u{2212}' | '\u{b7}' | '\u{d7}' => {
                let op = match c {
                    '\u{2212}' => '-',
                    '\u{b7}' | '\u{d7}' => '*',
                    other => other,
                };
                out.push(Token {
                    kind: Tok::Op(op),
                    pos,
                });
                i += 1;
            }
            '(' => {
                out.push(Token {
                    kind: Tok::LParen,
                    pos,
                });
                i += 1;
            }
            ')' => {
                out.push(Token {
                    kind: Tok::RParen,
                    pos,
                });
                i += 1;
            }
            other => {
                return Err(Error::Parse {
                    pos,
                    message: format!("unexpected character `{other}`"),
                })
            }
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|t| &t.kind)
    }

    fn eat_op(&mut self, ops: &[char]) -> Option<char> {
        match self.peek() {
            Some(Tok::Op(c)) if ops.contains(c) => {
                let c = *c;
                self.pos += 1;
                Some(c)
            }
            _ => None,
        }
    }

    fn err(&self, message: &str) -> Error {
        let pos = self
            .tokens
            .get(self.pos)
            .map(|t| t.pos)
            .unwrap_or_else(|| self.tokens.last().map(|t| t.pos + 1).unwrap_or(0));
        Error::Parse {
            pos,
            message: message.to_string(),
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        while let Some(c) = self.eat_op(&['+', '-']) {
            let rhs = self.term()?;
            let op = if c == '+' { BinOp::Add } else { BinOp::Sub };
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        while let Some(c) = self.eat_op(&['*', '/']) {
            let rhs = self.unary()?;
            let op = if c == '*' { BinOp::Mul } else { BinOp::Div };
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat_op(&['-']).is_some() {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        if self.eat_op(&['+']).is_some() {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.eat_op(&['^']).is_some() {
            let exp = self.unary()?;
            return Ok(Expr::Bin(BinOp::Pow, Box::new(base), Box::new(exp)));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        let tok = self.peek().cloned().ok_or_else(|| self.err("unexpected end of input"))?;
        match tok {
            Tok::Num(s) => {
                self.pos += 1;
                Ok(Expr::Num(s))
            }
            Tok::LParen => {
                self.pos += 1;
                let e = self.expr()?;
                self.close()?;
                Ok(e)
            }
            Tok::Ident(name) => {
                self.pos += 1;
                if self.peek() == Some(&Tok::LParen) {
                    let func = Func::from_name(&name)
                        .ok_or_else(|| self.err(&format!("unknown function `{name}`")))?;
                    self.pos += 1;
                    let arg = self.expr()?;
                    self.close()?;
                    return Ok(Expr::Call(func, Box::new(arg)));
                }
                Ok(match name.as_str() {
                    "pi" | "π" => Expr::Pi,
                    "e" => Expr::E,
                    _ => Expr::Var(name),
                })
            }
            _ => Err(self.err("expected a number, name or `(`")),
        }
    }

    fn close(&mut self) -> Result<()> {
        if self.peek() == Some(&Tok::RParen) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err("expected `)`"))
        }
    }
}

/// Evaluates `expr` over the enclosures in `env`.
pub fn interval_eval(expr: &Expr, env: &Env, prec: u32) -> Result<DirectedReal> {
    let ev = |e: &Expr| interval_eval(e, env, prec);
    Ok(match expr {
        Expr::Num(s) => DirectedReal::decimal(s, prec)?,
        Expr::Pi => DirectedReal::pi(prec),
        Expr::E => DirectedReal::e(prec),
        Expr::Var(v) => env
            .get(v)
            .ok_or_else(|| Error::UnboundVariable(v.clone()))?
            .with_precision(prec),
        Expr::Neg(a) => -ev(a)?,
        Expr::Bin(op, a, b) => {
            let x = ev(a)?;
            if *op == BinOp::Pow {
                if let Some(n) = b.int_literal() {
                    if n < 0 && x.contains_zero() {
                        return Err(domain(expr.to_string()));
                    }
                    return Ok(x.powi(n));
                }
                let y = ev(b)?;
                if !x.certainly_positive() {
                    return Err(domain(expr.to_string()));
                }
                return Ok(x.pow(&y));
            }
            let y = ev(b)?;
            match op {
                BinOp::Add => x + y,
                BinOp::Sub => x - y,
                BinOp::Mul => x * y,
                BinOp::Div => {
                    if y.contains_zero() {
                        return Err(domain(expr.to_string()));
                    }
                    x / y
                }
                BinOp::Pow => unreachable!(),
            }
        }
        Expr::Call(func, a) => {
            let x = ev(a)?;
            let bad = || domain(expr.to_string());
            match func {
                Func::Sqrt if x.lo() < &0 => return Err(bad()),
                Func::Log if x.lo() <= &0 => return Err(bad()),
                Func::Tan if x.meets_tan_pole() => return Err(bad()),
                Func::Cot if x.meets_cot_pole() => return Err(bad()),
                Func::W0 if x.lo() < &0 => return Err(bad()),
                _ => {}
            }
            match func {
                Func::Sqrt => x.sqrt(),
                Func::Log => x.ln(),
                Func::Exp => x.exp(),
                Func::Sin => x.sin(),
                Func::Cos => x.cos(),
                Func::Tan => x.tan(),
                Func::Cot => x.cot(),
                Func::Cosh => x.cosh(),
                Func::W0 => lambert_w0(&x)?,
            }
        }
    })
}

/// Parses and evaluates in one step.
pub fn eval_str(src: &str, env: &Env, prec: u32) -> Result<DirectedReal> {
    interval_eval(&Expr::parse(src)?, env, prec)
}
