//! Rational-function expressions over named parameters.
//!
//! Grammar: integers, identifiers, `+ - * /`, `^` with an integer exponent,
//! unary minus and parentheses.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::exact_arith::Rational;

pub type Assignment = BTreeMap<String, Rational>;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Node {
    Num(Rational),
    Var(String),
    Neg(Box<Node>),
    Add(Box<Node>, Box<Node>),
    Sub(Box<Node>, Box<Node>),
    Mul(Box<Node>, Box<Node>),
    Div(Box<Node>, Box<Node>),
    Pow(Box<Node>, i32),
}

#[derive(Clone, PartialEq, Eq)]
pub struct Expr {
    src: String,
    node: Node,
}

impl Expr {
    pub fn parse(src: &str) -> Result<Expr> {
        let tokens = tokenize(src)?;
        let mut p = Parser { tokens: &tokens, pos: 0, src };
        let node = p.expr()?;
        if p.pos != tokens.len() {
            return Err(p.error("trailing input"));
        }
        Ok(Expr { src: src.trim().to_string(), node })
    }

    pub fn eval(&self, env: &Assignment) -> Result<Rational> {
        eval(&self.node, env).map_err(|e| match e {
            EvalError::Unbound(v) => Error::Assignment(format!("parameter {v} is not assigned")),
            EvalError::Pole => Error::Domain(format!("{} has a pole at {}", self.src, render_env(env))),
        })
    }

    pub fn symbols(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        collect(&self.node, &mut out);
        out
    }

    pub fn as_str(&self) -> &str {
        &self.src
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.src)
    }
}

impl fmt::Debug for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Expr({})", self.src)
    }
}

pub(crate) fn render_env(env: &Assignment) -> String {
    env.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(",")
}

enum EvalError {
    Unbound(String),
    Pole,
}

fn eval(n: &Node, env: &Assignment) -> std::result::Result<Rational, EvalError> {
    Ok(match n {
        Node::Num(q) => q.clone(),
        Node::Var(v) => env.get(v).cloned().ok_or_else(|| EvalError::Unbound(v.clone()))?,
        Node::Neg(a) => -eval(a, env)?,
        Node::Add(a, b) => eval(a, env)? + eval(b, env)?,
        Node::Sub(a, b) => eval(a, env)? - eval(b, env)?,
        Node::Mul(a, b) => eval(a, env)? * eval(b, env)?,
        Node::Div(a, b) => eval(a, env)?.checked_div(&eval(b, env)?).map_err(|_| EvalError::Pole)?,
        Node::Pow(a, e) => eval(a, env)?.pow(*e).map_err(|_| EvalError::Pole)?,
    })
}

fn collect(n: &Node, out: &mut BTreeSet<String>) {
    match n {
        Node::Num(_) => {}
        Node::Var(v) => {
            out.insert(v.clone());
        }
        Node::Neg(a) | Node::Pow(a, _) => collect(a, out),
        Node::Add(a, b) | Node::Sub(a, b) | Node::Mul(a, b) | Node::Div(a, b) => {
            collect(a, out);
            collect(b, out);
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(i64),
    Ident(String),
    Op(char),
}

fn tokenize(src: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let mut chars = src.char_indices().peekable();
    while let Some(&(i, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if c.is_ascii_digit() {
            let mut end = i;
            while let Some(&(j, d)) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                end = j + 1;
                chars.next();
            }
            let n = src[i..end].parse().map_err(|_| Error::Domain(format!("number too large in {src:?}")))?;
            out.push(Tok::Num(n));
        } else if c.is_ascii_alphabetic() {
            let mut end = i;
            while let Some(&(j, d)) = chars.peek() {
                if !(d.is_ascii_alphanumeric() || d == '_') {
                    break;
                }
                end = j + 1;
                chars.next();
            }
            out.push(Tok::Ident(src[i..end].to_string()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            chars.next();
        } else {
            return Err(Error::Domain(format!("unexpected {c:?} in expression {src:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: &'a [Tok],
    pos: usize,
    src: &'a str,
}

impl Parser<'_> {
    fn error(&self, what: &str) -> Error {
        Error::Domain(format!("{what} at token {} of expression {:?}", self.pos, self.src))
    }

    fn peek_op(&self) -> Option<char> {
        match self.tokens.get(self.pos) {
            Some(Tok::Op(c)) => Some(*c),
            _ => None,
        }
    }

    fn expr(&mut self) -> Result<Node> {
        let mut lhs = self.term()?;
        while let Some(op @ ('+' | '-')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.term()?;
            lhs = if op == '+' {
                Node::Add(Box::new(lhs), Box::new(rhs))
            } else {
                Node::Sub(Box::new(lhs), Box::new(rhs))
            };
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Node> {
        let mut lhs = self.unary()?;
        while let Some(op @ ('*' | '/')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.unary()?;
            lhs = if op == '*' {
                Node::Mul(Box::new(lhs), Box::new(rhs))
            } else {
                Node::Div(Box::new(lhs), Box::new(rhs))
            };
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Node> {
        if self.peek_op() == Some('-') {
            self.pos += 1;
            return Ok(Node::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Node> {
        let base = self.atom()?;
        if self.peek_op() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        let neg = if self.peek_op() == Some('-') {
            self.pos += 1;
            true
        } else {
            false
        };
        match self.tokens.get(self.pos) {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                let e = i32::try_from(*n).map_err(|_| self.error("exponent too large"))?;
                Ok(Node::Pow(Box::new(base), if neg { -e } else { e }))
            }
            _ => Err(self.error("expected integer exponent")),
        }
    }

    fn atom(&mut self) -> Result<Node> {
        let tok = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        match tok {
            Some(Tok::Num(n)) => Ok(Node::Num(Rational::from(n))),
            Some(Tok::Ident(v)) => Ok(Node::Var(v)),
            Some(Tok::Op('(')) => {
                let inner = self.expr()?;
                if self.peek_op() != Some(')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            _ => {
                self.pos -= 1;
                Err(self.error("expected a number, name or '('"))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn env(pairs: &[(&str, &str)]) -> Assignment {
        pairs.iter().map(|(k, v)| (k.to_string(), v.parse().unwrap())).collect()
    }

    #[test]
    fn precedence_and_powers() {
        let e = env(&[("a", "2"), ("b", "3/2")]);
        let v = |s: &str| Expr::parse(s).unwrap().eval(&e).unwrap().to_string();
        assert_eq!(v("1 + a*b"), "4");
        assert_eq!(v("(1 + a)*b"), "9/2");
        assert_eq!(v("-a^2"), "-4");
        assert_eq!(v("a^-2"), "1/4");
        assert_eq!(v("a/b/2"), "2/3");
        assert_eq!(v("a - b - 1"), "-1/2");
        assert_eq!(v("2*(a+b)/(2*(a+b)-a)"), "7/5");
    }

    #[test]
    fn errors() {
        assert!(Expr::parse("1 +").is_err());
        assert!(Expr::parse("(a").is_err());
        assert!(Expr::parse("a $ b").is_err());
        assert!(Expr::parse("a b").is_err());
        let e = Expr::parse("1/(a-2)").unwrap();
        assert!(matches!(e.eval(&env(&[("a", "2")])), Err(Error::Domain(_))));
        assert!(matches!(e.eval(&env(&[])), Err(Error::Assignment(_))));
    }

    #[test]
    fn symbol_collection() {
        let e = Expr::parse("alpha*(alpha - gamma + 1)/(beta - 1)").unwrap();
        let s: Vec<_> = e.symbols().into_iter().collect();
        assert_eq!(s, ["alpha", "beta", "gamma"]);
    }
}
