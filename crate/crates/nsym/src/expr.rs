//! Expression language over the basis atoms: recursive-descent parser,
//! evaluator into Ψ coordinates, and a printer whose output reparses to an
//! equal tree.
//!
//! Grammar:
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := rational | atom | 'omega' '(' expr ')' | '(' expr ')'
//! atom   := name '[' int (',' int)* ']'
//! ```
//! `*` is noncommutative; the elementary basis is spelled `E` (alias `Lam`).

use std::fmt;

use crate::algebra::omega;
use crate::bases::basis_to_psi;
use crate::composition::Composition;
use crate::element::{mul_psi, rat_to_string, Basis, Element, Rational};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Number(Rational),
    Atom(Basis, Composition),
    Omega(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
}

struct Parser<'a> {
    text: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser { text: text.as_bytes(), pos: 0 }
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse { pos: self.pos, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.text.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", c as char)))
        }
    }

    fn integer(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected an integer"));
        }
        Ok(std::str::from_utf8(&self.text[start..self.pos]).unwrap().to_string())
    }

    fn ident(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.text[start..self.pos]).unwrap().to_string()
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut left = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    left = Expr::Add(Box::new(left), Box::new(self.term()?));
                }
                Some(b'-') => {
                    self.pos += 1;
                    left = Expr::Sub(Box::new(left), Box::new(self.term()?));
                }
                _ => return Ok(left),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut left = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            left = Expr::Mul(Box::new(left), Box::new(self.factor()?));
        }
        Ok(left)
    }

    fn factor(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.eat(b')')?;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let numer = self.integer()?;
                let text = if self.peek() == Some(b'/') {
                    self.pos += 1;
                    format!("{numer}/{}", self.integer()?)
                } else {
                    numer
                };
                crate::element::rat_from_str(&text)
                    .map(Expr::Number)
                    .map_err(|_| self.error(format!("bad rational {text:?}")))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let name = self.ident();
                if name == "omega" {
                    self.eat(b'(')?;
                    let inner = self.expr()?;
                    self.eat(b')')?;
                    return Ok(Expr::Omega(Box::new(inner)));
                }
                let basis = Basis::parse(&name).map_err(|_| self.error(format!("unknown basis {name:?}")))?;
                self.eat(b'[')?;
                let mut parts = Vec::new();
                loop {
                    let p: u32 = self
                        .integer()?
                        .parse()
                        .map_err(|_| self.error("part out of range"))?;
                    if p == 0 {
                        return Err(self.error("composition parts must be positive"));
                    }
                    parts.push(p);
                    match self.peek() {
                        Some(b',') => {
                            self.pos += 1;
                        }
                        Some(b']') => {
                            self.pos += 1;
                            break;
                        }
                        _ => return Err(self.error("expected ',' or ']'")),
                    }
                }
                Ok(Expr::Atom(basis, Composition::new(parts).unwrap()))
            }
            _ => Err(self.error("expected a factor")),
        }
    }
}

/// Parses one expression; the whole input must be consumed.
pub fn parse(text: &str) -> Result<Expr> {
    let mut p = Parser::new(text);
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(p.error("trailing input"));
    }
    Ok(e)
}

/// Evaluates to an element in Ψ coordinates.
pub fn eval(e: &Expr) -> Result<Element> {
    match e {
        Expr::Number(c) => Ok(Element::unit(Basis::Psi).scale(c)),
        Expr::Atom(basis, index) => Ok(basis_to_psi(*basis, index)),
        Expr::Omega(inner) => Ok(omega(&eval(inner)?)),
        Expr::Add(a, b) => eval(a)?.add(&eval(b)?),
        Expr::Sub(a, b) => eval(a)?.sub(&eval(b)?),
        Expr::Mul(a, b) => mul_psi(&eval(a)?, &eval(b)?),
    }
}

/// Parse-and-evaluate convenience.
pub fn eval_str(text: &str) -> Result<Element> {
    eval(&parse(text)?)
}

impl Expr {
    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) => 2,
            _ => 3,
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn child(f: &mut fmt::Formatter<'_>, e: &Expr, min: u8) -> fmt::Result {
            if e.precedence() < min {
                write!(f, "(")?;
                fmt::Display::fmt(e, f)?;
                write!(f, ")")
            } else {
                fmt::Display::fmt(e, f)
            }
        }
        match self {
            Expr::Number(c) => write!(f, "{}", rat_to_string(c)),
            Expr::Atom(basis, index) => {
                let parts: Vec<String> = index.parts().iter().map(|p| p.to_string()).collect();
                write!(f, "{}[{}]", basis.symbol(), parts.join(","))
            }
            Expr::Omega(inner) => write!(f, "omega({inner})"),
            Expr::Add(a, b) => {
                child(f, a, 1)?;
                write!(f, " + ")?;
                child(f, b, 2)
            }
            Expr::Sub(a, b) => {
                child(f, a, 1)?;
                write!(f, " - ")?;
                child(f, b, 2)
            }
            Expr::Mul(a, b) => {
                child(f, a, 2)?;
                write!(f, "*")?;
                child(f, b, 3)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bases::m_to_psi;
    use crate::element::{rat, rat_frac};

    fn c(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn parses_atoms_and_literals() {
        assert_eq!(parse("M[3,1,2]").unwrap(), Expr::Atom(Basis::M, c(&[3, 1, 2])));
        assert_eq!(parse("1/2").unwrap(), Expr::Number(rat_frac(1, 2)));
        assert_eq!(parse("E[2]").unwrap(), Expr::Atom(Basis::Lambda, c(&[2])));
        assert_eq!(parse("Lam[2]").unwrap(), Expr::Atom(Basis::Lambda, c(&[2])));
        assert!(parse("M[0]").is_err());
        assert!(parse("Q[1]").is_err());
        assert!(parse("M[1] extra").is_err());
        assert!(parse("").is_err());
    }

    #[test]
    fn precedence_and_associativity() {
        let e = parse("Psi[1] + Psi[2]*M[1] - 2").unwrap();
        // ((Psi[1] + (Psi[2]*M[1])) - 2)
        match e {
            Expr::Sub(left, right) => {
                assert_eq!(*right, Expr::Number(rat(2)));
                match *left {
                    Expr::Add(_, inner) => assert!(matches!(*inner, Expr::Mul(..))),
                    other => panic!("unexpected tree {other:?}"),
                }
            }
            other => panic!("unexpected tree {other:?}"),
        }
    }

    #[test]
    fn eval_examples() {
        let e = eval_str("M[3,1,2]").unwrap();
        assert_eq!(e, m_to_psi(&c(&[3, 1, 2])));
        assert_eq!(e.num_terms(), 4);

        // ω(S_2) = Λ_2
        let e = eval_str("omega(S[2])").unwrap();
        assert_eq!(e, eval_str("E[2]").unwrap());

        // Pieri instance, in Ψ coordinates
        let lhs = eval_str("Psi[2]*M[3]").unwrap();
        let rhs = eval_str("2*M[2,3] + M[5]").unwrap();
        assert_eq!(lhs, rhs);

        // order sensitivity
        assert_ne!(eval_str("Psi[1]*Psi[2]").unwrap(), eval_str("Psi[2]*Psi[1]").unwrap());
    }

    #[test]
    fn print_parse_round_trip() {
        let corpus = [
            "M[3,1,2]",
            "omega(S[2])",
            "Psi[2]*M[3]",
            "1/2*Psi[1,1] + 3*F[2]",
            "(M[1] + M[2])*S[1]",
            "M[1]*(S[1] + S[2])",
            "Psi[1] + Psi[2] - Psi[3]",
            "Psi[1] - (Psi[2] - Psi[3])",
            "omega(M[2,1]*F[1]) - 2/3",
            "L[1,1]*R[2]*E[1]",
        ];
        for text in corpus {
            let e = parse(text).unwrap();
            let printed = e.to_string();
            let reparsed = parse(&printed).unwrap();
            assert_eq!(e, reparsed, "{text} → {printed}");
        }
    }
}
