//! Free associative algebra over an abstract symbol alphabet.
//!
//! Words are sequences of matrix-position symbols `a_{ij}`; symbols never
//! commute with each other while rational coefficients are central. This is
//! the coefficient domain of the quasideterminant engine before substitution.

use std::collections::BTreeMap;
use std::fmt;

use num::Zero;

use crate::element::{mul_psi, rat_to_string, Basis, Element, Rational};
use crate::error::{Error, Result};

/// Matrix-position symbol `a_{row,col}` (1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom {
    pub row: u8,
    pub col: u8,
}

impl Atom {
    pub fn new(row: u8, col: u8) -> Self {
        Atom { row, col }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a{}{}", self.row, self.col)
    }
}

pub type SymWord = Vec<Atom>;

/// Sparse linear combination of words with rational coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SymElement {
    terms: BTreeMap<SymWord, Rational>,
}

impl SymElement {
    pub fn zero() -> Self {
        SymElement::default()
    }

    /// The empty word with coefficient 1.
    pub fn one() -> Self {
        SymElement::word(Vec::new(), crate::element::rat(1))
    }

    pub fn atom(a: Atom) -> Self {
        SymElement::word(vec![a], crate::element::rat(1))
    }

    pub fn word(w: SymWord, coeff: Rational) -> Self {
        let mut e = SymElement::zero();
        e.add_term(w, coeff);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SymWord, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &SymWord) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, w: SymWord, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &SymElement) {
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c.clone());
        }
    }

    pub fn scale(&self, c: &Rational) -> SymElement {
        if c.is_zero() {
            return SymElement::zero();
        }
        SymElement { terms: self.terms.iter().map(|(w, v)| (w.clone(), v * c)).collect() }
    }

    /// Concatenation product extended bilinearly.
    pub fn mul(&self, other: &SymElement) -> SymElement {
        let mut out = SymElement::zero();
        for (u, cu) in &self.terms {
            for (v, cv) in &other.terms {
                let mut w = u.clone();
                w.extend_from_slice(v);
                out.add_term(w, cu * cv);
            }
        }
        out
    }

    /// Maps each word to the ordered Ψ-product of its symbol images.
    /// Every symbol occurring in `self` must be bound to a Ψ-basis element.
    pub fn substitute(&self, env: &BTreeMap<Atom, Element>) -> Result<Element> {
        let mut out = Element::zero(Basis::Psi);
        for (w, c) in &self.terms {
            let mut prod = Element::unit(Basis::Psi);
            for a in w {
                let img = env.get(a).ok_or(Error::UnboundSymbol(a.row, a.col))?;
                if img.basis() != Basis::Psi {
                    return Err(Error::BasisMismatch { expected: Basis::Psi, got: img.basis() });
                }
                prod = mul_psi(&prod, img)?;
            }
            out.add_assign_scaled(&prod.scale(c), &crate::element::rat(1))?;
        }
        Ok(out)
    }
}

impl fmt::Debug for SymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}", rat_to_string(c))?;
            for a in w {
                write!(f, "·{a}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::Composition;
    use crate::element::rat;

    fn psi(parts: &[u32]) -> Element {
        Element::term(Basis::Psi, Composition::new(parts.to_vec()).unwrap(), rat(1))
    }

    #[test]
    fn word_concatenation() {
        let a31 = SymElement::atom(Atom::new(3, 1));
        let a11 = SymElement::atom(Atom::new(1, 1));
        let prod = a31.mul(&a11);
        assert_eq!(prod.coeff(&vec![Atom::new(3, 1), Atom::new(1, 1)]), rat(1));
        assert_eq!(prod.num_terms(), 1);
    }

    #[test]
    fn substitution() {
        let mut env = BTreeMap::new();
        env.insert(Atom::new(2, 1), psi(&[4]));
        let a21 = SymElement::atom(Atom::new(2, 1));
        assert_eq!(a21.substitute(&env).unwrap(), psi(&[4]));

        let mut env = BTreeMap::new();
        env.insert(Atom::new(3, 2), psi(&[4]));
        env.insert(Atom::new(1, 1), psi(&[2]));
        let w = SymElement::atom(Atom::new(3, 2)).mul(&SymElement::atom(Atom::new(1, 1)));
        assert_eq!(w.substitute(&env).unwrap(), psi(&[4, 2]));

        let unbound = SymElement::atom(Atom::new(5, 5));
        assert!(unbound.substitute(&env).is_err());
    }
}
