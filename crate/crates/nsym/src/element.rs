//! Sparse linear combinations of compositions over exact rationals.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::composition::Composition;
use crate::error::{Error, Result};

/// Exact coefficient scalar. Always in lowest terms with positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Canonical `p/q` text (just `p` when `q = 1`).
pub fn rat_to_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses the canonical `p/q` form.
pub fn rat_from_str(s: &str) -> Result<Rational> {
    let parse_int = |t: &str| -> Result<BigInt> {
        t.parse::<BigInt>().map_err(|_| Error::Parse { pos: 0, msg: format!("bad rational {s:?}") })
    };
    match s.split_once('/') {
        Some((p, q)) => {
            let den = parse_int(q)?;
            if den.is_zero() {
                return Err(Error::Parse { pos: 0, msg: "zero denominator".into() });
            }
            Ok(Rational::new(parse_int(p)?, den))
        }
        None => Ok(Rational::from_integer(parse_int(s)?)),
    }
}

/// Basis tag carried by every [`Element`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Basis {
    Psi,
    S,
    Lambda,
    M,
    F,
    L,
    R,
}

pub const ALL_BASES: [Basis; 7] =
    [Basis::Psi, Basis::S, Basis::Lambda, Basis::M, Basis::F, Basis::L, Basis::R];

impl Basis {
    /// Tag used in JSON output.
    pub fn name(self) -> &'static str {
        match self {
            Basis::Psi => "Psi",
            Basis::S => "S",
            Basis::Lambda => "Lambda",
            Basis::M => "M",
            Basis::F => "F",
            Basis::L => "L",
            Basis::R => "R",
        }
    }

    /// Spelling used by the expression grammar (elementary is `E`).
    pub fn symbol(self) -> &'static str {
        match self {
            Basis::Lambda => "E",
            other => other.name(),
        }
    }

    pub fn parse(s: &str) -> Result<Basis> {
        match s {
            "Psi" | "psi" => Ok(Basis::Psi),
            "S" | "s" => Ok(Basis::S),
            "E" | "e" | "Lam" | "lam" | "Lambda" | "lambda" => Ok(Basis::Lambda),
            "M" | "m" => Ok(Basis::M),
            "F" | "f" => Ok(Basis::F),
            "L" | "l" => Ok(Basis::L),
            "R" | "r" => Ok(Basis::R),
            other => Err(Error::UnknownBasis(other.to_string())),
        }
    }
}

/// Basis-tagged sparse map from compositions to rationals. Zero coefficients
/// are never stored; iteration order is canonical (degree, then descent
/// bitmask).
#[derive(Clone, PartialEq, Eq)]
pub struct Element {
    basis: Basis,
    terms: BTreeMap<Composition, Rational>,
}

impl Element {
    pub fn zero(basis: Basis) -> Self {
        Element { basis, terms: BTreeMap::new() }
    }

    /// The unit: coefficient 1 on the empty composition.
    pub fn unit(basis: Basis) -> Self {
        Element::term(basis, Composition::empty(), rat(1))
    }

    pub fn term(basis: Basis, index: Composition, coeff: Rational) -> Self {
        let mut e = Element::zero(basis);
        e.add_term(index, coeff);
        e
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, index: &Composition) -> Rational {
        self.terms.get(index).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Composition, &Rational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, index: Composition, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(index) {
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

    pub fn add_assign_scaled(&mut self, other: &Element, scale: &Rational) -> Result<()> {
        if other.basis != self.basis {
            return Err(Error::BasisMismatch { expected: self.basis, got: other.basis });
        }
        if scale.is_zero() {
            return Ok(());
        }
        for (idx, c) in &other.terms {
            self.add_term(idx.clone(), c * scale);
        }
        Ok(())
    }

    pub fn add(&self, other: &Element) -> Result<Element> {
        let mut out = self.clone();
        out.add_assign_scaled(other, &rat(1))?;
        Ok(out)
    }

    pub fn sub(&self, other: &Element) -> Result<Element> {
        let mut out = self.clone();
        out.add_assign_scaled(other, &rat(-1))?;
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Element {
        if c.is_zero() {
            return Element::zero(self.basis);
        }
        Element {
            basis: self.basis,
            terms: self.terms.iter().map(|(i, v)| (i.clone(), v * c)).collect(),
        }
    }

    /// Maps every index through `f`, merging coefficients.
    pub(crate) fn map_indices(&self, basis: Basis, mut f: impl FnMut(&Composition) -> Composition) -> Element {
        let mut out = Element::zero(basis);
        for (i, c) in &self.terms {
            out.add_term(f(i), c.clone());
        }
        out
    }

    /// Largest term degree present, or 0 for the zero element.
    pub fn max_degree(&self) -> u32 {
        self.terms.keys().map(|i| i.weight()).max().unwrap_or(0)
    }

    /// True if every stored coefficient is an integer.
    pub fn all_integer(&self) -> bool {
        self.terms.values().all(|c| c.denom().is_one())
    }

    /// True if every stored coefficient is nonnegative.
    pub fn all_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "basis": self.basis.name(),
            "terms": self.terms.iter().map(|(i, c)| serde_json::json!({
                "composition": i.parts(),
                "coefficient": rat_to_string(c),
            })).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let name = self.basis.symbol();
        for (k, (idx, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let atom = if idx.is_empty() { "1".to_string() } else { format!("{name}{idx}") };
            if abs.is_one() {
                write!(f, "{atom}")?;
            } else if idx.is_empty() {
                write!(f, "{}", rat_to_string(&abs))?;
            } else {
                write!(f, "{}*{atom}", rat_to_string(&abs))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Concatenation product in the Ψ basis, extended bilinearly.
pub fn mul_psi(a: &Element, b: &Element) -> Result<Element> {
    for e in [a, b] {
        if e.basis() != Basis::Psi {
            return Err(Error::BasisMismatch { expected: Basis::Psi, got: e.basis() });
        }
    }
    let mut out = Element::zero(Basis::Psi);
    for (i, ci) in a.terms() {
        for (j, cj) in b.terms() {
            out.add_term(i.concat(j), ci * cj);
        }
    }
    Ok(out)
}

/// Sparse element of NSym ⊗ NSym.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorElement {
    left_basis: Basis,
    right_basis: Basis,
    terms: BTreeMap<(Composition, Composition), Rational>,
}

impl TensorElement {
    pub fn zero(left: Basis, right: Basis) -> Self {
        TensorElement { left_basis: left, right_basis: right, terms: BTreeMap::new() }
    }

    pub fn left_basis(&self) -> Basis {
        self.left_basis
    }

    pub fn right_basis(&self) -> Basis {
        self.right_basis
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Composition, Composition), &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, left: &Composition, right: &Composition) -> Rational {
        self.terms.get(&(left.clone(), right.clone())).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, left: Composition, right: Composition, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((left, right)) {
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

    pub fn add_assign(&mut self, other: &TensorElement) -> Result<()> {
        if other.left_basis != self.left_basis || other.right_basis != self.right_basis {
            return Err(Error::BasisMismatch { expected: self.left_basis, got: other.left_basis });
        }
        for ((l, r), c) in &other.terms {
            self.add_term(l.clone(), r.clone(), c.clone());
        }
        Ok(())
    }

    pub fn scale(&self, c: &Rational) -> TensorElement {
        if c.is_zero() {
            return TensorElement::zero(self.left_basis, self.right_basis);
        }
        TensorElement {
            left_basis: self.left_basis,
            right_basis: self.right_basis,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Outer product of the two term maps.
    pub fn from_pair(a: &Element, b: &Element) -> TensorElement {
        let mut out = TensorElement::zero(a.basis(), b.basis());
        for (i, ci) in a.terms() {
            for (j, cj) in b.terms() {
                out.add_term(i.clone(), j.clone(), ci * cj);
            }
        }
        out
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, ((l, r), c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}*{}⊗{}", rat_to_string(c), l, r)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn add_scale_equals() {
        let m2 = Element::term(Basis::M, comp(&[2]), rat(1));
        let double = m2.add(&m2).unwrap();
        assert_eq!(double.coeff(&comp(&[2])), rat(2));
        assert!(m2.scale(&rat(0)).is_zero());
        let half = Element::term(Basis::Psi, comp(&[2]), rat_frac(1, 2));
        assert_eq!(half.add(&half).unwrap(), Element::term(Basis::Psi, comp(&[2]), rat(1)));
        assert!(m2.add(&Element::term(Basis::F, comp(&[2]), rat(1))).is_err());
    }

    #[test]
    fn psi_product() {
        let a = Element::term(Basis::Psi, comp(&[2]), rat(1));
        let b = Element::term(Basis::Psi, comp(&[1, 3]), rat(1));
        assert_eq!(mul_psi(&a, &b).unwrap(), Element::term(Basis::Psi, comp(&[2, 1, 3]), rat(1)));

        let mut sum = Element::term(Basis::Psi, comp(&[1]), rat(1));
        sum.add_term(comp(&[2]), rat(1));
        let p1 = Element::term(Basis::Psi, comp(&[1]), rat(1));
        let prod = mul_psi(&sum, &p1).unwrap();
        assert_eq!(prod.coeff(&comp(&[1, 1])), rat(1));
        assert_eq!(prod.coeff(&comp(&[2, 1])), rat(1));

        let unit = Element::unit(Basis::Psi);
        let p3 = Element::term(Basis::Psi, comp(&[3]), rat(1));
        assert_eq!(mul_psi(&unit, &p3).unwrap(), p3);
        assert!(mul_psi(&Element::unit(Basis::M), &p3).is_err());
    }

    #[test]
    fn tensor_ops() {
        let p1 = Element::term(Basis::Psi, comp(&[1]), rat(1));
        let p2 = Element::term(Basis::Psi, comp(&[2]), rat(1));
        let t = TensorElement::from_pair(&p1, &p2);
        assert_eq!(t.coeff(&comp(&[1]), &comp(&[2])), rat(1));

        let mut u = TensorElement::from_pair(&p2, &p1);
        u.add_assign(&t).unwrap();
        assert_eq!(u.terms().count(), 2);

        let z = TensorElement::from_pair(&Element::zero(Basis::Psi), &p1);
        assert!(z.is_zero());
    }

    #[test]
    fn rational_text() {
        assert_eq!(rat_to_string(&rat_frac(-3, 6)), "-1/2");
        assert_eq!(rat_to_string(&rat(7)), "7");
        assert_eq!(rat_from_str("-1/2").unwrap(), rat_frac(-1, 2));
        assert_eq!(rat_from_str("7").unwrap(), rat(7));
        assert!(rat_from_str("1/0").is_err());
    }
}
