//! Coefficient tables of the quasi-symmetric analogs Ψ_I, S_I, Λ_I, L_I, R_I
//! in the quasi-monomial basis M_J. These are data tables only — no
//! quasi-shuffle product is implemented.

use std::collections::BTreeMap;

use num::Zero;

use crate::bases::convert;
use crate::composition::{compositions_of, Composition};
use crate::element::{rat, rat_to_string, Basis, Element, Rational};
use crate::error::{Error, Result};
use crate::kostka::kostka_gessel_matrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QsymFamily {
    Psi,
    S,
    Lambda,
    Fundamental,
    Ribbon,
}

impl QsymFamily {
    pub const ALL: [QsymFamily; 5] = [
        QsymFamily::Psi,
        QsymFamily::S,
        QsymFamily::Lambda,
        QsymFamily::Fundamental,
        QsymFamily::Ribbon,
    ];

    pub fn name(self) -> &'static str {
        match self {
            QsymFamily::Psi => "psi",
            QsymFamily::S => "s",
            QsymFamily::Lambda => "lambda",
            QsymFamily::Fundamental => "fundamental",
            QsymFamily::Ribbon => "ribbon",
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        QsymFamily::ALL
            .into_iter()
            .find(|f| f.name() == text)
            .ok_or_else(|| Error::UnknownBasis(text.to_string()))
    }
}

/// Coordinates of one quasi-symmetric function in the `M_J` basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QsymTable {
    pub family: QsymFamily,
    pub index: Composition,
    coefficients: BTreeMap<Composition, Rational>,
}

impl QsymTable {
    pub fn coeff(&self, j: &Composition) -> Rational {
        self.coefficients.get(j).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coefficients(&self) -> impl Iterator<Item = (&Composition, &Rational)> {
        self.coefficients.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.coefficients.len()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "family": self.family.name(),
            "index": self.index.parts(),
            "terms": self.coefficients.iter().map(|(j, c)| {
                serde_json::json!({
                    "composition": j.parts(),
                    "coefficient": rat_to_string(c),
                })
            }).collect::<Vec<_>>(),
        })
    }
}

fn from_element(family: QsymFamily, index: Composition, e: &Element) -> QsymTable {
    debug_assert_eq!(e.basis(), Basis::M);
    let coefficients = e.terms().map(|(j, c)| (j.clone(), c.clone())).collect();
    QsymTable { family, index, coefficients }
}

/// The `M_J`-coefficient table of the family member indexed by `I`.
pub fn qsym_table(family: QsymFamily, index: &Composition) -> Result<QsymTable> {
    if index.is_empty() {
        return Err(Error::EmptyComposition);
    }
    let table = match family {
        QsymFamily::Psi => {
            let e = convert(&Element::term(Basis::Psi, index.clone(), rat(1)), Basis::M);
            from_element(family, index.clone(), &e)
        }
        QsymFamily::S => {
            let e = convert(&Element::term(Basis::S, index.clone(), rat(1)), Basis::M);
            from_element(family, index.clone(), &e)
        }
        QsymFamily::Lambda => {
            // mirror of the NSym expansion: Λ_I ↦ reversed M-indices
            let e = convert(&Element::term(Basis::Lambda, index.clone(), rat(1)), Basis::M);
            let mirrored = e.map_indices(Basis::M, |j| j.reverse());
            from_element(family, index.clone(), &mirrored)
        }
        QsymFamily::Fundamental => {
            // L_I = Σ_{J ⪰ I} M_J
            from_element(family, index.clone(), &crate::bases::l_to_m(index))
        }
        QsymFamily::Ribbon => {
            // R_I = Σ_J G_{IJ} L_J with G the Kostka-Gessel matrix
            let degree = index.weight();
            let comps = compositions_of(degree)?;
            let g = kostka_gessel_matrix(degree)?;
            let row = comps.iter().position(|c| c == index).unwrap();
            let mut e = Element::zero(Basis::M);
            for (col, coeff) in g.rows[row].iter().enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                e.add_assign_scaled(&crate::bases::l_to_m(&comps[col]), coeff)?;
            }
            from_element(family, index.clone(), &e)
        }
    };
    Ok(table)
}
