//! Quasideterminants of almost-triangular matrices, the row/column reduction
//! operators `T_j`, the kaleidoscopic identity, and the matrix-based
//! constructions of M, F, Λ, S, R used to cross-validate the closed forms.

use std::collections::BTreeMap;

use num::Zero;

use crate::bases::s_to_psi;
use crate::composition::Composition;
use crate::element::{rat, Basis, Element, Rational};
use crate::error::{Error, Result};
use crate::symalg::{Atom, SymElement};

/// Almost-triangular matrix: free symbols on and below the diagonal, a
/// central rational superdiagonal `b_1..b_{n−1}`, zeros above it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMatrix {
    n: usize,
    /// `atoms[r][c]` is the entry in row `r+1`, column `c+1`, for `c ≤ r`.
    atoms: Vec<Vec<Atom>>,
    b: Vec<Rational>,
}

impl QMatrix {
    /// The generic matrix with entries `a_{ij}` and the given superdiagonal.
    pub fn generic(n: usize, b: Vec<Rational>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidDegree(0));
        }
        if b.len() != n - 1 {
            return Err(Error::IndexOutOfRange(b.len()));
        }
        if let Some(j) = b.iter().position(Rational::is_zero) {
            return Err(Error::SingularSuperdiagonal(j + 1));
        }
        let atoms = (0..n)
            .map(|r| (0..=r).map(|c| Atom::new((r + 1) as u8, (c + 1) as u8)).collect())
            .collect();
        Ok(QMatrix { n, atoms, b })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn entry(&self, row: usize, col: usize) -> Atom {
        self.atoms[row - 1][col - 1]
    }

    pub fn superdiagonal(&self) -> &[Rational] {
        &self.b
    }

    /// Expansion over strictly decreasing chains `n ≥ j_1 > … > j_k > 1`:
    /// each chain contributes `(−1)^k · (∏ b_{j−1})^{−1}` times the word
    /// `a_{n j_1} a_{j_1−1 j_2} … a_{j_k−1, 1}`; the empty chain gives
    /// `+a_{n1}`.
    pub fn qdet(&self) -> SymElement {
        let n = self.n;
        let mut out = SymElement::zero();
        if n == 1 {
            out.add_term(vec![self.entry(1, 1)], rat(1));
            return out;
        }
        // subsets of {2..n}, read off in decreasing order
        for mask in 0u64..(1u64 << (n - 1)) {
            let chain: Vec<usize> =
                (2..=n).rev().filter(|j| mask >> (j - 2) & 1 == 1).collect();
            let mut coeff = if chain.len() % 2 == 0 { rat(1) } else { rat(-1) };
            let mut word = Vec::with_capacity(chain.len() + 1);
            let mut row = n;
            for &j in &chain {
                word.push(self.entry(row, j));
                coeff /= &self.b[j - 2];
                row = j - 1;
            }
            word.push(self.entry(row, 1));
            out.add_term(word, coeff);
        }
        out
    }

    /// `T_j`: removes row `j` and column `j+1`, then refills the
    /// superdiagonal of the smaller matrix with `1, 2, …, n−2`.
    pub fn t_reduce(&self, j: usize) -> Result<QMatrix> {
        if j < 1 || j >= self.n {
            return Err(Error::IndexOutOfRange(j));
        }
        let mut atoms = Vec::with_capacity(self.n - 1);
        for (r, row) in self.atoms.iter().enumerate() {
            if r + 1 == j {
                continue;
            }
            let entries: Vec<Atom> = row
                .iter()
                .enumerate()
                .filter(|(c, _)| c + 1 != j + 1)
                .map(|(_, a)| *a)
                .collect();
            atoms.push(entries);
        }
        let b = (1..self.n - 1).map(|v| rat(v as i64)).collect();
        Ok(QMatrix { n: self.n - 1, atoms, b })
    }

    /// `T_J` for a set of indices, applied in decreasing order so that each
    /// index refers to a row of the original matrix.
    pub fn t_reduce_set(&self, js: &[usize]) -> Result<QMatrix> {
        let mut sorted = js.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut m = self.clone();
        for &j in sorted.iter().rev() {
            m = m.t_reduce(j)?;
        }
        Ok(m)
    }
}

/// Symbolic verification of the kaleidoscopic identity
/// `(1/n) Q_n(−(n−1),…,−1) = Σ_{J ⊆ [1..n−1]} ((−1)^{n−k−1}/(n−k)) T_J Q_n(1,…,n−1)`
/// with `k = |J|`, over the free symbol algebra.
pub fn kaleidoscope_check(n: usize) -> Result<bool> {
    if n < 2 {
        return Err(Error::InvalidDegree(n as i64));
    }
    let neg: Vec<Rational> = (1..n).map(|j| rat(-((n - j) as i64))).collect();
    let lhs = QMatrix::generic(n, neg)?.qdet().scale(&rat_inv(n as i64));

    let pos: Vec<Rational> = (1..n).map(|j| rat(j as i64)).collect();
    let base = QMatrix::generic(n, pos)?;
    let mut rhs = SymElement::zero();
    for mask in 0u64..(1u64 << (n - 1)) {
        let subset: Vec<usize> = (1..n).filter(|j| mask >> (j - 1) & 1 == 1).collect();
        let k = subset.len();
        let sign = if (n - k - 1) % 2 == 0 { rat(1) } else { rat(-1) };
        let coeff = sign * rat_inv((n - k) as i64);
        rhs.add_assign(&base.t_reduce_set(&subset)?.qdet().scale(&coeff));
    }
    Ok(lhs == rhs)
}

fn rat_inv(v: i64) -> Rational {
    crate::element::rat_frac(1, v)
}

fn psi_single(weight: u32) -> Element {
    Element::term(Basis::Psi, Composition::single(weight), rat(1))
}

/// Environment binding `a_{kj}` to `Ψ_{i_{n−k+1}+…+i_{n−j+1}}`.
fn psi_env(index: &Composition) -> BTreeMap<Atom, Element> {
    let parts = index.parts();
    let n = parts.len();
    let mut env = BTreeMap::new();
    for k in 1..=n {
        for j in 1..=k {
            let sum: u32 = parts[n - k..=n - j].iter().sum();
            env.insert(Atom::new(k as u8, j as u8), psi_single(sum));
        }
    }
    env
}

fn build_via(index: &Composition, b: Vec<Rational>, prefactor: Rational) -> Result<Element> {
    let n = index.len();
    let m = QMatrix::generic(n, b)?;
    Ok(m.qdet().substitute(&psi_env(index))?.scale(&prefactor))
}

/// `M^I` from its defining quasideterminant, in Ψ coordinates.
pub fn build_m_def(index: &Composition) -> Result<Element> {
    if index.is_empty() {
        return Err(Error::EmptyComposition);
    }
    let n = index.len();
    let b = (1..n).map(|j| rat(j as i64)).collect();
    let sign = if n % 2 == 1 { rat(1) } else { rat(-1) };
    build_via(index, b, sign * rat_inv(n as i64))
}

/// `F^I` from its defining quasideterminant, in Ψ coordinates.
pub fn build_f_def(index: &Composition) -> Result<Element> {
    if index.is_empty() {
        return Err(Error::EmptyComposition);
    }
    let n = index.len();
    let b = (1..n).map(|j| rat(-((n - j) as i64))).collect();
    build_via(index, b, rat_inv(n as i64))
}

/// `Λ_n` as the quasideterminant of the Ψ-entry matrix.
pub fn build_lambda_def(n: u32) -> Result<Element> {
    build_m_def(&Composition::new(vec![1; n as usize])?)
}

/// `S_n` as the quasideterminant of the Ψ-entry matrix.
pub fn build_s_def(n: u32) -> Result<Element> {
    build_f_def(&Composition::new(vec![1; n as usize])?)
}

/// `R^I` from its defining quasideterminant with complete-function entries,
/// returned in Ψ coordinates.
pub fn build_r_def(index: &Composition) -> Result<Element> {
    if index.is_empty() {
        return Err(Error::EmptyComposition);
    }
    let parts = index.parts();
    let k = parts.len();
    let m = QMatrix::generic(k, vec![rat(1); k - 1])?;
    let mut env = BTreeMap::new();
    for r in 1..=k {
        for c in 1..=r {
            let sum: u32 = parts[k - r..=k - c].iter().sum();
            env.insert(Atom::new(r as u8, c as u8), s_to_psi(&Composition::single(sum)));
        }
    }
    let sign = if k % 2 == 1 { rat(1) } else { rat(-1) };
    Ok(m.qdet().substitute(&env)?.scale(&sign))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bases::{convert, f_to_psi, m_to_psi};
    use crate::composition::compositions_of;
    use crate::element::rat_frac;

    fn c(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn a(row: u8, col: u8) -> Atom {
        Atom::new(row, col)
    }

    #[test]
    fn qdet_size_one() {
        let m = QMatrix::generic(1, vec![]).unwrap();
        let q = m.qdet();
        assert_eq!(q.num_terms(), 1);
        assert_eq!(q.coeff(&vec![a(1, 1)]), rat(1));
    }

    #[test]
    fn qdet_size_three() {
        let m = QMatrix::generic(3, vec![rat(1), rat(2)]).unwrap();
        let q = m.qdet();
        assert_eq!(q.num_terms(), 4);
        assert_eq!(q.coeff(&vec![a(3, 1)]), rat(1));
        assert_eq!(q.coeff(&vec![a(3, 2), a(1, 1)]), rat(-1));
        assert_eq!(q.coeff(&vec![a(3, 3), a(2, 1)]), rat_frac(-1, 2));
        assert_eq!(q.coeff(&vec![a(3, 3), a(2, 2), a(1, 1)]), rat_frac(1, 2));
    }

    #[test]
    fn qdet_word_count() {
        for n in 1..=8usize {
            let b = vec![rat(1); n - 1];
            let m = QMatrix::generic(n, b).unwrap();
            assert_eq!(m.qdet().num_terms(), 1 << (n - 1));
        }
    }

    #[test]
    fn zero_superdiagonal_rejected() {
        assert!(matches!(
            QMatrix::generic(3, vec![rat(1), rat(0)]),
            Err(Error::SingularSuperdiagonal(2))
        ));
    }

    #[test]
    fn t_reduce_shapes() {
        let m = QMatrix::generic(2, vec![rat(1)]).unwrap();
        let r = m.t_reduce(1).unwrap();
        assert_eq!(r.size(), 1);
        assert_eq!(r.entry(1, 1), a(2, 1));

        // removing row 2 / column 3 from the 4×4 keeps rows 1, 3, 4
        let m = QMatrix::generic(4, vec![rat(1), rat(2), rat(3)]).unwrap();
        let r = m.t_reduce(2).unwrap();
        assert_eq!(r.size(), 3);
        assert_eq!(r.entry(1, 1), a(1, 1));
        assert_eq!(r.entry(2, 1), a(3, 1));
        assert_eq!(r.entry(2, 2), a(3, 2));
        assert_eq!(r.entry(3, 1), a(4, 1));
        assert_eq!(r.entry(3, 2), a(4, 2));
        assert_eq!(r.entry(3, 3), a(4, 4));
        assert_eq!(r.superdiagonal(), &[rat(1), rat(2)]);

        assert!(m.t_reduce(4).is_err());
        assert!(m.t_reduce(0).is_err());
    }

    #[test]
    fn t_reduce_commutes_index_adjusted() {
        for n in 3..=5usize {
            let m = QMatrix::generic(n, (1..n).map(|v| rat(v as i64)).collect()).unwrap();
            for j2 in 1..n {
                for j1 in (j2 + 1)..n {
                    let descending = m.t_reduce(j1).unwrap().t_reduce(j2).unwrap();
                    let ascending = m.t_reduce(j2).unwrap().t_reduce(j1 - 1).unwrap();
                    assert_eq!(descending, ascending, "n={n} j1={j1} j2={j2}");
                }
            }
        }
    }

    #[test]
    fn kaleidoscope_small() {
        for n in 2..=6usize {
            assert!(kaleidoscope_check(n).unwrap(), "n={n}");
        }
    }

    #[test]
    fn definitional_m_and_f() {
        assert_eq!(build_m_def(&c(&[3, 1, 2])).unwrap(), m_to_psi(&c(&[3, 1, 2])));
        assert_eq!(build_f_def(&c(&[2, 1, 3])).unwrap(), f_to_psi(&c(&[2, 1, 3])));
        for n in 1..=5u32 {
            for i in compositions_of(n).unwrap() {
                assert_eq!(build_m_def(&i).unwrap(), m_to_psi(&i), "M^{i}");
                assert_eq!(build_f_def(&i).unwrap(), f_to_psi(&i), "F^{i}");
            }
        }
    }

    #[test]
    fn definitional_lambda_s_r() {
        for n in 1..=6u32 {
            assert_eq!(
                build_lambda_def(n).unwrap(),
                crate::bases::lambda_to_psi(&Composition::single(n))
            );
            assert_eq!(build_s_def(n).unwrap(), s_to_psi(&Composition::single(n)));
        }
        let r11 = build_r_def(&c(&[1, 1])).unwrap();
        assert_eq!(
            r11,
            convert(&Element::term(Basis::R, c(&[1, 1]), rat(1)), Basis::Psi)
        );
        for n in 1..=5u32 {
            for i in compositions_of(n).unwrap() {
                assert_eq!(
                    build_r_def(&i).unwrap(),
                    convert(&Element::term(Basis::R, i.clone(), rat(1)), Basis::Psi),
                    "R^{i}"
                );
            }
        }
    }
}
