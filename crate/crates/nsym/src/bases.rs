//! Expansions of every basis into and out of Ψ coordinates, the generic
//! conversion router, and transition-matrix assembly.
//!
//! All conversions route through Ψ: `X → Ψ` is a per-composition closed
//! formula applied linearly, `Ψ → Y` likewise (composites for F, L, R, and
//! the elementary basis). Direct composite formulas from the literature are
//! exercised only in tests as cross-checks.

use num::{BigInt, One};

use crate::composition::{compositions_of, Composition};
use crate::element::{rat, rat_to_string, Basis, Element, Rational};
use crate::error::Result;
use crate::exec;

fn big(r: BigInt) -> Rational {
    Rational::from_integer(r)
}

fn sign(k: usize) -> Rational {
    if k % 2 == 0 {
        rat(1)
    } else {
        rat(-1)
    }
}

/// `M^I` in Ψ coordinates:
/// `Σ_{J⪯I} (−1)^{ℓ(I)−ℓ(J)} / ∏_{k=0}^{s−1} (ℓ(I)−p_k) · Ψ^J`.
pub fn m_to_psi(index: &Composition) -> Element {
    if index.is_empty() {
        return Element::unit(Basis::Psi);
    }
    let li = index.len();
    let mut out = Element::zero(Basis::Psi);
    for j in index.coarsenings() {
        let bp = j.breakpoints(index).unwrap();
        let mut denom = BigInt::from(li as u64); // k = 0 factor, p_0 = 0
        for &p in &bp[..bp.len() - 1] {
            denom *= (li - p) as u64;
        }
        let coeff = sign(li - j.len()) / big(denom);
        out.add_term(j, coeff);
    }
    out
}

/// `F^I` in Ψ coordinates: `Σ_{J⪯I} (∏_{k=1}^{s} p_k)^{−1} Ψ^J`.
pub fn f_to_psi(index: &Composition) -> Element {
    if index.is_empty() {
        return Element::unit(Basis::Psi);
    }
    let mut out = Element::zero(Basis::Psi);
    for j in index.coarsenings() {
        let bp = j.breakpoints(index).unwrap();
        let mut denom = BigInt::one();
        for &p in &bp {
            denom *= p as u64;
        }
        out.add_term(j, rat(1) / big(denom));
    }
    out
}

/// `S^I` in Ψ coordinates: `Σ_{J⪰I} π_u(J,I)^{−1} Ψ^J`.
pub fn s_to_psi(index: &Composition) -> Element {
    if index.is_empty() {
        return Element::unit(Basis::Psi);
    }
    let mut out = Element::zero(Basis::Psi);
    for j in index.refinements() {
        let pu = j.pi_u_rel(index).unwrap();
        out.add_term(j, rat(1) / big(pu));
    }
    out
}

/// `Λ^I` in Ψ coordinates, as the ordered product of `Λ_n = M^{(1^n)}`.
pub fn lambda_to_psi(index: &Composition) -> Element {
    let mut out = Element::unit(Basis::Psi);
    for &p in index.parts() {
        let column = Composition::new(vec![1; p as usize]).unwrap();
        out = crate::element::mul_psi(&out, &m_to_psi(&column)).unwrap();
    }
    out
}

/// `L^I` in monomial coordinates: `Σ_{J⪰I} M^J`.
pub fn l_to_m(index: &Composition) -> Element {
    if index.is_empty() {
        return Element::unit(Basis::M);
    }
    let mut out = Element::zero(Basis::M);
    for j in index.refinements() {
        out.add_term(j, rat(1));
    }
    out
}

/// `M^I` in fundamental coordinates: `Σ_{J⪰I} (−1)^{ℓ(J)−ℓ(I)} L^J`.
pub fn m_to_l_expand(index: &Composition) -> Element {
    if index.is_empty() {
        return Element::unit(Basis::L);
    }
    let mut out = Element::zero(Basis::L);
    for j in index.refinements() {
        let s = sign(j.len() - index.len());
        out.add_term(j, s);
    }
    out
}

/// `F^I` in monomial coordinates: `Σ_{J⪯I} M^J`.
pub fn f_to_m(index: &Composition) -> Element {
    if index.is_empty() {
        return Element::unit(Basis::M);
    }
    let mut out = Element::zero(Basis::M);
    for j in index.coarsenings() {
        out.add_term(j, rat(1));
    }
    out
}

/// `M^I` in forgotten coordinates: `Σ_{J⪯I} (−1)^{ℓ(I)−ℓ(J)} F^J`.
pub fn m_to_f_expand(index: &Composition) -> Element {
    if index.is_empty() {
        return Element::unit(Basis::F);
    }
    let mut out = Element::zero(Basis::F);
    for j in index.coarsenings() {
        let s = sign(index.len() - j.len());
        out.add_term(j, s);
    }
    out
}

/// `R^I` in complete coordinates: `Σ_{J⪯I} (−1)^{ℓ(J)−ℓ(I)} S^J`.
pub fn r_to_s(index: &Composition) -> Element {
    if index.is_empty() {
        return Element::unit(Basis::S);
    }
    let mut out = Element::zero(Basis::S);
    for j in index.coarsenings() {
        let s = sign(index.len() - j.len());
        out.add_term(j, s);
    }
    out
}

/// `S^K` in ribbon coordinates: `Σ_{J⪯K} R^J`.
pub fn s_to_r_expand(index: &Composition) -> Element {
    if index.is_empty() {
        return Element::unit(Basis::R);
    }
    let mut out = Element::zero(Basis::R);
    for j in index.coarsenings() {
        out.add_term(j, rat(1));
    }
    out
}

/// `Ψ^I` in monomial coordinates:
/// `Σ_{J⪯I} ∏_{k=1}^{ℓ(J)} (ℓ(J)−k+1)^{p_k−p_{k−1}} M^J`.
pub fn psi_to_m_expand(index: &Composition) -> Element {
    if index.is_empty() {
        return Element::unit(Basis::M);
    }
    let mut out = Element::zero(Basis::M);
    for j in index.coarsenings() {
        let bp = j.breakpoints(index).unwrap();
        let s = j.len();
        let mut coeff = BigInt::one();
        let mut prev = 0usize;
        for (k, &p) in bp.iter().enumerate() {
            let base = BigInt::from((s - k) as u64);
            for _ in prev..p {
                coeff *= &base;
            }
            prev = p;
        }
        out.add_term(j, big(coeff));
    }
    out
}

/// `Ψ^I` in complete coordinates: `Σ_{J⪰I} (−1)^{ℓ(J)−ℓ(I)} lp(J,I) S^J`.
pub fn psi_to_s_expand(index: &Composition) -> Element {
    if index.is_empty() {
        return Element::unit(Basis::S);
    }
    let mut out = Element::zero(Basis::S);
    for j in index.refinements() {
        let lp = j.lp_rel(index).unwrap();
        let coeff = sign(j.len() - index.len()) * big(lp);
        out.add_term(j, coeff);
    }
    out
}

/// Per-composition expansion of `basis^I` in Ψ coordinates.
pub fn basis_to_psi(basis: Basis, index: &Composition) -> Element {
    match basis {
        Basis::Psi => Element::term(Basis::Psi, index.clone(), rat(1)),
        Basis::M => m_to_psi(index),
        Basis::F => f_to_psi(index),
        Basis::S => s_to_psi(index),
        Basis::Lambda => lambda_to_psi(index),
        Basis::L => to_psi(&l_to_m(index)),
        Basis::R => to_psi(&r_to_s(index)),
    }
}

/// Converts any element to Ψ coordinates.
pub fn to_psi(a: &Element) -> Element {
    if a.basis() == Basis::Psi {
        return a.clone();
    }
    let mut out = Element::zero(Basis::Psi);
    for (i, c) in a.terms() {
        out.add_assign_scaled(&basis_to_psi(a.basis(), i), c).unwrap();
    }
    out
}

fn psi_element_to(a: &Element, to: Basis) -> Element {
    debug_assert_eq!(a.basis(), Basis::Psi);
    match to {
        Basis::Psi => a.clone(),
        Basis::M | Basis::S => {
            let mut out = Element::zero(to);
            for (i, c) in a.terms() {
                let exp = if to == Basis::M { psi_to_m_expand(i) } else { psi_to_s_expand(i) };
                out.add_assign_scaled(&exp, c).unwrap();
            }
            out
        }
        Basis::F => reindex(&psi_element_to(a, Basis::M), m_to_f_expand, Basis::F),
        Basis::L => reindex(&psi_element_to(a, Basis::M), m_to_l_expand, Basis::L),
        Basis::R => reindex(&psi_element_to(a, Basis::S), s_to_r_expand, Basis::R),
        Basis::Lambda => {
            // Λ^I = ω(S^{Ī}) with ω an anti-automorphism of NSym.
            let flipped = crate::algebra::omega_psi(a);
            let in_s = psi_element_to(&flipped, Basis::S);
            in_s.map_indices(Basis::Lambda, |j| j.reverse())
        }
    }
}

fn reindex(a: &Element, f: impl Fn(&Composition) -> Element, to: Basis) -> Element {
    let mut out = Element::zero(to);
    for (i, c) in a.terms() {
        out.add_assign_scaled(&f(i), c).unwrap();
    }
    out
}

/// Generic conversion router; every route goes through Ψ.
pub fn convert(a: &Element, to: Basis) -> Element {
    if a.basis() == to {
        return a.clone();
    }
    psi_element_to(&to_psi(a), to)
}

/// Square matrix of `convert(from^I, to)` coordinates at one degree, rows and
/// columns in canonical composition order.
#[derive(Clone, PartialEq, Eq)]
pub struct TransitionMatrix {
    pub degree: u32,
    pub from: Basis,
    pub to: Basis,
    /// Dense row-major entries, size `2^(degree-1)` squared.
    pub rows: Vec<Vec<Rational>>,
}

fn assemble_rows(
    from: Basis,
    to: Basis,
    comps: &[Composition],
    map: impl Fn(Vec<Composition>, Box<dyn Fn(Composition) -> Vec<Rational> + Sync + Send>) -> Vec<Vec<Rational>>,
) -> Vec<Vec<Rational>> {
    let columns = comps.to_vec();
    let row_of = move |i: Composition| -> Vec<Rational> {
        let e = convert(&Element::term(from, i, rat(1)), to);
        columns.iter().map(|j| e.coeff(j)).collect()
    };
    map(comps.to_vec(), Box::new(row_of))
}

pub fn transition_matrix(from: Basis, to: Basis, degree: u32) -> Result<TransitionMatrix> {
    let comps = compositions_of(degree)?;
    let rows = assemble_rows(from, to, &comps, |items, f| exec::map_collect(items, f));
    Ok(TransitionMatrix { degree, from, to, rows })
}

/// Sequential variant of [`transition_matrix`] (benchmark baseline).
pub fn transition_matrix_seq(from: Basis, to: Basis, degree: u32) -> Result<TransitionMatrix> {
    let comps = compositions_of(degree)?;
    let rows = assemble_rows(from, to, &comps, |items, f| exec::map_collect_seq(items, f));
    Ok(TransitionMatrix { degree, from, to, rows })
}

impl TransitionMatrix {
    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn is_identity(&self) -> bool {
        self.rows.iter().enumerate().all(|(r, row)| {
            row.iter().enumerate().all(|(c, v)| {
                if r == c {
                    v.is_one()
                } else {
                    *v == rat(0)
                }
            })
        })
    }

    pub fn matmul(&self, other: &TransitionMatrix) -> TransitionMatrix {
        assert_eq!(self.degree, other.degree);
        let n = self.size();
        let rows = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| {
                        let mut acc = rat(0);
                        for k in 0..n {
                            let a = &self.rows[r][k];
                            if *a != rat(0) {
                                acc += a * &other.rows[k][c];
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        TransitionMatrix { degree: self.degree, from: self.from, to: other.to, rows }
    }

    /// CSV with dot-form composition headers in canonical order.
    pub fn to_csv(&self) -> String {
        let comps = compositions_of(self.degree).unwrap();
        let mut out = String::new();
        out.push_str(&format!("{}_to_{}", self.from.name(), self.to.name()));
        for c in &comps {
            out.push(',');
            out.push_str(&c.dot_form());
        }
        out.push('\n');
        for (r, row) in self.rows.iter().enumerate() {
            out.push_str(&comps[r].dot_form());
            for v in row {
                out.push(',');
                out.push_str(&rat_to_string(v));
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let comps = compositions_of(self.degree).unwrap();
        serde_json::json!({
            "degree": self.degree,
            "from": self.from.name(),
            "to": self.to.name(),
            "index": comps.iter().map(|c| c.parts()).collect::<Vec<_>>(),
            "entries": self.rows.iter().map(|row| {
                row.iter().map(rat_to_string).collect::<Vec<_>>()
            }).collect::<Vec<_>>(),
        })
    }
}

/// Triangularity flavor relative to the reverse refinement order; `None` when
/// an off-order entry is nonzero. Used by tests and reports.
pub fn unitriangular_pm_one(m: &TransitionMatrix) -> bool {
    let comps = compositions_of(m.degree).unwrap();
    for (r, row) in m.rows.iter().enumerate() {
        for (c, v) in row.iter().enumerate() {
            if *v == rat(0) {
                continue;
            }
            if r == c {
                if !v.is_one() {
                    return false;
                }
            } else if *v != rat(1) && *v != rat(-1) {
                return false;
            }
            let related = comps[r].is_coarsening_of(&comps[c]) || comps[c].is_coarsening_of(&comps[r]);
            if !related {
                return false;
            }
        }
    }
    true
}
