//! Products, the involution ω, and the Hall-type scalar product.
//!
//! The generic product converts both factors to Ψ and concatenates; the
//! closed-form products and pairings live beside it and are compared against
//! it in tests.

use num::{BigInt, One, Zero};

use crate::bases::{convert, to_psi};
use crate::composition::Composition;
use crate::element::{mul_psi, rat, Basis, Element, Rational};
use crate::error::{Error, Result};

/// `binom(a, b)` with the zero convention outside `0 ≤ b ≤ a`.
pub fn binom(a: i64, b: i64) -> BigInt {
    if b < 0 || b > a || a < 0 {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for k in 0..b {
        num *= a - k;
        den *= k + 1;
    }
    num / den
}

fn big(v: BigInt) -> Rational {
    Rational::from_integer(v)
}

fn sign(k: usize) -> Rational {
    if k % 2 == 0 {
        rat(1)
    } else {
        rat(-1)
    }
}

/// Generic product: both factors in Ψ coordinates, concatenation bilinearly.
pub fn multiply(a: &Element, b: &Element) -> Element {
    mul_psi(&to_psi(a), &to_psi(b)).unwrap()
}

/// ω on Ψ coordinates: `ω(Ψ^I) = (−1)^{|I|−ℓ(I)} Ψ^{Ī}`.
pub(crate) fn omega_psi(a: &Element) -> Element {
    debug_assert_eq!(a.basis(), Basis::Psi);
    let mut out = Element::zero(Basis::Psi);
    for (i, c) in a.terms() {
        let s = sign((i.weight() as usize) - i.len());
        out.add_term(i.reverse(), c * s);
    }
    out
}

/// The involution ω, result in Ψ coordinates.
pub fn omega(a: &Element) -> Element {
    omega_psi(&to_psi(a))
}

/// `Ψ_r · M^I = (n+1) M^{(r)·I} + n M^{(r)▷I}` with `n = ℓ(I)`.
pub fn pieri_left_psi(r: u32, index: &Composition) -> Result<Element> {
    if r == 0 {
        return Err(Error::InvalidDegree(0));
    }
    if index.is_empty() {
        return Err(Error::EmptyComposition);
    }
    let n = index.len() as i64;
    let row = Composition::single(r);
    let mut out = Element::zero(Basis::M);
    out.add_term(row.concat(index), rat(n + 1));
    out.add_term(row.near_concat(index)?, rat(n));
    Ok(out)
}

/// `F^I · Ψ_r = (n+1) F^{I·(r)} − n F^{I▷(r)}` with `n = ℓ(I)`.
pub fn pieri_right_f(index: &Composition, r: u32) -> Result<Element> {
    if r == 0 {
        return Err(Error::InvalidDegree(0));
    }
    if index.is_empty() {
        return Err(Error::EmptyComposition);
    }
    let n = index.len() as i64;
    let row = Composition::single(r);
    let mut out = Element::zero(Basis::F);
    out.add_term(index.concat(&row), rat(n + 1));
    out.add_term(index.near_concat(&row)?, rat(-n));
    Ok(out)
}

/// Closed-form `M^I · M^J`, summing over coarsenings `K ⪯ I`.
pub fn product_mm(i: &Composition, j: &Composition) -> Result<Element> {
    if i.is_empty() || j.is_empty() {
        return Err(Error::EmptyComposition);
    }
    let li = i.len() as i64;
    let lj = j.len() as i64;
    let mut out = Element::zero(Basis::M);
    for k in i.coarsenings() {
        let lk = k.len() as i64;
        out.add_term(k.concat(j), big(binom(lk + lj, li)));
        out.add_term(k.near_concat(j)?, big(binom(lk + lj - 1, li)));
    }
    Ok(out)
}

/// Closed-form `F^I · F^J`, summing over coarsenings `K ⪯ J`. The sign of
/// the concatenated term is `(−1)^{ℓ(J)−ℓ(K)}` and of the fused term
/// `(−1)^{ℓ(J)−ℓ(K)+1}`, as obtained by applying ω to the monomial product.
pub fn product_ff(i: &Composition, j: &Composition) -> Result<Element> {
    if i.is_empty() || j.is_empty() {
        return Err(Error::EmptyComposition);
    }
    let li = i.len() as i64;
    let lj = j.len() as i64;
    let mut out = Element::zero(Basis::F);
    for k in j.coarsenings() {
        let lk = k.len() as i64;
        let s = sign((lj - lk) as usize);
        out.add_term(i.concat(&k), s.clone() * big(binom(li + lk, lj)));
        out.add_term(i.near_concat(&k)?, -s * big(binom(li + lk - 1, lj)));
    }
    Ok(out)
}

/// Closed-form `L^I · L^J` over pairs `K ⪯ I`, `M ⪰ J`.
pub fn product_ll(i: &Composition, j: &Composition) -> Result<Element> {
    if i.is_empty() || j.is_empty() {
        return Err(Error::EmptyComposition);
    }
    let upper = i.weight() as i64 + j.len() as i64 - i.len() as i64;
    let li = i.len() as i64;
    let mut out = Element::zero(Basis::L);
    for k in i.coarsenings() {
        for m in j.refinements() {
            let l = k.len() as i64 + m.len() as i64;
            out.add_term(k.concat(&m), big(binom(upper, l - li)));
            out.add_term(k.near_concat(&m)?, big(binom(upper, l - 1 - li)));
        }
    }
    Ok(out)
}

/// Hall-type scalar product `⟨a, b⟩ = Σ_I coeff_M(a, I) · coeff_S(b, I)`.
/// Cross-degree pairs contribute zero.
pub fn pair(a: &Element, b: &Element) -> Rational {
    let am = convert(a, Basis::M);
    let bs = convert(b, Basis::S);
    let mut acc = rat(0);
    for (i, c) in am.terms() {
        let d = bs.coeff(i);
        if !d.is_zero() {
            acc += c * d;
        }
    }
    acc
}

/// Closed form for `⟨Ψ^I, Ψ^J⟩`.
pub fn pair_psi_psi(i: &Composition, j: &Composition) -> Rational {
    if i.weight() != j.weight() {
        return rat(0);
    }
    let mut acc = rat(0);
    for m in i.coarsenings() {
        if !j.is_coarsening_of(&m) {
            continue;
        }
        let lp = m.lp_rel(j).unwrap();
        let bp = m.breakpoints(i).unwrap();
        let s = m.len();
        let mut prod = BigInt::one();
        let mut prev = 0usize;
        for (k, &p) in bp.iter().enumerate() {
            let base = BigInt::from((s - k) as u64);
            for _ in prev..p {
                prod *= &base;
            }
            prev = p;
        }
        acc += sign(m.len() - j.len()) * big(lp) * big(prod);
    }
    acc
}

/// `⟨M^I, Ψ^J⟩ = (−1)^{ℓ(I)−ℓ(J)} lp(I,J) θ(I ⪰ J)`.
pub fn pair_m_psi(i: &Composition, j: &Composition) -> Rational {
    if i.weight() != j.weight() || !j.is_coarsening_of(i) {
        return rat(0);
    }
    sign(i.len() - j.len()) * big(i.lp_rel(j).unwrap())
}

/// `⟨M^I, R^K⟩ = (−1)^{ℓ(K)−ℓ(I)} θ(K ⪰ I)`.
pub fn pair_m_r(i: &Composition, k: &Composition) -> Rational {
    if i.weight() != k.weight() || !i.is_coarsening_of(k) {
        return rat(0);
    }
    sign(k.len() - i.len())
}

/// `⟨L^J, S^K⟩ = θ(K ⪰ J)`.
pub fn pair_l_s(j: &Composition, k: &Composition) -> Rational {
    if j.weight() == k.weight() && j.is_coarsening_of(k) {
        rat(1)
    } else {
        rat(0)
    }
}

/// `⟨L^I, R^J⟩ = δ_{IJ}`.
pub fn pair_l_r(i: &Composition, j: &Composition) -> Rational {
    if i == j {
        rat(1)
    } else {
        rat(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::compositions_of;
    use crate::element::rat_frac;

    fn c(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn single(basis: Basis, parts: &[u32]) -> Element {
        Element::term(basis, c(parts), rat(1))
    }

    #[test]
    fn generic_product_small() {
        let m1 = single(Basis::M, &[1]);
        assert_eq!(multiply(&m1, &m1), single(Basis::Psi, &[1, 1]));
        let s1 = single(Basis::S, &[1]);
        assert_eq!(multiply(&s1, &s1), single(Basis::Psi, &[1, 1]));
        let e1 = single(Basis::Lambda, &[1]);
        let p2 = single(Basis::Psi, &[2]);
        assert_eq!(multiply(&e1, &p2), single(Basis::Psi, &[1, 2]));
    }

    #[test]
    fn omega_examples() {
        // ω(S_2) = Λ_2 = ½Ψ[1,1] − ½Ψ[2]
        let mut expected = Element::zero(Basis::Psi);
        expected.add_term(c(&[1, 1]), rat_frac(1, 2));
        expected.add_term(c(&[2]), rat_frac(-1, 2));
        assert_eq!(omega(&single(Basis::S, &[2])), expected);

        let a = single(Basis::M, &[3, 1, 2]);
        assert_eq!(omega(&omega(&a)), to_psi(&a));

        // ω(M^{21}) = −F^{12}
        let f12 = crate::bases::f_to_psi(&c(&[1, 2]));
        assert_eq!(omega(&single(Basis::M, &[2, 1])), f12.scale(&rat(-1)));
    }

    #[test]
    fn pieri_examples() {
        let mut expected = Element::zero(Basis::M);
        expected.add_term(c(&[2, 3]), rat(2));
        expected.add_term(c(&[5]), rat(1));
        assert_eq!(pieri_left_psi(2, &c(&[3])).unwrap(), expected);

        let mut expected = Element::zero(Basis::F);
        expected.add_term(c(&[3, 2]), rat(2));
        expected.add_term(c(&[5]), rat(-1));
        assert_eq!(pieri_right_f(&c(&[3]), 2).unwrap(), expected);

        // agreement with the generic product
        let generic = convert(
            &multiply(&single(Basis::Psi, &[2]), &single(Basis::M, &[3])),
            Basis::M,
        );
        assert_eq!(pieri_left_psi(2, &c(&[3])).unwrap(), generic);
    }

    #[test]
    fn closed_form_products_small() {
        let mut expected = Element::zero(Basis::M);
        expected.add_term(c(&[1, 1]), rat(2));
        expected.add_term(c(&[2]), rat(1));
        assert_eq!(product_mm(&c(&[1]), &c(&[1])).unwrap(), expected);

        let mut expected = Element::zero(Basis::L);
        expected.add_term(c(&[1, 1]), rat(1));
        expected.add_term(c(&[2]), rat(1));
        assert_eq!(product_ll(&c(&[1]), &c(&[1])).unwrap(), expected);

        let generic = convert(
            &multiply(&single(Basis::F, &[1]), &single(Basis::F, &[1])),
            Basis::F,
        );
        assert_eq!(product_ff(&c(&[1]), &c(&[1])).unwrap(), generic);
    }

    #[test]
    fn closed_forms_match_generic_degree_five() {
        for total in 2..=5u32 {
            for a in 1..total {
                let b = total - a;
                for i in compositions_of(a).unwrap() {
                    for j in compositions_of(b).unwrap() {
                        let mm = convert(
                            &multiply(&Element::term(Basis::M, i.clone(), rat(1)),
                                      &Element::term(Basis::M, j.clone(), rat(1))),
                            Basis::M,
                        );
                        assert_eq!(product_mm(&i, &j).unwrap(), mm, "M{i}·M{j}");
                        let ff = convert(
                            &multiply(&Element::term(Basis::F, i.clone(), rat(1)),
                                      &Element::term(Basis::F, j.clone(), rat(1))),
                            Basis::F,
                        );
                        assert_eq!(product_ff(&i, &j).unwrap(), ff, "F{i}·F{j}");
                        let ll = convert(
                            &multiply(&Element::term(Basis::L, i.clone(), rat(1)),
                                      &Element::term(Basis::L, j.clone(), rat(1))),
                            Basis::L,
                        );
                        assert_eq!(product_ll(&i, &j).unwrap(), ll, "L{i}·L{j}");
                    }
                }
            }
        }
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(pair(&single(Basis::M, &[2, 1]), &single(Basis::S, &[2, 1])), rat(1));
        assert_eq!(pair(&single(Basis::M, &[2, 1]), &single(Basis::S, &[1, 2])), rat(0));
        assert_eq!(pair(&single(Basis::L, &[2]), &single(Basis::S, &[1, 1])), rat(1));
        assert_eq!(pair(&single(Basis::Psi, &[2, 1]), &single(Basis::Psi, &[2, 1])), rat(4));
        // cross-degree pairs are zero
        assert_eq!(pair(&single(Basis::M, &[2]), &single(Basis::S, &[3])), rat(0));
    }

    #[test]
    fn closed_form_pairings() {
        assert_eq!(pair_psi_psi(&c(&[2]), &c(&[2])), rat(2));
        assert_eq!(pair_m_psi(&c(&[1, 1]), &c(&[2])), rat(-1));
        assert_eq!(
            pair_m_psi(&c(&[1, 1]), &c(&[2])),
            pair(&single(Basis::M, &[1, 1]), &single(Basis::Psi, &[2]))
        );
        assert_eq!(pair_l_r(&c(&[2, 1]), &c(&[2, 1])), rat(1));
        assert_eq!(pair_l_r(&c(&[2, 1]), &c(&[1, 2])), rat(0));
    }

    #[test]
    fn binom_zero_convention() {
        assert_eq!(binom(5, 2), BigInt::from(10));
        assert_eq!(binom(3, -1), BigInt::zero());
        assert_eq!(binom(3, 4), BigInt::zero());
        assert_eq!(binom(0, 0), BigInt::one());
    }
}
