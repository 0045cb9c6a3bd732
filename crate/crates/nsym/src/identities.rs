//! Executable verification of the named identities at configurable degree
//! bounds: Newton relations, Pieri formulas and closed products, the Cauchy
//! identity, the hook-sum identity with its specializations, the binomial
//! lemmas, the duality suite, and wrappers over the quasideterminant, Kostka,
//! and augmented-monomial checks.

use std::time::{Duration, Instant};

use num::{BigInt, Zero};

use crate::algebra::{
    binom, multiply, omega, pair_l_r, pair_m_psi, pair_m_r, pair_psi_psi, pieri_left_psi,
    pieri_right_f, product_ff, product_ll, product_mm,
};
use crate::bases::{convert, f_to_psi, m_to_psi, to_psi};
use crate::composition::{compositions_of, partitions_of, Composition};
use crate::element::{rat, Basis, Element, Rational, TensorElement};
use crate::error::Result;
use crate::exec;

/// Outcome of one identity run; `pass` is true iff no counterexample exists.
#[derive(Debug, Clone)]
pub struct VerificationResult {
    pub name: String,
    pub degree: u32,
    pub pass: bool,
    pub counterexample: Option<String>,
    pub wall_time: Duration,
}

fn run(name: &str, degree: u32, check: impl FnOnce() -> Option<String>) -> VerificationResult {
    let start = Instant::now();
    let counterexample = check();
    VerificationResult {
        name: name.to_string(),
        degree,
        pass: counterexample.is_none(),
        counterexample,
        wall_time: start.elapsed(),
    }
}

fn first_failure(
    items: Vec<Composition>,
    f: impl Fn(Composition) -> Option<String> + Sync + Send,
) -> Option<String> {
    exec::map_collect(items, f).into_iter().flatten().next()
}

fn psi_single(weight: u32) -> Element {
    Element::term(Basis::Psi, Composition::single(weight), rat(1))
}

fn sign(k: usize) -> Rational {
    if k % 2 == 0 {
        rat(1)
    } else {
        rat(-1)
    }
}

fn ipow(base: i64, exp: usize) -> Rational {
    let mut out = rat(1);
    for _ in 0..exp {
        out *= rat(base);
    }
    out
}

/// `(1^k, m−k)` for `0 ≤ k < m`.
fn lower_hook(k: usize, m: u32) -> Composition {
    let mut parts = vec![1u32; k];
    parts.push(m - k as u32);
    Composition::new(parts).unwrap()
}

/// Newton-type relations: `ℓ·M^I = Σ_s (−1)^{s−1} Ψ_{i_1+…+i_s} M^{(i_{s+1},…)}`
/// and `ℓ·F^I = Σ_s F^{(i_1,…,i_s)} Ψ_{i_{s+1}+…+i_ℓ}`.
pub fn verify_newton(n: u32) -> VerificationResult {
    run("newton", n, || {
        for m in 1..=n {
            let comps = match compositions_of(m) {
                Ok(c) => c,
                Err(e) => return Some(e.to_string()),
            };
            let bad = first_failure(comps, |i| {
                let parts = i.parts().to_vec();
                let l = parts.len();

                let lhs = m_to_psi(&i).scale(&rat(l as i64));
                let mut rhs = Element::zero(Basis::Psi);
                for s in 1..=l {
                    let head: u32 = parts[..s].iter().sum();
                    let tail = Composition::new(parts[s..].to_vec()).unwrap_or_else(|_| Composition::empty());
                    let term =
                        crate::element::mul_psi(&psi_single(head), &m_to_psi(&tail)).unwrap();
                    rhs.add_assign_scaled(&term, &sign(s - 1)).unwrap();
                }
                if lhs != rhs {
                    return Some(format!("monomial Newton fails at I={i}: {lhs} vs {rhs}"));
                }

                let lhs = f_to_psi(&i).scale(&rat(l as i64));
                let mut rhs = Element::zero(Basis::Psi);
                for s in 0..l {
                    let head = Composition::new(parts[..s].to_vec()).unwrap_or_else(|_| Composition::empty());
                    let tail: u32 = parts[s..].iter().sum();
                    let term =
                        crate::element::mul_psi(&f_to_psi(&head), &psi_single(tail)).unwrap();
                    rhs.add_assign_scaled(&term, &rat(1)).unwrap();
                }
                if lhs != rhs {
                    return Some(format!("forgotten Newton fails at I={i}: {lhs} vs {rhs}"));
                }
                None
            });
            if bad.is_some() {
                return bad;
            }
        }
        None
    })
}

/// Pieri formulas and all three closed-form products against the generic
/// Ψ-product, over all index pairs of total degree ≤ n.
pub fn verify_products(n: u32) -> VerificationResult {
    run("products", n, || {
        for total in 2..=n {
            for a in 1..total {
                let b = total - a;
                let left = match compositions_of(a) {
                    Ok(c) => c,
                    Err(e) => return Some(e.to_string()),
                };
                let right = compositions_of(b).unwrap();
                let bad = first_failure(left, |i| {
                    for j in &right {
                        let mi = Element::term(Basis::M, i.clone(), rat(1));
                        let mj = Element::term(Basis::M, j.clone(), rat(1));
                        let generic = convert(&multiply(&mi, &mj), Basis::M);
                        let closed = product_mm(&i, j).unwrap();
                        if closed != generic {
                            return Some(format!("M{i}·M{j}: {closed} vs {generic}"));
                        }
                        let fi = Element::term(Basis::F, i.clone(), rat(1));
                        let fj = Element::term(Basis::F, j.clone(), rat(1));
                        let generic = convert(&multiply(&fi, &fj), Basis::F);
                        let closed = product_ff(&i, j).unwrap();
                        if closed != generic {
                            return Some(format!("F{i}·F{j}: {closed} vs {generic}"));
                        }
                        let li = Element::term(Basis::L, i.clone(), rat(1));
                        let lj = Element::term(Basis::L, j.clone(), rat(1));
                        let generic = convert(&multiply(&li, &lj), Basis::L);
                        let closed = product_ll(&i, j).unwrap();
                        if closed != generic {
                            return Some(format!("L{i}·L{j}: {closed} vs {generic}"));
                        }
                    }
                    // Pieri with r = b on the monomial/forgotten side
                    let r = b;
                    let pieri = pieri_left_psi(r, &i).unwrap();
                    let generic = convert(
                        &multiply(&psi_single(r), &Element::term(Basis::M, i.clone(), rat(1))),
                        Basis::M,
                    );
                    if pieri != generic {
                        return Some(format!("Ψ_{r}·M{i}: {pieri} vs {generic}"));
                    }
                    let pieri = pieri_right_f(&i, r).unwrap();
                    let generic = convert(
                        &multiply(&Element::term(Basis::F, i.clone(), rat(1)), &psi_single(r)),
                        Basis::F,
                    );
                    if pieri != generic {
                        return Some(format!("F{i}·Ψ_{r}: {pieri} vs {generic}"));
                    }
                    None
                });
                if bad.is_some() {
                    return bad;
                }
            }
        }
        None
    })
}

/// Cauchy identity `Σ_I M^I ⊗ S^I = Σ_J L^J ⊗ R^J`, degree by degree, both in
/// mixed M⊗S coordinates and in the double-Ψ expansion.
pub fn verify_cauchy(n: u32) -> VerificationResult {
    run("cauchy", n, || {
        for m in 1..=n {
            let comps = match compositions_of(m) {
                Ok(c) => c,
                Err(e) => return Some(e.to_string()),
            };

            let mut psi_left = TensorElement::zero(Basis::Psi, Basis::Psi);
            let mut psi_right = TensorElement::zero(Basis::Psi, Basis::Psi);
            let mut mixed_left = TensorElement::zero(Basis::M, Basis::S);
            let mut mixed_right = TensorElement::zero(Basis::M, Basis::S);
            for i in &comps {
                let m_el = Element::term(Basis::M, i.clone(), rat(1));
                let s_el = Element::term(Basis::S, i.clone(), rat(1));
                let l_el = Element::term(Basis::L, i.clone(), rat(1));
                let r_el = Element::term(Basis::R, i.clone(), rat(1));

                psi_left
                    .add_assign(&TensorElement::from_pair(&to_psi(&m_el), &to_psi(&s_el)))
                    .unwrap();
                psi_right
                    .add_assign(&TensorElement::from_pair(&to_psi(&l_el), &to_psi(&r_el)))
                    .unwrap();

                mixed_left.add_assign(&TensorElement::from_pair(&m_el, &s_el)).unwrap();
                mixed_right
                    .add_assign(&TensorElement::from_pair(
                        &convert(&l_el, Basis::M),
                        &convert(&r_el, Basis::S),
                    ))
                    .unwrap();
            }
            if psi_left != psi_right {
                return Some(format!("double-Ψ expansion differs at degree {m}"));
            }
            if mixed_left != mixed_right {
                return Some(format!("mixed-basis expansion differs at degree {m}"));
            }
        }
        None
    })
}

/// Hook-sum identity `Σ_{|I|=m} X^{ℓ(I)−1} M^I = Σ_k R^{(1^k,m−k)} (X−1)^k`
/// at the integer points `X ∈ {0..m}`, plus the X=0 and X=2 specializations
/// and a finite-difference coefficient cross-check at one small degree.
pub fn verify_hook_sum_identity(n: u32) -> VerificationResult {
    run("hook-sum", n, || {
        for m in 1..=n {
            let comps = match compositions_of(m) {
                Ok(c) => c,
                Err(e) => return Some(e.to_string()),
            };
            let monomials: Vec<(usize, Element)> =
                comps.iter().map(|i| (i.len(), m_to_psi(i))).collect();
            let ribbons: Vec<Element> = (0..m as usize)
                .map(|k| convert(&Element::term(Basis::R, lower_hook(k, m), rat(1)), Basis::Psi))
                .collect();

            let lhs_at = |x: i64| -> Element {
                let mut out = Element::zero(Basis::Psi);
                for (l, e) in &monomials {
                    out.add_assign_scaled(e, &ipow(x, l - 1)).unwrap();
                }
                out
            };
            let rhs_at = |x: i64| -> Element {
                let mut out = Element::zero(Basis::Psi);
                for (k, r) in ribbons.iter().enumerate() {
                    out.add_assign_scaled(r, &ipow(x - 1, k)).unwrap();
                }
                out
            };

            // both sides are polynomial in X of degree ≤ m−1, so m+1 points decide
            for x in 0..=m as i64 {
                let lhs = lhs_at(x);
                let rhs = rhs_at(x);
                if lhs != rhs {
                    return Some(format!("degree {m}, X={x}: {lhs} vs {rhs}"));
                }
            }

            // X = 0: Ψ_m = Σ_k (−1)^k R^{(1^k,m−k)}
            let mut alternating = Element::zero(Basis::Psi);
            for (k, r) in ribbons.iter().enumerate() {
                alternating.add_assign_scaled(r, &sign(k)).unwrap();
            }
            if alternating != psi_single(m) {
                return Some(format!("degree {m}: power-sum specialization fails"));
            }

            // X = 2: Σ_{|I|=m} L^I = Σ_k R^{(1^k,m−k)}
            let mut fundamental_sum = Element::zero(Basis::Psi);
            for i in &comps {
                fundamental_sum
                    .add_assign_scaled(&to_psi(&Element::term(Basis::L, i.clone(), rat(1))), &rat(1))
                    .unwrap();
            }
            let mut plain_sum = Element::zero(Basis::Psi);
            for r in &ribbons {
                plain_sum.add_assign_scaled(r, &rat(1)).unwrap();
            }
            if fundamental_sum != plain_sum {
                return Some(format!("degree {m}: fundamental-sum specialization fails"));
            }
        }

        // coefficient-level cross-check via interpolation at one degree
        let m = n.min(4);
        if m >= 1 {
            if let Some(err) = hook_sum_coefficient_check(m) {
                return Some(err);
            }
        }
        None
    })
}

/// Recovers the X^j coefficients of both sides of the hook-sum identity from
/// their integer evaluations (Lagrange interpolation on 0..m−1) and compares
/// them with the directly assembled coefficients.
fn hook_sum_coefficient_check(m: u32) -> Option<String> {
    let comps = compositions_of(m).unwrap();
    let monomials: Vec<(usize, Element)> = comps.iter().map(|i| (i.len(), m_to_psi(i))).collect();
    let ribbons: Vec<Element> = (0..m as usize)
        .map(|k| convert(&Element::term(Basis::R, lower_hook(k, m), rat(1)), Basis::Psi))
        .collect();
    let d = (m - 1) as usize;

    let values: Vec<Element> = (0..=d as i64)
        .map(|x| {
            let mut out = Element::zero(Basis::Psi);
            for (l, e) in &monomials {
                out.add_assign_scaled(e, &ipow(x, l - 1)).unwrap();
            }
            out
        })
        .collect();

    // monomial coefficients of the Lagrange basis polynomial through node i
    let lagrange_coeffs = |i: usize| -> Vec<Rational> {
        let mut poly = vec![rat(1)];
        let mut denom = rat(1);
        for k in 0..=d {
            if k == i {
                continue;
            }
            // multiply by (X − k)
            let mut next = vec![rat(0); poly.len() + 1];
            for (j, c) in poly.iter().enumerate() {
                next[j] += c * &rat(-(k as i64));
                next[j + 1] += c;
            }
            poly = next;
            denom *= rat(i as i64 - k as i64);
        }
        poly.into_iter().map(|c| c / &denom).collect()
    };

    let mut interpolated: Vec<Element> = vec![Element::zero(Basis::Psi); d + 1];
    for (i, v) in values.iter().enumerate() {
        let coeffs = lagrange_coeffs(i);
        for (j, c) in coeffs.iter().enumerate() {
            interpolated[j].add_assign_scaled(v, c).unwrap();
        }
    }

    for j in 0..=d {
        // direct left coefficient: Σ_{ℓ(I)=j+1} M^I
        let mut left = Element::zero(Basis::Psi);
        for (l, e) in &monomials {
            if *l == j + 1 {
                left.add_assign_scaled(e, &rat(1)).unwrap();
            }
        }
        if interpolated[j] != left {
            return Some(format!("degree {m}: interpolated X^{j} coefficient differs from lhs"));
        }
        // direct right coefficient: Σ_k binom(k, j) (−1)^{k−j} R^{(1^k,m−k)}
        let mut right = Element::zero(Basis::Psi);
        for (k, r) in ribbons.iter().enumerate() {
            if k < j {
                continue;
            }
            let c = sign(k - j) * Rational::from_integer(binom(k as i64, j as i64));
            right.add_assign_scaled(r, &c).unwrap();
        }
        if interpolated[j] != right {
            return Some(format!("degree {m}: interpolated X^{j} coefficient differs from rhs"));
        }
    }
    None
}

/// The two binomial lemmas, exhaustively over compositions of weight ≤ maxN
/// and integers `0 ≤ X, Y ≤ 2·maxN`.
pub fn verify_binomial_lemmas(max_n: u32) -> VerificationResult {
    run("binomial-lemmas", max_n, || {
        let window = 2 * max_n as i64;
        for m in 1..=max_n {
            let comps = match compositions_of(m) {
                Ok(c) => c,
                Err(e) => return Some(e.to_string()),
            };
            let bad = first_failure(comps, |s| {
                // Σ_{J ⪰ I} binom(X, Y+ℓ(J)) = binom(X+|I|−ℓ(I), Y+|I|)
                let i = &s;
                for x in 0..=window {
                    for y in 0..=window {
                        let mut lhs = BigInt::zero();
                        for j in i.refinements() {
                            lhs += binom(x, y + j.len() as i64);
                        }
                        let rhs = binom(
                            x + i.weight() as i64 - i.len() as i64,
                            y + i.weight() as i64,
                        );
                        if lhs != rhs {
                            return Some(format!("first lemma fails at I={i}, X={x}, Y={y}"));
                        }
                    }
                }
                // Σ_{S⪰M⪰J} (−1)^{ℓ(S)−ℓ(M)} binom(X+ℓ(M), Y)
                //   = binom(X+ℓ(J), Y−ℓ(S)+ℓ(J))
                for j in s.coarsenings() {
                    for x in 0..=window {
                        for y in 0..=window {
                            let mut lhs = BigInt::zero();
                            for mid in s.coarsenings() {
                                if !j.is_coarsening_of(&mid) {
                                    continue;
                                }
                                let term = binom(x + mid.len() as i64, y);
                                if (s.len() - mid.len()) % 2 == 0 {
                                    lhs += term;
                                } else {
                                    lhs -= term;
                                }
                            }
                            let rhs = binom(
                                x + j.len() as i64,
                                y - s.len() as i64 + j.len() as i64,
                            );
                            if lhs != rhs {
                                return Some(format!(
                                    "second lemma fails at S={s}, J={j}, X={x}, Y={y}"
                                ));
                            }
                        }
                    }
                }
                None
            });
            if bad.is_some() {
                return bad;
            }
        }
        None
    })
}

/// Duality suite: orthonormality of M/S and L/R, the θ pairing of L/S, the
/// closed forms of ⟨M,R⟩, ⟨M,Ψ⟩, and ⟨Ψ,Ψ⟩, isometry of ω, ω(L^I) = L^{Ĩ},
/// and the reversal corollary, for all indices of degree ≤ n.
pub fn verify_duality_suite(n: u32) -> VerificationResult {
    run("duality", n, || {
        for m in 1..=n {
            let comps = match compositions_of(m) {
                Ok(c) => c,
                Err(e) => return Some(e.to_string()),
            };

            // one conversion per row, reused across all column pairings
            let omega_m: Vec<Element> = exec::map_collect(comps.clone(), |i| {
                convert(&omega(&Element::term(Basis::M, i, rat(1))), Basis::M)
            });
            let omega_s: Vec<Element> = exec::map_collect(comps.clone(), |i| {
                convert(&omega(&Element::term(Basis::S, i, rat(1))), Basis::S)
            });
            let psi_m: Vec<Element> = exec::map_collect(comps.clone(), |i| {
                convert(&Element::term(Basis::Psi, i, rat(1)), Basis::M)
            });
            let psi_s: Vec<Element> = exec::map_collect(comps.clone(), |i| {
                convert(&Element::term(Basis::Psi, i, rat(1)), Basis::S)
            });
            let l_m: Vec<Element> =
                exec::map_collect(comps.clone(), |i| crate::bases::l_to_m(&i));
            let r_s: Vec<Element> =
                exec::map_collect(comps.clone(), |i| crate::bases::r_to_s(&i));

            let dot = |a: &Element, b: &Element| -> Rational {
                let mut acc = rat(0);
                for (k, c) in a.terms() {
                    let d = b.coeff(k);
                    if !d.is_zero() {
                        acc += c * d;
                    }
                }
                acc
            };

            for (ri, i) in comps.iter().enumerate() {
                // ω(L^I) = L^{Ĩ}
                let lhs = omega(&Element::term(Basis::L, i.clone(), rat(1)));
                let conj = i.conjugate().unwrap();
                let rhs = to_psi(&Element::term(Basis::L, conj.clone(), rat(1)));
                if lhs != rhs {
                    return Some(format!("ω(L^{i}) ≠ L^{conj}"));
                }
                // ⟨Ψ^I, Ψ^I⟩ = (∏ i_k) ℓ(I)!
                let mut expected = rat(1);
                for &p in i.parts() {
                    expected *= rat(p as i64);
                }
                for k in 2..=i.len() as i64 {
                    expected *= rat(k);
                }
                if pair_psi_psi(i, i) != expected {
                    return Some(format!("⟨Ψ^{i},Ψ^{i}⟩ ≠ {expected}"));
                }

                for (rj, j) in comps.iter().enumerate() {
                    let delta = if ri == rj { rat(1) } else { rat(0) };
                    // isometry: ⟨ωM^I, ωS^J⟩ = ⟨M^I, S^J⟩ = δ
                    if dot(&omega_m[ri], &omega_s[rj]) != delta {
                        return Some(format!("isometry fails at I={i}, J={j}"));
                    }
                    // ⟨L^I, R^J⟩ = δ, generic and closed form
                    if dot(&l_m[ri], &r_s[rj]) != delta || pair_l_r(i, j) != delta {
                        return Some(format!("⟨L^{i},R^{j}⟩ ≠ δ"));
                    }
                    // ⟨L^I, S^J⟩ = θ(J ⪰ I)
                    let theta = if i.is_coarsening_of(j) { rat(1) } else { rat(0) };
                    if dot(&l_m[ri], &Element::term(Basis::S, j.clone(), rat(1))) != theta {
                        return Some(format!("⟨L^{i},S^{j}⟩ ≠ θ"));
                    }
                    // ⟨M^I, R^J⟩ closed form against the generic pairing
                    let generic = r_s[rj].coeff(i);
                    if pair_m_r(i, j) != generic {
                        return Some(format!("⟨M^{i},R^{j}⟩ closed form differs"));
                    }
                    // ⟨M^I, Ψ^J⟩ closed form against the generic pairing
                    let generic = psi_s[rj].coeff(i);
                    if pair_m_psi(i, j) != generic {
                        return Some(format!("⟨M^{i},Ψ^{j}⟩ closed form differs"));
                    }
                    // ⟨Ψ^I, Ψ^J⟩ closed form against the generic pairing
                    let generic = dot(&psi_m[ri], &psi_s[rj]);
                    if pair_psi_psi(i, j) != generic {
                        return Some(format!("⟨Ψ^{i},Ψ^{j}⟩ closed form differs"));
                    }
                    // reversal corollary
                    let reversed = pair_psi_psi(&i.reverse(), &j.reverse());
                    let expected = sign(i.len() + j.len()) * pair_psi_psi(i, j);
                    if reversed != expected {
                        return Some(format!("reversal corollary fails at I={i}, J={j}"));
                    }
                }
            }
        }
        None
    })
}

/// Symbolic kaleidoscopic identity for `2 ≤ size ≤ min(n, 6)`.
pub fn verify_kaleidoscope(n: u32) -> VerificationResult {
    let bound = n.min(6);
    run("kaleidoscope", bound, || {
        for size in 2..=bound.max(2) as usize {
            match crate::quasidet::kaleidoscope_check(size) {
                Ok(true) => {}
                Ok(false) => return Some(format!("kaleidoscope fails at n={size}")),
                Err(e) => return Some(e.to_string()),
            }
        }
        None
    })
}

/// Matrix-based definitions of M, F, Λ, S, R against the closed forms.
pub fn verify_quasidet_defs(n: u32) -> VerificationResult {
    run("quasidet-defs", n, || {
        let mf_bound = n.min(7);
        for m in 1..=mf_bound {
            let comps = match compositions_of(m) {
                Ok(c) => c,
                Err(e) => return Some(e.to_string()),
            };
            let bad = first_failure(comps, |i| {
                if i.len() > 6 {
                    return None;
                }
                match crate::quasidet::build_m_def(&i) {
                    Ok(e) if e == m_to_psi(&i) => {}
                    Ok(_) => return Some(format!("definitional M^{i} differs")),
                    Err(err) => return Some(err.to_string()),
                }
                match crate::quasidet::build_f_def(&i) {
                    Ok(e) if e == f_to_psi(&i) => {}
                    Ok(_) => return Some(format!("definitional F^{i} differs")),
                    Err(err) => return Some(err.to_string()),
                }
                None
            });
            if bad.is_some() {
                return bad;
            }
        }
        for k in 1..=n.min(7) {
            match crate::quasidet::build_lambda_def(k) {
                Ok(e) if e == crate::bases::lambda_to_psi(&Composition::single(k)) => {}
                _ => return Some(format!("definitional Λ_{k} differs")),
            }
            match crate::quasidet::build_s_def(k) {
                Ok(e) if e == crate::bases::s_to_psi(&Composition::single(k)) => {}
                _ => return Some(format!("definitional S_{k} differs")),
            }
        }
        for m in 1..=n.min(6) {
            let comps = compositions_of(m).unwrap();
            let bad = first_failure(comps, |i| {
                let expected = convert(&Element::term(Basis::R, i.clone(), rat(1)), Basis::Psi);
                match crate::quasidet::build_r_def(&i) {
                    Ok(e) if e == expected => None,
                    _ => Some(format!("definitional R^{i} differs")),
                }
            });
            if bad.is_some() {
                return bad;
            }
        }
        None
    })
}

/// Kostka positivity, hook rows, and the induction identities.
pub fn verify_kostka(n: u32) -> VerificationResult {
    run("kostka", n, || {
        for m in 1..=n.min(10) {
            match crate::kostka::positivity_report(m, crate::kostka::KostkaKind::Kostka) {
                Ok(r) if r.all_integer && r.all_nonnegative => {}
                Ok(_) => return Some(format!("Kostka positivity fails at degree {m}")),
                Err(e) => return Some(e.to_string()),
            }
            match crate::kostka::positivity_report(m, crate::kostka::KostkaKind::Gessel) {
                Ok(r) if r.all_integer && r.all_nonnegative => {}
                Ok(_) => return Some(format!("Kostka-Gessel positivity fails at degree {m}")),
                Err(e) => return Some(e.to_string()),
            }
        }
        for total in 1..=n.min(9) {
            for k in 1..=total {
                let r = total - k;
                let report = crate::kostka::kostka_matrix(total).unwrap();
                let comps = compositions_of(total).unwrap();
                let row_elem = |index: &Composition| -> Element {
                    let row = comps.iter().position(|c| c == index).unwrap();
                    let mut e = Element::zero(Basis::M);
                    for (col, v) in report.rows[row].iter().enumerate() {
                        e.add_term(comps[col].clone(), v.clone());
                    }
                    e
                };
                let mut hook = vec![k];
                hook.extend(vec![1; r as usize]);
                if crate::kostka::hook_row(k, r).unwrap() != row_elem(&Composition::new(hook).unwrap())
                {
                    return Some(format!("hook row k={k}, r={r} differs"));
                }
                let mut lower = vec![1; r as usize];
                lower.push(k);
                if crate::kostka::lower_hook_row(r, k).unwrap()
                    != row_elem(&Composition::new(lower).unwrap())
                {
                    return Some(format!("lower hook row r={r}, k={k} differs"));
                }
            }
        }
        for k in 1..=n.min(8).saturating_sub(1) {
            for r in 1..=(n.min(8) - k) {
                let s = Element::term(Basis::S, Composition::single(k), rat(1));
                let e = Element::term(Basis::Lambda, Composition::single(r), rat(1));
                let mut hook = vec![k];
                hook.extend(vec![1; r as usize]);
                let mut shorter = vec![k + 1];
                shorter.extend(vec![1; (r - 1) as usize]);
                let mut sum = Element::term(Basis::R, Composition::new(hook).unwrap(), rat(1));
                sum.add_term(Composition::new(shorter).unwrap(), rat(1));
                if multiply(&s, &e) != convert(&sum, Basis::Psi) {
                    return Some(format!("S_{k}·Λ_{r} induction identity fails"));
                }
                let mut lower = vec![1; r as usize];
                lower.push(k);
                let mut lshorter = vec![1; (r - 1) as usize];
                lshorter.push(k + 1);
                let mut sum = Element::term(Basis::R, Composition::new(lower).unwrap(), rat(1));
                sum.add_term(Composition::new(lshorter).unwrap(), rat(1));
                if multiply(&e, &s) != convert(&sum, Basis::Psi) {
                    return Some(format!("Λ_{r}·S_{k} induction identity fails"));
                }
            }
        }
        None
    })
}

/// Augmented-monomial theorem and the fixed-part refinement against the
/// polynomial oracle.
pub fn verify_augmented_monomial(n: u32) -> VerificationResult {
    run("augmented-monomial", n, || {
        for m in 1..=n.min(9) {
            for mu in partitions_of(m) {
                match crate::symimage::check_augmented_sum(&mu) {
                    Ok(true) => {}
                    Ok(false) => return Some(format!("augmented sum fails at μ={mu}")),
                    Err(e) => return Some(e.to_string()),
                }
            }
        }
        for m in 1..=n.min(8) {
            for mu in partitions_of(m) {
                for j in 1..=mu.len() {
                    match crate::symimage::check_fixed_part(&mu, j) {
                        Ok(true) => {}
                        Ok(false) => return Some(format!("fixed part fails at μ={mu}, j={j}")),
                        Err(e) => return Some(e.to_string()),
                    }
                }
            }
        }
        None
    })
}

/// Runs the whole suite at one degree bound (heavier members are internally
/// capped at their documented bounds). Results are ordered by name.
pub fn verify_all(degree: u32) -> Vec<VerificationResult> {
    type Job = Box<dyn Fn() -> VerificationResult + Sync + Send>;
    let jobs: Vec<Job> = vec![
        Box::new(move || verify_augmented_monomial(degree)),
        Box::new(move || verify_binomial_lemmas(degree.min(5))),
        Box::new(move || verify_cauchy(degree)),
        Box::new(move || verify_duality_suite(degree)),
        Box::new(move || verify_hook_sum_identity(degree)),
        Box::new(move || verify_kaleidoscope(degree)),
        Box::new(move || verify_kostka(degree)),
        Box::new(move || verify_newton(degree)),
        Box::new(move || verify_products(degree)),
        Box::new(move || verify_quasidet_defs(degree)),
    ];
    let mut results = exec::map_collect(jobs, |job| job());
    results.sort_by(|a, b| a.name.cmp(&b.name));
    results
}

/// Looks up a single identity by its report name.
pub fn verify_by_name(name: &str, degree: u32) -> Result<VerificationResult> {
    let result = match name {
        "augmented-monomial" => verify_augmented_monomial(degree),
        "binomial-lemmas" => verify_binomial_lemmas(degree),
        "cauchy" => verify_cauchy(degree),
        "duality" => verify_duality_suite(degree),
        "hook-sum" => verify_hook_sum_identity(degree),
        "kaleidoscope" => verify_kaleidoscope(degree),
        "kostka" => verify_kostka(degree),
        "newton" => verify_newton(degree),
        "products" => verify_products(degree),
        "quasidet-defs" => verify_quasidet_defs(degree),
        other => return Err(crate::error::Error::UnknownBasis(other.to_string())),
    };
    Ok(result)
}

pub const IDENTITY_NAMES: [&str; 10] = [
    "augmented-monomial",
    "binomial-lemmas",
    "cauchy",
    "duality",
    "hook-sum",
    "kaleidoscope",
    "kostka",
    "newton",
    "products",
    "quasidet-defs",
];

pub fn report_json(results: &[VerificationResult]) -> serde_json::Value {
    serde_json::json!({
        "results": results.iter().map(|r| serde_json::json!({
            "name": r.name,
            "degree": r.degree,
            "pass": r.pass,
            "counterexample": r.counterexample,
            "millis": r.wall_time.as_millis() as u64,
        })).collect::<Vec<_>>(),
        "pass": results.iter().all(|r| r.pass),
    })
}

pub fn report_table(results: &[VerificationResult]) -> String {
    let mut out = String::new();
    let width = results.iter().map(|r| r.name.len()).max().unwrap_or(0).max(8);
    for r in results {
        let status = if r.pass { "pass" } else { "FAIL" };
        out.push_str(&format!(
            "{:<width$}  degree {:>2}  {}  {:>8.2?}\n",
            r.name, r.degree, status, r.wall_time
        ));
        if let Some(cx) = &r.counterexample {
            out.push_str(&format!("{:<width$}  counterexample: {cx}\n", ""));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn newton_small() {
        let r = verify_newton(5);
        assert!(r.pass, "{:?}", r.counterexample);
    }

    #[test]
    fn products_small() {
        let r = verify_products(5);
        assert!(r.pass, "{:?}", r.counterexample);
    }

    #[test]
    fn cauchy_small() {
        let r = verify_cauchy(4);
        assert!(r.pass, "{:?}", r.counterexample);
    }

    #[test]
    fn hook_sum_small() {
        let r = verify_hook_sum_identity(5);
        assert!(r.pass, "{:?}", r.counterexample);
    }

    #[test]
    fn binomial_lemmas_small() {
        let r = verify_binomial_lemmas(3);
        assert!(r.pass, "{:?}", r.counterexample);
    }

    #[test]
    fn duality_small() {
        let r = verify_duality_suite(4);
        assert!(r.pass, "{:?}", r.counterexample);
    }

    #[test]
    fn wrapped_checks_small() {
        for r in [
            verify_kaleidoscope(3),
            verify_quasidet_defs(4),
            verify_kostka(4),
            verify_augmented_monomial(4),
        ] {
            assert!(r.pass, "{}: {:?}", r.name, r.counterexample);
        }
    }

    #[test]
    fn all_names_resolve() {
        for name in IDENTITY_NAMES {
            let r = verify_by_name(name, 2).unwrap();
            assert_eq!(r.name, name);
            assert!(r.pass, "{name}: {:?}", r.counterexample);
        }
        assert!(verify_by_name("unknown", 2).is_err());
    }

    #[test]
    fn reports_render() {
        let results = vec![verify_newton(2), verify_cauchy(2)];
        let json = report_json(&results);
        assert_eq!(json["pass"], serde_json::json!(true));
        let table = report_table(&results);
        assert!(table.contains("newton"));
        assert!(table.contains("pass"));
    }
}
