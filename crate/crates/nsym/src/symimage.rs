//! Commutative image into classical symmetric functions in the power-sum
//! basis, a brute-force polynomial oracle in finitely many variables, and the
//! augmented-monomial checks built on the two.

use std::collections::BTreeMap;

use num::Zero;

use crate::bases::to_psi;
use crate::composition::{multiset_permutations, Composition, Partition};
use crate::element::{rat, rat_to_string, Element, Rational};
use crate::error::{Error, Result};

/// Sparse element of the classical symmetric-function algebra, coordinates in
/// the commutative power-sum basis `p_λ`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SymPElement {
    terms: BTreeMap<Partition, Rational>,
}

impl SymPElement {
    pub fn zero() -> Self {
        SymPElement::default()
    }

    pub fn term(mu: Partition, coeff: Rational) -> Self {
        let mut e = SymPElement::zero();
        e.add_term(mu, coeff);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mu: &Partition) -> Rational {
        self.terms.get(mu).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, mu: Partition, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mu) {
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

    pub fn add_assign(&mut self, other: &SymPElement) {
        for (mu, c) in &other.terms {
            self.add_term(mu.clone(), c.clone());
        }
    }

    pub fn scale(&self, c: &Rational) -> SymPElement {
        if c.is_zero() {
            return SymPElement::zero();
        }
        SymPElement { terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    /// Commutative product: `p_λ · p_ν = p_{sort(λ∪ν)}`.
    pub fn mul(&self, other: &SymPElement) -> SymPElement {
        let mut out = SymPElement::zero();
        for (l, cl) in &self.terms {
            for (n, cn) in &other.terms {
                let mut parts = l.parts().to_vec();
                parts.extend_from_slice(n.parts());
                out.add_term(Partition::new(parts).unwrap(), cl * cn);
            }
        }
        out
    }
}

impl std::fmt::Debug for SymPElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (mu, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}*p{mu}", rat_to_string(c))?;
        }
        Ok(())
    }
}

/// Commutative image: convert to Ψ, send each word `Ψ^I` to `p_{sort(I)}`.
pub fn comm_image(a: &Element) -> SymPElement {
    let psi = to_psi(a);
    let mut out = SymPElement::zero();
    for (i, c) in psi.terms() {
        out.add_term(i.sort_to_partition(), c.clone());
    }
    out
}

/// Exact polynomial in `nvars` commuting variables, stored as a sparse map
/// from exponent vectors to coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyOracle {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl PolyOracle {
    pub fn zero(nvars: usize) -> Result<Self> {
        if nvars < 1 {
            return Err(Error::NoVariables);
        }
        Ok(PolyOracle { nvars, terms: BTreeMap::new() })
    }

    pub fn constant(nvars: usize, c: Rational) -> Result<Self> {
        let mut p = PolyOracle::zero(nvars)?;
        p.add_term(vec![0; nvars], c);
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, exps: Vec<u32>, coeff: Rational) {
        assert_eq!(exps.len(), self.nvars);
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
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

    pub fn add_assign(&mut self, other: &PolyOracle) {
        assert_eq!(self.nvars, other.nvars);
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c.clone());
        }
    }

    pub fn scale(&self, c: &Rational) -> PolyOracle {
        if c.is_zero() {
            return PolyOracle { nvars: self.nvars, terms: BTreeMap::new() };
        }
        PolyOracle {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &PolyOracle) -> PolyOracle {
        assert_eq!(self.nvars, other.nvars);
        let mut out = PolyOracle { nvars: self.nvars, terms: BTreeMap::new() };
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let exps = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(exps, ca * cb);
            }
        }
        out
    }
}

impl std::fmt::Debug for PolyOracle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}*x^{e:?}", rat_to_string(c))?;
        }
        Ok(())
    }
}

/// `p_r = x_1^r + … + x_N^r`.
fn power_sum(r: u32, nvars: usize) -> Result<PolyOracle> {
    let mut p = PolyOracle::zero(nvars)?;
    for i in 0..nvars {
        let mut exps = vec![0; nvars];
        exps[i] = r;
        p.add_term(exps, rat(1));
    }
    Ok(p)
}

/// `p_λ = ∏_i p_{λ_i}` in `nvars` variables.
pub fn oracle_p(lambda: &Partition, nvars: usize) -> Result<PolyOracle> {
    let mut out = PolyOracle::constant(nvars, rat(1))?;
    for &part in lambda.parts() {
        out = out.mul(&power_sum(part, nvars)?);
    }
    Ok(out)
}

/// `m_μ`: sum over distinct monomials whose nonzero exponent multiset is `μ`.
pub fn oracle_monomial(mu: &Partition, nvars: usize) -> Result<PolyOracle> {
    let mut out = PolyOracle::zero(nvars)?;
    if mu.len() > nvars {
        return Ok(out);
    }
    // distinct arrangements of the parts of μ padded with zeros to nvars slots
    fn rec(
        counts: &mut Vec<(u32, u32)>,
        current: &mut Vec<u32>,
        total: usize,
        out: &mut PolyOracle,
    ) {
        if current.len() == total {
            out.add_term(current.clone(), rat(1));
            return;
        }
        for i in 0..counts.len() {
            if counts[i].1 == 0 {
                continue;
            }
            counts[i].1 -= 1;
            current.push(counts[i].0);
            rec(counts, current, total, out);
            current.pop();
            counts[i].1 += 1;
        }
    }
    let mut counts = mu.multiplicities();
    counts.push((0, (nvars - mu.len()) as u32));
    rec(&mut counts, &mut Vec::new(), nvars, &mut out);
    Ok(out)
}

/// `m̃_μ = u(μ) · m_μ`.
pub fn oracle_augmented(mu: &Partition, nvars: usize) -> Result<PolyOracle> {
    Ok(oracle_monomial(mu, nvars)?.scale(&Rational::from_integer(mu.u())))
}

/// Realizes p-coordinates as an explicit polynomial, multiplicatively.
pub fn realize(e: &SymPElement, nvars: usize) -> Result<PolyOracle> {
    let mut out = PolyOracle::zero(nvars)?;
    for (mu, c) in e.terms() {
        out.add_assign(&oracle_p(mu, nvars)?.scale(c));
    }
    Ok(out)
}

fn m_image(index: &Composition) -> SymPElement {
    comm_image(&Element::term(crate::element::Basis::M, index.clone(), rat(1)))
}

/// Verifies `m̃_μ = Σ_{all ℓ! permutations} image(M^I)` (and the equivalent
/// distinct-rearrangement form `m_μ = Σ_{I∼μ} image(M^I)`) by realizing both
/// sides in `|μ|` variables.
pub fn check_augmented_sum(mu: &Partition) -> Result<bool> {
    if mu.is_empty() {
        return Err(Error::EmptyComposition);
    }
    let nvars = mu.weight() as usize;
    let mut distinct_sum = SymPElement::zero();
    for i in multiset_permutations(mu) {
        distinct_sum.add_assign(&m_image(&i));
    }
    // each distinct rearrangement occurs u(μ) times among the ℓ! permutations
    let full_sum = distinct_sum.scale(&Rational::from_integer(mu.u()));
    let augmented_ok = realize(&full_sum, nvars)? == oracle_augmented(mu, nvars)?;
    let monomial_ok = realize(&distinct_sum, nvars)? == oracle_monomial(mu, nvars)?;
    Ok(augmented_ok && monomial_ok)
}

/// Verifies `m̃_μ = n · Σ over the (n−1)! permutations fixing part j` of
/// `image(M^I)`, plus the averaging consequence over all part positions.
pub fn check_fixed_part(mu: &Partition, j: usize) -> Result<bool> {
    let n = mu.len();
    if j < 1 || j > n {
        return Err(Error::IndexOutOfRange(j));
    }
    let nvars = mu.weight() as usize;
    let target = oracle_augmented(mu, nvars)?;

    let fixed_sum = |pos: usize| -> Result<SymPElement> {
        let mut rest = mu.parts().to_vec();
        let fixed = rest.remove(pos - 1);
        let rest = if rest.is_empty() { Partition::empty() } else { Partition::new(rest)? };
        // each distinct arrangement of the rest occurs u(rest) times in (n−1)!
        let weight = Rational::from_integer(rest.u());
        let mut sum = SymPElement::zero();
        let arrangements = if rest.is_empty() {
            vec![Composition::empty()]
        } else {
            multiset_permutations(&rest)
        };
        // the fixed part leads and the rest are permuted after it
        for r in arrangements {
            let mut parts = vec![fixed];
            parts.extend_from_slice(r.parts());
            sum.add_assign(&m_image(&Composition::new(parts)?).scale(&weight));
        }
        Ok(sum)
    };

    let chosen = fixed_sum(j)?.scale(&rat(n as i64));
    if realize(&chosen, nvars)? != target {
        return Ok(false);
    }

    // averaging the n fixed-part identities recovers the full-sum theorem
    let mut average = SymPElement::zero();
    for pos in 1..=n {
        average.add_assign(&fixed_sum(pos)?);
    }
    Ok(realize(&average, nvars)? == target)
}

/// Verifies the classical Pieri rule `p_r · m̃_κ = Σ_{λ/κ=(r)} m̃_λ`, where λ
/// runs over the results of adding `r` to each part position in turn and of
/// appending a new part `r`.
pub fn check_classical_pieri(r: u32, kappa: &Partition) -> Result<bool> {
    if r == 0 {
        return Err(Error::ZeroPart);
    }
    let nvars = (r + kappa.weight()) as usize;
    let p = power_sum(r, nvars)?;
    let lhs = p.mul(&oracle_augmented(kappa, nvars)?);

    let mut rhs = PolyOracle::zero(nvars)?;
    for pos in 0..kappa.len() {
        let mut parts = kappa.parts().to_vec();
        parts[pos] += r;
        rhs.add_assign(&oracle_augmented(&Partition::new(parts)?, nvars)?);
    }
    let mut parts = kappa.parts().to_vec();
    parts.push(r);
    rhs.add_assign(&oracle_augmented(&Partition::new(parts)?, nvars)?);
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::partitions_of;
    use crate::element::{rat_frac, Basis};

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn c(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn image_sorts_indices() {
        let a = Element::term(Basis::Psi, c(&[1, 3, 1]), rat(1));
        assert_eq!(comm_image(&a), SymPElement::term(part(&[3, 1, 1]), rat(1)));

        // M^{21} → ½(p_{21} − p_3)
        let img = comm_image(&Element::term(Basis::M, c(&[2, 1]), rat(1)));
        assert_eq!(img.coeff(&part(&[2, 1])), rat_frac(1, 2));
        assert_eq!(img.coeff(&part(&[3])), rat_frac(-1, 2));

        let mut sum = comm_image(&Element::term(Basis::M, c(&[2, 1]), rat(1)));
        sum.add_assign(&comm_image(&Element::term(Basis::M, c(&[1, 2]), rat(1))));
        assert_eq!(sum.coeff(&part(&[2, 1])), rat(1));
        assert_eq!(sum.coeff(&part(&[3])), rat(-1));
    }

    #[test]
    fn oracle_basics() {
        let p2 = oracle_p(&part(&[2]), 2).unwrap();
        assert_eq!(p2.coeff(&[2, 0]), rat(1));
        assert_eq!(p2.coeff(&[0, 2]), rat(1));

        let m21 = oracle_monomial(&part(&[2, 1]), 2).unwrap();
        assert_eq!(m21.coeff(&[2, 1]), rat(1));
        assert_eq!(m21.coeff(&[1, 2]), rat(1));

        let a11 = oracle_augmented(&part(&[1, 1]), 2).unwrap();
        assert_eq!(a11.coeff(&[1, 1]), rat(2));

        assert!(PolyOracle::zero(0).is_err());
    }

    #[test]
    fn image_is_multiplicative() {
        let pairs: Vec<(Element, Element)> = vec![
            (Element::term(Basis::M, c(&[2, 1]), rat(1)), Element::term(Basis::M, c(&[1]), rat(1))),
            (Element::term(Basis::F, c(&[2]), rat(1)), Element::term(Basis::S, c(&[1, 2]), rat(1))),
            (Element::term(Basis::L, c(&[1, 1]), rat(1)), Element::term(Basis::R, c(&[2, 1]), rat(1))),
        ];
        for (a, b) in pairs {
            let prod = crate::algebra::multiply(&a, &b);
            assert_eq!(comm_image(&prod), comm_image(&a).mul(&comm_image(&b)));
        }
    }

    #[test]
    fn realize_faithful_spot_check() {
        // distinct p-elements realize distinct polynomials when N ≥ degree
        let mut d = SymPElement::term(part(&[2, 1]), rat(1));
        d.add_term(part(&[3]), rat(-1));
        assert!(!realize(&d, 3).unwrap().is_zero());
        assert!(realize(&SymPElement::zero(), 3).unwrap().is_zero());
    }

    #[test]
    fn augmented_sum_small() {
        assert!(check_augmented_sum(&part(&[2, 1])).unwrap());
        assert!(check_augmented_sum(&part(&[1, 1])).unwrap());
        assert!(check_augmented_sum(&part(&[4])).unwrap());
        for n in 1..=6u32 {
            for mu in partitions_of(n) {
                assert!(check_augmented_sum(&mu).unwrap(), "mu={mu}");
            }
        }
    }

    #[test]
    fn fixed_part_small() {
        assert!(check_fixed_part(&part(&[2, 1]), 1).unwrap());
        assert!(check_fixed_part(&part(&[1, 1]), 2).unwrap());
        assert!(check_fixed_part(&part(&[3]), 1).unwrap());
        assert!(check_fixed_part(&part(&[3]), 2).is_err());
        for n in 1..=5u32 {
            for mu in partitions_of(n) {
                for j in 1..=mu.len() {
                    assert!(check_fixed_part(&mu, j).unwrap(), "mu={mu} j={j}");
                }
            }
        }
    }

    #[test]
    fn classical_pieri_small() {
        assert!(check_classical_pieri(1, &part(&[1])).unwrap());
        assert!(check_classical_pieri(2, &part(&[2])).unwrap());
        assert!(check_classical_pieri(3, &Partition::empty()).unwrap());
        // repeated parts exercise the multiplicity bookkeeping
        assert!(check_classical_pieri(1, &part(&[1, 1])).unwrap());
        assert!(check_classical_pieri(2, &part(&[2, 2])).unwrap());
        for n in 0..=4u32 {
            for kappa in partitions_of(n) {
                for r in 1..=3u32 {
                    assert!(check_classical_pieri(r, &kappa).unwrap(), "r={r} kappa={kappa}");
                }
            }
        }
    }
}
