//! Noncommutative Kostka and Kostka-Gessel matrices, positivity reports, and
//! the closed-form hook-shape rows.

use num::Signed;

use crate::algebra::binom;
use crate::bases::convert;
use crate::composition::{compositions_of, Composition};
use crate::element::{rat, rat_to_string, Basis, Element, Rational};
use crate::error::{Error, Result};
use crate::exec;

/// Which ribbon expansion a report describes: `K_{IJ}` (ribbons in the
/// monomial basis) or `G_{IJ}` (ribbons in the fundamental basis).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KostkaKind {
    Kostka,
    Gessel,
}

impl KostkaKind {
    pub fn name(self) -> &'static str {
        match self {
            KostkaKind::Kostka => "kostka",
            KostkaKind::Gessel => "kostka-gessel",
        }
    }

    fn target(self) -> Basis {
        match self {
            KostkaKind::Kostka => Basis::M,
            KostkaKind::Gessel => Basis::L,
        }
    }
}

/// Dense matrix of ribbon-expansion coefficients at one degree, rows and
/// columns in canonical composition order, with integrality/sign flags
/// computed from the stored entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KostkaReport {
    pub degree: u32,
    pub kind: KostkaKind,
    pub rows: Vec<Vec<Rational>>,
    pub all_integer: bool,
    pub all_nonnegative: bool,
}

fn assemble(kind: KostkaKind, degree: u32, sequential: bool) -> Result<KostkaReport> {
    let comps = compositions_of(degree)?;
    let columns = comps.clone();
    let row_of = move |i: Composition| -> Vec<Rational> {
        let e = convert(&Element::term(Basis::R, i, rat(1)), kind.target());
        columns.iter().map(|j| e.coeff(j)).collect()
    };
    let rows: Vec<Vec<Rational>> = if sequential {
        exec::map_collect_seq(comps, row_of)
    } else {
        exec::map_collect(comps, row_of)
    };
    let all_integer = rows.iter().flatten().all(Rational::is_integer);
    let all_nonnegative = rows.iter().flatten().all(|v| !v.is_negative());
    Ok(KostkaReport { degree, kind, rows, all_integer, all_nonnegative })
}

/// `K_{IJ}`: row `I` holds the monomial coordinates of `R^I`.
pub fn kostka_matrix(degree: u32) -> Result<KostkaReport> {
    assemble(KostkaKind::Kostka, degree, false)
}

/// Sequential variant of [`kostka_matrix`] (benchmark baseline).
pub fn kostka_matrix_seq(degree: u32) -> Result<KostkaReport> {
    assemble(KostkaKind::Kostka, degree, true)
}

/// `G_{IJ}`: row `I` holds the fundamental coordinates of `R^I`.
pub fn kostka_gessel_matrix(degree: u32) -> Result<KostkaReport> {
    assemble(KostkaKind::Gessel, degree, false)
}

/// `R^{(k,1^r)}` in monomial coordinates:
/// `binom(k+r−1, r) Σ_{|I|=k} M^{I·(1^r)}`.
pub fn hook_row(k: u32, r: u32) -> Result<Element> {
    if k == 0 {
        return Err(Error::ZeroPart);
    }
    let coeff = Rational::from_integer(binom((k + r - 1) as i64, r as i64));
    let tail: Vec<u32> = vec![1; r as usize];
    let mut out = Element::zero(Basis::M);
    for i in compositions_of(k)? {
        let mut parts = i.parts().to_vec();
        parts.extend_from_slice(&tail);
        out.add_term(Composition::new(parts)?, coeff.clone());
    }
    Ok(out)
}

/// `R^{(1^r,k)}` in monomial coordinates:
/// `Σ_{|J|=r,|I|=k} [binom(ℓ(I)+ℓ(J)−1, r) M^{J·I} + binom(ℓ(I)+ℓ(J)−2, r) M^{J▷I}]`.
pub fn lower_hook_row(r: u32, k: u32) -> Result<Element> {
    if k == 0 {
        return Err(Error::ZeroPart);
    }
    if r == 0 {
        return hook_row(k, 0);
    }
    let mut out = Element::zero(Basis::M);
    for j in compositions_of(r)? {
        for i in compositions_of(k)? {
            let l = (i.len() + j.len()) as i64;
            out.add_term(j.concat(&i), Rational::from_integer(binom(l - 1, r as i64)));
            out.add_term(j.near_concat(&i)?, Rational::from_integer(binom(l - 2, r as i64)));
        }
    }
    Ok(out)
}

/// Summary of a report's entries: integrality and sign flags plus the extreme
/// nonzero values and the support size, so sparse rows can be audited.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositivitySummary {
    pub degree: u32,
    pub kind: KostkaKind,
    pub all_integer: bool,
    pub all_nonnegative: bool,
    pub support: usize,
    pub min_nonzero: Option<Rational>,
    pub max_entry: Option<Rational>,
}

pub fn positivity_report(degree: u32, kind: KostkaKind) -> Result<PositivitySummary> {
    let report = match kind {
        KostkaKind::Kostka => kostka_matrix(degree)?,
        KostkaKind::Gessel => kostka_gessel_matrix(degree)?,
    };
    let nonzero: Vec<&Rational> =
        report.rows.iter().flatten().filter(|v| **v != rat(0)).collect();
    Ok(PositivitySummary {
        degree,
        kind,
        all_integer: report.all_integer,
        all_nonnegative: report.all_nonnegative,
        support: nonzero.len(),
        min_nonzero: nonzero.iter().min().map(|v| (*v).clone()),
        max_entry: nonzero.iter().max().map(|v| (*v).clone()),
    })
}

impl KostkaReport {
    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// CSV with dot-form composition headers, same shape as the transition
    /// matrix export.
    pub fn to_csv(&self) -> String {
        let comps = compositions_of(self.degree).unwrap();
        let mut out = String::new();
        out.push_str(self.kind.name());
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
            "kind": self.kind.name(),
            "index": comps.iter().map(|c| c.parts()).collect::<Vec<_>>(),
            "entries": self.rows.iter().map(|row| {
                row.iter().map(rat_to_string).collect::<Vec<_>>()
            }).collect::<Vec<_>>(),
            "flags": {
                "all_integer": self.all_integer,
                "all_nonnegative": self.all_nonnegative,
            },
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::multiply;

    fn c(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn row(report: &KostkaReport, i: &Composition) -> Element {
        let comps = compositions_of(report.degree).unwrap();
        let r = comps.iter().position(|x| x == i).unwrap();
        let mut e = Element::zero(report.kind.target());
        for (col, v) in report.rows[r].iter().enumerate() {
            e.add_term(comps[col].clone(), v.clone());
        }
        e
    }

    #[test]
    fn full_row_is_all_ones() {
        let report = kostka_matrix(4).unwrap();
        let e = row(&report, &c(&[4]));
        for j in compositions_of(4).unwrap() {
            assert_eq!(e.coeff(&j), rat(1));
        }
    }

    #[test]
    fn hook_rows_match_matrix() {
        let report = kostka_matrix(3).unwrap();
        let e = row(&report, &c(&[2, 1]));
        assert_eq!(e.coeff(&c(&[2, 1])), rat(2));
        assert_eq!(e.coeff(&c(&[1, 1, 1])), rat(2));
        assert_eq!(e.num_terms(), 2);
        assert_eq!(hook_row(2, 1).unwrap(), e);

        for total in 1..=7u32 {
            let report = kostka_matrix(total).unwrap();
            for k in 1..=total {
                let r = total - k;
                let mut hook = vec![k];
                hook.extend(vec![1; r as usize]);
                assert_eq!(hook_row(k, r).unwrap(), row(&report, &c(&hook)), "hook k={k} r={r}");
                let mut lower = vec![1; r as usize];
                lower.push(k);
                assert_eq!(
                    lower_hook_row(r, k).unwrap(),
                    row(&report, &c(&lower)),
                    "lower hook r={r} k={k}"
                );
            }
        }
    }

    #[test]
    fn gessel_full_row_is_unit() {
        let report = kostka_gessel_matrix(3).unwrap();
        let e = row(&report, &c(&[3]));
        assert_eq!(e, Element::term(Basis::L, c(&[3]), rat(1)));
    }

    #[test]
    fn positivity_small_degrees() {
        for n in 1..=7u32 {
            let k = positivity_report(n, KostkaKind::Kostka).unwrap();
            assert!(k.all_integer && k.all_nonnegative, "kostka n={n}");
            assert!(k.min_nonzero.unwrap() >= rat(1), "kostka n={n} min");
            let g = positivity_report(n, KostkaKind::Gessel).unwrap();
            assert!(g.all_integer && g.all_nonnegative, "gessel n={n}");
        }
        let one = positivity_report(1, KostkaKind::Kostka).unwrap();
        assert_eq!(one.support, 1);
        assert_eq!(one.max_entry, Some(rat(1)));
    }

    #[test]
    fn induction_identities() {
        // S_k · Λ_r = R^{(k,1^r)} + R^{(k+1,1^{r−1})} and
        // Λ_r · S_k = R^{(1^r,k)} + R^{(1^{r−1},k+1)}
        for k in 1..=6u32 {
            for r in 1..=(7 - k) {
                let s = Element::term(Basis::S, c(&[k]), rat(1));
                let e = Element::term(Basis::Lambda, c(&[r]), rat(1));

                let mut hook = vec![k];
                hook.extend(vec![1; r as usize]);
                let mut shorter = vec![k + 1];
                shorter.extend(vec![1; (r - 1) as usize]);
                let mut sum = Element::term(Basis::R, c(&hook), rat(1));
                sum.add_term(c(&shorter), rat(1));
                assert_eq!(
                    multiply(&s, &e),
                    crate::bases::convert(&sum, Basis::Psi),
                    "S_{k}·Λ_{r}"
                );

                let mut lower = vec![1; r as usize];
                lower.push(k);
                let mut lshorter = vec![1; (r - 1) as usize];
                lshorter.push(k + 1);
                let mut sum = Element::term(Basis::R, c(&lower), rat(1));
                sum.add_term(c(&lshorter), rat(1));
                assert_eq!(
                    multiply(&e, &s),
                    crate::bases::convert(&sum, Basis::Psi),
                    "Λ_{r}·S_{k}"
                );
            }
        }
    }

    #[test]
    fn csv_and_json_shape() {
        let report = kostka_matrix(2).unwrap();
        let csv = report.to_csv();
        assert!(csv.starts_with("kostka,2,1.1\n"));
        let json = report.to_json();
        assert_eq!(json["flags"]["all_integer"], serde_json::json!(true));
        assert_eq!(json["entries"][0][0], serde_json::json!("1"));
    }
}
