//! Randomized properties: serialization round trips, algebraic laws of the
//! product and of ω, substitution as a homomorphism, matrix triangularity,
//! conversion round trips, and closed-form products against the generic one.

use std::collections::BTreeMap;

use proptest::prelude::*;

use nsym::algebra::{multiply, omega, pair, product_ff, product_ll, product_mm};
use nsym::bases::{convert, to_psi, transition_matrix, unitriangular_pm_one};
use nsym::composition::Composition;
use nsym::element::{mul_psi, rat, rat_frac, rat_to_string, rat_from_str, Basis, Element, ALL_BASES};
use nsym::symalg::{Atom, SymElement};

fn composition_strategy() -> impl Strategy<Value = Composition> {
    prop::collection::vec(1u32..=3, 1..=4).prop_map(|parts| Composition::new(parts).unwrap())
}

/// Kept to weight ≤ 4 so product expansions (whose intermediate supports grow
/// exponentially in the total weight) stay small; the acceptance suite covers
/// products exhaustively up to total degree 8.
fn small_composition_strategy() -> impl Strategy<Value = Composition> {
    prop::collection::vec(1u32..=2, 1..=2).prop_map(|parts| Composition::new(parts).unwrap())
}

fn element_strategy(basis: Basis) -> impl Strategy<Value = Element> {
    prop::collection::vec(
        (composition_strategy(), -20i64..=20, 1i64..=6),
        1..=3,
    )
    .prop_map(move |terms| {
        let mut e = Element::zero(basis);
        for (index, numer, denom) in terms {
            e.add_term(index, rat_frac(numer, denom));
        }
        e
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_string_round_trip(numer in -10_000i64..=10_000, denom in 1i64..=10_000) {
        let r = rat_frac(numer, denom);
        prop_assert_eq!(rat_from_str(&rat_to_string(&r)).unwrap(), r);
    }

    #[test]
    fn psi_product_is_associative(
        a in element_strategy(Basis::Psi),
        b in element_strategy(Basis::Psi),
        c in element_strategy(Basis::Psi),
    ) {
        let left = mul_psi(&mul_psi(&a, &b).unwrap(), &c).unwrap();
        let right = mul_psi(&a, &mul_psi(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn substitution_is_a_homomorphism(
        word_a in prop::collection::vec(0usize..3, 0..=3),
        word_b in prop::collection::vec(0usize..3, 0..=3),
        images in prop::collection::vec(1u32..=3, 3),
    ) {
        let atoms = [Atom::new(2, 1), Atom::new(3, 1), Atom::new(3, 2)];
        let env: BTreeMap<Atom, Element> = atoms
            .iter()
            .zip(&images)
            .map(|(&atom, &weight)| {
                (atom, Element::term(Basis::Psi, Composition::single(weight), rat(1)))
            })
            .collect();
        let build = |picks: &[usize]| {
            SymElement::word(picks.iter().map(|&i| atoms[i]).collect(), rat(1))
        };
        let a = build(&word_a);
        let b = build(&word_b);
        let of_product = a.mul(&b).substitute(&env).unwrap();
        let product_of = mul_psi(&a.substitute(&env).unwrap(), &b.substitute(&env).unwrap()).unwrap();
        prop_assert_eq!(of_product, product_of);
    }

    #[test]
    fn omega_is_an_involution(e in element_strategy(Basis::M)) {
        prop_assert_eq!(omega(&omega(&e)), to_psi(&e));
    }

    #[test]
    fn omega_is_an_anti_automorphism(
        a in element_strategy(Basis::Psi),
        b in element_strategy(Basis::Psi),
    ) {
        prop_assert_eq!(omega(&multiply(&a, &b)), multiply(&omega(&b), &omega(&a)));
    }

    #[test]
    fn omega_is_an_isometry(
        a in element_strategy(Basis::M),
        b in element_strategy(Basis::S),
    ) {
        prop_assert_eq!(pair(&omega(&a), &omega(&b)), pair(&a, &b));
    }

    #[test]
    fn indicator_matrices_are_unitriangular(degree in 1u32..=5) {
        for (from, to) in [
            (Basis::F, Basis::M),
            (Basis::M, Basis::F),
            (Basis::L, Basis::M),
            (Basis::M, Basis::L),
            (Basis::R, Basis::S),
            (Basis::S, Basis::R),
        ] {
            let m = transition_matrix(from, to, degree).unwrap();
            prop_assert!(unitriangular_pm_one(&m), "{}→{} at degree {}", from.name(), to.name(), degree);
        }
    }

    #[test]
    fn conversion_round_trips(
        index in composition_strategy(),
        from_pick in 0usize..7,
        to_pick in 0usize..7,
    ) {
        let from = ALL_BASES[from_pick];
        let to = ALL_BASES[to_pick];
        let original = Element::term(from, index, rat(1));
        prop_assert_eq!(convert(&convert(&original, to), from), original);
    }

    #[test]
    fn closed_products_match_the_generic_one(
        i in small_composition_strategy(),
        j in small_composition_strategy(),
    ) {
        for (basis, closed) in [
            (Basis::M, product_mm(&i, &j).unwrap()),
            (Basis::F, product_ff(&i, &j).unwrap()),
            (Basis::L, product_ll(&i, &j).unwrap()),
        ] {
            let a = Element::term(basis, i.clone(), rat(1));
            let b = Element::term(basis, j.clone(), rat(1));
            prop_assert_eq!(convert(&multiply(&a, &b), basis), closed);
        }
    }
}
