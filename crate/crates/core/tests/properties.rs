use proptest::prelude::*;
use spc_core::expr::parse_polynomial;
use spc_core::idealops::{colon, saturate_by_colon, saturation_by_aux_variable};
use spc_core::{
    ideal_power, ideal_product, ideal_sum, intersect, irrelevant_ideal, member_by_linalg, saturation,
    FieldSpec, Ideal, Monomial, PolyRing, Polynomial,
};

fn ring() -> PolyRing {
    PolyRing::grevlex(FieldSpec::prime(32003).unwrap(), ["x", "y", "z"]).unwrap()
}

/// A homogeneous form of the given degree from `(a, b, coefficient)` seeds:
/// the monomial is `x^a y^b z^(d-a-b)` after folding `a, b` into range.
fn form(r: &PolyRing, d: u32, seeds: &[(u32, u32, i64)]) -> Polynomial {
    let terms = seeds
        .iter()
        .map(|&(a, b, c)| {
            let a = a % (d + 1);
            let b = b % (d - a + 1);
            let m = Monomial::new(&[a, b, d - a - b]).unwrap();
            (m, r.field().from_i64(c))
        })
        .collect();
    Polynomial::from_terms(r, terms).unwrap()
}

/// Degree plus term seeds, as consumed by [`form`].
type FormSpec = (u32, Vec<(u32, u32, i64)>);

fn form_strategy(max_deg: u32) -> impl Strategy<Value = FormSpec> {
    (1..=max_deg, prop::collection::vec((0u32..8, 0u32..8, -9i64..=9), 1..4))
}

fn ideal_strategy(max_gens: usize, max_deg: u32) -> impl Strategy<Value = Vec<FormSpec>> {
    prop::collection::vec(form_strategy(max_deg), 1..=max_gens)
}

fn build(r: &PolyRing, spec: &[FormSpec]) -> Option<Ideal> {
    Ideal::new(r, spec.iter().map(|(d, seeds)| form(r, *d, seeds))).ok()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn saturation_is_idempotent_and_contains(spec in ideal_strategy(3, 3)) {
        let r = ring();
        let Some(i) = build(&r, &spec) else { return Ok(()) };
        let sat = saturation(&i).unwrap();
        prop_assert!(i.is_subset_of(&sat).unwrap());
        prop_assert!(saturation(&sat).unwrap().equals(&sat).unwrap());
    }

    #[test]
    fn saturation_methods_agree(spec in ideal_strategy(3, 2)) {
        let r = ring();
        let Some(i) = build(&r, &spec) else { return Ok(()) };
        let m = irrelevant_ideal(&r);
        let sat = saturation(&i).unwrap();
        prop_assert!(sat.equals(&saturate_by_colon(&i, &m).unwrap()).unwrap());
        prop_assert!(sat.equals(&saturation_by_aux_variable(&i, &m).unwrap()).unwrap());
    }

    #[test]
    fn powers_multiply(spec in ideal_strategy(2, 2), a in 1u32..3, b in 1u32..3) {
        let r = ring();
        let Some(i) = build(&r, &spec) else { return Ok(()) };
        let lhs = ideal_product(&ideal_power(&i, a).unwrap(), &ideal_power(&i, b).unwrap()).unwrap();
        prop_assert!(lhs.equals(&ideal_power(&i, a + b).unwrap()).unwrap());
    }

    #[test]
    fn intersection_and_colon_are_consistent(s1 in ideal_strategy(2, 3), s2 in ideal_strategy(2, 2)) {
        let r = ring();
        let (Some(i), Some(j)) = (build(&r, &s1), build(&r, &s2)) else { return Ok(()) };
        let cap = intersect(&i, &j).unwrap();
        prop_assert!(cap.is_subset_of(&i).unwrap() && cap.is_subset_of(&j).unwrap());
        prop_assert!(ideal_product(&i, &j).unwrap().is_subset_of(&cap).unwrap());
        let q = colon(&i, &j).unwrap();
        prop_assert!(i.is_subset_of(&q).unwrap());
        prop_assert!(ideal_product(&q, &j).unwrap().is_subset_of(&i).unwrap());
        // I ∩ J = J ∩ I and (I + J) ⊇ both
        prop_assert!(cap.equals(&intersect(&j, &i).unwrap()).unwrap());
        let sum = ideal_sum(&i, &j).unwrap();
        prop_assert!(i.is_subset_of(&sum).unwrap() && j.is_subset_of(&sum).unwrap());
    }

    #[test]
    fn membership_oracles_agree(
        spec in ideal_strategy(3, 3),
        multipliers in prop::collection::vec(prop::collection::vec((0u32..8, 0u32..8, -9i64..=9), 1..4), 3),
        extra in 0u32..3,
        noise in prop::collection::vec((0u32..8, 0u32..8, -9i64..=9), 0..3),
    ) {
        let r = ring();
        let Some(i) = build(&r, &spec) else { return Ok(()) };
        let top = i.max_generator_degree() + extra;
        let mut f = Polynomial::zero(&r);
        for (g, seeds) in i.generators().iter().zip(&multipliers) {
            let d = top - g.total_degree().unwrap();
            let h = if d == 0 { Polynomial::one(&r) } else { form(&r, d, seeds) };
            f = f.add(&h.mul(g).unwrap()).unwrap();
        }
        if !f.is_zero() {
            prop_assert!(i.contains(&f).unwrap());
            prop_assert!(member_by_linalg(&f, &i).unwrap());
        }
        if !noise.is_empty() {
            let g = f.add(&form(&r, top, &noise)).unwrap();
            if !g.is_zero() {
                prop_assert_eq!(i.contains(&g).unwrap(), member_by_linalg(&g, &i).unwrap());
            }
        }
    }

    #[test]
    fn display_parses_back(spec in form_strategy(6)) {
        let r = ring();
        let f = form(&r, spec.0, &spec.1);
        prop_assert_eq!(parse_polynomial(&f.to_string(), &r).unwrap(), f);
    }

    #[test]
    fn ring_laws(a in form_strategy(3), b in form_strategy(3), c in form_strategy(3)) {
        let r = ring();
        let (f, g, h) = (form(&r, a.0, &a.1), form(&r, b.0, &b.1), form(&r, c.0, &c.1));
        prop_assert_eq!(f.mul(&g).unwrap(), g.mul(&f).unwrap());
        prop_assert_eq!(
            f.mul(&g.add(&h).unwrap()).unwrap(),
            f.mul(&g).unwrap().add(&f.mul(&h).unwrap()).unwrap()
        );
        prop_assert!(f.sub(&f).unwrap().is_zero());
    }
}
