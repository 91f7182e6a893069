//! Reduced bases and saturations frozen from an independent computer-algebra
//! implementation (`scripts/oracle_sympy.py` regenerates the tables).

use spc_core::expr::parse_polynomial;
use spc_core::{ideal_power, saturation, FieldSpec, Ideal, PolyRing, Polynomial};

const GB_CI: &[&str] = &[
    "(1)*z^5",
    "(1)*x*z^3",
    "(1)*y*z^3",
    "(1)*x*y*z + (1/2)*z^3",
    "(1)*x^2 + (-1)*y*z",
    "(-1)*x*z + (1)*y^2",
];
const GB_MIXED: &[&str] = &[
    "(1)*z^5",
    "(1)*x*z^3 + (-147/296)*z^4",
    "(1)*y*z^3 + (-67/148)*z^4",
    "(1)*y^3 + (1/9)*y*z^2 + (-1/9)*z^3",
    "(-3/7)*x*z^2 + (1)*y^2*z",
    "(1)*x^2 + (2)*y*z + (-1)*z^2",
    "(1)*x*y + (1)*x*z + (-3)*y^2",
];
const SAT_CI_PLUS: &[&str] = &["(1)*x^2 + (-1)*y*z", "(1)*x*y + (-1)*z^2", "(-1)*x*z + (1)*y^2"];
const SAT_CEHH_SQUARE: &[&str] =
    &["(1)*x^2*y^4", "(1)*x^4*z^2", "(1)*y^2*z^4", "(1)*x^2*y^2*z", "(1)*x^2*y*z^2", "(1)*x*y^2*z^2"];
const SAT_CI_SQUARE_GF7: &[&str] = &["(1)*x^2", "(1)*x*y", "(1)*y^2"];
const SYM2_FERMAT3_GF101: &[&str] = &[
    "(1)*y^8*z^2 + (-2)*y^5*z^5 + (1)*y^2*z^8",
    "(1)*x*y^7*z + (-2)*x*y^4*z^4 + (1)*x*y*z^7",
    "(1)*x^6*y^2 + (-2)*x^3*y^2*z^3 + (1)*y^2*z^6",
    "(1)*x^5*y^3 + (-1)*x^5*z^3 + (-1)*x^2*y^3*z^3 + (1)*x^2*z^6",
    "(1)*x^4*y^4 + (-1)*x^4*y*z^3 + (-1)*x*y^4*z^3 + (1)*x*y*z^6",
    "(1)*x^3*y^5 + (-1)*x^3*y^2*z^3 + (-1)*y^5*z^3 + (1)*y^2*z^6",
    "(1)*x^2*y^6 + (-2)*x^2*y^3*z^3 + (1)*x^2*z^6",
    "(1)*x^6*y*z + (-1)*x^3*y^4*z + (-1)*x^3*y*z^4 + (1)*y^4*z^4",
    "(1)*x^4*y^3*z + (-1)*x^4*z^4 + (-1)*x*y^6*z + (1)*x*y^3*z^4",
    "(1)*x^6*z^2 + (-2)*x^3*z^5 + (-1)*y^6*z^2 + (2)*y^3*z^5",
    "(1)*x^3*y^3*z^2 + (-1)*x^3*z^5 + (-1)*y^6*z^2 + (1)*y^3*z^5",
];

fn ring(field: &str) -> PolyRing {
    PolyRing::grevlex(field.parse::<FieldSpec>().unwrap(), ["x", "y", "z"]).unwrap()
}

fn polys(r: &PolyRing, texts: &[&str]) -> Vec<Polynomial> {
    texts.iter().map(|t| parse_polynomial(t, r).unwrap()).collect()
}

fn ideal(r: &PolyRing, texts: &[&str]) -> Ideal {
    Ideal::new(r, polys(r, texts)).unwrap()
}

/// The reduced basis of `ideal`, as a sorted list of monic polynomials.
fn normalized(ideal: &Ideal) -> Vec<String> {
    let mut v: Vec<String> =
        ideal.groebner_basis().elements().iter().map(|g| g.monic().to_string()).collect();
    v.sort();
    v
}

fn expected(r: &PolyRing, table: &[&str]) -> Vec<String> {
    let mut v: Vec<String> = polys(r, table).iter().map(|g| g.monic().to_string()).collect();
    v.sort();
    v
}

#[test]
fn reduced_basis_of_complete_intersection_plus_cubic() {
    let r = ring("QQ");
    let i = ideal(&r, &["x^2 - y*z", "y^2 - x*z", "x^3 + y^3 + z^3"]);
    assert_eq!(normalized(&i), expected(&r, GB_CI));
}

#[test]
fn reduced_basis_with_rational_coefficients() {
    let r = ring("QQ");
    let i = ideal(&r, &["x^2 + 2*y*z - z^2", "x*y - 3*y^2 + x*z", "x^3 - y^2*z"]);
    assert_eq!(normalized(&i), expected(&r, GB_MIXED));
}

#[test]
fn saturation_removes_embedded_component() {
    let r = ring("QQ");
    let i = ideal(&r, &["x^2 - y*z", "y^2 - x*z", "(x*y - z^2)*(x + y + z)"]);
    let sat = saturation(&i).unwrap();
    assert_eq!(normalized(&sat), expected(&r, SAT_CI_PLUS));
    assert!(!sat.is_subset_of(&i).unwrap());
}

#[test]
fn saturated_square_of_three_double_points() {
    let r = ring("QQ");
    let i = ideal(&r, &["x*y^2", "y*z^2", "z*x^2", "x*y*z"]);
    let sat = saturation(&ideal_power(&i, 2).unwrap()).unwrap();
    assert_eq!(normalized(&sat), expected(&r, SAT_CEHH_SQUARE));
}

#[test]
fn saturation_in_small_characteristic() {
    let r = ring("GF(7)");
    let sq = ideal_power(&ideal(&r, &["x^2 - y*z", "y^2 - x*z"]), 2).unwrap();
    let i = Ideal::new(&r, sq.generators().iter().cloned().chain(polys(&r, &["x^5"]))).unwrap();
    assert_eq!(normalized(&saturation(&i).unwrap()), expected(&r, SAT_CI_SQUARE_GF7));
}

#[test]
fn symbolic_square_of_fermat_cubic() {
    let r = ring("GF(101)");
    let i = ideal(&r, &["x*(y^3 - z^3)", "y*(x^3 - z^3)", "z*(x^3 - y^3)"]);
    let sym = spc_core::symbolic_power(&i, 2).unwrap();
    assert_eq!(normalized(&sym), expected(&r, SYM2_FERMAT3_GF101));
}
