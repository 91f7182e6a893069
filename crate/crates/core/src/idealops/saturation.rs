//! Intersection, colon and saturation.
//!
//! Intersections and auxiliary-variable saturation eliminate a fresh variable
//! `t` placed first in a block order. Saturation by the irrelevant ideal uses
//! Bayer's observation that for a homogeneous ideal and the last variable of a
//! grevlex order, `I : y_n^∞` is obtained by stripping `y_n` powers from a
//! Gröbner basis; a linear change of coordinates moves any linear form `l` into
//! that position.

use crate::coeff::FieldElement;
use crate::error::{Error, Result};
use crate::groebner::{buchberger, GroebnerBasis};
use crate::polyring::{Monomial, MonomialOrder, PolyRing, Polynomial};

use super::{ideal_sum, irrelevant_ideal, raw_dimension, Ideal};

/// `[t, y_0, …, y_n]` with `t` alone in the first block.
fn elimination_ring(ring: &PolyRing) -> Result<PolyRing> {
    let mut t = String::from("_t");
    while ring.var_index(&t).is_some() {
        t.push('_');
    }
    let vars = std::iter::once(t).chain(ring.variables().iter().cloned());
    PolyRing::new(*ring.field(), vars, MonomialOrder::Block(1))
}

fn lift(f: &Polynomial, ering: &PolyRing) -> Polynomial {
    f.remap(ering, |i| i.checked_sub(1))
}

/// Keeps the `t`-free elements of an elimination basis, moved back to `ring`.
fn eliminate_t(basis: &GroebnerBasis, ring: &PolyRing) -> Result<Ideal> {
    let kept: Vec<Polynomial> = basis
        .elements()
        .iter()
        .filter(|g| g.leading_monomial().is_some_and(|m| m.exponent(0) == 0))
        .map(|g| g.remap(ring, |i| Some(i + 1)))
        .collect();
    if ring.order() == MonomialOrder::Grevlex {
        // grevlex on the second block restricts to the ring's own order
        Ideal::from_basis(GroebnerBasis::from_reduced(ring, kept))
    } else {
        Ideal::new(ring, kept)
    }
}

/// `I ∩ J` as the elimination ideal of `t·I + (1 − t)·J`.
pub fn intersect(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    a.ring.check(&b.ring)?;
    let ering = elimination_ring(&a.ring)?;
    let t = ering.variable(0);
    let one_minus_t = Polynomial::one(&ering).sub(&t)?;
    let mut gens = Vec::with_capacity(a.generators.len() + b.generators.len());
    for g in &a.generators {
        gens.push(t.mul(&lift(g, &ering))?);
    }
    for g in &b.generators {
        gens.push(one_minus_t.mul(&lift(g, &ering))?);
    }
    eliminate_t(&buchberger(&ering, &gens)?, &a.ring)
}

/// `I : (f) = (I ∩ (f)) / f`.
pub fn colon_principal(ideal: &Ideal, f: &Polynomial) -> Result<Ideal> {
    ideal.ring.check(f.ring())?;
    if f.is_zero() {
        return Err(Error::InvalidParameter("colon by the zero polynomial".into()));
    }
    if f.is_constant() {
        return Ok(ideal.clone());
    }
    let meet = intersect(ideal, &Ideal::principal(f.clone())?)?;
    let gens = meet.generators.iter().map(|g| g.exact_div(f).expect("elements of (f) are multiples of f"));
    Ideal::new(&ideal.ring, gens)
}

/// `I : J = ∩_{f ∈ gens(J)} I : (f)`.
pub fn colon(ideal: &Ideal, by: &Ideal) -> Result<Ideal> {
    ideal.ring.check(&by.ring)?;
    let mut acc: Option<Ideal> = None;
    for f in &by.generators {
        let part = colon_principal(ideal, f)?;
        acc = Some(match acc {
            None => part,
            Some(prev) => intersect(&prev, &part)?,
        });
    }
    Ok(acc.expect("ideals have at least one generator"))
}

/// `I : J^∞`. Saturation by the irrelevant ideal of a homogeneous ideal is
/// dispatched to [`saturation`]; everything else iterates the colon.
pub fn saturate(ideal: &Ideal, by: &Ideal) -> Result<Ideal> {
    ideal.ring.check(&by.ring)?;
    if ideal.homogeneous && by.equals(&irrelevant_ideal(&ideal.ring))? {
        return saturation(ideal);
    }
    saturate_by_colon(ideal, by)
}

/// `I : J^∞` by iterating `K ↦ K : J` until the reduced bases agree.
pub fn saturate_by_colon(ideal: &Ideal, by: &Ideal) -> Result<Ideal> {
    let mut current = ideal.clone();
    loop {
        let next = colon(&current, by)?;
        if next.equals(&current)? {
            return Ok(current);
        }
        current = next;
    }
}

/// `I : J^∞ = ∩_{f ∈ gens(J)} (I + (1 − t·f)) ∩ k[y]`. Independent of the
/// colon machinery; used to cross-check it.
pub fn saturation_by_aux_variable(ideal: &Ideal, by: &Ideal) -> Result<Ideal> {
    ideal.ring.check(&by.ring)?;
    let ering = elimination_ring(&ideal.ring)?;
    let t = ering.variable(0);
    let mut acc: Option<Ideal> = None;
    for f in &by.generators {
        let mut gens: Vec<Polynomial> = ideal.generators.iter().map(|g| lift(g, &ering)).collect();
        gens.push(Polynomial::one(&ering).sub(&t.mul(&lift(f, &ering))?)?);
        let part = eliminate_t(&buchberger(&ering, &gens)?, &ideal.ring)?;
        acc = Some(match acc {
            None => part,
            Some(prev) => super::intersect(&prev, &part)?,
        });
    }
    Ok(acc.expect("ideals have at least one generator"))
}

/// Coefficients of a nonzero linear form, or `None` if `l` is not one.
fn linear_coefficients(l: &Polynomial) -> Option<Vec<FieldElement>> {
    let n = l.ring().nvars();
    let mut c = vec![l.ring().field().zero(); n];
    for (m, coef) in l.terms() {
        if m.degree() != 1 {
            return None;
        }
        let i = (0..n).find(|&i| m.exponent(i) == 1)?;
        c[i] = coef.clone();
    }
    (!l.is_zero()).then_some(c)
}

/// `I : y_n^∞` for homogeneous `I`: strip the last variable from a grevlex basis.
fn colon_last_variable_inf(ideal: &Ideal) -> Result<Ideal> {
    let ring = &ideal.ring;
    let grevlex = ring.with_order(MonomialOrder::Grevlex)?;
    let basis = if grevlex == *ring {
        ideal.groebner_basis().clone()
    } else {
        let gens: Vec<Polynomial> =
            ideal.generators.iter().map(|g| g.to_ring(&grevlex)).collect::<Result<_>>()?;
        buchberger(&grevlex, &gens)?
    };
    let last = ring.nvars() - 1;
    let stripped = basis.elements().iter().map(|g| {
        let k = g.terms().iter().map(|(m, _)| m.exponent(last)).min().unwrap_or(0);
        let divisor = Monomial::one(ring.nvars()).with_exponent(last, k);
        g.div_monomial(&divisor).to_ring(ring).expect("same variables")
    });
    Ideal::new(ring, stripped.collect::<Vec<_>>())
}

/// `I : l^∞` for homogeneous `I` and a linear form `l`.
fn colon_linear_form_inf(ideal: &Ideal, l: &Polynomial) -> Result<Ideal> {
    let ring = &ideal.ring;
    let field = ring.field();
    let c = linear_coefficients(l)
        .ok_or_else(|| Error::InvalidParameter("expected a nonzero linear form".into()))?;
    let n = ring.nvars() - 1;
    let k = (0..=n).rev().find(|&i| !field.is_zero(&c[i])).expect("nonzero form");
    // ψ sends l to y_n; ψ⁻¹ sends y_n back to l
    let mut psi: Vec<Polynomial> = ring.gens();
    if k != n {
        psi[n] = ring.variable(k);
    }
    let mut image_k = ring.variable(n);
    for i in (0..=n).filter(|&i| i != k) {
        image_k = image_k.sub(&psi[i].scale(&c[i]))?;
    }
    psi[k] = image_k.scale(&field.inverse(&c[k])?);
    let mut psi_inv: Vec<Polynomial> = ring.gens();
    psi_inv[k] = ring.variable(n);
    psi_inv[n] = l.clone();

    let moved =
        Ideal::new(ring, ideal.generators.iter().map(|g| g.substitute(&psi)).collect::<Result<Vec<_>>>()?)?;
    let sat = colon_last_variable_inf(&moved)?;
    Ideal::new(ring, sat.generators.iter().map(|g| g.substitute(&psi_inv)).collect::<Result<Vec<_>>>()?)
}

fn meets_only_origin(ideal: &Ideal, forms: &[&Polynomial]) -> Result<bool> {
    let extra = Ideal::new(&ideal.ring, forms.iter().map(|f| (*f).clone()))?;
    Ok(raw_dimension(&ideal_sum(ideal, &extra)?).is_none_or(|d| d == 0))
}

/// The saturation `Sat(I) = I : 𝔪^∞`.
///
/// For homogeneous `I`, if a variable `y` misses every point of `V(I)`
/// (i.e. `I + (y)` is `𝔪`-primary) then `Sat(I) = I : y^∞`; similarly for a
/// pair of variables. Otherwise falls back to `∩_i I : y_i^∞`.
///
/// Generic linear forms would always succeed at the first step, but the
/// coordinate change they need densifies the basis and costs far more than
/// the extra intersections.
pub fn saturation(ideal: &Ideal) -> Result<Ideal> {
    let ring = &ideal.ring;
    if !ideal.homogeneous {
        return saturate_by_colon(ideal, &irrelevant_ideal(ring));
    }
    if ideal.is_unit() {
        return Ok(ideal.clone());
    }
    let vars = ring.gens();
    for v in vars.iter().rev() {
        if meets_only_origin(ideal, &[v])? {
            return colon_linear_form_inf(ideal, v);
        }
    }
    for j in (0..vars.len()).rev() {
        for i in (0..j).rev() {
            if meets_only_origin(ideal, &[&vars[i], &vars[j]])? {
                return intersect(
                    &colon_linear_form_inf(ideal, &vars[i])?,
                    &colon_linear_form_inf(ideal, &vars[j])?,
                );
            }
        }
    }
    let mut acc = colon_linear_form_inf(ideal, &vars[0])?;
    for v in &vars[1..] {
        acc = intersect(&acc, &colon_linear_form_inf(ideal, v)?)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::FieldSpec;
    use crate::expr::{parse_polynomial, parse_polynomial_list};
    use crate::idealops::{ideal_power, ideal_product};

    fn ring_over(field: FieldSpec) -> PolyRing {
        PolyRing::grevlex(field, ["x", "y", "z"]).unwrap()
    }

    fn ring() -> PolyRing {
        ring_over(FieldSpec::prime(32003).unwrap())
    }

    fn ideal(r: &PolyRing, s: &str) -> Ideal {
        Ideal::new(r, parse_polynomial_list(s, r).unwrap()).unwrap()
    }

    fn same(a: &Ideal, b: &Ideal) -> bool {
        a.equals(b).unwrap()
    }

    #[test]
    fn intersections() {
        let r = ring();
        let i = ideal(&r, "x^2 - y*z; x*y");
        assert!(same(&intersect(&i, &i).unwrap(), &i));
        assert!(same(&intersect(&ideal(&r, "x"), &ideal(&r, "y")).unwrap(), &ideal(&r, "x*y")));
        let three =
            intersect(&intersect(&ideal(&r, "x^2; y"), &ideal(&r, "y^2; z")).unwrap(), &ideal(&r, "z^2; x"))
                .unwrap();
        assert!(same(&three, &ideal(&r, "x*y^2; y*z^2; z*x^2; x*y*z")));
        assert!(three.has_cached_basis());
    }

    #[test]
    fn colons() {
        let r = ring();
        assert!(same(&colon(&ideal(&r, "x*y"), &ideal(&r, "x")).unwrap(), &ideal(&r, "y")));
        let i = ideal(&r, "x^2*y; x*z");
        assert!(same(&colon(&i, &ideal(&r, "x")).unwrap(), &ideal(&r, "x*y; z")));
        assert!(same(&colon(&i, &ideal(&r, "7")).unwrap(), &i));
    }

    #[test]
    fn saturations() {
        let r = ring();
        let m = irrelevant_ideal(&r);
        let x = ideal(&r, "x");
        assert!(same(&saturate(&x, &m).unwrap(), &x));
        let m3 = ideal_power(&m, 3).unwrap();
        let sat = saturate(&m3, &m).unwrap();
        for v in r.gens() {
            assert!(sat.contains(&v).unwrap());
        }
        let cehh = ideal(&r, "x*y^2; y*z^2; z*x^2; x*y*z");
        let cube = ideal_power(&cehh, 3).unwrap();
        let w = parse_polynomial("x^2*y^2*z^2", &r).unwrap();
        assert!(!cube.contains(&w).unwrap());
        assert!(saturate(&cube, &m).unwrap().contains(&w).unwrap());
    }

    #[test]
    fn saturation_agrees_with_other_methods() {
        let r = ring();
        let m = irrelevant_ideal(&r);
        let cases = [
            "x*y^2; y*z^2; z*x^2; x*y*z",
            "x^3; x^2*y; x*y*z",
            "x*(y^3 - z^3); y*(x^3 - z^3); z*(x^3 - y^3)",
            "x^2*y; x*y^2; x^2*z - y^2*z",
        ];
        for s in cases {
            let i = ideal(&r, s);
            let p = ideal_product(&i, &m).unwrap();
            let fast = saturation(&p).unwrap();
            assert!(same(&fast, &saturate_by_colon(&p, &m).unwrap()), "{s}");
            assert!(same(&fast, &saturation_by_aux_variable(&p, &m).unwrap()), "{s}");
        }
    }

    #[test]
    fn pair_fallback_in_small_characteristic() {
        // over GF(3) every linear form vanishes on some GF(3)-point
        let r = ring_over(FieldSpec::prime(3).unwrap());
        let m = irrelevant_ideal(&r);
        let i = ideal(&r, "x*y*(x^2 - y^2); x*z*(x^2 - z^2); y*z*(y^2 - z^2); x*(x^2 - y^2)*(x^2 - z^2)");
        let p = ideal_product(&i, &ideal_power(&m, 2).unwrap()).unwrap();
        let fast = saturation(&p).unwrap();
        assert!(same(&fast, &saturation_by_aux_variable(&p, &m).unwrap()));
        assert!(same(&fast, &i));
    }

    #[test]
    fn linear_form_colon_matches_aux_variable() {
        let r = ring();
        let i = ideal(&r, "x^2*y - z^3; x*y*z + y^3");
        let l = parse_polynomial("2*x - y + 3*z", &r).unwrap();
        let by = Ideal::principal(l.clone()).unwrap();
        assert!(same(&colon_linear_form_inf(&i, &l).unwrap(), &saturation_by_aux_variable(&i, &by).unwrap()));
    }
}
