//! Multivariate division and Buchberger's algorithm with Gebauer–Möller pair
//! management, producing reduced Gröbner bases.

use std::cmp::Ordering;
use std::fmt;

use crate::coeff::FieldSpec;
use crate::error::{Error, Result};
use crate::polyring::merge_terms;
use crate::polyring::{Monomial, PolyRing, Polynomial, Term};

/// A reduced Gröbner basis: monic, interreduced, sorted by leading monomial
/// (descending). Equal ideals give identical values for a fixed order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: PolyRing,
    elements: Vec<Polynomial>,
}

impl GroebnerBasis {
    /// Wraps elements already known to form a reduced basis in `ring`'s order.
    pub(crate) fn from_reduced(ring: &PolyRing, elements: Vec<Polynomial>) -> Self {
        debug_assert!(is_reduced(&elements));
        GroebnerBasis { ring: ring.clone(), elements }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    /// True for the basis of the zero ideal.
    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// The basis of the unit ideal is `{1}`.
    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().map(|g| *g.leading_monomial().expect("nonzero element")).collect()
    }

    /// Normal form of `f`; zero iff `f` is in the ideal.
    pub fn reduce(&self, f: &Polynomial) -> Result<Polynomial> {
        reduce(f, &self.elements)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.reduce(f)?.is_zero())
    }

    pub fn max_degree(&self) -> u32 {
        self.elements.iter().filter_map(|g| g.total_degree()).max().unwrap_or(0)
    }
}

impl fmt::Display for GroebnerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, g) in self.elements.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str("}")
    }
}

struct Reducer {
    terms: Vec<Term>,
    lm: Monomial,
    mask: u32,
    sugar: u32,
}

impl Reducer {
    fn new(terms: Vec<Term>, sugar: u32) -> Self {
        let lm = terms[0].0;
        Reducer { mask: lm.support_mask(), lm, terms, sugar }
    }

    #[inline]
    fn divides(&self, m: &Monomial, mask: u32) -> bool {
        self.mask & !mask == 0 && self.lm.divides(m)
    }
}

fn scale_terms(field: &FieldSpec, terms: &mut [Term], a: &crate::coeff::FieldElement) {
    if field.is_one(a) {
        return;
    }
    for t in terms.iter_mut() {
        t.1 = field.mul(&t.1, a);
    }
}

/// Normalizes so the leading coefficient is 1 over `GF(p)`; over `QQ` the
/// terms become a primitive integer vector with positive leading coefficient.
fn normalize(field: &FieldSpec, terms: &mut [Term]) {
    if terms.is_empty() {
        return;
    }
    let s = field.normalizing_scalar(terms.iter().map(|t| &t.1));
    scale_terms(field, terms, &s);
}

fn make_monic(field: &FieldSpec, terms: &mut [Term]) {
    if let Some(lc) = terms.first().map(|t| t.1.clone()) {
        let inv = field.inverse(&lc).expect("nonzero leading coefficient");
        scale_terms(field, terms, &inv);
    }
}

/// Full reduction of `f` by `reducers` (tried in slice order, highest
/// reducible term first). Returns the normal form and its sugar.
fn normal_form(
    ring: &PolyRing,
    mut cur: Vec<Term>,
    mut sugar: u32,
    reducers: &[&Reducer],
    top_only: bool,
) -> (Vec<Term>, u32) {
    let field = ring.field();
    let mut scratch: Vec<Term> = Vec::new();
    let mut i = 0;
    let mut steps = 0usize;
    while i < cur.len() {
        let (m, c) = (&cur[i].0, &cur[i].1);
        let mask = m.support_mask();
        let Some(g) = reducers.iter().find(|g| g.divides(m, mask)) else {
            if top_only {
                break;
            }
            i += 1;
            continue;
        };
        let q = m.div(&g.lm).expect("divisible");
        let (a, b) = field.cancel_multipliers(c, &g.terms[0].1);
        sugar = sugar.max(q.degree() + g.sugar);
        if !field.is_one(&a) {
            scale_terms(field, &mut cur[..i], &a);
        }
        // tail := a * cur[i+1..] - b * q * g[1..]
        let mut tail_f: Vec<Term> = cur[i + 1..].to_vec();
        scale_terms(field, &mut tail_f, &a);
        let sub: Vec<Term> = g.terms[1..].iter().map(|(gm, gc)| (gm.mul(&q), field.mul(gc, &b))).collect();
        scratch.clear();
        scratch.extend(merge_terms(ring, &tail_f, &sub, true));
        cur.truncate(i);
        cur.append(&mut scratch);
        steps += 1;
        if field.is_rationals() && steps.is_multiple_of(16) {
            normalize(field, &mut cur);
        }
    }
    (cur, sugar)
}

/// Normal form of `f` modulo the list `g` (full reduction, deterministic).
pub fn reduce(f: &Polynomial, g: &[Polynomial]) -> Result<Polynomial> {
    let ring = f.ring();
    for p in g {
        ring.check(p.ring())?;
    }
    let field = ring.field();
    let reducers: Vec<Reducer> = g
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| {
            let mut t = p.terms().to_vec();
            make_monic(field, &mut t);
            Reducer::new(t, 0)
        })
        .collect();
    let refs: Vec<&Reducer> = reducers.iter().collect();
    Ok(Polynomial::from_sorted(ring, normal_form_exact(ring, f.terms().to_vec(), &refs)))
}

/// Reduction by monic reducers; no rescaling of `cur`, so `f - nf` lies in the ideal.
fn normal_form_exact(ring: &PolyRing, mut cur: Vec<Term>, reducers: &[&Reducer]) -> Vec<Term> {
    let field = ring.field();
    let mut i = 0;
    while i < cur.len() {
        let m = cur[i].0;
        let mask = m.support_mask();
        let Some(g) = reducers.iter().find(|g| g.divides(&m, mask)) else {
            i += 1;
            continue;
        };
        let q = m.div(&g.lm).expect("divisible");
        let b = cur[i].1.clone();
        let sub: Vec<Term> = g.terms[1..].iter().map(|(gm, gc)| (gm.mul(&q), field.mul(gc, &b))).collect();
        let tail = merge_terms(ring, &cur[i + 1..], &sub, true);
        cur.truncate(i);
        cur.extend(tail);
    }
    cur
}

/// `(lcm/lt(f)) * f - (lcm/lt(g)) * g`.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    f.ring().check(g.ring())?;
    let (Some(lf), Some(lg)) = (f.leading_monomial(), g.leading_monomial()) else {
        return Err(Error::ZeroPolynomial);
    };
    let field = f.ring().field();
    let l = lf.lcm(lg);
    let cf = field.inverse(f.leading_coefficient().unwrap())?;
    let cg = field.inverse(g.leading_coefficient().unwrap())?;
    let a = f.mul_term(&l.div(lf).unwrap(), &cf);
    let b = g.mul_term(&l.div(lg).unwrap(), &cg);
    Ok(a.sub_unchecked(&b))
}

#[derive(Clone, Copy, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct Engine {
    ring: PolyRing,
    basis: Vec<Reducer>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl Engine {
    fn active_refs(&self) -> Vec<&Reducer> {
        self.basis.iter().zip(&self.active).filter(|(_, a)| **a).map(|(r, _)| r).collect()
    }

    fn pair_sugar(&self, i: usize, j: usize, lcm: &Monomial) -> u32 {
        let (a, b) = (&self.basis[i], &self.basis[j]);
        (a.sugar + lcm.degree() - a.lm.degree()).max(b.sugar + lcm.degree() - b.lm.degree())
    }

    /// Inserts a normalized nonzero polynomial and updates the pair set.
    fn insert(&mut self, terms: Vec<Term>, sugar: u32) {
        let h = self.basis.len();
        self.basis.push(Reducer::new(terms, sugar));
        self.active.push(true);
        let lm_h = self.basis[h].lm;

        // candidate new pairs (g, h)
        let mut cands: Vec<(usize, Monomial, bool)> = (0..h)
            .filter(|&g| self.active[g])
            .map(|g| {
                let lm_g = self.basis[g].lm;
                (g, lm_g.lcm(&lm_h), lm_g.is_coprime(&lm_h))
            })
            .collect();

        // chain criterion among the new pairs
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        while let Some(p) = cands.pop() {
            let (_, l, coprime) = p;
            let dominated = cands.iter().chain(kept.iter()).any(|(_, l2, _)| l2.divides(&l));
            if coprime || !dominated {
                kept.push(p);
            }
        }

        // chain criterion on existing pairs
        let basis = &self.basis;
        self.pairs.retain(|p| {
            let l = p.lcm;
            !(lm_h.divides(&l) && basis[p.i].lm.lcm(&lm_h) != l && basis[p.j].lm.lcm(&lm_h) != l)
        });

        // product criterion
        for (g, l, coprime) in kept {
            if !coprime {
                let sugar = self.pair_sugar(g, h, &l);
                self.pairs.push(Pair { i: g, j: h, lcm: l, sugar });
            }
        }

        for g in 0..h {
            if self.active[g] && lm_h.divides(&self.basis[g].lm) {
                self.active[g] = false;
            }
        }
    }

    fn select_pair(&mut self) -> Option<Pair> {
        let order = self.ring.order();
        let best = (0..self.pairs.len()).min_by(|&a, &b| {
            let (p, q) = (&self.pairs[a], &self.pairs[b]);
            p.sugar
                .cmp(&q.sugar)
                .then_with(|| order.cmp(&p.lcm, &q.lcm))
                .then_with(|| (p.i, p.j).cmp(&(q.i, q.j)))
        })?;
        Some(self.pairs.swap_remove(best))
    }

    fn spoly(&self, p: &Pair) -> (Vec<Term>, u32) {
        let field = self.ring.field();
        let (f, g) = (&self.basis[p.i], &self.basis[p.j]);
        let qf = p.lcm.div(&f.lm).unwrap();
        let qg = p.lcm.div(&g.lm).unwrap();
        let (a, b) = field.cancel_multipliers(&g.terms[0].1, &f.terms[0].1);
        // a*lc(g) == b*lc(f): b*qf*f - a*qg*g cancels the leading terms
        let left: Vec<Term> = f.terms[1..].iter().map(|(m, c)| (m.mul(&qf), field.mul(c, &b))).collect();
        let right: Vec<Term> = g.terms[1..].iter().map(|(m, c)| (m.mul(&qg), field.mul(c, &a))).collect();
        (merge_terms(&self.ring, &left, &right, true), p.sugar)
    }
}

/// Computes the reduced Gröbner basis of the ideal generated by `gens`.
pub fn buchberger(ring: &PolyRing, gens: &[Polynomial]) -> Result<GroebnerBasis> {
    for g in gens {
        ring.check(g.ring())?;
    }
    let field = *ring.field();
    let order = ring.order();
    let mut inputs: Vec<&Polynomial> = gens.iter().filter(|g| !g.is_zero()).collect();
    // smallest leading monomials first
    inputs.sort_by(|a, b| {
        order
            .cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
            .then_with(|| a.len().cmp(&b.len()))
    });

    let mut engine = Engine { ring: ring.clone(), basis: Vec::new(), active: Vec::new(), pairs: Vec::new() };

    for g in inputs {
        let sugar = g.total_degree().unwrap_or(0);
        let refs = engine.active_refs();
        let (mut nf, sugar) = normal_form(ring, g.terms().to_vec(), sugar, &refs, false);
        if nf.is_empty() {
            continue;
        }
        normalize(&field, &mut nf);
        if nf[0].0.is_one() {
            return Ok(unit_basis(ring));
        }
        engine.insert(nf, sugar);
    }

    while let Some(pair) = engine.select_pair() {
        let (sp, sugar) = engine.spoly(&pair);
        if sp.is_empty() {
            continue;
        }
        let refs = engine.active_refs();
        let (mut nf, sugar) = normal_form(ring, sp, sugar, &refs, false);
        if nf.is_empty() {
            continue;
        }
        normalize(&field, &mut nf);
        if nf[0].0.is_one() {
            return Ok(unit_basis(ring));
        }
        engine.insert(nf, sugar);
    }

    Ok(interreduce(ring, engine))
}

fn unit_basis(ring: &PolyRing) -> GroebnerBasis {
    GroebnerBasis { ring: ring.clone(), elements: vec![Polynomial::one(ring)] }
}

fn interreduce(ring: &PolyRing, engine: Engine) -> GroebnerBasis {
    let field = *ring.field();
    let order = ring.order();
    let mut minimal: Vec<Reducer> = engine
        .basis
        .into_iter()
        .zip(engine.active)
        .filter(|(_, a)| *a)
        .map(|(mut r, _)| {
            make_monic(&field, &mut r.terms);
            r
        })
        .collect();
    minimal.sort_by(|a, b| order.cmp(&b.lm, &a.lm));
    for k in 0..minimal.len() {
        let mut terms = std::mem::take(&mut minimal[k].terms);
        let tail = terms.split_off(1);
        let others: Vec<&Reducer> =
            minimal.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, r)| r).collect();
        terms.extend(normal_form_exact(ring, tail, &others));
        minimal[k].terms = terms;
    }
    let elements = minimal.into_iter().map(|r| Polynomial::from_sorted(ring, r.terms)).collect();
    GroebnerBasis { ring: ring.clone(), elements }
}

/// Checks Buchberger's criterion: every S-polynomial reduces to zero.
pub fn is_groebner_basis(elements: &[Polynomial]) -> Result<bool> {
    for i in 0..elements.len() {
        for j in i + 1..elements.len() {
            let s = s_polynomial(&elements[i], &elements[j])?;
            if !reduce(&s, elements)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether `elements` satisfies the reduced-basis invariants (monic, no term
/// divisible by another element's leading monomial, sorted descending).
pub fn is_reduced(elements: &[Polynomial]) -> bool {
    let Some(first) = elements.first() else {
        return true;
    };
    let ring = first.ring();
    let field = ring.field();
    let lms: Vec<Monomial> = elements.iter().map(|g| *g.leading_monomial().unwrap()).collect();
    elements.iter().enumerate().all(|(k, g)| {
        field.is_one(g.leading_coefficient().unwrap())
            && g.terms()
                .iter()
                .all(|(m, _)| lms.iter().enumerate().all(|(i, l)| !l.divides(m) || (i == k && m == l)))
    }) && lms.windows(2).all(|w| ring.order().cmp(&w[0], &w[1]) == Ordering::Greater)
}
