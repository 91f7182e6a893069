use std::cmp::Ordering;
use std::fmt;

use super::{Monomial, PolyRing};
use crate::coeff::FieldElement;
use crate::error::{Error, Result};

pub type Term = (Monomial, FieldElement);

/// A polynomial in sorted sparse form: no zero coefficients, monomials
/// strictly descending in the ring's order.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: PolyRing,
    terms: Vec<Term>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    Inhomogeneous,
    Homogeneous(u32),
    /// The zero polynomial: homogeneous of every degree.
    Zero,
}

/// Merges two sorted term lists, computing `a + b` (or `a - b` when `negate_b`).
pub(crate) fn merge_terms(ring: &PolyRing, a: &[Term], b: &[Term], negate_b: bool) -> Vec<Term> {
    let field = ring.field();
    let order = ring.order();
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match order.cmp(&a[i].0, &b[j].0) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let c = if negate_b { field.neg(&b[j].1) } else { b[j].1.clone() };
                out.push((b[j].0, c));
                j += 1;
            }
            Ordering::Equal => {
                let c = if negate_b { field.sub(&a[i].1, &b[j].1) } else { field.add(&a[i].1, &b[j].1) };
                if !field.is_zero(&c) {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend(b[j..].iter().map(|(m, c)| (*m, if negate_b { field.neg(c) } else { c.clone() })));
    out
}

fn merge_all(ring: &PolyRing, mut rows: Vec<Vec<Term>>) -> Vec<Term> {
    while rows.len() > 1 {
        let mut next = Vec::with_capacity(rows.len().div_ceil(2));
        let mut it = rows.into_iter();
        while let Some(a) = it.next() {
            match it.next() {
                Some(b) => next.push(merge_terms(ring, &a, &b, false)),
                None => next.push(a),
            }
        }
        rows = next;
    }
    rows.pop().unwrap_or_default()
}

impl Polynomial {
    pub fn zero(ring: &PolyRing) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &PolyRing, c: FieldElement) -> Self {
        Self::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn one(ring: &PolyRing) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn monomial(ring: &PolyRing, m: Monomial, c: FieldElement) -> Self {
        debug_assert_eq!(m.nvars(), ring.nvars());
        let terms = if ring.field().is_zero(&c) { vec![] } else { vec![(m, c)] };
        Polynomial { ring: ring.clone(), terms }
    }

    /// Builds a polynomial from arbitrary terms: sorts, combines duplicates and
    /// drops zeros.
    pub fn from_terms(ring: &PolyRing, mut terms: Vec<Term>) -> Result<Self> {
        let field = ring.field();
        for (m, c) in &terms {
            if m.nvars() != ring.nvars() {
                return Err(Error::RingMismatch);
            }
            if !field.contains(c) {
                return Err(Error::FieldMismatch);
            }
        }
        let order = ring.order();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = field.add(&last.1, &c),
                _ => {
                    if let Some(last) = out.last() {
                        if field.is_zero(&last.1) {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if matches!(out.last(), Some(last) if field.is_zero(&last.1)) {
            out.pop();
        }
        Ok(Polynomial { ring: ring.clone(), terms: out })
    }

    /// Caller guarantees the canonical-form invariants.
    pub(crate) fn from_sorted(ring: &PolyRing, terms: Vec<Term>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.order().cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| !ring.field().is_zero(c)));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coefficient(&self) -> Option<&FieldElement> {
        self.terms.first().map(|t| &t.1)
    }

    /// Maximum total degree of a term; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn homogeneity(&self) -> Homogeneity {
        let Some((m, _)) = self.terms.first() else {
            return Homogeneity::Zero;
        };
        let d = m.degree();
        if self.terms.iter().all(|(m, _)| m.degree() == d) {
            Homogeneity::Homogeneous(d)
        } else {
            Homogeneity::Inhomogeneous
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneity() != Homogeneity::Inhomogeneous
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check(&other.ring)?;
        Ok(self.add_unchecked(other))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check(&other.ring)?;
        Ok(self.sub_unchecked(other))
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check(&other.ring)?;
        self.check_degree_sum(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn check_degree_sum(&self, other: &Polynomial) -> Result<()> {
        let d = self.total_degree().unwrap_or(0) + other.total_degree().unwrap_or(0);
        if d > u16::MAX as u32 {
            Err(Error::ExponentOverflow)
        } else {
            Ok(())
        }
    }

    pub(crate) fn add_unchecked(&self, other: &Polynomial) -> Polynomial {
        Polynomial::from_sorted(&self.ring, merge_terms(&self.ring, &self.terms, &other.terms, false))
    }

    pub(crate) fn sub_unchecked(&self, other: &Polynomial) -> Polynomial {
        Polynomial::from_sorted(&self.ring, merge_terms(&self.ring, &self.terms, &other.terms, true))
    }

    pub(crate) fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        let (small, large) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        let rows = small.terms.iter().map(|(m, c)| large.mul_term_raw(m, c)).collect();
        Polynomial::from_sorted(&self.ring, merge_all(&self.ring, rows))
    }

    /// `c * m * self` as raw sorted terms (monomial multiplication preserves order).
    pub(crate) fn mul_term_raw(&self, m: &Monomial, c: &FieldElement) -> Vec<Term> {
        let field = self.ring.field();
        self.terms
            .iter()
            .filter_map(|(tm, tc)| {
                let v = field.mul(tc, c);
                (!field.is_zero(&v)).then(|| (tm.mul(m), v))
            })
            .collect()
    }

    pub fn mul_term(&self, m: &Monomial, c: &FieldElement) -> Polynomial {
        Polynomial::from_sorted(&self.ring, self.mul_term_raw(m, c))
    }

    pub fn scale(&self, c: &FieldElement) -> Polynomial {
        self.mul_term(&Monomial::one(self.ring.nvars()), c)
    }

    pub fn neg(&self) -> Polynomial {
        let field = self.ring.field();
        Polynomial::from_sorted(&self.ring, self.terms.iter().map(|(m, c)| (*m, field.neg(c))).collect())
    }

    pub fn pow(&self, e: u32) -> Result<Polynomial> {
        let d = self.total_degree().unwrap_or(0) as u64 * e as u64;
        if d > u16::MAX as u64 {
            return Err(Error::ExponentOverflow);
        }
        let mut acc = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        Ok(acc)
    }

    /// Multiplies by the inverse of the leading coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(lc) => self.scale(&self.ring.field().inverse(lc).expect("nonzero")),
        }
    }

    /// Applies the ring map `y_i -> images[i]`; the result lives in the images' ring.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.ring.nvars() {
            return Err(Error::ArityMismatch { expected: self.ring.nvars(), found: images.len() });
        }
        let target = images[0].ring();
        for img in images {
            target.check(img.ring())?;
        }
        if self.ring.field() != target.field() {
            return Err(Error::RingMismatch);
        }
        let max_deg = self.total_degree().unwrap_or(0) as u64
            * images.iter().map(|g| g.total_degree().unwrap_or(0)).max().unwrap_or(0) as u64;
        if max_deg > u16::MAX as u64 {
            return Err(Error::ExponentOverflow);
        }
        let n = self.ring.nvars();
        // powers[i][k] = images[i]^k
        let mut powers: Vec<Vec<Polynomial>> = vec![vec![Polynomial::one(target)]; n];
        for (m, _) in &self.terms {
            for (i, pw) in powers.iter_mut().enumerate() {
                while pw.len() <= m.exponent(i) as usize {
                    let next = pw.last().unwrap().mul_unchecked(&images[i]);
                    pw.push(next);
                }
            }
        }
        let rows = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut t = Polynomial::constant(target, c.clone());
                for (i, pw) in powers.iter().enumerate() {
                    let e = m.exponent(i) as usize;
                    if e > 0 {
                        t = t.mul_unchecked(&pw[e]);
                    }
                }
                t.terms
            })
            .collect();
        Ok(Polynomial::from_sorted(target, merge_all(target, rows)))
    }

    /// Re-expresses the polynomial in a ring with the same variables and field
    /// but possibly another order.
    pub fn to_ring(&self, ring: &PolyRing) -> Result<Polynomial> {
        if ring.variables() != self.ring.variables() || ring.field() != self.ring.field() {
            return Err(Error::RingMismatch);
        }
        if ring.same(&self.ring) {
            return Ok(self.clone());
        }
        let mut terms = self.terms.clone();
        let order = ring.order();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Ok(Polynomial::from_sorted(ring, terms))
    }

    /// Moves terms into `ring` through an exponent remapping, then re-sorts.
    pub(crate) fn remap(&self, ring: &PolyRing, source_index: impl Fn(usize) -> Option<usize>) -> Polynomial {
        let n = ring.nvars();
        let mut terms: Vec<Term> =
            self.terms.iter().map(|(m, c)| (m.remap(n, &source_index), c.clone())).collect();
        let order = ring.order();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial::from_sorted(ring, terms)
    }

    /// Exact division by a monomial dividing every term.
    pub(crate) fn div_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial::from_sorted(
            &self.ring,
            self.terms
                .iter()
                .map(|(t, c)| (t.div(m).expect("monomial divides every term"), c.clone()))
                .collect(),
        )
    }

    /// Exact division `self / g` when `g` divides `self`; `None` otherwise.
    pub(crate) fn exact_div(&self, g: &Polynomial) -> Option<Polynomial> {
        let field = self.ring.field();
        let (lm, lc) = (g.leading_monomial()?, g.leading_coefficient()?);
        let lc_inv = field.inverse(lc).ok()?;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.terms.first() {
            let q = m.div(lm)?;
            let qc = field.mul(c, &lc_inv);
            rem = Polynomial::from_sorted(
                &self.ring,
                merge_terms(&self.ring, &rem.terms, &g.mul_term_raw(&q, &qc), true),
            );
            quot.push((q, qc));
        }
        Some(Polynomial::from_sorted(&self.ring, quot))
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same(&other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

fn write_monomial(f: &mut fmt::Formatter<'_>, ring: &PolyRing, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        f.write_str(&ring.variables()[i])?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    /// Canonical text: descending terms, `*` products, `^` exponents and an
    /// explicit coefficient only when it is not +-1.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let field = self.ring.field();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative = field.is_negative_repr(c);
            let abs = if negative { field.neg(c) } else { c.clone() };
            match (k == 0, negative) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                f.write_str(&field.format(&abs))?;
            } else {
                if !field.is_one(&abs) {
                    write!(f, "{}*", field.format(&abs))?;
                }
                write_monomial(f, &self.ring, m)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::FieldSpec;
    use crate::polyring::MonomialOrder;

    fn ring() -> PolyRing {
        PolyRing::grevlex(FieldSpec::rationals(), ["x", "y", "z"]).unwrap()
    }

    fn xyz(r: &PolyRing) -> (Polynomial, Polynomial, Polynomial) {
        (r.variable(0), r.variable(1), r.variable(2))
    }

    fn cube(p: &Polynomial) -> Polynomial {
        p.pow(3).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let r = ring();
        let (x, y, _) = xyz(&r);
        let a = cube(&x).sub(&cube(&y)).unwrap();
        let b = cube(&x).add(&cube(&y)).unwrap();
        assert_eq!(a.mul(&b).unwrap().to_string(), "x^6 - y^6");
        assert!(a.sub(&a).unwrap().is_zero());
    }

    #[test]
    fn fermat_witness_expansion() {
        let r = ring();
        let (x, y, z) = xyz(&r);
        let f = cube(&x)
            .sub(&cube(&y))
            .unwrap()
            .mul(&cube(&x).sub(&cube(&z)).unwrap())
            .unwrap()
            .mul(&cube(&y).sub(&cube(&z)).unwrap())
            .unwrap();
        // hand expansion of (a - b)(a - c)(b - c) with a = x^3, b = y^3, c = z^3:
        // a^2 b - a^2 c - a b^2 + a c^2 + b^2 c - b c^2
        assert_eq!(f.len(), 6);
        assert_eq!(f.homogeneity(), Homogeneity::Homogeneous(9));
        assert_eq!(f.to_string(), "x^6*y^3 - x^3*y^6 - x^6*z^3 + y^6*z^3 + x^3*z^6 - y^3*z^6");
    }

    #[test]
    fn homogeneity() {
        let r = ring();
        let (x, y, z) = xyz(&r);
        let g = x.mul(&cube(&y).sub(&cube(&z)).unwrap()).unwrap();
        assert_eq!(g.homogeneity(), Homogeneity::Homogeneous(4));
        assert_eq!(x.pow(2).unwrap().add(&y).unwrap().homogeneity(), Homogeneity::Inhomogeneous);
        assert_eq!(Polynomial::zero(&r).homogeneity(), Homogeneity::Zero);
    }

    #[test]
    fn substitution() {
        let r = ring();
        let (x, y, z) = xyz(&r);
        let sq = |p: &Polynomial| p.pow(2).unwrap();
        let f = x.mul(&sq(&y)).unwrap();
        let img = f.substitute(&[sq(&x), sq(&y), sq(&z)]).unwrap();
        assert_eq!(img.to_string(), "x^2*y^4");
        assert_eq!(f.substitute(&[x.clone(), y.clone(), z.clone()]).unwrap(), f);
        assert_eq!(
            f.substitute(&[x.clone(), y.clone()]),
            Err(Error::ArityMismatch { expected: 3, found: 2 })
        );
    }

    #[test]
    fn example1_generator_image() {
        let r = ring();
        let (x, y, z) = xyz(&r);
        let sq = |p: &Polynomial| p.pow(2).unwrap();
        let f = sq(&x).add(&sq(&y)).unwrap();
        let g = sq(&y).add(&sq(&z)).unwrap();
        let h = sq(&x).add(&sq(&z)).unwrap();
        let gen = x.mul(&cube(&y).sub(&cube(&z)).unwrap()).unwrap();
        let image = gen.substitute(&[f.clone(), g.clone(), h.clone()]).unwrap();
        let expected = f.mul(&cube(&g).sub(&cube(&h)).unwrap()).unwrap();
        assert_eq!(image, expected);
        assert_eq!(image.homogeneity(), Homogeneity::Homogeneous(8));
        // g^3 - h^3 = (y^2+z^2)^3 - (x^2+z^2)^3, expanded independently:
        // -x^6 + y^6 - 3x^4z^2 + 3y^4z^2 - 3x^2z^4 + 3y^2z^4
        let d = cube(&g).sub(&cube(&h)).unwrap();
        assert_eq!(d.to_string(), "-x^6 + y^6 - 3*x^4*z^2 + 3*y^4*z^2 - 3*x^2*z^4 + 3*y^2*z^4");
    }

    #[test]
    fn ring_mismatch() {
        let r = ring();
        let other = r.with_order(MonomialOrder::Lex).unwrap();
        assert_eq!(r.variable(0).add(&other.variable(0)), Err(Error::RingMismatch));
    }

    #[test]
    fn prime_field_printing() {
        let r = PolyRing::grevlex(FieldSpec::prime(7).unwrap(), ["x", "y"]).unwrap();
        let x = r.variable(0);
        let p =
            x.scale(&r.field().from_i64(6)).add(&Polynomial::constant(&r, r.field().from_i64(2))).unwrap();
        assert_eq!(p.to_string(), "-x + 2");
    }

    #[test]
    fn exact_division() {
        let r = ring();
        let (x, y, _) = xyz(&r);
        let a = x.add(&y).unwrap();
        let b = x.sub(&y).unwrap();
        let p = a.mul(&b).unwrap();
        assert_eq!(p.exact_div(&a).unwrap(), b);
        assert!(x.exact_div(&y).is_none());
    }
}
