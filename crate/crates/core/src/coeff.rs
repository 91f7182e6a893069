//! Exact coefficient arithmetic over prime fields `GF(p)` and the rationals.
//!
//! A [`FieldSpec`] is the arithmetic context; [`FieldElement`] values carry no
//! reference to it, so every operation goes through the spec. Prime residues are
//! kept in `[0, p)` and rationals are always in lowest terms with a positive
//! denominator.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Kind {
    Prime(u32),
    Rationals,
}

/// A coefficient field: `GF(p)` for a prime `p < 2^31`, or `QQ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldSpec(Kind);

/// An element of some [`FieldSpec`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Mod(u32),
    Rat(Box<BigRational>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13] {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let mut d = 17;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(Error::InvalidModulus(p));
        }
        Ok(FieldSpec(Kind::Prime(p as u32)))
    }

    pub fn rationals() -> Self {
        FieldSpec(Kind::Rationals)
    }

    /// `p` for `GF(p)`, 0 for `QQ`.
    pub fn characteristic(&self) -> u32 {
        match self.0 {
            Kind::Prime(p) => p,
            Kind::Rationals => 0,
        }
    }

    pub fn is_rationals(&self) -> bool {
        self.0 == Kind::Rationals
    }

    pub fn zero(&self) -> FieldElement {
        match self.0 {
            Kind::Prime(_) => FieldElement::Mod(0),
            Kind::Rationals => FieldElement::Rat(Box::new(BigRational::zero())),
        }
    }

    pub fn one(&self) -> FieldElement {
        match self.0 {
            Kind::Prime(_) => FieldElement::Mod(1),
            Kind::Rationals => FieldElement::Rat(Box::new(BigRational::one())),
        }
    }

    pub fn from_i64(&self, n: i64) -> FieldElement {
        match self.0 {
            Kind::Prime(p) => FieldElement::Mod(n.rem_euclid(p as i64) as u32),
            Kind::Rationals => FieldElement::Rat(Box::new(BigRational::from_integer(n.into()))),
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> FieldElement {
        match self.0 {
            Kind::Prime(p) => {
                let r = n.mod_floor(&BigInt::from(p));
                FieldElement::Mod(r.to_u32().expect("residue below modulus"))
            }
            Kind::Rationals => FieldElement::Rat(Box::new(BigRational::from_integer(n.clone()))),
        }
    }

    /// `num / den` mapped into the field.
    pub fn from_fraction(&self, num: &BigInt, den: &BigInt) -> Result<FieldElement> {
        let d = self.from_bigint(den);
        self.div(&self.from_bigint(num), &d)
    }

    /// Whether `a` is a well-formed element of this field.
    pub fn contains(&self, a: &FieldElement) -> bool {
        match (self.0, a) {
            (Kind::Prime(p), FieldElement::Mod(v)) => *v < p,
            (Kind::Rationals, FieldElement::Rat(_)) => true,
            _ => false,
        }
    }

    pub fn is_zero(&self, a: &FieldElement) -> bool {
        match a {
            FieldElement::Mod(v) => *v == 0,
            FieldElement::Rat(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self, a: &FieldElement) -> bool {
        match a {
            FieldElement::Mod(v) => *v == 1,
            FieldElement::Rat(r) => r.is_one(),
        }
    }

    #[inline]
    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        match (self.0, a, b) {
            (Kind::Prime(p), FieldElement::Mod(x), FieldElement::Mod(y)) => {
                let s = *x as u64 + *y as u64;
                FieldElement::Mod((s % p as u64) as u32)
            }
            (Kind::Rationals, FieldElement::Rat(x), FieldElement::Rat(y)) => {
                FieldElement::Rat(Box::new(x.as_ref() + y.as_ref()))
            }
            _ => panic!("field element does not belong to {self}"),
        }
    }

    #[inline]
    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        match (self.0, a) {
            (Kind::Prime(p), FieldElement::Mod(x)) => FieldElement::Mod(if *x == 0 { 0 } else { p - x }),
            (Kind::Rationals, FieldElement::Rat(x)) => FieldElement::Rat(Box::new(-x.as_ref())),
            _ => panic!("field element does not belong to {self}"),
        }
    }

    #[inline]
    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        match (self.0, a, b) {
            (Kind::Prime(p), FieldElement::Mod(x), FieldElement::Mod(y)) => {
                let s = *x as u64 + (p - y) as u64;
                FieldElement::Mod((s % p as u64) as u32)
            }
            (Kind::Rationals, FieldElement::Rat(x), FieldElement::Rat(y)) => {
                FieldElement::Rat(Box::new(x.as_ref() - y.as_ref()))
            }
            _ => panic!("field element does not belong to {self}"),
        }
    }

    #[inline]
    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        match (self.0, a, b) {
            (Kind::Prime(p), FieldElement::Mod(x), FieldElement::Mod(y)) => {
                FieldElement::Mod(((*x as u64 * *y as u64) % p as u64) as u32)
            }
            (Kind::Rationals, FieldElement::Rat(x), FieldElement::Rat(y)) => {
                FieldElement::Rat(Box::new(x.as_ref() * y.as_ref()))
            }
            _ => panic!("field element does not belong to {self}"),
        }
    }

    pub fn inverse(&self, a: &FieldElement) -> Result<FieldElement> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        match (self.0, a) {
            (Kind::Prime(p), FieldElement::Mod(x)) => Ok(FieldElement::Mod(inv_mod(*x, p))),
            (Kind::Rationals, FieldElement::Rat(x)) => Ok(FieldElement::Rat(Box::new(x.recip()))),
            _ => Err(Error::FieldMismatch),
        }
    }

    pub fn div(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, &self.inverse(b)?))
    }

    pub fn pow(&self, a: &FieldElement, mut e: u64) -> FieldElement {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Checked binary operation; both operands must belong to this field.
    pub fn field_op(&self, a: &FieldElement, b: &FieldElement, op: FieldOp) -> Result<FieldElement> {
        if !self.contains(a) || !self.contains(b) {
            return Err(Error::FieldMismatch);
        }
        Ok(match op {
            FieldOp::Add => self.add(a, b),
            FieldOp::Sub => self.sub(a, b),
            FieldOp::Mul => self.mul(a, b),
            FieldOp::Div => self.div(a, b)?,
        })
    }

    /// Multipliers `(a, b)` such that `a*lc_f - b*lc_g == 0`, chosen to keep
    /// integer coefficients integral over `QQ` (`a = 1` over `GF(p)`).
    pub(crate) fn cancel_multipliers(
        &self,
        lc_f: &FieldElement,
        lc_g: &FieldElement,
    ) -> (FieldElement, FieldElement) {
        match (self.0, lc_f, lc_g) {
            (Kind::Rationals, FieldElement::Rat(f), FieldElement::Rat(g))
                if f.is_integer() && g.is_integer() =>
            {
                let (f, g) = (f.numer(), g.numer());
                let d = f.gcd(g);
                let a = g / &d;
                let b = f / &d;
                (
                    FieldElement::Rat(Box::new(BigRational::from_integer(a))),
                    FieldElement::Rat(Box::new(BigRational::from_integer(b))),
                )
            }
            _ => (self.one(), self.div(lc_f, lc_g).expect("nonzero leading coefficient")),
        }
    }

    /// Scalar that turns `coeffs` into a normalized representative: monic over
    /// `GF(p)`, primitive integral with positive leading coefficient over `QQ`.
    pub(crate) fn normalizing_scalar<'a, I>(&self, mut coeffs: I) -> FieldElement
    where
        I: Iterator<Item = &'a FieldElement>,
    {
        match self.0 {
            Kind::Prime(_) => {
                let lc = coeffs.next().expect("nonzero polynomial");
                self.inverse(lc).expect("nonzero leading coefficient")
            }
            Kind::Rationals => {
                let mut den_lcm = BigInt::one();
                let mut num_gcd = BigInt::zero();
                let mut lead_sign = None;
                for c in coeffs {
                    let FieldElement::Rat(r) = c else { panic!("field element does not belong to {self}") };
                    lead_sign.get_or_insert(r.numer().sign());
                    den_lcm = den_lcm.lcm(r.denom());
                    num_gcd = num_gcd.gcd(r.numer());
                }
                let mut s = BigRational::new(den_lcm, num_gcd);
                if lead_sign == Some(Sign::Minus) {
                    s = -s;
                }
                FieldElement::Rat(Box::new(s))
            }
        }
    }

    /// Canonical text of an element. Prime residues print in the symmetric
    /// range `(-p/2, p/2]`.
    pub fn format(&self, a: &FieldElement) -> String {
        match (self.0, a) {
            (Kind::Prime(p), FieldElement::Mod(x)) => {
                if *x > p / 2 {
                    format!("-{}", p - x)
                } else {
                    x.to_string()
                }
            }
            (_, FieldElement::Rat(r)) => r.to_string(),
            _ => panic!("field element does not belong to {self}"),
        }
    }

    /// True when the printed form of `a` starts with a minus sign.
    pub(crate) fn is_negative_repr(&self, a: &FieldElement) -> bool {
        match (self.0, a) {
            (Kind::Prime(p), FieldElement::Mod(x)) => *x > p / 2,
            (_, FieldElement::Rat(r)) => r.is_negative(),
            _ => false,
        }
    }
}

fn inv_mod(a: u32, p: u32) -> u32 {
    let (mut r0, mut r1) = (p as i64, a as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1);
    t0.rem_euclid(p as i64) as u32
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Kind::Prime(p) => write!(f, "GF({p})"),
            Kind::Rationals => write!(f, "QQ"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `QQ` or `GF(p)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "QQ" {
            return Ok(FieldSpec::rationals());
        }
        let inner = s
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::parse(0, &["QQ", "GF(p)"]))?;
        let p: u64 = inner.trim().parse().map_err(|_| Error::parse(3, &["prime modulus"]))?;
        FieldSpec::prime(p)
    }
}
