use std::cmp::Ordering;

use crate::error::{Error, Result};

/// Largest number of variables a ring may have (auxiliary elimination
/// variables included).
pub const MAX_VARS: usize = 12;

/// A power product stored as a dense exponent vector.
///
/// Unused trailing slots are always zero, so equality, hashing and the
/// order comparisons never need the variable count.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    nvars: u8,
    deg: u32,
}

/// A monomial order.
///
/// `Block(k)` compares the first `k` variables by grevlex first and breaks
/// ties with grevlex on the remaining variables; it eliminates the first `k`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum MonomialOrder {
    #[default]
    Grevlex,
    Lex,
    Block(usize),
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS);
        Monomial { exps: [0; MAX_VARS], nvars: nvars as u8, deg: 0 }
    }

    pub fn new(exps: &[u32]) -> Result<Self> {
        if exps.len() > MAX_VARS {
            return Err(Error::InvalidRing(format!("more than {MAX_VARS} variables")));
        }
        let mut m = Monomial::one(exps.len());
        for (slot, &e) in m.exps.iter_mut().zip(exps) {
            *slot = u16::try_from(e).map_err(|_| Error::ExponentOverflow)?;
            m.deg += e;
        }
        Ok(m)
    }

    pub fn variable(nvars: usize, index: usize) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[index] = 1;
        m.deg = 1;
        m
    }

    #[inline]
    pub fn exponents(&self) -> &[u16] {
        &self.exps[..self.nvars as usize]
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u16 {
        self.exps[i]
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars as usize
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    /// Product; the caller guarantees no exponent exceeds `u16::MAX`.
    #[inline]
    pub(crate) fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for i in 0..MAX_VARS {
            out.exps[i] += other.exps[i];
        }
        out.deg += other.deg;
        out
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        let mut out = *self;
        for i in 0..MAX_VARS {
            out.exps[i] = out.exps[i].checked_add(other.exps[i]).ok_or(Error::ExponentOverflow)?;
        }
        out.deg += other.deg;
        Ok(out)
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && (0..MAX_VARS).all(|i| self.exps[i] <= other.exps[i])
    }

    /// `self / other` when `other` divides `self`.
    #[inline]
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let mut out = *self;
        for i in 0..MAX_VARS {
            out.exps[i] -= other.exps[i];
        }
        out.deg -= other.deg;
        Some(out)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        out.deg = 0;
        for i in 0..MAX_VARS {
            out.exps[i] = out.exps[i].max(other.exps[i]);
            out.deg += out.exps[i] as u32;
        }
        out
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        (0..MAX_VARS).all(|i| self.exps[i] == 0 || other.exps[i] == 0)
    }

    /// Bit `i` set iff variable `i` occurs.
    #[inline]
    pub fn support_mask(&self) -> u32 {
        let mut mask = 0;
        for i in 0..MAX_VARS {
            if self.exps[i] != 0 {
                mask |= 1 << i;
            }
        }
        mask
    }

    /// Same exponents with variable slots permuted: new slot `i` takes old slot `perm[i]`.
    pub(crate) fn remap(&self, nvars: usize, source_index: impl Fn(usize) -> Option<usize>) -> Monomial {
        let mut out = Monomial::one(nvars);
        for i in 0..nvars {
            if let Some(j) = source_index(i) {
                out.exps[i] = self.exps[j];
                out.deg += self.exps[j] as u32;
            }
        }
        out
    }

    pub(crate) fn with_exponent(&self, i: usize, e: u16) -> Monomial {
        let mut out = *self;
        out.deg = out.deg - out.exps[i] as u32 + e as u32;
        out.exps[i] = e;
        out
    }
}

fn grevlex_tail(a: &[u16], b: &[u16]) -> Ordering {
    for i in (0..a.len()).rev() {
        if a[i] != b[i] {
            // smaller trailing exponent wins
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Grevlex => a.deg.cmp(&b.deg).then_with(|| grevlex_tail(&a.exps, &b.exps)),
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::Block(k) => {
                let da: u32 = a.exps[..k].iter().map(|&e| e as u32).sum();
                let db: u32 = b.exps[..k].iter().map(|&e| e as u32).sum();
                da.cmp(&db)
                    .then_with(|| grevlex_tail(&a.exps[..k], &b.exps[..k]))
                    .then_with(|| (a.deg - da).cmp(&(b.deg - db)))
                    .then_with(|| grevlex_tail(&a.exps[k..], &b.exps[k..]))
            }
        }
    }

    /// Whether every comparison starts with total degree.
    pub fn is_graded(&self) -> bool {
        matches!(self, MonomialOrder::Grevlex)
    }
}

/// Compares two monomials of the same ring.
pub fn monomial_compare(a: &Monomial, b: &Monomial, order: MonomialOrder) -> Result<Ordering> {
    if a.nvars != b.nvars {
        return Err(Error::RingMismatch);
    }
    Ok(order.cmp(a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e).unwrap()
    }

    #[test]
    fn grevlex_examples() {
        let o = MonomialOrder::Grevlex;
        assert_eq!(o.cmp(&m(&[2, 1, 0]), &m(&[1, 1, 1])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 2, 0])), Ordering::Less);
        // x*z^2 < y^3 in grevlex
        assert_eq!(o.cmp(&m(&[1, 0, 2]), &m(&[0, 3, 0])), Ordering::Less);
    }

    #[test]
    fn lex_examples() {
        let o = MonomialOrder::Lex;
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 2, 0])), Ordering::Greater);
        let a = m(&[3, 1, 4]);
        assert_eq!(monomial_compare(&a, &a, o).unwrap(), Ordering::Equal);
    }

    #[test]
    fn block_eliminates_first_variables() {
        let o = MonomialOrder::Block(1);
        // t > any power product free of t
        assert_eq!(o.cmp(&m(&[1, 0, 0, 0]), &m(&[0, 9, 9, 9])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 2, 0, 0]), &m(&[1, 0, 1, 0])), Ordering::Greater);
    }

    #[test]
    fn length_mismatch() {
        assert_eq!(
            monomial_compare(&m(&[1, 0]), &m(&[1, 0, 0]), MonomialOrder::Grevlex),
            Err(Error::RingMismatch)
        );
    }

    #[test]
    fn overflow_is_reported() {
        assert_eq!(Monomial::new(&[70000]), Err(Error::ExponentOverflow));
        let big = m(&[65535, 0]);
        assert_eq!(big.checked_mul(&m(&[1, 0])), Err(Error::ExponentOverflow));
    }

    fn exps() -> impl Strategy<Value = Vec<u32>> {
        proptest::collection::vec(0u32..6, 4)
    }

    proptest! {
        #[test]
        fn orders_are_total_and_multiplicative(a in exps(), b in exps(), c in exps(),
                                               k in 1usize..4) {
            let (a, b, c) = (m(&a), m(&b), m(&c));
            for o in [MonomialOrder::Grevlex, MonomialOrder::Lex, MonomialOrder::Block(k)] {
                let ab = o.cmp(&a, &b);
                prop_assert_eq!(ab == Ordering::Equal, a == b);
                prop_assert_eq!(ab.reverse(), o.cmp(&b, &a));
                prop_assert_eq!(o.cmp(&a.mul(&c), &b.mul(&c)), ab);
                prop_assert_ne!(o.cmp(&a.mul(&c), &a), Ordering::Less);
            }
        }
    }
}
