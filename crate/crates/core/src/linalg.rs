//! An independent membership oracle for homogeneous ideals.
//!
//! A homogeneous `f` of degree `e` lies in a homogeneous ideal `I` exactly when
//! it lies in the span of `{μ·g : g a generator, deg μ = e − deg g}`. That span
//! is computed by dense Gaussian elimination over the coefficient field, with
//! no Gröbner-basis machinery involved, so it can cross-check the main engine.

use std::collections::HashMap;

use crate::coeff::{FieldElement, FieldSpec};
use crate::error::{Error, Result};
use crate::idealops::Ideal;
use crate::polyring::{Homogeneity, Monomial, Polynomial};

/// All monomials of degree `d` in `n` variables.
pub(crate) fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(prefix: &mut Vec<u32>, n: usize, left: u32, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == n {
            prefix.push(left);
            out.push(Monomial::new(prefix).expect("exponent fits"));
            prefix.pop();
            return;
        }
        for e in (0..=left).rev() {
            prefix.push(e);
            rec(prefix, n, left - e, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(n), n, d, &mut out);
    out
}

type SparseRow = Vec<(usize, FieldElement)>;

/// Whether homogeneous `f` lies in homogeneous `ideal`, by exact linear algebra.
pub fn member_by_linalg(f: &Polynomial, ideal: &Ideal) -> Result<bool> {
    ideal.ring().check(f.ring())?;
    let e = match f.homogeneity() {
        Homogeneity::Zero => return Ok(true),
        Homogeneity::Inhomogeneous => return Err(Error::NotHomogeneous),
        Homogeneity::Homogeneous(e) => e,
    };
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let n = f.ring().nvars();
    let columns: HashMap<Monomial, usize> =
        monomials_of_degree(n, e).into_iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut rows: Vec<SparseRow> = Vec::new();
    for g in ideal.generators() {
        let d = g.total_degree().expect("nonzero generator");
        if d > e {
            continue;
        }
        for mu in monomials_of_degree(n, e - d) {
            rows.push(g.terms().iter().map(|(m, c)| (columns[&m.mul(&mu)], c.clone())).collect());
        }
    }
    let target: SparseRow = f.terms().iter().map(|(m, c)| (columns[m], c.clone())).collect();
    let field = *f.ring().field();
    Ok(if field.is_rationals() {
        in_span_generic(&field, columns.len(), &rows, &target)
    } else {
        in_span_mod(field.characteristic() as u64, columns.len(), &rows, &target)
    })
}

fn residue(c: &FieldElement) -> u64 {
    match c {
        FieldElement::Mod(v) => *v as u64,
        FieldElement::Rat(_) => unreachable!("prime field element expected"),
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut r, mut base, mut e) = (1u64, a % p, p - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = r * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    r
}

fn in_span_mod(p: u64, ncols: usize, rows: &[SparseRow], target: &SparseRow) -> bool {
    let mut pivots: Vec<Option<Vec<u64>>> = vec![None; ncols];
    let densify = |row: &SparseRow| {
        let mut v = vec![0u64; ncols];
        for (j, c) in row {
            v[*j] = residue(c);
        }
        v
    };
    // reduce in increasing column order; returns the first surviving column
    let reduce = |v: &mut Vec<u64>, pivots: &[Option<Vec<u64>>]| -> Option<usize> {
        for col in 0..ncols {
            if v[col] == 0 {
                continue;
            }
            let Some(piv) = &pivots[col] else {
                return Some(col);
            };
            let factor = p - v[col];
            for j in col..ncols {
                if piv[j] != 0 {
                    v[j] = (v[j] + factor * piv[j]) % p;
                }
            }
        }
        None
    };
    let mut rank = 0;
    for row in rows {
        if rank == ncols {
            break;
        }
        let mut v = densify(row);
        if let Some(col) = reduce(&mut v, &pivots) {
            let inv = inv_mod(v[col], p);
            for x in v[col..].iter_mut() {
                *x = *x * inv % p;
            }
            pivots[col] = Some(v);
            rank += 1;
        }
    }
    let mut v = densify(target);
    reduce(&mut v, &pivots).is_none()
}

fn in_span_generic(field: &FieldSpec, ncols: usize, rows: &[SparseRow], target: &SparseRow) -> bool {
    let mut pivots: Vec<Option<Vec<FieldElement>>> = vec![None; ncols];
    let densify = |row: &SparseRow| {
        let mut v = vec![field.zero(); ncols];
        for (j, c) in row {
            v[*j] = c.clone();
        }
        v
    };
    let reduce = |v: &mut Vec<FieldElement>, pivots: &[Option<Vec<FieldElement>>]| -> Option<usize> {
        for col in 0..ncols {
            if field.is_zero(&v[col]) {
                continue;
            }
            let Some(piv) = &pivots[col] else {
                return Some(col);
            };
            let factor = v[col].clone();
            for j in col..ncols {
                if !field.is_zero(&piv[j]) {
                    v[j] = field.sub(&v[j], &field.mul(&factor, &piv[j]));
                }
            }
        }
        None
    };
    let mut rank = 0;
    for row in rows {
        if rank == ncols {
            break;
        }
        let mut v = densify(row);
        if let Some(col) = reduce(&mut v, &pivots) {
            let inv = field.inverse(&v[col]).expect("nonzero pivot");
            for x in v[col..].iter_mut() {
                *x = field.mul(x, &inv);
            }
            pivots[col] = Some(v);
            rank += 1;
        }
    }
    let mut v = densify(target);
    reduce(&mut v, &pivots).is_none()
}

/// Shows `f ∈ J : 𝔪^∞` by finding, for every variable `y_i`, some
/// `k ≤ max_k` with `y_i^k · f ∈ J` (tried for `k = 1, 2, 4, …`).
///
/// `true` is a proof of membership; `false` only means no such `k` was found
/// within the budget.
pub fn member_of_saturation_by_linalg(f: &Polynomial, ideal: &Ideal, max_k: u32) -> Result<bool> {
    if member_by_linalg(f, ideal)? {
        return Ok(true);
    }
    let ring = f.ring();
    'vars: for i in 0..ring.nvars() {
        let mut k = 1;
        while k <= max_k {
            let shifted =
                f.mul_term(&Monomial::one(ring.nvars()).with_exponent(i, k as u16), &ring.field().one());
            if member_by_linalg(&shifted, ideal)? {
                continue 'vars;
            }
            k *= 2;
        }
        return Ok(false);
    }
    Ok(true)
}
