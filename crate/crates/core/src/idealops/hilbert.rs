//! Hilbert series and Krull dimension of monomial ideals.

use crate::polyring::Monomial;

/// Removes generators divisible by another generator; result sorted and deduplicated.
pub(crate) fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| (m.degree(), *m.exponents().first().unwrap_or(&0)));
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add_shifted(acc: &mut Vec<i64>, b: &[i64], shift: usize) {
    if acc.len() < b.len() + shift {
        acc.resize(b.len() + shift, 0);
    }
    for (j, y) in b.iter().enumerate() {
        acc[j + shift] += y;
    }
}

fn one_minus_t_pow(d: u32) -> Vec<i64> {
    let mut v = vec![0; d as usize + 1];
    v[0] += 1;
    v[d as usize] -= 1;
    v
}

fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.len() > 1 && *v.last().unwrap() == 0 {
        v.pop();
    }
    v
}

/// Numerator `N(t)` of the Hilbert series `N(t) / (1-t)^n` of `S / (gens)`.
pub(crate) fn hilbert_numerator(gens: &[Monomial]) -> Vec<i64> {
    trim(numerator(minimalize(gens.to_vec())))
}

fn numerator(gens: Vec<Monomial>) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    // factor out generators coprime to all others
    let mut factor = vec![1i64];
    let mut rest = Vec::with_capacity(gens.len());
    for (i, g) in gens.iter().enumerate() {
        if gens.iter().enumerate().all(|(j, h)| i == j || g.is_coprime(h)) {
            factor = poly_mul(&factor, &one_minus_t_pow(g.degree()));
        } else {
            rest.push(*g);
        }
    }
    if rest.is_empty() {
        return factor;
    }

    // pivot on the variable occurring in most non-pure-power generators
    let n = rest[0].nvars();
    let mixed: Vec<&Monomial> =
        rest.iter().filter(|m| m.exponents().iter().filter(|&&e| e > 0).count() > 1).collect();
    let var = (0..n)
        .max_by_key(|&v| (mixed.iter().filter(|m| m.exponent(v) > 0).count(), std::cmp::Reverse(v)))
        .expect("at least one variable");
    let mut exps: Vec<u16> = mixed.iter().map(|m| m.exponent(var)).filter(|&e| e > 0).collect();
    exps.sort_unstable();
    let e = exps[exps.len() / 2].max(1);
    let pivot = Monomial::one(n).with_exponent(var, e);

    let mut with_pivot = rest.clone();
    with_pivot.push(pivot);
    let quotient: Vec<Monomial> =
        rest.iter().map(|m| m.with_exponent(var, m.exponent(var).saturating_sub(e))).collect();

    let mut acc = numerator(minimalize(with_pivot));
    let q = numerator(minimalize(quotient));
    poly_add_shifted(&mut acc, &q, e as usize);
    poly_mul(&factor, &trim(acc))
}

/// Splits `N(t) = (1-t)^k * Q(t)` with `Q(1) != 0`; returns `(k, Q)`.
/// `None` when `N` is identically zero.
pub(crate) fn split_one_minus_t(mut num: Vec<i64>) -> Option<(usize, Vec<i64>)> {
    num = trim(num);
    if num.iter().all(|&c| c == 0) {
        return None;
    }
    let mut k = 0;
    loop {
        let value: i64 = num.iter().sum();
        if value != 0 {
            return Some((k, num));
        }
        // divide by (1 - t): q_i = sum_{j <= i} n_j
        let mut q = Vec::with_capacity(num.len() - 1);
        let mut running = 0;
        for c in &num[..num.len() - 1] {
            running += c;
            q.push(running);
        }
        num = trim(q);
        k += 1;
    }
}

/// Krull dimension of `S / (gens)` from maximal independent sets of
/// variables; `None` for the unit ideal.
pub(crate) fn independent_set_dimension(gens: &[Monomial], nvars: usize) -> Option<usize> {
    let masks: Vec<u32> = gens.iter().map(|m| m.support_mask()).collect();
    if masks.contains(&0) {
        return None;
    }
    (0u32..1 << nvars).filter(|u| masks.iter().all(|g| g & !u != 0)).map(|u| u.count_ones() as usize).max()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e).unwrap()
    }

    /// Brute-force Hilbert function: count standard monomials of degree d.
    fn hilbert_function(gens: &[Monomial], n: usize, d: u32) -> i64 {
        fn rec(prefix: &mut Vec<u32>, n: usize, left: u32, gens: &[Monomial]) -> i64 {
            if prefix.len() == n - 1 {
                prefix.push(left);
                let mono = Monomial::new(prefix).unwrap();
                prefix.pop();
                return (!gens.iter().any(|g| g.divides(&mono))) as i64;
            }
            (0..=left)
                .map(|e| {
                    prefix.push(e);
                    let r = rec(prefix, n, left - e, gens);
                    prefix.pop();
                    r
                })
                .sum()
        }
        rec(&mut Vec::new(), n, d, gens)
    }

    /// Series coefficients of N(t)/(1-t)^n up to degree `upto`.
    fn series(num: &[i64], n: usize, upto: usize) -> Vec<i64> {
        let mut s = vec![0i64; upto + 1];
        for (i, c) in num.iter().enumerate() {
            if i <= upto {
                s[i] += c;
            }
        }
        for _ in 0..n {
            for i in 1..=upto {
                s[i] += s[i - 1];
            }
        }
        s
    }

    fn check(gens: Vec<Monomial>, n: usize) {
        let num = hilbert_numerator(&gens);
        let s = series(&num, n, 25);
        for d in 0..=25 {
            assert_eq!(s[d], hilbert_function(&gens, n, d as u32), "degree {d} for {gens:?}");
        }
    }

    #[test]
    fn numerator_matches_brute_force() {
        check(vec![m(&[1, 2, 0]), m(&[0, 1, 2]), m(&[2, 0, 1]), m(&[1, 1, 1])], 3);
        check(vec![m(&[2, 0, 0]), m(&[0, 3, 0]), m(&[1, 1, 1])], 3);
        check(vec![m(&[3, 2, 0, 1]), m(&[0, 4, 1, 0]), m(&[1, 0, 5, 0]), m(&[2, 2, 2, 2])], 4);
        check(vec![m(&[5, 0]), m(&[3, 2]), m(&[0, 4])], 2);
        check(vec![], 3);
    }

    #[test]
    fn dimension_and_degree() {
        // (x, y) in k[x,y,z]: a point, dim 1, degree 1
        let (k, q) = split_one_minus_t(hilbert_numerator(&[m(&[1, 0, 0]), m(&[0, 1, 0])])).unwrap();
        assert_eq!((3 - k, q.iter().sum::<i64>()), (1, 1));
        // (x^2, y^3): dim 1, degree 6
        let (k, q) = split_one_minus_t(hilbert_numerator(&[m(&[2, 0, 0]), m(&[0, 3, 0])])).unwrap();
        assert_eq!((3 - k, q.iter().sum::<i64>()), (1, 6));
        assert!(split_one_minus_t(hilbert_numerator(&[m(&[0, 0, 0])])).is_none());
    }

    #[test]
    fn independent_sets() {
        let g = [m(&[1, 0, 0]), m(&[0, 1, 0]), m(&[0, 0, 1])];
        assert_eq!(independent_set_dimension(&g, 3), Some(0));
        assert_eq!(independent_set_dimension(&[m(&[1, 1, 0])], 3), Some(2));
        assert_eq!(independent_set_dimension(&[m(&[0, 0, 0])], 3), None);
    }
}
