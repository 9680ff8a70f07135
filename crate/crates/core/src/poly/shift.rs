use super::{MPoly, Monomial, PolyError, RingRef};
use crate::rational::Rat;
use num_bigint::BigInt;
use num_traits::One;

/// Coefficients of `p(x + t*y)` as a polynomial in `t`.
///
/// `p` lives in an `N`-variable ring; `target` must have `2N` variables with
/// `x_k` at index `k` and `y_k` at index `N + k`. Returns `d + 1` polynomials
/// `p^(0), ..., p^(d)` with `p(x + t y) = sum_m p^(m)(x, y) t^m`; the `m`-th
/// one is bihomogeneous of bidegree `(deg - m, m)` on homogeneous input.
pub fn shift_expand(p: &MPoly, target: &RingRef, d: u32) -> Result<Vec<MPoly>, PolyError> {
    let n = p.ring().nvars();
    if target.nvars() != 2 * n {
        return Err(PolyError::RingMismatch);
    }
    if let Some(deg) = p.total_degree() {
        if deg > d {
            return Err(PolyError::DegreeBound { degree: deg, bound: d });
        }
    }
    let mut buckets: Vec<Vec<(Monomial, Rat)>> = vec![Vec::new(); d as usize + 1];
    let binom = binomials(d as usize);
    for (mono, c) in p.terms() {
        let exps = mono.exponents();
        let mut split = vec![0u8; n];
        expand_term(exps, 0, &mut split, c, &binom, n, &mut buckets);
    }
    Ok(buckets.into_iter().map(|t| MPoly::from_terms(target, t)).collect())
}

fn expand_term(
    exps: &[u8],
    k: usize,
    split: &mut Vec<u8>,
    c: &Rat,
    binom: &[Vec<BigInt>],
    n: usize,
    buckets: &mut [Vec<(Monomial, Rat)>],
) {
    if k == n {
        let mut full = vec![0u8; 2 * n];
        let mut coeff = c.clone();
        let mut m = 0usize;
        for i in 0..n {
            full[i] = exps[i] - split[i];
            full[n + i] = split[i];
            m += split[i] as usize;
            let b = &binom[exps[i] as usize][split[i] as usize];
            if !b.is_one() {
                coeff *= Rat::from_integer(b.clone());
            }
        }
        buckets[m].push((Monomial::from_exponents(&full), coeff));
        return;
    }
    for j in 0..=exps[k] {
        split[k] = j;
        expand_term(exps, k + 1, split, c, binom, n, buckets);
    }
    split[k] = 0;
}

fn binomials(d: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for i in 1..=d {
        let prev = &rows[i - 1];
        let mut row = vec![BigInt::one(); i + 1];
        for j in 1..i {
            row[j] = &prev[j - 1] + &prev[j];
        }
        rows.push(row);
    }
    rows
}
