//! Division of polynomials by a list of monic divisors.

use crate::poly::{MPoly, Monomial, MonomialOrder, RingRef};
use crate::rational::Rat;
use num_traits::Zero;
use std::cmp::Ordering;

/// Lead data cached per divisor so that divisibility scans avoid touching
/// the full exponent vector most of the time.
#[derive(Clone, Debug)]
pub(crate) struct Divisor<'a> {
    pub poly: &'a MPoly,
    pub lead: &'a Monomial,
    pub mask: u128,
}

impl<'a> Divisor<'a> {
    pub fn new(poly: &'a MPoly) -> Self {
        let lead = poly.leading_monomial().expect("nonzero divisor");
        debug_assert!(num_traits::One::is_one(poly.leading_coeff().unwrap()), "divisors must be monic");
        Divisor { poly, lead, mask: lead.support() }
    }
}

pub(crate) fn find_divisor(divisors: &[Divisor<'_>], m: &Monomial) -> Option<usize> {
    let mask = m.support();
    divisors
        .iter()
        .position(|d| d.mask & !mask == 0 && d.lead.divides(m))
}

/// `a - c * m * b` where both inputs are sorted term lists and `a` is
/// consumed. The leading terms are assumed to cancel when `skip_lead` is
/// set.
pub(crate) fn sub_mul_owned(
    order: MonomialOrder,
    a: Vec<(Monomial, Rat)>,
    c: &Rat,
    m: &Monomial,
    b: &[(Monomial, Rat)],
    skip_lead: bool,
) -> Vec<(Monomial, Rat)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut ai = a.into_iter();
    let mut bi = b.iter();
    if skip_lead {
        ai.next();
        bi.next();
    }
    let mut next_a = ai.next();
    let mut next_b = bi.next().map(|(t, k)| (t.mul(m), -(k * c)));
    loop {
        match (next_a.take(), next_b.take()) {
            (Some(x), Some(y)) => match order.cmp(&x.0, &y.0) {
                Ordering::Greater => {
                    out.push(x);
                    next_a = ai.next();
                    next_b = Some(y);
                }
                Ordering::Less => {
                    out.push(y);
                    next_a = Some(x);
                    next_b = bi.next().map(|(t, k)| (t.mul(m), -(k * c)));
                }
                Ordering::Equal => {
                    let s = x.1 + y.1;
                    if !s.is_zero() {
                        out.push((x.0, s));
                    }
                    next_a = ai.next();
                    next_b = bi.next().map(|(t, k)| (t.mul(m), -(k * c)));
                }
            },
            (Some(x), None) => {
                out.push(x);
                out.extend(ai);
                break;
            }
            (None, Some(y)) => {
                out.push(y);
                out.extend(bi.map(|(t, k)| (t.mul(m), -(k * c))));
                break;
            }
            (None, None) => break,
        }
    }
    out
}

/// Full normal form of `f` modulo monic divisors (complete reduction of all
/// terms, first divisor wins).
pub(crate) fn normal_form(ring: &RingRef, f: &MPoly, divisors: &[Divisor<'_>]) -> MPoly {
    let order = ring.order();
    let mut p: Vec<(Monomial, Rat)> = f.terms().to_vec();
    let mut rem: Vec<(Monomial, Rat)> = Vec::new();
    // `p` is kept with its current leading term at index 0.
    while !p.is_empty() {
        match find_divisor(divisors, &p[0].0) {
            Some(k) => {
                let d = &divisors[k];
                let q = d.lead.quotient_of(&p[0].0);
                let c = p[0].1.clone();
                p = sub_mul_owned(order, p, &c, &q, d.poly.terms(), true);
            }
            None => {
                // Move the irreducible head to the remainder.
                let mut it = p.into_iter();
                rem.push(it.next().unwrap());
                p = it.collect();
            }
        }
    }
    MPoly::from_sorted(ring, rem)
}

/// Reduces only the leading term until it is irreducible.
pub(crate) fn top_reduce(ring: &RingRef, f: MPoly, divisors: &[Divisor<'_>]) -> MPoly {
    let order = ring.order();
    let mut p = f.into_terms();
    while let Some(head) = p.first() {
        let Some(k) = find_divisor(divisors, &head.0) else { break };
        let d = &divisors[k];
        let q = d.lead.quotient_of(&head.0);
        let c = head.1.clone();
        p = sub_mul_owned(order, p, &c, &q, d.poly.terms(), true);
    }
    MPoly::from_sorted(ring, p)
}
