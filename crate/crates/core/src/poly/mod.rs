//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! A [`Ring`] fixes the variable names and the monomial order. Every
//! [`MPoly`] keeps its terms sorted in decreasing order with no zero
//! coefficients and no repeated monomials, so structural equality is
//! polynomial equality.

mod gvec;
mod monomial;
mod shift;
mod text;

pub use gvec::GVec;
pub use monomial::{Monomial, MonomialOrder};
pub use shift::shift_expand;

use crate::rational::Rat;
use num_traits::{One, Zero};
use std::cmp::Ordering;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("polynomials belong to different rings")]
    RingMismatch,
    #[error("variable index {index} out of range for a ring with {nvars} variables")]
    VarIndex { index: usize, nvars: usize },
    #[error("point has {got} coordinates, ring has {nvars} variables")]
    PointLength { got: usize, nvars: usize },
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("polynomial of degree {degree} exceeds the bound {bound}")]
    DegreeBound { degree: u32, bound: u32 },
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    names: Vec<String>,
    order: MonomialOrder,
}

pub type RingRef = Arc<Ring>;

impl Ring {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>, order: MonomialOrder) -> RingRef {
        Arc::new(Ring {
            names: names.into_iter().map(Into::into).collect(),
            order,
        })
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn with_order(&self, order: MonomialOrder) -> RingRef {
        Arc::new(Ring {
            names: self.names.clone(),
            order,
        })
    }

    /// Same ring with one extra variable appended (smallest in the order).
    pub fn extended(&self, name: &str) -> RingRef {
        let mut names = self.names.clone();
        names.push(name.to_string());
        Arc::new(Ring {
            names,
            order: self.order,
        })
    }
}

pub(crate) fn same_ring(a: &RingRef, b: &RingRef) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

#[derive(Clone, Debug)]
pub struct MPoly {
    ring: RingRef,
    terms: Vec<(Monomial, Rat)>,
}

impl PartialEq for MPoly {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for MPoly {}

impl MPoly {
    pub fn zero(ring: &RingRef) -> Self {
        MPoly {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &RingRef, c: Rat) -> Self {
        Self::from_term(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn one(ring: &RingRef) -> Self {
        Self::constant(ring, Rat::one())
    }

    pub fn var(ring: &RingRef, i: usize) -> Self {
        Self::from_term(ring, Monomial::var(ring.nvars(), i), Rat::one())
    }

    pub fn from_term(ring: &RingRef, m: Monomial, c: Rat) -> Self {
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        MPoly {
            ring: ring.clone(),
            terms,
        }
    }

    /// Canonicalizes an arbitrary list of terms: sorts, merges duplicates,
    /// drops zeros.
    pub fn from_terms(ring: &RingRef, mut terms: Vec<(Monomial, Rat)>) -> Self {
        let order = ring.order();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, Rat)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => {
                    if let Some((_, lc)) = out.last() {
                        if lc.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if out.last().is_some_and(|(_, c)| c.is_zero()) {
            out.pop();
        }
        MPoly { ring: ring.clone(), terms: out }
    }

    /// Wraps terms already in canonical order. Debug builds verify.
    pub(crate) fn from_sorted(ring: &RingRef, terms: Vec<(Monomial, Rat)>) -> Self {
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.order().cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        MPoly { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Rat)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Rat)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Value of the constant term.
    pub fn constant_term(&self) -> Rat {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => Rat::zero(),
        }
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rat)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coeff(&self) -> Option<&Rat> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|(t, _)| t.degree() == m.degree()),
        }
    }

    /// Set of `(deg in vars[a], deg in vars[b])` pairs appearing.
    pub fn bidegrees(&self, first: std::ops::Range<usize>, second: std::ops::Range<usize>) -> Vec<(u32, u32)> {
        let mut v: Vec<(u32, u32)> = self
            .terms
            .iter()
            .map(|(m, _)| (m.degree_in(first.clone()), m.degree_in(second.clone())))
            .collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn monic(&self) -> MPoly {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&c.recip()),
        }
    }

    pub fn scale(&self, c: &Rat) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(&self.ring);
        }
        MPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// `c * m * self`.
    pub fn mul_term(&self, m: &Monomial, c: &Rat) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(&self.ring);
        }
        MPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect(),
        }
    }

    fn check_ring(&self, other: &MPoly) -> Result<(), PolyError> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(PolyError::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &MPoly) -> Result<MPoly, PolyError> {
        self.check_ring(other)?;
        Ok(self.merge(other, None))
    }

    pub fn try_sub(&self, other: &MPoly) -> Result<MPoly, PolyError> {
        self.check_ring(other)?;
        Ok(self.merge(other, Some(&-Rat::one())))
    }

    pub fn try_mul(&self, other: &MPoly) -> Result<MPoly, PolyError> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(MPoly::zero(&self.ring));
        }
        let (small, big) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        if small.len() == 1 {
            let (m, c) = &small.terms[0];
            return Ok(big.mul_term(m, c));
        }
        let mut terms = Vec::with_capacity(small.len() * big.len());
        for (m1, c1) in &small.terms {
            for (m2, c2) in &big.terms {
                terms.push((m1.checked_mul(m2).ok_or(PolyError::ExponentOverflow)?, c1 * c2));
            }
        }
        Ok(MPoly::from_terms(&self.ring, terms))
    }

    pub fn pow(&self, e: u32) -> Result<MPoly, PolyError> {
        if let Some(d) = self.total_degree() {
            if (d as u64) * (e as u64) > u8::MAX as u64 * self.ring.nvars().max(1) as u64 {
                return Err(PolyError::ExponentOverflow);
            }
        }
        let mut result = MPoly::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.try_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.try_mul(&base)?;
            }
        }
        Ok(result)
    }

    /// `self + scale * other`, merging sorted term lists.
    fn merge(&self, other: &MPoly, scale: Option<&Rat>) -> MPoly {
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let scaled = |c: &Rat| match scale {
            Some(s) => c * s,
            None => c.clone(),
        };
        while i < a.len() && j < b.len() {
            match order.cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0.clone(), scaled(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &a[i].1 + scaled(&b[j].1);
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), scaled(c))));
        MPoly { ring: self.ring.clone(), terms: out }
    }

    /// `self - c * m * other` in one pass.
    pub fn sub_mul_term(&self, c: &Rat, m: &Monomial, other: &MPoly) -> MPoly {
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (a, b) = (&self.terms, &other.terms);
        let (mut i, mut j) = (0, 0);
        let mut pending: Option<(Monomial, Rat)> = None;
        let next_b = |j: usize| -> (Monomial, Rat) { (b[j].0.mul(m), -(&b[j].1 * c)) };
        while i < a.len() && j < b.len() {
            let bt = pending.take().unwrap_or_else(|| next_b(j));
            match order.cmp(&a[i].0, &bt.0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                    pending = Some(bt);
                }
                Ordering::Less => {
                    out.push(bt);
                    j += 1;
                }
                Ordering::Equal => {
                    let s = &a[i].1 + bt.1;
                    if !s.is_zero() {
                        out.push((bt.0, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        if let Some(bt) = pending {
            out.push(bt);
            j += 1;
        }
        out.extend(a[i..].iter().cloned());
        while j < b.len() {
            out.push(next_b(j));
            j += 1;
        }
        MPoly { ring: self.ring.clone(), terms: out }
    }

    pub fn partial(&self, var: usize) -> Result<MPoly, PolyError> {
        let n = self.ring.nvars();
        if var >= n {
            return Err(PolyError::VarIndex { index: var, nvars: n });
        }
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exponent(var) > 0)
            .map(|(m, c)| {
                let e = m.exponent(var);
                let mut dm = m.clone();
                dm.set_exponent(var, e - 1);
                (dm, c * Rat::from_integer(e.into()))
            })
            .collect();
        // Differentiation can reorder terms under degrevlex, so re-sort.
        Ok(MPoly::from_terms(&self.ring, terms))
    }

    pub fn eval(&self, point: &[Rat]) -> Result<Rat, PolyError> {
        let n = self.ring.nvars();
        if point.len() != n {
            return Err(PolyError::PointLength { got: point.len(), nvars: n });
        }
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    if point[i].is_zero() {
                        t = Rat::zero();
                        break;
                    }
                    t *= num_traits::pow(point[i].clone(), e as usize);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Ring morphism into `target` sending variable `i` to `images[i]`.
    pub fn map_ring(&self, target: &RingRef, images: &[MPoly]) -> Result<MPoly, PolyError> {
        let n = self.ring.nvars();
        if images.len() != n {
            return Err(PolyError::PointLength { got: images.len(), nvars: n });
        }
        if images.iter().any(|p| !same_ring(&p.ring, target)) {
            return Err(PolyError::RingMismatch);
        }
        let mut powers: Vec<Vec<MPoly>> = vec![vec![MPoly::one(target)]; n];
        let mut acc = MPoly::zero(target);
        for (m, c) in &self.terms {
            let mut t = MPoly::constant(target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().try_mul(&images[i])?;
                    powers[i].push(next);
                }
                t = t.try_mul(&powers[i][e as usize])?;
            }
            acc = acc.try_add(&t)?;
        }
        Ok(acc)
    }

    /// Substitutes the listed variables by polynomials of the same ring.
    pub fn substitute(&self, assignments: &[(usize, MPoly)]) -> Result<MPoly, PolyError> {
        let n = self.ring.nvars();
        let mut images: Vec<MPoly> = (0..n).map(|i| MPoly::var(&self.ring, i)).collect();
        for (v, p) in assignments {
            if *v >= n {
                return Err(PolyError::VarIndex { index: *v, nvars: n });
            }
            self.check_ring(p)?;
            images[*v] = p.clone();
        }
        self.map_ring(&self.ring, &images)
    }

    /// Moves the polynomial into `target`, sending variable `i` to variable
    /// `map[i]`. No arithmetic is involved beyond re-sorting.
    pub fn embed(&self, target: &RingRef, map: &[usize]) -> MPoly {
        assert_eq!(map.len(), self.ring.nvars());
        let n = target.nvars();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.remap(n, map), c.clone()))
            .collect();
        MPoly::from_terms(target, terms)
    }

    /// Same polynomial viewed in a ring with identical variables but another
    /// monomial order.
    pub fn reorder(&self, target: &RingRef) -> MPoly {
        assert_eq!(target.names(), self.ring.names());
        MPoly::from_terms(target, self.terms.clone())
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $imp:ident) => {
        impl std::ops::$tr<&MPoly> for &MPoly {
            type Output = MPoly;
            fn $method(self, rhs: &MPoly) -> MPoly {
                self.$imp(rhs).expect(concat!("MPoly ", stringify!($method)))
            }
        }
        impl std::ops::$tr<MPoly> for MPoly {
            type Output = MPoly;
            fn $method(self, rhs: MPoly) -> MPoly {
                (&self).$imp(&rhs).expect(concat!("MPoly ", stringify!($method)))
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl std::ops::Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl std::ops::Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    fn ring2() -> RingRef {
        Ring::new(["x1", "y1"], MonomialOrder::DegRevLex)
    }

    fn p(r: &RingRef, s: &str) -> MPoly {
        MPoly::parse(r, s).unwrap()
    }

    #[test]
    fn ring_axioms_examples() {
        let r = ring2();
        let a = p(&r, "x1 + y1");
        let b = p(&r, "x1 - y1");
        assert_eq!(&a * &b, p(&r, "x1^2 - y1^2"));
        assert!((&a * &MPoly::zero(&r)).is_zero());
        let c = p(&r, "x1 + 1");
        assert_eq!(c.pow(3).unwrap(), p(&r, "x1^3 + 3*x1^2 + 3*x1 + 1"));
        assert!((&a + &(-&a)).is_zero());
        assert_eq!((&a + &(-&a)).terms().len(), 0);
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let a = MPoly::var(&ring2(), 0);
        let other = Ring::new(["x1", "z"], MonomialOrder::DegRevLex);
        let b = MPoly::var(&other, 0);
        assert_eq!(a.try_add(&b), Err(PolyError::RingMismatch));
        assert_eq!(a.try_mul(&b), Err(PolyError::RingMismatch));
        // Structurally equal rings are compatible even if allocated twice.
        assert!(a.try_add(&MPoly::var(&ring2(), 1)).is_ok());
    }

    #[test]
    fn calculus_and_evaluation() {
        let r = ring2();
        assert_eq!(p(&r, "x1^2*y1").partial(0).unwrap(), p(&r, "2*x1*y1"));
        assert_eq!(p(&r, "x1^2 + y1").eval(&[rat(2), rat(3)]).unwrap(), rat(7));
        assert_eq!(
            p(&r, "x1").partial(5),
            Err(PolyError::VarIndex { index: 5, nvars: 2 })
        );
        assert_eq!(
            p(&r, "x1").eval(&[rat(1)]),
            Err(PolyError::PointLength { got: 1, nvars: 2 })
        );
    }

    #[test]
    fn substitution() {
        let r = ring2();
        let f = p(&r, "x1^2 + y1");
        let g = f.substitute(&[(0, p(&r, "x1 + y1"))]).unwrap();
        assert_eq!(g, p(&r, "x1^2 + 2*x1*y1 + y1^2 + y1"));
    }

    #[test]
    fn sub_mul_term_matches_generic_arithmetic() {
        let r = ring2();
        let f = p(&r, "x1^3 - 2*x1*y1 + 7");
        let g = p(&r, "x1^2 + y1 - 1/3");
        let m = Monomial::from_exponents(&[1, 0]);
        let c = ratio(5, 2);
        let direct = &f - &g.mul_term(&m, &c);
        assert_eq!(f.sub_mul_term(&c, &m, &g), direct);
        assert!(f.sub_mul_term(&Rat::one(), &Monomial::one(2), &f).is_zero());
    }
}
