//! Elements of `S ⊗ Λg` with `S = k[x, y]`: sparse maps from strictly
//! increasing basis-index subsets to polynomials.

use super::CommutingError;
use crate::poly::{same_ring, GVec, MPoly, RingRef};
use crate::rational::{rat, Rat};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtElem {
    ring: RingRef,
    dim: usize,
    terms: BTreeMap<Vec<usize>, MPoly>,
}

/// Sign of `v_a ∧ v_b` relative to the sorted union, or `None` when the
/// subsets meet.
fn merge_sign(a: &[usize], b: &[usize]) -> Option<(Vec<usize>, bool)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let mut inversions = 0usize;
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i] < b[j]) {
            out.push(a[i]);
            i += 1;
        } else if i == a.len() || b[j] < a[i] {
            inversions += a.len() - i;
            out.push(b[j]);
            j += 1;
        } else {
            return None;
        }
    }
    Some((out, inversions % 2 == 1))
}

impl ExtElem {
    pub fn zero(ring: &RingRef, dim: usize) -> Self {
        ExtElem {
            ring: ring.clone(),
            dim,
            terms: BTreeMap::new(),
        }
    }

    /// `coeff · v_{k1} ∧ ... ∧ v_{kj}` for strictly increasing `key`.
    pub fn monomial(dim: usize, key: &[usize], coeff: MPoly) -> Result<Self, CommutingError> {
        if key.windows(2).any(|w| w[0] >= w[1]) || key.last().is_some_and(|&k| k >= dim) {
            return Err(CommutingError::BadKey(key.to_vec()));
        }
        let mut e = ExtElem::zero(coeff.ring(), dim);
        if !coeff.is_zero() {
            e.terms.insert(key.to_vec(), coeff);
        }
        Ok(e)
    }

    /// The constant wedge `v_{k1} ∧ ... ∧ v_{kj}`.
    pub fn basis(ring: &RingRef, dim: usize, key: &[usize]) -> Result<Self, CommutingError> {
        ExtElem::monomial(dim, key, MPoly::one(ring))
    }

    /// `Σ_k f_k v_k`, wedge degree 1.
    pub fn from_gvec(v: &GVec) -> Self {
        let mut e = ExtElem::zero(v.ring(), v.dim());
        for (k, f) in v.entries().iter().enumerate() {
            if !f.is_zero() {
                e.terms.insert(vec![k], f.clone());
            }
        }
        e
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> &BTreeMap<Vec<usize>, MPoly> {
        &self.terms
    }

    pub fn coeff(&self, key: &[usize]) -> Option<&MPoly> {
        self.terms.get(key)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The common key size; `None` for zero or mixed-degree elements.
    pub fn degree(&self) -> Option<usize> {
        let mut sizes = self.terms.keys().map(Vec::len);
        let first = sizes.next()?;
        sizes.all(|s| s == first).then_some(first)
    }

    fn check(&self, other: &ExtElem) -> Result<(), CommutingError> {
        if !same_ring(&self.ring, &other.ring) || self.dim != other.dim {
            return Err(CommutingError::RingMismatch);
        }
        Ok(())
    }

    pub(crate) fn accumulate(&mut self, key: Vec<usize>, f: MPoly) {
        if f.is_zero() {
            return;
        }
        match self.terms.remove(&key) {
            Some(old) => {
                let s = &old + &f;
                if !s.is_zero() {
                    self.terms.insert(key, s);
                }
            }
            None => {
                self.terms.insert(key, f);
            }
        }
    }

    pub fn try_add(&self, other: &ExtElem) -> Result<ExtElem, CommutingError> {
        self.check(other)?;
        let mut out = self.clone();
        for (k, f) in &other.terms {
            out.accumulate(k.clone(), f.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &ExtElem) -> Result<ExtElem, CommutingError> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> ExtElem {
        self.scale(&rat(-1))
    }

    pub fn scale(&self, c: &Rat) -> ExtElem {
        let mut out = ExtElem::zero(&self.ring, self.dim);
        for (k, f) in &self.terms {
            out.accumulate(k.clone(), f.scale(c));
        }
        out
    }

    pub fn mul_poly(&self, p: &MPoly) -> Result<ExtElem, CommutingError> {
        if !same_ring(&self.ring, p.ring()) {
            return Err(CommutingError::RingMismatch);
        }
        let mut out = ExtElem::zero(&self.ring, self.dim);
        for (k, f) in &self.terms {
            out.accumulate(k.clone(), f * p);
        }
        Ok(out)
    }

    pub fn wedge(&self, other: &ExtElem) -> Result<ExtElem, CommutingError> {
        self.check(other)?;
        let mut out = ExtElem::zero(&self.ring, self.dim);
        for (a, f) in &self.terms {
            for (b, g) in &other.terms {
                if let Some((key, odd)) = merge_sign(a, b) {
                    let prod = f * g;
                    out.accumulate(key, if odd { -prod } else { prod });
                }
            }
        }
        Ok(out)
    }

    /// Coefficients evaluated at `point`, as constant polynomials.
    pub fn evaluate(&self, point: &[Rat]) -> Result<ExtElem, CommutingError> {
        let mut out = ExtElem::zero(&self.ring, self.dim);
        for (k, f) in &self.terms {
            out.accumulate(k.clone(), MPoly::constant(&self.ring, f.eval(point)?));
        }
        Ok(out)
    }

    /// Constant coefficients in the coordinates `keys`; `None` when some
    /// coefficient is not constant or some key is missing from `keys`.
    pub fn coordinates(&self, keys: &[Vec<usize>]) -> Option<Vec<Rat>> {
        let mut out = vec![rat(0); keys.len()];
        for (k, f) in &self.terms {
            if !f.is_constant() {
                return None;
            }
            let pos = keys.iter().position(|x| x == k)?;
            out[pos] = f.constant_term();
        }
        Some(out)
    }
}

impl fmt::Display for ExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (k, p)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            let key: Vec<String> = k.iter().map(usize::to_string).collect();
            write!(f, "({p})*[{}]", key.join(","))?;
        }
        Ok(())
    }
}

/// All strictly increasing subsets of `0..n` of size `k`.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{MonomialOrder, Ring};

    #[test]
    fn merge_signs() {
        assert_eq!(merge_sign(&[0, 2], &[1]), Some((vec![0, 1, 2], true)));
        assert_eq!(merge_sign(&[1], &[0, 2]), Some((vec![0, 1, 2], true)));
        assert_eq!(merge_sign(&[1, 2], &[0]), Some((vec![0, 1, 2], false)));
        assert_eq!(merge_sign(&[0], &[0]), None);
        assert_eq!(merge_sign(&[], &[3]), Some((vec![3], false)));
    }

    #[test]
    fn wedge_is_graded_commutative() {
        let r = Ring::new(["a", "b"], MonomialOrder::DegRevLex);
        let a = ExtElem::monomial(4, &[0], MPoly::var(&r, 0)).unwrap();
        let b = ExtElem::monomial(4, &[1, 3], MPoly::var(&r, 1)).unwrap();
        let c = ExtElem::monomial(4, &[2], MPoly::constant(&r, rat(2))).unwrap();
        assert_eq!(a.wedge(&b).unwrap(), b.wedge(&a).unwrap());
        assert_eq!(a.wedge(&c).unwrap(), c.wedge(&a).unwrap().neg());
        assert!(a.wedge(&a).unwrap().is_zero());
        let abc = a.wedge(&b).unwrap().wedge(&c).unwrap();
        assert_eq!(abc.degree(), Some(4));
        assert_eq!(abc, a.wedge(&b.wedge(&c).unwrap()).unwrap());
        assert!(ExtElem::basis(&r, 4, &[1, 0]).is_err());
        assert!(ExtElem::basis(&r, 4, &[4]).is_err());
    }

    #[test]
    fn subset_counts() {
        assert_eq!(subsets(8, 5).len(), 56);
        assert_eq!(subsets(3, 0), vec![Vec::<usize>::new()]);
        assert!(subsets(2, 3).is_empty());
    }
}
