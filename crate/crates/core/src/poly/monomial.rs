use smallvec::SmallVec;
use std::cmp::Ordering;

/// Exponent vector. Exponents are `u8`; products that would exceed 255 in a
/// single variable are reported through [`Monomial::checked_mul`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: SmallVec<[u8; 24]>,
    deg: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    /// Graded reverse lexicographic, variable 0 largest.
    DegRevLex,
    /// Pure lexicographic, variable 0 largest.
    Lex,
}

impl MonomialOrder {
    pub fn name(self) -> &'static str {
        match self {
            MonomialOrder::DegRevLex => "degrevlex",
            MonomialOrder::Lex => "lex",
        }
    }

    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::DegRevLex => a.deg.cmp(&b.deg).then_with(|| {
                for (x, y) in a.exps.iter().zip(&b.exps).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
        }
    }
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
            deg: 0,
        }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = 1;
        m.deg = 1;
        m
    }

    pub fn from_exponents(exps: &[u8]) -> Self {
        Monomial {
            exps: SmallVec::from_slice(exps),
            deg: exps.iter().map(|&e| e as u32).sum(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u8] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u8 {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn checked_mul(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = self.exps.clone();
        for (e, &o) in exps.iter_mut().zip(&other.exps) {
            *e = e.checked_add(o)?;
        }
        Some(Monomial {
            exps,
            deg: self.deg + other.deg,
        })
    }

    /// Product; panics on exponent overflow.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.checked_mul(other).expect("monomial exponent overflow (>255)")
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller guarantees divisibility.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial {
            exps: other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect(),
            deg: other.deg - self.deg,
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: SmallVec<[u8; 24]> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.max(b))
            .collect();
        let deg = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, deg }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Variable support as a bit set (variables beyond 128 are not supported).
    pub fn support(&self) -> u128 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u128, |acc, (i, _)| acc | (1u128 << i))
    }

    pub(crate) fn set_exponent(&mut self, i: usize, e: u8) {
        self.deg = self.deg - self.exps[i] as u32 + e as u32;
        self.exps[i] = e;
    }

    /// Degree restricted to a set of variable indices.
    pub fn degree_in(&self, vars: std::ops::Range<usize>) -> u32 {
        self.exps[vars].iter().map(|&e| e as u32).sum()
    }

    /// Re-embeds into a ring with `nvars` variables, variable `i` going to
    /// `map[i]`.
    pub fn remap(&self, nvars: usize, map: &[usize]) -> Monomial {
        let mut m = Monomial::one(nvars);
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                let t = map[i];
                let v = m.exps[t] + e;
                m.set_exponent(t, v);
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(e: &[u8]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn degrevlex_orders_by_degree_then_reverse_lex() {
        let o = MonomialOrder::DegRevLex;
        // x0^2 > x0 x1 > x1^2 > x0 x2 > x1 x2 > x2^2 in three variables
        let seq = [
            mono(&[2, 0, 0]),
            mono(&[1, 1, 0]),
            mono(&[0, 2, 0]),
            mono(&[1, 0, 1]),
            mono(&[0, 1, 1]),
            mono(&[0, 0, 2]),
        ];
        for w in seq.windows(2) {
            assert_eq!(o.cmp(&w[0], &w[1]), Ordering::Greater);
        }
        assert_eq!(o.cmp(&mono(&[0, 0, 1]), &mono(&[1, 1, 0])), Ordering::Less);
    }

    #[test]
    fn lex_is_lexicographic() {
        let o = MonomialOrder::Lex;
        assert_eq!(o.cmp(&mono(&[1, 0, 0]), &mono(&[0, 5, 5])), Ordering::Greater);
    }

    #[test]
    fn overflow_is_detected() {
        let a = mono(&[200, 0]);
        assert!(a.checked_mul(&a).is_none());
        assert_eq!(a.checked_mul(&mono(&[55, 1])).unwrap().degree(), 256);
    }

    #[test]
    fn divisibility_and_lcm() {
        let a = mono(&[1, 2, 0]);
        let b = mono(&[2, 2, 1]);
        assert!(a.divides(&b));
        assert_eq!(a.quotient_of(&b), mono(&[1, 0, 1]));
        assert_eq!(a.lcm(&mono(&[0, 3, 1])), mono(&[1, 3, 1]));
        assert!(mono(&[1, 0, 0]).coprime(&mono(&[0, 1, 1])));
    }
}
