//! Sample points and an exact membership test for `Ω_g` that does not go
//! through `V_{x,y}`.
//!
//! `(x, y) ∈ Ω_g` when `x, y` span a plane whose nonzero elements are all
//! regular (over the algebraic closure). For `sl_n` an element `z` is regular
//! iff it is cyclic, i.e. `I, z, ..., z^{n-1}` are linearly independent. The
//! plane is covered by `x` and the line `y + a x`, so membership reduces to
//! `x` cyclic plus the maximal minors of `[vec I, vec z(a), ..., vec z(a)^{n-1}]`
//! having no common root in `a`: their gcd over `Q[a]` is a constant.

use crate::liealg::{CoeffVector, LieAlgebraData};
use crate::linalg::RatMatrix;
use crate::rational::{rat, Rat};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanePair {
    pub x: CoeffVector,
    pub y: CoeffVector,
}

impl PlanePair {
    pub fn new(x: CoeffVector, y: CoeffVector) -> Self {
        PlanePair { x, y }
    }

    /// `x` followed by `y`: a point of `g × g` in `k[x, y]` coordinates.
    pub fn concat(&self) -> Vec<Rat> {
        self.x.iter().chain(&self.y).cloned().collect()
    }

    pub fn is_independent(&self) -> bool {
        RatMatrix::from_rows(vec![self.x.clone(), self.y.clone()]).rank() == 2
    }

    /// Compact text `[x0,x1,...;y0,y1,...]`.
    pub fn label(&self) -> String {
        let join = |v: &[Rat]| v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",");
        format!("[{};{}]", join(&self.x), join(&self.y))
    }
}

/// `count` pairs with integer coordinates in `[-9, 9]` from a `ChaCha8`
/// stream seeded with `seed`.
pub fn sample_points(seed: u64, count: usize, dim: usize) -> Vec<PlanePair> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draw = |rng: &mut ChaCha8Rng| (0..dim).map(|_| rat(rng.gen_range(-9..=9))).collect::<Vec<_>>();
    (0..count)
        .map(|_| {
            let x = draw(&mut rng);
            let y = draw(&mut rng);
            PlanePair { x, y }
        })
        .collect()
}

/// Exact membership in `Ω_g` for algebras given in a defining
/// representation; `None` otherwise.
pub fn omega_oracle(l: &LieAlgebraData, pt: &PlanePair) -> Option<bool> {
    let n = l.defining_size()?;
    if !pt.is_independent() {
        return Some(false);
    }
    let xm = l.to_matrix(&pt.x)?;
    let ym = l.to_matrix(&pt.y)?;
    if !is_cyclic(&xm) {
        return Some(false);
    }
    // z(a) = Y + a X with entries in Q[a].
    let z: Vec<Vec<Upoly>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| Upoly::from(vec![ym[(r, c)].clone(), xm[(r, c)].clone()]))
                .collect()
        })
        .collect();
    let mut powers = vec![identity(n)];
    for _ in 1..n {
        let last = powers.last().unwrap();
        powers.push(mat_mul(last, &z));
    }
    // Rows of the n^2 x n matrix whose columns are vec z^k.
    let rows: Vec<Vec<Upoly>> = (0..n * n)
        .map(|idx| powers.iter().map(|p| p[idx / n][idx % n].clone()).collect())
        .collect();
    let mut g = Upoly::zero();
    for choice in combinations(n * n, n) {
        let sub: Vec<Vec<Upoly>> = choice.iter().map(|&r| rows[r].clone()).collect();
        let d = udet(&sub);
        g = g.gcd(&d);
        if g.degree() == Some(0) {
            return Some(true);
        }
    }
    Some(g.degree() == Some(0))
}

fn is_cyclic(m: &RatMatrix) -> bool {
    let n = m.rows();
    let mut p = RatMatrix::identity(n);
    let mut rows = Vec::with_capacity(n);
    for _ in 0..n {
        rows.push((0..n * n).map(|i| p[(i / n, i % n)].clone()).collect());
        p = p.mul(m);
    }
    RatMatrix::from_rows(rows).rank() == n
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
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
    rec(0, n, k, &mut cur, &mut out);
    out
}

fn identity(n: usize) -> Vec<Vec<Upoly>> {
    (0..n)
        .map(|r| (0..n).map(|c| if r == c { Upoly::one() } else { Upoly::zero() }).collect())
        .collect()
}

fn mat_mul(a: &[Vec<Upoly>], b: &[Vec<Upoly>]) -> Vec<Vec<Upoly>> {
    let n = a.len();
    (0..n)
        .map(|r| {
            (0..n)
                .map(|c| (0..n).fold(Upoly::zero(), |acc, k| acc.add(&a[r][k].mul(&b[k][c]))))
                .collect()
        })
        .collect()
}

fn udet(m: &[Vec<Upoly>]) -> Upoly {
    if m.len() == 1 {
        return m[0][0].clone();
    }
    let mut acc = Upoly::zero();
    for c in 0..m.len() {
        if m[0][c].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Upoly>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, p)| p.clone()).collect())
            .collect();
        let t = m[0][c].mul(&udet(&minor));
        acc = if c % 2 == 0 { acc.add(&t) } else { acc.sub(&t) };
    }
    acc
}

/// Dense univariate polynomial over `Q`, coefficients from degree 0 up, no
/// trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Upoly(Vec<Rat>);

impl From<Vec<Rat>> for Upoly {
    fn from(mut c: Vec<Rat>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        Upoly(c)
    }
}

impl Upoly {
    fn zero() -> Self {
        Upoly(Vec::new())
    }

    fn one() -> Self {
        Upoly(vec![Rat::one()])
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    fn add(&self, o: &Upoly) -> Upoly {
        let n = self.0.len().max(o.0.len());
        let z = Rat::zero();
        Upoly::from((0..n).map(|i| self.0.get(i).unwrap_or(&z) + o.0.get(i).unwrap_or(&z)).collect::<Vec<_>>())
    }

    fn sub(&self, o: &Upoly) -> Upoly {
        self.add(&Upoly(o.0.iter().map(|c| -c).collect()))
    }

    fn mul(&self, o: &Upoly) -> Upoly {
        if self.is_zero() || o.is_zero() {
            return Upoly::zero();
        }
        let mut out = vec![Rat::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Upoly::from(out)
    }

    fn rem(&self, d: &Upoly) -> Upoly {
        let mut r = self.0.clone();
        let dl = d.0.last().expect("nonzero divisor");
        while r.len() >= d.0.len() {
            let shift = r.len() - d.0.len();
            let q = r.last().unwrap() / dl;
            for (i, c) in d.0.iter().enumerate() {
                r[shift + i] -= &q * c;
            }
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        Upoly::from(r)
    }

    fn gcd(&self, o: &Upoly) -> Upoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a
    }
}
