//! Structure data of small semisimple Lie algebras over `Q`.
//!
//! An algebra is a basis `v_0, ..., v_{N-1}` with sparse structure constants
//! `[v_i, v_j] = Σ_k c[i][j][k] v_k`, an invariant nondegenerate symmetric
//! form `kappa`, the rank and the degrees of the basic invariants. Elements
//! are coordinate vectors in that basis.
//!
//! Basis conventions for the shipped algebras:
//!
//! | algebra | basis order |
//! |---------|-------------|
//! | `sl2`   | `e, h, f` with `e = E12`, `h = E11 - E22`, `f = E21` |
//! | `sl3`   | `e12, e13, e23, h1, h2, e21, e31, e32` with `h_k = E_kk - E_{k+1,k+1}` |
//!
//! `kappa` is the Killing form `tr(ad a ∘ ad b)`.

mod json;

pub use json::{load_json, parse_json, to_json};

use crate::linalg::RatMatrix;
use crate::poly::{GVec, MPoly, MonomialOrder, PolyError, Ring, RingRef};
use crate::rational::{rat, Rat};
use num_traits::{One, Zero};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LieError {
    #[error("unsupported algebra: sl{0} (only sl2 and sl3 ship)")]
    UnsupportedRank(usize),
    #[error("vector of length {got} for an algebra of dimension {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("{identity} violated: {detail}")]
    Invariant { identity: &'static str, detail: String },
    #[error("ad v is not nilpotent")]
    NotNilpotent,
    #[error("malformed algebra document: {0}")]
    Format(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

pub type CoeffVector = Vec<Rat>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebraData {
    name: String,
    labels: Vec<String>,
    /// `brackets[i * N + j]` lists the nonzero `(k, c[i][j][k])`, sorted by `k`.
    brackets: Vec<Vec<(usize, Rat)>>,
    kappa: RatMatrix,
    rank: usize,
    degrees: Vec<u32>,
    /// Basis matrices of the defining representation of `sl_n`.
    defining: Option<Vec<RatMatrix>>,
}

impl LieAlgebraData {
    /// Builds and validates an algebra from a list of nonzero structure
    /// constants `(i, j, k, c)`. Every invariant is checked; the first one
    /// that fails is named in the error.
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        constants: &[(usize, usize, usize, Rat)],
        kappa: RatMatrix,
        rank: usize,
        degrees: Vec<u32>,
    ) -> Result<Self, LieError> {
        let n = labels.len();
        let mut brackets = vec![Vec::new(); n * n];
        for (i, j, k, c) in constants {
            if *i >= n || *j >= n || *k >= n {
                return Err(LieError::Format(format!("index out of range in ({i},{j},{k})")));
            }
            let slot: &mut Vec<(usize, Rat)> = &mut brackets[i * n + j];
            if slot.iter().any(|(kk, _)| kk == k) {
                return Err(LieError::Format(format!("duplicate constant ({i},{j},{k})")));
            }
            if !c.is_zero() {
                slot.push((*k, c.clone()));
            }
        }
        for slot in &mut brackets {
            slot.sort_by_key(|(k, _)| *k);
        }
        let data = LieAlgebraData {
            name: name.into(),
            labels,
            brackets,
            kappa,
            rank,
            degrees,
            defining: None,
        };
        data.validate()?;
        Ok(data)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// The dimension `N`.
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.labels
    }

    pub fn kappa(&self) -> &RatMatrix {
        &self.kappa
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    /// `b = (N + r) / 2`, the dimension of a Borel subalgebra.
    pub fn b(&self) -> usize {
        (self.dim() + self.rank) / 2
    }

    /// `n = b - r`.
    pub fn n_small(&self) -> usize {
        self.b() - self.rank
    }

    /// Nonzero `(k, c[i][j][k])` of `[v_i, v_j]`.
    pub fn structure(&self, i: usize, j: usize) -> &[(usize, Rat)] {
        &self.brackets[i * self.dim() + j]
    }

    /// All nonzero structure constants, ordered by `(i, j, k)`.
    pub fn constants(&self) -> Vec<(usize, usize, usize, Rat)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for (k, c) in self.structure(i, j) {
                    out.push((i, j, *k, c.clone()));
                }
            }
        }
        out
    }

    pub fn basis_vector(&self, k: usize) -> CoeffVector {
        let mut v = vec![Rat::zero(); self.dim()];
        v[k] = Rat::one();
        v
    }

    pub fn basis_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    fn check_len(&self, v: &[Rat]) -> Result<(), LieError> {
        if v.len() != self.dim() {
            return Err(LieError::LengthMismatch {
                expected: self.dim(),
                got: v.len(),
            });
        }
        Ok(())
    }

    pub fn bracket(&self, x: &[Rat], y: &[Rat]) -> Result<CoeffVector, LieError> {
        self.check_len(x)?;
        self.check_len(y)?;
        let zero = Rat::zero();
        let mut out = vec![Rat::zero(); self.dim()];
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| **v != zero) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| **v != zero) {
                let s = xi * yj;
                for (k, c) in self.structure(i, j) {
                    out[*k] += &s * c;
                }
            }
        }
        Ok(out)
    }

    pub fn form(&self, x: &[Rat], y: &[Rat]) -> Result<Rat, LieError> {
        self.check_len(x)?;
        self.check_len(y)?;
        Ok(crate::linalg::dot(x, &self.kappa.mul_vec(y)))
    }

    /// Matrix of `ad x` acting on coordinate columns: `ad_matrix(x) * y = [x, y]`.
    pub fn ad_matrix(&self, x: &[Rat]) -> Result<RatMatrix, LieError> {
        self.check_len(x)?;
        let n = self.dim();
        let mut m = RatMatrix::zeros(n, n);
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for j in 0..n {
                for (k, c) in self.structure(i, j) {
                    m[(*k, j)] += xi * c;
                }
            }
        }
        Ok(m)
    }

    /// A basis of `g^x = ker ad x`.
    pub fn centralizer(&self, x: &[Rat]) -> Result<Vec<CoeffVector>, LieError> {
        Ok(self.ad_matrix(x)?.nullspace())
    }

    pub fn is_regular(&self, x: &[Rat]) -> Result<bool, LieError> {
        Ok(self.centralizer(x)?.len() == self.rank)
    }

    /// `exp(ad v)` for nilpotent `ad v`: a finite sum, exact over `Q`.
    pub fn exp_ad(&self, v: &[Rat]) -> Result<RatMatrix, LieError> {
        let ad = self.ad_matrix(v)?;
        let n = self.dim();
        let mut out = RatMatrix::identity(n);
        let mut power = RatMatrix::identity(n);
        let mut fact = Rat::one();
        for k in 1..=n {
            power = power.mul(&ad);
            if power.is_zero() {
                return Ok(out);
            }
            fact *= rat(k as i64);
            out = out.add(&power.scale(&(Rat::one() / &fact)));
        }
        if power.mul(&ad).is_zero() {
            Ok(out)
        } else {
            Err(LieError::NotNilpotent)
        }
    }

    /// Killing form `tr(ad x ∘ ad y)` computed from the structure constants.
    pub fn killing(&self, x: &[Rat], y: &[Rat]) -> Result<Rat, LieError> {
        Ok(self.ad_matrix(x)?.mul(&self.ad_matrix(y)?).trace())
    }

    /// Gram matrix of the Killing form in the basis.
    pub fn killing_matrix(&self) -> RatMatrix {
        let n = self.dim();
        let ads: Vec<RatMatrix> = (0..n).map(|i| self.ad_matrix(&self.basis_vector(i)).unwrap()).collect();
        let mut m = RatMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = ads[i].mul(&ads[j]).trace();
            }
        }
        m
    }

    /// `[x, y]` for polynomial-valued elements.
    pub fn bracket_gvec(&self, x: &GVec, y: &GVec) -> Result<GVec, LieError> {
        self.check_gvec(x)?;
        self.check_gvec(y)?;
        let ring = x.ring();
        let mut out = vec![MPoly::zero(ring); self.dim()];
        for (i, xi) in x.entries().iter().enumerate().filter(|(_, p)| !p.is_zero()) {
            for (j, yj) in y.entries().iter().enumerate().filter(|(_, p)| !p.is_zero()) {
                let s = xi.try_mul(yj)?;
                for (k, c) in self.structure(i, j) {
                    out[*k] = out[*k].try_add(&s.scale(c))?;
                }
            }
        }
        Ok(GVec::new(ring, out)?)
    }

    /// `⟨x, y⟩` for polynomial-valued elements.
    pub fn form_gvec(&self, x: &GVec, y: &GVec) -> Result<MPoly, LieError> {
        self.check_gvec(x)?;
        self.check_gvec(y)?;
        let n = self.dim();
        let mut acc = MPoly::zero(x.ring());
        for i in 0..n {
            if x.entry(i).is_zero() {
                continue;
            }
            for j in 0..n {
                let k = &self.kappa[(i, j)];
                if k.is_zero() || y.entry(j).is_zero() {
                    continue;
                }
                acc = acc.try_add(&x.entry(i).try_mul(y.entry(j))?.scale(k))?;
            }
        }
        Ok(acc)
    }

    /// `⟨v, y⟩` with `v` a constant element.
    pub fn pair_const(&self, v: &[Rat], y: &GVec) -> Result<MPoly, LieError> {
        self.check_len(v)?;
        self.check_gvec(y)?;
        let kv = self.kappa.transpose().mul_vec(v);
        let mut acc = MPoly::zero(y.ring());
        for (j, c) in kv.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            acc = acc.try_add(&y.entry(j).scale(c))?;
        }
        Ok(acc)
    }

    /// Applies a constant linear map (`N x N`, acting on coordinate columns)
    /// to a polynomial-valued element.
    pub fn apply_matrix(&self, m: &RatMatrix, v: &GVec) -> Result<GVec, LieError> {
        self.check_gvec(v)?;
        let ring = v.ring();
        let n = self.dim();
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let mut acc = MPoly::zero(ring);
            for j in 0..n {
                if !m[(i, j)].is_zero() {
                    acc = acc.try_add(&v.entry(j).scale(&m[(i, j)]))?;
                }
            }
            out.push(acc);
        }
        Ok(GVec::new(ring, out)?)
    }

    /// `k[x_v : v in basis]`, variables named `x<label>`.
    pub fn x_ring(&self) -> RingRef {
        Ring::new(self.labels.iter().map(|l| format!("x{l}")), MonomialOrder::DegRevLex)
    }

    /// `k[x, y]` on two copies of the basis: `x<label>` at index `k`,
    /// `y<label>` at index `N + k`.
    pub fn xy_ring(&self, order: MonomialOrder) -> RingRef {
        let names = self
            .labels
            .iter()
            .map(|l| format!("x{l}"))
            .chain(self.labels.iter().map(|l| format!("y{l}")));
        Ring::new(names, order)
    }

    /// The generic element `Σ z_{offset + k} v_k` of a polynomial ring.
    pub fn generic_element(&self, ring: &RingRef, offset: usize) -> GVec {
        let entries = (0..self.dim()).map(|k| MPoly::var(ring, offset + k)).collect();
        GVec::new(ring, entries).expect("ring is consistent")
    }

    fn check_gvec(&self, v: &GVec) -> Result<(), LieError> {
        if v.dim() != self.dim() {
            return Err(LieError::LengthMismatch {
                expected: self.dim(),
                got: v.dim(),
            });
        }
        Ok(())
    }

    /// Size `n` of the defining representation when the algebra is `sl_n`.
    pub fn defining_size(&self) -> Option<usize> {
        self.defining.as_ref().map(|d| d[0].rows())
    }

    pub fn defining_basis(&self) -> Option<&[RatMatrix]> {
        self.defining.as_deref()
    }

    /// The matrix `Σ x_k B_k` in the defining representation.
    pub fn to_matrix(&self, x: &[Rat]) -> Option<RatMatrix> {
        let basis = self.defining.as_ref()?;
        let n = basis[0].rows();
        let mut m = RatMatrix::zeros(n, n);
        for (xk, b) in x.iter().zip(basis) {
            if !xk.is_zero() {
                m = m.add(&b.scale(xk));
            }
        }
        Some(m)
    }

    /// Coordinates of a traceless matrix, `None` if it is outside the span.
    pub fn from_matrix(&self, m: &RatMatrix) -> Option<CoeffVector> {
        let basis = self.defining.as_ref()?;
        let n = basis[0].rows();
        let big_n = self.dim();
        // Solve [vec B_0 .. vec B_{N-1} | vec m] by row reduction.
        let mut aug = RatMatrix::zeros(n * n, big_n + 1);
        for (k, b) in basis.iter().enumerate() {
            for r in 0..n {
                for c in 0..n {
                    aug[(r * n + c, k)] = b[(r, c)].clone();
                }
            }
        }
        for r in 0..n {
            for c in 0..n {
                aug[(r * n + c, big_n)] = m[(r, c)].clone();
            }
        }
        let (red, pivots) = aug.rref();
        if pivots.contains(&big_n) {
            return None;
        }
        let mut x = vec![Rat::zero(); big_n];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = red[(row, big_n)].clone();
        }
        Some(x)
    }

    /// Checks every structural identity and returns the first violation.
    pub fn validate(&self) -> Result<(), LieError> {
        let n = self.dim();
        let fail = |identity: &'static str, detail: String| Err(LieError::Invariant { identity, detail });
        if n == 0 {
            return fail("nonzero dimension", "empty basis".into());
        }
        if self.kappa.rows() != n || self.kappa.cols() != n {
            return fail("form shape", format!("kappa is {}x{}", self.kappa.rows(), self.kappa.cols()));
        }
        for i in 0..n {
            for j in 0..n {
                let a = self.structure(i, j);
                let b = self.structure(j, i);
                let neg: Vec<(usize, Rat)> = b.iter().map(|(k, c)| (*k, -c)).collect();
                if a != neg.as_slice() {
                    return fail("antisymmetry", format!("[v{i}, v{j}] != -[v{j}, v{i}]"));
                }
            }
        }
        let basis: Vec<CoeffVector> = (0..n).map(|k| self.basis_vector(k)).collect();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let (a, b, c) = (&basis[i], &basis[j], &basis[k]);
                    let t1 = self.bracket(&self.bracket(a, b)?, c)?;
                    let t2 = self.bracket(&self.bracket(b, c)?, a)?;
                    let t3 = self.bracket(&self.bracket(c, a)?, b)?;
                    if t1.iter().zip(&t2).zip(&t3).any(|((p, q), r)| !(p + q + r).is_zero()) {
                        return fail("Jacobi identity", format!("basis triple ({i},{j},{k})"));
                    }
                }
            }
        }
        if self.kappa != self.kappa.transpose() {
            return fail("form symmetry", "kappa is not symmetric".into());
        }
        if self.kappa.determinant().is_zero() {
            return fail("form nondegeneracy", "det kappa = 0".into());
        }
        for (i, v) in basis.iter().enumerate() {
            let ad = self.ad_matrix(v)?;
            // ⟨[v_i, v_j], v_k⟩ + ⟨v_j, [v_i, v_k]⟩ = 0  <=>  ad^T K + K ad = 0.
            if !ad.transpose().mul(&self.kappa).add(&self.kappa.mul(&ad)).is_zero() {
                return fail("form invariance", format!("fails for ad v{i}"));
            }
        }
        if self.killing_matrix().determinant().is_zero() {
            return fail("semisimplicity (nondegenerate Killing form)", "Killing form is degenerate".into());
        }
        if self.degrees.len() != self.rank {
            return fail(
                "one degree per basic invariant",
                format!("{} degrees for rank {}", self.degrees.len(), self.rank),
            );
        }
        if self.degrees.windows(2).any(|w| w[0] > w[1]) || self.degrees.contains(&0) {
            return fail("positive nondecreasing degrees", format!("{:?}", self.degrees));
        }
        if !(n + self.rank).is_multiple_of(2) || self.rank > n {
            return fail("N = 2b - r", format!("N = {n}, r = {}", self.rank));
        }
        let sum: u32 = self.degrees.iter().sum();
        if sum as usize != self.b() {
            return fail("sum of degrees = b", format!("{sum} != {}", self.b()));
        }
        Ok(())
    }
}

impl fmt::Display for LieAlgebraData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} (N = {}, rank {}, b = {}, degrees {:?})",
            self.name,
            self.dim(),
            self.rank,
            self.b(),
            self.degrees
        )
    }
}

/// Elementary matrix `E_rc` of size `n`.
fn elementary(n: usize, r: usize, c: usize) -> RatMatrix {
    let mut m = RatMatrix::zeros(n, n);
    m[(r, c)] = Rat::one();
    m
}

/// `sl_n` for `n ∈ {2, 3}` in the basis documented at the top of the module.
pub fn make_sl(n: usize) -> Result<LieAlgebraData, LieError> {
    if !(2..=3).contains(&n) {
        return Err(LieError::UnsupportedRank(n));
    }
    let mut labels = Vec::new();
    let mut mats = Vec::new();
    let named = |i: usize, j: usize| if n == 2 { "e".to_string() } else { format!("e{}{}", i + 1, j + 1) };
    for i in 0..n {
        for j in i + 1..n {
            labels.push(named(i, j));
            mats.push(elementary(n, i, j));
        }
    }
    for k in 0..n - 1 {
        labels.push(if n == 2 { "h".into() } else { format!("h{}", k + 1) });
        let mut h = elementary(n, k, k);
        h[(k + 1, k + 1)] = -Rat::one();
        mats.push(h);
    }
    for i in 0..n {
        for j in 0..i {
            labels.push(if n == 2 { "f".into() } else { format!("e{}{}", i + 1, j + 1) });
            mats.push(elementary(n, i, j));
        }
    }
    let big_n = mats.len();
    let coords = |m: &RatMatrix| -> Vec<Rat> {
        let mut out = vec![Rat::zero(); big_n];
        let mut idx = 0;
        for i in 0..n {
            for j in i + 1..n {
                out[idx] = m[(i, j)].clone();
                idx += 1;
            }
        }
        let mut partial = Rat::zero();
        for k in 0..n - 1 {
            partial += &m[(k, k)];
            out[idx] = partial.clone();
            idx += 1;
        }
        for i in 0..n {
            for j in 0..i {
                out[idx] = m[(i, j)].clone();
                idx += 1;
            }
        }
        out
    };
    let mut constants = Vec::new();
    for (i, a) in mats.iter().enumerate() {
        for (j, b) in mats.iter().enumerate() {
            let comm = a.mul(b).add(&b.mul(a).scale(&rat(-1)));
            for (k, c) in coords(&comm).into_iter().enumerate() {
                if !c.is_zero() {
                    constants.push((i, j, k, c));
                }
            }
        }
    }
    let mut data = LieAlgebraData {
        name: format!("sl{n}"),
        labels,
        brackets: Vec::new(),
        kappa: RatMatrix::zeros(big_n, big_n),
        rank: n - 1,
        degrees: (2..=n as u32).collect(),
        defining: Some(mats),
    };
    let mut brackets = vec![Vec::new(); big_n * big_n];
    for (i, j, k, c) in constants {
        brackets[i * big_n + j].push((k, c));
    }
    data.brackets = brackets;
    data.kappa = data.killing_matrix();
    data.validate()?;
    Ok(data)
}

/// `sl2`, `sl3`, or a JSON document path.
pub fn resolve_algebra(selector: &str) -> Result<LieAlgebraData, LieError> {
    match selector {
        "sl2" => make_sl(2),
        "sl3" => make_sl(3),
        path => load_json(std::path::Path::new(path)),
    }
}

#[cfg(test)]
mod tests;
