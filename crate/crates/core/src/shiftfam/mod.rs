//! Argument-shift polarizations `p_i^(m)`, `ε_i^(m)` and the Lie–Poisson
//! bracket on `k[x, y]`.
//!
//! Everything lives in the ring `k[x, y]` of
//! [`LieAlgebraData::xy_ring`]; `x` plays the role of the shift argument, the
//! bracket acts on the `y` variables only.

mod omega;
mod spaces;

pub use omega::{omega_oracle, sample_points, PlanePair};
pub use spaces::{
    c_space, char_kill, dim_v, equivariance_spot_check, in_omega, sc_identity_suite, v_space, EquivarianceReport,
    PointChecks, ScReport,
};

use crate::invariants::{epsilons, InvariantError, InvariantSet};
use crate::liealg::{CoeffVector, LieAlgebraData, LieError};
use crate::poly::{shift_expand, GVec, MPoly, MonomialOrder, PolyError, RingRef};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ShiftError {
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("{0} fails")]
    Identity(String),
}

/// The polarizations of all basic invariants: `p[i][m]` for `0 ≤ m ≤ d_i`
/// and `eps[i][m]` for `0 ≤ m < d_i` (0-based `i`).
#[derive(Clone, Debug)]
pub struct ShiftFamily {
    algebra: LieAlgebraData,
    ring: RingRef,
    degrees: Vec<u32>,
    p: Vec<Vec<MPoly>>,
    eps: Vec<Vec<GVec>>,
}

impl ShiftFamily {
    pub fn algebra(&self) -> &LieAlgebraData {
        &self.algebra
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn p(&self, i: usize, m: usize) -> &MPoly {
        &self.p[i][m]
    }

    pub fn eps(&self, i: usize, m: usize) -> &GVec {
        &self.eps[i][m]
    }

    /// `(i, m)` for every `ε_i^(m)`, in order; there are `b` of them.
    pub fn eps_indices(&self) -> Vec<(usize, usize)> {
        self.degrees
            .iter()
            .enumerate()
            .flat_map(|(i, &d)| (0..d as usize).map(move |m| (i, m)))
            .collect()
    }

    /// The Mishchenko–Fomenko family `p_i^(m)(x, ·)` for `1 ≤ m ≤ d_i`,
    /// labelled `p<i+1>^(<m>)`.
    pub fn mf_family(&self) -> Vec<(String, MPoly)> {
        let mut out = Vec::new();
        for (i, &d) in self.degrees.iter().enumerate() {
            for m in 1..=d as usize {
                out.push((format!("p{}^({m})", i + 1), self.p[i][m].clone()));
            }
        }
        out
    }

    /// Generic `x` and `y` as elements of `g ⊗ k[x, y]`.
    pub fn generic_xy(&self) -> (GVec, GVec) {
        let n = self.algebra.dim();
        (
            self.algebra.generic_element(&self.ring, 0),
            self.algebra.generic_element(&self.ring, n),
        )
    }
}

/// Polarizes the invariants and certifies the expansion identities
/// `Σ_m p^(m) t^m = p(x + ty)`, `Σ_m ε^(m) t^m = ε(x + ty)` and the
/// bidegrees of the `ε_i^(m)`.
pub fn build_family(l: &LieAlgebraData, inv: &InvariantSet) -> Result<ShiftFamily, ShiftError> {
    let ring = l.xy_ring(MonomialOrder::DegRevLex);
    let eps_maps = epsilons(l, inv)?;
    let mut p = Vec::new();
    let mut eps = Vec::new();
    for (i, &d) in inv.degrees().iter().enumerate() {
        p.push(shift_expand(&inv.polys()[i], &ring, d)?);
        let n = l.dim();
        let mut per_m: Vec<Vec<MPoly>> = vec![Vec::with_capacity(n); d as usize];
        for e in eps_maps[i].value.entries() {
            let parts = shift_expand(e, &ring, d - 1)?;
            for (m, part) in parts.into_iter().enumerate() {
                per_m[m].push(part);
            }
        }
        eps.push(
            per_m
                .into_iter()
                .map(|entries| GVec::new(&ring, entries))
                .collect::<Result<Vec<_>, _>>()?,
        );
    }
    let fam = ShiftFamily {
        algebra: l.clone(),
        ring,
        degrees: inv.degrees().to_vec(),
        p,
        eps,
    };
    if let Some(failure) = expansion_failures(&fam, inv)?.into_iter().next() {
        return Err(ShiftError::Identity(failure));
    }
    Ok(fam)
}

/// Names of the expansion and bidegree identities that fail; empty when the
/// family is sound. Checked symbolically with a fresh variable `t`.
pub fn expansion_failures(fam: &ShiftFamily, inv: &InvariantSet) -> Result<Vec<String>, ShiftError> {
    let l = &fam.algebra;
    let n = l.dim();
    let ext = fam.ring.extended("t");
    let t = MPoly::var(&ext, 2 * n);
    let keep: Vec<usize> = (0..2 * n).collect();
    // x_k + t y_k as images of the N-variable ring.
    let shifted: Vec<MPoly> = (0..n)
        .map(|k| MPoly::var(&ext, k).try_add(&t.try_mul(&MPoly::var(&ext, n + k))?))
        .collect::<Result<_, _>>()?;
    let series = |parts: &[MPoly]| -> Result<MPoly, PolyError> {
        let mut acc = MPoly::zero(&ext);
        for (m, q) in parts.iter().enumerate() {
            acc = acc.try_add(&t.pow(m as u32)?.try_mul(&q.embed(&ext, &keep))?)?;
        }
        Ok(acc)
    };
    let eps_maps = epsilons(l, inv)?;
    let mut failures = Vec::new();
    for (i, &d) in fam.degrees.iter().enumerate() {
        if series(&fam.p[i])? != inv.polys()[i].map_ring(&ext, &shifted)? {
            failures.push(format!("p{}(x + ty) expansion", i + 1));
        }
        for k in 0..n {
            let parts: Vec<MPoly> = fam.eps[i].iter().map(|g| g.entry(k).clone()).collect();
            if series(&parts)? != eps_maps[i].value.entry(k).map_ring(&ext, &shifted)? {
                failures.push(format!("eps{}(x + ty) expansion, coordinate {k}", i + 1));
            }
        }
        for (m, g) in fam.eps[i].iter().enumerate() {
            let want = (d - 1 - m as u32, m as u32);
            let ok = g
                .entries()
                .iter()
                .all(|e| e.bidegrees(0..n, n..2 * n).iter().all(|&bd| bd == want));
            if !ok {
                failures.push(format!("bidegree of eps{}^({m})", i + 1));
            }
        }
    }
    Ok(failures)
}

/// Lie–Poisson bracket in the `y` variables, `x` acting as parameters.
///
/// `g*` is identified with `g` through `kappa`, so the linear function
/// `η_i = ⟨v_i, ·⟩` is the image of `v_i` in `S(g)` and
/// `{η_i, η_j} = Σ_k c[i][j][k] η_k`. On arbitrary `f, g` this is
/// `{f, g}(y) = ⟨y, [∇f, ∇g]⟩` with `∇ = kappa^{-1} ∂_y`.
pub fn poisson(l: &LieAlgebraData, f: &MPoly, g: &MPoly) -> Result<MPoly, ShiftError> {
    let ring = f.ring();
    if **ring != **g.ring() {
        return Err(PolyError::RingMismatch.into());
    }
    let n = l.dim();
    if ring.nvars() != 2 * n {
        return Err(PolyError::RingMismatch.into());
    }
    let kinv = l.kappa().inverse().ok_or(LieError::Invariant {
        identity: "form nondegeneracy",
        detail: "det kappa = 0".into(),
    })?;
    let gradient = |p: &MPoly| -> Result<GVec, ShiftError> {
        let d = (0..n).map(|i| p.partial(n + i)).collect::<Result<Vec<_>, _>>()?;
        Ok(l.apply_matrix(&kinv, &GVec::new(ring, d)?)?)
    };
    let (gf, gg) = (gradient(f)?, gradient(g)?);
    if gf.is_zero() || gg.is_zero() {
        return Ok(MPoly::zero(ring));
    }
    let y = l.generic_element(ring, n);
    Ok(l.form_gvec(&y, &l.bracket_gvec(&gf, &gg)?)?)
}

/// `η_k = ⟨v_k, y⟩`, the linear coordinate function attached to `v_k`.
pub fn eta(l: &LieAlgebraData, ring: &RingRef, k: usize) -> Result<MPoly, ShiftError> {
    let y = l.generic_element(ring, l.dim());
    Ok(l.pair_const(&l.basis_vector(k), &y)?)
}

#[derive(Clone, Debug)]
pub enum MfMode {
    /// `x` kept as parameters.
    Symbolic,
    /// `x` specialized to each of the given points.
    Sampled(Vec<CoeffVector>),
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct MfPair {
    pub left: String,
    pub right: String,
    /// `None` for the symbolic run, else the index of the sample point.
    pub point: Option<usize>,
    /// Canonical text of the bracket; `"0"` when it vanishes.
    pub bracket: String,
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct MfReport {
    pub functions: usize,
    pub pairs: Vec<MfPair>,
}

impl MfReport {
    pub fn passed(&self) -> bool {
        self.pairs.iter().all(|p| p.bracket == "0")
    }
}

/// All brackets `{p_i^(m)(x, ·), p_j^(l)(x, ·)}` for unordered pairs with
/// repetition.
pub fn mf_commutativity_check(fam: &ShiftFamily, mode: &MfMode) -> Result<MfReport, ShiftError> {
    let l = &fam.algebra;
    let family = fam.mf_family();
    let variants: Vec<(Option<usize>, Vec<(String, MPoly)>)> = match mode {
        MfMode::Symbolic => vec![(None, family.clone())],
        MfMode::Sampled(points) => points
            .iter()
            .enumerate()
            .map(|(idx, x)| {
                let subs: Vec<(usize, MPoly)> = x
                    .iter()
                    .enumerate()
                    .map(|(k, c)| (k, MPoly::constant(&fam.ring, c.clone())))
                    .collect();
                let fs = family
                    .iter()
                    .map(|(name, f)| Ok((name.clone(), f.substitute(&subs)?)))
                    .collect::<Result<Vec<_>, PolyError>>()?;
                Ok((Some(idx), fs))
            })
            .collect::<Result<_, PolyError>>()?,
    };
    let mut pairs = Vec::new();
    for (point, fs) in &variants {
        for a in 0..fs.len() {
            for b in a..fs.len() {
                let br = poisson(l, &fs[a].1, &fs[b].1)?;
                pairs.push(MfPair {
                    left: fs[a].0.clone(),
                    right: fs[b].0.clone(),
                    point: *point,
                    bracket: br.to_text(),
                });
            }
        }
    }
    Ok(MfReport {
        functions: family.len(),
        pairs,
    })
}

#[cfg(test)]
mod tests;
