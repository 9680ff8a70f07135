//! The spaces `V_{x,y}` and `C_{x,y}` at rational points and the identities
//! relating them.

use super::omega::{omega_oracle, PlanePair};
use super::{ShiftError, ShiftFamily};
use crate::liealg::CoeffVector;
use crate::linalg::RatMatrix;
use crate::poly::MPoly;
use crate::rational::{rat, Rat};

/// Rows `ε_i^(m)(x, y)` for every `(i, m)`: a `b x N` matrix.
pub fn v_space(fam: &ShiftFamily, pt: &PlanePair) -> Result<RatMatrix, ShiftError> {
    let at = pt.concat();
    let rows = fam
        .eps_indices()
        .into_iter()
        .map(|(i, m)| fam.eps(i, m).eval(&at))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RatMatrix::from_rows(rows))
}

pub fn dim_v(fam: &ShiftFamily, pt: &PlanePair) -> Result<usize, ShiftError> {
    Ok(v_space(fam, pt)?.rank())
}

/// `dim V_{x,y} = b`.
pub fn in_omega(fam: &ShiftFamily, pt: &PlanePair) -> Result<bool, ShiftError> {
    Ok(dim_v(fam, pt)? == fam.algebra().b())
}

/// Rows `[x, ε_i^(m)(x, y)]` for `1 ≤ m < d_i`: a `(b - r) x N` matrix.
pub fn c_space(fam: &ShiftFamily, pt: &PlanePair) -> Result<RatMatrix, ShiftError> {
    let l = fam.algebra();
    let at = pt.concat();
    let mut rows = Vec::new();
    for (i, m) in fam.eps_indices() {
        if m == 0 {
            continue;
        }
        let e = fam.eps(i, m).eval(&at)?;
        rows.push(l.bracket(&pt.x, &e)?);
    }
    if rows.is_empty() {
        return Ok(RatMatrix::empty(l.dim()));
    }
    Ok(RatMatrix::from_rows(rows))
}

/// `⟨ε_i^(m)(x, y), [x, y]⟩` in `k[x, y]`; the zero polynomial.
pub fn char_kill(fam: &ShiftFamily, i: usize, m: usize) -> Result<MPoly, ShiftError> {
    let l = fam.algebra();
    let (x, y) = fam.generic_xy();
    let xy = l.bracket_gvec(&x, &y)?;
    Ok(l.form_gvec(fam.eps(i, m), &xy)?)
}

fn bracket_rows(fam: &ShiftFamily, z: &[Rat], v: &RatMatrix) -> Result<RatMatrix, ShiftError> {
    let l = fam.algebra();
    let rows = v.row_vecs().iter().map(|r| l.bracket(z, r)).collect::<Result<Vec<_>, _>>()?;
    Ok(RatMatrix::from_rows(rows))
}

/// Pairing matrix `⟨a_i, b_j⟩` between two families of rows.
fn pairing(fam: &ShiftFamily, a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
    a.mul(fam.algebra().kappa()).mul(&b.transpose())
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct PointChecks {
    pub index: usize,
    pub point: String,
    /// Set when the point is outside `Ω_g` by the exact oracle; the other
    /// fields are then not evaluated.
    pub skipped: Option<String>,
    pub dim_v: usize,
    pub dim_c: usize,
    pub in_omega: bool,
    /// `[x, V] = [y, V]`.
    pub brackets_agree: bool,
    /// `⟨[x, v], w⟩ = 0` for rows `v, w` of `V`.
    pub isotropic: bool,
    /// `[x, V]` is the whole orthocomplement of `V`: `dim [x, V] = N - dim V`.
    pub xv_orthocomplement: bool,
    /// `g^{ax+by} ⊆ V` for the sampled regular `ax + by`.
    pub centralizers_contained: bool,
    /// `C` has dimension `b - r` and pairs to zero with `V`.
    pub c_orthocomplement: bool,
    /// The line `(x + λ y, y)` gives the same `dim V`.
    pub plane_invariant: bool,
}

impl PointChecks {
    pub fn passed(&self, b: usize, r: usize) -> bool {
        self.skipped.is_some()
            || (self.in_omega
                && self.dim_v == b
                && self.dim_c == b - r
                && self.brackets_agree
                && self.isotropic
                && self.xv_orthocomplement
                && self.centralizers_contained
                && self.c_orthocomplement
                && self.plane_invariant)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ScReport {
    pub points: Vec<PointChecks>,
    pub skipped: usize,
    pub failed: usize,
}

const AB: [(i64, i64); 5] = [(1, 0), (0, 1), (1, 1), (1, -1), (2, 3)];

/// The rank laws and identities at each point of `points` lying in `Ω_g`
/// (decided by [`omega_oracle`] when available, independent generic pairs
/// otherwise).
pub fn sc_identity_suite(fam: &ShiftFamily, points: &[PlanePair]) -> Result<ScReport, ShiftError> {
    let l = fam.algebra();
    let (b, r) = (l.b(), l.rank());
    let mut out = Vec::with_capacity(points.len());
    for (index, pt) in points.iter().enumerate() {
        let member = omega_oracle(l, pt).unwrap_or_else(|| pt.is_independent());
        let mut rec = PointChecks {
            index,
            point: pt.label(),
            skipped: None,
            dim_v: 0,
            dim_c: 0,
            in_omega: false,
            brackets_agree: false,
            isotropic: false,
            xv_orthocomplement: false,
            centralizers_contained: false,
            c_orthocomplement: false,
            plane_invariant: false,
        };
        if !member {
            rec.skipped = Some("outside Omega".into());
            out.push(rec);
            continue;
        }
        let v = v_space(fam, pt)?;
        let c = c_space(fam, pt)?;
        rec.dim_v = v.rank();
        rec.dim_c = c.rank();
        rec.in_omega = rec.dim_v == b;
        let xv = bracket_rows(fam, &pt.x, &v)?;
        let yv = bracket_rows(fam, &pt.y, &v)?;
        rec.brackets_agree = xv.same_rowspace(&yv);
        rec.isotropic = pairing(fam, &xv, &v).is_zero();
        rec.xv_orthocomplement = rec.isotropic && xv.rank() == l.dim() - rec.dim_v;
        rec.centralizers_contained = true;
        for (a, bb) in AB {
            let z: CoeffVector = pt
                .x
                .iter()
                .zip(&pt.y)
                .map(|(xi, yi)| xi * rat(a) + yi * rat(bb))
                .collect();
            if !l.is_regular(&z)? {
                continue;
            }
            let cent = RatMatrix::from_rows(l.centralizer(&z)?);
            if !v.rowspace_contains(&cent) {
                rec.centralizers_contained = false;
            }
        }
        rec.c_orthocomplement =
            rec.dim_c == b - r && (c.rows() == 0 || pairing(fam, &c, &v).is_zero()) && l.dim() - rec.dim_v == rec.dim_c;
        let shifted = PlanePair::new(
            pt.x.iter().zip(&pt.y).map(|(xi, yi)| xi + yi * rat(3)).collect(),
            pt.y.clone(),
        );
        rec.plane_invariant = dim_v(fam, &shifted)? == rec.dim_v;
        out.push(rec);
    }
    let skipped = out.iter().filter(|p| p.skipped.is_some()).count();
    let failed = out.iter().filter(|p| !p.passed(b, r)).count();
    Ok(ScReport {
        points: out,
        skipped,
        failed,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct EquivarianceReport {
    /// `(i, m, holds)` with 1-based `i`.
    pub cases: Vec<(usize, usize, bool)>,
}

impl EquivarianceReport {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.2)
    }
}

/// `ε_i^(m)(g x, g y) = g ε_i^(m)(x, y)` for `g = exp(ad v)`, `ad v`
/// nilpotent.
pub fn equivariance_spot_check(
    fam: &ShiftFamily,
    v: &[Rat],
    pt: &PlanePair,
) -> Result<EquivarianceReport, ShiftError> {
    let l = fam.algebra();
    let g = l.exp_ad(v)?;
    let moved = PlanePair::new(g.mul_vec(&pt.x), g.mul_vec(&pt.y));
    let (at, at_moved) = (pt.concat(), moved.concat());
    let mut cases = Vec::new();
    for (i, m) in fam.eps_indices() {
        let e = fam.eps(i, m);
        let lhs = e.eval(&at_moved)?;
        let rhs = g.mul_vec(&e.eval(&at)?);
        cases.push((i + 1, m, lhs == rhs));
    }
    Ok(EquivarianceReport { cases })
}
