//! Basic invariants `p_1, ..., p_r` of `S(g)^g` and their gradient maps
//! `ε_i = kappa^{-1} ∇p_i`.
//!
//! For `sl_n` the generators are the characteristic-polynomial coefficients
//! `p_i = e_{i+1}(X)`, the sum of the principal `(i+1)`-minors of the generic
//! traceless matrix `X`. For `sl2` that is `p_1 = det X = -xh^2 - xe*xf`.

use crate::liealg::{CoeffVector, LieAlgebraData, LieError};
use crate::linalg::RatMatrix;
use crate::poly::{shift_expand, GVec, MPoly, MonomialOrder, PolyError, RingRef};
use crate::rational::Rat;
use num_traits::Zero;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InvariantError {
    #[error("no shipped invariants for {0}; supply them with InvariantSet::from_polys")]
    Unsupported(String),
    #[error("expected {expected} invariants, got {got}")]
    Count { expected: usize, got: usize },
    #[error("p_{index} is not homogeneous of degree {degree}")]
    Degree { index: usize, degree: u32 },
    #[error("p_{index} is not invariant under ad v{basis}")]
    NotInvariant { index: usize, basis: usize },
    #[error("p_{0} lives in the wrong ring")]
    Ring(usize),
    #[error("no invariant with index {0}")]
    Index(usize),
    #[error("identity for ε_{index} failed: {identity}")]
    Identity { index: usize, identity: &'static str },
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Homogeneous invariant generators in the `N` variables `x<label>`, with
/// `polys[i]` of degree `degrees[i]`. Indices here are 0-based: `polys[0]`
/// is `p_1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantSet {
    ring: RingRef,
    polys: Vec<MPoly>,
    degrees: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpsilonMap {
    /// 0-based: `index = 0` is `ε_1`.
    pub index: usize,
    pub value: GVec,
}

impl InvariantSet {
    /// Validates user-supplied invariants: count, homogeneity and exact
    /// infinitesimal invariance.
    pub fn from_polys(l: &LieAlgebraData, polys: Vec<MPoly>) -> Result<Self, InvariantError> {
        let ring = l.x_ring();
        if polys.len() != l.rank() {
            return Err(InvariantError::Count {
                expected: l.rank(),
                got: polys.len(),
            });
        }
        for (i, (p, &d)) in polys.iter().zip(l.degrees()).enumerate() {
            if **p.ring() != *ring {
                return Err(InvariantError::Ring(i + 1));
            }
            if p.is_zero() || !p.is_homogeneous() || p.total_degree() != Some(d) {
                return Err(InvariantError::Degree { index: i + 1, degree: d });
            }
            if let Some(basis) = first_non_invariance(l, p)? {
                return Err(InvariantError::NotInvariant { index: i + 1, basis });
            }
        }
        Ok(InvariantSet {
            ring,
            polys,
            degrees: l.degrees().to_vec(),
        })
    }

    /// Parses one polynomial per line in canonical text.
    pub fn from_text(l: &LieAlgebraData, text: &str) -> Result<Self, InvariantError> {
        let ring = l.x_ring();
        let polys = text
            .lines()
            .filter(|s| !s.trim().is_empty())
            .map(|s| MPoly::parse(&ring, s))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_polys(l, polys)
    }

    pub fn to_text(&self) -> String {
        self.polys.iter().map(|p| p.to_text() + "\n").collect()
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn polys(&self) -> &[MPoly] {
        &self.polys
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }
}

/// `Σ_k [v, z]_k ∂p/∂z_k` for the generic `z`: the derivative of `p` along
/// `ad v`. Zero for every basis `v` exactly when `p` is invariant.
pub fn invariance_defect(l: &LieAlgebraData, p: &MPoly, basis: usize) -> Result<MPoly, InvariantError> {
    let ring = p.ring();
    let z = l.generic_element(ring, 0);
    let vz = l.apply_matrix(&l.ad_matrix(&l.basis_vector(basis))?, &z)?;
    let mut acc = MPoly::zero(ring);
    for k in 0..l.dim() {
        if vz.entry(k).is_zero() {
            continue;
        }
        acc = acc.try_add(&vz.entry(k).try_mul(&p.partial(k)?)?)?;
    }
    Ok(acc)
}

fn first_non_invariance(l: &LieAlgebraData, p: &MPoly) -> Result<Option<usize>, InvariantError> {
    for v in 0..l.dim() {
        if !invariance_defect(l, p, v)?.is_zero() {
            return Ok(Some(v));
        }
    }
    Ok(None)
}

/// Characteristic-polynomial coefficients of the generic traceless matrix.
pub fn generators(l: &LieAlgebraData) -> Result<InvariantSet, InvariantError> {
    let n = l
        .defining_size()
        .ok_or_else(|| InvariantError::Unsupported(l.name().to_string()))?;
    let ring = l.x_ring();
    let basis = l.defining_basis().unwrap();
    let mut x = vec![MPoly::zero(&ring); n * n];
    for (k, b) in basis.iter().enumerate() {
        let var = MPoly::var(&ring, k);
        for r in 0..n {
            for c in 0..n {
                if !b[(r, c)].is_zero() {
                    x[r * n + c] = &x[r * n + c] + &var.scale(&b[(r, c)]);
                }
            }
        }
    }
    let polys = (2..=n).map(|k| principal_minor_sum(&x, n, k, &ring)).collect();
    InvariantSet::from_polys(l, polys)
}

fn principal_minor_sum(x: &[MPoly], n: usize, k: usize, ring: &RingRef) -> MPoly {
    let mut acc = MPoly::zero(ring);
    for subset in subsets(n, k) {
        acc = &acc + &det(x, n, &subset, &subset, ring);
    }
    acc
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m & (1 << i) != 0).collect())
        .collect()
}

/// Laplace expansion along the first row of the submatrix.
fn det(x: &[MPoly], n: usize, rows: &[usize], cols: &[usize], ring: &RingRef) -> MPoly {
    if rows.len() == 1 {
        return x[rows[0] * n + cols[0]].clone();
    }
    let mut acc = MPoly::zero(ring);
    for (a, &c) in cols.iter().enumerate() {
        let entry = &x[rows[0] * n + c];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&cc| cc != c).collect();
        let minor = entry * &det(x, n, &rows[1..], &rest, ring);
        acc = if a % 2 == 0 { &acc + &minor } else { &acc - &minor };
    }
    acc
}

/// `ε_i = kappa^{-1} ∇p_i` (0-based `i`). Both defining identities
/// `[x, ε_i(x)] = 0` and `⟨ε_i(x), y⟩ = p_i^(1)(x, y)` are checked exactly.
pub fn epsilon(l: &LieAlgebraData, inv: &InvariantSet, i: usize) -> Result<EpsilonMap, InvariantError> {
    let p = inv.polys.get(i).ok_or(InvariantError::Index(i))?;
    let kinv = l
        .kappa()
        .inverse()
        .ok_or(LieError::Invariant {
            identity: "form nondegeneracy",
            detail: "det kappa = 0".into(),
        })?;
    let grad = GVec::new(&inv.ring, (0..l.dim()).map(|k| p.partial(k)).collect::<Result<_, _>>()?)?;
    let value = l.apply_matrix(&kinv, &grad)?;
    let eps = EpsilonMap { index: i, value };
    if !centralizer_defect(l, &eps)?.is_zero() {
        return Err(InvariantError::Identity {
            index: i + 1,
            identity: "[x, ε(x)] = 0",
        });
    }
    if !pairing_defect(l, inv, &eps)?.is_zero() {
        return Err(InvariantError::Identity {
            index: i + 1,
            identity: "⟨ε(x), y⟩ = p^(1)(x, y)",
        });
    }
    Ok(eps)
}

pub fn epsilons(l: &LieAlgebraData, inv: &InvariantSet) -> Result<Vec<EpsilonMap>, InvariantError> {
    (0..inv.len()).map(|i| epsilon(l, inv, i)).collect()
}

/// `[x, ε(x)]`, identically zero.
pub fn centralizer_defect(l: &LieAlgebraData, eps: &EpsilonMap) -> Result<GVec, InvariantError> {
    let x = l.generic_element(eps.value.ring(), 0);
    Ok(l.bracket_gvec(&x, &eps.value)?)
}

/// `⟨ε_i(x), y⟩ - p_i^(1)(x, y)` in `k[x, y]`, identically zero.
pub fn pairing_defect(l: &LieAlgebraData, inv: &InvariantSet, eps: &EpsilonMap) -> Result<MPoly, InvariantError> {
    let xy = l.xy_ring(MonomialOrder::DegRevLex);
    let n = l.dim();
    let p = &inv.polys[eps.index];
    let shifted = shift_expand(p, &xy, inv.degrees[eps.index])?;
    let to_x: Vec<usize> = (0..n).collect();
    let lifted = eps.value.map(&xy, |e| Ok(e.embed(&xy, &to_x)))?;
    let y = l.generic_element(&xy, n);
    Ok(l.form_gvec(&lifted, &y)?.try_sub(&shifted[1])?)
}

/// `ε(λx) - λ^{d-1} ε(x)` with a fresh scalar variable `λ`, identically zero.
pub fn homogeneity_defect(l: &LieAlgebraData, inv: &InvariantSet, eps: &EpsilonMap) -> Result<GVec, InvariantError> {
    let n = l.dim();
    let ext = inv.ring.extended("lambda");
    let lam = MPoly::var(&ext, n);
    let to_ext: Vec<usize> = (0..n).collect();
    let scaled: Vec<MPoly> = (0..n)
        .map(|k| lam.try_mul(&MPoly::var(&ext, k)))
        .collect::<Result<_, _>>()?;
    let power = lam.pow(inv.degrees[eps.index] - 1)?;
    let entries = eps
        .value
        .entries()
        .iter()
        .map(|e| {
            let left = e.map_ring(&ext, &scaled)?;
            let right = power.try_mul(&e.embed(&ext, &to_ext))?;
            left.try_sub(&right)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(GVec::new(&ext, entries)?)
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct KostantPoint {
    pub point: Vec<String>,
    pub regular: bool,
    pub independent: bool,
    /// When regular: the ε_i(x) span `g^x`.
    pub spans_centralizer: Option<bool>,
    pub consistent: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct KostantReport {
    pub points: Vec<KostantPoint>,
}

impl KostantReport {
    pub fn passed(&self) -> bool {
        self.points.iter().all(|p| p.consistent)
    }
}

/// `x` regular ⇔ `ε_1(x), ..., ε_r(x)` independent, and then they span `g^x`.
pub fn kostant_regularity_check(
    l: &LieAlgebraData,
    eps: &[EpsilonMap],
    samples: &[CoeffVector],
) -> Result<KostantReport, InvariantError> {
    let mut points = Vec::with_capacity(samples.len());
    for x in samples {
        let regular = l.is_regular(x)?;
        let rows = eps.iter().map(|e| e.value.eval(x)).collect::<Result<Vec<_>, _>>()?;
        let values = RatMatrix::from_rows(rows);
        let independent = values.rank() == l.rank();
        let spans_centralizer = if regular {
            let cent = RatMatrix::from_rows(l.centralizer(x)?);
            Some(independent && values.same_rowspace(&cent))
        } else {
            None
        };
        let consistent = regular == independent && spans_centralizer.unwrap_or(true);
        points.push(KostantPoint {
            point: x.iter().map(|c| c.to_string()).collect(),
            regular,
            independent,
            spans_centralizer,
            consistent,
        });
    }
    Ok(KostantReport { points })
}

/// Evaluates `ε_i` at constant `x`.
pub fn epsilon_at(eps: &EpsilonMap, x: &[Rat]) -> Result<CoeffVector, InvariantError> {
    Ok(eps.value.eval(x)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::make_sl;
    use crate::rational::{rat, ratio};

    #[test]
    fn sl2_determinant() {
        let l = make_sl(2).unwrap();
        let inv = generators(&l).unwrap();
        assert_eq!(inv.polys()[0], MPoly::parse(inv.ring(), "-xh^2 - xe*xf").unwrap());
        assert_eq!(inv.degrees(), &[2]);
    }

    #[test]
    fn sl3_degrees() {
        let l = make_sl(3).unwrap();
        let inv = generators(&l).unwrap();
        let degs: Vec<u32> = inv.polys().iter().map(|p| p.total_degree().unwrap()).collect();
        assert_eq!(degs, [2, 3]);
        assert_eq!(degs.iter().sum::<u32>() as usize, l.b());
    }

    #[test]
    fn sl3_generators_match_matrix_oracle() {
        // e2 and e3 of a concrete matrix computed from its entries.
        let l = make_sl(3).unwrap();
        let inv = generators(&l).unwrap();
        let x: Vec<Rat> = [3, -1, 4, 1, -5, 9, 2, -6].iter().map(|&c| rat(c)).collect();
        let m = l.to_matrix(&x).unwrap();
        let e2 = (0..3)
            .flat_map(|i| (i + 1..3).map(move |j| (i, j)))
            .map(|(i, j)| &m[(i, i)] * &m[(j, j)] - &m[(i, j)] * &m[(j, i)])
            .fold(Rat::zero(), |a, b| a + b);
        assert_eq!(inv.polys()[0].eval(&x).unwrap(), e2);
        assert_eq!(inv.polys()[1].eval(&x).unwrap(), m.determinant());
    }

    #[test]
    fn sl2_epsilon_is_minus_quarter_identity() {
        let l = make_sl(2).unwrap();
        let inv = generators(&l).unwrap();
        let eps = epsilon(&l, &inv, 0).unwrap();
        let r = inv.ring();
        let expect: Vec<MPoly> = (0..3).map(|k| MPoly::var(r, k).scale(&ratio(-1, 4))).collect();
        assert_eq!(eps.value.entries(), expect.as_slice());
        let at_e = epsilon_at(&eps, &[rat(1), rat(0), rat(0)]).unwrap();
        assert_eq!(at_e, vec![ratio(-1, 4), rat(0), rat(0)]);
    }

    #[test]
    fn defects_vanish() {
        for n in [2, 3] {
            let l = make_sl(n).unwrap();
            let inv = generators(&l).unwrap();
            for eps in epsilons(&l, &inv).unwrap() {
                assert!(centralizer_defect(&l, &eps).unwrap().is_zero());
                assert!(pairing_defect(&l, &inv, &eps).unwrap().is_zero());
                assert!(homogeneity_defect(&l, &inv, &eps).unwrap().is_zero());
                for e in eps.value.entries() {
                    assert!(e.is_zero() || e.total_degree() == Some(inv.degrees()[eps.index] - 1));
                }
            }
            for p in inv.polys() {
                for v in 0..l.dim() {
                    assert!(invariance_defect(&l, p, v).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn non_invariants_rejected() {
        let l = make_sl(2).unwrap();
        let r = l.x_ring();
        let bad = MPoly::parse(&r, "xe^2").unwrap();
        assert!(matches!(
            InvariantSet::from_polys(&l, vec![bad]),
            Err(InvariantError::NotInvariant { index: 1, .. })
        ));
        let inhom = MPoly::parse(&r, "xh^2 + xe*xf + xe").unwrap();
        assert!(matches!(
            InvariantSet::from_polys(&l, vec![inhom]),
            Err(InvariantError::Degree { .. })
        ));
        assert!(matches!(InvariantSet::from_polys(&l, vec![]), Err(InvariantError::Count { .. })));
        let inv = InvariantSet::from_text(&l, "2*xh^2 + 2*xe*xf\n").unwrap();
        assert_eq!(InvariantSet::from_text(&l, &inv.to_text()).unwrap(), inv);
    }

    #[test]
    fn kostant_examples() {
        let l = make_sl(2).unwrap();
        let inv = generators(&l).unwrap();
        let eps = epsilons(&l, &inv).unwrap();
        let rep = kostant_regularity_check(&l, &eps, &[vec![rat(1), rat(0), rat(0)], vec![rat(0); 3]]).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.points[0].spans_centralizer, Some(true));
        assert!(!rep.points[1].regular && !rep.points[1].independent);

        let l3 = make_sl(3).unwrap();
        let inv3 = generators(&l3).unwrap();
        let eps3 = epsilons(&l3, &inv3).unwrap();
        let d = RatMatrix::from_rows(vec![
            vec![rat(1), rat(0), rat(0)],
            vec![rat(0), rat(2), rat(0)],
            vec![rat(0), rat(0), rat(-3)],
        ]);
        let x = l3.from_matrix(&d).unwrap();
        let rep = kostant_regularity_check(&l3, &eps3, &[x.clone()]).unwrap();
        assert!(rep.passed() && rep.points[0].regular && rep.points[0].independent);
        // The values lie in the diagonal Cartan (coordinates h1, h2 only).
        for e in &eps3 {
            let v = epsilon_at(e, &x).unwrap();
            assert!(v.iter().enumerate().all(|(k, c)| k == 3 || k == 4 || c.is_zero()));
        }
        let nonreg = l3.from_matrix(&RatMatrix::from_rows(vec![
            vec![rat(1), rat(0), rat(0)],
            vec![rat(0), rat(1), rat(0)],
            vec![rat(0), rat(0), rat(-2)],
        ]))
        .unwrap();
        let rep = kostant_regularity_check(&l3, &eps3, &[nonreg]).unwrap();
        assert!(rep.passed() && !rep.points[0].regular);
    }
}
