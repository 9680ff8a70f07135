//! The commuting ideal `I_g = (⟨v_k, [x, y]⟩)_k`, the derivation `d` on
//! `S ⊗ Λg` with `d v_k = g_k`, the subcomplex `Λ•g ∧ ε` and the checks on
//! dimension, resolution and primality.

mod ext;

pub use ext::{subsets, ExtElem};

use crate::groebner::cache::GbCache;
use crate::groebner::resolution::resolve_from_basis;
use crate::groebner::{buchberger, krull_dim, radical_member_gb, GroebnerBasis, GroebnerError, Limits};
use crate::liealg::{CoeffVector, LieAlgebraData, LieError};
use crate::linalg::RatMatrix;
use crate::poly::{same_ring, MPoly, MonomialOrder, PolyError, RingRef};
use crate::rational::{rat, Rat};
use crate::shiftfam::{PlanePair, ShiftFamily};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::BTreeMap;
use std::sync::{Mutex, OnceLock};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CommutingError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error("ring or dimension mismatch")]
    RingMismatch,
    #[error("wedge key {0:?} is not strictly increasing inside the basis")]
    BadKey(Vec<usize>),
    #[error("point lies on the commuting variety")]
    OnVariety,
    #[error("{0}")]
    Unsupported(String),
}

/// Generators `g_k(x, y) = ⟨v_k, [x, y]⟩` in `k[x, y]` with a lazily computed
/// Gröbner basis.
#[derive(Debug)]
pub struct CommutingIdeal {
    algebra: LieAlgebraData,
    ring: RingRef,
    gens: Vec<MPoly>,
    gb: OnceLock<GroebnerBasis>,
}

impl Clone for CommutingIdeal {
    fn clone(&self) -> Self {
        let gb = OnceLock::new();
        if let Some(b) = self.gb.get() {
            let _ = gb.set(b.clone());
        }
        CommutingIdeal {
            algebra: self.algebra.clone(),
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            gb,
        }
    }
}

pub fn ig_generators(l: &LieAlgebraData) -> Result<CommutingIdeal, CommutingError> {
    ig_generators_in(l, MonomialOrder::DegRevLex)
}

pub fn ig_generators_in(l: &LieAlgebraData, order: MonomialOrder) -> Result<CommutingIdeal, CommutingError> {
    let ring = l.xy_ring(order);
    let n = l.dim();
    let xy = l.bracket_gvec(&l.generic_element(&ring, 0), &l.generic_element(&ring, n))?;
    let gens = (0..n)
        .map(|k| l.pair_const(&l.basis_vector(k), &xy))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CommutingIdeal {
        algebra: l.clone(),
        ring,
        gens,
        gb: OnceLock::new(),
    })
}

impl CommutingIdeal {
    pub fn algebra(&self) -> &LieAlgebraData {
        &self.algebra
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn gens(&self) -> &[MPoly] {
        &self.gens
    }

    pub fn gen(&self, k: usize) -> &MPoly {
        &self.gens[k]
    }

    /// `(g_k(pt))_k`, the coordinates of `κ [x, y]` at the point.
    pub fn eval(&self, pt: &PlanePair) -> Result<Vec<Rat>, CommutingError> {
        let at = pt.concat();
        Ok(self.gens.iter().map(|g| g.eval(&at)).collect::<Result<_, _>>()?)
    }

    /// The Gröbner basis, computed once through `cache`.
    pub fn basis(&self, cache: &GbCache, limits: &Limits) -> Result<&GroebnerBasis, CommutingError> {
        if let Some(gb) = self.gb.get() {
            return Ok(gb);
        }
        let (gb, _) = cache.get_or_compute(&self.gens, limits)?;
        let _ = self.gb.set(gb);
        Ok(self.gb.get().expect("set above"))
    }
}

/// `d(v_{k1} ∧ ... ∧ v_{kj}) = Σ_a (-1)^{a+1} g_{ka} · (v_{k1} ∧ ... v̂_{ka} ... ∧ v_{kj})`,
/// extended `S`-linearly.
pub fn differential(ideal: &CommutingIdeal, omega: &ExtElem) -> Result<ExtElem, CommutingError> {
    if !same_ring(omega.ring(), &ideal.ring) || omega.dim() != ideal.gens.len() {
        return Err(CommutingError::RingMismatch);
    }
    let n = omega.dim();
    let mut out = ExtElem::zero(&ideal.ring, n);
    for (key, f) in omega.terms() {
        for (a, &k) in key.iter().enumerate() {
            let g = &ideal.gens[k];
            if g.is_zero() {
                continue;
            }
            let mut rest = key.clone();
            rest.remove(a);
            let coeff = f * g;
            out.accumulate(rest, if a % 2 == 1 { -coeff } else { coeff });
        }
    }
    Ok(out)
}

/// `ε = ∧_{(i, m)} ε_i^(m)` in the order of [`ShiftFamily::eps_indices`].
pub fn eps_top(fam: &ShiftFamily) -> Result<ExtElem, CommutingError> {
    let n = fam.algebra().dim();
    let mut acc = ExtElem::basis(fam.ring(), n, &[])?;
    for (i, m) in fam.eps_indices() {
        acc = acc.wedge(&ExtElem::from_gvec(fam.eps(i, m)))?;
    }
    Ok(acc)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpsWedge {
    pub value: ExtElem,
    /// `deg ω + b > N`: the product lies in `Λ^{>N} = 0`.
    pub overflow: bool,
}

/// `ω ∧ ε` for `ε` from [`eps_top`].
pub fn wedge_with_eps(omega: &ExtElem, eps: &ExtElem) -> Result<EpsWedge, CommutingError> {
    let n = eps.dim();
    let overflow = match (omega.degree(), eps.degree()) {
        (Some(a), Some(b)) => a + b > n,
        _ => false,
    };
    if overflow {
        return Ok(EpsWedge {
            value: ExtElem::zero(eps.ring(), n),
            overflow,
        });
    }
    Ok(EpsWedge {
        value: omega.wedge(eps)?,
        overflow,
    })
}

fn label_of(l: &LieAlgebraData, key: &[usize]) -> String {
    let names: Vec<&str> = key.iter().map(|&k| l.basis_labels()[k].as_str()).collect();
    names.join("^")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WedgeCase {
    pub wedge: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubcomplexReport {
    /// `d(ε) = 0`.
    pub eps_closed: bool,
    /// `d(v_k ∧ ε) = g_k ε` for every basis `v_k`.
    pub degree1: Vec<WedgeCase>,
    /// `d(v_k ∧ v_l ∧ ε) = g_k (v_l ∧ ε) - g_l (v_k ∧ ε)` on the sampled pairs.
    pub degree2: Vec<WedgeCase>,
}

impl SubcomplexReport {
    pub fn passed(&self) -> bool {
        self.eps_closed && self.degree1.iter().chain(&self.degree2).all(|c| c.holds)
    }
}

/// Neighbouring pairs `(k, k + 1 mod N)`, sorted, used for the degree-2 part
/// of [`subcomplex_check`].
pub fn degree2_sample(n: usize) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = (0..n)
        .map(|k| {
            let l = (k + 1) % n;
            (k.min(l), k.max(l))
        })
        .filter(|(a, b)| a != b)
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

pub fn subcomplex_check(ideal: &CommutingIdeal, fam: &ShiftFamily) -> Result<SubcomplexReport, CommutingError> {
    let l = ideal.algebra();
    let n = l.dim();
    let b = l.b();
    let ring = ideal.ring();
    let eps = eps_top(fam)?;
    let eps_closed = differential(ideal, &eps)?.is_zero();
    let mut v_eps = Vec::with_capacity(n);
    let mut degree1 = Vec::with_capacity(n);
    for k in 0..n {
        let ve = wedge_with_eps(&ExtElem::basis(ring, n, &[k])?, &eps)?.value;
        let holds = differential(ideal, &ve)? == eps.mul_poly(ideal.gen(k))?;
        degree1.push(WedgeCase {
            wedge: label_of(l, &[k]),
            holds,
        });
        v_eps.push(ve);
    }
    let mut degree2 = Vec::new();
    if b + 2 <= n {
        for (k, j) in degree2_sample(n) {
            let w = wedge_with_eps(&ExtElem::basis(ring, n, &[k, j])?, &eps)?.value;
            let want = v_eps[j].mul_poly(ideal.gen(k))?.try_sub(&v_eps[k].mul_poly(ideal.gen(j))?)?;
            degree2.push(WedgeCase {
                wedge: label_of(l, &[k, j]),
                holds: differential(ideal, &w)? == want,
            });
        }
    }
    Ok(SubcomplexReport {
        eps_closed,
        degree1,
        degree2,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberRank {
    /// Wedge degree `i` of `Λ^i g ∧ ε`.
    pub degree: usize,
    /// Dimension of `Λ^i g ∧ ε(pt)`.
    pub dim: usize,
    /// Rank of `d` on it at the point.
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OffVarietyReport {
    pub point: String,
    /// Label of the basis vector `v` with `⟨v, [x, y]⟩ ≠ 0`.
    pub v: String,
    pub pairing: String,
    /// `(cycle, dc = 0, d(v ∧ c) = (dv) c)`.
    pub cycles: Vec<(String, bool, bool)>,
    pub ranks: Vec<FiberRank>,
}

impl OffVarietyReport {
    pub fn passed(&self) -> bool {
        self.cycles.iter().all(|c| c.1 && c.2)
    }
}

/// The cycles on which the contracting homotopy is verified: `ε`,
/// `d(v_S)` for the first `N` subsets `S` of sizes 2 and 3 and, when
/// `with_images` is set, the boundaries `d(v_j ∧ ε)` for every `j`.
/// Verdicts are memoized per basis vector `v`.
type Verdicts = Vec<(String, bool, bool)>;

pub struct HomotopyCycles {
    eps: ExtElem,
    cycles: Vec<(String, ExtElem)>,
    memo: Mutex<BTreeMap<usize, Verdicts>>,
}

pub fn homotopy_cycles(
    ideal: &CommutingIdeal,
    fam: &ShiftFamily,
    with_images: bool,
) -> Result<HomotopyCycles, CommutingError> {
    let l = ideal.algebra();
    let n = l.dim();
    let ring = ideal.ring();
    let eps = eps_top(fam)?;
    let mut cycles: Vec<(String, ExtElem)> = vec![("eps".into(), eps.clone())];
    for j in (0..n).filter(|_| with_images) {
        let w = wedge_with_eps(&ExtElem::basis(ring, n, &[j])?, &eps)?.value;
        cycles.push((format!("d({}^eps)", l.basis_labels()[j]), differential(ideal, &w)?));
    }
    for size in [2, 3] {
        for key in subsets(n, size).into_iter().take(n) {
            let w = ExtElem::basis(ring, n, &key)?;
            cycles.push((format!("d({})", label_of(l, &key)), differential(ideal, &w)?));
        }
    }
    Ok(HomotopyCycles {
        eps,
        cycles,
        memo: Mutex::new(BTreeMap::new()),
    })
}

impl HomotopyCycles {
    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    /// `(cycle, dc = 0, d(v_k ∧ c) = g_k c)` for every cycle.
    fn verdicts(&self, ideal: &CommutingIdeal, k: usize) -> Result<Vec<(String, bool, bool)>, CommutingError> {
        if let Some(v) = self.memo.lock().expect("memo lock").get(&k) {
            return Ok(v.clone());
        }
        let n = ideal.algebra().dim();
        let v = ExtElem::basis(ideal.ring(), n, &[k])?;
        let mut out = Vec::with_capacity(self.cycles.len());
        for (name, c) in &self.cycles {
            let closed = differential(ideal, c)?.is_zero();
            let lhs = differential(ideal, &v.wedge(c)?)?;
            out.push((name.clone(), closed, lhs == c.mul_poly(ideal.gen(k))?));
        }
        self.memo.lock().expect("memo lock").insert(k, out.clone());
        Ok(out)
    }
}

/// The contracting homotopy `c ↦ v ∧ c` at a point off the commuting
/// variety, verified symbolically on the cycles of [`homotopy_cycles`],
/// plus the ranks of `d` on the fibers of `Λ^i g ∧ ε` at the point.
pub fn offvariety_exactness(
    ideal: &CommutingIdeal,
    fam: &ShiftFamily,
    pt: &PlanePair,
) -> Result<OffVarietyReport, CommutingError> {
    offvariety_exactness_with(ideal, &homotopy_cycles(ideal, fam, true)?, pt)
}

pub fn offvariety_exactness_with(
    ideal: &CommutingIdeal,
    cycles: &HomotopyCycles,
    pt: &PlanePair,
) -> Result<OffVarietyReport, CommutingError> {
    let l = ideal.algebra();
    let n = l.dim();
    let ring = ideal.ring();
    let values = ideal.eval(pt)?;
    let Some(vk) = values.iter().position(|c| !c.is_zero()) else {
        return Err(CommutingError::OnVariety);
    };
    let checked = cycles.verdicts(ideal, vk)?;

    let at = pt.concat();
    let eps_at = cycles.eps.evaluate(&at)?;
    let b = cycles.eps.degree().unwrap_or(0);
    let mut ranks = Vec::new();
    for i in 0..=n.saturating_sub(b) {
        let layer: Vec<ExtElem> = subsets(n, i)
            .iter()
            .map(|s| ExtElem::basis(ring, n, s)?.wedge(&eps_at))
            .collect::<Result<_, _>>()?;
        let dim = span_rank(&layer, n, i + b)?;
        let images: Vec<ExtElem> = layer
            .iter()
            .map(|w| differential(ideal, w)?.evaluate(&at))
            .collect::<Result<_, _>>()?;
        let rank = if i + b == 0 { 0 } else { span_rank(&images, n, i + b - 1)? };
        ranks.push(FiberRank { degree: i, dim, rank });
    }
    Ok(OffVarietyReport {
        point: pt.label(),
        v: l.basis_labels()[vk].clone(),
        pairing: values[vk].to_string(),
        cycles: checked,
        ranks,
    })
}

/// Rank of constant wedges of degree `deg`.
fn span_rank(elems: &[ExtElem], n: usize, deg: usize) -> Result<usize, CommutingError> {
    let keys = subsets(n, deg);
    let rows = elems
        .iter()
        .filter(|e| !e.is_zero())
        .map(|e| e.coordinates(&keys).ok_or(CommutingError::Unsupported("non-constant wedge".into())))
        .collect::<Result<Vec<_>, _>>()?;
    if rows.is_empty() {
        return Ok(0);
    }
    Ok(RatMatrix::from_rows(rows).rank())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimReport {
    pub order: String,
    pub expected: usize,
    pub computed: Option<usize>,
    pub basis_size: usize,
}

impl DimReport {
    pub fn passed(&self) -> bool {
        self.computed == Some(self.expected)
    }
}

/// `dim S/I_g` from the leading-term ideal; expected `2b`.
pub fn dim_check(ideal: &CommutingIdeal, cache: &GbCache, limits: &Limits) -> Result<DimReport, CommutingError> {
    let gb = ideal.basis(cache, limits)?;
    Ok(DimReport {
        order: ideal.ring.order().name().to_string(),
        expected: 2 * ideal.algebra.b(),
        computed: krull_dim(gb),
        basis_size: gb.len(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeReport {
    /// Every `g_k` lies in the ideal of 2 x 2 minors.
    pub ig_in_minors: bool,
    /// Every minor lies in `I_g`.
    pub minors_in_ig: bool,
    pub minors: Vec<String>,
}

impl PrimeReport {
    pub fn passed(&self) -> bool {
        self.ig_in_minors && self.minors_in_ig
    }
}

/// The 2 x 2 minors of the generic matrix with rows `x` and `y`.
pub fn minors_2x3(ring: &RingRef) -> Vec<MPoly> {
    let x = |i| MPoly::var(ring, i);
    let y = |i| MPoly::var(ring, 3 + i);
    let mut out = Vec::new();
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        out.push(&(&x(i) * &y(j)) - &(&x(j) * &y(i)));
    }
    out
}

/// Rank 1: `I_g` equals the prime determinantal ideal of the generic
/// `2 x 3` matrix, by reduction of each generating set against the other's
/// basis.
pub fn radical_prime_check_rank1(ideal: &CommutingIdeal, limits: &Limits) -> Result<PrimeReport, CommutingError> {
    let l = ideal.algebra();
    if l.dim() != 3 || l.rank() != 1 {
        return Err(CommutingError::Unsupported(format!(
            "rank-1 primality needs a 3-dimensional algebra, got {}",
            l.name()
        )));
    }
    let minors = minors_2x3(&ideal.ring);
    let gb_minors = buchberger(&minors, limits)?;
    let gb_ig = buchberger(&ideal.gens, limits)?;
    Ok(PrimeReport {
        ig_in_minors: gb_minors.contains_all(&ideal.gens)?,
        minors_in_ig: gb_ig.contains_all(&minors)?,
        minors: minors.iter().map(MPoly::to_text).collect(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResolutionReport {
    pub betti: Vec<usize>,
    pub length: usize,
    pub expected_length: usize,
    /// `length - 1`, the projective dimension of `I_g`.
    pub projdim_ideal: usize,
    /// Auslander–Buchsbaum: `2N - length`.
    pub depth: usize,
    /// `4b - 2r - 2n`.
    pub expected_depth: usize,
    pub expected_betti: Option<Vec<usize>>,
    pub exact: bool,
    pub truncated: bool,
    pub minimal: bool,
    pub composites_vanish: bool,
    /// Maps in canonical text, one row list per matrix.
    pub maps: Vec<Vec<Vec<String>>>,
}

impl ResolutionReport {
    pub fn passed(&self) -> bool {
        !self.truncated
            && self.exact
            && self.minimal
            && self.composites_vanish
            && self.length == self.expected_length
            && self.expected_betti.as_ref().is_none_or(|b| *b == self.betti)
    }
}

/// Minimal free resolution of `S/I_g`; expected length `2n`, and Betti
/// numbers `(1, 3, 2)` in dimension 3.
pub fn resolution_check(
    ideal: &CommutingIdeal,
    max_len: usize,
    cache: &GbCache,
    limits: &Limits,
) -> Result<ResolutionReport, CommutingError> {
    let l = ideal.algebra();
    let gb = ideal.basis(cache, limits)?;
    let res = resolve_from_basis(gb, max_len, limits, true)?;
    let (nn, b, r, n) = (l.dim(), l.b(), l.rank(), l.n_small());
    let length = res.length();
    Ok(ResolutionReport {
        betti: res.betti().to_vec(),
        length,
        expected_length: 2 * n,
        projdim_ideal: length.saturating_sub(1),
        depth: (2 * nn).saturating_sub(length),
        expected_depth: 4 * b - 2 * r - 2 * n,
        expected_betti: (nn == 3).then(|| vec![1, 3, 2]),
        exact: res.exact,
        truncated: res.truncated,
        minimal: res.minimal,
        composites_vanish: res.composites_vanish(),
        maps: res.maps().iter().map(|m| m.to_text_rows()).collect(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenerationReport {
    /// `(v_k, coefficients of d(v_k ∧ ε) in I_g, d(v_k ∧ ε) = g_k ε)`.
    pub cases: Vec<(String, bool, bool)>,
}

impl GenerationReport {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.1 && c.2)
    }
}

/// `d(Λ^1 g ∧ ε) = I_g ε`: each image has coefficients in `I_g` and equals
/// `g_k ε`.
pub fn lambda1_generates(
    ideal: &CommutingIdeal,
    fam: &ShiftFamily,
    cache: &GbCache,
    limits: &Limits,
) -> Result<GenerationReport, CommutingError> {
    let l = ideal.algebra();
    let n = l.dim();
    let gb = ideal.basis(cache, limits)?;
    let eps = eps_top(fam)?;
    let mut cases = Vec::with_capacity(n);
    for k in 0..n {
        let w = wedge_with_eps(&ExtElem::basis(ideal.ring(), n, &[k])?, &eps)?.value;
        let image = differential(ideal, &w)?;
        let mut inside = true;
        for f in image.terms().values() {
            inside &= gb.ideal_member(f)?;
        }
        cases.push((l.basis_labels()[k].clone(), inside, image == eps.mul_poly(ideal.gen(k))?));
    }
    Ok(GenerationReport { cases })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VanishingReport {
    pub diagonal: usize,
    pub polynomial_pairs: usize,
    pub failures: Vec<String>,
}

impl VanishingReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// The generators vanish on `(x, x)` and, with a defining representation,
/// on `(x, q(x))` for `q(t) = t^2 + 2t` and `q(t) = t^3 - t`, projected to
/// the algebra.
pub fn vanishing_check(ideal: &CommutingIdeal, points: &[PlanePair]) -> Result<VanishingReport, CommutingError> {
    let l = ideal.algebra();
    let mut rep = VanishingReport {
        diagonal: 0,
        polynomial_pairs: 0,
        failures: Vec::new(),
    };
    let mut test = |pt: PlanePair, what: &str, count: &mut usize| -> Result<(), CommutingError> {
        *count += 1;
        if ideal.eval(&pt)?.iter().any(|c| !c.is_zero()) {
            rep.failures.push(format!("{what} {}", pt.label()));
        }
        Ok(())
    };
    let mut diag = 0;
    let mut poly = 0;
    for pt in points {
        test(PlanePair::new(pt.x.clone(), pt.x.clone()), "diagonal", &mut diag)?;
        if let Some(m) = l.to_matrix(&pt.x) {
            let size = m.rows();
            let m2 = m.mul(&m);
            let m3 = m2.mul(&m);
            for q in [m2.add(&m.scale(&rat(2))), m3.add(&m.scale(&rat(-1)))] {
                let shift = q.trace() / rat(size as i64);
                let traceless = q.add(&RatMatrix::identity(size).scale(&-shift));
                let y: Option<CoeffVector> = l.from_matrix(&traceless);
                if let Some(y) = y {
                    test(PlanePair::new(pt.x.clone(), y), "polynomial", &mut poly)?;
                }
            }
        }
    }
    rep.diagonal = diag;
    rep.polynomial_pairs = poly;
    Ok(rep)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RadicalSpotReport {
    pub samples: usize,
    pub passed: usize,
    pub failures: Vec<String>,
}

/// Random elements `Σ_k c_k m_k g_k` of `I_g` (integer `c_k`, monomials
/// `m_k` of degree ≤ 1) tested for membership in the radical through the
/// Rabinowitsch extension of the cached basis.
pub fn radical_spot_checks(
    ideal: &CommutingIdeal,
    count: usize,
    seed: u64,
    cache: &GbCache,
    limits: &Limits,
) -> Result<RadicalSpotReport, CommutingError> {
    let gb = ideal.basis(cache, limits)?;
    let ring = ideal.ring();
    let nv = ring.nvars();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rep = RadicalSpotReport {
        samples: count,
        passed: 0,
        failures: Vec::new(),
    };
    for _ in 0..count {
        let mut f = MPoly::zero(ring);
        for g in &ideal.gens {
            let c = rat(rng.gen_range(-3..=3));
            let pick = rng.gen_range(0..=nv);
            let m = if pick == nv { MPoly::one(ring) } else { MPoly::var(ring, pick) };
            f = &f + &(&m * g).scale(&c);
        }
        if f.is_zero() {
            f = ideal.gens[0].clone();
        }
        if radical_member_gb(&f, gb, limits)? {
            rep.passed += 1;
        } else {
            rep.failures.push(f.to_text());
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests;
