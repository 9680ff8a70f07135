//! The check catalog. Every check returns one [`Outcome`] per point (or a
//! single symbolic one); the driver adds names, anchors and timing.

use super::{CheckError, Outcome, RunConfig, Status};
use crate::commuting::{
    dim_check, differential, homotopy_cycles, ig_generators, ig_generators_in, lambda1_generates,
    offvariety_exactness_with, radical_prime_check_rank1, radical_spot_checks, resolution_check, subcomplex_check,
    subsets, vanishing_check, CommutingIdeal, ExtElem, HomotopyCycles,
};
use crate::groebner::cache::GbCache;
use crate::groebner::krull_dim;
use crate::invariants::{
    centralizer_defect, epsilons, generators, homogeneity_defect, invariance_defect, kostant_regularity_check,
    pairing_defect, InvariantSet,
};
use crate::liealg::{CoeffVector, LieAlgebraData, LieError};
use crate::poly::MonomialOrder;
use crate::rational::rat;
use num_traits::Zero;
use crate::shiftfam::{
    build_family, char_kill, equivariance_spot_check, expansion_failures, mf_commutativity_check, sample_points,
    sc_identity_suite, MfMode, PlanePair, PointChecks, ScReport, ShiftFamily,
};
use serde::Serialize;
use serde_json::{json, Value};
use std::sync::OnceLock;

type CheckFn = fn(&Context) -> Result<Vec<Outcome>, CheckError>;

#[derive(Clone, Debug, Serialize)]
pub struct CheckInfo {
    pub name: &'static str,
    pub anchor: &'static str,
    pub summary: &'static str,
    #[serde(skip)]
    pub(crate) run: CheckFn,
}

macro_rules! check {
    ($name:literal, $anchor:literal, $summary:literal, $run:expr) => {
        CheckInfo {
            name: $name,
            anchor: $anchor,
            summary: $summary,
            run: $run,
        }
    };
}

static CATALOG: [CheckInfo; 22] = [
    check!(
        "structure_axioms",
        "§int1, invariant bilinear form",
        "antisymmetry, Jacobi, invariance and nondegeneracy of the form; sum of degrees = b",
        structure_axioms
    ),
    check!(
        "invariant_generators",
        "§int1, basic invariants",
        "each p_i is ad-invariant and homogeneous of degree d_i",
        invariant_generators
    ),
    check!(
        "kostant_gradient",
        "Proof psc1(iv)",
        "[x, eps_i(x)] = 0, <eps_i(x), y> = p_i^(1)(x, y) and homogeneity of eps_i",
        kostant_gradient
    ),
    check!(
        "kostant_regularity",
        "§int1, Kostant regularity",
        "x regular iff the eps_i(x) are independent, and then they span g^x",
        kostant_regularity
    ),
    check!(
        "shift_expansion",
        "§int1, argument-shift expansion",
        "sum_m p^(m) t^m = p(x + ty) and the bidegrees of eps_i^(m)",
        shift_expansion
    ),
    check!(
        "mf_commutativity",
        "Remark rint",
        "pairwise Poisson brackets of the shift family vanish",
        mf_commutativity
    ),
    check!(
        "char_kill",
        "Thm. tsc1(iii)",
        "<eps_i^(m)(x, y), [x, y]> is the zero polynomial",
        char_kill_check
    ),
    check!(
        "v_rank",
        "Prop. psc1(v)",
        "dim V_{x,y} = b on Omega, unchanged along the plane",
        v_rank
    ),
    check!("c_rank", "Prop. psc2(ii)", "dim C_{x,y} = b - r on Omega", c_rank),
    check!("bracket_spaces", "Prop. psc1(ii)", "[x, V_{x,y}] = [y, V_{x,y}]", bracket_spaces),
    check!(
        "orthocomplement",
        "Prop. psc1(iii); Lemma lsc2",
        "[x, V] and C are the kappa-orthocomplement of V",
        orthocomplement
    ),
    check!(
        "centralizer_containment",
        "Prop. psc1(iv)",
        "g^z lies in V_{x,y} for regular z in the plane",
        centralizer_containment
    ),
    check!(
        "equivariance",
        "Prop. psc1(vi)",
        "eps_i^(m)(gx, gy) = g eps_i^(m)(x, y) for g = exp(ad v)",
        equivariance
    ),
    check!(
        "ig_vanishing",
        "§mr, generators of I_g",
        "the g_k are bilinear and vanish on (x, x) and (x, q(x))",
        ig_vanishing
    ),
    check!(
        "d_squared",
        "§mr, graded complex",
        "d(d(w)) = 0 on every basis wedge of degree 1 to 3",
        d_squared
    ),
    check!(
        "subcomplex",
        "§mr, subcomplex",
        "d(eps) = 0 and d(v ∧ eps) = (dv) eps",
        subcomplex
    ),
    check!(
        "offvariety_homotopy",
        "Lemma l2mr",
        "d(v ∧ c) = (dv) c on cycles at points off the commuting variety",
        offvariety_homotopy
    ),
    check!("dim_check", "Thm. tmr (proof)", "Krull dimension of S/I_g = 2b", dim),
    check!(
        "radical_prime_rank1",
        "Thm. tint",
        "rank 1: I_g equals the prime ideal of 2 x 2 minors",
        radical_prime_rank1
    ),
    check!(
        "resolution",
        "Thm. t2int",
        "minimal free resolution of S/I_g has length 2n",
        resolution
    ),
    check!(
        "lambda1_generation",
        "Thm. tmr (proof, exact sequence)",
        "d(v_k ∧ eps) = g_k eps with coefficients in I_g",
        lambda1_generation
    ),
    check!(
        "radical_samples",
        "Thm. t2int (radical)",
        "sampled elements of I_g lie in its radical",
        radical_samples
    ),
];

/// The static check catalog.
pub fn list_checks() -> &'static [CheckInfo] {
    &CATALOG
}

/// Points whose index is below this bound are used by the per-point checks
/// that are expensive at every point.
const FEW_POINTS: usize = 10;
const RADICAL_SAMPLES: usize = 50;

type Cached<T> = OnceLock<Result<T, CheckError>>;

pub(crate) struct Context {
    algebra: LieAlgebraData,
    config: RunConfig,
    cache: GbCache,
    points: Vec<PlanePair>,
    inv: Cached<InvariantSet>,
    fam: Cached<ShiftFamily>,
    ideal: Cached<CommutingIdeal>,
    sc: Cached<ScReport>,
    cycles: Cached<HomotopyCycles>,
}

impl Context {
    pub fn new(algebra: LieAlgebraData, config: RunConfig, cache: GbCache) -> Self {
        let points = sample_points(config.seed, config.sample_count, algebra.dim());
        Context {
            algebra,
            config,
            cache,
            points,
            inv: OnceLock::new(),
            fam: OnceLock::new(),
            ideal: OnceLock::new(),
            sc: OnceLock::new(),
            cycles: OnceLock::new(),
        }
    }

    pub fn algebra_name(&self) -> &str {
        self.algebra.name()
    }

    fn inv(&self) -> Result<&InvariantSet, CheckError> {
        let r = self.inv.get_or_init(|| {
            generators(&self.algebra).map_err(|e| CheckError::Unsupported(format!("invariant generators: {e}")))
        });
        r.as_ref().map_err(Clone::clone)
    }

    fn fam(&self) -> Result<&ShiftFamily, CheckError> {
        let r = self.fam.get_or_init(|| Ok(build_family(&self.algebra, self.inv()?)?));
        r.as_ref().map_err(Clone::clone)
    }

    fn ideal(&self) -> Result<&CommutingIdeal, CheckError> {
        let r = self.ideal.get_or_init(|| Ok(ig_generators(&self.algebra)?));
        r.as_ref().map_err(Clone::clone)
    }

    fn sc(&self) -> Result<&ScReport, CheckError> {
        let r = self.sc.get_or_init(|| Ok(sc_identity_suite(self.fam()?, &self.points)?));
        r.as_ref().map_err(Clone::clone)
    }

    fn cycles(&self) -> Result<&HomotopyCycles, CheckError> {
        let r = self
            .cycles
            .get_or_init(|| {
                let with_images = self.algebra.dim() <= 3 || self.config.heavy;
                Ok(homotopy_cycles(self.ideal()?, self.fam()?, with_images)?)
            });
        r.as_ref().map_err(Clone::clone)
    }

    fn heavy_gate(&self, what: &str) -> Result<(), CheckError> {
        if self.algebra.dim() > 3 && !self.config.heavy {
            return Err(CheckError::Unsupported(format!("{what} for dim g > 3 requires --heavy")));
        }
        Ok(())
    }
}

fn compare(index: usize, point: String, expected: Value, computed: Value, witness: Value) -> Outcome {
    let status = if expected == computed { Status::Passed } else { Status::Failed };
    Outcome {
        index,
        point,
        status,
        expected,
        computed,
        witness,
    }
}

fn symbolic(index: usize, expected: Value, computed: Value, witness: Value) -> Outcome {
    compare(index, "symbolic".into(), expected, computed, witness)
}

fn vector_label(x: &[crate::rational::Rat]) -> String {
    let parts: Vec<String> = x.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(","))
}

fn structure_axioms(ctx: &Context) -> Result<Vec<Outcome>, CheckError> {
    let l = &ctx.algebra;
    let axioms = match l.validate() {
        Ok(()) => "ok".to_string(),
        Err(e) => e.to_string(),
    };
    let sum: u32 = l.degrees().iter().sum();
    Ok(vec![symbolic(
        0,
        json!({"axioms": "ok", "sum_degrees": l.b()}),
        json!({"axioms": axioms, "sum_degrees": sum}),
        json!({"dim": l.dim(), "rank": l.rank(), "b": l.b(), "n": l.n_small(), "degrees": l.degrees()}),
    )])
}

fn invariant_generators(ctx: &Context) -> Result<Vec<Outcome>, CheckError> {
    let l = &ctx.algebra;
    let inv = ctx.inv()?;
    let mut out = Vec::new();
    for (i, p) in inv.polys().iter().enumerate() {
        let mut nonzero = 0usize;
        for k in 0..l.dim() {
            if !invariance_defect(l, p, k)?.is_zero() {
                nonzero += 1;
            }
        }
        out.push(symbolic(
            i,
            json!({"degree": l.degrees()[i], "homogeneous": true, "noninvariant_directions": 0}),
            json!({"degree": p.total_degree(), "homogeneous": p.is_homogeneous(), "noninvariant_directions": nonzero}),
            json!({"p": format!("p{}", i + 1), "terms": p.len()}),
        ));
    }
    Ok(out)
}

fn text_or_zero(zero: bool, text: impl FnOnce() -> String) -> String {
    if zero {
        "0".into()
    } else {
        text()
    }
}

fn kostant_gradient(ctx: &Context) -> Result<Vec<Outcome>, CheckError> {
    let l = &ctx.algebra;
    let inv = ctx.inv()?;
    let mut out = Vec::new();
    for eps in epsilons(l, inv)? {
        let c = centralizer_defect(l, &eps)?;
        let p = pairing_defect(l, inv, &eps)?;
        let h = homogeneity_defect(l, inv, &eps)?;
        out.push(symbolic(
            eps.index,
            json!({"centralizer": "0", "pairing": "0", "homogeneity": "0"}),
            json!({
                "centralizer": text_or_zero(c.is_zero(), || c.to_string()),
                "pairing": text_or_zero(p.is_zero(), || p.to_text()),
                "homogeneity": text_or_zero(h.is_zero(), || h.to_string()),
            }),
            json!({"eps": format!("eps{}", eps.index + 1)}),
        ));
    }
    Ok(out)
}

fn kostant_regularity(ctx: &Context) -> Result<Vec<Outcome>, CheckError> {
    let l = &ctx.algebra;
    let eps = epsilons(l, ctx.inv()?)?;
    let xs: Vec<CoeffVector> = std::iter::once(vec![rat(0); l.dim()])
        .chain(ctx.points.iter().map(|p| p.x.clone()))
        .collect();
    let rep = kostant_regularity_check(l, &eps, &xs)?;
    Ok(rep
        .points
        .iter()
        .zip(&xs)
        .enumerate()
        .map(|(i, (p, x))| Outcome {
            index: i,
            point: vector_label(x),
            status: if p.consistent { Status::Passed } else { Status::Failed },
            expected: json!({"independent": p.regular, "spans_centralizer": p.regular.then_some(true)}),
            computed: json!({"independent": p.independent, "spans_centralizer": p.spans_centralizer}),
            witness: json!({"regular": p.regular}),
        })
        .collect())
}

fn shift_expansion(ctx: &Context) -> Result<Vec<Outcome>, CheckError> {
    let failures = expansion_failures(ctx.fam()?, ctx.inv()?)?;
    Ok(vec![symbolic(
        0,
        json!({"failures": Vec::<String>::new()}),
        json!({"failures": failures}),
        json!({"degrees": ctx.algebra.degrees()}),
    )])
}

fn mf_commutativity(ctx: &Context) -> Result<Vec<Outcome>, CheckError> {
    let fam = ctx.fam()?;
    let rep = mf_commutativity_check(fam, &MfMode::Symbolic)?;
    let nonzero = |pairs: &[crate::shiftfam::MfPair]| {
        pairs
            .iter()
            .filter(|p| p.bracket != "0")
            .map(|p| format!("{{{}, {}}} = {}", p.left, p.right, p.bracket))
            .collect::<Vec<_>>()
    };
    let mut out = vec![symbolic(
        0,
        json!({"functions": fam.algebra().b(), "nonzero_brackets": Vec::<String>::new()}),
        json!({"functions": rep.functions, "nonzero_brackets": nonzero(&rep.pairs)}),
        json!({"pairs": rep.pairs.len(), "family": fam.mf_family().into_iter().map(|f| f.0).collect::<Vec<_>>()}),
    )];
    let xs: Vec<CoeffVector> = ctx.points.iter().take(FEW_POINTS).map(|p| p.x.clone()).collect();
    let sampled = mf_commutativity_check(fam, &MfMode::Sampled(xs.clone()))?;
    for (k, x) in xs.iter().enumerate() {
        let pairs: Vec<_> = sampled.pairs.iter().filter(|p| p.point == Some(k)).cloned().collect();
        out.push(compare(
            k + 1,
            vector_label(x),
            json!({"nonzero_brackets": Vec::<String>::new()}),
            json!({"nonzero_brackets": nonzero(&pairs)}),
            json!({"pairs": pairs.len()}),
        ));
    }
    Ok(out)
}

fn char_kill_check(ctx: &Context) -> Result<Vec<Outcome>, CheckError> {
    let fam = ctx.fam()?;
    fam.eps_indices()
        .into_iter()
        .enumerate()
        .map(|(k, (i, m))| {
            let p = char_kill(fam, i, m)?;
            Ok(symbolic(k, json!("0"), json!(p.to_text()), json!({"i": i + 1, "m": m})))
        })
        .collect()
}

fn per_point<F>(ctx: &Context, f: F) -> Result<Vec<Outcome>, CheckError>
where
    F: Fn(&PointChecks, usize, usize) -> (Value, Value),
{
    let (b, r) = (ctx.algebra.b(), ctx.algebra.rank());
    Ok(ctx
        .sc()?
        .points
        .iter()
        .map(|p| match &p.skipped {
            Some(why) => Outcome::skipped(p.index, p.point.clone(), why),
            None => {
                let (expected, computed) = f(p, b, r);
                compare(p.index, p.point.clone(), expected, computed, json!({"in_omega": p.in_omega}))
            }
        })
        .collect())
}

fn v_rank(ctx: &Context) -> Result<Vec<Outcome>, CheckError> {
    per_point(ctx, |p, b, _| {
        (
            json!({"dim_v": b, "plane_invariant": true}),
            json!({"dim_v": p.dim_v, "plane_invariant": p.plane_invariant}),
        )
    })
}

fn c_rank(ctx: &Context) -> Result<Vec<Outcome>, CheckError> {
    per_point(ctx, |p, b, r| (json!({"dim_c": b - r}), json!({"dim_c": p.dim_c})))
}

fn bracket_spaces(ctx: &Context) -> Result<Vec<Outcome>, CheckError> {
    per_point(ctx, |p, _, _| (json!({"agree": true}), json!({"agree": p.brackets_agree})))
}

fn orthocomplement(ctx: &Context) -> Result<Vec<Outcome>, CheckError> {
    per_point(ctx, |p, _, _| {
        (
            json!({"isotropic": true, "xv_orthocomplement": true, "c_orthocomplement": true}),
            json!({
                "isotropic": p.isotropic,
                "xv_orthocomplement": p.xv_orthocomplement,
                "c_orthocomplement": p.c_orthocomplement,
            }),
        )
    })
}

fn centralizer_containment(ctx: &Context) -> Result<Vec<Outcome>, CheckError> {
    per_point(ctx, |p, _, _| {
        (json!({"contained": true}), json!({"contained": p.centralizers_contained}))
    })
}

fn equivariance(ctx: &Context) -> Result<Vec<Outcome>, CheckError> {
    let fam = ctx.fam()?;
    let v = ctx.algebra.basis_vector(0);
    let mut out = Vec::new();
    for (k, pt) in ctx.points.iter().take(FEW_POINTS).enumerate() {
        let rep = match equivariance_spot_check(fam, &v, pt) {
            Ok(r) => r,
            Err(crate::shiftfam::ShiftError::Lie(LieError::NotNilpotent)) => {
                return Err(CheckError::Unsupported("first basis vector is not ad-nilpotent".into()))
            }
            Err(e) => return Err(e.into()),
        };
        let computed: Vec<bool> = rep.cases.iter().map(|c| c.2).collect();
        out.push(compare(
            k,
            pt.label(),
            json!(vec![true; computed.len()]),
            json!(computed),
            json!({"v": ctx.algebra.basis_labels()[0]}),
        ));
    }
    Ok(out)
}

fn ig_vanishing(ctx: &Context) -> Result<Vec<Outcome>, CheckError> {
    let ideal = ctx.ideal()?;
    let n = ctx.algebra.dim();
    let bilinear = ideal
        .gens()
        .iter()
        .all(|g| g.bidegrees(0..n, n..2 * n).iter().all(|&bd| bd == (1, 1)));
    let rep = vanishing_check(ideal, &ctx.points)?;
    Ok(vec![symbolic(
        0,
        json!({"generators": n, "bilinear": true, "failures": Vec::<String>::new()}),
        json!({"generators": ideal.gens().len(), "bilinear": bilinear, "failures": rep.failures}),
        json!({"diagonal_pairs": rep.diagonal, "polynomial_pairs": rep.polynomial_pairs}),
    )])
}

fn d_squared(ctx: &Context) -> Result<Vec<Outcome>, CheckError> {
    let ideal = ctx.ideal()?;
    let n = ctx.algebra.dim();
    let mut checked = 0usize;
    let mut nonzero = Vec::new();
    for size in 1..=3.min(n) {
        for key in subsets(n, size) {
            let w = ExtElem::basis(ideal.ring(), n, &key)?;
            checked += 1;
            if !differential(ideal, &differential(ideal, &w)?)?.is_zero() {
                nonzero.push(format!("{key:?}"));
            }
        }
    }
    Ok(vec![symbolic(
        0,
        json!({"nonzero": Vec::<String>::new()}),
        json!({"nonzero": nonzero}),
        json!({"wedges": checked}),
    )])
}

fn subcomplex(ctx: &Context) -> Result<Vec<Outcome>, CheckError> {
    let rep = subcomplex_check(ctx.ideal()?, ctx.fam()?)?;
    let failing: Vec<&str> = rep
        .degree1
        .iter()
        .chain(&rep.degree2)
        .filter(|c| !c.holds)
        .map(|c| c.wedge.as_str())
        .collect();
    Ok(vec![symbolic(
        0,
        json!({"eps_closed": true, "failing": Vec::<String>::new()}),
        json!({"eps_closed": rep.eps_closed, "failing": failing}),
        json!({"degree1": rep.degree1.len(), "degree2": rep.degree2.len()}),
    )])
}

fn offvariety_homotopy(ctx: &Context) -> Result<Vec<Outcome>, CheckError> {
    let ideal = ctx.ideal()?;
    let cycles = ctx.cycles()?;
    let mut out = Vec::new();
    for (k, pt) in ctx.points.iter().enumerate() {
        if out.len() == FEW_POINTS {
            break;
        }
        if ideal.eval(pt)?.iter().all(|c| c.is_zero()) {
            out.push(Outcome::skipped(k, pt.label(), "on the commuting variety"));
            continue;
        }
        let rep = offvariety_exactness_with(ideal, cycles, pt)?;
        let failing: Vec<&str> = rep
            .cycles
            .iter()
            .filter(|c| !(c.1 && c.2))
            .map(|c| c.0.as_str())
            .collect();
        out.push(compare(
            k,
            rep.point.clone(),
            json!({"failing": Vec::<String>::new()}),
            json!({"failing": failing}),
            json!({"v": rep.v, "pairing": rep.pairing, "cycles": rep.cycles.len(), "fiber_ranks": rep.ranks}),
        ));
    }
    Ok(out)
}

fn dim(ctx: &Context) -> Result<Vec<Outcome>, CheckError> {
    let ideal = ctx.ideal()?;
    let limits = ctx.config.limits.start();
    let rep = dim_check(ideal, &ctx.cache, &limits)?;
    let mut expected = json!({"krull_dim": rep.expected});
    let mut computed = json!({"krull_dim": rep.computed});
    let mut witness = json!({"order": rep.order, "basis_size": rep.basis_size});
    if ctx.algebra.dim() <= 3 {
        let lex = dim_check(&ig_generators_in(&ctx.algebra, MonomialOrder::Lex)?, &ctx.cache, &limits)?;
        expected["lex_krull_dim"] = json!(lex.expected);
        computed["lex_krull_dim"] = json!(lex.computed);
        witness["lex_basis_size"] = json!(lex.basis_size);
    }
    Ok(vec![symbolic(0, expected, computed, witness)])
}

fn radical_prime_rank1(ctx: &Context) -> Result<Vec<Outcome>, CheckError> {
    let rep = radical_prime_check_rank1(ctx.ideal()?, &ctx.config.limits.start())?;
    Ok(vec![symbolic(
        0,
        json!({"ig_in_minors": true, "minors_in_ig": true}),
        json!({"ig_in_minors": rep.ig_in_minors, "minors_in_ig": rep.minors_in_ig}),
        json!({"minors": rep.minors}),
    )])
}

fn resolution(ctx: &Context) -> Result<Vec<Outcome>, CheckError> {
    ctx.heavy_gate("the resolution")?;
    let ideal = ctx.ideal()?;
    let max_len = 2 * ctx.algebra.dim() + 1;
    let rep = resolution_check(ideal, max_len, &ctx.cache, &ctx.config.limits.start())?;
    let mut expected = json!({
        "length": rep.expected_length,
        "projdim_ideal": rep.expected_length.saturating_sub(1),
        "depth": rep.expected_depth,
        "exact": true,
        "minimal": true,
        "truncated": false,
    });
    let mut computed = json!({
        "length": rep.length,
        "projdim_ideal": rep.projdim_ideal,
        "depth": rep.depth,
        "exact": rep.exact && rep.composites_vanish,
        "minimal": rep.minimal,
        "truncated": rep.truncated,
    });
    if let Some(b) = &rep.expected_betti {
        expected["betti"] = json!(b);
        computed["betti"] = json!(rep.betti);
    }
    Ok(vec![symbolic(0, expected, computed, json!({"betti": rep.betti, "maps": rep.maps}))])
}

fn lambda1_generation(ctx: &Context) -> Result<Vec<Outcome>, CheckError> {
    ctx.heavy_gate("the generation check")?;
    let rep = lambda1_generates(ctx.ideal()?, ctx.fam()?, &ctx.cache, &ctx.config.limits.start())?;
    let failing: Vec<&str> = rep
        .cases
        .iter()
        .filter(|c| !(c.1 && c.2))
        .map(|c| c.0.as_str())
        .collect();
    Ok(vec![symbolic(
        0,
        json!({"failing": Vec::<String>::new()}),
        json!({"failing": failing}),
        json!({"basis_vectors": rep.cases.len()}),
    )])
}

fn radical_samples(ctx: &Context) -> Result<Vec<Outcome>, CheckError> {
    let ideal = ctx.ideal()?;
    let limits = ctx.config.limits.start();
    let rep = radical_spot_checks(ideal, RADICAL_SAMPLES, ctx.config.seed, &ctx.cache, &limits)?;
    let dim = krull_dim(ideal.basis(&ctx.cache, &limits)?);
    let expected_dim = 2 * ctx.algebra.b();
    let mut witness = json!({"failures": rep.failures, "krull_dim": dim});
    if ctx.algebra.dim() > 3 && rep.passed == rep.samples && dim == Some(expected_dim) {
        witness["note"] = json!("dimension 2b and every radical sample pass");
    }
    Ok(vec![symbolic(
        0,
        json!({"in_radical": rep.samples}),
        json!({"in_radical": rep.passed}),
        witness,
    )])
}
