use super::*;
use crate::invariants::generators;
use crate::liealg::make_sl;
use crate::poly::Monomial;
use crate::rational::ratio;
use crate::shiftfam::{build_family, sample_points};
use proptest::prelude::*;
use std::time::Instant;

struct Fixture {
    fam: ShiftFamily,
    ideal: CommutingIdeal,
}

fn fixture(n: usize) -> &'static Fixture {
    static F2: OnceLock<Fixture> = OnceLock::new();
    static F3: OnceLock<Fixture> = OnceLock::new();
    let cell = if n == 2 { &F2 } else { &F3 };
    cell.get_or_init(|| {
        let l = make_sl(n).unwrap();
        let inv = generators(&l).unwrap();
        Fixture {
            fam: build_family(&l, &inv).unwrap(),
            ideal: ig_generators(&l).unwrap(),
        }
    })
}

fn v(xs: &[i64]) -> CoeffVector {
    xs.iter().map(|&x| rat(x)).collect()
}

fn parse(r: &RingRef, s: &str) -> MPoly {
    MPoly::parse(r, s).unwrap()
}

#[test]
fn sl2_generators() {
    let ig = &fixture(2).ideal;
    let r = ig.ring();
    assert_eq!(ig.gens().len(), 3);
    assert_eq!(ig.gen(0), &parse(r, "-8*xh*yf + 8*xf*yh"));
    assert_eq!(ig.gen(1), &parse(r, "8*xe*yf - 8*xf*ye"));
    // 4 times the e-coordinate of [x, y], from [h, e] = 2e.
    assert_eq!(ig.gen(2), &parse(r, "8*xh*ye - 8*xe*yh"));
}

#[test]
fn generators_are_bilinear_and_vanish_on_commuting_pairs() {
    for n in [2, 3] {
        let ig = &fixture(n).ideal;
        let nn = ig.algebra().dim();
        assert_eq!(ig.gens().len(), nn);
        for g in ig.gens() {
            assert!(g.bidegrees(0..nn, nn..2 * nn).iter().all(|&bd| bd == (1, 1)));
        }
        let rep = vanishing_check(ig, &sample_points(1, 20, nn)).unwrap();
        assert_eq!((rep.diagonal, rep.polynomial_pairs), (20, 40));
        assert!(rep.passed(), "{:?}", rep.failures);
    }
}

#[test]
fn differential_on_basis() {
    let ig = &fixture(2).ideal;
    let r = ig.ring();
    for k in 0..3 {
        let d = differential(ig, &ExtElem::basis(r, 3, &[k]).unwrap()).unwrap();
        assert_eq!(d, ExtElem::monomial(3, &[], ig.gen(k).clone()).unwrap());
    }
    let top = differential(ig, &ExtElem::basis(r, 3, &[0, 1, 2]).unwrap()).unwrap();
    let want = ExtElem::monomial(3, &[1, 2], ig.gen(0).clone())
        .unwrap()
        .try_sub(&ExtElem::monomial(3, &[0, 2], ig.gen(1).clone()).unwrap())
        .unwrap()
        .try_add(&ExtElem::monomial(3, &[0, 1], ig.gen(2).clone()).unwrap())
        .unwrap();
    assert_eq!(top, want);
    let other = ig_generators(&make_sl(3).unwrap()).unwrap();
    assert_eq!(differential(&other, &top), Err(CommutingError::RingMismatch));
}

#[test]
fn d_squared_vanishes_on_all_basis_wedges() {
    for n in [2, 3] {
        let ig = &fixture(n).ideal;
        let nn = ig.algebra().dim();
        for size in 1..=3 {
            for key in subsets(nn, size) {
                let w = ExtElem::basis(ig.ring(), nn, &key).unwrap();
                let dd = differential(ig, &differential(ig, &w).unwrap()).unwrap();
                assert!(dd.is_zero(), "sl{n} {key:?}");
            }
        }
    }
}

#[test]
fn sl2_eps_top() {
    let fix = fixture(2);
    let eps = eps_top(&fix.fam).unwrap();
    let r = fix.ideal.ring();
    assert_eq!(eps.degree(), Some(2));
    let q = ratio(1, 16);
    assert_eq!(eps.coeff(&[0, 1]).unwrap(), &parse(r, "xe*yh - xh*ye").scale(&q));
    assert_eq!(eps.coeff(&[0, 2]).unwrap(), &parse(r, "xe*yf - xf*ye").scale(&q));
    assert_eq!(eps.coeff(&[1, 2]).unwrap(), &parse(r, "xh*yf - xf*yh").scale(&q));
}

#[test]
fn wedge_with_eps_degrees() {
    let fix = fixture(2);
    let r = fix.ideal.ring();
    let eps = eps_top(&fix.fam).unwrap();
    let one = wedge_with_eps(&ExtElem::basis(r, 3, &[1]).unwrap(), &eps).unwrap();
    assert!(!one.overflow);
    assert_eq!(one.value.degree(), Some(3));
    let two = wedge_with_eps(&ExtElem::basis(r, 3, &[0, 2]).unwrap(), &eps).unwrap();
    assert!(two.overflow && two.value.is_zero());
    let zero = wedge_with_eps(&ExtElem::zero(r, 3), &eps).unwrap();
    assert!(!zero.overflow && zero.value.is_zero());
}

#[test]
fn subcomplex_sl2() {
    let fix = fixture(2);
    let rep = subcomplex_check(&fix.ideal, &fix.fam).unwrap();
    assert!(rep.eps_closed);
    assert_eq!(rep.degree1.len(), 3);
    assert!(rep.degree2.is_empty());
    assert!(rep.passed());
}

#[test]
fn subcomplex_sl3() {
    let fix = fixture(3);
    let rep = subcomplex_check(&fix.ideal, &fix.fam).unwrap();
    assert_eq!((rep.degree1.len(), rep.degree2.len()), (8, 8));
    assert!(rep.passed(), "{rep:?}");
}

#[test]
fn offvariety_at_e_f() {
    let fix = fixture(2);
    let pt = PlanePair::new(v(&[1, 0, 0]), v(&[0, 0, 1]));
    let rep = offvariety_exactness(&fix.ideal, &fix.fam, &pt).unwrap();
    assert_eq!((rep.v.as_str(), rep.pairing.as_str()), ("h", "8"));
    assert!(rep.passed());
    // Λ^0 ∧ ε(pt) is a line, Λ^1 ∧ ε(pt) the top degree.
    assert_eq!(rep.ranks[0], FiberRank { degree: 0, dim: 1, rank: 0 });
    assert_eq!(rep.ranks[1], FiberRank { degree: 1, dim: 1, rank: 1 });
    let diag = PlanePair::new(v(&[2, -1, 3]), v(&[2, -1, 3]));
    assert_eq!(
        offvariety_exactness(&fix.ideal, &fix.fam, &diag),
        Err(CommutingError::OnVariety)
    );
}

#[test]
fn offvariety_at_samples() {
    let fix = fixture(2);
    let pts: Vec<PlanePair> = sample_points(0, 30, 3)
        .into_iter()
        .filter(|p| fix.ideal.eval(p).unwrap().iter().any(|c| !c.is_zero()))
        .take(10)
        .collect();
    assert_eq!(pts.len(), 10);
    for pt in &pts {
        assert!(offvariety_exactness(&fix.ideal, &fix.fam, pt).unwrap().passed());
    }
}

#[test]
fn sl2_dimension_both_orders() {
    let fix = fixture(2);
    let cache = GbCache::disabled();
    let rep = dim_check(&fix.ideal, &cache, &Limits::default()).unwrap();
    assert_eq!(rep.computed, Some(4));
    assert!(rep.passed());
    let lex = ig_generators_in(fix.ideal.algebra(), MonomialOrder::Lex).unwrap();
    assert_eq!(dim_check(&lex, &cache, &Limits::default()).unwrap().computed, Some(4));
}

#[test]
fn sl2_prime_by_minors() {
    let rep = radical_prime_check_rank1(&fixture(2).ideal, &Limits::default()).unwrap();
    assert!(rep.ig_in_minors && rep.minors_in_ig);
    assert!(matches!(
        radical_prime_check_rank1(&fixture(3).ideal, &Limits::default()),
        Err(CommutingError::Unsupported(_))
    ));
}

#[test]
fn sl2_resolution() {
    let rep = resolution_check(&fixture(2).ideal, 6, &GbCache::disabled(), &Limits::default()).unwrap();
    assert_eq!(rep.betti, vec![1, 3, 2]);
    assert_eq!((rep.length, rep.projdim_ideal, rep.depth), (2, 1, 4));
    assert_eq!(rep.expected_depth, 4);
    assert!(rep.passed());
}

#[test]
fn sl2_lambda1_generates() {
    let fix = fixture(2);
    let rep = lambda1_generates(&fix.ideal, &fix.fam, &GbCache::disabled(), &Limits::default()).unwrap();
    assert_eq!(rep.cases.len(), 3);
    assert!(rep.passed());
}

#[test]
fn sl3_dimension_and_radical_samples() {
    let fix = fixture(3);
    let cache = GbCache::disabled();
    let started = Instant::now();
    assert_eq!(dim_check(&fix.ideal, &cache, &Limits::default()).unwrap().computed, Some(10));
    let rep = radical_spot_checks(&fix.ideal, 50, 0, &cache, &Limits::default()).unwrap();
    assert_eq!((rep.samples, rep.passed), (50, 50));
    assert!(started.elapsed().as_secs() < 600);
}

#[test]
fn spot_checks_are_deterministic() {
    let fix = fixture(2);
    let cache = GbCache::disabled();
    let a = radical_spot_checks(&fix.ideal, 5, 3, &cache, &Limits::default()).unwrap();
    let b = radical_spot_checks(&fix.ideal, 5, 3, &cache, &Limits::default()).unwrap();
    assert_eq!(a, b);
}

fn small_ext(dim: usize) -> impl Strategy<Value = Vec<(Vec<usize>, i64, Vec<u8>)>> {
    let key = prop::sample::subsequence((0..dim).collect::<Vec<_>>(), 0..=3);
    prop::collection::vec((key, -3i64..4, prop::collection::vec(0u8..2, 2 * dim)), 1..4)
}

fn build(ig: &CommutingIdeal, parts: Vec<(Vec<usize>, i64, Vec<u8>)>) -> ExtElem {
    let n = ig.algebra().dim();
    let mut acc = ExtElem::zero(ig.ring(), n);
    for (key, c, e) in parts {
        let coeff = MPoly::from_term(ig.ring(), Monomial::from_exponents(&e), rat(c));
        acc = acc.try_add(&ExtElem::monomial(n, &key, coeff).unwrap()).unwrap();
    }
    acc
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn d_squared_on_random_elements(parts in small_ext(8)) {
        let ig = &fixture(3).ideal;
        let w = build(ig, parts);
        prop_assert!(differential(ig, &differential(ig, &w).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn d_is_a_derivation(a in small_ext(3), b in small_ext(3)) {
        let ig = &fixture(2).ideal;
        let (a, b) = (build(ig, a), build(ig, b));
        // Only homogeneous elements have a sign; restrict to a's pure parts.
        for (key, f) in a.terms() {
            let pa = ExtElem::monomial(3, key, f.clone()).unwrap();
            let sign = if key.len() % 2 == 0 { rat(1) } else { rat(-1) };
            let lhs = differential(ig, &pa.wedge(&b).unwrap()).unwrap();
            let rhs = differential(ig, &pa)
                .unwrap()
                .wedge(&b)
                .unwrap()
                .try_add(&pa.wedge(&differential(ig, &b).unwrap()).unwrap().scale(&sign))
                .unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
