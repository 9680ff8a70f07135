use super::*;
use crate::invariants::generators;
use crate::liealg::make_sl;
use crate::linalg::RatMatrix;
use crate::rational::{rat, ratio, Rat};
use num_traits::Zero;
use proptest::prelude::*;
use std::sync::OnceLock;

fn family(n: usize) -> &'static ShiftFamily {
    static F2: OnceLock<ShiftFamily> = OnceLock::new();
    static F3: OnceLock<ShiftFamily> = OnceLock::new();
    let cell = if n == 2 { &F2 } else { &F3 };
    cell.get_or_init(|| {
        let l = make_sl(n).unwrap();
        let inv = generators(&l).unwrap();
        build_family(&l, &inv).unwrap()
    })
}

fn v(xs: &[i64]) -> CoeffVector {
    xs.iter().map(|&x| rat(x)).collect()
}

fn pair(x: &[i64], y: &[i64]) -> PlanePair {
    PlanePair::new(v(x), v(y))
}

const E: [i64; 3] = [1, 0, 0];
const H: [i64; 3] = [0, 1, 0];
const F: [i64; 3] = [0, 0, 1];

#[test]
fn sl2_polarized_epsilon() {
    let fam = family(2);
    let r = fam.ring();
    let q = ratio(-1, 4);
    let xs: Vec<MPoly> = (0..3).map(|k| MPoly::var(r, k).scale(&q)).collect();
    let ys: Vec<MPoly> = (3..6).map(|k| MPoly::var(r, k).scale(&q)).collect();
    assert_eq!(fam.eps(0, 0).entries(), xs.as_slice());
    assert_eq!(fam.eps(0, 1).entries(), ys.as_slice());
}

#[test]
fn top_polarization_is_p_of_y() {
    for n in [2, 3] {
        let fam = family(n);
        let l = fam.algebra();
        let inv = generators(l).unwrap();
        let nn = l.dim();
        let to_y: Vec<usize> = (nn..2 * nn).collect();
        for (i, &d) in fam.degrees().iter().enumerate() {
            assert_eq!(fam.p(i, d as usize), &inv.polys()[i].embed(fam.ring(), &to_y));
        }
        assert!(expansion_failures(fam, &inv).unwrap().is_empty());
    }
}

#[test]
fn sl3_bidegrees() {
    let fam = family(3);
    for e in fam.eps(1, 1).entries().iter().filter(|e| !e.is_zero()) {
        assert!(e.bidegrees(0..8, 8..16).iter().all(|&bd| bd == (1, 1)));
    }
    assert_eq!(fam.eps_indices().len(), 5);
}

#[test]
fn poisson_on_coordinates() {
    let fam = family(2);
    let l = fam.algebra();
    let r = fam.ring();
    for n in [2, 3] {
        let fam = family(n);
        let l = fam.algebra();
        let r = fam.ring();
        let etas: Vec<MPoly> = (0..l.dim()).map(|k| eta(l, r, k).unwrap()).collect();
        for i in 0..l.dim() {
            for j in 0..l.dim() {
                let mut want = MPoly::zero(r);
                for (k, c) in l.structure(i, j) {
                    want = &want + &etas[*k].scale(c);
                }
                assert_eq!(poisson(l, &etas[i], &etas[j]).unwrap(), want);
            }
        }
    }
    let f = MPoly::parse(r, "xe*ye^2 - 3*yh*yf + xf").unwrap();
    assert!(poisson(l, &f, &f).unwrap().is_zero());
    assert!(poisson(l, &fam.p(0, 1).clone(), &fam.p(0, 2).clone()).unwrap().is_zero());
    let other = crate::poly::Ring::new(["a"], crate::poly::MonomialOrder::DegRevLex);
    assert!(poisson(l, &f, &MPoly::var(&other, 0)).is_err());
}

#[test]
fn mf_symbolic() {
    let rep2 = mf_commutativity_check(family(2), &MfMode::Symbolic).unwrap();
    assert_eq!((rep2.functions, rep2.pairs.len()), (2, 3));
    assert!(rep2.passed());
    let rep3 = mf_commutativity_check(family(3), &MfMode::Symbolic).unwrap();
    assert_eq!((rep3.functions, rep3.pairs.len()), (5, 15));
    assert!(rep3.passed());
}

#[test]
fn mf_sampled_including_zero() {
    let fam = family(3);
    let pts = vec![vec![rat(0); 8], v(&[1, -2, 0, 3, 1, 0, 4, -1])];
    let rep = mf_commutativity_check(fam, &MfMode::Sampled(pts)).unwrap();
    assert_eq!(rep.pairs.len(), 30);
    assert!(rep.passed());
    // At x = 0 only the p_i(y) survive; they are Casimirs.
    let l = fam.algebra();
    for &(i, d) in &[(0usize, 2usize), (1, 3)] {
        for k in 0..8 {
            let y = MPoly::var(fam.ring(), 8 + k);
            assert!(poisson(l, fam.p(i, d), &y).unwrap().is_zero());
        }
    }
}

#[test]
fn sl2_v_space_examples() {
    let fam = family(2);
    let ef = pair(&E, &F);
    let vm = v_space(fam, &ef).unwrap();
    assert_eq!(
        vm,
        RatMatrix::from_rows(vec![
            vec![ratio(-1, 4), rat(0), rat(0)],
            vec![rat(0), rat(0), ratio(-1, 4)],
        ])
    );
    assert_eq!(dim_v(fam, &ef).unwrap(), 2);
    assert!(in_omega(fam, &ef).unwrap());
    let e2e = pair(&E, &[2, 0, 0]);
    assert_eq!(dim_v(fam, &e2e).unwrap(), 1);
    assert!(!in_omega(fam, &e2e).unwrap());
    let xx = pair(&[3, -1, 2], &[3, -1, 2]);
    assert!(dim_v(fam, &xx).unwrap() <= 1);
}

#[test]
fn sl2_c_space_examples() {
    let fam = family(2);
    let c = c_space(fam, &pair(&E, &F)).unwrap();
    assert_eq!(c, RatMatrix::from_rows(vec![vec![rat(0), ratio(-1, 4), rat(0)]]));
    assert_eq!(c_space(fam, &pair(&E, &[2, 0, 0])).unwrap().rank(), 0);
}

#[test]
fn sl3_c_space_rank_at_fixed_point() {
    let fam = family(3);
    let pt = pair(&[1, 0, 2, 1, -1, 3, 0, 1], &[0, 1, -1, 2, 0, 1, 1, 0]);
    assert_eq!(omega_oracle(fam.algebra(), &pt), Some(true));
    assert_eq!(c_space(fam, &pt).unwrap().rank(), 3);
    assert_eq!(dim_v(fam, &pt).unwrap(), 5);
}

#[test]
fn char_kill_vanishes() {
    for n in [2, 3] {
        let fam = family(n);
        for (i, m) in fam.eps_indices() {
            assert!(char_kill(fam, i, m).unwrap().is_zero(), "sl{n} ({i},{m})");
        }
    }
}

#[test]
fn sl2_bracket_spaces_at_e_f() {
    let fam = family(2);
    let l = fam.algebra();
    let vm = v_space(fam, &pair(&E, &F)).unwrap();
    let h = RatMatrix::from_rows(vec![v(&H)]);
    for z in [E, F] {
        let rows: Vec<Vec<Rat>> = vm.row_vecs().iter().map(|r| l.bracket(&v(&z), r).unwrap()).collect();
        assert!(RatMatrix::from_rows(rows).same_rowspace(&h));
    }
    assert!(l.form(&v(&H), &v(&E)).unwrap().is_zero());
    assert!(l.form(&v(&H), &v(&F)).unwrap().is_zero());
}

#[test]
fn equivariance_examples() {
    let fam = family(2);
    assert!(equivariance_spot_check(fam, &v(&[0, 0, 0]), &pair(&E, &F)).unwrap().passed());
    let rep = equivariance_spot_check(fam, &v(&E), &pair(&H, &F)).unwrap();
    assert_eq!(rep.cases.len(), 2);
    assert!(rep.passed());
    assert!(equivariance_spot_check(fam, &v(&F), &pair(&E, &H)).unwrap().passed());
    assert!(matches!(
        equivariance_spot_check(fam, &v(&H), &pair(&E, &F)),
        Err(ShiftError::Lie(crate::liealg::LieError::NotNilpotent))
    ));
    let fam3 = family(3);
    let nil = v(&[1, 2, -1, 0, 0, 0, 0, 0]);
    let pt = pair(&[1, 0, 2, 1, -1, 3, 0, 1], &[0, 1, -1, 2, 0, 1, 1, 0]);
    assert!(equivariance_spot_check(fam3, &nil, &pt).unwrap().passed());
}

#[test]
fn suite_on_samples() {
    for (n, count) in [(2, 30), (3, 10)] {
        let fam = family(n);
        let pts = sample_points(0, count, fam.algebra().dim());
        let rep = sc_identity_suite(fam, &pts).unwrap();
        assert_eq!(rep.failed, 0, "sl{n}: {:?}", rep.points);
        assert!(rep.skipped < count);
    }
    // Dependent pairs are skipped, not failed.
    let rep = sc_identity_suite(family(2), &[pair(&E, &[2, 0, 0])]).unwrap();
    assert_eq!((rep.skipped, rep.failed), (1, 0));
}

fn low_poly(r: &crate::poly::RingRef) -> impl Strategy<Value = MPoly> {
    let r = r.clone();
    prop::collection::vec((prop::collection::vec(0u8..2, 6), -3i64..4), 1..4).prop_map(move |ts| {
        let terms = ts
            .into_iter()
            .map(|(e, c)| (crate::poly::Monomial::from_exponents(&e), rat(c)))
            .collect();
        MPoly::from_terms(&r, terms)
    })
}

fn ring2() -> crate::poly::RingRef {
    family(2).ring().clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn poisson_jacobi_and_leibniz(f in low_poly(&ring2()), g in low_poly(&ring2()), h in low_poly(&ring2())) {
        let l = family(2).algebra();
        let br = |a: &MPoly, b: &MPoly| poisson(l, a, b).unwrap();
        let jac = &(&br(&f, &br(&g, &h)) + &br(&g, &br(&h, &f))) + &br(&h, &br(&f, &g));
        prop_assert!(jac.is_zero());
        prop_assert_eq!(br(&f, &g), -br(&g, &f));
        let leib = &br(&f, &(&g * &h)) - &(&(&br(&f, &g) * &h) + &(&g * &br(&f, &h)));
        prop_assert!(leib.is_zero());
    }

    #[test]
    fn sl2_omega_is_independence(x in prop::collection::vec(-9i64..10, 3), y in prop::collection::vec(-9i64..10, 3)) {
        let fam = family(2);
        let pt = pair(&x, &y);
        prop_assert_eq!(in_omega(fam, &pt).unwrap(), pt.is_independent());
    }

    #[test]
    fn dim_v_depends_on_plane(x in prop::collection::vec(-9i64..10, 8), y in prop::collection::vec(-9i64..10, 8), lam in -5i64..6) {
        let fam = family(3);
        let pt = pair(&x, &y);
        let moved = PlanePair::new(pt.x.iter().zip(&pt.y).map(|(a, b)| a + b * rat(lam)).collect(), pt.y.clone());
        prop_assert_eq!(dim_v(fam, &pt).unwrap(), dim_v(fam, &moved).unwrap());
    }
}
