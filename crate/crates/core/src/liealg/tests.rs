use super::*;
use crate::rational::ratio;
use proptest::prelude::*;

fn sl(n: usize) -> &'static LieAlgebraData {
    static SL2: std::sync::OnceLock<LieAlgebraData> = std::sync::OnceLock::new();
    static SL3: std::sync::OnceLock<LieAlgebraData> = std::sync::OnceLock::new();
    let cell = if n == 2 { &SL2 } else { &SL3 };
    cell.get_or_init(|| make_sl(n).unwrap())
}

fn v(xs: &[i64]) -> CoeffVector {
    xs.iter().map(|&x| rat(x)).collect()
}

#[test]
fn sl_dimensions() {
    let sl2 = make_sl(2).unwrap();
    assert_eq!((sl2.dim(), sl2.rank(), sl2.b(), sl2.n_small()), (3, 1, 2, 1));
    assert_eq!(sl2.degrees(), &[2]);
    assert_eq!(sl2.basis_labels(), &["e", "h", "f"]);
    let sl3 = make_sl(3).unwrap();
    assert_eq!((sl3.dim(), sl3.rank(), sl3.b(), sl3.n_small()), (8, 2, 5, 3));
    assert_eq!(sl3.degrees(), &[2, 3]);
    assert_eq!(sl3.degrees().iter().sum::<u32>() as usize, sl3.b());
    assert_eq!(make_sl(4), Err(LieError::UnsupportedRank(4)));
    assert_eq!(make_sl(1), Err(LieError::UnsupportedRank(1)));
}

#[test]
fn sl2_relations() {
    let l = make_sl(2).unwrap();
    let (e, h, f) = (v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[0, 0, 1]));
    assert_eq!(l.bracket(&e, &f).unwrap(), h);
    assert_eq!(l.bracket(&h, &e).unwrap(), v(&[2, 0, 0]));
    assert_eq!(l.bracket(&h, &f).unwrap(), v(&[0, 0, -2]));
    assert_eq!(l.form(&h, &h).unwrap(), rat(8));
    assert_eq!(l.form(&e, &f).unwrap(), rat(4));
    assert_eq!(l.form(&e, &e).unwrap(), rat(0));
    assert!(matches!(l.bracket(&e, &v(&[1, 0])), Err(LieError::LengthMismatch { expected: 3, got: 2 })));
}

#[test]
fn sl2_killing_by_hand() {
    // ad h = diag(2, 0, -2) in the basis (e, h, f).
    let l = make_sl(2).unwrap();
    let ad = l.ad_matrix(&v(&[0, 1, 0])).unwrap();
    assert_eq!(ad, RatMatrix::from_rows(vec![v(&[2, 0, 0]), v(&[0, 0, 0]), v(&[0, 0, -2])]));
    assert_eq!(ad.mul(&ad).trace(), rat(8));
}

#[test]
fn centralizers() {
    let l = make_sl(2).unwrap();
    let e = v(&[1, 0, 0]);
    let c = l.centralizer(&e).unwrap();
    assert_eq!(c.len(), 1);
    assert!(c[0][1].is_zero() && c[0][2].is_zero() && !c[0][0].is_zero());
    assert!(l.is_regular(&e).unwrap());
    assert!(!l.is_regular(&v(&[0, 0, 0])).unwrap());
    let sl3 = make_sl(3).unwrap();
    let diag = sl3.from_matrix(&diag3(1, 2, -3)).unwrap();
    assert!(sl3.is_regular(&diag).unwrap());
    assert!(!sl3.is_regular(&sl3.from_matrix(&diag3(1, 1, -2)).unwrap()).unwrap());
}

fn diag3(a: i64, b: i64, c: i64) -> RatMatrix {
    RatMatrix::from_rows(vec![v(&[a, 0, 0]), v(&[0, b, 0]), v(&[0, 0, c])])
}

#[test]
fn matrix_coordinates_round_trip() {
    let l = make_sl(3).unwrap();
    let x = v(&[1, -2, 3, 4, -5, 6, 7, -8]);
    let m = l.to_matrix(&x).unwrap();
    assert!(m.trace().is_zero());
    assert_eq!(l.from_matrix(&m).unwrap(), x);
    let d = l.from_matrix(&diag3(1, 2, -3)).unwrap();
    // h1 and h2 coordinates are the partial sums 1 and 3.
    assert_eq!(d, v(&[0, 0, 0, 1, 3, 0, 0, 0]));
    assert!(l.from_matrix(&RatMatrix::identity(3)).is_none());
}

#[test]
fn sl3_killing_is_six_times_trace() {
    let l = make_sl(3).unwrap();
    let basis = l.defining_basis().unwrap();
    for i in 0..8 {
        for j in 0..8 {
            assert_eq!(l.kappa()[(i, j)], basis[i].mul(&basis[j]).trace() * rat(6));
        }
    }
}

#[test]
fn exp_ad_of_nilpotent() {
    let l = make_sl(2).unwrap();
    let g = l.exp_ad(&v(&[1, 0, 0])).unwrap();
    // exp(ad e): e -> e, h -> h - 2e, f -> f + h - e.
    let expect = RatMatrix::from_rows(vec![v(&[1, -2, -1]), v(&[0, 1, 1]), v(&[0, 0, 1])]);
    assert_eq!(g, expect);
    assert_eq!(l.exp_ad(&v(&[0, 0, 0])).unwrap(), RatMatrix::identity(3));
    assert_eq!(l.exp_ad(&v(&[0, 1, 0])), Err(LieError::NotNilpotent));
}

#[test]
fn json_round_trip() {
    for n in [2, 3] {
        let l = make_sl(n).unwrap();
        let back = parse_json(&to_json(&l)).unwrap();
        assert_eq!(back.constants(), l.constants());
        assert_eq!(back.kappa(), l.kappa());
        assert_eq!(back.degrees(), l.degrees());
        assert_eq!(back.basis_labels(), l.basis_labels());
    }
}

fn sl2_doc() -> serde_json::Value {
    serde_json::from_str(&to_json(&make_sl(2).unwrap())).unwrap()
}

fn rejection(doc: &serde_json::Value) -> &'static str {
    match parse_json(&doc.to_string()) {
        Err(LieError::Invariant { identity, .. }) => identity,
        other => panic!("expected an invariant violation, got {other:?}"),
    }
}

#[test]
fn json_rejects_with_named_identity() {
    let mut doc = sl2_doc();
    doc["c"].as_array_mut().unwrap().pop();
    assert_eq!(rejection(&doc), "antisymmetry");

    let mut doc = sl2_doc();
    doc["kappa"][0][2] = "5".into();
    assert_eq!(rejection(&doc), "form symmetry");

    let mut doc = sl2_doc();
    doc["kappa"] = serde_json::json!([["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]);
    assert_eq!(rejection(&doc), "form invariance");

    let mut doc = sl2_doc();
    doc["kappa"] = serde_json::json!([["0", "0", "0"], ["0", "0", "0"], ["0", "0", "0"]]);
    assert_eq!(rejection(&doc), "form nondegeneracy");

    let mut doc = sl2_doc();
    doc["degrees"] = serde_json::json!([3]);
    assert_eq!(rejection(&doc), "sum of degrees = b");

    let mut doc = sl2_doc();
    doc["rank"] = serde_json::json!(2);
    doc["degrees"] = serde_json::json!([1, 1]);
    assert_eq!(rejection(&doc), "N = 2b - r");

    // Scale [h, e] only: antisymmetric, but Jacobi fails.
    let mut doc = sl2_doc();
    for entry in doc["c"].as_array_mut().unwrap() {
        let (i, j) = (entry[0].as_u64().unwrap(), entry[1].as_u64().unwrap());
        if (i, j) == (1, 0) || (i, j) == (0, 1) {
            let c = parse_rat(entry[3].as_str().unwrap()).unwrap() * rat(3);
            entry[3] = rat_to_string(&c).into();
        }
    }
    assert_eq!(rejection(&doc), "Jacobi identity");

    assert!(matches!(parse_json("{}"), Err(LieError::Format(_))));
}

#[test]
fn abelian_input_is_not_semisimple() {
    let doc = serde_json::json!({
        "name": "ab2", "basis": ["a", "b"], "c": [],
        "kappa": [["1", "0"], ["0", "1"]], "rank": 2, "degrees": [1, 1]
    });
    assert_eq!(rejection(&doc), "semisimplicity (nondegenerate Killing form)");
}

use crate::rational::{parse_rat, rat_to_string};

fn coeff_vec(n: usize) -> impl Strategy<Value = CoeffVector> {
    prop::collection::vec((-20i64..21, 1i64..5), n).prop_map(|v| v.into_iter().map(|(a, b)| ratio(a, b)).collect())
}

fn triple(n: usize) -> impl Strategy<Value = (CoeffVector, CoeffVector, CoeffVector)> {
    (coeff_vec(n), coeff_vec(n), coeff_vec(n))
}

fn add3(a: &[Rat], b: &[Rat], c: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).zip(c).map(|((x, y), z)| x + y + z).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn sl2_axioms((x, y, z) in triple(3)) {
        let l = sl(2);
        axioms(l, &x, &y, &z)?;
    }

    #[test]
    fn sl3_axioms((x, y, z) in triple(8)) {
        let l = sl(3);
        axioms(l, &x, &y, &z)?;
    }

    #[test]
    fn bracket_is_matrix_commutator(x in coeff_vec(8), y in coeff_vec(8)) {
        let l = sl(3);
        let (mx, my) = (l.to_matrix(&x).unwrap(), l.to_matrix(&y).unwrap());
        let comm = mx.mul(&my).add(&my.mul(&mx).scale(&rat(-1)));
        prop_assert_eq!(l.to_matrix(&l.bracket(&x, &y).unwrap()).unwrap(), comm);
    }

    #[test]
    fn centralizer_at_least_rank(x in coeff_vec(8)) {
        let l = sl(3);
        prop_assert!(l.centralizer(&x).unwrap().len() >= l.rank());
    }
}

fn axioms(l: &LieAlgebraData, x: &[Rat], y: &[Rat], z: &[Rat]) -> Result<(), TestCaseError> {
    let zero = vec![Rat::zero(); l.dim()];
    prop_assert_eq!(l.bracket(x, x).unwrap(), zero.clone());
    let xy = l.bracket(x, y).unwrap();
    let yx: Vec<Rat> = l.bracket(y, x).unwrap().iter().map(|c| -c).collect();
    prop_assert_eq!(&xy, &yx);
    let j = add3(
        &l.bracket(&xy, z).unwrap(),
        &l.bracket(&l.bracket(y, z).unwrap(), x).unwrap(),
        &l.bracket(&l.bracket(z, x).unwrap(), y).unwrap(),
    );
    prop_assert_eq!(j, zero);
    let inv = l.form(&xy, z).unwrap() + l.form(y, &l.bracket(x, z).unwrap()).unwrap();
    prop_assert!(inv.is_zero());
    prop_assert_eq!(l.form(x, y).unwrap(), l.killing(x, y).unwrap());
    Ok(())
}

#[test]
fn regularity_is_generic_on_samples() {
    use rand::{Rng, SeedableRng};
    let l = sl(3);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0);
    let regular = (0..200)
        .filter(|_| {
            let x: CoeffVector = (0..8).map(|_| rat(rng.gen_range(-9..=9))).collect();
            l.is_regular(&x).unwrap()
        })
        .count();
    assert!(regular >= 195, "only {regular} of 200 samples regular");
}
