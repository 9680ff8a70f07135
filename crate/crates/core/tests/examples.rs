//! Every example runs to completion.

macro_rules! example {
    ($module:ident, $test:ident, $file:literal) => {
        #[allow(dead_code)]
        #[path = $file]
        mod $module;

        #[test]
        fn $test() {
            $module::run_example().expect("example runs");
        }
    };
}

example!(lie_algebra, lie_algebra_example_runs, "../examples/lie_algebra.rs");
example!(polynomials, polynomials_example_runs, "../examples/polynomials.rs");
example!(groebner, groebner_example_runs, "../examples/groebner.rs");
example!(invariants, invariants_example_runs, "../examples/invariants.rs");
example!(argument_shift, argument_shift_example_runs, "../examples/argument_shift.rs");
example!(plane_spaces, plane_spaces_example_runs, "../examples/plane_spaces.rs");
example!(koszul_complex, koszul_complex_example_runs, "../examples/koszul_complex.rs");
example!(commuting_ideal, commuting_ideal_example_runs, "../examples/commuting_ideal.rs");
example!(verify_report, verify_report_example_runs, "../examples/verify_report.rs");
