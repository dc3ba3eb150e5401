use proptest::prelude::*;
use susy_fisheye::fisheye::{default_figure_table, relative_ratio, IndexMode};
use susy_fisheye::fullline::{transplanted_state, RmProblem};
use susy_fisheye::isospectral::{i0_quadrature, IsoFamily, SuperpotentialPair};
use susy_fisheye::model::{radial_factor_f, u_minus};
use susy_fisheye::verify::{self, Suite};

#[test]
fn passing_suites() {
    for suite in [Suite::Specfun, Suite::DoCore, Suite::Isospectral, Suite::Fullline, Suite::Numerics] {
        let report = verify::run(suite, 1.0).unwrap();
        let failed: Vec<String> = report.failures().map(ToString::to_string).collect();
        assert!(failed.is_empty(), "{failed:?}");
    }
}

#[test]
fn all_suite_fails_on_exactly_the_two_unmet_claims() {
    let report = verify::run(Suite::All, 1.0).unwrap();
    assert!(!report.passed());
    let failed: Vec<(Suite, &str)> = report.failures().map(|c| (c.suite, c.name.as_str())).collect();
    assert_eq!(
        failed,
        [
            (Suite::Fisheye, "several_percent_peak"),
            (Suite::Fisheye, "surface_peaking_distance")
        ]
    );
}

#[test]
fn loose_scale_does_not_rescue_stated_bounds() {
    let report = verify::run(Suite::Fisheye, 1e6).unwrap();
    assert_eq!(report.failures().count(), 2);
}

#[test]
fn figure_tables_are_deterministic() {
    let a = default_figure_table(1, 1.0, IndexMode::FirstOrder).unwrap().to_csv();
    let b = default_figure_table(1, 1.0, IndexMode::FirstOrder).unwrap().to_csv();
    assert_eq!(a, b);
}

#[test]
fn transplanted_states_are_nodeless_ground_states() {
    // the Langer image of f for n = l + 1 is the ground state of the n_b = n + 1/2 well
    for l in 0..3 {
        let peak = transplanted_state(0.0, l).unwrap();
        assert!(transplanted_state(3.0, l).unwrap() < peak);
        assert!(transplanted_state(-3.0, l).unwrap() < peak);
        let ladder = RmProblem::fisheye(l + 1, None).unwrap().solve().unwrap();
        assert_eq!(ladder.len() as u32, l + 1);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn riccati_pair_holds_off_grid(rho in 0.1f64..10.0, l in 0u32..3, lambda in 0.2f64..50.0, half in any::<bool>()) {
        let kappa = if half { 0.5 } else { 1.0 };
        let pair = SuperpotentialPair::new(IsoFamily::nodeless(kappa, l, lambda).unwrap());
        prop_assert!(pair.riccati_residual(rho).unwrap().abs() < 1e-6);
        let direct = pair.general(rho).unwrap();
        let via_v = pair.general_from_v(rho).unwrap();
        prop_assert!((direct - via_v).abs() <= 1e-10 * direct.abs().max(1.0));
    }

    #[test]
    fn family_tends_to_the_original(rho in 0.1f64..5.0, l in 0u32..3) {
        let far = IsoFamily::nodeless(1.0, l, 1e12).unwrap();
        let original = u_minus(rho, l, 1.0).unwrap();
        prop_assert!((far.u_bosonic(rho).unwrap() - original).abs() < 1e-8 * original.abs().max(1.0));
        let scaled = far.radial_factor_bosonic(rho).unwrap() * 1e12;
        prop_assert!((scaled - radial_factor_f(rho, l, 1.0).unwrap()).abs() < 1e-6);
    }

    #[test]
    fn general_kappa_uses_quadrature_consistently(rho in 0.05f64..8.0, kappa in 0.3f64..2.0, l in 0u32..3) {
        let fam = IsoFamily::nodeless(kappa, l, 1.0).unwrap();
        let q = i0_quadrature(rho, l, kappa, 1e-13).unwrap();
        prop_assert!((fam.i0(rho).unwrap() - q).abs() <= 1e-10 * q.max(1e-3));
    }

    #[test]
    fn deformation_vanishes_at_large_lambda(rho in 0.01f64..3.0, l in 0u32..4) {
        prop_assert!(relative_ratio(rho, l, 1e10).unwrap().abs() < 1e-8);
    }
}
