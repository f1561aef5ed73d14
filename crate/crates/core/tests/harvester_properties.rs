//! Algebraic laws of the harvester model, checked against independently
//! coded references: a hand-rolled least-squares fit for the turns sweep and
//! direct ratio tests for the linearity and homogeneity claims.

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sidewalker_core::harvester::{
    calibrated_volume, coil_resistance, consistency_report, induced_voltage, power_density,
    sweep_turns, FieldEnvironment, HarvesterSpec, CALIBRATED_VOLUME, TARGET_POWER_DENSITY,
    TARGET_VOLTAGE,
};

fn defaults() -> (HarvesterSpec<f64>, FieldEnvironment<f64>) {
    (
        HarvesterSpec::default_spec(),
        FieldEnvironment::default_environment(),
    )
}

/// Ordinary least squares for y = a·x + b, plus the zero-intercept slope
/// Σxy/Σx². Written against the normal equations directly so it shares no
/// code with the module under test.
struct LineFit {
    slope: f64,
    intercept: f64,
    r_squared: f64,
    through_origin_slope: f64,
}

fn fit_line(points: &[(f64, f64)]) -> LineFit {
    let n = points.len() as f64;
    let sx: f64 = points.iter().map(|p| p.0).sum();
    let sy: f64 = points.iter().map(|p| p.1).sum();
    let sxx: f64 = points.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = points.iter().map(|p| p.0 * p.1).sum();
    let slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    let intercept = (sy - slope * sx) / n;
    let mean_y = sy / n;
    let ss_tot: f64 = points.iter().map(|p| (p.1 - mean_y).powi(2)).sum();
    let ss_res: f64 = points
        .iter()
        .map(|p| (p.1 - slope * p.0 - intercept).powi(2))
        .sum();
    LineFit {
        slope,
        intercept,
        r_squared: if ss_tot > 0.0 {
            1.0 - ss_res / ss_tot
        } else {
            1.0
        },
        through_origin_slope: sxy / sxx,
    }
}

#[test]
fn default_voltage_is_within_half_a_percent_of_the_target() {
    let (spec, env) = defaults();
    let v = induced_voltage(&spec, &env);
    let rel = (v - TARGET_VOLTAGE).abs() / TARGET_VOLTAGE;
    assert!(
        rel < 5e-3,
        "voltage {v} is {rel:.2e} away from {TARGET_VOLTAGE}"
    );
}

#[test]
fn default_resistance_equals_the_hand_computed_value() {
    let (spec, _) = defaults();
    // 1.11 Ω/m × 40,000 × π × (2.06 mm + 0.14 mm), carried to full precision.
    let by_hand = 306.8707704026511;
    assert!((coil_resistance(&spec) - by_hand).abs() < 1e-9);
}

#[test]
fn voltage_is_linear_in_every_factor() {
    let (spec, env) = defaults();
    let mut rng = ChaCha8Rng::seed_from_u64(4242);
    for _ in 0..200 {
        let c: f64 = rng.gen_range(0.1..10.0);
        let base = induced_voltage(&spec, &env);

        let scaled_area = HarvesterSpec {
            core_area: spec.core_area * c,
            ..spec
        };
        assert!((induced_voltage(&scaled_area, &env) / base / c - 1.0).abs() < 1e-12);

        let scaled_mu = HarvesterSpec {
            permeability: spec.permeability * c,
            ..spec
        };
        assert!((induced_voltage(&scaled_mu, &env) / base / c - 1.0).abs() < 1e-12);

        let scaled_b = FieldEnvironment {
            flux_density: env.flux_density * c,
            ..env
        };
        assert!((induced_voltage(&spec, &scaled_b) / base / c - 1.0).abs() < 1e-12);

        let scaled_w = FieldEnvironment {
            angular_frequency: env.angular_frequency * c,
            ..env
        };
        assert!((induced_voltage(&spec, &scaled_w) / base / c - 1.0).abs() < 1e-12);

        // Turns are integral, so test an exact integer ratio instead.
        let k = rng.gen_range(2u32..8);
        let scaled_n = HarvesterSpec {
            turns: spec.turns * k,
            ..spec
        };
        assert!((induced_voltage(&scaled_n, &env) / base / f64::from(k) - 1.0).abs() < 1e-12);
    }
}

#[test]
fn density_is_quadratic_in_voltage() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for _ in 0..200 {
        let v = rng.gen_range(0.0..5.0);
        let r = rng.gen_range(1.0..1e4);
        let vol = rng.gen_range(1e-9..1e-3);
        let c: f64 = rng.gen_range(0.1..10.0);
        let base: f64 = power_density(v, r, vol).unwrap();
        let scaled: f64 = power_density(c * v, r, vol).unwrap();
        assert!((scaled - c * c * base).abs() <= 1e-12 * scaled.max(1.0));
        assert!(base >= 0.0);
    }
}

#[test]
fn sweep_matches_a_least_squares_oracle_through_the_origin() {
    let (spec, env) = defaults();
    let table = sweep_turns(&spec, &env, (0..=40_000).step_by(500)).unwrap();
    assert_eq!(table.len(), 81);
    let points: Vec<(f64, f64)> = table.iter().map(|&(n, v)| (f64::from(n), v)).collect();
    let fit = fit_line(&points);

    // Zero-intercept residuals: every point sits on the through-origin line.
    let worst_rel = points
        .iter()
        .filter(|p| p.0 > 0.0)
        .map(|p| ((p.1 - fit.through_origin_slope * p.0) / p.1).abs())
        .fold(0.0f64, f64::max);
    assert!(worst_rel < 1e-12, "worst relative residual {worst_rel:.2e}");

    // The free fit agrees: intercept vanishes and the fit is exact.
    let v_max = points.last().unwrap().1;
    assert!(fit.intercept.abs() < 1e-12 * v_max);
    assert!(fit.r_squared > 1.0 - 1e-12);
    assert!((fit.slope - fit.through_origin_slope).abs() < 1e-12 * fit.slope);

    // Endpoints: silence at zero turns, the calibration target at 40,000.
    assert_eq!(table[0], (0, 0.0));
    assert!((table[80].1 - TARGET_VOLTAGE).abs() / TARGET_VOLTAGE < 5e-3);
}

#[test]
fn stored_volume_and_exact_solve_agree_on_the_density_target() {
    let (spec, env) = defaults();
    let v = induced_voltage(&spec, &env);
    let r = coil_resistance(&spec);
    let d_stored: f64 = power_density(v, r, CALIBRATED_VOLUME).unwrap();
    assert!((d_stored - TARGET_POWER_DENSITY).abs() / TARGET_POWER_DENSITY < 1e-2);
    let exact = calibrated_volume(v, r, TARGET_POWER_DENSITY).unwrap();
    let d_exact: f64 = power_density(v, r, exact).unwrap();
    assert!((d_exact - TARGET_POWER_DENSITY).abs() / TARGET_POWER_DENSITY < 1e-12);
}

#[test]
fn report_exposes_the_geometry_clash() {
    let (spec, env) = defaults();
    let report = consistency_report(&spec, &env, TARGET_POWER_DENSITY).unwrap();
    assert!(!report.volume_consistent);
    assert!(report.diameter_consistent);
    // The sheath volume is A·0.40 m; the density target allows ~2.4x less.
    assert!((report.geometric_volume - spec.core_area * 0.40).abs() < 1e-18);
    assert!(report.volume_ratio > 2.0 && report.volume_ratio < 3.0);
    // Density at the real geometry undershoots the target accordingly.
    assert!(report.density_at_geometric_volume < 0.5 * TARGET_POWER_DENSITY);
}

proptest! {
    #[test]
    fn outputs_are_non_negative_and_finite_for_positive_inputs(
        turns in 0u32..200_000,
        area in 1e-9f64..1e-3,
        mu in 1.0f64..1e4,
        b in 0.0f64..1e-3,
        w in 1.0f64..1e4,
    ) {
        let spec = HarvesterSpec {
            turns,
            core_area: area,
            permeability: mu,
            ..HarvesterSpec::default_spec()
        };
        let env = FieldEnvironment { flux_density: b, angular_frequency: w };
        let v = induced_voltage(&spec, &env);
        prop_assert!(v.is_finite() && v >= 0.0);
        let r = coil_resistance(&spec);
        prop_assert!(r.is_finite() && r >= 0.0);
        if r > 0.0 {
            let d: f64 = power_density(v, r, 1e-6).unwrap();
            prop_assert!(d.is_finite() && d >= 0.0);
        }
    }
}
