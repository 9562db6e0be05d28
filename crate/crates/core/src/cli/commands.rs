use std::f64::consts::TAU;
use std::fmt::Write as _;

use num_complex::Complex64;

use super::config::{JobConfig, ParameterDescriptor};
use super::document::{
    render, BoundsDocument, ExtremalDocument, MeasureDocument, PhiDocument, VerifyDocument,
    VERIFY_SCHEMA,
};
use super::CliError;
use crate::analytic::SchurParameter;
use crate::measure::build_measure;
use crate::verify::{
    check_phi_conditions, extremal_measures, mass_bounds, phi_at_nodes, verify_membership,
    MassReport,
};

/// Mass may exceed the sharp bounds by this much before a sweep row fails.
const BOUND_SLACK: f64 = 1e-9;

/// Rendered output of a job and its verdict.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub passed: bool,
    pub text: String,
    pub summary: String,
}

pub fn run_generate(config: &JobConfig) -> Result<Report, CliError> {
    config.validate_numerics()?;
    let nodes = config.node_set()?;
    let param = config.schur_parameter()?;
    let measure = build_measure(&nodes, &param, config.grid_size).map_err(CliError::Math)?;
    let report = verify_membership(&measure, config.tolerance);
    let doc = MeasureDocument::new(&measure, ParameterDescriptor::from_parameter(&param), &report);
    Ok(Report {
        passed: report.passed,
        summary: format!(
            "generate: {} measure, mass {}, {} atom(s), max Gram error {:.3e} ({})",
            measure.kind().as_str(),
            doc.mass,
            measure.atoms().len(),
            report.max_abs_error,
            verdict(report.passed)
        ),
        text: render(&doc),
    })
}

/// Re-checks a stored measure document. `tolerance` overrides the tolerance
/// embedded in the document.
pub fn run_verify(
    config: &JobConfig,
    document: &str,
    tolerance: Option<f64>,
) -> Result<Report, CliError> {
    let doc = MeasureDocument::parse(document)?;
    let measure = doc.to_measure()?;
    if !config.nodes.is_empty() && config.node_set()? != *measure.nodes() {
        return Err(CliError::input("config nodes differ from the document's nodes"));
    }
    let tolerance = tolerance.unwrap_or(doc.gram_report.tolerance);
    if !(tolerance > 0.0 && tolerance.is_finite()) {
        return Err(CliError::input(format!("tolerance must be positive, got {tolerance}")));
    }

    let report = verify_membership(&measure, tolerance);
    let phi = phi_at_nodes(&measure);
    let outcome = check_phi_conditions(&measure, tolerance);
    let passed = report.passed && outcome.is_solved();
    let out = VerifyDocument {
        schema: VERIFY_SCHEMA.to_string(),
        passed,
        kind: measure.kind().as_str().to_string(),
        mass: measure.quadrature_mass(),
        gram_report: (&report).into(),
        phi_conditions: PhiDocument::new(&phi, outcome),
    };
    Ok(Report {
        passed,
        summary: format!(
            "verify: max Gram error {:.3e}, phi conditions {} ({})",
            report.max_abs_error,
            if outcome.is_solved() { "hold" } else { "fail" },
            verdict(passed)
        ),
        text: render(&out),
    })
}

pub fn run_bounds(config: &JobConfig) -> Result<Report, CliError> {
    config.validate_numerics()?;
    let nodes = config.node_set()?;
    let bounds = mass_bounds(&nodes);
    let (max, min) = extremal_measures(&nodes, config.grid_size).map_err(CliError::Math)?;
    let max_report = verify_membership(&max, config.tolerance);
    let min_report = verify_membership(&min, config.tolerance);
    let doc = BoundsDocument::new(
        &nodes,
        &bounds,
        config.tolerance,
        ExtremalDocument::new(&max, 1.0, MassReport::new(&max).attains_max, &max_report),
        ExtremalDocument::new(&min, -1.0, MassReport::new(&min).attains_min, &min_report),
    );
    Ok(Report {
        passed: doc.passed,
        summary: format!(
            "bounds: B(0) = {}, mass in [{}, {}] ({})",
            bounds.blaschke_at_origin,
            bounds.lower,
            bounds.upper,
            verdict(doc.passed)
        ),
        text: render(&doc),
    })
}

/// Constant parameters on the polar grid described by the sweep spec.
fn sweep_gammas(radius_steps: usize, angle_steps: usize) -> Vec<Complex64> {
    let mut gammas = vec![Complex64::new(0.0, 0.0)];
    for k in 1..=radius_steps {
        let r = k as f64 / radius_steps as f64;
        for j in 0..angle_steps {
            gammas.push(Complex64::from_polar(r, TAU * j as f64 / angle_steps as f64));
        }
    }
    gammas
}

pub fn run_sweep(config: &JobConfig) -> Result<Report, CliError> {
    config.validate_numerics()?;
    let nodes = config.node_set()?;
    let spec = config
        .sweep
        .as_ref()
        .ok_or_else(|| CliError::input("sweep needs a [sweep] table"))?;
    if spec.radius_steps > 0 && spec.angle_steps == 0 {
        return Err(CliError::input("sweep angle_steps must be positive"));
    }

    let mut text = String::from("re_gamma,im_gamma,mass,max_gram_error\n");
    let mut passed = true;
    let mut rows = 0;
    for gamma in sweep_gammas(spec.radius_steps, spec.angle_steps) {
        let param = SchurParameter::constant(gamma).map_err(CliError::Invalid)?;
        let measure = build_measure(&nodes, &param, config.grid_size).map_err(CliError::Math)?;
        let report = verify_membership(&measure, config.tolerance);
        let mass = MassReport::new(&measure);
        passed &= report.passed && mass.within_bounds(BOUND_SLACK);
        rows += 1;
        let _ = writeln!(
            text,
            "{},{},{},{}",
            number(gamma.re),
            number(gamma.im),
            number(mass.mass),
            number(report.max_abs_error)
        );
    }
    Ok(Report {
        passed,
        summary: format!("sweep: {rows} row(s) ({})", verdict(passed)),
        text,
    })
}

fn verdict(passed: bool) -> &'static str {
    if passed {
        "pass"
    } else {
        "FAIL"
    }
}

/// Shortest round-trip decimal, matching the JSON documents.
fn number(x: f64) -> String {
    serde_json::Number::from_f64(x)
        .map(|n| n.to_string())
        .unwrap_or_else(|| x.to_string())
}
