//! Versioned JSON documents written and read by the command-line front end.
//!
//! Documents are rendered with one line per array of scalars, so density
//! samples and atoms read as `[θ, value]` rows and diff cleanly. Floats use
//! the shortest representation that parses back to the same `f64`.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::config::{to_complex, to_pair, Pair, ParameterDescriptor};
use super::CliError;
use crate::analytic::{NodeSet, SpecialSystem};
use crate::measure::{Atom, CircleGrid, GeneratedMeasure};
use crate::verify::{GramMatrix, GramReport, MassBounds};

pub const MEASURE_SCHEMA: &str = "herglotz-measure/v1";
pub const VERIFY_SCHEMA: &str = "herglotz-verify/v1";
pub const BOUNDS_SCHEMA: &str = "herglotz-bounds/v1";

/// Largest accepted deviation of a stored angle from `2πj/N`.
const ANGLE_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GramDocument {
    pub tolerance: f64,
    pub max_abs_error: f64,
    pub passed: bool,
    pub target: Vec<Vec<Pair>>,
    pub computed: Vec<Vec<Pair>>,
}

fn matrix_rows(m: &GramMatrix) -> Vec<Vec<Pair>> {
    m.rows()
        .map(|row| row.iter().copied().map(to_pair).collect())
        .collect()
}

impl From<&GramReport> for GramDocument {
    fn from(report: &GramReport) -> Self {
        GramDocument {
            tolerance: report.tolerance,
            max_abs_error: report.max_abs_error,
            passed: report.passed,
            target: matrix_rows(&report.target),
            computed: matrix_rows(&report.computed),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MeasureDocument {
    pub schema: String,
    pub kind: String,
    pub nodes: Vec<Pair>,
    pub parameter: ParameterDescriptor,
    pub grid_size: usize,
    pub mass: f64,
    pub gram_report: GramDocument,
    /// `[θ₀, μ]` per atom.
    pub atoms: Vec<Pair>,
    /// `[θ_j, h_j]` per grid point.
    pub density: Vec<Pair>,
}

impl MeasureDocument {
    pub fn new(measure: &GeneratedMeasure, parameter: ParameterDescriptor, report: &GramReport) -> Self {
        MeasureDocument {
            schema: MEASURE_SCHEMA.to_string(),
            kind: measure.kind().as_str().to_string(),
            nodes: measure.nodes().points().iter().copied().map(to_pair).collect(),
            parameter,
            grid_size: measure.grid().size(),
            mass: measure.quadrature_mass(),
            gram_report: report.into(),
            atoms: measure.atoms().iter().map(|a| [a.angle(), a.weight()]).collect(),
            density: measure
                .grid()
                .angles()
                .iter()
                .zip(measure.density())
                .map(|(&theta, &h)| [theta, h])
                .collect(),
        }
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let doc: MeasureDocument = serde_json::from_str(text)
            .map_err(|e| CliError::input(format!("malformed measure document: {e}")))?;
        if doc.schema != MEASURE_SCHEMA {
            return Err(CliError::input(format!(
                "unsupported schema {:?}, expected {MEASURE_SCHEMA:?}",
                doc.schema
            )));
        }
        Ok(doc)
    }

    /// Rebuilds the measure exactly as stored; nothing is recomputed.
    pub fn to_measure(&self) -> Result<GeneratedMeasure, CliError> {
        let nodes = NodeSet::new(self.nodes.iter().copied().map(to_complex).collect())
            .map_err(CliError::Invalid)?;
        let param = self.parameter.to_parameter().map_err(CliError::Invalid)?;
        let grid = CircleGrid::new(self.grid_size).map_err(CliError::Invalid)?;
        if self.density.len() != grid.size() {
            return Err(CliError::input(format!(
                "schema error: {} density samples for grid_size {}",
                self.density.len(),
                grid.size()
            )));
        }
        for (j, (sample, &theta)) in self.density.iter().zip(grid.angles()).enumerate() {
            if !((sample[0] - theta).abs() <= ANGLE_TOLERANCE) {
                return Err(CliError::input(format!(
                    "schema error: density sample {j} at angle {} instead of {theta}",
                    sample[0]
                )));
            }
        }
        let density = self.density.iter().map(|s| s[1]).collect();
        let atoms = self
            .atoms
            .iter()
            .map(|a| Atom::new(a[0], a[1]))
            .collect::<crate::Result<Vec<_>>>()
            .map_err(CliError::Invalid)?;
        let measure = GeneratedMeasure::from_parts(nodes, Some(param), grid, density, atoms)
            .map_err(CliError::Invalid)?;
        if measure.kind().as_str() != self.kind {
            return Err(CliError::input(format!(
                "schema error: kind {:?} does not match contents ({})",
                self.kind,
                measure.kind().as_str()
            )));
        }
        Ok(measure)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PhiDocument {
    pub solved: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
    pub values: Vec<Pair>,
}

impl PhiDocument {
    pub fn new(values: &[num_complex::Complex64], outcome: SpecialSystem) -> Self {
        let (beta, residual) = match outcome {
            SpecialSystem::Solved { beta } => (Some(beta), None),
            SpecialSystem::NotSolvable { residual } => (None, Some(residual)),
        };
        PhiDocument {
            solved: outcome.is_solved(),
            beta,
            residual,
            values: values.iter().copied().map(to_pair).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerifyDocument {
    pub schema: String,
    pub passed: bool,
    pub kind: String,
    pub mass: f64,
    pub gram_report: GramDocument,
    pub phi_conditions: PhiDocument,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtremalDocument {
    pub parameter: ParameterDescriptor,
    pub mass: f64,
    pub attains_bound: bool,
    pub membership_passed: bool,
    pub max_abs_error: f64,
    pub atoms: Vec<Pair>,
}

impl ExtremalDocument {
    pub fn new(
        measure: &GeneratedMeasure,
        gamma: f64,
        attains_bound: bool,
        report: &GramReport,
    ) -> Self {
        ExtremalDocument {
            parameter: ParameterDescriptor::Constant { gamma: [gamma, 0.0] },
            mass: measure.quadrature_mass(),
            attains_bound,
            membership_passed: report.passed,
            max_abs_error: report.max_abs_error,
            atoms: measure.atoms().iter().map(|a| [a.angle(), a.weight()]).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundsDocument {
    pub schema: String,
    pub passed: bool,
    pub nodes: Vec<Pair>,
    pub blaschke_at_origin: f64,
    pub lower_bound: f64,
    pub upper_bound: f64,
    pub tolerance: f64,
    pub maximal: ExtremalDocument,
    pub minimal: ExtremalDocument,
}

impl BoundsDocument {
    pub fn new(
        nodes: &NodeSet,
        bounds: &MassBounds,
        tolerance: f64,
        maximal: ExtremalDocument,
        minimal: ExtremalDocument,
    ) -> Self {
        BoundsDocument {
            schema: BOUNDS_SCHEMA.to_string(),
            passed: maximal.membership_passed
                && minimal.membership_passed
                && maximal.attains_bound
                && minimal.attains_bound,
            nodes: nodes.points().iter().copied().map(to_pair).collect(),
            blaschke_at_origin: bounds.blaschke_at_origin,
            lower_bound: bounds.lower,
            upper_bound: bounds.upper,
            tolerance,
            maximal,
            minimal,
        }
    }
}

/// Renders a document: objects and nested arrays are indented, arrays of
/// scalars stay on one line.
pub fn render<T: Serialize>(doc: &T) -> String {
    let value = serde_json::to_value(doc).expect("documents contain only finite numbers");
    let mut out = String::new();
    write_value(&value, 0, &mut out);
    out.push('\n');
    out
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn write_value(value: &Value, indent: usize, out: &mut String) {
    let pad = |level: usize| "  ".repeat(level);
    match value {
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (i, (key, v)) in map.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&Value::String(key.clone()).to_string());
                out.push_str(": ");
                write_value(v, indent + 1, out);
                if i + 1 < map.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        Value::Array(items) if !items.is_empty() && !items.iter().all(is_scalar) => {
            out.push_str("[\n");
            for (i, v) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_value(v, indent + 1, out);
                if i + 1 < items.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Array(items) => {
            let inner: Vec<String> = items.iter().map(Value::to_string).collect();
            out.push('[');
            out.push_str(&inner.join(", "));
            out.push(']');
        }
        scalar => out.push_str(&scalar.to_string()),
    }
}
