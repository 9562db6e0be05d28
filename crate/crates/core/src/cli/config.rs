use std::path::{Path, PathBuf};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::CliError;
use crate::analytic::{NodeSet, SchurForm, SchurParameter};
use crate::measure::{DEFAULT_GRID_SIZE, MIN_GRID_SIZE};

pub const DEFAULT_TOLERANCE: f64 = 1e-8;

/// `[re, im]` pair as written in configs and documents.
pub type Pair = [f64; 2];

pub(crate) fn to_complex(p: Pair) -> Complex64 {
    Complex64::new(p[0], p[1])
}

pub(crate) fn to_pair(z: Complex64) -> Pair {
    [z.re, z.im]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CommandName {
    Generate,
    Verify,
    Bounds,
    Sweep,
}

/// Tagged description of a Schur parameter.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ParameterDescriptor {
    Constant {
        gamma: Pair,
    },
    ScaledBlaschke {
        multiplier: Pair,
        zeros: Vec<Pair>,
    },
    Rational {
        numerator: Vec<Pair>,
        denominator: Vec<Pair>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        sup_bound: Option<f64>,
    },
}

impl ParameterDescriptor {
    pub fn to_parameter(&self) -> crate::Result<SchurParameter> {
        let many = |v: &[Pair]| v.iter().copied().map(to_complex).collect::<Vec<_>>();
        match self {
            ParameterDescriptor::Constant { gamma } => SchurParameter::constant(to_complex(*gamma)),
            ParameterDescriptor::ScaledBlaschke { multiplier, zeros } => {
                SchurParameter::scaled_blaschke(to_complex(*multiplier), many(zeros))
            }
            ParameterDescriptor::Rational {
                numerator,
                denominator,
                ..
            } => SchurParameter::rational(many(numerator), many(denominator)),
        }
    }

    pub fn from_parameter(param: &SchurParameter) -> Self {
        let many = |v: &[Complex64]| v.iter().copied().map(to_pair).collect::<Vec<_>>();
        match param.form() {
            SchurForm::Constant(gamma) => ParameterDescriptor::Constant {
                gamma: to_pair(*gamma),
            },
            SchurForm::ScaledBlaschke { multiplier, zeros } => ParameterDescriptor::ScaledBlaschke {
                multiplier: to_pair(*multiplier),
                zeros: many(zeros),
            },
            SchurForm::RationalCertified {
                numerator,
                denominator,
                sup_bound,
            } => ParameterDescriptor::Rational {
                numerator: many(numerator),
                denominator: many(denominator),
                sup_bound: Some(*sup_bound),
            },
        }
    }
}

/// Constant parameters `γ = r e^{iα}` on a polar grid of the closed disc:
/// `r = k/radius_steps` for `k = 0..=radius_steps` and
/// `α = 2πj/angle_steps`; the centre contributes a single row.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSpec {
    pub radius_steps: usize,
    #[serde(default = "default_angle_steps")]
    pub angle_steps: usize,
}

fn default_angle_steps() -> usize {
    1
}

/// A batch job as read from a TOML file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobConfig {
    #[serde(default)]
    pub command: Option<CommandName>,
    #[serde(default)]
    pub nodes: Vec<Pair>,
    #[serde(default)]
    pub parameter: Option<ParameterDescriptor>,
    #[serde(default = "default_grid_size")]
    pub grid_size: usize,
    #[serde(default = "default_tolerance")]
    pub tolerance: f64,
    #[serde(default)]
    pub output_path: Option<PathBuf>,
    #[serde(default)]
    pub measure_path: Option<PathBuf>,
    #[serde(default)]
    pub sweep: Option<SweepSpec>,
}

fn default_grid_size() -> usize {
    DEFAULT_GRID_SIZE
}

fn default_tolerance() -> f64 {
    DEFAULT_TOLERANCE
}

impl Default for JobConfig {
    fn default() -> Self {
        JobConfig {
            command: None,
            nodes: Vec::new(),
            parameter: None,
            grid_size: DEFAULT_GRID_SIZE,
            tolerance: DEFAULT_TOLERANCE,
            output_path: None,
            measure_path: None,
            sweep: None,
        }
    }
}

impl JobConfig {
    pub fn from_toml(text: &str) -> Result<Self, CliError> {
        toml::from_str(text).map_err(|e| CliError::input(format!("invalid config: {e}")))
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))?;
        Self::from_toml(&text)
    }

    pub fn node_set(&self) -> Result<NodeSet, CliError> {
        NodeSet::new(self.nodes.iter().copied().map(to_complex).collect()).map_err(CliError::Invalid)
    }

    pub fn schur_parameter(&self) -> Result<SchurParameter, CliError> {
        self.parameter
            .as_ref()
            .ok_or_else(|| CliError::input("config has no [parameter] table"))?
            .to_parameter()
            .map_err(CliError::Invalid)
    }

    pub fn validate_numerics(&self) -> Result<(), CliError> {
        if self.grid_size < MIN_GRID_SIZE || !self.grid_size.is_power_of_two() {
            return Err(CliError::Invalid(crate::Error::InvalidGridSize {
                size: self.grid_size,
                minimum: MIN_GRID_SIZE,
            }));
        }
        if !(self.tolerance > 0.0 && self.tolerance.is_finite()) {
            return Err(CliError::input(format!(
                "tolerance must be positive, got {}",
                self.tolerance
            )));
        }
        Ok(())
    }
}
