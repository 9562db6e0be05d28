use num_complex::Complex64;

/// Errors raised by the analytic core, measure recovery and verification.
#[derive(thiserror::Error, Debug, Clone, PartialEq)]
pub enum Error {
    #[error("node list is empty")]
    EmptyNodeList,

    #[error("node {index} = {point} has modulus {modulus} >= 1")]
    NodeOutsideDisc {
        index: usize,
        point: Complex64,
        modulus: f64,
    },

    #[error("nodes {first} and {second} coincide at {point}")]
    DuplicateNode {
        first: usize,
        second: usize,
        point: Complex64,
    },

    #[error("point {point} lies outside the closed unit disc")]
    PointOutsideClosedDisc { point: Complex64 },

    #[error("Blaschke factor for node {index} has a pole at {point}")]
    PoleHit { index: usize, point: Complex64 },

    #[error("Schur multiplier {gamma} has modulus {modulus} > 1")]
    MultiplierOutsideDisc { gamma: Complex64, modulus: f64 },

    #[error("Blaschke zero {index} = {point} is not in the open unit disc")]
    ZeroOutsideDisc { index: usize, point: Complex64 },

    #[error("rational parameter has an empty or zero {which} polynomial")]
    DegeneratePolynomial { which: &'static str },

    #[error("denominator of rational parameter vanishes in the closed unit disc")]
    DenominatorVanishesInDisc,

    #[error("rational parameter is not strictly contractive: certified sup bound {bound} exceeds {limit}")]
    NotContractive { bound: f64, limit: f64 },

    #[error("Cayley transform is singular: |1 - s| = {distance:e}")]
    CayleySingularity { distance: f64 },

    #[error("parameter is not inner; atoms exist only for unimodular constants or Blaschke multiples")]
    NotInnerParameter,

    #[error("phase winding mismatch: expected {expected} crossings of s = 1, found {found}")]
    PhaseWindingMismatch { expected: usize, found: usize },

    #[error("atom weight at angle {angle} is not a positive real: {weight}")]
    AtomWeightNotReal { angle: f64, weight: Complex64 },

    #[error("contractive parameter reaches s = 1 on the circle at {count} grid points; mixed measures are unsupported")]
    UnsupportedMixedCase { count: usize },

    #[error("grid size {size} must be a power of two no smaller than {minimum}")]
    InvalidGridSize { size: usize, minimum: usize },

    #[error("quadrature mass {quadrature} disagrees with h(0) = {expected}")]
    MassConsistencyFailure { quadrature: f64, expected: f64 },

    #[error("invalid measure: {0}")]
    InvalidMeasure(String),
}

impl Error {
    /// Stable, machine-readable name of the error variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::EmptyNodeList => "EmptyNodeList",
            Error::NodeOutsideDisc { .. } => "NodeOutsideDisc",
            Error::DuplicateNode { .. } => "DuplicateNode",
            Error::PointOutsideClosedDisc { .. } => "PointOutsideClosedDisc",
            Error::PoleHit { .. } => "PoleHit",
            Error::MultiplierOutsideDisc { .. } => "MultiplierOutsideDisc",
            Error::ZeroOutsideDisc { .. } => "ZeroOutsideDisc",
            Error::DegeneratePolynomial { .. } => "DegeneratePolynomial",
            Error::DenominatorVanishesInDisc => "DenominatorVanishesInDisc",
            Error::NotContractive { .. } => "NotContractive",
            Error::CayleySingularity { .. } => "CayleySingularity",
            Error::NotInnerParameter => "NotInnerParameter",
            Error::PhaseWindingMismatch { .. } => "PhaseWindingMismatch",
            Error::AtomWeightNotReal { .. } => "AtomWeightNotReal",
            Error::UnsupportedMixedCase { .. } => "UnsupportedMixedCase",
            Error::InvalidGridSize { .. } => "InvalidGridSize",
            Error::MassConsistencyFailure { .. } => "MassConsistencyFailure",
            Error::InvalidMeasure(_) => "InvalidMeasure",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
