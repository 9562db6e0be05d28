//! Non-negative measures on the unit circle that reproduce the Lebesgue
//! scalar product on the span of the Cauchy fractions `1/(t - z_k)`.
//!
//! Every such measure is the Riesz–Herglotz measure of
//! `h = Re (1 + Bω)/(1 - Bω)`, where `B` is the Blaschke product of the
//! nodes and `ω` ranges over the Schur class. This crate evaluates that
//! parametrization, recovers the measure (sampled density plus atoms), and
//! certifies membership through the Gram identities.
//!
//! - [`analytic`]: nodes, Blaschke products, Schur parameters, Cayley transform.
//! - [`measure`]: density and atom recovery, quadrature against the measure.
//! - [`verify`]: Gram and φ-condition checks, sharp mass bounds.
//! - [`cli`]: job configuration, documents and batch commands.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analytic;
pub mod cli;
pub mod measure;
pub mod verify;
pub mod error;

pub use error::{Error, Result};
