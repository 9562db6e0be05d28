use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

use super::{blaschke_product, check_closed_disc};
use crate::{Error, Result};

/// Number of uniform boundary samples used to certify rational parameters.
pub const CERTIFICATION_GRID: usize = 8192;

/// Rational parameters must satisfy `sup |ω| <= CONTRACTION_LIMIT` on the circle.
pub const CONTRACTION_LIMIT: f64 = 1.0 - 1e-9;

/// Multipliers within this distance of the unit circle are treated as unimodular.
const UNIMODULAR_SLACK: f64 = 1e-12;

/// The three certified representations of a Schur-class function.
///
/// Polynomial coefficients are stored in ascending powers of `z`.
#[derive(Debug, Clone, PartialEq)]
pub enum SchurForm {
    Constant(Complex64),
    ScaledBlaschke {
        multiplier: Complex64,
        zeros: Vec<Complex64>,
    },
    RationalCertified {
        numerator: Vec<Complex64>,
        denominator: Vec<Complex64>,
        sup_bound: f64,
    },
}

/// A function `ω` of the Schur class with a construction-time certificate.
#[derive(Debug, Clone, PartialEq)]
pub struct SchurParameter {
    form: SchurForm,
    inner: bool,
}

impl SchurParameter {
    pub fn constant(gamma: Complex64) -> Result<Self> {
        let (gamma, inner) = check_multiplier(gamma)?;
        Ok(SchurParameter {
            form: SchurForm::Constant(gamma),
            inner,
        })
    }

    /// `γ · ∏ (a - z)/(1 - ā z) · |a|/a` over `zeros`, normalized like the
    /// node Blaschke product (factor `z` for a zero at the origin).
    pub fn scaled_blaschke(multiplier: Complex64, zeros: Vec<Complex64>) -> Result<Self> {
        let (multiplier, inner) = check_multiplier(multiplier)?;
        for (index, &point) in zeros.iter().enumerate() {
            if !(point.norm() < 1.0) {
                return Err(Error::ZeroOutsideDisc { index, point });
            }
        }
        Ok(SchurParameter {
            form: SchurForm::ScaledBlaschke { multiplier, zeros },
            inner,
        })
    }

    /// Certifies `p/q` as a strictly contractive Schur function.
    ///
    /// `q` must have no zeros in the closed disc (Schur–Cohn test) and the
    /// boundary supremum, sampled on [`CERTIFICATION_GRID`] points and padded
    /// by a first-order Lipschitz margin, must not exceed [`CONTRACTION_LIMIT`].
    pub fn rational(numerator: Vec<Complex64>, denominator: Vec<Complex64>) -> Result<Self> {
        let numerator = trim(numerator);
        let denominator = trim(denominator);
        if numerator.is_empty() || numerator.iter().any(|c| !c.is_finite()) {
            return Err(Error::DegeneratePolynomial { which: "numerator" });
        }
        if denominator.is_empty()
            || denominator.iter().all(|&c| c == Complex64::new(0.0, 0.0))
            || denominator.iter().any(|c| !c.is_finite())
        {
            return Err(Error::DegeneratePolynomial {
                which: "denominator",
            });
        }
        if !no_zeros_in_closed_disc(&denominator) {
            return Err(Error::DenominatorVanishesInDisc);
        }
        let sup_bound = certify_boundary_sup(&numerator, &denominator);
        if !(sup_bound <= CONTRACTION_LIMIT) {
            return Err(Error::NotContractive {
                bound: sup_bound,
                limit: CONTRACTION_LIMIT,
            });
        }
        Ok(SchurParameter {
            form: SchurForm::RationalCertified {
                numerator,
                denominator,
                sup_bound,
            },
            inner: false,
        })
    }

    /// Re-validates a form; a stored `sup_bound` is recomputed, not trusted.
    pub fn from_form(form: SchurForm) -> Result<Self> {
        match form {
            SchurForm::Constant(gamma) => Self::constant(gamma),
            SchurForm::ScaledBlaschke { multiplier, zeros } => {
                Self::scaled_blaschke(multiplier, zeros)
            }
            SchurForm::RationalCertified {
                numerator,
                denominator,
                ..
            } => Self::rational(numerator, denominator),
        }
    }

    pub fn form(&self) -> &SchurForm {
        &self.form
    }

    /// True iff `|ω| = 1` everywhere on the circle, i.e. a unimodular
    /// constant or a unimodular multiple of a Blaschke product.
    pub fn is_inner(&self) -> bool {
        self.inner
    }

    /// Unimodular multiplier and zeros of an inner parameter.
    pub fn inner_factors(&self) -> Option<(Complex64, &[Complex64])> {
        if !self.inner {
            return None;
        }
        match &self.form {
            SchurForm::Constant(gamma) => Some((*gamma, &[])),
            SchurForm::ScaledBlaschke { multiplier, zeros } => Some((*multiplier, zeros)),
            SchurForm::RationalCertified { .. } => None,
        }
    }

    /// Upper bound for `|ω|` on the closed disc.
    pub fn sup_bound(&self) -> f64 {
        match &self.form {
            SchurForm::Constant(gamma) => gamma.norm(),
            SchurForm::ScaledBlaschke { multiplier, .. } => multiplier.norm(),
            SchurForm::RationalCertified { sup_bound, .. } => *sup_bound,
        }
    }

    /// Evaluates `ω(z)` without domain checks.
    pub(crate) fn value(&self, z: Complex64) -> Complex64 {
        match &self.form {
            SchurForm::Constant(gamma) => *gamma,
            SchurForm::ScaledBlaschke { multiplier, zeros } => {
                multiplier * blaschke_product(zeros, z)
            }
            SchurForm::RationalCertified {
                numerator,
                denominator,
                ..
            } => horner(numerator, z) / horner(denominator, z),
        }
    }
}

pub fn schur_eval(param: &SchurParameter, z: Complex64) -> Result<Complex64> {
    check_closed_disc(z)?;
    Ok(param.value(z))
}

fn check_multiplier(gamma: Complex64) -> Result<(Complex64, bool)> {
    let modulus = gamma.norm();
    if !(modulus <= 1.0 + UNIMODULAR_SLACK) {
        return Err(Error::MultiplierOutsideDisc { gamma, modulus });
    }
    if (modulus - 1.0).abs() <= UNIMODULAR_SLACK {
        Ok((gamma / modulus, true))
    } else {
        Ok((gamma, false))
    }
}

fn trim(mut coefficients: Vec<Complex64>) -> Vec<Complex64> {
    while coefficients.len() > 1 && coefficients.last() == Some(&Complex64::new(0.0, 0.0)) {
        coefficients.pop();
    }
    coefficients
}

fn horner(coefficients: &[Complex64], z: Complex64) -> Complex64 {
    coefficients
        .iter()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
}

/// `(p(z), p'(z))` by Horner's scheme.
fn horner_with_derivative(coefficients: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let zero = Complex64::new(0.0, 0.0);
    coefficients.iter().rev().fold((zero, zero), |(p, dp), &c| (p * z + c, dp * z + p))
}

/// Schur–Cohn test: true iff `q` has no zeros with `|z| <= 1`.
///
/// The reversed polynomial `p(z) = z^m conj(q(1/z̄))` has its zeros at the
/// reflections `1/z̄` of the zeros of `q`, so the question becomes whether all
/// zeros of `p` lie in the open disc. The Schur transform
/// `(conj(p_m) p(z) - p_0 p*(z)) / z` lowers the degree by one and keeps that
/// property exactly when `|p_0| < |p_m|`.
pub(crate) fn no_zeros_in_closed_disc(q: &[Complex64]) -> bool {
    let q = trim(q.to_vec());
    let m = q.len() - 1;
    if m == 0 {
        return q[0] != Complex64::new(0.0, 0.0);
    }
    if q[0] == Complex64::new(0.0, 0.0) {
        return false;
    }
    let mut p: Vec<Complex64> = (0..=m).map(|j| q[m - j].conj()).collect();
    while p.len() > 1 {
        let deg = p.len() - 1;
        let a0 = p[0];
        let am = p[deg];
        if !(a0.norm() < am.norm() * (1.0 - 1e-12)) {
            return false;
        }
        let mut next: Vec<Complex64> = (0..deg)
            .map(|j| am.conj() * p[j + 1] - a0 * p[deg - 1 - j].conj())
            .collect();
        let scale = next.iter().map(|c| c.norm()).fold(0.0, f64::max);
        if scale == 0.0 || !scale.is_finite() {
            return false;
        }
        for c in &mut next {
            *c /= scale;
        }
        p = next;
    }
    true
}

fn certify_boundary_sup(numerator: &[Complex64], denominator: &[Complex64]) -> f64 {
    let n = CERTIFICATION_GRID;
    let mut sup = 0.0_f64;
    let mut slope = 0.0_f64;
    for j in 0..n {
        let t = Complex64::from_polar(1.0, TAU * j as f64 / n as f64);
        let (p, dp) = horner_with_derivative(numerator, t);
        let (q, dq) = horner_with_derivative(denominator, t);
        sup = sup.max((p / q).norm());
        // |dω/dθ| = |t ω'(t)| = |p'q - pq'| / |q|²
        slope = slope.max((dp * q - p * dq).norm() / q.norm_sqr());
    }
    sup + slope * PI / n as f64
}
