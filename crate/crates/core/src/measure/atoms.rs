use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

use crate::analytic::{
    blaschke_log_derivative_times_t, blaschke_product, phase_rate, BoundaryPoint, NodeSet,
    SchurParameter,
};
use crate::{Error, Result};

/// Stop refining once `|s(t₀) - 1|` falls below this.
const ROOT_TOLERANCE: f64 = 1e-13;
const MAX_NEWTON_STEPS: usize = 50;
/// Largest accepted `|Im μ|`, relative to `max(1, |μ|)`.
const WEIGHT_IMAGINARY_TOLERANCE: f64 = 1e-10;
const MIN_TRACKING_GRID: usize = 1024;

/// A point mass `weight · δ(t₀)` on the unit circle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Atom {
    point: BoundaryPoint,
    weight: f64,
}

impl Atom {
    /// `weight` must be positive and finite.
    pub fn new(angle: f64, weight: f64) -> Result<Self> {
        if !(weight > 0.0 && weight.is_finite()) || !angle.is_finite() {
            return Err(Error::InvalidMeasure(format!(
                "atom at angle {angle} has non-positive weight {weight}"
            )));
        }
        Ok(Atom {
            point: BoundaryPoint::from_angle(angle),
            weight,
        })
    }

    pub fn location(&self) -> Complex64 {
        self.point.value()
    }

    pub fn angle(&self) -> f64 {
        self.point.angle()
    }

    pub fn weight(&self) -> f64 {
        self.weight
    }
}

/// The `s`-data of an inner parameter: `s = γ · ∏ factor(a)` over all zeros.
struct InnerProduct {
    gamma: Complex64,
    zeros: Vec<Complex64>,
}

impl InnerProduct {
    fn at(&self, theta: f64) -> Complex64 {
        self.gamma * blaschke_product(&self.zeros, Complex64::from_polar(1.0, theta))
    }
}

/// Locates the atoms of the measure generated by an inner parameter.
///
/// `s = Bω` is then a unimodular multiple of a Blaschke product of degree
/// `d = n + deg ω`, whose boundary phase increases strictly by `2πd`. Each
/// crossing of the phase through a multiple of `2π` is an atom; it is
/// bracketed on a tracking grid and refined by safeguarded Newton steps on
/// `arg s`. The weight is `μ = 1/(t₀ s'(t₀))`.
pub fn find_atoms(nodes: &NodeSet, param: &SchurParameter) -> Result<Vec<Atom>> {
    let (gamma, extra) = param.inner_factors().ok_or(Error::NotInnerParameter)?;
    let mut zeros = nodes.points().to_vec();
    zeros.extend_from_slice(extra);
    let s = InnerProduct { gamma, zeros };
    let degree = s.zeros.len();

    // Bound the phase rate so one tracking step advances the phase by at most π/4.
    let max_rate: f64 = s
        .zeros
        .iter()
        .map(|a| (1.0 + a.norm()) / (1.0 - a.norm()))
        .sum();
    let steps = ((8.0 * max_rate).ceil() as usize)
        .max(MIN_TRACKING_GRID)
        .next_power_of_two();
    let step = TAU / steps as f64;

    let mut unwrapped = Vec::with_capacity(steps + 1);
    let mut previous = s.at(0.0).arg();
    unwrapped.push(previous);
    for j in 1..=steps {
        let current = s.at(step * j as f64).arg();
        let mut delta = current - previous;
        if delta <= -PI {
            delta += TAU;
        } else if delta > PI {
            delta -= TAU;
        }
        unwrapped.push(unwrapped[j - 1] + delta);
        previous = current;
    }

    let start = unwrapped[0];
    let winding = ((unwrapped[steps] - start) / TAU).round();
    if winding != degree as f64 {
        return Err(Error::PhaseWindingMismatch {
            expected: degree,
            found: winding.max(0.0) as usize,
        });
    }

    // Targets 2πk in [start, start + 2πd): exactly one per revolution.
    let first = (start / TAU).ceil() as i64;
    let mut atoms = Vec::with_capacity(degree);
    let mut j = 0;
    for k in first..first + degree as i64 {
        let target = TAU * k as f64;
        while j < steps && unwrapped[j + 1] <= target {
            j += 1;
        }
        if j >= steps || unwrapped[j] > target {
            break;
        }
        let theta = refine(&s, step * j as f64, step * (j + 1) as f64);
        atoms.push(weigh(&s, theta)?);
    }
    if atoms.len() != degree {
        return Err(Error::PhaseWindingMismatch {
            expected: degree,
            found: atoms.len(),
        });
    }
    atoms.sort_by(|a, b| a.angle().total_cmp(&b.angle()));
    Ok(atoms)
}

/// Root of `arg s(e^{iθ})` in `[lo, hi]`, where the principal argument runs
/// from `<= 0` to `> 0`.
fn refine(s: &InnerProduct, mut lo: f64, mut hi: f64) -> f64 {
    let g_lo = s.at(lo).arg();
    let g_hi = s.at(hi).arg();
    let mut theta = if g_hi > g_lo {
        lo + (hi - lo) * (-g_lo / (g_hi - g_lo))
    } else {
        0.5 * (lo + hi)
    };
    for _ in 0..MAX_NEWTON_STEPS {
        let value = s.at(theta);
        if (value - 1.0).norm() <= ROOT_TOLERANCE {
            break;
        }
        let g = value.arg();
        if g <= 0.0 {
            lo = theta;
        } else {
            hi = theta;
        }
        let rate = phase_rate(&s.zeros, Complex64::from_polar(1.0, theta));
        let mut next = theta - g / rate;
        if !(next > lo && next < hi) {
            next = 0.5 * (lo + hi);
        }
        if next == theta {
            break;
        }
        theta = next;
    }
    theta
}

fn weigh(s: &InnerProduct, theta: f64) -> Result<Atom> {
    let t = Complex64::from_polar(1.0, theta);
    let t_ds = s.gamma * blaschke_product(&s.zeros, t) * blaschke_log_derivative_times_t(&s.zeros, t);
    let weight = 1.0 / t_ds;
    if weight.im.abs() > WEIGHT_IMAGINARY_TOLERANCE * weight.norm().max(1.0) || !(weight.re > 0.0)
    {
        return Err(Error::AtomWeightNotReal { angle: theta, weight });
    }
    Atom::new(theta, weight.re)
}
