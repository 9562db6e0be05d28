use num_complex::Complex64;
use rayon::prelude::*;

use crate::analytic::NodeSet;
use crate::measure::GeneratedMeasure;

/// Membership tolerance for purely atomic measures (exact finite sums).
pub const ATOMIC_TOLERANCE: f64 = 1e-10;
/// Membership tolerance for absolutely continuous measures (quadrature).
pub const CONTINUOUS_TOLERANCE: f64 = 1e-8;

/// Square complex matrix in row-major order.
#[derive(Debug, Clone, PartialEq)]
pub struct GramMatrix {
    size: usize,
    entries: Vec<Complex64>,
}

impl GramMatrix {
    fn from_fn(size: usize, f: impl Fn(usize, usize) -> Complex64) -> Self {
        let entries = (0..size * size).map(|i| f(i / size, i % size)).collect();
        GramMatrix { size, entries }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.size + col]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Complex64]> {
        self.entries.chunks(self.size)
    }

    /// `max |a_kl - conj(a_lk)|`.
    pub fn hermitian_defect(&self) -> f64 {
        (0..self.size)
            .flat_map(|k| (0..self.size).map(move |l| (k, l)))
            .map(|(k, l)| (self.get(k, l) - self.get(l, k).conj()).norm())
            .fold(0.0, f64::max)
    }

    pub fn max_abs_difference(&self, other: &GramMatrix) -> f64 {
        assert_eq!(self.size, other.size, "Gram matrices of different sizes");
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Entrywise `λ A + (1 - λ) B`.
    pub fn mix(&self, other: &GramMatrix, lambda: f64) -> GramMatrix {
        assert_eq!(self.size, other.size, "Gram matrices of different sizes");
        GramMatrix {
            size: self.size,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a * lambda + b * (1.0 - lambda))
                .collect(),
        }
    }
}

/// Lebesgue Gram matrix `1/(1 - z_k conj(z_l))` of the Cauchy fractions.
pub fn gram_target(nodes: &NodeSet) -> GramMatrix {
    let z = nodes.points();
    GramMatrix::from_fn(z.len(), |k, l| 1.0 / (1.0 - z[k] * z[l].conj()))
}

/// `∫ (t - z_k)⁻¹ conj((t - z_l)⁻¹) dσ`, computed for `k <= l` and reflected.
pub fn gram_compute(measure: &GeneratedMeasure) -> GramMatrix {
    let z = measure.nodes().points();
    let n = z.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|k| (k..n).map(move |l| (k, l))).collect();
    let upper: Vec<Complex64> = pairs
        .par_iter()
        .map(|&(k, l)| {
            let (zk, zl) = (z[k], z[l]);
            measure.integrate(|t| 1.0 / ((t - zk) * (t - zl).conj()))
        })
        .collect();
    let mut entries = vec![Complex64::new(0.0, 0.0); n * n];
    for (&(k, l), &v) in pairs.iter().zip(&upper) {
        if k == l {
            entries[k * n + k] = Complex64::new(v.re, 0.0);
        } else {
            entries[k * n + l] = v;
            entries[l * n + k] = v.conj();
        }
    }
    GramMatrix { size: n, entries }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GramReport {
    pub target: GramMatrix,
    pub computed: GramMatrix,
    pub max_abs_error: f64,
    pub tolerance: f64,
    pub passed: bool,
}

/// Compares the Gram matrix of `measure` with the Lebesgue target.
pub fn verify_membership(measure: &GeneratedMeasure, tolerance: f64) -> GramReport {
    let target = gram_target(measure.nodes());
    let computed = gram_compute(measure);
    let max_abs_error = computed.max_abs_difference(&target);
    GramReport {
        passed: max_abs_error <= tolerance,
        target,
        computed,
        max_abs_error,
        tolerance,
    }
}
