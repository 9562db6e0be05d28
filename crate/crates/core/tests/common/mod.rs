#![allow(dead_code)]

use std::f64::consts::TAU;

use herglotz::analytic::{NodeSet, SchurParameter};
use num_complex::Complex64;
use rand::Rng;

/// Random point with `|z| <= radius`, uniform in area.
pub fn point_in_disc<R: Rng>(rng: &mut R, radius: f64) -> Complex64 {
    Complex64::from_polar(radius * rng.gen::<f64>().sqrt(), rng.gen_range(0.0..TAU))
}

/// `1..=max_len` distinct nodes with modulus at most `radius`.
pub fn random_nodes<R: Rng>(rng: &mut R, max_len: usize, radius: f64) -> NodeSet {
    let n = rng.gen_range(1..=max_len);
    let points = (0..n).map(|_| point_in_disc(rng, radius)).collect();
    NodeSet::new(points).expect("random nodes are distinct with probability one")
}

fn max_on_circle(f: impl Fn(Complex64) -> Complex64) -> f64 {
    (0..4096)
        .map(|j| f(Complex64::from_polar(1.0, TAU * j as f64 / 4096.0)).norm())
        .fold(0.0, f64::max)
}

/// Strictly contractive parameter with `sup |ω| <= 0.6`, cycling through the
/// three certified forms.
pub fn random_contractive<R: Rng>(rng: &mut R, form: usize) -> SchurParameter {
    let modulus = rng.gen_range(0.05..0.6);
    let gamma = Complex64::from_polar(modulus, rng.gen_range(0.0..TAU));
    match form % 3 {
        0 => SchurParameter::constant(gamma).unwrap(),
        1 => {
            let m = rng.gen_range(1..=3);
            let zeros = (0..m).map(|_| point_in_disc(rng, 0.8)).collect();
            SchurParameter::scaled_blaschke(gamma, zeros).unwrap()
        }
        _ => {
            let numerator = vec![point_in_disc(rng, 1.0), point_in_disc(rng, 1.0)];
            let denominator = vec![Complex64::new(1.0, 0.0), point_in_disc(rng, 0.5)];
            let sup = max_on_circle(|z| {
                (numerator[0] + numerator[1] * z) / (denominator[0] + denominator[1] * z)
            });
            let scale = modulus / sup;
            let numerator = numerator.into_iter().map(|c| c * scale).collect();
            SchurParameter::rational(numerator, denominator).unwrap()
        }
    }
}

/// Unimodular multiple of a Blaschke product with `zeros` random zeros.
pub fn random_inner<R: Rng>(rng: &mut R, zeros: usize) -> SchurParameter {
    let gamma = Complex64::from_polar(1.0, rng.gen_range(0.0..TAU));
    let zeros = (0..zeros).map(|_| point_in_disc(rng, 0.8)).collect();
    SchurParameter::scaled_blaschke(gamma, zeros).unwrap()
}

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}
