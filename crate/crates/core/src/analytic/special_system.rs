use num_complex::Complex64;

/// Absolute residual accepted by [`solve_special_system`].
pub const SPECIAL_SYSTEM_TOLERANCE: f64 = 1e-8;

/// Outcome of solving `φ_k + conj(φ_l) = 2` for all pairs `(k, l)`.
///
/// Every solution has the form `φ_k = 1 - iβ` with one real `β`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SpecialSystem {
    Solved { beta: f64 },
    NotSolvable { residual: f64 },
}

impl SpecialSystem {
    pub fn is_solved(&self) -> bool {
        matches!(self, SpecialSystem::Solved { .. })
    }

    pub fn beta(&self) -> Option<f64> {
        match *self {
            SpecialSystem::Solved { beta } => Some(beta),
            SpecialSystem::NotSolvable { .. } => None,
        }
    }
}

pub fn solve_special_system(phi: &[Complex64]) -> SpecialSystem {
    solve_special_system_with_tolerance(phi, SPECIAL_SYSTEM_TOLERANCE)
}

/// The reported residual is the largest violation among the cross equations
/// `k != l`; only when all of those hold is it the largest diagonal violation
/// `|2 Re φ_k - 2|`. It is positive exactly when the system fails.
///
/// # Panics
///
/// If `phi` is empty.
pub fn solve_special_system_with_tolerance(phi: &[Complex64], tolerance: f64) -> SpecialSystem {
    assert!(!phi.is_empty(), "special system needs at least one value");
    let mut cross = 0.0_f64;
    let mut diagonal = 0.0_f64;
    for (k, &pk) in phi.iter().enumerate() {
        for (l, &pl) in phi.iter().enumerate() {
            let violation = (pk + pl.conj() - 2.0).norm();
            if k == l {
                diagonal = diagonal.max(violation);
            } else {
                cross = cross.max(violation);
            }
        }
    }
    let residual = if cross > tolerance { cross } else { cross.max(diagonal) };
    if residual <= tolerance {
        let beta = -phi.iter().map(|p| p.im).sum::<f64>() / phi.len() as f64;
        SpecialSystem::Solved { beta }
    } else {
        SpecialSystem::NotSolvable { residual }
    }
}
