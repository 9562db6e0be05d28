use num_complex::Complex64;

use crate::{Error, Result};

/// Pairwise distinct interpolation nodes in the open unit disc.
///
/// Order is preserved; it fixes the row/column order of Gram matrices.
#[derive(Debug, Clone, PartialEq)]
pub struct NodeSet {
    points: Vec<Complex64>,
}

impl NodeSet {
    pub fn new(points: Vec<Complex64>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyNodeList);
        }
        for (index, &point) in points.iter().enumerate() {
            let modulus = point.norm();
            // NaN moduli fail this comparison as well.
            if !(modulus < 1.0) {
                return Err(Error::NodeOutsideDisc {
                    index,
                    point,
                    modulus,
                });
            }
        }
        for second in 1..points.len() {
            for first in 0..second {
                if points[first] == points[second] {
                    return Err(Error::DuplicateNode {
                        first,
                        second,
                        point: points[first],
                    });
                }
            }
        }
        Ok(NodeSet { points })
    }

    pub fn points(&self) -> &[Complex64] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// `B(0) = ∏ |z_k|`, which lies in `[0, 1)`.
    pub fn blaschke_at_origin(&self) -> f64 {
        self.points.iter().map(|z| z.norm()).product()
    }
}

pub fn validate_nodes(points: &[Complex64]) -> Result<NodeSet> {
    NodeSet::new(points.to_vec())
}
