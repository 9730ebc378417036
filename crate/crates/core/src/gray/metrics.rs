//! Lee and Hamming weights/distances on R, S and their vectors.

use std::fmt;

use crate::ring::{RElement, SElement};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetricError {
    pub left: usize,
    pub right: usize,
}

impl fmt::Display for MetricError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "length mismatch: {} vs {}", self.left, self.right)
    }
}

impl std::error::Error for MetricError {}

/// Lee weight of a + wb is the Z4 Lee weight of (a, b).
pub fn lee_weight_r(x: RElement) -> u64 {
    x.a.lee_weight() + x.b.lee_weight()
}

/// Lee weight of an S element is the Z4 Lee weight of its coordinate tuple.
pub fn lee_weight_s(x: SElement) -> u64 {
    x.coords.iter().map(|c| c.lee_weight()).sum()
}

pub fn lee_weight_r_vec(v: &[RElement]) -> u64 {
    v.iter().map(|&x| lee_weight_r(x)).sum()
}

pub fn lee_weight_s_vec(v: &[SElement]) -> u64 {
    v.iter().map(|&x| lee_weight_s(x)).sum()
}

pub fn lee_distance_r(x: &[RElement], y: &[RElement]) -> Result<u64, MetricError> {
    if x.len() != y.len() {
        return Err(MetricError {
            left: x.len(),
            right: y.len(),
        });
    }
    Ok(x.iter().zip(y).map(|(&a, &b)| lee_weight_r(a - b)).sum())
}

pub fn lee_distance_s(x: &[SElement], y: &[SElement]) -> Result<u64, MetricError> {
    if x.len() != y.len() {
        return Err(MetricError {
            left: x.len(),
            right: y.len(),
        });
    }
    Ok(x.iter().zip(y).map(|(&a, &b)| lee_weight_s(a - b)).sum())
}

/// Number of differing positions between two equal-length sequences.
pub fn hamming_distance<T: PartialEq>(x: &[T], y: &[T]) -> Result<u64, MetricError> {
    if x.len() != y.len() {
        return Err(MetricError {
            left: x.len(),
            right: y.len(),
        });
    }
    Ok(x.iter().zip(y).filter(|(a, b)| a != b).count() as u64)
}
