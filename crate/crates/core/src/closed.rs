//! Closed-form k-metric antidimension values for grids, cylinders, toruses
//! and 2-dimensional Hamming graphs, their metric antidimensionality, and
//! the (k, l)-anonymity evaluator built on top of them.
//!
//! Each family formula is a finite case list over k and the factor parities;
//! every `(k, parity)` combination outside the list maps to infinity, which
//! is consistent with the antidimensionality of the family: beyond the
//! largest k admitting an antiresolving set, none exists.

use std::fmt;

use thiserror::Error;

use crate::families::{FamilyKind, FamilySpec};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClosedError {
    #[error("invalid family size: {0}")]
    InvalidSize(String),
    #[error("k must be at least 1")]
    InvalidK,
    #[error("l must be at least 1")]
    InvalidEll,
}

/// A k-metric antidimension value: a positive cardinality or infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AdimValue {
    Finite(usize),
    Infinite,
}

impl AdimValue {
    pub fn is_finite(&self) -> bool {
        matches!(self, AdimValue::Finite(_))
    }

    pub fn as_finite(&self) -> Option<usize> {
        match self {
            AdimValue::Finite(v) => Some(*v),
            AdimValue::Infinite => None,
        }
    }
}

impl fmt::Display for AdimValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AdimValue::Finite(v) => write!(f, "{v}"),
            AdimValue::Infinite => write!(f, "inf"),
        }
    }
}

/// Outcome of the (k, l)-anonymity evaluation for attacker budget `ell`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AnonymityResult {
    pub ell: usize,
    /// Smallest k whose antidimension is at most `ell`, if any.
    pub k: Option<usize>,
}

fn even(x: usize) -> bool {
    x.is_multiple_of(2)
}

/// adim_k of the grid P_r [] P_s.
pub fn grid_adim(r: usize, s: usize, k: usize) -> Result<AdimValue, ClosedError> {
    check_sizes(FamilyKind::Grid, r, s)?;
    check_k(k)?;
    let value = match k {
        1 => AdimValue::Finite(1),
        2 => {
            if even(r) && even(s) {
                AdimValue::Finite(2)
            } else {
                AdimValue::Finite(1)
            }
        }
        4 if !even(r) && !even(s) => AdimValue::Finite(1),
        _ => AdimValue::Infinite,
    };
    Ok(value)
}

/// adim_k of the cylinder P_r [] C_s.
pub fn cylinder_adim(r: usize, s: usize, k: usize) -> Result<AdimValue, ClosedError> {
    check_sizes(FamilyKind::Cylinder, r, s)?;
    check_k(k)?;
    let value = match k {
        1 => {
            if even(s) {
                AdimValue::Finite(1)
            } else {
                AdimValue::Finite(2)
            }
        }
        2 => {
            if even(r) && even(s) {
                AdimValue::Finite(4)
            } else {
                AdimValue::Finite(1)
            }
        }
        3 => {
            // no 3-antiresolving set exists when s is odd
            if even(s) {
                AdimValue::Finite(2)
            } else {
                AdimValue::Infinite
            }
        }
        4 if !even(r) && !even(s) => AdimValue::Finite(1),
        _ => AdimValue::Infinite,
    };
    Ok(value)
}

/// adim_k of the torus C_r [] C_s.
pub fn torus_adim(r: usize, s: usize, k: usize) -> Result<AdimValue, ClosedError> {
    check_sizes(FamilyKind::Torus, r, s)?;
    check_k(k)?;
    let value = match k {
        1 => {
            if even(r) && even(s) {
                AdimValue::Finite(1)
            } else {
                AdimValue::Finite(2)
            }
        }
        2 => {
            if even(r) != even(s) {
                AdimValue::Finite(1)
            } else if even(r) {
                AdimValue::Finite(4)
            } else {
                AdimValue::Finite(r.min(s))
            }
        }
        3 => {
            if even(r) && even(s) {
                AdimValue::Finite(4)
            } else {
                AdimValue::Infinite
            }
        }
        4 => {
            if even(r) && even(s) {
                AdimValue::Finite(2)
            } else if !even(r) && !even(s) {
                AdimValue::Finite(1)
            } else {
                AdimValue::Infinite
            }
        }
        _ => AdimValue::Infinite,
    };
    Ok(value)
}

/// adim_k of the 2-dimensional Hamming graph K_r [] K_r.
pub fn hamming_adim(r: usize, k: usize) -> Result<AdimValue, ClosedError> {
    check_sizes(FamilyKind::Hamming2, r, r)?;
    check_k(k)?;
    let value = if k == 1 {
        AdimValue::Finite(3)
    } else if k == 2 {
        AdimValue::Finite(2)
    } else if (3..=r.saturating_sub(2)).contains(&k) {
        AdimValue::Finite(r - k)
    } else if k == r - 1 {
        AdimValue::Finite(r)
    } else if k == 2 * r - 2 {
        AdimValue::Finite(1)
    } else {
        // r <= k <= 2r-3, or k beyond the degree ceiling 2r-2
        AdimValue::Infinite
    };
    Ok(value)
}

/// adim_k dispatched over a family spec.
pub fn family_adim(spec: &FamilySpec, k: usize) -> Result<AdimValue, ClosedError> {
    match spec.kind {
        FamilyKind::Grid => grid_adim(spec.r, spec.s, k),
        FamilyKind::Cylinder => cylinder_adim(spec.r, spec.s, k),
        FamilyKind::Torus => torus_adim(spec.r, spec.s, k),
        FamilyKind::Hamming2 => hamming_adim(spec.r, k),
    }
}

/// Metric antidimensionality of a family instance: the largest k for which
/// a k-antiresolving set exists.
pub fn kappa_closed(spec: &FamilySpec) -> Result<usize, ClosedError> {
    check_sizes(spec.kind, spec.r, spec.s)?;
    let (r, s) = (spec.r, spec.s);
    let kappa = match spec.kind {
        FamilyKind::Grid => {
            if !even(r) && !even(s) {
                4
            } else {
                2
            }
        }
        FamilyKind::Cylinder => {
            if !even(r) && !even(s) {
                4
            } else if even(s) {
                3
            } else {
                2
            }
        }
        FamilyKind::Torus => {
            if even(r) == even(s) {
                4
            } else {
                2
            }
        }
        FamilyKind::Hamming2 => 2 * r - 2,
    };
    Ok(kappa)
}

/// Smallest privacy threshold k in `1..=kappa` whose antidimension does not
/// exceed the attacker budget `ell`.
pub fn anonymity<F>(adim_of: F, kappa: usize, ell: usize) -> Result<AnonymityResult, ClosedError>
where
    F: Fn(usize) -> Result<AdimValue, ClosedError>,
{
    if ell < 1 {
        return Err(ClosedError::InvalidEll);
    }
    for k in 1..=kappa {
        if let AdimValue::Finite(v) = adim_of(k)? {
            if v <= ell {
                return Ok(AnonymityResult { ell, k: Some(k) });
            }
        }
    }
    Ok(AnonymityResult { ell, k: None })
}

/// [`anonymity`] for a family instance.
pub fn family_anonymity(spec: &FamilySpec, ell: usize) -> Result<AnonymityResult, ClosedError> {
    let kappa = kappa_closed(spec)?;
    anonymity(|k| family_adim(spec, k), kappa, ell)
}

fn check_k(k: usize) -> Result<(), ClosedError> {
    if k < 1 {
        return Err(ClosedError::InvalidK);
    }
    Ok(())
}

fn check_sizes(kind: FamilyKind, r: usize, s: usize) -> Result<(), ClosedError> {
    let ok = match kind {
        FamilyKind::Grid => r >= 2 && s >= 2,
        FamilyKind::Cylinder => r >= 2 && s >= 3,
        FamilyKind::Torus => r >= 3 && s >= 3,
        FamilyKind::Hamming2 => r >= 4,
    };
    if ok {
        Ok(())
    } else {
        Err(ClosedError::InvalidSize(format!(
            "{kind:?} with r={r}, s={s}"
        )))
    }
}
