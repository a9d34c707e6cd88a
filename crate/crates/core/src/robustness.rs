// Copyright 2026 dimerss contributors
// SPDX-License-Identifier: Apache-2.0

//! Signal-to-noise figure of merit for the robustness of steady-state
//! entanglement.
//!
//! For a coupling `J`, `α*` maximizes the noiseless concurrence and `η*` is
//! the smallest noise strength at which the best concurrence over all drive
//! amplitudes vanishes. The figure of merit is `SNR = α* / √(2η*)`; smaller
//! is more robust.
//!
//! The search protocol is fixed so results are reproducible: `α` on
//! `[0, alpha_max]` sampled on a uniform grid, refined by golden-section
//! search around the best grid point; `η*` bracketed by doubling from
//! `0.01` and bisected to a relative width of `1e-6`. "Vanishes" means
//! below [`COLLAPSE_TOL`].

use rayon::prelude::*;

use crate::entanglement::steady_concurrence;
use crate::error::{Error, Result};
use crate::liouvillian::{DriveMode, ModelParams};

/// Concurrence below this value counts as zero.
pub const COLLAPSE_TOL: f64 = 1e-6;
const ETA_BRACKET_START: f64 = 0.01;
const ETA_MAX: f64 = 1e4;
const ETA_RTOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlphaSearch {
    pub alpha_max: f64,
    pub grid_points: usize,
    /// Final bracket width of the golden-section refinement.
    pub tol: f64,
}

impl Default for AlphaSearch {
    fn default() -> Self {
        AlphaSearch {
            alpha_max: 10.0,
            grid_points: 200,
            tol: 1e-7,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SnrPoint {
    pub j: f64,
    pub mode: DriveMode,
    pub alpha_star: f64,
    pub c_star: f64,
    pub eta_star: f64,
    pub snr: f64,
}

fn concurrence_at(alpha: f64, eta: f64, j: f64, mode: DriveMode) -> Result<f64> {
    steady_concurrence(&ModelParams::new(alpha, eta, j, mode)?)
}

/// `max_α C(α, η)` with the default search; returns `(α*, C*)`.
pub fn max_concurrence_over_alpha(eta: f64, j: f64, mode: DriveMode) -> Result<(f64, f64)> {
    max_concurrence_over_alpha_with(eta, j, mode, &AlphaSearch::default())
}

pub fn max_concurrence_over_alpha_with(
    eta: f64,
    j: f64,
    mode: DriveMode,
    search: &AlphaSearch,
) -> Result<(f64, f64)> {
    if !(eta >= 0.0) {
        return Err(Error::InvalidParams(format!("eta must be >= 0, got {eta}")));
    }
    let n = search.grid_points.max(2);
    let step = search.alpha_max / (n - 1) as f64;
    let mut best_k = 0;
    let mut best_c = f64::NEG_INFINITY;
    for k in 0..n {
        let c = concurrence_at(k as f64 * step, eta, j, mode)?;
        if c > best_c {
            best_c = c;
            best_k = k;
        }
    }
    if best_c <= 0.0 {
        return Ok((0.0, 0.0));
    }
    let lo = best_k.saturating_sub(1) as f64 * step;
    let hi = (best_k + 1).min(n - 1) as f64 * step;
    let (alpha, c) = golden_max(lo, hi, search.tol, |a| concurrence_at(a, eta, j, mode))?;
    if c >= best_c {
        Ok((alpha, c))
    } else {
        Ok((best_k as f64 * step, best_c))
    }
}

fn golden_max(
    mut lo: f64,
    mut hi: f64,
    tol: f64,
    f: impl Fn(f64) -> Result<f64>,
) -> Result<(f64, f64)> {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let mut f1 = f(x1)?;
    let mut f2 = f(x2)?;
    while hi - lo > tol {
        if f1 >= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1)?;
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2)?;
        }
    }
    let mid = 0.5 * (lo + hi);
    Ok((mid, f(mid)?))
}

/// Smallest `η` at which `max_α C(α, η)` falls below [`COLLAPSE_TOL`].
pub fn eta_threshold(j: f64, mode: DriveMode) -> Result<f64> {
    eta_threshold_with(j, mode, &AlphaSearch::default())
}

pub fn eta_threshold_with(j: f64, mode: DriveMode, search: &AlphaSearch) -> Result<f64> {
    let best = |eta: f64| max_concurrence_over_alpha_with(eta, j, mode, search).map(|(_, c)| c);
    if best(0.0)? < COLLAPSE_TOL {
        return Err(Error::NeverEntangled { j });
    }
    let mut lo = 0.0;
    let mut hi = ETA_BRACKET_START;
    while best(hi)? >= COLLAPSE_TOL {
        lo = hi;
        hi *= 2.0;
        if hi > ETA_MAX {
            return Err(Error::NoCollapse {
                j,
                eta_max: ETA_MAX,
            });
        }
    }
    while hi - lo > ETA_RTOL * hi {
        let mid = 0.5 * (lo + hi);
        if best(mid)? < COLLAPSE_TOL {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

pub fn snr_point(j: f64, mode: DriveMode) -> Result<SnrPoint> {
    snr_point_with(j, mode, &AlphaSearch::default())
}

pub fn snr_point_with(j: f64, mode: DriveMode, search: &AlphaSearch) -> Result<SnrPoint> {
    if !(j >= 0.0) {
        return Err(Error::InvalidParams(format!("J must be >= 0, got {j}")));
    }
    let (alpha_star, c_star) = max_concurrence_over_alpha_with(0.0, j, mode, search)?;
    let eta_star = eta_threshold_with(j, mode, search)?;
    Ok(SnrPoint {
        j,
        mode,
        alpha_star,
        c_star,
        eta_star,
        snr: alpha_star / (2.0 * eta_star).sqrt(),
    })
}

/// SNR for each coupling; failures are kept per point. Output order matches
/// `j_values`.
pub fn snr_curve(j_values: &[f64], mode: DriveMode) -> Vec<(f64, Result<SnrPoint>)> {
    snr_curve_with(j_values, mode, &AlphaSearch::default())
}

pub fn snr_curve_with(
    j_values: &[f64],
    mode: DriveMode,
    search: &AlphaSearch,
) -> Vec<(f64, Result<SnrPoint>)> {
    j_values
        .par_iter()
        .map(|&j| (j, snr_point_with(j, mode, search)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strong_noise_kills_entanglement() {
        for mode in DriveMode::ALL {
            let (a, c) = max_concurrence_over_alpha(5.0, 2.0, mode).unwrap();
            assert_eq!((a, c), (0.0, 0.0));
        }
    }

    #[test]
    fn noiseless_optimum_is_a_local_max() {
        let (a, c) = max_concurrence_over_alpha(0.0, 2.0, DriveMode::Common).unwrap();
        assert!(c > 0.0);
        assert!(a > 0.3 && a < 3.0, "alpha* = {a}");
        for da in [-1e-3, 1e-3] {
            let side = concurrence_at(a + da, 0.0, 2.0, DriveMode::Common).unwrap();
            assert!(side <= c + 1e-9);
        }
    }

    #[test]
    fn uncoupled_qubits_never_entangle() {
        assert!(matches!(
            eta_threshold(0.0, DriveMode::Common),
            Err(Error::NeverEntangled { .. })
        ));
    }

    #[test]
    fn rejects_negative_inputs() {
        assert!(max_concurrence_over_alpha(-1.0, 1.0, DriveMode::Common).is_err());
        assert!(snr_point(-1.0, DriveMode::Common).is_err());
    }

    #[test]
    fn golden_section_finds_parabola_peak() {
        let (x, y) = golden_max(0.0, 2.0, 1e-9, |x| Ok(1.0 - (x - 0.7) * (x - 0.7))).unwrap();
        assert!((x - 0.7).abs() < 1e-8);
        assert!((y - 1.0).abs() < 1e-15);
    }
}
