// Copyright 2026 dimerss contributors
// SPDX-License-Identifier: Apache-2.0

//! Numerical steady states of a Liouvillian and a Runge–Kutta integrator
//! used as a dynamical cross-check.

use log::warn;

use crate::density::DensityMatrix;
use crate::error::{Error, Result};
use crate::liouvillian::{devectorize, trace_row, vectorize, Superoperator, SUPER_DIM};
use crate::qops::{eigvals_general, lstsq, singular_values, CMat, C64, ZERO};

/// Residual tolerance relative to the largest singular value of `L`.
pub const RESIDUAL_RTOL: f64 = 1e-9;
/// Singular values below `NULLITY_RTOL · σ_max` count toward the kernel.
pub const NULLITY_RTOL: f64 = 1e-8;
const TRACE_ANNIHILATION_TOL: f64 = 1e-10;
/// Largest tolerated trace drift of the integrator.
pub const TRACE_DRIFT_TOL: f64 = 1e-6;

#[derive(Debug, Clone)]
pub struct SteadyStateReport {
    pub rho: DensityMatrix,
    /// `‖L vec(ρ)‖₂`.
    pub residual: f64,
    /// Numerical dimension of the kernel of `L`.
    pub nullity: usize,
    pub converged: bool,
    /// Smallest eigenvalue of `ρ`; reported, never clipped.
    pub min_eigenvalue: f64,
}

/// Solves `L vec(ρ) = 0` with `tr ρ = 1` as the least-squares problem
/// `[L; t] vec(ρ) = [0; 1]`.
pub fn solve_steady(l: &Superoperator) -> Result<SteadyStateReport> {
    let lm = l.matrix();
    let defect = l.trace_annihilation_defect();
    let sv = singular_values(lm);
    let sigma_max = sv[0];
    if defect > TRACE_ANNIHILATION_TOL * sigma_max.max(1.0) {
        return Err(Error::InvalidParams(format!(
            "Liouvillian does not conserve trace (defect {defect:e})"
        )));
    }
    let nullity = if sigma_max == 0.0 {
        sv.len()
    } else {
        sv.iter().filter(|&&s| s < NULLITY_RTOL * sigma_max).count()
    };
    if nullity > 1 {
        return Err(Error::DegenerateSteadyState { nullity });
    }

    let mut aug = CMat::zeros(SUPER_DIM + 1, SUPER_DIM);
    for i in 0..SUPER_DIM {
        for j in 0..SUPER_DIM {
            aug[(i, j)] = lm[(i, j)];
        }
    }
    for (j, t) in trace_row().iter().enumerate() {
        aug[(SUPER_DIM, j)] = *t;
    }
    let mut rhs = vec![ZERO; SUPER_DIM + 1];
    rhs[SUPER_DIM] = C64::new(1.0, 0.0);
    let v = lstsq(&aug, &rhs)?;

    let rho = devectorize(&v)?;
    let residual = residual_norm(l, &rho);
    let tolerance = RESIDUAL_RTOL * sigma_max.max(f64::MIN_POSITIVE);
    if !(residual <= tolerance) {
        return Err(Error::NoConvergence {
            residual,
            tolerance,
        });
    }
    let min_eigenvalue = rho.min_eigenvalue()?;
    if min_eigenvalue < -crate::density::POSITIVITY_TOL {
        warn!("steady state has negative eigenvalue {min_eigenvalue:e}");
    }
    Ok(SteadyStateReport {
        rho,
        residual,
        nullity: nullity.max(1),
        converged: true,
        min_eigenvalue,
    })
}

/// `‖L vec(ρ)‖₂`.
pub fn residual_norm(l: &Superoperator, rho: &DensityMatrix) -> f64 {
    l.matrix()
        .apply(&vectorize(rho))
        .expect("16-vector")
        .iter()
        .map(|z| z.norm_sqr())
        .sum::<f64>()
        .sqrt()
}

/// Largest eigenvalue modulus of `L`.
pub fn spectral_radius(l: &Superoperator) -> Result<f64> {
    Ok(eigvals_general(l.matrix())?
        .iter()
        .map(|z| z.norm())
        .fold(0.0, f64::max))
}

/// Integrates `d vec(ρ)/dt = L vec(ρ)` up to time `t` with classical RK4.
///
/// The step is shortened so that an integer number of steps lands on `t`.
/// `dt` may not exceed `0.1 / spectral_radius(L)`.
pub fn evolve(rho0: &DensityMatrix, l: &Superoperator, t: f64, dt: f64) -> Result<DensityMatrix> {
    evolve_with(rho0, l, t, dt, |_, _| {})
}

/// As [`evolve`], calling `observe(time, state)` after every step.
pub fn evolve_with(
    rho0: &DensityMatrix,
    l: &Superoperator,
    t: f64,
    dt: f64,
    mut observe: impl FnMut(f64, &CMat),
) -> Result<DensityMatrix> {
    if !(t >= 0.0) || !(dt > 0.0) {
        return Err(Error::InvalidParams(format!(
            "need t >= 0 and dt > 0 (t={t}, dt={dt})"
        )));
    }
    if t == 0.0 {
        return Ok(rho0.clone());
    }
    let radius = spectral_radius(l)?;
    if dt * radius > 0.1 {
        return Err(Error::StepTooLarge(format!(
            "dt = {dt} exceeds 0.1 / spectral radius ({radius:.4})"
        )));
    }
    let steps = (t / dt).ceil().max(1.0) as usize;
    let h = t / steps as f64;
    let m = l.matrix();
    let trace0 = rho0.trace();
    let mut v = vectorize(rho0);
    let axpy = |x: &[C64], k: &[C64], s: f64| -> Vec<C64> {
        x.iter().zip(k).map(|(a, b)| a + b * s).collect()
    };
    for step in 1..=steps {
        let k1 = m.apply(&v)?;
        let k2 = m.apply(&axpy(&v, &k1, h / 2.0))?;
        let k3 = m.apply(&axpy(&v, &k2, h / 2.0))?;
        let k4 = m.apply(&axpy(&v, &k3, h))?;
        for i in 0..SUPER_DIM {
            v[i] += (k1[i] + (k2[i] + k3[i]) * 2.0 + k4[i]) * (h / 6.0);
        }
        let trace: C64 = (0..4).map(|i| v[i * 4 + i]).sum();
        let drift = (trace - trace0).norm();
        if drift > TRACE_DRIFT_TOL {
            return Err(Error::StepTooLarge(format!(
                "trace drifted by {drift:e} at step {step}"
            )));
        }
        observe(step as f64 * h, &crate::liouvillian::devectorize_matrix(&v));
    }
    devectorize(&v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liouvillian::{build_liouvillian, DriveMode, ModelParams};

    #[test]
    fn undriven_dark_state() {
        for mode in DriveMode::ALL {
            let l = build_liouvillian(&ModelParams::new(0.0, 0.0, 0.0, mode).unwrap());
            let rep = solve_steady(&l).unwrap();
            assert!(rep
                .rho
                .matrix()
                .approx_eq(DensityMatrix::basis_state(3).matrix(), 1e-12));
            assert!(rep.residual < 1e-12);
            assert_eq!(rep.nullity, 1);
            assert!(rep.converged);
        }
    }

    #[test]
    fn degenerate_kernel_is_reported() {
        let l = Superoperator::zero();
        assert!(matches!(
            solve_steady(&l),
            Err(Error::DegenerateSteadyState { nullity: 16 })
        ));
    }

    #[test]
    fn rejects_non_trace_preserving_map() {
        let l = Superoperator::new(CMat::identity(16)).unwrap();
        assert!(matches!(solve_steady(&l), Err(Error::InvalidParams(_))));
    }

    #[test]
    fn evolve_zero_time_is_identity() {
        let l = build_liouvillian(&ModelParams::new(1.0, 0.1, 2.0, DriveMode::Common).unwrap());
        let rho = DensityMatrix::basis_state(1);
        assert_eq!(evolve(&rho, &l, 0.0, 0.01).unwrap(), rho);
    }

    #[test]
    fn evolve_rejects_large_step() {
        let l = build_liouvillian(&ModelParams::new(1.0, 0.1, 2.0, DriveMode::Common).unwrap());
        let rho = DensityMatrix::maximally_mixed();
        assert!(matches!(
            evolve(&rho, &l, 1.0, 0.5),
            Err(Error::StepTooLarge(_))
        ));
        assert!(evolve(&rho, &l, -1.0, 0.01).is_err());
    }

    #[test]
    fn evolve_relaxes_to_steady_state_with_conserved_trace() {
        let l = build_liouvillian(&ModelParams::new(1.0, 0.1, 2.0, DriveMode::Common).unwrap());
        let ss = solve_steady(&l).unwrap();
        let mut worst = 0.0f64;
        let out = evolve_with(
            &DensityMatrix::maximally_mixed(),
            &l,
            40.0,
            0.005,
            |_, m| {
                worst = worst.max((m.trace() - C64::new(1.0, 0.0)).norm());
            },
        )
        .unwrap();
        assert!(worst < 1e-8, "trace drift {worst:e}");
        let d = out.distance(&ss.rho);
        assert!(d < 1e-6, "distance {d:e}");
    }
}
