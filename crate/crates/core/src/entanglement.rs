// Copyright 2026 dimerss contributors
// SPDX-License-Identifier: Apache-2.0

//! Wootters concurrence and the noise-induced concurrence gain.

use crate::closed_form::closed_form_steady;
use crate::density::{DensityMatrix, POSITIVITY_TOL};
use crate::error::{Error, Result};
use crate::liouvillian::{DriveMode, ModelParams};
use crate::qops::{eigh, eigvals_general, eigvals_hermitian, kron, pauli, CMat, Pauli, C64};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConcurrenceResult {
    /// Square roots of the eigenvalue moduli of `ρρ̃`, descending.
    pub lambdas: [f64; 4],
    pub c: f64,
}

impl ConcurrenceResult {
    fn from_lambdas(mut lambdas: [f64; 4]) -> Self {
        lambdas.sort_by(|a, b| b.total_cmp(a));
        let c = (lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]).max(0.0);
        ConcurrenceResult { lambdas, c }
    }
}

/// `σ^y ⊗ σ^y`.
pub fn yy() -> CMat {
    let y = pauli(Pauli::Y);
    kron(&y, &y)
}

/// `ρ̃ = (σ^y ⊗ σ^y) ρ* (σ^y ⊗ σ^y)`.
pub fn spin_flip(rho: &DensityMatrix) -> CMat {
    let yy = yy();
    &(&yy * &rho.matrix().conj()) * &yy
}

/// Positive square root of a density matrix; eigenvalues down to
/// `−POSITIVITY_TOL` are clamped to zero.
pub fn sqrt_psd(rho: &DensityMatrix) -> Result<CMat> {
    let (w, v) = eigh(&rho.matrix().hermitian_part())?;
    if let Some(&min) = w.last() {
        if min < -POSITIVITY_TOL {
            return Err(Error::InvalidDensityMatrix(format!(
                "minimum eigenvalue {min:e}"
            )));
        }
    }
    let root = CMat::from_real_diag(&w.iter().map(|x| x.max(0.0).sqrt()).collect::<Vec<_>>());
    Ok(&(&v * &root) * &v.adjoint())
}

/// λ's from the Hermitian form `√ρ ρ̃ √ρ`, whose spectrum coincides with
/// that of `ρρ̃` and is real and non-negative.
pub fn lambdas_hermitian(rho: &DensityMatrix) -> Result<[f64; 4]> {
    let s = sqrt_psd(rho)?;
    let m = &(&s * &spin_flip(rho)) * &s;
    let w = eigvals_hermitian(&m.hermitian_part())?;
    Ok([0, 1, 2, 3].map(|k| w[k].max(0.0).sqrt()))
}

/// λ's from the eigenvalues of the non-Hermitian product `ρρ̃`.
pub fn lambdas_general(rho: &DensityMatrix) -> Result<[f64; 4]> {
    let m = rho.matrix() * &spin_flip(rho);
    let w = eigvals_general(&m)?;
    let mut out = [0.0; 4];
    for (o, z) in out.iter_mut().zip(&w) {
        *o = z.norm().sqrt();
    }
    out.sort_by(|a, b| b.total_cmp(a));
    Ok(out)
}

pub fn concurrence(rho: &DensityMatrix) -> Result<ConcurrenceResult> {
    let lambdas = match lambdas_hermitian(rho) {
        Ok(l) => l,
        Err(_) => lambdas_general(rho)?,
    };
    Ok(ConcurrenceResult::from_lambdas(lambdas))
}

/// Concurrence of the closed-form steady state.
pub fn steady_concurrence(p: &ModelParams) -> Result<f64> {
    let sol = closed_form_steady(p)?;
    Ok(concurrence(&sol.assembled)?.c)
}

/// Concurrence gain `max(0, C(α, η) − C(α, 0))` on the closed-form steady
/// states of the given drive mode (γ = 1).
pub fn delta(alpha: f64, eta: f64, j: f64, mode: DriveMode) -> Result<f64> {
    let noisy = steady_concurrence(&ModelParams::new(alpha, eta, j, mode)?)?;
    let clean = steady_concurrence(&ModelParams::new(alpha, 0.0, j, mode)?)?;
    Ok((noisy - clean).max(0.0))
}

/// `(|01⟩ ± |10⟩)/√2` as a density matrix.
pub fn bell_psi(sign: f64) -> DensityMatrix {
    let z = C64::new(0.0, 0.0);
    DensityMatrix::pure(&[z, C64::new(1.0, 0.0), C64::new(sign, 0.0), z])
}

/// `p |Ψ⁻⟩⟨Ψ⁻| + (1 − p) I/4`.
pub fn werner(p: f64) -> DensityMatrix {
    let singlet = bell_psi(-1.0);
    let mixed = DensityMatrix::maximally_mixed();
    DensityMatrix::new_unchecked(&singlet.matrix().scale_re(p) + &mixed.matrix().scale_re(1.0 - p))
}
