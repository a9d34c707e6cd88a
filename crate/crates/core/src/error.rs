// Copyright 2026 dimerss contributors
// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not Hermitian (defect {defect:e})")]
    NotHermitian { defect: f64 },

    #[error("eigenvalue iteration did not converge after {iterations} iterations")]
    EigenNoConvergence { iterations: usize },

    #[error("least-squares system is rank deficient")]
    RankDeficient,

    #[error("invalid density matrix: {0}")]
    InvalidDensityMatrix(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("steady state is not unique (kernel dimension {nullity})")]
    DegenerateSteadyState { nullity: usize },

    #[error("steady-state residual {residual:e} exceeds tolerance {tolerance:e}")]
    NoConvergence { residual: f64, tolerance: f64 },

    #[error("time step too large: {0}")]
    StepTooLarge(String),

    #[error("closed-form denominator is numerically zero (D = {denom:e}, scale {scale:e})")]
    SingularDenominator { denom: f64, scale: f64 },

    #[error("no entanglement at zero noise for J = {j}")]
    NeverEntangled { j: f64 },

    #[error("concurrence did not collapse up to eta = {eta_max} for J = {j}")]
    NoCollapse { j: f64, eta_max: f64 },
}
