// Copyright 2026 dimerss contributors
// SPDX-License-Identifier: Apache-2.0

//! Steady-state entanglement of two exchange-coupled, decaying two-level
//! systems driven by a noisy field.
//!
//! The model is the master equation
//!
//! ```text
//! dρ/dt = −i[H, ρ] + D[σ_A]ρ + D[σ_B]ρ + N ρ,
//! H = J(σ_A†σ_B + σ_Aσ_B†) + α(σ_A^y + σ_B^y),
//! D[c]ρ = γ(2cρc† − c†cρ − ρc†c),
//! ```
//!
//! where `N` is the averaged effect of white noise of strength η on the
//! drive amplitude, either shared by both sites ([`DriveMode::Common`]) or
//! independent per site ([`DriveMode::Independent`]).
//!
//! Steady states are available in closed form ([`closed_form`]) and from a
//! numeric kernel solve of the Liouvillian ([`steady_state`]); the two are
//! cross-checked, and [`stochastic`] checks the noise model itself by direct
//! simulation of the fluctuating drive.

// `!(x > 0.0)` style guards also reject NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod closed_form;
pub mod density;
pub mod entanglement;
pub mod error;
pub mod liouvillian;
pub mod qops;
pub mod robustness;
pub mod steady_state;
pub mod stochastic;
pub mod sweep;

pub use density::{DensityMatrix, DensityParams};
pub use error::{Error, Result};
pub use liouvillian::{DriveMode, ModelParams, Superoperator};
