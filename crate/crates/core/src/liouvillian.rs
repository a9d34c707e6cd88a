// Copyright 2026 dimerss contributors
// SPDX-License-Identifier: Apache-2.0

//! Hamiltonian, dissipators, drive-noise channels and the assembled
//! Liouvillian as 16×16 matrices on column-stacked `vec(ρ)`.
//!
//! The column-stacking convention is `vec(ρ)[4j + i] = ρ[i, j]`, so that
//! `vec(AρB) = (Bᵀ ⊗ A) vec(ρ)`. All rates are in units of the decay rate
//! with ħ = 1.

use std::fmt;
use std::str::FromStr;

use crate::density::DensityMatrix;
use crate::error::{Error, Result};
use crate::qops::{kron, site_op, CMat, Pauli, Site, C64, I, ZERO};

pub const DIM: usize = 4;
pub const SUPER_DIM: usize = DIM * DIM;

/// How the fluctuating drive reaches the two qubits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DriveMode {
    /// One field, identical fluctuations on both sites.
    Common,
    /// Two uncorrelated fields.
    Independent,
}

impl DriveMode {
    pub const ALL: [DriveMode; 2] = [DriveMode::Common, DriveMode::Independent];

    pub fn as_str(self) -> &'static str {
        match self {
            DriveMode::Common => "common",
            DriveMode::Independent => "independent",
        }
    }
}

impl fmt::Display for DriveMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for DriveMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "common" => Ok(DriveMode::Common),
            "independent" => Ok(DriveMode::Independent),
            other => Err(Error::InvalidParams(format!(
                "unknown drive mode '{other}'"
            ))),
        }
    }
}

/// Physical parameters of the driven dimer pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    /// Coherent drive amplitude α.
    pub alpha: f64,
    /// White-noise strength η, `⟨ξ(t)ξ(t')⟩ = 2η δ(t − t')`.
    pub eta: f64,
    /// Exchange coupling J.
    pub j: f64,
    /// Decay rate γ.
    pub gamma: f64,
    pub mode: DriveMode,
}

impl ModelParams {
    /// Parameters in units of γ (γ = 1).
    pub fn new(alpha: f64, eta: f64, j: f64, mode: DriveMode) -> Result<Self> {
        Self::with_gamma(alpha, eta, j, 1.0, mode)
    }

    pub fn with_gamma(alpha: f64, eta: f64, j: f64, gamma: f64, mode: DriveMode) -> Result<Self> {
        let p = ModelParams {
            alpha,
            eta,
            j,
            gamma,
            mode,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.gamma > 0.0 && self.gamma.is_finite()) {
            return Err(Error::InvalidParams(format!(
                "gamma must be > 0, got {}",
                self.gamma
            )));
        }
        if !(self.eta >= 0.0 && self.eta.is_finite()) {
            return Err(Error::InvalidParams(format!(
                "eta must be >= 0, got {}",
                self.eta
            )));
        }
        if !self.alpha.is_finite() || !self.j.is_finite() {
            return Err(Error::InvalidParams("alpha and J must be finite".into()));
        }
        Ok(())
    }

    /// The same physics expressed in units of γ.
    pub fn normalized(&self) -> ModelParams {
        ModelParams {
            alpha: self.alpha / self.gamma,
            eta: self.eta / self.gamma,
            j: self.j / self.gamma,
            gamma: 1.0,
            mode: self.mode,
        }
    }
}

/// A linear map on vectorized 4×4 operators.
#[derive(Clone, PartialEq)]
pub struct Superoperator(CMat);

impl Superoperator {
    pub fn new(m: CMat) -> Result<Self> {
        if m.shape() != (SUPER_DIM, SUPER_DIM) {
            return Err(Error::DimensionMismatch {
                op: "superoperator",
                left: m.shape(),
                right: (SUPER_DIM, SUPER_DIM),
            });
        }
        Ok(Superoperator(m))
    }

    pub fn zero() -> Self {
        Superoperator(CMat::zeros(SUPER_DIM, SUPER_DIM))
    }

    /// `ρ ↦ AρB`.
    pub fn sandwich(a: &CMat, b: &CMat) -> Self {
        Superoperator(kron(&b.transpose(), a))
    }

    /// `ρ ↦ Aρ`.
    pub fn left(a: &CMat) -> Self {
        Self::sandwich(a, &CMat::identity(DIM))
    }

    /// `ρ ↦ ρB`.
    pub fn right(b: &CMat) -> Self {
        Self::sandwich(&CMat::identity(DIM), b)
    }

    /// `ρ ↦ [A, ρ]`.
    pub fn commutator(a: &CMat) -> Self {
        Superoperator(&Self::left(a).0 - &Self::right(a).0)
    }

    pub fn matrix(&self) -> &CMat {
        &self.0
    }

    pub fn into_matrix(self) -> CMat {
        self.0
    }

    pub fn compose(&self, other: &Superoperator) -> Superoperator {
        Superoperator(&self.0 * &other.0)
    }

    pub fn scale_re(&self, s: f64) -> Superoperator {
        Superoperator(self.0.scale_re(s))
    }

    /// Applies the map to a 4×4 operator.
    pub fn apply(&self, rho: &CMat) -> CMat {
        let v = self.0.apply(&vectorize_matrix(rho)).expect("4x4 operator");
        devectorize_matrix(&v)
    }

    /// `max |Σ_k L[kk, n]|`: how far the map is from preserving trace.
    pub fn trace_annihilation_defect(&self) -> f64 {
        let row = trace_row();
        (0..SUPER_DIM)
            .map(|n| {
                row.iter()
                    .enumerate()
                    .map(|(k, t)| t * self.0[(k, n)])
                    .sum::<C64>()
                    .norm()
            })
            .fold(0.0, f64::max)
    }
}

impl std::ops::Add for &Superoperator {
    type Output = Superoperator;

    fn add(self, rhs: &Superoperator) -> Superoperator {
        Superoperator(&self.0 + &rhs.0)
    }
}

impl fmt::Debug for Superoperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Superoperator({:?})", self.0)
    }
}

/// Row vector `t` with `t · vec(ρ) = tr ρ`.
pub fn trace_row() -> [C64; SUPER_DIM] {
    let mut row = [ZERO; SUPER_DIM];
    for i in 0..DIM {
        row[i * DIM + i] = C64::new(1.0, 0.0);
    }
    row
}

pub fn vectorize_matrix(m: &CMat) -> Vec<C64> {
    let mut v = vec![ZERO; SUPER_DIM];
    for j in 0..DIM {
        for i in 0..DIM {
            v[j * DIM + i] = m[(i, j)];
        }
    }
    v
}

pub fn devectorize_matrix(v: &[C64]) -> CMat {
    assert_eq!(v.len(), SUPER_DIM, "devectorize length");
    CMat::from_fn(DIM, DIM, |i, j| v[j * DIM + i])
}

pub fn vectorize(rho: &DensityMatrix) -> Vec<C64> {
    vectorize_matrix(rho.matrix())
}

/// Reshapes and Hermitizes; fails if the Hermiticity defect exceeds `1e-8`.
pub fn devectorize(v: &[C64]) -> Result<DensityMatrix> {
    if v.len() != SUPER_DIM {
        return Err(Error::DimensionMismatch {
            op: "devectorize",
            left: (v.len(), 1),
            right: (SUPER_DIM, 1),
        });
    }
    let m = devectorize_matrix(v);
    let defect = m.hermiticity_defect();
    if !(defect <= 1e-8) {
        return Err(Error::NotHermitian { defect });
    }
    Ok(DensityMatrix::new_unchecked(m.hermitian_part()))
}

/// `H = J(σ_A†σ_B + σ_Aσ_B†) + α(σ_A^y + σ_B^y)`.
pub fn build_hamiltonian(p: &ModelParams) -> CMat {
    let exchange = &(&site_op(Pauli::Raise, Site::A) * &site_op(Pauli::Lower, Site::B))
        + &(&site_op(Pauli::Lower, Site::A) * &site_op(Pauli::Raise, Site::B));
    &exchange.scale_re(p.j) + &drive_operator().scale_re(p.alpha)
}

/// `σ_A^y + σ_B^y`.
pub fn drive_operator() -> CMat {
    &site_op(Pauli::Y, Site::A) + &site_op(Pauli::Y, Site::B)
}

/// Operators through which the drive noise enters, one per independent
/// noise source.
pub fn noise_channels(mode: DriveMode) -> Vec<CMat> {
    match mode {
        DriveMode::Common => vec![drive_operator()],
        DriveMode::Independent => vec![site_op(Pauli::Y, Site::A), site_op(Pauli::Y, Site::B)],
    }
}

/// `ρ ↦ γ(2cρc† − c†cρ − ρc†c)`.
pub fn dissipator_super(c: &CMat, gamma: f64) -> Superoperator {
    let cd = c.adjoint();
    let cdc = &cd * c;
    let jump = Superoperator::sandwich(c, &cd).scale_re(2.0);
    let anti = &Superoperator::left(&cdc) + &Superoperator::right(&cdc);
    Superoperator(&jump.0 - &anti.0).scale_re(gamma)
}

/// Sum of the local decay dissipators on both sites.
pub fn local_dissipators(gamma: f64) -> Superoperator {
    &dissipator_super(&site_op(Pauli::Lower, Site::A), gamma)
        + &dissipator_super(&site_op(Pauli::Lower, Site::B), gamma)
}

/// Averaged effect of the white-noise drive: `−η Σ_k [V_k, [V_k, ·]]`.
pub fn noise_super(p: &ModelParams) -> Superoperator {
    let mut total = Superoperator::zero();
    if p.eta == 0.0 {
        return total;
    }
    for v in noise_channels(p.mode) {
        let ad = Superoperator::commutator(&v);
        total = &total + &ad.compose(&ad).scale_re(-p.eta);
    }
    total
}

/// `L = −i[H, ·] + D[σ_A] + D[σ_B] + N`.
pub fn build_liouvillian(p: &ModelParams) -> Superoperator {
    let h = build_hamiltonian(p);
    let coherent = Superoperator(Superoperator::commutator(&h).0.scale(-I));
    &(&coherent + &local_dissipators(p.gamma)) + &noise_super(p)
}
