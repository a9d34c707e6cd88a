// Copyright 2026 dimerss contributors
// SPDX-License-Identifier: Apache-2.0

//! Two-qubit density matrices and their 15-parameter real coordinates.

use std::fmt;

use crate::error::{Error, Result};
use crate::qops::{eigvals_hermitian, CMat, C64};

pub const HERMITIAN_TOL: f64 = 1e-9;
pub const TRACE_TOL: f64 = 1e-9;
pub const POSITIVITY_TOL: f64 = 1e-8;

/// Real coordinates of a 4×4 density matrix:
///
/// ```text
/// ⎡ a        b1+ib2   c1+ic2   d1+id2 ⎤
/// ⎢ b1−ib2   e        f1+if2   g1+ig2 ⎥
/// ⎢ c1−ic2   f1−if2   h        i1+ii2 ⎥
/// ⎣ d1−id2   g1−ig2   i1−ii2   1−a−e−h⎦
/// ```
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct DensityParams {
    pub a: f64,
    pub b1: f64,
    pub b2: f64,
    pub c1: f64,
    pub c2: f64,
    pub d1: f64,
    pub d2: f64,
    pub e: f64,
    pub f1: f64,
    pub f2: f64,
    pub g1: f64,
    pub g2: f64,
    pub h: f64,
    pub i1: f64,
    pub i2: f64,
}

impl DensityParams {
    pub const NAMES: [&'static str; 15] = [
        "a", "b1", "b2", "c1", "c2", "d1", "d2", "e", "f1", "f2", "g1", "g2", "h", "i1", "i2",
    ];

    pub fn to_array(&self) -> [f64; 15] {
        [
            self.a, self.b1, self.b2, self.c1, self.c2, self.d1, self.d2, self.e, self.f1, self.f2,
            self.g1, self.g2, self.h, self.i1, self.i2,
        ]
    }

    pub fn from_array(v: [f64; 15]) -> Self {
        DensityParams {
            a: v[0],
            b1: v[1],
            b2: v[2],
            c1: v[3],
            c2: v[4],
            d1: v[5],
            d2: v[6],
            e: v[7],
            f1: v[8],
            f2: v[9],
            g1: v[10],
            g2: v[11],
            h: v[12],
            i1: v[13],
            i2: v[14],
        }
    }

    /// Places the parameters in the 4×4 layout; the last population is
    /// `1 − a − e − h`.
    pub fn to_matrix(&self) -> CMat {
        let c = |re: f64, im: f64| C64::new(re, im);
        let upper = [
            [
                c(self.a, 0.0),
                c(self.b1, self.b2),
                c(self.c1, self.c2),
                c(self.d1, self.d2),
            ],
            [
                c(0.0, 0.0),
                c(self.e, 0.0),
                c(self.f1, self.f2),
                c(self.g1, self.g2),
            ],
            [
                c(0.0, 0.0),
                c(0.0, 0.0),
                c(self.h, 0.0),
                c(self.i1, self.i2),
            ],
            [
                c(0.0, 0.0),
                c(0.0, 0.0),
                c(0.0, 0.0),
                c(1.0 - self.a - self.e - self.h, 0.0),
            ],
        ];
        CMat::from_fn(4, 4, |i, j| {
            if i <= j {
                upper[i][j]
            } else {
                upper[j][i].conj()
            }
        })
    }

    /// Largest violation of the swap-symmetry identities
    /// `c = b, f1 = d1, f2 = 0, h = e, i = g`.
    pub fn swap_symmetry_defect(&self) -> f64 {
        [
            self.c1 - self.b1,
            self.c2 - self.b2,
            self.f1 - self.d1,
            self.f2,
            self.h - self.e,
            self.i1 - self.g1,
            self.i2 - self.g2,
        ]
        .iter()
        .fold(0.0f64, |m, x| m.max(x.abs()))
    }
}

/// A validated 4×4 density matrix over `{|00⟩, |01⟩, |10⟩, |11⟩}`.
#[derive(Clone, PartialEq)]
pub struct DensityMatrix(CMat);

impl DensityMatrix {
    /// Validates Hermiticity, unit trace and positivity.
    pub fn new(m: CMat) -> Result<Self> {
        Self::check(&m)?;
        Ok(DensityMatrix(m))
    }

    /// Wraps without checking. Intended for intermediate states of
    /// integrators whose invariants are monitored separately.
    pub fn new_unchecked(m: CMat) -> Self {
        debug_assert_eq!(m.shape(), (4, 4));
        DensityMatrix(m)
    }

    pub fn check(m: &CMat) -> Result<()> {
        if m.shape() != (4, 4) {
            return Err(Error::InvalidDensityMatrix(format!(
                "shape {:?}",
                m.shape()
            )));
        }
        let defect = m.hermiticity_defect();
        if !(defect < HERMITIAN_TOL) {
            return Err(Error::InvalidDensityMatrix(format!(
                "Hermiticity defect {defect:e}"
            )));
        }
        let tr = m.trace();
        if !((tr.re - 1.0).abs() < TRACE_TOL && tr.im.abs() < TRACE_TOL) {
            return Err(Error::InvalidDensityMatrix(format!("trace {tr}")));
        }
        let min = min_eigenvalue(&m.hermitian_part())?;
        if min < -POSITIVITY_TOL {
            return Err(Error::InvalidDensityMatrix(format!(
                "minimum eigenvalue {min:e}"
            )));
        }
        Ok(())
    }

    pub fn from_params(p: &DensityParams) -> Result<Self> {
        Self::new(p.to_matrix())
    }

    /// Pure state `|ψ⟩⟨ψ|`; `psi` is normalized here.
    pub fn pure(psi: &[C64; 4]) -> Self {
        let norm: f64 = psi.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        let v: Vec<C64> = psi.iter().map(|z| z / norm).collect();
        DensityMatrix(CMat::from_fn(4, 4, |i, j| v[i] * v[j].conj()))
    }

    pub fn maximally_mixed() -> Self {
        DensityMatrix(CMat::identity(4).scale_re(0.25))
    }

    /// Computational basis projector `|k⟩⟨k|`.
    pub fn basis_state(k: usize) -> Self {
        let mut m = CMat::zeros(4, 4);
        m[(k, k)] = C64::new(1.0, 0.0);
        DensityMatrix(m)
    }

    pub fn matrix(&self) -> &CMat {
        &self.0
    }

    pub fn into_matrix(self) -> CMat {
        self.0
    }

    pub fn params(&self) -> DensityParams {
        let m = &self.0;
        DensityParams {
            a: m[(0, 0)].re,
            b1: m[(0, 1)].re,
            b2: m[(0, 1)].im,
            c1: m[(0, 2)].re,
            c2: m[(0, 2)].im,
            d1: m[(0, 3)].re,
            d2: m[(0, 3)].im,
            e: m[(1, 1)].re,
            f1: m[(1, 2)].re,
            f2: m[(1, 2)].im,
            g1: m[(1, 3)].re,
            g2: m[(1, 3)].im,
            h: m[(2, 2)].re,
            i1: m[(2, 3)].re,
            i2: m[(2, 3)].im,
        }
    }

    pub fn populations(&self) -> [f64; 4] {
        [0, 1, 2, 3].map(|k| self.0[(k, k)].re)
    }

    pub fn trace(&self) -> C64 {
        self.0.trace()
    }

    /// `tr ρ²`.
    pub fn purity(&self) -> f64 {
        self.0.as_slice().iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn min_eigenvalue(&self) -> Result<f64> {
        min_eigenvalue(&self.0.hermitian_part())
    }

    pub fn distance(&self, other: &DensityMatrix) -> f64 {
        self.0.distance_frobenius(&other.0)
    }
}

fn min_eigenvalue(m: &CMat) -> Result<f64> {
    Ok(eigvals_hermitian(m)?.last().copied().unwrap_or(f64::NAN))
}

impl fmt::Debug for DensityMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DensityMatrix({:?})", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn params_round_trip() {
        let p = DensityParams {
            a: 0.1,
            b1: 0.01,
            b2: -0.02,
            c1: 0.03,
            c2: 0.0,
            d1: 0.04,
            d2: 0.05,
            e: 0.2,
            f1: 0.01,
            f2: 0.0,
            g1: 0.02,
            g2: -0.01,
            h: 0.3,
            i1: 0.0,
            i2: 0.01,
        };
        let rho = DensityMatrix::from_params(&p).unwrap();
        assert_eq!(rho.params(), p);
        assert!((rho.populations()[3] - 0.4).abs() < 1e-15);
        assert_eq!(DensityParams::from_array(p.to_array()), p);
    }

    #[test]
    fn rejects_unphysical() {
        let bad_trace = CMat::identity(4);
        assert!(DensityMatrix::new(bad_trace).is_err());
        let negative = CMat::from_real_diag(&[1.5, -0.5, 0.0, 0.0]);
        assert!(DensityMatrix::new(negative).is_err());
        let mut non_herm = CMat::identity(4).scale_re(0.25);
        non_herm[(0, 1)] = C64::new(0.1, 0.0);
        assert!(DensityMatrix::new(non_herm).is_err());
        assert!(DensityMatrix::new(CMat::identity(2).scale_re(0.5)).is_err());
    }

    #[test]
    fn simple_states() {
        let mixed = DensityMatrix::maximally_mixed();
        assert!((mixed.purity() - 0.25).abs() < 1e-15);
        let psi = [
            C64::new(0.0, 0.0),
            C64::new(1.0, 0.0),
            C64::new(1.0, 0.0),
            C64::new(0.0, 0.0),
        ];
        let bell = DensityMatrix::pure(&psi);
        assert!((bell.purity() - 1.0).abs() < 1e-15);
        assert!(DensityMatrix::check(bell.matrix()).is_ok());
        assert_eq!(
            DensityMatrix::basis_state(3).populations(),
            [0.0, 0.0, 0.0, 1.0]
        );
    }
}
