// Copyright 2026 dimerss contributors
// SPDX-License-Identifier: Apache-2.0

//! Dense complex matrices and two-qubit operator construction.
//!
//! Single-site operators live in the basis `{|0⟩, |1⟩}` where `|0⟩` is the
//! *excited* level: `σ^z = diag(+1, −1)` and the decay operator is
//! `σ = |1⟩⟨0|`. With this choice the undriven steady state is `|11⟩⟨11|`.
//! Two-site operators use the ordering `{|00⟩, |01⟩, |10⟩, |11⟩}` with site A
//! as the left tensor factor.

mod linalg;

use std::fmt;
use std::ops::{Add, AddAssign, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

pub use linalg::{
    eigh, eigvals_general, eigvals_hermitian, expm, jacobi_eigh_in_place, lstsq, singular_values,
};

pub type C64 = Complex64;

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);
pub const I: C64 = C64::new(0.0, 1.0);

/// Absolute tolerance for operator identities.
pub const OP_TOL: f64 = 1e-10;

/// Dense complex matrix, row-major.
#[derive(Clone, PartialEq)]
pub struct CMat {
    rows: usize,
    cols: usize,
    data: Vec<C64>,
}

impl CMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        CMat {
            rows,
            cols,
            data: vec![ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = ONE;
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<C64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                op: "from_vec",
                left: (rows, cols),
                right: (data.len(), 1),
            });
        }
        Ok(CMat { rows, cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        CMat { rows, cols, data }
    }

    pub fn from_real_diag(diag: &[f64]) -> Self {
        let n = diag.len();
        Self::from_fn(
            n,
            n,
            |i, j| if i == j { C64::new(diag[i], 0.0) } else { ZERO },
        )
    }

    /// Builds from nested row arrays; panics on ragged input.
    pub fn from_rows<const N: usize>(rows: &[[C64; N]]) -> Self {
        Self::from_fn(rows.len(), N, |i, j| rows[i][j])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn as_slice(&self) -> &[C64] {
        &self.data
    }

    pub fn as_mut_slice(&mut self) -> &mut [C64] {
        &mut self.data
    }

    pub fn into_vec(self) -> Vec<C64> {
        self.data
    }

    pub(crate) fn ensure_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn try_add(&self, other: &CMat) -> Result<CMat> {
        self.check_same_shape("add", other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn try_sub(&self, other: &CMat) -> Result<CMat> {
        self.check_same_shape("sub", other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    pub fn matmul(&self, other: &CMat) -> Result<CMat> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                op: "matmul",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut out = CMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == ZERO {
                    continue;
                }
                let brow = &other.data[k * other.cols..(k + 1) * other.cols];
                let orow = &mut out.data[i * other.cols..(i + 1) * other.cols];
                for (o, b) in orow.iter_mut().zip(brow) {
                    *o += a * b;
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[C64]) -> Result<Vec<C64>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                op: "apply",
                left: self.shape(),
                right: (v.len(), 1),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.data[i * self.cols..(i + 1) * self.cols]
                    .iter()
                    .zip(v)
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }

    pub fn scale(&self, s: C64) -> CMat {
        self.map(|z| z * s)
    }

    pub fn scale_re(&self, s: f64) -> CMat {
        self.map(|z| z * s)
    }

    pub fn map(&self, f: impl Fn(C64) -> C64) -> CMat {
        CMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&z| f(z)).collect(),
        }
    }

    pub fn conj(&self) -> CMat {
        self.map(|z| z.conj())
    }

    pub fn transpose(&self) -> CMat {
        CMat::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> CMat {
        CMat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn trace(&self) -> C64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Largest absolute row sum.
    pub fn norm_inf(&self) -> f64 {
        (0..self.rows)
            .map(|i| {
                self.data[i * self.cols..(i + 1) * self.cols]
                    .iter()
                    .map(|z| z.norm())
                    .sum::<f64>()
            })
            .fold(0.0, f64::max)
    }

    /// Largest entrywise modulus.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// `max |a_ij − conj(a_ji)|`.
    pub fn hermiticity_defect(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let n = self.rows;
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in i..n {
                worst = worst.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        worst
    }

    pub fn hermitian_part(&self) -> CMat {
        let adj = self.adjoint();
        self.zip_with(&adj, |a, b| (a + b) * 0.5)
    }

    pub fn approx_eq(&self, other: &CMat, tol: f64) -> bool {
        self.shape() == other.shape()
            && self
                .data
                .iter()
                .zip(&other.data)
                .all(|(a, b)| (a - b).norm() <= tol)
    }

    pub fn distance_frobenius(&self, other: &CMat) -> f64 {
        assert_eq!(self.shape(), other.shape(), "distance_frobenius shape");
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    fn check_same_shape(&self, op: &'static str, other: &CMat) -> Result<()> {
        if self.shape() != other.shape() {
            return Err(Error::DimensionMismatch {
                op,
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(())
    }

    fn zip_with(&self, other: &CMat, f: impl Fn(C64, C64) -> C64) -> CMat {
        CMat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }
}

impl Index<(usize, usize)> for CMat {
    type Output = C64;

    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for CMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for CMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CMat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                let z = self[(i, j)];
                write!(f, "{:+.6}{:+.6}i ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

// The operator impls panic on shape mismatch; use the `try_*` methods when
// the shapes are not known statically.

impl Add for &CMat {
    type Output = CMat;

    fn add(self, rhs: &CMat) -> CMat {
        self.try_add(rhs).expect("CMat addition")
    }
}

impl Sub for &CMat {
    type Output = CMat;

    fn sub(self, rhs: &CMat) -> CMat {
        self.try_sub(rhs).expect("CMat subtraction")
    }
}

impl Mul for &CMat {
    type Output = CMat;

    fn mul(self, rhs: &CMat) -> CMat {
        self.matmul(rhs).expect("CMat multiplication")
    }
}

impl Neg for &CMat {
    type Output = CMat;

    fn neg(self) -> CMat {
        self.map(|z| -z)
    }
}

impl AddAssign<&CMat> for CMat {
    fn add_assign(&mut self, rhs: &CMat) {
        assert_eq!(self.shape(), rhs.shape(), "CMat += shape");
        for (a, b) in self.data.iter_mut().zip(&rhs.data) {
            *a += b;
        }
    }
}

/// Single-qubit operator kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pauli {
    X,
    Y,
    Z,
    /// σ = |1⟩⟨0|
    Lower,
    /// σ† = |0⟩⟨1|
    Raise,
    Identity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Site {
    A,
    B,
}

pub fn pauli(kind: Pauli) -> CMat {
    let z = ZERO;
    let o = ONE;
    match kind {
        Pauli::X => CMat::from_rows(&[[z, o], [o, z]]),
        // i(σ† − σ)
        Pauli::Y => CMat::from_rows(&[[z, I], [-I, z]]),
        Pauli::Z => CMat::from_rows(&[[o, z], [z, -o]]),
        Pauli::Lower => CMat::from_rows(&[[z, z], [o, z]]),
        Pauli::Raise => CMat::from_rows(&[[z, o], [z, z]]),
        Pauli::Identity => CMat::identity(2),
    }
}

/// Kronecker product `a ⊗ b`.
pub fn kron(a: &CMat, b: &CMat) -> CMat {
    let (br, bc) = b.shape();
    CMat::from_fn(a.rows * br, a.cols * bc, |r, c| {
        a[(r / br, c / bc)] * b[(r % br, c % bc)]
    })
}

/// Places a single-site operator on `site` of the two-qubit register.
pub fn embed(op: &CMat, site: Site) -> Result<CMat> {
    if op.shape() != (2, 2) {
        return Err(Error::DimensionMismatch {
            op: "embed",
            left: op.shape(),
            right: (2, 2),
        });
    }
    let id = CMat::identity(2);
    Ok(match site {
        Site::A => kron(op, &id),
        Site::B => kron(&id, op),
    })
}

/// Shorthand for `embed(&pauli(kind), site)`.
pub fn site_op(kind: Pauli, site: Site) -> CMat {
    embed(&pauli(kind), site).expect("pauli operators are 2x2")
}

pub fn commutator(a: &CMat, b: &CMat) -> Result<CMat> {
    a.ensure_square()?;
    b.ensure_square()?;
    a.matmul(b)?.try_sub(&b.matmul(a)?)
}

pub fn adjoint(a: &CMat) -> CMat {
    a.adjoint()
}

/// Swap of sites A and B on the two-qubit register.
pub fn swap_operator() -> CMat {
    let mut s = CMat::zeros(4, 4);
    s[(0, 0)] = ONE;
    s[(1, 2)] = ONE;
    s[(2, 1)] = ONE;
    s[(3, 3)] = ONE;
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pauli_z_is_diag() {
        assert_eq!(pauli(Pauli::Z), CMat::from_real_diag(&[1.0, -1.0]));
    }

    #[test]
    fn lowering_is_nilpotent() {
        let s = pauli(Pauli::Lower);
        assert!((&s * &s).approx_eq(&CMat::zeros(2, 2), 0.0));
    }

    #[test]
    fn number_operator_gives_z() {
        let n = &pauli(Pauli::Raise) * &pauli(Pauli::Lower);
        let z = &n.scale_re(2.0) - &CMat::identity(2);
        assert!(z.approx_eq(&pauli(Pauli::Z), OP_TOL));
    }

    #[test]
    fn lowering_decomposes_into_x_and_y() {
        let s = (&pauli(Pauli::X) + &pauli(Pauli::Y).scale(I)).scale_re(0.5);
        assert!(s.approx_eq(&pauli(Pauli::Lower), OP_TOL));
    }

    #[test]
    fn embed_examples() {
        assert_eq!(
            embed(&CMat::identity(2), Site::A).unwrap(),
            CMat::identity(4)
        );
        assert_eq!(
            site_op(Pauli::Z, Site::A),
            CMat::from_real_diag(&[1.0, 1.0, -1.0, -1.0])
        );
        assert_eq!(
            site_op(Pauli::Z, Site::B),
            CMat::from_real_diag(&[1.0, -1.0, 1.0, -1.0])
        );
    }

    #[test]
    fn embed_rejects_wrong_size() {
        assert!(matches!(
            embed(&CMat::identity(3), Site::A),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn kron_examples() {
        let i2 = CMat::identity(2);
        assert_eq!(kron(&i2, &i2), CMat::identity(4));
        assert_eq!(
            kron(&CMat::from_real_diag(&[1.0, 2.0]), &i2),
            CMat::from_real_diag(&[1.0, 1.0, 2.0, 2.0])
        );
    }

    #[test]
    fn xy_commutator() {
        // σ^y = i(σ† − σ) is minus the textbook matrix, hence the sign
        let c = commutator(&pauli(Pauli::X), &pauli(Pauli::Y)).unwrap();
        assert!(c.approx_eq(&pauli(Pauli::Z).scale(C64::new(0.0, -2.0)), OP_TOL));
    }

    #[test]
    fn shape_errors() {
        let a = CMat::zeros(2, 3);
        let b = CMat::zeros(2, 3);
        assert!(matches!(a.matmul(&b), Err(Error::DimensionMismatch { .. })));
        assert!(matches!(commutator(&a, &a), Err(Error::NotSquare { .. })));
        assert!(CMat::zeros(2, 2).try_add(&a).is_err());
        assert!(CMat::from_vec(2, 2, vec![ZERO; 3]).is_err());
    }

    #[test]
    fn swap_exchanges_sites() {
        let s = swap_operator();
        let za = site_op(Pauli::Z, Site::A);
        let zb = site_op(Pauli::Z, Site::B);
        assert!((&(&s * &za) * &s).approx_eq(&zb, OP_TOL));
    }
}
