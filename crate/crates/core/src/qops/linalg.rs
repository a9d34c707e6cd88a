// Copyright 2026 dimerss contributors
// SPDX-License-Identifier: Apache-2.0

//! Small dense eigen-, singular-value and least-squares routines.
//!
//! Everything here targets matrices of dimension ≤ 16 and favours simple,
//! well-conditioned algorithms: cyclic Jacobi for Hermitian spectra and
//! singular values, Householder Hessenberg reduction plus Wilkinson-shifted
//! QR for general spectra, Householder QR for least squares.

use super::{CMat, C64, ONE, ZERO};
use crate::error::{Error, Result};

const MAX_JACOBI_SWEEPS: usize = 60;
const HERMITIAN_TOL: f64 = 1e-10;

/// One complex Jacobi rotation parameter set `(c, s, phase)`; see
/// [`jacobi_eigh_in_place`].
#[inline]
fn jacobi_rotation(app: f64, aqq: f64, apq: C64) -> (f64, f64, C64) {
    let g = apq.norm();
    let e = apq / g;
    let theta = (aqq - app) / (2.0 * g);
    let t = if theta.is_infinite() {
        0.0
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    (c, t * c, e)
}

/// Cyclic Jacobi diagonalization of the Hermitian `n×n` row-major matrix `a`.
///
/// On return the diagonal of `a` holds the eigenvalues and column `k` of `v`
/// holds the matching eigenvector. The strict upper triangle of the input is
/// trusted; the lower triangle is taken as its conjugate.
pub fn jacobi_eigh_in_place(n: usize, a: &mut [C64], v: &mut [C64]) -> Result<()> {
    debug_assert_eq!(a.len(), n * n);
    debug_assert_eq!(v.len(), n * n);
    for x in v.iter_mut() {
        *x = ZERO;
    }
    for i in 0..n {
        v[i * n + i] = ONE;
        a[i * n + i] = C64::new(a[i * n + i].re, 0.0);
        for j in 0..i {
            a[i * n + j] = a[j * n + i].conj();
        }
    }
    let scale: f64 = a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    if scale == 0.0 {
        return Ok(());
    }
    let tol = f64::EPSILON * scale;
    for _ in 0..MAX_JACOBI_SWEEPS {
        let mut off = 0.0;
        for p in 0..n {
            for q in p + 1..n {
                off += a[p * n + q].norm_sqr();
            }
        }
        if off.sqrt() <= tol {
            return Ok(());
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq.norm() <= 1e-3 * tol / n as f64 {
                    continue;
                }
                let (c, s, e) = jacobi_rotation(a[p * n + p].re, a[q * n + q].re, apq);
                let ec = e.conj();
                // A <- A G with G = [[c, s], [-s ē, c ē]] on (p, q)
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = akp * c - akq * ec * s;
                    a[k * n + q] = akp * s + akq * ec * c;
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = vkp * c - vkq * ec * s;
                    v[k * n + q] = vkp * s + vkq * ec * c;
                }
                // A <- G† A
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = apk * c - aqk * e * s;
                    a[q * n + k] = apk * s + aqk * e * c;
                }
                a[p * n + q] = ZERO;
                a[q * n + p] = ZERO;
                a[p * n + p].im = 0.0;
                a[q * n + q].im = 0.0;
            }
        }
    }
    Err(Error::EigenNoConvergence {
        iterations: MAX_JACOBI_SWEEPS,
    })
}

fn check_hermitian(a: &CMat) -> Result<usize> {
    let n = a.ensure_square()?;
    let defect = a.hermiticity_defect();
    if !(defect < HERMITIAN_TOL) {
        return Err(Error::NotHermitian { defect });
    }
    Ok(n)
}

/// Eigen-decomposition of a Hermitian matrix, eigenvalues in descending
/// order with eigenvectors as the matching columns.
pub fn eigh(a: &CMat) -> Result<(Vec<f64>, CMat)> {
    let n = check_hermitian(a)?;
    let mut work = a.as_slice().to_vec();
    let mut vecs = vec![ZERO; n * n];
    jacobi_eigh_in_place(n, &mut work, &mut vecs)?;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| work[j * n + j].re.total_cmp(&work[i * n + i].re));
    let values = order.iter().map(|&k| work[k * n + k].re).collect();
    let vectors = CMat::from_fn(n, n, |i, k| vecs[i * n + order[k]]);
    Ok((values, vectors))
}

/// Eigenvalues of a Hermitian matrix in descending order.
pub fn eigvals_hermitian(a: &CMat) -> Result<Vec<f64>> {
    eigh(a).map(|(w, _)| w)
}

/// Householder reduction to upper Hessenberg form, in place.
fn hessenberg(n: usize, h: &mut [C64]) {
    if n < 3 {
        return;
    }
    let mut v = vec![ZERO; n];
    for k in 0..n - 2 {
        let m = n - k - 1;
        let xnorm = (k + 1..n)
            .map(|i| h[i * n + k].norm_sqr())
            .sum::<f64>()
            .sqrt();
        if xnorm == 0.0 {
            continue;
        }
        let x0 = h[(k + 1) * n + k];
        let phase = if x0.norm() > 0.0 { x0 / x0.norm() } else { ONE };
        let alpha = -phase * xnorm;
        for i in 0..m {
            v[i] = h[(k + 1 + i) * n + k];
        }
        v[0] -= alpha;
        let vnorm = v[..m].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if vnorm == 0.0 {
            continue;
        }
        for z in v[..m].iter_mut() {
            *z /= vnorm;
        }
        for j in 0..n {
            let s: C64 = (0..m).map(|i| v[i].conj() * h[(k + 1 + i) * n + j]).sum();
            for i in 0..m {
                h[(k + 1 + i) * n + j] -= v[i] * s * 2.0;
            }
        }
        for i in 0..n {
            let s: C64 = (0..m).map(|j| h[i * n + k + 1 + j] * v[j]).sum();
            for j in 0..m {
                h[i * n + k + 1 + j] -= s * v[j].conj() * 2.0;
            }
        }
    }
}

/// All eigenvalues of a general square matrix (no particular order).
///
/// Hessenberg reduction followed by single-shift complex QR with Wilkinson
/// shifts and deflation from the bottom.
pub fn eigvals_general(a: &CMat) -> Result<Vec<C64>> {
    let n = a.ensure_square()?;
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut h = a.as_slice().to_vec();
    hessenberg(n, &mut h);
    let norm = h
        .iter()
        .map(|z| z.norm())
        .fold(0.0, f64::max)
        .max(f64::MIN_POSITIVE);
    let mut eig = vec![ZERO; n];
    let mut rot: Vec<(C64, C64)> = vec![(ZERO, ZERO); n];
    let max_iter = 60 * n;
    let mut total = 0usize;
    let mut hi = n - 1;
    let mut since_deflation = 0usize;
    loop {
        if hi == 0 {
            eig[0] = h[0];
            break;
        }
        let mut l = hi;
        while l > 0 {
            let sub = h[l * n + l - 1].norm();
            let diag = h[(l - 1) * n + l - 1].norm() + h[l * n + l].norm();
            let reference = if diag > 0.0 { diag } else { norm };
            if sub <= f64::EPSILON * reference {
                h[l * n + l - 1] = ZERO;
                break;
            }
            l -= 1;
        }
        if l == hi {
            eig[hi] = h[hi * n + hi];
            hi -= 1;
            since_deflation = 0;
            continue;
        }
        total += 1;
        since_deflation += 1;
        if total > max_iter {
            return Err(Error::EigenNoConvergence { iterations: total });
        }
        let shift = if since_deflation % 11 == 10 {
            // exceptional shift to break cycles
            h[hi * n + hi] + h[hi * n + hi - 1].norm() * C64::new(0.75, 0.5)
        } else {
            let a11 = h[(hi - 1) * n + hi - 1];
            let a12 = h[(hi - 1) * n + hi];
            let a21 = h[hi * n + hi - 1];
            let a22 = h[hi * n + hi];
            let half = (a11 - a22) * 0.5;
            let disc = (half * half + a12 * a21).sqrt();
            let mid = (a11 + a22) * 0.5;
            let m1 = mid + disc;
            let m2 = mid - disc;
            if (m1 - a22).norm() < (m2 - a22).norm() {
                m1
            } else {
                m2
            }
        };
        for k in l..=hi {
            h[k * n + k] -= shift;
        }
        // QR by Givens rotations on the active block
        for k in l..hi {
            let x = h[k * n + k];
            let y = h[(k + 1) * n + k];
            let r = (x.norm_sqr() + y.norm_sqr()).sqrt();
            let (c, s) = if r == 0.0 {
                (ONE, ZERO)
            } else {
                (x / r, y / r)
            };
            rot[k] = (c, s);
            for j in k..=hi {
                let hk = h[k * n + j];
                let hk1 = h[(k + 1) * n + j];
                h[k * n + j] = c.conj() * hk + s.conj() * hk1;
                h[(k + 1) * n + j] = -s * hk + c * hk1;
            }
        }
        // RQ
        for k in l..hi {
            let (c, s) = rot[k];
            for i in l..=(k + 1).min(hi) {
                let hik = h[i * n + k];
                let hik1 = h[i * n + k + 1];
                h[i * n + k] = hik * c + hik1 * s;
                h[i * n + k + 1] = -hik * s.conj() + hik1 * c.conj();
            }
        }
        for k in l..=hi {
            h[k * n + k] += shift;
        }
    }
    Ok(eig)
}

/// Singular values in descending order (one-sided Jacobi).
pub fn singular_values(a: &CMat) -> Vec<f64> {
    let (m, n) = a.shape();
    // work on columns stored contiguously
    let mut cols: Vec<Vec<C64>> = (0..n)
        .map(|j| (0..m).map(|i| a[(i, j)]).collect())
        .collect();
    for _ in 0..MAX_JACOBI_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let alpha: f64 = cols[p].iter().map(|z| z.norm_sqr()).sum();
                let beta: f64 = cols[q].iter().map(|z| z.norm_sqr()).sum();
                let gamma: C64 = cols[p]
                    .iter()
                    .zip(&cols[q])
                    .map(|(x, y)| x.conj() * y)
                    .sum();
                if gamma.norm() <= f64::EPSILON * (alpha * beta).sqrt() || gamma.norm() == 0.0 {
                    continue;
                }
                rotated = true;
                let (c, s, e) = jacobi_rotation(alpha, beta, gamma);
                let ec = e.conj();
                let (left, right) = cols.split_at_mut(q);
                for (up, uq) in left[p].iter_mut().zip(right[0].iter_mut()) {
                    let x = *up;
                    let y = *uq;
                    *up = x * c - y * ec * s;
                    *uq = x * s + y * ec * c;
                }
            }
        }
        if !rotated {
            break;
        }
    }
    let mut sv: Vec<f64> = cols
        .iter()
        .map(|c| c.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt())
        .collect();
    sv.sort_by(|x, y| y.total_cmp(x));
    sv
}

/// Least-squares solution of `a x ≈ b` for tall or square `a` of full column
/// rank, via Householder QR.
pub fn lstsq(a: &CMat, b: &[C64]) -> Result<Vec<C64>> {
    let (m, n) = a.shape();
    if b.len() != m || m < n {
        return Err(Error::DimensionMismatch {
            op: "lstsq",
            left: (m, n),
            right: (b.len(), 1),
        });
    }
    let mut r = a.as_slice().to_vec();
    let mut rhs = b.to_vec();
    let mut v = vec![ZERO; m];
    for k in 0..n {
        let len = m - k;
        let xnorm = (k..m).map(|i| r[i * n + k].norm_sqr()).sum::<f64>().sqrt();
        if xnorm == 0.0 {
            return Err(Error::RankDeficient);
        }
        let x0 = r[k * n + k];
        let phase = if x0.norm() > 0.0 { x0 / x0.norm() } else { ONE };
        let alpha = -phase * xnorm;
        for i in 0..len {
            v[i] = r[(k + i) * n + k];
        }
        v[0] -= alpha;
        let vnorm = v[..len].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for z in v[..len].iter_mut() {
            *z /= vnorm;
        }
        for j in k..n {
            let s: C64 = (0..len).map(|i| v[i].conj() * r[(k + i) * n + j]).sum();
            for i in 0..len {
                r[(k + i) * n + j] -= v[i] * s * 2.0;
            }
        }
        let s: C64 = (0..len).map(|i| v[i].conj() * rhs[k + i]).sum();
        for i in 0..len {
            rhs[k + i] -= v[i] * s * 2.0;
        }
    }
    let rmax = (0..n).map(|k| r[k * n + k].norm()).fold(0.0, f64::max);
    let mut x = vec![ZERO; n];
    for k in (0..n).rev() {
        let d = r[k * n + k];
        if d.norm() <= f64::EPSILON * rmax {
            return Err(Error::RankDeficient);
        }
        let s: C64 = (k + 1..n).map(|j| r[k * n + j] * x[j]).sum();
        x[k] = (rhs[k] - s) / d;
    }
    Ok(x)
}

/// Matrix exponential by scaling and squaring of a Taylor series.
pub fn expm(a: &CMat) -> Result<CMat> {
    let n = a.ensure_square()?;
    let norm = a.norm_inf();
    let squarings = if norm > 0.25 {
        (norm / 0.25).log2().ceil() as u32
    } else {
        0
    };
    let scaled = a.scale_re(0.5f64.powi(squarings as i32));
    let mut sum = CMat::identity(n);
    let mut term = CMat::identity(n);
    for k in 1..=40 {
        term = (&term * &scaled).scale_re(1.0 / k as f64);
        sum += &term;
        if term.max_abs() <= f64::EPSILON * 1e-3 {
            break;
        }
    }
    for _ in 0..squarings {
        sum = &sum * &sum;
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_cmat(rng: &mut impl Rng, r: usize, c: usize) -> CMat {
        CMat::from_fn(r, c, |_, _| {
            C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
        })
    }

    fn inverse(a: &CMat) -> CMat {
        let n = a.rows();
        let mut cols = Vec::new();
        for j in 0..n {
            let e: Vec<C64> = (0..n).map(|i| if i == j { ONE } else { ZERO }).collect();
            cols.push(lstsq(a, &e).unwrap());
        }
        CMat::from_fn(n, n, |i, j| cols[j][i])
    }

    #[test]
    fn hermitian_diag_example() {
        let w = eigvals_hermitian(&CMat::from_real_diag(&[3.0, 1.0, 2.0, 0.0])).unwrap();
        assert_eq!(w, vec![3.0, 2.0, 1.0, 0.0]);
    }

    #[test]
    fn hermitian_rejects_non_hermitian() {
        let mut a = CMat::identity(3);
        a[(0, 1)] = C64::new(1.0, 0.0);
        assert!(matches!(
            eigvals_hermitian(&a),
            Err(Error::NotHermitian { .. })
        ));
        assert!(matches!(
            eigvals_hermitian(&CMat::zeros(2, 3)),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn eigh_reconstructs() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in [2, 4, 16] {
            let g = random_cmat(&mut rng, n, n);
            let h = (&g + &g.adjoint()).scale_re(0.5);
            let (w, v) = eigh(&h).unwrap();
            let d = CMat::from_real_diag(&w);
            let back = &(&v * &d) * &v.adjoint();
            assert!(back.approx_eq(&h, 1e-12), "n={n}");
            assert!((&v.adjoint() * &v).approx_eq(&CMat::identity(n), 1e-12));
            assert!(w.windows(2).all(|p| p[0] >= p[1]));
        }
    }

    #[test]
    fn general_recovers_constructed_spectrum() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let spectrum: Vec<C64> = (0..4)
                .map(|_| C64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)))
                .collect();
            let v = random_cmat(&mut rng, 4, 4);
            let d = CMat::from_fn(4, 4, |i, j| if i == j { spectrum[i] } else { ZERO });
            let a = &(&v * &d) * &inverse(&v);
            let mut got = eigvals_general(&a).unwrap();
            for want in &spectrum {
                let (idx, err) = got
                    .iter()
                    .enumerate()
                    .map(|(i, z)| (i, (z - want).norm()))
                    .min_by(|x, y| x.1.total_cmp(&y.1))
                    .unwrap();
                assert!(err < 1e-8, "eigenvalue {want} off by {err}");
                got.remove(idx);
            }
        }
    }

    #[test]
    fn general_handles_16x16_and_defective_cases() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let a = random_cmat(&mut rng, 16, 16);
        let w = eigvals_general(&a).unwrap();
        let sum: C64 = w.iter().sum();
        assert!((sum - a.trace()).norm() < 1e-9);
        // nilpotent Jordan block
        let mut j = CMat::zeros(3, 3);
        j[(0, 1)] = ONE;
        j[(1, 2)] = ONE;
        let w = eigvals_general(&j).unwrap();
        assert!(w.iter().all(|z| z.norm() < 1e-12));
    }

    #[test]
    fn singular_values_match_hermitian_route() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let a = random_cmat(&mut rng, 6, 4);
        let sv = singular_values(&a);
        let gram = &a.adjoint() * &a;
        let w = eigvals_hermitian(&gram.hermitian_part()).unwrap();
        for (s, l) in sv.iter().zip(&w) {
            assert!((s * s - l).abs() < 1e-12);
        }
    }

    #[test]
    fn singular_values_detect_rank() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let u = random_cmat(&mut rng, 5, 2);
        let v = random_cmat(&mut rng, 2, 5);
        let sv = singular_values(&(&u * &v));
        assert!(sv[1] > 1e-3);
        assert!(sv[2] < 1e-14 * sv[0]);
    }

    #[test]
    fn lstsq_solves_consistent_system() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let a = random_cmat(&mut rng, 7, 4);
        let x: Vec<C64> = (0..4).map(|k| C64::new(k as f64, -1.0)).collect();
        let b = a.apply(&x).unwrap();
        let got = lstsq(&a, &b).unwrap();
        for (g, w) in got.iter().zip(&x) {
            assert!((g - w).norm() < 1e-12);
        }
        assert!(matches!(
            lstsq(&CMat::zeros(3, 2), &[ZERO; 3]),
            Err(Error::RankDeficient)
        ));
    }

    #[test]
    fn expm_of_diagonal_and_rotation() {
        let d = CMat::from_real_diag(&[0.0, 1.0, -30.0]);
        let e = expm(&d).unwrap();
        assert!((e[(1, 1)].re - 1f64.exp()).abs() < 1e-13);
        assert!((e[(2, 2)].re - (-30f64).exp()).abs() < 1e-20);
        // exp(-i θ X) = cos θ I − i sin θ X
        let theta = 2.3;
        let x = super::super::pauli(super::super::Pauli::X);
        let u = expm(&x.scale(C64::new(0.0, -theta))).unwrap();
        assert!((u[(0, 0)] - C64::new(theta.cos(), 0.0)).norm() < 1e-13);
        assert!((u[(0, 1)] - C64::new(0.0, -theta.sin())).norm() < 1e-13);
    }
}
