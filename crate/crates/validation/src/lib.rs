// Copyright 2026 dimerss contributors
// SPDX-License-Identifier: Apache-2.0

//! Brute-force reference computations, written without any of the
//! `dimerss-core` machinery, that the acceptance suite compares against.
//!
//! Everything here works on plain `[[C64; 4]; 4]` arrays in the basis
//! `{|00⟩, |01⟩, |10⟩, |11⟩}` with site A on the left. `|0⟩` is the excited
//! level, the lowering operator is `|1⟩⟨0|` and `σ^y = i(σ† − σ)`.

#![allow(clippy::needless_range_loop)]

use num_complex::Complex64 as C64;

pub type M4 = [[C64; 4]; 4];

const Z: C64 = C64::new(0.0, 0.0);
const ONE: C64 = C64::new(1.0, 0.0);
const I: C64 = C64::new(0.0, 1.0);

pub fn zeros() -> M4 {
    [[Z; 4]; 4]
}

pub fn identity() -> M4 {
    let mut m = zeros();
    for (k, row) in m.iter_mut().enumerate() {
        row[k] = ONE;
    }
    m
}

pub fn mul(a: &M4, b: &M4) -> M4 {
    let mut c = zeros();
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                c[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    c
}

pub fn add(a: &M4, b: &M4) -> M4 {
    let mut c = *a;
    for i in 0..4 {
        for j in 0..4 {
            c[i][j] += b[i][j];
        }
    }
    c
}

pub fn scale(a: &M4, s: C64) -> M4 {
    let mut c = *a;
    for row in c.iter_mut() {
        for z in row.iter_mut() {
            *z *= s;
        }
    }
    c
}

pub fn dagger(a: &M4) -> M4 {
    let mut c = zeros();
    for i in 0..4 {
        for j in 0..4 {
            c[i][j] = a[j][i].conj();
        }
    }
    c
}

pub fn trace(a: &M4) -> C64 {
    (0..4).map(|k| a[k][k]).sum()
}

pub fn frobenius(a: &M4, b: &M4) -> f64 {
    let mut s = 0.0;
    for i in 0..4 {
        for j in 0..4 {
            s += (a[i][j] - b[i][j]).norm_sqr();
        }
    }
    s.sqrt()
}

fn single_site(op: [[C64; 2]; 2], site_a: bool) -> M4 {
    let mut m = zeros();
    for a in 0..2 {
        for b in 0..2 {
            for c in 0..2 {
                for d in 0..2 {
                    // ⟨ab| O |cd⟩ with O acting on one factor only
                    let v = if site_a {
                        if b == d {
                            op[a][c]
                        } else {
                            Z
                        }
                    } else if a == c {
                        op[b][d]
                    } else {
                        Z
                    };
                    m[2 * a + b][2 * c + d] = v;
                }
            }
        }
    }
    m
}

/// Lowering operator `|1⟩⟨0|` on site A or B.
pub fn lower(site_a: bool) -> M4 {
    single_site([[Z, Z], [ONE, Z]], site_a)
}

/// `i(σ† − σ)` on site A or B.
pub fn sigma_y(site_a: bool) -> M4 {
    single_site([[Z, I], [-I, Z]], site_a)
}

/// Noise coupling: common drive shares one channel, independent drive has one per site.
pub fn noise_ops(common: bool) -> Vec<M4> {
    if common {
        vec![add(&sigma_y(true), &sigma_y(false))]
    } else {
        vec![sigma_y(true), sigma_y(false)]
    }
}

pub fn hamiltonian(alpha: f64, j: f64) -> M4 {
    let (la, lb) = (lower(true), lower(false));
    let hop = add(&mul(&dagger(&la), &lb), &mul(&la, &dagger(&lb)));
    let drive = add(&sigma_y(true), &sigma_y(false));
    add(&scale(&hop, j.into()), &scale(&drive, alpha.into()))
}

fn comm(a: &M4, b: &M4) -> M4 {
    add(&mul(a, b), &scale(&mul(b, a), -ONE))
}

/// Right-hand side of the master equation applied to `rho`.
pub fn master_rhs(rho: &M4, alpha: f64, eta: f64, j: f64, gamma: f64, common: bool) -> M4 {
    let h = hamiltonian(alpha, j);
    let mut out = scale(&comm(&h, rho), -I);
    for site_a in [true, false] {
        let c = lower(site_a);
        let cd = dagger(&c);
        let cdc = mul(&cd, &c);
        let jump = scale(&mul(&mul(&c, rho), &cd), (2.0 * gamma).into());
        let anti = add(&mul(&cdc, rho), &mul(rho, &cdc));
        out = add(&out, &add(&jump, &scale(&anti, (-gamma).into())));
    }
    for v in noise_ops(common) {
        out = add(&out, &scale(&comm(&v, &comm(&v, rho)), (-eta).into()));
    }
    out
}

/// Steady state from Gaussian elimination on the 16 linear equations, with
/// the `(0,0)` equation replaced by the trace condition.
pub fn steady_state(alpha: f64, eta: f64, j: f64, gamma: f64, common: bool) -> M4 {
    let mut a = [[Z; 17]; 16];
    for col in 0..16 {
        let mut e = zeros();
        e[col / 4][col % 4] = ONE;
        let image = master_rhs(&e, alpha, eta, j, gamma, common);
        for row in 0..16 {
            a[row][col] = image[row / 4][row % 4];
        }
    }
    for col in 0..16 {
        a[0][col] = if col / 4 == col % 4 { ONE } else { Z };
    }
    a[0][16] = ONE;
    let x = gauss(a);
    let mut rho = zeros();
    for k in 0..16 {
        rho[k / 4][k % 4] = x[k];
    }
    rho
}

fn gauss(mut a: [[C64; 17]; 16]) -> [C64; 16] {
    for k in 0..16 {
        let p = (k..16)
            .max_by(|&x, &y| a[x][k].norm().total_cmp(&a[y][k].norm()))
            .unwrap();
        a.swap(k, p);
        let pivot = a[k][k];
        for r in k + 1..16 {
            let f = a[r][k] / pivot;
            if f != Z {
                for c in k..17 {
                    let t = a[k][c];
                    a[r][c] -= f * t;
                }
            }
        }
    }
    let mut x = [Z; 16];
    for k in (0..16).rev() {
        let mut s = a[k][16];
        for c in k + 1..16 {
            s -= a[k][c] * x[c];
        }
        x[k] = s / a[k][k];
    }
    x
}

/// Hermitian eigendecomposition by cyclic Jacobi rotations; returns the
/// eigenvalues and a unitary whose columns are the eigenvectors.
pub fn jacobi_eigh(h: &M4) -> ([f64; 4], M4) {
    let mut a = *h;
    let mut v = identity();
    for _ in 0..100 {
        let mut off = 0.0;
        for p in 0..4 {
            for q in p + 1..4 {
                off += a[p][q].norm_sqr();
            }
        }
        if off < 1e-32 {
            break;
        }
        for p in 0..4 {
            for q in p + 1..4 {
                let apq = a[p][q];
                if apq.norm() < 1e-300 {
                    continue;
                }
                let phase = apq / apq.norm();
                let theta = 0.5 * (2.0 * apq.norm()).atan2(a[q][q].re - a[p][p].re);
                let (s, c) = theta.sin_cos();
                // G = [[c, s·phase], [−s·conj(phase), c]] on rows/cols p, q
                let gpp = C64::new(c, 0.0);
                let gpq = phase * s;
                let gqp = -phase.conj() * s;
                let gqq = C64::new(c, 0.0);
                for k in 0..4 {
                    let (x, y) = (a[k][p], a[k][q]);
                    a[k][p] = x * gpp + y * gqp;
                    a[k][q] = x * gpq + y * gqq;
                    let (x, y) = (v[k][p], v[k][q]);
                    v[k][p] = x * gpp + y * gqp;
                    v[k][q] = x * gpq + y * gqq;
                }
                for k in 0..4 {
                    let (x, y) = (a[p][k], a[q][k]);
                    a[p][k] = gpp.conj() * x + gqp.conj() * y;
                    a[q][k] = gpq.conj() * x + gqq.conj() * y;
                }
            }
        }
    }
    ([a[0][0].re, a[1][1].re, a[2][2].re, a[3][3].re], v)
}

/// Singular values by one-sided Jacobi rotations, descending.
pub fn singular_values(m: &M4) -> [f64; 4] {
    let mut a = *m;
    for _ in 0..100 {
        let mut rotated = false;
        for p in 0..4 {
            for q in p + 1..4 {
                let (mut alpha, mut beta, mut gamma) = (0.0, 0.0, Z);
                for k in 0..4 {
                    alpha += a[k][p].norm_sqr();
                    beta += a[k][q].norm_sqr();
                    gamma += a[k][p].conj() * a[k][q];
                }
                if gamma.norm() <= 1e-15 * (alpha * beta).sqrt() || gamma.norm() < 1e-300 {
                    continue;
                }
                rotated = true;
                let phase = gamma / gamma.norm();
                let zeta = (beta - alpha) / (2.0 * gamma.norm());
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                for k in 0..4 {
                    let (x, y) = (a[k][p], a[k][q]);
                    a[k][p] = x * c - y * phase.conj() * s;
                    a[k][q] = x * phase * s + y * c;
                }
            }
        }
        if !rotated {
            break;
        }
    }
    let mut sv = [0.0; 4];
    for (j, s) in sv.iter_mut().enumerate() {
        *s = (0..4).map(|k| a[k][j].norm_sqr()).sum::<f64>().sqrt();
    }
    sv.sort_by(|x, y| y.total_cmp(x));
    sv
}

/// Concurrence as `max(0, λ₁ − λ₂ − λ₃ − λ₄)` with `λ` the singular values
/// of `Xᵀ (σ^y⊗σ^y) X` for the factorization `ρ = X X†`.
pub fn concurrence(rho: &M4) -> f64 {
    let (w, v) = jacobi_eigh(rho);
    let mut x = v;
    for row in x.iter_mut() {
        for (k, z) in row.iter_mut().enumerate() {
            *z *= w[k].max(0.0).sqrt();
        }
    }
    let mut xt = zeros();
    for i in 0..4 {
        for j in 0..4 {
            xt[i][j] = x[j][i];
        }
    }
    let yy = mul(&sigma_y(true), &sigma_y(false));
    let l = singular_values(&mul(&xt, &mul(&yy, &x)));
    (l[0] - l[1] - l[2] - l[3]).max(0.0)
}
