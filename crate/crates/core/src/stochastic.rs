// Copyright 2026 dimerss contributors
// SPDX-License-Identifier: Apache-2.0

//! Monte Carlo simulation of the fluctuating drive.
//!
//! Each trajectory evolves a density matrix under the local decay (applied
//! deterministically) and a drive whose amplitude carries white noise with
//! `⟨ξ(t)ξ(t')⟩ = 2η δ(t − t')`. A step of length `h` is the Strang product
//!
//! ```text
//! ρ ← e^{D h/2} · U ρ U† · e^{D h/2},   U = exp(−i(H h + Σ_k V_k ΔW_k)),
//! ```
//!
//! with `ΔW_k ~ N(0, 2η h)`: one increment shared by `σ_A^y + σ_B^y` for the
//! common drive, one per site for independent drives. The kick is the exact
//! unitary, obtained from a Hermitian eigendecomposition, so no Itô or
//! Stratonovich correction enters. Averaged over the noise the kick
//! reproduces the double-commutator channel of the master equation.
//!
//! Every generator of the model commutes with `σ_A^y σ_B^y`, so in that
//! operator's eigenbasis the kick splits into two 2×2 Hermitian blocks whose
//! spectral decomposition is available in closed form. Generators without
//! this symmetry fall back to a Jacobi eigendecomposition.
//!
//! Trajectory `i` draws from the ChaCha8 stream `i` of the configured seed,
//! so ensembles are reproducible regardless of how trajectories are
//! scheduled across threads.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;

use crate::density::DensityMatrix;
use crate::error::{Error, Result};
use crate::liouvillian::{
    build_hamiltonian, local_dissipators, noise_channels, ModelParams, Superoperator,
};
use crate::qops::{expm, jacobi_eigh_in_place, CMat, C64, ZERO};

/// Per-step trace change above which a step is rejected.
pub const STEP_TRACE_TOL: f64 = 1e-10;
/// Default upper bound on `dt · γ`.
pub const MAX_DT_GAMMA: f64 = 0.01;
/// Off-block entries below this (relative) are treated as zero when
/// splitting the generators into symmetry blocks.
const BLOCK_TOL: f64 = 1e-14;

type Mat4 = [C64; 16];
/// Row-major 2×2 block.
type Block = [C64; 4];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrajectoryConfig {
    pub params: ModelParams,
    pub dt: f64,
    pub t_end: f64,
    pub n_traj: usize,
    pub seed: u64,
    /// Each increment is assembled from this many standard normals, so a run
    /// with `(dt, 2)` sees exactly the Brownian paths of a run with
    /// `(dt/2, 1)` at the same seed.
    pub noise_substeps: u32,
}

impl TrajectoryConfig {
    pub fn new(params: ModelParams, dt: f64, t_end: f64, n_traj: usize, seed: u64) -> Self {
        TrajectoryConfig {
            params,
            dt,
            t_end,
            n_traj,
            seed,
            noise_substeps: 1,
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.params.validate()?;
        if !(self.dt > 0.0) || !(self.t_end >= 0.0) || self.n_traj == 0 || self.noise_substeps == 0
        {
            return Err(Error::InvalidParams(format!(
                "need dt > 0, t_end >= 0, n_traj >= 1, noise_substeps >= 1 (got {self:?})"
            )));
        }
        if self.dt * self.params.gamma > MAX_DT_GAMMA {
            return Err(Error::StepTooLarge(format!(
                "dt = {} exceeds {MAX_DT_GAMMA}/gamma",
                self.dt
            )));
        }
        Ok(())
    }

    /// Number of steps and the step length that lands exactly on `t_end`.
    pub fn schedule(&self) -> (usize, f64) {
        if self.t_end == 0.0 {
            return (0, self.dt);
        }
        let n = (self.t_end / self.dt - 1e-9).ceil().max(1.0) as usize;
        (n, self.t_end / n as f64)
    }
}

#[derive(Debug, Clone)]
pub struct EnsembleResult {
    pub rho_mean: DensityMatrix,
    /// Largest per-entry standard error of the mean.
    pub stderr: f64,
    /// Standard error of the mean in Frobenius norm, `√(Σ Var ρ_mn / n)`.
    pub frobenius_stderr: f64,
    pub n_traj: usize,
    pub t_end: f64,
    /// Worst `|tr ρ − 1|` seen on any trajectory at any step.
    pub max_trace_defect: f64,
    /// Worst Hermiticity defect seen on any trajectory at any step.
    pub max_hermiticity_defect: f64,
}

/// Superoperator stored by its nonzero entries, acting on row-major 4×4
/// matrices. Real coefficients are kept apart since they are the common
/// case and cost half as much to apply.
#[derive(Debug, Clone)]
enum SparseSuper {
    Real(Vec<(u8, u8, f64)>),
    Complex(Vec<(u8, u8, C64)>),
}

impl SparseSuper {
    /// From a 16×16 matrix on column-stacked vectors; entries at the
    /// rounding level are dropped.
    fn from_column_stacked(m: &CMat) -> Self {
        let to_row_major = |v: usize| (v % 4) * 4 + v / 4;
        let floor = 1e-17 * m.max_abs();
        let mut entries = Vec::new();
        for r in 0..16 {
            for c in 0..16 {
                let z = m[(r, c)];
                if z.norm() > floor {
                    entries.push((to_row_major(r) as u8, to_row_major(c) as u8, z));
                }
            }
        }
        if entries.iter().all(|e| e.2.im.abs() <= floor) {
            SparseSuper::Real(entries.into_iter().map(|(r, c, z)| (r, c, z.re)).collect())
        } else {
            SparseSuper::Complex(entries)
        }
    }

    #[inline]
    fn apply(&self, rho: &Mat4) -> Mat4 {
        let mut out = [ZERO; 16];
        match self {
            SparseSuper::Real(entries) => {
                for &(r, c, x) in entries {
                    out[r as usize] += rho[c as usize] * x;
                }
            }
            SparseSuper::Complex(entries) => {
                for &(r, c, z) in entries {
                    out[r as usize] += z * rho[c as usize];
                }
            }
        }
        out
    }
}

#[inline]
fn matmul4(a: &Mat4, b: &Mat4) -> Mat4 {
    let mut out = [ZERO; 16];
    for i in 0..4 {
        for k in 0..4 {
            let aik = a[i * 4 + k];
            for j in 0..4 {
                out[i * 4 + j] += aik * b[k * 4 + j];
            }
        }
    }
    out
}

/// `a · b†`
#[inline]
fn matmul4_adj(a: &Mat4, b: &Mat4) -> Mat4 {
    let mut out = [ZERO; 16];
    for i in 0..4 {
        for j in 0..4 {
            let mut s = ZERO;
            for k in 0..4 {
                s += a[i * 4 + k] * b[j * 4 + k].conj();
            }
            out[i * 4 + j] = s;
        }
    }
    out
}

fn adjoint4(m: &Mat4) -> Mat4 {
    let mut out = [ZERO; 16];
    for i in 0..4 {
        for j in 0..4 {
            out[i * 4 + j] = m[j * 4 + i].conj();
        }
    }
    out
}

fn to_mat4(m: &CMat) -> Mat4 {
    let mut out = [ZERO; 16];
    out.copy_from_slice(m.as_slice());
    out
}

fn from_mat4(m: &Mat4) -> DensityMatrix {
    DensityMatrix::new_unchecked(CMat::from_vec(4, 4, m.to_vec()).expect("4x4"))
}

fn trace4(m: &Mat4) -> C64 {
    m[0] + m[5] + m[10] + m[15]
}

/// Squared Hermiticity defect.
fn hermiticity_defect4_sqr(m: &Mat4) -> f64 {
    let mut worst = 0.0f64;
    for i in 0..4 {
        for j in i..4 {
            worst = worst.max((m[i * 4 + j] - m[j * 4 + i].conj()).norm_sqr());
        }
    }
    worst
}

fn half_trace(g: &Block) -> f64 {
    0.5 * (g[0].re + g[3].re)
}

fn phase_of(m: f64) -> C64 {
    let (s, c) = m.sin_cos();
    C64::new(c, -s)
}

/// `exp(−i g)` for a Hermitian 2×2 block. With `g = m·1 + K`, `K` traceless,
/// `K² = r²·1` and the exponential is `e^{−im}(cos r − i sin r/r · K)`;
/// `phase` is `e^{−im}`.
#[inline]
fn exp_block(g: &Block, phase: C64) -> Block {
    let d = 0.5 * (g[0].re - g[3].re);
    let z = g[1];
    let r = (d * d + z.norm_sqr()).sqrt();
    let (sr, cr) = r.sin_cos();
    let sinc = if r > 1e-8 { sr / r } else { 1.0 - r * r / 6.0 };
    let mi = C64::new(0.0, -sinc);
    [
        phase * (cr + mi * d),
        phase * mi * z,
        phase * mi * z.conj(),
        phase * (cr - mi * d),
    ]
}

/// Orthonormal eigenbasis of `σ_A^y σ_B^y` (columns): the first two span
/// its `+1` eigenspace, the last two its `−1` eigenspace.
fn parity_basis() -> CMat {
    let r = std::f64::consts::FRAC_1_SQRT_2;
    let cols = [
        [0.0, r, r, 0.0],
        [r, 0.0, 0.0, -r],
        [0.0, r, -r, 0.0],
        [r, 0.0, 0.0, r],
    ];
    CMat::from_fn(4, 4, |i, k| C64::new(cols[k][i], 0.0))
}

/// `q† m q` split into its two diagonal 2×2 blocks, or `None` when the
/// off-diagonal blocks do not vanish.
fn split_blocks(m: &CMat, q: &CMat) -> Option<[Block; 2]> {
    let r = q.adjoint().matmul(m).ok()?.matmul(q).ok()?;
    let scale = r.max_abs().max(1.0);
    for i in 0..4 {
        for j in 0..4 {
            if (i < 2) != (j < 2) && r[(i, j)].norm() > BLOCK_TOL * scale {
                return None;
            }
        }
    }
    Some([
        [r[(0, 0)], r[(0, 1)], r[(1, 0)], r[(1, 1)]],
        [r[(2, 2)], r[(2, 3)], r[(3, 2)], r[(3, 3)]],
    ])
}

/// `a · b · c†` for 2×2 blocks.
#[inline]
fn block_sandwich(a: &Block, b: &Block, c: &Block) -> Block {
    let ab = [
        a[0] * b[0] + a[1] * b[2],
        a[0] * b[1] + a[1] * b[3],
        a[2] * b[0] + a[3] * b[2],
        a[2] * b[1] + a[3] * b[3],
    ];
    [
        ab[0] * c[0].conj() + ab[1] * c[1].conj(),
        ab[0] * c[2].conj() + ab[1] * c[3].conj(),
        ab[2] * c[0].conj() + ab[3] * c[1].conj(),
        ab[2] * c[2].conj() + ab[3] * c[3].conj(),
    ]
}

/// Generators of the unitary kick.
#[derive(Debug, Clone)]
enum Generators {
    /// Diagonal blocks in the parity basis; the state is carried in that
    /// basis too.
    Blocked {
        h_dt: [Block; 2],
        channels: Vec<[Block; 2]>,
        /// `e^{−im}` per block when the channels are traceless on both
        /// blocks, so that `m` comes from `H` alone.
        phases: Option<[C64; 2]>,
    },
    General {
        h_dt: Mat4,
        channels: Vec<Mat4>,
    },
}

impl Generators {
    fn channel_count(&self) -> usize {
        match self {
            Generators::Blocked { channels, .. } => channels.len(),
            Generators::General { channels, .. } => channels.len(),
        }
    }

    /// `U ρ U†` with `U = exp(−i(H h + Σ_k V_k ΔW_k))`.
    fn kick(&self, rho: &Mat4, increments: &[f64]) -> Result<Mat4> {
        match self {
            Generators::Blocked {
                h_dt,
                channels,
                phases,
            } => {
                let mut g = *h_dt;
                for (v, &dw) in channels.iter().zip(increments) {
                    for (gb, vb) in g.iter_mut().zip(v) {
                        for (x, y) in gb.iter_mut().zip(vb) {
                            *x += y * dw;
                        }
                    }
                }
                let ph = phases.unwrap_or_else(|| g.map(|b| phase_of(half_trace(&b))));
                let u = [exp_block(&g[0], ph[0]), exp_block(&g[1], ph[1])];
                let mut out = [ZERO; 16];
                for bi in 0..2 {
                    for bj in 0..2 {
                        let at = |r: usize, c: usize| rho[(2 * bi + r) * 4 + 2 * bj + c];
                        let blk = [at(0, 0), at(0, 1), at(1, 0), at(1, 1)];
                        let res = block_sandwich(&u[bi], &blk, &u[bj]);
                        for r in 0..2 {
                            for c in 0..2 {
                                out[(2 * bi + r) * 4 + 2 * bj + c] = res[r * 2 + c];
                            }
                        }
                    }
                }
                Ok(out)
            }
            Generators::General { h_dt, channels } => {
                let mut g = *h_dt;
                for (v, &dw) in channels.iter().zip(increments) {
                    for (gi, vi) in g.iter_mut().zip(v) {
                        *gi += vi * dw;
                    }
                }
                let mut w = [ZERO; 16];
                jacobi_eigh_in_place(4, &mut g, &mut w)?;
                let mut wp = w;
                for k in 0..4 {
                    let (s, c) = g[k * 5].re.sin_cos();
                    let phase = C64::new(c, -s);
                    for i in 0..4 {
                        wp[i * 4 + k] *= phase;
                    }
                }
                let u = matmul4_adj(&wp, &w);
                Ok(matmul4_adj(&matmul4(&u, rho), &u))
            }
        }
    }
}

/// Precomputed propagators for one step size.
#[derive(Debug, Clone)]
pub struct TrajectoryStepper {
    half: SparseSuper,
    full: SparseSuper,
    generators: Generators,
    /// Basis the state is carried in, when not the computational one.
    basis: Option<Mat4>,
    /// `√(2η h)`
    sigma: f64,
    substeps: u32,
    dt: f64,
}

impl TrajectoryStepper {
    pub fn new(cfg: &TrajectoryConfig) -> Result<Self> {
        cfg.validate()?;
        let (_, h) = cfg.schedule();
        let p = &cfg.params;
        Self::from_parts(
            &build_hamiltonian(p),
            local_dissipators(p.gamma).matrix(),
            &noise_channels(p.mode),
            p.eta,
            h,
            cfg.noise_substeps,
        )
    }

    /// Builds a stepper from an explicit Hamiltonian, a 16×16 dissipative
    /// generator on column-stacked vectors, and the noise operators.
    pub fn from_parts(
        hamiltonian: &CMat,
        dissipator: &CMat,
        channels: &[CMat],
        eta: f64,
        dt: f64,
        substeps: u32,
    ) -> Result<Self> {
        Self::build(hamiltonian, dissipator, channels, eta, dt, substeps, true)
    }

    /// As [`from_parts`](Self::from_parts), always using the Jacobi
    /// eigendecomposition in the computational basis.
    pub fn from_parts_dense(
        hamiltonian: &CMat,
        dissipator: &CMat,
        channels: &[CMat],
        eta: f64,
        dt: f64,
        substeps: u32,
    ) -> Result<Self> {
        Self::build(hamiltonian, dissipator, channels, eta, dt, substeps, false)
    }

    fn build(
        hamiltonian: &CMat,
        dissipator: &CMat,
        channels: &[CMat],
        eta: f64,
        dt: f64,
        substeps: u32,
        use_symmetry: bool,
    ) -> Result<Self> {
        if !(dt > 0.0) || !(eta >= 0.0) || substeps == 0 {
            return Err(Error::InvalidParams(format!(
                "need dt > 0, eta >= 0, substeps >= 1 (dt={dt}, eta={eta})"
            )));
        }
        if hamiltonian.shape() != (4, 4) || dissipator.shape() != (16, 16) {
            return Err(Error::DimensionMismatch {
                op: "stepper",
                left: hamiltonian.shape(),
                right: dissipator.shape(),
            });
        }
        if let Some(v) = channels.iter().find(|v| v.shape() != (4, 4)) {
            return Err(Error::DimensionMismatch {
                op: "stepper",
                left: (4, 4),
                right: v.shape(),
            });
        }
        let h_dt = hamiltonian.scale_re(dt);
        let q = parity_basis();
        let blocks = if use_symmetry {
            split_blocks(&h_dt, &q).and_then(|h| {
                let v: Option<Vec<_>> = channels.iter().map(|c| split_blocks(c, &q)).collect();
                v.map(|v| (h, v))
            })
        } else {
            None
        };
        let half = expm(&dissipator.scale_re(dt / 2.0))?;
        let full = expm(&dissipator.scale_re(dt))?;
        let (generators, basis, half, full) = match blocks {
            Some((h, v)) => {
                let into = Superoperator::sandwich(&q.adjoint(), &q);
                let back = Superoperator::sandwich(&q, &q.adjoint());
                let change = |m: CMat| {
                    into.compose(&Superoperator::new(m).expect("16x16"))
                        .compose(&back)
                        .into_matrix()
                };
                let traceless = v.iter().flatten().all(|b| half_trace(b).abs() <= BLOCK_TOL);
                let phases = traceless.then(|| h.map(|b| phase_of(half_trace(&b))));
                let generators = Generators::Blocked {
                    h_dt: h,
                    channels: v,
                    phases,
                };
                (generators, Some(to_mat4(&q)), change(half), change(full))
            }
            None => {
                let generators = Generators::General {
                    h_dt: to_mat4(&h_dt),
                    channels: channels.iter().map(to_mat4).collect(),
                };
                (generators, None, half, full)
            }
        };
        Ok(TrajectoryStepper {
            half: SparseSuper::from_column_stacked(&half),
            full: SparseSuper::from_column_stacked(&full),
            generators,
            basis,
            sigma: (2.0 * eta * dt).sqrt(),
            substeps,
            dt,
        })
    }

    pub fn dt(&self) -> f64 {
        self.dt
    }

    /// Whether the kick uses the closed-form block exponential.
    pub fn is_block_diagonal(&self) -> bool {
        matches!(self.generators, Generators::Blocked { .. })
    }

    fn to_internal(&self, rho: &Mat4) -> Mat4 {
        match &self.basis {
            Some(q) => matmul4(&adjoint4(q), &matmul4(rho, q)),
            None => *rho,
        }
    }

    fn to_external(&self, rho: &Mat4) -> Mat4 {
        match &self.basis {
            Some(q) => matmul4_adj(&matmul4(q, rho), q),
            None => *rho,
        }
    }

    fn draw_increments(&self, rng: &mut ChaCha8Rng, out: &mut [f64]) {
        for x in out.iter_mut() {
            *x = 0.0;
        }
        for _ in 0..self.substeps {
            for x in out.iter_mut() {
                let z: f64 = StandardNormal.sample(rng);
                *x += z;
            }
        }
        let scale = self.sigma / (self.substeps as f64).sqrt();
        for x in out.iter_mut() {
            *x *= scale;
        }
    }

    fn check_trace(before: &Mat4, after: &Mat4) -> Result<()> {
        let drift2 = (trace4(after) - trace4(before)).norm_sqr();
        if drift2 > STEP_TRACE_TOL * STEP_TRACE_TOL || drift2.is_nan() {
            let drift = drift2.sqrt();
            return Err(Error::StepTooLarge(format!(
                "trace changed by {drift:e} in one step"
            )));
        }
        Ok(())
    }

    /// One full Strang step.
    pub fn step(&self, rho: &DensityMatrix, rng: &mut ChaCha8Rng) -> Result<DensityMatrix> {
        let mut inc = vec![0.0; self.generators.channel_count()];
        self.draw_increments(rng, &mut inc);
        self.step_with(rho, &inc)
    }

    /// One full Strang step with the given noise increments `ΔW_k`.
    pub fn step_with(&self, rho: &DensityMatrix, increments: &[f64]) -> Result<DensityMatrix> {
        if increments.len() != self.generators.channel_count() {
            return Err(Error::InvalidParams(format!(
                "expected {} increments, got {}",
                self.generators.channel_count(),
                increments.len()
            )));
        }
        let inc = increments;
        let start = self.to_internal(&to_mat4(rho.matrix()));
        let mid = self.half.apply(&start);
        let kicked = self.generators.kick(&mid, inc)?;
        let end = self.half.apply(&kicked);
        Self::check_trace(&start, &end)?;
        Ok(from_mat4(&self.to_external(&end)))
    }

    /// Runs `steps` Strang steps, merging adjacent dissipative half-steps.
    /// Returns the final state with the worst trace and Hermiticity defects
    /// seen along the way.
    fn run(&self, rho0: &Mat4, steps: usize, rng: &mut ChaCha8Rng) -> Result<(Mat4, f64, f64)> {
        let mut rho = self.to_internal(rho0);
        let mut worst_trace2 = (trace4(&rho) - 1.0).norm_sqr();
        let mut worst_herm2 = hermiticity_defect4_sqr(&rho);
        let mut inc = vec![0.0; self.generators.channel_count()];
        if steps > 0 {
            rho = self.half.apply(&rho);
        }
        for s in 0..steps {
            let before = rho;
            self.draw_increments(rng, &mut inc);
            rho = self.generators.kick(&rho, &inc)?;
            rho = if s + 1 < steps {
                self.full.apply(&rho)
            } else {
                self.half.apply(&rho)
            };
            Self::check_trace(&before, &rho)?;
            worst_trace2 = worst_trace2.max((trace4(&rho) - 1.0).norm_sqr());
            worst_herm2 = worst_herm2.max(hermiticity_defect4_sqr(&rho));
        }
        Ok((
            self.to_external(&rho),
            worst_trace2.sqrt(),
            worst_herm2.sqrt(),
        ))
    }
}

/// Independent random stream for trajectory `index`.
pub fn trajectory_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Single Strang step; builds the propagators on every call, so prefer
/// [`TrajectoryStepper`] in loops.
pub fn noisy_step(
    rho: &DensityMatrix,
    cfg: &TrajectoryConfig,
    rng: &mut ChaCha8Rng,
) -> Result<DensityMatrix> {
    TrajectoryStepper::new(cfg)?.step(rho, rng)
}

/// Final state of trajectory `index`, started from `I/4`.
pub fn run_trajectory(cfg: &TrajectoryConfig, index: u64) -> Result<DensityMatrix> {
    let stepper = TrajectoryStepper::new(cfg)?;
    let (steps, _) = cfg.schedule();
    let mut rng = trajectory_rng(cfg.seed, index);
    let rho0 = to_mat4(DensityMatrix::maximally_mixed().matrix());
    let (end, _, _) = stepper.run(&rho0, steps, &mut rng)?;
    Ok(from_mat4(&end))
}

/// Averages `n_traj` trajectories started from `I/4` up to `t_end`.
pub fn run_ensemble(cfg: &TrajectoryConfig) -> Result<EnsembleResult> {
    let stepper = TrajectoryStepper::new(cfg)?;
    ensemble_from(&stepper, cfg, &DensityMatrix::maximally_mixed())
}

/// Ensemble average with an explicit stepper and initial state.
pub fn ensemble_from(
    stepper: &TrajectoryStepper,
    cfg: &TrajectoryConfig,
    rho0: &DensityMatrix,
) -> Result<EnsembleResult> {
    if cfg.n_traj == 0 {
        return Err(Error::InvalidParams("n_traj must be >= 1".into()));
    }
    let steps = if cfg.t_end == 0.0 {
        0
    } else {
        (cfg.t_end / stepper.dt()).round() as usize
    };
    let start = to_mat4(rho0.matrix());
    let finals: Vec<(Mat4, f64, f64)> = (0..cfg.n_traj as u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = trajectory_rng(cfg.seed, i);
            stepper.run(&start, steps, &mut rng)
        })
        .collect::<Result<_>>()?;

    // in-order reduction keeps the result independent of scheduling
    let n = finals.len() as f64;
    let mut mean = [ZERO; 16];
    for (m, _, _) in &finals {
        for (acc, z) in mean.iter_mut().zip(m) {
            *acc += z;
        }
    }
    for z in mean.iter_mut() {
        *z /= n;
    }
    let mut var = [0.0f64; 16];
    for (m, _, _) in &finals {
        for ((v, z), mu) in var.iter_mut().zip(m).zip(&mean) {
            *v += (z - mu).norm_sqr();
        }
    }
    let denom = (n - 1.0).max(1.0);
    let stderr = var
        .iter()
        .map(|v| (v / denom / n).sqrt())
        .fold(0.0, f64::max);
    let frobenius_stderr = (var.iter().sum::<f64>() / denom / n).sqrt();
    let max_trace_defect = finals.iter().map(|f| f.1).fold(0.0, f64::max);
    let max_hermiticity_defect = finals.iter().map(|f| f.2).fold(0.0, f64::max);
    Ok(EnsembleResult {
        rho_mean: from_mat4(&mean),
        stderr,
        frobenius_stderr,
        n_traj: cfg.n_traj,
        t_end: cfg.t_end,
        max_trace_defect,
        max_hermiticity_defect,
    })
}
