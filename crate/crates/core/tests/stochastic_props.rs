// Copyright 2026 dimerss contributors
// SPDX-License-Identifier: Apache-2.0

use dimerss_core::closed_form::closed_form_steady;
use dimerss_core::liouvillian::{
    build_hamiltonian, build_liouvillian, devectorize_matrix, local_dissipators, noise_channels,
    noise_super, vectorize, Superoperator,
};
use dimerss_core::qops::{eigh, expm, CMat, C64};
use dimerss_core::steady_state::{evolve, solve_steady};
use dimerss_core::stochastic::{
    ensemble_from, run_ensemble, run_trajectory, trajectory_rng, TrajectoryConfig,
    TrajectoryStepper,
};
use dimerss_core::{DensityMatrix, DriveMode, ModelParams};

fn skewed_state() -> DensityMatrix {
    let s = 0.5f64.sqrt();
    let pure = DensityMatrix::pure(&[
        C64::new(0.5, 0.0),
        C64::new(0.0, s * 0.8),
        C64::new(0.3, -0.2),
        C64::new(-0.4, 0.1),
    ]);
    let m = &pure.matrix().scale_re(0.8) + &DensityMatrix::basis_state(1).matrix().scale_re(0.2);
    DensityMatrix::new(m).unwrap()
}

/// Probabilists' Gauss–Hermite rule from the eigenpairs of its Jacobi matrix.
fn gauss_hermite(n: usize) -> Vec<(f64, f64)> {
    let jm = CMat::from_fn(n, n, |i, j| {
        if i + 1 == j || j + 1 == i {
            C64::new((i.max(j) as f64).sqrt(), 0.0)
        } else {
            C64::new(0.0, 0.0)
        }
    });
    let (w, v) = eigh(&jm).unwrap();
    (0..n).map(|k| (w[k], v[(0, k)].norm_sqr())).collect()
}

fn basis_matrix(k: usize) -> CMat {
    let mut e = CMat::zeros(4, 4);
    e[(k % 4, k / 4)] = C64::new(1.0, 0.0);
    e
}

/// The one-step map averaged over the noise increments, as a 16×16 matrix.
fn averaged_step(stepper: &TrajectoryStepper, channels: usize, sigma: f64) -> CMat {
    let rule = gauss_hermite(24);
    let mut total = CMat::zeros(16, 16);
    let mut nodes: Vec<(Vec<f64>, f64)> = vec![(vec![], 1.0)];
    for _ in 0..channels {
        nodes = nodes
            .iter()
            .flat_map(|(xs, w)| {
                rule.iter().map(move |&(x, wx)| {
                    let mut next = xs.clone();
                    next.push(sigma * x);
                    (next, w * wx)
                })
            })
            .collect();
    }
    for col in 0..16 {
        let e = DensityMatrix::new_unchecked(basis_matrix(col));
        for (inc, w) in &nodes {
            let out = stepper.step_with(&e, inc).unwrap();
            let v = vectorize(&out);
            for row in 0..16 {
                total[(row, col)] += v[row] * *w;
            }
        }
    }
    total
}

#[test]
fn pure_noise_ensemble_matches_double_commutator_channel() {
    for mode in DriveMode::ALL {
        let p = ModelParams::new(0.0, 0.3, 0.0, mode).unwrap();
        let t = 1.0;
        let cfg = TrajectoryConfig::new(p, 0.01, t, 4000, 7);
        let stepper = TrajectoryStepper::from_parts(
            &CMat::zeros(4, 4),
            &CMat::zeros(16, 16),
            &noise_channels(mode),
            p.eta,
            cfg.dt,
            1,
        )
        .unwrap();
        let rho0 = skewed_state();
        let res = ensemble_from(&stepper, &cfg, &rho0).unwrap();
        let channel = expm(&noise_super(&p).matrix().scale_re(t)).unwrap();
        let want = devectorize_matrix(&channel.apply(&vectorize(&rho0)).unwrap());
        let err = res.rho_mean.matrix().distance_frobenius(&want);
        let moved = rho0.matrix().distance_frobenius(&want);
        assert!(moved > 0.1, "{mode:?}: channel too weak to test ({moved})");
        assert!(
            err < 4.0 * res.frobenius_stderr,
            "{mode:?}: {err:e} vs stderr {:e}",
            res.frobenius_stderr
        );
    }
}

#[test]
fn noiseless_trajectory_is_second_order_lindblad() {
    let p = ModelParams::new(1.0, 0.0, 2.0, DriveMode::Common).unwrap();
    let l = build_liouvillian(&p);
    let exact = evolve(&DensityMatrix::maximally_mixed(), &l, 1.0, 0.001).unwrap();
    let err = |dt: f64| {
        let cfg = TrajectoryConfig::new(p, dt, 1.0, 1, 3);
        run_trajectory(&cfg, 0).unwrap().distance(&exact)
    };
    let (coarse, fine) = (err(0.01), err(0.005));
    assert!(coarse < 1e-3, "{coarse:e}");
    let ratio = coarse / fine;
    assert!((3.5..4.5).contains(&ratio), "ratio {ratio}");
}

#[test]
fn step_matches_explicit_propagators() {
    for mode in DriveMode::ALL {
        let p = ModelParams::new(0.8, 0.2, 1.5, mode).unwrap();
        let dt = 0.01;
        let stepper = TrajectoryStepper::new(&TrajectoryConfig::new(p, dt, 1.0, 1, 0)).unwrap();
        let channels = noise_channels(mode);
        let increments: Vec<f64> = [0.07, -0.11][..channels.len()].to_vec();
        let mut g = build_hamiltonian(&p).scale_re(dt);
        for (v, w) in channels.iter().zip(&increments) {
            g = &g + &v.scale_re(*w);
        }
        let u = expm(&g.scale(C64::new(0.0, -1.0))).unwrap();
        let half = expm(&local_dissipators(p.gamma).matrix().scale_re(dt / 2.0)).unwrap();
        let map = Superoperator::new(half.clone()).unwrap().compose(
            &Superoperator::sandwich(&u, &u.adjoint()).compose(&Superoperator::new(half).unwrap()),
        );
        let rho = skewed_state();
        let want = map.apply(rho.matrix());
        let got = stepper.step_with(&rho, &increments).unwrap();
        assert!(got.matrix().approx_eq(&want, 1e-12), "{mode:?}");
        assert!(stepper.step_with(&rho, &[0.0; 3]).is_err());
    }
}

#[test]
fn weak_bias_is_first_order_in_dt() {
    for mode in DriveMode::ALL {
        let p = ModelParams::new(1.0, 0.1, 2.0, mode).unwrap();
        let exact = closed_form_steady(&p).unwrap().assembled;
        let bias = |dt: f64| {
            let stepper = TrajectoryStepper::new(&TrajectoryConfig::new(p, dt, 1.0, 1, 0)).unwrap();
            let k = noise_channels(mode).len();
            let m = averaged_step(&stepper, k, (2.0 * p.eta * dt).sqrt());
            let generator = m.try_sub(&CMat::identity(16)).unwrap();
            let fixed = solve_steady(&Superoperator::new(generator).unwrap()).unwrap();
            fixed.rho.distance(&exact)
        };
        let (b1, b2) = (bias(0.01), bias(0.005));
        assert!(b1 < 2e-3, "{mode:?}: {b1:e}");
        let ratio = b1 / b2;
        assert!((1.8..2.2).contains(&ratio), "{mode:?}: ratio {ratio}");
    }
}

#[test]
fn trajectories_stay_physical_and_reproducible() {
    for mode in DriveMode::ALL {
        let p = ModelParams::new(1.0, 0.1, 2.0, mode).unwrap();
        let cfg = TrajectoryConfig::new(p, 0.005, 5.0, 64, 11);
        let a = run_ensemble(&cfg).unwrap();
        assert!(a.max_trace_defect < 1e-8 && a.max_hermiticity_defect < 1e-8);
        let pool = |n| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .unwrap()
        };
        let b = pool(3).install(|| run_ensemble(&cfg).unwrap());
        assert_eq!(a.rho_mean, b.rho_mean);
        assert_eq!(a.stderr, b.stderr);
        let single = run_trajectory(&cfg, 5).unwrap();
        assert_eq!(single, run_trajectory(&cfg, 5).unwrap());
        assert_ne!(single, run_trajectory(&cfg, 6).unwrap());
    }
}

#[test]
fn substeps_share_brownian_paths() {
    let p = ModelParams::new(1.0, 0.1, 2.0, DriveMode::Common).unwrap();
    let coarse = TrajectoryConfig {
        noise_substeps: 2,
        ..TrajectoryConfig::new(p, 0.01, 2.0, 1, 5)
    };
    let fine = TrajectoryConfig::new(p, 0.005, 2.0, 1, 5);
    let a = run_trajectory(&coarse, 0).unwrap();
    let b = run_trajectory(&fine, 0).unwrap();
    let unrelated = run_trajectory(&TrajectoryConfig::new(p, 0.005, 2.0, 1, 6), 0).unwrap();
    assert!(
        a.distance(&b) < 0.2 * a.distance(&unrelated),
        "{} vs {}",
        a.distance(&b),
        a.distance(&unrelated)
    );
}

#[test]
fn streams_differ_per_trajectory() {
    use rand::Rng;
    let x: u64 = trajectory_rng(1, 0).gen();
    let y: u64 = trajectory_rng(1, 1).gen();
    let z: u64 = trajectory_rng(1, 0).gen();
    assert_ne!(x, y);
    assert_eq!(x, z);
}

#[test]
fn invalid_configs_are_rejected() {
    let p = ModelParams::new(1.0, 0.1, 2.0, DriveMode::Common).unwrap();
    assert!(run_ensemble(&TrajectoryConfig::new(p, 0.05, 1.0, 4, 0)).is_err());
    assert!(run_ensemble(&TrajectoryConfig::new(p, 0.005, 1.0, 0, 0)).is_err());
    assert!(run_ensemble(&TrajectoryConfig::new(p, -0.005, 1.0, 4, 0)).is_err());
}
