// Copyright 2026 dimerss contributors
// SPDX-License-Identifier: Apache-2.0

#![allow(dead_code)]

use dimerss_core::qops::{CMat, C64};
use dimerss_core::{DensityMatrix, DriveMode};
use proptest::prelude::*;

pub fn cmat(n: usize, m: usize) -> impl Strategy<Value = CMat> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), n * m).prop_map(move |v| {
        CMat::from_vec(
            n,
            m,
            v.into_iter().map(|(re, im)| C64::new(re, im)).collect(),
        )
        .unwrap()
    })
}

/// `G G† / tr(G G†)` for a random complex `G`; full rank with probability one.
pub fn density() -> impl Strategy<Value = DensityMatrix> {
    cmat(4, 4).prop_filter_map("degenerate", |g| {
        let m = g.matmul(&g.adjoint()).unwrap();
        let tr = m.trace().re;
        (tr > 1e-6).then(|| DensityMatrix::new(m.scale_re(1.0 / tr)).unwrap())
    })
}

pub fn pure_state() -> impl Strategy<Value = [C64; 4]> {
    prop::array::uniform4((-1.0f64..1.0, -1.0f64..1.0))
        .prop_map(|v| v.map(|(re, im)| C64::new(re, im)))
        .prop_filter("zero vector", |v| {
            v.iter().map(|z| z.norm_sqr()).sum::<f64>() > 1e-3
        })
}

pub fn mode() -> impl Strategy<Value = DriveMode> {
    prop_oneof![Just(DriveMode::Common), Just(DriveMode::Independent)]
}

/// Every identity the steady states must satisfy; returns the largest violation.
pub fn symmetry_defect(rho: &DensityMatrix) -> f64 {
    let p = rho.params();
    [
        p.c1 - p.b1,
        p.c2 - p.b2,
        p.f1 - p.d1,
        p.f2,
        p.h - p.e,
        p.i1 - p.g1,
        p.i2 - p.g2,
    ]
    .iter()
    .map(|x| x.abs())
    .fold(0.0, f64::max)
}

pub fn assert_physical(rho: &DensityMatrix, tol: f64) {
    let m = rho.matrix();
    assert!(
        m.hermiticity_defect() < tol,
        "Hermiticity {:e}",
        m.hermiticity_defect()
    );
    assert!(
        (rho.trace() - C64::new(1.0, 0.0)).norm() < tol,
        "trace {}",
        rho.trace()
    );
    let min = rho.min_eigenvalue().unwrap();
    assert!(min >= -1e-8, "min eigenvalue {min:e}");
}
