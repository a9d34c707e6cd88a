// Copyright 2026 dimerss contributors
// SPDX-License-Identifier: Apache-2.0

//! Exact rational steady states of the common- and independent-drive
//! master equations (γ = 1).
//!
//! Each solution is a common denominator `D` together with numerators
//! `D·a, D·b1, …` for the real coordinates of [`DensityParams`]. Only nine
//! numerators are independent; the rest follow from the A↔B symmetry:
//! `c = b`, `f1 = d1`, `f2 = 0`, `h = e`, `i = g`.
//!
//! The polynomials in [`appendix_a_raw`] and [`appendix_b_raw`] keep the
//! grouping in which they are usually printed so that they can be checked
//! line by line; [`horner`] holds the same polynomials expanded and
//! re-nested in η, which catches transcription slips in either copy.

use crate::density::{DensityMatrix, DensityParams};
use crate::error::{Error, Result};
use crate::liouvillian::{DriveMode, ModelParams};

/// `|D|` below this fraction of its largest term is treated as zero.
pub const SINGULAR_RTOL: f64 = 1e-12;

/// The nine independent polynomials of a closed-form solution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RawNumerators {
    pub d: f64,
    pub a: f64,
    pub b1: f64,
    pub b2: f64,
    pub d1: f64,
    pub d2: f64,
    pub e: f64,
    pub g1: f64,
    pub g2: f64,
}

impl RawNumerators {
    pub fn to_array(&self) -> [f64; 9] {
        [
            self.d, self.a, self.b1, self.b2, self.d1, self.d2, self.e, self.g1, self.g2,
        ]
    }
}

#[derive(Debug, Clone)]
pub struct ClosedFormSolution {
    /// Common denominator `D`.
    pub denom: f64,
    /// `D` times each real coordinate.
    pub numerators: DensityParams,
    pub assembled: DensityMatrix,
}

impl ClosedFormSolution {
    pub fn params(&self) -> DensityParams {
        self.assembled.params()
    }
}

/// Common-drive polynomials. Returns the numerators and the magnitude of the
/// largest top-level term of `D`.
pub fn appendix_a_raw(alpha: f64, eta: f64, j: f64) -> (RawNumerators, f64) {
    let a = alpha;
    let e = eta;
    let a2 = a * a;
    let a4 = a2 * a2;
    let a6 = a4 * a2;
    let j2 = j * j;
    let j4 = j2 * j2;
    let e2 = e * e;
    let e3 = e2 * e;
    let e4 = e3 * e;

    let d_terms = [
        24.0 * a6,
        j4 * (1.0 + 2.0 * e).powi(2) * (1.0 + 6.0 * e),
        4.0 * a4 * (15.0 + 82.0 * e + 144.0 * e2),
        2.0 * (a + 2.0 * a * e).powi(2) * (21.0 + 184.0 * e + 432.0 * e2),
        (1.0 + 2.0 * e).powi(2) * (9.0 + 150.0 * e + 880.0 * e2 + 2080.0 * e3 + 1536.0 * e4),
        2.0 * j2
            * (1.0 + 6.0 * e)
            * (2.0 * a4
                + (1.0 + 2.0 * e).powi(2) * (5.0 + 16.0 * e + 8.0 * e2)
                + a2 * (5.0 + 18.0 * e + 16.0 * e2)),
    ];
    let d: f64 = d_terms.iter().sum();
    let scale = d_terms.iter().fold(0.0f64, |m, t| m.max(t.abs()));

    // 9 + J^4 + 96η + 304η² + 256η³ + 2J²(5 + 16η + 8η²) recurs below
    let q = 9.0 + j4 + 96.0 * e + 304.0 * e2 + 256.0 * e3 + 2.0 * j2 * (5.0 + 16.0 * e + 8.0 * e2);

    let da = 6.0 * a6
        + a4 * (9.0 + 66.0 * e + 144.0 * e2 + j2 * (1.0 + 6.0 * e))
        + 3.0 * e2 * (1.0 + 2.0 * e) * q
        + 2.0
            * a2
            * e
            * (j2 * (7.0 + 23.0 * e + 24.0 * e2)
                + 3.0 * (9.0 + 63.0 * e + 152.0 * e2 + 144.0 * e3));

    let db1 = a
        * (6.0 * a4
            + a2 * (9.0 + 48.0 * e + 120.0 * e2 + j2 * (1.0 + 6.0 * e))
            + e * (1.0 + 2.0 * e) * (j2 * (11.0 + 12.0 * e) + 3.0 * (9.0 + 60.0 * e + 64.0 * e2)));

    let db2 = j * a * e * (3.0 - 10.0 * a2 + 22.0 * e + 32.0 * e2 + j2 * (3.0 + 6.0 * e));

    let dd1 = a4 * (6.0 + 8.0 * e)
        + a2 * (9.0 + 48.0 * e + 120.0 * e2 + 160.0 * e3 + j2 * (1.0 + 4.0 * e + 8.0 * e2))
        + e * (1.0 + 2.0 * e) * q;

    let dd2 = -j * a2 * (9.0 + 6.0 * a2 + 66.0 * e + 96.0 * e2 + j2 * (1.0 + 6.0 * e));

    let de = 6.0 * a6
        + a4 * (15.0 + 74.0 * e + 144.0 * e2 + j2 * (1.0 + 6.0 * e))
        + e * (1.0 + 5.0 * e + 6.0 * e2) * q
        + a2 * (9.0
            + 102.0 * e
            + 498.0 * e2
            + 1072.0 * e3
            + 864.0 * e4
            + j2 * (1.0 + 18.0 * e + 54.0 * e2 + 48.0 * e3));

    let dg1 = a
        * (9.0
            + 6.0 * a4
            + 105.0 * e
            + 418.0 * e2
            + 680.0 * e3
            + 384.0 * e4
            + 5.0 * a2 * (3.0 + 16.0 * e + 24.0 * e2))
        + a * j2 * (1.0 + 13.0 * e + 34.0 * e2 + 24.0 * e3 + a2 * (1.0 + 6.0 * e));

    let dg2 = -j
        * a
        * (9.0
            + 81.0 * e
            + 206.0 * e2
            + 160.0 * e3
            + a2 * (6.0 + 22.0 * e)
            + j2 * (1.0 + 5.0 * e + 6.0 * e2));

    (
        RawNumerators {
            d,
            a: da,
            b1: db1,
            b2: db2,
            d1: dd1,
            d2: dd2,
            e: de,
            g1: dg1,
            g2: dg2,
        },
        scale,
    )
}

/// Independent-drive polynomials; see [`appendix_a_raw`].
pub fn appendix_b_raw(alpha: f64, eta: f64, j: f64) -> (RawNumerators, f64) {
    let a = alpha;
    let e = eta;
    let a2 = a * a;
    let a4 = a2 * a2;
    let a6 = a4 * a2;
    let j2 = j * j;
    let j4 = j2 * j2;
    let e2 = e * e;
    let e3 = e2 * e;
    let e4 = e3 * e;
    let e5 = e4 * e;

    let d_terms = [
        j4 * (1.0 + 2.0 * e).powi(3) * (1.0 + 4.0 * e),
        (3.0 + 8.0 * e)
            * (1.0 + 2.0 * a2 + 6.0 * e + 8.0 * e2).powi(2)
            * (3.0 + 2.0 * a2 + 10.0 * e + 8.0 * e2),
        2.0 * j2
            * (1.0 + 2.0 * e)
            * (a4 * (2.0 + 8.0 * e)
                + (1.0 + 2.0 * e).powi(2) * (5.0 + 32.0 * e + 56.0 * e2 + 32.0 * e3)
                + a2 * (5.0 + 38.0 * e + 96.0 * e2 + 64.0 * e3)),
    ];
    let d: f64 = d_terms.iter().sum();
    let scale = d_terms.iter().fold(0.0f64, |m, t| m.max(t.abs()));

    // 9 + J^4 + 72η + 176η² + 128η³ + 2J²(5 + 12η + 8η²) recurs below
    let q = 9.0 + j4 + 72.0 * e + 176.0 * e2 + 128.0 * e3 + 2.0 * j2 * (5.0 + 12.0 * e + 8.0 * e2);
    let p = 1.0 + 6.0 * e + 8.0 * e2;

    let da = 2.0 * a6 * (3.0 + 8.0 * e)
        + a4 * (9.0 + 66.0 * e + 184.0 * e2 + 192.0 * e3 + j2 * p)
        + e2 * p * q
        + 2.0
            * a2
            * e
            * (9.0
                + 93.0 * e
                + 352.0 * e2
                + 592.0 * e3
                + 384.0 * e4
                + j2 * (3.0 + 23.0 * e + 48.0 * e2 + 32.0 * e3));

    let db1 = a
        * (2.0 * a4 * (3.0 + 8.0 * e)
            + e * p * (9.0 + 36.0 * e + 32.0 * e2 + j2 * (5.0 + 4.0 * e)))
        + a * a2 * (9.0 + 60.0 * e + 144.0 * e2 + 128.0 * e3 + j2 * p);

    let db2 = j * a * e * (j2 * p - (3.0 + 8.0 * e) * (1.0 + 2.0 * a2 + 6.0 * e + 8.0 * e2));

    let dd1 =
        a2 * (j2 * (1.0 + 2.0 * e) + (3.0 + 8.0 * e) * (3.0 + 2.0 * a2 + 10.0 * e + 8.0 * e2));

    let dd2 = -(j * a2 * (j2 * p + (3.0 + 8.0 * e) * (3.0 + 2.0 * a2 + 14.0 * e + 8.0 * e2)));

    let de = 2.0 * a6 * (3.0 + 8.0 * e)
        + a4 * (1.0 + 2.0 * e) * (15.0 + 76.0 * e + 96.0 * e2 + j2 * (1.0 + 4.0 * e))
        + e * (1.0 + 7.0 * e + 14.0 * e2 + 8.0 * e3) * q
        + a2 * (9.0
            + 114.0 * e
            + 570.0 * e2
            + 1408.0 * e3
            + 1696.0 * e4
            + 768.0 * e5
            + j2 * (1.0 + 18.0 * e + 78.0 * e2 + 128.0 * e3 + 64.0 * e4));

    let dg1 = a
        * (1.0 + a2 + 5.0 * e + 4.0 * e2)
        * (j2 * p + (3.0 + 8.0 * e) * (3.0 + 2.0 * a2 + 10.0 * e + 8.0 * e2));

    let dg2 = -(j
        * a
        * (j2 * (1.0 + 7.0 * e + 14.0 * e2 + 8.0 * e3)
            + (3.0 + 8.0 * e)
                * (a2 * (2.0 + 6.0 * e) + 3.0 * (1.0 + 7.0 * e + 14.0 * e2 + 8.0 * e3))));

    (
        RawNumerators {
            d,
            a: da,
            b1: db1,
            b2: db2,
            d1: dd1,
            d2: dd2,
            e: de,
            g1: dg1,
            g2: dg2,
        },
        scale,
    )
}

fn assemble(raw: RawNumerators, scale: f64) -> Result<ClosedFormSolution> {
    if !(raw.d.abs() >= SINGULAR_RTOL * scale) || raw.d == 0.0 {
        return Err(Error::SingularDenominator {
            denom: raw.d,
            scale,
        });
    }
    let numerators = DensityParams {
        a: raw.a,
        b1: raw.b1,
        b2: raw.b2,
        c1: raw.b1,
        c2: raw.b2,
        d1: raw.d1,
        d2: raw.d2,
        e: raw.e,
        f1: raw.d1,
        f2: 0.0,
        g1: raw.g1,
        g2: raw.g2,
        h: raw.e,
        i1: raw.g1,
        i2: raw.g2,
    };
    let values = DensityParams::from_array(numerators.to_array().map(|x| x / raw.d));
    let assembled = DensityMatrix::new_unchecked(values.to_matrix());
    Ok(ClosedFormSolution {
        denom: raw.d,
        numerators,
        assembled,
    })
}

fn check_eta(eta: f64) -> Result<()> {
    if eta >= 0.0 && eta.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParams(format!("eta must be >= 0, got {eta}")))
    }
}

/// Common-drive steady state in units of γ.
pub fn appendix_a(alpha: f64, eta: f64, j: f64) -> Result<ClosedFormSolution> {
    check_eta(eta)?;
    let (raw, scale) = appendix_a_raw(alpha, eta, j);
    assemble(raw, scale)
}

/// Independent-drive steady state in units of γ.
pub fn appendix_b(alpha: f64, eta: f64, j: f64) -> Result<ClosedFormSolution> {
    check_eta(eta)?;
    let (raw, scale) = appendix_b_raw(alpha, eta, j);
    assemble(raw, scale)
}

/// Closed-form steady state for arbitrary γ, via rescaling to γ = 1.
pub fn closed_form_steady(p: &ModelParams) -> Result<ClosedFormSolution> {
    p.validate()?;
    let n = p.normalized();
    match p.mode {
        DriveMode::Common => appendix_a(n.alpha, n.eta, n.j),
        DriveMode::Independent => appendix_b(n.alpha, n.eta, n.j),
    }
}

/// The same polynomials fully expanded and nested in η, J and α.
#[rustfmt::skip]
#[allow(unused_parens, clippy::all)]
pub mod horner {
    use super::RawNumerators;

    pub fn appendix_a_horner(alpha: f64, eta: f64, j: f64) -> RawNumerators {
        let (a, e) = (alpha, eta);
        let d_num = (9.0 + e*((186.0 + e*((1516.0 + e*((6200.0 + 4928.0*a.powi(2) + e*((13376.0 + 1216.0*j.powi(2) + 3456.0*a.powi(2) + e*((14464.0 + 384.0*j.powi(2) + 6144.0*e)))) + j.powi(2)*((1296.0 + 24.0*j.powi(2) + 192.0*a.powi(2))))) + j.powi(2)*((616.0 + 28.0*j.powi(2) + 248.0*a.powi(2))) + a.powi(2)*((2504.0 + 576.0*a.powi(2))))) + j.powi(2)*((132.0 + 10.0*j.powi(2) + a.powi(2)*((96.0 + 24.0*a.powi(2))))) + a.powi(2)*((536.0 + 328.0*a.powi(2))))) + j.powi(2)*((10.0 + j.powi(2) + a.powi(2)*((10.0 + 4.0*a.powi(2))))) + a.powi(2)*((42.0 + a.powi(2)*((60.0 + 24.0*a.powi(2))))));
        let a_num = (e*((e*((27.0 + e*((342.0 + 912.0*a.powi(2) + e*((1488.0 + 240.0*j.powi(2) + 864.0*a.powi(2) + e*((2592.0 + 96.0*j.powi(2) + 1536.0*e)))) + j.powi(2)*((156.0 + 6.0*j.powi(2) + 48.0*a.powi(2))))) + j.powi(2)*((30.0 + 3.0*j.powi(2) + 46.0*a.powi(2))) + a.powi(2)*((378.0 + 144.0*a.powi(2))))) + a.powi(2)*((54.0 + 66.0*a.powi(2))) + j.powi(2)*a.powi(2)*((14.0 + 6.0*a.powi(2))))) + j.powi(2)*a.powi(4) + a.powi(4)*((9.0 + 6.0*a.powi(2))));
        let b1_num = (e*((a*((27.0 + 48.0*a.powi(2))) + e*((a*((234.0 + 120.0*a.powi(2))) + e*((552.0*a + 24.0*a*j.powi(2) + 384.0*a*e)) + 34.0*a*j.powi(2))) + a*j.powi(2)*((11.0 + 6.0*a.powi(2))))) + j.powi(2)*a.powi(3) + a.powi(3)*((9.0 + 6.0*a.powi(2))));
        let b2_num = e*((j*((a*((3.0 + (-10.0)*a.powi(2))) + 3.0*a*j.powi(2))) + e*((j*((22.0*a + 6.0*a*j.powi(2))) + 32.0*j*a*e))));
        let d1_num = (e*((9.0 + e*((114.0 + 120.0*a.powi(2) + e*((496.0 + 80.0*j.powi(2) + 160.0*a.powi(2) + e*((864.0 + 32.0*j.powi(2) + 512.0*e)))) + j.powi(2)*((52.0 + 2.0*j.powi(2) + 8.0*a.powi(2))))) + j.powi(2)*((10.0 + j.powi(2) + 4.0*a.powi(2))) + a.powi(2)*((48.0 + 8.0*a.powi(2))))) + j.powi(2)*a.powi(2) + a.powi(2)*((9.0 + 6.0*a.powi(2))));
        let d2_num = (j*((a.powi(2)*(((-9.0) + (-6.0)*a.powi(2))) + (-1.0)*j.powi(2)*a.powi(2))) + e*((j*(((-66.0)*a.powi(2) + (-6.0)*j.powi(2)*a.powi(2))) + (-96.0)*j*e*a.powi(2))));
        let e_num = (e*((9.0 + e*((141.0 + e*((838.0 + 1072.0*a.powi(2) + e*((2352.0 + 272.0*j.powi(2) + 864.0*a.powi(2) + e*((3104.0 + 96.0*j.powi(2) + 1536.0*e)))) + j.powi(2)*((236.0 + 6.0*j.powi(2) + 48.0*a.powi(2))))) + j.powi(2)*((82.0 + 5.0*j.powi(2) + 54.0*a.powi(2))) + a.powi(2)*((498.0 + 144.0*a.powi(2))))) + j.powi(2)*((10.0 + j.powi(2) + a.powi(2)*((18.0 + 6.0*a.powi(2))))) + a.powi(2)*((102.0 + 74.0*a.powi(2))))) + a.powi(2)*((9.0 + a.powi(2)*((15.0 + 6.0*a.powi(2))))) + j.powi(2)*a.powi(2)*((1.0 + a.powi(2))));
        let g1_num = (a*((9.0 + a.powi(2)*((15.0 + 6.0*a.powi(2))))) + e*((a*((105.0 + 80.0*a.powi(2))) + e*((a*((418.0 + 120.0*a.powi(2))) + e*((680.0*a + 24.0*a*j.powi(2) + 384.0*a*e)) + 34.0*a*j.powi(2))) + a*j.powi(2)*((13.0 + 6.0*a.powi(2))))) + a*j.powi(2)*((1.0 + a.powi(2))));
        let g2_num = (j*((a*(((-9.0) + (-6.0)*a.powi(2))) + (-1.0)*a*j.powi(2))) + e*((j*((a*(((-81.0) + (-22.0)*a.powi(2))) + (-5.0)*a*j.powi(2))) + e*((j*(((-206.0)*a + (-6.0)*a*j.powi(2))) + (-160.0)*j*a*e)))));
        RawNumerators { d: d_num, a: a_num, b1: b1_num, b2: b2_num, d1: d1_num, d2: d2_num, e: e_num, g1: g1_num, g2: g2_num }
    }

    pub fn appendix_b_horner(alpha: f64, eta: f64, j: f64) -> RawNumerators {
        let (a, e) = (alpha, eta);
        let d_num = (9.0 + e*((162.0 + e*((1220.0 + e*((4984.0 + e*((11936.0 + 6784.0*a.powi(2) + e*((16768.0 + 1664.0*j.powi(2) + 3072.0*a.powi(2) + e*((12800.0 + 512.0*j.powi(2) + 4096.0*e)))) + j.powi(2)*((2240.0 + 32.0*j.powi(2) + 256.0*a.powi(2))))) + j.powi(2)*((1584.0 + 56.0*j.powi(2) + 512.0*a.powi(2))) + a.powi(2)*((5888.0 + 768.0*a.powi(2))))) + j.powi(2)*((616.0 + 36.0*j.powi(2) + a.powi(2)*((344.0 + 32.0*a.powi(2))))) + a.powi(2)*((2504.0 + 992.0*a.powi(2))))) + j.powi(2)*((124.0 + 10.0*j.powi(2) + a.powi(2)*((96.0 + 24.0*a.powi(2))))) + a.powi(2)*((520.0 + a.powi(2)*((424.0 + 64.0*a.powi(2))))))) + j.powi(2)*((10.0 + j.powi(2) + a.powi(2)*((10.0 + 4.0*a.powi(2))))) + a.powi(2)*((42.0 + a.powi(2)*((60.0 + 24.0*a.powi(2))))));
        let a_num = (e*((e*((9.0 + e*((126.0 + e*((680.0 + 1184.0*a.powi(2) + e*((1760.0 + 288.0*j.powi(2) + 768.0*a.powi(2) + e*((2176.0 + 128.0*j.powi(2) + 1024.0*e)))) + j.powi(2)*((240.0 + 8.0*j.powi(2) + 64.0*a.powi(2))))) + j.powi(2)*((84.0 + 6.0*j.powi(2) + 96.0*a.powi(2))) + a.powi(2)*((704.0 + 192.0*a.powi(2))))) + j.powi(2)*((10.0 + j.powi(2) + a.powi(2)*((46.0 + 8.0*a.powi(2))))) + a.powi(2)*((186.0 + 184.0*a.powi(2))))) + a.powi(2)*((18.0 + a.powi(2)*((66.0 + 16.0*a.powi(2))))) + j.powi(2)*a.powi(2)*((6.0 + 6.0*a.powi(2))))) + j.powi(2)*a.powi(4) + a.powi(4)*((9.0 + 6.0*a.powi(2))));
        let b1_num = (e*((a*((9.0 + a.powi(2)*((60.0 + 16.0*a.powi(2))))) + e*((a*((90.0 + 144.0*a.powi(2))) + e*((a*((320.0 + 128.0*a.powi(2))) + e*((480.0*a + 32.0*a*j.powi(2) + 256.0*a*e)) + 64.0*a*j.powi(2))) + a*j.powi(2)*((34.0 + 8.0*a.powi(2))))) + a*j.powi(2)*((5.0 + 6.0*a.powi(2))))) + j.powi(2)*a.powi(3) + a.powi(3)*((9.0 + 6.0*a.powi(2))));
        let b2_num = e*((j*((a*j.powi(2) + a*(((-3.0) + (-6.0)*a.powi(2))))) + e*((j*((a*(((-26.0) + (-16.0)*a.powi(2))) + 6.0*a*j.powi(2))) + e*((j*(((-72.0)*a + 8.0*a*j.powi(2))) + (-64.0)*j*a*e))))));
        let d1_num = (e*((e*((104.0*a.powi(2) + 64.0*e*a.powi(2))) + a.powi(2)*((54.0 + 16.0*a.powi(2))) + 2.0*j.powi(2)*a.powi(2))) + j.powi(2)*a.powi(2) + a.powi(2)*((9.0 + 6.0*a.powi(2))));
        let d2_num = (j*((a.powi(2)*(((-9.0) + (-6.0)*a.powi(2))) + (-1.0)*j.powi(2)*a.powi(2))) + e*((j*((a.powi(2)*(((-66.0) + (-16.0)*a.powi(2))) + (-6.0)*j.powi(2)*a.powi(2))) + e*((j*(((-136.0)*a.powi(2) + (-8.0)*j.powi(2)*a.powi(2))) + (-64.0)*j*e*a.powi(2))))));
        let e_num = (e*((9.0 + e*((135.0 + e*((806.0 + e*((2440.0 + 1696.0*a.powi(2) + e*((3936.0 + 416.0*j.powi(2) + 768.0*a.powi(2) + e*((3200.0 + 128.0*j.powi(2) + 1024.0*e)))) + j.powi(2)*((528.0 + 8.0*j.powi(2) + 64.0*a.powi(2))))) + j.powi(2)*((324.0 + 14.0*j.powi(2) + 128.0*a.powi(2))) + a.powi(2)*((1408.0 + 192.0*a.powi(2))))) + j.powi(2)*((94.0 + 7.0*j.powi(2) + a.powi(2)*((78.0 + 8.0*a.powi(2))))) + a.powi(2)*((570.0 + 248.0*a.powi(2))))) + j.powi(2)*((10.0 + j.powi(2) + a.powi(2)*((18.0 + 6.0*a.powi(2))))) + a.powi(2)*((114.0 + a.powi(2)*((106.0 + 16.0*a.powi(2))))))) + a.powi(2)*((9.0 + a.powi(2)*((15.0 + 6.0*a.powi(2))))) + j.powi(2)*a.powi(2)*((1.0 + a.powi(2))));
        let g1_num = (a*((9.0 + a.powi(2)*((15.0 + 6.0*a.powi(2))))) + e*((a*((99.0 + a.powi(2)*((100.0 + 16.0*a.powi(2))))) + e*((a*((410.0 + 208.0*a.powi(2))) + e*((a*((800.0 + 128.0*a.powi(2))) + e*((736.0*a + 32.0*a*j.powi(2) + 256.0*a*e)) + 64.0*a*j.powi(2))) + a*j.powi(2)*((42.0 + 8.0*a.powi(2))))) + a*j.powi(2)*((11.0 + 6.0*a.powi(2))))) + a*j.powi(2)*((1.0 + a.powi(2))));
        let g2_num = (j*((a*(((-9.0) + (-6.0)*a.powi(2))) + (-1.0)*a*j.powi(2))) + e*((j*((a*(((-87.0) + (-34.0)*a.powi(2))) + (-7.0)*a*j.powi(2))) + e*((j*((a*(((-294.0) + (-48.0)*a.powi(2))) + (-14.0)*a*j.powi(2))) + e*((j*(((-408.0)*a + (-8.0)*a*j.powi(2))) + (-192.0)*j*a*e)))))));
        RawNumerators { d: d_num, a: a_num, b1: b1_num, b2: b2_num, d1: d1_num, d2: d2_num, e: e_num, g1: g1_num, g2: g2_num }
    }
}
