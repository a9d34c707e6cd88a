// Copyright 2026 dimerss contributors
// SPDX-License-Identifier: Apache-2.0

//! Parameter grids over (α, η) and their CSV rows.

use std::fmt::Write as _;

use log::warn;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::closed_form::closed_form_steady;
use crate::density::DensityMatrix;
use crate::entanglement::concurrence;
use crate::error::{Error, Result};
use crate::liouvillian::{build_liouvillian, DriveMode, ModelParams};
use crate::steady_state::solve_steady;

/// Inclusive uniform grid `(min, max, count)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Range {
    pub min: f64,
    pub max: f64,
    pub count: usize,
}

impl Range {
    pub fn new(min: f64, max: f64, count: usize) -> Result<Self> {
        let r = Range { min, max, count };
        r.validate()?;
        Ok(r)
    }

    pub fn validate(&self) -> Result<()> {
        if self.count == 0 || !(self.min <= self.max) {
            return Err(Error::InvalidParams(format!(
                "range needs count >= 1 and min <= max, got {self:?}"
            )));
        }
        Ok(())
    }

    pub fn values(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.min];
        }
        let step = (self.max - self.min) / (self.count - 1) as f64;
        (0..self.count)
            .map(|k| {
                if k + 1 == self.count {
                    self.max
                } else {
                    self.min + k as f64 * step
                }
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Outputs {
    pub concurrence: bool,
    pub delta: bool,
    pub purity: bool,
    pub populations: bool,
}

impl Outputs {
    pub fn all() -> Self {
        Outputs {
            concurrence: true,
            delta: true,
            purity: true,
            populations: true,
        }
    }

    /// Parses a comma-separated subset of `concurrence,delta,purity,populations`.
    pub fn parse(list: &str) -> Result<Self> {
        let mut out = Outputs {
            concurrence: false,
            delta: false,
            purity: false,
            populations: false,
        };
        for item in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            match item {
                "concurrence" => out.concurrence = true,
                "delta" => out.delta = true,
                "purity" => out.purity = true,
                "populations" => out.populations = true,
                "all" => out = Outputs::all(),
                other => return Err(Error::InvalidParams(format!("unknown output '{other}'"))),
            }
        }
        Ok(out)
    }
}

impl Default for Outputs {
    fn default() -> Self {
        Self::all()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub mode: DriveMode,
    pub j: f64,
    pub alpha_range: Range,
    pub eta_range: Range,
    pub gamma: f64,
    pub outputs: Outputs,
    /// Also solve numerically and report the Frobenius distance.
    pub cross_check: bool,
}

impl SweepConfig {
    /// Default grid: α ∈ [0, 3] and η ∈ [0, 0.5], 50 points each.
    pub fn new(mode: DriveMode, j: f64) -> Self {
        SweepConfig {
            mode,
            j,
            alpha_range: Range {
                min: 0.0,
                max: 3.0,
                count: 50,
            },
            eta_range: Range {
                min: 0.0,
                max: 0.5,
                count: 50,
            },
            gamma: 1.0,
            outputs: Outputs::all(),
            cross_check: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.alpha_range.validate()?;
        self.eta_range.validate()?;
        if self.eta_range.min < 0.0 {
            return Err(Error::InvalidParams(
                "eta range must be non-negative".into(),
            ));
        }
        ModelParams::with_gamma(0.0, 0.0, self.j, self.gamma, self.mode)?;
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CsvRow {
    pub mode: DriveMode,
    pub j: f64,
    pub gamma: f64,
    pub alpha: f64,
    pub eta: f64,
    pub concurrence: Option<f64>,
    pub delta: Option<f64>,
    pub purity: Option<f64>,
    pub populations: Option<[f64; 4]>,
    pub residual: Option<f64>,
}

pub const CSV_HEADER: &str =
    "mode,j,gamma,alpha,eta,concurrence,delta,purity,pop00,pop01,pop10,pop11,residual";

/// 17 significant digits, dot decimal separator.
pub fn fmt_f64(x: f64) -> String {
    // `+ 0.0` folds −0 into +0
    format!("{:.16e}", x + 0.0)
}

fn fmt_opt(x: Option<f64>) -> String {
    x.map(fmt_f64).unwrap_or_default()
}

impl CsvRow {
    pub fn to_csv(&self) -> String {
        let mut s = String::new();
        let pops = match self.populations {
            Some(p) => p.map(fmt_f64).join(","),
            None => ",,,".to_string(),
        };
        write!(
            s,
            "{},{},{},{},{},{},{},{},{},{}",
            self.mode,
            fmt_f64(self.j),
            fmt_f64(self.gamma),
            fmt_f64(self.alpha),
            fmt_f64(self.eta),
            fmt_opt(self.concurrence),
            fmt_opt(self.delta),
            fmt_opt(self.purity),
            pops,
            fmt_opt(self.residual),
        )
        .expect("write to String");
        s
    }
}

/// A grid point that failed; rendered with `NaN` value columns.
#[derive(Debug, Clone, PartialEq)]
pub struct RowError {
    pub alpha: f64,
    pub eta: f64,
    pub error: Error,
}

pub type SweepRow = std::result::Result<CsvRow, RowError>;

pub fn error_row_csv(cfg: &SweepConfig, err: &RowError) -> String {
    format!(
        "{},{},{},{},{},NaN,NaN,NaN,NaN,NaN,NaN,NaN,NaN",
        cfg.mode,
        fmt_f64(cfg.j),
        fmt_f64(cfg.gamma),
        fmt_f64(err.alpha),
        fmt_f64(err.eta)
    )
}

/// Steady state from the closed form, falling back to the numeric solver
/// when the closed-form denominator degenerates.
pub fn steady_state_point(p: &ModelParams) -> Result<DensityMatrix> {
    match closed_form_steady(p) {
        Ok(sol) => Ok(sol.assembled),
        Err(Error::SingularDenominator { .. }) => {
            warn!("singular closed-form denominator at {p:?}; using numeric solver");
            Ok(solve_steady(&build_liouvillian(p))?.rho)
        }
        Err(e) => Err(e),
    }
}

fn evaluate(cfg: &SweepConfig, alpha: f64, eta: f64) -> Result<CsvRow> {
    let p = ModelParams::with_gamma(alpha, eta, cfg.j, cfg.gamma, cfg.mode)?;
    let rho = steady_state_point(&p)?;
    let need_c = cfg.outputs.concurrence || cfg.outputs.delta;
    let c = if need_c {
        Some(concurrence(&rho)?.c)
    } else {
        None
    };
    let delta = if cfg.outputs.delta {
        let clean = ModelParams { eta: 0.0, ..p };
        let c0 = concurrence(&steady_state_point(&clean)?)?.c;
        Some((c.unwrap_or(0.0) - c0).max(0.0))
    } else {
        None
    };
    let residual = if cfg.cross_check {
        let numeric = solve_steady(&build_liouvillian(&p))?;
        Some(numeric.rho.distance(&rho))
    } else {
        None
    };
    Ok(CsvRow {
        mode: cfg.mode,
        j: cfg.j,
        gamma: cfg.gamma,
        alpha,
        eta,
        concurrence: if cfg.outputs.concurrence { c } else { None },
        delta,
        purity: cfg.outputs.purity.then(|| rho.purity()),
        populations: cfg.outputs.populations.then(|| rho.populations()),
        residual,
    })
}

/// Evaluates every grid point; rows come back α-major (η varies fastest)
/// regardless of how the work was scheduled.
pub fn run_sweep(cfg: &SweepConfig) -> Result<Vec<SweepRow>> {
    cfg.validate()?;
    let alphas = cfg.alpha_range.values();
    let etas = cfg.eta_range.values();
    let points: Vec<(f64, f64)> = alphas
        .iter()
        .flat_map(|&a| etas.iter().map(move |&e| (a, e)))
        .collect();
    Ok(points
        .par_iter()
        .map(|&(alpha, eta)| {
            evaluate(cfg, alpha, eta).map_err(|error| RowError { alpha, eta, error })
        })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ValidationReport {
    pub mode: DriveMode,
    pub samples: usize,
    /// Largest Frobenius distance between closed-form and numeric states.
    pub max_error: f64,
    pub worst_point: (f64, f64, f64),
}

/// Compares closed-form and numeric steady states at `samples` random points
/// with α ∈ [0, 4], η ∈ [0, 1], J ∈ [0, 4] and γ = 1.
pub fn cross_validate(mode: DriveMode, samples: usize, seed: u64) -> Result<ValidationReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let points: Vec<(f64, f64, f64)> = (0..samples)
        .map(|_| {
            (
                rng.gen_range(0.0..4.0),
                rng.gen_range(0.0..1.0),
                rng.gen_range(0.0..4.0),
            )
        })
        .collect();
    let errors: Vec<f64> = points
        .par_iter()
        .map(|&(a, e, j)| {
            let p = ModelParams::new(a, e, j, mode)?;
            let closed = closed_form_steady(&p)?;
            let numeric = solve_steady(&build_liouvillian(&p))?;
            Ok(closed.assembled.distance(&numeric.rho))
        })
        .collect::<Result<_>>()?;
    let (k, max_error) =
        errors.iter().copied().enumerate().fold(
            (0, 0.0),
            |best, (k, e)| if e > best.1 { (k, e) } else { best },
        );
    Ok(ValidationReport {
        mode,
        samples,
        max_error,
        worst_point: points.get(k).copied().unwrap_or_default(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_values() {
        assert_eq!(Range::new(0.0, 1.0, 1).unwrap().values(), vec![0.0]);
        assert_eq!(
            Range::new(0.0, 1.0, 3).unwrap().values(),
            vec![0.0, 0.5, 1.0]
        );
        assert!(Range::new(1.0, 0.0, 3).is_err());
        assert!(Range::new(0.0, 1.0, 0).is_err());
    }

    #[test]
    fn outputs_parse() {
        let o = Outputs::parse("delta, purity").unwrap();
        assert!(o.delta && o.purity && !o.concurrence && !o.populations);
        assert!(Outputs::parse("entropy").is_err());
    }

    #[test]
    fn single_point_origin() {
        let mut cfg = SweepConfig::new(DriveMode::Common, 0.0);
        cfg.alpha_range = Range::new(0.0, 0.0, 1).unwrap();
        cfg.eta_range = Range::new(0.0, 0.0, 1).unwrap();
        let rows = run_sweep(&cfg).unwrap();
        assert_eq!(rows.len(), 1);
        let row = rows[0].as_ref().unwrap();
        assert_eq!(row.populations.unwrap()[3], 1.0);
        assert_eq!(row.concurrence, Some(0.0));
        assert_eq!(
            row.to_csv().split(',').count(),
            CSV_HEADER.split(',').count()
        );
    }

    #[test]
    fn unrequested_columns_are_blank() {
        let mut cfg = SweepConfig::new(DriveMode::Independent, 1.0);
        cfg.alpha_range = Range::new(0.5, 0.5, 1).unwrap();
        cfg.eta_range = Range::new(0.1, 0.1, 1).unwrap();
        cfg.outputs = Outputs::parse("purity").unwrap();
        let rows = run_sweep(&cfg).unwrap();
        let line = rows[0].as_ref().unwrap().to_csv();
        let cols: Vec<&str> = line.split(',').collect();
        assert_eq!(cols[5], "");
        assert!(!cols[7].is_empty());
        assert_eq!(cols[12], "");
    }

    #[test]
    fn number_format_round_trips() {
        for x in [0.1, 1.0 / 3.0, 1e-300, -2.5e17, 0.0] {
            assert_eq!(fmt_f64(x).parse::<f64>().unwrap(), x);
        }
    }
}
