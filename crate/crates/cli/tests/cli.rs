// Copyright 2026 dimerss contributors
// SPDX-License-Identifier: Apache-2.0

use std::process::{Command, Output};

fn dimerss(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dimerss"))
        .args(args)
        .env_remove("DIMERSS_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn csv(o: &Output) -> (Vec<String>, Vec<Vec<String>>) {
    let text = stdout(o);
    let mut lines = text.lines();
    let header = lines.next().unwrap().split(',').map(String::from).collect();
    let rows = lines
        .map(|l| l.split(',').map(String::from).collect())
        .collect();
    (header, rows)
}

fn column(header: &[String], name: &str) -> usize {
    header
        .iter()
        .position(|h| h == name)
        .unwrap_or_else(|| panic!("no column {name}"))
}

#[test]
fn steady_at_origin_is_the_ground_state() {
    let o = dimerss(&["steady", "--j", "0", "--alpha", "0", "--eta", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let rows: Vec<Vec<f64>> = text
        .lines()
        .skip_while(|l| *l != "rho")
        .skip(1)
        .take(4)
        .map(|l| {
            l.split(' ')
                .map(|z| {
                    let cut = z[1..].find(['+', '-']).map(|k| k + 1).unwrap();
                    let re: f64 = z[..cut].parse().unwrap();
                    let im: f64 = z[cut..z.len() - 1].parse().unwrap();
                    assert_eq!(im, 0.0);
                    re
                })
                .collect()
        })
        .collect();
    for (i, row) in rows.iter().enumerate() {
        for (k, &v) in row.iter().enumerate() {
            assert_eq!(v, if i == 3 && k == 3 { 1.0 } else { 0.0 });
        }
    }
    assert!(text.contains("concurrence=0.0000000000000000e0"));
    assert!(text.contains("f2="));
}

#[test]
fn steady_cross_check_reports_a_residual() {
    let o = dimerss(&[
        "steady",
        "--alpha",
        "0.8",
        "--eta",
        "0.1",
        "--mode",
        "independent",
        "--cross-check",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let line = stdout(&o)
        .lines()
        .find(|l| l.starts_with("residual="))
        .unwrap()
        .to_string();
    let r: f64 = line["residual=".len()..].parse().unwrap();
    assert!(r < 1e-9);
}

#[test]
fn usage_errors_exit_with_one() {
    for args in [
        vec!["steady", "--mode", "both"],
        vec!["steady", "--eta", "-1"],
        vec!["steady", "--gamma", "0"],
        vec!["sweep", "--alpha-range", "1,0,5"],
        vec!["sweep", "--alpha-range", "0,1"],
        vec!["sweep", "--outputs", "entropy"],
        vec!["frobnicate"],
        vec!["steady", "--no-such-flag"],
        vec!["steady", "--threads", "0"],
        vec![],
    ] {
        let o = dimerss(&args);
        assert_eq!(
            o.status.code(),
            Some(1),
            "{args:?}: {}",
            String::from_utf8_lossy(&o.stderr)
        );
    }
    assert_eq!(dimerss(&["--help"]).status.code(), Some(0));
}

#[test]
fn sweep_is_deterministic_across_thread_counts() {
    let args = [
        "sweep",
        "--alpha-range",
        "0,2,7",
        "--eta-range",
        "0,0.3,5",
        "--mode",
        "both",
    ];
    let one = dimerss(&[&args[..], &["--threads", "1"]].concat());
    let three = dimerss(&[&args[..], &["--threads", "3"]].concat());
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, three.stdout);
    let via_env = Command::new(env!("CARGO_BIN_EXE_dimerss"))
        .args(args)
        .env("DIMERSS_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(one.stdout, via_env.stdout);
    let (header, rows) = csv(&one);
    assert_eq!(
        header.join(","),
        "mode,j,gamma,alpha,eta,concurrence,delta,purity,pop00,pop01,pop10,pop11,residual"
    );
    assert_eq!(rows.len(), 2 * 7 * 5);
    let (ia, ie) = (column(&header, "alpha"), column(&header, "eta"));
    // α outer, η inner
    assert_eq!(rows[0][ia], rows[4][ia]);
    assert_ne!(rows[0][ie], rows[1][ie]);
    for row in &rows {
        let pops: f64 = ["pop00", "pop01", "pop10", "pop11"]
            .iter()
            .map(|n| row[column(&header, n)].parse::<f64>().unwrap())
            .sum();
        assert!((pops - 1.0).abs() < 1e-8);
        let c: f64 = row[column(&header, "concurrence")].parse().unwrap();
        assert!((0.0..=1.0).contains(&c));
        assert_eq!(row[column(&header, "residual")], "");
    }
}

#[test]
fn sweep_cross_check_residuals_are_small() {
    let o = dimerss(&[
        "sweep",
        "--alpha-range",
        "0,3,6",
        "--eta-range",
        "0,0.5,6",
        "--cross-check",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let (header, rows) = csv(&o);
    let ir = column(&header, "residual");
    for row in rows {
        assert!(row[ir].parse::<f64>().unwrap() < 1e-9);
    }
}

#[test]
fn single_point_sweep_at_origin() {
    let o = dimerss(&[
        "sweep",
        "--j",
        "0",
        "--alpha-range",
        "0,0,1",
        "--eta-range",
        "0,0,1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let (header, rows) = csv(&o);
    assert_eq!(rows.len(), 1);
    assert_eq!(
        rows[0][column(&header, "pop11")].parse::<f64>().unwrap(),
        1.0
    );
    assert_eq!(
        rows[0][column(&header, "concurrence")]
            .parse::<f64>()
            .unwrap(),
        0.0
    );
}

#[test]
fn delta_reports_only_the_gain() {
    let o = dimerss(&[
        "delta",
        "--alpha-range",
        "0.1,0.2,2",
        "--eta-range",
        "0,0.05,3",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let (header, rows) = csv(&o);
    let id = column(&header, "delta");
    assert_eq!(rows[0][column(&header, "concurrence")], "");
    assert!(rows.iter().any(|r| r[id].parse::<f64>().unwrap() > 0.0));
}

#[test]
fn snr_table_orders_the_modes() {
    let o = dimerss(&["snr", "--j-list", "1,2", "--mode", "both"]);
    assert_eq!(o.status.code(), Some(0));
    let (header, rows) = csv(&o);
    assert_eq!(header.join(","), "mode,j,alpha_star,c_star,eta_star,snr");
    assert_eq!(rows.len(), 4);
    let snr = |mode: &str, j: f64| -> f64 {
        rows.iter()
            .find(|r| r[0] == mode && r[1].parse::<f64>().unwrap() == j)
            .unwrap()[5]
            .parse()
            .unwrap()
    };
    for j in [1.0, 2.0] {
        assert!(snr("independent", j) >= snr("common", j));
    }
    assert!((snr("common", 2.0) - 1.4).abs() < 0.2);
}

#[test]
fn validate_passes_and_reports_the_error() {
    let o = dimerss(&["validate", "--samples", "100", "--mode", "both"]);
    assert_eq!(o.status.code(), Some(0));
    let (header, rows) = csv(&o);
    assert_eq!(rows.len(), 2);
    for row in rows {
        assert!(row[column(&header, "max_error")].parse::<f64>().unwrap() < 1e-9);
    }
}

#[test]
fn traj_is_reproducible_and_flags_mismatches() {
    let args = [
        "traj",
        "--eta",
        "0.1",
        "--n-traj",
        "16",
        "--t-end",
        "30",
        "--dt",
        "0.01",
        "--threads",
        "2",
    ];
    let a = dimerss(&args);
    let b = dimerss(&args);
    assert_eq!(
        a.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&a.stderr)
    );
    assert_eq!(a.stdout, b.stdout);
    let short = dimerss(&[
        "traj", "--eta", "0.1", "--n-traj", "16", "--t-end", "0.2", "--dt", "0.01",
    ]);
    assert_eq!(short.status.code(), Some(3));
    let unstable = dimerss(&["traj", "--dt", "0.5", "--n-traj", "2", "--t-end", "1"]);
    assert_ne!(unstable.status.code(), Some(0));
}

#[test]
fn out_flag_writes_a_file() {
    let path = std::env::temp_dir().join(format!("dimerss-cli-{}.csv", std::process::id()));
    let o = dimerss(&["snr", "--j-list", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert!(text.starts_with("mode,j,alpha_star"));
    assert_eq!(text.lines().count(), 2);
}
