#[path = "../../core/tests/oracle/mod.rs"]
mod oracle;

use std::path::PathBuf;
use std::process::{Command, Output};

use num_rational::BigRational;
use num_traits::{One, Zero};

fn quadpoints(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quadpoints"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .display()
        .to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn summary_value(csv: &str, key: &str) -> String {
    csv.lines()
        .skip_while(|l| *l != "# summary")
        .find_map(|l| l.strip_prefix(&format!("{key},")))
        .unwrap_or_else(|| panic!("no summary key {key}"))
        .to_string()
}

fn data_rows(csv: &str) -> Vec<&str> {
    csv.lines().skip(1).take_while(|l| !l.is_empty()).collect()
}

/// `x + y√D` with `D` not a square.
#[derive(Clone)]
struct Surd(BigRational, BigRational);

fn mul(d: &BigRational, p: &Surd, q: &Surd) -> Surd {
    Surd(&p.0 * &q.0 + d * &p.1 * &q.1, &p.0 * &q.1 + &p.1 * &q.0)
}

fn rational_square(x: &BigRational) -> Option<BigRational> {
    let r = |n: &num_bigint::BigInt| oracle::is_square_big(n).then(|| n.sqrt());
    Some(BigRational::new(r(x.numer())?, r(x.denom())?))
}

/// Nonzero squares of ℚ(√D): `r² + Ds² = x`, `2rs = y`.
fn is_nonzero_square(d: &BigRational, u: &Surd) -> bool {
    if u.0.is_zero() && u.1.is_zero() {
        return false;
    }
    if u.1.is_zero() {
        return rational_square(&u.0).is_some() || rational_square(&(&u.0 / d)).is_some();
    }
    let Some(n) = rational_square(&(&u.0 * &u.0 - d * &u.1 * &u.1)) else {
        return false;
    };
    let half = BigRational::new(1.into(), 2.into());
    [(&u.0 + &n) * &half, (&u.0 - &n) * &half]
        .iter()
        .any(|r2| !r2.is_zero() && rational_square(r2).is_some())
}

/// Audit rows of `w² = x^k + y^k` with height at most `ln h`, counted by brute force.
fn binary_form_rows(k: u32, h: i64) -> usize {
    let mut rows = 0;
    // rational bases with an inert fiber
    for a in -h..=h {
        for b in 0..=h {
            if oracle::gcd(a, b) != 1 || (b == 0 && a != 1) {
                continue;
            }
            if !oracle::is_square(a.pow(k) + b.pow(k)) {
                rows += 1;
            }
        }
    }
    // quadratic bases [α:1] whose fiber splits
    let m = h * h;
    for a in 1..=m {
        for b in -2 * m..=2 * m {
            for c in -m..=m {
                let disc = b * b - 4 * a * c;
                if c == 0 || oracle::gcd(oracle::gcd(a, b), c) != 1 || oracle::is_square(disc) {
                    continue;
                }
                if oracle::log_mahler_measure(a, b, c) > 2.0 * (h as f64).ln() + 1e-9 {
                    continue;
                }
                let d = oracle::q(disc);
                let alpha = Surd(BigRational::new((-b).into(), (2 * a).into()), BigRational::new(1.into(), (2 * a).into()));
                let mut power = Surd(BigRational::one(), BigRational::zero());
                for _ in 0..k {
                    power = mul(&d, &power, &alpha);
                }
                let value = Surd(power.0 + BigRational::one(), power.1);
                if is_nonzero_square(&d, &value) {
                    rows += 1;
                }
            }
        }
    }
    rows
}

#[test]
fn decic_audit_matches_brute_force_count() {
    let out = quadpoints(&["audit", "--cover", &data("decic_p1.json"), "--height-bound", "log(5)"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let csv = stdout(&out);
    let expected = binary_form_rows(10, 5);
    assert_eq!(data_rows(&csv).len(), expected);
    assert_eq!(summary_value(&csv, "rows"), expected.to_string());
}

#[test]
fn sextic_audit_has_the_split_sqrt_two_row() {
    let out = quadpoints(&["audit", "--cover", &data("sextic_p1.json"), "--height-bound", "log(3)"]);
    assert!(out.status.success());
    let csv = stdout(&out);
    assert!(csv.starts_with("point_id,field_d,base_height,canonical_height,disc,contracted,slack,marginal\n"));
    assert!(!csv.contains('\r'));
    let row = data_rows(&csv)
        .into_iter()
        .find(|r| r.starts_with("[1:-1/2*sqrt(2)],") || r.starts_with("[1:1/2*sqrt(2)],"))
        .expect("split row over Q(sqrt 2)");
    let fields: Vec<&str> = row.split(',').collect();
    assert_eq!(fields[1], "2");
    assert_eq!(fields[5], "false");
    assert_eq!(data_rows(&csv).len(), binary_form_rows(6, 3));
}

#[test]
fn worker_count_does_not_change_bytes() {
    let run = |w: &str| {
        stdout(&quadpoints(&[
            "audit",
            "--cover",
            &data("sextic_p1.json"),
            "--height-bound",
            "log(4)",
            "--workers",
            w,
        ]))
    };
    assert_eq!(run("1"), run("4"));
    let pts = |w: &str| stdout(&quadpoints(&["generate-points", "--sections", "2", "--workers", w]));
    assert_eq!(pts("1"), pts("4"));
}

#[test]
fn generator_row_and_conic_rows() {
    let csv = stdout(&quadpoints(&["generate-points", "--m", "4", "--t-values", "2", "--sections", "1"]));
    assert!(data_rows(&csv).contains(&"2,1,1,16,1,true,false,true"));

    let csv = stdout(&quadpoints(&["generate-points", "--m", "2", "--t-values", "2", "--sections", "3"]));
    let rows = data_rows(&csv);
    assert_eq!(rows.len(), 3);
    assert!(rows.iter().all(|r| r.ends_with(",true")));
}

#[test]
fn bad_fibers_go_to_exclusions() {
    let out = quadpoints(&["generate-points", "--t-values", "1,2", "--sections", "1"]);
    assert!(out.status.success());
    let csv = stdout(&out);
    let exclusions: Vec<&str> = csv.lines().skip_while(|l| *l != "# exclusions").skip(1).collect();
    assert_eq!(exclusions.len(), 2);
    assert!(exclusions.iter().all(|l| l.starts_with("t0=1 ")));
}

#[test]
fn verify_examples_exit_codes() {
    let ok = quadpoints(&["verify-examples"]);
    assert_eq!(ok.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_slice(&ok.stdout).unwrap();
    assert_eq!(json["summary"]["failed"], 0);
    assert_eq!(json["rows"].as_array().unwrap().len(), 12 + 19 * 6 + 2);

    let bad = quadpoints(&["verify-examples", "--corrupt", "family", "--n-range", "2..4"]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn input_errors_exit_with_two() {
    let missing = quadpoints(&["audit", "--cover", &data("absent.json"), "--height-bound", "1"]);
    assert_eq!(missing.status.code(), Some(2));
    let bound = quadpoints(&["audit", "--cover", &data("sextic_p1.json"), "--height-bound", "0"]);
    assert_eq!(bound.status.code(), Some(2));
    let m = quadpoints(&["generate-points", "--m", "3"]);
    assert_eq!(m.status.code(), Some(2));
    let flag = quadpoints(&["thresholds", "--r-range", "x..y"]);
    assert_eq!(flag.status.code(), Some(2));
}

#[test]
fn out_flag_and_json_format() {
    let dir = std::env::temp_dir().join(format!("quadpoints-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("thresholds.json");
    let out = quadpoints(&["thresholds", "--format", "json", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let json: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(json["summary"]["reference_1_2_2"], "pass");
    let keys: Vec<&String> = json.as_object().unwrap().keys().collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    std::fs::remove_dir_all(&dir).unwrap();
}
