//! The command-line surface: stable outputs, exit codes, and the
//! `decompose | verify` round trip.
//!
//! Snapshots live in tests/snapshots; run with `UPDATE_SNAPSHOTS=1` to
//! rewrite them after an intended format change.

mod common;

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

use common::fixture_path;
use tiling_ideals::cli::{run, run_with_input, CliOutcome};

fn domtile(args: &[&str]) -> CliOutcome {
    run(std::iter::once("domtile").chain(args.iter().copied()))
}

fn fx(name: &str) -> String {
    fixture_path(name).display().to_string()
}

fn snapshot(name: &str, actual: &str) {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/snapshots").join(format!("{name}.txt"));
    if std::env::var_os("UPDATE_SNAPSHOTS").is_some() {
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(&path, actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(actual, expected, "snapshot {name} changed");
}

#[test]
fn count_box2x3() {
    let out = domtile(&["count", &fx("box2x3")]);
    assert_eq!((out.code, out.stdout.as_str()), (0, "3\n"));
}

#[test]
fn counts_of_all_fixtures() {
    let names = [
        "box2x2", "box2x3", "box2x5", "box3x3", "box3x4", "box4x4", "box4x5", "box4x6", "box2x2x2", "trit", "ring3x3",
    ];
    let lines: String = names
        .iter()
        .map(|n| format!("{n}\t{}", domtile(&["count", &fx(n)]).stdout))
        .collect();
    snapshot("counts", &lines);
}

#[test]
fn enumerate_snapshots() {
    for name in ["box2x3", "box2x2x2", "trit"] {
        let out = domtile(&["enumerate", &fx(name)]);
        assert_eq!(out.code, 0);
        snapshot(&format!("enumerate_{name}"), &out.stdout);
    }
}

#[test]
fn ideal_snapshots() {
    for (name, which, format) in [
        ("box2x3", "toric", "plain"),
        ("box2x3", "toric", "macaulay2"),
        ("box2x2x2", "flip", "singular"),
        ("box2x2x2", "toric", "plain"),
        ("box3x4", "toric", "plain"),
        ("trit", "tiling", "plain"),
    ] {
        let out = domtile(&["ideals", &fx(name), "--which", which, "--format", format]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        snapshot(&format!("ideals_{name}_{which}_{format}"), &out.stdout);
    }
}

#[test]
fn singular_export_is_well_formed() {
    let out = domtile(&["ideals", &fx("box2x2x2"), "--which", "flip", "--format", "singular"]);
    let text = out.stdout;
    assert!(text.starts_with("ring r = 0,(y_1,"));
    assert!(text.trim_end().ends_with(';'));
    let body = text.split_once("ideal I = ").unwrap().1.trim_end().trim_end_matches(';');
    assert_eq!(body.split(',').count(), 6);
    for g in body.split(',') {
        assert!(g.trim().parse::<tiling_ideals::Binomial>().is_ok(), "{g}");
    }
}

#[test]
fn trit_connectivity() {
    let flip = domtile(&["connectivity", &fx("trit"), "--moves", "flip"]);
    assert_eq!(flip.code, 1);
    assert!(flip.stdout.starts_with("components=2 "));
    let trit = domtile(&["connectivity", &fx("trit"), "--moves", "flip+trit"]);
    assert_eq!(trit.code, 0);
    assert!(trit.stdout.starts_with("components=1 "));
}

#[test]
fn path_and_decompose_snapshots() {
    let path = domtile(&["path", &fx("box3x4"), "--t1", "1", "--t2", "11", "--moves", "flip"]);
    assert_eq!(path.code, 0);
    snapshot("path_box3x4_1_11", &path.stdout);
    let cert = domtile(&["decompose", &fx("box2x5"), "--t1", "1", "--t2", "2"]);
    assert_eq!(cert.code, 0);
    snapshot("decompose_box2x5_1_2", &cert.stdout);
}

#[test]
fn decompose_output_verifies() {
    for name in ["box2x5", "box3x4", "box4x4"] {
        for (t1, t2) in [("1", "2"), ("1", "5"), ("3", "7")] {
            for method in ["quadratic", "cycles"] {
                let cert = domtile(&["decompose", &fx(name), "--t1", t1, "--t2", t2, "--method", method]);
                assert_eq!(cert.code, 0, "{}", cert.stderr);
                let region = fx(name);
                let ok = run_with_input(["domtile", "verify", "-", "--region", &region], &cert.stdout);
                assert_eq!(ok.code, 0, "{name} {t1} {t2} {method}: {}", ok.stdout);
                assert!(ok.stdout.starts_with("ok "));
            }
        }
    }
}

#[test]
fn tampered_certificate_is_rejected() {
    let cert = domtile(&["decompose", &fx("box3x4"), "--t1", "1", "--t2", "11"]).stdout;
    let tampered = cert.replacen("+ ", "- ", 1);
    let out = run_with_input(["domtile", "verify", "-"], &tampered);
    assert_eq!(out.code, 1);
    let garbage = run_with_input(["domtile", "verify", "-"], "this is not a certificate\n");
    assert_eq!(garbage.code, 2);
}

#[test]
fn pipe_through_the_binary() {
    let bin = env!("CARGO_BIN_EXE_domtile");
    let cert = Command::new(bin)
        .args(["decompose", &fx("box2x5"), "--t1", "1", "--t2", "8"])
        .output()
        .unwrap();
    assert!(cert.status.success());
    let mut verify = Command::new(bin)
        .args(["verify", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    verify.stdin.take().unwrap().write_all(&cert.stdout).unwrap();
    let out = verify.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn sampling_is_reproducible() {
    let args = ["sample", &fx("box2x3"), "--moves", "flip", "--steps", "1000", "--samples", "300", "--seed", "4"];
    let a = domtile(&args);
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, domtile(&args).stdout);
    assert_eq!(a.stdout.lines().count(), 3);
    let total: u64 = a.stdout.lines().map(|l| l.split('\t').nth(2).unwrap().parse::<u64>().unwrap()).sum();
    assert_eq!(total, 300);
}

#[test]
fn exit_codes() {
    assert_eq!(domtile(&["count", &fx("box3x3")]).stdout, "0\n");
    assert_eq!(domtile(&["path", &fx("box2x3"), "--t1", "1", "--t2", "9", "--moves", "flip"]).code, 2);
    assert_eq!(domtile(&["decompose", &fx("ring3x3"), "--t1", "1", "--t2", "2"]).code, 1);
    assert_eq!(domtile(&["sample", &fx("box3x3"), "--moves", "flip"]).code, 1);
    assert_eq!(domtile(&["ideals", &fx("box2x3"), "--which", "nonsense"]).code, 2);
    assert_eq!(domtile(&["count"]).code, 2);
}
