use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use digimetric::format::{parse_image, ImageFormat};
use digimetric::shapes::ShapeFamily;
use tempfile::TempDir;

fn digimetric(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_digimetric"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn arg(p: &Path) -> &str {
    p.to_str().unwrap()
}

/// Generates `family` at size `n` into `dir`, returning the written paths.
fn gen(dir: &TempDir, family: &str, n: i64, name: &str) -> Vec<PathBuf> {
    let base = dir.path().join(name);
    let out = digimetric(&["gen", family, "--n", &n.to_string(), "--out", arg(&base)]);
    assert!(out.status.success(), "{}", stderr(&out));
    stdout(&out)
        .lines()
        .map(|l| PathBuf::from(l.rsplit_once(' ').unwrap().0))
        .collect()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path
}

#[test]
fn rect_and_c_distances() {
    let dir = TempDir::new().unwrap();
    let ab = gen(&dir, "rect-and-c", 5, "rect.grid");
    let c = gen(&dir, "baseline", 5, "c.grid").remove(0);
    let (a, b) = (&ab[0], &ab[1]);
    assert!(a.ends_with("rect-A.grid") && b.ends_with("rect-B.grid"));

    let out = digimetric(&["dist", "--metric", "hausdorff", "--p", "1", arg(a), arg(b)]);
    assert_eq!((out.status.code(), stdout(&out).as_str()), (Some(0), "1\n"));

    for (u, want) in [("1", "7\n"), ("2", "6\n")] {
        let out = digimetric(&[
            "dist",
            "--metric",
            "hausdorff-path",
            "--u",
            u,
            "--ambient",
            arg(b),
            arg(b),
            arg(&c),
        ]);
        assert_eq!(stdout(&out), want, "u={u}");
    }

    let out = digimetric(&[
        "dist",
        "--metric",
        "hausdorff",
        "--metric",
        "diam-diff",
        arg(a),
        arg(b),
    ]);
    assert_eq!(stdout(&out), "1\n");
    let out = digimetric(&[
        "dist",
        "--metric",
        "diam-diff-path",
        "--u",
        "2",
        arg(a),
        arg(b),
    ]);
    assert_eq!(stdout(&out), "5\n");
}

#[test]
fn snake_diameter_difference() {
    let dir = TempDir::new().unwrap();
    let q = gen(&dir, "full-square", 6, "q.grid").remove(0);
    let s = gen(&dir, "square-snake", 6, "s.grid").remove(0);
    let out = digimetric(&[
        "dist",
        "--metric",
        "diam-diff-path",
        "--u",
        "1",
        arg(&q),
        arg(&s),
    ]);
    assert_eq!(stdout(&out), "18\n");
    let out = digimetric(&["dist", "--metric", "diam-diff", arg(&q), arg(&s)]);
    assert_eq!(stdout(&out), "0\n");
    let grid = fs::read_to_string(&s).unwrap();
    assert_eq!(grid.matches('#').count(), 31);
    assert_eq!(grid, include_str!("golden/square_snake_6.grid"));
}

#[test]
fn annulus_pair_and_continuity() {
    let dir = TempDir::new().unwrap();
    let base = dir.path().join("ann.grid");
    let out = digimetric(&["gen", "square-annulus", "--n", "2", "--out", arg(&base)]);
    let listing = stdout(&out);
    let lines: Vec<&str> = listing.lines().collect();
    assert!(
        lines[0].ends_with("ann-X.grid 16") && lines[1].ends_with("ann-Y.grid 15"),
        "{listing}"
    );

    let x = dir.path().join("ann-X.grid");
    let y = dir.path().join("ann-Y.grid");
    let out = digimetric(&["dist", "--metric", "hausdorff", arg(&x), arg(&y)]);
    assert_eq!(stdout(&out), "1\n");
    let out = digimetric(&["dist", "--metric", "continuity", arg(&x), arg(&y)]);
    assert_eq!(stdout(&out), "4\n");
    let out = digimetric(&[
        "dist",
        "--metric",
        "continuity",
        "--budget",
        "2",
        arg(&x),
        arg(&y),
    ]);
    assert_eq!(out.status.code(), Some(3));
    let out = digimetric(&[
        "dist",
        "--metric",
        "continuity",
        "--metric",
        "hausdorff",
        arg(&x),
        arg(&y),
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn real_values_and_weights() {
    let dir = TempDir::new().unwrap();
    let a = write(&dir, "a.coords", "0 0\n");
    let b = write(&dir, "b.coords", "# diagonal neighbour\n1 1\n");
    let out = digimetric(&[
        "dist",
        "--metric",
        "hausdorff",
        "--p",
        "2",
        arg(&a),
        arg(&b),
    ]);
    assert_eq!(stdout(&out), "1.414213562\n");
    let cycle = write(&dir, "cycle.grid", "##\n##\n");
    let point = write(&dir, "point.grid", "#\n");
    let out = digimetric(&[
        "dist",
        "--metric",
        "euler-diff",
        "--weight",
        "2",
        arg(&cycle),
        arg(&point),
    ]);
    assert_eq!(stdout(&out), "2\n");
    let out = digimetric(&[
        "dist",
        "--metric",
        "euler-diff",
        "--u",
        "2",
        arg(&cycle),
        arg(&point),
    ]);
    assert_eq!(stdout(&out), "0\n");
    let gap = write(&dir, "gap.grid", "#.#\n");
    let out = digimetric(&["dist", "--metric", "diam-diff-path", arg(&gap), arg(&point)]);
    assert_eq!(stdout(&out), "inf\n");
}

#[test]
fn three_dimensional_coords() {
    let dir = TempDir::new().unwrap();
    let a = write(&dir, "a.coords", "0 0 0\n1 0 0\n");
    let b = write(&dir, "b.coords", "0 0 0\n");
    let out = digimetric(&["dist", "--metric", "diam-diff-path", arg(&a), arg(&b)]);
    assert_eq!(stdout(&out), "1\n");
    let flat = write(&dir, "flat.coords", "0 0\n");
    let out = digimetric(&["dist", "--metric", "hausdorff", arg(&a), arg(&flat)]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn input_errors() {
    let dir = TempDir::new().unwrap();
    let ok = write(&dir, "ok.grid", "#\n");
    let cases = [
        ("ragged.grid", "##\n#\n", "expected 2 columns"),
        ("empty.grid", "..\n", "no points"),
        ("mixed.coords", "0 0\n1 0 0\n", "expected 2 coordinates"),
        ("bad.coords", "0 x\n", "not an integer"),
        ("noext", "#\n", "cannot infer the format"),
    ];
    let mut messages = Vec::new();
    for (name, text, needle) in cases {
        let path = write(&dir, name, text);
        let out = digimetric(&["dist", "--metric", "hausdorff", arg(&path), arg(&ok)]);
        assert_eq!(out.status.code(), Some(1), "{name}");
        assert!(stderr(&out).contains(needle), "{name}: {}", stderr(&out));
        messages.push(stderr(&out));
    }
    let out = digimetric(&[
        "dist",
        "--metric",
        "hausdorff",
        "--u",
        "3",
        arg(&ok),
        arg(&ok),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("outside [1, 2]"));
    let missing = dir.path().join("missing.grid");
    let out = digimetric(&["dist", "--metric", "hausdorff", arg(&missing), arg(&ok)]);
    assert_eq!(out.status.code(), Some(1));
    messages.sort();
    messages.dedup();
    assert_eq!(messages.len(), cases.len());
}

#[test]
fn containment_violation_is_semantic() {
    let dir = TempDir::new().unwrap();
    let ambient = write(&dir, "amb.grid", "##\n");
    let far = write(&dir, "far.grid", "..#\n");
    let out = digimetric(&[
        "dist",
        "--metric",
        "hausdorff-path",
        "--ambient",
        arg(&ambient),
        arg(&ambient),
        arg(&far),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("outside the ambient"));
    let out = digimetric(&[
        "dist",
        "--metric",
        "hausdorff-path",
        arg(&ambient),
        arg(&far),
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn gen_rejects_invalid_sizes() {
    for args in [
        ["gen", "square-snake", "--n", "5"],
        ["gen", "full-square", "--n", "0"],
    ] {
        assert_eq!(digimetric(&args).status.code(), Some(2));
    }
    assert_eq!(
        digimetric(&["gen", "hexagon", "--n", "3"]).status.code(),
        Some(1)
    );
}

#[test]
fn generated_files_round_trip() {
    let dir = TempDir::new().unwrap();
    for family in ShapeFamily::ALL {
        for n in 1..=10 {
            let Ok(expected) = family.generate(n, 1) else {
                continue;
            };
            let base = dir.path().join(format!("{family}-{n}.coords"));
            let out = digimetric(&[
                "gen",
                family.name(),
                "--n",
                &n.to_string(),
                "--format",
                "coords",
                "--out",
                arg(&base),
            ]);
            assert!(out.status.success());
            let paths: Vec<String> = stdout(&out)
                .lines()
                .map(|l| l.rsplit_once(' ').unwrap().0.to_owned())
                .collect();
            assert_eq!(paths.len(), expected.len());
            for (path, (_, image)) in paths.iter().zip(&expected) {
                let text = fs::read_to_string(path).unwrap();
                assert_eq!(
                    &parse_image(&text, ImageFormat::Coords, 1).unwrap(),
                    image,
                    "{family} n={n}"
                );
            }
        }
    }
}

#[test]
fn verify_matches_golden_and_is_deterministic() {
    let first = digimetric(&["verify"]);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(stdout(&first), include_str!("golden/verify_default.txt"));
    assert_eq!(digimetric(&["verify"]).stdout, first.stdout);
}

#[test]
fn verify_recomputes_expectations_and_reports_failures() {
    let out = digimetric(&["verify", "--snake-n", "4", "--snake-n", "8"]);
    assert_eq!(out.status.code(), Some(0));
    let report = stdout(&out);
    assert!(report.contains("snake[n=4].diam-c1-S 16 16 PASS"));
    assert!(report.contains("snake[n=8].diam-c1-S 48 48 PASS"));

    let out = digimetric(&["verify", "--corrupt", "baseline[n=5].H-path-c1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("baseline[n=5].H-path-c1 7 8 FAIL"));

    let out = digimetric(&["verify", "--budget", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("annulus[n=2].delta-l1 - >=3 SKIPPED"));

    assert_eq!(
        digimetric(&["verify", "--snake-n", "3"]).status.code(),
        Some(2)
    );
}
