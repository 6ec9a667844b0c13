//! End-to-end tests of the binary: subcommands, exit codes per failure
//! class, and gallery determinism.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_tangle"))
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("tangle-cli-{}-{name}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn write_config(dir: &Path, name: &str, json: &str) -> PathBuf {
    let path = dir.join(name);
    fs::write(&path, json).unwrap();
    path
}

fn run(cmd: &mut Command) -> Output {
    cmd.output().expect("spawn tangle binary")
}

const EULER_CONFIG: &str = r#"{
    "curve": {"kind": "builtin", "name": "euler_spiral", "base_c": 0.0},
    "theta_step": 0.5,
    "outputs": [
        {"format": "svg", "path": "euler.svg"},
        {"format": "csv", "path": "euler.csv"}
    ]
}"#;

#[test]
fn curve_subcommand_writes_outputs() {
    let dir = scratch("curve");
    let cfg = write_config(&dir, "euler.json", EULER_CONFIG);
    let out = run(bin()
        .arg("curve")
        .arg("--config")
        .arg(&cfg)
        .arg("--out-dir")
        .arg(&dir));
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert_eq!(
        stdout.lines().filter(|l| l.starts_with("wrote ")).count(),
        2
    );
    let svg = fs::read_to_string(dir.join("euler.svg")).unwrap();
    assert!(svg.starts_with("<svg"));
    // two segments, two colored paths
    assert_eq!(svg.matches("<path").count(), 2);
    assert!(svg.contains("#E69F00") && svg.contains("#0072B2"));
    let csv = fs::read_to_string(dir.join("euler.csv")).unwrap();
    assert!(csv.starts_with("k,theta,s,x,y,kappa,dkappa_ds\n"));
    fs::remove_dir_all(&dir).ok();
}

#[test]
fn surface_subcommand_emits_mesh() {
    let dir = scratch("surface");
    let cfg = write_config(
        &dir,
        "surf.json",
        r#"{
        "curve": {"kind": "curvature_s", "kappa": "s", "domain": [-2.2, 2.2],
                  "start_point": [2.0, 0.0], "base_c": 0.0},
        "theta_step": 0.25,
        "surface": {"enabled": true, "u_count": 16, "include_faces": false,
                    "flip_orientation": false},
        "outputs": [{"format": "obj", "path": "surf.obj"}]
    }"#,
    );
    let out = run(bin()
        .arg("surface")
        .arg("--config")
        .arg(&cfg)
        .arg("--out-dir")
        .arg(&dir));
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let obj = fs::read_to_string(dir.join("surf.obj")).unwrap();
    assert!(obj.contains("feature=parabolic"));
    assert!(obj.lines().filter(|l| l.starts_with("v ")).count() > 0);
    fs::remove_dir_all(&dir).ok();
}

#[test]
fn verify_subcommand_reports_pass() {
    let dir = scratch("verify");
    let cfg = write_config(
        &dir,
        "euler.json",
        r#"{
        "curve": {"kind": "builtin", "name": "euler_spiral", "base_c": 0.0},
        "theta_step": 0.5,
        "outputs": [{"format": "report", "path": "report.json"}]
    }"#,
    );
    let out = run(bin()
        .arg("verify")
        .arg("--config")
        .arg(&cfg)
        .arg("--samples")
        .arg("25")
        .arg("--out-dir")
        .arg(&dir));
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("\"pass\": true"));
    assert!(stdout.contains("identity_max_residual"));
    let report = fs::read_to_string(dir.join("report.json")).unwrap();
    assert!(report.contains("\"pass\": true"));
    fs::remove_dir_all(&dir).ok();
}

#[test]
fn exit_code_1_for_bad_config() {
    let dir = scratch("badcfg");
    // malformed JSON
    let cfg = write_config(&dir, "broken.json", "{ not json");
    let out = run(bin().arg("curve").arg("--config").arg(&cfg));
    assert_eq!(out.status.code(), Some(1));
    // schema violation
    let cfg = write_config(
        &dir,
        "schema.json",
        r#"{"curve": {"kind": "builtin", "name": "euler_spiral"}, "theta_step": 0.5,
            "outputs": [], "unknown_key": 1}"#,
    );
    let out = run(bin().arg("curve").arg("--config").arg(&cfg));
    assert_eq!(out.status.code(), Some(1));
    // expression syntax error
    let cfg = write_config(
        &dir,
        "expr.json",
        r#"{"curve": {"kind": "curvature_s", "kappa": "1 + (s", "domain": [-1, 1]},
            "theta_step": 0.5,
            "outputs": [{"format": "csv", "path": "x.csv"}]}"#,
    );
    let out = run(bin().arg("curve").arg("--config").arg(&cfg));
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("syntax error"));
    // unknown gallery name
    let out = run(bin().arg("gallery").arg("fig99_unknown"));
    assert_eq!(out.status.code(), Some(1));
    fs::remove_dir_all(&dir).ok();
}

#[test]
fn exit_code_2_for_numeric_failures() {
    let dir = scratch("numeric");
    // a straight line admits no tangential-angle chart
    let cfg = write_config(
        &dir,
        "flat.json",
        r#"{"curve": {"kind": "parametric", "x": "t", "y": "0", "domain": [-1, 1]},
            "theta_step": 0.5,
            "outputs": [{"format": "svg", "path": "x.svg"}]}"#,
    );
    let out = run(bin().arg("curve").arg("--config").arg(&cfg));
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("curvature vanishes"));
    // theta step too large: charts based at the inflection span (0, 4.5],
    // which contains no positive multiple of 100
    let cfg = write_config(
        &dir,
        "step.json",
        r#"{"curve": {"kind": "builtin", "name": "euler_spiral", "base_c": 0.0},
            "theta_step": 100.0,
            "outputs": [{"format": "csv", "path": "x.csv"}]}"#,
    );
    let out = run(bin().arg("curve").arg("--config").arg(&cfg));
    assert_eq!(out.status.code(), Some(2));
    // profile touching the axis
    let cfg = write_config(
        &dir,
        "axis.json",
        r#"{"curve": {"kind": "curvature_s", "kappa": "1", "domain": [-1, 1],
                      "start_point": [0.0, -1.0]},
            "theta_step": 0.25,
            "surface": {"enabled": true, "u_count": 8, "include_faces": false,
                        "flip_orientation": false},
            "outputs": [{"format": "obj", "path": "x.obj"}]}"#,
    );
    let out = run(bin().arg("surface").arg("--config").arg(&cfg));
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("axis"));
    fs::remove_dir_all(&dir).ok();
}

#[test]
fn exit_code_3_for_io_failures() {
    let dir = scratch("io");
    let cfg = write_config(
        &dir,
        "euler.json",
        r#"{"curve": {"kind": "builtin", "name": "euler_spiral", "base_c": 0.0},
            "theta_step": 0.5,
            "outputs": [{"format": "csv", "path": "/nonexistent-dir-tangle/x.csv"}]}"#,
    );
    // no --out-dir: the missing directory is not created
    let out = run(bin().arg("curve").arg("--config").arg(&cfg));
    assert_eq!(out.status.code(), Some(3));
    // missing config file is an I/O failure too
    let out = run(bin()
        .arg("curve")
        .arg("--config")
        .arg(dir.join("absent.json")));
    assert_eq!(out.status.code(), Some(3));
    fs::remove_dir_all(&dir).ok();
}

#[test]
fn gallery_runs_are_byte_identical() {
    let dir = scratch("gallery");
    let (a, b) = (dir.join("a"), dir.join("b"));
    for out_dir in [&a, &b] {
        let out = run(bin()
            .arg("gallery")
            .arg("fig3_euler")
            .arg("--out-dir")
            .arg(out_dir));
        assert!(
            out.status.success(),
            "{}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
    for name in ["fig3_euler.svg", "fig3_euler.csv"] {
        let x = fs::read(a.join(name)).unwrap();
        let y = fs::read(b.join(name)).unwrap();
        assert_eq!(x, y, "{name} differs across runs");
    }
    fs::remove_dir_all(&dir).ok();
}

#[test]
fn committed_gallery_configs_match_presets() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("configs");
    for figure in tangle::gallery::GalleryFigure::ALL {
        for (name, preset) in figure.configs() {
            let text = fs::read_to_string(dir.join(format!("{name}.json")))
                .unwrap_or_else(|e| panic!("missing configs/{name}.json: {e}"));
            let parsed = tangle::config::RunConfig::from_json(&text).unwrap();
            assert_eq!(
                parsed, preset,
                "configs/{name}.json drifted from the preset"
            );
        }
    }
}

#[test]
fn help_exits_zero() {
    let out = run(bin().arg("--help"));
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&out.stdout);
    for sub in ["curve", "surface", "verify", "gallery"] {
        assert!(stdout.contains(sub), "help misses {sub}");
    }
}
