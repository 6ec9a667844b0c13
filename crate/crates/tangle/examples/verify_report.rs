//! Run the numerical verification in-process: the chart identity at
//! seeded random angles, chart round trips, and feature stations, with
//! the JSON report printed to stdout.
//!
//! ```text
//! cargo run -p tangle --example verify_report
//! ```

use tangle::config::RunConfig;
use tangle::verify::verify_scene;

fn main() -> tangle::Result<()> {
    let config = RunConfig::from_json(
        r#"{
        "curve": {
            "kind": "curvature_s",
            "kappa": "s",
            "domain": [-2.2, 2.2],
            "start_point": [2.0, 0.0],
            "base_c": 0.0
        },
        "theta_step": 0.25,
        "surface": {"enabled": true, "u_count": 32, "include_faces": false,
                    "flip_orientation": false},
        "seed": 42,
        "outputs": [{"format": "report", "path": "unused.json"}]
    }"#,
    )?;
    let scene = config.build_scene()?;
    let report = verify_scene(&scene, 50, config.seed)?;
    print!("{}", report.to_json());
    assert!(report.pass);
    Ok(())
}
