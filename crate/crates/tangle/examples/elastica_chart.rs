//! The tangential-angle chart of the elastica: theta(s) = asin(x(s)^2)
//! on the positive arm. Demonstrates the forward chart, its inversion,
//! and the theta-versus-s plot. Writes `out/elastica_theta.svg`.
//!
//! ```text
//! cargo run -p tangle --example elastica_chart
//! ```

use std::f64::consts::FRAC_PI_6;

use tangle::numerics::ToleranceConfig;
use tangle::render::emit_svg_theta_plot;
use tangle::synthesis::builtin_curve;

fn main() -> tangle::Result<()> {
    let tol = ToleranceConfig::default();
    let elastica = builtin_curve("elastica", None, &tol)?;

    let segments = elastica.stratify(&tol)?;
    println!(
        "elastica splits at its inflection into {} charts",
        segments.len()
    );

    // positive arm, chart based at the inflection
    let (lo, hi) = segments[1].s_range();
    let arm = segments[1].with_base_point(0.0f64.clamp(lo, hi))?;
    println!(
        "chart range: theta in ({:.6}, {:.6})",
        arm.theta_min(),
        arm.theta_max()
    );

    // theta(x) = asin(x^2), so theta = pi/6 lands at x = sqrt(1/2)
    let s = arm.s_of_theta(FRAC_PI_6)?;
    let frame = elastica.frame_at_s(s)?;
    println!(
        "theta = pi/6: s = {s:.9}, x = {:.9} (sqrt(sin(pi/6)) = {:.9})",
        frame.position.x,
        0.5f64.sqrt()
    );

    // round trip through the chart
    let back = arm.theta_of_s(s)?;
    println!(
        "round trip theta -> s -> theta error: {:.3e}",
        (back - FRAC_PI_6).abs()
    );

    let svg = emit_svg_theta_plot(&arm, 256, Some(0.1))?;
    std::fs::create_dir_all("out")?;
    std::fs::write("out/elastica_theta.svg", &svg)?;
    println!("wrote out/elastica_theta.svg ({} bytes)", svg.len());
    Ok(())
}
