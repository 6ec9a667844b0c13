//! Stratify the Euler spiral at its inflection and place markers at
//! equal increments of the tangential angle: the dots crowd together
//! exactly where the spiral winds tighter. Writes `out/euler_markers.svg`
//! and prints the marker table.
//!
//! ```text
//! cargo run -p tangle --example euler_spiral_markers
//! ```

use tangle::numerics::ToleranceConfig;
use tangle::render::{emit_svg_curve, SvgOptions};
use tangle::synthesis::builtin_curve;

fn main() -> tangle::Result<()> {
    let tol = ToleranceConfig::default();
    let spiral = builtin_curve("euler_spiral", None, &tol)?;

    // Two segments (kappa < 0 and kappa > 0), charts based at the
    // inflection so theta = s^2/2 exactly.
    let segments: Vec<_> = spiral
        .stratify(&tol)?
        .into_iter()
        .map(|seg| {
            let (lo, hi) = seg.s_range();
            seg.with_base_point(0.0f64.clamp(lo, hi))
        })
        .collect::<tangle::Result<_>>()?;

    let mut marker_sets = Vec::new();
    println!("{:>4} {:>8} {:>10} {:>10}", "seg", "theta", "s", "kappa");
    for seg in &segments {
        let ms = seg.equal_theta_markers(0.5)?;
        for m in &ms.markers {
            println!(
                "{:>4} {:>8.3} {:>10.6} {:>10.6}",
                seg.index(),
                m.theta.unwrap(),
                m.s,
                m.kappa
            );
        }
        marker_sets.push(ms);
    }

    let svg = emit_svg_curve(&segments, &marker_sets, &SvgOptions::default())?;
    std::fs::create_dir_all("out")?;
    std::fs::write("out/euler_markers.svg", &svg)?;
    println!("\nwrote out/euler_markers.svg ({} bytes)", svg.len());
    println!("marker s-values on the positive arm follow sqrt(k): 1, 1.414, 1.732, 2, ...");
    Ok(())
}
