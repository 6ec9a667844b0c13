//! Revolve an Euler-spiral profile and read off the surface geometry:
//! principal curvatures, Gaussian curvature with its region
//! classification, and the parabolic circle sitting exactly on the
//! profile's inflection.
//!
//! ```text
//! cargo run -p tangle --example surface_features
//! ```

use tangle::expr::Expression;
use tangle::geom::Vec2;
use tangle::numerics::ToleranceConfig;
use tangle::surface::revolve;
use tangle::synthesis::curve_from_curvature_arclength;

fn main() -> tangle::Result<()> {
    let tol = ToleranceConfig::default();
    // Euler spiral pushed two units off the axis.
    let profile = curve_from_curvature_arclength(
        Expression::identity("s"),
        (-2.2, 2.2),
        Vec2::new(2.0, 0.0),
        0.0,
        &tol,
    )?;
    let surface = revolve(profile, &tol)?;

    println!(
        "{:>6} {:>10} {:>10} {:>12} {:>12}",
        "s", "kappa1", "kappa2", "K", "region"
    );
    for i in -5..=5 {
        let s = i as f64 * 0.4;
        let (k1, k2) = surface.principal_curvatures(s)?;
        let gauss = surface.gaussian_curvature(s)?;
        let region = surface.region_classification(s)?;
        println!(
            "{s:>6.2} {k1:>10.5} {k2:>10.5} {gauss:>12.3e} {:>12}",
            region.as_str()
        );
    }

    let features = surface.feature_circles(&tol)?;
    println!();
    for (s, cause) in &features.parabolic {
        println!("parabolic circle at s = {s:.2e} ({cause:?})");
    }
    for s in &features.ridge {
        println!("ridge circle at s = {s:.6}");
    }
    if features.ridge.is_empty() && !features.ridge_degenerate {
        println!("no ridge circles: dkappa1/ds = 1 never vanishes");
    }
    Ok(())
}
