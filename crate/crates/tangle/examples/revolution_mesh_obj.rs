//! Build a curvature-line mesh of a revolution surface — parallels at
//! equal tangential-angle steps of the profile, meridians, and the ridge
//! circle inserted at its exact station — then export Wavefront OBJ.
//! Writes `out/vase.obj`, viewable in any mesh viewer.
//!
//! ```text
//! cargo run -p tangle --example revolution_mesh_obj
//! ```

use std::f64::consts::FRAC_PI_2;

use tangle::expr::Expression;
use tangle::geom::Vec2;
use tangle::numerics::ToleranceConfig;
use tangle::render::emit_obj_mesh;
use tangle::surface::{build_mesh, revolve};
use tangle::synthesis::curve_from_curvature_arclength;

fn main() -> tangle::Result<()> {
    let tol = ToleranceConfig::default();
    // kappa = 1 + s^2 profile climbing along the axis: the vertex at
    // s = 0 becomes a ridge circle around the waist of a vase.
    let profile = curve_from_curvature_arclength(
        Expression::parse("1 + s^2")?,
        (-2.0, 2.0),
        Vec2::new(2.0, 0.0),
        FRAC_PI_2,
        &tol,
    )?;
    let surface = revolve(profile, &tol)?;

    let rings = surface.equal_theta_rings(0.25)?;
    println!(
        "{} rings at equal theta steps; spacing shrinks with 1/kappa1:",
        rings.len()
    );
    for pair in rings.windows(2).take(6) {
        println!(
            "  s = {:>8.4} -> {:>8.4}   gap {:.4}",
            pair[0].s,
            pair[1].s,
            pair[1].s - pair[0].s
        );
    }

    let mesh = build_mesh(&surface, &rings, 48, true, &tol)?;
    println!(
        "mesh: {} vertices, {} rings, {} meridians, {} faces",
        mesh.vertices.len(),
        mesh.rings.len(),
        mesh.meridians.len(),
        mesh.faces.as_ref().map_or(0, Vec::len)
    );
    for ring in mesh.rings.iter().filter(|r| r.feature.is_some()) {
        println!(
            "feature ring at s = {:.2e}: {}",
            ring.s,
            ring.feature.unwrap().as_str()
        );
    }

    let obj = emit_obj_mesh(&mesh, true)?;
    std::fs::create_dir_all("out")?;
    std::fs::write("out/vase.obj", &obj)?;
    println!("wrote out/vase.obj ({} bytes)", obj.len());
    Ok(())
}
