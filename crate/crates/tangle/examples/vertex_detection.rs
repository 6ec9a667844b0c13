//! Vertices are critical points of curvature; they coincide with the
//! critical points of the squared theta-speed |dgamma/dtheta|^2, whose
//! theta-derivative equals -(2/kappa^4) dkappa/ds. This example locates
//! the vertex of the kappa = 1 + s^2 curve and tabulates both sides of
//! that identity.
//!
//! ```text
//! cargo run -p tangle --example vertex_detection
//! ```

use tangle::curve::VertexScan;
use tangle::numerics::ToleranceConfig;
use tangle::synthesis::builtin_curve;

fn main() -> tangle::Result<()> {
    let tol = ToleranceConfig::default();
    let curve = builtin_curve("kappa_1_plus_s2", None, &tol)?;
    let seg = &curve.stratify(&tol)?[0];

    match seg.detect_vertices(&tol)? {
        VertexScan::Vertices(vertices) => {
            for v in &vertices {
                println!(
                    "vertex at s = {:.2e} (kappa {:.6}, dkappa/ds {:.2e})",
                    v.s, v.kappa, v.dkappa_ds
                );
            }
        }
        VertexScan::DegenerateAllVertices => {
            println!("constant curvature: every point is a vertex");
        }
    }

    // A circle by contrast is all vertices:
    let circle = builtin_curve("circle", Some(1.0), &tol)?;
    let circle_seg = &circle.stratify(&tol)?[0];
    if let VertexScan::DegenerateAllVertices = circle_seg.detect_vertices(&tol)? {
        println!("circle: every point is a vertex (degenerate case)");
    }

    println!();
    println!(
        "{:>6} {:>12} {:>12} {:>10}",
        "theta", "d|g'|^2/dth", "-2k'/k^4", "residual"
    );
    for i in -6..=6 {
        let theta = i as f64 * 0.6;
        let chk = seg.identity_residual(theta, 1e-4)?;
        println!(
            "{theta:>6.2} {:>12.6} {:>12.6} {:>10.2e}",
            chk.lhs, chk.rhs, chk.residual
        );
    }
    println!();
    println!("both sides vanish exactly at the vertex theta = 0");
    Ok(())
}
