//! CSV emitter for marker tables.

use super::fmt::sig;
use crate::curve::MarkerSet;

/// One row per marker, ordered by arc length, 12 significant digits.
/// Columns: the lattice index k (θ = k·Δθ), θ, s, position, curvature
/// and its arc-length derivative.
pub fn emit_csv_markers(markers: &MarkerSet) -> String {
    let mut out = String::with_capacity(64 * (markers.markers.len() + 1));
    out.push_str("k,theta,s,x,y,kappa,dkappa_ds\n");
    for m in &markers.markers {
        let theta = m.theta.unwrap_or(f64::NAN);
        let k = (theta / markers.delta_theta).round() as i64;
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            k,
            sig(theta, 12),
            sig(m.s, 12),
            sig(m.position.x, 12),
            sig(m.position.y, 12),
            sig(m.kappa, 12),
            sig(m.dkappa_ds, 12),
        ));
    }
    out
}
