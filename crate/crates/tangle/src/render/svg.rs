//! SVG emitters: curve plots with equal-θ markers, and θ(s) charts.
//!
//! Output is byte-stable for identical inputs: fixed palette, fixed
//! sampling density, six significant digits everywhere.

use super::fmt::sig;
use crate::curve::{CurveSegment, MarkerSet};
use crate::error::{Error, Result};
use crate::geom::Vec2;

/// Stroke for positive-curvature segments (orange).
pub const COLOR_POSITIVE: &str = "#E69F00";
/// Stroke for negative-curvature segments (blue).
pub const COLOR_NEGATIVE: &str = "#0072B2";
/// Accent used for ridge/vertex annotations (green).
pub const COLOR_RIDGE: &str = "#009E73";
const COLOR_MARKER: &str = "#333333";
const COLOR_AXIS: &str = "#888888";
const COLOR_GRID: &str = "#CCCCCC";

/// Polyline samples per segment path.
const CURVE_SAMPLES: usize = 512;

#[derive(Debug, Clone, Copy)]
pub struct SvgOptions {
    /// Marker radius as a fraction of the viewBox diagonal.
    pub marker_radius_frac: f64,
    /// Stroke width as a fraction of the viewBox diagonal.
    pub stroke_frac: f64,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions {
            marker_radius_frac: 0.008,
            stroke_frac: 0.003,
        }
    }
}

/// Curve plot: one path per segment (colored by the sign of κ), one
/// circle per marker. The viewBox is the tight bounding box padded 5%,
/// and the y-axis is flipped once so the plot uses mathematical
/// orientation.
pub fn emit_svg_curve(
    segments: &[CurveSegment],
    markers: &[MarkerSet],
    options: &SvgOptions,
) -> Result<String> {
    if segments.is_empty() {
        return Err(Error::EmptyInput(
            "emit_svg_curve needs at least one segment",
        ));
    }
    let mut polylines: Vec<(f64, Vec<Vec2>)> = Vec::with_capacity(segments.len());
    for seg in segments {
        let (t_lo, t_hi) = seg.t_range();
        let mut pts = Vec::with_capacity(CURVE_SAMPLES);
        for i in 0..CURVE_SAMPLES {
            let t = t_lo + (t_hi - t_lo) * i as f64 / (CURVE_SAMPLES - 1) as f64;
            pts.push(seg.curve().position_at(t)?);
        }
        if pts.len() < 2 {
            return Err(Error::EmptyInput("segment produced fewer than 2 samples"));
        }
        polylines.push((seg.sign(), pts));
    }

    // Bounding box over flipped coordinates (x, -y).
    let mut bbox = BBox::empty();
    for (_, pts) in &polylines {
        for p in pts {
            bbox.add(p.x, -p.y);
        }
    }
    for ms in markers {
        for m in &ms.markers {
            bbox.add(m.position.x, -m.position.y);
        }
    }
    let (vb, diag) = bbox.padded(0.05);
    let marker_r = options.marker_radius_frac * diag;
    let stroke = options.stroke_frac * diag;

    let mut out = String::with_capacity(1 << 16);
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\">\n",
        sig(vb.0, 6),
        sig(vb.1, 6),
        sig(vb.2, 6),
        sig(vb.3, 6)
    ));
    out.push_str("<g transform=\"scale(1,-1)\">\n");
    for (sign, pts) in &polylines {
        let color = if *sign >= 0.0 {
            COLOR_POSITIVE
        } else {
            COLOR_NEGATIVE
        };
        out.push_str(&format!(
            "<path fill=\"none\" stroke=\"{color}\" stroke-width=\"{}\" d=\"",
            sig(stroke, 6)
        ));
        for (i, p) in pts.iter().enumerate() {
            out.push_str(if i == 0 { "M" } else { " L" });
            out.push_str(&format!("{} {}", sig(p.x, 6), sig(p.y, 6)));
        }
        out.push_str("\"/>\n");
    }
    for ms in markers {
        for m in &ms.markers {
            out.push_str(&format!(
                "<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"{COLOR_MARKER}\"/>\n",
                sig(m.position.x, 6),
                sig(m.position.y, 6),
                sig(marker_r, 6)
            ));
        }
    }
    out.push_str("</g>\n</svg>\n");
    Ok(out)
}

/// θ(s) chart of one segment: axes with ticks, the chart polyline, and
/// horizontal gridlines at multiples of `delta_theta` to show that equal
/// θ-steps are non-uniform in s.
pub fn emit_svg_theta_plot(
    segment: &CurveSegment,
    n_samples: usize,
    delta_theta: Option<f64>,
) -> Result<String> {
    if n_samples < 2 {
        return Err(Error::EmptyInput("theta plot needs at least 2 samples"));
    }
    let (s_lo, s_hi) = segment.s_range();
    let mut pts = Vec::with_capacity(n_samples);
    for i in 0..n_samples {
        let s = s_lo + (s_hi - s_lo) * i as f64 / (n_samples - 1) as f64;
        pts.push((s, segment.theta_of_s(s)?));
    }
    let th_lo = segment.theta_min();
    let th_hi = segment.theta_max();

    // Plot area in user units, data mapped affinely into it.
    const W: f64 = 640.0;
    const H: f64 = 480.0;
    const M: f64 = 50.0;
    let sx = |s: f64| M + (s - s_lo) / (s_hi - s_lo) * (W - 2.0 * M);
    let sy = |th: f64| H - M - (th - th_lo) / (th_hi - th_lo) * (H - 2.0 * M);

    let mut out = String::with_capacity(1 << 14);
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {W} {H}\">\n"
    ));
    // gridlines at marker theta values
    if let Some(dth) = delta_theta {
        if dth > 0.0 {
            let k_min = (th_lo / dth).ceil() as i64;
            let k_max = (th_hi / dth).floor() as i64;
            for k in k_min..=k_max {
                let y = sy(k as f64 * dth);
                out.push_str(&format!(
                    "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{COLOR_GRID}\" stroke-width=\"1\"/>\n",
                    sig(M, 6),
                    sig(y, 6),
                    sig(W - M, 6),
                    sig(y, 6)
                ));
            }
        }
    }
    // axes
    out.push_str(&format!(
        "<line x1=\"{m}\" y1=\"{b}\" x2=\"{r}\" y2=\"{b}\" stroke=\"{COLOR_AXIS}\" stroke-width=\"2\"/>\n",
        m = sig(M, 6),
        b = sig(H - M, 6),
        r = sig(W - M, 6)
    ));
    out.push_str(&format!(
        "<line x1=\"{m}\" y1=\"{t}\" x2=\"{m}\" y2=\"{b}\" stroke=\"{COLOR_AXIS}\" stroke-width=\"2\"/>\n",
        m = sig(M, 6),
        t = sig(M, 6),
        b = sig(H - M, 6)
    ));
    // ticks: 5 along each axis, labeled
    for i in 0..=4 {
        let s = s_lo + (s_hi - s_lo) * i as f64 / 4.0;
        let x = sx(s);
        out.push_str(&format!(
            "<line x1=\"{x0}\" y1=\"{b}\" x2=\"{x0}\" y2=\"{b2}\" stroke=\"{COLOR_AXIS}\" stroke-width=\"2\"/>\n",
            x0 = sig(x, 6),
            b = sig(H - M, 6),
            b2 = sig(H - M + 6.0, 6)
        ));
        out.push_str(&format!(
            "<text x=\"{x0}\" y=\"{ty}\" font-size=\"12\" text-anchor=\"middle\">{label}</text>\n",
            x0 = sig(x, 6),
            ty = sig(H - M + 20.0, 6),
            label = sig(s, 4)
        ));
        let th = th_lo + (th_hi - th_lo) * i as f64 / 4.0;
        let y = sy(th);
        out.push_str(&format!(
            "<line x1=\"{x1}\" y1=\"{y0}\" x2=\"{m}\" y2=\"{y0}\" stroke=\"{COLOR_AXIS}\" stroke-width=\"2\"/>\n",
            x1 = sig(M - 6.0, 6),
            y0 = sig(y, 6),
            m = sig(M, 6)
        ));
        out.push_str(&format!(
            "<text x=\"{tx}\" y=\"{y0}\" font-size=\"12\" text-anchor=\"end\">{label}</text>\n",
            tx = sig(M - 10.0, 6),
            y0 = sig(y + 4.0, 6),
            label = sig(th, 4)
        ));
    }
    // axis titles
    out.push_str(&format!(
        "<text x=\"{x}\" y=\"{y}\" font-size=\"14\" text-anchor=\"middle\">s</text>\n",
        x = sig(W / 2.0, 6),
        y = sig(H - 10.0, 6)
    ));
    out.push_str(&format!(
        "<text x=\"{x}\" y=\"{y}\" font-size=\"14\" text-anchor=\"middle\">theta</text>\n",
        x = sig(18.0, 6),
        y = sig(H / 2.0, 6)
    ));
    // the chart itself
    out.push_str("<path fill=\"none\" stroke=\"#0072B2\" stroke-width=\"2\" d=\"");
    for (i, (s, th)) in pts.iter().enumerate() {
        out.push_str(if i == 0 { "M" } else { " L" });
        out.push_str(&format!("{} {}", sig(sx(*s), 6), sig(sy(*th), 6)));
    }
    out.push_str("\"/>\n</svg>\n");
    Ok(out)
}

struct BBox {
    min_x: f64,
    min_y: f64,
    max_x: f64,
    max_y: f64,
}

impl BBox {
    fn empty() -> BBox {
        BBox {
            min_x: f64::INFINITY,
            min_y: f64::INFINITY,
            max_x: f64::NEG_INFINITY,
            max_y: f64::NEG_INFINITY,
        }
    }

    fn add(&mut self, x: f64, y: f64) {
        self.min_x = self.min_x.min(x);
        self.min_y = self.min_y.min(y);
        self.max_x = self.max_x.max(x);
        self.max_y = self.max_y.max(y);
    }

    /// (viewBox, diagonal) with relative padding on each side.
    fn padded(&self, frac: f64) -> ((f64, f64, f64, f64), f64) {
        let w = (self.max_x - self.min_x).max(1e-9);
        let h = (self.max_y - self.min_y).max(1e-9);
        let px = w * frac;
        let py = h * frac;
        let vb = (self.min_x - px, self.min_y - py, w + 2.0 * px, h + 2.0 * py);
        (vb, (vb.2).hypot(vb.3))
    }
}
