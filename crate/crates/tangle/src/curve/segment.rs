//! Inflection-free curve segments and their tangential-angle charts.
//!
//! On a segment where κ keeps one sign, θ(s) = ∫ κ ds from a base point
//! is strictly monotone, so it serves as a parameter. Everything here —
//! marker placement, vertex detection, the speed identity — lives on that
//! chart.

use super::{FrameSample, PlaneCurve, THETA_EDGE_EPS};
use crate::error::{Error, Result};
use crate::numerics::{find_roots, invert_monotone, ToleranceConfig};

/// A maximal open run of the curve with κ ≠ 0, carrying the chart
/// θ(s) = ∫ from the base point, θ(base) = 0.
#[derive(Debug, Clone)]
pub struct CurveSegment {
    curve: PlaneCurve,
    index: usize,
    t_range: (f64, f64),
    s_range: (f64, f64),
    base_t: f64,
    base_s: f64,
    sign: f64,
    /// Turning Θ of the underlying curve at the base point.
    turning_at_base: f64,
    /// (θ at s_lo, θ at s_hi) — ordered by arc length, not by value.
    theta_range: (f64, f64),
}

/// Markers at equal tangential-angle increments, ordered by arc length.
#[derive(Debug, Clone)]
pub struct MarkerSet {
    pub delta_theta: f64,
    pub segment_index: usize,
    pub segment_sign: f64,
    pub markers: Vec<FrameSample>,
}

/// Result of a vertex scan: either finitely many critical points of κ,
/// or the degenerate case of constant curvature where every point
/// qualifies (circles).
#[derive(Debug, Clone)]
pub enum VertexScan {
    Vertices(Vec<FrameSample>),
    DegenerateAllVertices,
}

/// Both sides of the identity d/dθ |dγ/dθ|² = −(2/κ⁴)·dκ/ds, evaluated
/// at one chart point.
#[derive(Debug, Clone, Copy)]
pub struct IdentityCheck {
    /// Centered finite difference of |dγ/dθ|² in θ.
    pub lhs: f64,
    /// −(2/κ⁴)·dκ/ds from frame data.
    pub rhs: f64,
    pub residual: f64,
}

impl CurveSegment {
    pub(super) fn new(
        curve: PlaneCurve,
        index: usize,
        s_range: (f64, f64),
        base_s: f64,
        sign: f64,
    ) -> Result<CurveSegment> {
        let t_lo = curve.t_of_s(s_range.0)?;
        let t_hi = curve.t_of_s(s_range.1)?;
        let base_t = curve.t_of_s(base_s)?;
        let turning_at_base = curve.turning_refined(base_t)?;
        let theta_lo = curve.turning_refined(t_lo)? - turning_at_base;
        let theta_hi = curve.turning_refined(t_hi)? - turning_at_base;
        Ok(CurveSegment {
            curve,
            index,
            t_range: (t_lo, t_hi),
            s_range,
            base_t,
            base_s,
            sign,
            turning_at_base,
            theta_range: (theta_lo, theta_hi),
        })
    }

    pub fn curve(&self) -> &PlaneCurve {
        &self.curve
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn s_range(&self) -> (f64, f64) {
        self.s_range
    }

    pub fn t_range(&self) -> (f64, f64) {
        self.t_range
    }

    /// Sign of κ on the open segment: +1.0 or −1.0.
    pub fn sign(&self) -> f64 {
        self.sign
    }

    /// Arc length of the base point (θ = 0).
    pub fn base_point(&self) -> f64 {
        self.base_s
    }

    /// Chart values at the segment ends, ordered by arc length. The
    /// first component is θ(s_lo), which is the chart maximum when κ < 0.
    pub fn theta_range(&self) -> (f64, f64) {
        self.theta_range
    }

    pub fn theta_min(&self) -> f64 {
        self.theta_range.0.min(self.theta_range.1)
    }

    pub fn theta_max(&self) -> f64 {
        self.theta_range.0.max(self.theta_range.1)
    }

    /// The same segment re-based so θ = 0 at arc length `c` (which may
    /// be an endpoint; the chart extends continuously to the closure).
    pub fn with_base_point(&self, c: f64) -> Result<CurveSegment> {
        if c < self.s_range.0 || c > self.s_range.1 {
            return Err(Error::OutOfSegment {
                s: c,
                lo: self.s_range.0,
                hi: self.s_range.1,
            });
        }
        CurveSegment::new(self.curve.clone(), self.index, self.s_range, c, self.sign)
    }

    /// θ(s) = ∫ κ from the base point. Strictly monotone with dθ/ds = κ.
    pub fn theta_of_s(&self, s: f64) -> Result<f64> {
        if s < self.s_range.0 || s > self.s_range.1 {
            return Err(Error::OutOfSegment {
                s,
                lo: self.s_range.0,
                hi: self.s_range.1,
            });
        }
        if s == self.base_s {
            return Ok(0.0);
        }
        let t = self.curve.t_of_s(s)?;
        Ok(self.curve.turning_refined(t)? - self.turning_at_base)
    }

    /// Inverse chart: the arc length with tangential angle θ.
    pub fn s_of_theta(&self, theta: f64) -> Result<f64> {
        Ok(self.locate_theta(theta)?.1)
    }

    /// Native parameter and arc length at chart value θ.
    pub(crate) fn locate_theta(&self, theta: f64) -> Result<(f64, f64)> {
        if theta == 0.0 {
            return Ok((self.base_t, self.base_s));
        }
        let (lo, hi) = (self.theta_min(), self.theta_max());
        if theta < lo || theta > hi {
            return Err(Error::OutOfRange {
                value: theta,
                lo,
                hi,
            });
        }
        let target = self.turning_at_base + theta;
        let t = invert_monotone(
            |t| self.curve.turning_refined(t),
            target,
            self.t_range.0,
            self.t_range.1,
            self.curve.tolerances(),
        )?;
        Ok((t, self.curve.s_of_t(t)?))
    }

    /// Markers at every θ = k·Δθ strictly inside the chart range
    /// (shrunk by a small guard), as full frames ordered by arc length.
    pub fn equal_theta_markers(&self, delta_theta: f64) -> Result<MarkerSet> {
        assert!(delta_theta > 0.0, "delta_theta must be positive");
        let lo = self.theta_min() + THETA_EDGE_EPS;
        let hi = self.theta_max() - THETA_EDGE_EPS;
        let k_min = (lo / delta_theta).ceil() as i64;
        let k_max = (hi / delta_theta).floor() as i64;
        if k_min > k_max {
            return Err(Error::StepTooLarge {
                step: delta_theta,
                lo,
                hi,
            });
        }
        let ks: Vec<i64> = if self.sign > 0.0 {
            (k_min..=k_max).collect()
        } else {
            (k_min..=k_max).rev().collect()
        };
        let mut markers = Vec::with_capacity(ks.len());
        for k in ks {
            let theta = k as f64 * delta_theta;
            if theta < lo || theta > hi {
                continue;
            }
            let (t, s) = self.locate_theta(theta)?;
            let mut frame = self.curve.frame_at(t)?;
            frame.s = s;
            frame.theta = Some(theta);
            markers.push(frame);
        }
        Ok(MarkerSet {
            delta_theta,
            segment_index: self.index,
            segment_sign: self.sign,
            markers,
        })
    }

    /// Critical points of κ along the segment (dκ/ds = 0), as frames.
    /// Constant-curvature segments report the degenerate status instead
    /// of flagging every grid point.
    pub fn detect_vertices(&self, cfg: &ToleranceConfig) -> Result<VertexScan> {
        let slope_of_s = |s: f64| -> Result<f64> {
            let t = self.curve.t_of_s(s)?;
            self.curve.curvature_slope_at(t)
        };
        let roots = find_roots(slope_of_s, self.s_range.0, self.s_range.1, cfg)?;
        if roots.len() > cfg.grid_n / 2 {
            return Ok(VertexScan::DegenerateAllVertices);
        }
        let mut frames = Vec::with_capacity(roots.len());
        for s in roots {
            let mut f = self.curve.frame_at_s(s)?;
            if s > self.s_range.0 && s < self.s_range.1 {
                f.theta = Some(self.theta_of_s(s)?);
            }
            frames.push(f);
        }
        Ok(VertexScan::Vertices(frames))
    }

    /// |dγ/dθ|² at chart value θ, which equals 1/κ².
    pub fn speed_squared_wrt_theta(&self, theta: f64) -> Result<f64> {
        let (t, _) = self.locate_theta(theta)?;
        let kappa = self.curve.curvature_at(t)?;
        Ok(1.0 / (kappa * kappa))
    }

    /// Check the identity d/dθ |dγ/dθ|² = −(2/κ⁴)·dκ/ds at θ: the left
    /// side by a centered difference of step h, the right side from
    /// frame data at s(θ).
    pub fn identity_residual(&self, theta: f64, h: f64) -> Result<IdentityCheck> {
        assert!(h > 0.0, "finite-difference step must be positive");
        let (lo, hi) = (self.theta_min(), self.theta_max());
        if theta - h < lo || theta + h > hi {
            return Err(Error::OutOfRange {
                value: theta,
                lo: lo + h,
                hi: hi - h,
            });
        }
        let gp = self.speed_squared_wrt_theta(theta + h)?;
        let gm = self.speed_squared_wrt_theta(theta - h)?;
        let lhs = (gp - gm) / (2.0 * h);
        let (t, _) = self.locate_theta(theta)?;
        let kappa = self.curve.curvature_at(t)?;
        let dkds = self.curve.curvature_slope_at(t)?;
        let rhs = -2.0 / kappa.powi(4) * dkds;
        Ok(IdentityCheck {
            lhs,
            rhs,
            residual: (lhs - rhs).abs(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::Expression;
    use crate::geom::Vec2;
    use std::f64::consts::PI;

    fn cfg() -> ToleranceConfig {
        ToleranceConfig::default()
    }

    fn euler_segments() -> Vec<CurveSegment> {
        let c = PlaneCurve::from_curvature_arclength(
            Expression::parse("s").unwrap(),
            (-3.0, 3.0),
            Vec2::ZERO,
            0.0,
            Vec2::ZERO,
            &cfg(),
        )
        .unwrap();
        c.stratify(&cfg()).unwrap()
    }

    fn euler_positive_rebased() -> CurveSegment {
        let segs = euler_segments();
        segs[1].with_base_point(0.0).unwrap()
    }

    fn vertex_segment() -> CurveSegment {
        let c = PlaneCurve::from_curvature_arclength(
            Expression::parse("1 + s^2").unwrap(),
            (-2.0, 2.0),
            Vec2::ZERO,
            0.0,
            Vec2::ZERO,
            &cfg(),
        )
        .unwrap();
        c.stratify(&cfg()).unwrap().remove(0)
    }

    fn circle_segment(radius: f64, base: f64) -> CurveSegment {
        let c = PlaneCurve::from_curvature_arclength(
            Expression::constant(1.0 / radius),
            (-PI * radius, PI * radius),
            Vec2::new(0.0, -radius),
            0.0,
            Vec2::ZERO,
            &cfg(),
        )
        .unwrap();
        c.stratify(&cfg())
            .unwrap()
            .remove(0)
            .with_base_point(base)
            .unwrap()
    }

    #[test]
    fn euler_chart_is_half_s_squared() {
        let seg = euler_positive_rebased();
        let th = seg.theta_of_s(1.0).unwrap();
        assert!((th - 0.5).abs() < 1e-10, "{th}");
        assert_eq!(seg.theta_of_s(0.0).unwrap(), 0.0);
        let th = seg.theta_of_s(2.0f64.sqrt()).unwrap();
        assert!((th - 1.0).abs() < 1e-9);
    }

    #[test]
    fn vertex_curve_chart_is_cubic() {
        let seg = vertex_segment();
        assert_eq!(seg.base_point(), 0.0);
        let th = seg.theta_of_s(1.0).unwrap();
        assert!((th - 4.0 / 3.0).abs() < 1e-9);
    }

    #[test]
    fn inverse_chart_on_euler_spiral() {
        let seg = euler_positive_rebased();
        let s = seg.s_of_theta(0.5).unwrap();
        assert!((s - 1.0).abs() < 1e-9, "{s}");
        assert_eq!(seg.s_of_theta(0.0).unwrap(), 0.0);
    }

    #[test]
    fn chart_round_trip() {
        for seg in [euler_positive_rebased(), vertex_segment()] {
            let (lo, hi) = (seg.theta_min(), seg.theta_max());
            for i in 1..100 {
                let th = lo + (hi - lo) * i as f64 / 100.0;
                let s = seg.s_of_theta(th).unwrap();
                let back = seg.theta_of_s(s).unwrap();
                assert!((back - th).abs() <= 1e-9, "{th} -> {s} -> {back}");
            }
        }
    }

    #[test]
    fn rebase_outside_the_segment_fails() {
        let seg = euler_positive_rebased();
        assert!(matches!(
            seg.with_base_point(5.0),
            Err(Error::OutOfSegment { .. })
        ));
    }

    #[test]
    fn out_of_range_theta_reports_interval() {
        let seg = euler_positive_rebased();
        match seg.s_of_theta(100.0) {
            Err(Error::OutOfRange { lo, hi, .. }) => {
                assert!(lo >= -1e-9 && hi <= 4.51);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn circle_markers_full_turn() {
        // Base point chosen off the marker lattice: an open chart of
        // length 2*pi then contains exactly 12 multiples of pi/6.
        let seg = circle_segment(1.0, PI / 12.0);
        let ms = seg.equal_theta_markers(PI / 6.0).unwrap();
        assert_eq!(ms.markers.len(), 12);
        for pair in ms.markers.windows(2) {
            let ds = pair[1].s - pair[0].s;
            assert!((ds - PI / 6.0).abs() < 1e-9, "{ds}");
        }
    }

    #[test]
    fn euler_markers_follow_sqrt_law() {
        let seg = euler_positive_rebased();
        let ms = seg.equal_theta_markers(0.5).unwrap();
        // s at theta = 0.5k is sqrt(k).
        for (i, m) in ms.markers.iter().enumerate() {
            let want = ((i + 1) as f64).sqrt();
            assert!((m.s - want).abs() < 1e-9, "{} vs {}", m.s, want);
        }
        // gaps strictly decreasing as curvature grows
        for w in ms.markers.windows(3) {
            assert!(w[2].s - w[1].s < w[1].s - w[0].s);
        }
    }

    #[test]
    fn negative_sign_segment_markers_ascend_in_s() {
        let segs = euler_segments();
        let neg = segs[0].with_base_point(0.0).unwrap();
        let ms = neg.equal_theta_markers(0.5).unwrap();
        assert_eq!(ms.segment_sign, -1.0);
        assert!(ms.markers.len() > 3);
        for pair in ms.markers.windows(2) {
            assert!(pair[1].s > pair[0].s);
            // theta decreases with s on a negative segment
            assert!(pair[1].theta.unwrap() < pair[0].theta.unwrap());
        }
    }

    #[test]
    fn step_too_large() {
        let seg = euler_positive_rebased();
        assert!(matches!(
            seg.equal_theta_markers(50.0),
            Err(Error::StepTooLarge { .. })
        ));
    }

    #[test]
    fn vertex_detection_on_gallery_curves() {
        let seg = vertex_segment();
        match seg.detect_vertices(&cfg()).unwrap() {
            VertexScan::Vertices(v) => {
                assert_eq!(v.len(), 1);
                assert!(v[0].s.abs() < 1e-9);
            }
            other => panic!("unexpected {other:?}"),
        }
        let seg = euler_positive_rebased();
        match seg.detect_vertices(&cfg()).unwrap() {
            VertexScan::Vertices(v) => assert!(v.is_empty()),
            other => panic!("unexpected {other:?}"),
        }
        let seg = circle_segment(1.0, 0.0);
        assert!(matches!(
            seg.detect_vertices(&cfg()).unwrap(),
            VertexScan::DegenerateAllVertices
        ));
    }

    #[test]
    fn theta_speed_on_euler_spiral() {
        let seg = euler_positive_rebased();
        // at theta = 0.5, s = 1, kappa = 1
        let v = seg.speed_squared_wrt_theta(0.5).unwrap();
        assert!((v - 1.0).abs() < 1e-9);
        let seg = circle_segment(1.0, 0.0);
        for th in [-1.0, 0.3, 2.0] {
            assert!((seg.speed_squared_wrt_theta(th).unwrap() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn identity_on_euler_spiral() {
        let seg = euler_positive_rebased();
        let chk = seg.identity_residual(0.5, 1e-4).unwrap();
        assert!((chk.lhs + 2.0).abs() < 1e-4, "lhs {}", chk.lhs);
        assert!((chk.rhs + 2.0).abs() < 1e-10, "rhs {}", chk.rhs);
        assert!(chk.residual <= 1e-6 * (1.0 + chk.rhs.abs()));
    }

    #[test]
    fn identity_on_circle_is_zero() {
        let seg = circle_segment(2.0, 0.0);
        let chk = seg.identity_residual(0.7, 1e-4).unwrap();
        assert_eq!(chk.rhs, 0.0);
        assert!(chk.lhs.abs() < 1e-9);
    }

    #[test]
    fn identity_vanishes_at_vertex() {
        let seg = vertex_segment();
        let chk = seg.identity_residual(0.0, 1e-4).unwrap();
        assert_eq!(chk.rhs, 0.0);
        assert!(chk.lhs.abs() <= 1e-6, "lhs {}", chk.lhs);
    }

    #[test]
    fn identity_sign_matches_curvature_slope() {
        // The sign of d/dtheta |dgamma/dtheta|^2 is opposite the sign of
        // dkappa/ds away from vertices.
        let seg = euler_positive_rebased();
        for i in 1..20 {
            let th = 0.2 + i as f64 * 0.2;
            let chk = seg.identity_residual(th, 1e-4).unwrap();
            assert!(chk.lhs < 0.0, "dkappa/ds > 0 must shrink the theta-speed");
        }
    }

    #[test]
    fn marker_gap_times_curvature_approximates_step() {
        let seg = vertex_segment();
        let dth = 0.05;
        let ms = seg.equal_theta_markers(dth).unwrap();
        for pair in ms.markers.windows(2) {
            let ds = pair[1].s - pair[0].s;
            let mid = 0.5 * (pair[0].s + pair[1].s);
            let kappa = 1.0 + mid * mid;
            assert!(
                (ds * kappa - dth).abs() <= 0.05 * dth,
                "density law violated at s={mid}"
            );
        }
    }

    #[test]
    fn marker_gap_widest_at_curvature_minimum() {
        // kappa = 1 + s^2 has its curvature minimum at the vertex s = 0,
        // so equal-theta markers are locally sparsest there and densest
        // at the segment ends.
        let seg = vertex_segment();
        let ms = seg.equal_theta_markers(0.05).unwrap();
        let gaps: Vec<f64> = ms.markers.windows(2).map(|w| w[1].s - w[0].s).collect();
        let (argmax, _) = gaps
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.partial_cmp(b.1).unwrap())
            .unwrap();
        // widest gap touches s = 0
        assert!(ms.markers[argmax].s <= 1e-9 && ms.markers[argmax + 1].s >= -1e-9);
        // narrowest gap is at an end of the segment
        let (argmin, _) = gaps
            .iter()
            .enumerate()
            .min_by(|a, b| a.1.partial_cmp(b.1).unwrap())
            .unwrap();
        assert!(argmin == 0 || argmin == gaps.len() - 1);
    }
}
