//! Surfaces of revolution: revolve a profile curve about the z-axis,
//! classify points by Gaussian curvature, locate parabolic and ridge
//! circles, and place parallel circles at equal tangential-angle steps
//! of the profile.
//!
//! The profile γ(t) = (γ₁(t), γ₂(t)) with γ₁ > 0 generates
//! f(t, u) = (γ₁ cos u, γ₁ sin u, γ₂); (t, u) is a curvature coordinate.
//! With the unit normal fixed as ν = (−γ₂′ cos u, −γ₂′ sin u, γ₁′)
//! (arc-length derivatives), the principal curvature along meridians is
//! the profile's plane curvature κ₁ = κ, and along parallels
//! κ₂ = γ₂′/γ₁. Their product is the Gaussian curvature, which for
//! arc-length profiles also equals −γ₁″/γ₁.

mod mesh;

pub use mesh::{build_mesh, MeshRing, RevolutionMesh, RingFeature};

use crate::curve::{CurveSegment, FrameSample, IdentityCheck, PlaneCurve, VertexScan};
use crate::error::{Error, Result};
use crate::geom::Vec3;
use crate::numerics::{find_roots, ToleranceConfig};

/// Profile stations closer to the axis than this are rejected.
const AXIS_EPS: f64 = 1e-6;
/// |K| below this classifies as parabolic.
const PARABOLIC_EPS: f64 = 1e-9;

/// Region by sign of the Gaussian curvature.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Region {
    Elliptic,
    Hyperbolic,
    Parabolic,
}

impl Region {
    pub fn as_str(self) -> &'static str {
        match self {
            Region::Elliptic => "elliptic",
            Region::Hyperbolic => "hyperbolic",
            Region::Parabolic => "parabolic",
        }
    }
}

/// Why a station belongs to the parabolic set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ParabolicCause {
    /// κ₁ = 0: the profile has an inflection there.
    ProfileInflection,
    /// κ₂ = 0: the parallel direction is flat (γ₂′ = 0).
    ParallelFlat,
}

/// Arc-length stations of the parabolic and ridge circles.
#[derive(Debug, Clone, Default)]
pub struct FeatureCircles {
    /// Stations with K = 0, ascending, tagged by cause.
    pub parabolic: Vec<(f64, ParabolicCause)>,
    /// Stations where dκ₁/ds = 0 (profile vertices), ascending.
    pub ridge: Vec<f64>,
    /// κ₁ is constant along the profile, so every point is critical and
    /// no discrete ridge stations are reported.
    pub ridge_degenerate: bool,
}

/// One sampled point of the surface.
#[derive(Debug, Clone, Copy)]
pub struct SurfacePointSample {
    /// Profile arc length.
    pub s: f64,
    /// Revolution angle.
    pub u: f64,
    pub position: Vec3,
    pub normal: Vec3,
    pub kappa1: f64,
    pub kappa2: f64,
    pub gaussian: f64,
    pub region: Region,
}

/// A parallel circle selected by the equal-θ chart of the profile.
#[derive(Debug, Clone, Copy)]
pub struct RingStation {
    /// Profile arc length of the circle.
    pub s: f64,
    /// Chart value that selected it, when it came from a chart.
    pub theta: Option<f64>,
    /// Index of the profile segment the chart lives on.
    pub segment: Option<usize>,
}

/// A revolved profile with its stratification and orientation choice.
#[derive(Debug, Clone)]
pub struct SurfaceOfRevolution {
    profile: PlaneCurve,
    segments: Vec<CurveSegment>,
    flip_orientation: bool,
}

/// Revolve a profile curve about the z-axis. The profile's x-component
/// is the distance to the axis and must stay positive; the profile is
/// stratified at its inflections so every segment carries a θ-chart.
pub fn revolve(profile: PlaneCurve, cfg: &ToleranceConfig) -> Result<SurfaceOfRevolution> {
    let (a, b) = profile.domain();
    for i in 0..=cfg.grid_n {
        let t = a + (b - a) * i as f64 / cfg.grid_n as f64;
        let p = profile.position_at(t)?;
        if p.x <= AXIS_EPS {
            return Err(Error::AxisContact {
                s: profile.s_of_t(t)?,
                gamma1: p.x,
            });
        }
    }
    let segments = profile.stratify(cfg)?;
    Ok(SurfaceOfRevolution {
        profile,
        segments,
        flip_orientation: false,
    })
}

impl SurfaceOfRevolution {
    pub fn profile(&self) -> &PlaneCurve {
        &self.profile
    }

    pub fn segments(&self) -> &[CurveSegment] {
        &self.segments
    }

    /// Mutable access to segment charts, for re-basing.
    pub fn segments_mut(&mut self) -> &mut Vec<CurveSegment> {
        &mut self.segments
    }

    /// Flip the global normal orientation; all curvature signs follow.
    pub fn with_flipped_orientation(mut self) -> SurfaceOfRevolution {
        self.flip_orientation = !self.flip_orientation;
        self
    }

    fn orient(&self) -> f64 {
        if self.flip_orientation {
            -1.0
        } else {
            1.0
        }
    }

    /// Arc-length range of the profile.
    pub fn s_domain(&self) -> (f64, f64) {
        self.profile.s_domain()
    }

    /// Principal curvatures (κ₁ meridian, κ₂ parallel) at profile arc
    /// length s.
    pub fn principal_curvatures(&self, s: f64) -> Result<(f64, f64)> {
        let f = self.profile.frame_at_s(s)?;
        Ok(self.principal_from_frame(&f))
    }

    fn principal_from_frame(&self, f: &FrameSample) -> (f64, f64) {
        let o = self.orient();
        let kappa1 = o * f.kappa;
        let kappa2 = o * f.tangent.y / f.position.x;
        (kappa1, kappa2)
    }

    /// Gaussian curvature K = κ₁κ₂ at profile arc length s.
    pub fn gaussian_curvature(&self, s: f64) -> Result<f64> {
        let (k1, k2) = self.principal_curvatures(s)?;
        Ok(k1 * k2)
    }

    /// Elliptic/hyperbolic/parabolic by the sign of K, with |K| < 1e-9
    /// counted as parabolic.
    pub fn region_classification(&self, s: f64) -> Result<Region> {
        Ok(classify(self.gaussian_curvature(s)?))
    }

    /// Full sample at (s, u).
    pub fn sample(&self, s: f64, u: f64) -> Result<SurfacePointSample> {
        let f = self.profile.frame_at_s(s)?;
        let (kappa1, kappa2) = self.principal_from_frame(&f);
        let gaussian = kappa1 * kappa2;
        let (su, cu) = u.sin_cos();
        let o = self.orient();
        Ok(SurfacePointSample {
            s,
            u,
            position: Vec3::new(f.position.x * cu, f.position.x * su, f.position.y),
            normal: Vec3::new(
                -o * f.tangent.y * cu,
                -o * f.tangent.y * su,
                o * f.tangent.x,
            ),
            kappa1,
            kappa2,
            gaussian,
            region: classify(gaussian),
        })
    }

    /// Stations of the parabolic circles (K = 0, from either κ₁ = 0
    /// profile inflections or κ₂ = 0 flat parallels) and ridge circles
    /// (dκ₁/ds = 0, profile vertices).
    pub fn feature_circles(&self, cfg: &ToleranceConfig) -> Result<FeatureCircles> {
        let (slo, shi) = self.s_domain();
        let mut parabolic: Vec<(f64, ParabolicCause)> = Vec::new();

        // kappa1 roots are precisely the interior segment boundaries
        // found by stratification.
        for pair in self.segments.windows(2) {
            let boundary = pair[0].s_range().1;
            if boundary > slo && boundary < shi {
                parabolic.push((boundary, ParabolicCause::ProfileInflection));
            }
        }

        // kappa2 = gamma2'/gamma1 vanishes with the tangent's y-component.
        let flat = find_roots(|s| Ok(self.profile.frame_at_s(s)?.tangent.y), slo, shi, cfg)?;
        'next: for s in flat {
            for (existing, _) in &parabolic {
                if (existing - s).abs() <= 100.0 * cfg.root_tol {
                    continue 'next;
                }
            }
            parabolic.push((s, ParabolicCause::ParallelFlat));
        }
        parabolic.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());

        let mut ridge = Vec::new();
        let mut ridge_degenerate = false;
        for seg in &self.segments {
            match seg.detect_vertices(cfg)? {
                VertexScan::DegenerateAllVertices => ridge_degenerate = true,
                VertexScan::Vertices(frames) => {
                    ridge.extend(frames.iter().map(|f| f.s));
                }
            }
        }
        ridge.sort_by(|a, b| a.partial_cmp(b).unwrap());
        ridge.dedup_by(|a, b| (*a - *b).abs() <= 10.0 * cfg.root_tol);

        Ok(FeatureCircles {
            parabolic,
            ridge,
            ridge_degenerate,
        })
    }

    /// Parallel circles at θ = k·Δθ on every profile segment chart,
    /// merged in ascending arc length.
    pub fn equal_theta_rings(&self, delta_theta: f64) -> Result<Vec<RingStation>> {
        let mut out = Vec::new();
        let mut any = false;
        for seg in &self.segments {
            match seg.equal_theta_markers(delta_theta) {
                Ok(ms) => {
                    any = true;
                    for m in &ms.markers {
                        out.push(RingStation {
                            s: m.s,
                            theta: m.theta,
                            segment: Some(seg.index()),
                        });
                    }
                }
                Err(Error::StepTooLarge { .. }) => continue,
                Err(e) => return Err(e),
            }
        }
        if !any {
            let seg = self.segments.first().expect("stratified profile");
            return Err(Error::StepTooLarge {
                step: delta_theta,
                lo: seg.theta_min(),
                hi: seg.theta_max(),
            });
        }
        out.sort_by(|a, b| a.s.partial_cmp(&b.s).unwrap());
        Ok(out)
    }

    /// The chart identity along a meridian: |∂f/∂θ|² differentiated in θ
    /// equals −(2/κ₁⁴)·∂κ₁/∂s. The left side is a centered difference of
    /// |∂f/∂θ|² sampled on the surface at u = 0 (the value does not
    /// depend on u); the right side comes from profile frame data.
    pub fn profile_identity_residual(
        &self,
        segment: usize,
        theta: f64,
        h: f64,
    ) -> Result<IdentityCheck> {
        let seg = self.segments.get(segment).ok_or(Error::Config(format!(
            "segment index {segment} out of range ({} segments)",
            self.segments.len()
        )))?;
        let (lo, hi) = (seg.theta_min(), seg.theta_max());
        if theta - h < lo || theta + h > hi {
            return Err(Error::OutOfRange {
                value: theta,
                lo: lo + h,
                hi: hi - h,
            });
        }
        let speed_sq = |th: f64| -> Result<f64> {
            let s = seg.s_of_theta(th)?;
            let p = self.sample(s, 0.0)?;
            // |∂f/∂s|² from the embedded meridian tangent, divided by
            // the chart rate κ₁² (∂f/∂θ = f_s / κ₁).
            let f = self.profile.frame_at_s(s)?;
            let meridian = Vec3::new(f.tangent.x, 0.0, f.tangent.y);
            Ok(meridian.dot(meridian) / (p.kappa1 * p.kappa1))
        };
        let gp = speed_sq(theta + h)?;
        let gm = speed_sq(theta - h)?;
        let lhs = (gp - gm) / (2.0 * h);
        let s = seg.s_of_theta(theta)?;
        let f = self.profile.frame_at_s(s)?;
        let o = self.orient();
        let kappa1 = o * f.kappa;
        let dk1 = o * f.dkappa_ds;
        let rhs = -2.0 / kappa1.powi(4) * dk1;
        Ok(IdentityCheck {
            lhs,
            rhs,
            residual: (lhs - rhs).abs(),
        })
    }
}

fn classify(gaussian: f64) -> Region {
    if gaussian.abs() < PARABOLIC_EPS {
        Region::Parabolic
    } else if gaussian > 0.0 {
        Region::Elliptic
    } else {
        Region::Hyperbolic
    }
}
