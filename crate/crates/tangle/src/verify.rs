//! Numerical verification: sample the chart identity at seeded random
//! chart values, check chart round trips, and report feature stations,
//! all against the tolerance 1e-6·(1+|rhs|).

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::config::Scene;
use crate::error::Result;
use crate::surface::ParabolicCause;

/// Relative tolerance factor of the identity check.
pub const IDENTITY_TOL: f64 = 1e-6;
/// Finite-difference step of the identity check.
pub const IDENTITY_FD_STEP: f64 = 1e-4;
/// Samples stay inside the middle of the chart by this fraction per
/// side; the θ-derivative of 1/κ² is ill-conditioned for finite
/// differences next to inflections.
pub const CHART_MARGIN: f64 = 0.1;

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub seed: u64,
    pub samples: usize,
    pub tolerance_factor: f64,
    /// Arc-length stations of interior inflections (segment boundaries).
    pub inflections: Vec<f64>,
    pub segments: Vec<SegmentReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub surface: Option<SurfaceReport>,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SegmentReport {
    pub index: usize,
    pub sign: f64,
    pub s_range: (f64, f64),
    pub theta_range: (f64, f64),
    pub chart_round_trip_max: f64,
    pub identity_max_residual: f64,
    pub identity_mean_residual: f64,
    pub identity_ok: bool,
    pub vertices: Vec<f64>,
    pub vertices_degenerate: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SurfaceReport {
    pub parabolic: Vec<ParabolicStation>,
    pub ridge: Vec<f64>,
    pub ridge_degenerate: bool,
    pub segments: Vec<SurfaceSegmentReport>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ParabolicStation {
    pub s: f64,
    pub cause: ParabolicCause,
}

#[derive(Debug, Clone, Serialize)]
pub struct SurfaceSegmentReport {
    pub index: usize,
    pub identity_max_residual: f64,
    pub identity_mean_residual: f64,
    pub identity_ok: bool,
}

/// Seeded chart values in the middle (1 − 2·margin) of a chart range.
fn chart_samples(rng: &mut ChaCha8Rng, lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let span = hi - lo;
    let (a, b) = (lo + CHART_MARGIN * span, hi - CHART_MARGIN * span);
    (0..n).map(|_| rng.random_range(a..b)).collect()
}

/// Run the full verification on a materialized scene.
pub fn verify_scene(scene: &Scene, samples: usize, seed: u64) -> Result<VerificationReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pass = true;

    let mut inflections = Vec::new();
    for pair in scene.segments.windows(2) {
        inflections.push(pair[0].s_range().1);
    }

    let mut seg_reports = Vec::with_capacity(scene.segments.len());
    for seg in &scene.segments {
        let thetas = chart_samples(&mut rng, seg.theta_min(), seg.theta_max(), samples);
        let mut max_res = 0.0f64;
        let mut sum_res = 0.0f64;
        let mut ok = true;
        let mut round_trip = 0.0f64;
        for &th in &thetas {
            let chk = seg.identity_residual(th, IDENTITY_FD_STEP)?;
            max_res = max_res.max(chk.residual);
            sum_res += chk.residual;
            if chk.residual > IDENTITY_TOL * (1.0 + chk.rhs.abs()) {
                ok = false;
            }
            let s = seg.s_of_theta(th)?;
            round_trip = round_trip.max((seg.theta_of_s(s)? - th).abs());
        }
        let (vertices, degenerate) = match seg.detect_vertices(&scene.tolerances)? {
            crate::curve::VertexScan::Vertices(v) => {
                (v.iter().map(|f| f.s).collect::<Vec<_>>(), false)
            }
            crate::curve::VertexScan::DegenerateAllVertices => (Vec::new(), true),
        };
        pass &= ok;
        seg_reports.push(SegmentReport {
            index: seg.index(),
            sign: seg.sign(),
            s_range: seg.s_range(),
            theta_range: seg.theta_range(),
            chart_round_trip_max: round_trip,
            identity_max_residual: max_res,
            identity_mean_residual: if thetas.is_empty() {
                0.0
            } else {
                sum_res / thetas.len() as f64
            },
            identity_ok: ok,
            vertices,
            vertices_degenerate: degenerate,
        });
    }

    let surface = match &scene.surface {
        None => None,
        Some(surf) => {
            let features = surf.feature_circles(&scene.tolerances)?;
            let mut reports = Vec::new();
            for seg in surf.segments() {
                let thetas = chart_samples(&mut rng, seg.theta_min(), seg.theta_max(), samples);
                let mut max_res = 0.0f64;
                let mut sum_res = 0.0f64;
                let mut ok = true;
                for &th in &thetas {
                    let chk = surf.profile_identity_residual(seg.index(), th, IDENTITY_FD_STEP)?;
                    max_res = max_res.max(chk.residual);
                    sum_res += chk.residual;
                    if chk.residual > IDENTITY_TOL * (1.0 + chk.rhs.abs()) {
                        ok = false;
                    }
                }
                pass &= ok;
                reports.push(SurfaceSegmentReport {
                    index: seg.index(),
                    identity_max_residual: max_res,
                    identity_mean_residual: if thetas.is_empty() {
                        0.0
                    } else {
                        sum_res / thetas.len() as f64
                    },
                    identity_ok: ok,
                });
            }
            Some(SurfaceReport {
                parabolic: features
                    .parabolic
                    .iter()
                    .map(|(s, cause)| ParabolicStation {
                        s: *s,
                        cause: *cause,
                    })
                    .collect(),
                ridge: features.ridge.clone(),
                ridge_degenerate: features.ridge_degenerate,
                segments: reports,
            })
        }
    };

    Ok(VerificationReport {
        seed,
        samples,
        tolerance_factor: IDENTITY_TOL,
        inflections,
        segments: seg_reports,
        surface,
        pass,
    })
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization");
        s.push('\n');
        s
    }
}
