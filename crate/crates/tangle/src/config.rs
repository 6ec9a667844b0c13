//! JSON run configuration shared by the CLI subcommands.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::ToleranceConfig;

/// Top-level configuration: which curve, which chart step, what to emit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub curve: CurveSpec,
    /// Tangential-angle step Δθ for markers and rings.
    pub theta_step: f64,
    #[serde(default)]
    pub markers: MarkerOptions,
    #[serde(default)]
    pub surface: SurfaceOptions,
    #[serde(default)]
    pub tolerances: ToleranceOverrides,
    /// Seed for the verification sampler.
    #[serde(default = "default_seed")]
    pub seed: u64,
    pub outputs: Vec<OutputSpec>,
}

fn default_seed() -> u64 {
    42
}

/// Curve description. Expressions are text in the grammar documented in
/// the README; the variable name is inferred per expression.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum CurveSpec {
    /// x(t), y(t) on an open interval.
    Parametric {
        x: String,
        y: String,
        domain: [f64; 2],
        #[serde(default)]
        offset: [f64; 2],
        #[serde(default, skip_serializing_if = "Option::is_none")]
        base_c: Option<f64>,
    },
    /// κ(s) with position and tangent direction fixed at s = 0.
    CurvatureS {
        kappa: String,
        domain: [f64; 2],
        #[serde(default)]
        start_point: [f64; 2],
        #[serde(default)]
        start_angle: f64,
        #[serde(default)]
        offset: [f64; 2],
        #[serde(default, skip_serializing_if = "Option::is_none")]
        base_c: Option<f64>,
    },
    /// One of the built-in curves.
    Builtin {
        name: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        radius: Option<f64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        domain: Option<[f64; 2]>,
        #[serde(default)]
        offset: [f64; 2],
        #[serde(default, skip_serializing_if = "Option::is_none")]
        base_c: Option<f64>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MarkerOptions {
    /// Marker radius as a fraction of the viewBox diagonal.
    pub radius_frac: f64,
}

impl Default for MarkerOptions {
    fn default() -> Self {
        MarkerOptions { radius_frac: 0.008 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SurfaceOptions {
    /// Revolve the curve and emit surface outputs.
    pub enabled: bool,
    /// Meridian count of exported meshes.
    pub u_count: usize,
    /// Emit quad faces between consecutive rings.
    pub include_faces: bool,
    /// Flip the global normal orientation.
    pub flip_orientation: bool,
}

impl Default for SurfaceOptions {
    fn default() -> Self {
        SurfaceOptions {
            enabled: false,
            u_count: 64,
            include_faces: false,
            flip_orientation: false,
        }
    }
}

/// Optional overrides of the numerical tolerances.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ToleranceOverrides {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quad_tol: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub root_tol: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grid_n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_depth: Option<u32>,
}

impl ToleranceOverrides {
    pub fn resolve(&self) -> ToleranceConfig {
        let d = ToleranceConfig::default();
        ToleranceConfig {
            quad_tol: self.quad_tol.unwrap_or(d.quad_tol),
            root_tol: self.root_tol.unwrap_or(d.root_tol),
            grid_n: self.grid_n.unwrap_or(d.grid_n),
            max_depth: self.max_depth.unwrap_or(d.max_depth),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OutputFormat {
    Svg,
    Csv,
    Obj,
    Report,
}

/// For SVG outputs, which plot to draw.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SvgVariant {
    #[default]
    Curve,
    ThetaPlot,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputSpec {
    pub format: OutputFormat,
    pub path: String,
    #[serde(default, skip_serializing_if = "is_default_variant")]
    pub variant: SvgVariant,
}

fn is_default_variant(v: &SvgVariant) -> bool {
    *v == SvgVariant::Curve
}

impl RunConfig {
    /// Parse from JSON, reporting the offending key path on schema
    /// errors.
    pub fn from_json(text: &str) -> Result<RunConfig> {
        let de = &mut serde_json::Deserializer::from_str(text);
        let cfg: RunConfig = serde_path_to_error::deserialize(de)
            .map_err(|e| Error::Config(format!("{}: {}", e.path(), e.inner())))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.theta_step <= 0.0 || self.theta_step.is_nan() {
            return Err(Error::Config("theta_step must be positive".into()));
        }
        if self.outputs.is_empty() {
            return Err(Error::Config("at least one output is required".into()));
        }
        let domain = match &self.curve {
            CurveSpec::Parametric { domain, .. } => Some(*domain),
            CurveSpec::CurvatureS { domain, .. } => Some(*domain),
            CurveSpec::Builtin { domain, .. } => *domain,
        };
        if let Some([a, b]) = domain {
            if a >= b || !a.is_finite() || !b.is_finite() {
                return Err(Error::Config("curve.domain must satisfy a < b".into()));
            }
        }
        if self.surface.enabled && self.surface.u_count < 3 {
            return Err(Error::Config("surface.u_count must be at least 3".into()));
        }
        if self.markers.radius_frac <= 0.0 || self.markers.radius_frac.is_nan() {
            return Err(Error::Config("markers.radius_frac must be positive".into()));
        }
        self.tolerances.resolve().validate()?;
        Ok(())
    }

    /// Base-point override shared by all curve kinds.
    pub fn base_c(&self) -> Option<f64> {
        match &self.curve {
            CurveSpec::Parametric { base_c, .. }
            | CurveSpec::CurvatureS { base_c, .. }
            | CurveSpec::Builtin { base_c, .. } => *base_c,
        }
    }

    /// Materialize the configured geometry: curve, stratified segments
    /// (re-based when `base_c` is set), and optionally the revolved
    /// surface.
    pub fn build_scene(&self) -> Result<Scene> {
        let tol = self.tolerances.resolve();
        let curve = match &self.curve {
            CurveSpec::Parametric {
                x,
                y,
                domain,
                offset,
                ..
            } => crate::curve::PlaneCurve::parametric_with(
                crate::expr::Expression::parse(x)?,
                crate::expr::Expression::parse(y)?,
                (domain[0], domain[1]),
                crate::geom::Vec2::new(offset[0], offset[1]),
                &tol,
            )?,
            CurveSpec::CurvatureS {
                kappa,
                domain,
                start_point,
                start_angle,
                offset,
                ..
            } => crate::synthesis::curve_from_curvature_arclength_offset(
                crate::expr::Expression::parse(kappa)?,
                (domain[0], domain[1]),
                crate::geom::Vec2::new(start_point[0], start_point[1]),
                *start_angle,
                crate::geom::Vec2::new(offset[0], offset[1]),
                &tol,
            )?,
            CurveSpec::Builtin {
                name,
                radius,
                domain,
                offset,
                ..
            } => {
                let builtin = crate::synthesis::Builtin::from_name(name, *radius)?;
                let domain = domain
                    .map(|[a, b]| (a, b))
                    .unwrap_or_else(|| builtin.default_domain());
                builtin.build_on(domain, crate::geom::Vec2::new(offset[0], offset[1]), &tol)?
            }
        };
        let mut segments = curve.stratify(&tol)?;
        if let Some(c) = self.base_c() {
            for seg in &mut segments {
                let (lo, hi) = seg.s_range();
                *seg = seg.with_base_point(c.clamp(lo, hi))?;
            }
        }
        let surface = if self.surface.enabled {
            let mut surf = crate::surface::revolve(curve.clone(), &tol)?;
            if self.surface.flip_orientation {
                surf = surf.with_flipped_orientation();
            }
            // The surface keeps the same chart bases as the plane view.
            *surf.segments_mut() = segments.clone();
            Some(surf)
        } else {
            None
        };
        Ok(Scene {
            tolerances: tol,
            curve,
            segments,
            surface,
        })
    }
}

/// Geometry materialized from a [`RunConfig`].
#[derive(Debug, Clone)]
pub struct Scene {
    pub tolerances: ToleranceConfig,
    pub curve: crate::curve::PlaneCurve,
    pub segments: Vec<crate::curve::CurveSegment>,
    pub surface: Option<crate::surface::SurfaceOfRevolution>,
}
