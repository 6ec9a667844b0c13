//! Construct curves from prescribed curvature, in both the arc-length
//! form γ(s) = p₀ + ∫ (cos θ(s), sin θ(s)) ds with θ = α + ∫ κ ds, and
//! the tangential-angle form γ(θ) = ∫ (1/κ)(cos θ, sin θ) dθ. Also hosts
//! the built-in gallery of classical curves.

use std::f64::consts::PI;

use crate::curve::PlaneCurve;
use crate::error::{Error, Result};
use crate::expr::Expression;
use crate::geom::Vec2;
use crate::numerics::ToleranceConfig;

/// Curve with curvature κ(s) prescribed as a function of arc length.
/// `start_point` and `start_angle` fix position and tangent direction at
/// s = 0 (or the domain midpoint when 0 lies outside the domain).
pub fn curve_from_curvature_arclength(
    kappa: Expression,
    domain: (f64, f64),
    start_point: Vec2,
    start_angle: f64,
    cfg: &ToleranceConfig,
) -> Result<PlaneCurve> {
    PlaneCurve::from_curvature_arclength(kappa, domain, start_point, start_angle, Vec2::ZERO, cfg)
}

/// Same, with an extra rigid translation applied to every position.
pub fn curve_from_curvature_arclength_offset(
    kappa: Expression,
    domain: (f64, f64),
    start_point: Vec2,
    start_angle: f64,
    offset: Vec2,
    cfg: &ToleranceConfig,
) -> Result<PlaneCurve> {
    PlaneCurve::from_curvature_arclength(kappa, domain, start_point, start_angle, offset, cfg)
}

/// Curve with curvature κ(θ) prescribed as a function of its tangential
/// angle. The position at θ = `base_c` is the origin; 1/κ must stay
/// bounded on the domain.
pub fn curve_from_curvature_theta(
    kappa_of_theta: Expression,
    theta_domain: (f64, f64),
    base_c: f64,
    cfg: &ToleranceConfig,
) -> Result<PlaneCurve> {
    PlaneCurve::from_curvature_theta(kappa_of_theta, theta_domain, base_c, Vec2::ZERO, cfg)
}

/// The built-in curves used throughout the tests and the figure gallery.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Builtin {
    /// Circle of the given radius through (0, −r), κ ≡ 1/r.
    Circle { radius: f64 },
    /// x ↦ (x, ∫ x²/√(1−x⁴)); κ = 2x, arc length the lemniscate integral.
    Elastica,
    /// Fresnel-integral curve with κ(s) = s.
    EulerSpiral,
    /// Curve built from κ(s) = 1 + s², carrying a vertex at s = 0.
    Kappa1PlusS2,
}

impl Builtin {
    pub fn from_name(name: &str, radius: Option<f64>) -> Result<Builtin> {
        Ok(match name {
            "circle" => Builtin::Circle {
                radius: radius.unwrap_or(1.0),
            },
            "elastica" => Builtin::Elastica,
            "euler_spiral" => Builtin::EulerSpiral,
            "kappa_1_plus_s2" => Builtin::Kappa1PlusS2,
            other => return Err(Error::UnknownBuiltin(other.to_string())),
        })
    }

    /// Default domain of the builtin's native parameter.
    pub fn default_domain(&self) -> (f64, f64) {
        match self {
            Builtin::Circle { radius } => (-PI * radius, PI * radius),
            // The usable graph domain stops short of x = ±1 where the
            // slope integrand is singular.
            Builtin::Elastica => (-(1.0 - 1e-6), 1.0 - 1e-6),
            Builtin::EulerSpiral => (-3.0, 3.0),
            Builtin::Kappa1PlusS2 => (-2.0, 2.0),
        }
    }

    pub fn build(&self, cfg: &ToleranceConfig) -> Result<PlaneCurve> {
        self.build_on(self.default_domain(), Vec2::ZERO, cfg)
    }

    pub fn build_on(
        &self,
        domain: (f64, f64),
        offset: Vec2,
        cfg: &ToleranceConfig,
    ) -> Result<PlaneCurve> {
        match self {
            Builtin::Circle { radius } => {
                if *radius <= 0.0 || radius.is_nan() {
                    return Err(Error::Config("circle radius must be positive".into()));
                }
                PlaneCurve::from_curvature_arclength(
                    Expression::constant(1.0 / radius),
                    domain,
                    Vec2::new(0.0, -radius),
                    0.0,
                    offset,
                    cfg,
                )
            }
            Builtin::Elastica => PlaneCurve::graph(
                Expression::parse("x^2 / sqrt(1 - x^4)").expect("builtin slope"),
                domain,
                Vec2::ZERO,
                offset,
                cfg,
            ),
            Builtin::EulerSpiral => PlaneCurve::from_curvature_arclength(
                Expression::identity("s"),
                domain,
                Vec2::ZERO,
                0.0,
                offset,
                cfg,
            ),
            Builtin::Kappa1PlusS2 => PlaneCurve::from_curvature_arclength(
                Expression::parse("1 + s^2").expect("builtin curvature"),
                domain,
                Vec2::ZERO,
                0.0,
                offset,
                cfg,
            ),
        }
    }
}

/// Build a builtin by name with its default domain.
pub fn builtin_curve(name: &str, radius: Option<f64>, cfg: &ToleranceConfig) -> Result<PlaneCurve> {
    Builtin::from_name(name, radius)?.build(cfg)
}

/// Radial factor r(θ) of the closed polar form r(θ)(cos θ, sin θ)
/// associated with the κ(s) = 1 + s² example: r is the real root of
/// r³ + 3r − 3θ = 0, i.e. the arc length with tangential angle θ under
/// the chart θ = s + s³/3. Evaluated in Cardano form, which is exact at
/// θ = 0.
pub fn vertex_example_radial(theta: f64) -> f64 {
    let u = ((3.0 * theta + (9.0 * theta * theta + 4.0).sqrt()) / 2.0).cbrt();
    u - 1.0 / u
}

/// Position of the closed polar form r(θ)(cos θ + shift, sin θ).
pub fn vertex_example_closed_form(theta: f64, shift: f64) -> Vec2 {
    let r = vertex_example_radial(theta);
    Vec2::new(r * (theta.cos() + shift), r * theta.sin())
}

/// κ(θ) of the κ(s) = 1 + s² curve with s expressed through the chart:
/// usable as input to [`curve_from_curvature_theta`].
pub fn vertex_example_kappa_of_theta() -> Expression {
    Expression::parse(
        "1 + (((3*t + sqrt(9*t^2 + 4))/2)^(1/3) - ((3*t + sqrt(9*t^2 + 4))/2)^(-1/3))^2",
    )
    .expect("closed-form curvature")
}
