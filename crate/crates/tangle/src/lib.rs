//! tangle — TANgential anGLE machinery for plane curves and surfaces of
//! revolution.
//!
//! The tangential angle θ(s) = ∫ κ ds turns curvature into a parameter:
//! markers placed at equal θ-increments crowd together exactly where a
//! curve bends hard, and the same chart drawn along the profile of a
//! surface of revolution spaces its parallel circles by bending rate.
//! This crate provides
//!
//! * an expression parser with exact derivatives up to order 3
//!   ([`expr`]),
//! * adaptive quadrature, bracketed root finding and monotone inversion
//!   ([`numerics`]),
//! * the plane-curve kernel: frames, stratification at inflections,
//!   θ-charts, equal-θ markers, vertex detection ([`curve`]),
//! * curve construction from prescribed curvature, plus a small gallery
//!   of classical curves ([`synthesis`]),
//! * surfaces of revolution with principal curvatures, parabolic and
//!   ridge circles, and curvature-line meshes ([`surface`]),
//! * deterministic SVG/CSV/OBJ emitters ([`render`]),
//! * a JSON-configured CLI with a verification mode ([`cli`]).
//!
//! Start with the `examples/` directory: each file is a runnable tour of
//! one capability. The short version:
//!
//! ```
//! use tangle::expr::Expression;
//! use tangle::numerics::ToleranceConfig;
//! use tangle::synthesis::curve_from_curvature_arclength;
//! use tangle::geom::Vec2;
//!
//! # fn main() -> tangle::Result<()> {
//! // A curve with curvature kappa(s) = s: the clothoid.
//! let tol = ToleranceConfig::default();
//! let spiral = curve_from_curvature_arclength(
//!     Expression::parse("s")?, (-3.0, 3.0), Vec2::ZERO, 0.0, &tol)?;
//!
//! // Split at the inflection and chart the positive arm by its
//! // tangential angle, theta = s^2/2.
//! let segments = spiral.stratify(&tol)?;
//! let arm = segments[1].with_base_point(0.0)?;
//! assert!((arm.theta_of_s(2.0_f64.sqrt())? - 1.0).abs() < 1e-9);
//! assert!((arm.s_of_theta(0.5)? - 1.0).abs() < 1e-9);
//!
//! // Markers at equal theta-steps crowd where the spiral winds tighter.
//! let markers = arm.equal_theta_markers(0.5)?;
//! assert!((markers.markers[0].s - 1.0).abs() < 1e-9);
//! # Ok(())
//! # }
//! ```

pub mod curve;
pub mod error;
pub mod expr;
pub mod geom;
pub mod numerics;
pub mod render;
pub mod surface;
pub mod synthesis;

mod table;

pub mod cli;
pub mod config;
pub mod gallery;
pub mod verify;

pub use error::{Error, Result};

#[cfg(test)]
mod concurrency {
    /// Curves, segments, surfaces and meshes are immutable after
    /// construction and shareable across threads.
    #[test]
    fn kernel_types_are_send_and_sync() {
        fn check<T: Send + Sync>() {}
        check::<crate::curve::PlaneCurve>();
        check::<crate::curve::CurveSegment>();
        check::<crate::curve::MarkerSet>();
        check::<crate::expr::Expression>();
        check::<crate::surface::SurfaceOfRevolution>();
        check::<crate::surface::RevolutionMesh>();
    }
}
