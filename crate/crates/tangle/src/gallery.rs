//! Preset figure configurations, one per classical showcase: elastica
//! markers with the θ(s) chart, the divided Euler spiral, the vertex
//! curve, and the revolved versions of each. The `configs/` directory
//! of this crate carries the same presets as committed JSON files.

use std::f64::consts::PI;

use crate::config::{
    CurveSpec, MarkerOptions, OutputFormat, OutputSpec, RunConfig, SurfaceOptions, SvgVariant,
    ToleranceOverrides,
};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GalleryFigure {
    Fig2Elastica,
    Fig3Euler,
    Fig4Vertex,
    Fig6SurfaceEuler,
    Fig7SurfaceVertex,
    Fig8Wireframes,
}

impl GalleryFigure {
    pub const ALL: [GalleryFigure; 6] = [
        GalleryFigure::Fig2Elastica,
        GalleryFigure::Fig3Euler,
        GalleryFigure::Fig4Vertex,
        GalleryFigure::Fig6SurfaceEuler,
        GalleryFigure::Fig7SurfaceVertex,
        GalleryFigure::Fig8Wireframes,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            GalleryFigure::Fig2Elastica => "fig2_elastica",
            GalleryFigure::Fig3Euler => "fig3_euler",
            GalleryFigure::Fig4Vertex => "fig4_vertex",
            GalleryFigure::Fig6SurfaceEuler => "fig6_surface_euler",
            GalleryFigure::Fig7SurfaceVertex => "fig7_surface_vertex",
            GalleryFigure::Fig8Wireframes => "fig8_wireframes",
        }
    }

    pub fn from_name(name: &str) -> Result<GalleryFigure> {
        Self::ALL
            .into_iter()
            .find(|f| f.name() == name)
            .ok_or_else(|| {
                Error::Config(format!(
                    "unknown gallery figure `{name}` (expected one of: {})",
                    Self::ALL.map(|f| f.name()).join(", ")
                ))
            })
    }

    /// The run configurations of this figure, named after their output
    /// stem. Most figures are a single run; the wireframe pair is two.
    pub fn configs(&self) -> Vec<(&'static str, RunConfig)> {
        match self {
            GalleryFigure::Fig2Elastica => vec![("fig2_elastica", fig2_elastica())],
            GalleryFigure::Fig3Euler => vec![("fig3_euler", fig3_euler())],
            GalleryFigure::Fig4Vertex => vec![("fig4_vertex", fig4_vertex())],
            GalleryFigure::Fig6SurfaceEuler => {
                vec![("fig6_surface_euler", fig6_surface_euler())]
            }
            GalleryFigure::Fig7SurfaceVertex => {
                vec![("fig7_surface_vertex", fig7_surface_vertex())]
            }
            GalleryFigure::Fig8Wireframes => vec![
                ("fig8_euler_wire", fig8_euler_wire()),
                ("fig8_elastica_wire", fig8_elastica_wire()),
            ],
        }
    }
}

fn base(curve: CurveSpec, theta_step: f64, outputs: Vec<OutputSpec>) -> RunConfig {
    RunConfig {
        curve,
        theta_step,
        markers: MarkerOptions::default(),
        surface: SurfaceOptions::default(),
        tolerances: ToleranceOverrides::default(),
        seed: 42,
        outputs,
    }
}

fn out(format: OutputFormat, path: &str) -> OutputSpec {
    OutputSpec {
        format,
        path: path.to_string(),
        variant: SvgVariant::Curve,
    }
}

fn theta_plot(path: &str) -> OutputSpec {
    OutputSpec {
        format: OutputFormat::Svg,
        path: path.to_string(),
        variant: SvgVariant::ThetaPlot,
    }
}

pub fn fig2_elastica() -> RunConfig {
    base(
        CurveSpec::Builtin {
            name: "elastica".into(),
            radius: None,
            domain: None,
            offset: [0.0, 0.0],
            base_c: Some(0.0),
        },
        PI / 18.0,
        vec![
            out(OutputFormat::Svg, "fig2_elastica.svg"),
            theta_plot("fig2_elastica_theta.svg"),
            out(OutputFormat::Csv, "fig2_elastica.csv"),
        ],
    )
}

pub fn fig3_euler() -> RunConfig {
    base(
        CurveSpec::Builtin {
            name: "euler_spiral".into(),
            radius: None,
            domain: None,
            offset: [0.0, 0.0],
            base_c: Some(0.0),
        },
        0.5,
        vec![
            out(OutputFormat::Svg, "fig3_euler.svg"),
            out(OutputFormat::Csv, "fig3_euler.csv"),
        ],
    )
}

pub fn fig4_vertex() -> RunConfig {
    base(
        CurveSpec::Builtin {
            name: "kappa_1_plus_s2".into(),
            radius: None,
            domain: None,
            offset: [0.0, 0.0],
            base_c: Some(0.0),
        },
        0.25,
        vec![
            out(OutputFormat::Svg, "fig4_vertex.svg"),
            out(OutputFormat::Csv, "fig4_vertex.csv"),
        ],
    )
}

/// Euler-spiral profile pushed 2 units off the axis and revolved. The
/// domain stops at |s| = 2.2 so the inflection circle is the only
/// parabolic locus on the surface.
pub fn fig6_surface_euler() -> RunConfig {
    let mut cfg = base(
        CurveSpec::CurvatureS {
            kappa: "s".into(),
            domain: [-2.2, 2.2],
            start_point: [2.0, 0.0],
            start_angle: 0.0,
            offset: [0.0, 0.0],
            base_c: Some(0.0),
        },
        0.25,
        vec![
            out(OutputFormat::Obj, "fig6_surface_euler.obj"),
            out(OutputFormat::Report, "fig6_surface_euler_report.json"),
        ],
    );
    cfg.surface = SurfaceOptions {
        enabled: true,
        u_count: 64,
        include_faces: true,
        flip_orientation: false,
    };
    cfg
}

/// κ = 1 + s² profile revolved into a vase: the tangent at the vertex
/// runs along the axis (start_angle = π/2) so the ridge circle is a
/// genuine waist rather than a flat parallel.
pub fn fig7_surface_vertex() -> RunConfig {
    let mut cfg = base(
        CurveSpec::CurvatureS {
            kappa: "1 + s^2".into(),
            domain: [-2.0, 2.0],
            start_point: [2.0, 0.0],
            start_angle: std::f64::consts::FRAC_PI_2,
            offset: [0.0, 0.0],
            base_c: Some(0.0),
        },
        0.25,
        vec![
            out(OutputFormat::Obj, "fig7_surface_vertex.obj"),
            out(OutputFormat::Report, "fig7_surface_vertex_report.json"),
        ],
    );
    cfg.surface = SurfaceOptions {
        enabled: true,
        u_count: 64,
        include_faces: true,
        flip_orientation: false,
    };
    cfg
}

pub fn fig8_euler_wire() -> RunConfig {
    let mut cfg = base(
        CurveSpec::CurvatureS {
            kappa: "s".into(),
            domain: [-2.2, 2.2],
            start_point: [2.0, 0.0],
            start_angle: 0.0,
            offset: [0.0, 0.0],
            base_c: Some(0.0),
        },
        0.2,
        vec![out(OutputFormat::Obj, "fig8_euler_wire.obj")],
    );
    cfg.surface = SurfaceOptions {
        enabled: true,
        u_count: 48,
        include_faces: false,
        flip_orientation: false,
    };
    cfg
}

pub fn fig8_elastica_wire() -> RunConfig {
    let mut cfg = base(
        CurveSpec::Builtin {
            name: "elastica".into(),
            radius: None,
            domain: None,
            offset: [2.0, 0.0],
            base_c: Some(0.0),
        },
        0.15,
        vec![out(OutputFormat::Obj, "fig8_elastica_wire.obj")],
    );
    cfg.surface = SurfaceOptions {
        enabled: true,
        u_count: 48,
        include_faces: false,
        flip_orientation: false,
    };
    cfg
}
