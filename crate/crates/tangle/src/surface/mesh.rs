//! Curvature-line meshes of revolution surfaces: rings (parallels) at
//! chosen arc-length stations crossed with equally spaced meridians,
//! with feature circles inserted at their exact stations.

use super::{FeatureCircles, Region, RingStation, SurfaceOfRevolution};
use crate::error::{Error, Result};
use crate::geom::Vec3;
use crate::numerics::ToleranceConfig;

/// Feature tag carried by a mesh ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingFeature {
    Parabolic,
    Ridge,
}

impl RingFeature {
    pub fn as_str(self) -> &'static str {
        match self {
            RingFeature::Parabolic => "parabolic",
            RingFeature::Ridge => "ridge",
        }
    }
}

/// One parallel circle of the mesh. Its `u_count` vertices start at
/// `first_vertex` and share the station's z and radius.
#[derive(Debug, Clone, Copy)]
pub struct MeshRing {
    pub s: f64,
    pub theta: Option<f64>,
    pub segment: Option<usize>,
    pub region: Region,
    pub feature: Option<RingFeature>,
    pub first_vertex: usize,
}

/// Vertices, rings, meridians and optional quad faces of a revolution
/// mesh. Ordering is deterministic: rings ascend in arc length and each
/// ring's vertices ascend in u.
#[derive(Debug, Clone)]
pub struct RevolutionMesh {
    pub vertices: Vec<Vec3>,
    pub vertex_regions: Vec<Region>,
    pub rings: Vec<MeshRing>,
    pub meridians: Vec<Vec<usize>>,
    pub faces: Option<Vec<[usize; 4]>>,
    pub u_count: usize,
}

impl RevolutionMesh {
    /// Vertex indices of one ring, in u order.
    pub fn ring_vertices(&self, ring: &MeshRing) -> std::ops::Range<usize> {
        ring.first_vertex..ring.first_vertex + self.u_count
    }
}

/// Build the mesh at the given ring stations with `u_count` meridians.
/// Parabolic and ridge circles are inserted at their exact stations in
/// addition to the requested ones.
pub fn build_mesh(
    surface: &SurfaceOfRevolution,
    stations: &[RingStation],
    u_count: usize,
    include_faces: bool,
    cfg: &ToleranceConfig,
) -> Result<RevolutionMesh> {
    if u_count < 3 {
        return Err(Error::Config("u_count must be at least 3".into()));
    }
    if stations.len() < 2 {
        return Err(Error::EmptyInput(
            "build_mesh needs at least 2 ring stations",
        ));
    }

    let features = surface.feature_circles(cfg)?;
    let mut slots: Vec<(RingStation, Option<RingFeature>)> = stations
        .iter()
        .map(|st| (*st, feature_of(&features, st.s, cfg)))
        .collect();
    // Insert feature rings not already hit by a requested station.
    let (slo, shi) = surface.s_domain();
    let mut extra: Vec<(f64, RingFeature)> = Vec::new();
    extra.extend(
        features
            .parabolic
            .iter()
            .map(|(s, _)| (*s, RingFeature::Parabolic)),
    );
    extra.extend(features.ridge.iter().map(|s| (*s, RingFeature::Ridge)));
    for (s, feat) in extra {
        if s <= slo || s >= shi {
            continue;
        }
        let hit = slots.iter().any(|(st, _)| (st.s - s).abs() <= 1e-9);
        if !hit {
            slots.push((
                RingStation {
                    s,
                    theta: None,
                    segment: None,
                },
                Some(feat),
            ));
        }
    }
    slots.sort_by(|a, b| a.0.s.partial_cmp(&b.0.s).unwrap());

    let mut vertices = Vec::with_capacity(slots.len() * u_count);
    let mut vertex_regions = Vec::with_capacity(slots.len() * u_count);
    let mut rings = Vec::with_capacity(slots.len());
    for (station, feature) in &slots {
        let frame = surface.profile().frame_at_s(station.s)?;
        let radius = frame.position.x;
        let z = frame.position.y;
        let region = surface.region_classification(station.s)?;
        let first_vertex = vertices.len();
        for j in 0..u_count {
            let u = 2.0 * std::f64::consts::PI * j as f64 / u_count as f64;
            let (su, cu) = u.sin_cos();
            vertices.push(Vec3::new(radius * cu, radius * su, z));
            vertex_regions.push(region);
        }
        rings.push(MeshRing {
            s: station.s,
            theta: station.theta,
            segment: station.segment,
            region,
            feature: *feature,
            first_vertex,
        });
    }

    let meridians = (0..u_count)
        .map(|j| rings.iter().map(|r| r.first_vertex + j).collect())
        .collect();

    let faces = include_faces.then(|| {
        let mut faces = Vec::with_capacity((rings.len() - 1) * u_count);
        for pair in rings.windows(2) {
            let (a, b) = (pair[0].first_vertex, pair[1].first_vertex);
            for j in 0..u_count {
                let jn = (j + 1) % u_count;
                faces.push([a + j, a + jn, b + jn, b + j]);
            }
        }
        faces
    });

    Ok(RevolutionMesh {
        vertices,
        vertex_regions,
        rings,
        meridians,
        faces,
        u_count,
    })
}

fn feature_of(features: &FeatureCircles, s: f64, cfg: &ToleranceConfig) -> Option<RingFeature> {
    let tol = 100.0 * cfg.root_tol;
    // Ridge wins when a station is both; it is the rarer highlight.
    if features.ridge.iter().any(|r| (r - s).abs() <= tol) {
        return Some(RingFeature::Ridge);
    }
    if features.parabolic.iter().any(|(p, _)| (p - s).abs() <= tol) {
        return Some(RingFeature::Parabolic);
    }
    None
}
