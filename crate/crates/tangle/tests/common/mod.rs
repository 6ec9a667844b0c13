//! Shared helpers for the integration suites: cached gallery objects,
//! rigid alignment, finite-difference oracles, and naive format readers
//! that stay independent of the emitters they check.

#![allow(dead_code)]

use std::f64::consts::FRAC_PI_2;
use std::sync::LazyLock;

use tangle::curve::{CurveSegment, PlaneCurve};
use tangle::expr::Expression;
use tangle::geom::Vec2;
use tangle::numerics::ToleranceConfig;
use tangle::surface::{revolve, SurfaceOfRevolution};
use tangle::synthesis::{builtin_curve, curve_from_curvature_arclength};

pub fn tol() -> ToleranceConfig {
    ToleranceConfig::default()
}

pub static EULER: LazyLock<PlaneCurve> =
    LazyLock::new(|| builtin_curve("euler_spiral", None, &tol()).unwrap());
pub static ELASTICA: LazyLock<PlaneCurve> =
    LazyLock::new(|| builtin_curve("elastica", None, &tol()).unwrap());
pub static VERTEX: LazyLock<PlaneCurve> =
    LazyLock::new(|| builtin_curve("kappa_1_plus_s2", None, &tol()).unwrap());
pub static CIRCLE: LazyLock<PlaneCurve> =
    LazyLock::new(|| builtin_curve("circle", Some(1.0), &tol()).unwrap());

/// Stratified segments re-based at s = 0 (clamped into each segment).
pub fn segments_based_at_zero(curve: &PlaneCurve) -> Vec<CurveSegment> {
    curve
        .stratify(&tol())
        .unwrap()
        .into_iter()
        .map(|seg| {
            let (lo, hi) = seg.s_range();
            seg.with_base_point(0.0f64.clamp(lo, hi)).unwrap()
        })
        .collect()
}

pub static EULER_SURFACE: LazyLock<SurfaceOfRevolution> = LazyLock::new(|| {
    let profile = curve_from_curvature_arclength(
        Expression::identity("s"),
        (-2.2, 2.2),
        Vec2::new(2.0, 0.0),
        0.0,
        &tol(),
    )
    .unwrap();
    revolve(profile, &tol()).unwrap()
});

pub static VERTEX_SURFACE: LazyLock<SurfaceOfRevolution> = LazyLock::new(|| {
    let profile = curve_from_curvature_arclength(
        Expression::parse("1 + s^2").unwrap(),
        (-2.0, 2.0),
        Vec2::new(2.0, 0.0),
        FRAC_PI_2,
        &tol(),
    )
    .unwrap();
    revolve(profile, &tol()).unwrap()
});

pub static SPHERE: LazyLock<SurfaceOfRevolution> = LazyLock::new(|| {
    let profile = curve_from_curvature_arclength(
        Expression::constant(1.0),
        (0.05, std::f64::consts::PI - 0.05),
        Vec2::new(1.0, 0.0),
        FRAC_PI_2,
        &tol(),
    )
    .unwrap();
    revolve(profile, &tol()).unwrap()
});

/// Optimal rotation + translation (2D Kabsch) mapping `b` onto `a`;
/// returns the aligned RMS distance.
pub fn rigid_align_rms(a: &[Vec2], b: &[Vec2]) -> f64 {
    assert_eq!(a.len(), b.len());
    let n = a.len() as f64;
    let ca = a.iter().fold(Vec2::ZERO, |acc, p| acc + *p) / n;
    let cb = b.iter().fold(Vec2::ZERO, |acc, p| acc + *p) / n;
    let (mut sxx, mut sxy) = (0.0, 0.0);
    for (p, q) in a.iter().zip(b) {
        let u = *p - ca;
        let v = *q - cb;
        sxx += v.dot(u);
        sxy += v.cross(u);
    }
    let phi = sxy.atan2(sxx);
    let mut sum = 0.0;
    for (p, q) in a.iter().zip(b) {
        let mapped = (*q - cb).rotated(phi) + ca;
        sum += (*p - mapped).length_squared();
    }
    (sum / n).sqrt()
}

/// Signed angle swept from one unit tangent to another, robust across
/// the ±π wrap.
pub fn angle_between(e0: Vec2, e1: Vec2) -> f64 {
    e0.cross(e1).atan2(e0.dot(e1))
}

/// Minimal XML well-formedness check: every element closes in order,
/// attributes are quoted, exactly one root.
pub fn assert_well_formed_xml(text: &str) {
    let mut stack: Vec<String> = Vec::new();
    let mut roots = 0usize;
    let mut rest = text;
    while let Some(start) = rest.find('<') {
        let tail = &rest[start + 1..];
        let end = tail
            .find('>')
            .unwrap_or_else(|| panic!("unclosed tag near: {tail:.40}"));
        let tag = &tail[..end];
        rest = &tail[end + 1..];
        if tag.starts_with('?') || tag.starts_with('!') {
            continue;
        }
        if let Some(name) = tag.strip_prefix('/') {
            let open = stack
                .pop()
                .unwrap_or_else(|| panic!("stray closer </{name}>"));
            assert_eq!(open, name.trim(), "mismatched element");
            continue;
        }
        let self_closing = tag.ends_with('/');
        let body = if self_closing {
            &tag[..tag.len() - 1]
        } else {
            tag
        };
        let name = body
            .split_whitespace()
            .next()
            .expect("tag name")
            .to_string();
        // attribute quoting: quotes come in pairs
        let quotes = body.matches('"').count();
        assert_eq!(quotes % 2, 0, "unbalanced attribute quotes in <{name}>");
        if stack.is_empty() {
            roots += 1;
        }
        if !self_closing {
            stack.push(name);
        }
    }
    assert!(stack.is_empty(), "unclosed elements: {stack:?}");
    assert_eq!(roots, 1, "expected exactly one root element");
}

/// What a naive OBJ reader sees: counts and line-record topology.
#[derive(Debug, Default, PartialEq)]
pub struct ObjSummary {
    pub vertex_count: usize,
    pub closed_loops: Vec<usize>,
    pub open_polylines: Vec<usize>,
    pub face_count: usize,
}

pub fn read_obj(text: &str) -> ObjSummary {
    let mut out = ObjSummary::default();
    for line in text.lines() {
        let mut parts = line.split_whitespace();
        match parts.next() {
            Some("v") => {
                let coords: Vec<f64> = parts
                    .map(|p| p.parse().expect("vertex coordinate"))
                    .collect();
                assert_eq!(coords.len(), 3, "v record needs 3 coordinates");
                out.vertex_count += 1;
            }
            Some("l") => {
                let idx: Vec<usize> = parts.map(|p| p.parse().expect("line index")).collect();
                assert!(idx.len() >= 2);
                for i in &idx {
                    assert!(*i >= 1 && *i <= out.vertex_count, "index {i} out of range");
                }
                if idx.first() == idx.last() {
                    out.closed_loops.push(idx.len() - 1);
                } else {
                    out.open_polylines.push(idx.len());
                }
            }
            Some("f") => {
                let idx: Vec<usize> = parts.map(|p| p.parse().expect("face index")).collect();
                assert!(idx.len() >= 3);
                for i in &idx {
                    assert!(*i >= 1 && *i <= out.vertex_count);
                }
                out.face_count += 1;
            }
            _ => {}
        }
    }
    out
}
