//! Plane-curve kernel: frames, curvature, arc length, and stratification
//! into inflection-free segments that carry a tangential-angle chart.
//!
//! A [`PlaneCurve`] is defined one of four ways:
//!
//! * parametric components x(t), y(t) given as expressions;
//! * a curvature function κ(s) of arc length, integrated twice into a
//!   position field (the native parameter is arc length itself);
//! * a curvature function κ(θ) of the tangential angle, realized as
//!   γ(θ) = ∫ (1/κ)(cos θ, sin θ) dθ;
//! * a graph (t, ∫ g dt) whose y-slope g is an expression — this covers
//!   curves classically written as x ↦ (x, ∫ f(x) dx).
//!
//! Construction eagerly samples arc length, turning angle, and (for the
//! integral-defined kinds) position into Hermite tables; afterwards every
//! operation is read-only, so curves are cheap to clone and safe to share
//! across threads.

mod segment;

pub use segment::{CurveSegment, IdentityCheck, MarkerSet, VertexScan};

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::expr::{Expression, Jet};
use crate::geom::Vec2;
use crate::numerics::{find_roots, ToleranceConfig};
use crate::table::CumulativeTable;

/// Samples below this speed are treated as parametrization singularities.
const SPEED_EPS: f64 = 1e-12;
/// |κ| below this over the whole grid means no chart exists anywhere.
const FLAT_EPS: f64 = 1e-12;
/// Segments shorter than 100·root_tol are dropped by stratification.
const SEGMENT_MIN_FACTOR: f64 = 100.0;
/// Markers keep this θ-distance away from chart endpoints, where 1/κ
/// blows up toward inflections.
pub(crate) const THETA_EDGE_EPS: f64 = 1e-6;

/// Arc-length table resolution; doubled twice if monotonicity fails.
const TABLE_CELLS: usize = 2048;

/// Position, Frenet frame, curvature and its arc-length derivative at one
/// point of a curve. `theta` is populated only for samples produced
/// through a segment chart.
#[derive(Debug, Clone, Copy)]
pub struct FrameSample {
    /// Native parameter.
    pub t: f64,
    /// Arc length (measured from t = 0 when the domain contains it,
    /// otherwise from the domain midpoint).
    pub s: f64,
    pub position: Vec2,
    /// Unit tangent e.
    pub tangent: Vec2,
    /// Unit normal ν, the tangent rotated +90°.
    pub normal: Vec2,
    pub kappa: f64,
    pub dkappa_ds: f64,
    /// Tangential angle, when the sample belongs to a segment chart.
    pub theta: Option<f64>,
}

#[derive(Debug)]
pub(crate) enum CurveDef {
    Parametric { x: Expression, y: Expression },
    UnitByCurvature { kappa: Expression },
    RadialByTheta { kappa: Expression },
    Graph { slope: Expression },
}

#[derive(Debug)]
pub(crate) struct CurveInner {
    def: CurveDef,
    domain: (f64, f64),
    /// Parameter where arc length (and integral positions) are anchored.
    anchor: f64,
    start_point: Vec2,
    start_angle: f64,
    offset: Vec2,
    cfg: ToleranceConfig,
    /// s(t); `None` when the native parameter is arc length already.
    arc: Option<CumulativeTable>,
    /// Θ(t) = ∫ κ |dγ/dt| dt, the cumulative turning of the tangent.
    turning: CumulativeTable,
    /// Integral position components, stored with start_angle factored
    /// out so different start data are exact rigid motions of each other.
    pos: Option<(CumulativeTable, CumulativeTable)>,
}

/// A smooth plane curve with cached arc-length, turning, and position
/// tables. Cloning is O(1).
#[derive(Debug, Clone)]
pub struct PlaneCurve {
    inner: Arc<CurveInner>,
}

impl PlaneCurve {
    /// Curve from parametric component expressions on an open interval.
    pub fn parametric(x: Expression, y: Expression, domain: (f64, f64)) -> Result<PlaneCurve> {
        Self::parametric_with(x, y, domain, Vec2::ZERO, &ToleranceConfig::default())
    }

    pub fn parametric_with(
        x: Expression,
        y: Expression,
        domain: (f64, f64),
        offset: Vec2,
        cfg: &ToleranceConfig,
    ) -> Result<PlaneCurve> {
        build(
            CurveDef::Parametric { x, y },
            domain,
            Vec2::ZERO,
            0.0,
            offset,
            cfg,
        )
    }

    /// Curve with prescribed curvature κ(s); the native parameter is arc
    /// length, with `start_point`/`start_angle` applying at s = 0 (or the
    /// domain midpoint when 0 is outside the domain).
    pub(crate) fn from_curvature_arclength(
        kappa: Expression,
        domain: (f64, f64),
        start_point: Vec2,
        start_angle: f64,
        offset: Vec2,
        cfg: &ToleranceConfig,
    ) -> Result<PlaneCurve> {
        build(
            CurveDef::UnitByCurvature { kappa },
            domain,
            start_point,
            start_angle,
            offset,
            cfg,
        )
    }

    /// Curve with prescribed curvature κ(θ) as a function of tangential
    /// angle; the native parameter is θ and the position at θ = base_c
    /// is the origin.
    pub(crate) fn from_curvature_theta(
        kappa: Expression,
        theta_domain: (f64, f64),
        base_c: f64,
        offset: Vec2,
        cfg: &ToleranceConfig,
    ) -> Result<PlaneCurve> {
        if theta_domain.0 >= theta_domain.1 || theta_domain.0.is_nan() || theta_domain.1.is_nan() {
            return Err(Error::Config("domain must satisfy a < b".into()));
        }
        if base_c < theta_domain.0 || base_c > theta_domain.1 {
            return Err(Error::Config(
                "base_c must lie inside the theta domain".into(),
            ));
        }
        // 1/κ must stay bounded for the radial construction.
        let n = cfg.grid_n;
        for i in 0..=n {
            let t = theta_domain.0 + (theta_domain.1 - theta_domain.0) * i as f64 / n as f64;
            let k = kappa.evaluate(t)?;
            if k.abs() < 1e-9 {
                return Err(Error::VanishingCurvature { theta: t, kappa: k });
            }
        }
        build(
            CurveDef::RadialByTheta { kappa },
            theta_domain,
            Vec2::ZERO,
            0.0,
            offset,
            cfg,
        )
    }

    /// Graph-style curve t ↦ (t, ∫ slope dt) + start_point, anchored at
    /// t = 0 (or the domain midpoint).
    pub(crate) fn graph(
        slope: Expression,
        domain: (f64, f64),
        start_point: Vec2,
        offset: Vec2,
        cfg: &ToleranceConfig,
    ) -> Result<PlaneCurve> {
        build(
            CurveDef::Graph { slope },
            domain,
            start_point,
            0.0,
            offset,
            cfg,
        )
    }

    pub fn domain(&self) -> (f64, f64) {
        self.inner.domain
    }

    /// Arc-length range corresponding to the domain.
    pub fn s_domain(&self) -> (f64, f64) {
        match &self.inner.arc {
            None => self.inner.domain,
            Some(t) => {
                let (a, b) = self.inner.domain;
                (t.eval(a), t.eval(b))
            }
        }
    }

    pub(crate) fn tolerances(&self) -> &ToleranceConfig {
        &self.inner.cfg
    }

    /// True when the native parameter is arc length.
    pub fn is_unit_speed(&self) -> bool {
        self.inner.arc.is_none()
    }

    fn check_domain(&self, t: f64) -> Result<()> {
        let (a, b) = self.inner.domain;
        if t < a || t > b || !t.is_finite() {
            return Err(Error::OutOfDomain { t, lo: a, hi: b });
        }
        Ok(())
    }

    /// Arc length of t, quadrature-grade.
    pub fn s_of_t(&self, t: f64) -> Result<f64> {
        self.check_domain(t)?;
        match &self.inner.arc {
            None => Ok(t),
            Some(table) => {
                let speed = self.speed_fn();
                table.eval_refined(t, &speed, &self.inner.cfg)
            }
        }
    }

    /// Native parameter at arc length s.
    pub fn t_of_s(&self, s: f64) -> Result<f64> {
        match &self.inner.arc {
            None => {
                self.check_domain(s)?;
                Ok(s)
            }
            Some(table) => {
                let (slo, shi) = self.s_domain();
                if s < slo - 1e-9 || s > shi + 1e-9 {
                    return Err(Error::OutOfDomain {
                        t: s,
                        lo: slo,
                        hi: shi,
                    });
                }
                let s = s.clamp(slo, shi);
                let (lo, hi) = table.bracket_value(s);
                let speed = self.speed_fn();
                // Cheap path: invert the interpolated table, then polish
                // against the quadrature-grade arc length. Near steep
                // boundary layers the interpolant can be off by more
                // than Newton recovers, so verify and fall back to a
                // safeguarded inversion of the refined map.
                let mut t = crate::numerics::invert_monotone(
                    |t| Ok(table.eval(t)),
                    s,
                    lo,
                    hi,
                    &self.inner.cfg,
                )?;
                let (a, b) = self.inner.domain;
                for _ in 0..3 {
                    let s_true = table.eval_refined(t, &speed, &self.inner.cfg)?;
                    let step = (s - s_true) / speed(t)?;
                    t = (t + step).clamp(a, b);
                    if step.abs() <= 1e-14 * (1.0 + t.abs()) {
                        break;
                    }
                }
                let s_check = table.eval_refined(t, &speed, &self.inner.cfg)?;
                if (s_check - s).abs() > 1e-9 * (1.0 + s.abs()) {
                    t = crate::numerics::invert_monotone(
                        |t| table.eval_refined(t, &speed, &self.inner.cfg),
                        s,
                        lo,
                        hi,
                        &self.inner.cfg,
                    )?;
                }
                Ok(t)
            }
        }
    }

    /// ∫ₜ₀^ₜ₁ |dγ/dt| dt. Antisymmetric and additive.
    pub fn arc_length(&self, t0: f64, t1: f64) -> Result<f64> {
        Ok(self.s_of_t(t1)? - self.s_of_t(t0)?)
    }

    /// Cumulative turning Θ(t), quadrature-grade.
    pub(crate) fn turning_refined(&self, t: f64) -> Result<f64> {
        let rate = self.turn_rate_fn();
        self.inner.turning.eval_refined(t, &rate, &self.inner.cfg)
    }

    pub(crate) fn turning_fast(&self, t: f64) -> f64 {
        self.inner.turning.eval(t)
    }

    /// Position of the point at parameter t.
    pub fn position_at(&self, t: f64) -> Result<Vec2> {
        self.check_domain(t)?;
        Ok(self.position_unchecked(t))
    }

    fn position_unchecked(&self, t: f64) -> Vec2 {
        let inner = &self.inner;
        match &inner.def {
            CurveDef::Parametric { x, y } => {
                // Domain errors cannot occur here: construction already
                // sampled both components across the domain.
                let px = x.evaluate(t).unwrap_or(f64::NAN);
                let py = y.evaluate(t).unwrap_or(f64::NAN);
                Vec2::new(px, py) + inner.offset
            }
            CurveDef::Graph { .. } => {
                let (_, ytab) = inner.pos.as_ref().expect("graph position tables");
                let rel = Vec2::new(t - inner.anchor, ytab.eval(t));
                inner.start_point + rel + inner.offset
            }
            CurveDef::UnitByCurvature { .. } | CurveDef::RadialByTheta { .. } => {
                let (xtab, ytab) = inner.pos.as_ref().expect("position tables");
                let rel = Vec2::new(xtab.eval(t), ytab.eval(t)).rotated(inner.start_angle);
                inner.start_point + rel + inner.offset
            }
        }
    }

    /// Signed curvature at parameter t.
    pub fn curvature_at(&self, t: f64) -> Result<f64> {
        match &self.inner.def {
            CurveDef::UnitByCurvature { kappa } => kappa.evaluate(t),
            CurveDef::Parametric { x, y } => {
                let xj = x.evaluate_jet(t, 2)?;
                let yj = y.evaluate_jet(t, 2)?;
                let d1 = Vec2::new(xj.c1, yj.c1);
                let d2 = Vec2::new(xj.c2, yj.c2);
                let v = d1.length();
                if v < SPEED_EPS {
                    return Err(Error::SingularPoint { t, speed: v });
                }
                Ok(d1.cross(d2) / (v * v * v))
            }
            CurveDef::RadialByTheta { .. } | CurveDef::Graph { .. } => {
                let (d1, d2, _) = self.derivatives_at(t)?;
                let v = d1.length();
                if v < SPEED_EPS {
                    return Err(Error::SingularPoint { t, speed: v });
                }
                Ok(d1.cross(d2) / (v * v * v))
            }
        }
    }

    /// dκ/ds at parameter t.
    pub fn curvature_slope_at(&self, t: f64) -> Result<f64> {
        match &self.inner.def {
            CurveDef::UnitByCurvature { kappa } => Ok(kappa.evaluate_jet(t, 1)?.c1),
            _ => {
                let (d1, d2, d3) = self.derivatives_at(t)?;
                let v2 = d1.length_squared();
                let v = v2.sqrt();
                if v < SPEED_EPS {
                    return Err(Error::SingularPoint { t, speed: v });
                }
                let w = d1.cross(d2);
                let wp = d1.cross(d3);
                let dkdt = (wp * v2 - 3.0 * w * d1.dot(d2)) / (v2 * v2 * v);
                Ok(dkdt / v)
            }
        }
    }

    /// First, second and third derivatives of position w.r.t. t, for the
    /// parametric-formula kinds.
    fn derivatives_at(&self, t: f64) -> Result<(Vec2, Vec2, Vec2)> {
        match &self.inner.def {
            CurveDef::Parametric { x, y } => {
                let xj = x.evaluate_jet(t, 3)?;
                let yj = y.evaluate_jet(t, 3)?;
                Ok((
                    Vec2::new(xj.c1, yj.c1),
                    Vec2::new(xj.c2, yj.c2),
                    Vec2::new(xj.c3, yj.c3),
                ))
            }
            CurveDef::Graph { slope } => {
                let gj = slope.evaluate_jet(t, 3)?;
                Ok((
                    Vec2::new(1.0, gj.c0),
                    Vec2::new(0.0, gj.c1),
                    Vec2::new(0.0, gj.c2),
                ))
            }
            CurveDef::RadialByTheta { kappa } => {
                // Velocity (cos t, sin t)/κ(t), differentiated as jets so
                // the c-components are successive t-derivatives of γ'.
                let kj = kappa.evaluate_jet(t, 3)?;
                let tj = Jet::variable(t);
                let vx = tj.cos() / kj;
                let vy = tj.sin() / kj;
                Ok((
                    Vec2::new(vx.c0, vy.c0),
                    Vec2::new(vx.c1, vy.c1),
                    Vec2::new(vx.c2, vy.c2),
                ))
            }
            CurveDef::UnitByCurvature { kappa } => {
                // e = dir(α + Θ), e' = κ ν, etc.; assembled from κ's jet.
                let kj = kappa.evaluate_jet(t, 2)?;
                let ang = self.inner.start_angle + self.turning_fast(t);
                let e = Vec2::from_angle(ang);
                let n = e.rot90();
                let d2 = n * kj.c0;
                let d3 = e * (-kj.c0 * kj.c0) + n * kj.c1;
                Ok((e, d2, d3))
            }
        }
    }

    /// Full frame at parameter t.
    pub fn frame_at(&self, t: f64) -> Result<FrameSample> {
        self.check_domain(t)?;
        let position = self.position_unchecked(t);
        match &self.inner.def {
            CurveDef::UnitByCurvature { kappa } => {
                let kj = kappa.evaluate_jet(t, 1)?;
                let ang = self.inner.start_angle + self.turning_fast(t);
                let tangent = Vec2::from_angle(ang);
                Ok(FrameSample {
                    t,
                    s: t,
                    position,
                    tangent,
                    normal: tangent.rot90(),
                    kappa: kj.c0,
                    dkappa_ds: kj.c1,
                    theta: None,
                })
            }
            _ => {
                let (d1, d2, d3) = self.derivatives_at(t)?;
                let v2 = d1.length_squared();
                let v = v2.sqrt();
                if v < SPEED_EPS {
                    return Err(Error::SingularPoint { t, speed: v });
                }
                let tangent = d1 / v;
                let w = d1.cross(d2);
                let kappa = w / (v2 * v);
                let wp = d1.cross(d3);
                let dkdt = (wp * v2 - 3.0 * w * d1.dot(d2)) / (v2 * v2 * v);
                Ok(FrameSample {
                    t,
                    s: self.s_of_t(t)?,
                    position,
                    tangent,
                    normal: tangent.rot90(),
                    kappa,
                    dkappa_ds: dkdt / v,
                    theta: None,
                })
            }
        }
    }

    /// Full frame at arc length s.
    pub fn frame_at_s(&self, s: f64) -> Result<FrameSample> {
        let t = self.t_of_s(s)?;
        let mut f = self.frame_at(t)?;
        // Report the requested station rather than the round trip of it.
        f.s = s;
        Ok(f)
    }

    fn speed_fn(&self) -> impl Fn(f64) -> Result<f64> + '_ {
        move |t: f64| match &self.inner.def {
            CurveDef::Parametric { x, y } => {
                let xj = x.evaluate_jet(t, 1)?;
                let yj = y.evaluate_jet(t, 1)?;
                let v = xj.c1.hypot(yj.c1);
                if v < SPEED_EPS {
                    return Err(Error::SingularPoint { t, speed: v });
                }
                Ok(v)
            }
            CurveDef::UnitByCurvature { .. } => Ok(1.0),
            CurveDef::RadialByTheta { kappa } => Ok(1.0 / kappa.evaluate(t)?.abs()),
            CurveDef::Graph { slope } => {
                let g = slope.evaluate(t)?;
                Ok(g.hypot(1.0))
            }
        }
    }

    fn turn_rate_fn(&self) -> impl Fn(f64) -> Result<f64> + '_ {
        move |t: f64| match &self.inner.def {
            CurveDef::Parametric { x, y } => {
                let xj = x.evaluate_jet(t, 2)?;
                let yj = y.evaluate_jet(t, 2)?;
                let d1 = Vec2::new(xj.c1, yj.c1);
                let d2 = Vec2::new(xj.c2, yj.c2);
                let v2 = d1.length_squared();
                if v2.sqrt() < SPEED_EPS {
                    return Err(Error::SingularPoint {
                        t,
                        speed: v2.sqrt(),
                    });
                }
                Ok(d1.cross(d2) / v2)
            }
            CurveDef::UnitByCurvature { kappa } => kappa.evaluate(t),
            CurveDef::RadialByTheta { kappa } => Ok(kappa.evaluate(t)?.signum()),
            CurveDef::Graph { slope } => {
                let gj = slope.evaluate_jet(t, 1)?;
                Ok(gj.c1 / (1.0 + gj.c0 * gj.c0))
            }
        }
    }

    /// Split the curve at its inflections (κ = 0) into maximal segments
    /// of constant curvature sign, each carrying a tangential-angle
    /// chart based at its arc-length midpoint.
    pub fn stratify(&self, cfg: &ToleranceConfig) -> Result<Vec<CurveSegment>> {
        let (slo, shi) = self.s_domain();
        let kappa_of_s = |s: f64| -> Result<f64> {
            let t = match &self.inner.arc {
                None => s,
                Some(table) => {
                    let (lo, hi) = table.bracket_value(s);
                    crate::numerics::invert_monotone(|t| Ok(table.eval(t)), s, lo, hi, cfg)?
                }
            };
            self.curvature_at(t)
        };
        // Flatness scan on the same grid the root finder will use.
        let mut max_abs = 0.0f64;
        for i in 0..=cfg.grid_n {
            let s = slo + (shi - slo) * i as f64 / cfg.grid_n as f64;
            max_abs = max_abs.max(kappa_of_s(s)?.abs());
        }
        if max_abs < FLAT_EPS {
            return Err(Error::EverywhereFlat);
        }
        let roots = find_roots(kappa_of_s, slo, shi, cfg)?;
        let mut bounds = Vec::with_capacity(roots.len() + 2);
        bounds.push(slo);
        bounds.extend(roots.iter().copied().filter(|r| *r > slo && *r < shi));
        bounds.push(shi);

        let mut out = Vec::new();
        for w in bounds.windows(2) {
            let (lo, hi) = (w[0], w[1]);
            if hi - lo < SEGMENT_MIN_FACTOR * cfg.root_tol {
                continue;
            }
            let mid = 0.5 * (lo + hi);
            let sign = kappa_of_s(mid)?.signum();
            if sign == 0.0 || !sign.is_finite() {
                continue;
            }
            let index = out.len();
            out.push(segment::CurveSegment::new(
                self.clone(),
                index,
                (lo, hi),
                mid,
                sign,
            )?);
        }
        Ok(out)
    }
}

fn build(
    def: CurveDef,
    domain: (f64, f64),
    start_point: Vec2,
    start_angle: f64,
    offset: Vec2,
    cfg: &ToleranceConfig,
) -> Result<PlaneCurve> {
    let (a, b) = domain;
    if !a.is_finite() || !b.is_finite() || a >= b {
        return Err(Error::Config(
            "domain must satisfy a < b and be finite".into(),
        ));
    }
    cfg.validate()?;
    let anchor = if a <= 0.0 && b >= 0.0 {
        0.0
    } else {
        0.5 * (a + b)
    };

    // Stage the inner value so the table-building closures can borrow a
    // curve view of it.
    let mut inner = CurveInner {
        def,
        domain,
        anchor,
        start_point,
        start_angle,
        offset,
        cfg: *cfg,
        arc: None,
        turning: CumulativeTable::build(|_| Ok(0.0), a, b, anchor, 1, cfg)?,
        pos: None,
    };

    // Arc-length table, with monotonicity refinement.
    let unit_speed = matches!(inner.def, CurveDef::UnitByCurvature { .. });
    if !unit_speed {
        let view = PlaneCurve {
            inner: Arc::new(inner),
        };
        let mut cells = TABLE_CELLS;
        let table = loop {
            let t = CumulativeTable::build(view.speed_fn(), a, b, anchor, cells, cfg)?;
            if t.strictly_increasing() {
                break t;
            }
            cells *= 4;
            if cells > 4 * TABLE_CELLS {
                return Err(Error::SingularPoint {
                    t: 0.5 * (a + b),
                    speed: 0.0,
                });
            }
        };
        inner = Arc::try_unwrap(view.inner).expect("sole owner during build");
        inner.arc = Some(table);
    }

    // Turning table Θ(t).
    {
        let view = PlaneCurve {
            inner: Arc::new(inner),
        };
        let table = CumulativeTable::build(view.turn_rate_fn(), a, b, anchor, TABLE_CELLS, cfg)?;
        inner = Arc::try_unwrap(view.inner).expect("sole owner during build");
        inner.turning = table;
    }

    // Position tables for the integral-defined kinds.
    let needs_pos = matches!(
        inner.def,
        CurveDef::UnitByCurvature { .. } | CurveDef::RadialByTheta { .. } | CurveDef::Graph { .. }
    );
    if needs_pos {
        let view = PlaneCurve {
            inner: Arc::new(inner),
        };
        let vel_x = |t: f64| -> Result<f64> {
            match &view.inner.def {
                CurveDef::UnitByCurvature { .. } => Ok(view.turning_fast(t).cos()),
                CurveDef::RadialByTheta { kappa } => Ok(t.cos() / kappa.evaluate(t)?),
                CurveDef::Graph { .. } => Ok(1.0),
                CurveDef::Parametric { .. } => unreachable!(),
            }
        };
        let vel_y = |t: f64| -> Result<f64> {
            match &view.inner.def {
                CurveDef::UnitByCurvature { .. } => Ok(view.turning_fast(t).sin()),
                CurveDef::RadialByTheta { kappa } => Ok(t.sin() / kappa.evaluate(t)?),
                CurveDef::Graph { slope } => slope.evaluate(t),
                CurveDef::Parametric { .. } => unreachable!(),
            }
        };
        let xt = CumulativeTable::build(vel_x, a, b, anchor, TABLE_CELLS, cfg)?;
        let yt = CumulativeTable::build(vel_y, a, b, anchor, TABLE_CELLS, cfg)?;
        inner = Arc::try_unwrap(view.inner).expect("sole owner during build");
        inner.pos = Some((xt, yt));
    } else {
        // Probe the component expressions across the domain so frame and
        // position evaluation cannot fail later.
        if let CurveDef::Parametric { x, y } = &inner.def {
            for i in 0..=cfg.grid_n {
                let t = a + (b - a) * i as f64 / cfg.grid_n as f64;
                x.evaluate_jet(t, 3)?;
                y.evaluate_jet(t, 3)?;
            }
        }
    }

    Ok(PlaneCurve {
        inner: Arc::new(inner),
    })
}
