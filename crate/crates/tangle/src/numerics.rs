//! One-dimensional numerical primitives: adaptive quadrature, bracketed
//! root finding on a sampling grid, and inversion of monotone functions.
//!
//! Integrands and scanned functions return `Result<f64>` so domain errors
//! from expression evaluation propagate instead of turning into NaNs.

use crate::error::{Error, Result};

/// Tolerances shared by the numerical routines.
///
/// `quad_tol` is a mixed absolute/relative quadrature tolerance,
/// `root_tol` an abscissa tolerance for refined roots, `grid_n` the
/// sampling density used to bracket roots, and `max_depth` the recursion
/// cap of the adaptive quadrature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ToleranceConfig {
    pub quad_tol: f64,
    pub root_tol: f64,
    pub grid_n: usize,
    pub max_depth: u32,
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        ToleranceConfig {
            quad_tol: 1e-10,
            root_tol: 1e-12,
            grid_n: 512,
            max_depth: 40,
        }
    }
}

impl ToleranceConfig {
    pub fn validate(&self) -> Result<()> {
        if self.quad_tol <= 0.0
            || self.root_tol <= 0.0
            || self.quad_tol.is_nan()
            || self.root_tol.is_nan()
        {
            return Err(Error::Config("tolerances must be positive".into()));
        }
        if self.grid_n < 16 {
            return Err(Error::Config("grid_n must be at least 16".into()));
        }
        Ok(())
    }
}

/// Values below this magnitude at a grid point are reported as roots even
/// without a sign change.
const GRID_ZERO: f64 = 1e-14;

/// ∫ₐᵇ f, adaptive Simpson with Richardson acceptance.
///
/// The result satisfies |error| ≤ quad_tol·(1+|result|) for smooth
/// integrands, and integrate(a,b) = −integrate(b,a). Exceeding the
/// recursion cap signals a non-smooth or singular integrand.
pub fn integrate_adaptive<F>(f: F, a: f64, b: f64, cfg: &ToleranceConfig) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    if a == b {
        return Ok(0.0);
    }
    if a > b {
        return integrate_adaptive(f, b, a, cfg).map(|v| -v);
    }
    let m = 0.5 * (a + b);
    let fa = f(a)?;
    let fm = f(m)?;
    let fb = f(b)?;
    let whole = simpson(a, b, fa, fm, fb);
    let eps = cfg.quad_tol * (1.0 + whole.abs());
    adapt(&f, a, b, fa, fm, fb, whole, eps, cfg.max_depth).map_err(|e| match e {
        Error::DepthExceeded { near, .. } => Error::DepthExceeded {
            max_depth: cfg.max_depth,
            near,
        },
        other => other,
    })
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn adapt<F>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    eps: f64,
    depth: u32,
) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm)?;
    let frm = f(rm)?;
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    // One Richardson step: Simpson error shrinks 16x per halving, so the
    // pair is accepted when the defect is within 15 tolerances.
    if delta.abs() <= 15.0 * eps {
        return Ok(left + right + delta / 15.0);
    }
    if depth == 0 {
        return Err(Error::DepthExceeded {
            max_depth: 0,
            near: m,
        });
    }
    let half = 0.5 * eps;
    let l = adapt(f, a, m, fa, flm, fm, left, half, depth - 1)?;
    let r = adapt(f, m, b, fm, frm, fb, right, half, depth - 1)?;
    Ok(l + r)
}

/// All roots of `f` on [a, b]: the function is sampled at `grid_n`+1
/// equispaced points, every sign change is refined by bisection to
/// `root_tol`, and grid points with |f| < 1e-14 are reported directly.
/// The returned list is strictly increasing, deduplicated within
/// 10·root_tol.
pub fn find_roots<F>(f: F, a: f64, b: f64, cfg: &ToleranceConfig) -> Result<Vec<f64>>
where
    F: Fn(f64) -> Result<f64>,
{
    let n = cfg.grid_n;
    let h = (b - a) / n as f64;
    let mut roots = Vec::new();
    let mut prev_x = a;
    let mut prev_v = f(a)?;
    if prev_v.abs() < GRID_ZERO {
        roots.push(a);
    }
    for i in 1..=n {
        let x = if i == n { b } else { a + i as f64 * h };
        let v = f(x)?;
        if v.abs() < GRID_ZERO {
            roots.push(x);
        } else if prev_v.abs() >= GRID_ZERO && (prev_v < 0.0) != (v < 0.0) {
            roots.push(bisect(&f, prev_x, prev_v, x, v, cfg.root_tol)?);
        }
        prev_x = x;
        prev_v = v;
    }
    roots.sort_by(|p, q| p.partial_cmp(q).unwrap());
    roots.dedup_by(|p, q| (*p - *q).abs() <= 10.0 * cfg.root_tol);
    Ok(roots)
}

fn bisect<F>(f: &F, mut lo: f64, mut flo: f64, mut hi: f64, _fhi: f64, tol: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    for _ in 0..200 {
        if hi - lo <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = f(mid)?;
        if fm == 0.0 {
            return Ok(mid);
        }
        if (fm < 0.0) == (flo < 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Solve F(x) = y for strictly monotone F on [a, b] by bisection-
/// safeguarded secant. Fails with [`Error::OutOfRange`] (reporting the
/// attainable interval) when y lies outside [F(a), F(b)].
pub fn invert_monotone<F>(f: F, y: f64, a: f64, b: f64, cfg: &ToleranceConfig) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    let fa = f(a)?;
    let fb = f(b)?;
    let (lo_v, hi_v) = if fa <= fb { (fa, fb) } else { (fb, fa) };
    let slack = 1e-12 * (1.0 + lo_v.abs().max(hi_v.abs()));
    if y < lo_v - slack || y > hi_v + slack {
        return Err(Error::OutOfRange {
            value: y,
            lo: lo_v,
            hi: hi_v,
        });
    }
    let y = y.clamp(lo_v, hi_v);
    let increasing = fb >= fa;
    // g(x) = F(x) - y, bracketed on [lo, hi] with g(lo) <= 0 <= g(hi) in
    // the increasing orientation.
    let g = |x: f64| -> Result<f64> {
        let v = f(x)?;
        Ok(if increasing { v - y } else { y - v })
    };
    let mut lo = a;
    let mut hi = b;
    let mut glo = if increasing { fa - y } else { y - fa };
    let ghi = if increasing { fb - y } else { y - fb };
    if glo == 0.0 {
        return Ok(lo);
    }
    if ghi == 0.0 {
        return Ok(hi);
    }
    let mut ghi = ghi;
    // Secant through the bracket, interleaved with plain bisection every
    // other step so the bracket provably halves (pure regula falsi can
    // crawl one-sided when the root hugs an endpoint).
    for iter in 0..200 {
        if hi - lo <= cfg.root_tol {
            break;
        }
        let next = if iter % 2 == 0 {
            let denom = ghi - glo;
            let cand = if denom != 0.0 {
                lo - glo * (hi - lo) / denom
            } else {
                f64::NAN
            };
            let guard = 1e-3 * (hi - lo);
            if cand.is_finite() && cand > lo + guard && cand < hi - guard {
                cand
            } else {
                0.5 * (lo + hi)
            }
        } else {
            0.5 * (lo + hi)
        };
        let gx = g(next)?;
        if gx == 0.0 {
            return Ok(next);
        }
        if gx < 0.0 {
            lo = next;
            glo = gx;
        } else {
            hi = next;
            ghi = gx;
        }
    }
    Ok(0.5 * (lo + hi))
}
