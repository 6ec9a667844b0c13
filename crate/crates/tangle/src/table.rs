//! Sampled cumulative functions with cubic Hermite interpolation.
//!
//! Arc length, turning angle, and integral-defined positions are all of
//! the form F(t) = ∫ f, with f cheap to evaluate at nodes. Values are
//! accumulated by adaptive quadrature cell by cell; between nodes the
//! stored node slopes give a C¹ cubic interpolant whose error is O(h⁴).
//! Callers that need quadrature-grade accuracy evaluate the integral from
//! the nearest node instead of interpolating.

use crate::error::Result;
use crate::numerics::{integrate_adaptive, ToleranceConfig};

#[derive(Debug, Clone)]
pub(crate) struct CumulativeTable {
    a: f64,
    b: f64,
    h: f64,
    val: Vec<f64>,
    der: Vec<f64>,
}

impl CumulativeTable {
    /// Tabulate F(t) = ∫ f from `anchor` to t on [a, b] with n cells, so
    /// F(anchor) = 0. The anchor must lie in [a, b].
    pub fn build<F>(
        f: F,
        a: f64,
        b: f64,
        anchor: f64,
        n: usize,
        cfg: &ToleranceConfig,
    ) -> Result<Self>
    where
        F: Fn(f64) -> Result<f64>,
    {
        let h = (b - a) / n as f64;
        let mut nodes = Vec::with_capacity(n + 1);
        for i in 0..=n {
            nodes.push(if i == n { b } else { a + i as f64 * h });
        }
        let mut der = Vec::with_capacity(n + 1);
        for &x in &nodes {
            der.push(f(x)?);
        }
        let mut val = vec![0.0; n + 1];
        for i in 0..n {
            let inc = integrate_adaptive(&f, nodes[i], nodes[i + 1], cfg)?;
            val[i + 1] = val[i] + inc;
        }
        // Shift so the value at the anchor is exactly zero.
        let mut table = CumulativeTable { a, b, h, val, der };
        let at_anchor = table.eval_refined(anchor, &f, cfg)?;
        for v in &mut table.val {
            *v -= at_anchor;
        }
        Ok(table)
    }

    fn cell_of(&self, t: f64) -> usize {
        let n = self.val.len() - 1;
        (((t - self.a) / self.h) as isize).clamp(0, n as isize - 1) as usize
    }

    fn node(&self, i: usize) -> f64 {
        if i == self.val.len() - 1 {
            self.b
        } else {
            self.a + i as f64 * self.h
        }
    }

    /// O(1) cubic Hermite interpolation.
    pub fn eval(&self, t: f64) -> f64 {
        let i = self.cell_of(t);
        let x0 = self.node(i);
        let u = (t - x0) / self.h;
        let u2 = u * u;
        let u3 = u2 * u;
        let h00 = 2.0 * u3 - 3.0 * u2 + 1.0;
        let h10 = u3 - 2.0 * u2 + u;
        let h01 = -2.0 * u3 + 3.0 * u2;
        let h11 = u3 - u2;
        h00 * self.val[i]
            + h10 * self.h * self.der[i]
            + h01 * self.val[i + 1]
            + h11 * self.h * self.der[i + 1]
    }

    /// Quadrature-grade evaluation: integrate from the nearest node.
    pub fn eval_refined<F>(&self, t: f64, f: &F, cfg: &ToleranceConfig) -> Result<f64>
    where
        F: Fn(f64) -> Result<f64>,
    {
        let i = self.cell_of(t);
        let x0 = self.node(i);
        let x1 = self.node(i + 1);
        // Integrate from whichever cell node is closer.
        if (t - x0).abs() <= (x1 - t).abs() {
            Ok(self.val[i] + integrate_adaptive(f, x0, t, cfg)?)
        } else {
            Ok(self.val[i + 1] - integrate_adaptive(f, t, x1, cfg)?)
        }
    }

    /// Strictly increasing in value? (used for arc-length sanity)
    pub fn strictly_increasing(&self) -> bool {
        self.val.windows(2).all(|w| w[1] > w[0])
    }

    /// Index of the first node whose value is >= y, for bracketing.
    pub fn bracket_value(&self, y: f64) -> (f64, f64) {
        let n = self.val.len() - 1;
        // Monotone increasing assumed by callers.
        let mut lo = 0usize;
        let mut hi = n;
        while hi - lo > 1 {
            let mid = (lo + hi) / 2;
            if self.val[mid] <= y {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        (self.node(lo), self.node(hi))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tabulates_sine_integral() {
        let cfg = ToleranceConfig::default();
        let t = CumulativeTable::build(|x| Ok(x.cos()), 0.0, 3.0, 0.0, 256, &cfg).unwrap();
        for i in 0..=60 {
            let x = i as f64 * 0.05;
            assert!((t.eval(x) - x.sin()).abs() < 1e-10, "at {x}");
        }
        let r = t.eval_refined(1.2345, &|x: f64| Ok(x.cos()), &cfg).unwrap();
        assert!((r - 1.2345f64.sin()).abs() < 1e-11);
    }

    #[test]
    fn anchor_shifts_to_zero() {
        let cfg = ToleranceConfig::default();
        let t = CumulativeTable::build(|x| Ok(2.0 * x), -1.0, 2.0, 0.5, 32, &cfg).unwrap();
        // F(t) = t^2 - 0.25
        assert!(t.eval(0.5).abs() < 1e-12);
        assert!((t.eval(2.0) - 3.75).abs() < 1e-10);
    }

    #[test]
    fn brackets_monotone_values() {
        let cfg = ToleranceConfig::default();
        let t = CumulativeTable::build(|_| Ok(1.0), 0.0, 10.0, 0.0, 16, &cfg).unwrap();
        let (lo, hi) = t.bracket_value(4.3);
        assert!(lo <= 4.3 && 4.3 <= hi);
        assert!(hi - lo <= 10.0 / 16.0 + 1e-12);
    }
}
