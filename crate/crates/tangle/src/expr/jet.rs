//! Order-3 jets: a value together with its first three derivatives,
//! propagated exactly through arithmetic and elementary functions.
//!
//! A [`Jet`] stores derivatives (not Taylor coefficients), so `c1` is
//! literally f', `c2` is f'' and `c3` is f'''. Order 3 is the smallest
//! order that covers everything the curve kernel needs: curvature of a
//! parametric curve takes two derivatives, and dκ/ds takes a third.
//!
//! Arithmetic is total: domain violations surface as NaN/∞ components,
//! which the expression evaluator turns into domain errors.

use std::ops::{Add, Div, Mul, Neg, Sub};

/// Value and first three derivatives of a scalar function at a point.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Jet {
    pub c0: f64,
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
}

impl Jet {
    pub fn new(c0: f64, c1: f64, c2: f64, c3: f64) -> Self {
        Jet { c0, c1, c2, c3 }
    }

    /// The jet of a constant: all derivatives vanish.
    pub fn constant(c: f64) -> Self {
        Jet::new(c, 0.0, 0.0, 0.0)
    }

    /// The jet of the identity (the variable itself) at `x`.
    pub fn variable(x: f64) -> Self {
        Jet::new(x, 1.0, 0.0, 0.0)
    }

    /// Derivative component by index (0 = value).
    pub fn get(&self, i: usize) -> f64 {
        match i {
            0 => self.c0,
            1 => self.c1,
            2 => self.c2,
            3 => self.c3,
            _ => panic!("jet order is 3"),
        }
    }

    /// True when components 0..=order are all finite.
    pub fn is_finite_to(&self, order: usize) -> bool {
        (0..=order).all(|i| self.get(i).is_finite())
    }

    /// Chain rule (Faà di Bruno to order 3): composes outer derivatives
    /// `g = [g(u), g'(u), g''(u), g'''(u)]` with this inner jet.
    pub fn compose(self, g: [f64; 4]) -> Jet {
        let f1 = self.c1;
        let f2 = self.c2;
        let f3 = self.c3;
        Jet {
            c0: g[0],
            c1: g[1] * f1,
            c2: g[2] * f1 * f1 + g[1] * f2,
            c3: g[3] * f1 * f1 * f1 + 3.0 * g[2] * f1 * f2 + g[1] * f3,
        }
    }

    pub fn sin(self) -> Jet {
        let (s, c) = self.c0.sin_cos();
        self.compose([s, c, -s, -c])
    }

    pub fn cos(self) -> Jet {
        let (s, c) = self.c0.sin_cos();
        self.compose([c, -s, -c, s])
    }

    pub fn tan(self) -> Jet {
        let t = self.c0.tan();
        let d1 = 1.0 + t * t;
        self.compose([t, d1, 2.0 * t * d1, 2.0 * d1 * (1.0 + 3.0 * t * t)])
    }

    pub fn asin(self) -> Jet {
        let u = self.c0;
        let q = 1.0 - u * u;
        let r = q.sqrt();
        self.compose([
            u.asin(),
            1.0 / r,
            u / (q * r),
            (1.0 + 2.0 * u * u) / (q * q * r),
        ])
    }

    pub fn acos(self) -> Jet {
        let u = self.c0;
        let q = 1.0 - u * u;
        let r = q.sqrt();
        self.compose([
            u.acos(),
            -1.0 / r,
            -u / (q * r),
            -(1.0 + 2.0 * u * u) / (q * q * r),
        ])
    }

    pub fn atan(self) -> Jet {
        let u = self.c0;
        let q = 1.0 + u * u;
        self.compose([
            u.atan(),
            1.0 / q,
            -2.0 * u / (q * q),
            (6.0 * u * u - 2.0) / (q * q * q),
        ])
    }

    pub fn sqrt(self) -> Jet {
        let r = self.c0.sqrt();
        self.compose([
            r,
            0.5 / r,
            -0.25 / (r * self.c0),
            0.375 / (r * self.c0 * self.c0),
        ])
    }

    pub fn exp(self) -> Jet {
        let e = self.c0.exp();
        self.compose([e, e, e, e])
    }

    /// Natural logarithm.
    pub fn ln(self) -> Jet {
        let u = self.c0;
        self.compose([u.ln(), 1.0 / u, -1.0 / (u * u), 2.0 / (u * u * u)])
    }

    /// |u|, differentiated as sign(u) away from zero. At exactly zero the
    /// derivative components are NaN so the kink cannot produce a silently
    /// wrong derivative.
    pub fn abs(self) -> Jet {
        let u = self.c0;
        if u == 0.0 {
            return Jet::new(0.0, f64::NAN, f64::NAN, f64::NAN);
        }
        let sg = u.signum();
        self.compose([u.abs(), sg, 0.0, 0.0])
    }

    pub fn sinh(self) -> Jet {
        let s = self.c0.sinh();
        let c = self.c0.cosh();
        self.compose([s, c, s, c])
    }

    pub fn cosh(self) -> Jet {
        let s = self.c0.sinh();
        let c = self.c0.cosh();
        self.compose([c, s, c, s])
    }

    pub fn tanh(self) -> Jet {
        let t = self.c0.tanh();
        let d1 = 1.0 - t * t;
        self.compose([t, d1, -2.0 * t * d1, -2.0 * d1 * (1.0 - 3.0 * t * t)])
    }

    /// Integer power, valid for negative bases.
    pub fn powi(self, n: i32) -> Jet {
        let u = self.c0;
        let nf = n as f64;
        self.compose([
            u.powi(n),
            nf * u.powi(n - 1),
            nf * (nf - 1.0) * u.powi(n - 2),
            nf * (nf - 1.0) * (nf - 2.0) * u.powi(n - 3),
        ])
    }

    /// Real power with a constant exponent; requires a positive base for
    /// finite derivatives.
    pub fn powf(self, e: f64) -> Jet {
        let u = self.c0;
        self.compose([
            u.powf(e),
            e * u.powf(e - 1.0),
            e * (e - 1.0) * u.powf(e - 2.0),
            e * (e - 1.0) * (e - 2.0) * u.powf(e - 3.0),
        ])
    }
}

impl Add for Jet {
    type Output = Jet;
    fn add(self, o: Jet) -> Jet {
        Jet::new(
            self.c0 + o.c0,
            self.c1 + o.c1,
            self.c2 + o.c2,
            self.c3 + o.c3,
        )
    }
}

impl Sub for Jet {
    type Output = Jet;
    fn sub(self, o: Jet) -> Jet {
        Jet::new(
            self.c0 - o.c0,
            self.c1 - o.c1,
            self.c2 - o.c2,
            self.c3 - o.c3,
        )
    }
}

impl Neg for Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        Jet::new(-self.c0, -self.c1, -self.c2, -self.c3)
    }
}

impl Mul for Jet {
    type Output = Jet;
    fn mul(self, o: Jet) -> Jet {
        // Leibniz rule up to the third derivative.
        Jet {
            c0: self.c0 * o.c0,
            c1: self.c1 * o.c0 + self.c0 * o.c1,
            c2: self.c2 * o.c0 + 2.0 * self.c1 * o.c1 + self.c0 * o.c2,
            c3: self.c3 * o.c0 + 3.0 * self.c2 * o.c1 + 3.0 * self.c1 * o.c2 + self.c0 * o.c3,
        }
    }
}

impl Div for Jet {
    type Output = Jet;
    fn div(self, o: Jet) -> Jet {
        // Solve a = q*b for the derivatives of q. Keeps c0 identical to
        // plain scalar division, bit for bit.
        let q0 = self.c0 / o.c0;
        let q1 = (self.c1 - q0 * o.c1) / o.c0;
        let q2 = (self.c2 - 2.0 * q1 * o.c1 - q0 * o.c2) / o.c0;
        let q3 = (self.c3 - 3.0 * q2 * o.c1 - 3.0 * q1 * o.c2 - q0 * o.c3) / o.c0;
        Jet::new(q0, q1, q2, q3)
    }
}

impl Mul<f64> for Jet {
    type Output = Jet;
    fn mul(self, k: f64) -> Jet {
        Jet::new(self.c0 * k, self.c1 * k, self.c2 * k, self.c3 * k)
    }
}
