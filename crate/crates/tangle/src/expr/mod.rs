//! Scalar math expressions of one variable with exact derivatives.
//!
//! Expressions are parsed from text into an immutable tree and evaluated
//! either as plain IEEE doubles or as order-3 [`Jet`]s, which carry the
//! value together with the first three derivatives. The jet path is what
//! gives the curve kernel curvature and dκ/ds without symbolic
//! differentiation or finite-difference noise.
//!
//! Grammar (documented in the README): `+ - * /` with the usual
//! precedence, right-associative `^` binding tighter than unary minus,
//! parentheses, the constants `pi` and `e`, and the functions
//! `sin cos tan asin acos atan sqrt exp log abs sinh cosh tanh`.
//! An expression may reference at most one variable; its name is inferred
//! from the source, so `1 + s^2` and `1 + x^2` denote the same function.
//!
//! ```
//! use tangle::expr::Expression;
//!
//! # fn main() -> tangle::Result<()> {
//! let kappa = Expression::parse("1 + s^2")?;
//! assert_eq!(kappa.evaluate(2.0)?, 5.0);
//! let jet = kappa.evaluate_jet(2.0, 2)?;
//! assert_eq!((jet.c0, jet.c1, jet.c2), (5.0, 4.0, 2.0));
//! # Ok(())
//! # }
//! ```

mod jet;
mod parser;
mod token;

pub use jet::Jet;

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    Sin,
    Cos,
    Tan,
    Asin,
    Acos,
    Atan,
    Sqrt,
    Exp,
    Log,
    Abs,
    Sinh,
    Cosh,
    Tanh,
}

impl Func {
    fn from_name(name: &str) -> Option<Func> {
        Some(match name {
            "sin" => Func::Sin,
            "cos" => Func::Cos,
            "tan" => Func::Tan,
            "asin" => Func::Asin,
            "acos" => Func::Acos,
            "atan" => Func::Atan,
            "sqrt" => Func::Sqrt,
            "exp" => Func::Exp,
            "log" => Func::Log,
            "abs" => Func::Abs,
            "sinh" => Func::Sinh,
            "cosh" => Func::Cosh,
            "tanh" => Func::Tanh,
            _ => return None,
        })
    }

    fn name(self) -> &'static str {
        match self {
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Tan => "tan",
            Func::Asin => "asin",
            Func::Acos => "acos",
            Func::Atan => "atan",
            Func::Sqrt => "sqrt",
            Func::Exp => "exp",
            Func::Log => "log",
            Func::Abs => "abs",
            Func::Sinh => "sinh",
            Func::Cosh => "cosh",
            Func::Tanh => "tanh",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Node {
    Const(f64),
    Var,
    Neg(Box<Node>),
    Bin(BinOp, Box<Node>, Box<Node>),
    Call(Func, Box<Node>),
}

impl Node {
    fn contains_var(&self) -> bool {
        match self {
            Node::Const(_) => false,
            Node::Var => true,
            Node::Neg(n) => n.contains_var(),
            Node::Bin(_, l, r) => l.contains_var() || r.contains_var(),
            Node::Call(_, a) => a.contains_var(),
        }
    }
}

/// A parsed scalar function of one variable.
#[derive(Debug, Clone, PartialEq)]
pub struct Expression {
    root: Node,
    var: Option<String>,
}

/// How a power node is evaluated. The split keeps integer powers valid on
/// negative bases while non-integer exponents of negative bases fail
/// instead of silently leaving the real line.
enum PowPath {
    Int(i32),
    RealConst(f64),
    Dynamic,
}

impl Expression {
    /// Parse source text, inferring the variable name from the first
    /// identifier that is not a known function or constant.
    pub fn parse(src: &str) -> Result<Expression> {
        let (root, var) = parser::Parser::new(src, None)?.parse()?;
        Ok(Expression { root, var })
    }

    /// Parse with a declared variable name; any other bare identifier is
    /// an [`Error::UnknownIdentifier`].
    pub fn parse_with_variable(src: &str, var: &str) -> Result<Expression> {
        let (root, var) = parser::Parser::new(src, Some(var))?.parse()?;
        Ok(Expression { root, var })
    }

    /// The constant function `c`.
    pub fn constant(c: f64) -> Expression {
        Expression {
            root: Node::Const(c),
            var: None,
        }
    }

    /// The identity function, printed with the given variable name.
    pub fn identity(var: &str) -> Expression {
        Expression {
            root: Node::Var,
            var: Some(var.to_string()),
        }
    }

    /// Name of the variable, if one occurs.
    pub fn variable(&self) -> Option<&str> {
        self.var.as_deref()
    }

    /// Plain double-precision evaluation at `x`.
    pub fn evaluate(&self, x: f64) -> Result<f64> {
        eval_node(&self.root, x)
    }

    /// Evaluate together with derivatives up to `order` (1..=3).
    /// Components above `order` are computed but not domain-checked.
    pub fn evaluate_jet(&self, x: f64, order: usize) -> Result<Jet> {
        assert!((1..=3).contains(&order), "jet order must be 1..=3");
        eval_jet_node(&self.root, x, order)
    }
}

fn pow_path(exp: &Node, exp_value: f64) -> PowPath {
    if exp.contains_var() {
        return PowPath::Dynamic;
    }
    if exp_value.fract() == 0.0 && exp_value.abs() <= i32::MAX as f64 {
        PowPath::Int(exp_value as i32)
    } else {
        PowPath::RealConst(exp_value)
    }
}

fn domain(what: &str, at: f64) -> Error {
    Error::Domain {
        what: what.to_string(),
        at,
    }
}

fn check_finite(v: f64, what: &str, at: f64) -> Result<f64> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(domain(what, at))
    }
}

fn eval_node(node: &Node, x: f64) -> Result<f64> {
    match node {
        Node::Const(c) => Ok(*c),
        Node::Var => Ok(x),
        Node::Neg(n) => Ok(-eval_node(n, x)?),
        Node::Bin(op, l, r) => {
            let a = eval_node(l, x)?;
            let b = eval_node(r, x)?;
            let v = match op {
                BinOp::Add => a + b,
                BinOp::Sub => a - b,
                BinOp::Mul => a * b,
                BinOp::Div => a / b,
                BinOp::Pow => match pow_path(r, b) {
                    PowPath::Int(n) => a.powi(n),
                    PowPath::RealConst(e) => {
                        if a < 0.0 {
                            return Err(domain("non-integer power of a negative base", x));
                        }
                        a.powf(e)
                    }
                    PowPath::Dynamic => {
                        if a <= 0.0 {
                            return Err(domain("variable power of a non-positive base", x));
                        }
                        (b * a.ln()).exp()
                    }
                },
            };
            check_finite(v, op_name(*op), x)
        }
        Node::Call(f, arg) => {
            let u = eval_node(arg, x)?;
            let v = match f {
                Func::Sin => u.sin(),
                Func::Cos => u.cos(),
                Func::Tan => u.tan(),
                Func::Asin => u.asin(),
                Func::Acos => u.acos(),
                Func::Atan => u.atan(),
                Func::Sqrt => u.sqrt(),
                Func::Exp => u.exp(),
                Func::Log => u.ln(),
                Func::Abs => u.abs(),
                Func::Sinh => u.sinh(),
                Func::Cosh => u.cosh(),
                Func::Tanh => u.tanh(),
            };
            check_finite(v, f.name(), x)
        }
    }
}

fn eval_jet_node(node: &Node, x: f64, order: usize) -> Result<Jet> {
    let j = match node {
        Node::Const(c) => Jet::constant(*c),
        Node::Var => Jet::variable(x),
        Node::Neg(n) => -eval_jet_node(n, x, order)?,
        Node::Bin(op, l, r) => {
            let a = eval_jet_node(l, x, order)?;
            let b = eval_jet_node(r, x, order)?;
            match op {
                BinOp::Add => a + b,
                BinOp::Sub => a - b,
                BinOp::Mul => a * b,
                BinOp::Div => a / b,
                BinOp::Pow => match pow_path(r, b.c0) {
                    PowPath::Int(n) => a.powi(n),
                    PowPath::RealConst(e) => {
                        if a.c0 < 0.0 {
                            return Err(domain("non-integer power of a negative base", x));
                        }
                        a.powf(e)
                    }
                    PowPath::Dynamic => {
                        if a.c0 <= 0.0 {
                            return Err(domain("variable power of a non-positive base", x));
                        }
                        (b * a.ln()).exp()
                    }
                },
            }
        }
        Node::Call(f, arg) => {
            let u = eval_jet_node(arg, x, order)?;
            match f {
                Func::Sin => u.sin(),
                Func::Cos => u.cos(),
                Func::Tan => u.tan(),
                Func::Asin => u.asin(),
                Func::Acos => u.acos(),
                Func::Atan => u.atan(),
                Func::Sqrt => u.sqrt(),
                Func::Exp => u.exp(),
                Func::Log => u.ln(),
                Func::Abs => u.abs(),
                Func::Sinh => u.sinh(),
                Func::Cosh => u.cosh(),
                Func::Tanh => u.tanh(),
            }
        }
    };
    if !j.is_finite_to(order) {
        return Err(domain(node_name(node), x));
    }
    Ok(j)
}

fn op_name(op: BinOp) -> &'static str {
    match op {
        BinOp::Add => "addition",
        BinOp::Sub => "subtraction",
        BinOp::Mul => "multiplication",
        BinOp::Div => "division",
        BinOp::Pow => "power",
    }
}

fn node_name(node: &Node) -> &'static str {
    match node {
        Node::Const(_) => "constant",
        Node::Var => "variable",
        Node::Neg(_) => "negation",
        Node::Bin(op, _, _) => op_name(*op),
        Node::Call(f, _) => f.name(),
    }
}

// Serialization. Printing then re-parsing yields a structurally identical
// tree; parenthesization is chosen so associativity survives the trip.

fn prec(node: &Node) -> u8 {
    match node {
        Node::Bin(BinOp::Add | BinOp::Sub, _, _) => 1,
        Node::Bin(BinOp::Mul | BinOp::Div, _, _) => 2,
        Node::Neg(_) => 3,
        Node::Bin(BinOp::Pow, _, _) => 4,
        Node::Const(_) | Node::Var | Node::Call(_, _) => 5,
    }
}

fn write_node(f: &mut fmt::Formatter<'_>, node: &Node, var: &str, min_prec: u8) -> fmt::Result {
    let p = prec(node);
    let parens = p < min_prec;
    if parens {
        write!(f, "(")?;
    }
    match node {
        // Integral constants print without the trailing `.0`; either
        // spelling parses back to the same node.
        Node::Const(c) if c.fract() == 0.0 && c.abs() < 1e15 => write!(f, "{c:.0}")?,
        Node::Const(c) => write!(f, "{c:?}")?,
        Node::Var => write!(f, "{var}")?,
        Node::Neg(n) => {
            write!(f, "-")?;
            write_node(f, n, var, 3)?;
        }
        Node::Bin(op, l, r) => {
            let (sym, lp, rp) = match op {
                BinOp::Add => (" + ", 1, 2),
                BinOp::Sub => (" - ", 1, 2),
                BinOp::Mul => ("*", 2, 3),
                BinOp::Div => ("/", 2, 3),
                BinOp::Pow => ("^", 5, 3),
            };
            write_node(f, l, var, lp)?;
            write!(f, "{sym}")?;
            write_node(f, r, var, rp)?;
        }
        Node::Call(func, a) => {
            write!(f, "{}(", func.name())?;
            write_node(f, a, var, 0)?;
            write!(f, ")")?;
        }
    }
    if parens {
        write!(f, ")")?;
    }
    Ok(())
}

impl fmt::Display for Expression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_node(f, &self.root, self.var.as_deref().unwrap_or("x"), 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn parses_with_standard_precedence() {
        // theta(s) = s + s^3/3
        let e = Expression::parse("s + s^3/3").unwrap();
        assert_eq!(e.variable(), Some("s"));
        let v = e.evaluate(1.0).unwrap();
        assert!((v - 4.0 / 3.0).abs() < 1e-15);
        // ^ binds tighter than unary minus
        let e = Expression::parse("-2^2").unwrap();
        assert_eq!(e.evaluate(0.0).unwrap(), -4.0);
        // right associativity
        let e = Expression::parse("2^3^2").unwrap();
        assert_eq!(e.evaluate(0.0).unwrap(), 512.0);
        // whitespace insensitivity
        let a = Expression::parse(" 1+ s ^2 ").unwrap();
        let b = Expression::parse("1+s^2").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn constant_zero() {
        let e = Expression::parse("0").unwrap();
        assert_eq!(e.variable(), None);
        assert_eq!(e.evaluate(123.0).unwrap(), 0.0);
    }

    #[test]
    fn empty_source_is_a_syntax_error() {
        for src in ["", "   "] {
            match Expression::parse(src).unwrap_err() {
                Error::Syntax { offset, .. } => assert_eq!(offset, 0),
                other => panic!("unexpected {other:?}"),
            }
        }
    }

    #[test]
    fn unbalanced_paren_reports_offset() {
        match Expression::parse("sin(x").unwrap_err() {
            Error::Syntax { offset, .. } => assert_eq!(offset, 5),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn second_variable_is_rejected() {
        match Expression::parse("x + y").unwrap_err() {
            Error::UnknownIdentifier { name, offset } => {
                assert_eq!(name, "y");
                assert_eq!(offset, 4);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn known_constants() {
        let e = Expression::parse("sin(pi/2) + e^0").unwrap();
        assert!((e.evaluate(0.0).unwrap() - 2.0).abs() < 1e-15);
    }

    #[test]
    fn evaluate_polynomial() {
        let e = Expression::parse("1 + s^2").unwrap();
        assert_eq!(e.evaluate(2.0).unwrap(), 5.0);
    }

    #[test]
    #[allow(clippy::approx_constant)] // 0.70711 is the deliberately truncated sample point
    fn evaluate_arcsine_of_square() {
        let e = Expression::parse("asin(x^2)").unwrap();
        let v = e.evaluate(0.70711).unwrap();
        assert!((v - 0.523596).abs() < 1e-5);
        assert!((v - (0.70711f64 * 0.70711).asin()).abs() < 1e-15);
    }

    #[test]
    fn pole_is_a_domain_error() {
        let e = Expression::parse("1/s").unwrap();
        assert!(matches!(e.evaluate(0.0), Err(Error::Domain { .. })));
    }

    #[test]
    fn jet_of_monomial() {
        let e = Expression::parse("s^2").unwrap();
        let j = e.evaluate_jet(3.0, 2).unwrap();
        assert_eq!((j.c0, j.c1, j.c2), (9.0, 6.0, 2.0));
    }

    #[test]
    fn jet_of_fresnel_phase() {
        let e = Expression::parse("sin(t^2/2)").unwrap();
        let j = e.evaluate_jet(1.0, 1).unwrap();
        assert!((j.c0 - 0.5f64.sin()).abs() < 1e-15);
        assert!((j.c1 - 0.5f64.cos()).abs() < 1e-15);
        assert!((j.c0 - 0.479426).abs() < 1e-5);
        assert!((j.c1 - 0.877583).abs() < 1e-5);
    }

    #[test]
    fn jet_with_vanishing_slope() {
        let e = Expression::parse("1 + s^2").unwrap();
        let j = e.evaluate_jet(0.0, 1).unwrap();
        assert_eq!((j.c0, j.c1), (1.0, 0.0));
    }

    #[test]
    fn jet_value_matches_evaluate_bitwise() {
        for src in [
            "s + s^3/3",
            "1 + s^2",
            "2 + sin(s)",
            "sin(s^2/2)/cos(s)",
            "exp(s)*log(1 + s^2)",
            "s^0.5 + s^-2",
            "(2 + s)^s",
        ] {
            let e = Expression::parse(src).unwrap();
            for &x in &[0.3, 0.7, 1.1, 2.4] {
                let v = e.evaluate(x).unwrap();
                let j = e.evaluate_jet(x, 3).unwrap();
                assert_eq!(v.to_bits(), j.c0.to_bits(), "{src} at {x}");
            }
        }
    }

    #[test]
    fn negative_base_integer_power_is_fine() {
        let e = Expression::parse("s^3").unwrap();
        assert_eq!(e.evaluate(-2.0).unwrap(), -8.0);
        let j = e.evaluate_jet(-2.0, 3).unwrap();
        assert_eq!((j.c1, j.c2, j.c3), (12.0, -12.0, 6.0));
    }

    #[test]
    fn negative_base_real_power_is_rejected() {
        let e = Expression::parse("s^0.5").unwrap();
        assert!(matches!(e.evaluate(-1.0), Err(Error::Domain { .. })));
        assert!(matches!(e.evaluate_jet(-1.0, 1), Err(Error::Domain { .. })));
    }

    #[test]
    fn abs_derivative_at_kink_is_rejected() {
        let e = Expression::parse("abs(s)").unwrap();
        assert_eq!(e.evaluate(0.0).unwrap(), 0.0);
        assert!(e.evaluate_jet(0.5, 1).is_ok());
        assert!(matches!(e.evaluate_jet(0.0, 1), Err(Error::Domain { .. })));
    }

    #[test]
    fn display_round_trip_is_structural() {
        for src in [
            "s + s^3/3",
            "1 + s^2",
            "-s^2",
            "2 + sin(s)",
            "x^2 / sqrt(1 - x^4)",
            "(1 + 2/s)^3",
            "s - (1 - s)",
            "1 - 2 - 3",
            "2^3^s",
            "sin(cos(tan(s)))",
        ] {
            let e = Expression::parse(src).unwrap();
            let printed = e.to_string();
            let back = Expression::parse(&printed).unwrap();
            assert_eq!(e, back, "round trip failed: {src} -> {printed}");
        }
    }

    #[test]
    fn pi_survives_print_and_reparse() {
        let e = Expression::parse("pi * s").unwrap();
        let back = Expression::parse(&e.to_string()).unwrap();
        assert_eq!(e, back);
        assert_eq!(back.evaluate(1.0).unwrap(), PI);
    }
}
