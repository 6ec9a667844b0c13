use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// All failure modes of the kernel, the emitters, and the CLI front end.
#[derive(Debug, Error)]
pub enum Error {
    /// The expression text could not be parsed.
    #[error("syntax error at byte {offset}: expected {expected}")]
    Syntax { offset: usize, expected: String },

    /// An identifier that is neither the expression variable nor a known
    /// function or constant.
    #[error("unknown identifier `{name}` at byte {offset}")]
    UnknownIdentifier { name: String, offset: usize },

    /// Evaluation left the real domain (NaN or infinity).
    #[error("domain error: {what} at {at}")]
    Domain { what: String, at: f64 },

    /// Adaptive quadrature hit its recursion cap, which signals a
    /// non-smooth or singular integrand.
    #[error("quadrature recursion exceeded depth {max_depth} near {near}")]
    DepthExceeded { max_depth: u32, near: f64 },

    /// A target value lies outside the attainable interval.
    #[error("value {value} outside attainable range [{lo}, {hi}]")]
    OutOfRange { value: f64, lo: f64, hi: f64 },

    /// The parametrization is singular: |dγ/dt| below tolerance.
    #[error("singular point at t = {t}: speed {speed} below 1e-12")]
    SingularPoint { t: f64, speed: f64 },

    /// Curvature vanishes on the whole sampled domain, so no
    /// tangential-angle chart exists (straight line).
    #[error(
        "curvature vanishes everywhere on the sampled domain; no tangential-angle chart exists"
    )]
    EverywhereFlat,

    /// Arc length outside the segment's open range.
    #[error("arc length {s} outside segment ({lo}, {hi})")]
    OutOfSegment { s: f64, lo: f64, hi: f64 },

    /// No multiple of the requested angle step falls inside the chart range.
    #[error("theta step {step} too large: no multiple inside ({lo}, {hi})")]
    StepTooLarge { step: f64, lo: f64, hi: f64 },

    /// 1/κ is unbounded somewhere on the requested range.
    #[error("curvature magnitude {kappa:e} below 1e-9 at theta = {theta}")]
    VanishingCurvature { theta: f64, kappa: f64 },

    /// Not one of the built-in curve names.
    #[error("unknown builtin curve `{0}`")]
    UnknownBuiltin(String),

    /// The profile touches or crosses the revolution axis.
    #[error("profile touches the revolution axis: gamma1 = {gamma1:e} at s = {s}")]
    AxisContact { s: f64, gamma1: f64 },

    /// Parameter outside the curve or surface domain.
    #[error("parameter {t} outside domain ({lo}, {hi})")]
    OutOfDomain { t: f64, lo: f64, hi: f64 },

    /// An emitter was handed nothing to draw.
    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    /// Bad run configuration (schema, ranges, missing outputs).
    #[error("invalid configuration: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Exit-code class used by the CLI: 1 config/parse, 2 numeric, 3 I/O.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Syntax { .. }
            | Error::UnknownIdentifier { .. }
            | Error::UnknownBuiltin(_)
            | Error::Config(_) => 1,
            Error::Io(_) => 3,
            _ => 2,
        }
    }
}
