use serde::{Deserialize, Serialize};

use super::ConstructError;

/// A replayable construction: given objects, primitive steps, and the
/// properties to check once the steps have run.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Script {
    pub name: String,
    #[serde(default)]
    pub params: Vec<Param>,
    #[serde(default)]
    pub steps: Vec<Step>,
    #[serde(default)]
    pub asserts: Vec<Assertion>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ParamKind {
    /// `[u, v]` in the disk.
    Point,
    /// `[r, theta]`: hyperbolic distance from the centre and direction.
    PointPolar,
    /// `theta` on the boundary circle.
    Ideal,
    Length,
    Angle,
}

/// A given object. Angles may be written in degrees with a `d` suffix.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Param {
    pub name: String,
    pub kind: ParamKind,
    #[serde(default, skip_serializing_if = "serde_json::Value::is_null")]
    pub value: serde_json::Value,
    /// Why a numerically placed object is constructible.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Op {
    /// `[P, Q, out]`: the whole line through two points, oriented `P -> Q`.
    Line,
    /// `[P, Q, out]`: the ray from `P` through `Q`.
    Ray,
    /// `[P, Q, out]`: the segment `PQ`.
    Segment,
    /// `[C, P, out]`.
    CircleCenterThrough,
    /// `[C, A, B, out]` with radius `AB`, or `[C, length, out]`.
    CircleCenterRadius,
    /// `[a, b, out]`; needs a selector when two points are possible.
    Intersect,
    /// `[P, line, out_line, out_foot]`; the new line runs from `P` to the foot.
    PerpendicularDrop,
    /// `[P, line, out]`; `P` on `line`, the new line points to its left.
    PerpendicularErect,
    /// `[A, B, out_mid]` or `[A, B, out_mid, out_bisector]`.
    BisectSegment,
    /// `[P, Q, R, out]`: the ray from `P` halving angle `QPR`.
    BisectAngle,
    /// `[P, Q, R, V, W, side, out]` copies angle `QPR`, or `[angle, V, W, side, out]`
    /// uses a given angle; laid off at `V` from ray `VW`. `side` is `left`,
    /// `right`, or an object on the wanted side of line `VW`.
    TransferAngle,
    /// `[line, out]` with selector `start`/`end`, or `[line, ref_line, ref, out]`
    /// for the end on the same side of `ref_line` as `ref`.
    MarkIdeal,
    /// `[B, line, omega, out]`: the point of `line` corresponding to `B` with
    /// respect to the ideal end `omega`.
    CorrespondingPoint,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Selector {
    First,
    Second,
    Only,
    Start,
    End,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Step {
    pub op: Op,
    pub args: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub selector: Option<Selector>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Predicate {
    /// `[A, B, value]`
    Distance,
    /// `[A, B, C, D]`: `|AB| = |CD|`.
    EqualDistance,
    /// `[P, Q, R, value]`: angle `QPR`.
    Angle,
    /// `[P, Q, R, A, B]`: angle `QPR` is the angle of parallelism of `|AB|`.
    ParallelismAngle,
    /// `[A, B, value]`: the angle of parallelism of `|AB|`.
    Parallelism,
    /// `[X, Y]` ideal points.
    SameIdeal,
    /// `[P, line]`
    OnLine,
    /// `[l1, l2, l3]`: the third line passes through the crossing of the first two.
    Concurrent,
    /// `[V1, ..., Vn, value]`: area by defect.
    PolygonArea,
    /// `[P, Q, R, s]`: `pi tan^2(QPR)` is the area of the circle of radius `s`
    /// (relative residual).
    QuadratureAngle,
    /// `[V1, ..., Vn, s]`: polygon area against the circle of radius `s`
    /// (relative residual).
    PolygonAreaVsCircle,
}

impl Predicate {
    /// The name used in script files.
    pub fn name(self) -> &'static str {
        match self {
            Predicate::Distance => "distance",
            Predicate::EqualDistance => "equal_distance",
            Predicate::Angle => "angle",
            Predicate::ParallelismAngle => "parallelism_angle",
            Predicate::Parallelism => "parallelism",
            Predicate::SameIdeal => "same_ideal",
            Predicate::OnLine => "on_line",
            Predicate::Concurrent => "concurrent",
            Predicate::PolygonArea => "polygon_area",
            Predicate::QuadratureAngle => "quadrature_angle",
            Predicate::PolygonAreaVsCircle => "polygon_area_vs_circle",
        }
    }
}

/// An argument to an assertion: an object name or a literal number.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Arg {
    Number(f64),
    Name(String),
}

impl From<&str> for Arg {
    fn from(s: &str) -> Self {
        Arg::Name(s.to_string())
    }
}

impl From<f64> for Arg {
    fn from(x: f64) -> Self {
        Arg::Number(x)
    }
}

impl std::fmt::Display for Arg {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Arg::Number(x) => write!(f, "{x}"),
            Arg::Name(s) => f.write_str(s),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Assertion {
    pub predicate: Predicate,
    pub args: Vec<Arg>,
    pub tol: f64,
}

impl Script {
    pub fn parse(text: &str) -> Result<Self, ConstructError> {
        if text.trim().is_empty() {
            return Ok(Self::default());
        }
        serde_json::from_str(text).map_err(|e| ConstructError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn to_pretty(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("scripts serialize");
        s.push('\n');
        s
    }
}

/// Parses an angle: radians by default, degrees with a trailing `d`.
pub fn parse_angle(s: &str) -> Option<f64> {
    let s = s.trim();
    match s.strip_suffix('d') {
        Some(deg) => deg.trim().parse::<f64>().ok().map(f64::to_radians),
        None => s.parse().ok(),
    }
}
