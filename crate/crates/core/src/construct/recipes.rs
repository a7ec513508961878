//! Script generators for the classical constructions, and typed wrappers that
//! run them.
//!
//! Every generator emits only primitive steps; the givens are the only place
//! where coordinates enter. Where a given angle is placed numerically its
//! constructibility certificate travels with the parameter.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::disk::{self, DiskPoint, Geodesic, IdealPoint};
use crate::planner::{format_factors, gauss_constructible, Rational};
use crate::trig::{parallelism_segment, Angle, Curvature, RightTriangle};

use super::engine::{run, Run};
use super::script::{Arg, Assertion, Op, Param, ParamKind, Predicate, Script, Selector, Step};
use super::state::ConstructionState;
use super::ConstructError;

/// Tolerance for constructed incidences and angles.
pub const TOL: f64 = 1e-9;
/// Tolerance for areas.
pub const AREA_TOL: f64 = 1e-8;

/// Accumulates a script; object names are `prefix + local name`.
#[derive(Debug, Clone)]
pub struct ScriptBuilder {
    script: Script,
    unit: Option<String>,
}

impl ScriptBuilder {
    pub fn new(name: &str) -> Self {
        Self { script: Script { name: name.into(), ..Script::default() }, unit: None }
    }

    fn param(&mut self, name: &str, kind: ParamKind, value: serde_json::Value, certificate: Option<String>) -> String {
        self.script.params.push(Param { name: name.into(), kind, value, certificate });
        name.into()
    }

    pub fn point(&mut self, name: &str, p: DiskPoint<f64>) -> String {
        self.param(name, ParamKind::Point, serde_json::json!([p.u(), p.v()]), None)
    }

    pub fn ideal(&mut self, name: &str, theta: f64, certificate: Option<String>) -> String {
        self.param(name, ParamKind::Ideal, serde_json::json!(theta), certificate)
    }

    pub fn length(&mut self, name: &str, value: f64) -> String {
        self.param(name, ParamKind::Length, serde_json::json!(value), None)
    }

    /// The unit of length, declared once.
    pub fn unit(&mut self) -> String {
        if self.unit.is_none() {
            self.unit = Some(self.length("unit", 1.0));
        }
        self.unit.clone().unwrap()
    }

    pub fn step(&mut self, op: Op, args: &[&str], selector: Option<Selector>) {
        self.script.steps.push(Step { op, args: args.iter().map(|s| s.to_string()).collect(), selector });
    }

    pub fn check(&mut self, predicate: Predicate, args: Vec<Arg>, tol: f64) {
        self.script.asserts.push(Assertion { predicate, args, tol });
    }

    pub fn finish(self) -> Script {
        self.script
    }

    /// The ray from `d` asymptotically parallel to `line` towards its ideal
    /// end `toward`: drop `DB`, take `A` a unit along the line, erect `AE`,
    /// drop `DE`, cut ray `BD` with the circle about `A` of radius `ED` at `O`,
    /// and lay off angle `AOB` at `D` from `DB` on the side of `toward`.
    /// Returns the ray and its ideal end.
    pub fn parallel(&mut self, line: &str, toward: &str, d: &str, p: &str) -> (String, String) {
        let n = |x: &str| format!("{p}{x}");
        let unit = self.unit();
        let (db, b, cb, a, ae, de, e, ca, bd, o, dm, m) =
            (n("DB"), n("B"), n("cB"), n("A"), n("AE"), n("DE"), n("E"), n("cA"), n("BD"), n("O"), n("DM"), n("M"));
        self.step(Op::PerpendicularDrop, &[d, line, &db, &b], None);
        self.step(Op::CircleCenterRadius, &[&b, &unit, &cb], None);
        self.step(Op::Intersect, &[line, &cb, &a], Some(Selector::Second));
        self.step(Op::PerpendicularErect, &[&a, line, &ae], None);
        self.step(Op::PerpendicularDrop, &[d, &ae, &de, &e], None);
        self.step(Op::CircleCenterRadius, &[&a, &e, d, &ca], None);
        self.step(Op::Ray, &[&b, d, &bd], None);
        self.step(Op::Intersect, &[&ca, &bd, &o], Some(Selector::Only));
        self.step(Op::TransferAngle, &[&o, &a, &b, d, &b, toward, &dm], None);
        self.step(Op::MarkIdeal, &[&dm, &m], Some(Selector::End));
        (dm, m)
    }

    /// The segment `AL` on the arm `AQ` whose angle of parallelism is the
    /// angle `MAQ`: take `B` on `AQ` at distance `arm`, draw `BN` parallel to
    /// `AM`, and meet the altitudes `AH` and `BK` of the asymptotic triangle
    /// `ABN` at `O`; the perpendicular from `O` to `AQ` is the third altitude
    /// and its foot is `L`. Returns the name of `L`.
    pub fn parallelism_segment(&mut self, a: &str, m: &str, q: &str, arm: f64, p: &str) -> String {
        let n = |x: &str| format!("{p}{x}");
        let arm = self.length(&n("arm"), arm);
        let (am, aq, cb, b, ah, h, bk, k, o, ol, l, top) =
            (n("AM"), n("AQ"), n("cB"), n("B"), n("AH"), n("H"), n("BK"), n("K"), n("O"), n("OL"), n("L"), n("Ntop"));
        self.step(Op::Line, &[a, m, &am], None);
        self.step(Op::Line, &[a, q, &aq], None);
        self.step(Op::CircleCenterRadius, &[a, &arm, &cb], None);
        self.step(Op::Intersect, &[&aq, &cb, &b], Some(Selector::Second));
        let (bn, nn) = self.parallel(&am, m, &b, &n("p"));
        self.step(Op::PerpendicularDrop, &[a, &bn, &ah, &h], None);
        self.step(Op::PerpendicularDrop, &[&b, &am, &bk, &k], None);
        self.step(Op::Intersect, &[&ah, &bk, &o], Some(Selector::Only));
        self.step(Op::PerpendicularDrop, &[&o, &aq, &ol, &l], None);
        self.step(Op::MarkIdeal, &[&ol, &top], Some(Selector::Start));
        self.check(Predicate::SameIdeal, vec![nn.as_str().into(), m.into()], TOL);
        self.check(Predicate::SameIdeal, vec![top.as_str().into(), nn.as_str().into()], TOL);
        l
    }

    /// Reflects point `x` in `line` with a perpendicular and a circle.
    pub fn reflect(&mut self, x: &str, line: &str, out: &str) {
        let (l, f, c) = (format!("{out}_perp"), format!("{out}_foot"), format!("{out}_circle"));
        self.step(Op::PerpendicularDrop, &[x, line, &l, &f], None);
        self.step(Op::CircleCenterThrough, &[&f, x, &c], None);
        self.step(Op::Intersect, &[&l, &c, out], Some(Selector::Second));
    }
}

/// Outcome of a typed construction: the run and the quantity it produced.
#[derive(Debug, Clone, PartialEq)]
pub struct Built<T> {
    pub run: Run,
    pub value: T,
}

fn execute(script: &Script) -> Result<Run, ConstructError> {
    run(script, ConstructionState::new())
}

fn invalid(msg: impl Into<String>) -> ConstructError {
    ConstructError::Invalid(msg.into())
}

/// Arm length for the parallelism-segment construction: doubled from 1
/// until the asymptotic triangle's angle at `B` is clearly acute, so the two
/// altitudes meet.
pub fn arm_length(phi: f64) -> f64 {
    let vertex = DiskPoint::origin();
    let parallel_end = IdealPoint::new(0.0).expect("finite");
    let mut d = 1.0;
    loop {
        let b = DiskPoint::polar(d, phi).expect("arm stays inside the disk");
        let at_b = disk::measure_angle(&b, &vertex.into(), &parallel_end.into()).expect("distinct points");
        if at_b < FRAC_PI_2 - 0.1 || d >= 16.0 {
            return d;
        }
        d *= 2.0;
    }
}

pub fn parallel_script(start: IdealPoint<f64>, end: IdealPoint<f64>, d: DiskPoint<f64>) -> Script {
    let mut b = ScriptBuilder::new("parallel");
    b.ideal("X", start.theta(), None);
    b.ideal("N", end.theta(), None);
    b.point("D", d);
    b.step(Op::Line, &["X", "N", "AN"], None);
    let (_, m) = b.parallel("AN", "N", "D", "");
    b.check(Predicate::SameIdeal, vec![m.as_str().into(), "N".into()], TOL);
    b.check(Predicate::ParallelismAngle, vec!["D".into(), "B".into(), m.as_str().into(), "D".into(), "B".into()], TOL);
    b.finish()
}

/// The parallel through `d` to the line from `start` to `end`, in the
/// direction of `end`. The value is the constructed ray.
pub fn construct_parallel(start: IdealPoint<f64>, end: IdealPoint<f64>, d: DiskPoint<f64>) -> Result<Built<Geodesic<f64>>, ConstructError> {
    let line = Geodesic::from_ideal(start, end).map_err(|e| invalid(e.to_string()))?;
    if line.contains(&d, 1e-9) {
        return Err(invalid("the point lies on the line"));
    }
    let run = execute(&parallel_script(start, end, d))?;
    let value = run.state.line("DM").expect("ray DM").geodesic;
    Ok(Built { run, value })
}

pub fn parallelism_segment_script(phi: f64) -> Script {
    let mut b = ScriptBuilder::new("parallelism_segment");
    b.point("A", DiskPoint::origin());
    b.ideal("M", 0.0, None);
    b.ideal("Q", phi, None);
    let l = b.parallelism_segment("A", "M", "Q", arm_length(phi), "");
    b.check(Predicate::Parallelism, vec!["A".into(), l.as_str().into(), phi.into()], TOL);
    b.finish()
}

/// The segment whose angle of parallelism is the acute angle `phi`. The value is its length.
pub fn construct_parallelism_segment(phi: f64) -> Result<Built<f64>, ConstructError> {
    if !(phi > 0.0 && phi < FRAC_PI_2) {
        return Err(invalid(format!("{phi} is not an acute angle; no parallelism segment exists")));
    }
    let run = execute(&parallelism_segment_script(phi))?;
    let (a, l) = (run.state.point("A").unwrap(), run.state.point("L").unwrap());
    let value = disk::dist(&a, &l).map_err(|e| invalid(e.to_string()))?;
    Ok(Built { run, value })
}

/// Lays off angle `NBQ` with `sin NBQ = 1 / ratio`, finds `A` on `BQ` with the
/// perpendicular `AM` parallel to `BN`, and the point `J` of `AM`
/// corresponding to `B`; then `ln(ratio) = |AJ|`.
pub fn ratio_distance_script(angle: f64, certificate: Option<String>, expected: f64) -> Script {
    let mut b = ScriptBuilder::new("ratio_distance");
    b.point("B", DiskPoint::origin());
    b.ideal("Q", 0.0, None);
    b.ideal("N", angle, certificate);
    let a = b.parallelism_segment("B", "N", "Q", arm_length(angle), "s_");
    b.step(Op::PerpendicularErect, &[&a, "s_AQ", "AM"], None);
    b.step(Op::MarkIdeal, &["AM", "Mend"], Some(Selector::End));
    b.step(Op::CorrespondingPoint, &["B", "AM", "Mend", "J"], None);
    b.check(Predicate::SameIdeal, vec!["Mend".into(), "N".into()], TOL);
    b.check(Predicate::Distance, vec!["J".into(), a.as_str().into(), expected.into()], TOL);
    b.finish()
}

fn ratio_distance(angle: f64, certificate: Option<String>, expected: f64) -> Result<Built<f64>, ConstructError> {
    let run = execute(&ratio_distance_script(angle, certificate, expected))?;
    let (j, a) = (run.state.point("J").unwrap(), run.state.point("s_L").unwrap());
    let value = disk::dist(&j, &a).map_err(|e| invalid(e.to_string()))?;
    Ok(Built { run, value })
}

/// The angle `pi/6` (constructible since `12 = 2^2 * 3`) yields a segment of length `ln 2`.
pub fn construct_ratio_distance() -> Result<Built<f64>, ConstructError> {
    ratio_distance(PI / 6.0, Some(angle_certificate(Rational::new(1, 6))), 2f64.ln())
}

/// The same figure for an arbitrary ratio `x > 1`, with `sin NBQ = 1/x` placed
/// numerically; for `x = e` the angle is computable but not constructible.
pub fn ratio_distance_numeric(x: f64) -> Result<Built<f64>, ConstructError> {
    if !(x > 1.0 && x.is_finite()) {
        return Err(invalid(format!("ratio {x} must exceed 1")));
    }
    ratio_distance((1.0 / x).asin(), None, x.ln())
}

/// Certificate for an angle `pi * r`: the denominator of `r / 2` as a
/// fraction of the full turn.
pub fn angle_certificate(over_pi: Rational) -> String {
    let turn = over_pi / Rational::from_integer(2);
    let den = *turn.denom();
    format!(
        "2pi * {turn}: denominator {den} = {}{}",
        format_factors(den),
        if gauss_constructible(den) { ", a power of two times distinct Fermat primes" } else { ", NOT constructible" }
    )
}

/// Steps laying out `CD = s` with its perpendicular bisector, the parallels
/// from `D` and `C` to the bisector, `CA` perpendicular to `DB` and `CM`
/// perpendicular to `CA`; `z = MAN`. Returns the names `(A, M, N, s)`.
pub fn quadrature_angle_steps(b: &mut ScriptBuilder, s: f64, p: &str) -> (String, String, String, String) {
    let n = |x: &str| format!("{p}{x}");
    let c = b.point(&n("C"), DiskPoint::polar(s / 2.0, PI).expect("inside"));
    let x = b.ideal(&n("X"), 0.0, None);
    let sl = b.length(&n("s"), s);
    let (cx, cs, d, mid, bis, top) = (n("CX"), n("circle_s"), n("D"), n("Mid"), n("Bis"), n("N"));
    b.step(Op::Line, &[&c, &x, &cx], None);
    b.step(Op::CircleCenterRadius, &[&c, &sl, &cs], None);
    b.step(Op::Intersect, &[&cx, &cs, &d], Some(Selector::Second));
    b.step(Op::BisectSegment, &[&c, &d, &mid, &bis], None);
    b.step(Op::MarkIdeal, &[&bis, &top], Some(Selector::End));
    let (db, dn) = b.parallel(&bis, &top, &d, &n("d_"));
    let (_, cn) = b.parallel(&bis, &top, &c, &n("c_"));
    let (ca, a, cm, m) = (n("CA"), n("A"), n("CM"), n("M"));
    b.step(Op::PerpendicularDrop, &[&c, &db, &ca, &a], None);
    b.step(Op::PerpendicularErect, &[&c, &ca, &cm], None);
    b.step(Op::MarkIdeal, &[&cm, &ca, &top, &m], None);
    b.check(Predicate::SameIdeal, vec![dn.as_str().into(), top.as_str().into()], TOL);
    b.check(Predicate::SameIdeal, vec![cn.as_str().into(), top.as_str().into()], TOL);
    b.check(Predicate::QuadratureAngle, vec![a.as_str().into(), m.as_str().into(), top.as_str().into(), sl.as_str().into()], AREA_TOL);
    (a, m, top, sl)
}

pub fn quadrature_angle_script(s: f64) -> Script {
    let mut b = ScriptBuilder::new("quadrature_angle");
    quadrature_angle_steps(&mut b, s, "");
    b.finish()
}

/// The angle `z` with `pi tan^2 z` equal to the area of the circle of radius `s`.
pub fn construct_quadrature_angle(s: f64) -> Result<Built<f64>, ConstructError> {
    if !(s > 0.0 && s.is_finite()) {
        return Err(invalid(format!("radius {s} must be positive")));
    }
    let run = execute(&quadrature_angle_script(s))?;
    let st = &run.state;
    let value = disk::measure_angle(&st.point("A").unwrap(), &st.ideal("M").unwrap().into(), &st.ideal("N").unwrap().into())
        .map_err(|e| invalid(e.to_string()))?;
    Ok(Built { run, value })
}

/// Names of the right triangle built by [`right_triangle_steps`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleNames {
    /// Vertex with angle `alpha`.
    pub o: String,
    /// Right-angle vertex.
    pub p: String,
    /// Vertex with angle `beta`.
    pub v: String,
}

/// Builds the right triangle with angles `alpha`, `beta` from its hypotenuse-free
/// data: `b' = seg(pi/2 - alpha)` and `c' = seg(beta)` give, as leg and
/// hypotenuse of an auxiliary right triangle, the leg `a` opposite `alpha`.
pub fn right_triangle_steps(
    b: &mut ScriptBuilder,
    alpha: (f64, Option<String>),
    beta: (f64, Option<String>),
    p: &str,
) -> TriangleNames {
    let n = |x: &str| format!("{p}{x}");
    let g = b.point(&n("G"), DiskPoint::origin());
    let x = b.ideal(&n("X"), 0.0, None);
    let ya = b.ideal(&n("Ya"), alpha.0, alpha.1);
    let yb = b.ideal(&n("Yb"), beta.0, beta.1);
    let (gx, gi, i) = (n("GX"), n("GI"), n("I"));
    b.step(Op::Line, &[&g, &x, &gx], None);
    b.step(Op::PerpendicularErect, &[&g, &gx, &gi], None);
    b.step(Op::MarkIdeal, &[&gi, &i], Some(Selector::End));
    let lb = b.parallelism_segment(&g, &i, &ya, arm_length(FRAC_PI_2 - alpha.0), &n("b_"));
    let lc = b.parallelism_segment(&g, &x, &yb, arm_length(beta.0), &n("c_"));
    b.check(Predicate::Parallelism, vec![g.as_str().into(), lb.as_str().into(), (FRAC_PI_2 - alpha.0).into()], TOL);
    b.check(Predicate::Parallelism, vec![g.as_str().into(), lc.as_str().into(), beta.0.into()], TOL);
    let (cb, bp, cc, v, vo, o) = (n("circle_b"), n("Bp"), n("circle_c"), n("V"), n("VO"), n("O"));
    b.step(Op::CircleCenterRadius, &[&g, &g, &lb, &cb], None);
    b.step(Op::Intersect, &[&gi, &cb, &bp], Some(Selector::Second));
    b.step(Op::CircleCenterRadius, &[&bp, &g, &lc, &cc], None);
    b.step(Op::Intersect, &[&gx, &cc, &v], Some(Selector::Second));
    b.step(Op::TransferAngle, &[&g, &x, &yb, &v, &g, &i, &vo], None);
    b.step(Op::Intersect, &[&vo, &gi, &o], Some(Selector::Only));
    b.check(Predicate::Angle, vec![o.as_str().into(), g.as_str().into(), v.as_str().into(), alpha.0.into()], TOL);
    b.check(Predicate::Angle, vec![v.as_str().into(), g.as_str().into(), o.as_str().into(), beta.0.into()], TOL);
    b.check(Predicate::Angle, vec![g.as_str().into(), o.as_str().into(), v.as_str().into(), FRAC_PI_2.into()], TOL);
    TriangleNames { o, p: g, v }
}

fn validate_triangle_angles(alpha: f64, beta: f64) -> Result<(), ConstructError> {
    if !(alpha > 0.0 && beta > 0.0 && alpha + beta < FRAC_PI_2) {
        return Err(invalid(format!("angles {alpha} and {beta} do not form a right triangle (need alpha + beta < pi/2)")));
    }
    Ok(())
}

pub fn right_triangle_script(alpha: f64, beta: f64) -> Script {
    let mut b = ScriptBuilder::new("right_triangle");
    right_triangle_steps(&mut b, (alpha, None), (beta, None), "");
    b.finish()
}

/// Draws the right triangle with acute angles `alpha` and `beta`; the value
/// holds its measured elements.
pub fn construct_right_triangle_for_polygon(alpha: f64, beta: f64) -> Result<Built<RightTriangle<f64>>, ConstructError> {
    validate_triangle_angles(alpha, beta)?;
    let run = execute(&right_triangle_script(alpha, beta))?;
    let st = &run.state;
    let (o, p, v) = (st.point("O").unwrap(), st.point("G").unwrap(), st.point("V").unwrap());
    let m = |e: crate::GeometryError| invalid(e.to_string());
    let value = RightTriangle {
        a: crate::trig::Length::new(disk::dist(&p, &v).map_err(m)?).map_err(m)?,
        b: crate::trig::Length::new(disk::dist(&p, &o).map_err(m)?).map_err(m)?,
        c: crate::trig::Length::new(disk::dist(&o, &v).map_err(m)?).map_err(m)?,
        alpha: Angle::new(disk::measure_angle(&o, &p.into(), &v.into()).map_err(m)?).map_err(m)?,
        beta: Angle::new(disk::measure_angle(&v, &p.into(), &o.into()).map_err(m)?).map_err(m)?,
        k: Curvature::unit(),
    };
    Ok(Built { run, value })
}

/// Appends the regular `n`-gon with interior angle `v = pi * v_over_pi`,
/// produced by reflecting the centre/midpoint/vertex triangle around the
/// centre. When `circle_radius` is given the polygon's area is also checked
/// against that circle. Returns the vertex names.
pub fn regular_polygon_steps(
    b: &mut ScriptBuilder,
    n: u32,
    v_over_pi: Rational,
    circle_radius: Option<&str>,
    p: &str,
) -> Vec<String> {
    let v = PI * crate::planner::rational_to::<f64>(v_over_pi);
    let alpha_cert = format!("pi/{n}: the regular {n}-gon is constructible, {n} = {}", format_factors(n as i64));
    let beta_cert = angle_certificate(v_over_pi / Rational::from_integer(2));
    let tri = right_triangle_steps(b, (PI / n as f64, Some(alpha_cert)), (v / 2.0, Some(beta_cert)), p);
    let name = |x: String| format!("{p}{x}");
    let verts: Vec<String> = (0..n).map(|j| name(format!("P{j}"))).collect();
    // the axis through the right-angle vertex is the perpendicular GI
    b.reflect(&tri.v, &name("GI".into()), &verts[0]);
    b.step(Op::Segment, &[&tri.o, &verts[0], &name("spoke0".into())], None);
    b.step(Op::Segment, &[&tri.o, &tri.v, &name("spoke1".into())], None);
    let mut prev = verts[0].clone();
    let mut here = tri.v.clone();
    let mut names = vec![verts[0].clone(), tri.v.clone()];
    for j in 1..n {
        let spoke = name(format!("spoke{j}"));
        let next = if j + 1 < n { name(format!("P{}", j + 1)) } else { name("closure".into()) };
        b.reflect(&prev, &spoke, &next);
        if j + 1 < n {
            b.step(Op::Segment, &[&tri.o, &next, &name(format!("spoke{}", j + 1))], None);
            names.push(next.clone());
        }
        prev = here;
        here = next;
    }
    // sides, and apothems splitting the polygon into 2n copies of the triangle
    for j in 0..n as usize {
        let (a, c) = (&names[j], &names[(j + 1) % n as usize]);
        let side = name(format!("side{j}"));
        b.step(Op::Segment, &[a, c, &side], None);
        let mid = name(format!("mid{j}"));
        b.step(Op::BisectSegment, &[a, c, &mid], None);
        b.step(Op::Segment, &[&tri.o, &mid, &name(format!("apothem{j}"))], None);
        b.check(Predicate::Angle, vec![mid.as_str().into(), tri.o.as_str().into(), a.as_str().into(), FRAC_PI_2.into()], TOL);
    }
    b.check(Predicate::Distance, vec![name("closure".into()).as_str().into(), names[0].as_str().into(), 0.0.into()], TOL);
    let nn = n as usize;
    for j in 0..nn {
        let (before, at, after) = (&names[(j + nn - 1) % nn], &names[j], &names[(j + 1) % nn]);
        b.check(Predicate::Angle, vec![at.as_str().into(), before.as_str().into(), after.as_str().into(), v.into()], TOL);
        b.check(
            Predicate::EqualDistance,
            vec![at.as_str().into(), after.as_str().into(), names[0].as_str().into(), names[1].as_str().into()],
            TOL,
        );
    }
    let defect = (n as f64 - 2.0) * PI - n as f64 * v;
    let mut area: Vec<Arg> = names.iter().map(|s| s.as_str().into()).collect();
    area.push(defect.into());
    b.check(Predicate::PolygonArea, area, AREA_TOL);
    if let Some(s) = circle_radius {
        let mut vs: Vec<Arg> = names.iter().map(|s| s.as_str().into()).collect();
        vs.push(s.into());
        b.check(Predicate::PolygonAreaVsCircle, vs, AREA_TOL);
    }
    names
}

fn validate_polygon(n: u32, v_over_pi: Rational) -> Result<(), ConstructError> {
    if n < 3 {
        return Err(invalid(format!("a polygon needs at least 3 sides, got {n}")));
    }
    if !gauss_constructible(n as i64) {
        return Err(invalid(format!(
            "the central angle 2pi/{n} is not constructible: {n} = {}",
            format_factors(n as i64)
        )));
    }
    let max = Rational::new(n as i64 - 2, n as i64);
    if !(v_over_pi > Rational::from_integer(0) && v_over_pi < max) {
        return Err(invalid(format!("interior angle pi*{v_over_pi} is outside (0, pi*{max})")));
    }
    if !gauss_constructible(*(v_over_pi / Rational::from_integer(2)).denom()) {
        return Err(invalid(format!("interior angle pi*{v_over_pi} is not constructible")));
    }
    Ok(())
}

pub fn regular_polygon_script(n: u32, v_over_pi: Rational) -> Result<Script, ConstructError> {
    validate_polygon(n, v_over_pi)?;
    let mut b = ScriptBuilder::new(&format!("regular_{n}_gon"));
    regular_polygon_steps(&mut b, n, v_over_pi, None, "");
    Ok(b.finish())
}

/// The regular `n`-gon with interior angle `pi * v_over_pi`; the value lists its vertices.
pub fn construct_regular_polygon(n: u32, v_over_pi: Rational) -> Result<Built<Vec<DiskPoint<f64>>>, ConstructError> {
    let script = regular_polygon_script(n, v_over_pi)?;
    let run = execute(&script)?;
    let mut value = vec![run.state.point("P0").unwrap(), run.state.point("V").unwrap()];
    value.extend((2..n).map(|j| run.state.point(&format!("P{j}")).unwrap()));
    Ok(Built { run, value })
}

/// The full quadrature for `tan^2 z = q`: the angle `z` from the circle's
/// radius, and the planned regular polygon checked against the circle's area.
pub fn quadrature_script(q: Rational) -> Result<Script, ConstructError> {
    let plan = crate::planner::plan(q).map_err(|e| invalid(e.to_string()))?;
    let s = crate::planner::quadrature_radius::<f64>(q, Curvature::unit()).map_err(|e| invalid(e.to_string()))?;
    let n = u32::try_from(plan.n).map_err(|_| invalid("side count overflows"))?;
    validate_polygon(n, plan.v_over_pi)?;
    let mut b = ScriptBuilder::new(&format!("quadrature_{}", q).replace('/', "_"));
    let (_, _, _, s_name) = quadrature_angle_steps(&mut b, s.value(), "q_");
    regular_polygon_steps(&mut b, n, plan.v_over_pi, Some(&s_name), "");
    Ok(b.finish())
}

/// The parallelism segment of the right triangle's auxiliary leg, in closed
/// form, for callers that want to compare.
pub fn expected_leg(alpha: f64, beta: f64) -> f64 {
    let k = Curvature::unit();
    let seg = |x: f64| parallelism_segment(Angle::new(x).unwrap(), k).unwrap().value();
    (seg(beta).cosh() / seg(FRAC_PI_2 - alpha).cosh()).acosh()
}
