use std::f64::consts::PI;

use num_complex::Complex;

use crate::disk::{self, Anchor, CurveObject, DiskPoint, Figure, Geodesic, IdealPoint, Isometry};
use crate::trig::{angle_of_parallelism, circle_area, Curvature, Length};

use super::script::{parse_angle, Arg, Assertion, Op, ParamKind, Predicate, Script, Selector, Step};
use super::state::{ConstructionState, LineObject, Object};
use super::ConstructError;

/// Outcome of one checked assertion.
#[derive(Debug, Clone, PartialEq)]
pub struct AssertionResult {
    pub predicate: Predicate,
    pub args: String,
    pub expected: f64,
    pub measured: f64,
    pub residual: f64,
    pub tol: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Report {
    pub results: Vec<AssertionResult>,
    /// `(param, certificate)` for every numerically placed given.
    pub certificates: Vec<(String, String)>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(|r| r.pass)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Run {
    pub state: ConstructionState,
    pub report: Report,
}

/// Executes `script` on top of `seed`. Givens already present in the seed take
/// precedence over the values written in the script.
pub fn run(script: &Script, seed: ConstructionState) -> Result<Run, ConstructError> {
    let mut state = seed;
    let mut report = Report::default();
    for param in &script.params {
        if let Some(existing) = state.get(&param.name) {
            if !kind_matches(param.kind, existing) {
                return Err(ConstructError::Param {
                    name: param.name.clone(),
                    message: format!("seed holds a {} but the script declares {:?}", existing.kind(), param.kind),
                });
            }
        } else {
            let object = given(param.kind, &param.value).map_err(|message| ConstructError::Param {
                name: param.name.clone(),
                message,
            })?;
            state.insert(&param.name, object);
        }
        if let Some(c) = &param.certificate {
            report.certificates.push((param.name.clone(), c.clone()));
        }
    }
    for (index, step) in script.steps.iter().enumerate() {
        let fail = |message: String| ConstructError::Step { index, op: step.op, message };
        let made = execute(&state, step).map_err(fail)?;
        for (name, object) in made {
            if !state.insert(&name, object) {
                return Err(ConstructError::NameCollision { index, name });
            }
        }
        state.record(step.clone());
    }
    for a in &script.asserts {
        report.results.push(check(&state, a).map_err(|message| ConstructError::Assertion {
            predicate: a.predicate,
            message,
        })?);
    }
    Ok(Run { state, report })
}

fn kind_matches(kind: ParamKind, object: &Object) -> bool {
    matches!(
        (kind, object),
        (ParamKind::Point | ParamKind::PointPolar, Object::Point(_))
            | (ParamKind::Ideal, Object::Ideal(_))
            | (ParamKind::Length | ParamKind::Angle, Object::Scalar(_))
    )
}

fn number(v: &serde_json::Value) -> Option<f64> {
    match v {
        serde_json::Value::Number(n) => n.as_f64(),
        serde_json::Value::String(s) => parse_angle(s),
        _ => None,
    }
}

fn pair(v: &serde_json::Value) -> Option<(f64, f64)> {
    let a = v.as_array()?;
    (a.len() == 2).then(|| Some((number(&a[0])?, number(&a[1])?)))?
}

fn given(kind: ParamKind, value: &serde_json::Value) -> Result<Object, String> {
    let bad = || format!("value {value} does not describe a {kind:?}");
    let geo = |e: crate::GeometryError| e.to_string();
    Ok(match kind {
        ParamKind::Point => {
            let (u, v) = pair(value).ok_or_else(bad)?;
            Object::Point(DiskPoint::new(u, v).map_err(geo)?)
        }
        ParamKind::PointPolar => {
            let (r, theta) = pair(value).ok_or_else(bad)?;
            Object::Point(DiskPoint::polar(r, theta).map_err(geo)?)
        }
        ParamKind::Ideal => Object::Ideal(IdealPoint::new(number(value).ok_or_else(bad)?).map_err(geo)?),
        ParamKind::Length | ParamKind::Angle => {
            let x = number(value).ok_or_else(bad)?;
            if !x.is_finite() {
                return Err(bad());
            }
            Object::Scalar(x)
        }
    })
}

type Made = Vec<(String, Object)>;

struct Ctx<'a> {
    state: &'a ConstructionState,
}

impl Ctx<'_> {
    fn object(&self, name: &str) -> Result<&Object, String> {
        self.state.get(name).ok_or_else(|| format!("unknown object '{name}'"))
    }

    fn point(&self, name: &str) -> Result<DiskPoint<f64>, String> {
        match self.object(name)? {
            Object::Point(p) => Ok(*p),
            other => Err(format!("'{name}' is a {}, expected a point", other.kind())),
        }
    }

    fn anchor(&self, name: &str) -> Result<Anchor<f64>, String> {
        let o = self.object(name)?;
        o.anchor().ok_or_else(|| format!("'{name}' is a {}, expected a point", o.kind()))
    }

    fn line(&self, name: &str) -> Result<LineObject, String> {
        match self.object(name)? {
            Object::Line(l) => Ok(*l),
            other => Err(format!("'{name}' is a {}, expected a line", other.kind())),
        }
    }

    fn ideal(&self, name: &str) -> Result<IdealPoint<f64>, String> {
        match self.object(name)? {
            Object::Ideal(p) => Ok(*p),
            other => Err(format!("'{name}' is a {}, expected an ideal point", other.kind())),
        }
    }

    fn scalar(&self, name: &str) -> Result<f64, String> {
        match self.object(name)? {
            Object::Scalar(x) => Ok(*x),
            other => Err(format!("'{name}' is a {}, expected a length or angle", other.kind())),
        }
    }

    fn value(&self, arg: &Arg) -> Result<f64, String> {
        match arg {
            Arg::Number(x) => Ok(*x),
            Arg::Name(n) => self.scalar(n),
        }
    }
}

fn arity(step: &Step, allowed: &[usize]) -> Result<(), String> {
    if allowed.contains(&step.args.len()) {
        Ok(())
    } else {
        Err(format!("expected {allowed:?} arguments, got {}", step.args.len()))
    }
}

fn err(e: crate::GeometryError) -> String {
    e.to_string()
}

/// Signed position of an anchor relative to an oriented line: positive on the left.
fn side_of(g: &Geodesic<f64>, a: &Anchor<f64>) -> f64 {
    g.frame().apply(a.z()).im
}

fn select(points: Vec<DiskPoint<f64>>, selector: Option<Selector>) -> Result<DiskPoint<f64>, String> {
    let n = points.len();
    let pick = |i: usize| points.get(i).copied();
    match (selector, n) {
        (_, 0) => Err("the figures do not meet inside the disk".into()),
        (None | Some(Selector::Only), 1) => Ok(points[0]),
        (None, _) => Err(format!("{n} intersection points; a selector is required")),
        (Some(Selector::Only), _) => Err(format!("selector 'only' but {n} intersection points")),
        (Some(Selector::First), _) => Ok(points[0]),
        (Some(Selector::Second), _) => pick(1).ok_or_else(|| "selector 'second' but only one intersection point".into()),
        (Some(s), _) => Err(format!("selector {s:?} does not apply to intersections")),
    }
}

fn execute(state: &ConstructionState, step: &Step) -> Result<Made, String> {
    let cx = Ctx { state };
    let a = &step.args;
    let out = |i: usize| a[i].clone();
    match step.op {
        Op::Line | Op::Ray | Op::Segment => {
            arity(step, &[3])?;
            let (p, q) = (cx.anchor(&a[0])?, cx.anchor(&a[1])?);
            let g = Geodesic::through(p, q).map_err(err)?;
            let interior = |x: Anchor<f64>| match x {
                Anchor::Interior(p) => Some(p),
                Anchor::Ideal(_) => None,
            };
            let object = match step.op {
                Op::Line => LineObject::line(g),
                Op::Ray => LineObject { geodesic: g, from: interior(p), to: None },
                _ => LineObject { geodesic: g, from: interior(p), to: interior(q) },
            };
            Ok(vec![(out(2), Object::Line(object))])
        }
        Op::CircleCenterThrough => {
            arity(step, &[3])?;
            let c = CurveObject::circle_through(cx.point(&a[0])?, &cx.point(&a[1])?).map_err(err)?;
            Ok(vec![(out(2), Object::Curve(c))])
        }
        Op::CircleCenterRadius => {
            arity(step, &[3, 4])?;
            let center = cx.point(&a[0])?;
            let radius = if a.len() == 4 {
                disk::dist(&cx.point(&a[1])?, &cx.point(&a[2])?).map_err(err)?
            } else {
                cx.scalar(&a[1])?
            };
            let c = CurveObject::circle(center, radius).map_err(err)?;
            Ok(vec![(out(a.len() - 1), Object::Curve(c))])
        }
        Op::Intersect => {
            arity(step, &[3])?;
            let (oa, ob) = (cx.object(&a[0])?, cx.object(&a[1])?);
            let fa = oa.figure().ok_or_else(|| format!("'{}' is not a line or curve", a[0]))?;
            let fb = ob.figure().ok_or_else(|| format!("'{}' is not a line or curve", a[1]))?;
            let mut pts = disk::intersect(&fa, &fb).map_err(err)?;
            for o in [oa, ob] {
                if let Object::Line(l) = o {
                    pts.retain(|p| l.admits(p));
                }
            }
            Ok(vec![(out(2), Object::Point(select(pts, step.selector)?))])
        }
        Op::PerpendicularDrop => {
            arity(step, &[4])?;
            let p = cx.point(&a[0])?;
            let line = cx.line(&a[1])?;
            if line.geodesic.contains(&p, 1e-12) {
                return Err(format!("'{}' lies on '{}'; erect the perpendicular instead", a[0], a[1]));
            }
            let perp = disk::perpendicular(&p, &line.geodesic);
            Ok(vec![(out(2), Object::Line(LineObject::line(perp.line))), (out(3), Object::Point(perp.foot))])
        }
        Op::PerpendicularErect => {
            arity(step, &[3])?;
            let p = cx.point(&a[0])?;
            let line = cx.line(&a[1])?;
            if !line.geodesic.contains(&p, 1e-9) {
                return Err(format!("'{}' is not on '{}'", a[0], a[1]));
            }
            let erected = disk::erect_perpendicular(&p, &line.geodesic);
            Ok(vec![(out(2), Object::Line(LineObject::line(erected)))])
        }
        Op::BisectSegment => {
            arity(step, &[3, 4])?;
            let (p, q) = (cx.point(&a[0])?, cx.point(&a[1])?);
            let g = Geodesic::through(p.into(), q.into()).map_err(err)?;
            let d = disk::dist(&p, &q).map_err(err)?;
            let mid = Isometry::translation_along(&g, d / 2.0).apply_point(&p);
            let mut made = vec![(out(2), Object::Point(mid))];
            if a.len() == 4 {
                let bisector = disk::perpendicular(&mid, &g).line;
                made.push((out(3), Object::Line(LineObject::line(bisector))));
            }
            Ok(made)
        }
        Op::BisectAngle => {
            arity(step, &[4])?;
            let p = cx.point(&a[0])?;
            let (q, r) = (cx.anchor(&a[1])?, cx.anchor(&a[2])?);
            let t = Isometry::to_origin(&p);
            let (wq, wr) = (t.apply(q.z()), t.apply(r.z()));
            if wq.norm() < 1e-12 || wr.norm() < 1e-12 {
                return Err("angle ray of zero length".into());
            }
            let (uq, ur) = (wq / wq.norm(), wr / wr.norm());
            let s = uq + ur;
            let dir = if s.norm() < 1e-12 { uq * Complex::i() } else { s / s.norm() };
            let toward = t.inverse().apply_ideal(&ideal_at(dir));
            let g = Geodesic::through(p.into(), toward.into()).map_err(err)?;
            Ok(vec![(out(3), Object::Line(LineObject::ray(p, g)))])
        }
        Op::TransferAngle => {
            arity(step, &[5, 7])?;
            let (angle, rest) = if a.len() == 7 {
                let vertex = cx.point(&a[0])?;
                let m = disk::measure_angle(&vertex, &cx.anchor(&a[1])?, &cx.anchor(&a[2])?).map_err(err)?;
                (m, &a[3..])
            } else {
                (cx.scalar(&a[0])?, &a[1..])
            };
            let v = cx.point(&rest[0])?;
            let w = cx.anchor(&rest[1])?;
            let base = Geodesic::through(v.into(), w).map_err(err)?;
            let sign = match rest[2].as_str() {
                "left" => 1.0,
                "right" => -1.0,
                name => {
                    let s = side_of(&base, &cx.anchor(name)?);
                    if s.abs() < 1e-12 {
                        return Err(format!("'{name}' lies on the line through '{}' and '{}'", rest[0], rest[1]));
                    }
                    s.signum()
                }
            };
            let turned = Isometry::rotation(&v, sign * angle).apply_ideal(&base.end());
            let g = Geodesic::through(v.into(), turned.into()).map_err(err)?;
            Ok(vec![(rest[3].clone(), Object::Line(LineObject::ray(v, g)))])
        }
        Op::MarkIdeal => {
            arity(step, &[2, 4])?;
            let g = cx.line(&a[0])?.geodesic;
            if a.len() == 2 {
                let end = match step.selector {
                    None | Some(Selector::End) => g.end(),
                    Some(Selector::Start) => g.start(),
                    Some(s) => return Err(format!("selector {s:?} does not pick an end")),
                };
                return Ok(vec![(out(1), Object::Ideal(end))]);
            }
            let reference = cx.line(&a[1])?.geodesic;
            let wanted = side_of(&reference, &cx.anchor(&a[2])?);
            let (s0, s1) = (side_of(&reference, &g.start().into()), side_of(&reference, &g.end().into()));
            if wanted.abs() < 1e-12 || (s0.signum() == s1.signum()) {
                return Err("the line does not separate its ends by the reference line".into());
            }
            let end = if s1.signum() == wanted.signum() { g.end() } else { g.start() };
            Ok(vec![(out(3), Object::Ideal(end))])
        }
        Op::CorrespondingPoint => {
            arity(step, &[4])?;
            let b = cx.point(&a[0])?;
            let line = cx.line(&a[1])?.geodesic;
            let omega = cx.ideal(&a[2])?;
            let f = disk::corresponding_point(&b, &line, &omega).map_err(err)?;
            Ok(vec![(out(3), Object::Point(f))])
        }
    }
}

fn ideal_at(dir: Complex<f64>) -> IdealPoint<f64> {
    IdealPoint::new(dir.im.atan2(dir.re)).expect("finite direction")
}

fn unit() -> Curvature<f64> {
    Curvature::unit()
}

fn defect(cx: &Ctx, names: &[Arg]) -> Result<f64, String> {
    let n = names.len();
    if n < 3 {
        return Err("a polygon needs at least three vertices".into());
    }
    let pts = names
        .iter()
        .map(|x| match x {
            Arg::Name(s) => cx.point(s),
            Arg::Number(_) => Err("polygon vertices must be named points".into()),
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut sum = 0.0;
    for i in 0..n {
        let (prev, here, next) = (pts[(i + n - 1) % n], pts[i], pts[(i + 1) % n]);
        sum += disk::measure_angle(&here, &prev.into(), &next.into()).map_err(err)?;
    }
    Ok((n as f64 - 2.0) * PI - sum)
}

fn check(state: &ConstructionState, a: &Assertion) -> Result<AssertionResult, String> {
    let cx = Ctx { state };
    let args = &a.args;
    let name = |i: usize| match &args[i] {
        Arg::Name(s) => Ok(s.as_str()),
        Arg::Number(x) => Err(format!("expected an object name, got {x}")),
    };
    let need = |n: usize| {
        if args.len() == n {
            Ok(())
        } else {
            Err(format!("{:?} takes {n} arguments, got {}", a.predicate, args.len()))
        }
    };
    let dist = |i: usize, j: usize| -> Result<f64, String> {
        disk::dist(&cx.point(name(i)?)?, &cx.point(name(j)?)?).map_err(err)
    };
    let angle = |i: usize| -> Result<f64, String> {
        disk::measure_angle(&cx.point(name(i)?)?, &cx.anchor(name(i + 1)?)?, &cx.anchor(name(i + 2)?)?).map_err(err)
    };
    let parallelism = |d: f64| -> Result<f64, String> {
        Ok(angle_of_parallelism(Length::new(d).map_err(err)?, unit()).map_err(err)?.radians())
    };
    let circle = |s: f64| -> Result<f64, String> { Ok(circle_area(Length::new(s).map_err(err)?, unit()).map_err(err)?.value()) };
    let mut relative = false;
    let (expected, measured) = match a.predicate {
        Predicate::Distance => {
            need(3)?;
            (cx.value(&args[2])?, dist(0, 1)?)
        }
        Predicate::EqualDistance => {
            need(4)?;
            (dist(2, 3)?, dist(0, 1)?)
        }
        Predicate::Angle => {
            need(4)?;
            (cx.value(&args[3])?, angle(0)?)
        }
        Predicate::ParallelismAngle => {
            need(5)?;
            (parallelism(dist(3, 4)?)?, angle(0)?)
        }
        Predicate::Parallelism => {
            need(3)?;
            (cx.value(&args[2])?, parallelism(dist(0, 1)?)?)
        }
        Predicate::SameIdeal => {
            need(2)?;
            let (x, y) = (cx.ideal(name(0)?)?, cx.ideal(name(1)?)?);
            (0.0, x.separation(&y))
        }
        Predicate::OnLine => {
            need(2)?;
            let g = cx.line(name(1)?)?.geodesic;
            (0.0, g.signed_distance(&cx.point(name(0)?)?).abs())
        }
        Predicate::Concurrent => {
            need(3)?;
            let l = |i: usize| -> Result<Figure<f64>, String> { Ok(Figure::Line(cx.line(name(i)?)?.geodesic)) };
            let meet = disk::intersect(&l(0)?, &l(1)?).map_err(err)?;
            let p = meet.first().ok_or("the first two lines do not meet")?;
            (0.0, cx.line(name(2)?)?.geodesic.signed_distance(p).abs())
        }
        Predicate::PolygonArea => {
            let (last, verts) = args.split_last().ok_or("missing arguments")?;
            (cx.value(last)?, defect(&cx, verts)?)
        }
        Predicate::QuadratureAngle => {
            need(4)?;
            relative = true;
            let z = angle(0)?;
            (circle(cx.value(&args[3])?)?, PI * z.tan().powi(2))
        }
        Predicate::PolygonAreaVsCircle => {
            let (last, verts) = args.split_last().ok_or("missing arguments")?;
            relative = true;
            (circle(cx.value(last)?)?, defect(&cx, verts)?)
        }
    };
    let mut residual = (measured - expected).abs();
    if relative {
        residual /= expected.abs().max(f64::MIN_POSITIVE);
    }
    Ok(AssertionResult {
        predicate: a.predicate,
        args: args.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","),
        expected,
        measured,
        residual,
        tol: a.tol,
        pass: residual <= a.tol,
    })
}
