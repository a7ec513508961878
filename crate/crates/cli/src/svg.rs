//! Renders a construction state as SVG. The closed unit disk fills a
//! 1000 x 1000 viewport; styling is fixed so output is byte-stable.
//!
//! Only `circle`, `path` (arcs), `line` and `text` elements are emitted, and
//! each object's element carries the object's name as its `id`.

use std::fmt::Write as _;

use hypergeo::construct::{ConstructionState, LineObject, Object};
use hypergeo::disk::{Cline, Curve, GeodesicShape};
use hypergeo::CurveObject;
use num_complex::Complex64;

pub const SIZE: f64 = 1000.0;
const CENTER: f64 = SIZE / 2.0;
const SCALE: f64 = 480.0;

const BOUNDARY: &str = "black";
const GEODESIC: &str = "blue";
const HOROCYCLE: &str = "green";
const CIRCLE: &str = "red";
const EQUIDISTANT: &str = "orange";
const POINT: &str = "black";

fn screen(z: Complex64) -> (f64, f64) {
    (CENTER + SCALE * z.re, CENTER - SCALE * z.im)
}

fn f(x: f64) -> String {
    // avoid "-0.000"
    let s = format!("{x:.3}");
    if s == "-0.000" {
        "0.000".into()
    } else {
        s
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;").replace('\'', "&apos;")
}

/// The arc of the Euclidean circle `(center, radius)` from `a` to `b` through `m`.
fn arc(id: &str, color: &str, a: Complex64, b: Complex64, m: Complex64, center: Complex64, radius: f64) -> String {
    let (sa, sb, sm, sc) = (screen(a), screen(b), screen(m), screen(center));
    let cross = |o: (f64, f64), p: (f64, f64), q: (f64, f64)| (p.0 - o.0) * (q.1 - o.1) - (p.1 - o.1) * (q.0 - o.0);
    // the arc through m is the major one when m and the centre share a side of the chord
    let large = cross(sa, sb, sm) * cross(sa, sb, sc) > 0.0;
    // on screen (y down) a positive turn a -> m -> b is clockwise, sweep = 1
    let sweep = cross(sa, sm, sb) > 0.0;
    let r = f(SCALE * radius);
    format!(
        "<path id=\"{}\" d=\"M {} {} A {r} {r} 0 {} {} {} {}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"2\"/>\n",
        escape(id),
        f(sa.0),
        f(sa.1),
        large as u8,
        sweep as u8,
        f(sb.0),
        f(sb.1)
    )
}

fn segment(id: &str, color: &str, a: Complex64, b: Complex64) -> String {
    let (sa, sb) = (screen(a), screen(b));
    format!(
        "<line id=\"{}\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{color}\" stroke-width=\"2\"/>\n",
        escape(id),
        f(sa.0),
        f(sa.1),
        f(sb.0),
        f(sb.1)
    )
}

fn line_object(id: &str, l: &LineObject) -> String {
    let g = l.geodesic;
    let frame = g.frame();
    let back = frame.inverse();
    let coordinate = |p: Option<hypergeo::DiskPoint>, ideal: f64| p.map_or(ideal, |p| frame.apply(p.z()).re);
    let (ta, tb) = (coordinate(l.from, -1.0), coordinate(l.to, 1.0));
    let a = l.from.map_or(g.start().z(), |p| p.z());
    let b = l.to.map_or(g.end().z(), |p| p.z());
    match g.shape() {
        GeodesicShape::Diameter { .. } => segment(id, GEODESIC, a, b),
        GeodesicShape::Arc { center, radius } => {
            let m = back.apply(Complex64::new((ta + tb) / 2.0, 0.0));
            arc(id, GEODESIC, a, b, m, center, radius)
        }
    }
}

fn curve_object(id: &str, c: &CurveObject) -> String {
    let color = match c.kind() {
        Curve::Circle { .. } => CIRCLE,
        Curve::Horocycle { .. } => HOROCYCLE,
        Curve::Equidistant { .. } => EQUIDISTANT,
    };
    match (c.kind(), c.realization()) {
        (Curve::Equidistant { base, offset }, cline) => {
            let (a, b) = (base.start().z(), base.end().z());
            match cline {
                Cline::Circle { center, radius } => {
                    let m = base.frame().inverse().apply(Complex64::new(0.0, (offset / 2.0).tanh()));
                    arc(id, color, a, b, m, center, radius)
                }
                Cline::Line { .. } => segment(id, color, a, b),
            }
        }
        (_, Cline::Circle { center, radius }) => {
            let (x, y) = screen(center);
            format!(
                "<circle id=\"{}\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"2\"/>\n",
                escape(id),
                f(x),
                f(y),
                f(SCALE * radius)
            )
        }
        // circles and horocycles are never straight
        (_, Cline::Line { .. }) => String::new(),
    }
}

fn marker(id: &str, z: Complex64, fill: &str) -> String {
    let (x, y) = screen(z);
    let mut s = format!(
        "<circle id=\"{}\" cx=\"{}\" cy=\"{}\" r=\"4\" fill=\"{fill}\" stroke=\"{POINT}\" stroke-width=\"1\"/>\n",
        escape(id),
        f(x),
        f(y)
    );
    let _ = writeln!(
        s,
        "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"14\" fill=\"{POINT}\">{}</text>",
        f(x + 6.0),
        f(y - 6.0),
        escape(id)
    );
    s
}

/// The whole scene: boundary, then lines, curves and points in creation order.
pub fn render(state: &ConstructionState) -> String {
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{SIZE}\" height=\"{SIZE}\" viewBox=\"0 0 {SIZE} {SIZE}\">"
    );
    let _ = writeln!(
        out,
        "<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"none\" stroke=\"{BOUNDARY}\" stroke-width=\"2\"/>",
        f(CENTER),
        f(CENTER),
        f(SCALE)
    );
    for (name, obj) in state.objects() {
        if let Object::Line(l) = obj {
            out.push_str(&line_object(name, l));
        }
    }
    for (name, obj) in state.objects() {
        if let Object::Curve(c) = obj {
            out.push_str(&curve_object(name, c));
        }
    }
    for (name, obj) in state.objects() {
        match obj {
            Object::Point(p) => out.push_str(&marker(name, p.z(), POINT)),
            Object::Ideal(p) => out.push_str(&marker(name, p.z(), "white")),
            _ => {}
        }
    }
    out.push_str("</svg>\n");
    out
}
